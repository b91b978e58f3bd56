//! Output records and renderers behind the `scf` binary.
//!
//! Every report is built from an [`OutputRecord`], which serializes to JSON
//! Lines and to CSV with the same content. The human-readable forms are
//! rendered from the core certificate directly.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{BufRead, Read, Write};

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use scf_core::arith::MAX_ABS_N;
use scf_core::eisenstein::EisensteinInteger;
use scf_core::profile::{profile, Case, FieldProfile};
use scf_core::scan::{certify_n, ScanEntry};
use scf_core::verify::same_galois_module;
use scf_core::{FieldElement, GeneratorCertificate};

/// One row of output. Field order is the serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: i64,
    pub delta: u64,
    pub d: u64,
    pub e: u64,
    pub c: u64,
    pub case: Case,
    pub conductor: u64,
    pub disc: u128,
    pub branch_moduli: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a0: Option<i128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a1: Option<i128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<i8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i128>,
    /// Coefficients of `1, ρ, ρ′`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_numerator: Option<[i128; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_denominator: Option<i128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<BTreeMap<String, bool>>,
}

impl OutputRecord {
    /// Profile fields only.
    pub fn from_profile(p: &FieldProfile) -> Self {
        Self {
            n: p.n,
            delta: p.delta(),
            d: p.d(),
            e: p.e(),
            c: p.c(),
            case: p.case,
            conductor: p.conductor,
            disc: p.field_disc,
            branch_moduli: p.branch_moduli.clone(),
            a0: None,
            a1: None,
            epsilon: None,
            m: None,
            alpha_numerator: None,
            alpha_denominator: None,
            checks: None,
        }
    }

    pub fn from_certificate(cert: &GeneratorCertificate) -> Result<Self, String> {
        let (nums, den) = cert.alpha.integer_form();
        let small = |x: &num_bigint::BigInt| {
            x.to_i128()
                .ok_or_else(|| format!("n = {}: coefficient {x} exceeds 128 bits", cert.n()))
        };
        let alpha_numerator = [small(&nums[0])?, small(&nums[1])?, small(&nums[2])?];
        Ok(Self {
            a0: Some(cert.a0),
            a1: Some(cert.a1),
            epsilon: cert.epsilon,
            m: cert.m,
            alpha_numerator: Some(alpha_numerator),
            alpha_denominator: Some(small(&den)?),
            checks: Some(
                cert.checks
                    .iter()
                    .map(|c| (c.name.clone(), c.passed))
                    .collect(),
            ),
            ..Self::from_profile(&cert.profile)
        })
    }

    pub fn passed(&self) -> bool {
        self.checks
            .as_ref()
            .is_some_and(|c| !c.is_empty() && c.values().all(|&ok| ok))
    }
}

pub const CSV_HEADER: [&str; 16] = [
    "n",
    "delta",
    "d",
    "e",
    "c",
    "case",
    "conductor",
    "disc",
    "branch_moduli",
    "a0",
    "a1",
    "epsilon",
    "m",
    "alpha_numerator",
    "alpha_denominator",
    "checks",
];

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(String::new, ToString::to_string)
}

fn csv_fields(r: &OutputRecord) -> [String; 16] {
    [
        r.n.to_string(),
        r.delta.to_string(),
        r.d.to_string(),
        r.e.to_string(),
        r.c.to_string(),
        r.case.to_string(),
        r.conductor.to_string(),
        r.disc.to_string(),
        join(&r.branch_moduli),
        opt(&r.a0),
        opt(&r.a1),
        opt(&r.epsilon),
        opt(&r.m),
        r.alpha_numerator.as_ref().map_or_else(String::new, |a| join(a)),
        opt(&r.alpha_denominator),
        r.checks.as_ref().map_or_else(String::new, |c| {
            c.iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(";")
        }),
    ]
}

fn parse_field<T: std::str::FromStr>(name: &str, s: &str) -> Result<T, String>
where
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e| format!("field {name}: {e} in {s:?}"))
}

fn parse_opt<T: std::str::FromStr>(name: &str, s: &str) -> Result<Option<T>, String>
where
    T::Err: std::fmt::Display,
{
    if s.is_empty() {
        Ok(None)
    } else {
        parse_field(name, s).map(Some)
    }
}

fn parse_list<T: std::str::FromStr>(name: &str, s: &str) -> Result<Vec<T>, String>
where
    T::Err: std::fmt::Display,
{
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(|x| parse_field(name, x)).collect()
}

fn record_from_csv(row: &csv::StringRecord) -> Result<OutputRecord, String> {
    if row.len() != CSV_HEADER.len() {
        return Err(format!("expected {} fields, got {}", CSV_HEADER.len(), row.len()));
    }
    let f = |i: usize| &row[i];
    let alpha_numerator = match f(13) {
        "" => None,
        s => {
            let v: Vec<i128> = parse_list("alpha_numerator", s)?;
            Some(<[i128; 3]>::try_from(v).map_err(|v| format!("alpha_numerator has {} entries", v.len()))?)
        }
    };
    let checks = match f(15) {
        "" => None,
        s => Some(
            s.split(';')
                .map(|kv| {
                    let (k, v) = kv.split_once('=').ok_or_else(|| format!("bad check {kv:?}"))?;
                    Ok((k.to_string(), parse_field::<bool>("checks", v)?))
                })
                .collect::<Result<_, String>>()?,
        ),
    };
    Ok(OutputRecord {
        n: parse_field("n", f(0))?,
        delta: parse_field("delta", f(1))?,
        d: parse_field("d", f(2))?,
        e: parse_field("e", f(3))?,
        c: parse_field("c", f(4))?,
        case: parse_field("case", f(5))?,
        conductor: parse_field("conductor", f(6))?,
        disc: parse_field("disc", f(7))?,
        branch_moduli: parse_list("branch_moduli", f(8))?,
        a0: parse_opt("a0", f(9))?,
        a1: parse_opt("a1", f(10))?,
        epsilon: parse_opt("epsilon", f(11))?,
        m: parse_opt("m", f(12))?,
        alpha_numerator,
        alpha_denominator: parse_opt("alpha_denominator", f(14))?,
        checks,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

pub fn write_json_lines<W: Write>(out: &mut W, records: &[OutputRecord]) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut *out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn write_csv<W: Write>(out: W, records: &[OutputRecord]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record(csv_fields(r))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_json_lines<R: BufRead>(input: R) -> Result<Vec<OutputRecord>, String> {
    input
        .lines()
        .filter(|l| !matches!(l, Ok(s) if s.trim().is_empty()))
        .map(|line| {
            let line = line.map_err(|e| e.to_string())?;
            serde_json::from_str(&line).map_err(|e| e.to_string())
        })
        .collect()
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<OutputRecord>, String> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers().map_err(|e| e.to_string())?;
    if header.iter().ne(CSV_HEADER) {
        return Err(format!("unexpected header {header:?}"));
    }
    r.records()
        .map(|row| record_from_csv(&row.map_err(|e| e.to_string())?))
        .collect()
}

/// Parses `n`, rejecting values outside the supported range.
pub fn parse_n(s: &str) -> Result<i64, String> {
    let n: i64 = s.trim().parse().map_err(|e| format!("{s:?} is not an integer: {e}"))?;
    if n.abs() > MAX_ABS_N {
        return Err(format!("|n| must be at most {MAX_ABS_N}"));
    }
    Ok(n)
}

/// Parses an inclusive range `a..b`; either end may be negative.
pub fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("{s:?} is not a range of the form a..b"))?;
    let (a, b) = (parse_n(a)?, parse_n(b)?);
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

fn field_line(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key:<14}{value}");
}

fn join_display<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

pub fn render_profile(p: &FieldProfile) -> String {
    let mut out = String::new();
    field_line(&mut out, "n", p.n);
    field_line(&mut out, "delta", format!("{} = {}", p.delta(), p.decomposition.factorization));
    field_line(&mut out, "d, e, c", format!("{}, {}, {}", p.d(), p.e(), p.c()));
    field_line(&mut out, "case", p.case);
    field_line(&mut out, "conductor", p.conductor);
    field_line(&mut out, "disc", p.field_disc);
    field_line(&mut out, "branch moduli", join_display(&p.branch_moduli));
    out
}

pub fn render_certificate(cert: &GeneratorCertificate, with_checks: bool) -> String {
    let mut out = render_profile(&cert.profile);
    field_line(&mut out, "pair", format!("{} (a0 = {}, a1 = {})", cert.pair(), cert.a0, cert.a1));
    if let Some(eps) = cert.epsilon {
        field_line(&mut out, "epsilon", eps);
    }
    if let Some(m) = cert.m {
        field_line(&mut out, "m", m);
    }
    field_line(&mut out, "alpha", &cert.alpha);
    if with_checks {
        for check in &cert.checks {
            let mark = if check.passed { "pass" } else { "FAIL" };
            let _ = writeln!(out, "  [{mark}] {:<15}{}", check.name, check.witness);
        }
        let verdict = if cert.all_passed() { "verified" } else { "NOT verified" };
        field_line(&mut out, "result", verdict);
    }
    out
}

/// One line per `n`: `n  case  d  e  c  conductor  pair  α  status`.
pub fn render_table(entries: &[ScanEntry]) -> String {
    let mut out = format!(
        "{:>7}  {:<8}  {:>8}  {:>6}  {:>4}  {:>10}  {:<10}  {:<28}  {}\n",
        "n", "case", "d", "e", "c", "conductor", "pair", "alpha", "status"
    );
    for entry in entries {
        match &entry.outcome {
            Ok(cert) => {
                let p = &cert.profile;
                let status = if cert.all_passed() {
                    "ok".to_string()
                } else {
                    format!("FAILED {}", cert.failed_checks().join(","))
                };
                let _ = writeln!(
                    out,
                    "{:>7}  {:<8}  {:>8}  {:>6}  {:>4}  {:>10}  {:<10}  {:<28}  {}",
                    p.n,
                    p.case.label(),
                    p.d(),
                    p.e(),
                    p.c(),
                    p.conductor,
                    cert.pair().to_string(),
                    cert.alpha.to_string(),
                    status
                );
            }
            Err(err) => {
                let _ = writeln!(out, "{:>7}  error: {err}", entry.n);
            }
        }
    }
    out
}

/// Per-case counts for a set of scan entries.
pub fn render_counts(entries: &[ScanEntry]) -> String {
    let mut counts: BTreeMap<Case, (usize, usize)> = BTreeMap::new();
    for entry in entries {
        if let Ok(cert) = &entry.outcome {
            let slot = counts.entry(cert.profile.case).or_default();
            slot.0 += 1;
            slot.1 += usize::from(cert.all_passed());
        }
    }
    let passed = entries.iter().filter(|e| e.passed()).count();
    let mut out = format!("{} values, {passed} verified", entries.len());
    for (case, (total, ok)) in counts {
        let _ = write!(out, "; {case}: {ok}/{total}");
    }
    out.push('\n');
    out
}

/// A worked value as listed in the literature: `n`, the listed pair and the
/// expected generator.
struct ListedValue {
    n: i64,
    pair: EisensteinInteger,
    alpha: &'static str,
}

const LISTED: [ListedValue; 3] = [
    ListedValue { n: 237, pair: EisensteinInteger::new(4, -1), alpha: "(4ρ-ρ′-237)/21" },
    ListedValue { n: 54, pair: EisensteinInteger::new(2, -1), alpha: "(2ρ-ρ′-18)/49" },
    ListedValue { n: 90, pair: EisensteinInteger::new(3, 1), alpha: "(3ρ+ρ′-120)/7" },
];

fn listed_row(out: &mut String, item: &ListedValue) -> Result<bool, String> {
    let cert = certify_n(item.n).map_err(|e| e.to_string())?;
    let p = &cert.profile;
    let ok = cert.all_passed() && cert.alpha.to_string() == item.alpha;
    let _ = writeln!(
        out,
        "  n = {}: delta = {}, d = {}, e = {}, c = {}, conductor {}",
        p.n,
        p.decomposition.factorization,
        p.d(),
        p.e(),
        p.c(),
        p.conductor
    );
    let canonical = cert.pair();
    if canonical == item.pair {
        let _ = writeln!(out, "    pair {canonical}");
    } else {
        let unit = canonical
            .unit_relating(&item.pair)
            .map_or("none".to_string(), |u| u.to_string());
        let _ = writeln!(out, "    pair {canonical} (listed {}, listed = {unit}·canonical)", item.pair);
    }
    let verdict = if ok { "verified" } else { "MISMATCH" };
    let _ = writeln!(out, "    alpha = {}  [{verdict}]", cert.alpha);
    Ok(ok)
}

fn family_block(
    out: &mut String,
    ns: &[i64],
    expected_ec: (u64, u64),
    reference: impl Fn(i64) -> FieldElement,
    form: &str,
) -> Result<bool, String> {
    let mut ok = true;
    for &n in ns {
        let cert = certify_n(n).map_err(|e| e.to_string())?;
        let p = &cert.profile;
        ok &= cert.all_passed()
            && (p.e(), p.c()) == expected_ec
            && same_galois_module(&cert.alpha, &reference(n));
    }
    let list = ns.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let _ = writeln!(
        out,
        "  {} values with e = {}, c = {} and alpha ~ {form}  [{}]",
        ns.len(),
        expected_ec.0,
        expected_ec.1,
        if ok { "verified" } else { "MISMATCH" }
    );
    let _ = writeln!(out, "    {list}");
    Ok(ok)
}

/// The worked wild examples as a fixed text report. Returns the text and
/// whether every row matched.
pub fn examples_report() -> Result<(String, bool), String> {
    let mut out = String::new();
    let mut ok = true;

    let _ = writeln!(out, "wild-ii: n ≡ 3 (mod 9), n ≢ 12 (mod 27), 1 ≤ n ≤ 300");
    ok &= listed_row(&mut out, &LISTED[0])?;
    let ns: Vec<i64> = (1..=300)
        .filter(|&n| Case::of(n) == Case::WildII && n != 237)
        .collect();
    ok &= ns.len() == 22;
    ok &= family_block(
        &mut out,
        &ns,
        (1, 3),
        |n| FieldElement::from_integers(n, [0, 1, -1], 3),
        "(ρ-ρ′)/3",
    )?;

    let _ = writeln!(out);
    let _ = writeln!(out, "wild-iii: n ≡ 0, 6 (mod 9), 1 ≤ n ≤ 100");
    ok &= listed_row(&mut out, &LISTED[1])?;
    ok &= listed_row(&mut out, &LISTED[2])?;
    let ns: Vec<i64> = (1..=100)
        .filter(|&n| Case::of(n) == Case::WildIII && n != 54 && n != 90)
        .collect();
    ok &= ns.len() == 20;
    ok &= family_block(
        &mut out,
        &ns,
        (3, 1),
        |n| FieldElement::from_integers(n, [-(n as i128) / 3, 1, 0], 1),
        "ρ - n/3",
    )?;
    Ok((out, ok))
}

/// Profile record for `n`.
pub fn classify(n: i64) -> Result<(OutputRecord, FieldProfile), String> {
    let p = profile(n).map_err(|e| e.to_string())?;
    Ok((OutputRecord::from_profile(&p), p))
}

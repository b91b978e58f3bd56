//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_integer::Roots;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use scf_core::cubicfield::FieldElement;
use scf_core::eisenstein::{divisor_with_norm, EisensteinInteger};
use scf_core::generator::{a_n, alpha_for_pair, find_pair, hw_conditions_hold, pair_norm_target};
use scf_core::groupring::GroupRingElement;
use scf_core::profile::{profile, Case};
use scf_core::scan::{certify_n, scan_entries};
use scf_core::verify::{certify, same_galois_module};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })
}

fn wild_ii_family() -> Outcome {
    let start = Instant::now();
    let ns: Vec<i64> = (1..=300)
        .filter(|&n| Case::of(n) == Case::WildII && n != 237)
        .collect();
    ensure(ns.iter().all(|n| n % 9 == 3 && n % 27 != 12), || "case filter mismatch".into())?;
    ensure(ns.len() == 22, || format!("{} values, expected 22", ns.len()))?;
    for &n in &ns {
        let cert = certify_n(n).map_err(|e| format!("n={n}: {e}"))?;
        let p = &cert.profile;
        ensure((p.e(), p.c()) == (1, 3), || format!("n={n}: (e,c)=({},{})", p.e(), p.c()))?;
        let reference = FieldElement::from_integers(n, [0, 1, -1], 3);
        ensure(same_galois_module(&cert.alpha, &reference), || {
            format!("n={n}: Z[G]·{} differs from Z[G]·(ρ-ρ′)/3", cert.alpha)
        })?;
        ensure(cert.all_passed(), || format!("n={n}: failed {:?}", cert.failed_checks()))?;
    }
    within(start.elapsed(), Duration::from_secs(2))?;
    Ok(format!("22 values, e=1, c=3, Z[G]-span of (ρ-ρ′)/3, {:?}", start.elapsed()))
}

fn wild_ii_n237() -> Outcome {
    let cert = certify_n(237).map_err(|e| e.to_string())?;
    let p = &cert.profile;
    let fact = p.decomposition.factorization.to_string();
    ensure(fact == "3^3·7^2·43", || format!("Δ = {fact}"))?;
    ensure((p.e(), p.c()) == (7, 3), || format!("(e,c)=({},{})", p.e(), p.c()))?;
    ensure(cert.pair().is_associate(&EisensteinInteger::new(4, -1)), || {
        format!("pair {} not associate to 4-ζ", cert.pair())
    })?;
    let shown = cert.alpha.to_string();
    ensure(shown == "(4ρ-ρ′-237)/21", || format!("α = {shown}"))?;
    ensure(cert.all_passed(), || format!("failed {:?}", cert.failed_checks()))?;
    Ok(format!("Δ = {fact}, α = {shown}, {} checks pass", cert.checks.len()))
}

fn wild_iii_family() -> Outcome {
    let ns: Vec<i64> = (1..=100)
        .filter(|&n| matches!(n % 9, 0 | 6) && n != 54 && n != 90)
        .collect();
    ensure(ns.len() == 20, || format!("{} values, expected 20", ns.len()))?;
    for &n in &ns {
        let cert = certify_n(n).map_err(|e| format!("n={n}: {e}"))?;
        let p = &cert.profile;
        ensure(p.case == Case::WildIII, || format!("n={n}: case {}", p.case))?;
        ensure((p.e(), p.c()) == (3, 1), || format!("n={n}: (e,c)=({},{})", p.e(), p.c()))?;
        let expected = FieldElement::from_integers(n, [-(n as i128) / 3, 1, 0], 1);
        ensure(cert.alpha == expected, || format!("n={n}: α = {}", cert.alpha))?;
        ensure(cert.all_passed(), || format!("n={n}: failed {:?}", cert.failed_checks()))?;
    }
    Ok("20 values, e=3, c=1, α = ρ - n/3".into())
}

fn wild_iii_n54_n90() -> Outcome {
    let mut details = Vec::new();
    for (n, fact, e, c, form) in [
        (54, "3^2·7^3", 3, 7, "(2ρ-ρ′-18)/49"),
        (90, "3^2·7^2·19", 21, 1, "(3ρ+ρ′-120)/7"),
    ] {
        let cert = certify_n(n).map_err(|e| e.to_string())?;
        let p = &cert.profile;
        let got_fact = p.decomposition.factorization.to_string();
        ensure(got_fact == fact, || format!("n={n}: Δ = {got_fact}"))?;
        ensure((p.e(), p.c()) == (e, c), || format!("n={n}: (e,c)=({},{})", p.e(), p.c()))?;
        let shown = cert.alpha.to_string();
        ensure(shown == form, || format!("n={n}: α = {shown}"))?;
        ensure(cert.all_passed(), || format!("n={n}: failed {:?}", cert.failed_checks()))?;
        details.push(format!("n={n}: {shown}"));
    }
    Ok(details.join(", "))
}

fn full_range_soundness() -> Outcome {
    let start = Instant::now();
    let entries = scan_entries(-500, 500, 1).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let mut wild = 0;
    for entry in &entries {
        let cert = entry.outcome.as_ref().map_err(|e| format!("n={}: {e}", entry.n))?;
        ensure(cert.all_passed(), || format!("n={}: failed {:?}", entry.n, cert.failed_checks()))?;
        let expected = if cert.profile.case.is_wild() { 6 } else { 4 };
        ensure(cert.checks.len() == expected, || format!("n={}: {} checks", entry.n, cert.checks.len()))?;
        wild += usize::from(cert.profile.case.is_wild());
    }
    ensure(entries.len() == 1001, || format!("{} entries", entries.len()))?;
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("1001 values ({wild} wild) all pass, serial {elapsed:?}"))
}

fn lemma_conditions() -> Outcome {
    let mut count = 0;
    for n in (-500..=500).filter(|&n| Case::of(n).is_wild()) {
        let p = profile(n).map_err(|e| e.to_string())?;
        let ok = hw_conditions_hold(&p).map_err(|e| e.to_string())?;
        ensure(ok, || format!("n={n}: conditions fail"))?;
        count += 1;
    }
    Ok(format!("{count} wild values"))
}

fn random_group_ring(rng: &mut ChaCha8Rng) -> GroupRingElement {
    GroupRingElement::from_integers([0; 3].map(|_| rng.gen_range(-1000..=1000)))
}

fn random_eisenstein(rng: &mut ChaCha8Rng) -> EisensteinInteger {
    EisensteinInteger::new(rng.gen_range(-100_000..=100_000), rng.gen_range(-100_000..=100_000))
}

fn random_field_element(rng: &mut ChaCha8Rng, n: i64) -> FieldElement {
    let nums = [0; 3].map(|_| rng.gen_range(-500i128..=500));
    FieldElement::from_integers(n, nums, rng.gen_range(1i128..=30))
}

/// All `(a₀, a₁)` with `a₀² - a₀a₁ + a₁² = t` dividing `target`, found by
/// scanning `a₀` and solving the quadratic for `a₁`.
fn brute_force_divisors(target: &EisensteinInteger, t: u64) -> Vec<EisensteinInteger> {
    let t = t as i128;
    let bound = 2 * ((t / 3).sqrt() + 1);
    let mut out = Vec::new();
    for a0 in -bound..=bound {
        let disc = 4 * t - 3 * a0 * a0;
        if disc < 0 {
            continue;
        }
        let s = disc.sqrt();
        if s * s != disc {
            continue;
        }
        for root in [a0 + s, a0 - s] {
            if root % 2 != 0 {
                continue;
            }
            let w = EisensteinInteger::new(a0, root / 2);
            debug_assert_eq!(w.norm() as i128, t);
            if w.divides(target) && !out.contains(&w) {
                out.push(w);
            }
        }
    }
    out
}

fn property_suites() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5cf);

    for _ in 0..1000 {
        let (g, h) = (random_group_ring(&mut rng), random_group_ring(&mut rng));
        let (ng, nh) = (g.nu().unwrap(), h.nu().unwrap());
        ensure((&g * &h).nu().unwrap() == ng * nh, || format!("ν(gh) for {g}, {h}"))?;
        ensure((&g + &h).nu().unwrap() == ng + nh, || format!("ν(g+h) for {g}, {h}"))?;
    }

    for _ in 0..1000 {
        let (x, y) = (random_eisenstein(&mut rng), random_eisenstein(&mut rng));
        ensure((x * y).norm() == x.norm() * y.norm(), || format!("N({x}·{y})"))?;
    }

    let ns: Vec<i64> = (0..50).map(|_| rng.gen_range(-1000..=1000)).collect();
    for i in 0..1000 {
        let n = ns[i % ns.len()];
        let x = random_field_element(&mut rng, n);
        let y = random_field_element(&mut rng, n);
        ensure((&x * &y).sigma() == &x.sigma() * &y.sigma(), || format!("σ(xy), n={n}"))?;
        ensure((&x + &y).sigma() == &x.sigma() + &y.sigma(), || format!("σ(x+y), n={n}"))?;
        ensure(x.sigma_pow(1).sigma().sigma() == x, || format!("σ³, n={n}"))?;
    }

    for n in -100..=100 {
        let r = [
            FieldElement::rho(n),
            FieldElement::rho_prime(n),
            FieldElement::rho_double_prime(n),
        ];
        let e1 = &(&r[0] + &r[1]) + &r[2];
        let e2 = &(&(&r[0] * &r[1]) + &(&r[1] * &r[2])) + &(&r[2] * &r[0]);
        let e3 = &(&r[0] * &r[1]) * &r[2];
        ensure(e1 == FieldElement::from_int(n, n as i128), || format!("ρ+ρ′+ρ″, n={n}"))?;
        ensure(e2 == FieldElement::from_int(n, -(n as i128) - 3), || format!("e2, n={n}"))?;
        ensure(e3 == FieldElement::one(n), || format!("ρρ′ρ″, n={n}"))?;
        let cp = FieldElement::rho(n).char_poly();
        let want = [-(n as i128), -(n as i128) - 3, -1].map(|v| FieldElement::from_int(n, v).coords()[0].clone());
        ensure(cp == want, || format!("char poly of ρ, n={n}"))?;
    }

    let mut targets = 0;
    for n in -200..=200 {
        let p = profile(n).map_err(|e| e.to_string())?;
        let target = a_n(n);
        let t = pair_norm_target(&p);
        let oracle = brute_force_divisors(&target, t);
        let found = divisor_with_norm(&target, t).map_err(|e| format!("n={n}: {e}"))?;
        ensure(oracle.iter().any(|w| w.is_associate(&found)), || {
            format!("n={n}: {found} not among brute-force divisors {oracle:?}")
        })?;
        targets += 1;
    }

    for n in -60..=60 {
        let p = profile(n).map_err(|e| e.to_string())?;
        let pair = find_pair(&p).map_err(|e| e.to_string())?;
        let reference = alpha_for_pair(&p, &pair).map_err(|e| e.to_string())?;
        for cand in pair.associates() {
            let cert = certify(alpha_for_pair(&p, &cand).map_err(|e| format!("n={n}: {e}"))?);
            ensure(cert.all_passed(), || format!("n={n}, pair {cand}: {:?}", cert.failed_checks()))?;
            ensure(same_galois_module(&cert.alpha, &reference.alpha), || {
                format!("n={n}: module differs for associate {cand}")
            })?;
        }
    }

    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!(
        "ν, norm, σ over 1000 samples each; 201 symmetric-function checks; {targets} divisor targets; associates n∈[-60,60]; {:?}",
        start.elapsed()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("wild-ii family: 22 values in [1, 300] besides 237", wild_ii_family),
        ("wild-ii worked value n = 237", wild_ii_n237),
        ("wild-iii family: 20 values in [1, 100] besides 54, 90", wild_iii_family),
        ("wild-iii worked values n = 54, n = 90", wild_iii_n54_n90),
        ("full-range soundness n ∈ [-500, 500]", full_range_soundness),
        ("integral-basis conditions, wild n ∈ [-500, 500]", lemma_conditions),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

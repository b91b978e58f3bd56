//! Independent certification of a constructed generator.
//!
//! A sublattice of `𝒪` whose discriminant equals the field discriminant is
//! `𝒪` itself, so integrality plus one discriminant comparison proves the
//! module equalities without touching Gauss periods. The checks:
//!
//! | name             | cases | content                                              |
//! |------------------|-------|------------------------------------------------------|
//! | `pair`           | all   | `N(a₀+a₁ζ)` matches `ec` (or `ec/3`) and divides `A_n` |
//! | `integral`       | all   | `α` has an integral characteristic polynomial        |
//! | `discriminant`   | all   | tame: `d(α, σα, σ²α) = 𝔣²`; wild: `Tr α = 0` and `d(1, α, σα) = 𝔣²` |
//! | `assoc_order`    | wild  | `𝒜·(α+1) = ℤ + ℤα + ℤσα` as lattices                  |
//! | `integral_basis` | wild  | `ℤ + ℤα + ℤσα = ℤ + ℤφ + ℤψ`                          |
//! | `conductor`      | all   | both conductor routes agree, `D = 𝔣²`, `Δ²/D` a square |

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cubicfield::{gram_disc, FieldElement};
use crate::eisenstein::EisensteinInteger;
use crate::generator::{a_n, integral_basis, pair_norm_target, GeneratorCertificate};
use crate::lattice::{lattice_equal, RationalLattice};
use crate::profile::{
    associated_order_basis, conductor_from_cube_free_part, conductor_from_squarefree_parts, Case,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: String,
}

impl Check {
    fn new(name: &str, passed: bool, witness: String) -> Self {
        Self {
            name: name.to_string(),
            passed,
            witness,
        }
    }
}

pub type VerificationReport = Vec<Check>;

fn check_pair(cert: &GeneratorCertificate) -> Check {
    let p = &cert.profile;
    let pair = cert.pair();
    let norm = pair.norm();
    let factor = if p.case == Case::WildIII { 3 } else { 1 };
    let divides = pair.divides(&a_n(p.n));
    let passed = factor * norm == (p.e() * p.c()) as u128
        && norm == pair_norm_target(p) as u128
        && divides;
    Check::new(
        "pair",
        passed,
        format!("N({pair}) = {norm}, divides A_n = {}: {divides}", a_n(p.n)),
    )
}

fn check_integral(alpha: &FieldElement) -> Check {
    let [c2, c1, c0] = alpha.char_poly();
    Check::new(
        "integral",
        alpha.is_integral(),
        format!("X^3 + ({c2})X^2 + ({c1})X + ({c0})"),
    )
}

fn check_discriminant(cert: &GeneratorCertificate) -> Check {
    let p = &cert.profile;
    let alpha = &cert.alpha;
    let expected = BigInt::from(p.field_disc);
    let one = FieldElement::one(p.n);
    let (disc, trace_ok) = match p.case {
        Case::Tame => (
            gram_disc(alpha, &alpha.sigma(), &alpha.sigma_pow(2)),
            true,
        ),
        _ => (gram_disc(&one, alpha, &alpha.sigma()), alpha.trace().is_zero()),
    };
    let disc = disc.expect("conjugates share the field");
    let passed = trace_ok && disc.is_integer() && disc.to_integer() == expected;
    Check::new(
        "discriminant",
        passed,
        format!("disc = {disc}, expected {expected}, trace {}", alpha.trace()),
    )
}

fn check_associated_order(cert: &GeneratorCertificate) -> Check {
    let alpha = &cert.alpha;
    let n = cert.n();
    let shifted = alpha + &FieldElement::one(n);
    let images: Vec<FieldElement> = associated_order_basis(&cert.profile)
        .iter()
        .map(|g| g.act(&shifted))
        .collect();
    let module = RationalLattice::span(&images);
    let target = RationalLattice::span(&[FieldElement::one(n), alpha.clone(), alpha.sigma()]);
    let passed = lattice_equal(&module, &target);
    let (den, basis) = module.canonical();
    Check::new(
        "assoc_order",
        passed,
        format!("hnf [{}] / {den}", render_rows(&basis)),
    )
}

fn check_integral_basis(cert: &GeneratorCertificate) -> Check {
    let n = cert.n();
    match integral_basis(&cert.profile) {
        Ok(basis) => {
            let alpha = &cert.alpha;
            let ours = RationalLattice::span(&[FieldElement::one(n), alpha.clone(), alpha.sigma()]);
            let reference = RationalLattice::span(&basis);
            let passed = lattice_equal(&ours, &reference);
            let (den, rows) = reference.canonical();
            Check::new(
                "integral_basis",
                passed,
                format!("φ = {}, ψ = {}, hnf [{}] / {den}", basis[1], basis[2], render_rows(&rows)),
            )
        }
        Err(err) => Check::new("integral_basis", false, err.to_string()),
    }
}

fn check_conductor(cert: &GeneratorCertificate) -> Check {
    let p = &cert.profile;
    let dec = &p.decomposition;
    let from_b = conductor_from_cube_free_part(dec);
    let from_de = conductor_from_squarefree_parts(p.case, dec);
    let disc = p.field_disc;
    let delta_sq = (dec.delta as u128) * (dec.delta as u128);
    let index_sq = (delta_sq % disc == 0).then(|| delta_sq / disc);
    let index_is_square = index_sq.is_some_and(|q| q.sqrt() * q.sqrt() == q);
    let passed = from_b == from_de
        && from_de == p.conductor
        && (p.conductor as u128) * (p.conductor as u128) == disc
        && index_is_square;
    Check::new(
        "conductor",
        passed,
        format!(
            "f = {from_de} (via b: {from_b}), D = {disc}, Δ²/D = {}",
            index_sq.map_or("non-integral".to_string(), |q| q.to_string())
        ),
    )
}

fn render_rows(rows: &[[BigInt; 3]]) -> String {
    rows.iter()
        .map(|r| format!("({}, {}, {})", r[0], r[1], r[2]))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Runs every check that applies to the certificate's case.
pub fn verify(cert: &GeneratorCertificate) -> VerificationReport {
    let mut checks = vec![
        check_pair(cert),
        check_integral(&cert.alpha),
        check_discriminant(cert),
    ];
    if cert.profile.case.is_wild() {
        checks.push(check_associated_order(cert));
        checks.push(check_integral_basis(cert));
    }
    checks.push(check_conductor(cert));
    checks
}

/// Attaches the verification report to the certificate.
pub fn certify(mut cert: GeneratorCertificate) -> GeneratorCertificate {
    cert.checks = verify(&cert);
    cert
}

/// ℤ[G]-span of `α`, i.e. `span{α, σα, σ²α}`.
pub fn galois_span(alpha: &FieldElement) -> RationalLattice {
    RationalLattice::span(&[alpha.clone(), alpha.sigma(), alpha.sigma_pow(2)])
}

/// True when the two pairs generate `ℤ[G]`-modules that agree, as happens for
/// associates.
pub fn same_galois_module(x: &FieldElement, y: &FieldElement) -> bool {
    lattice_equal(&galois_span(x), &galois_span(y))
}

/// Unit `u` such that `other = u·canonical`, if any.
pub fn unit_between(canonical: &EisensteinInteger, other: &EisensteinInteger) -> Option<EisensteinInteger> {
    canonical.unit_relating(other)
}

//! Construction of the generator `α` of `𝒪_{L_n}` over its associated order.
//!
//! Tame fields (`ℤ[G]`-generator, normal integral basis):
//! `α = (a₀ρ + a₁ρ′ + m) / (e·c²)`.
//! Wild fields (`𝒪 = ℤ[G]·α ⊕ ℤ = 𝒜·(α+1)`):
//! `α = (3a₀ρ + 3a₁ρ′ - n(a₀+a₁)) / (e·c²)`.
//!
//! In both cases `a₀ + a₁ζ` divides `A_n = n + 3(1+ζ)` in `ℤ[ζ]` and has norm
//! `ec` (tame and case ii) or `ec/3` (case iii).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::legendre3;
use crate::cubicfield::{gram_disc, rational, FieldElement};
use crate::eisenstein::{divisor_with_norm, EisensteinInteger};
use crate::error::{Error, Result};
use crate::groupring::GroupRingElement;
use crate::profile::{Case, FieldProfile};
use crate::verify::Check;

/// `A_n = n + 3(1+ζ)`; `Δ_n = A_n·Ā_n`.
pub fn a_n(n: i64) -> EisensteinInteger {
    EisensteinInteger::new(n as i128 + 3, 3)
}

/// Norm required of `a₀ + a₁ζ`: `ec`, or `ec/3` in case iii.
pub fn pair_norm_target(p: &FieldProfile) -> u64 {
    let ec = p.e() * p.c();
    match p.case {
        Case::WildIII => ec / 3,
        _ => ec,
    }
}

/// Canonical `a₀ + a₁ζ` dividing `A_n` with the required norm.
pub fn find_pair(p: &FieldProfile) -> Result<EisensteinInteger> {
    divisor_with_norm(&a_n(p.n), pair_norm_target(p))
}

/// Tame-case data attached to a particular associate of the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TameParameters {
    pub pair: EisensteinInteger,
    pub epsilon: i8,
    pub m: i128,
}

fn e_c_squared(p: &FieldProfile) -> i128 {
    p.e() as i128 * (p.c() as i128).pow(2)
}

fn require_case(p: &FieldProfile, wild: bool) -> Result<()> {
    if p.case.is_wild() != wild {
        return Err(Error::WrongCase {
            n: p.n,
            expected: if wild { "wild" } else { "tame" },
            actual: p.case.label(),
        });
    }
    Ok(())
}

/// `ε = (n(a₀+a₁)/3)` when `3 ∤ n`, `(a₀/3)` when `n ≡ 12 (mod 27)`.
pub fn epsilon(p: &FieldProfile, pair: &EisensteinInteger) -> Result<i8> {
    require_case(p, false)?;
    let n = p.n as i128;
    if n.rem_euclid(3) != 0 {
        legendre3(n * (pair.a + pair.b))
    } else {
        legendre3(pair.a)
    }
}

/// `m = (ε·ec² - n(a₀+a₁))/3` for exactly this pair.
pub fn m_for_pair(p: &FieldProfile, pair: &EisensteinInteger, eps: i8) -> Result<i128> {
    let numerator = eps as i128 * e_c_squared(p) - p.n as i128 * (pair.a + pair.b);
    if numerator % 3 != 0 {
        return Err(Error::NonIntegralM {
            n: p.n,
            a0: pair.a,
            a1: pair.b,
        });
    }
    Ok(numerator / 3)
}

/// `(ε, m)` for `pair`, falling back to the other associates when `ε` is
/// undefined or `m` is not an integer.
pub fn epsilon_and_m(p: &FieldProfile, pair: &EisensteinInteger) -> Result<TameParameters> {
    require_case(p, false)?;
    let candidates = std::iter::once(*pair).chain(pair.associates());
    for cand in candidates {
        let Ok(eps) = epsilon(p, &cand) else { continue };
        if let Ok(m) = m_for_pair(p, &cand, eps) {
            return Ok(TameParameters {
                pair: cand,
                epsilon: eps,
                m,
            });
        }
    }
    Err(Error::NonIntegralM {
        n: p.n,
        a0: pair.a,
        a1: pair.b,
    })
}

/// The constructed generator plus the outcome of its verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorCertificate {
    pub profile: FieldProfile,
    pub a0: i128,
    pub a1: i128,
    pub epsilon: Option<i8>,
    pub m: Option<i128>,
    pub alpha: FieldElement,
    pub checks: Vec<Check>,
}

impl GeneratorCertificate {
    pub fn pair(&self) -> EisensteinInteger {
        EisensteinInteger::new(self.a0, self.a1)
    }

    pub fn n(&self) -> i64 {
        self.profile.n
    }

    pub fn all_passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }
}

/// `α` for the profile, using the canonical pair (or, in the tame case, the
/// first associate with a valid `ε` and integral `m`).
pub fn alpha(p: &FieldProfile) -> Result<GeneratorCertificate> {
    let pair = find_pair(p)?;
    let pair = match p.case {
        Case::Tame => epsilon_and_m(p, &pair)?.pair,
        _ => pair,
    };
    alpha_for_pair(p, &pair)
}

/// `α` built from exactly this `a₀ + a₁ζ`. The pair's hypotheses are not
/// checked here; [`crate::verify::verify`] does that.
pub fn alpha_for_pair(p: &FieldProfile, pair: &EisensteinInteger) -> Result<GeneratorCertificate> {
    let n = p.n as i128;
    let den = e_c_squared(p);
    let (a0, a1) = (pair.a, pair.b);
    let (epsilon, m, alpha) = match p.case {
        Case::Tame => {
            let eps = epsilon(p, pair)?;
            let m = m_for_pair(p, pair, eps)?;
            let alpha = FieldElement::from_integers(p.n, [m, a0, a1], den);
            (Some(eps), Some(m), alpha)
        }
        Case::WildII | Case::WildIII => {
            let alpha = FieldElement::from_integers(p.n, [-n * (a0 + a1), 3 * a0, 3 * a1], den);
            (None, None, alpha)
        }
    };
    Ok(GeneratorCertificate {
        profile: p.clone(),
        a0,
        a1,
        epsilon,
        m,
        alpha,
        checks: Vec::new(),
    })
}

/// `{1, φ, ψ}` with `φ = (3ρ-n)/c` (case ii) or `(3ρ-n)/(3c)` (case iii) and
/// `ψ = (9ρ² - 6nρ - 2n² - 9n - 27)/(3ec²)`; an integral basis of a wild
/// field. Fails loudly if the discriminant is not `𝔣²`.
pub fn integral_basis(p: &FieldProfile) -> Result<[FieldElement; 3]> {
    require_case(p, true)?;
    let n = p.n as i128;
    let c = p.c() as i128;
    let rho = FieldElement::rho(p.n);
    let phi_den = if p.case == Case::WildII { c } else { 3 * c };
    let phi = FieldElement::from_integers(p.n, [-n, 3, 0], phi_den);
    let rho_sq = &rho * &rho;
    let numerator = &(&rho_sq.scale(&rational(9)) - &rho.scale(&rational(6 * n)))
        - &FieldElement::from_int(p.n, 2 * n * n + 9 * n + 27);
    let psi = numerator.scale(&(rational(1) / rational(3 * e_c_squared(p))));
    let basis = [FieldElement::one(p.n), phi, psi];

    let disc = gram_disc(&basis[0], &basis[1], &basis[2])?;
    let expected = BigInt::from(p.field_disc);
    if !disc.is_integer() || disc.to_integer() != expected || !basis.iter().all(FieldElement::is_integral) {
        return Err(Error::Inconsistent {
            n: p.n,
            detail: format!("integral basis has discriminant {disc}, expected {expected}"),
        });
    }
    Ok(basis)
}

/// `b² c² - 4c³ - 4b³d - 27d² + 18bcd` for `X³ + bX² + cX + d`.
pub fn cubic_discriminant(b: &BigInt, c: &BigInt, d: &BigInt) -> BigInt {
    b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d
}

/// Integral-basis criterion for `g = X³ + b1X² + c1X + d1` with field
/// discriminant `disc`:
/// (i) `disc(g) = s⁶a²·disc`, and
/// (ii) `½g″(t) ≡ 0 (mod s)`, `g′(t) ≡ 0 (mod s²a)`, `g(t) ≡ 0 (mod s³a²)`.
pub fn hw_check(b1: i128, c1: i128, d1: i128, s: i128, a: i128, t: i128, disc: i128) -> bool {
    if s == 0 || a == 0 {
        return false;
    }
    let [b1, c1, d1, s, a, t, disc] = [b1, c1, d1, s, a, t, disc].map(BigInt::from);
    let condition_i = cubic_discriminant(&b1, &c1, &d1) == s.pow(6) * &a * &a * disc;

    let g = &t * &t * &t + &b1 * &t * &t + &c1 * &t + &d1;
    let g1 = 3 * &t * &t + 2 * &b1 * &t + &c1;
    let half_g2 = 3 * &t + &b1;
    let divides = |m: BigInt, x: &BigInt| (x % m.abs()).is_zero();
    let condition_ii = divides(s.clone(), &half_g2)
        && divides(&s * &s * &a, &g1)
        && divides(s.pow(3) * &a * &a, &g);
    condition_i && condition_ii
}

/// `(s, a, t)` for the wild integral basis: `(c/3, 3e, n/3)` in case ii and
/// `(c, e/3, n/3)` in case iii.
pub fn hw_parameters(p: &FieldProfile) -> Result<(i128, i128, i128)> {
    require_case(p, true)?;
    let (c, e, n) = (p.c() as i128, p.e() as i128, p.n as i128);
    Ok(match p.case {
        Case::WildII => (c / 3, 3 * e, n / 3),
        _ => (c, e / 3, n / 3),
    })
}

/// Runs [`hw_check`] on `f_n` with the wild `(s, a, t)` table.
pub fn hw_conditions_hold(p: &FieldProfile) -> Result<bool> {
    let (s, a, t) = hw_parameters(p)?;
    let n = p.n as i128;
    let disc = i128::try_from(p.field_disc).map_err(|_| Error::Inconsistent {
        n: p.n,
        detail: "field discriminant exceeds i128".into(),
    })?;
    Ok(hw_check(-n, -(n + 3), -1, s, a, t, disc))
}

/// `(g₁, g₂, ℓ)` with `ℓ = 3ec²`, `e_m.φ = g₁.(ρ/ℓ)` and `e_m.ψ = g₂.(ρ/ℓ)`
/// for the primary branch idempotent `e_m`.
pub fn wild_ideal_generators(
    p: &FieldProfile,
) -> Result<(GroupRingElement, GroupRingElement, i128)> {
    require_case(p, true)?;
    let n = p.n as i128;
    let c = p.c() as i128;
    let ell = 3 * e_c_squared(p);
    let scale = if p.case == Case::WildII { ell / c } else { ell / (3 * c) };
    let g1 = GroupRingElement::from_integers([2 * scale, -scale, -scale]);
    let g2 = GroupRingElement::from_integers([2 * n + 3, 3 - n, -(n + 6)]);
    Ok((g1, g2, ell))
}

//! Ramification profile of `L_n`: case, conductor, discriminant, branch
//! moduli and the associated order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{delta_decompose, DeltaDecomposition};
use crate::error::{Error, Result};
use crate::groupring::{idempotent, Branch, GroupRingElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    /// `3 ∤ n` or `n ≡ 12 (mod 27)`: tamely ramified, conductor `de`.
    #[serde(rename = "tame")]
    Tame,
    /// `n ≡ 3 (mod 9)`, `n ≢ 12 (mod 27)`: conductor `9de`.
    #[serde(rename = "wild-ii")]
    WildII,
    /// `n ≡ 0, 6 (mod 9)`: conductor `3de`.
    #[serde(rename = "wild-iii")]
    WildIII,
}

impl Case {
    pub fn of(n: i64) -> Self {
        if n.rem_euclid(3) != 0 || n.rem_euclid(27) == 12 {
            Case::Tame
        } else if n.rem_euclid(9) == 3 {
            Case::WildII
        } else {
            Case::WildIII
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Case::Tame => "tame",
            Case::WildII => "wild-ii",
            Case::WildIII => "wild-iii",
        }
    }

    pub fn is_wild(self) -> bool {
        self != Case::Tame
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for Case {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "tame" => Ok(Case::Tame),
            "wild-ii" => Ok(Case::WildII),
            "wild-iii" => Ok(Case::WildIII),
            other => Err(format!("unknown case label {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldProfile {
    pub n: i64,
    pub decomposition: DeltaDecomposition,
    pub case: Case,
    pub conductor: u64,
    pub field_disc: u128,
    pub branch_moduli: Vec<u64>,
}

impl FieldProfile {
    pub fn d(&self) -> u64 {
        self.decomposition.d
    }

    pub fn e(&self) -> u64 {
        self.decomposition.e
    }

    pub fn c(&self) -> u64 {
        self.decomposition.c
    }

    pub fn delta(&self) -> u64 {
        self.decomposition.delta
    }
}

/// Conductor from the cube-free part: `γ·∏ p` over primes `p ≠ 3` dividing
/// `b`, with `γ = 1` in the tame case and `9` otherwise.
pub fn conductor_from_cube_free_part(dec: &DeltaDecomposition) -> u64 {
    let gamma = if Case::of(dec.n) == Case::Tame { 1 } else { 9 };
    let factors = crate::arith::factorize(dec.b);
    gamma * factors.primes().filter(|&p| p != 3).product::<u64>()
}

/// Conductor from the `d·e²·c³` shape: `de`, `9de` or `3de` by case.
pub fn conductor_from_squarefree_parts(case: Case, dec: &DeltaDecomposition) -> u64 {
    let de = dec.d * dec.e;
    match case {
        Case::Tame => de,
        Case::WildII => 9 * de,
        Case::WildIII => 3 * de,
    }
}

pub fn profile(n: i64) -> Result<FieldProfile> {
    let dec = delta_decompose(n)?;
    let case = Case::of(n);
    let inconsistent = |detail: String| Error::Inconsistent { n, detail };

    let v3 = |m: u64| crate::arith::factorize(m).exponent_of(3);
    if dec.d % 3 == 0 {
        return Err(inconsistent(format!("3 divides d = {}", dec.d)));
    }
    match case {
        Case::WildII if v3(dec.e) != 0 || v3(dec.c) != 1 => {
            return Err(inconsistent(format!(
                "case ii expects 3 ∤ e and 3 ∥ c, got e = {}, c = {}",
                dec.e, dec.c
            )));
        }
        Case::WildIII if v3(dec.e) != 1 || v3(dec.c) != 0 => {
            return Err(inconsistent(format!(
                "case iii expects 3 ∥ e and 3 ∤ c, got e = {}, c = {}",
                dec.e, dec.c
            )));
        }
        _ => {}
    }

    let conductor = conductor_from_squarefree_parts(case, &dec);
    let other = conductor_from_cube_free_part(&dec);
    if conductor != other {
        return Err(inconsistent(format!(
            "conductor routes disagree: {conductor} from d, e versus {other} from b"
        )));
    }
    let mut p = FieldProfile {
        n,
        decomposition: dec,
        case,
        conductor,
        field_disc: (conductor as u128) * (conductor as u128),
        branch_moduli: Vec::new(),
    };
    p.branch_moduli = branch_moduli(&p);
    Ok(p)
}

/// `{de}`, `{9de, 3de}` or `{3de, de}`.
pub fn branch_moduli(p: &FieldProfile) -> Vec<u64> {
    let de = p.d() * p.e();
    match p.case {
        Case::Tame => vec![de],
        Case::WildII => vec![9 * de, 3 * de],
        Case::WildIII => vec![3 * de, de],
    }
}

/// The branch idempotents generating the associated order over `ℤ[G]`.
pub fn branch_idempotents(p: &FieldProfile) -> Vec<GroupRingElement> {
    match p.case {
        Case::Tame => vec![GroupRingElement::one()],
        _ => vec![idempotent(Branch::Primary), idempotent(Branch::Trivial)],
    }
}

/// ℤ-basis of the associated order: `{1, σ, σ²}` when tame,
/// `{1, σ, (1+σ+σ²)/3}` when wild.
pub fn associated_order_basis(p: &FieldProfile) -> Vec<GroupRingElement> {
    match p.case {
        Case::Tame => vec![
            GroupRingElement::one(),
            GroupRingElement::sigma(),
            GroupRingElement::sigma_pow(2),
        ],
        _ => vec![
            GroupRingElement::one(),
            GroupRingElement::sigma(),
            idempotent(Branch::Trivial),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{lattice_equal, RationalLattice};
    use num_bigint::BigInt;

    #[test]
    fn case_rules() {
        assert_eq!(Case::of(1), Case::Tame);
        assert_eq!(Case::of(12), Case::Tame);
        assert_eq!(Case::of(-15), Case::Tame); // -15 ≡ 12 (mod 27)
        assert_eq!(Case::of(3), Case::WildII);
        assert_eq!(Case::of(237), Case::WildII);
        assert_eq!(Case::of(0), Case::WildIII);
        assert_eq!(Case::of(54), Case::WildIII);
        assert_eq!(Case::of(-3), Case::WildIII);
        for c in [Case::Tame, Case::WildII, Case::WildIII] {
            assert_eq!(c.label().parse::<Case>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{}\"", c.label()));
        }
    }

    #[test]
    fn profile_examples() {
        let p = profile(237).unwrap();
        assert_eq!(p.case, Case::WildII);
        assert_eq!((p.d(), p.e(), p.c()), (43, 7, 3));
        assert_eq!(p.conductor, 2709);
        let p = profile(1).unwrap();
        assert_eq!((p.case, p.conductor, p.field_disc), (Case::Tame, 13, 169));
        let p = profile(12).unwrap();
        assert_eq!(p.case, Case::Tame);
        assert_eq!((p.d(), p.e(), p.c(), p.conductor), (7, 1, 3, 7));
    }

    #[test]
    fn branch_moduli_examples() {
        assert_eq!(profile(1).unwrap().branch_moduli, vec![13]);
        assert_eq!(profile(237).unwrap().branch_moduli, vec![2709, 903]);
        assert_eq!(profile(54).unwrap().branch_moduli, vec![9, 3]);
    }

    #[test]
    fn profiles_are_mirror_symmetric() {
        for n in -600..=600 {
            let a = profile(n).unwrap();
            let b = profile(-n - 3).unwrap();
            assert_eq!(
                (a.d(), a.e(), a.c(), a.conductor, a.case),
                (b.d(), b.e(), b.c(), b.conductor, b.case),
                "n = {n}"
            );
            assert_eq!(a.field_disc, (a.conductor as u128).pow(2));
        }
    }

    fn group_ring_lattice(elements: &[GroupRingElement]) -> RationalLattice {
        let den = BigInt::from(3);
        RationalLattice::new(den.clone(), elements.iter().map(|g| g.scaled_row(&den)).collect())
    }

    #[test]
    fn associated_order_basis_matches_spanning_set() {
        for n in [1, 3, 0, 237, 54] {
            let p = profile(n).unwrap();
            let mut spanning = Vec::new();
            for k in 0..3 {
                let s = GroupRingElement::sigma_pow(k);
                spanning.push(s.clone());
                for e in branch_idempotents(&p) {
                    spanning.push(&s * &e);
                }
            }
            let basis = associated_order_basis(&p);
            assert!(lattice_equal(&group_ring_lattice(&spanning), &group_ring_lattice(&basis)));
            assert_eq!(group_ring_lattice(&basis).rank(), 3);
        }
    }

    #[test]
    fn associated_order_is_closed_under_multiplication() {
        for n in [1, 3, 0] {
            let p = profile(n).unwrap();
            let basis = associated_order_basis(&p);
            let order = group_ring_lattice(&basis);
            for x in &basis {
                for y in &basis {
                    let mut with_product = basis.clone();
                    with_product.push(x * y);
                    assert!(lattice_equal(&order, &group_ring_lattice(&with_product)));
                }
            }
        }
    }

    #[test]
    fn out_of_range_parameter_is_an_error() {
        assert!(matches!(
            profile(2_000_000_000),
            Err(Error::ParameterOutOfRange { .. })
        ));
    }
}

//! Integer lattices of rank at most 3: row-style Hermite normal form and
//! equality of lattices carrying a common denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cubicfield::FieldElement;

pub type Row = [BigInt; 3];
pub type Matrix3 = [[BigRational; 3]; 3];

/// Exact 3×3 determinant by cofactor expansion.
pub fn det3(m: &Matrix3) -> BigRational {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &m[r1][c1] * &m[r2][c2] - &m[r1][c2] * &m[r2][c1]
    };
    &m[0][0] * minor(1, 2, 1, 2) - &m[0][1] * minor(1, 2, 0, 2) + &m[0][2] * minor(1, 2, 0, 1)
}

fn is_zero_row(row: &Row) -> bool {
    row.iter().all(Zero::is_zero)
}

fn sub_multiple(target: &mut Row, q: &BigInt, source: &Row) {
    for (t, s) in target.iter_mut().zip(source) {
        *t -= q * s;
    }
}

/// Hermite normal form of the ℤ-span of `generators`.
///
/// Rows come back in echelon order with positive pivots, every entry above a
/// pivot reduced into `[0, pivot)`, and zero rows dropped. Two generator sets
/// span the same lattice iff their forms are equal.
pub fn hnf(generators: &[Row]) -> Vec<Row> {
    let mut rows: Vec<Row> = generators.to_vec();
    let mut rank = 0;
    for col in 0..3 {
        let mut found = false;
        loop {
            let pivot = (rank..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&i, &j| rows[i][col].abs().cmp(&rows[j][col].abs()));
            let Some(pivot) = pivot else { break };
            found = true;
            rows.swap(rank, pivot);
            let head = rows[rank].clone();
            let mut cleared = true;
            for row in rows.iter_mut().skip(rank + 1) {
                if row[col].is_zero() {
                    continue;
                }
                let q = row[col].div_floor(&head[col]);
                sub_multiple(row, &q, &head);
                cleared &= row[col].is_zero();
            }
            if cleared {
                break;
            }
        }
        if !found {
            continue;
        }
        if rows[rank][col].is_negative() {
            for x in rows[rank].iter_mut() {
                *x = -x.clone();
            }
        }
        let head = rows[rank].clone();
        for row in rows.iter_mut().take(rank) {
            let q = row[col].div_floor(&head[col]);
            sub_multiple(row, &q, &head);
        }
        rank += 1;
    }
    rows.truncate(rank);
    debug_assert!(rows.iter().all(|r| !is_zero_row(r)));
    rows
}

/// `(1/denominator)·span_ℤ(generators)`, coordinates in a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalLattice {
    pub denominator: BigInt,
    pub generators: Vec<Row>,
}

impl RationalLattice {
    pub fn new(denominator: BigInt, generators: Vec<Row>) -> Self {
        assert!(denominator.is_positive(), "lattice denominator must be positive");
        Self {
            denominator,
            generators,
        }
    }

    /// The integer lattice spanned by `generators`.
    pub fn integral(generators: Vec<Row>) -> Self {
        Self::new(BigInt::one(), generators)
    }

    /// The ℤ-span of field elements, in their `{1, ρ, ρ′}` coordinates.
    pub fn span(elements: &[FieldElement]) -> Self {
        let denominator = elements
            .iter()
            .flat_map(|x| x.coords().iter().map(|c| c.denom().clone()))
            .fold(BigInt::one(), |acc, d| acc.lcm(&d));
        let generators = elements
            .iter()
            .map(|x| {
                let c = x.coords();
                [0, 1, 2].map(|i| (&c[i] * &denominator).to_integer())
            })
            .collect();
        Self::new(denominator, generators)
    }

    pub fn rank(&self) -> usize {
        hnf(&self.generators).len()
    }

    /// Canonical `(denominator, hnf)` pair: the denominator is as small as
    /// the lattice allows.
    pub fn canonical(&self) -> (BigInt, Vec<Row>) {
        let basis = hnf(&self.generators);
        let g = basis
            .iter()
            .flatten()
            .fold(self.denominator.clone(), |acc, x| acc.gcd(x));
        let basis = basis
            .into_iter()
            .map(|row| row.map(|x| x / &g))
            .collect();
        (&self.denominator / &g, basis)
    }
}

/// Equality of rational lattices, decided on their canonical forms.
pub fn lattice_equal(l1: &RationalLattice, l2: &RationalLattice) -> bool {
    l1.canonical() == l2.canonical()
}

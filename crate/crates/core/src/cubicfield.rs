//! Exact arithmetic in the simplest cubic field `L_n = ℚ(ρ)`, where `ρ` is a
//! root of `X³ - nX² - (n+3)X - 1` and `σ(ρ) = ρ′ = -1/(1+ρ)`.
//!
//! Elements are coordinate triples in the basis `{1, ρ, ρ′}`. In this basis
//! `σ` has an integral matrix and the multiplication table is
//!
//! ```text
//! ρ·ρ   = 2 + (n+1)ρ + ρ′
//! ρ·ρ′  = -1 - ρ′
//! ρ′·ρ′ = (n+2) - ρ + nρ′
//! ```
//!
//! The third conjugate is `ρ″ = n - ρ - ρ′`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{det3, Matrix3};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "FieldElementRepr", try_from = "FieldElementRepr")]
pub struct FieldElement {
    n: i64,
    coords: [BigRational; 3],
}

pub(crate) fn rational(x: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl FieldElement {
    pub fn new(n: i64, coords: [BigRational; 3]) -> Self {
        Self { n, coords }
    }

    /// `(c0 + c1·ρ + c2·ρ′) / den` from integer data.
    pub fn from_integers(n: i64, numerators: [i128; 3], den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let den = rational(den);
        Self::new(n, numerators.map(|x| rational(x) / &den))
    }

    pub fn from_rational(n: i64, q: BigRational) -> Self {
        Self::new(n, [q, BigRational::zero(), BigRational::zero()])
    }

    pub fn from_int(n: i64, k: i128) -> Self {
        Self::from_rational(n, rational(k))
    }

    pub fn zero(n: i64) -> Self {
        Self::from_int(n, 0)
    }

    pub fn one(n: i64) -> Self {
        Self::from_int(n, 1)
    }

    pub fn rho(n: i64) -> Self {
        Self::from_integers(n, [0, 1, 0], 1)
    }

    pub fn rho_prime(n: i64) -> Self {
        Self::from_integers(n, [0, 0, 1], 1)
    }

    pub fn rho_double_prime(n: i64) -> Self {
        Self::from_integers(n, [n as i128, -1, -1], 1)
    }

    pub fn parameter(&self) -> i64 {
        self.n
    }

    pub fn coords(&self) -> &[BigRational; 3] {
        &self.coords
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1].is_zero() && self.coords[2].is_zero()
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ParameterMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self::new(
            self.n,
            [0, 1, 2].map(|i| &self.coords[i] + &other.coords[i]),
        ))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let table = structure_table(self.n);
        let mut out = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
        for i in 0..3 {
            if self.coords[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                if other.coords[j].is_zero() {
                    continue;
                }
                let w = &self.coords[i] * &other.coords[j];
                for (k, t) in table[i][j].iter().enumerate() {
                    if *t != 0 {
                        out[k] += &w * rational(*t);
                    }
                }
            }
        }
        Ok(Self::new(self.n, out))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::new(self.n, self.coords.clone().map(|c| c * q))
    }

    /// `σ`: `(x0, x1, x2) ↦ (x0 + n·x2, -x2, x1 - x2)`.
    pub fn sigma(&self) -> Self {
        let [x0, x1, x2] = &self.coords;
        Self::new(
            self.n,
            [x0 + x2 * rational(self.n as i128), -x2.clone(), x1 - x2],
        )
    }

    /// `σ^k` for `k` taken mod 3.
    pub fn sigma_pow(&self, k: u32) -> Self {
        (0..k % 3).fold(self.clone(), |x, _| x.sigma())
    }

    /// `Tr(x) = 3x0 + n·x1 + n·x2`.
    pub fn trace(&self) -> BigRational {
        let n = rational(self.n as i128);
        &self.coords[0] * rational(3) + (&self.coords[1] + &self.coords[2]) * n
    }

    /// Matrix of multiplication by `self`; column `j` holds `self·b_j`.
    pub fn multiplication_matrix(&self) -> Matrix3 {
        let columns = [
            self.clone(),
            self * &Self::rho(self.n),
            self * &Self::rho_prime(self.n),
        ];
        [0, 1, 2].map(|i| [0, 1, 2].map(|j| columns[j].coords[i].clone()))
    }

    /// `(c2, c1, c0)` with `X³ + c2X² + c1X + c0` the characteristic
    /// polynomial of multiplication by `self`.
    pub fn char_poly(&self) -> [BigRational; 3] {
        let m = self.multiplication_matrix();
        let trace = &m[0][0] + &m[1][1] + &m[2][2];
        let minor = |a: usize, b: usize| &m[a][a] * &m[b][b] - &m[a][b] * &m[b][a];
        let minors = minor(0, 1) + minor(0, 2) + minor(1, 2);
        [-trace, minors, -det3(&m)]
    }

    pub fn norm(&self) -> BigRational {
        -self.char_poly()[2].clone()
    }

    /// True iff the characteristic polynomial has integer coefficients.
    pub fn is_integral(&self) -> bool {
        self.char_poly().iter().all(BigRational::is_integer)
    }

    /// `(numerators, den)` with `self = (c0 + c1ρ + c2ρ′)/den`, `den > 0`
    /// minimal.
    pub fn integer_form(&self) -> ([BigInt; 3], BigInt) {
        let den = self
            .coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = [0, 1, 2].map(|i| (&self.coords[i] * &den).to_integer());
        (nums, den)
    }
}

/// Serialized as `(c0 + c1ρ + c2ρ′)/den` with decimal strings, so values of
/// any size survive JSON.
#[derive(Serialize, Deserialize)]
struct FieldElementRepr {
    n: i64,
    numerators: [String; 3],
    denominator: String,
}

impl From<FieldElement> for FieldElementRepr {
    fn from(x: FieldElement) -> Self {
        let (nums, den) = x.integer_form();
        Self {
            n: x.n,
            numerators: nums.map(|v| v.to_string()),
            denominator: den.to_string(),
        }
    }
}

impl TryFrom<FieldElementRepr> for FieldElement {
    type Error = String;
    fn try_from(r: FieldElementRepr) -> std::result::Result<Self, String> {
        let parse = |s: &str| s.parse::<BigInt>().map_err(|e| format!("{s:?}: {e}"));
        let den = parse(&r.denominator)?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        let mut coords = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
        for (c, s) in coords.iter_mut().zip(&r.numerators) {
            *c = BigRational::new(parse(s)?, den.clone());
        }
        Ok(FieldElement::new(r.n, coords))
    }
}

fn structure_table(n: i64) -> [[[i128; 3]; 3]; 3] {
    let n = n as i128;
    let one = [1, 0, 0];
    let rho = [0, 1, 0];
    let rho_p = [0, 0, 1];
    let rho_rho = [2, n + 1, 1];
    let rho_rho_p = [-1, 0, -1];
    let rho_p_rho_p = [n + 2, -1, n];
    [
        [one, rho, rho_p],
        [rho, rho_rho, rho_rho_p],
        [rho_p, rho_rho_p, rho_p_rho_p],
    ]
}

/// `det(Tr(x_i·x_j))`, the discriminant of the triple. Zero iff the triple
/// is linearly dependent over ℚ.
pub fn gram_disc(x1: &FieldElement, x2: &FieldElement, x3: &FieldElement) -> Result<BigRational> {
    x1.same_field(x2)?;
    x1.same_field(x3)?;
    let xs = [x1, x2, x3];
    let gram: Matrix3 = [0, 1, 2].map(|i| [0, 1, 2].map(|j| (xs[i] * xs[j]).trace()));
    Ok(det3(&gram))
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> FieldElement {
        self.checked_add(rhs).expect("field elements must share n")
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> FieldElement {
        self.checked_add(&-rhs).expect("field elements must share n")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::new(self.n, self.coords.clone().map(|c| -c))
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> FieldElement {
        self.checked_mul(rhs).expect("field elements must share n")
    }
}

/// Renders `(aρ+bρ′+c)/d` with the fraction fully reduced, e.g.
/// `(4ρ-ρ′-237)/21`, `ρ-1`, `(ρ-ρ′)/3`.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ([c0, c1, c2], den) = self.integer_form();
        let mut body = String::new();
        let mut terms = 0;
        for (coef, symbol) in [(&c1, "ρ"), (&c2, "ρ′"), (&c0, "")] {
            if coef.is_zero() {
                continue;
            }
            let sign = if coef.is_negative() {
                "-"
            } else if terms > 0 {
                "+"
            } else {
                ""
            };
            let magnitude = coef.abs();
            let digits = if magnitude.is_one() && !symbol.is_empty() {
                String::new()
            } else {
                magnitude.to_string()
            };
            body.push_str(&format!("{sign}{digits}{symbol}"));
            terms += 1;
        }
        if terms == 0 {
            body.push('0');
        }
        if den.is_one() {
            write!(f, "{body}")
        } else if terms > 1 {
            write!(f, "({body})/{den}")
        } else {
            write!(f, "{body}/{den}")
        }
    }
}

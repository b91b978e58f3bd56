//! The rational group ring `ℚ[G]`, `G = ⟨σ⟩` cyclic of order 3, acting on
//! `L_n`, with its two branch idempotents and the map `ν: ℤ[G] → ℤ[ζ]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::cubicfield::{rational, FieldElement};
use crate::eisenstein::EisensteinInteger;
use crate::error::{Error, Result};

/// `c0·1 + c1·σ + c2·σ²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    coeffs: [BigRational; 3],
}

/// Which branch idempotent of a wildly ramified simplest cubic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `(2 - σ - σ²)/3`, the projection onto the nontrivial characters.
    Primary,
    /// `(1 + σ + σ²)/3`, the projection onto the trivial character.
    Trivial,
}

impl GroupRingElement {
    pub fn new(coeffs: [BigRational; 3]) -> Self {
        Self { coeffs }
    }

    pub fn from_integers(coeffs: [i128; 3]) -> Self {
        Self::new(coeffs.map(rational))
    }

    /// `(c0 + c1σ + c2σ²)/den`.
    pub fn from_fraction(coeffs: [i128; 3], den: i128) -> Self {
        let den = rational(den);
        Self::new(coeffs.map(|c| rational(c) / &den))
    }

    pub fn one() -> Self {
        Self::from_integers([1, 0, 0])
    }

    pub fn sigma() -> Self {
        Self::from_integers([0, 1, 0])
    }

    /// `σ^k`, `k` taken mod 3.
    pub fn sigma_pow(k: u32) -> Self {
        let mut c = [0; 3];
        c[(k % 3) as usize] = 1;
        Self::from_integers(c)
    }

    pub fn coeffs(&self) -> &[BigRational; 3] {
        &self.coeffs
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::new(self.coeffs.clone().map(|c| c * q))
    }

    /// `Σ c_i σ^i(x)`.
    pub fn act(&self, x: &FieldElement) -> FieldElement {
        let conjugates = [x.clone(), x.sigma(), x.sigma().sigma()];
        conjugates
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .fold(FieldElement::zero(x.parameter()), |acc, (y, c)| {
                &acc + &y.scale(c)
            })
    }

    /// `ν(σ) = ζ`: `(c0 - c2) + (c1 - c2)ζ`. Defined on `ℤ[G]` only.
    pub fn nu(&self) -> Result<EisensteinInteger> {
        if !self.is_integral() {
            return Err(Error::NonIntegralCoordinates);
        }
        let c: Vec<i128> = self
            .coeffs
            .iter()
            .map(|x| x.to_integer().to_i128().ok_or(Error::NonIntegralCoordinates))
            .collect::<Result<_>>()?;
        Ok(EisensteinInteger::new(c[0] - c[2], c[1] - c[2]))
    }

    /// Integer coordinates scaled by `den`, for lattice computations.
    pub fn scaled_row(&self, den: &BigInt) -> [BigInt; 3] {
        [0, 1, 2].map(|i| (&self.coeffs[i] * BigRational::from_integer(den.clone())).to_integer())
    }
}

pub fn idempotent(branch: Branch) -> GroupRingElement {
    match branch {
        Branch::Primary => GroupRingElement::from_fraction([2, -1, -1], 3),
        Branch::Trivial => GroupRingElement::from_fraction([1, 1, 1], 3),
    }
}

/// The six units `±σ^k` of `ℤ[G]`.
pub fn units() -> [GroupRingElement; 6] {
    [
        GroupRingElement::from_integers([1, 0, 0]),
        GroupRingElement::from_integers([0, 1, 0]),
        GroupRingElement::from_integers([0, 0, 1]),
        GroupRingElement::from_integers([-1, 0, 0]),
        GroupRingElement::from_integers([0, -1, 0]),
        GroupRingElement::from_integers([0, 0, -1]),
    ]
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: Self) -> GroupRingElement {
        GroupRingElement::new([0, 1, 2].map(|i| &self.coeffs[i] + &rhs.coeffs[i]))
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: Self) -> GroupRingElement {
        GroupRingElement::new([0, 1, 2].map(|i| &self.coeffs[i] - &rhs.coeffs[i]))
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement::new(self.coeffs.clone().map(|c| -c))
    }
}

/// Cyclic convolution.
impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: Self) -> GroupRingElement {
        GroupRingElement::new([0, 1, 2].map(|k| {
            (0..3)
                .map(|i| &self.coeffs[i] * &rhs.coeffs[(k + 3 - i) % 3])
                .fold(BigRational::zero(), |acc, x| acc + x)
        }))
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}σ + {}σ²",
            self.coeffs[0], self.coeffs[1], self.coeffs[2]
        )
    }
}

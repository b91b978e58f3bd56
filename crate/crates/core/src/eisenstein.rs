//! Arithmetic in the Eisenstein integers `Z[ζ]`, `ζ = ζ₃`, `ζ² = -1 - ζ`.
//!
//! Elements are stored as `a + bζ`. The ring is Euclidean for the norm
//! `a² - ab + b²`, which is what the divisor search for the generator pair
//! `(a₀, a₁)` relies on.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, pow_mod};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EisensteinInteger {
    pub a: i128,
    pub b: i128,
}

impl EisensteinInteger {
    pub const ZERO: Self = Self::new(0, 0);
    pub const ONE: Self = Self::new(1, 0);
    pub const ZETA: Self = Self::new(0, 1);
    pub const ZETA_SQUARED: Self = Self::new(-1, -1);
    /// `1 - ζ`, the prime above 3.
    pub const RAMIFIED: Self = Self::new(1, -1);

    /// `1, ζ, ζ², -1, -ζ, -ζ²`.
    pub const UNITS: [Self; 6] = [
        Self::new(1, 0),
        Self::new(0, 1),
        Self::new(-1, -1),
        Self::new(-1, 0),
        Self::new(0, -1),
        Self::new(1, 1),
    ];

    pub const fn new(a: i128, b: i128) -> Self {
        Self { a, b }
    }

    pub const fn from_int(a: i128) -> Self {
        Self { a, b: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// `a² - ab + b²`.
    pub fn norm(&self) -> u128 {
        let (a, b) = (self.a, self.b);
        (a * a - a * b + b * b) as u128
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    /// Complex conjugation `ζ ↦ ζ²`.
    pub fn conj(&self) -> Self {
        Self::new(self.a - self.b, -self.b)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = *self;
        let mut acc = Self::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    /// Euclidean division: `self = q·y + r` with `norm(r) < norm(y)`.
    ///
    /// `q` rounds the rational coordinates of `self / y` half away from zero.
    pub fn divrem(&self, y: &Self) -> Result<(Self, Self)> {
        if y.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = *self * y.conj();
        let den = y.norm() as i128;
        let q = Self::new(round_div(num.a, den), round_div(num.b, den));
        let r = *self - q * *y;
        debug_assert!(r.norm() < y.norm());
        Ok((q, r))
    }

    /// `self / y` when the division is exact.
    pub fn exact_div(&self, y: &Self) -> Option<Self> {
        if y.is_zero() {
            return None;
        }
        let num = *self * y.conj();
        let den = y.norm() as i128;
        (num.a % den == 0 && num.b % den == 0).then(|| Self::new(num.a / den, num.b / den))
    }

    /// True when `self` divides `x`. Zero divides only zero.
    pub fn divides(&self, x: &Self) -> bool {
        if self.is_zero() {
            return x.is_zero();
        }
        x.exact_div(self).is_some()
    }

    /// The six unit multiples `u·self`, in the order of [`Self::UNITS`].
    /// For zero the list collapses to `[0]`.
    pub fn associates(&self) -> Vec<Self> {
        if self.is_zero() {
            return vec![Self::ZERO];
        }
        Self::UNITS.iter().map(|u| *u * *self).collect()
    }

    /// Representative of the associate class lying in the sector of
    /// arguments `[-π/6, π/6)`, i.e. `a > 2b` and `a + b ≥ 0`.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            return *self;
        }
        self.associates()
            .into_iter()
            .find(|x| x.a > 2 * x.b && x.a + x.b >= 0)
            .expect("exactly one associate lies in the canonical sector")
    }

    /// Unit `u` with `other = u·self`, if the two are associates.
    pub fn unit_relating(&self, other: &Self) -> Option<Self> {
        Self::UNITS.into_iter().find(|u| *u * *self == *other)
    }

    pub fn is_associate(&self, other: &Self) -> bool {
        self.unit_relating(other).is_some()
    }
}

fn round_div(num: i128, den: i128) -> i128 {
    debug_assert!(den > 0);
    let q = num.div_euclid(den);
    let r = num.rem_euclid(den);
    // half away from zero
    if 2 * r > den || (2 * r == den && num >= 0) {
        q + 1
    } else {
        q
    }
}

impl Add for EisensteinInteger {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for EisensteinInteger {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for EisensteinInteger {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for EisensteinInteger {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (a, b, c, d) = (self.a, self.b, rhs.a, rhs.b);
        Self::new(a * c - b * d, a * d + b * c - b * d)
    }
}

impl From<i128> for EisensteinInteger {
    fn from(a: i128) -> Self {
        Self::from_int(a)
    }
}

impl fmt::Display for EisensteinInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{}ζ", coefficient(b)),
            (a, b) if b < 0 => write!(f, "{a}-{}ζ", coefficient(-b)),
            (a, b) => write!(f, "{a}+{}ζ", coefficient(b)),
        }
    }
}

fn coefficient(b: i128) -> String {
    match b {
        1 => String::new(),
        -1 => "-".to_string(),
        b => b.to_string(),
    }
}

/// Generator of the ideal `(x, y)`, canonicalized.
pub fn gcd(x: &EisensteinInteger, y: &EisensteinInteger) -> Result<EisensteinInteger> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let (mut u, mut v) = (*x, *y);
    while !v.is_zero() {
        let (_, r) = u.divrem(&v)?;
        (u, v) = (v, r);
    }
    Ok(u.canonical())
}

/// A prime of norm `p` for a rational prime `p ≡ 1 (mod 3)`, built as
/// `gcd(p, r - ζ)` where `r` is a primitive cube root of unity mod `p`.
fn split_prime(p: u64) -> EisensteinInteger {
    debug_assert_eq!(p % 3, 1);
    let r = (2..p)
        .map(|g| pow_mod(g, (p - 1) / 3, p))
        .find(|&r| r != 1)
        .expect("p ≡ 1 (mod 3) has a primitive cube root of unity");
    let pi = gcd(
        &EisensteinInteger::from_int(p as i128),
        &EisensteinInteger::new(r as i128, -1),
    )
    .expect("nonzero arguments");
    debug_assert_eq!(pi.norm(), p as u128);
    pi
}

/// Finds `w` with `norm(w) = t` and `w | target`, returned canonicalized.
///
/// Works prime by prime through the factorization of `t`: the ramified prime
/// 3 contributes `(1-ζ)^v`, inert primes `p ≡ 2 (mod 3)` need an even
/// exponent and contribute `p^(v/2)`, split primes contribute a product
/// `π^i·π̄^(v-i)` that divides `target` (normally `π = gcd(target, p)`).
pub fn divisor_with_norm(target: &EisensteinInteger, t: u64) -> Result<EisensteinInteger> {
    let no_divisor = || Error::NoDivisor {
        target: *target,
        norm: t as u128,
    };
    if t == 0 {
        return Err(no_divisor());
    }
    let mut w = EisensteinInteger::ONE;
    for &(p, v) in &factorize(t).factors {
        let part = if p == 3 {
            EisensteinInteger::RAMIFIED.pow(v)
        } else if p % 3 == 2 {
            if v % 2 == 1 {
                return Err(no_divisor());
            }
            EisensteinInteger::from_int(p as i128).pow(v / 2)
        } else {
            let g = gcd(target, &EisensteinInteger::from_int(p as i128))?;
            let pi = if g.norm() == p as u128 {
                g
            } else {
                split_prime(p)
            };
            (0..=v)
                .rev()
                .map(|i| pi.pow(i) * pi.conj().pow(v - i))
                .find(|cand| cand.divides(target))
                .ok_or_else(no_divisor)?
        };
        if !part.divides(target) {
            return Err(no_divisor());
        }
        w = w * part;
    }
    if w.norm() != t as u128 || !w.divides(target) {
        return Err(no_divisor());
    }
    Ok(w.canonical())
}

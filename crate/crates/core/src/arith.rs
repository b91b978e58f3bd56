//! Integer groundwork: factorization of `u64`, the two canonical shapes of
//! `Δ_n = n² + 3n + 9`, and the Legendre symbol modulo 3.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `|n|` accepted by the field constructions. Keeps `Δ_n` below
/// 10¹⁸ so conductors fit in `u64` and discriminants in `u128`.
pub const MAX_ABS_N: i64 = 1_000_000_000;

/// Prime factorization of a positive integer, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub value: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Multiplies the factors back out.
    pub fn product(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, &(p, v)| acc * p.pow(v))
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, v)| v)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, v)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            if v == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{v}")?;
            }
        }
        Ok(())
    }
}

const SMALL_PRIMES: [u64; 3] = [2, 3, 5];
// offsets of the residues coprime to 30, starting from 7
const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];
const TRIAL_LIMIT: u64 = 1 << 16;

/// Factors `value` completely. Trial division with a mod-30 wheel handles
/// every prime below 2¹⁶; any cofactor left over goes through Miller-Rabin
/// and Pollard-Brent rho.
pub fn factorize(value: u64) -> Factorization {
    assert!(value >= 1, "factorize requires a positive integer");
    let mut rest = value;
    let mut primes: Vec<u64> = Vec::new();

    for p in SMALL_PRIMES {
        while rest % p == 0 {
            primes.push(p);
            rest /= p;
        }
    }
    let mut p = 7u64;
    let mut w = 0;
    while p <= TRIAL_LIMIT && p * p <= rest {
        while rest % p == 0 {
            primes.push(p);
            rest /= p;
        }
        p += WHEEL[w];
        w = (w + 1) % WHEEL.len();
    }
    if rest > 1 {
        if p * p > rest {
            primes.push(rest);
        } else {
            split_large(rest, &mut primes);
        }
    }

    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for q in primes {
        match factors.last_mut() {
            Some((last, v)) if *last == q => *v += 1,
            _ => factors.push((q, 1)),
        }
    }
    Factorization { value, factors }
}

fn split_large(m: u64, out: &mut Vec<u64>) {
    if m == 1 {
        return;
    }
    if is_prime(m) {
        out.push(m);
        return;
    }
    let d = pollard_brent(m);
    split_large(d, out);
    split_large(m / d, out);
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if m % p == 0 {
            return m == p;
        }
    }
    let s = (m - 1).trailing_zeros();
    let d = (m - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, m);
        if x == 1 || x == m - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, m);
            if x == m - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// Brent's variant; m is odd, composite and free of factors below 2^16.
fn pollard_brent(m: u64) -> u64 {
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, m) + c) % m;
        let (mut x, mut y, mut ys) = (2u64, 2u64, 2u64);
        let mut q = 1u64;
        let mut g = 1u64;
        let mut r = 1u64;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), m);
                }
                g = gcd_u64(q, m);
                k += BATCH;
            }
            r *= 2;
        }
        if g == m {
            loop {
                ys = f(ys);
                g = gcd_u64(x.abs_diff(ys), m);
                if g > 1 {
                    break;
                }
            }
        }
        if g != m {
            return g;
        }
    }
    unreachable!("pollard rho exhausted its parameters")
}

/// `Δ_n = n² + 3n + 9` in its two canonical shapes: `b·c³` with `b`
/// cube-free, and `d·e²·c³` with `d`, `e` squarefree and coprime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaDecomposition {
    pub n: i64,
    pub delta: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub e: u64,
    pub factorization: Factorization,
}

/// Checks the admissible parameter range.
pub fn check_parameter(n: i64) -> Result<()> {
    if n.unsigned_abs() > MAX_ABS_N as u64 {
        return Err(Error::ParameterOutOfRange { n, max: MAX_ABS_N });
    }
    Ok(())
}

/// `n² + 3n + 9`. Always positive: the quadratic has negative discriminant.
pub fn delta(n: i64) -> Result<u64> {
    check_parameter(n)?;
    let n = n as i128;
    let value = n * n + 3 * n + 9;
    assert!(value > 0, "Δ_n must be positive");
    Ok(value as u64)
}

pub fn delta_decompose(n: i64) -> Result<DeltaDecomposition> {
    let delta = delta(n)?;
    let factorization = factorize(delta);
    let (mut b, mut c, mut d, mut e) = (1u64, 1u64, 1u64, 1u64);
    for &(p, v) in &factorization.factors {
        c *= p.pow(v / 3);
        b *= p.pow(v % 3);
        match v % 3 {
            1 => d *= p,
            2 => e *= p,
            _ => {}
        }
    }
    debug_assert_eq!(b, d * e * e);
    Ok(DeltaDecomposition {
        n,
        delta,
        b,
        c,
        d,
        e,
        factorization,
    })
}

/// Legendre symbol `(x/3)`: `+1` for `x ≡ 1`, `-1` for `x ≡ 2 (mod 3)`.
pub fn legendre3(x: i128) -> Result<i8> {
    match x.rem_euclid(3) {
        1 => Ok(1),
        2 => Ok(-1),
        _ => Err(Error::DivisibleByThree(x)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_squarefree(m: u64) -> bool {
        factorize(m).factors.iter().all(|&(_, v)| v == 1)
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).factors.is_empty());
        assert_eq!(factorize(56889).factors, vec![(3, 3), (7, 2), (43, 1)]);
        assert_eq!(factorize(8379).factors, vec![(3, 2), (7, 2), (19, 1)]);
        assert_eq!(factorize(56889).to_string(), "3^3·7^2·43");
    }

    #[test]
    fn factorize_beyond_trial_division() {
        // 2^61 - 1 is prime; the products below need the rho path
        let m61 = (1u64 << 61) - 1;
        assert_eq!(factorize(m61).factors, vec![(m61, 1)]);
        let p = 1_000_000_007u64;
        let q = 998_244_353u64;
        assert_eq!(factorize(p * q).factors, vec![(q, 1), (p, 1)]);
        assert_eq!(factorize(p * p).factors, vec![(p, 2)]);
        let big = delta(MAX_ABS_N).unwrap();
        assert_eq!(factorize(big).product(), big);
    }

    #[test]
    fn primality_agrees_with_sieve() {
        let limit = 20_000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (m, &p) in sieve.iter().enumerate() {
            assert_eq!(is_prime(m as u64), p, "{m}");
        }
    }

    #[test]
    fn delta_examples() {
        let d = delta_decompose(237).unwrap();
        assert_eq!((d.delta, d.b, d.c, d.d, d.e), (56889, 2107, 3, 43, 7));
        let d = delta_decompose(54).unwrap();
        assert_eq!((d.delta, d.b, d.c, d.d, d.e), (3087, 9, 7, 1, 3));
        let d = delta_decompose(1).unwrap();
        assert_eq!((d.delta, d.b, d.c, d.d, d.e), (13, 13, 1, 13, 1));
    }

    #[test]
    fn delta_shapes_hold_on_a_range() {
        for n in -2000..=2000 {
            let dd = delta_decompose(n).unwrap();
            let n128 = n as i128;
            assert_eq!(dd.delta as i128, n128 * n128 + 3 * n128 + 9);
            assert_eq!(dd.delta, dd.b * dd.c.pow(3));
            assert_eq!(dd.delta, dd.d * dd.e * dd.e * dd.c.pow(3));
            assert!(factorize(dd.b).factors.iter().all(|&(_, v)| v < 3));
            assert!(is_squarefree(dd.d) && is_squarefree(dd.e));
            assert_eq!(gcd_u64(dd.d, dd.e), 1);
            assert_eq!(dd.delta, delta(-n - 3).unwrap());
        }
    }

    #[test]
    fn parameter_bound_is_enforced() {
        assert!(delta(MAX_ABS_N).is_ok());
        assert!(delta(-MAX_ABS_N).is_ok());
        assert!(matches!(
            delta(MAX_ABS_N + 1),
            Err(Error::ParameterOutOfRange { .. })
        ));
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre3(1).unwrap(), 1);
        assert_eq!(legendre3(2).unwrap(), -1);
        assert_eq!(legendre3(-4).unwrap(), -1);
        assert!(legendre3(-9).is_err());
    }

    proptest::proptest! {
        #[test]
        fn factorize_multiplies_back(m in 1u64..=u64::MAX / 2) {
            let f = factorize(m);
            proptest::prop_assert_eq!(f.product(), m);
            proptest::prop_assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
            proptest::prop_assert!(f.primes().all(is_prime));
        }
    }
}

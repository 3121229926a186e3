//! Scalar abstraction shared by the polynomial kernel, plus integer helpers
//! for square-free decomposition.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

/// Coefficient type of a [`Poly`](crate::Poly).
///
/// Ring operations only need `Num`; division with remainder and gcd assume
/// that `Div` is exact field division, which holds for [`BigRational`] and
/// [`QuadExt`](crate::QuadExt).
pub trait Scalar: Num + Clone + Debug + Neg<Output = Self> + FromPrimitive {}

impl<T> Scalar for T where T: Num + Clone + Debug + Neg<Output = T> + FromPrimitive {}

/// Trial division limit for [`square_free_split`].
const TRIAL_LIMIT: u64 = 2_000_000;

/// Writes `n = s^2 * core` with `core` square-free (sign kept in `core`).
///
/// Returns `None` when `n` is too large to be factored by trial division.
pub fn square_free_split(n: &BigInt) -> Option<(BigInt, BigInt)> {
    if n.is_zero() {
        return Some((BigInt::zero(), BigInt::zero()));
    }
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut m = n.abs();
    let mut square = BigInt::one();
    let mut core = BigInt::one();
    let mut p: u64 = 2;
    loop {
        let pb = BigInt::from(p);
        if &pb * &pb * &pb > m {
            break;
        }
        if p > TRIAL_LIMIT {
            return None;
        }
        let mut e = 0u32;
        while m.is_multiple_of(&pb) {
            m /= &pb;
            e += 1;
        }
        square *= pb.pow(e / 2);
        if e % 2 == 1 {
            core *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // every prime factor of m now exceeds cbrt(m): m is 1, p, p*q or p^2
    let r = m.sqrt();
    if &r * &r == m {
        square *= r;
    } else {
        core *= m;
    }
    Some((square, sign * core))
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &n * &n == *x.numer() && &d * &d == *x.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(xs: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Exact `num/den` string used by the JSON reports.
pub fn exact_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_free_split_examples() {
        let cases = [(12, 2, 3), (-1, 1, -1), (-8, 2, -2), (49, 7, 1), (30, 1, 30), (1, 1, 1)];
        for (n, s, c) in cases {
            let (sq, core) = square_free_split(&BigInt::from(n)).unwrap();
            assert_eq!((sq, core), (BigInt::from(s), BigInt::from(c)), "n = {n}");
        }
        // product of two large primes above the cube root
        let n = BigInt::from(1_000_003i64) * BigInt::from(1_000_033i64);
        let (sq, core) = square_free_split(&n).unwrap();
        assert!(sq.is_one());
        assert_eq!(core, n);
        let n = BigInt::from(1_000_003i64).pow(2) * 5;
        let (sq, core) = square_free_split(&n).unwrap();
        assert_eq!(sq, BigInt::from(1_000_003i64));
        assert_eq!(core, BigInt::from(5));
    }

    #[test]
    fn rational_sqrt_cases() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-4, 1)), None);
        assert_eq!(rational_sqrt(&int(0)), Some(int(0)));
    }
}

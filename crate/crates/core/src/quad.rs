//! Elements `a + b*sqrt(D)` of a quadratic extension of Q.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{fmt_rational, rational_sqrt, square_free_split};

/// Exact element `a + b*sqrt(d)` with `d` square-free.
///
/// A value with `b = 0` is rational and always carries `d = 1`, so it combines
/// with elements of any extension. Mixing two different radicals in one
/// operation panics; use [`QuadExt::common_radicand`] to check first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadExt {
    a: BigRational,
    b: BigRational,
    d: BigInt,
}

impl QuadExt {
    /// Builds `a + b*sqrt(d)`, pulling square factors out of `d`.
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Result<Self> {
        let (s, core) = square_free_split(&d)
            .ok_or_else(|| Error::NotRepresentable(format!("sqrt({d}) is too large to factor")))?;
        let b = b * BigRational::from_integer(s);
        Ok(Self::normalized(a, b, core))
    }

    /// `d` must already be square-free.
    fn normalized(a: BigRational, b: BigRational, d: BigInt) -> Self {
        if b.is_zero() || d.is_zero() {
            return Self::rational(a);
        }
        if d.is_one() {
            return Self::rational(a + b);
        }
        QuadExt { a, b, d }
    }

    pub fn rational(a: BigRational) -> Self {
        QuadExt { a, b: BigRational::zero(), d: BigInt::one() }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_of(d: i64) -> Result<Self> {
        Self::new(BigRational::zero(), BigRational::one(), BigInt::from(d))
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.a.clone())
    }

    /// Radicand of the extension this value needs, `None` for rationals.
    pub fn field(&self) -> Option<&BigInt> {
        (!self.is_rational()).then_some(&self.d)
    }

    pub fn conj(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }

    /// Field norm `a^2 - d*b^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(self.d.clone()) * &self.b * &self.b
    }

    /// The single radicand shared by all irrational values, if any.
    ///
    /// `Ok(None)` means every value is rational.
    pub fn common_radicand<'a>(values: impl IntoIterator<Item = &'a QuadExt>) -> Result<Option<BigInt>> {
        let mut found: Option<&BigInt> = None;
        for v in values {
            if let Some(d) = v.field() {
                match found {
                    None => found = Some(d),
                    Some(f) if f == d => {}
                    Some(f) => return Err(Error::MixedRadicals(f.to_string(), d.to_string())),
                }
            }
        }
        Ok(found.cloned())
    }

    fn join(&self, other: &Self) -> BigInt {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => other.d.clone(),
            (_, true) => self.d.clone(),
            _ if self.d == other.d => self.d.clone(),
            _ => panic!("mixed radicals sqrt({}) and sqrt({})", self.d, other.d),
        }
    }

    /// Square root inside Q or Q(sqrt(d)), when one exists.
    ///
    /// A rational input may land in a new extension Q(sqrt(core)); an
    /// irrational input only has roots in its own field.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_rational() {
            let x = &self.a;
            if x.is_zero() {
                return Some(Self::zero());
            }
            // sqrt(n/d) = sqrt(n*d)/d
            let nd = x.numer() * x.denom();
            let (s, core) = square_free_split(&nd)?;
            let coeff = BigRational::new(s, x.denom().clone());
            return Some(if core.is_one() {
                Self::rational(coeff)
            } else {
                Self::normalized(BigRational::zero(), coeff, core)
            });
        }
        // (x + y sqrt d)^2 = a + b sqrt d  =>  x^2 + d y^2 = a, 2xy = b
        let n = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(BigInt::from(2));
        for cand in [(&self.a + &n) / &two, (&self.a - &n) / &two] {
            if let Some(x) = rational_sqrt(&cand) {
                if x.is_zero() {
                    continue;
                }
                let y = &self.b / (&two * &x);
                let r = Self::normalized(x, y, self.d.clone());
                debug_assert_eq!(&r * &r, *self);
                return Some(r);
            }
        }
        None
    }

    /// Floating-point approximation of a real element; `None` for `d < 0`.
    pub fn to_f64(&self) -> Option<f64> {
        if self.d.is_negative() && !self.b.is_zero() {
            return None;
        }
        let a = self.a.to_f64()?;
        let b = self.b.to_f64()?;
        let d = self.d.to_f64()?;
        Some(a + b * d.sqrt())
    }

    /// Sign used to pick a canonical representative among `±x`.
    pub fn is_positive_canonical(&self) -> bool {
        if !self.a.is_zero() {
            self.a.is_positive()
        } else {
            self.b.is_positive()
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let rad = if self.b.is_one() {
            format!("sqrt({})", self.d)
        } else if (-self.b.clone()).is_one() {
            format!("-sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", fmt_rational(&self.b), self.d)
        };
        if self.a.is_zero() {
            write!(f, "{rad}")
        } else if let Some(stripped) = rad.strip_prefix('-') {
            write!(f, "{} - {}", fmt_rational(&self.a), stripped)
        } else {
            write!(f, "{} + {}", fmt_rational(&self.a), rad)
        }
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order for deterministic sorting only; it is not the real order.
impl Ord for QuadExt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.a
            .cmp(&other.a)
            .then_with(|| self.b.cmp(&other.b))
            .then_with(|| self.d.cmp(&other.d))
    }
}

impl From<BigRational> for QuadExt {
    fn from(a: BigRational) -> Self {
        Self::rational(a)
    }
}

impl From<i64> for QuadExt {
    fn from(a: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(a)))
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        Self::rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        Self::rational(BigRational::one())
    }
}

impl<'a> Add<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        let d = self.join(rhs);
        QuadExt::normalized(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl<'a> Sub<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        let d = self.join(rhs);
        QuadExt::normalized(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl<'a> Mul<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        let d = self.join(rhs);
        let dr = BigRational::from_integer(d.clone());
        let a = &self.a * &rhs.a + dr * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadExt::normalized(a, b, d)
    }
}

impl<'a> Div<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn div(self, rhs: &QuadExt) -> QuadExt {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in QuadExt");
        let num = self * &rhs.conj();
        QuadExt::normalized(num.a / &n, num.b / &n, num.d)
    }
}

impl<'a> Rem<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    /// Remainder in a field: always zero.
    fn rem(self, rhs: &QuadExt) -> QuadExt {
        assert!(!rhs.is_zero(), "remainder by zero in QuadExt");
        QuadExt::zero()
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $m(self, rhs: QuadExt) -> QuadExt { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $m(self, rhs: &QuadExt) -> QuadExt { (&self).$m(rhs) }
        }
        impl<'a> $tr<QuadExt> for &'a QuadExt {
            type Output = QuadExt;
            fn $m(self, rhs: QuadExt) -> QuadExt { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div, Rem::rem);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { a: -self.a, b: -self.b, d: self.d }
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -self.clone()
    }
}

impl Num for QuadExt {
    type FromStrRadixErr = num_rational::ParseRatioError;
    /// Parses rationals only.
    fn from_str_radix(s: &str, radix: u32) -> std::result::Result<Self, Self::FromStrRadixErr> {
        BigRational::from_str_radix(s, radix).map(Self::rational)
    }
}

impl FromPrimitive for QuadExt {
    fn from_i64(n: i64) -> Option<Self> {
        BigRational::from_i64(n).map(Self::rational)
    }
    fn from_u64(n: u64) -> Option<Self> {
        BigRational::from_u64(n).map(Self::rational)
    }
}

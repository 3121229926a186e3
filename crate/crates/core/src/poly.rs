//! Dense univariate polynomials in `t`, generic over the coefficient scalar.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quad::QuadExt;
use crate::scalar::Scalar;

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// `self <= bound` where `bound` may be negative.
    pub fn at_most(self, bound: i64) -> bool {
        match self {
            Degree::NegInfinity => true,
            Degree::Finite(d) => (d as i64) <= bound,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Polynomial with coefficients stored by ascending power of `t`.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `c * t^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `t - root`.
    pub fn linear_root(root: T) -> Self {
        Self::new(vec![-root, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as an option, `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.degree().finite()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_usize(k).expect("degree fits the scalar"))
                .collect(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = T::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `self(g(t))`.
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * g) + &Self::constant(c.clone()))
    }

    /// `self(t + a)`.
    pub fn shift(&self, a: &T) -> Self {
        self.compose(&Self::new(vec![a.clone(), T::one()]))
    }

    /// Division with remainder: `self = q*g + r`, `deg r < deg g`.
    pub fn div_rem(&self, g: &Self) -> Result<(Self, Self)> {
        let lg = g.leading().ok_or(Error::DivisionByZeroPolynomial)?.clone();
        let dg = g.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![T::zero(); r.len() - dg];
        for k in (0..q.len()).rev() {
            let c = r[k + dg].clone() / lg.clone();
            if !c.is_zero() {
                for (j, gc) in g.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].clone() - c.clone() * gc.clone();
                }
            }
            q[k] = c;
        }
        r.truncate(dg);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Quotient when `g` divides `self` exactly, `None` otherwise.
    pub fn exact_div(&self, g: &Self) -> Result<Option<Self>> {
        let (q, r) = self.div_rem(g)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, f: &Self) -> bool {
        !self.is_zero() && f.exact_div(self).map(|q| q.is_some()).unwrap_or(false)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, g: &Self) -> Result<Self> {
        if self.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), g.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            // keep intermediate coefficients small
            b = r.monic();
        }
        Ok(a.monic())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl Poly<BigRational> {
    /// Lifts into the quadratic-extension coefficient ring.
    pub fn to_quad(&self) -> Poly<QuadExt> {
        self.map(|c| QuadExt::rational(c.clone()))
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }
}

impl Poly<QuadExt> {
    /// Rational polynomial when every coefficient is rational.
    pub fn to_rational(&self) -> Option<Poly<BigRational>> {
        self.coeffs
            .iter()
            .map(QuadExt::to_rational)
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }

    /// Single radicand shared by the irrational coefficients.
    pub fn field(&self) -> Result<Option<BigInt>> {
        QuadExt::common_radicand(&self.coeffs)
    }
}

impl<T: Scalar> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Poly<T> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<'a, T: Scalar> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a, T: Scalar> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a, T: Scalar> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<T: Scalar> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> { (&self).$m(&rhs) }
        }
        impl<'a, T: Scalar> $tr<&'a Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: &Poly<T>) -> Poly<T> { (&self).$m(rhs) }
        }
        impl<'a, T: Scalar> $tr<Poly<T>> for &'a Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.into_iter().map(Neg::neg).collect() }
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -self.clone()
    }
}

//! Sparse multivariate polynomials over Q in variables `x0..xm`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::fmt_rational;

/// Exponent vector, indexed by variable.
///
/// Ordered lexicographically with `x0 < x1 < ... < xm`: the exponent of the
/// highest-indexed variable is compared first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other | self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// The variable `i` when the monomial is `xi^k` with `k > 0`.
    pub fn pure_power(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Highest-indexed variable with a positive exponent.
    pub fn top_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Polynomial with no stored zero coefficients; the leading term is the
/// largest key.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let nvars = m.0.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, lc)) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    /// `self - c * m * g`, with the result's terms merged in place.
    pub fn sub_mul_term(&mut self, m: &Monomial, c: &BigRational, g: &MultiPoly) {
        for (k, v) in &g.terms {
            let key = k.mul(m);
            let delta = v * c;
            match self.terms.get_mut(&key) {
                Some(slot) => {
                    *slot -= delta;
                    if slot.is_zero() {
                        self.terms.remove(&key);
                    }
                }
                None => {
                    self.terms.insert(key, -delta);
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn mul(&self, other: &MultiPoly) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &other.terms {
            for (k, v) in &self.terms {
                out.add_term(k.mul(m), v * c);
            }
        }
        out
    }

    /// Evaluates at a point given by a closure returning each variable's
    /// value.
    pub fn eval_with<T>(&self, value: impl Fn(usize, u32) -> T) -> T
    where
        T: Clone + Zero + One + std::ops::Mul<Output = T> + From<BigRational>,
    {
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = T::from(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t * value(i, e);
                }
            }
            acc = acc + t;
        }
        acc
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in descending order without spaces, e.g. `3*x3^2-24*x3+36`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let a = c.abs();
            if m.is_one() {
                f.write_str(&fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&a))?;
            }
        }
        Ok(())
    }
}

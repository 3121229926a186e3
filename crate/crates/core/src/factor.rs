//! Square-free decomposition and root extraction over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::quad::QuadExt;
use crate::scalar::{denominator_lcm, Scalar};
use crate::{Poly, QPoly};

/// `content * prod(factor_i ^ multiplicity_i)` with monic, square-free,
/// pairwise coprime factors, ordered by multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition<T = BigRational> {
    pub content: T,
    pub factors: Vec<(Poly<T>, u32)>,
}

impl<T: Scalar> SquarefreeDecomposition<T> {
    pub fn expand(&self) -> Poly<T> {
        self.factors
            .iter()
            .fold(Poly::constant(self.content.clone()), |acc, (f, m)| &acc * &f.pow(*m))
    }
}

/// Yun's algorithm.
pub fn squarefree_factor<T: Scalar>(f: &Poly<T>) -> Result<SquarefreeDecomposition<T>> {
    let content = f.leading().ok_or(Error::DivisionByZeroPolynomial)?.clone();
    let f = f.monic();
    let mut factors = Vec::new();
    if f.is_constant() {
        return Ok(SquarefreeDecomposition { content, factors });
    }
    let df = f.derivative();
    let a0 = f.gcd(&df)?;
    let mut b = exact(&f, &a0);
    let mut c = exact(&df, &a0);
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d)?;
        if !a.is_constant() {
            factors.push((a.clone(), i));
        }
        b = exact(&b, &a);
        c = exact(&d, &a);
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(SquarefreeDecomposition { content, factors })
}

fn exact<T: Scalar>(f: &Poly<T>, g: &Poly<T>) -> Poly<T> {
    f.exact_div(g)
        .expect("divisor is nonzero")
        .expect("gcd divides its arguments")
}

/// Integer coefficients with gcd 1 and positive leading coefficient.
pub fn primitive_integer_form(f: &QPoly) -> Vec<BigInt> {
    let l = denominator_lcm(f.coeffs());
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = if ints.last().is_some_and(|x| x.is_negative()) { -BigInt::one() } else { BigInt::one() };
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

/// Positive divisors of `n != 0`, by trial division.
fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut m = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut e = 0;
        while m.is_multiple_of(&p) {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1;
    }
    if !m.is_one() {
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Distinct rational roots of a square-free polynomial, ascending.
fn simple_rational_roots(f: &QPoly) -> Vec<BigRational> {
    let mut roots = Vec::new();
    let mut ints = primitive_integer_form(f);
    // strip the root at zero first so the constant term is nonzero
    let zeros = ints.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push(BigRational::zero());
        ints.drain(..zeros);
    }
    if ints.len() > 1 {
        let g = QPoly::new(ints.iter().cloned().map(BigRational::from_integer).collect());
        let lead = ints.last().expect("nonconstant");
        let tail = &ints[0];
        let num_divs = positive_divisors(tail);
        let den_divs = positive_divisors(lead);
        for p in &num_divs {
            for q in &den_divs {
                if !p.gcd(q).is_one() {
                    continue;
                }
                for s in [p.clone(), -p.clone()] {
                    let x = BigRational::new(s, q.clone());
                    if g.eval(&x).is_zero() {
                        roots.push(x);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Every rational root with its multiplicity, ascending by root.
pub fn rational_roots(f: &QPoly) -> Result<Vec<(BigRational, u32)>> {
    let sqf = squarefree_factor(f)?;
    let mut out: Vec<(BigRational, u32)> = sqf
        .factors
        .iter()
        .flat_map(|(g, m)| simple_rational_roots(g).into_iter().map(move |r| (r, *m)))
        .collect();
    out.sort();
    Ok(out)
}

/// Some quadratic factor over Q of `f`, found from the divisors of `f(0)`,
/// `f(1)` and the leading coefficient. Assumes `f` has no rational roots.
pub fn quadratic_factor(f: &QPoly) -> Option<QPoly> {
    if f.deg()? < 4 {
        return None;
    }
    let ints = primitive_integer_form(f);
    let g = QPoly::new(ints.iter().cloned().map(BigRational::from_integer).collect());
    let at = |x: i64| g.eval(&BigRational::from_integer(BigInt::from(x))).to_integer();
    let (h0, h1, hm1) = (at(0), at(1), at(-1));
    if h0.is_zero() || h1.is_zero() || hm1.is_zero() {
        return None;
    }
    let signed = |n: &BigInt| -> Vec<BigInt> {
        positive_divisors(n).into_iter().flat_map(|d| [d.clone(), -d]).collect()
    };
    let lead_divs = positive_divisors(ints.last().expect("nonconstant"));
    let c_divs = signed(&h0);
    let v_divs = signed(&h1);
    for a in &lead_divs {
        for c in &c_divs {
            for v in &v_divs {
                let b = v - a - c;
                // the factor's value at -1 must divide f(-1)
                let w = a - &b + c;
                if w.is_zero() || !hm1.is_multiple_of(&w) {
                    continue;
                }
                let q = QPoly::new(vec![c.clone(), b, a.clone()].into_iter().map(BigRational::from_integer).collect());
                if q.divides(&g) {
                    return Some(q.monic());
                }
            }
        }
    }
    None
}

/// Exact roots of `a*x^2 + b*x + c` in Q or a quadratic extension.
///
/// The linear case `a = 0` returns at most one root.
pub fn quad_roots(a: &BigRational, b: &BigRational, c: &BigRational) -> Result<Vec<QuadExt>> {
    if a.is_zero() {
        if b.is_zero() {
            return if c.is_zero() { Err(Error::DegenerateQuadratic) } else { Ok(vec![]) };
        }
        return Ok(vec![QuadExt::rational(-c / b)]);
    }
    let disc = b * b - BigRational::from_integer(BigInt::from(4)) * a * c;
    let two_a = a * BigRational::from_integer(BigInt::from(2));
    let sq = QuadExt::rational(disc.clone())
        .sqrt()
        .ok_or_else(|| Error::NotRepresentable(format!("sqrt of discriminant {disc}")))?;
    let base = QuadExt::rational(-b / &two_a);
    let delta = &sq / &QuadExt::rational(two_a);
    if delta.is_zero() {
        return Ok(vec![base]);
    }
    let mut roots = vec![&base - &delta, &base + &delta];
    roots.sort();
    Ok(roots)
}

/// Roots of a quadratic whose coefficients may lie in Q(sqrt d).
pub fn quad_roots_ext(a: &QuadExt, b: &QuadExt, c: &QuadExt) -> Result<Vec<QuadExt>> {
    QuadExt::common_radicand([a, b, c])?;
    if a.is_zero() {
        if b.is_zero() {
            return if c.is_zero() { Err(Error::DegenerateQuadratic) } else { Ok(vec![]) };
        }
        return Ok(vec![-(c / b)]);
    }
    if let (Some(a), Some(b), Some(c)) = (a.to_rational(), b.to_rational(), c.to_rational()) {
        return quad_roots(&a, &b, &c);
    }
    let four = QuadExt::from(4);
    let disc = &(b * b) - &(&four * &(a * c));
    let sq = disc
        .sqrt()
        .ok_or_else(|| Error::NotRepresentable(format!("sqrt of {disc}")))?;
    QuadExt::common_radicand([a, &sq])?;
    let two_a = a * &QuadExt::from(2);
    let base = -(b / &two_a);
    let delta = &sq / &two_a;
    if delta.is_zero() {
        return Ok(vec![base]);
    }
    let mut roots = vec![&base - &delta, &base + &delta];
    roots.sort();
    Ok(roots)
}

//! Back-substitution through a zero-dimensional lex Gröbner basis.

use num_bigint::BigInt;
use num_traits::Zero;

use super::multipoly::MultiPoly;
use super::IdealBasis;
use crate::error::{Error, Result};
use crate::factor::{quad_roots, quadratic_factor, rational_roots};
use crate::{Poly, QPoly, QuadExt, QuadPoly};

/// Points of a zero-dimensional variety over Q or one quadratic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDimSolution {
    /// Coordinates `(x0, ..., xm)`, sorted.
    pub points: Vec<Vec<QuadExt>>,
    /// Partial solutions dropped because a coordinate needs an extension
    /// of degree three or more, or a second quadratic field.
    pub unresolved: usize,
}

impl ZeroDimSolution {
    pub fn is_complete(&self) -> bool {
        self.unresolved == 0
    }

    /// Which points the list covers.
    pub fn complete_over(&self) -> String {
        if self.unresolved == 0 {
            "all points".to_string()
        } else {
            format!(
                "points over Q and single quadratic fields; {} partial solutions need larger extensions",
                self.unresolved
            )
        }
    }
}

/// Roots of `f` in Q or in the quadratic field of its coefficients, and the
/// number of roots of its square-free part left out.
pub fn field_roots(f: &QuadPoly) -> Result<(Vec<QuadExt>, usize)> {
    let g = match f.gcd(&f.derivative()) {
        Ok(h) if !h.is_constant() => f.exact_div(&h)?.expect("gcd divides"),
        _ => f.clone(),
    };
    let Some(deg) = g.deg() else { return Ok((vec![], 0)) };
    let field = g.field()?;
    let norm: QPoly = match g.to_rational() {
        Some(r) => r,
        None => (&g * &g.map(QuadExt::conj)).to_rational().expect("norm is rational"),
    };
    let mut candidates: Vec<QuadExt> = Vec::new();
    let mut rest = norm.clone();
    for (r, _) in rational_roots(&norm)? {
        let lin = QPoly::linear_root(r.clone());
        rest = rest.exact_div(&lin)?.expect("root divides");
        candidates.push(QuadExt::rational(r));
    }
    loop {
        let q = match rest.deg() {
            Some(2) => rest.clone(),
            _ => match quadratic_factor(&rest) {
                Some(q) => q,
                None => break,
            },
        };
        let c = q.coeffs();
        candidates.extend(quad_roots(&c[2], &c[1], &c[0])?);
        rest = rest.exact_div(&q)?.expect("factor divides");
    }
    let mut roots: Vec<QuadExt> = candidates
        .into_iter()
        .filter(|r| compatible(field.as_ref(), r) && g.eval(r).is_zero())
        .collect();
    roots.sort();
    roots.dedup();
    let missing = deg - roots.len();
    Ok((roots, missing))
}

fn compatible(field: Option<&BigInt>, x: &QuadExt) -> bool {
    match (field, x.field()) {
        (Some(d), Some(e)) => d == e,
        _ => true,
    }
}

/// `f(a_0, ..., a_{k-1}, t)` as a univariate polynomial in `t = x_k`.
fn specialize(f: &MultiPoly, point: &[QuadExt], k: usize) -> QuadPoly {
    let mut coeffs: Vec<QuadExt> = Vec::new();
    for (m, c) in f.terms() {
        let e = m.exponents();
        let mut v = QuadExt::rational(c.clone());
        for (i, a) in point.iter().enumerate() {
            if e[i] > 0 {
                v = &v * &num_traits::pow(a.clone(), e[i] as usize);
            }
        }
        let d = e[k] as usize;
        if coeffs.len() <= d {
            coeffs.resize(d + 1, QuadExt::zero());
        }
        coeffs[d] = &coeffs[d] + &v;
    }
    Poly::new(coeffs)
}

/// All points of the variety of a zero-dimensional ideal whose coordinates
/// lie in Q or in one quadratic field.
pub fn solve_zero_dim(basis: &IdealBasis) -> Result<ZeroDimSolution> {
    let g = basis.groebner.as_ref().ok_or(Error::NoGroebnerBasis)?;
    let nvars = basis.nvars;
    if g.iter().any(MultiPoly::is_constant) {
        return Ok(ZeroDimSolution { points: vec![], unresolved: 0 });
    }
    for i in 0..nvars {
        if !g.iter().any(|f| f.leading_monomial().and_then(|m| m.pure_power()) == Some(i)) {
            return Err(Error::PositiveDimensional(i));
        }
    }
    let mut partial: Vec<Vec<QuadExt>> = vec![vec![]];
    let mut unresolved = 0;
    for k in 0..nvars {
        let level: Vec<&MultiPoly> =
            g.iter().filter(|f| f.leading_monomial().and_then(|m| m.top_var()) == Some(k)).collect();
        let mut next = Vec::new();
        for point in &partial {
            let field = QuadExt::common_radicand(point.iter())?;
            let mut h = QuadPoly::zero();
            for f in &level {
                let u = specialize(f, point, k);
                if !u.is_zero() {
                    h = if h.is_zero() { u } else { h.gcd(&u)? };
                }
            }
            let (roots, missing) = field_roots(&h)?;
            unresolved += missing;
            for r in roots {
                if compatible(field.as_ref(), &r) {
                    let mut p = point.clone();
                    p.push(r);
                    next.push(p);
                } else {
                    unresolved += 1;
                }
            }
        }
        partial = next;
    }
    partial.sort();
    partial.dedup();
    for p in &partial {
        for f in &basis.generators {
            assert!(eval_point(f, p).is_zero(), "point does not satisfy generator {f}");
        }
    }
    Ok(ZeroDimSolution { points: partial, unresolved })
}

/// `f` evaluated at a point over one field.
pub fn eval_point(f: &MultiPoly, point: &[QuadExt]) -> QuadExt {
    f.eval_with(|i, e| num_traits::pow(point[i].clone(), e as usize))
}

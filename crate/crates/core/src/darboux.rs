//! Darboux first integrals `x^a0 * prod (1 + p_i x)^a_i` built from
//! invariant curves, and the global counting theorems.
//!
//! The cofactor of `1 + p x = 0` is `A x^2 + p' x` and that of `x = 0` is
//! `A x^2 + B x`. A product of powers is a first integral iff the weighted
//! cofactors cancel, which reduces to `sum a_i A / p_i = 0`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::invariant::AbelEquation;
use crate::linalg::{echelon, nullspace};
use crate::poly::Degree;
use crate::quad::QuadExt;
use crate::scalar::denominator_lcm;
use crate::QuadPoly;

/// `quad * x^2 + lin * x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cofactor {
    pub quad: QuadPoly,
    pub lin: QuadPoly,
}

/// Cofactor of the curve `1 + p x = 0`.
pub fn cofactor(eq: &AbelEquation, p: &QuadPoly) -> Result<Cofactor> {
    if !eq.is_invariant(p)? {
        return Err(Error::NotInvariant(p.to_string()));
    }
    Ok(Cofactor { quad: eq.a().to_quad(), lin: p.derivative() })
}

/// Cofactor of the curve `x = 0`.
pub fn cofactor_zero(eq: &AbelEquation) -> Cofactor {
    Cofactor { quad: eq.a().to_quad(), lin: eq.b().to_quad() }
}

/// `x^alpha0 * prod (1 + p_i x)^alpha_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarbouxIntegral {
    alphas: Vec<QuadExt>,
    alpha0: QuadExt,
    curves: Vec<QuadPoly>,
}

impl DarbouxIntegral {
    /// Exponents for the given curves; `alpha0 = -sum alpha_i`.
    pub fn new(alphas: Vec<QuadExt>, curves: Vec<QuadPoly>) -> Result<Self> {
        if alphas.iter().all(Zero::is_zero) {
            return Err(Error::ZeroExponents);
        }
        if alphas.len() != curves.len() {
            return Err(Error::Domain(format!("{} exponents for {} curves", alphas.len(), curves.len())));
        }
        QuadExt::common_radicand(&alphas)?;
        let alpha0 = -alphas.iter().fold(QuadExt::zero(), |acc, a| &acc + a);
        Ok(DarbouxIntegral { alphas, alpha0, curves })
    }

    /// Explicit `alpha0`, not necessarily `-sum alpha_i`.
    pub fn with_alpha0(alphas: Vec<QuadExt>, alpha0: QuadExt, curves: Vec<QuadPoly>) -> Result<Self> {
        let mut d = Self::new(alphas, curves)?;
        d.alpha0 = alpha0;
        Ok(d)
    }

    pub fn alphas(&self) -> &[QuadExt] {
        &self.alphas
    }

    pub fn alpha0(&self) -> &QuadExt {
        &self.alpha0
    }

    pub fn curves(&self) -> &[QuadPoly] {
        &self.curves
    }

    /// Indices of the curves with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.alphas.len()).filter(|&i| !self.alphas[i].is_zero()).collect()
    }

    /// Rational exponents scaled to coprime integers, first nonzero positive;
    /// irrational exponents scaled so the first nonzero one is 1.
    fn normalized(mut self) -> Self {
        let first = self.alphas.iter().find(|a| !a.is_zero()).cloned().expect("nonzero");
        let factor = match self.alphas.iter().map(QuadExt::to_rational).collect::<Option<Vec<_>>>() {
            Some(rs) => {
                let l = denominator_lcm(&rs);
                let ints: Vec<BigInt> = rs.iter().map(|r| (r * BigRational::from_integer(l.clone())).to_integer()).collect();
                let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
                let mut f = BigRational::new(l, g);
                if first.rational_part().is_negative() {
                    f = -f;
                }
                QuadExt::rational(f)
            }
            None => &QuadExt::one() / &first,
        };
        for a in &mut self.alphas {
            *a = &*a * &factor;
        }
        self.alpha0 = &self.alpha0 * &factor;
        self
    }
}

fn power(base: &str, e: &QuadExt) -> String {
    if e.is_one() {
        base.to_string()
    } else if e.is_rational() && !e.rational_part().is_negative() {
        format!("{base}^{e}")
    } else {
        format!("{base}^({e})")
    }
}

impl fmt::Display for DarbouxIntegral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.alpha0.is_zero() {
            parts.push(power("x", &self.alpha0));
        }
        for (a, p) in self.alphas.iter().zip(&self.curves) {
            if !a.is_zero() {
                parts.push(power(&format!("(1 + ({p})*x)"), a));
            }
        }
        f.write_str(&parts.join("*"))
    }
}

/// `A / p_i` for every curve; fails on a non-invariant curve.
pub fn r_polys(eq: &AbelEquation, curves: &[QuadPoly]) -> Result<Vec<QuadPoly>> {
    let a = eq.a().to_quad();
    curves
        .iter()
        .map(|p| {
            if !eq.is_invariant(p)? {
                return Err(Error::NotInvariant(p.to_string()));
            }
            Ok(a.exact_div(p)?.expect("invariant curves divide A"))
        })
        .collect()
}

/// Matrix whose column `i` holds the coefficients of `rs[i]`, rows in
/// ascending powers of `t`.
pub fn coefficient_matrix(rs: &[QuadPoly]) -> Result<Vec<Vec<QuadExt>>> {
    QuadExt::common_radicand(rs.iter().flat_map(|r| r.coeffs()))?;
    let rows = rs.iter().map(|r| r.coeffs().len()).max().unwrap_or(0);
    Ok((0..rows).map(|k| rs.iter().map(|r| r.coeff(k)).collect()).collect())
}

/// Basis of all exponent vectors with `sum alpha_i A / p_i = 0`; empty when
/// the `A / p_i` are linearly independent.
pub fn darboux_exponents(eq: &AbelEquation, curves: &[QuadPoly]) -> Result<Vec<DarbouxIntegral>> {
    let rs = r_polys(eq, curves)?;
    let m = coefficient_matrix(&rs)?;
    let mut out = Vec::new();
    for v in nullspace(&m, curves.len()) {
        let integral = DarbouxIntegral::new(v, curves.to_vec())?.normalized();
        assert!(combination_vanishes(&rs, integral.alphas()), "nullspace vector fails the identity");
        out.push(integral);
    }
    Ok(out)
}

fn combination_vanishes(rs: &[QuadPoly], alphas: &[QuadExt]) -> bool {
    rs.iter()
        .zip(alphas)
        .fold(QuadPoly::zero(), |acc, (r, a)| &acc + &r.scale(a))
        .is_zero()
}

/// The integral of smallest support; ties go to the lexicographically
/// smallest normalized exponent vector.
pub fn preferred_integral(eq: &AbelEquation, curves: &[QuadPoly]) -> Result<Option<DarbouxIntegral>> {
    let rs = r_polys(eq, curves)?;
    let m = coefficient_matrix(&rs)?;
    let r = curves.len();
    let total_rank = echelon(&m).1.len();
    if total_rank == r {
        return Ok(None);
    }
    // a dependency needs at most rank + 1 curves
    for size in 1..=(total_rank + 1).min(r) {
        let mut best: Option<DarbouxIntegral> = None;
        for subset in Subsets::new(r, size) {
            let sub: Vec<Vec<QuadExt>> = m.iter().map(|row| subset.iter().map(|&i| row[i].clone()).collect()).collect();
            let ns = nullspace(&sub, size);
            if ns.len() != 1 {
                continue;
            }
            let mut alphas = vec![QuadExt::zero(); r];
            for (&i, a) in subset.iter().zip(&ns[0]) {
                alphas[i] = a.clone();
            }
            let cand = DarbouxIntegral::new(alphas, curves.to_vec())?.normalized();
            if cand.support().len() != size {
                continue;
            }
            if best.as_ref().is_none_or(|b| cand.alphas < b.alphas) {
                best = Some(cand);
            }
        }
        if best.is_some() {
            return Ok(best);
        }
    }
    unreachable!("rank deficiency implies a dependency of size at most rank + 1")
}

/// `size`-element subsets of `0..n` in lexicographic order.
struct Subsets {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Subsets {
    fn new(n: usize, size: usize) -> Self {
        Subsets { n, cur: (size <= n).then(|| (0..size).collect()) }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in (i + 1)..k {
                    next[j] = next[j - 1] + 1;
                }
                self.cur = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// True iff `alpha0 K_0 + sum alpha_i K_i` vanishes identically in `(t, x)`.
pub fn verify_first_integral(eq: &AbelEquation, integral: &DarbouxIntegral) -> bool {
    let sum = integral.alphas.iter().fold(QuadExt::zero(), |acc, a| &acc + a);
    let x2 = &integral.alpha0 + &sum;
    if !x2.is_zero() {
        return false;
    }
    let mut x1 = eq.b().to_quad().scale(&integral.alpha0);
    for (a, p) in integral.alphas.iter().zip(&integral.curves) {
        match cofactor(eq, p) {
            Ok(k) => x1 = &x1 + &k.lin.scale(a),
            Err(_) => return false,
        }
    }
    x1.is_zero()
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

/// Upper bound on the number of invariant curves of positive degree: 2
/// when `n` is even or `deg B > (n-1)/2`, else `C(n, (n+1)/2) + 1`.
pub fn max_curve_bound(n: usize, deg_b: Degree) -> BigUint {
    let big_b = matches!(deg_b, Degree::Finite(k) if 2 * k + 1 > n);
    if n % 2 == 0 || big_b {
        BigUint::from(2u32)
    } else {
        binomial(n, n.div_ceil(2)) + BigUint::one()
    }
}

/// More than `(n+1)/2` curves of positive degree force a Darboux integral
/// (for `n >= 3`). Returns false only if that fails.
pub fn theorem_c_check(eq: &AbelEquation, curves: &[QuadPoly], integrals: &[DarbouxIntegral]) -> bool {
    let n = eq.n();
    if n < 3 {
        return true;
    }
    let count = curves.iter().filter(|p| !p.is_constant()).count();
    2 * count <= n + 1 || !integrals.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::determinant;
    use crate::parse::{parse_poly, parse_poly_ext};
    use crate::scalar::rat;

    fn eq(a: &str, b: &str) -> AbelEquation {
        AbelEquation::new(parse_poly(a).unwrap(), parse_poly(b).unwrap()).unwrap()
    }

    fn qp(s: &str) -> QuadPoly {
        parse_poly_ext(s).unwrap()
    }

    fn qs(xs: &[i64]) -> Vec<QuadExt> {
        xs.iter().map(|&x| QuadExt::from(x)).collect()
    }

    fn cubic() -> (AbelEquation, Vec<QuadPoly>) {
        let e = eq("2*t*(t+1)*(2*t+1)", "6*t+3");
        let cs = ["t^2+t", "2*t^2+t", "2*t^2+3*t+1", "2*t^2+2*t"].iter().map(|s| qp(s)).collect();
        (e, cs)
    }

    #[test]
    fn cofactors() {
        let e = eq("4*(t-1)*t*(t+1)*(3*t-1)*(3*t+2)", "6*(4*t^2+t-1)");
        let k = cofactor(&e, &qp("2*t^3-2*t")).unwrap();
        assert_eq!(k.lin, qp("6*t^2-2"));
        assert_eq!(k.quad, e.a().to_quad());
        assert_eq!(cofactor_zero(&e).lin, e.b().to_quad());
        assert!(matches!(cofactor(&e, &qp("t")), Err(Error::NotInvariant(_))));
        let (e, cs) = cubic();
        assert_eq!(cofactor(&e, &cs[0]).unwrap().lin, qp("2*t+1"));
    }

    #[test]
    fn example_4_4_is_independent() {
        let e = eq("4*(t-1)*t*(t+1)*(3*t-1)*(3*t+2)", "6*(4*t^2+t-1)");
        let cs: Vec<_> = ["6*t^3+4*t^2-6*t-4", "6*t^3+4*t^2-2*t", "2*t^3-2*t"].iter().map(|s| qp(s)).collect();
        let rs = r_polys(&e, &cs).unwrap();
        assert_eq!(rs, vec![qp("6*t^2-2*t"), qp("6*t^2-2*t-4"), qp("18*t^2+6*t-4")]);
        // rows r_i, columns t^2, t, 1
        let desc: Vec<Vec<QuadExt>> = rs.iter().map(|r| (0..3).rev().map(|k| r.coeff(k)).collect()).collect();
        assert_eq!(determinant(&desc), QuadExt::from(288));
        assert!(darboux_exponents(&e, &cs).unwrap().is_empty());
        assert_eq!(preferred_integral(&e, &cs).unwrap(), None);
    }

    #[test]
    fn cubic_instance_integral() {
        let (e, cs) = cubic();
        let rs = r_polys(&e, &cs).unwrap();
        assert_eq!(rs, vec![qp("4*t+2"), qp("2*t+2"), qp("2*t"), qp("2*t+1")]);
        let basis = darboux_exponents(&e, &cs).unwrap();
        assert_eq!(basis.len(), 2);
        assert!(basis.iter().all(|d| verify_first_integral(&e, d)));
        let best = preferred_integral(&e, &cs).unwrap().unwrap();
        assert_eq!(best.alphas(), qs(&[1, 0, 0, -2]).as_slice());
        assert_eq!(best.alpha0(), &QuadExt::from(1));
        assert!(verify_first_integral(&e, &best));
        assert_eq!(best.to_string(), "x*(1 + (t^2 + t)*x)*(1 + (2*t^2 + 2*t)*x)^(-2)");

        let broken = DarbouxIntegral::new(
            vec![QuadExt::from(1), QuadExt::from(0), QuadExt::from(0), QuadExt::rational(rat(-19, 10))],
            cs.clone(),
        )
        .unwrap();
        assert!(!verify_first_integral(&e, &broken));
        let wrong_alpha0 = DarbouxIntegral::with_alpha0(qs(&[1, 0, 0, -2]), QuadExt::from(2), cs.clone()).unwrap();
        assert!(!verify_first_integral(&e, &wrong_alpha0));
        assert_eq!(DarbouxIntegral::new(qs(&[0, 0, 0, 0]), cs), Err(Error::ZeroExponents));
    }

    #[test]
    fn single_curve_has_no_integral() {
        let e = eq("2*t", "3");
        assert!(darboux_exponents(&e, &[qp("t")]).unwrap().is_empty());
        // the proportional pair is dependent: A/t = 2, A/(2t) = 1
        let d = preferred_integral(&e, &[qp("t"), qp("2*t")]).unwrap().unwrap();
        assert_eq!(d.alphas(), qs(&[1, -2]).as_slice());
    }

    #[test]
    fn gaussian_curves() {
        let e = eq("t", "0");
        let cs = vec![qp("-sqrt(-1)*t"), qp("sqrt(-1)*t")];
        let d = preferred_integral(&e, &cs).unwrap().unwrap();
        assert_eq!(d.alphas(), qs(&[1, 1]).as_slice());
        assert_eq!(d.alpha0(), &QuadExt::from(-2));
        assert!(verify_first_integral(&e, &d));
    }

    #[test]
    fn bounds() {
        let f = |n, k: i64| {
            let d = if k < 0 { Degree::NegInfinity } else { Degree::Finite(k as usize) };
            max_curve_bound(n, d)
        };
        assert_eq!(f(5, 2), BigUint::from(11u32));
        assert_eq!(f(4, 0), BigUint::from(2u32));
        assert_eq!(f(3, 2), BigUint::from(2u32));
        assert_eq!(f(3, 1), BigUint::from(4u32));
        assert_eq!(f(7, 3), BigUint::from(36u32));
        assert_eq!(f(7, -1), BigUint::from(36u32));
        assert_eq!(f(1, 0), BigUint::from(2u32));
    }

    #[test]
    fn theorem_c_examples() {
        let e = eq("18*t^5-20*t^3+2*t", "15*t^2-3");
        let cs: Vec<_> = ["2*t^3-2*t", "3*t^3+2*t^2-t", "3*t^3-2*t^2-t", "3*t^3-t^2-3*t+1", "3*t^3+t^2-3*t-1"]
            .iter()
            .map(|s| qp(s))
            .collect();
        let basis = darboux_exponents(&e, &cs).unwrap();
        assert!(basis.len() >= 2);
        assert!(theorem_c_check(&e, &cs, &basis));
        assert!(!theorem_c_check(&e, &cs, &[]));
        let (e, cs) = cubic();
        let basis = darboux_exponents(&e, &cs).unwrap();
        assert!(theorem_c_check(&e, &cs, &basis));
    }

    #[test]
    fn subsets_enumerate() {
        let all: Vec<_> = Subsets::new(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(Subsets::new(2, 3).count(), 0);
        assert_eq!(Subsets::new(3, 0).count(), 1);
    }
}

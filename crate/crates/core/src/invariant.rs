//! Invariant curves `1 + p(t) x = 0` of `x' = A x^3 + B x^2`.
//!
//! A curve is invariant iff `p p' - p B + A = 0`. In particular `p | A`, so
//! every invariant `p` is `gamma * d` for a monic divisor `d` of `A`, and
//! writing `A = d r` leaves `gamma^2 d' - gamma B + r = 0`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::divisors::{enumerate_divisors, factor_base};
use crate::error::{Error, Result};
use crate::factor::{quad_roots_ext, squarefree_factor};
use crate::poly::Degree;
use crate::quad::QuadExt;
use crate::scalar::Scalar;
use crate::{Poly, QPoly, QuadPoly};

/// `x' = A(t) x^3 + B(t) x^2` with `A != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelEquation {
    a: QPoly,
    b: QPoly,
}

impl AbelEquation {
    pub fn new(a: QPoly, b: QPoly) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroA);
        }
        Ok(AbelEquation { a, b })
    }

    pub fn a(&self) -> &QPoly {
        &self.a
    }

    pub fn b(&self) -> &QPoly {
        &self.b
    }

    /// Degree of `A`.
    pub fn n(&self) -> usize {
        self.a.deg().expect("A is nonzero")
    }

    pub fn deg_b(&self) -> Degree {
        self.b.degree()
    }

    /// The equation in the variable `t + s`.
    pub fn translate(&self, s: &BigRational) -> Self {
        AbelEquation { a: self.a.shift(s), b: self.b.shift(s) }
    }

    pub fn residual(&self, p: &QuadPoly) -> QuadPoly {
        condinv_residual(p, &self.a.to_quad(), &self.b.to_quad())
    }

    pub fn is_invariant(&self, p: &QuadPoly) -> Result<bool> {
        if p.is_zero() {
            return Err(Error::ZeroCurve);
        }
        p.field()?;
        Ok(self.residual(p).is_zero())
    }
}

impl fmt::Display for AbelEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x' = ({})*x^3 + ({})*x^2", self.a, self.b)
    }
}

/// `p p' - p B + A`.
pub fn condinv_residual<T: Scalar>(p: &Poly<T>, a: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    &(&(p * &p.derivative()) - &(p * b)) + a
}

fn odd_half(n: usize) -> Option<usize> {
    (n % 2 == 1).then_some(n.div_ceil(2))
}

/// Degrees `m` in `0..=n` with `deg B <= max(m - 1, n - m)`, leaving out
/// `(n+1)/2` when `deg B > (n-1)/2`.
pub fn admissible_degrees(n: usize, deg_b: Degree) -> BTreeSet<usize> {
    let db = match deg_b {
        Degree::NegInfinity => return (0..=n).collect(),
        Degree::Finite(k) => k as i64,
    };
    let n_i = n as i64;
    (0..=n)
        .filter(|&m| {
            let m_i = m as i64;
            db <= (m_i - 1).max(n_i - m_i)
        })
        .filter(|&m| !(odd_half(n) == Some(m) && 2 * db > n_i - 1))
        .collect()
}

/// Degrees an invariant `p` can actually have: among the leading degrees of
/// `p p'`, `p B` and `A` the largest must occur at least twice.
pub fn sharp_degrees(n: usize, deg_b: Degree) -> BTreeSet<usize> {
    (0..=n)
        .filter(|&m| {
            let mut ds: Vec<usize> = vec![n];
            if m >= 1 {
                ds.push(2 * m - 1);
            }
            if let Degree::Finite(k) = deg_b {
                ds.push(m + k);
            }
            let top = *ds.iter().max().expect("nonempty");
            ds.iter().filter(|&&d| d == top).count() >= 2
        })
        .collect()
}

/// Scalars `gamma != 0` for which `gamma * d` is invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarSolutions {
    pub gammas: Vec<QuadExt>,
    /// False when some root needed a second, different square root.
    pub representable: bool,
}

/// Solves `gamma^2 d' - gamma B + A/d = 0` through the gcd over `K[gamma]`
/// of the coefficientwise quadratics.
pub fn solve_scalar(d: &QuadPoly, eq: &AbelEquation) -> Result<ScalarSolutions> {
    if d.is_zero() {
        return Err(Error::ZeroCurve);
    }
    let a = eq.a().to_quad();
    let r = a
        .exact_div(d)?
        .ok_or_else(|| Error::NotDivisible(d.to_string(), eq.a().to_string()))?;
    let dd = d.derivative();
    let b = eq.b().to_quad();
    let len = r.coeffs().len().max(dd.coeffs().len()).max(b.coeffs().len());
    let mut g: Option<QuadPoly> = None;
    for k in 0..len {
        let quad = Poly::new(vec![r.coeff(k), -b.coeff(k), dd.coeff(k)]);
        if quad.is_zero() {
            continue;
        }
        g = Some(match g {
            None => quad.monic(),
            Some(h) => h.gcd(&quad)?,
        });
    }
    let g = g.expect("A/d is nonzero");
    let c = g.coeffs();
    let (roots, representable) = match g.deg() {
        Some(1) => (vec![-c[0].clone()], true),
        Some(2) => match quad_roots_ext(&c[2], &c[1], &c[0]) {
            Ok(rs) => (rs, true),
            Err(Error::NotRepresentable(_)) | Err(Error::MixedRadicals(..)) => (vec![], false),
            Err(e) => return Err(e),
        },
        _ => (vec![], true),
    };
    let field = d.field()?;
    let mut gammas = Vec::new();
    let mut representable = representable;
    for gamma in roots {
        if gamma.is_zero() {
            continue;
        }
        match (&field, gamma.field()) {
            (Some(k), Some(f)) if k != f => representable = false,
            _ => gammas.push(gamma),
        }
    }
    Ok(ScalarSolutions { gammas, representable })
}

/// Which computation produced a curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Backend {
    Divisor,
    Ideal,
    Generator,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Divisor => "divisor",
            Backend::Ideal => "ideal",
            Backend::Generator => "generator",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantCurve {
    /// The curve is `1 + p(t) x = 0`.
    pub p: QuadPoly,
    pub backend: Backend,
    /// Constant `p`: the equation has separated variables.
    pub separable: bool,
}

impl InvariantCurve {
    pub fn new(p: QuadPoly, backend: Backend) -> Self {
        let separable = p.is_constant();
        InvariantCurve { p, backend, separable }
    }

    pub fn degree(&self) -> usize {
        self.p.deg().unwrap_or(0)
    }
}

/// Sort key: degree, then coefficients from `t^0` upwards.
pub fn curve_order(p: &QuadPoly, q: &QuadPoly) -> std::cmp::Ordering {
    (p.deg(), p.coeffs()).cmp(&(q.deg(), q.coeffs()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSet {
    pub curves: Vec<InvariantCurve>,
    /// True when every curve over Q or a quadratic field has been found.
    pub complete: bool,
}

impl CurveSet {
    pub fn polys(&self) -> Vec<QuadPoly> {
        self.curves.iter().map(|c| c.p.clone()).collect()
    }

    /// Curves of positive degree.
    pub fn proper(&self) -> Vec<QuadPoly> {
        self.curves.iter().filter(|c| !c.separable).map(|c| c.p.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }
}

/// Every invariant curve whose coefficients lie in Q or in a single
/// quadratic extension.
pub fn find_invariant_curves(eq: &AbelEquation) -> Result<CurveSet> {
    let degrees = sharp_degrees(eq.n(), eq.deg_b());
    let mut found: Vec<QuadPoly> = Vec::new();
    let mut complete = true;
    if degrees.contains(&0) {
        // A = gamma B with gamma constant
        if let Some(h) = eq.a().exact_div(eq.b()).ok().flatten() {
            if h.is_constant() {
                found.push(h.to_quad());
            }
        }
    }
    let positive: BTreeSet<usize> = degrees.iter().copied().filter(|&m| m > 0).collect();
    if !positive.is_empty() {
        let base = factor_base(eq.a())?;
        let divisors = enumerate_divisors(&base, &positive);
        complete &= divisors.complete;
        for d in &divisors.divisors {
            let sol = solve_scalar(d, eq)?;
            complete &= sol.representable;
            for g in sol.gammas {
                found.push(d.scale(&g));
            }
        }
    }
    for p in &found {
        assert!(eq.residual(p).is_zero(), "solver produced a non-invariant curve {p}");
        assert!(eq.a().to_quad().divides_checked(p), "curve {p} does not divide A");
    }
    found.sort_by(curve_order);
    found.dedup();
    Ok(CurveSet {
        curves: found.into_iter().map(|p| InvariantCurve::new(p, Backend::Divisor)).collect(),
        complete,
    })
}

impl QuadPoly {
    /// `p | self`, false on mixed radicals instead of panicking.
    pub fn divides_checked(&self, p: &QuadPoly) -> bool {
        QuadExt::common_radicand(self.coeffs().iter().chain(p.coeffs())).is_ok() && p.divides(self)
    }
}

/// One coprime square-free block `q_i` of `q` with `q`'s multiplicity
/// `delta` and the exponent `gamma` in `s1 - s2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFactor {
    pub poly: QuadPoly,
    pub delta: u32,
    pub gamma: u32,
}

/// Decomposition of two invariant curves: `p1 = q s1`, `p2 = q s2`,
/// `s1 - s2 = C prod q_i^gamma_i`, `A = q s1 s2 s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairStructure {
    pub q: QuadPoly,
    pub s1: QuadPoly,
    pub s2: QuadPoly,
    pub c: QuadExt,
    pub factors: Vec<PairFactor>,
    pub s: QuadPoly,
}

impl PairStructure {
    pub fn gammas(&self) -> Vec<u32> {
        self.factors.iter().map(|f| f.gamma).collect()
    }

    /// `prod q_i^gamma_i`.
    pub fn gamma_product(&self) -> QuadPoly {
        self.factors.iter().fold(QuadPoly::one(), |acc, f| &acc * &f.poly.pow(f.gamma))
    }

    /// `gcd(q, q') * sum (delta_i + gamma_i) q_i' prod_{j != i} q_j`.
    pub fn s_formula(&self) -> Result<QuadPoly> {
        let g = self.q.gcd(&self.q.derivative())?;
        let mut sum = QuadPoly::zero();
        for (i, f) in self.factors.iter().enumerate() {
            let mut term = f.poly.derivative().scale(&QuadExt::from(i64::from(f.delta + f.gamma)));
            for (j, h) in self.factors.iter().enumerate() {
                if i != j {
                    term = &term * &h.poly;
                }
            }
            sum = &sum + &term;
        }
        Ok(&g * &sum)
    }
}

fn violation(msg: impl Into<String>) -> Error {
    Error::StructureViolation(msg.into())
}

/// Square-free coprime blocks of `q`: irreducible over Q when `q` is
/// rational, otherwise the square-free parts.
fn coprime_blocks(q: &QuadPoly) -> Result<Vec<(QuadPoly, u32)>> {
    if let Some(qr) = q.to_rational() {
        let base = factor_base(&qr)?;
        return Ok(base
            .factors
            .into_iter()
            .map(|f| (f.poly.to_quad(), f.multiplicity))
            .collect());
    }
    Ok(squarefree_factor(q)?.factors)
}

/// Recovers the pair structure of two distinct invariant curves and checks
/// every identity it must satisfy.
pub fn pair_structure(p1: &QuadPoly, p2: &QuadPoly, eq: &AbelEquation) -> Result<PairStructure> {
    if p1 == p2 {
        return Err(violation("the two curves coincide"));
    }
    QuadExt::common_radicand(p1.coeffs().iter().chain(p2.coeffs()))?;
    let q = p1.gcd(p2)?;
    if q.is_constant() {
        return Err(violation(format!("gcd({p1}, {p2}) is constant")));
    }
    for p in [p1, p2] {
        if !eq.is_invariant(p)? {
            return Err(Error::NotInvariant(p.to_string()));
        }
    }
    let s1 = p1.exact_div(&q)?.ok_or_else(|| violation("gcd does not divide p1"))?;
    let s2 = p2.exact_div(&q)?.ok_or_else(|| violation("gcd does not divide p2"))?;
    let mut rest = &s1 - &s2;
    if rest.is_zero() {
        return Err(violation("s1 = s2"));
    }
    let mut factors = Vec::new();
    for (block, delta) in coprime_blocks(&q)? {
        // split the block by how often each part divides s1 - s2
        let mut part = block;
        let mut gamma = 0;
        while !part.is_constant() {
            let common = part.gcd(&rest)?;
            let stays = part.exact_div(&common)?.expect("gcd divides");
            if !stays.is_constant() {
                factors.push(PairFactor { poly: stays, delta, gamma });
            }
            if common.is_constant() {
                break;
            }
            rest = rest.exact_div(&common)?.expect("gcd divides");
            part = common;
            gamma += 1;
        }
    }
    if !rest.is_constant() {
        return Err(violation(format!("s1 - s2 has factor {rest} outside q")));
    }
    let c = rest.coeff(0);
    let qss = &(&q * &s1) * &s2;
    let s = eq
        .a()
        .to_quad()
        .exact_div(&qss)?
        .ok_or_else(|| violation("q s1 s2 does not divide A"))?;
    let ps = PairStructure { q, s1, s2, c, factors, s };
    if !ps.s1.gcd(&ps.s2)?.is_one() {
        return Err(violation("s1 and s2 are not coprime"));
    }
    if &ps.s1 - &ps.s2 != ps.gamma_product().scale(&ps.c) {
        return Err(violation("s1 - s2 != C prod q_i^gamma_i"));
    }
    if ps.s.deg().map(|k| k + 1) != ps.q.deg() {
        return Err(violation("deg s != deg q - 1"));
    }
    if ps.s != ps.s_formula()? {
        return Err(violation(format!("s = {} but the exponent formula gives {}", ps.s, ps.s_formula()?)));
    }
    Ok(ps)
}

/// `A = K p p'` and `B = (K + 1) p'` with `K` not in `{0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Proportional {
    pub p: QuadPoly,
    pub k: QuadExt,
}

/// Finds `p` and `K` with `A = K p p'`, `B = (K+1) p'`, if they exist.
///
/// Of the two representatives `(p, K)` and `(K p, 1/K)` the one with
/// `|K| > 1` is returned (for complex `K`, positive imaginary part).
pub fn detect_proportional(eq: &AbelEquation) -> Result<Option<Proportional>> {
    let (a, b) = (eq.a(), eq.b());
    if b.is_zero() {
        return Ok(minus_one_branch(a));
    }
    let Some(h) = a.exact_div(b)? else { return Ok(None) };
    if h.is_constant() {
        return Ok(None);
    }
    let dh = h.derivative();
    let Some(c) = a.exact_div(&(&h * &dh))? else { return Ok(None) };
    if !c.is_constant() || b != &dh.scale(&c.coeff(0)) {
        return Ok(None);
    }
    // c = (K+1)^2 / K, i.e. K^2 + (2 - c) K + 1 = 0
    let c = c.coeff(0);
    let two = BigRational::from_integer(2.into());
    let roots = match crate::factor::quad_roots(&BigRational::one(), &(&two - &c), &BigRational::one()) {
        Ok(r) => r,
        Err(_) => return Ok(None),
    };
    let Some(k) = roots.into_iter().max_by(|x, y| proportional_rank(x).cmp(&proportional_rank(y))) else {
        return Ok(None);
    };
    if k.is_zero() || k.is_one() {
        return Ok(None);
    }
    let factor = &(&k + &QuadExt::one()) / &k;
    let p = h.to_quad().scale(&factor);
    debug_assert_eq!(a.to_quad(), (&p * &p.derivative()).scale(&k));
    Ok(Some(Proportional { p, k }))
}

/// Orders the two roots `K`, `1/K`: larger modulus first, then positive
/// irrational part.
fn proportional_rank(k: &QuadExt) -> (bool, bool) {
    let n = k.norm();
    let big = match k.to_rational() {
        Some(r) => r.abs() > BigRational::one(),
        None if k.radicand().is_positive() => k.to_f64().map(f64::abs).unwrap_or(0.0) > 1.0,
        None => n > BigRational::one(),
    };
    (big, k.irrational_part().is_positive())
}

/// `B = 0`: look for `p` with `p p' = -A`, i.e. `p^2 = -2 int A`.
fn minus_one_branch(a: &QPoly) -> Option<Proportional> {
    let n = a.deg()?;
    if n % 2 == 0 {
        return None;
    }
    let f = antiderivative(a).scale(&BigRational::from_integer((-2).into()));
    let lead = f.leading()?.clone();
    let g = monic_sqrt(&f.scale(&(BigRational::one() / &lead)))?;
    let lambda = QuadExt::rational(lead).sqrt()?;
    let mut p = g.to_quad().scale(&lambda);
    if !p.leading().is_some_and(QuadExt::is_positive_canonical) {
        p = -p;
    }
    let k = QuadExt::from(-1);
    (a.to_quad() == (&p * &p.derivative()).scale(&k)).then_some(Proportional { p, k })
}

fn antiderivative(f: &QPoly) -> QPoly {
    let mut c = vec![BigRational::zero()];
    for (i, x) in f.coeffs().iter().enumerate() {
        c.push(x / BigRational::from_integer((i as i64 + 1).into()));
    }
    QPoly::new(c)
}

/// Monic `g` with `f - g^2` constant, for monic `f` of even degree.
fn monic_sqrt(f: &QPoly) -> Option<QPoly> {
    let n = f.deg()?;
    if n % 2 == 1 || n == 0 {
        return None;
    }
    let h = n / 2;
    // coefficients of g from the top: g_h = 1, then match t^(h+j) for j < h
    let mut g = vec![BigRational::zero(); h + 1];
    g[h] = BigRational::one();
    for k in (0..h).rev() {
        // coefficient of t^(h+k) in g^2 is 2 g_k + sum_{i+j = h+k, i,j > k} g_i g_j
        let mut acc = BigRational::zero();
        for i in (k + 1)..=h {
            let j = h + k - i;
            if j > k && j <= h {
                acc += &g[i] * &g[j];
            }
        }
        g[k] = (f.coeff(h + k) - acc) / BigRational::from_integer(2.into());
    }
    let g = QPoly::new(g);
    let diff = f - &(&g * &g);
    diff.is_constant().then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_poly_ext};
    use crate::scalar::int;

    fn eq(a: &str, b: &str) -> AbelEquation {
        AbelEquation::new(parse_poly(a).unwrap(), parse_poly(b).unwrap()).unwrap()
    }

    fn qp(s: &str) -> QuadPoly {
        parse_poly_ext(s).unwrap()
    }

    fn ex44() -> AbelEquation {
        eq("4*(t-1)*t*(t+1)*(3*t-1)*(3*t+2)", "6*(4*t^2+t-1)")
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn residual_examples() {
        let e = eq("18*t^5-20*t^3+2*t", "15*t^2-3");
        assert!(e.residual(&qp("2*t^3-2*t")).is_zero());
        let e = eq("2*t*(t+1)*(2*t+1)", "6*t+3");
        assert!(e.residual(&qp("t^2+t")).is_zero());
        let e = eq("t", "0");
        assert_eq!(e.residual(&qp("t")), qp("2*t"));
    }

    #[test]
    fn invariance_checks() {
        let e = ex44();
        assert!(e.is_invariant(&qp("6*t^3+4*t^2-6*t-4")).unwrap());
        assert!(!e.is_invariant(&qp("t")).unwrap());
        assert_eq!(e.residual(&qp("t")).coeff(0), QuadExt::from(0));
        assert!(!e.residual(&qp("t")).is_zero());
        assert_eq!(e.is_invariant(&QuadPoly::zero()), Err(Error::ZeroCurve));
        assert_eq!(AbelEquation::new(QPoly::zero(), QPoly::one()), Err(Error::ZeroA));
    }

    #[test]
    fn degree_sets() {
        assert_eq!(admissible_degrees(5, Degree::Finite(2)), set(&[0, 1, 2, 3, 4, 5]));
        assert!(!admissible_degrees(3, Degree::Finite(2)).contains(&2));
        assert!(admissible_degrees(1, Degree::Finite(0)).contains(&1));
        assert_eq!(sharp_degrees(5, Degree::Finite(2)), set(&[3]));
        assert_eq!(sharp_degrees(3, Degree::Finite(2)), set(&[1, 3]));
        assert_eq!(sharp_degrees(3, Degree::Finite(1)), set(&[2]));
        assert_eq!(sharp_degrees(3, Degree::NegInfinity), set(&[2]));
        assert_eq!(sharp_degrees(2, Degree::NegInfinity), set(&[]));
        assert_eq!(sharp_degrees(5, Degree::Finite(3)), set(&[2, 4]));
        for n in 0..9 {
            for k in 0..9 {
                let sharp = sharp_degrees(n, Degree::Finite(k));
                assert!(sharp.is_subset(&admissible_degrees(n, Degree::Finite(k))), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn scalar_solving() {
        let e = eq("2*t", "3");
        let s = solve_scalar(&qp("t"), &e).unwrap();
        assert_eq!(s.gammas, vec![QuadExt::from(1), QuadExt::from(2)]);
        let s = solve_scalar(&qp("t*(t-1)*(t+1)"), &ex44()).unwrap();
        assert_eq!(s.gammas, vec![QuadExt::from(2)]);
        let e = eq("t", "0");
        let i = QuadExt::sqrt_of(-1).unwrap();
        let s = solve_scalar(&qp("t"), &e).unwrap();
        assert_eq!(s.gammas, vec![-i.clone(), i]);
        assert!(s.representable);
        assert!(matches!(solve_scalar(&qp("t^2+7"), &e), Err(Error::NotDivisible(..))));
    }

    #[test]
    fn example_4_4_curves() {
        let cs = find_invariant_curves(&ex44()).unwrap();
        assert!(cs.complete);
        let want: Vec<_> = ["6*t^3+4*t^2-6*t-4", "2*t^3-2*t", "6*t^3+4*t^2-2*t"].iter().map(|s| qp(s)).collect();
        assert_eq!(cs.polys(), want);
    }

    #[test]
    fn five_curve_quintic() {
        let cs = find_invariant_curves(&eq("18*t^5-20*t^3+2*t", "15*t^2-3")).unwrap();
        let mut want: Vec<_> = ["2*t^3-2*t", "3*t^3+2*t^2-t", "3*t^3-2*t^2-t", "3*t^3-t^2-3*t+1", "3*t^3+t^2-3*t-1"]
            .iter()
            .map(|s| qp(s))
            .collect();
        want.sort_by(curve_order);
        assert_eq!(cs.polys(), want);
        assert!(cs.complete);
    }

    #[test]
    fn four_curve_cubic() {
        let cs = find_invariant_curves(&eq("2*t*(t+1)*(2*t+1)", "6*t+3")).unwrap();
        let want: Vec<_> = ["t^2+t", "2*t^2+t", "2*t^2+2*t", "2*t^2+3*t+1"].iter().map(|s| qp(s)).collect();
        assert_eq!(cs.polys(), want);
    }

    #[test]
    fn gaussian_and_separable_curves() {
        let cs = find_invariant_curves(&eq("t", "0")).unwrap();
        assert_eq!(cs.polys(), vec![qp("-sqrt(-1)*t"), qp("sqrt(-1)*t")]);
        assert!(cs.complete);
        // A = 2B: constant curve p = 2
        let cs = find_invariant_curves(&eq("2*t^2+2", "t^2+1")).unwrap();
        assert!(cs.curves.iter().any(|c| c.separable && c.p == qp("2")));
    }

    #[test]
    fn opaque_blocks_lower_completeness() {
        // t^4 + 1 may split over Q(sqrt 2); it is kept whole
        let cs = find_invariant_curves(&eq("t^4+1", "t^2")).unwrap();
        assert!(!cs.complete);
    }

    #[test]
    fn pair_structures() {
        let e = eq("3*t*(1-t^2)", "1+3*(1-t^2)");
        let ps = pair_structure(&qp("t"), &qp("t-t^3"), &e).unwrap();
        assert_eq!(ps.q, qp("t"));
        assert_eq!(ps.s1, qp("1"));
        assert_eq!(ps.s2, qp("1-t^2"));
        assert_eq!(ps.c, QuadExt::from(1));
        assert_eq!(ps.gammas(), vec![2]);
        assert_eq!(ps.s, qp("3"));

        let e = eq("2*t*(t+1)*(2*t+1)", "6*t+3");
        let ps = pair_structure(&qp("t^2+t"), &qp("2*t^2+2*t"), &e).unwrap();
        assert_eq!(ps.q, qp("t^2+t"));
        assert_eq!((ps.s1.clone(), ps.s2.clone()), (qp("1"), qp("2")));
        assert_eq!(ps.c, QuadExt::from(-1));
        assert_eq!(ps.gammas(), vec![0, 0]);
        assert_eq!(ps.s, qp("2*t+1"));

        let e = eq("t*(t+1)", "2*t+1");
        assert!(matches!(pair_structure(&qp("t"), &qp("t+1"), &e), Err(Error::StructureViolation(_))));
    }

    #[test]
    fn proportional_detection() {
        let pr = detect_proportional(&eq("2*t", "3")).unwrap().unwrap();
        assert_eq!((pr.p, pr.k), (qp("t"), QuadExt::from(2)));
        let pr = detect_proportional(&eq("-t^3", "0")).unwrap().unwrap();
        assert_eq!(pr.p, qp("1/2*sqrt(2)*t^2"));
        assert_eq!(pr.k, QuadExt::from(-1));
        assert_eq!(detect_proportional(&ex44()).unwrap(), None);
        let pr = detect_proportional(&eq("15*t^2*(t^3-2)", "18*t^2")).unwrap().unwrap();
        assert_eq!((pr.p, pr.k), (qp("t^3-2"), QuadExt::from(5)));
        assert_eq!(antiderivative(&QPoly::from_ints(&[0, 2])), QPoly::new(vec![int(0), int(0), int(1)]));
    }

    #[test]
    fn translation_moves_curves() {
        let e = ex44();
        let base = find_invariant_curves(&e).unwrap();
        for s in [int(1), int(-2), BigRational::new(1.into(), 2.into())] {
            let moved = find_invariant_curves(&e.translate(&s)).unwrap();
            let mut want: Vec<_> = base.polys().iter().map(|p| p.shift(&QuadExt::rational(s.clone()))).collect();
            want.sort_by(curve_order);
            assert_eq!(moved.polys(), want);
        }
    }
}

//! Equations with prescribed invariant curves: the pair generator, the
//! proportional family, the named low-degree instances and the cubic
//! classification.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::divisors::factor_base;
use crate::error::{Error, Result};
use crate::invariant::{find_invariant_curves, AbelEquation};
use crate::scalar::{fmt_rational, int, rat};
use crate::{QPoly, QuadPoly, Rational};

/// Generator data: `s1 = s2 + C prod q_i^gamma_i` with `q_i` the monic
/// irreducible factors of `q` over Q, in the order of
/// [`factor_base`](crate::divisors::factor_base).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub q: QPoly,
    pub s2: QPoly,
    pub c: Rational,
    pub gamma: Vec<u32>,
}

/// An equation with two certified invariant curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedPair {
    pub eq: AbelEquation,
    pub p1: QPoly,
    pub p2: QPoly,
    pub s1: QPoly,
    pub s: QPoly,
}

/// `A = q s1 s2 s` and `B = (q s1)' + s2 s` with
/// `s = gcd(q, q') sum (delta_i + gamma_i) q_i' prod_{j != i} q_j`; the
/// curves are `p1 = q s1` and `p2 = q s2`.
pub fn generate_pair(spec: &FamilySpec) -> Result<GeneratedPair> {
    let q = &spec.q;
    if q.is_constant() || !q.leading().is_some_and(One::is_one) {
        return Err(Error::Domain(format!("q = {q} must be monic and nonconstant")));
    }
    if spec.c.is_zero() {
        return Err(Error::Domain("C must be nonzero".into()));
    }
    let base = factor_base(q)?;
    if base.factors.len() != spec.gamma.len() {
        return Err(Error::Domain(format!(
            "q has {} irreducible factors but {} exponents were given",
            base.factors.len(),
            spec.gamma.len()
        )));
    }
    let mut prod = QPoly::one();
    let mut sum = QPoly::zero();
    for (i, (f, g)) in base.factors.iter().zip(&spec.gamma).enumerate() {
        prod = &prod * &f.poly.pow(*g);
        let mut term = f.poly.derivative().scale(&int(i64::from(f.multiplicity + g)));
        for (j, h) in base.factors.iter().enumerate() {
            if i != j {
                term = &term * &h.poly;
            }
        }
        sum = &sum + &term;
    }
    let s = &q.gcd(&q.derivative())? * &sum;
    let s1 = &spec.s2 + &prod.scale(&spec.c);
    let qs1 = q * &s1;
    let a = &(&qs1 * &spec.s2) * &s;
    let b = &qs1.derivative() + &(&spec.s2 * &s);
    if a.is_zero() {
        return Err(Error::Degenerate("A vanishes identically".into()));
    }
    let eq = AbelEquation::new(a, b)?;
    let p1 = qs1;
    let p2 = q * &spec.s2;
    for p in [&p1, &p2] {
        if !eq.is_invariant(&p.to_quad())? {
            return Err(Error::Degenerate(format!("generated curve {p} is not invariant")));
        }
    }
    Ok(GeneratedPair { eq, p1, p2, s1, s })
}

/// The rational first integral `1/x^2 - p^2` of `x' = -p p' x^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseSquareIntegral {
    pub p: QPoly,
}

impl InverseSquareIntegral {
    /// Along solutions, `d/dt (1/x^2 - p^2) = -2 B / x - 2 (A + p p')`.
    pub fn verify(&self, eq: &AbelEquation) -> bool {
        eq.b().is_zero() && (eq.a() + &(&self.p * &self.p.derivative())).is_zero()
    }
}

impl fmt::Display for InverseSquareIntegral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/x^2 - ({})^2", self.p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProportionalFamily {
    pub eq: AbelEquation,
    /// `p` and `K p`.
    pub curves: [QPoly; 2],
    /// Present for `K = -1`.
    pub first_integral: Option<InverseSquareIntegral>,
}

/// `A = K p p'`, `B = (K + 1) p'`, whose curves are `p` and `K p`.
pub fn proportional_family(p: &QPoly, k: &Rational) -> Result<ProportionalFamily> {
    if k.is_zero() || k.is_one() {
        return Err(Error::Domain(format!("K = {} must not be 0 or 1", fmt_rational(k))));
    }
    if p.is_constant() {
        return Err(Error::Domain("p must be nonconstant".into()));
    }
    let dp = p.derivative();
    let eq = AbelEquation::new((p * &dp).scale(k), dp.scale(&(k + Rational::one())))?;
    let first_integral = (k == &-Rational::one()).then(|| InverseSquareIntegral { p: p.clone() });
    Ok(ProportionalFamily { eq, curves: [p.clone(), p.scale(k)], first_integral })
}

/// Ids accepted by [`named_instance`].
pub const INSTANCE_IDS: &[&str] = &[
    "example-4.4",
    "example-4.7",
    "example-4.8",
    "remark-2.6",
    "remark-2.14",
    "prop-4.2-case1",
    "prop-4.2-case2",
    "n5-case1a",
    "n5-case1b",
    "n5-case2a",
    "n5-case2b",
    "n5-case3a",
    "n5-case3b",
    "n5-case3c",
];

/// A named equation with the curves its construction guarantees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedInstance {
    pub id: String,
    /// Every parameter, defaults included.
    pub params: BTreeMap<String, Rational>,
    pub eq: AbelEquation,
    pub advertised: Vec<QPoly>,
}

struct Params<'a> {
    given: &'a BTreeMap<String, Rational>,
    used: BTreeMap<String, Rational>,
}

impl<'a> Params<'a> {
    fn new(given: &'a BTreeMap<String, Rational>) -> Self {
        Params { given, used: BTreeMap::new() }
    }

    fn get(&mut self, key: &str, default: Rational) -> Rational {
        let v = self.given.get(key).cloned().unwrap_or(default);
        self.used.insert(key.to_string(), v.clone());
        v
    }

    fn nonzero(&mut self, key: &str, default: Rational) -> Result<Rational> {
        let v = self.get(key, default);
        if v.is_zero() {
            return Err(Error::Domain(format!("{key} must be nonzero")));
        }
        Ok(v)
    }

    fn natural(&mut self, key: &str, default: i64, min: u32) -> Result<u32> {
        let v = self.get(key, int(default));
        let n = v
            .is_integer()
            .then(|| u32::try_from(v.to_integer()).ok())
            .flatten()
            .filter(|&n| n >= min)
            .ok_or_else(|| Error::Domain(format!("{key} must be an integer >= {min}")))?;
        Ok(n)
    }

    fn finish(self) -> Result<BTreeMap<String, Rational>> {
        if let Some(k) = self.given.keys().find(|k| !self.used.contains_key(*k)) {
            return Err(Error::Domain(format!("unknown parameter `{k}`")));
        }
        Ok(self.used)
    }
}

fn t_minus(z: &Rational) -> QPoly {
    QPoly::linear_root(z.clone())
}

fn poly(c: &[Rational]) -> QPoly {
    QPoly::new(c.to_vec())
}

fn from_pair(pair: GeneratedPair) -> (AbelEquation, Vec<QPoly>) {
    (pair.eq, vec![pair.p1, pair.p2])
}

/// `(C / c1, admissible z)` rows for the five-curve quintic family.
fn example_4_7_table() -> Vec<(Rational, Vec<Rational>)> {
    vec![
        (rat(1, 3), vec![rat(-5, 3), rat(-7, 9), int(0), rat(1, 3)]),
        (int(-2), vec![int(0), rat(1, 3), int(3)]),
        (rat(-1, 2), vec![int(-3), rat(-1, 2), rat(-5, 3), int(0)]),
        (rat(2, 3), vec![rat(5, 3), rat(7, 9), rat(2, 3)]),
    ]
}

/// `s2 = s1 - C g` over `q`, with the exponents given.
fn pair_over(q: QPoly, s1: &QPoly, c: &Rational, g: &QPoly, gamma: Vec<u32>) -> Result<GeneratedPair> {
    let s2 = s1 - &g.scale(c);
    generate_pair(&FamilySpec { q, s2, c: c.clone(), gamma })
}

/// Builds a named instance; unknown ids and out-of-domain parameters are
/// refused.
pub fn named_instance(id: &str, params: &BTreeMap<String, Rational>) -> Result<NamedInstance> {
    let mut ps = Params::new(params);
    let t = QPoly::t();
    let t2m1 = poly(&[int(-1), int(0), int(1)]);
    let (eq, advertised) = match id {
        "example-4.4" => {
            let a = [int(1), int(0), int(-1), rat(1, 3), rat(-2, 3)]
                .iter()
                .fold(QPoly::constant(int(36)), |acc, r| &acc * &t_minus(r));
            let b = poly(&[int(-6), int(6), int(24)]);
            let eq = AbelEquation::new(a, b)?;
            let curves = [[-4, -6, 4, 6], [0, -2, 4, 6], [0, -2, 0, 2]]
                .iter()
                .map(|c| QPoly::from_ints(c))
                .collect();
            (eq, curves)
        }
        "example-4.7" => {
            let c1 = ps.nonzero("c1", int(3))?;
            let c = ps.get("C", &c1 / int(3));
            let z = ps.get("z", rat(1, 3));
            let ratio = &c / &c1;
            let ok = example_4_7_table().iter().any(|(r, zs)| *r == ratio && zs.contains(&z));
            if !ok {
                return Err(Error::Domain(format!(
                    "(C/c1, z) = ({}, {}) is not one of the 14 compatible combinations",
                    fmt_rational(&ratio),
                    fmt_rational(&z)
                )));
            }
            let s1 = t_minus(&z).scale(&c1);
            // q = t^2 - 1 with factors (t - 1, t + 1); s1 - s2 = C (t - 1)
            from_pair(pair_over(t2m1.clone(), &s1, &c, &t_minus(&int(1)), vec![1, 0])?)
        }
        "example-4.8" => {
            let z2 = ps.get("z2", int(0));
            let z1 = ps.get("z1", &z2 - int(9));
            if z1 != &z2 + int(2) && z1 != &z2 - int(9) {
                return Err(Error::Domain("z1 must be z2 + 2 or z2 - 9".into()));
            }
            (example_4_8(&z1, &z2)?, vec![])
        }
        "remark-2.6" => {
            let n = ps.natural("n", 3, 2)?;
            let s2 = &QPoly::one() - &t.pow(n - 1);
            from_pair(generate_pair(&FamilySpec { q: t.clone(), s2, c: int(1), gamma: vec![n - 1] })?)
        }
        "remark-2.14" => {
            let m = ps.natural("m", 2, 2)?;
            let s2 = &(&QPoly::one() - &t.pow(m - 1)) - &t.pow(m + 1);
            from_pair(generate_pair(&FamilySpec { q: t.clone(), s2, c: int(1), gamma: vec![m + 1] })?)
        }
        "prop-4.2-case1" | "prop-4.2-case2" => {
            let c1 = ps.nonzero("c1", int(1))?;
            let z = ps.get("z", int(-1));
            let w = ps.get("w", int(0));
            let case1 = id.ends_with('1');
            let c = ps.nonzero("C", if case1 { int(3) } else { -c1.clone() })?;
            let variant = if case1 { CubicVariant::ConstantDifference } else { CubicVariant::QMultipleDifference };
            let cls = classify_cubic(&t_minus(&w), &t_minus(&z).scale(&c1), &c, variant)?;
            (cls.eq, cls.witnesses)
        }
        "n5-case1a" | "n5-case1b" | "n5-case2a" | "n5-case2b" => {
            let c1 = ps.nonzero("c1", int(1))?;
            let z = ps.get("z", int(0));
            let c = ps.nonzero("C", int(2))?;
            let s1 = t_minus(&z).scale(&c1);
            let pair = match id {
                "n5-case1a" => pair_over(t2m1.clone(), &s1, &c, &QPoly::one(), vec![0, 0])?,
                "n5-case1b" => {
                    not_c1(&c, &c1)?;
                    let sign = ps.get("sign", int(-1));
                    // factors of t^2 - 1 are ordered (t - 1, t + 1)
                    let (g, gamma) = if sign == int(1) {
                        (t_minus(&int(-1)), vec![0, 1])
                    } else if sign == int(-1) {
                        (t_minus(&int(1)), vec![1, 0])
                    } else {
                        return Err(Error::Domain("sign must be 1 or -1".into()));
                    };
                    pair_over(t2m1.clone(), &s1, &c, &g, gamma)?
                }
                "n5-case2a" => pair_over(t.pow(2), &s1, &c, &QPoly::one(), vec![0])?,
                _ => {
                    not_c1(&c, &c1)?;
                    pair_over(t.pow(2), &s1, &c, &t, vec![1])?
                }
            };
            from_pair(pair)
        }
        "n5-case3a" | "n5-case3b" | "n5-case3c" => {
            let c1 = ps.nonzero("c1", int(1))?;
            let z = ps.get("z", int(2));
            let c = ps.nonzero("C", int(2))?;
            let e = ps.get("e", int(1));
            if e != int(0) && e != int(1) {
                return Err(Error::Domain("e must be 0 (s1 = c1 t^2) or 1 (s1 = c1 (t^2 - 1))".into()));
            }
            let s1 = poly(&[-e, int(0), int(1)]).scale(&c1);
            let q = t_minus(&z);
            let k: u32 = match id {
                "n5-case3a" => 0,
                "n5-case3b" => 1,
                _ => {
                    not_c1(&c, &c1)?;
                    2
                }
            };
            from_pair(pair_over(q.clone(), &s1, &c, &q.pow(k), vec![k])?)
        }
        other => return Err(Error::UnknownInstance(other.to_string())),
    };
    let params = ps.finish()?;
    Ok(NamedInstance { id: id.to_string(), params, eq, advertised })
}

fn not_c1(c: &Rational, c1: &Rational) -> Result<()> {
    if c == c1 {
        return Err(Error::Domain("C must differ from c1".into()));
    }
    Ok(())
}

/// The degree-7 family with four or five curves.
fn example_4_8(z1: &Rational, z2: &Rational) -> Result<AbelEquation> {
    let mut a = t_minus(z1);
    for shift in [0, 3, 6, 8, 18] {
        a = &a * &t_minus(&(z2 - int(shift)));
    }
    a = &a * &poly(&[-(z2 + &(z1 * int(2))) + int(18), int(3)]);
    let b = poly(&[
        -(z2 * z2 * z2) * int(2) - z1 * z2 * z2 * int(5) + z2 * z2 * int(53) + z1 * z2 * int(70)
            - z2 * int(324)
            - z1 * int(180)
            + int(324),
        z2 * z2 * int(11) + z1 * z2 * int(10) - z2 * int(176) - z1 * int(70) + int(504),
        -(z2 * int(16) + z1 * int(5) - int(123)),
        int(7),
    ]);
    AbelEquation::new(a, b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubicVariant {
    /// `s1 - s2 = C`.
    ConstantDifference,
    /// `s1 - s2 = C q`.
    QMultipleDifference,
}

/// Predicted curve set of a degree-3 equation built from two curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicClassification {
    pub eq: AbelEquation,
    pub predicted: usize,
    /// `p1 = q s1`, `p2 = q s2`, then the extra curves the theory predicts.
    pub witnesses: Vec<QPoly>,
    /// Predicted curves that coincide with earlier ones.
    pub collisions: Vec<String>,
    /// Curves of positive degree found by the solver on `eq`.
    pub solver_count: usize,
}

/// Classifies the degree-3 equation with curves `q s1` and `q s2`.
///
/// Constant difference: `p3 = s1 (s1 - C) / c1` always exists, and a fourth
/// curve `p_j / 2` appears when `C = k (s1(0) - c1 q(0))` for
/// `k = 1/2, -1, 2` (`j = 1, 2, 3`). `q`-multiple difference: four curves iff
/// `C = -c1` or `C = c1/2`, otherwise two.
pub fn classify_cubic(q: &QPoly, s1: &QPoly, c: &Rational, variant: CubicVariant) -> Result<CubicClassification> {
    if q.deg() != Some(1) || !q.leading().is_some_and(One::is_one) {
        return Err(Error::Domain("q must be monic of degree 1".into()));
    }
    if s1.deg() != Some(1) {
        return Err(Error::Domain("s1 must have degree 1".into()));
    }
    if c.is_zero() {
        return Err(Error::Domain("C must be nonzero".into()));
    }
    let c1 = s1.leading().expect("degree 1").clone();
    if s1 == &q.scale(&c1) {
        return Err(Error::Domain("s1 must not be a multiple of q".into()));
    }
    let half = rat(1, 2);
    let mut witnesses: Vec<QPoly> = Vec::new();
    let pair = match variant {
        CubicVariant::ConstantDifference => pair_over(q.clone(), s1, c, &QPoly::one(), vec![0])?,
        CubicVariant::QMultipleDifference => {
            not_c1(c, &c1)?;
            pair_over(q.clone(), s1, c, q, vec![1])?
        }
    };
    let s2 = pair.p2.exact_div(q)?.expect("q divides p2");
    witnesses.push(pair.p1.clone());
    witnesses.push(pair.p2.clone());
    match variant {
        CubicVariant::ConstantDifference => {
            let p3 = (s1 * &s2).scale(&(Rational::one() / &c1));
            witnesses.push(p3.clone());
            let base = s1.coeff(0) - &c1 * q.coeff(0);
            for (k, j) in [(rat(1, 2), 0usize), (int(-1), 1), (int(2), 2)] {
                if *c == &k * &base {
                    let p4 = witnesses[j].scale(&half);
                    witnesses.push(p4);
                }
            }
        }
        CubicVariant::QMultipleDifference => {
            if *c == -c1.clone() {
                witnesses.push((s1 * &s2).scale(&(Rational::one() / &c1)));
                witnesses.push((q * s1).scale(&int(2)));
            } else if *c == &c1 * &half {
                witnesses.push((s1 * &s2).scale(&(int(2) / &c1)));
                witnesses.push((q * &s2).scale(&int(2)));
            }
        }
    }
    let mut collisions = Vec::new();
    let mut distinct: Vec<QPoly> = Vec::new();
    for (i, w) in witnesses.iter().enumerate() {
        if let Some(j) = distinct.iter().position(|d| d == w) {
            collisions.push(format!("p{} = p{} = {}", i + 1, j + 1, w));
        } else {
            distinct.push(w.clone());
        }
    }
    for w in &distinct {
        if !pair.eq.is_invariant(&w.to_quad())? {
            return Err(Error::Degenerate(format!("predicted curve {w} is not invariant")));
        }
    }
    let solver_count = find_invariant_curves(&pair.eq)?.proper().len();
    Ok(CubicClassification { eq: pair.eq, predicted: distinct.len(), witnesses: distinct, collisions, solver_count })
}

/// Advertised curves lifted to the solver's coefficient ring.
pub fn lift(curves: &[QPoly]) -> Vec<QuadPoly> {
    curves.iter().map(QPoly::to_quad).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(s: &str) -> QPoly {
        parse_poly(s).unwrap()
    }

    fn params(kv: &[(&str, Rational)]) -> BTreeMap<String, Rational> {
        kv.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    fn count(eq: &AbelEquation) -> usize {
        find_invariant_curves(eq).unwrap().proper().len()
    }

    #[test]
    fn generator_examples() {
        let g = generate_pair(&FamilySpec { q: p("t"), s2: p("1-t^2"), c: int(1), gamma: vec![2] }).unwrap();
        assert_eq!(g.eq.a(), &p("3*t*(1-t^2)"));
        assert_eq!(g.eq.b(), &p("1+3*(1-t^2)"));
        assert_eq!((g.p1, g.p2), (p("t"), p("t-t^3")));

        let g = generate_pair(&FamilySpec { q: p("t"), s2: p("1-t-t^3"), c: int(1), gamma: vec![3] }).unwrap();
        assert_eq!((g.eq.n(), g.eq.b().deg()), (5, Some(3)));
        assert_eq!(count(&g.eq), 2);

        let g = generate_pair(&FamilySpec { q: p("t"), s2: p("2*t+1"), c: int(-1), gamma: vec![1] }).unwrap();
        assert_eq!(g.eq.a(), &p("2*t*(t+1)*(2*t+1)"));
        assert_eq!(g.eq.b(), &p("6*t+3"));

        assert!(matches!(
            generate_pair(&FamilySpec { q: p("t"), s2: p("1"), c: int(0), gamma: vec![0] }),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            generate_pair(&FamilySpec { q: p("2*t"), s2: p("1"), c: int(1), gamma: vec![0] }),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn proportional_examples() {
        let f = proportional_family(&p("t"), &int(2)).unwrap();
        assert_eq!((f.eq.a(), f.eq.b()), (&p("2*t"), &p("3")));
        let f = proportional_family(&p("t^3-2"), &int(5)).unwrap();
        assert_eq!((f.eq.a(), f.eq.b()), (&p("15*t^2*(t^3-2)"), &p("18*t^2")));
        let found = find_invariant_curves(&f.eq).unwrap();
        assert_eq!(found.polys(), lift(&[p("5*t^3-10"), p("t^3-2")]));
        let f = proportional_family(&p("t"), &int(-1)).unwrap();
        assert_eq!((f.eq.a(), f.eq.b()), (&p("-t"), &p("0")));
        let h = f.first_integral.unwrap();
        assert!(h.verify(&f.eq));
        assert_eq!(h.to_string(), "1/x^2 - (t)^2");
        assert!(matches!(proportional_family(&p("t"), &int(1)), Err(Error::Domain(_))));
        assert!(matches!(proportional_family(&p("t"), &int(0)), Err(Error::Domain(_))));
    }

    #[test]
    fn named_defaults() {
        let none = BTreeMap::new();
        let e = named_instance("example-4.4", &none).unwrap();
        assert_eq!(e.eq.a(), &p("4*(t-1)*t*(t+1)*(3*t-1)*(3*t+2)"));
        assert_eq!(e.eq.b(), &p("6*(4*t^2+t-1)"));
        for id in INSTANCE_IDS {
            let inst = named_instance(id, &none).unwrap();
            for c in &inst.advertised {
                assert!(inst.eq.is_invariant(&c.to_quad()).unwrap(), "{id}: {c}");
            }
        }
        assert!(matches!(named_instance("example-9.9", &none), Err(Error::UnknownInstance(_))));
        assert!(matches!(named_instance("example-4.4", &params(&[("x", int(1))])), Err(Error::Domain(_))));
    }

    #[test]
    fn example_4_7_instances() {
        let inst = named_instance("example-4.7", &params(&[("c1", int(3)), ("C", int(1)), ("z", rat(1, 3))])).unwrap();
        assert_eq!(inst.eq.a(), &p("18*t^5-20*t^3+2*t"));
        assert_eq!(inst.eq.b(), &p("15*t^2-3"));
        assert!(matches!(
            named_instance("example-4.7", &params(&[("c1", int(3)), ("C", int(1)), ("z", int(1))])),
            Err(Error::Domain(_))
        ));
        assert!(matches!(named_instance("example-4.7", &params(&[("c1", int(0))])), Err(Error::Domain(_))));
        // the displayed closed forms agree with the generator on every table row
        let c1 = int(3);
        for (ratio, zs) in example_4_7_table() {
            let c = &ratio * &c1;
            for z in zs {
                let inst = named_instance("example-4.7", &params(&[("c1", c1.clone()), ("C", c.clone()), ("z", z.clone())]))
                    .unwrap();
                let a = [int(1), int(-1), rat(-1, 3), z.clone()]
                    .iter()
                    .fold(QPoly::constant(&-c1.clone() * int(3)), |acc, r| &acc * &t_minus(r));
                let a = &a * &poly(&[&c1 * &z - &c, &c - &c1]);
                let b = poly(&[
                    -(&c1 * &z) - &c1 + &c,
                    &c1 + &c * int(2) - &c1 * &z * int(5),
                    &c1 * int(6) - &c * int(3),
                ]);
                assert_eq!((inst.eq.a(), inst.eq.b()), (&a, &b));
            }
        }
    }

    #[test]
    fn example_4_8_counts() {
        let four = named_instance("example-4.8", &params(&[("z1", int(2))])).unwrap();
        assert_eq!(four.eq.n(), 7);
        assert_eq!(count(&four.eq), 4);
        let five = named_instance("example-4.8", &params(&[("z1", int(-9))])).unwrap();
        assert_eq!(count(&five.eq), 5);
        assert!(matches!(named_instance("example-4.8", &params(&[("z1", int(1))])), Err(Error::Domain(_))));
    }

    #[test]
    fn cubic_classification() {
        let cls = classify_cubic(&p("t"), &p("t+1"), &int(-1), CubicVariant::QMultipleDifference).unwrap();
        assert_eq!(cls.predicted, 4);
        assert_eq!(cls.solver_count, 4);
        let mut ws = cls.witnesses.clone();
        ws.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
        assert_eq!(ws, vec![p("t^2+t"), p("2*t^2+t"), p("2*t^2+2*t"), p("2*t^2+3*t+1")]);

        let cls = classify_cubic(&p("t"), &p("t+1"), &int(7), CubicVariant::QMultipleDifference).unwrap();
        assert_eq!((cls.predicted, cls.solver_count), (2, 2));

        let cls = classify_cubic(&p("t"), &p("t+1"), &int(3), CubicVariant::ConstantDifference).unwrap();
        assert!(cls.witnesses.contains(&p("(t+1)*(t-2)")));
        assert_eq!((cls.predicted, cls.solver_count), (3, 3));

        // C = s1(0) - c1 q(0): p3 collides with p1
        let cls = classify_cubic(&p("t"), &p("t+1"), &int(1), CubicVariant::ConstantDifference).unwrap();
        assert_eq!(cls.collisions.len(), 1);
        assert_eq!((cls.predicted, cls.solver_count), (2, 2));

        for k in [rat(1, 2), int(-1), int(2)] {
            let cls = classify_cubic(&p("t"), &p("t+1"), &k, CubicVariant::ConstantDifference).unwrap();
            assert_eq!((cls.predicted, cls.solver_count), (4, 4), "C = {k}");
        }
        assert!(classify_cubic(&p("t"), &p("2*t"), &int(1), CubicVariant::ConstantDifference).is_err());
        assert!(classify_cubic(&p("t"), &p("t+1"), &int(1), CubicVariant::QMultipleDifference).is_err());
    }
}

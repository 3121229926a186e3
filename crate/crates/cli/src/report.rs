//! Report types shared by the text and JSON outputs.

use std::fmt::Write as _;

use abel_core::darboux::{
    coefficient_matrix, darboux_exponents, max_curve_bound, preferred_integral, r_polys, theorem_c_check,
    verify_first_integral, DarbouxIntegral,
};
use abel_core::invariant::{admissible_degrees, detect_proportional, AbelEquation, CurveSet};
use abel_core::linalg::rank;
use abel_core::polysys::MultiPoly;
use abel_core::scalar::exact_string;
use abel_core::{format_poly, format_poly_ext, Degree, QPoly, QuadExt, QuadPoly, Rational};
use num_bigint::BigUint;
use serde::Serialize;

pub const SCHEMA: u32 = 1;

/// An exact scalar: `"num/den"` for rationals, otherwise the parts of
/// `a + b sqrt(d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Rational(String),
    Quadratic { rational: String, irrational: String, radicand: String },
}

impl ScalarJson {
    pub fn new(x: &QuadExt) -> Self {
        match x.to_rational() {
            Some(r) => ScalarJson::Rational(exact_string(&r)),
            None => ScalarJson::Quadratic {
                rational: exact_string(x.rational_part()),
                irrational: exact_string(x.irrational_part()),
                radicand: x.radicand().to_string(),
            },
        }
    }
}

fn rational_coeffs(p: &QPoly) -> Vec<String> {
    p.coeffs().iter().map(exact_string).collect()
}

fn deg_b_value(d: Degree) -> i64 {
    d.finite().map_or(-1, |k| k as i64)
}

#[derive(Clone, Debug, Serialize)]
pub struct EquationJson {
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    /// Ascending powers of `t`.
    #[serde(rename = "A_coeffs")]
    pub a_coeffs: Vec<String>,
    #[serde(rename = "B_coeffs")]
    pub b_coeffs: Vec<String>,
    pub n: usize,
    /// `-1` when `B = 0`.
    #[serde(rename = "degB")]
    pub deg_b: i64,
}

impl EquationJson {
    pub fn new(eq: &AbelEquation) -> Self {
        EquationJson {
            a: format_poly(eq.a()),
            b: format_poly(eq.b()),
            a_coeffs: rational_coeffs(eq.a()),
            b_coeffs: rational_coeffs(eq.b()),
            n: eq.n(),
            deg_b: deg_b_value(eq.deg_b()),
        }
    }
}

fn field_tag(p: &QuadPoly) -> String {
    match p.field() {
        Ok(Some(d)) => format!("Q(sqrt({d}))"),
        _ => "Q".to_string(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveJson {
    /// The curve is `1 + p(t) x = 0`.
    pub p: String,
    pub degree: usize,
    pub field: String,
    /// Ascending powers of `t`.
    pub coeffs: Vec<ScalarJson>,
    pub backend: String,
    pub separable: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntegralJson {
    /// Exponents of `1 + p_i x` for the curves listed in `curves`.
    pub alpha: Vec<ScalarJson>,
    /// Exponent of `x`.
    pub alpha0: ScalarJson,
    pub curves: Vec<String>,
    pub integral: String,
    pub verified: bool,
}

impl IntegralJson {
    fn new(eq: &AbelEquation, f: &DarbouxIntegral) -> Self {
        IntegralJson {
            alpha: f.alphas().iter().map(ScalarJson::new).collect(),
            alpha0: ScalarJson::new(f.alpha0()),
            curves: f.curves().iter().map(format_poly_ext).collect(),
            integral: f.to_string(),
            verified: verify_first_integral(eq, f),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DarbouxJson {
    /// Rank of the matrix of `A / p_i`.
    pub rank: usize,
    pub basis: Vec<IntegralJson>,
    pub preferred: Option<IntegralJson>,
    pub theorem_c: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundJson {
    /// Theorem A bound on curves of positive degree.
    pub theorem_a: String,
    pub admissible_degrees: Vec<usize>,
    /// Curves of positive degree found.
    pub count: usize,
    pub within: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProportionalJson {
    pub p: String,
    pub k: ScalarJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceJson {
    pub id: String,
    pub params: std::collections::BTreeMap<String, String>,
    pub advertised: Vec<String>,
    pub advertised_found: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveReport {
    pub schema: u32,
    pub command: String,
    pub equation: EquationJson,
    pub backend: String,
    pub curves: Vec<CurveJson>,
    pub complete: bool,
    pub notes: Vec<String>,
    pub darboux: DarbouxJson,
    pub bound: BoundJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub proportional: Option<ProportionalJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceJson>,
    pub elapsed_us: u64,
}

pub fn bound_section(n: usize, deg_b: Degree, count: usize) -> BoundJson {
    let bound = max_curve_bound(n, deg_b);
    BoundJson {
        theorem_a: bound.to_string(),
        admissible_degrees: admissible_degrees(n, deg_b).into_iter().collect(),
        count,
        within: BigUint::from(count) <= bound,
    }
}

fn darboux_section(eq: &AbelEquation, curves: &[QuadPoly]) -> abel_core::Result<DarbouxJson> {
    let m = match r_polys(eq, curves).and_then(|rs| coefficient_matrix(&rs)) {
        Ok(m) => m,
        Err(abel_core::Error::MixedRadicals(a, b)) => {
            return Ok(DarbouxJson {
                rank: 0,
                basis: vec![],
                preferred: None,
                theorem_c: true,
                skipped: Some(format!("curves lie in different fields Q(sqrt({a})) and Q(sqrt({b}))")),
            })
        }
        Err(e) => return Err(e),
    };
    let basis = darboux_exponents(eq, curves)?;
    let preferred = preferred_integral(eq, curves)?;
    Ok(DarbouxJson {
        rank: rank(&m),
        theorem_c: theorem_c_check(eq, curves, &basis),
        basis: basis.iter().map(|f| IntegralJson::new(eq, f)).collect(),
        preferred: preferred.as_ref().map(|f| IntegralJson::new(eq, f)),
        skipped: None,
    })
}

/// Curves, Darboux analysis and bounds for one equation.
pub fn solve_report(eq: &AbelEquation, set: &CurveSet, backend: &str, notes: Vec<String>) -> abel_core::Result<SolveReport> {
    let proper = set.proper();
    let curves = set
        .curves
        .iter()
        .map(|c| CurveJson {
            p: format_poly_ext(&c.p),
            degree: c.degree(),
            field: field_tag(&c.p),
            coeffs: c.p.coeffs().iter().map(ScalarJson::new).collect(),
            backend: c.backend.to_string(),
            separable: c.separable,
        })
        .collect();
    let proportional = detect_proportional(eq)?.map(|pr| ProportionalJson { p: format_poly_ext(&pr.p), k: ScalarJson::new(&pr.k) });
    Ok(SolveReport {
        schema: SCHEMA,
        command: "solve".into(),
        equation: EquationJson::new(eq),
        backend: backend.into(),
        curves,
        complete: set.complete,
        notes,
        darboux: darboux_section(eq, &proper)?,
        bound: bound_section(eq.n(), eq.deg_b(), proper.len()),
        proportional,
        instance: None,
        elapsed_us: 0,
    })
}

fn scalar_text(s: &ScalarJson) -> String {
    match s {
        ScalarJson::Rational(r) => r.strip_suffix("/1").unwrap_or(r).to_string(),
        ScalarJson::Quadratic { rational, irrational, radicand } => {
            let clean = |x: &str| x.strip_suffix("/1").unwrap_or(x).to_string();
            format!("{} + {}*sqrt({radicand})", clean(rational), clean(irrational))
        }
    }
}

fn alpha_text(f: &IntegralJson) -> String {
    let parts: Vec<String> = f.alpha.iter().map(scalar_text).collect();
    format!("({}), alpha0 = {}", parts.join(", "), scalar_text(&f.alpha0))
}

impl SolveReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let e = &self.equation;
        let _ = writeln!(s, "x' = ({}) x^3 + ({}) x^2", e.a, e.b);
        let _ = writeln!(s, "n = {}, deg B = {}", e.n, e.deg_b);
        if let Some(inst) = &self.instance {
            let params: Vec<String> =
                inst.params.iter().map(|(k, v)| format!("{k}={}", v.strip_suffix("/1").unwrap_or(v))).collect();
            let _ = writeln!(s, "instance {} ({})", inst.id, params.join(", "));
        }
        let _ = writeln!(
            s,
            "curves: {} [{} backend, {}]",
            self.curves.len(),
            self.backend,
            if self.complete { "complete" } else { "possibly incomplete" }
        );
        for c in &self.curves {
            let sep = if c.separable { ", separable" } else { "" };
            let _ = writeln!(s, "  1 + ({})*x = 0   degree {}, {}{sep}", c.p, c.degree, c.field);
        }
        let d = &self.darboux;
        match (&d.skipped, d.basis.is_empty()) {
            (Some(why), _) => {
                let _ = writeln!(s, "darboux: skipped, {why}");
            }
            (None, true) => {
                let _ = writeln!(s, "darboux: no first integral from these curves (rank {})", d.rank);
            }
            (None, false) => {
                let _ = writeln!(s, "darboux: {} independent exponent vectors (rank {})", d.basis.len(), d.rank);
                for f in &d.basis {
                    let _ = writeln!(s, "  alpha = {}", alpha_text(f));
                }
                if let Some(f) = &d.preferred {
                    let _ = writeln!(s, "  first integral: {}", f.integral);
                }
            }
        }
        let b = &self.bound;
        let degrees: Vec<String> = b.admissible_degrees.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "bound: at most {} curves of positive degree (found {})", b.theorem_a, b.count);
        let _ = writeln!(s, "admissible degrees: {}", if degrees.is_empty() { "none".into() } else { degrees.join(", ") });
        if let Some(p) = &self.proportional {
            let _ = writeln!(s, "proportional pair: p = {}, K = {}", p.p, scalar_text(&p.k));
        }
        for note in &self.notes {
            let _ = writeln!(s, "note: {note}");
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub schema: u32,
    pub command: String,
    pub equation: EquationJson,
    pub p: String,
    pub residual: String,
    pub residual_coeffs: Vec<ScalarJson>,
    pub invariant: bool,
    /// `A / p` when the curve is invariant.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<String>,
}

impl CheckReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("residual: {}\n", self.residual);
        let verdict = if self.invariant { "invariant" } else { "not invariant" };
        let _ = writeln!(s, "verdict: {verdict}");
        if let Some(r) = &self.r {
            let _ = writeln!(s, "A/p = {r}");
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub schema: u32,
    pub command: String,
    pub n: usize,
    #[serde(rename = "degB")]
    pub deg_b: i64,
    pub bound: String,
    pub admissible_degrees: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealReport {
    pub schema: u32,
    pub command: String,
    pub equation: EquationJson,
    pub m: usize,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groebner: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<ScalarJson>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete_over: Option<String>,
}

pub fn poly_strings(ps: &[MultiPoly]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

impl IdealReport {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "p = {}\n",
            (0..=self.m).rev().map(|i| format!("x{i}*t^{i}")).collect::<Vec<_>>().join(" + ")
        );
        for (i, g) in self.generators.iter().enumerate() {
            let _ = writeln!(s, "f{i} = {g}");
        }
        if let Some(gb) = &self.groebner {
            let _ = writeln!(s, "groebner basis (lex, x0 < ... < x{}):", self.m);
            for g in gb {
                let _ = writeln!(s, "  {g}");
            }
        }
        if let Some(points) = &self.points {
            let _ = writeln!(s, "points: {}", points.len());
            for pt in points {
                let coords: Vec<String> = pt.iter().map(scalar_text).collect();
                let _ = writeln!(s, "  ({})", coords.join(", "));
            }
        }
        if let Some(c) = &self.complete_over {
            let _ = writeln!(s, "covers: {c}");
        }
        s
    }
}

pub fn param_strings(params: &std::collections::BTreeMap<String, Rational>) -> std::collections::BTreeMap<String, String> {
    params.iter().map(|(k, v)| (k.clone(), exact_string(v))).collect()
}

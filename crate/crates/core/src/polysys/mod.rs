//! The coefficient system of `p p' + A - B p = 0` in the unknown
//! coefficients `x0..xm` of `p`, solved with lex Gröbner bases.
//!
//! This backend does not factor `A`, so it independently checks
//! [`crate::invariant::find_invariant_curves`].

pub mod groebner;
pub mod multipoly;
pub mod singular;
pub mod solve;

pub use groebner::{groebner_basis, reduce, GroebnerConfig};
pub use multipoly::{Monomial, MultiPoly};
pub use singular::emit_singular;
pub use solve::{solve_zero_dim, ZeroDimSolution};

use crate::error::Result;
use crate::invariant::{curve_order, sharp_degrees, AbelEquation, Backend, CurveSet, InvariantCurve};
use crate::{Poly, QuadExt, QuadPoly, Rational};

/// Generators in `nvars` variables, with a reduced Gröbner basis once
/// [`buchberger`] has run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    pub nvars: usize,
    pub generators: Vec<MultiPoly>,
    pub groebner: Option<Vec<MultiPoly>>,
}

impl IdealBasis {
    pub fn new(nvars: usize, generators: Vec<MultiPoly>) -> Self {
        IdealBasis { nvars, generators, groebner: None }
    }
}

/// Coefficients of `t^0, t^1, ...` in `p p' + A - B p` with
/// `p = x_m t^m + ... + x0`; identically zero coefficients are dropped.
pub fn build_condinv_system(eq: &AbelEquation, m: usize) -> IdealBasis {
    let nvars = m + 1;
    let top = [eq.a().deg(), eq.b().deg().map(|k| k + m), (m > 0).then(|| 2 * m - 1)]
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(0);
    let mut gens = vec![MultiPoly::zero(nvars); top + 1];
    for i in 0..nvars {
        for j in 1..nvars {
            // x_i t^i * j x_j t^(j-1)
            let mono = Monomial::var(nvars, i).mul(&Monomial::var(nvars, j));
            gens[i + j - 1].add_term(mono, Rational::from_integer(j.into()));
        }
    }
    for (k, a) in eq.a().coeffs().iter().enumerate() {
        gens[k].add_term(Monomial::one(nvars), a.clone());
    }
    for (l, b) in eq.b().coeffs().iter().enumerate() {
        for i in 0..nvars {
            gens[l + i].add_term(Monomial::var(nvars, i), -b.clone());
        }
    }
    gens.retain(|f| !f.is_zero());
    IdealBasis::new(nvars, gens)
}

/// Computes the reduced lex Gröbner basis and checks that every generator
/// reduces to zero modulo it.
pub fn buchberger(basis: &IdealBasis, cfg: &GroebnerConfig) -> Result<IdealBasis> {
    let g = groebner_basis(&basis.generators, cfg)?;
    for f in &basis.generators {
        assert!(reduce(f, &g).is_zero(), "generator {f} is not in the computed ideal");
    }
    Ok(IdealBasis { groebner: Some(g), ..basis.clone() })
}

/// `x0 + x1 t + ... + xm t^m`.
pub fn point_to_poly(point: &[QuadExt]) -> QuadPoly {
    Poly::new(point.to_vec())
}

/// Invariant curves found by solving the coefficient system at the largest
/// admissible degree; curves of lower degree appear as points with
/// vanishing top coordinates.
pub fn find_invariant_curves_ideal(eq: &AbelEquation, cfg: &GroebnerConfig) -> Result<CurveSet> {
    let degrees = sharp_degrees(eq.n(), eq.deg_b());
    let Some(&m) = degrees.iter().next_back() else {
        return Ok(CurveSet { curves: vec![], complete: true });
    };
    let basis = buchberger(&build_condinv_system(eq, m), cfg)?;
    let sol = solve_zero_dim(&basis)?;
    let mut found: Vec<QuadPoly> = sol
        .points
        .iter()
        .map(|pt| point_to_poly(pt))
        .filter(|p| !p.is_zero())
        .collect();
    for p in &found {
        assert!(eq.residual(p).is_zero(), "ideal backend produced a non-invariant curve {p}");
    }
    found.sort_by(curve_order);
    Ok(CurveSet {
        curves: found.into_iter().map(|p| InvariantCurve::new(p, Backend::Ideal)).collect(),
        complete: sol.is_complete(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariant::find_invariant_curves;
    use crate::parse::{parse_poly, parse_poly_ext};

    fn eq(a: &str, b: &str) -> AbelEquation {
        AbelEquation::new(parse_poly(a).unwrap(), parse_poly(b).unwrap()).unwrap()
    }

    fn ex44() -> AbelEquation {
        eq("4*(t-1)*t*(t+1)*(3*t-1)*(3*t+2)", "6*(4*t^2+t-1)")
    }

    fn shown(b: &IdealBasis) -> Vec<String> {
        b.generators.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn example_system_generators() {
        let sys = build_condinv_system(&ex44(), 3);
        assert_eq!(
            shown(&sys),
            [
                "x0*x1+6*x0",
                "2*x0*x2+x1^2+6*x1-6*x0+8",
                "3*x0*x3+3*x1*x2+6*x2-6*x1-24*x0-12",
                "4*x1*x3+6*x3+2*x2^2-6*x2-24*x1-44",
                "5*x2*x3-6*x3-24*x2+12",
                "3*x3^2-24*x3+36",
            ]
        );
        assert!(sys.generators.iter().all(|f| f.total_degree() <= 2));
    }

    #[test]
    fn small_systems() {
        assert_eq!(shown(&build_condinv_system(&eq("t", "0"), 1)), ["x0*x1", "x1^2+1"]);
        let sys = build_condinv_system(&eq("2*t", "3"), 1);
        assert_eq!(shown(&sys), ["x0*x1-3*x0", "x1^2-3*x1+2"]);
        assert_eq!(emit_singular(&sys, "r"), "ring r=0,(x0,x1),lp; ideal I=x0*x1-3*x0,x1^2-3*x1+2;");
    }

    #[test]
    fn example_points() {
        let basis = buchberger(&build_condinv_system(&ex44(), 3), &GroebnerConfig::default()).unwrap();
        let sol = solve_zero_dim(&basis).unwrap();
        let pts: Vec<Vec<QuadExt>> = [[-4, -6, 4, 6], [0, -2, 0, 2], [0, -2, 4, 6]]
            .iter()
            .map(|r| r.iter().map(|&v| QuadExt::from(v)).collect())
            .collect();
        assert_eq!(sol.points, pts);
        assert!(sol.is_complete());
        // idempotent
        let again = buchberger(
            &IdealBasis::new(4, basis.groebner.clone().unwrap()),
            &GroebnerConfig::default(),
        )
        .unwrap();
        assert_eq!(again.groebner, basis.groebner);
    }

    #[test]
    fn quintic_points_match_divisor_backend() {
        let e = eq("18*t^5-20*t^3+2*t", "15*t^2-3");
        let ideal = find_invariant_curves_ideal(&e, &GroebnerConfig::default()).unwrap();
        let div = find_invariant_curves(&e).unwrap();
        assert_eq!(ideal.polys(), div.polys());
        assert_eq!(ideal.len(), 5);
        assert!(ideal.polys().contains(&parse_poly_ext("2*t^3-2*t").unwrap()));
    }

    #[test]
    fn irrational_points() {
        let e = eq("t", "0");
        let c = find_invariant_curves_ideal(&e, &GroebnerConfig::default()).unwrap();
        assert_eq!(c.polys(), find_invariant_curves(&e).unwrap().polys());
        assert_eq!(c.len(), 2);
        let sep = eq("2*t^2+2", "t^2+1");
        let c = find_invariant_curves_ideal(&sep, &GroebnerConfig::default()).unwrap();
        assert_eq!(c.polys(), vec![QuadPoly::constant(QuadExt::from(2))]);
        assert!(c.curves[0].separable);
    }
}

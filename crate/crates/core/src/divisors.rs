//! Factorization of `A` into blocks over Q and enumeration of its monic
//! divisors over Q or a single quadratic extension.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::Result;
use crate::factor::{quad_roots, quadratic_factor, rational_roots, squarefree_factor};
use crate::quad::QuadExt;
use crate::{Poly, QPoly, QuadPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// `t - root`.
    Linear { root: BigRational },
    /// Irreducible over Q, split over `Q(sqrt d)`.
    Quadratic { d: BigInt, roots: [QuadExt; 2] },
    /// Irreducible of odd degree at least 3; stays irreducible over every
    /// quadratic extension.
    Irreducible,
    /// Could not be split further; may still factor over some extension.
    Opaque,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    /// Monic.
    pub poly: QPoly,
    pub multiplicity: u32,
    pub kind: FactorKind,
}

/// `content * prod(poly_i ^ multiplicity_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPoly {
    pub content: BigRational,
    pub factors: Vec<Factor>,
}

impl FactoredPoly {
    pub fn expand(&self) -> QPoly {
        self.factors
            .iter()
            .fold(QPoly::constant(self.content.clone()), |acc, f| &acc * &f.poly.pow(f.multiplicity))
    }

    /// True when every block is fully understood over all quadratic fields.
    pub fn is_complete(&self) -> bool {
        self.factors.iter().all(|f| f.kind != FactorKind::Opaque)
    }
}

fn split_block(g: &QPoly, multiplicity: u32, out: &mut Vec<Factor>) {
    match g.deg() {
        None | Some(0) => {}
        Some(2) => {
            let c = g.coeffs();
            match quad_roots(&c[2], &c[1], &c[0]) {
                Ok(roots) if roots.len() == 2 && !roots[0].is_rational() => {
                    let d = roots[0].radicand().clone();
                    out.push(Factor {
                        poly: g.clone(),
                        multiplicity,
                        kind: FactorKind::Quadratic { d, roots: [roots[0].clone(), roots[1].clone()] },
                    });
                }
                _ => out.push(Factor { poly: g.clone(), multiplicity, kind: FactorKind::Opaque }),
            }
        }
        Some(k) => {
            if let Some(q) = quadratic_factor(g) {
                let rest = g.exact_div(&q).ok().flatten().expect("factor divides");
                split_block(&q, multiplicity, out);
                split_block(&rest, multiplicity, out);
            } else {
                // no linear and no quadratic factor: degree 3 and 5 are irreducible
                let kind = if k <= 5 && k % 2 == 1 { FactorKind::Irreducible } else { FactorKind::Opaque };
                out.push(Factor { poly: g.clone(), multiplicity, kind });
            }
        }
    }
}

/// Splits `a` into linear, quadratic and remaining blocks over Q.
pub fn factor_base(a: &QPoly) -> Result<FactoredPoly> {
    let sqf = squarefree_factor(a)?;
    let mut factors = Vec::new();
    for (g, m) in &sqf.factors {
        let mut rest = g.clone();
        for (r, _) in rational_roots(g)? {
            let lin = QPoly::linear_root(r.clone());
            rest = rest.exact_div(&lin)?.expect("root divides");
            factors.push(Factor { poly: lin, multiplicity: *m, kind: FactorKind::Linear { root: r } });
        }
        split_block(&rest, *m, &mut factors);
    }
    factors.sort_by(|x, y| {
        (x.poly.deg(), x.poly.coeffs()).cmp(&(y.poly.deg(), y.poly.coeffs()))
    });
    Ok(FactoredPoly { content: sqf.content, factors })
}

/// Monic divisors of a factored polynomial together with a completeness
/// flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorSet {
    pub divisors: Vec<QuadPoly>,
    pub complete: bool,
}

/// Exponent choices for one block: a single exponent for blocks that stay
/// whole, a pair of root exponents for split quadratics.
enum Choice {
    Whole { poly: QuadPoly, max: u32 },
    Roots { d: BigInt, lin: [QuadPoly; 2], max: u32 },
}

/// All monic divisors over Q or a single `Q(sqrt D)` whose degree lies in
/// `degrees` (every degree when `degrees` is empty).
///
/// Divisors mixing two different irrational fields are skipped, which
/// clears `complete`; so does any opaque block.
pub fn enumerate_divisors(f: &FactoredPoly, degrees: &BTreeSet<usize>) -> DivisorSet {
    let mut complete = f.is_complete();
    let choices: Vec<Choice> = f
        .factors
        .iter()
        .map(|fac| match &fac.kind {
            FactorKind::Quadratic { d, roots } => Choice::Roots {
                d: d.clone(),
                lin: [Poly::linear_root(roots[0].clone()), Poly::linear_root(roots[1].clone())],
                max: fac.multiplicity,
            },
            _ => Choice::Whole { poly: fac.poly.to_quad(), max: fac.multiplicity },
        })
        .collect();
    let mut out = BTreeSet::new();
    let mut state = Walk { choices: &choices, degrees, out: &mut out, skipped: false };
    state.go(0, QuadPoly::one(), 0, None);
    if state.skipped {
        complete = false;
    }
    DivisorSet { divisors: out.into_iter().map(|k| k.0).collect(), complete }
}

/// Orders divisors by degree, then by their coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ByDegree(QuadPoly);

impl PartialOrd for ByDegree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ByDegree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.deg(), self.0.coeffs()).cmp(&(other.0.deg(), other.0.coeffs()))
    }
}

impl std::ops::Deref for ByDegree {
    type Target = QuadPoly;
    fn deref(&self) -> &QuadPoly {
        &self.0
    }
}

struct Walk<'a> {
    choices: &'a [Choice],
    degrees: &'a BTreeSet<usize>,
    out: &'a mut BTreeSet<ByDegree>,
    skipped: bool,
}

impl Walk<'_> {
    fn go(&mut self, i: usize, acc: QuadPoly, deg: usize, field: Option<BigInt>) {
        if let Some(&max_deg) = self.degrees.iter().next_back() {
            if deg > max_deg {
                return;
            }
        }
        if i == self.choices.len() {
            if deg > 0 && (self.degrees.is_empty() || self.degrees.contains(&deg)) {
                self.out.insert(ByDegree(acc));
            }
            return;
        }
        match &self.choices[i] {
            Choice::Whole { poly, max } => {
                let step = poly.deg().unwrap_or(0);
                let mut cur = acc;
                for e in 0..=*max {
                    if e > 0 {
                        cur = &cur * poly;
                    }
                    self.go(i + 1, cur.clone(), deg + step * e as usize, field.clone());
                }
            }
            Choice::Roots { d, lin, max } => {
                for e0 in 0..=*max {
                    for e1 in 0..=*max {
                        let next_field = if e0 == e1 {
                            field.clone()
                        } else {
                            match &field {
                                Some(k) if k != d => {
                                    self.skipped = true;
                                    continue;
                                }
                                _ => Some(d.clone()),
                            }
                        };
                        let p = &lin[0].pow(e0) * &lin[1].pow(e1);
                        // conjugate pairs with equal exponents are rational
                        let p = match p.to_rational() {
                            Some(r) => r.to_quad(),
                            None => p,
                        };
                        self.go(i + 1, &acc * &p, deg + (e0 + e1) as usize, next_field);
                    }
                }
            }
        }
    }
}

/// Number of monic divisors, counting root exponents separately for split
/// quadratics.
pub fn divisor_count(f: &FactoredPoly) -> BigInt {
    f.factors.iter().fold(BigInt::one(), |acc, fac| {
        let m = BigInt::from(fac.multiplicity + 1);
        match fac.kind {
            FactorKind::Quadratic { .. } => acc * &m * &m,
            _ => acc * m,
        }
    })
}

/// True if `d` is a nonconstant monic polynomial.
pub fn is_monic(d: &QuadPoly) -> bool {
    d.deg().is_some_and(|k| k > 0) && d.leading().is_some_and(|c| c.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_poly_ext};
    use crate::scalar::int;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn factors_the_quintic() {
        let a = parse_poly("4*(t-1)*t*(t+1)*(3*t-1)*(3*t+2)").unwrap();
        let f = factor_base(&a).unwrap();
        assert_eq!(f.content, int(36));
        assert_eq!(f.factors.len(), 5);
        assert!(f.factors.iter().all(|x| matches!(x.kind, FactorKind::Linear { .. })));
        assert_eq!(f.expand(), a);
        assert!(f.is_complete());
    }

    #[test]
    fn quadratic_and_cubic_blocks() {
        let a = parse_poly("3*t*(t^2+1)^2*(1-t-t^3)").unwrap();
        let f = factor_base(&a).unwrap();
        assert_eq!(f.expand(), a);
        let kinds: Vec<_> = f.factors.iter().map(|x| x.kind.clone()).collect();
        assert!(matches!(kinds[0], FactorKind::Linear { .. }));
        assert!(matches!(&kinds[1], FactorKind::Quadratic { d, .. } if *d == BigInt::from(-1)));
        assert_eq!(kinds[2], FactorKind::Irreducible);
        assert!(f.is_complete());
        let quartic = factor_base(&parse_poly("t^4+1").unwrap()).unwrap();
        assert_eq!(quartic.factors[0].kind, FactorKind::Opaque);
        assert!(!quartic.is_complete());
    }

    #[test]
    fn divisors_over_gaussian_field() {
        let f = factor_base(&parse_poly("t*(t^2+1)").unwrap()).unwrap();
        let all = enumerate_divisors(&f, &BTreeSet::new());
        assert!(all.complete);
        assert_eq!(all.divisors.len() as u64, 7);
        assert_eq!(divisor_count(&f), BigInt::from(8));
        assert!(all.divisors.contains(&parse_poly_ext("t - sqrt(-1)").unwrap()));
        assert!(all.divisors.contains(&parse_poly_ext("t^2 + 1").unwrap()));
        assert!(all.divisors.iter().all(is_monic));
        let deg2 = enumerate_divisors(&f, &set(&[2]));
        assert_eq!(deg2.divisors.len(), 3);
        assert!(deg2.divisors.iter().all(|d| d.deg() == Some(2)));
    }

    #[test]
    fn mixed_fields_are_skipped() {
        let f = factor_base(&parse_poly("(t^2-2)*(t^2-3)").unwrap()).unwrap();
        let ds = enumerate_divisors(&f, &BTreeSet::new());
        assert!(!ds.complete);
        // 4 root choices per field, 2 * 2 of the pairs mix fields, minus the constant
        assert_eq!(ds.divisors.len(), 16 - 4 - 1);
        for d in &ds.divisors {
            assert!(d.field().is_ok());
        }
    }
}

//! Buchberger's algorithm for reduced lex Gröbner bases over Q.

use std::collections::BTreeSet;

use num_traits::One;

use super::multipoly::{Monomial, MultiPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Maximum number of S-polynomials reduced before giving up.
    pub budget: usize,
    /// Apply the coprime and chain criteria to discard pairs.
    pub criteria: bool,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { budget: 10_000, criteria: true }
    }
}

/// Remainder of `f` on division by `basis` (every element monic), reducing
/// all terms, not only the leading one.
pub fn reduce(f: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let mut p = f.clone();
    let mut r = MultiPoly::zero(f.nvars());
    while let Some((m, c)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match divisor {
            Some(g) => {
                let (lm, lc) = g.leading().expect("nonzero divisor");
                let q = m.div(lm);
                p.sub_mul_term(&q, &(&c / lc), g);
            }
            None => {
                p.add_term(m.clone(), -c.clone());
                r.add_term(m, c);
            }
        }
    }
    r
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (lf, cf) = f.leading().expect("nonzero");
    let (lg, cg) = g.leading().expect("nonzero");
    let l = lf.lcm(lg);
    let mut s = f.mul_term(&l.div(lf), &cf.recip());
    s.sub_mul_term(&l.div(lg), &cg.recip(), g);
    s
}

/// Pending S-pair, ordered by the lcm of the leading monomials (the normal
/// selection strategy), then by indices for determinism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
}

fn lm(g: &MultiPoly) -> &Monomial {
    g.leading_monomial().expect("basis elements are nonzero")
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted by
/// ascending leading monomial. Zero generators are ignored; the unit ideal
/// gives `[1]`.
pub fn groebner_basis(gens: &[MultiPoly], cfg: &GroebnerConfig) -> Result<Vec<MultiPoly>> {
    let mut g: Vec<MultiPoly> = gens.iter().filter(|f| !f.is_zero()).map(MultiPoly::monic).collect();
    let mut pairs: BTreeSet<Pair> = BTreeSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.insert(Pair { lcm: lm(&g[i]).lcm(lm(&g[j])), i, j });
        }
    }
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut reductions = 0usize;
    while let Some(pair) = pairs.pop_first() {
        let Pair { lcm, i, j } = pair;
        done.insert((i, j));
        if cfg.criteria {
            if lm(&g[i]).coprime(lm(&g[j])) {
                continue;
            }
            let pending = |a: usize, b: usize| !done.contains(&(a.min(b), a.max(b)));
            let chain = (0..g.len())
                .any(|k| k != i && k != j && lm(&g[k]).divides(&lcm) && !pending(i, k) && !pending(j, k));
            if chain {
                continue;
            }
        }
        reductions += 1;
        if reductions > cfg.budget {
            return Err(Error::BudgetExceeded(cfg.budget));
        }
        let h = reduce(&s_polynomial(&g[i], &g[j]), &g);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        let new = g.len();
        for k in 0..new {
            pairs.insert(Pair { lcm: lm(&g[k]).lcm(lm(&h)), i: k, j: new });
        }
        g.push(h);
    }
    Ok(interreduce(g))
}

/// Minimal, fully reduced, monic basis from a Gröbner basis.
fn interreduce(g: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let mut g: Vec<MultiPoly> = g.into_iter().filter(|f| !f.is_zero()).collect();
    g.sort_by(|a, b| lm(a).cmp(lm(b)));
    let mut minimal: Vec<MultiPoly> = Vec::new();
    for f in g {
        // sorted ascending, so only earlier elements can divide
        if !minimal.iter().any(|h| lm(h).divides(lm(&f))) {
            minimal.push(f);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<MultiPoly> =
            minimal.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, f)| f.clone()).collect();
        out.push(reduce(&minimal[k], &others).monic());
    }
    out.sort_by(|a, b| lm(a).cmp(lm(b)));
    out
}

/// Checks the reduced-basis shape: monic, no leading monomial divides
/// another, no term of any element divisible by another's leading monomial.
pub fn is_reduced(g: &[MultiPoly]) -> bool {
    g.iter().enumerate().all(|(k, f)| {
        let Some((_, lc)) = f.leading() else { return false };
        lc.is_one()
            && g.iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .all(|(_, h)| f.terms().all(|(m, _)| !lm(h).divides(m)))
    })
}

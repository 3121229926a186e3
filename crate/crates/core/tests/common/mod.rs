//! Random equations for the property suites. Most generators plant at
//! least one invariant curve so the properties are not vacuous.

#![allow(dead_code)]

use abel_core::families::{classify_cubic, generate_pair, proportional_family, CubicVariant, FamilySpec};
use abel_core::invariant::AbelEquation;
use abel_core::scalar::{int, rat};
use abel_core::{QPoly, Rational};
use proptest::prelude::*;

pub fn t_minus(r: i64) -> QPoly {
    QPoly::from_ints(&[-r, 1])
}

fn product(roots: &[i64]) -> QPoly {
    roots.iter().fold(QPoly::one(), |acc, &r| &acc * &t_minus(r))
}

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![-4i64..=-1, 1i64..=4]
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (nonzero(), 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

/// Unstructured `A` and `B`.
pub fn arb_free() -> impl Strategy<Value = AbelEquation> {
    (prop::collection::vec(-3i64..=3, 2..=6), prop::collection::vec(-3i64..=3, 0..=3))
        .prop_filter_map("A = 0", |(a, b)| AbelEquation::new(QPoly::from_ints(&a), QPoly::from_ints(&b)).ok())
}

/// `A = c prod (t - r_i)` with distinct integer roots, and `B = p' + A/p`
/// for a planted divisor `p = gamma prod_{i in S} (t - r_i)`.
pub fn arb_split(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = AbelEquation> {
    n.prop_flat_map(|n| {
        (
            prop::sample::subsequence((-4i64..=4).collect::<Vec<_>>(), n),
            nonzero(),
            small_rational(),
            prop::collection::vec(any::<bool>(), n),
        )
    })
    .prop_filter_map("empty divisor", |(roots, c, gamma, pick)| {
        let a = product(&roots).scale(&int(c));
        let chosen: Vec<i64> = roots.iter().zip(&pick).filter(|(_, &b)| b).map(|(&r, _)| r).collect();
        if chosen.is_empty() {
            return None;
        }
        let p = product(&chosen).scale(&gamma);
        let b = &p.derivative() + &a.exact_div(&p).ok()??;
        AbelEquation::new(a, b).ok()
    })
}

/// Equations from the two-curve generator.
pub fn arb_pair() -> impl Strategy<Value = AbelEquation> {
    (
        prop::sample::subsequence(vec![-2i64, -1, 0, 1, 2], 1..=2),
        0u32..=1,
        prop::collection::vec(-2i64..=2, 1..=2),
        small_rational(),
        prop::collection::vec(0u32..=2, 2),
    )
        .prop_filter_map("degenerate", |(roots, square, s2, c, gamma)| {
            let mut q = product(&roots);
            if square == 1 {
                q = &q * &t_minus(roots[0]);
            }
            let gamma = gamma[..roots.len()].to_vec();
            generate_pair(&FamilySpec { q, s2: QPoly::from_ints(&s2), c, gamma }).ok().map(|g| g.eq)
        })
}

/// Cubic equations from the classification, often with three or four curves.
pub fn arb_cubic() -> impl Strategy<Value = AbelEquation> {
    (-2i64..=2, nonzero(), -2i64..=2, prop::sample::select(vec![-2i64, -1, 1, 2, 3]), any::<bool>())
        .prop_filter_map("degenerate", |(w, c1, z, c, multiple)| {
            let variant = if multiple { CubicVariant::QMultipleDifference } else { CubicVariant::ConstantDifference };
            let s1 = t_minus(z).scale(&int(c1));
            classify_cubic(&t_minus(w), &s1, &int(c), variant).ok().map(|k| k.eq)
        })
}

/// `A = K p p'`, `B = (K + 1) p'`.
pub fn arb_proportional() -> impl Strategy<Value = AbelEquation> {
    (prop::collection::vec(-3i64..=3, 2..=4), small_rational()).prop_filter_map("degenerate", |(p, k)| {
        proportional_family(&QPoly::from_ints(&p), &k).ok().map(|f| f.eq)
    })
}

pub fn arb_equation() -> impl Strategy<Value = AbelEquation> {
    prop_oneof![
        1 => arb_free(),
        2 => arb_split(1..=5),
        2 => arb_pair(),
        2 => arb_cubic(),
        1 => arb_proportional(),
    ]
}

pub fn equation_deg_at_most(n: usize) -> impl Strategy<Value = AbelEquation> {
    arb_equation().prop_filter("degree", move |e| e.n() <= n)
}

/// A random `(p, K)` for the proportional family: `deg p` in 1..=3.
pub fn arb_p_k() -> impl Strategy<Value = (QPoly, Rational)> {
    (prop::collection::vec(-3i64..=3, 1..=3), nonzero(), small_rational()).prop_filter_map(
        "K in {0, 1}",
        |(mut p, lead, k)| {
            p.push(lead);
            (k != int(1)).then(|| (QPoly::from_ints(&p), k))
        },
    )
}

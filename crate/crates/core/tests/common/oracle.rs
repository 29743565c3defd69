//! Brute-force reference computations, written without the engine.
#![allow(dead_code)]

use std::collections::BTreeSet;

use hkc_core::{Scalar, Series};
use num_traits::Zero;

type Dense = Vec<Scalar>;

fn dense(f: &Series, d: usize) -> Dense {
    (0..d).map(|e| f.coeff(e)).collect()
}

fn mul(a: &Dense, b: &Dense) -> Dense {
    let d = a.len();
    let mut out = vec![Scalar::zero(); d];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().take(d - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn lead(v: &Dense) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// Valuations of the span of all monomials in `gens` modulo `t^d`, by plain
/// row reduction of dense coefficient vectors.
pub fn monomial_span_values(gens: &[Series], d: usize) -> BTreeSet<usize> {
    let gens: Vec<Dense> = gens.iter().map(|g| dense(g, d)).collect();
    let orders: Vec<usize> = gens.iter().map(|g| lead(g).unwrap_or(d)).collect();
    let mut one = vec![Scalar::zero(); d];
    if d > 0 {
        one[0] = Scalar::from_integer(1.into());
    }
    let mut rows: Vec<Dense> = Vec::new();
    // (monomial value, order, index of the last variable used)
    let mut stack = vec![(one, 0usize, 0usize)];
    while let Some((m, o, next)) = stack.pop() {
        for i in next..gens.len() {
            if o + orders[i] < d {
                stack.push((mul(&m, &gens[i]), o + orders[i], i));
            }
        }
        rows.push(m);
    }
    let mut echelon: Vec<Dense> = Vec::new();
    for mut r in rows {
        while let Some(l) = lead(&r) {
            match echelon.iter().find(|e| lead(e) == Some(l)) {
                Some(e) => {
                    let c = &r[l] / &e[l];
                    for k in l..d {
                        let delta = &c * &e[k];
                        r[k] -= delta;
                    }
                }
                None => {
                    echelon.push(r);
                    break;
                }
            }
        }
    }
    echelon.iter().filter_map(lead).collect()
}

/// Sums of `gens` up to `bound` (with 0), by breadth-first search.
pub fn sums_up_to(gens: &[usize], bound: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([0usize]);
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = x + g;
            if g > 0 && y <= bound && seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen
}

/// Elements of `set \ {0}` below `bound` that are not a sum of two nonzero
/// elements of `set`.
pub fn irreducibles(set: &BTreeSet<usize>, bound: usize) -> Vec<usize> {
    set.iter()
        .copied()
        .filter(|&x| x > 0 && x < bound)
        .filter(|&x| {
            !set.iter()
                .any(|&y| y > 0 && y < x && set.contains(&(x - y)))
        })
        .collect()
}

/// Least `c` with `[c, bound]` inside `set`.
pub fn conductor_of(set: &BTreeSet<usize>, bound: usize) -> usize {
    (0..=bound)
        .rev()
        .find(|x| !set.contains(x))
        .map_or(0, |x| x + 1)
}

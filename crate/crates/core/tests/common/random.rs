//! Seeded random parametrizations and ring elements.
#![allow(dead_code)]

use hkc_core::{scalar, Parametrization, RingReport, Series};
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;

/// A polynomial `c t^lead + ...` with small nonzero integer coefficients and
/// exponents in `[lead, max_exp]`.
pub fn poly<R: Rng>(rng: &mut R, lead: usize, max_exp: usize, extra: usize) -> Series {
    let mut terms = vec![(lead, rng.gen_range(1..=3i64))];
    for _ in 0..extra {
        if lead < max_exp {
            let e = rng.gen_range(lead + 1..=max_exp);
            let c = *[-3i64, -2, -1, 1, 2, 3].choose(rng).unwrap();
            terms.push((e, c));
        }
    }
    Series::poly(&terms)
}

/// At most `max_gens` polynomial generators of order `>= 2` with exponents
/// `<= max_exp`, whose exponents have gcd 1.
pub fn parametrization<R: Rng>(rng: &mut R, max_gens: usize, max_exp: usize) -> Parametrization {
    loop {
        let n = rng.gen_range(1..=max_gens);
        let gens: Vec<Series> = (0..n)
            .map(|_| {
                let lead = rng.gen_range(2..=max_exp);
                let extra = rng.gen_range(0..=2);
                poly(rng, lead, max_exp, extra)
            })
            .collect();
        let g = gens
            .iter()
            .flat_map(|s| s.terms().map(|(e, _)| e).collect::<Vec<_>>())
            .fold(0usize, |g, e| g.gcd(&e));
        if g == 1 {
            return Parametrization::new(gens).unwrap();
        }
    }
}

/// Pure monomials `t^{g_i}` with gcd 1.
pub fn monomial_ring<R: Rng>(rng: &mut R, max_gens: usize, max_exp: usize) -> Parametrization {
    loop {
        let n = rng.gen_range(2..=max_gens);
        let exps: Vec<usize> = (0..n).map(|_| rng.gen_range(2..=max_exp)).collect();
        if exps.iter().fold(0usize, |g, &e| g.gcd(&e)) == 1 {
            return Parametrization::new(exps.into_iter().map(Series::t_pow).collect()).unwrap();
        }
    }
}

/// A random element of the ring of `gens` of order `> floor`: a combination
/// of monomials in the generators plus a tail above the conductor.
pub fn element_above<R: Rng>(
    rng: &mut R,
    gens: &[Series],
    conductor: usize,
    floor: usize,
) -> Series {
    let mut f = Series::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut m = Series::constant(scalar::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3)));
        let mut order = 0;
        while order <= floor {
            let g = gens.choose(rng).unwrap();
            order += g.order().unwrap().unwrap();
            m = &m * g;
        }
        f = &f + &m;
    }
    let start = conductor.max(floor + 1);
    for k in 0..rng.gen_range(0..=2) {
        let c = scalar::int(rng.gen_range(-4..=4));
        f = &f + &Series::monomial(c, start + k * rng.gen_range(1..=3));
    }
    f
}

/// Same-value replacements `x_i + h_i` with `h_i ∈ R` of order `> a_i`.
pub fn replace_generators<R: Rng>(
    rng: &mut R,
    report: &RingReport,
    gens: &[Series],
) -> Vec<Series> {
    gens.iter()
        .map(|x| {
            let a = x.order().unwrap().unwrap();
            x + &element_above(rng, gens, report.conductor_degree, a)
        })
        .collect()
}

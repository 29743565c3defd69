//! Acceptance suite: eleven criteria, one PASS/FAIL line each.
//!
//! Every comparison is exact (rational arithmetic, set and sequence
//! equality); no numeric tolerance is involved anywhere. Randomized criteria
//! use fixed ChaCha seeds.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::oracle::{conductor_of, irreducibles, monomial_span_values, sums_up_to};
use common::random;
use hkc::parse::parse_generators;
use hkc_core::engine::ring_closure;
use hkc_core::transforms::{
    drop_redundant, extend_by_conductor, hk_generators, hk_generators_of, perturb_check,
    rings_equal, torsion_witness, truncate_at, truncate_parametrization,
};
use hkc_core::{analyze, AnalysisConfig, Parametrization, Poly, RingReport, Series};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const OCTIC: &str = "t^8, t^12+t^14+t^15";
const SEXTIC: &str = "t^6, t^9+t^10, 2*t^19+t^20+t^41";
const QUINTIC: &str = "t^5, t^7, t^12+t^23";

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn cfg() -> AnalysisConfig {
    AnalysisConfig::default()
}

fn ring(text: &str) -> (Vec<Series>, RingReport) {
    let input = parse_generators(text).unwrap();
    let r = analyze(&input.param, &cfg()).unwrap();
    (input.raw, r)
}

fn check(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn octic_semigroup() -> Outcome {
    let (_, r) = ring(OCTIC);
    let w = r.value_semigroup.min_generators().to_vec();
    let hk = r.hk.sequence.clone();
    check(
        hk == [8, 12],
        format!("hk_sequence {hk:?}, expected [8, 12]"),
    )?;
    check(
        w == [8, 12, 26, 55],
        format!("min_generators {w:?}, expected [8, 12, 26, 55] (hk_sequence {hk:?} matches)"),
    )?;
    Ok(format!("min_generators {w:?}, hk {hk:?}"))
}

fn sextic_ring() -> Outcome {
    let (_, r) = ring(SEXTIC);
    let w = r.value_semigroup.min_generators().to_vec();
    check(w == [6, 9, 19, 41], format!("min_generators {w:?}"))?;
    check(
        r.hk.sequence == [6, 9, 41],
        format!("hk_sequence {:?}", r.hk.sequence),
    )?;
    check(
        r.conductor_degree == 36,
        format!("conductor {}", r.conductor_degree),
    )?;
    check(!r.conductor_in_m2, "conductor_in_m2 should be false")?;
    // x2^2 reduced against the table of k[[x1]] = k[[t^6]]
    let x1 = Parametrization::new(vec![Series::t_pow(6)]).unwrap();
    let t1 = ring_closure(&x1, r.precision()).unwrap();
    let x2 = Series::poly(&[(9, 1), (10, 1)]);
    let red = t1.reduce(&(&x2 * &x2)).unwrap();
    // the remainder is known modulo t^D, D = working precision
    let d = r.precision();
    let remainder = red.remainder.truncate(d);
    let expected = Series::poly(&[(19, 2), (20, 1)]);
    check(
        red.remainder.prec() == hkc_core::Precision::Finite(d),
        "remainder precision",
    )?;
    check(
        remainder == expected,
        format!("remainder {}", red.remainder),
    )?;
    check(
        remainder == &(&x2 * &x2) - &Series::t_pow(18),
        "remainder is not x2^2 - x1^3",
    )?;
    check(
        red.used == [(18, hkc_core::scalar::int(1))],
        format!("used {:?}", red.used),
    )?;
    check(r.m_squared.contains_key(19), "19 not in v(m^2)")?;
    check(
        r.in_m_squared(&red.remainder).unwrap(),
        "remainder not in m^2",
    )?;
    Ok(format!(
        "min_generators {w:?}, hk [6, 9, 41], c = 36, remainder {remainder}"
    ))
}

fn quintic_truncation() -> Outcome {
    let (_, r) = ring(QUINTIC);
    let w = r.value_semigroup.min_generators().to_vec();
    check(w == [5, 7, 23], format!("min_generators {w:?}"))?;
    check(
        r.conductor_degree == 19,
        format!("conductor {}", r.conductor_degree),
    )?;
    check(
        r.hk.sequence == [5, 7, 23],
        format!("hk {:?}", r.hk.sequence),
    )?;
    let (p, d) = truncate_parametrization(&r).unwrap();
    check(d == 24, format!("d = {d}"))?;
    check(
        rings_equal(&p, r.parametrization(), &cfg()).unwrap(),
        "truncation at 24 changed the ring",
    )?;
    let short = truncate_at(r.parametrization(), 19).unwrap();
    let rs = analyze(&short, &cfg()).unwrap();
    check(
        rs.value_semigroup.min_generators() == [5, 7],
        format!(
            "truncated min_generators {:?}",
            rs.value_semigroup.min_generators()
        ),
    )?;
    check(
        rs.conductor_degree == 24,
        format!("truncated conductor {}", rs.conductor_degree),
    )?;
    check(
        !rings_equal(&short, r.parametrization(), &cfg()).unwrap(),
        "truncation at 19 kept the ring",
    )?;
    Ok("d = 24 keeps the ring; d = 19 gives <5, 7>, c = 24, different ring".into())
}

fn hk_certificate() -> Outcome {
    let (raw, r) = ring(SEXTIC);
    let hk = hk_generators_of(&r, &raw).unwrap();
    let x3 = &hk.generators[2];
    let z3 = &hk.certificates.as_ref().unwrap()[2];
    let expected = {
        let mut p = Poly::monomial(hkc_core::scalar::int(1), vec![0, 2]);
        p.add_term(vec![3], hkc_core::scalar::int(-1));
        p
    };
    check(*x3 == Series::t_pow(41), format!("x3 = {x3}"))?;
    check(*z3 == expected, format!("z3 = {z3}"))?;
    check(x3 + &z3.eval(&hk.generators) == raw[2], "y3 != x3 + z3")?;
    Ok(format!("x3 = {x3}, z3 = {z3}"))
}

// Herzog-Kunz generators of the three reference rings
fn hk_rings() -> Vec<(RingReport, Vec<Series>)> {
    [OCTIC, SEXTIC, QUINTIC]
        .iter()
        .map(|t| {
            let (_, r) = ring(t);
            let hk =
                hk_generators(&analyze(&drop_redundant(&r).unwrap(), &cfg()).unwrap()).unwrap();
            (r, hk.generators)
        })
        .collect()
}

fn uniqueness() -> Outcome {
    let rings = hk_rings();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for trial in 0..100 {
        let (r, xs) = &rings[trial % 3];
        let gens: Vec<Series> = xs
            .iter()
            .map(|x| {
                let a = x.order().unwrap().unwrap();
                let c = hkc_core::scalar::ratio(
                    rng.gen_range(1..=4) * if rng.gen() { 1 } else { -1 },
                    rng.gen_range(1..=3),
                );
                &x.scale(&c) + &random::element_above(&mut rng, xs, r.conductor_degree, a)
            })
            .collect();
        let q = Parametrization::new(gens).unwrap();
        check(
            rings_equal(r.parametrization(), &q, &cfg()).unwrap(),
            format!("trial {trial}: ring changed"),
        )?;
    }
    Ok("100/100 replacements keep the ring".into())
}

fn high_order_in_m_squared() -> Outcome {
    let rings = hk_rings();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for trial in 0..100 {
        let (r, _) = &rings[trial % 3];
        let f = random::element_above(
            &mut rng,
            r.parametrization().gens(),
            r.conductor_degree,
            r.hk.last(),
        );
        check(
            r.in_m_squared(&f).unwrap(),
            format!("trial {trial}: {f} not in m^2"),
        )?;
    }
    Ok("100/100 elements of order > a_n lie in m^2".into())
}

fn perturbations() -> Outcome {
    let rings = hk_rings();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    for trial in 0..100 {
        let (r, _) = &rings[trial % 3];
        let gens = r.parametrization().gens();
        let perturbed: Vec<Series> = gens
            .iter()
            .map(|y| y + &random::element_above(&mut rng, gens, r.conductor_degree, r.hk.last()))
            .collect();
        let q = Parametrization::new(perturbed).unwrap();
        check(
            perturb_check(r, &q, &cfg()).unwrap(),
            format!("trial {trial}: ring changed"),
        )?;
    }
    Ok("100/100 perturbations keep the ring".into())
}

fn gcd(set: &BTreeSet<usize>) -> usize {
    set.iter()
        .fold(0, |g, &x| num_integer::Integer::gcd(&g, &x))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut done = 0;
    while done < 50 {
        let p = random::parametrization(&mut rng, 3, 12);
        let brute = monomial_span_values(p.gens(), 60);
        if gcd(&brute) != 1 {
            continue;
        }
        let keys = ring_closure(&p, 60).unwrap().key_set();
        check(
            keys == brute,
            format!("case {done}: table {keys:?} vs brute force {brute:?}"),
        )?;
        done += 1;
    }
    Ok("50/50 random rings: table keys = brute-force values below t^60".into())
}

fn hk_inside_min_generators() -> Outcome {
    let mut reports: Vec<RingReport> = [OCTIC, SEXTIC, QUINTIC, "t^3, t^4, t^5", "t^4, t^6+t^7"]
        .iter()
        .map(|t| ring(t).1)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    while reports.len() < 25 {
        let p = random::parametrization(&mut rng, 3, 9);
        if let Ok(r) = analyze(&p, &cfg()) {
            reports.push(r);
        }
    }
    for r in &reports {
        let w = r.value_semigroup.min_generators();
        let a = &r.hk.sequence;
        check(a[0] == w[0], format!("a1 = {} but w1 = {}", a[0], w[0]))?;
        if a.len() >= 2 {
            check(a[1] == w[1], format!("a2 = {} but w2 = {}", a[1], w[1]))?;
        }
        check(
            a.iter().all(|x| w.contains(x)),
            format!("hk {a:?} not inside {w:?}"),
        )?;
    }
    for k in 0..20 {
        let p = random::monomial_ring(&mut rng, 5, 20);
        let r = analyze(&p, &cfg()).unwrap();
        let bound = r.conductor_degree + r.multiplicity + 1;
        let brute = irreducibles(&sums_up_to(&p.orders(), bound), bound);
        check(
            r.hk.sequence == brute,
            format!("monomial ring {k}: hk {:?} vs {brute:?}", r.hk.sequence),
        )?;
    }
    Ok(format!(
        "{} rings: a1 = w1, a2 = w2, hk inside; 20 monomial rings: hk = min_generators",
        reports.len()
    ))
}

fn torsion() -> Outcome {
    for (text, a1, an) in [(SEXTIC, 6, 41), ("t^3, t^4, t^5", 3, 5)] {
        let (_, r) = ring(text);
        let w = torsion_witness(&r, &cfg())
            .unwrap()
            .ok_or(format!("{text}: no witness"))?;
        check(
            (w.a1, w.an) == (a1, an),
            format!("{text}: a1 = {}, an = {}", w.a1, w.an),
        )?;
        check(
            w.x1 == Series::t_pow(a1) && w.xn == Series::t_pow(an),
            format!("{text}: x1, xn not monomial"),
        )?;
        check(
            w.image_in_normalization.is_zero() && w.image_in_normalization.is_exact(),
            format!("{text}: image {}", w.image_in_normalization),
        )?;
    }
    let (raw, r) = ring("t^4, t^6+t^7");
    let brute = monomial_span_values(&raw, 48);
    let c = conductor_of(&brute, 47);
    check(
        c == 16 && r.conductor_degree == 16,
        format!("brute-force conductor {c}, engine {}", r.conductor_degree),
    )?;
    check(r.hk.last() < c, "a_n >= c_R")?;
    check(
        torsion_witness(&r, &cfg()).unwrap().is_none(),
        "witness produced with a_n < c_R",
    )?;
    Ok("witnesses with zero image for a_n >= c_R; none for t^4, t^6+t^7 (c_R = 16)".into())
}

fn extension() -> Outcome {
    let (_, r) = ring("t^4, t^6+t^7");
    check(r.conductor_in_m2, "conductor not in m^2")?;
    let e = extend_by_conductor(&r, &cfg()).unwrap();
    let n = r.embedding_dimension;
    check(e.c_s + 4 == r.conductor_degree, format!("c_S = {}", e.c_s))?;
    check(
        e.hk_s.len() == n + e.b_list.len(),
        format!("|hk_S| = {}", e.hk_s.len()),
    )?;
    let tail: BTreeSet<usize> = e.hk_s.sequence[e.i0..].iter().copied().collect();
    let mut expected: BTreeSet<usize> = r.hk.sequence[e.i0..].iter().copied().collect();
    expected.extend(&e.b_list);
    check(tail == expected, format!("tail {tail:?} vs {expected:?}"))?;
    let mut gens = r.value_semigroup.min_generators().to_vec();
    gens.extend(&e.b_list);
    let bound = e.c_s + 2 * r.multiplicity;
    let closure = sums_up_to(&gens, bound);
    let vs = e.value_semigroup_s.elements_up_to(bound);
    check(vs == closure, format!("V(S) {vs:?} vs closure {closure:?}"))?;
    let brute = monomial_span_values(e.s_gens.gens(), bound + 1);
    check(
        brute == closure,
        "brute-force V(S) differs from the closure",
    )?;
    Ok(format!(
        "b = {:?}, c_S = {}, hk_S = {:?}, V(S) = <{:?}>",
        e.b_list,
        e.c_s,
        e.hk_s.sequence,
        e.value_semigroup_s.min_generators()
    ))
}

fn main() {
    let criteria: [(&str, Criterion); 11] = [
        (
            "octic ring: V(R) = <8,12,26,55>, hk = [8,12]",
            octic_semigroup,
        ),
        (
            "sextic ring: invariants and the x2^2 - x1^3 reduction",
            sextic_ring,
        ),
        ("<5,7,23> ring: truncation at 24 vs 19", quintic_truncation),
        ("Herzog-Kunz generators with certificates", hk_certificate),
        ("uniqueness under same-value replacements (100)", uniqueness),
        (
            "elements of order > a_n lie in m^2 (100)",
            high_order_in_m_squared,
        ),
        (
            "perturbations above t^a_n keep the ring (100)",
            perturbations,
        ),
        (
            "engine vs brute-force monomial span (50)",
            oracle_equivalence,
        ),
        (
            "hk inside min_generators; monomial rings (20)",
            hk_inside_min_generators,
        ),
        ("torsion witness", torsion),
        ("conductor extension", extension),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} [exact] ({ms} ms): {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} [exact] ({ms} ms): {detail}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

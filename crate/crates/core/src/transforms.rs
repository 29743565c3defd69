//! Rewriting of parametrizations: parameter normalization, Herzog–Kunz
//! generators with certificates, tail monomialization, truncation, ring
//! equality, the conductor extension `S = R[𝔠_R / x1]` and the differential
//! torsion witness.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::One;

use crate::engine::{
    analyze_ring, coordinates, rank, AnalysisConfig, Parametrization, RingAnalysis,
};
use crate::error::Error;
use crate::invariants::{analyze, report_for, HkProfile, RingReport};
use crate::poly::Poly;
use crate::scalar::{self, Scalar};
use crate::semigroup::NumericalSemigroup;
use crate::series::{Precision, Series};
use crate::Result;

/// `o(x) = v(x / (c t^{v(x)}) - 1)` for the leading coefficient `c`; `None`
/// for a pure monomial.
pub fn unit_order(x: &Series) -> Result<Option<usize>> {
    let Some(v) = x.order()? else {
        return Err(Error::InvalidArgument(
            "unit order of the zero series".into(),
        ));
    };
    let x = x.monic();
    if let Some((e, _)) = x.terms().nth(1) {
        return Ok(Some(e - v));
    }
    match x.prec() {
        Precision::Exact => Ok(None),
        Precision::Finite(d) => Err(Error::IndeterminateOrder(d - v)),
    }
}

/// Result of [`normalize_parameter`].
#[derive(Clone, Debug)]
pub struct Normalized {
    /// Generators in the new parameter, truncated to polynomials at `precision`.
    pub param: Parametrization,
    /// `s(t) = t * u^{1/a1}`; the new parameter is `s` of the old one.
    pub substitution: Series,
    /// `max(a_n + 1, c_R)`, raised past the largest generator order: the old
    /// generators equal `param ∘ s` below it.
    pub precision: usize,
}

/// Changes the parameter so that the first generator of least order becomes
/// exactly `t^{a1}`. All orders, the value semigroup and the Herzog–Kunz
/// sequence are unchanged.
pub fn normalize_parameter(report: &RingReport) -> Result<Normalized> {
    let param = report.parametrization();
    let a1 = param.multiplicity();
    let top = param.orders().into_iter().max().unwrap_or(0);
    let d = (report.hk.last() + 1)
        .max(report.conductor_degree)
        .max(top + 1);
    let j = param
        .orders()
        .iter()
        .position(|&o| o == a1)
        .expect("generator of least order");
    let y = &param.gens()[j];
    if y.is_exact() && y.num_terms() == 1 {
        return Ok(Normalized {
            param: param.clone(),
            substitution: Series::t(),
            precision: d,
        });
    }
    let avail = param.precision().finite();
    if let Some(p) = avail {
        if p < d {
            return Err(Error::InsufficientInputPrecision {
                required: d,
                available: p,
            });
        }
    }
    let unit = y.unshift(a1)?;
    let root = unit.nth_root_unit(a1 as u32, d)?;
    let s = root.shift(1).with_precision(Precision::Finite(d));
    let r = s.revert(d)?;
    let mut gens = Vec::with_capacity(param.len());
    for (i, g) in param.gens().iter().enumerate() {
        if i == j {
            gens.push(Series::t_pow(a1));
        } else {
            gens.push(g.compose(&r)?.truncate(d));
        }
    }
    Ok(Normalized {
        param: Parametrization::new(gens)?,
        substitution: s.truncate(d),
        precision: d,
    })
}

/// `f = p(x1, ..., x_{i0}) + g` with `v(g) > l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub p: Poly,
    pub g: Series,
}

// echelon table of the monomials in some x's below a bound, each row carrying
// the polynomial it came from
struct MonomialTable {
    bound: usize,
    rows: BTreeMap<usize, (Series, Poly)>,
}

impl MonomialTable {
    fn new(xs: &[Series], bound: usize) -> Result<Self> {
        let orders: Vec<usize> = xs
            .iter()
            .map(|x| {
                x.order()?
                    .ok_or(Error::InvalidArgument("zero generator".into()))
            })
            .collect::<Result<_>>()?;
        let mut monomials: Vec<(usize, Vec<u32>, Series)> = Vec::new();
        let mut stack = alloc::vec![(0usize, alloc::vec![0u32; xs.len()], Series::one(), 0usize)];
        while let Some((order, alpha, value, next)) = stack.pop() {
            for i in next..xs.len() {
                let o = order + orders[i];
                if o < bound {
                    let mut beta = alpha.clone();
                    beta[i] += 1;
                    stack.push((o, beta, value.mul_capped(&xs[i], bound), i));
                }
            }
            monomials.push((order, alpha, value));
        }
        // ties go to the monomial with the larger power of the earlier variables
        monomials.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
        let mut table = MonomialTable {
            bound,
            rows: BTreeMap::new(),
        };
        for (_, alpha, value) in monomials {
            let (rem, used) = table.reduce(&value.with_precision(Precision::Finite(bound)));
            if let Some((v, c)) = rem.leading() {
                let inv = c.recip();
                let mut poly = Poly::monomial(Scalar::one(), alpha);
                poly.add_scaled(&-Scalar::one(), &used);
                table.rows.insert(v, (rem.scale(&inv), poly.scale(&inv)));
            }
        }
        Ok(table)
    }

    // lowest-first elimination; returns the remainder and the polynomial
    // subtracted
    fn reduce(&self, f: &Series) -> (Series, Poly) {
        let mut rem = f.with_precision(Precision::Finite(self.bound));
        let mut used = Poly::zero();
        while let Some((v, c)) = rem.leading().map(|(v, c)| (v, c.clone())) {
            let Some((row, poly)) = self.rows.get(&v) else {
                break;
            };
            rem.sub_scaled(&c, row);
            used.add_scaled(&c, poly);
        }
        (rem, used)
    }
}

/// Splits `f ∈ R` as `p + g` with `p` a polynomial in the `x_i` of order at
/// most `l` and `v(g) >= l + 1`. `xs` are generators in increasing order of
/// value; only those of value `<= l` are used.
pub fn split_element(f: &Series, l: usize, xs: &[Series]) -> Result<Split> {
    let mut used_xs = Vec::new();
    for x in xs {
        match x.order()? {
            Some(o) if o <= l => used_xs.push(x.clone()),
            _ => break,
        }
    }
    if let Precision::Finite(p) = f.prec() {
        if p <= l {
            return Err(Error::InsufficientPrecision {
                required: l + 1,
                available: p,
            });
        }
    }
    let table = MonomialTable::new(&used_xs, l + 1)?;
    let (rem, p) = table.reduce(f);
    if let Some((v, _)) = rem.leading() {
        return Err(Error::NotInSubring(v));
    }
    let g = f - &p.eval(&used_xs);
    Ok(Split { p, g })
}

/// Herzog–Kunz generators `x_i` with certificates `y = x_i + z_i`, following
/// the stage-wise splitting of the input generators. The input must generate
/// `m` minimally.
pub fn hk_generators(report: &RingReport) -> Result<HkProfile> {
    hk_generators_of(report, report.parametrization().gens())
}

/// [`hk_generators`] for generators `ys` of the same ring as given by the
/// user, before monic scaling.
pub fn hk_generators_of(report: &RingReport, ys: &[Series]) -> Result<HkProfile> {
    let seq = &report.hk.sequence;
    let n = seq.len();
    if ys.len() != n {
        return Err(Error::GeneratorsNotMinimal(format!(
            "{} generators for embedding dimension {n}",
            ys.len()
        )));
    }
    let orders: Vec<Option<usize>> = ys.iter().map(Series::order).collect::<Result<_>>()?;
    let Some(first) = orders.iter().position(|&o| o == Some(seq[0])) else {
        return Err(Error::GeneratorsNotMinimal(format!(
            "no generator of value {}",
            seq[0]
        )));
    };
    let mut xs = alloc::vec![ys[first].clone()];
    let mut zs = alloc::vec![Poly::zero()];
    let mut index = alloc::vec![first];
    let mut remaining: Vec<usize> = (0..n).filter(|&i| i != first).collect();
    for &ak in &seq[1..] {
        let mut chosen = None;
        for (pos, &i) in remaining.iter().enumerate() {
            let split = split_element(&ys[i], ak - 1, &xs)?;
            if split.g.order()? == Some(ak) {
                chosen = Some((pos, i, split));
                break;
            }
        }
        let Some((pos, i, split)) = chosen else {
            return Err(Error::GeneratorsNotMinimal(format!(
                "no generator attains value {ak}"
            )));
        };
        remaining.remove(pos);
        xs.push(split.g);
        zs.push(split.p);
        index.push(i);
    }
    Ok(HkProfile {
        sequence: seq.clone(),
        generators: xs,
        certificates: Some(zs),
        input_index: Some(index),
    })
}

/// Coordinates of `f ∈ m` in `m / m²` with respect to the Herzog–Kunz values.
pub fn cotangent_coordinates(report: &RingReport, f: &Series) -> Vec<Scalar> {
    coordinates(&report.m_squared.eliminate(f), &report.hk.sequence)
}

/// Removes generators, last first, as long as the rest still generate `m`
/// (their images span `m / m²`). The result has `edim(R)` elements.
pub fn drop_redundant(report: &RingReport) -> Result<Parametrization> {
    let gens = report.parametrization().gens();
    Parametrization::new(
        minimal_subset(report)
            .into_iter()
            .map(|i| gens[i].clone())
            .collect(),
    )
}

/// Indices of the generators kept by [`drop_redundant`].
pub fn minimal_subset(report: &RingReport) -> Vec<usize> {
    let param = report.parametrization();
    let n = report.embedding_dimension;
    let coords: Vec<Vec<Scalar>> = param
        .gens()
        .iter()
        .map(|g| cotangent_coordinates(report, g))
        .collect();
    let mut keep: Vec<bool> = alloc::vec![true; param.len()];
    for i in (0..param.len()).rev() {
        keep[i] = false;
        let rows: Vec<Vec<Scalar>> = coords
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(c, _)| c.clone())
            .collect();
        if rank(&rows) < n {
            keep[i] = true;
        }
    }
    (0..param.len()).filter(|&i| keep[i]).collect()
}

/// Replaces every Herzog–Kunz generator of value `a_i >= c_R` by `t^{a_i}`.
/// The generators are first brought into Herzog–Kunz form.
pub fn monomialize_tail(report: &RingReport) -> Result<Parametrization> {
    let hk = hk_generators(report)?;
    let c = report.conductor_degree;
    let gens = hk
        .sequence
        .iter()
        .zip(hk.generators)
        .map(|(&a, x)| if a >= c { Series::t_pow(a) } else { x })
        .collect();
    Parametrization::new(gens)
}

/// Which generator [`mm42_substitution`] replaced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// `x_i := t^{a_i}`, allowed when `o(α_d) <= o(α_i)`.
    ReplaceI,
    /// `x_d := t^{a_d}`, allowed when `i <= d`.
    ReplaceD,
}

/// Replaces one Herzog–Kunz generator by its pure monomial when
/// `o(α_d) + a_i >= c_R` (indices are 1-based, `i, d >= 2`). Here
/// `x_j = t^{a_j} α_j` with `α_j` a unit and `o` is [`unit_order`].
pub fn mm42_substitution(
    report: &RingReport,
    i: usize,
    d: usize,
) -> Result<(Parametrization, Substitution)> {
    let param = report.parametrization();
    let seq = &report.hk.sequence;
    if param.orders() != *seq {
        return Err(Error::NotHerzogKunz(format!(
            "generator orders {:?} differ from the sequence {:?}",
            param.orders(),
            seq
        )));
    }
    let n = seq.len();
    if i < 2 || d < 2 || i > n || d > n {
        return Err(Error::HypothesesNotSatisfied(format!(
            "need 2 <= i, d <= {n}, got i = {i}, d = {d}"
        )));
    }
    let gens = param.gens();
    let Some(od) = unit_order(&gens[d - 1])? else {
        return Err(Error::HypothesesNotSatisfied(format!(
            "o(α_{d}) is infinite"
        )));
    };
    let oi = unit_order(&gens[i - 1])?;
    let c = report.conductor_degree;
    let ai = seq[i - 1];
    let mut failed: Vec<String> = Vec::new();
    if od + ai < c {
        failed.push(format!("o(α_{d}) + a_{i} = {od} + {ai} < c_R = {c}"));
    }
    let prop_i = oi.is_none_or(|oi| od <= oi);
    if !prop_i {
        failed.push(format!("o(α_{d}) = {od} > o(α_{i}) = {}", oi.unwrap_or(0)));
    }
    if i > d {
        failed.push(format!("i = {i} > d = {d}"));
    }
    let (target, kind) = if od + ai < c {
        return Err(Error::HypothesesNotSatisfied(failed.join("; ")));
    } else if prop_i {
        (i, Substitution::ReplaceI)
    } else if i <= d {
        (d, Substitution::ReplaceD)
    } else {
        return Err(Error::HypothesesNotSatisfied(failed.join("; ")));
    };
    let mut out = gens.to_vec();
    out[target - 1] = Series::t_pow(seq[target - 1]);
    Ok((Parametrization::new(out)?, kind))
}

/// Truncates every generator at `t^d`, dropping those that vanish.
pub fn truncate_at(param: &Parametrization, d: usize) -> Result<Parametrization> {
    if let Some(p) = param.precision().finite() {
        if p < d {
            return Err(Error::InsufficientInputPrecision {
                required: d,
                available: p,
            });
        }
    }
    let gens: Vec<Series> = param
        .gens()
        .iter()
        .map(|g| g.truncate(d))
        .filter(|g| !g.is_zero())
        .collect();
    if gens.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "every generator vanishes below t^{d}"
        )));
    }
    Parametrization::new(gens)
}

/// Truncation at `d = max(a_n + 1, c_R)`, which never changes the ring.
pub fn truncate_parametrization(report: &RingReport) -> Result<(Parametrization, usize)> {
    let d = (report.hk.last() + 1).max(report.conductor_degree);
    Ok((truncate_at(report.parametrization(), d)?, d))
}

/// Every series in `gens` lies in the ring of `analysis`.
pub fn contains_all(analysis: &RingAnalysis, gens: &[Series]) -> Result<bool> {
    for g in gens {
        if !analysis.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Mutual membership of the generators.
pub fn rings_equal(
    p: &Parametrization,
    q: &Parametrization,
    config: &AnalysisConfig,
) -> Result<bool> {
    let a = analyze_ring(p, config)?;
    if !contains_all(&a, q.gens())? {
        return Ok(false);
    }
    let b = analyze_ring(q, config)?;
    contains_all(&b, p.gens())
}

/// Whether replacing the generators by `perturbed` keeps the ring. Every
/// perturbed generator must lie in `R`.
pub fn perturb_check(
    report: &RingReport,
    perturbed: &Parametrization,
    config: &AnalysisConfig,
) -> Result<bool> {
    for (i, g) in perturbed.gens().iter().enumerate() {
        if !report.contains(g)? {
            return Err(Error::PerturbationNotInRing(i + 1));
        }
    }
    let b = analyze_ring(perturbed, config)?;
    contains_all(&b, report.parametrization().gens())
}

/// `ω = a_n x_n dx1 - a1 x1 dx_n` for `x1 = t^{a1}`, `x_n = t^{a_n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionWitness {
    pub a1: usize,
    pub an: usize,
    pub x1: Series,
    pub xn: Series,
    pub omega_text: String,
    /// `a_n x_n x1' - a1 x1 x_n'`, the image of `ω` in `k[[t]] dt`.
    pub image_in_normalization: Series,
    /// Herzog–Kunz generators in the normalized parameter, with `x1` first
    /// and `x_n` last.
    pub parametrization: Parametrization,
    pub substitution: Series,
}

/// The torsion witness when `𝔠_R ⊄ m²` (that is `a_n >= c_R`), else `None`.
pub fn torsion_witness(
    report: &RingReport,
    config: &AnalysisConfig,
) -> Result<Option<TorsionWitness>> {
    if report.conductor_in_m2 {
        return Ok(None);
    }
    let normalized = normalize_parameter(report)?;
    let nreport = analyze(&normalized.param, config)?;
    let minimal = drop_redundant(&nreport)?;
    let mreport = if minimal.len() == nreport.parametrization().len() {
        nreport
    } else {
        analyze(&minimal, config)?
    };
    let param = monomialize_tail(&mreport)?;
    let a1 = mreport.hk.sequence[0];
    let an = mreport.hk.last();
    let x1 = param.gens()[0].clone();
    let xn = param.gens()[param.len() - 1].clone();
    if x1 != Series::t_pow(a1) || xn != Series::t_pow(an) {
        return Err(Error::HypothesesNotSatisfied(format!(
            "could not make x1 = t^{a1} and x_n = t^{an}"
        )));
    }
    let a1s = scalar::int(a1 as i64);
    let ans = scalar::int(an as i64);
    let image = &(&xn * &x1.derivative()).scale(&ans) - &(&x1 * &xn.derivative()).scale(&a1s);
    Ok(Some(TorsionWitness {
        a1,
        an,
        omega_text: format!("{an}*x{n}*dx1 - {a1}*x1*dx{n}", n = param.len()),
        image_in_normalization: image,
        x1,
        xn,
        parametrization: param,
        substitution: normalized.substitution,
    }))
}

/// `S = R[𝔠_R / x1] = R[t^{b1}, ..., t^{bs}]` and its checks.
#[derive(Clone, Debug)]
pub struct ExtensionReport {
    pub b_list: Vec<usize>,
    /// `x1, ..., xn, t^{b1}, ..., t^{bs}` in the normalized parameter.
    pub s_gens: Parametrization,
    pub c_s: usize,
    pub hk_s: HkProfile,
    pub i0: usize,
    /// `x_j` for `j <= i0`, `t^{ã_j}` for `j > i0`; these generate `S`.
    pub chosen_generators: Parametrization,
    pub value_semigroup_s: NumericalSemigroup,
}

/// Builds `S` for a ring with `𝔠_R ⊆ m²` and checks `c_S = c_R - a1`,
/// `edim(S) = n + s`, `{ã_{i0+1}, ..., ã_{n+s}} = {a_{i0+1}, ..., a_n, b1, ..., bs}`
/// and `V(S) = <V(R), b1, ..., bs>`.
pub fn extend_by_conductor(
    report: &RingReport,
    config: &AnalysisConfig,
) -> Result<ExtensionReport> {
    let c = report.conductor_degree;
    let a1 = report.multiplicity;
    if !report.conductor_in_m2 {
        return Err(Error::ConductorNotInMSquare {
            a_n: report.hk.last(),
            conductor: c,
        });
    }
    let normalized = normalize_parameter(report)?;
    let nreport = analyze(&normalized.param, config)?;
    let minimal = drop_redundant(&nreport)?;
    let mreport = if minimal.len() == nreport.parametrization().len() {
        nreport
    } else {
        analyze(&minimal, config)?
    };
    let hk = hk_generators(&mreport)?;
    let b_list = mreport.reduced_type.b_list.clone();
    let seq = &hk.sequence;
    let n = seq.len();
    let mut gens = hk.generators.clone();
    gens.extend(b_list.iter().map(|&b| Series::t_pow(b)));
    let s_gens = Parametrization::new(gens)?;
    let sreport = report_for(analyze_ring(&s_gens, config)?)?;
    let c_s = sreport.conductor_degree;
    let hk_s = sreport.hk.clone();
    let mut problems: Vec<String> = Vec::new();
    if c_s + a1 != c {
        problems.push(format!("c_S = {c_s}, expected c_R - a1 = {}", c - a1));
    }
    if hk_s.len() != n + b_list.len() {
        problems.push(format!(
            "edim(S) = {}, expected n + s = {}",
            hk_s.len(),
            n + b_list.len()
        ));
    }
    let i0 = seq.iter().filter(|&&a| a + a1 < c).count();
    let tail_s: BTreeSet<usize> = hk_s.sequence.iter().skip(i0).copied().collect();
    let mut expected: BTreeSet<usize> = seq[i0..].iter().copied().collect();
    expected.extend(b_list.iter().copied());
    if tail_s != expected || hk_s.sequence[..i0.min(hk_s.len())] != seq[..i0] {
        problems.push(format!(
            "Herzog–Kunz sequence of S is {:?}, expected {:?} then {:?}",
            hk_s.sequence,
            &seq[..i0],
            expected
        ));
    }
    let mut vgens: Vec<usize> = mreport.value_semigroup.min_generators().to_vec();
    vgens.extend(b_list.iter().copied());
    let closure = NumericalSemigroup::generated_by(&vgens)?;
    if closure.min_generators() != sreport.value_semigroup.min_generators() {
        problems.push(format!(
            "V(S) has generators {:?}, expected {:?}",
            sreport.value_semigroup.min_generators(),
            closure.min_generators()
        ));
    }
    let chosen: Vec<Series> = hk_s
        .sequence
        .iter()
        .enumerate()
        .map(|(j, &a)| {
            if j < i0 {
                hk.generators[j].clone()
            } else {
                Series::t_pow(a)
            }
        })
        .collect();
    let chosen = Parametrization::new(chosen)?;
    if problems.is_empty() && !contains_all(&sreport.analysis, chosen.gens())? {
        problems.push("chosen generators are not in S".into());
    }
    if problems.is_empty() {
        let back = analyze_ring(&chosen, config)?;
        if !contains_all(&back, s_gens.gens())? {
            problems.push("chosen generators do not generate S".into());
        }
    }
    if !problems.is_empty() {
        return Err(Error::ExtensionMismatch(problems.join("; ")));
    }
    Ok(ExtensionReport {
        b_list,
        s_gens,
        c_s,
        hk_s,
        i0,
        chosen_generators: chosen,
        value_semigroup_s: sreport.value_semigroup,
    })
}

//! Ring invariants read off valuation tables: multiplicity, value semigroup,
//! the Herzog–Kunz sequence `v(m) \ v(m²)`, embedding dimension, the
//! `𝔠_R ⊆ m²` predicate and the reduced type.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::engine::{
    analyze_ring, ideal_closure, ideal_member, AnalysisConfig, Parametrization, ReducedBasis,
    RingAnalysis,
};
use crate::error::Error;
use crate::poly::Poly;
use crate::semigroup::NumericalSemigroup;
use crate::series::Series;
use crate::Result;

/// Herzog–Kunz sequence `a1 < ... < an` with generators `x_i` of value `a_i`.
///
/// `certificates`, when present, holds polynomials `z_i` in `x1, ..., x_{i-1}`
/// with `y = x_i + z_i`, where `y` is input generator number `input_index[i]`
/// (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HkProfile {
    pub sequence: Vec<usize>,
    pub generators: Vec<Series>,
    pub certificates: Option<Vec<Poly>>,
    pub input_index: Option<Vec<usize>>,
}

impl HkProfile {
    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// `a_n`, the largest entry.
    pub fn last(&self) -> usize {
        self.sequence.last().copied().unwrap_or(0)
    }
}

/// Gaps of `V(R)` in `[max(0, c_R - a1), c_R - 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedType {
    pub s: usize,
    pub b_list: Vec<usize>,
}

/// Everything `analyze` computes about one ring.
#[derive(Clone, Debug)]
pub struct RingReport {
    pub analysis: RingAnalysis,
    pub maximal_ideal: ReducedBasis,
    pub m_squared: ReducedBasis,
    pub multiplicity: usize,
    pub value_semigroup: NumericalSemigroup,
    pub conductor_degree: usize,
    pub hk: HkProfile,
    pub embedding_dimension: usize,
    pub conductor_in_m2: bool,
    pub reduced_type: ReducedType,
}

impl RingReport {
    pub fn parametrization(&self) -> &Parametrization {
        &self.analysis.param
    }

    pub fn precision(&self) -> usize {
        self.analysis.precision()
    }

    pub fn contains(&self, f: &Series) -> Result<bool> {
        self.analysis.contains(f)
    }

    /// `f ∈ m²`.
    pub fn in_m_squared(&self, f: &Series) -> Result<bool> {
        ideal_member(f, &self.m_squared, self.conductor_degree)
    }
}

/// Least nonzero key of a ring table; 0 if there is none.
pub fn multiplicity(basis: &ReducedBasis) -> usize {
    basis.keys().find(|&k| k > 0).unwrap_or(0)
}

/// The value semigroup certified by a ring table.
pub fn value_semigroup(basis: &ReducedBasis) -> Result<NumericalSemigroup> {
    NumericalSemigroup::from_value_set(&basis.key_set(), basis.precision().saturating_sub(1))
}

/// Table of `m = (y1, ..., yn)`.
pub fn maximal_ideal(analysis: &RingAnalysis) -> Result<ReducedBasis> {
    ideal_closure(
        analysis.param.gens(),
        &analysis.basis,
        0,
        analysis.precision(),
    )
}

/// Table of `m²`, generated by the products `y_i y_j`.
pub fn m_squared(analysis: &RingAnalysis) -> Result<ReducedBasis> {
    let d = analysis.precision();
    let gens = analysis.param.gens();
    let mut products = Vec::new();
    for i in 0..gens.len() {
        for j in i..gens.len() {
            products.push(gens[i].mul_capped(&gens[j], d));
        }
    }
    ideal_closure(&products, &analysis.basis, 0, d)
}

/// `v(m) \ v(m²)` with the `m`-table representatives as generators.
pub fn hk_sequence(
    analysis: &RingAnalysis,
    m: &ReducedBasis,
    m2: &ReducedBasis,
) -> Result<HkProfile> {
    let required = analysis.conductor + 2 * analysis.multiplicity + 1;
    let available = m.precision().min(m2.precision());
    if available < required {
        return Err(Error::InsufficientPrecision {
            required,
            available,
        });
    }
    let mut sequence = Vec::new();
    let mut generators = Vec::new();
    for (k, rep) in m.reps() {
        if !m2.contains_key(k) {
            sequence.push(k);
            generators.push(rep.clone());
        }
    }
    Ok(HkProfile {
        sequence,
        generators,
        certificates: None,
        input_index: None,
    })
}

pub fn embedding_dimension(hk: &HkProfile) -> usize {
    hk.len()
}

/// `𝔠_R ⊆ m²`, which holds exactly when `a_n < c_R`.
pub fn conductor_in_msquare(hk: &HkProfile, conductor: usize) -> bool {
    hk.last() < conductor
}

pub fn reduced_type(
    semigroup: &NumericalSemigroup,
    conductor: usize,
    multiplicity: usize,
) -> ReducedType {
    let b_list: Vec<usize> = (conductor.saturating_sub(multiplicity)..conductor)
        .filter(|&x| !semigroup.contains(x))
        .collect();
    ReducedType {
        s: b_list.len(),
        b_list,
    }
}

/// `dim_k (𝔠_R, x1) / (x1)`, counted as `|v((𝔠_R, x1)) \ v(x1 R)|`.
pub fn reduced_type_by_ideals(analysis: &RingAnalysis, x1: &Series) -> Result<usize> {
    let d = analysis.precision();
    let c = analysis.conductor;
    let a1 = analysis.multiplicity;
    let mut gens = alloc::vec![x1.clone()];
    gens.extend((c..c + a1).filter(|&k| k < d).map(Series::t_pow));
    let with_conductor = ideal_closure(&gens, &analysis.basis, 0, d)?;
    let principal = ideal_closure(core::slice::from_ref(x1), &analysis.basis, 0, d)?;
    // both ideals contain every value >= a1 + c_R
    let bound = (a1 + c).min(d);
    let a: BTreeSet<usize> = with_conductor.keys().filter(|&k| k < bound).collect();
    Ok(a.iter().filter(|&&k| !principal.contains_key(k)).count())
}

/// Full analysis of the ring generated by `param`.
pub fn analyze(param: &Parametrization, config: &AnalysisConfig) -> Result<RingReport> {
    let analysis = analyze_ring(param, config)?;
    report_for(analysis)
}

/// Assembles the report for an already certified ring table.
pub fn report_for(analysis: RingAnalysis) -> Result<RingReport> {
    let m = maximal_ideal(&analysis)?;
    let m2 = m_squared(&analysis)?;
    let hk = hk_sequence(&analysis, &m, &m2)?;
    let conductor = analysis.conductor;
    let multiplicity = analysis.multiplicity;
    let value_semigroup = analysis.semigroup.clone();
    let reduced_type = reduced_type(&value_semigroup, conductor, multiplicity);
    Ok(RingReport {
        multiplicity,
        conductor_degree: conductor,
        embedding_dimension: embedding_dimension(&hk),
        conductor_in_m2: conductor_in_msquare(&hk, conductor),
        hk,
        value_semigroup,
        reduced_type,
        maximal_ideal: m,
        m_squared: m2,
        analysis,
    })
}

//! Valuation tables for a subring `R = k[[y1, ..., yn]] ⊆ k[[t]]` and its ideals.
//!
//! A [`ReducedBasis`] is the reduced row echelon form, with pivots at
//! valuations, of the image of `R` (or of an ideal) in `k[t]/t^D`. Each
//! representative is monic and has a zero coefficient at every other key, so
//! the table is a canonical form of the subspace and its key set is exactly
//! the set of values below `D`.
//!
//! Tables are built by inserting the products of the generators in order of
//! increasing valuation. As soon as the keys contain a run of `mult(R)` consecutive integers
//! starting at `c`, every `t^k` with `k >= c` lies in the object, so the tail
//! is filled with monomials and products landing there are skipped.

use alloc::collections::{BTreeMap, BTreeSet, BinaryHeap};
use alloc::vec::Vec;
use core::cmp::Reverse;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::Error;
use crate::scalar::Scalar;
use crate::semigroup::NumericalSemigroup;
use crate::series::{Precision, Series};
use crate::Result;

/// Default cap for the adaptive working precision.
pub const DEFAULT_MAX_PRECISION: usize = 1 << 14;

/// Generators `y1, ..., yn` of a ring `k[[y1, ..., yn]] ⊆ k[[t]]`, each
/// scaled to be monic and of positive order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Parametrization {
    gens: Vec<Series>,
}

impl Parametrization {
    pub fn new(gens: Vec<Series>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyParametrization);
        }
        let mut out = Vec::with_capacity(gens.len());
        for (i, g) in gens.into_iter().enumerate() {
            match g.order()? {
                Some(o) if o >= 1 => out.push(g.monic()),
                _ => return Err(Error::UnitOrZeroGenerator(i + 1)),
            }
        }
        Ok(Parametrization { gens: out })
    }

    pub fn gens(&self) -> &[Series] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn orders(&self) -> Vec<usize> {
        self.gens
            .iter()
            .map(|g| g.leading().map_or(0, |(e, _)| e))
            .collect()
    }

    /// Weakest generator precision.
    pub fn precision(&self) -> Precision {
        self.gens
            .iter()
            .map(Series::prec)
            .min()
            .unwrap_or(Precision::Exact)
    }

    pub fn max_exponent(&self) -> usize {
        self.gens
            .iter()
            .filter_map(Series::max_exponent)
            .max()
            .unwrap_or(0)
    }

    pub fn multiplicity(&self) -> usize {
        self.orders().into_iter().min().unwrap_or(0)
    }

    /// gcd of every exponent appearing in exact generators; `None` when some
    /// generator is only known to finite precision.
    fn exponent_gcd(&self) -> Option<usize> {
        if !self.gens.iter().all(Series::is_exact) {
            return None;
        }
        Some(
            self.gens
                .iter()
                .flat_map(|g| g.terms().map(|(e, _)| e))
                .fold(0, |g, e| g.gcd(&e)),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Ring,
    Ideal,
}

/// Result of [`ReducedBasis::reduce`]: the remainder and the `(valuation,
/// coefficient)` pairs subtracted along the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub remainder: Series,
    pub used: Vec<(usize, Scalar)>,
}

/// Monic representatives indexed by valuation, modulo `t^precision`.
///
/// Keys are integral exponents; for an ideal with `shift = e` the represented
/// object is `t^{-e}` times the span, so its values are `key - e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBasis {
    reps: BTreeMap<usize, Series>,
    precision: usize,
    kind: BasisKind,
    shift: usize,
    conductor_hint: Option<usize>,
    // every key in [tail_start, precision) is present with rep t^key
    tail_start: Option<usize>,
    ring_gens: Vec<Series>,
    multiplicity: usize,
}

impl ReducedBasis {
    fn empty(kind: BasisKind, precision: usize, shift: usize, ring_gens: Vec<Series>) -> Self {
        let multiplicity = ring_gens
            .iter()
            .filter_map(|g| g.leading().map(|(e, _)| e))
            .min()
            .unwrap_or(0);
        ReducedBasis {
            reps: BTreeMap::new(),
            precision,
            kind,
            shift,
            conductor_hint: None,
            tail_start: None,
            ring_gens,
            multiplicity,
        }
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    /// Smallest `c` with `[c, D)` contained in the key set, for ring tables.
    pub fn conductor_hint(&self) -> Option<usize> {
        self.conductor_hint
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = usize> + '_ {
        self.reps.keys().copied()
    }

    pub fn key_set(&self) -> BTreeSet<usize> {
        self.reps.keys().copied().collect()
    }

    /// Values of the represented object (keys minus the shift).
    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.reps.keys().map(move |&k| k as i64 - self.shift as i64)
    }

    pub fn contains_key(&self, key: usize) -> bool {
        self.reps.contains_key(&key)
    }

    pub fn rep(&self, key: usize) -> Option<&Series> {
        self.reps.get(&key)
    }

    pub fn reps(&self) -> impl Iterator<Item = (usize, &Series)> + '_ {
        self.reps.iter().map(|(&k, s)| (k, s))
    }

    pub fn min_key(&self) -> Option<usize> {
        self.reps.keys().next().copied()
    }

    /// Least nonzero value of the ring the table lives over.
    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn ring_generators(&self) -> &[Series] {
        &self.ring_gens
    }

    /// Cancels the lowest term of `f` against the table until its order is
    /// not a key (or leaves the window `[0, D)`).
    pub fn reduce(&self, f: &Series) -> Result<Reduction> {
        let d = self.precision;
        let mut rem = f.with_precision(Precision::Finite(d));
        let mut used = Vec::new();
        loop {
            let v = match rem.order() {
                Ok(None) => break,
                Ok(Some(v)) => v,
                Err(Error::IndeterminateOrder(p)) if p >= d => break,
                Err(Error::IndeterminateOrder(p)) => return Err(Error::PrecisionExhausted(p)),
                Err(e) => return Err(e),
            };
            let Some(rep) = self.reps.get(&v) else { break };
            let c = rem.coeff(v);
            rem.sub_scaled(&c, rep);
            used.push((v, c));
        }
        Ok(Reduction {
            remainder: rem,
            used,
        })
    }

    /// Cancels every coefficient of `f` that sits at a key. The result agrees
    /// with `f` modulo the tabulated span and has precision at most `D`.
    pub fn eliminate(&self, f: &Series) -> Series {
        self.reduce_fully(f, self.precision)
    }

    /// Eliminates every coefficient of `f` that sits at a key, below `cap`.
    fn reduce_fully(&self, f: &Series, cap: usize) -> Series {
        let mut rem = f.with_precision(Precision::Finite(cap));
        let positions: Vec<usize> = rem
            .terms()
            .map(|(e, _)| e)
            .filter(|e| self.reps.contains_key(e))
            .collect();
        for e in positions {
            // reps vanish at every other key, so earlier subtractions leave
            // the coefficients at later keys untouched
            if let Some(c) = rem.coeff_ref(e).cloned() {
                rem.sub_scaled(&c, &self.reps[&e]);
            }
        }
        rem
    }

    /// Inserts a fully reduced nonzero remainder as a new pivot, filling the
    /// tail when a long enough run of keys appears.
    fn insert(&mut self, rem: Series) {
        let d = self.precision;
        let rem = rem.monic();
        let Some((v, _)) = rem.leading() else { return };
        let rem = rem.with_precision(Precision::Finite(d));
        for rep in self.reps.values_mut() {
            if let Some(c) = rep.coeff_ref(v).cloned() {
                rep.sub_scaled(&c, &rem);
            }
        }
        self.reps.insert(v, rem);
        if let Some(start) = self.run_start_through(v) {
            if self.tail_start.is_none_or(|s| start < s) {
                for k in start..d {
                    if !self.reps.contains_key(&k) {
                        let mono = Series::t_pow(k).with_precision(Precision::Finite(d));
                        for rep in self.reps.values_mut() {
                            if let Some(c) = rep.coeff_ref(k).cloned() {
                                rep.sub_scaled(&c, &mono);
                            }
                        }
                        self.reps.insert(k, mono);
                    }
                }
                self.tail_start = Some(start);
            }
        }
    }

    // start of the maximal run of keys through `v`, if it is long enough to
    // force every larger integer into the value set
    fn run_start_through(&self, v: usize) -> Option<usize> {
        let m = self.multiplicity;
        if m == 0 {
            return None;
        }
        let mut lo = v;
        while lo > 0 && self.reps.contains_key(&(lo - 1)) {
            lo -= 1;
        }
        let mut hi = v + 1;
        while hi < self.precision && self.reps.contains_key(&hi) {
            hi += 1;
        }
        (hi - lo >= m).then_some(lo)
    }

    /// Inserts every product `seed * y^alpha` of order below the window, in
    /// increasing order, so each intermediate span is spanned by products.
    fn span_products(&mut self, seeds: &[Series]) {
        let d = self.precision;
        let gens: Vec<(usize, Series)> = self
            .ring_gens
            .iter()
            .map(|g| {
                (
                    g.leading().map_or(0, |(e, _)| e),
                    g.with_precision(Precision::Finite(d)),
                )
            })
            .collect();
        // (order, sequence number) -> (least generator index allowed next, product)
        let mut heap: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();
        let mut pending: BTreeMap<usize, (usize, Series)> = BTreeMap::new();
        let mut seq = 0usize;
        for seed in seeds {
            if let Some((o, _)) = seed.leading() {
                if o < d {
                    heap.push(Reverse((o, seq)));
                    pending.insert(seq, (0, seed.with_precision(Precision::Finite(d))));
                    seq += 1;
                }
            }
        }
        while let Some(Reverse((order, id))) = heap.pop() {
            let (next, product) = pending.remove(&id).expect("queued product");
            let cap = self.tail_start.unwrap_or(d);
            if order >= cap {
                continue;
            }
            let rem = self.reduce_fully(&product, cap);
            if !rem.is_zero() {
                self.insert(rem);
            }
            for (i, (o, g)) in gens.iter().enumerate().skip(next) {
                if order + o < self.tail_start.unwrap_or(d) {
                    heap.push(Reverse((order + o, seq)));
                    pending.insert(seq, (i, g.mul_capped(&product, cap)));
                    seq += 1;
                }
            }
        }
        if self.kind == BasisKind::Ring {
            self.conductor_hint = self.tail_start;
        }
    }
}

fn check_precision(gens: &[Series], d: usize) -> Result<()> {
    for g in gens {
        if let Precision::Finite(p) = g.prec() {
            if p < d {
                return Err(Error::InsufficientInputPrecision {
                    required: d,
                    available: p,
                });
            }
        }
    }
    Ok(())
}

/// Table of `R` modulo `t^D`; its keys are `V(R) ∩ [0, D)`.
pub fn ring_closure(param: &Parametrization, d: usize) -> Result<ReducedBasis> {
    check_precision(param.gens(), d)?;
    let mut basis = ReducedBasis::empty(BasisKind::Ring, d, 0, param.gens().to_vec());
    if d == 0 {
        return Ok(basis);
    }
    basis.span_products(&[Series::one()]);
    Ok(basis)
}

/// Table of the ideal generated by `igens` over the ring of `ring`, modulo
/// `t^D` in integral coordinates. With `shift = e` the generators stand for
/// `t^{-e} * igens`, which covers fractional ideals.
pub fn ideal_closure(
    igens: &[Series],
    ring: &ReducedBasis,
    shift: usize,
    d: usize,
) -> Result<ReducedBasis> {
    if igens.is_empty() {
        return Err(Error::InvalidArgument(
            "ideal needs at least one generator".into(),
        ));
    }
    if ring.kind != BasisKind::Ring {
        return Err(Error::InvalidArgument(
            "ideal closure needs a ring table".into(),
        ));
    }
    if d > ring.precision {
        return Err(Error::InsufficientPrecision {
            required: d,
            available: ring.precision,
        });
    }
    check_precision(igens, d)?;
    let mut basis = ReducedBasis::empty(BasisKind::Ideal, d, shift, ring.ring_gens.clone());
    basis.multiplicity = ring.multiplicity;
    basis.span_products(igens);
    Ok(basis)
}

fn member_with_threshold(f: &Series, basis: &ReducedBasis, threshold: usize) -> Result<bool> {
    let red = basis.reduce(f)?;
    match red.remainder.order() {
        Ok(None) => Ok(true),
        Ok(Some(w)) => Ok(w >= threshold),
        Err(Error::IndeterminateOrder(_)) if basis.precision >= threshold => Ok(true),
        Err(Error::IndeterminateOrder(_)) => Err(Error::InsufficientPrecision {
            required: threshold,
            available: basis.precision,
        }),
        Err(e) => Err(e),
    }
}

/// `f ∈ R`, decided by reduction: tails of order `>= c_R` always lie in `R`.
pub fn ring_member(f: &Series, basis: &ReducedBasis, conductor: usize) -> Result<bool> {
    member_with_threshold(f, basis, conductor)
}

/// `f ∈ J` for the ideal tabulated by `basis` (in its integral coordinates):
/// every element of order `>= min_J + c_R` lies in `J`.
pub fn ideal_member(f: &Series, basis: &ReducedBasis, conductor: usize) -> Result<bool> {
    let Some(min) = basis.min_key() else {
        return Ok(f.is_zero() && f.is_exact());
    };
    member_with_threshold(f, basis, min + conductor)
}

/// Valuations in `v(I) \ v(m·I)` with the table representatives there; any
/// elements of `I` with these values generate `I` minimally.
pub fn ideal_min_generators(
    ideal: &ReducedBasis,
    m_ideal: &ReducedBasis,
    conductor: usize,
) -> Result<Vec<(i64, Series)>> {
    let min_mi = m_ideal.min_key().unwrap_or(m_ideal.precision);
    let required = min_mi + conductor;
    let available = ideal.precision.min(m_ideal.precision);
    if available < required {
        return Err(Error::InsufficientPrecision {
            required,
            available,
        });
    }
    Ok(ideal
        .reps()
        .filter(|(k, _)| !m_ideal.contains_key(*k))
        .map(|(k, s)| (k as i64 - ideal.shift as i64, s.clone()))
        .collect())
}

/// Knobs for the adaptive precision driver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisConfig {
    /// Starting working precision; by default `2 * (1 + max exponent)`.
    pub initial_precision: Option<usize>,
    /// Give up (with an error) rather than raise the precision beyond this.
    pub max_precision: usize,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            initial_precision: None,
            max_precision: DEFAULT_MAX_PRECISION,
        }
    }
}

/// A ring table certified past `c_R + 2·mult(R) + 1`, with its conductor and
/// value semigroup.
#[derive(Clone, Debug)]
pub struct RingAnalysis {
    pub param: Parametrization,
    pub basis: ReducedBasis,
    pub conductor: usize,
    pub multiplicity: usize,
    pub semigroup: NumericalSemigroup,
}

impl RingAnalysis {
    pub fn precision(&self) -> usize {
        self.basis.precision
    }

    pub fn contains(&self, f: &Series) -> Result<bool> {
        ring_member(f, &self.basis, self.conductor)
    }
}

/// `g > 1` when every value below `d` is a multiple of `g` and, after the
/// parameter change making the first generator of least order a pure power,
/// every generator is a series in `t^g` modulo `t^d`. Then all generators
/// lie in `k[[u]]` for one `u` of order `g` up to that precision.
fn common_parameter_gcd(
    param: &Parametrization,
    basis: &ReducedBasis,
    d: usize,
) -> Result<Option<usize>> {
    let g = basis.keys().fold(0usize, |g, k| g.gcd(&k));
    if g <= 1 {
        return Ok(None);
    }
    let a1 = param.multiplicity();
    let y = &param.gens()[param.orders().iter().position(|&o| o == a1).unwrap_or(0)];
    let e = match param.precision() {
        Precision::Finite(p) => d.min(p.saturating_sub(a1)),
        Precision::Exact => d,
    };
    if e <= a1 {
        return Ok(None);
    }
    let unit = y.truncate(e + a1).unshift(a1)?;
    let s = unit.nth_root_unit(a1 as u32, e)?.shift(1);
    let r = s.revert(e)?;
    for y in param.gens() {
        let z = y.truncate(e).compose(&r)?.truncate(e);
        if z.terms().any(|(e, _)| e % g != 0) {
            return Ok(None);
        }
    }
    Ok(Some(g))
}

/// Adaptive driver: doubles the working precision until the conductor is
/// certified, then makes sure the window reaches `c_R + 2·mult(R) + 1`.
pub fn analyze_ring(param: &Parametrization, config: &AnalysisConfig) -> Result<RingAnalysis> {
    if let Some(g) = param.exponent_gcd() {
        if g > 1 {
            return Err(Error::GcdGreaterThanOne(g));
        }
    }
    let available = param.precision().finite();
    let cap = match available {
        Some(p) => p.min(config.max_precision),
        None => config.max_precision,
    };
    let mut d = config
        .initial_precision
        .unwrap_or(2 * (1 + param.max_exponent()))
        .max(2)
        .min(cap);
    loop {
        let basis = ring_closure(param, d)?;
        match NumericalSemigroup::from_value_set(&basis.key_set(), d - 1) {
            Ok(semigroup) => {
                let conductor = semigroup.conductor();
                let multiplicity = semigroup.multiplicity();
                let need = conductor + 2 * multiplicity + 1;
                if d >= need {
                    return Ok(RingAnalysis {
                        param: param.clone(),
                        basis,
                        conductor,
                        multiplicity,
                        semigroup,
                    });
                }
                if let Some(p) = available {
                    if need > p {
                        return Err(Error::InsufficientInputPrecision {
                            required: need,
                            available: p,
                        });
                    }
                }
                d = need;
            }
            Err(err @ (Error::InsufficientBound { .. } | Error::GcdGreaterThanOne(_))) => {
                if let Some(g) = common_parameter_gcd(param, &basis, d)? {
                    return Err(Error::GcdGreaterThanOne(g));
                }
                if d >= cap {
                    return Err(match (err, available) {
                        (Error::GcdGreaterThanOne(g), _) => Error::GcdGreaterThanOne(g),
                        (_, Some(p)) if p <= config.max_precision => {
                            Error::InsufficientInputPrecision {
                                required: 2 * d,
                                available: p,
                            }
                        }
                        _ => Error::InsufficientPrecision {
                            required: 2 * d,
                            available: config.max_precision,
                        },
                    });
                }
                d = (2 * d).min(cap);
            }
            Err(e) => return Err(e),
        }
    }
}

/// Coefficients of the series `f` at the given positions.
pub(crate) fn coordinates(f: &Series, positions: &[usize]) -> Vec<Scalar> {
    positions.iter().map(|&p| f.coeff(p)).collect()
}

/// Rank of a list of rational vectors, by elimination.
pub(crate) fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let delta = &m[r][j] * &f;
                    m[i][j] -= delta;
                }
            }
        }
        r += 1;
    }
    r
}

//! Sparse truncated power series in one variable `t` over exact rationals.
//!
//! A [`Series`] stores its nonzero coefficients by exponent together with a
//! [`Precision`]. `Finite(d)` means the coefficients of `t^0, ..., t^{d-1}` are
//! known and everything from `t^d` on is unknown; `Exact` means the series is a
//! polynomial. Every operation computes the weakest correct output precision.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::scalar::{self, Scalar};
use crate::Result;

/// Number of known leading coefficients of a series.
///
/// `Finite(_) < Exact`, so `min` picks the weaker precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Precision {
    Finite(usize),
    Exact,
}

impl Precision {
    pub fn finite(self) -> Option<usize> {
        match self {
            Precision::Finite(d) => Some(d),
            Precision::Exact => None,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Precision::Exact)
    }

    fn plus(self, k: usize) -> Precision {
        match self {
            Precision::Finite(d) => Precision::Finite(d + k),
            Precision::Exact => Precision::Exact,
        }
    }

    fn admits(self, e: usize) -> bool {
        match self {
            Precision::Finite(d) => e < d,
            Precision::Exact => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    terms: BTreeMap<usize, Scalar>,
    prec: Precision,
}

impl Default for Series {
    fn default() -> Self {
        Series::zero()
    }
}

impl Series {
    /// The exact zero polynomial.
    pub fn zero() -> Self {
        Series {
            terms: BTreeMap::new(),
            prec: Precision::Exact,
        }
    }

    /// `O(t^d)`: nothing known below `t^d` except that it vanishes.
    pub fn big_o(d: usize) -> Self {
        Series {
            terms: BTreeMap::new(),
            prec: Precision::Finite(d),
        }
    }

    pub fn one() -> Self {
        Series::monomial(Scalar::one(), 0)
    }

    pub fn t() -> Self {
        Series::monomial(Scalar::one(), 1)
    }

    pub fn t_pow(e: usize) -> Self {
        Series::monomial(Scalar::one(), e)
    }

    pub fn constant(c: Scalar) -> Self {
        Series::monomial(c, 0)
    }

    pub fn monomial(c: Scalar, e: usize) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Series {
            terms,
            prec: Precision::Exact,
        }
    }

    /// Builds a series from `(exponent, coefficient)` pairs. Repeated exponents
    /// are summed; zero coefficients and exponents at or above `prec` are dropped.
    pub fn from_terms<I>(terms: I, prec: Precision) -> Self
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut map: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (e, c) in terms {
            if prec.admits(e) {
                *map.entry(e).or_insert_with(Scalar::zero) += c;
            }
        }
        map.retain(|_, c| !c.is_zero());
        Series { terms: map, prec }
    }

    /// Integer-coefficient polynomial shorthand, mostly for tests.
    pub fn poly(terms: &[(usize, i64)]) -> Self {
        Series::from_terms(
            terms.iter().map(|&(e, c)| (e, scalar::int(c))),
            Precision::Exact,
        )
    }

    pub fn prec(&self) -> Precision {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_exact()
    }

    /// True when no coefficient is stored (exact zero or `O(t^d)`).
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &Scalar)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: usize) -> Scalar {
        self.terms.get(&e).cloned().unwrap_or_else(Scalar::zero)
    }

    pub(crate) fn coeff_ref(&self, e: usize) -> Option<&Scalar> {
        self.terms.get(&e)
    }

    pub fn max_exponent(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    /// Least exponent with a nonzero coefficient; `None` stands for infinity
    /// (the exact zero series).
    pub fn order(&self) -> Result<Option<usize>> {
        match (self.terms.keys().next(), self.prec) {
            (Some(&e), _) => Ok(Some(e)),
            (None, Precision::Exact) => Ok(None),
            (None, Precision::Finite(d)) => Err(Error::IndeterminateOrder(d)),
        }
    }

    /// A lower bound for the order: the order itself when a term is known,
    /// the precision otherwise.
    pub fn valuation_bound(&self) -> Precision {
        match self.terms.keys().next() {
            Some(&e) => Precision::Finite(e),
            None => self.prec,
        }
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.terms.iter().next().map(|(&e, c)| (e, c))
    }

    /// Lowers the precision to `p` (never raises it).
    pub fn with_precision(&self, p: Precision) -> Series {
        let prec = self.prec.min(p);
        let terms = match prec {
            Precision::Exact => self.terms.clone(),
            Precision::Finite(d) => self
                .terms
                .range(..d)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        };
        Series { terms, prec }
    }

    /// Drops every term of exponent `>= d` and declares the result a polynomial.
    pub fn truncate(&self, d: usize) -> Series {
        Series {
            terms: self
                .terms
                .range(..d)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
            prec: Precision::Exact,
        }
    }

    /// The known terms, read as a polynomial.
    pub(crate) fn known_part(&self) -> Series {
        Series {
            terms: self.terms.clone(),
            prec: Precision::Exact,
        }
    }

    /// Scales so the lowest coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Series {
        match self.leading() {
            Some((_, c)) if !c.is_one() => {
                let inv = c.recip();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Series {
        if c.is_zero() {
            return Series {
                terms: BTreeMap::new(),
                prec: self.prec,
            };
        }
        Series {
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
            prec: self.prec,
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Series {
        Series {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
            prec: self.prec.plus(k),
        }
    }

    /// Division by `t^k`; every stored exponent must be `>= k`.
    pub fn unshift(&self, k: usize) -> Result<Series> {
        if let Some((e, _)) = self.leading() {
            if e < k {
                return Err(Error::InvalidArgument(alloc::format!(
                    "cannot divide a series of order {e} by t^{k}"
                )));
            }
        }
        let prec = match self.prec {
            Precision::Finite(d) if d < k => {
                return Err(Error::IndeterminateOrder(d));
            }
            Precision::Finite(d) => Precision::Finite(d - k),
            Precision::Exact => Precision::Exact,
        };
        Ok(Series {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e - k, c.clone()))
                .collect(),
            prec,
        })
    }

    /// `self -= c * other`, in place. Precision becomes the minimum of both.
    pub fn sub_scaled(&mut self, c: &Scalar, other: &Series) {
        self.prec = self.prec.min(other.prec);
        if let Precision::Finite(d) = self.prec {
            self.terms.split_off(&d);
        }
        if c.is_zero() {
            return;
        }
        for (&e, x) in &other.terms {
            if !self.prec.admits(e) {
                break;
            }
            let delta = x * c;
            match self.terms.entry(e) {
                alloc::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() -= delta;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
                alloc::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(-delta);
                }
            }
        }
    }

    fn add_impl(&self, other: &Series, negate: bool) -> Series {
        let prec = self.prec.min(other.prec);
        let mut out = self.with_precision(prec);
        let c = if negate {
            -Scalar::one()
        } else {
            Scalar::one()
        };
        out.sub_scaled(&-c, other);
        out
    }

    fn product_precision(&self, other: &Series) -> Option<Precision> {
        let exact_zero = |s: &Series| s.terms.is_empty() && s.prec.is_exact();
        if exact_zero(self) || exact_zero(other) {
            return None;
        }
        let vf = self.valuation_bound().finite().unwrap_or(0);
        let vg = other.valuation_bound().finite().unwrap_or(0);
        Some(self.prec.plus(vg).min(other.prec.plus(vf)))
    }

    /// Cauchy product with the result additionally truncated at `t^cap`.
    pub fn mul_capped(&self, other: &Series, cap: usize) -> Series {
        self.mul_with(other, Some(cap))
    }

    fn mul_with(&self, other: &Series, cap: Option<usize>) -> Series {
        let Some(mut prec) = self.product_precision(other) else {
            return Series::zero();
        };
        if let Some(c) = cap {
            prec = prec.min(Precision::Finite(c));
        }
        // multiply over the integers after clearing denominators
        let (da, na) = self.cleared();
        let (db, nb) = other.cleared();
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for &(i, ref a) in &na {
            if !prec.admits(i) {
                break;
            }
            for &(j, ref b) in &nb {
                if !prec.admits(i + j) {
                    break;
                }
                let p = a * b;
                match acc.entry(i + j) {
                    alloc::collections::btree_map::Entry::Occupied(mut o) => *o.get_mut() += p,
                    alloc::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(p);
                    }
                }
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, Scalar::new(c, den.clone())))
            .collect();
        Series { terms, prec }
    }

    // (common denominator, integer numerators)
    fn cleared(&self) -> (BigInt, Vec<(usize, BigInt)>) {
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let nums = self
            .terms
            .iter()
            .map(|(&e, c)| (e, c.numer() * (&den / c.denom())))
            .collect();
        (den, nums)
    }

    pub fn pow(&self, k: u32) -> Series {
        self.pow_with(k, None)
    }

    pub fn pow_capped(&self, k: u32, cap: usize) -> Series {
        self.pow_with(k, Some(cap))
    }

    fn pow_with(&self, mut k: u32, cap: Option<usize>) -> Series {
        let mut result = Series::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_with(&base, cap);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_with(&base, cap);
            }
        }
        match cap {
            Some(c) => result.with_precision(Precision::Finite(c)),
            None => result,
        }
    }

    fn unit_constant(&self) -> Result<&Scalar> {
        match self.terms.get(&0) {
            Some(c) => Ok(c),
            None => Err(Error::NotAUnit),
        }
    }

    /// Multiplicative inverse of a unit, known up to `min(prec, target)`.
    pub fn invert_unit(&self, target: usize) -> Result<Series> {
        let c0 = self.unit_constant()?;
        let p = self
            .prec
            .min(Precision::Finite(target))
            .finite()
            .unwrap_or(target);
        let inv0 = c0.recip();
        let mut g: Vec<Scalar> = Vec::with_capacity(p);
        for k in 0..p {
            if k == 0 {
                g.push(inv0.clone());
                continue;
            }
            let mut s = Scalar::zero();
            for (&j, fj) in self.terms.range(1..=k) {
                let gk = &g[k - j];
                if !gk.is_zero() {
                    s += fj * gk;
                }
            }
            g.push(-s * &inv0);
        }
        Ok(Series::from_terms(
            g.into_iter().enumerate(),
            Precision::Finite(p),
        ))
    }

    /// `g` with `g^n = self` and `g(0)` the rational `n`-th root of `self(0)`,
    /// by Newton iteration doubling the precision each step.
    pub fn nth_root_unit(&self, n: u32, target: usize) -> Result<Series> {
        if n == 0 {
            return Err(Error::InvalidArgument("0-th root".into()));
        }
        let c0 = self.unit_constant()?;
        let root0 = scalar::nth_root(c0, n).ok_or(Error::NoRationalRoot(n))?;
        let p = self
            .prec
            .min(Precision::Finite(target))
            .finite()
            .unwrap_or(target);
        if n == 1 {
            return Ok(self.with_precision(Precision::Finite(p)));
        }
        let f = self.known_part();
        let n_scalar = scalar::int(n as i64);
        let mut g = Series::constant(root0);
        let mut k = 1usize;
        while k < p {
            k = (2 * k).min(p);
            let g_n1 = g.pow_capped(n - 1, k);
            let g_n = g_n1.mul_capped(&g, k);
            let residual = (&g_n - &f).with_precision(Precision::Finite(k));
            let deriv = g_n1.scale(&n_scalar);
            let correction = residual.mul_capped(&deriv.invert_unit(k)?, k);
            g = (&g - &correction).known_part();
        }
        Ok(g.with_precision(Precision::Finite(p)))
    }

    /// `self(inner(t))`. The inner series must have positive order.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        let og = match inner.valuation_bound() {
            Precision::Finite(0) => {
                return Err(if inner.is_zero() {
                    Error::IndeterminateOrder(0)
                } else {
                    Error::InnerOrderZero
                });
            }
            Precision::Finite(v) => v,
            Precision::Exact => {
                // inner is exactly zero
                let prec = if self.prec.admits(0) {
                    Precision::Exact
                } else {
                    self.prec
                };
                return Ok(Series::from_terms(
                    self.terms.get(&0).cloned().map(|c| (0, c)),
                    prec,
                ));
            }
        };
        let cap_tail = match self.prec {
            Precision::Finite(pf) => Precision::Finite(pf * og),
            Precision::Exact => Precision::Exact,
        };
        let kmin = self.terms.range(1..).next().map(|(&k, _)| k);
        let cap_inner = match (inner.prec, kmin) {
            (Precision::Finite(pg), Some(k)) => Precision::Finite(pg + (k - 1) * og),
            _ => Precision::Exact,
        };
        let prec = cap_tail.min(cap_inner);
        Ok(compose_known(self, &inner.known_part(), og, prec))
    }

    /// Compositional inverse of `t + O(t^2)`: `r` with `self(r) = r(self) = t`.
    pub fn revert(&self, target: usize) -> Result<Series> {
        match self.order()? {
            Some(1) => {}
            Some(o) => return Err(Error::RevertOrder(o)),
            None => return Err(Error::RevertOrder(0)),
        }
        if !self.coeff(1).is_one() {
            return Err(Error::RevertLinearCoefficient);
        }
        let p = self
            .prec
            .min(Precision::Finite(target))
            .finite()
            .unwrap_or(target);
        let s = self.known_part();
        let ds = s.derivative();
        let t = Series::t();
        let mut r = Series::t();
        let mut k = 2usize;
        while k < p {
            k = (2 * k).min(p);
            let cap = Precision::Finite(k);
            let s_r = compose_known(&s, &r, 1, cap);
            let ds_r = compose_known(&ds, &r, 1, cap);
            let residual = (&s_r - &t).with_precision(cap);
            let correction = residual.mul_capped(&ds_r.invert_unit(k)?, k);
            r = (&r - &correction).known_part();
        }
        Ok(r.with_precision(Precision::Finite(p)))
    }

    /// Term-wise `d/dt`; a finite precision drops by one.
    pub fn derivative(&self) -> Series {
        let prec = match self.prec {
            Precision::Finite(d) => Precision::Finite(d.saturating_sub(1)),
            Precision::Exact => Precision::Exact,
        };
        Series::from_terms(
            self.terms
                .iter()
                .filter(|(&e, _)| e > 0)
                .map(|(&e, c)| (e - 1, c * scalar::int(e as i64))),
            prec,
        )
    }
}

/// Composition using only the known terms of `outer` and a polynomial `inner`
/// of order `og >= 1`, truncated at `prec`.
fn compose_known(outer: &Series, inner: &Series, og: usize, prec: Precision) -> Series {
    let cap = prec.finite();
    let mut acc = Series::zero();
    let mut power = Series::one();
    let mut power_exp = 0u32;
    for (&k, fk) in &outer.terms {
        if !prec.admits(k * og) {
            break;
        }
        let step = k as u32 - power_exp;
        if step > 0 {
            let factor = inner.pow_with(step, cap);
            power = power.mul_with(&factor, cap);
            power_exp = k as u32;
        }
        acc.sub_scaled(&-fk, &power);
    }
    Series {
        terms: acc.terms,
        prec,
    }
    .with_precision(prec)
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.add_impl(rhs, false)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.add_impl(rhs, true)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.mul_with(rhs, None)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scale(&-Scalar::one())
    }
}

impl Add for Series {
    type Output = Series;
    fn add(self, rhs: Series) -> Series {
        &self + &rhs
    }
}

impl Sub for Series {
    type Output = Series;
    fn sub(self, rhs: Series) -> Series {
        &self - &rhs
    }
}

impl Mul for Series {
    type Output = Series;
    fn mul(self, rhs: Series) -> Series {
        &self * &rhs
    }
}

/// Canonical text form: `2*t^19 + t^20 - 1/2*t^41 + O(t^50)`.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&e, c) in &self.terms {
            let negative = c.is_negative();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        match (first, self.prec) {
            (true, Precision::Exact) => f.write_str("0"),
            (true, Precision::Finite(d)) => write!(f, "O(t^{d})"),
            (false, Precision::Finite(d)) => write!(f, " + O(t^{d})"),
            (false, Precision::Exact) => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use alloc::string::ToString;

    fn p(terms: &[(usize, i64)]) -> Series {
        Series::poly(terms)
    }

    #[test]
    fn order_examples() {
        assert_eq!(p(&[(6, 1), (9, 1)]).order(), Ok(Some(6)));
        assert_eq!(Series::zero().order(), Ok(None));
        assert_eq!(p(&[(19, 2), (20, 1)]).order(), Ok(Some(19)));
        assert_eq!(Series::big_o(7).order(), Err(Error::IndeterminateOrder(7)));
    }

    #[test]
    fn linear_ops() {
        let a = p(&[(9, 1), (10, 1)]);
        let b = p(&[(9, -1), (10, -1)]);
        assert_eq!(&a + &b, Series::zero());
        let half = ratio(1, 2);
        let s = p(&[(19, 2), (20, 1)]).scale(&half);
        assert_eq!(s.to_string(), "t^19 + 1/2*t^20");
        assert_eq!(
            &p(&[(18, 1), (19, 2), (20, 1)]) - &p(&[(18, 1)]),
            p(&[(19, 2), (20, 1)])
        );
    }

    #[test]
    fn add_precision_is_min() {
        let a = Series::from_terms([(1, int(1))], Precision::Finite(5));
        let b = p(&[(2, 1), (7, 1)]);
        let s = &a + &b;
        assert_eq!(s.prec(), Precision::Finite(5));
        assert_eq!(
            s,
            Series::from_terms([(1, int(1)), (2, int(1))], Precision::Finite(5))
        );
    }

    #[test]
    fn mul_examples() {
        let a = p(&[(9, 1), (10, 1)]);
        assert_eq!(&a * &a, p(&[(18, 1), (19, 2), (20, 1)]));
        assert_eq!(&a * &Series::one(), a);
        let t6 = Series::t_pow(6);
        assert_eq!(&(&t6 * &t6) * &t6, Series::t_pow(18));
    }

    #[test]
    fn mul_precision_rule() {
        // (t + O(t^4)) * (t^2 + O(t^3)) = t^3 + O(t^4)
        let f = Series::from_terms([(1, int(1))], Precision::Finite(4));
        let g = Series::from_terms([(2, int(1))], Precision::Finite(3));
        let h = &f * &g;
        assert_eq!(h.prec(), Precision::Finite(4));
        assert_eq!(h.order(), Ok(Some(3)));
        // O(t^3) * O(t^2) = O(t^5)
        assert_eq!(
            (&Series::big_o(3) * &Series::big_o(2)).prec(),
            Precision::Finite(5)
        );
        assert_eq!(&Series::zero() * &Series::big_o(2), Series::zero());
    }

    #[test]
    fn invert_examples() {
        let inv = p(&[(0, 1), (1, 1)]).invert_unit(6).unwrap();
        assert_eq!(
            inv,
            Series::from_terms(
                [
                    (0, int(1)),
                    (1, int(-1)),
                    (2, int(1)),
                    (3, int(-1)),
                    (4, int(1)),
                    (5, int(-1))
                ],
                Precision::Finite(6),
            )
        );
        assert_eq!(
            Series::one().invert_unit(3).unwrap().truncate(3),
            Series::one()
        );
        let f = p(&[(0, 1), (1, 2), (2, 1)]);
        let g = f.invert_unit(10).unwrap();
        assert_eq!((&f * &g).truncate(10), Series::one());
        assert_eq!(g.coeff(3), int(-4));
        assert_eq!(Series::t().invert_unit(4), Err(Error::NotAUnit));
        assert_eq!(Series::big_o(3).invert_unit(4), Err(Error::NotAUnit));
    }

    #[test]
    fn root_examples() {
        let sq = p(&[(0, 1), (1, 2), (2, 1)]).nth_root_unit(2, 12).unwrap();
        assert_eq!(sq.truncate(12), p(&[(0, 1), (1, 1)]));
        assert_eq!(
            Series::one().nth_root_unit(5, 8).unwrap().truncate(8),
            Series::one()
        );
        let f = p(&[(0, 1), (1, 1)]);
        let cube = f.nth_root_unit(3, 9).unwrap();
        assert_eq!(cube.coeff(1), ratio(1, 3));
        assert_eq!(cube.coeff(2), ratio(-1, 9));
        assert_eq!(cube.pow(3).truncate(9), f);
        assert_eq!(
            p(&[(0, 2)]).nth_root_unit(2, 4),
            Err(Error::NoRationalRoot(2))
        );
        let four = p(&[(0, 4), (1, 4)]).nth_root_unit(2, 6).unwrap();
        assert_eq!(four.coeff(0), int(2));
    }

    #[test]
    fn compose_examples() {
        let f = p(&[(2, 3), (5, 1)]);
        assert_eq!(f.compose(&Series::t()).unwrap(), f);
        let sq = Series::t_pow(2).compose(&p(&[(1, 1), (2, 1)])).unwrap();
        assert_eq!(sq, p(&[(2, 1), (3, 2), (4, 1)]));
        assert_eq!(f.compose(&p(&[(0, 1), (1, 1)])), Err(Error::InnerOrderZero));
    }

    #[test]
    fn compose_precision() {
        // f = 1 + t + O(t^3), g = t^2 + O(t^5): f(g) = 1 + t^2 + O(t^5)
        let f = Series::from_terms([(0, int(1)), (1, int(1))], Precision::Finite(3));
        let g = Series::from_terms([(2, int(1))], Precision::Finite(5));
        let h = f.compose(&g).unwrap();
        assert_eq!(h.prec(), Precision::Finite(5));
        assert_eq!(h.coeff(2), int(1));
    }

    #[test]
    fn revert_examples() {
        assert_eq!(Series::t().revert(7).unwrap().truncate(7), Series::t());
        let s = p(&[(1, 1), (2, 1)]);
        let r = s.revert(8).unwrap();
        assert_eq!(r.truncate(5), p(&[(1, 1), (2, -1), (3, 2), (4, -5)]));
        assert_eq!(r.compose(&s).unwrap().truncate(8), Series::t());
        assert_eq!(s.compose(&r).unwrap().truncate(8), Series::t());
        let s2 = p(&[(1, 1), (2, -1)]);
        let r2 = s2.revert(6).unwrap();
        assert_eq!(r2.truncate(5), p(&[(1, 1), (2, 1), (3, 2), (4, 5)]));
        assert_eq!(p(&[(2, 1)]).revert(4), Err(Error::RevertOrder(2)));
        assert_eq!(p(&[(1, 2)]).revert(4), Err(Error::RevertLinearCoefficient));
    }

    #[test]
    fn derivative_and_truncate() {
        assert_eq!(Series::t_pow(7).derivative(), p(&[(6, 7)]));
        assert_eq!(p(&[(0, 5)]).derivative(), Series::zero());
        assert_eq!(p(&[(8, 1), (12, 1)]).derivative(), p(&[(7, 8), (11, 12)]));
        assert_eq!(Series::big_o(5).derivative().prec(), Precision::Finite(4));
        assert_eq!(p(&[(12, 1), (23, 1)]).truncate(19), Series::t_pow(12));
        assert_eq!(p(&[(12, 1)]).truncate(0), Series::zero());
        assert_eq!(Series::t_pow(8).truncate(100), Series::t_pow(8));
    }

    #[test]
    fn display_forms() {
        assert_eq!(
            p(&[(19, 2), (20, 1), (41, 1)]).to_string(),
            "2*t^19 + t^20 + t^41"
        );
        assert_eq!(Series::monomial(ratio(1, 2), 3).to_string(), "1/2*t^3");
        assert_eq!(p(&[(0, -1), (1, -1), (2, 3)]).to_string(), "-1 - t + 3*t^2");
        assert_eq!(Series::zero().to_string(), "0");
        assert_eq!(Series::big_o(4).to_string(), "O(t^4)");
        let f = Series::from_terms([(3, int(1))], Precision::Finite(10));
        assert_eq!(f.to_string(), "t^3 + O(t^10)");
    }
}

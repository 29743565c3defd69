//! Polynomials in the generator symbols `x1, x2, ...`, used as rewriting
//! certificates.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;
use crate::series::Series;

/// Sparse polynomial over the rationals; a monomial is its exponent vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Vec<u32>, Scalar>,
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn monomial(c: Scalar, exponents: Vec<u32>) -> Self {
        let mut p = Poly::zero();
        p.add_term(exponents, c);
        p
    }

    /// The variable `x_{i+1}`.
    pub fn var(i: usize) -> Self {
        let mut e = alloc::vec![0; i + 1];
        e[i] = 1;
        Poly::monomial(Scalar::one(), e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Scalar)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = trim(exponents);
        let entry = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Poly) {
        for (e, x) in &other.terms {
            self.add_term(e.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let mut out = Poly::zero();
        out.add_scaled(c, self);
        out
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Number of variables actually used.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Substitutes `x_{i+1} = values[i]`.
    pub fn eval(&self, values: &[Series]) -> Series {
        let mut acc = Series::zero();
        for (e, c) in &self.terms {
            let mut m = Series::one();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    m = &m * &values[i].pow(k);
                }
            }
            acc.sub_scaled(&-c, &m);
        }
        acc
    }
}

/// `x2^2 - x1^3`: terms in descending order, comparing the last variable first.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut order: Vec<(&Vec<u32>, &Scalar)> = self.terms.iter().collect();
        let width = self.num_vars();
        let rev = |e: &Vec<u32>| -> Vec<u32> {
            (0..width)
                .rev()
                .map(|i| e.get(i).copied().unwrap_or(0))
                .collect()
        };
        order.sort_by_key(|t| core::cmp::Reverse(rev(t.0)));
        for (i, (e, c)) in order.into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let vars: Vec<(usize, u32)> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| (j + 1, k))
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            for (j, (var, k)) in vars.into_iter().enumerate() {
                if j > 0 {
                    f.write_str("*")?;
                }
                if k == 1 {
                    write!(f, "x{var}")?;
                } else {
                    write!(f, "x{var}^{k}")?;
                }
            }
        }
        Ok(())
    }
}

//! Numerical semigroups observed through finite value sets.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::Error;
use crate::Result;

/// A numerical semigroup given by its minimal generators, conductor and gaps.
///
/// `bound` records how far the underlying value set was known when the
/// semigroup was certified; it takes no part in comparisons.
#[derive(Clone, Debug)]
pub struct NumericalSemigroup {
    min_generators: Vec<usize>,
    conductor: usize,
    gaps: Vec<usize>,
    bound: usize,
}

/// All sums of `generators` that are `<= bound`, together with 0.
pub fn close(generators: &[usize], bound: usize) -> BTreeSet<usize> {
    let mut member = alloc::vec![false; bound + 1];
    member[0] = true;
    for x in 1..=bound {
        member[x] = generators.iter().any(|&g| g > 0 && g <= x && member[x - g]);
    }
    member
        .iter()
        .enumerate()
        .filter(|(_, &m)| m)
        .map(|(x, _)| x)
        .collect()
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.min_generators == other.min_generators
    }
}

impl Eq for NumericalSemigroup {}

impl core::hash::Hash for NumericalSemigroup {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.min_generators.hash(state);
    }
}

impl NumericalSemigroup {
    /// Certifies a semigroup from a value set known on `[0, bound]`.
    ///
    /// The conductor is only accepted once a run of `m` consecutive members
    /// (with `m` the least nonzero value) is seen inside the window; a shorter
    /// window cannot tell a gap from missing data.
    pub fn from_value_set(values: &BTreeSet<usize>, bound: usize) -> Result<Self> {
        let Some(&multiplicity) = values.range(1..=bound).next() else {
            return Err(Error::InsufficientBound {
                multiplicity: 0,
                bound,
            });
        };
        let has = |x: usize| x == 0 || values.contains(&x);
        let mut run = 0usize;
        let mut conductor = None;
        for x in 0..=bound {
            if has(x) {
                run += 1;
                if run == multiplicity {
                    conductor = Some(x + 1 - multiplicity);
                    break;
                }
            } else {
                run = 0;
            }
        }
        let Some(conductor) = conductor else {
            let g = values.range(1..=bound).fold(0usize, |g, &v| g.gcd(&v));
            if g > 1 {
                return Err(Error::GcdGreaterThanOne(g));
            }
            return Err(Error::InsufficientBound {
                multiplicity,
                bound,
            });
        };
        let gaps: Vec<usize> = (0..conductor).filter(|&x| !has(x)).collect();
        let member = |x: usize| x >= conductor || has(x);
        let min_generators = (1..=conductor + multiplicity)
            .filter(|&x| member(x) && !(1..=x / 2).any(|y| member(y) && member(x - y)))
            .collect();
        Ok(NumericalSemigroup {
            min_generators,
            conductor,
            gaps,
            bound,
        })
    }

    /// The semigroup generated by `generators`, which must have gcd 1.
    pub fn generated_by(generators: &[usize]) -> Result<Self> {
        let g = generators.iter().fold(0usize, |g, &v| g.gcd(&v));
        if g == 0 {
            return Err(Error::InvalidArgument("no nonzero generator".into()));
        }
        if g > 1 {
            return Err(Error::GcdGreaterThanOne(g));
        }
        let mut bound = 2 * generators.iter().copied().max().unwrap_or(1);
        loop {
            match Self::from_value_set(&close(generators, bound), bound) {
                Err(Error::InsufficientBound { .. }) => bound *= 2,
                other => return other,
            }
        }
    }

    pub fn min_generators(&self) -> &[usize] {
        &self.min_generators
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn multiplicity(&self) -> usize {
        self.min_generators[0]
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        x >= self.conductor || self.gaps.binary_search(&x).is_err()
    }

    /// Members in `[0, bound]`.
    pub fn elements_up_to(&self, bound: usize) -> BTreeSet<usize> {
        (0..=bound).filter(|&x| self.contains(x)).collect()
    }
}

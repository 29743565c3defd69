//! Exact rational coefficients.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

/// Coefficient field element. `BigRational` keeps values in lowest terms with
/// a positive denominator.
pub type Scalar = num_rational::BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

fn exact_int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_zero() {
        return Some(BigInt::zero());
    }
    if n.sign() == Sign::Minus {
        if k.is_multiple_of(2) {
            return None;
        }
        return exact_int_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

/// The rational `k`-th root of `q`, if one exists.
pub fn nth_root(q: &Scalar, k: u32) -> Option<Scalar> {
    if k == 0 {
        return None;
    }
    if k == 1 || q.is_one() {
        return Some(q.clone());
    }
    let num = exact_int_root(q.numer(), k)?;
    let den = exact_int_root(q.denom(), k)?;
    Some(Scalar::new(num, den))
}

pub fn is_integer(q: &Scalar) -> bool {
    q.denom().is_one()
}

pub fn abs(q: &Scalar) -> Scalar {
    q.abs()
}

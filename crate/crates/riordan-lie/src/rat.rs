//! Exact rational scalars.
//!
//! The base field of the whole crate is Q, realized by
//! [`num_rational::BigRational`]: arbitrary-precision, always reduced,
//! positive denominator. Everything downstream (series, matrices,
//! polynomials) is built on top of this type, so every computed identity
//! is a zero-tolerance equality.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rat;

/// `p/q` as a [`Rat`]. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Integer `n` as a [`Rat`].
pub fn rati(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n!` as a [`Rat`].
pub fn factorial(n: u64) -> Rat {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rat::from_integer(acc)
}

/// Binomial coefficient `C(n, k)` as a [`Rat`], zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    Rat::from_integer(acc)
}

/// True iff `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// `r` as an `i64` if it is a small integer.
pub fn to_i64(r: &Rat) -> Option<i64> {
    if !is_integer(r) {
        return None;
    }
    let n = r.numer();
    i64::try_from(n.clone()).ok()
}

/// `|r| >= bound` comparison without leaving Q.
pub fn abs_at_least(r: &Rat, bound: i64) -> bool {
    r.abs() >= rati(bound)
}

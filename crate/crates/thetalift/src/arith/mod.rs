//! Exact and high-precision arithmetic substrate.

pub mod bernoulli;
pub mod bivariate;
pub mod cyclotomic;
pub mod gaussrat;
pub mod nfield;
pub mod poly;
pub mod real;
pub mod series;

pub use bernoulli::bernoulli;
pub use bivariate::BivariateQExpansion;
pub use cyclotomic::Cyclotomic;
pub use gaussrat::{GaussRat, PiLaurent};
pub use nfield::{NfElem, NumberField};
pub use real::{Cplx, Real};
pub use series::{Coeff, QExpansion};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always reduced, denominator > 0.
pub type QQ = num_rational::BigRational;

/// Rational from an integer pair.
pub fn qq(num: i64, den: i64) -> QQ {
    QQ::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn qq_int(n: i64) -> QQ {
    QQ::from_integer(BigInt::from(n))
}

/// Reduce a rational modulo 1 into `[0, 1)`.
pub fn frac_mod_one(x: &QQ) -> QQ {
    let f = x.fract();
    if f.is_negative() {
        f + QQ::one()
    } else {
        f
    }
}

/// Least common multiple of two positive integers.
pub fn lcm_i64(a: i64, b: i64) -> i64 {
    num_integer::lcm(a, b)
}

/// Denominator of a rational as i64, panicking on overflow.
pub fn denom_i64(x: &QQ) -> i64 {
    use num_traits::ToPrimitive;
    x.denom().to_i64().expect("denominator exceeds i64")
}

/// Exact integer square root check: returns `Some(r)` when `n = r^2`.
pub fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

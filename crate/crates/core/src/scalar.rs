//! Scalar abstractions shared by polynomial evaluation and the log-domain
//! bound formulas.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Float, FloatConst, Num, One, Signed, ToPrimitive, Zero};

use crate::Rational;

/// A commutative ring that independent-set counts can be lifted into.
///
/// Implemented for `f32`, `f64` and [`BigRational`]; the rational
/// implementation is exact, the floating ones round.
pub trait Scalar: Num + Clone {
    fn from_count(count: &BigUint) -> Self;
}

impl Scalar for f64 {
    fn from_count(count: &BigUint) -> Self {
        count.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl Scalar for f32 {
    fn from_count(count: &BigUint) -> Self {
        count.to_f32().unwrap_or(f32::INFINITY)
    }
}

impl Scalar for BigRational {
    fn from_count(count: &BigUint) -> Self {
        BigRational::from_integer(BigInt::from(count.clone()))
    }
}

/// Floating-point type for the log2-domain formulas.
pub trait RealScalar: Float + FloatConst {}

impl<F: Float + FloatConst> RealScalar for F {}

/// Base-2 logarithm of a positive rational, accurate for values far outside
/// the `f64` range.
pub fn log2_rational(x: &Rational) -> f64 {
    assert!(x.is_positive(), "log2 of a non-positive rational");
    log2_bigint(x.numer()) - log2_bigint(x.denom())
}

/// Base-2 logarithm of a positive integer.
pub fn log2_biguint(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "log2 of zero");
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap().log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap();
    top.log2() + shift as f64
}

fn log2_bigint(x: &BigInt) -> f64 {
    log2_biguint(x.magnitude())
}

/// `x^k` for a rational base and an unsigned exponent.
pub fn rational_pow(x: &Rational, k: u64) -> Rational {
    let mut result = Rational::one();
    let mut base = x.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            result *= &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    result
}

/// Integer as an exact rational.
pub fn rational_from_u64(x: u64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer.parse().ok()?;
    let denom: BigInt = denom.parse().ok()?;
    if denom.is_zero() {
        return None;
    }
    Some(Rational::new(numer, denom))
}

/// Formats a rational as `"p/q"`, or `"p"` when integral.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Binary entropy `-x log2 x - (1-x) log2 (1-x)` with `H(0) = H(1) = 0`.
pub fn binary_entropy<F: Float>(x: F) -> F {
    let one = F::one();
    let term = |p: F| if p <= F::zero() { F::zero() } else { -p * p.log2() };
    term(x) + term(one - x)
}

/// `sqrt(log2 d / d)`, the correction rate shared by the Sapozhenko-type
/// bounds.
pub fn sqrt_log_rate<F: Float>(d: F) -> F {
    (d.log2() / d).sqrt()
}

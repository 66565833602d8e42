//! Independence polynomials with exact big-integer coefficients.

mod count;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Scalar;

pub use count::{
    brute_force_polynomial, count_independent_sets, independence_polynomial, independence_polynomial_with,
    CountOptions, BRUTE_FORCE_LIMIT,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("brute-force enumeration limited to {BRUTE_FORCE_LIMIT} vertices, got {0}")]
    OverBudget(usize),
    #[error("invalid polynomial: {0}")]
    Invalid(String),
}

/// `P(x, G) = sum_t i_t(G) x^t`, where `i_t(G)` counts the independent sets
/// of size `t`.
///
/// `coeffs[t]` is `i_t`, the last coefficient is nonzero and its index is
/// the independence number. `n` is the vertex count of the graph the
/// polynomial belongs to, so `coeffs[1] == n` whenever `n > 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IndependencePolynomial {
    n: usize,
    coeffs: Vec<BigUint>,
}

impl IndependencePolynomial {
    /// Polynomial of the graph with no vertices.
    pub fn one() -> Self {
        IndependencePolynomial { n: 0, coeffs: vec![BigUint::one()] }
    }

    /// Validates and wraps a coefficient vector.
    pub fn from_coeffs(n: usize, mut coeffs: Vec<BigUint>) -> Result<Self, PolyError> {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.first() != Some(&BigUint::one()) {
            return Err(PolyError::Invalid("constant coefficient must be 1".into()));
        }
        let linear = coeffs.get(1).cloned().unwrap_or_default();
        if linear != BigUint::from(n) {
            return Err(PolyError::Invalid(format!("linear coefficient {linear} differs from n = {n}")));
        }
        Ok(IndependencePolynomial { n, coeffs })
    }

    pub(crate) fn from_raw(n: usize, coeffs: Vec<BigUint>) -> Self {
        debug_assert!(coeffs.last().is_some_and(|c| !c.is_zero()));
        IndependencePolynomial { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// `i_t`, zero beyond the degree.
    pub fn coeff(&self, t: usize) -> BigUint {
        self.coeffs.get(t).cloned().unwrap_or_default()
    }

    /// Degree, equal to the independence number of the graph.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `i(G) = P(1, G)`.
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Polynomial of a disjoint union: the product of the parts.
    pub fn product(&self, other: &IndependencePolynomial) -> IndependencePolynomial {
        IndependencePolynomial { n: self.n + other.n, coeffs: convolve(&self.coeffs, &other.coeffs) }
    }

    /// `P(x, G)` by Horner's rule, in any scalar ring.
    pub fn evaluate<S: Scalar>(&self, x: &S) -> S {
        self.coeffs.iter().rev().fold(S::zero(), |acc, c| acc * x.clone() + S::from_count(c))
    }
}

pub(crate) fn convolve(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl fmt::Debug for IndependencePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter().map(|c| c.to_string())).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    coeffs: Vec<String>,
}

impl Serialize for IndependencePolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyJson { n: self.n, coeffs: self.coeffs.iter().map(|c| c.to_string()).collect() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IndependencePolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = PolyJson::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| c.parse::<BigUint>().map_err(|e| D::Error::custom(format!("coefficient {c:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        IndependencePolynomial::from_coeffs(raw.n, coeffs).map_err(D::Error::custom)
    }
}

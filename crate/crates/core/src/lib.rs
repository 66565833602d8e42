//! Exact counting of independent sets in small graphs, together with the
//! closed-form upper bounds on the independence polynomial of regular graphs
//! and the greedy T/D cover construction used to bound it.
//!
//! Counting is exact throughout: coefficients are [`BigUint`]s and activities
//! are [`Rational`]s. Bounds that contain irrational quantities are evaluated
//! in the base-2 logarithm domain over any [`num_traits::Float`]; everything
//! that becomes rational after raising both sides to an integer power is
//! certified exactly.
//!
//! The numeric layer is generic over the scalar type (see [`scalar`]); the
//! aliases below fix the concrete types used by the rest of the crate.

pub mod bounds;
pub mod cover;
pub mod graph;
pub mod poly;
pub mod scalar;

pub use num_bigint::BigUint;

/// Exact activity and bound values.
pub type Rational = num_rational::BigRational;

/// Real scalar used by the log2-domain layer.
pub type Real = f64;

pub use bounds::{BoundError, BoundReport};
pub use cover::{CoverCertificate, CoverDefect, CoverError};
pub use graph::{Graph, GraphError, GraphStats, VertexSet};
pub use poly::{IndependencePolynomial, PolyError};
pub use scalar::{parse_rational, RealScalar, Scalar};

//! Closed-form upper bounds on `i(G)`, `i_t(G)` and `P(lambda, G)`.
//!
//! Every evaluator returns a [`BoundReport`] carrying the base-2 logarithm
//! of the bound. When some integer power of the bound is rational (for
//! rational `lambda`), the report also carries that power exactly, so a
//! count can be certified against it without rounding: a value `p` satisfies
//! the bound iff `p^power <= exact_value`.

pub mod log2;

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;
use crate::poly::IndependencePolynomial;
use crate::scalar::{format_rational, log2_rational, rational_from_u64, rational_pow};
use crate::Rational;

pub use crate::scalar::binary_entropy;

/// Relative tolerance for log2-domain comparisons.
pub const LOG2_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundError {
    #[error("independence number 0 is undefined for a graph with {0} vertices")]
    ZeroAlpha(usize),
    #[error("independence number {alpha} exceeds {limit}")]
    AlphaTooLarge { alpha: usize, limit: String },
    #[error("degree {got} below the minimum {min}")]
    DegreeTooSmall { min: usize, got: usize },
    #[error("activity must be positive, got {0}")]
    NonPositiveActivity(String),
    #[error("constant {name} must be positive, got {value}")]
    NonPositiveConstant { name: &'static str, value: f64 },
    #[error("set size {t} exceeds the vertex count {n}")]
    SizeTooLarge { t: usize, n: usize },
    #[error("graph is not regular")]
    NotRegular,
    #[error("order is not a permutation of the {0} vertices")]
    InvalidOrder(usize),
    #[error("phi = {phi} must satisfy 0 < phi < d = {d}")]
    PhiOutOfRange { phi: usize, d: usize },
    #[error("invalid parameters: {0}")]
    Invalid(String),
}

/// One evaluated bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: String,
    /// `log2` of the bound.
    pub log2_value: f64,
    /// The bound raised to `exact_power`, when that is rational.
    #[serde(serialize_with = "ser_opt_rational", skip_serializing_if = "Option::is_none")]
    pub exact_value: Option<Rational>,
    pub exact_power: u32,
    /// Whether the compared value satisfies the bound, decided exactly.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds_exact: Option<bool>,
    /// Whether the compared value attains the bound, decided exactly.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality: Option<bool>,
    /// `log2(bound) - log2(value)` for the compared value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin_log2: Option<f64>,
    #[serde(serialize_with = "ser_opt_rational", skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Rational>,
    pub constants: BTreeMap<String, f64>,
}

pub(crate) fn ser_opt_rational<S: Serializer>(x: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.serialize_str(&format_rational(x)),
        None => s.serialize_none(),
    }
}

impl BoundReport {
    pub(crate) fn log_only(name: &str, log2_value: f64) -> Self {
        BoundReport {
            name: name.to_string(),
            log2_value,
            exact_value: None,
            exact_power: 1,
            holds_exact: None,
            equality: None,
            margin_log2: None,
            lambda: None,
            constants: BTreeMap::new(),
        }
    }

    pub(crate) fn with_exact(mut self, exact: Rational, power: u32) -> Self {
        self.exact_value = Some(exact);
        self.exact_power = power;
        self
    }

    pub(crate) fn with_lambda(mut self, lambda: &Rational) -> Self {
        self.lambda = Some(lambda.clone());
        self
    }

    pub(crate) fn with_constant(mut self, name: &str, value: f64) -> Self {
        self.constants.insert(name.to_string(), value);
        self
    }

    /// Compares a nonnegative value against the bound: exactly when the
    /// report has an exact witness, and always in the log2 domain.
    pub fn compared_with(mut self, value: &Rational) -> Self {
        assert!(!value.is_negative(), "compared value must be nonnegative");
        self.margin_log2 = Some(if value.is_zero() { f64::INFINITY } else { self.log2_value - log2_rational(value) });
        if let Some(exact) = &self.exact_value {
            let lhs = rational_pow(value, self.exact_power as u64);
            self.holds_exact = Some(lhs <= *exact);
            self.equality = Some(lhs == *exact);
        }
        self
    }

    pub fn compared_with_count(self, count: &BigUint) -> Self {
        self.compared_with(&Rational::from_integer(BigInt::from(count.clone())))
    }

    /// True when the compared value satisfies the bound: exactly if an exact
    /// witness exists, otherwise within [`LOG2_TOLERANCE`] in the log2 domain.
    pub fn holds(&self) -> Option<bool> {
        if let Some(h) = self.holds_exact {
            return Some(h);
        }
        self.margin_log2.map(|m| m >= -LOG2_TOLERANCE * self.log2_value.abs().max(1.0))
    }

    /// Whether `log2_value` agrees with the exact witness.
    pub fn is_consistent(&self) -> bool {
        match &self.exact_value {
            None => true,
            Some(exact) if exact.is_zero() => false,
            Some(exact) => {
                let scaled = self.log2_value * self.exact_power as f64;
                let direct = log2_rational(exact);
                (scaled - direct).abs() <= LOG2_TOLERANCE * direct.abs().max(1.0)
            }
        }
    }
}

/// Product of rational bases raised to rational exponents
/// `(base, numerator, denominator)`, returned as `(value^power, power)` with
/// the smallest power that clears every denominator.
fn cleared_power(factors: &[(Rational, u64, u64)]) -> (Rational, u32) {
    let power = factors.iter().map(|&(_, num, den)| den / num.gcd(&den).max(1)).fold(1u64, |acc, den| acc.lcm(&den));
    let value =
        factors.iter().fold(Rational::one(), |acc, (base, num, den)| acc * rational_pow(base, num * power / den));
    (value, u32::try_from(power).expect("exponent denominator fits u32"))
}

fn check_lambda(lambda: &Rational) -> Result<(), BoundError> {
    if lambda.is_positive() {
        Ok(())
    } else {
        Err(BoundError::NonPositiveActivity(format_rational(lambda)))
    }
}

fn check_constant(name: &'static str, value: f64) -> Result<(), BoundError> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(BoundError::NonPositiveConstant { name, value })
    }
}

fn check_degree(d: usize, min: usize) -> Result<(), BoundError> {
    if d >= min {
        Ok(())
    } else {
        Err(BoundError::DegreeTooSmall { min, got: d })
    }
}

fn to_f64(x: &Rational) -> f64 {
    x.to_f64().expect("activity representable as f64")
}

fn int(x: usize) -> Rational {
    rational_from_u64(x as u64)
}

/// `(1 + n/alpha)^alpha`.
pub fn alekseev_bound(n: usize, alpha: usize) -> Result<BoundReport, BoundError> {
    let mut report = alekseev_weighted_bound(n, alpha, &Rational::one())?;
    report.name = "alekseev".into();
    report.lambda = None;
    Ok(report)
}

/// `(1 + lambda n / alpha)^alpha`, valid for every graph with independence
/// number `alpha`, with equality exactly on disjoint unions of equal-order
/// complete graphs.
pub fn alekseev_weighted_bound(n: usize, alpha: usize, lambda: &Rational) -> Result<BoundReport, BoundError> {
    check_lambda(lambda)?;
    if alpha == 0 && n > 0 {
        return Err(BoundError::ZeroAlpha(n));
    }
    if alpha > n {
        return Err(BoundError::AlphaTooLarge { alpha, limit: format!("n = {n}") });
    }
    let exact = if alpha == 0 {
        Rational::one()
    } else {
        rational_pow(&(Rational::one() + lambda * int(n) / int(alpha)), alpha as u64)
    };
    let log = log2::alekseev(n as f64, alpha as f64, to_f64(lambda));
    Ok(BoundReport::log_only("alekseev_weighted", log).with_exact(exact, 1).with_lambda(lambda))
}

/// `exp2{(n/2)(1 + C / d^(1/10))}`.
pub fn alon_bound(n: usize, d: usize, c: f64) -> Result<BoundReport, BoundError> {
    check_degree(d, 1)?;
    check_constant("C", c)?;
    Ok(BoundReport::log_only("alon", log2::alon(n as f64, d as f64, c)).with_constant("C", c))
}

/// `exp2{(n/2)(1 + C sqrt(log2 d / d))}`.
pub fn sapozhenko_simple_bound(n: usize, d: usize, c: f64) -> Result<BoundReport, BoundError> {
    check_degree(d, 1)?;
    check_constant("C", c)?;
    Ok(BoundReport::log_only("sapozhenko_simple", log2::sapozhenko_simple(n as f64, d as f64, c)).with_constant("C", c))
}

/// `exp2{(n/2)(1 + 2/d)}`.
pub fn kahn_bound(n: usize, d: usize) -> Result<BoundReport, BoundError> {
    check_degree(d, 1)?;
    let (exact, power) = cleared_power(&[(int(2), (n * (d + 2)) as u64, (2 * d) as u64)]);
    Ok(BoundReport::log_only("kahn", log2::kahn(n as f64, d as f64)).with_exact(exact, power))
}

/// `(2^(d+1) - 1)^(n / 2d)`, the count of `n/2d` disjoint copies of `K_{d,d}`.
pub fn conjecture_bound(n: usize, d: usize) -> Result<BoundReport, BoundError> {
    check_degree(d, 1)?;
    let base = Rational::from_integer((BigInt::one() << (d + 1)) - 1);
    let (exact, power) = cleared_power(&[(base, n as u64, (2 * d) as u64)]);
    Ok(BoundReport::log_only("conjecture1", log2::conjecture(n as f64, d as f64)).with_exact(exact, power))
}

/// `i^(2d) <= (2^(d+1) - 1)^n`, the integer form of `i <= (2^(d+1)-1)^(n/2d)`.
pub fn conjecture1_holds_exact(i: &BigUint, n: usize, d: usize) -> bool {
    let base = (BigUint::one() << (d + 1)) - 1u32;
    i.pow((2 * d) as u32) <= base.pow(n as u32)
}

/// `(2(1 + lambda)^d - 1)^(n / 2d) = P(lambda, K_{d,d})^(n / 2d)`.
pub fn kdd_weighted_bound(n: usize, d: usize, lambda: &Rational) -> Result<BoundReport, BoundError> {
    check_degree(d, 1)?;
    check_lambda(lambda)?;
    let (exact, power) = cleared_power(&[(kdd_weighted_base(d, lambda), n as u64, (2 * d) as u64)]);
    Ok(BoundReport::log_only("kdd_weighted", log2::kdd_weighted(n as f64, d as f64, to_f64(lambda)))
        .with_exact(exact, power)
        .with_lambda(lambda))
}

fn kdd_weighted_base(d: usize, lambda: &Rational) -> Rational {
    int(2) * rational_pow(&(Rational::one() + lambda), d as u64) - Rational::one()
}

/// `p^(2d) <= (2(1 + lambda)^d - 1)^n`.
pub fn weighted_conjecture_holds_exact(p: &Rational, n: usize, d: usize, lambda: &Rational) -> bool {
    rational_pow(p, (2 * d) as u64) <= rational_pow(&kdd_weighted_base(d, lambda), n as u64)
}

/// `(1 + lambda)^(n/2) 2^(n/d)`.
pub fn weighted_kahn_bound(n: usize, d: usize, lambda: &Rational) -> Result<BoundReport, BoundError> {
    check_degree(d, 1)?;
    check_lambda(lambda)?;
    let (exact, power) = cleared_power(&[(Rational::one() + lambda, n as u64, 2), (int(2), n as u64, d as u64)]);
    Ok(BoundReport::log_only("weighted_kahn", log2::weighted_kahn(n as f64, d as f64, to_f64(lambda)))
        .with_exact(exact, power)
        .with_lambda(lambda))
}

/// `exp2{(n/2)(1 + 1/d + (C/d) sqrt(log2 d / d))}`; requires `d >= 2`.
pub fn theorem2_bound(n: usize, d: usize, c: f64) -> Result<BoundReport, BoundError> {
    check_degree(d, 2)?;
    check_constant("C", c)?;
    Ok(BoundReport::log_only("theorem2", log2::theorem2(n as f64, d as f64, c)).with_constant("C", c))
}

/// `(1 + lambda)^(n/2) exp2{(n/2d)(1 + C_lambda sqrt(log2 d / d))}`; requires
/// `d >= 2`.
pub fn theorem4_bound(n: usize, d: usize, lambda: &Rational, c_lambda: f64) -> Result<BoundReport, BoundError> {
    check_degree(d, 2)?;
    check_lambda(lambda)?;
    check_constant("C_lambda", c_lambda)?;
    Ok(BoundReport::log_only("theorem4", log2::theorem4(n as f64, d as f64, to_f64(lambda), c_lambda))
        .with_lambda(lambda)
        .with_constant("C_lambda", c_lambda))
}

/// The `C_lambda` that makes the small-independence-number case of the
/// weighted theorem go through for a given Sapozhenko constant `c`.
pub fn c_lambda_from_c(lambda: f64, c: f64) -> Result<f64, BoundError> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(BoundError::NonPositiveActivity(lambda.to_string()));
    }
    check_constant("c", c)?;
    Ok(log2::c_lambda_from_c(lambda, c))
}

/// `p(v)` for every vertex: the number of neighbours listed before `v`.
pub fn precedence_counts(g: &Graph, order: &[usize]) -> Result<Vec<usize>, BoundError> {
    let n = g.n();
    let mut position = vec![usize::MAX; n];
    if order.len() != n {
        return Err(BoundError::InvalidOrder(n));
    }
    for (i, &v) in order.iter().enumerate() {
        if v >= n || position[v] != usize::MAX {
            return Err(BoundError::InvalidOrder(n));
        }
        position[v] = i;
    }
    Ok((0..n).map(|v| g.neighbors(v).iter().filter(|&w| position[w] < position[v]).count()).collect())
}

/// Ordering bound `prod_v (2(1 + lambda)^p(v) - 1)^(1/d)` for a `d`-regular
/// graph; the exact witness is the product itself (power `d`).
pub fn order_bound(g: &Graph, order: &[usize], lambda: &Rational) -> Result<BoundReport, BoundError> {
    check_lambda(lambda)?;
    let d = g.regular_degree().ok_or(BoundError::NotRegular)?;
    check_degree(d, 1)?;
    let counts = precedence_counts(g, order)?;
    assert_eq!(counts.iter().sum::<usize>(), g.edge_count(), "precedence counts must sum to |E|");

    let lambda_f = to_f64(lambda);
    let one_plus = Rational::one() + lambda;
    let mut product = Rational::one();
    let mut log = 0.0;
    for &p in &counts {
        product *= int(2) * rational_pow(&one_plus, p as u64) - Rational::one();
        log += log2::kdd_weighted_count(p as f64, lambda_f);
    }
    Ok(BoundReport::log_only("order", log / d as f64).with_exact(product, d as u32).with_lambda(lambda))
}

/// `(1 + lambda)^(n/2) 2^((n - alpha)/d)`: the ordering bound when the order
/// starts with an independent set of size `alpha`.
pub fn independent_first_bound(n: usize, d: usize, alpha: usize, lambda: &Rational) -> Result<BoundReport, BoundError> {
    check_degree(d, 1)?;
    check_lambda(lambda)?;
    if 2 * alpha > n {
        return Err(BoundError::AlphaTooLarge { alpha, limit: format!("n/2 = {}", n as f64 / 2.0) });
    }
    let (exact, power) =
        cleared_power(&[(Rational::one() + lambda, n as u64, 2), (int(2), (n - alpha) as u64, d as u64)]);
    let log = log2::independent_first(n as f64, d as f64, alpha as f64, to_f64(lambda));
    Ok(BoundReport::log_only("independent_first", log).with_exact(exact, power).with_lambda(lambda))
}

fn check_size(n: usize, t: usize) -> Result<(), BoundError> {
    if t > n {
        Err(BoundError::SizeTooLarge { t, n })
    } else {
        Ok(())
    }
}

/// `exp2{(n/2)(H(2t/n) + 2/d)}`, or `+ 1/d` for bipartite graphs. The
/// density `2t/n` is clamped to 1; no regular graph has independent sets
/// beyond `n/2`.
pub fn fixed_size_bound(n: usize, d: usize, t: usize, bipartite: bool) -> Result<BoundReport, BoundError> {
    check_degree(d, 1)?;
    check_size(n, t)?;
    let (name, slack) = if bipartite { ("fixed_size_bipartite", 1.0) } else { ("fixed_size_general", 2.0) };
    Ok(BoundReport::log_only(name, log2::fixed_size(n as f64, d as f64, t as f64, slack)))
}

/// `exp2{(n/2)(H(2t/n) + 1/d + (c_alpha/d) sqrt(log2 d / d))}`.
pub fn improved_fixed_size_bound(n: usize, d: usize, t: usize, c_alpha: f64) -> Result<BoundReport, BoundError> {
    check_degree(d, 1)?;
    check_size(n, t)?;
    check_constant("c_alpha", c_alpha)?;
    Ok(BoundReport::log_only("fixed_size_improved", log2::improved_fixed_size(n as f64, d as f64, t as f64, c_alpha))
        .with_constant("c_alpha", c_alpha))
}

/// Independence polynomial of `m` disjoint copies of `K_{d,d}`, built from
/// `P(K_{d,d}) = 2(1 + x)^d - 1` without constructing the graph.
pub fn kdd_union_fixed_size(m: usize, d: usize) -> Result<IndependencePolynomial, BoundError> {
    if m < 1 || d < 1 {
        return Err(BoundError::Invalid(format!("need m >= 1 and d >= 1, got m = {m}, d = {d}")));
    }
    let mut coeffs = Vec::with_capacity(d + 1);
    let mut binom = BigUint::one();
    coeffs.push(BigUint::one());
    for t in 1..=d {
        binom = binom * BigUint::from(d + 1 - t) / BigUint::from(t);
        coeffs.push(&binom * 2u32);
    }
    let one_copy = IndependencePolynomial::from_coeffs(2 * d, coeffs).expect("valid K_{d,d} polynomial");
    Ok((1..m).fold(one_copy.clone(), |acc, _| acc.product(&one_copy)))
}

/// Per-pair exponent of the `K_{d,d}` union count next to its expansion
/// `1 + 1/d - 1/((2 ln 2) d 2^d)`.
pub fn kdd_exponent_expansion(d: usize) -> Result<(f64, f64), BoundError> {
    check_degree(d, 1)?;
    Ok(log2::kdd_exponent_expansion(d as f64))
}

/// Default values for the unspecified universal constants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, serde::Deserialize)]
pub struct Constants {
    /// `C` in the Alon, Sapozhenko and `i(G)` theorem bounds.
    pub big_c: f64,
    /// `c` in the weighted Sapozhenko lemma.
    pub c: f64,
    /// `C_lambda`; derived from `c` per activity when absent.
    pub c_lambda: Option<f64>,
    /// `c_alpha`; defaults to `C_lambda` at `lambda = 1`.
    pub c_alpha: Option<f64>,
}

impl Default for Constants {
    fn default() -> Self {
        Constants { big_c: 2.0, c: 1.0, c_lambda: None, c_alpha: None }
    }
}

impl Constants {
    pub fn c_lambda_for(&self, lambda: &Rational) -> Result<f64, BoundError> {
        match self.c_lambda {
            Some(v) => Ok(v),
            None => c_lambda_from_c(to_f64(lambda), self.c),
        }
    }

    pub fn c_alpha(&self) -> Result<f64, BoundError> {
        match self.c_alpha {
            Some(v) => Ok(v),
            None => self.c_lambda_for(&Rational::one()),
        }
    }
}

/// Shorthand for the regular-graph bound family evaluated at one activity.
#[derive(Debug, Clone)]
pub struct BoundParams {
    pub n: usize,
    pub d: usize,
    pub alpha: usize,
    pub lambda: Rational,
    pub constants: Constants,
}

impl BoundParams {
    /// Every bound that applies to a `d`-regular graph with these
    /// parameters. Bounds whose preconditions fail are skipped.
    pub fn regular_reports(&self) -> Vec<BoundReport> {
        let BoundParams { n, d, alpha, ref lambda, constants } = *self;
        let mut out = Vec::new();
        let mut push = |r: Result<BoundReport, BoundError>| {
            if let Ok(r) = r {
                out.push(r);
            }
        };
        if lambda.is_one() {
            push(alekseev_bound(n, alpha));
            push(alon_bound(n, d, constants.big_c));
            push(sapozhenko_simple_bound(n, d, constants.big_c));
            push(kahn_bound(n, d));
            push(conjecture_bound(n, d));
            push(theorem2_bound(n, d, constants.big_c));
        }
        push(alekseev_weighted_bound(n, alpha, lambda));
        push(kdd_weighted_bound(n, d, lambda));
        push(weighted_kahn_bound(n, d, lambda));
        push(independent_first_bound(n, d, alpha, lambda));
        if let Ok(c_lambda) = constants.c_lambda_for(lambda) {
            push(theorem4_bound(n, d, lambda, c_lambda));
        }
        push(crate::cover::lemma3_bound(n, d, alpha, lambda, constants.c));
        out
    }
}

//! Run configuration shared by every subcommand.

use std::collections::BTreeSet;

use indpoly::bounds::Constants;
use indpoly::graph::MAX_VERTICES;
use indpoly::scalar::format_rational;
use indpoly::Rational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};

/// Largest graph the harness computes exact polynomials for by default.
pub const DEFAULT_CAP: usize = 28;
pub const DEFAULT_ORDERS: usize = 20;

/// How the cover threshold is chosen for each graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhiPolicy {
    /// `floor(sqrt(d log2 d))` clamped to `[1, d - 1]`.
    Default,
    Explicit(usize),
}

/// Named checks run by `verify`.
///
/// Must-hold checks are proved statements, so a failure is a bug. Report-only
/// checks are open conjectures; a failure there is a counterexample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    AlphaHalf,
    Lemma2,
    Lemma2Equality,
    Lemma1Natural,
    Lemma1IndependentFirst,
    Lemma1Random,
    IndependentFirst,
    WeightedKahn,
    Lemma3Cover,
    FixedSizeGeneral,
    Conjecture1,
    WeightedConjecture,
    Conjecture3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckClass {
    MustHold,
    ReportOnly,
}

impl CheckKind {
    pub const ALL: [CheckKind; 13] = [
        CheckKind::AlphaHalf,
        CheckKind::Lemma2,
        CheckKind::Lemma2Equality,
        CheckKind::Lemma1Natural,
        CheckKind::Lemma1IndependentFirst,
        CheckKind::Lemma1Random,
        CheckKind::IndependentFirst,
        CheckKind::WeightedKahn,
        CheckKind::Lemma3Cover,
        CheckKind::FixedSizeGeneral,
        CheckKind::Conjecture1,
        CheckKind::WeightedConjecture,
        CheckKind::Conjecture3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::AlphaHalf => "alpha_half",
            CheckKind::Lemma2 => "lemma2",
            CheckKind::Lemma2Equality => "lemma2_equality",
            CheckKind::Lemma1Natural => "lemma1_natural",
            CheckKind::Lemma1IndependentFirst => "lemma1_independent_first",
            CheckKind::Lemma1Random => "lemma1_random",
            CheckKind::IndependentFirst => "independent_first",
            CheckKind::WeightedKahn => "weighted_kahn",
            CheckKind::Lemma3Cover => "lemma3_cover",
            CheckKind::FixedSizeGeneral => "fixed_size_general",
            CheckKind::Conjecture1 => "conjecture1",
            CheckKind::WeightedConjecture => "weighted_conjecture",
            CheckKind::Conjecture3 => "conjecture3",
        }
    }

    pub fn from_name(name: &str) -> Option<CheckKind> {
        CheckKind::ALL.into_iter().find(|k| k.name() == name)
    }

    pub fn class(self) -> CheckClass {
        match self {
            CheckKind::Conjecture1 | CheckKind::WeightedConjecture | CheckKind::Conjecture3 => CheckClass::ReportOnly,
            _ => CheckClass::MustHold,
        }
    }

    /// Whether the check is repeated for every configured activity.
    pub fn per_lambda(self) -> bool {
        !matches!(
            self,
            CheckKind::AlphaHalf | CheckKind::FixedSizeGeneral | CheckKind::Conjecture1 | CheckKind::Conjecture3
        )
    }

    /// Column name for one instance of the check.
    pub fn column(self, lambda: Option<&Rational>) -> String {
        match lambda {
            Some(l) => format!("{}@{}", self.name(), format_rational(l)),
            None => self.name().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(with = "rational_strings")]
    pub lambdas: Vec<Rational>,
    pub phi: PhiPolicy,
    pub constants: Constants,
    pub seed: u64,
    /// Graphs above this many vertices are skipped by `verify` and rejected
    /// by the single-graph commands.
    pub cap: usize,
    /// Random vertex orders tried per graph.
    pub orders: usize,
    pub checks: BTreeSet<CheckKind>,
    /// Worker threads; `None` uses every core. Does not affect output.
    #[serde(skip)]
    pub jobs: Option<usize>,
    /// Record wall-clock time per graph. Makes output nondeterministic.
    #[serde(skip)]
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        let lambda = |p: i64, q: i64| Rational::new(p.into(), q.into());
        RunConfig {
            lambdas: vec![lambda(1, 2), lambda(1, 1), lambda(2, 1)],
            phi: PhiPolicy::Default,
            constants: Constants::default(),
            seed: 0,
            cap: DEFAULT_CAP,
            orders: DEFAULT_ORDERS,
            checks: CheckKind::ALL.into_iter().collect(),
            jobs: None,
            timings: false,
        }
    }
}

impl RunConfig {
    /// Rejects invalid settings and drops repeated activities.
    pub fn validate(mut self) -> Result<Self> {
        if self.lambdas.is_empty() {
            return Err(HarnessError::Config("at least one activity is required".into()));
        }
        if let Some(bad) = self.lambdas.iter().find(|l| !l.is_positive()) {
            return Err(HarnessError::Config(format!("activity {} is not positive", format_rational(bad))));
        }
        let mut seen = BTreeSet::new();
        self.lambdas.retain(|l| seen.insert(l.clone()));
        if self.cap > MAX_VERTICES {
            return Err(HarnessError::Config(format!("cap {} exceeds mask capacity {MAX_VERTICES}", self.cap)));
        }
        if self.phi == PhiPolicy::Explicit(0) {
            return Err(HarnessError::Config("phi must be positive".into()));
        }
        let c = &self.constants;
        let named = [("C", Some(c.big_c)), ("c", Some(c.c)), ("C_lambda", c.c_lambda), ("c_alpha", c.c_alpha)];
        for (name, value) in named {
            if let Some(v) = value.filter(|v| !(*v > 0.0 && v.is_finite())) {
                return Err(HarnessError::Config(format!("constant {name} = {v} must be positive")));
            }
        }
        if self.jobs == Some(0) {
            return Err(HarnessError::Config("jobs must be positive".into()));
        }
        Ok(self)
    }

    pub fn enabled(&self, kind: CheckKind) -> bool {
        self.checks.contains(&kind)
    }

    /// Every check column in report order.
    pub fn check_columns(&self) -> Vec<String> {
        let mut columns = Vec::new();
        for &kind in &self.checks {
            if kind.per_lambda() {
                columns.extend(self.lambdas.iter().map(|l| kind.column(Some(l))));
            } else {
                columns.push(kind.column(None));
            }
        }
        columns
    }
}

mod rational_strings {
    use indpoly::scalar::{format_rational, parse_rational};
    use indpoly::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(values.iter().map(format_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_columns_cover_every_check() {
        let cfg = RunConfig::default();
        let columns = cfg.check_columns();
        assert_eq!(columns.len(), 4 + 9 * 3);
        assert_eq!(columns[0], "alpha_half");
        assert_eq!(columns[1], "lemma2@1/2");
        assert!(columns.contains(&"conjecture3".to_string()));
    }

    #[test]
    fn validation() {
        let mut cfg = RunConfig::default();
        cfg.lambdas.push(Rational::from_integer(1.into()));
        assert_eq!(cfg.clone().validate().unwrap().lambdas.len(), 3);
        cfg.lambdas.push(Rational::from_integer(0.into()));
        assert!(cfg.validate().is_err());
        let big = RunConfig { cap: 1000, ..RunConfig::default() };
        assert!(big.validate().is_err());
    }

    #[test]
    fn names_round_trip() {
        for kind in CheckKind::ALL {
            assert_eq!(CheckKind::from_name(kind.name()), Some(kind));
        }
    }

    #[test]
    fn config_json_round_trip() {
        let cfg = RunConfig { phi: PhiPolicy::Explicit(2), ..RunConfig::default() };
        let text = serde_json::to_string(&cfg).unwrap();
        assert_eq!(serde_json::from_str::<RunConfig>(&text).unwrap(), cfg);
    }
}

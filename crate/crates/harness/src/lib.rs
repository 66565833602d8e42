//! Batch verification of independent-set bounds over graph corpora.
//!
//! The library half of the `indpoly` command: corpus parsing, the
//! verification pipeline, and report rendering.

pub mod commands;
pub mod config;
pub mod error;
pub mod input;
pub mod record;
pub mod report;
pub mod verify;

pub use commands::{cmd_bounds, cmd_cover, cmd_poly, cmd_report, cmd_verify, run_verify, CommandOutput, Format};
pub use config::{CheckClass, CheckKind, PhiPolicy, RunConfig};
pub use error::{HarnessError, Result};
pub use input::{load_inputs, GraphItem};
pub use record::{CheckRecord, Outcome, Status, Summary, VerificationRecord, VerifyOutput};

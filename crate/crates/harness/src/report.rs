//! CSV and JSON renderings of verification runs.

use std::cmp::Reverse;

use crate::error::Result;
use crate::record::{Outcome, Status, VerificationRecord, VerifyOutput};

const FIXED_COLUMNS: [&str; 8] = ["index", "graph_id", "n", "d", "alpha", "edge_count", "status", "graph6"];

fn status_name(status: Status) -> &'static str {
    match status {
        Status::Failure => "failure",
        Status::Counterexample => "counterexample",
        Status::Pass => "pass",
        Status::Skipped => "skipped",
    }
}

fn outcome_name(outcome: Outcome) -> &'static str {
    match outcome {
        Outcome::Pass => "pass",
        Outcome::Fail => "fail",
        Outcome::Skipped => "skipped",
    }
}

/// Failures and counterexamples first, then by `(n, d, input position)`.
pub fn report_order(records: &[VerificationRecord]) -> Vec<&VerificationRecord> {
    let mut sorted: Vec<&VerificationRecord> = records.iter().collect();
    sorted.sort_by_key(|r| {
        let flagged = matches!(r.status, Status::Failure | Status::Counterexample);
        (Reverse(flagged), r.status.min(Status::Pass), r.stats.n, r.stats.d, r.index)
    });
    sorted
}

fn opt(x: Option<usize>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// One row per graph, one column per configured check.
pub fn to_csv(output: &VerifyOutput, sorted: bool) -> Result<String> {
    let columns = output.config.check_columns();
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(FIXED_COLUMNS.iter().copied().chain(columns.iter().map(String::as_str)))?;
    let records: Vec<&VerificationRecord> =
        if sorted { report_order(&output.records) } else { output.records.iter().collect() };
    for r in records {
        let mut row = vec![
            r.index.to_string(),
            r.graph_id.clone(),
            r.stats.n.to_string(),
            opt(r.stats.d),
            opt(r.stats.alpha),
            r.stats.edge_count.to_string(),
            status_name(r.status).to_string(),
            r.graph6.clone(),
        ];
        row.extend(columns.iter().map(|c| r.check(c).map(|c| outcome_name(c.outcome)).unwrap_or_default().to_string()));
        writer.write_record(&row)?;
    }
    let bytes = writer.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn to_json(output: &VerifyOutput, sorted: bool) -> Result<String> {
    let mut text = if sorted {
        let view =
            VerifyOutput { records: report_order(&output.records).into_iter().cloned().collect(), ..output.clone() };
        serde_json::to_string_pretty(&view)?
    } else {
        serde_json::to_string_pretty(output)?
    };
    text.push('\n');
    Ok(text)
}

use std::fmt::Write as _;
use std::io::{self, Write};

use crate::config::{Format, SuiteConfig};
use crate::run::{CheckRecord, Status, SuiteResult};

pub fn jsonlines(result: &SuiteResult) -> String {
    let mut out = String::new();
    for r in &result.records {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}

fn cell(r: &CheckRecord) -> String {
    match (r.status, &r.failure_witness, &r.note) {
        (Status::Pass, ..) => "pass".into(),
        (Status::Skip, _, Some(n)) => format!("SKIP ({n})"),
        (Status::Skip, ..) => "SKIP".into(),
        (Status::Fail, Some(w), _) => {
            format!("FAIL at ({}, {}): {} vs {}", w.row, w.col, w.lhs, w.rhs)
        }
        (Status::Fail, None, Some(n)) => format!("FAIL: {n}"),
        (Status::Fail, None, None) => "FAIL".into(),
    }
}

/// Checks as rows, sample points as columns.
pub fn markdown(cfg: &SuiteConfig, result: &SuiteResult) -> String {
    let mut out = String::new();
    let descriptor = cfg.descriptor().unwrap_or_else(|| "-".into());
    let _ = writeln!(out, "# kzdyn report\n");
    let _ = writeln!(
        out,
        "type {} | module {} | seed {} | samples {}\n",
        cfg.type_name(),
        descriptor,
        cfg.seed,
        cfg.samples
    );
    let _ = writeln!(
        out,
        "{} pass, {} fail, {} skip\n",
        result.count(Status::Pass),
        result.count(Status::Fail),
        result.count(Status::Skip)
    );
    let cols = result
        .records
        .iter()
        .map(|r| r.sample)
        .max()
        .unwrap_or(0)
        .max(1);
    let _ = write!(out, "| suite | check |");
    for s in 1..=cols {
        let _ = write!(out, " sample {s} |");
    }
    out.push('\n');
    let _ = writeln!(out, "|---|---|{}", "---|".repeat(cols));
    let mut rows: Vec<(&str, &str, Vec<String>)> = Vec::new();
    for r in &result.records {
        let pos = rows
            .iter()
            .position(|(s, c, _)| *s == r.suite && *c == r.check_name);
        let idx = match pos {
            Some(i) => i,
            None => {
                rows.push((&r.suite, &r.check_name, vec![String::new(); cols]));
                rows.len() - 1
            }
        };
        rows[idx].2[r.sample.max(1) - 1] = cell(r);
    }
    for (suite, check, cells) in rows {
        let _ = writeln!(out, "| {suite} | {check} | {} |", cells.join(" | "));
    }
    out
}

pub fn render(cfg: &SuiteConfig, result: &SuiteResult) -> String {
    match cfg.format {
        Format::Jsonlines => jsonlines(result),
        Format::Markdown => markdown(cfg, result),
    }
}

/// Write the report to `cfg.out`, or to stdout.
pub fn emit_report(cfg: &SuiteConfig, result: &SuiteResult) -> io::Result<()> {
    let text = render(cfg, result);
    match &cfg.out {
        Some(path) => std::fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

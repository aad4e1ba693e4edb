//! Text renderings of a [`VerificationReport`].

use std::collections::BTreeSet;
use std::fmt::Write;
use std::str::FromStr;

use super::VerificationReport;
use crate::combinatorics::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Latex,
    Text,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "latex" => Ok(ReportFormat::Latex),
            "text" => Ok(ReportFormat::Text),
            other => Err(format!("unknown report format {other:?}")),
        }
    }
}

pub fn render_report(r: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Csv => csv_diffs(r),
        ReportFormat::Latex => latex(r),
        ReportFormat::Text => text(r),
    }
}

fn csv_diffs(r: &VerificationReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["lambda", "lhs", "rhs", "difference"]).expect("in-memory write");
    for d in &r.diffs {
        w.write_record([
            d.lambda.to_string(),
            d.lhs.to_string(),
            d.rhs.to_string(),
            d.difference.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn latex_poly(p: &str) -> String {
    let mut out = String::new();
    let mut chars = p.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '*' => {}
            '^' => {
                out.push_str("^{");
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    out.push(*d);
                    chars.next();
                }
                out.push('}');
            }
            _ => out.push(c),
        }
    }
    out
}

fn latex(r: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "% n = {}, verdict {}", r.n, r.verdict.as_str());
    s.push_str("\\begin{tabular}{lll}\n\\hline\n$\\lambda$ & module & right-hand side \\\\\n\\hline\n");
    let keys: BTreeSet<&Partition> = r.module.coeffs().keys().chain(r.rhs.coeffs().keys()).collect();
    for l in keys {
        let _ = writeln!(
            s,
            "$({l})$ & ${}$ & ${}$ \\\\",
            latex_poly(&r.module.coeff(l).to_string()),
            latex_poly(&r.rhs.coeff(l).to_string())
        );
    }
    s.push_str("\\hline\n\\end{tabular}\n");
    s
}

fn text(r: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n = {}", r.n);
    let _ = writeln!(s, "verdict: {}", r.verdict.as_str());
    let _ = writeln!(s, "engine: {}", r.engine_version);
    for reason in &r.reasons {
        let _ = writeln!(s, "reason: {reason}");
    }
    s.push_str("\nchecks:\n");
    for c in &r.checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "  [{mark}] {} {}", c.name, c.detail);
    }
    let sm = &r.summary;
    s.push_str("\nsummary:\n");
    let _ = writeln!(s, "  z=0, q=t=1 dimension: module {}, rhs {}", sm.module_z0_dimension, sm.rhs_z0_dimension);
    let _ = writeln!(s, "  q=t=z=1 dimension: module {}, rhs {}", sm.module_total_dimension, sm.rhs_total_dimension);
    let _ = writeln!(
        s,
        "  components: {} examined, {} nonzero",
        r.statistics.components_examined, r.statistics.nonzero_components
    );
    if let Some(t) = &r.timings {
        let _ = writeln!(s, "  time: rhs {:.3}s, module {:.3}s", t.rhs_seconds, t.module_seconds);
    }
    let _ = write!(s, "\nmodule side:\n{}", r.module);
    let _ = write!(s, "\nright-hand side:\n{}", r.rhs);
    s.push_str("\ndifferences:");
    if r.diffs.is_empty() {
        s.push_str(" none\n");
    } else {
        s.push('\n');
        for d in &r.diffs {
            let _ = writeln!(s, "  s({}): {}", d.lambda, d.difference);
        }
    }
    s
}

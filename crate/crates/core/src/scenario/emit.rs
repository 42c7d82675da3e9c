use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use super::run::{OracleStatus, ReportDocument};
use crate::algebra::rational::format_rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    /// The Hilbert table: `t,i1,i2,sum,intersection`.
    Csv,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            _ => Err(Error::Precondition(format!("unknown report format '{s}'"))),
        }
    }
}

pub fn render_report(doc: &ReportDocument, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => Ok(serde_json::to_string_pretty(doc)? + "\n"),
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &doc.hilbert_table {
                w.serialize(row)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        ReportFormat::Markdown => Ok(markdown(doc)),
    }
}

/// Writes the rendered report to `path`, or returns it when `path` is `None`.
pub fn emit_report(doc: &ReportDocument, format: ReportFormat, path: Option<&Path>) -> Result<String> {
    let text = render_report(doc, format)?;
    if let Some(p) = path {
        std::fs::write(p, &text)?;
    }
    Ok(text)
}

fn markdown(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let c = &doc.config;
    let sc = &doc.scenario;
    let _ = writeln!(out, "# Scenario {} (k = {}, d = {})\n", c.family, sc.k, sc.d);
    let _ = writeln!(out, "- engine: {} {}", doc.engine.name, doc.engine.version);
    let _ = writeln!(out, "- seed: {}, order: {:?}, oracle checks: {}", c.seed, c.order, c.oracle_checks);
    let _ = writeln!(out, "- f = `{}`", sc.f);
    let _ = writeln!(out, "- plane 1: {}", sc.plane1);
    let _ = writeln!(out, "- plane 2: {}", sc.plane2);
    let _ = writeln!(out, "- smooth over {} (pure powers {:?})", sc.smoothness.certified_over, sc.smoothness.pure_powers);
    for n in &sc.notes {
        let _ = writeln!(out, "- note: {n}");
    }
    for r in &doc.remarks {
        let _ = writeln!(out, "- remark: {r}");
    }
    let _ = writeln!(out, "- result: {}\n", if doc.passed { "PASS" } else { "FAIL" });

    let _ = writeln!(out, "## Ideals\n");
    let _ = writeln!(out, "| ideal | socle degree | socle | length | codim in degree d | J_d inside |");
    let _ = writeln!(out, "|---|---|---|---|---|---|");
    for i in &doc.ideals {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} |",
            i.name, i.socle_degree, i.socle_generator, i.length, i.tangent_codim.value, i.jacobian_in_degree_d
        );
    }

    let _ = writeln!(out, "\n## Hilbert functions\n");
    let _ = writeln!(out, "| t | S/I1 | S/I2 | S/(I1+I2) | S/(I1 ∩ I2) |");
    let _ = writeln!(out, "|---|---|---|---|---|");
    for r in &doc.hilbert_table {
        let _ = writeln!(out, "| {} | {} | {} | {} | {} |", r.t, r.i1, r.i2, r.sum, r.intersection);
    }
    let _ = writeln!(out, "\nJoint codimension in degree d: {}", doc.joint_codim);

    if let Some(g) = &doc.gram {
        let _ = writeln!(out, "\n## Gram matrix\n");
        let _ = writeln!(
            out,
            "Degrees {} x {}: {} x {} matrix, generic rank {}, {} zero rows, {} zero columns.\n",
            g.row_degree,
            g.col_degree,
            g.rows.len(),
            g.cols.len(),
            g.generic_rank,
            g.zero_rows,
            g.zero_cols
        );
        let _ = writeln!(out, "| block shape | count |");
        let _ = writeln!(out, "|---|---|");
        for (shape, count) in g.shape_census() {
            let _ = writeln!(out, "| {shape} | {count} |");
        }
        let crit: Vec<String> = g.critical.iter().map(|c| format!("{} (corank {})", c.nu, c.corank)).collect();
        let _ = writeln!(out, "\nCritical nu: {}", if crit.is_empty() { "none".into() } else { crit.join(", ") });
    }
    if let Some(x) = &doc.excess {
        let _ = writeln!(out, "\n## Excess\n");
        let _ = writeln!(out, "| nu | rank | left kernel | combined codim | verdict |");
        let _ = writeln!(out, "|---|---|---|---|---|");
        for s in &x.samples {
            let verdict = serde_json::to_value(s.verdict).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
            let _ = writeln!(out, "| {} | {} | {} | {} | {} |", format_rational(&s.nu), s.rank, s.excess, s.combined_codim, verdict);
        }
    }
    let t = &doc.tsp;
    let _ = writeln!(out, "\n## Sum criterion\n");
    if t.feasible {
        let _ = writeln!(
            out,
            "Pairing in degrees {} x {}: {} x {}, rank {}, zero left kernel: {}",
            t.d,
            t.col_degree,
            t.rows,
            t.cols,
            t.rank,
            t.holds()
        );
    } else {
        let _ = writeln!(out, "Not applicable: d = {} exceeds kd - 2k - 2 = {}", t.d, t.col_degree);
    }
    if !doc.oracle.is_empty() {
        let _ = writeln!(out, "\n## Oracle checks\n");
        for o in &doc.oracle {
            let status = match o.status {
                OracleStatus::Agree => "agree",
                OracleStatus::Disagree => "DISAGREE",
                OracleStatus::Skipped => "skipped",
            };
            let _ = writeln!(out, "- {}: {status} ({})", o.name, o.detail);
        }
    }
    let _ = writeln!(out, "\n## Checks\n");
    for c in &doc.checks {
        let _ = writeln!(out, "- [{}] {}: {}", if c.passed { "x" } else { " " }, c.name, c.detail);
    }
    out
}

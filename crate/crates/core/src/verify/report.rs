//! JSON and Markdown renderings of a verification run.

use std::io::{self, Write};

use serde::Serialize;

use super::VerificationResult;

/// Bumped whenever the JSON layout changes.
pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub digits: u32,
    /// Leave out `elapsed_ms` so reports are byte-identical across runs.
    pub timing: bool,
}

#[derive(Serialize)]
struct Report<'a> {
    version: u32,
    digits: u32,
    checks: Vec<Row<'a>>,
}

#[derive(Serialize)]
struct Row<'a> {
    id: &'a str,
    pass: bool,
    digits_agreed: i64,
    lhs: &'a str,
    rhs: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

pub fn emit_report(
    results: &[VerificationResult],
    format: ReportFormat,
    options: ReportOptions,
    out: &mut dyn Write,
) -> io::Result<()> {
    let rows: Vec<Row> = results
        .iter()
        .map(|r| Row {
            id: &r.check_id,
            pass: r.pass,
            digits_agreed: r.digits_agreed,
            lhs: &r.lhs,
            rhs: &r.rhs,
            elapsed_ms: options
                .timing
                .then(|| u64::try_from(r.elapsed.as_millis()).unwrap_or(u64::MAX)),
        })
        .collect();
    match format {
        ReportFormat::Json => {
            let report = Report {
                version: REPORT_VERSION,
                digits: options.digits,
                checks: rows,
            };
            serde_json::to_writer_pretty(&mut *out, &report)?;
            writeln!(out)
        }
        ReportFormat::Markdown => markdown(&rows, options, out),
    }
}

fn markdown(rows: &[Row], options: ReportOptions, out: &mut dyn Write) -> io::Result<()> {
    let passed = rows.iter().filter(|r| r.pass).count();
    writeln!(out, "# Verification report")?;
    writeln!(out)?;
    writeln!(out, "{passed}/{} checks pass at {} digits.", rows.len(), options.digits)?;
    writeln!(out)?;
    if options.timing {
        writeln!(out, "| id | pass | digits agreed | lhs | rhs | elapsed ms |")?;
        writeln!(out, "|---|---|---|---|---|---|")?;
    } else {
        writeln!(out, "| id | pass | digits agreed | lhs | rhs |")?;
        writeln!(out, "|---|---|---|---|---|")?;
    }
    for r in rows {
        write!(
            out,
            "| `{}` | {} | {} | `{}` | `{}` |",
            r.id,
            if r.pass { "yes" } else { "**no**" },
            r.digits_agreed,
            cell(r.lhs),
            cell(r.rhs)
        )?;
        if let Some(ms) = r.elapsed_ms {
            write!(out, " {ms} |")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::Duration;

    fn sample() -> VerificationResult {
        VerificationResult {
            check_id: "trig-41".into(),
            lhs: "41.000".into(),
            rhs: "41.000".into(),
            digits_agreed: 58,
            required_digits: 55,
            pass: true,
            elapsed: Duration::from_millis(7),
        }
    }

    fn render(results: &[VerificationResult], format: ReportFormat, timing: bool) -> String {
        let mut buf = Vec::new();
        emit_report(results, format, ReportOptions { digits: 60, timing }, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn empty_report_is_valid() {
        let json: serde_json::Value = serde_json::from_str(&render(&[], ReportFormat::Json, true)).unwrap();
        assert_eq!(json["version"], REPORT_VERSION);
        assert_eq!(json["checks"].as_array().unwrap().len(), 0);
        let md = render(&[], ReportFormat::Markdown, true);
        assert!(md.contains("0/0 checks"));
    }

    #[test]
    fn one_row() {
        let json: serde_json::Value = serde_json::from_str(&render(&[sample()], ReportFormat::Json, true)).unwrap();
        let row = &json["checks"][0];
        assert_eq!(row["id"], "trig-41");
        assert_eq!(row["elapsed_ms"], 7);
        assert_eq!(row["digits_agreed"], 58);
        let md = render(&[sample()], ReportFormat::Markdown, false);
        assert_eq!(md.lines().filter(|l| l.starts_with("| `")).count(), 1);
    }

    #[test]
    fn no_timing_drops_elapsed() {
        let text = render(&[sample()], ReportFormat::Json, false);
        assert!(!text.contains("elapsed_ms"));
    }
}

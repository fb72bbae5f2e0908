//! CSV and Markdown rendering of benchmark rows.

use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serializer};

use crate::bench::{BenchResult, PhaseTiming};

pub const CSV_HEADER: &str =
    "system,proof_gen_ms,proof_verify_ms,proof_size_bytes,mem_before_kb,mem_after_kb,trusted_setup,security";

/// Written in place of a memory reading the platform could not provide.
pub const UNAVAILABLE: &str = "unavailable";

/// One system's summary, in CSV column order.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ReportRow {
    pub system: String,
    pub proof_gen_ms: f64,
    pub proof_verify_ms: f64,
    pub proof_size_bytes: usize,
    #[serde(serialize_with = "ser_kb", deserialize_with = "de_kb")]
    pub mem_before_kb: Option<u64>,
    #[serde(serialize_with = "ser_kb", deserialize_with = "de_kb")]
    pub mem_after_kb: Option<u64>,
    #[serde(serialize_with = "ser_yes_no", deserialize_with = "de_yes_no")]
    pub trusted_setup: bool,
    pub security: String,
}

fn ser_kb<S: Serializer>(v: &Option<u64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(kb) => s.serialize_u64(*kb),
        None => s.serialize_str(UNAVAILABLE),
    }
}

fn de_kb<'de, D: Deserializer<'de>>(d: D) -> Result<Option<u64>, D::Error> {
    let s = String::deserialize(d)?;
    if s == UNAVAILABLE {
        return Ok(None);
    }
    s.parse().map(Some).map_err(serde::de::Error::custom)
}

fn ser_yes_no<S: Serializer>(v: &bool, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(if *v { "yes" } else { "no" })
}

fn de_yes_no<'de, D: Deserializer<'de>>(d: D) -> Result<bool, D::Error> {
    match String::deserialize(d)?.as_str() {
        "yes" => Ok(true),
        "no" => Ok(false),
        other => Err(serde::de::Error::custom(format!(
            "expected yes/no, found {other:?}"
        ))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Markdown,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("no rows to report")]
    Empty,
    #[error("refusing to report: {0} proofs did not all verify")]
    Unverified(String),
    #[error("CSV header mismatch: expected `{CSV_HEADER}`")]
    Header,
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Renders results, refusing if any run did not verify.
pub fn emit_report(results: &[&BenchResult], format: ReportFormat) -> Result<String, ReportError> {
    if results.is_empty() {
        return Err(ReportError::Empty);
    }
    if let Some(bad) = results.iter().find(|r| !r.verified) {
        return Err(ReportError::Unverified(bad.row.system.clone()));
    }
    let rows: Vec<ReportRow> = results.iter().map(|r| r.row.clone()).collect();
    match format {
        ReportFormat::Csv => render_csv(&rows),
        ReportFormat::Markdown => {
            let phases: Vec<(&str, &[PhaseTiming])> = results
                .iter()
                .map(|r| (r.row.system.as_str(), r.phases.as_slice()))
                .collect();
            render_markdown(&rows, &phases)
        }
    }
}

pub fn render_csv(rows: &[ReportRow]) -> Result<String, ReportError> {
    if rows.is_empty() {
        return Err(ReportError::Empty);
    }
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
}

pub fn parse_csv(text: &str) -> Result<Vec<ReportRow>, ReportError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    if r.headers()?.iter().collect::<Vec<_>>().join(",") != CSV_HEADER {
        return Err(ReportError::Header);
    }
    Ok(r.deserialize().collect::<Result<Vec<ReportRow>, _>>()?)
}

fn fmt_ms(v: f64) -> String {
    if v >= 1000.0 {
        format!("{:.3} s", v / 1000.0)
    } else {
        format!("{v:.2} ms")
    }
}

fn fmt_kb(v: Option<u64>) -> String {
    v.map_or_else(|| UNAVAILABLE.to_string(), |kb| format!("{kb} KB"))
}

fn table_row(out: &mut String, label: &str, cells: impl Iterator<Item = String>) {
    let _ = write!(out, "| {label} |");
    for c in cells {
        let _ = write!(out, " {c} |");
    }
    out.push('\n');
}

/// A metric-by-system table, followed by a per-phase breakdown for each
/// entry in `phases` and the proof size ratio when both systems are present.
pub fn render_markdown(
    rows: &[ReportRow],
    phases: &[(&str, &[PhaseTiming])],
) -> Result<String, ReportError> {
    if rows.is_empty() {
        return Err(ReportError::Empty);
    }
    let mut out = String::new();
    table_row(&mut out, "Metric", rows.iter().map(|r| r.system.clone()));
    table_row(&mut out, "---", rows.iter().map(|_| "---".to_string()));
    table_row(
        &mut out,
        "Proof Gen Time",
        rows.iter().map(|r| fmt_ms(r.proof_gen_ms)),
    );
    table_row(
        &mut out,
        "Proof Verif Time",
        rows.iter().map(|r| fmt_ms(r.proof_verify_ms)),
    );
    table_row(
        &mut out,
        "Proof Size",
        rows.iter().map(|r| format!("{} B", r.proof_size_bytes)),
    );
    table_row(
        &mut out,
        "Trusted Setup",
        rows.iter()
            .map(|r| (if r.trusted_setup { "Yes" } else { "No" }).into()),
    );
    table_row(
        &mut out,
        "Security Assump",
        rows.iter().map(|r| r.security.clone()),
    );
    table_row(
        &mut out,
        "Memory Usage Before",
        rows.iter().map(|r| fmt_kb(r.mem_before_kb)),
    );
    table_row(
        &mut out,
        "Memory Usage After",
        rows.iter().map(|r| fmt_kb(r.mem_after_kb)),
    );

    let snark = rows.iter().find(|r| r.system == "SNARK");
    let stark = rows.iter().find(|r| r.system == "STARK");
    if let (Some(a), Some(b)) = (snark, stark) {
        let ratio = b.proof_size_bytes as f64 / a.proof_size_bytes as f64;
        let _ = write!(out, "\nSTARK/SNARK proof size ratio: {ratio:.1}x\n");
    }

    for (system, timings) in phases {
        let _ = write!(out, "\n### {system} phases\n\n| Phase | Median | Max | Share |\n| --- | --- | --- | --- |\n");
        for t in timings.iter() {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {:.1}% |",
                t.label,
                fmt_ms(t.median.as_secs_f64() * 1e3),
                fmt_ms(t.max.as_secs_f64() * 1e3),
                t.percent
            );
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows() -> Vec<ReportRow> {
        vec![
            ReportRow {
                system: "SNARK".into(),
                proof_gen_ms: 12.345678901,
                proof_verify_ms: 2000.5,
                proof_size_bytes: 576,
                mem_before_kb: Some(3000),
                mem_after_kb: None,
                trusted_setup: true,
                security: "EC".into(),
            },
            ReportRow {
                system: "STARK".into(),
                proof_gen_ms: 250.0,
                proof_verify_ms: 0.1 + 0.2,
                proof_size_bytes: 69_120,
                mem_before_kb: Some(4000),
                mem_after_kb: Some(9000),
                trusted_setup: false,
                security: "Hash".into(),
            },
        ]
    }

    #[test]
    fn csv_shape_and_round_trip() {
        let text = render_csv(&rows()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], CSV_HEADER);
        assert!(lines[1].ends_with(",3000,unavailable,yes,EC"));
        assert_eq!(parse_csv(&text).unwrap(), rows());
    }

    #[test]
    fn csv_rejects_wrong_header() {
        assert!(matches!(parse_csv("a,b\n1,2\n"), Err(ReportError::Header)));
    }

    #[test]
    fn markdown_has_metric_labels() {
        let md = render_markdown(&rows(), &[]).unwrap();
        for label in [
            "Proof Gen Time",
            "Proof Verif Time",
            "Proof Size",
            "Trusted Setup",
            "Security Assump",
        ] {
            assert!(md.contains(label), "{label}");
        }
        assert!(md.contains("| Proof Size | 576 B | 69120 B |"));
        assert!(md.contains("120.0x"));
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(render_csv(&[]), Err(ReportError::Empty)));
        assert!(matches!(
            emit_report(&[], ReportFormat::Csv),
            Err(ReportError::Empty)
        ));
    }
}

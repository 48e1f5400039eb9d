//! JSON, CSV and text renderings of reports and evaluations.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::verify::{CValue, Diagnostics, IdentityCase, Param, VerificationReport};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

/// A single function value produced by `hl eval` or one row of `hl table`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub function: String,
    pub params: BTreeMap<String, Param>,
    pub value: CValue,
    pub diagnostics: Diagnostics,
}

fn params_inline(params: &BTreeMap<String, Param>) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn text_value(v: CValue) -> String {
    if v.im == 0.0 {
        format!("{}", v.re)
    } else if v.im < 0.0 {
        format!("{} - {}i", v.re, -v.im)
    } else {
        format!("{} + {}i", v.re, v.im)
    }
}

pub fn reports_json(reports: &[VerificationReport]) -> Result<String> {
    Ok(serde_json::to_string_pretty(reports)? + "\n")
}

pub fn reports_csv(reports: &[VerificationReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "identity_id",
        "params",
        "lhs_re",
        "lhs_im",
        "rhs_re",
        "rhs_im",
        "abs_err",
        "rel_err",
        "tol_abs",
        "tol_rel",
        "status",
        "terms_used",
        "nodes_used",
        "cancellation_digits",
        "tail_estimate",
        "wall_time_ms",
        "message",
    ])?;
    for r in reports {
        let d = &r.diagnostics;
        w.write_record([
            r.case.identity_id.as_str().to_string(),
            params_inline(&r.case.params),
            opt(r.lhs.map(|v| v.re)),
            opt(r.lhs.map(|v| v.im)),
            opt(r.rhs.map(|v| v.re)),
            opt(r.rhs.map(|v| v.im)),
            opt(r.abs_err),
            opt(r.rel_err),
            r.case.tol_abs.to_string(),
            r.case.tol_rel.to_string(),
            r.status.as_str().to_string(),
            opt(d.terms_used),
            opt(d.nodes_used),
            opt(d.cancellation_digits),
            opt(d.tail_estimate),
            opt(d.wall_time_ms),
            r.message.clone().unwrap_or_default(),
        ])?;
    }
    csv_string(w)
}

pub fn reports_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let mut line = format!("[{}] {}", r.status.as_str(), r.case.label());
        if let (Some(l), Some(rh), Some(rel)) = (r.lhs, r.rhs, r.rel_err) {
            let _ = write!(line, "\n    lhs = {}\n    rhs = {}\n    abs = {:e}  rel = {:e}", text_value(l), text_value(rh), r.abs_err.unwrap_or(0.0), rel);
        }
        if let Some(m) = &r.message {
            let _ = write!(line, "\n    {m}");
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

pub fn render_reports(reports: &[VerificationReport], format: Format) -> Result<String> {
    match format {
        Format::Json => reports_json(reports),
        Format::Csv => reports_csv(reports),
        Format::Text => Ok(reports_text(reports)),
    }
}

/// Reads cases from a JSON array of cases or of reports.
pub fn load_cases(json: &str) -> Result<Vec<IdentityCase>> {
    Ok(serde_json::from_str(json)?)
}

pub fn render_evaluations(rows: &[Evaluation], format: Format) -> Result<String> {
    match format {
        Format::Json => {
            if rows.len() == 1 {
                Ok(serde_json::to_string_pretty(&rows[0])? + "\n")
            } else {
                Ok(serde_json::to_string_pretty(rows)? + "\n")
            }
        }
        Format::Csv => {
            let mut names: Vec<&str> = Vec::new();
            for r in rows {
                for k in r.params.keys() {
                    if !names.contains(&k.as_str()) {
                        names.push(k);
                    }
                }
            }
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["function".to_string()];
            for n in &names {
                header.push(format!("{n}_re"));
                header.push(format!("{n}_im"));
            }
            header.extend(["value_re", "value_im", "terms_used", "nodes_used", "cancellation_digits"].map(String::from));
            w.write_record(&header)?;
            for r in rows {
                let mut rec = vec![r.function.clone()];
                for n in &names {
                    let p = r.params.get(*n).map(|p| p.complex());
                    rec.push(opt(p.map(|z| z.re)));
                    rec.push(opt(p.map(|z| z.im)));
                }
                rec.push(r.value.re.to_string());
                rec.push(r.value.im.to_string());
                rec.push(opt(r.diagnostics.terms_used));
                rec.push(opt(r.diagnostics.nodes_used));
                rec.push(opt(r.diagnostics.cancellation_digits));
                w.write_record(&rec)?;
            }
            csv_string(w)
        }
        Format::Text => {
            let mut out = String::new();
            for r in rows {
                let args = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", ");
                let _ = writeln!(out, "{}({}) = {}", r.function, args, text_value(r.value));
            }
            Ok(out)
        }
    }
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| crate::CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{IdentityId, RunOptions, Status};

    fn sample() -> Vec<VerificationReport> {
        let cases = [
            IdentityCase::new(IdentityId::FunctionalEquation).with("s", -2.5),
            IdentityCase::new(IdentityId::HurwitzFormula).with("s", 2.0).with("a", 0.5),
        ];
        cases.iter().map(|c| crate::verify::verify_case(c, &RunOptions::default())).collect()
    }

    #[test]
    fn json_round_trip_preserves_cases() {
        let reports = sample();
        let json = reports_json(&reports).unwrap();
        let back: Vec<VerificationReport> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, reports);
        let cases = load_cases(&json).unwrap();
        assert_eq!(cases, reports.iter().map(|r| r.case.clone()).collect::<Vec<_>>());
    }

    #[test]
    fn json_has_schema_fields() {
        let json = reports_json(&sample()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let first = &v[0];
        for key in ["identity_id", "params", "lhs", "rhs", "abs_err", "rel_err", "status", "diagnostics"] {
            assert!(first.get(key).is_some(), "missing {key}");
        }
        assert_eq!(first["status"], "passed");
        assert_eq!(v[1]["status"], "config_error");
        assert!(v[1]["lhs"].is_null());
    }

    #[test]
    fn csv_has_one_row_per_report() {
        let csv = reports_csv(&sample()).unwrap();
        let mut r = csv::Reader::from_reader(csv.as_bytes());
        let rows: Vec<_> = r.records().collect::<std::result::Result<_, _>>().unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(&rows[0][10], "passed");
        assert_eq!(&rows[1][0], "hurwitz_formula");
    }

    #[test]
    fn text_marks_status() {
        let t = reports_text(&sample());
        assert!(t.starts_with("[passed] functional_equation s=-2.5"));
        assert!(t.contains("[config_error]"));
        assert_eq!(sample()[1].status, Status::ConfigError);
    }

    #[test]
    fn cases_without_tolerances_get_defaults() {
        let cases = load_cases(r#"[{"identity_id":"exp_arctan_integral","params":{"s":{"re":2,"im":1},"a":1.5,"k":2}}]"#).unwrap();
        assert_eq!(cases[0].tol_rel, crate::verify::default_tolerances(IdentityId::ExpArctanIntegral, &cases[0].params).1);
        assert_eq!(cases[0].params["s"], Param::Complex { re: 2.0, im: 1.0 });
    }
}

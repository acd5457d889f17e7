//! CSV and JSON renderings. JSON integers are decimal strings so no reader
//! truncates them to 53 bits.

use std::collections::BTreeMap;

use eil_core::search::{InvariantRecord, ScatterTable, TheoremReport};
use eil_core::HilbertSeries;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// Output formats for record streams and reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

pub const RECORD_COLUMNS: [&str; 12] =
    ["graph6", "n", "m", "connected", "alpha", "beta", "v", "deg_h", "lead_coeff", "reg_q", "reg_f2", "error"];

pub fn hex_sha256(bytes: &[u8]) -> String {
    hex_digest(Sha256::digest(bytes).as_slice())
}

pub fn hex_digest(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn opt(x: Option<usize>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// CSV fields in [`RECORD_COLUMNS`] order; numeric fields are blank for
/// inputs that failed to parse.
pub fn record_fields(r: &InvariantRecord) -> Vec<String> {
    let error = r.error.clone().unwrap_or_default();
    if r.is_failed() {
        let mut row = vec![r.graph6.clone()];
        row.extend(std::iter::repeat_n(String::new(), 10));
        row.push(error);
        return row;
    }
    vec![
        r.graph6.clone(),
        r.n.to_string(),
        r.m.to_string(),
        r.connected.to_string(),
        r.alpha.to_string(),
        r.beta.to_string(),
        r.v.to_string(),
        r.deg_h.to_string(),
        r.lead_coeff.to_string(),
        opt(r.reg_q),
        opt(r.reg_f2),
        error,
    ]
}

/// RFC-4180 CSV bytes for `records`, with the header row when asked.
pub fn records_csv(records: &[InvariantRecord], header: bool) -> Vec<u8> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
    if header {
        w.write_record(RECORD_COLUMNS).expect("in-memory write");
    }
    for r in records {
        w.write_record(record_fields(r)).expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

fn num_or_null(x: Option<usize>) -> Value {
    x.map_or(Value::Null, |v| Value::String(v.to_string()))
}

pub fn record_json(r: &InvariantRecord) -> Value {
    let mut m = serde_json::Map::new();
    m.insert("graph6".into(), json!(r.graph6));
    if !r.is_failed() {
        m.insert("n".into(), json!(r.n.to_string()));
        m.insert("m".into(), json!(r.m.to_string()));
        m.insert("connected".into(), json!(r.connected));
        m.insert("alpha".into(), json!(r.alpha.to_string()));
        m.insert("beta".into(), json!(r.beta.to_string()));
        m.insert("v".into(), json!(r.v.to_string()));
        m.insert("deg_h".into(), json!(r.deg_h.to_string()));
        m.insert("lead_coeff".into(), json!(r.lead_coeff.to_string()));
        m.insert("reg_q".into(), num_or_null(r.reg_q));
        m.insert("reg_f2".into(), num_or_null(r.reg_f2));
    }
    m.insert("error".into(), r.error.as_ref().map_or(Value::Null, |e| json!(e)));
    Value::Object(m)
}

/// JSON-lines bytes for `records`.
pub fn records_jsonl(records: &[InvariantRecord]) -> Vec<u8> {
    let mut out = Vec::new();
    for r in records {
        out.extend(record_json(r).to_string().into_bytes());
        out.push(b'\n');
    }
    out
}

pub fn series_json(s: &HilbertSeries) -> Value {
    let coeffs: Vec<String> = s.numerator().coeffs().iter().map(|c| c.to_string()).collect();
    json!({ "numerator": coeffs, "pole_order": s.pole_order().to_string() })
}

/// CSV with columns `n,v,deg_h,count`.
pub fn scatter_csv(tables: &[ScatterTable]) -> Vec<u8> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
    w.write_record(["n", "v", "deg_h", "count"]).expect("in-memory write");
    for t in tables {
        for (&(v, d), &c) in &t.counts {
            w.write_record([t.n.to_string(), v.to_string(), d.to_string(), c.to_string()]).expect("in-memory write");
        }
    }
    w.into_inner().expect("in-memory flush")
}

pub fn theorem_report_json(report: &TheoremReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "status": format!("{:?}", c.status).to_lowercase(),
                "checked": c.checked.to_string(),
                "violations": c.violations,
            })
        })
        .collect();
    json!({
        "checks": checks,
        "skipped_edgeless": report.skipped.to_string(),
        "equality_cases": report.equality_cases.len().to_string(),
    })
}

/// Wraps a payload with the tool version and input digest.
pub fn envelope(command: &str, input_digest: &str, payload: Value) -> Value {
    let mut m = BTreeMap::new();
    m.insert("tool", json!("eil"));
    m.insert("version", json!(crate::VERSION));
    m.insert("command", json!(command));
    m.insert("input_sha256", json!(input_digest));
    m.insert("result", payload);
    json!(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use eil_core::search::{compute_record, RecordOptions};
    use eil_core::Graph;

    #[test]
    fn csv_layout() {
        let rec =
            compute_record(&Graph::complete(2).unwrap(), &RecordOptions { regularity: true, ..Default::default() });
        let text = String::from_utf8(records_csv(&[rec], true)).unwrap();
        assert_eq!(
            text,
            "graph6,n,m,connected,alpha,beta,v,deg_h,lead_coeff,reg_q,reg_f2,error\r\nA_,2,1,true,1,1,1,1,1,1,1,\r\n"
        );
        let bad = InvariantRecord::failed("A,b".into(), "bad \"byte\"".into());
        let text = String::from_utf8(records_csv(&[bad], false)).unwrap();
        assert_eq!(text, "\"A,b\",,,,,,,,,,,\"bad \"\"byte\"\"\"\r\n");
    }

    #[test]
    fn json_uses_strings() {
        let rec = compute_record(&Graph::star(3).unwrap(), &RecordOptions::default());
        let v = record_json(&rec);
        assert_eq!(v["deg_h"], json!("3"));
        assert_eq!(v["reg_q"], Value::Null);
        let s = eil_core::invariants::hilbert_series(&Graph::star(3).unwrap()).unwrap();
        assert_eq!(series_json(&s), json!({"numerator": ["1", "1", "-2", "1"], "pole_order": "3"}));
    }
}

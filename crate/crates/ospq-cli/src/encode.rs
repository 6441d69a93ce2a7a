//! Canonical JSON and CSV encodings of kernel objects.

use num_traits::ToPrimitive;
use ospq::aalg::{AElement, AMono};
use ospq::matrix::Mat;
use ospq::report::{Report, Status};
use ospq::scalar::Poly;
use ospq::Scalar;
use serde_json::{json, Value};

fn big(c: &num_bigint::BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

fn poly(p: &Poly) -> Value {
    Value::Array(p.terms().map(|(c, e)| json!([big(c), e])).collect())
}

/// A scalar as its list of `Λ^l √… · num/den` terms.
pub fn scalar(s: &Scalar) -> Value {
    Value::Array(
        s.terms()
            .map(|(k, r)| {
                json!({
                    "num": poly(r.numer()),
                    "den": poly(&r.denom_poly()),
                    "l": k.l,
                    "rad": k.radicals(),
                })
            })
            .collect(),
    )
}

pub fn a_mono(m: &AMono) -> Value {
    json!({ "x": m.a, "z": m.b, "k": m.m, "y": m.c })
}

pub fn a_element(el: &AElement) -> Value {
    Value::Array(el.terms().map(|(m, c)| json!({ "mono": a_mono(m), "coeff": scalar(c) })).collect())
}

/// Dense scalar matrix as rows of encoded entries.
pub fn scalar_rows(m: &Mat<Scalar>) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array((0..m.cols()).map(|j| scalar(&m.get(i, j))).collect())).collect())
}

pub fn status(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
    }
}

/// One `{suite, case-id, status, details}` object per case, in report order.
pub fn report_json(reports: &[Report]) -> Value {
    let rows = reports
        .iter()
        .flat_map(|r| {
            r.cases.iter().map(move |c| {
                json!({ "suite": r.suite, "case-id": c.id, "status": status(c.status), "details": c.details })
            })
        })
        .collect();
    Value::Array(rows)
}

pub fn report_csv(reports: &[Report]) -> anyhow::Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["suite", "case-id", "status", "details"])?;
    for r in reports {
        for c in &r.cases {
            w.write_record([r.suite.as_str(), c.id.as_str(), status(c.status), c.details.as_str()])?;
        }
    }
    Ok(w.into_inner()?)
}

/// CSV with a header row; every cell already rendered.
pub fn table_csv(header: &[&str], rows: &[Vec<String>]) -> anyhow::Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(w.into_inner()?)
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_bytes(v: &Value) -> anyhow::Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(v)?;
    out.push(b'\n');
    Ok(out)
}

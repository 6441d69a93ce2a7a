//! Kernel objects as labelled JSON values and CSV tables.

use ospq::qjacobi::{self, QPolynomial, QPow};
use ospq::report::{Checkable, Report};
use ospq::repth::{self, Irrep};
use ospq::{tmat, Scalar};
use serde_json::{json, Value};

use crate::encode;

/// One emitted object; `verdict` is set for objects that carry a check.
pub struct Emitted {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub verdict: Option<bool>,
}

fn weights(r: &Irrep) -> Vec<i64> {
    (0..r.dim()).map(|i| r.m_of(i)).collect()
}

/// `T^ℓ` as `(m', m)`-labelled A-elements.
pub fn tmat(ell: i64, lambda: u32) -> ospq::Result<Emitted> {
    let t = tmat::t_matrix(ell, lambda)?;
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    for mp in t.ms() {
        for m in t.ms() {
            let el = t.get(mp, m);
            entries.push(json!({ "mp": mp, "m": m, "value": encode::a_element(&el) }));
            for (mono, c) in el.terms() {
                rows.push(vec![mp, m, mono.a as i64, mono.b as i64, mono.m as i64, mono.c as i64].into_iter().map(|v| v.to_string()).chain([c.to_string()]).collect());
            }
        }
    }
    Ok(Emitted {
        json: json!({ "ell": ell, "lambda": lambda, "entries": entries }),
        header: vec!["mp", "m", "x", "z", "k", "y", "coeff"],
        rows,
        verdict: None,
    })
}

/// `H`, `V₊`, `V₋` in the irrep, rows and columns labelled by weight.
pub fn rep(ell: i64, lambda: u32) -> ospq::Result<Emitted> {
    let r = repth::irrep(ell, lambda)?;
    let ms = weights(&r);
    let mut rows = Vec::new();
    for (name, mat) in [("H", &r.h), ("V+", &r.vp), ("V-", &r.vm)] {
        for i in 0..r.dim() {
            for j in 0..r.dim() {
                rows.push(vec![name.to_string(), ms[i].to_string(), ms[j].to_string(), mat.get(i, j).to_string()]);
            }
        }
    }
    Ok(Emitted {
        json: json!({
            "ell": ell,
            "lambda": lambda,
            "m": ms,
            "parity": r.parities(),
            "H": encode::scalar_rows(&r.h),
            "Vplus": encode::scalar_rows(&r.vp),
            "Vminus": encode::scalar_rows(&r.vm),
        }),
        header: vec!["op", "row_m", "col_m", "value"],
        rows,
        verdict: None,
    })
}

/// Every non-zero CGC of `V^{(ℓ₁)} ⊗ V^{(ℓ₂)}`.
pub fn cgc(l1: i64, l2: i64, lambda: u32) -> ospq::Result<Emitted> {
    let table = repth::cgc(l1, l2, lambda)?;
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    for (&(l, m1, m2), c) in &table.coeffs {
        if c.is_zero() {
            continue;
        }
        let m = m1 + m2;
        entries.push(json!({ "l": l, "m1": m1, "m2": m2, "m": m, "value": encode::scalar(c) }));
        rows.push(vec![l.to_string(), m1.to_string(), m2.to_string(), m.to_string(), c.to_string()]);
    }
    let norms: Vec<Value> = table.norms.iter().map(|(l, n)| json!({ "l": l, "norm": encode::scalar(n) })).collect();
    Ok(Emitted {
        json: json!({ "l1": l1, "l2": l2, "lambda": lambda, "entries": entries, "norms": norms }),
        header: vec!["l", "m1", "m2", "m", "value"],
        rows,
        verdict: None,
    })
}

/// `R` on `V^{(ℓ₁)} ⊗ V^{(ℓ₂)}`, dense, rows and columns labelled `(m₁, m₂)`.
pub fn rmatrix(l1: i64, l2: i64, lambda1: u32, lambda2: u32) -> ospq::Result<Emitted> {
    let r1 = repth::irrep(l1, lambda1)?;
    let r2 = repth::irrep(l2, lambda2)?;
    let r = repth::r_matrix(&r1, &r2);
    let labels: Vec<(i64, i64)> = weights(&r1).into_iter().flat_map(|a| weights(&r2).into_iter().map(move |b| (a, b))).collect();
    let mut rows = Vec::new();
    for (i, li) in labels.iter().enumerate() {
        for (j, lj) in labels.iter().enumerate() {
            let v = r.get(i, j);
            if !v.is_zero() {
                rows.push(vec![li.0.to_string(), li.1.to_string(), lj.0.to_string(), lj.1.to_string(), v.to_string()]);
            }
        }
    }
    Ok(Emitted {
        json: json!({
            "l1": l1,
            "l2": l2,
            "lambda1": lambda1,
            "lambda2": lambda2,
            "labels": labels.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "rows": encode::scalar_rows(&r),
        }),
        header: vec!["row_m1", "row_m2", "col_m1", "col_m2", "value"],
        rows,
        verdict: None,
    })
}

fn coeffs(p: &QPolynomial) -> Value {
    Value::Array(p.coeffs.iter().map(encode::scalar).collect())
}

/// `P^ℓ_{m'm}`, the little Q-Jacobi polynomial at `Q = -q` it is
/// identified with, and the verdict of that identification.
pub fn jacobi(ell: i64, mp: i64, m: i64) -> ospq::Result<Emitted> {
    let p = QPolynomial::new(tmat::p_polynomial(ell, mp, m)?);
    let (deg, alpha, beta) = qjacobi::jacobi_labels(ell, mp, m);
    let base = QPow::minus_q();
    let j = qjacobi::little_q_jacobi(deg, alpha, beta, base)?;
    let report: Report = qjacobi::identification_check(ell, mp, m, &ospq::report::DEFAULT_SAMPLES)?;
    let ok = report.passed() && p.exact_eq(&j);
    let n = p.coeffs.len().max(j.coeffs.len());
    let rows = (0..n)
        .map(|i| {
            let cell = |c: Scalar| c.to_string();
            vec![i.to_string(), cell(p.coeff(i)), cell(j.coeff(i))]
        })
        .collect();
    Ok(Emitted {
        json: json!({
            "ell": ell,
            "mp": mp,
            "m": m,
            "base": base.to_string(),
            "degree": deg,
            "alpha": alpha,
            "beta": beta,
            "p": coeffs(&p),
            "jacobi": coeffs(&j),
            "verdict": if ok { "PASS" } else { "FAIL" },
        }),
        header: vec!["power", "p", "jacobi"],
        rows,
        verdict: Some(ok),
    })
}

//! Verification reports: exact comparison plus numeric re-evaluation.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{Elem, Monomial};
use crate::scalar::Scalar;

/// Default numeric samples of `q`.
pub const DEFAULT_SAMPLES: [f64; 3] = [0.5, 2.0 / 3.0, 0.8];

/// Relative tolerance of the numeric re-check.
pub const NUMERIC_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Case {
    pub id: String,
    pub status: Status,
    /// Exact verdict, independent of the numeric layer.
    pub exact: bool,
    /// Numeric verdict at every sample (`true` when not applicable).
    pub numeric: bool,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
}

/// Something that can be compared exactly and evaluated numerically.
pub trait Checkable {
    fn exact_eq(&self, other: &Self) -> bool;
    /// Largest coefficientwise deviation relative to `max(1, |value|)`.
    fn numeric_dev(&self, other: &Self, q: f64) -> Option<f64>;
    fn render(&self) -> String;
}

fn rel(a: f64, b: f64) -> f64 {
    libm::fabs(a - b) / libm::fmax(1.0, libm::fmax(libm::fabs(a), libm::fabs(b)))
}

impl Checkable for Scalar {
    fn exact_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn numeric_dev(&self, other: &Self, q: f64) -> Option<f64> {
        Some(rel(self.eval(q).ok()?, other.eval(q).ok()?))
    }

    fn render(&self) -> String {
        format!("{self}")
    }
}

impl<M: Monomial> Checkable for Elem<M> {
    fn exact_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn numeric_dev(&self, other: &Self, q: f64) -> Option<f64> {
        let mut worst = 0.0f64;
        for (m, c) in self.terms() {
            worst = worst.max(rel(c.eval(q).ok()?, other.coeff(m).eval(q).ok()?));
        }
        for (m, c) in other.terms() {
            worst = worst.max(rel(self.coeff(m).eval(q).ok()?, c.eval(q).ok()?));
        }
        Some(worst)
    }

    fn render(&self) -> String {
        format!("{self:?}")
    }
}

impl<T: Checkable> Checkable for Vec<T> {
    fn exact_eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.iter().zip(other).all(|(a, b)| a.exact_eq(b))
    }

    fn numeric_dev(&self, other: &Self, q: f64) -> Option<f64> {
        if self.len() != other.len() {
            return None;
        }
        let mut worst = 0.0f64;
        for (a, b) in self.iter().zip(other) {
            worst = worst.max(a.numeric_dev(b, q)?);
        }
        Some(worst)
    }

    fn render(&self) -> String {
        let parts: Vec<String> = self.iter().map(|t| t.render()).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report { suite: suite.into(), cases: Vec::new() }
    }

    /// Compare `lhs` and `rhs` exactly and at every numeric sample.
    pub fn check<T: Checkable>(&mut self, id: String, lhs: &T, rhs: &T, samples: &[f64]) -> bool {
        let exact = lhs.exact_eq(rhs);
        let mut numeric = true;
        let mut worst = 0.0f64;
        for &q in samples {
            match lhs.numeric_dev(rhs, q) {
                Some(d) => {
                    worst = worst.max(d);
                    if d.is_nan() || d > NUMERIC_TOL {
                        numeric = false;
                    }
                }
                None => numeric = false,
            }
        }
        let ok = exact && numeric;
        let details = if ok {
            String::new()
        } else if exact {
            format!("numeric deviation {worst:e} with exact agreement")
        } else {
            format!("lhs = {}; rhs = {}", lhs.render(), rhs.render())
        };
        self.cases.push(Case { id, status: if ok { Status::Pass } else { Status::Fail }, exact, numeric, details });
        ok
    }

    /// Record a boolean outcome with no numeric component.
    pub fn assert(&mut self, id: String, ok: bool, details: String) -> bool {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.cases.push(Case { id, status, exact: ok, numeric: true, details });
        ok
    }

    pub fn push(&mut self, case: Case) {
        self.cases.push(case);
    }

    pub fn extend(&mut self, other: Report) {
        self.cases.extend(other.cases);
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.status == Status::Pass)
    }

    pub fn num_passed(&self) -> usize {
        self.cases.iter().filter(|c| c.status == Status::Pass).count()
    }

    pub fn num_failed(&self) -> usize {
        self.cases.len() - self.num_passed()
    }

    /// Cases whose exact verdict passed but numeric one did not.
    pub fn numeric_only_failures(&self) -> usize {
        self.cases.iter().filter(|c| c.exact && !c.numeric).count()
    }

    /// Keep only cases whose id starts with `prefix`.
    pub fn subset(&self, prefix: &str) -> Report {
        Report { suite: self.suite.clone(), cases: self.cases.iter().filter(|c| c.id.starts_with(prefix)).cloned().collect() }
    }
}

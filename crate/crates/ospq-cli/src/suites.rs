//! Named verification suites and their configuration.

use std::fmt;

use ospq::duality::{self, Pairing};
use ospq::report::Report;
use ospq::tmat::{self, Reading};
use ospq::{qjacobi, repth, rmaps};
use rayon::prelude::*;

use crate::UsageError;

/// Every suite reachable from `verify --suite`, in report order.
pub const SUITES: &[&str] = &[
    "relations",
    "cgc",
    "r_matrix",
    "ybe",
    "pairing_delta",
    "gconst",
    "fconst",
    "hopf_pairing",
    "printed_series",
    "hopf_a",
    "universal_t",
    "classical_limit",
    "fundamental",
    "construction",
    "comodule",
    "comodule_unsigned",
    "product_law",
    "ortho",
    "recurrence",
    "qjacobi",
    "rmap_hom",
    "rmap_collapse",
    "rtt",
    "yb_forms",
];

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    /// A name from [`SUITES`] or `all`.
    pub suite: String,
    /// Overrides each suite's own default label bound.
    pub max_l: Option<i64>,
    pub trunc: u32,
    pub samples: Vec<f64>,
    /// `(n, r, s)` bound for `pairing_delta`, `fconst`.
    pub bounds: Option<(u32, u32, u32)>,
    pub reading: Reading,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: "all".into(),
            max_l: None,
            trunc: 6,
            samples: ospq::report::DEFAULT_SAMPLES.to_vec(),
            bounds: None,
            reading: Reading::Printed,
        }
    }
}

impl fmt::Display for SuiteConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "suite={} max_l={:?} trunc={} samples={:?}", self.suite, self.max_l, self.trunc, self.samples)
    }
}

fn default_max_l(name: &str) -> i64 {
    match name {
        "relations" => 6,
        "construction" | "qjacobi" => 4,
        "cgc" | "ortho" | "recurrence" => 3,
        "rtt" | "yb_forms" => 1,
        _ => 2,
    }
}

impl SuiteConfig {
    pub fn names(&self) -> Vec<&'static str> {
        if self.suite == "all" {
            SUITES.to_vec()
        } else {
            SUITES.iter().copied().filter(|s| *s == self.suite).collect()
        }
    }

    pub fn max_l_for(&self, name: &str) -> i64 {
        self.max_l.unwrap_or_else(|| default_max_l(name))
    }

    pub fn validate(&self) -> Result<(), UsageError> {
        if self.names().is_empty() {
            return Err(UsageError::UnknownSuite(self.suite.clone()));
        }
        if self.samples.is_empty() {
            return Err(UsageError::NoSamples);
        }
        if let Some(q) = self.samples.iter().find(|q| !(**q > 0.0 && **q < 1.0)) {
            return Err(UsageError::SampleOutOfRange(*q));
        }
        if let Some(l) = self.max_l.filter(|l| *l < 0) {
            return Err(UsageError::InvalidBounds(format!("max-l {l} is negative")));
        }
        for name in self.names() {
            let l = self.max_l_for(name);
            if name.starts_with("comodule") && (self.trunc as i64) < 2 * l {
                return Err(UsageError::InvalidBounds(format!("{name} needs trunc >= 2 max-l, got {} < {}", self.trunc, 2 * l)));
            }
        }
        Ok(())
    }
}

/// Run one named suite.
pub fn run_one(name: &str, cfg: &SuiteConfig) -> anyhow::Result<Report> {
    let s = &cfg.samples[..];
    let l = cfg.max_l_for(name);
    let n = cfg.trunc;
    let mut rep = match name {
        "relations" => repth::suite_relations(l, s)?,
        "cgc" => repth::suite_cgc(l, s)?,
        "r_matrix" => repth::suite_r_properties(l, s)?,
        "ybe" => repth::suite_ybe(l, &[0, 1], s)?,
        "pairing_delta" => duality::suite_pairing_delta(&mut Pairing::default(), cfg.bounds.unwrap_or((3, 2, 3)), s),
        "gconst" => duality::suite_gconst(4, s),
        "fconst" => duality::suite_fconst(&mut Pairing::default(), cfg.bounds.unwrap_or((2, 1, 2)), s),
        "hopf_pairing" => duality::suite_hopf_pairing_axioms(&mut Pairing::default(), s),
        "printed_series" => duality::suite_printed_series(n, s),
        "hopf_a" => duality::suite_hopf_a(n, s),
        "universal_t" => duality::suite_universal_t(n.min(4), 3, s),
        "classical_limit" => duality::suite_classical_limit(5),
        "fundamental" => tmat::suite_fundamental(s)?,
        "construction" => tmat::suite_construction(l, s)?,
        "comodule" => tmat::suite_comodule(l, n, s)?,
        "comodule_unsigned" => tmat::suite_comodule_unsigned(l, n, s)?,
        "product_law" => tmat::suite_product_law(l, s)?,
        "ortho" => tmat::suite_ortho(l, s)?,
        "recurrence" => tmat::suite_recurrence(l, cfg.reading, s)?,
        "qjacobi" => qjacobi::suite_identification(l, s)?,
        "rmap_hom" => rmaps::suite_hom(s)?,
        "rmap_collapse" => rmaps::suite_collapse(l, s)?,
        "rtt" => rmaps::suite_rtt(l, s)?,
        "yb_forms" => rmaps::suite_yb_forms(l, s)?,
        other => return Err(UsageError::UnknownSuite(other.into()).into()),
    };
    rep.suite = name.into();
    Ok(rep)
}

/// Run every selected suite on the worker pool; reports come back in
/// [`SUITES`] order.
pub fn run(cfg: &SuiteConfig) -> anyhow::Result<Vec<Report>> {
    cfg.validate()?;
    cfg.names().par_iter().map(|name| run_one(name, cfg)).collect()
}

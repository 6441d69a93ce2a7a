//! Command-line plumbing for the `ospq` kernel: suite selection, report
//! encoding and object emission.

pub mod criteria;
pub mod emit;
pub mod encode;
pub mod suites;

pub use suites::{run, SuiteConfig, SUITES};

/// Default truncation order when neither `--trunc` nor the environment sets one.
pub const DEFAULT_TRUNC: u32 = 6;

/// Environment variable read for the default truncation order.
pub const TRUNC_ENV: &str = "OSPQ_TRUNC";

/// Errors that map to the usage exit code.
#[derive(Debug, thiserror::Error, PartialEq)]
pub enum UsageError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("q sample {0} is not inside (0, 1)")]
    SampleOutOfRange(f64),
    #[error("no q samples given")]
    NoSamples,
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
}

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Exit code for an error escaping a command: bad parameters are usage
/// errors, anything else is a failed run.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<UsageError>().is_some() {
        return EXIT_USAGE;
    }
    match err.downcast_ref::<ospq::Error>() {
        Some(
            ospq::Error::IndexOutOfRange(_)
            | ospq::Error::NegativeArgument(_)
            | ospq::Error::SampleOutOfRange(_)
            | ospq::Error::InvalidIndex(_)
            | ospq::Error::Triangle(..),
        ) => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

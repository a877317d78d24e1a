//! Crate-wide error type.
//!
//! Every fallible operation returns [`Error`]; the variants are grouped by
//! the subsystem that raises them.  Certification routines never guess: when
//! a sign or bound cannot be decided from the computed enclosures they fail
//! with an explicit variant instead of returning an optimistic answer.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    // -- ball arithmetic ----------------------------------------------------
    #[error("domain error: {0}")]
    Domain(String),
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("requested accuracy unreachable at {bits} bits: {what}")]
    Precision { bits: u32, what: String },

    // -- special functions --------------------------------------------------
    #[error("pole of the function inside the argument enclosure: {0}")]
    Pole(String),

    // -- zero table ---------------------------------------------------------
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("ordinates out of order at line {line}")]
    Order { line: usize },
    #[error("interval Newton iteration failed to contract: {0}")]
    NoContraction(String),
    #[error("derivative enclosure at a zero contains 0 (simplicity unverified): {0}")]
    Simplicity(String),
    #[error("sign of the rotated zeta function undecided near t = {t}")]
    UndecidedSign { t: f64 },

    // -- evaluators ---------------------------------------------------------
    #[error("argument outside the valid range: {0}")]
    Range(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("quadrature failed to converge: {0}")]
    Convergence(String),
    #[error("zero table required but not provided")]
    MissingTable,
    #[error("enclosure straddles zero where a sign is needed: {0}")]
    Undecided(String),

    // -- certificates -------------------------------------------------------
    #[error("certification failed: {0}")]
    Failed(String),
    #[error("step size underflow at x = {x}")]
    Stall { x: f64 },
    #[error("certified regimes leave a gap: {0}")]
    Gap(String),
    #[error("lower bound touches zero, cannot divide: {0}")]
    Sign(String),

    // -- optimizer ----------------------------------------------------------
    #[error("no positive local maximum located in the search range")]
    NoMaximum,
    #[error("error budget too large to certify the maximum: {0}")]
    Budget(String),

    // -- plumbing -----------------------------------------------------------
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Exact-arithmetic canonical heights and preperiodic-point search for cubic
//! polynomials over the rationals.
//!
//! The library computes certified estimates of the canonical height
//! `hhat_phi(x)` attached to a polynomial map, localizes the filled Julia set
//! of a cubic in normal form `a z^3 + b z + c` (`c` either 0 or 1) at every
//! place of **Q**, and runs a residue-sieved search for rational preperiodic
//! points and points of small scaled height. All classification decisions are
//! made in exact rational arithmetic; floating point appears only in final
//! height values, padded conservatively where a bound must be trusted.
//!
//! Entry points:
//! * [`cubic::NormalCubic`] / [`cubic::normalize`] — normal forms of cubics.
//! * [`heights::HeightContext`] — per-map certified height estimator.
//! * [`search::search_map`] — the full per-map search pipeline.
//! * [`sweep::run_sweep`] — sharded, checkpointed family sweeps.

pub mod arith;
pub mod cubic;
pub mod family;
pub mod heights;
pub mod julia;
pub mod poly;
pub mod primes;
pub mod roots;
pub mod search;
pub mod summary;
pub mod sweep;
pub mod verify;

pub use arith::{naive_height, padic_valuation, parse_rational, Place, Rational};
// re-exports added as modules land



use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    /// Orbit iteration exceeded the configured bit bound; signals misuse
    /// outside the gated estimator path.
    #[error("size guard tripped: intermediate value needs {bits} bits (bound {bound})")]
    SizeGuard { bits: u64, bound: u64 },
    /// Candidate enumeration exceeded its guard; the map is flagged, never
    /// silently truncated.
    #[error("candidate guard tripped: more than {bound} candidates")]
    CandidateGuard { bound: usize },
    #[error("checkpoint/config mismatch: {0}")]
    Config(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed record at line {line}: {message}")]
    Record { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

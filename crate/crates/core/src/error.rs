use thiserror::Error;

/// Errors raised by the solvers in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("overflow evaluating {what} at r = {r}")]
    Overflow { what: &'static str, r: f64 },

    #[error("c = -1 is singular for the general formulas; use the Hulthen path")]
    HulthenSpecialCase,

    #[error("no real level: square-root argument {radicand} <= 0")]
    NoRealLevel { radicand: f64 },

    #[error("division by zero: {0}")]
    Division(&'static str),

    #[error("radicand is not a perfect square (residual discriminant {residual:e})")]
    NotPerfectSquare { residual: f64 },

    #[error("radicand has negative leading behaviour ({leading:e}); no real square root")]
    NegativeRadicand { leading: f64 },

    #[error("no branch with negative tau derivative")]
    NoBoundBranch,

    #[error("bracket [{lo}, {hi}] does not straddle a sign change")]
    NoRoot { lo: f64, hi: f64 },

    #[error("pole at s = {s}: weight vanishes with negative exponent")]
    Pole { s: f64 },

    #[error("non-real exponent: {what} requires sqrt of {value}")]
    NonRealExponent { what: &'static str, value: f64 },

    #[error("degenerate wavefunction: zero norm integral")]
    DegenerateWavefunction,

    #[error("grid error: {0}")]
    Grid(String),

    #[error("non-finite potential at node {node} (r = {r})")]
    NonFinitePotential { node: usize, r: f64 },

    #[error("level {index} not bound: only {available} states below E = 0")]
    NoSuchLevel { index: usize, available: usize },

    #[error("inverse iteration stagnated, residual {residual:e}")]
    Stagnation { residual: f64 },

    #[error("refinement did not converge; energies {energies:?}")]
    NotConverged { energies: Vec<f64> },
}

pub type Result<T> = std::result::Result<T, Error>;

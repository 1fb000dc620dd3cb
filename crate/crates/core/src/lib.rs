//! Bound states of the generalized Woods-Saxon family.
//!
//! The crate pairs closed-form spectra obtained with the Nikiforov-Uvarov
//! method against a finite-difference reference solver:
//!
//! * [`potential`]: the potential family, physical constants and centrifugal terms
//! * [`nu`]: a numeric Nikiforov-Uvarov engine for hypergeometric-type equations
//! * [`spectrum`]: closed-form energies under selectable readings
//! * [`jacobi`], [`wavefunction`]: Jacobi polynomials and radial wavefunctions
//! * [`oracle`]: Sturm-bisection eigenvalues of the discretized radial equation
//! * [`report`]: comparison rows, sweeps and CSV/JSON output

pub mod error;
pub mod jacobi;
pub mod nu;
pub mod oracle;
pub mod poly;
pub mod potential;
pub mod quadrature;
pub mod report;
pub mod spectrum;
pub mod wavefunction;

pub use error::{Error, Result};
pub use oracle::{BoundState, RadialGrid, TridiagonalHamiltonian};
pub use potential::{
    Centrifugal, CentrifugalMode, Family, PhysicalSystem, PotentialParams, QuantumNumbers,
};
pub use report::{ComparisonRow, Report, ReportMeta, RowPlan, RowSettings};
pub use spectrum::{Reading, SpecialCase};
pub use wavefunction::RadialSamples;

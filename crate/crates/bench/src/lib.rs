//! Shared fixtures for the criterion benchmarks.

use wsbound_core::oracle::{build_hamiltonian, default_grid};
use wsbound_core::{
    Centrifugal, Family, PhysicalSystem, PotentialParams, RadialGrid, TridiagonalHamiltonian,
};

/// Deep, well-surfaced Woods-Saxon well with several bound levels per channel.
pub fn nuclear_well() -> PotentialParams {
    PotentialParams::new(50.0, 6.0, 0.6, Family::StandardWs, None).expect("valid parameters")
}

pub fn nuclear_grid() -> RadialGrid {
    default_grid(&nuclear_well(), &PhysicalSystem::natural())
}

pub fn nuclear_hamiltonian(l: u32) -> TridiagonalHamiltonian {
    let well = nuclear_well();
    build_hamiltonian(
        |r| well.value(r).unwrap_or(f64::NAN),
        l,
        &nuclear_grid(),
        &PhysicalSystem::natural(),
        Centrifugal::Exact,
    )
    .expect("finite potential")
}

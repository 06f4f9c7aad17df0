//! Qudit state space and orbit space.
//!
//! The su(N) algebra in the generalized Gell-Mann basis, SU(N)-invariant
//! polynomials of density matrices, positivity tests built on them, and the
//! parameterization of spectra by a Bloch radius and angles.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod error;
pub mod invariants;
pub mod matrix;
pub mod orbit_space;
pub mod state_space;
pub mod su_algebra;

pub use error::{Error, Result};
pub use invariants::{
    bezoutian, casimirs, char_coefficients, discriminant, grad_matrix, newton_extend, quatrit_trace_from_angles,
    qutrit_t3_bloch, trace_invariants, Bezoutian, CasimirValues, CharCoefficients, TraceInvariants,
};
pub use matrix::{CMatrix, HermitianMatrix, RMatrix};
pub use orbit_space::{
    effective_radius, intersection_polyhedron, orbit_from_spectrum, ordered_domain_check, rank_strata,
    spectrum_from_orbit, trisectrix_residual, unit_vector, EffectiveKind, OrbitCoordinates, Spectrum, StratumReport,
};
pub use state_space::{
    check_state_bloch, check_state_traces, eig_oracle, from_bloch, sample_states, to_bloch, BlochVector, SampleMode,
    StateClassification, Stratum,
};
pub use su_algebra::{
    darboux_frame, gell_mann_basis, structure_constants, vee_product, weight_vectors, BasisSet, StructureTensors,
    WeightSystem,
};

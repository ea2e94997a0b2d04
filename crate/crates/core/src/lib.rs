//! Bloch-space representation and Hilbert–Schmidt contractivity analysis of
//! Lindblad open-system dynamics.
//!
//! A density matrix ρ on an N-dimensional Hilbert space expands over an
//! orthonormal Hermitian basis {σ_1, …, σ_{N²}} (generalized Gell-Mann
//! matrices, identity-proportional element last) as ρ = Σ_k r_k σ_k with
//! real coordinates r_k = Tr(σ_k ρ).  A Lindblad generator
//! ρ̇ = −i[H, ρ] + Σ_d (V_d ρ V_d† − ½{V_d†V_d, ρ}) then turns into an
//! affine equation ṡ = A s + c for the reduced (Bloch) vector
//! s = (r_1, …, r_{N²−1}), with A real (N²−1)×(N²−1) and c ∈ ℝ^{N²−1}.
//!
//! In these coordinates the Hilbert–Schmidt metric is Euclidean, so
//! contractivity questions become spectral ones:
//!
//! * ‖ρ(t)‖₂ is nonincreasing for every state iff the evolution is unital,
//!   i.e. Σ_d [V_d, V_d†] = 0, i.e. c = 0;
//! * the HS distance between any two solutions is nonincreasing iff
//!   A + Aᵀ has no positive eigenvalue, with normality of A sufficient;
//! * a positive eigenvalue γ of A + Aᵀ yields witness states whose
//!   distance initially grows at rate γα²‖v‖².
//!
//! [`basis`] builds the coordinate system, [`superop`] assembles (A, c),
//! [`analysis`] decides contractivity and constructs witnesses,
//! [`dynamics`] propagates the affine flow exactly, and [`montecarlo`]
//! surveys random single-dissipator generators.

pub mod analysis;
pub mod basis;
pub mod dynamics;
mod error;
mod mat;
pub mod montecarlo;
pub mod superop;
#[cfg(test)]
mod testutil;
pub mod tolerances;

pub use analysis::{
    analyze, check_normal, check_unital, steady_state, symmetric_spectrum, witness_state,
    ContractivityReport, Normality, SteadyState, SymmetricSpectrum, Unitality, Witness,
    WitnessReport,
};
pub use basis::{
    expand, hs_distance, hs_inner, hs_norm, reconstruct, trace_distance, HermitianBasis,
};
pub use dynamics::{
    distance_series, monotonicity_check, propagate, time_grid, Monotonicity, Trajectory,
};
pub use error::{Error, Result};
pub use montecarlo::{sample_lindblad, survey, Ensemble, SurveyConfig, SurveyResult};
pub use superop::{
    apply_lindbladian, build_bloch_system, dissipator_part, hamiltonian_part, BlochSystem,
    LindbladSystem,
};

/// Complex scalar used throughout (f64 re/im).
pub type Complex64 = num_complex::Complex<f64>;
/// Dense complex matrix (operators on the Hilbert space).
pub type ComplexMatrix = nalgebra::DMatrix<Complex64>;
/// Dense real matrix (Bloch superoperators).
pub type RealMatrix = nalgebra::DMatrix<f64>;
/// Real coordinate vector, full (length N²) or reduced (length N²−1).
pub type RealVector = nalgebra::DVector<f64>;

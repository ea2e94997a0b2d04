//! Numerical tolerances used across the crate.
//!
//! Everything runs in f64 (machine ε ≈ 2.2e-16) on dense matrices of
//! dimension ≤ ~64 (N ≤ 8 for the survey).  Quantities that vanish in exact
//! arithmetic stay below ~1e-13 after O(N³) work at these sizes, so the
//! thresholds below leave two to three orders of magnitude of slack while
//! remaining far under any genuine signal (spectral gaps, commutator
//! defects are O(1) in the systems of interest).

/// Exact-identity checks: orthonormality defects, reconstruction
/// round-trips, and agreement of two algebraically identical routes.
/// Residues are taken relative to the natural scale of the quantity, with
/// a floor of 1 so tiny inputs are judged absolutely.
pub const EXACT: f64 = 1e-12;

/// Hermiticity acceptance: ‖M − M†‖_F ≤ HERMITICITY · max(1, ‖M‖_F).
pub const HERMITICITY: f64 = 1e-10;

/// Unitality: Σ_d [V_d, V_d†] with Frobenius norm at or below this counts
/// as zero; the same threshold applies to ‖c‖ (the two agree up to a
/// factor N because ‖c‖ = ‖Σ_d [V_d,V_d†]‖_F / N).
pub const UNITALITY: f64 = 1e-10;

/// An eigenvalue of A + Aᵀ counts as positive when it exceeds
/// POSITIVITY · ‖A‖_F; separates genuine growth directions from roundoff
/// around degenerate zeros (e.g. the purely Hamiltonian case A + Aᵀ = 0).
pub const POSITIVITY: f64 = 1e-9;

/// Normality: M counts as normal when ‖MMᵀ − MᵀM‖_F ≤ NORMALITY · ‖M‖_F²
/// (the commutator is quadratic in M, hence the squared scale).
pub const NORMALITY: f64 = 1e-9;

/// Rank decisions (steady-state solving): singular values at or below
/// RANK · σ_max are treated as zero.
pub const RANK: f64 = 1e-10;

/// Physicality: smallest eigenvalue a density matrix may have on input
/// and along propagated trajectories.
pub const PSD_MIN: f64 = -1e-8;

/// Stricter PSD slack used when bisecting witness amplitudes, where the
/// search itself pushes states to the boundary.
pub const WITNESS_PSD_MIN: f64 = -1e-12;

/// Smallest witness amplitude α considered usable.
pub const MIN_ALPHA: f64 = 1e-6;

/// Monotonicity: the squared-distance derivative Δᵀ(A+Aᵀ)Δ may exceed
/// zero by at most MONOTONE · ‖Δ‖².
pub const MONOTONE: f64 = 1e-10;

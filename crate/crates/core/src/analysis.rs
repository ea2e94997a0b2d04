//! Contractivity verdicts for the affine Bloch dynamics.
//!
//! Everything reduces to two spectral objects of the evolution matrix A:
//!
//! * the drift c (equivalently Σ_d [V_d, V_d†]) — zero iff the evolution
//!   is unital iff the HS *norm* of every state is nonincreasing;
//! * the symmetrized matrix S = A + Aᵀ — negative semidefinite iff the HS
//!   *distance* between any two solutions is nonincreasing.  A normal A
//!   is sufficient (its symmetrized eigenvalues are 2·Re λ, and all
//!   eigenvalues of A have nonpositive real part).
//!
//! When S has a positive eigenvalue γ with unit eigenvector v, the pair
//! (ρ_ss + α·Σ v_k σ_k, ρ_ss) moves apart at initial squared-distance
//! rate γα²: [`witness_state`] finds the largest admissible α keeping the
//! perturbed matrix a state.

use nalgebra::linalg::SymmetricEigen;
use serde::{Deserialize, Serialize};

use crate::basis::reconstruct;
use crate::error::{Error, Result};
use crate::mat;
use crate::superop::{build_bloch_system, BlochSystem, LindbladSystem};
use crate::{tolerances, ComplexMatrix, HermitianBasis, RealMatrix, RealVector};

/// Whether Σ_d [V_d, V_d†] vanishes, with its Frobenius norm.
#[derive(Clone, Copy, Debug)]
pub struct Unitality {
    pub unital: bool,
    pub residual: f64,
}

/// Decides unitality directly from the operators.
pub fn check_unital(system: &LindbladSystem) -> Unitality {
    let residual = system.commutator_sum().norm();
    Unitality {
        unital: residual <= tolerances::UNITALITY,
        residual,
    }
}

/// Whether a real matrix is normal (MMᵀ = MᵀM), with the relative
/// commutator residual ‖MMᵀ − MᵀM‖_F / ‖M‖_F².
#[derive(Clone, Copy, Debug)]
pub struct Normality {
    pub normal: bool,
    pub residual: f64,
}

pub fn check_normal(m: &RealMatrix) -> Normality {
    let norm_sq = m.norm_squared();
    let comm = m * m.transpose() - m.transpose() * m;
    let residual = if norm_sq > 0.0 {
        comm.norm() / norm_sq
    } else {
        0.0
    };
    Normality {
        normal: residual <= tolerances::NORMALITY,
        residual,
    }
}

/// Eigendecomposition of S = A + Aᵀ, ascending, with the positivity
/// threshold scaled to ‖A‖_F.
#[derive(Clone, Debug)]
pub struct SymmetricSpectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: Vec<RealVector>,
    threshold: f64,
}

impl SymmetricSpectrum {
    /// Eigenvalues of A + Aᵀ in ascending order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Unit eigenvector matching `eigenvalues()[k]`.
    pub fn eigenvector(&self, k: usize) -> &RealVector {
        &self.eigenvectors[k]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    /// Eigenvalues exceeding this count as positive.
    pub fn positive_threshold(&self) -> f64 {
        self.threshold
    }

    pub fn positive_count(&self) -> usize {
        self.eigenvalues
            .iter()
            .filter(|&&e| e > self.threshold)
            .count()
    }

    /// The evolution contracts the HS distance iff no eigenvalue is
    /// positive.
    pub fn contractive(&self) -> bool {
        self.max_eigenvalue() <= self.threshold
    }
}

/// Eigendecomposition of A + Aᵀ for a built Bloch system.
pub fn symmetric_spectrum(bloch: &BlochSystem) -> SymmetricSpectrum {
    let a = bloch.a();
    let sym = a + a.transpose();
    let eig = SymmetricEigen::new(sym);
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    SymmetricSpectrum {
        eigenvalues: order.iter().map(|&i| eig.eigenvalues[i]).collect(),
        eigenvectors: order
            .iter()
            .map(|&i| eig.eigenvectors.column(i).into_owned())
            .collect(),
        threshold: tolerances::POSITIVITY * a.norm(),
    }
}

/// Solution set of A s = −c.
#[derive(Clone, Debug)]
pub struct SteadyState {
    /// Minimum-norm particular solution.
    pub bloch: RealVector,
    /// True when A is invertible (trailing singular values all above the
    /// rank cutoff), so `bloch` is the only fixed point.
    pub unique: bool,
    /// Orthonormal basis of the kernel of A; empty iff `unique`.
    pub null_basis: Vec<RealVector>,
}

/// Fixed points of ṡ = A s + c via SVD with relative rank cutoff.
pub fn steady_state(bloch: &BlochSystem) -> Result<SteadyState> {
    let a = bloch.a();
    let c = bloch.c();
    let k = a.nrows();
    let svd = a.clone().svd(true, true);
    let sigma_max = svd.singular_values.max();
    let cutoff = tolerances::RANK * sigma_max;
    let rank = svd.singular_values.iter().filter(|&&s| s > cutoff).count();

    let s = if sigma_max == 0.0 {
        // A = 0: every point is fixed iff c = 0.
        RealVector::zeros(k)
    } else {
        svd.solve(&(-c), cutoff)
            .map_err(|e| Error::Inconsistency(format!("singular-value solve failed: {e}")))?
            .column(0)
            .into_owned()
    };

    // A fixed point must exist for a trace-preserving generator; treat a
    // large residual as a broken input rather than returning a bogus
    // "steady state".
    let residual = (a * &s + c).norm();
    let tol = 1e-8 * (1.0 + a.norm() * s.norm() + c.norm());
    if residual > tol {
        return Err(Error::Inconsistency(format!(
            "no fixed point: ‖A s + c‖ = {residual:.3e} for the least-squares solution"
        )));
    }

    let v_t = svd.v_t.as_ref().expect("requested right singular vectors");
    let null_basis: Vec<RealVector> = (rank..k)
        .map(|i| v_t.row(i).transpose().into_owned())
        .collect();
    Ok(SteadyState {
        bloch: s,
        unique: rank == k,
        null_basis,
    })
}

/// A state pair whose HS distance initially grows, plus the spectral data
/// it came from.
#[derive(Clone, Debug)]
pub struct Witness {
    /// The perturbed state ρ_ss + α·Σ_k w_k σ_k.
    pub state: ComplexMatrix,
    /// The fixed point ρ_ss used as the second state.
    pub reference: ComplexMatrix,
    /// Unit vector w (eigenvector of A + Aᵀ, sign chosen admissible).
    pub direction: RealVector,
    /// The positive eigenvalue γ of A + Aᵀ along `direction`.
    pub eigenvalue: f64,
    /// Admissible perturbation size found by bisection.
    pub alpha: f64,
    /// d/dt ‖s(t) − s_ss‖² at t = 0, equal to γα².
    pub initial_rate: f64,
}

fn admissible_alpha(
    s_ss: &RealVector,
    w: &RealVector,
    alpha_max: f64,
    basis: &HermitianBasis,
) -> Option<f64> {
    let feasible = |alpha: f64| -> bool {
        let coords = s_ss + w * alpha;
        match reconstruct(&coords, basis) {
            Ok(rho) => mat::min_eigenvalue(&rho) >= tolerances::WITNESS_PSD_MIN,
            Err(_) => false,
        }
    };
    if !feasible(0.0) {
        return None;
    }
    if feasible(alpha_max) {
        return Some(alpha_max);
    }
    // State space is convex, so the feasible α form an interval [0, α*].
    let (mut lo, mut hi) = (0.0f64, alpha_max);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if feasible(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}

/// Constructs a growing state pair when A + Aᵀ has a positive eigenvalue.
///
/// Returns `Ok(None)` for contractive systems.  For non-contractive ones,
/// tries ±v for each positive eigenvalue in descending order and bisects
/// for the largest α with ρ_ss + αv positive semidefinite; fails only if
/// every admissible α is below `tolerances::MIN_ALPHA` (fixed point at
/// the state-space boundary with all growth directions pointing out).
pub fn witness_state(bloch: &BlochSystem) -> Result<Option<Witness>> {
    let spectrum = symmetric_spectrum(bloch);
    if spectrum.contractive() {
        return Ok(None);
    }
    let steady = steady_state(bloch)?;
    let s_ss = &steady.bloch;
    let basis = bloch.basis();
    let n = bloch.dim();
    // ‖s‖ ≤ √((N−1)/N) for states, so 2√((N−1)/N) bounds any admissible
    // perturbation.
    let alpha_max = 2.0 * ((n - 1) as f64 / n as f64).sqrt();
    let sym = bloch.a() + bloch.a().transpose();

    for idx in (0..spectrum.eigenvalues().len()).rev() {
        let gamma = spectrum.eigenvalues()[idx];
        if gamma <= spectrum.positive_threshold() {
            break;
        }
        for sign in [1.0, -1.0] {
            let w = spectrum.eigenvector(idx) * sign;
            let Some(alpha) = admissible_alpha(s_ss, &w, alpha_max, basis) else {
                continue;
            };
            if alpha < tolerances::MIN_ALPHA {
                continue;
            }
            let initial_rate = gamma * alpha * alpha * w.norm_squared();
            // Independent route: the rate is the quadratic form of A + Aᵀ
            // at the actual displacement.
            let delta = &w * alpha;
            let q = delta.dot(&(&sym * &delta));
            if (q - initial_rate).abs() > 1e-10 * initial_rate.abs().max(1.0) {
                return Err(Error::Inconsistency(format!(
                    "witness rate mismatch: spectral {initial_rate:.15e}, quadratic {q:.15e}"
                )));
            }
            let state = reconstruct(&(s_ss + &delta), basis)?;
            let reference = reconstruct(s_ss, basis)?;
            return Ok(Some(Witness {
                state,
                reference,
                direction: w,
                eigenvalue: gamma,
                alpha,
                initial_rate,
            }));
        }
    }
    Err(Error::WitnessSearchFailed {
        min_alpha: tolerances::MIN_ALPHA,
    })
}

/// Witness data as it appears in serialized reports.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessReport {
    pub eigenvalue: f64,
    pub alpha: f64,
    pub initial_rate: f64,
    pub direction: Vec<f64>,
}

/// Full verdict for one Lindblad system.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ContractivityReport {
    pub dim: usize,
    pub unital: bool,
    /// ‖Σ_d [V_d, V_d†]‖_F.
    pub commutator_residual: f64,
    pub a_normal: bool,
    /// ‖AAᵀ − AᵀA‖_F / ‖A‖_F².
    pub a_normal_residual: f64,
    /// Eigenvalues of A + Aᵀ, ascending.
    pub sym_spectrum: Vec<f64>,
    pub max_sym_eig: f64,
    /// Eigenvalues above the relative positivity threshold.
    pub positive_count: usize,
    pub hs_norm_contractive: bool,
    pub hs_distance_contractive: bool,
    /// Reduced coordinates of the fixed point, present when unique.
    pub steady_state: Option<Vec<f64>>,
    /// Present exactly when the system is not HS-distance contractive.
    pub witness: Option<WitnessReport>,
}

/// Runs the whole pipeline: build (A, c), decide both contractivity
/// notions, locate the fixed point, and construct a witness pair when the
/// distance can grow.
pub fn analyze(system: &LindbladSystem) -> Result<ContractivityReport> {
    let basis = HermitianBasis::new(system.dim())?;
    let bloch = build_bloch_system(system, &basis)?;

    let unitality = check_unital(system);
    let c_vanishes = bloch.c().norm() <= tolerances::UNITALITY;
    if unitality.unital != c_vanishes {
        return Err(Error::Inconsistency(format!(
            "unitality disagreement: ‖Σ[V,V†]‖ = {:.3e} but ‖c‖ = {:.3e}",
            unitality.residual,
            bloch.c().norm()
        )));
    }

    let spectrum = symmetric_spectrum(&bloch);
    let normality = check_normal(bloch.a());
    let steady = steady_state(&bloch)?;
    let hs_distance_contractive = spectrum.contractive();
    let witness = if hs_distance_contractive {
        None
    } else {
        let w = witness_state(&bloch)?.expect("positive eigenvalue implies witness search runs");
        Some(WitnessReport {
            eigenvalue: w.eigenvalue,
            alpha: w.alpha,
            initial_rate: w.initial_rate,
            direction: w.direction.iter().copied().collect(),
        })
    };

    Ok(ContractivityReport {
        dim: system.dim(),
        unital: unitality.unital,
        commutator_residual: unitality.residual,
        a_normal: normality.normal,
        a_normal_residual: normality.residual,
        sym_spectrum: spectrum.eigenvalues().to_vec(),
        max_sym_eig: spectrum.max_eigenvalue(),
        positive_count: spectrum.positive_count(),
        hs_norm_contractive: unitality.unital,
        hs_distance_contractive,
        steady_state: steady.unique.then(|| steady.bloch.iter().copied().collect()),
        witness,
    })
}

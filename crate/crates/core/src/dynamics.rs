//! Exact propagation of the affine Bloch flow ṡ = A s + c.
//!
//! With A invertible the solution is s(t) = e^{tA}(s₀ − s_ss) + s_ss
//! around the unique fixed point; otherwise the flow is evaluated through
//! the augmented linear system
//!
//! ```text
//! d/dt [s; 1] = [[A, c], [0, 0]] [s; 1]
//! ```
//!
//! whose exponential handles a singular A without special-casing the
//! kernel.  Both branches are exact up to the matrix exponential, so time
//! steps can be arbitrarily coarse.

use crate::analysis::steady_state;
use crate::basis::reconstruct;
use crate::error::{Error, Result};
use crate::mat;
use crate::superop::BlochSystem;
use crate::{tolerances, RealMatrix, RealVector};

/// Sampled solution of the affine flow in reduced coordinates.
#[derive(Clone, Debug)]
pub struct Trajectory {
    times: Vec<f64>,
    states: Vec<RealVector>,
    hs_norms: Vec<f64>,
    distance_to_reference: Option<Vec<f64>>,
}

impl Trajectory {
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn states(&self) -> &[RealVector] {
        &self.states
    }

    /// √(1/N + ‖s‖²) per sample — the HS norm of the reconstructed state.
    pub fn hs_norms(&self) -> &[f64] {
        &self.hs_norms
    }

    pub fn distance_to_reference(&self) -> Option<&[f64]> {
        self.distance_to_reference.as_deref()
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Attaches the distance ‖s(t) − r‖ to a fixed reduced coordinate
    /// vector r (typically a fixed point or a witness reference).
    pub fn with_reference_point(mut self, reference: &RealVector) -> Result<Self> {
        let k = self.states.first().map_or(reference.len(), RealVector::len);
        if reference.len() != k {
            return Err(Error::BadCoordinateLength {
                full: k + 1,
                reduced: k,
                found: reference.len(),
            });
        }
        self.distance_to_reference = Some(
            self.states
                .iter()
                .map(|s| (s - reference).norm())
                .collect(),
        );
        Ok(self)
    }

    /// CSV rows `t,s_1,…,s_k,hs_norm[,distance_to_reference]` with a
    /// header line.  Floats print in Rust's shortest round-trip form, so
    /// identical trajectories serialize to identical bytes.
    pub fn to_csv(&self) -> String {
        let k = self.states.first().map_or(0, RealVector::len);
        let mut out = String::from("t");
        for i in 1..=k {
            out.push_str(&format!(",s_{i}"));
        }
        out.push_str(",hs_norm");
        if self.distance_to_reference.is_some() {
            out.push_str(",distance_to_reference");
        }
        out.push('\n');
        // {:?} is the shortest round-trip form with an exponent when
        // that is shorter; plain {} would spell 1e-60 out in full
        for (i, t) in self.times.iter().enumerate() {
            out.push_str(&format!("{t:?}"));
            for v in self.states[i].iter() {
                out.push_str(&format!(",{v:?}"));
            }
            out.push_str(&format!(",{:?}", self.hs_norms[i]));
            if let Some(d) = &self.distance_to_reference {
                out.push_str(&format!(",{:?}", d[i]));
            }
            out.push('\n');
        }
        out
    }
}

/// Uniform grid of `points` samples covering [0, t_max], endpoints
/// included.
pub fn time_grid(t_max: f64, points: usize) -> Result<Vec<f64>> {
    if !(t_max.is_finite() && t_max > 0.0) || points < 2 {
        return Err(Error::BadTimeGrid);
    }
    Ok((0..points)
        .map(|i| t_max * i as f64 / (points - 1) as f64)
        .collect())
}

fn validate_grid(times: &[f64]) -> Result<()> {
    if times.is_empty() || times[0] != 0.0 {
        return Err(Error::BadTimeGrid);
    }
    for pair in times.windows(2) {
        if !(pair[1].is_finite() && pair[1] > pair[0]) {
            return Err(Error::BadTimeGrid);
        }
    }
    Ok(())
}

/// Evolves the reduced vector `s0` over `times` (which must start at 0
/// and increase strictly).  The initial vector must reconstruct to a
/// positive semidefinite matrix, and every sample is re-checked, so a
/// physical input cannot silently leave state space.
pub fn propagate(bloch: &BlochSystem, s0: &RealVector, times: &[f64]) -> Result<Trajectory> {
    validate_grid(times)?;
    let a = bloch.a();
    let k = a.nrows();
    if s0.len() != k {
        return Err(Error::BadCoordinateLength {
            full: k + 1,
            reduced: k,
            found: s0.len(),
        });
    }
    let basis = bloch.basis();
    let rho0 = reconstruct(s0, basis)?;
    let min_eig = mat::min_eigenvalue(&rho0);
    if min_eig < tolerances::PSD_MIN {
        return Err(Error::UnphysicalState { min_eig });
    }

    let steady = steady_state(bloch)?;
    let states: Vec<RealVector> = if steady.unique {
        let shift = s0 - &steady.bloch;
        times
            .iter()
            .map(|&t| (a * t).exp() * &shift + &steady.bloch)
            .collect()
    } else {
        // augmented system: exact even on the kernel of A
        let mut b = RealMatrix::zeros(k + 1, k + 1);
        b.view_mut((0, 0), (k, k)).copy_from(a);
        for i in 0..k {
            b[(i, k)] = bloch.c()[i];
        }
        let x = RealVector::from_fn(k + 1, |i, _| if i < k { s0[i] } else { 1.0 });
        times
            .iter()
            .map(|&t| ((&b * t).exp() * &x).rows(0, k).into_owned())
            .collect()
    };

    let inv_n = 1.0 / bloch.dim() as f64;
    let mut hs_norms = Vec::with_capacity(states.len());
    for (s, &t) in states.iter().zip(times) {
        let rho = reconstruct(s, basis)?;
        let min_eig = mat::min_eigenvalue(&rho);
        if min_eig < tolerances::PSD_MIN {
            return Err(Error::Inconsistency(format!(
                "state left the physical set at t = {t}: min eigenvalue {min_eig:.3e}"
            )));
        }
        hs_norms.push((inv_n + s.norm_squared()).sqrt());
    }

    Ok(Trajectory {
        times: times.to_vec(),
        states,
        hs_norms,
        distance_to_reference: None,
    })
}

/// Pointwise HS distance between two trajectories on the same grid.
pub fn distance_series(a: &Trajectory, b: &Trajectory) -> Result<Vec<f64>> {
    if a.times != b.times {
        return Err(Error::GridMismatch);
    }
    Ok(a.states
        .iter()
        .zip(&b.states)
        .map(|(x, y)| (x - y).norm())
        .collect())
}

/// Outcome of the analytic monotonicity test along a trajectory pair.
#[derive(Clone, Copy, Debug)]
pub struct Monotonicity {
    pub monotone: bool,
    /// Time of the first sample where the squared distance has positive
    /// derivative.
    pub first_violation: Option<f64>,
}

/// Checks d/dt ‖Δ(t)‖² = Δᵀ(A + Aᵀ)Δ ≤ 0 at every sample of the pair.
/// Analytic in Δ, so it cannot be fooled by coarse grids the way a
/// finite-difference test can.
pub fn monotonicity_check(
    bloch: &BlochSystem,
    a: &Trajectory,
    b: &Trajectory,
) -> Result<Monotonicity> {
    if a.times != b.times {
        return Err(Error::GridMismatch);
    }
    let sym = bloch.a() + bloch.a().transpose();
    for (i, (x, y)) in a.states.iter().zip(&b.states).enumerate() {
        let delta = x - y;
        let q = delta.dot(&(&sym * &delta));
        if q > tolerances::MONOTONE * delta.norm_squared() {
            return Ok(Monotonicity {
                monotone: false,
                first_violation: Some(a.times[i]),
            });
        }
    }
    Ok(Monotonicity {
        monotone: true,
        first_violation: None,
    })
}

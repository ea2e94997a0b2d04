//! Shared helpers for the integration suites: an independent adaptive
//! Dormand–Prince integrator for ṡ = A s + c (so closed-form propagation
//! is checked against classical ODE numerics, not against itself) and
//! random-input generators.

#![allow(dead_code)]

use lindbloch::{
    sample_lindblad, Complex64, ComplexMatrix, Ensemble, LindbladSystem, RealMatrix, RealVector,
};
use rand::Rng;

const ATOL: f64 = 1e-12;
const RTOL: f64 = 1e-12;

/// Dormand–Prince 5(4) with step control, sampled exactly at `times`.
pub fn integrate_affine(
    a: &RealMatrix,
    c: &RealVector,
    s0: &RealVector,
    times: &[f64],
) -> Vec<RealVector> {
    let f = |y: &RealVector| a * y + c;
    let mut out = Vec::with_capacity(times.len());
    let mut t = times[0];
    let mut y = s0.clone();
    out.push(y.clone());
    let mut h = 1e-3_f64;
    for &target in &times[1..] {
        // the > 1e-12 slack absorbs rounding when t + (target - t)
        // lands one ulp short of the target
        while target - t > 1e-12 {
            let step = h.min(target - t);
            assert!(step > 1e-13, "integrator step size underflow");
            let (y5, err) = dopri_step(&f, &y, step);
            let scale = ATOL + RTOL * y.norm().max(y5.norm());
            let ratio = err / scale;
            if ratio <= 1.0 {
                t += step;
                y = y5;
                h = step * (0.9 * ratio.powf(-0.2)).clamp(0.2, 5.0);
            } else {
                h = step * (0.9 * ratio.powf(-0.2)).max(0.1);
            }
        }
        out.push(y.clone());
    }
    out
}

fn dopri_step<F: Fn(&RealVector) -> RealVector>(
    f: &F,
    y: &RealVector,
    h: f64,
) -> (RealVector, f64) {
    let k1 = f(y);
    let k2 = f(&(y + &k1 * (h / 5.0)));
    let k3 = f(&(y + &k1 * (3.0 * h / 40.0) + &k2 * (9.0 * h / 40.0)));
    let k4 = f(&(y + &k1 * (44.0 * h / 45.0) - &k2 * (56.0 * h / 15.0) + &k3 * (32.0 * h / 9.0)));
    let k5 = f(&(y + &k1 * (19372.0 * h / 6561.0) - &k2 * (25360.0 * h / 2187.0)
        + &k3 * (64448.0 * h / 6561.0)
        - &k4 * (212.0 * h / 729.0)));
    let k6 = f(&(y + &k1 * (9017.0 * h / 3168.0) - &k2 * (355.0 * h / 33.0)
        + &k3 * (46732.0 * h / 5247.0)
        + &k4 * (49.0 * h / 176.0)
        - &k5 * (5103.0 * h / 18656.0)));
    let y5 = y
        + &k1 * (35.0 * h / 384.0)
        + &k3 * (500.0 * h / 1113.0)
        + &k4 * (125.0 * h / 192.0)
        - &k5 * (2187.0 * h / 6784.0)
        + &k6 * (11.0 * h / 84.0);
    let k7 = f(&y5);
    let y4 = y
        + &k1 * (5179.0 * h / 57600.0)
        + &k3 * (7571.0 * h / 16695.0)
        + &k4 * (393.0 * h / 640.0)
        - &k5 * (92097.0 * h / 339200.0)
        + &k6 * (187.0 * h / 2100.0)
        + &k7 * (h / 40.0);
    let err = (&y5 - y4).norm();
    (y5, err)
}

pub fn cm(n: usize, rows: &[&[f64]]) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |i, j| Complex64::new(rows[i][j], 0.0))
}

/// Smallest eigenvalue of a Hermitian matrix (direct nalgebra route,
/// independent of the library's internal checks).
pub fn min_eig_hermitian(m: &ComplexMatrix) -> f64 {
    nalgebra::SymmetricEigen::new(m.clone())
        .eigenvalues
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min)
}

/// Unit upper-triangular decoherence operator on three levels; the
/// reference non-contractive system.
pub fn growth_system() -> LindbladSystem {
    let v = cm(3, &[&[1., 1., 1.], &[0., 1., 1.], &[0., 0., 1.]]);
    LindbladSystem::dissipative(3, vec![v]).unwrap()
}

/// Cascade decay 3→2→1: non-unital, non-normal A, yet HS-distance
/// contractive.
pub fn cascade_system() -> LindbladSystem {
    let v = cm(3, &[&[0., 1., 0.], &[0., 0., 1.], &[0., 0., 0.]]);
    LindbladSystem::dissipative(3, vec![v]).unwrap()
}

/// Two-channel unital system with non-normal A.
pub fn unital_system() -> LindbladSystem {
    let v1 = cm(3, &[&[0., 0., 1.], &[0., 0., 0.], &[0., 0., 0.]]);
    let v2 = cm(3, &[&[0., 0., 0.], &[1., 0., 0.], &[0., 1., 0.]]);
    LindbladSystem::dissipative(3, vec![v1, v2]).unwrap()
}

/// Λ-system: one excited level decaying into two ground levels.
pub fn lambda_system(rate1: f64, rate2: f64) -> LindbladSystem {
    let mut v1 = ComplexMatrix::zeros(3, 3);
    v1[(0, 2)] = Complex64::new(rate1.sqrt(), 0.0);
    let mut v2 = ComplexMatrix::zeros(3, 3);
    v2[(1, 2)] = Complex64::new(rate2.sqrt(), 0.0);
    LindbladSystem::dissipative(3, vec![v1, v2]).unwrap()
}

/// Reference 8×8 evolution matrix of the growth system.
pub fn growth_printed_a() -> RealMatrix {
    let s3 = 3f64.sqrt();
    RealMatrix::from_row_slice(
        8,
        8,
        &[
            -1., 0., 0., 1., s3 / 3., 0., 0.5, 1., //
            0., -0.5, 0., 0., 0., 0.5, 0., 0., //
            0., -1., -1., 0., 0., 0.5, 0., 0., //
            -1., 0., 0., -0.5, -2. * s3 / 3., 0., 0., 1.5, //
            0., 0., 0., 0., -2., 0., s3 / 2., s3, //
            0., 0.5, -0.5, 0., 0., -1.5, 0., 0., //
            -0.5, 0., 0., -1., -s3 / 2., 0., -1., 0.5, //
            1., 0., 0., -0.5, -s3 / 3., 0., -0.5, -1.5,
        ],
    )
}

pub fn growth_printed_c() -> RealVector {
    let s3 = 3f64.sqrt();
    RealVector::from_vec(vec![1., 0., 0., 1., s3, 0., 0., -1.]) * (2f64.sqrt() / 3.)
}

pub fn growth_steady() -> ComplexMatrix {
    cm(3, &[&[2., -1., 0.], &[-1., 2., -1.], &[0., -1., 1.]]) / Complex64::new(5.0, 0.0)
}

pub fn random_hermitian(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let g = sample_lindblad(n, Ensemble::ComplexGinibre, rng);
    (&g + g.adjoint()) / Complex64::new(2.0, 0.0)
}

pub fn random_density(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let g = sample_lindblad(n, Ensemble::ComplexGinibre, rng);
    let p = &g * g.adjoint();
    let tr = p.trace();
    p / tr
}

/// Random normal operator U D U† with Ginibre-unitary U and complex
/// normal diagonal D.
pub fn random_normal_operator(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let g = sample_lindblad(n, Ensemble::ComplexGinibre, rng);
    let u = g.qr().q();
    let d = sample_lindblad(n, Ensemble::ComplexGinibre, rng);
    let diag = ComplexMatrix::from_fn(n, n, |i, j| {
        if i == j {
            d[(i, i)]
        } else {
            Complex64::ZERO
        }
    });
    &u * diag * u.adjoint()
}

/// Random dissipative system with `ops` Ginibre operators and optionally
/// a random Hamiltonian.
pub fn random_system(
    n: usize,
    ops: usize,
    with_hamiltonian: bool,
    rng: &mut impl Rng,
) -> LindbladSystem {
    let h = if with_hamiltonian {
        random_hermitian(n, rng)
    } else {
        ComplexMatrix::zeros(n, n)
    };
    let vs = (0..ops)
        .map(|_| sample_lindblad(n, Ensemble::ComplexGinibre, rng))
        .collect();
    LindbladSystem::new(h, vs).unwrap()
}

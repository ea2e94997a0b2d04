//! Fixtures shared by the in-crate unit tests: the worked three-level
//! systems and small random-matrix helpers.

use rand::rngs::StdRng;

use crate::montecarlo::{sample_lindblad, Ensemble};
use crate::superop::LindbladSystem;
use crate::{Complex64, ComplexMatrix, RealMatrix, RealVector};

pub(crate) fn cm(n: usize, rows: &[&[f64]]) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |i, j| Complex64::new(rows[i][j], 0.0))
}

pub(crate) fn random_hermitian(n: usize, rng: &mut StdRng) -> ComplexMatrix {
    let g = sample_lindblad(n, Ensemble::ComplexGinibre, rng);
    (&g + g.adjoint()) / Complex64::new(2.0, 0.0)
}

pub(crate) fn random_density(n: usize, rng: &mut StdRng) -> ComplexMatrix {
    let g = sample_lindblad(n, Ensemble::ComplexGinibre, rng);
    let p = &g * g.adjoint();
    let tr = p.trace();
    p / tr
}

/// Unit upper-triangular decoherence operator on three levels, the
/// smallest known generator with a growing HS-distance direction.
pub(crate) fn growth_example() -> LindbladSystem {
    let v = cm(3, &[&[1., 1., 1.], &[0., 1., 1.], &[0., 0., 1.]]);
    LindbladSystem::dissipative(3, vec![v]).unwrap()
}

/// Two-channel system whose individual commutators cancel: unital but
/// with non-normal A.
pub(crate) fn unital_example() -> LindbladSystem {
    let v1 = cm(3, &[&[0., 0., 1.], &[0., 0., 0.], &[0., 0., 0.]]);
    let v2 = cm(3, &[&[0., 0., 0.], &[1., 0., 0.], &[0., 1., 0.]]);
    LindbladSystem::dissipative(3, vec![v1, v2]).unwrap()
}

/// Λ-configuration: one excited level decaying into two ground levels
/// with the given rates.  Equal rates make A diagonal (normal) while the
/// evolution stays non-unital.
pub(crate) fn lambda_example(rate1: f64, rate2: f64) -> LindbladSystem {
    let mut v1 = ComplexMatrix::zeros(3, 3);
    v1[(0, 2)] = Complex64::new(rate1.sqrt(), 0.0);
    let mut v2 = ComplexMatrix::zeros(3, 3);
    v2[(1, 2)] = Complex64::new(rate2.sqrt(), 0.0);
    LindbladSystem::dissipative(3, vec![v1, v2]).unwrap()
}

/// Cascade decay 3→2→1 via the strict upper-shift operator: non-unital
/// and non-normal yet HS-distance contractive.
pub(crate) fn cascade_example() -> LindbladSystem {
    let v = cm(3, &[&[0., 1., 0.], &[0., 0., 1.], &[0., 0., 0.]]);
    LindbladSystem::dissipative(3, vec![v]).unwrap()
}

/// The known 8×8 evolution matrix of the unit upper-triangular generator;
/// pins down the basis ordering.
pub(crate) fn growth_example_a() -> RealMatrix {
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

pub(crate) fn growth_example_c() -> RealVector {
    let s3 = 3f64.sqrt();
    RealVector::from_vec(vec![1., 0., 0., 1., s3, 0., 0., -1.]) * (2f64.sqrt() / 3.)
}

/// Steady state of the unit upper-triangular generator.
pub(crate) fn growth_example_steady() -> ComplexMatrix {
    cm(3, &[&[2., -1., 0.], &[-1., 2., -1.], &[0., -1., 1.]]) / Complex64::new(5.0, 0.0)
}

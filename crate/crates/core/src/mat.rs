//! Small complex-matrix helpers shared by the other modules.

use crate::error::{Error, Result};
use crate::{tolerances, Complex64, ComplexMatrix};

pub fn ensure_square(m: &ComplexMatrix) -> Result<usize> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    Ok(m.nrows())
}

pub fn ensure_finite(m: &ComplexMatrix) -> Result<()> {
    if m.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

pub fn ensure_dim(m: &ComplexMatrix, dim: usize) -> Result<()> {
    ensure_square(m)?;
    if m.nrows() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: m.nrows(),
        });
    }
    Ok(())
}

/// ‖M − M†‖_F relative to max(1, ‖M‖_F).
pub fn hermiticity_residual(m: &ComplexMatrix) -> f64 {
    (m - m.adjoint()).norm() / m.norm().max(1.0)
}

pub fn ensure_hermitian(m: &ComplexMatrix) -> Result<()> {
    let residual = hermiticity_residual(m);
    if residual > tolerances::HERMITICITY {
        return Err(Error::NotHermitian {
            residual,
            tol: tolerances::HERMITICITY,
        });
    }
    Ok(())
}

pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a * b - b * a
}

pub fn anticommutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a * b + b * a
}

/// Tr(X·Y) without forming the product: Σ_{ij} X_ij Y_ji.
pub fn trace_product(x: &ComplexMatrix, y: &ComplexMatrix) -> Complex64 {
    let n = x.nrows();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            acc += x[(i, j)] * y[(j, i)];
        }
    }
    acc
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(m: &ComplexMatrix) -> f64 {
    let eig = nalgebra::SymmetricEigen::new(m.clone());
    eig.eigenvalues.min()
}

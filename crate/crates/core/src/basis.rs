//! Orthonormal Hermitian basis and Hilbert–Schmidt geometry.
//!
//! The basis for Hermitian N×N matrices consists of the N²−1 generalized
//! Gell-Mann matrices followed by σ_{N²} = I/√N.  For pairs 1 ≤ r < s ≤ N
//! the symmetric element (|r⟩⟨s| + |s⟩⟨r|)/√2 sits at index k = r+(s−1)N
//! and the antisymmetric element i(−|r⟩⟨s| + |s⟩⟨r|)/√2 at k = s+(r−1)N;
//! the diagonal element (Σ_{k≤r}|k⟩⟨k| − r|r+1⟩⟨r+1|)/√(r+r²) sits at
//! k = r+(r−1)N.  Flattened, k−1 runs column-major over an N×N index grid,
//! so every slot is filled exactly once and the identity lands last.
//!
//! Expansion r_k = Tr(σ_k M) is an isometry onto ℝ^{N²}: the HS inner
//! product becomes the Euclidean one, and for equal-trace Hermitian pairs
//! the HS distance equals the Euclidean distance of the reduced
//! (first N²−1) coordinates.

use crate::error::{Error, Result};
use crate::mat;
use crate::{Complex64, ComplexMatrix, RealVector};

/// Ordered orthonormal basis {σ_1, …, σ_{N²}} of Hermitian N×N matrices,
/// with σ_{N²} = I/√N and all earlier elements traceless.
#[derive(Clone, Debug)]
pub struct HermitianBasis {
    dim: usize,
    elements: Vec<ComplexMatrix>,
}

impl HermitianBasis {
    /// Builds the basis for an N-dimensional Hilbert space, N ≥ 2.
    pub fn new(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::DimensionTooSmall(dim));
        }
        let n = dim;
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        let mut elements = vec![ComplexMatrix::zeros(n, n); n * n];
        for k in 0..n * n {
            // k runs column-major over (row, col) = (r, s), both 0-based.
            let r = k % n;
            let s = k / n;
            let m = &mut elements[k];
            if r < s {
                // symmetric pair element
                m[(r, s)] = Complex64::new(inv_sqrt2, 0.0);
                m[(s, r)] = Complex64::new(inv_sqrt2, 0.0);
            } else if r > s {
                // antisymmetric pair element on the pair (s, r)
                m[(s, r)] = Complex64::new(0.0, -inv_sqrt2);
                m[(r, s)] = Complex64::new(0.0, inv_sqrt2);
            } else if r + 1 < n {
                // diagonal element with r+1 leading entries
                let rr = (r + 1) as f64;
                let norm = 1.0 / (rr + rr * rr).sqrt();
                for j in 0..=r {
                    m[(j, j)] = Complex64::new(norm, 0.0);
                }
                m[(r + 1, r + 1)] = Complex64::new(-rr * norm, 0.0);
            } else {
                // identity component, last
                let norm = 1.0 / (n as f64).sqrt();
                for j in 0..n {
                    m[(j, j)] = Complex64::new(norm, 0.0);
                }
            }
        }
        Ok(Self { dim, elements })
    }

    /// Hilbert space dimension N.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of basis elements, N².
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// σ_{k+1} (0-based index; the identity component is last).
    pub fn element(&self, k: usize) -> &ComplexMatrix {
        &self.elements[k]
    }

    pub fn elements(&self) -> &[ComplexMatrix] {
        &self.elements
    }

    /// Reduced coordinates of a density-like matrix: `expand` minus the
    /// trace component.
    pub fn bloch_vector(&self, m: &ComplexMatrix) -> Result<RealVector> {
        let full = expand(m, self)?;
        Ok(full.rows(0, self.len() - 1).into_owned())
    }
}

/// Coordinates r_k = Tr(σ_k M) of a Hermitian matrix; full length N².
pub fn expand(m: &ComplexMatrix, basis: &HermitianBasis) -> Result<RealVector> {
    mat::ensure_dim(m, basis.dim())?;
    mat::ensure_finite(m)?;
    mat::ensure_hermitian(m)?;
    // Tr(σ_k M) is real for Hermitian pairs; the imaginary residue is
    // bounded by the hermiticity tolerance checked above.
    Ok(RealVector::from_iterator(
        basis.len(),
        basis
            .elements()
            .iter()
            .map(|sigma| mat::trace_product(sigma, m).re),
    ))
}

/// Inverse of [`expand`]: Σ_k r_k σ_k.  Accepts a full vector (length N²)
/// or a reduced one (length N²−1), in which case the trace is fixed to 1.
pub fn reconstruct(coords: &RealVector, basis: &HermitianBasis) -> Result<ComplexMatrix> {
    let n = basis.dim();
    let full = basis.len();
    if coords.len() != full && coords.len() != full - 1 {
        return Err(Error::BadCoordinateLength {
            full,
            reduced: full - 1,
            found: coords.len(),
        });
    }
    if !coords.iter().all(|x| x.is_finite()) {
        return Err(Error::NonFinite);
    }
    let mut m = if coords.len() == full {
        ComplexMatrix::zeros(n, n)
    } else {
        // trace-1 slice: the missing coordinate is 1/√N on σ_{N²} = I/√N
        ComplexMatrix::identity(n, n) / Complex64::new(n as f64, 0.0)
    };
    for (k, &r) in coords.iter().enumerate() {
        m += basis.element(k) * Complex64::new(r, 0.0);
    }
    Ok(m)
}

/// Hilbert–Schmidt inner product ⟨A|B⟩ = Tr(A†B).
pub fn hs_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Complex64> {
    let dim = mat::ensure_square(a)?;
    mat::ensure_dim(b, dim)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for (x, y) in a.iter().zip(b.iter()) {
        acc += x.conj() * y;
    }
    Ok(acc)
}

/// Hilbert–Schmidt (Frobenius) norm √Tr(A†A).
///
/// In coordinates, ‖A‖²_HS = Tr(A)²/N + ‖a‖² with a the reduced vector —
/// the trace enters squared, as follows from a_{N²} = Tr(A)/√N.
pub fn hs_norm(a: &ComplexMatrix) -> f64 {
    a.norm()
}

/// Hilbert–Schmidt distance √Tr[(A−B)²] between Hermitian matrices.
///
/// Equals the Euclidean distance of the reduced coordinate vectors when
/// Tr A = Tr B.
pub fn hs_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    let dim = mat::ensure_square(a)?;
    mat::ensure_dim(b, dim)?;
    mat::ensure_hermitian(a)?;
    mat::ensure_hermitian(b)?;
    Ok((a - b).norm())
}

/// Trace distance between Hermitian matrices: Σ|λ_i(A−B)|, halved when
/// `halved` is set (the density-matrix convention ½Tr|A−B|).  The
/// unnormalized form is the one that dominates the HS norm,
/// ‖Δ‖_HS ≤ Σ|λ_i(Δ)|.
pub fn trace_distance(a: &ComplexMatrix, b: &ComplexMatrix, halved: bool) -> Result<f64> {
    let dim = mat::ensure_square(a)?;
    mat::ensure_dim(b, dim)?;
    mat::ensure_hermitian(a)?;
    mat::ensure_hermitian(b)?;
    let eig = nalgebra::SymmetricEigen::new(a - b);
    let total: f64 = eig.eigenvalues.iter().map(|l| l.abs()).sum();
    Ok(if halved { total / 2.0 } else { total })
}

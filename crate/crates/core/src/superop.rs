//! Assembly of the affine Bloch-space generator (A, c) from Lindblad data.
//!
//! Expanding ρ = Σ_k r_k σ_k turns ρ̇ = −i[H, ρ] + Σ_d 𝓓[V_d]ρ into the
//! linear equation ṙ = (L + Σ_d D^{(d)}) r on ℝ^{N²}, with entries
//!
//! ```text
//! L_mn = Tr(iH[σ_m, σ_n])
//! D_mn = Tr(V†σ_m V σ_n) − ½ Tr(V†V {σ_m, σ_n})
//! ```
//!
//! Trace preservation makes the last row vanish and pins r_{N²} = 1/√N,
//! so the reduced vector s = (r_1, …, r_{N²−1}) obeys ṡ = A s + c where A
//! is the leading (N²−1)×(N²−1) block and c_m = M_{m,N²}/√N, equivalently
//! c_m = (1/N) Σ_d Tr([V_d, V_d†] σ_m).  Both routes for c are computed
//! and compared; a mismatch is reported instead of silently picking one.

use crate::basis::HermitianBasis;
use crate::error::{Error, Result};
use crate::mat;
use crate::{tolerances, Complex64, ComplexMatrix, RealMatrix, RealVector};

/// Hamiltonian plus Lindblad (decoherence) operators; rate constants are
/// absorbed into the operators as V → √rate · V.
#[derive(Clone, Debug)]
pub struct LindbladSystem {
    dim: usize,
    hamiltonian: ComplexMatrix,
    lindblad_ops: Vec<ComplexMatrix>,
}

impl LindbladSystem {
    /// Validates shapes, finiteness and hermiticity of H.  The operator
    /// list may be empty (purely Hamiltonian) and H may be zero (purely
    /// dissipative).
    pub fn new(hamiltonian: ComplexMatrix, lindblad_ops: Vec<ComplexMatrix>) -> Result<Self> {
        let dim = mat::ensure_square(&hamiltonian)?;
        if dim < 2 {
            return Err(Error::DimensionTooSmall(dim));
        }
        mat::ensure_finite(&hamiltonian)?;
        mat::ensure_hermitian(&hamiltonian)?;
        for v in &lindblad_ops {
            mat::ensure_dim(v, dim)?;
            mat::ensure_finite(v)?;
        }
        Ok(Self {
            dim,
            hamiltonian,
            lindblad_ops,
        })
    }

    /// Purely dissipative system (H = 0).
    pub fn dissipative(dim: usize, lindblad_ops: Vec<ComplexMatrix>) -> Result<Self> {
        Self::new(ComplexMatrix::zeros(dim, dim), lindblad_ops)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hamiltonian(&self) -> &ComplexMatrix {
        &self.hamiltonian
    }

    pub fn lindblad_ops(&self) -> &[ComplexMatrix] {
        &self.lindblad_ops
    }

    /// Σ_d [V_d, V_d†]; zero exactly when the evolution is unital.
    pub fn commutator_sum(&self) -> ComplexMatrix {
        let mut sum = ComplexMatrix::zeros(self.dim, self.dim);
        for v in &self.lindblad_ops {
            sum += mat::commutator(v, &v.adjoint());
        }
        sum
    }
}

/// The affine generator ṡ = A s + c on reduced coordinates, together with
/// the basis defining them.
#[derive(Clone, Debug)]
pub struct BlochSystem {
    dim: usize,
    a: RealMatrix,
    c: RealVector,
    basis: HermitianBasis,
}

impl BlochSystem {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The (N²−1)×(N²−1) evolution matrix A.
    pub fn a(&self) -> &RealMatrix {
        &self.a
    }

    /// The drift vector c; zero iff the evolution is unital.
    pub fn c(&self) -> &RealVector {
        &self.c
    }

    pub fn basis(&self) -> &HermitianBasis {
        &self.basis
    }
}

/// Extracts the real part of a superoperator block, verifying that the
/// imaginary residue (zero in exact arithmetic) is roundoff-sized
/// relative to `scale`.
fn real_part_checked(m: &ComplexMatrix, scale: f64, what: &str) -> Result<RealMatrix> {
    let tol = tolerances::EXACT * scale.max(1.0);
    let mut out = RealMatrix::zeros(m.nrows(), m.ncols());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let z = m[(i, j)];
            if z.im.abs() > tol {
                return Err(Error::Inconsistency(format!(
                    "imaginary residue {:.3e} in {what} entry ({i},{j})",
                    z.im
                )));
            }
            out[(i, j)] = z.re;
        }
    }
    Ok(out)
}

/// Hamiltonian superoperator block L_mn = Tr(iH[σ_m, σ_n]) on ℝ^{N²}.
pub fn hamiltonian_part(h: &ComplexMatrix, basis: &HermitianBasis) -> Result<RealMatrix> {
    mat::ensure_dim(h, basis.dim())?;
    mat::ensure_finite(h)?;
    mat::ensure_hermitian(h)?;
    let n2 = basis.len();
    // t_mn = Tr(Hσ_m σ_n); then L_mn = i(t_mn − t_nm) by trace cyclicity.
    let products: Vec<ComplexMatrix> = basis.elements().iter().map(|s| h * s).collect();
    let mut l = ComplexMatrix::zeros(n2, n2);
    for m in 0..n2 {
        for n in 0..n2 {
            let t_mn = mat::trace_product(&products[m], basis.element(n));
            let t_nm = mat::trace_product(&products[n], basis.element(m));
            l[(m, n)] = Complex64::i() * (t_mn - t_nm);
        }
    }
    real_part_checked(&l, h.norm(), "Hamiltonian block")
}

/// Dissipator superoperator block
/// D_mn = Tr(V†σ_m V σ_n) − ½ Tr(V†V {σ_m, σ_n}) on ℝ^{N²}.
pub fn dissipator_part(v: &ComplexMatrix, basis: &HermitianBasis) -> Result<RealMatrix> {
    mat::ensure_dim(v, basis.dim())?;
    mat::ensure_finite(v)?;
    let n2 = basis.len();
    let vd = v.adjoint();
    let w = &vd * v;
    // Both traces against σ_n share the left factor
    // G_m = V†σ_mV − ½(Wσ_m + σ_mW), so D_mn = Tr(G_m σ_n).
    let half = Complex64::new(0.5, 0.0);
    let lefts: Vec<ComplexMatrix> = basis
        .elements()
        .iter()
        .map(|s| &vd * s * v - (&w * s + s * &w) * half)
        .collect();
    let mut d = ComplexMatrix::zeros(n2, n2);
    for m in 0..n2 {
        for n in 0..n2 {
            d[(m, n)] = mat::trace_product(&lefts[m], basis.element(n));
        }
    }
    real_part_checked(&d, v.norm_squared(), "dissipator block")
}

/// Builds the reduced affine system (A, c) for a Lindblad generator.
pub fn build_bloch_system(system: &LindbladSystem, basis: &HermitianBasis) -> Result<BlochSystem> {
    if system.dim() != basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: basis.dim(),
            found: system.dim(),
        });
    }
    let n = system.dim();
    let n2 = basis.len();
    let scale: f64 = system
        .lindblad_ops()
        .iter()
        .map(|v| v.norm_squared())
        .sum::<f64>()
        + system.hamiltonian().norm();

    let mut full = RealMatrix::zeros(n2, n2);
    if system.hamiltonian().iter().any(|z| *z != Complex64::ZERO) {
        full += hamiltonian_part(system.hamiltonian(), basis)?;
    }
    for v in system.lindblad_ops() {
        full += dissipator_part(v, basis)?;
    }

    // Trace preservation: the σ_{N²} row must vanish.
    let row_tol = tolerances::EXACT * scale.max(1.0);
    for j in 0..n2 {
        if full[(n2 - 1, j)].abs() > row_tol {
            return Err(Error::Inconsistency(format!(
                "trace-preservation row has entry {:.3e} at column {j}",
                full[(n2 - 1, j)]
            )));
        }
    }

    let a = full.view((0, 0), (n2 - 1, n2 - 1)).into_owned();
    let c = full.column(n2 - 1).rows(0, n2 - 1) / (n as f64).sqrt();

    // Independent route: c_m = (1/N) Tr(Σ_d [V_d, V_d†] σ_m).
    let comm_sum = system.commutator_sum();
    for m in 0..n2 - 1 {
        let direct = mat::trace_product(&comm_sum, basis.element(m));
        let want = direct.re / n as f64;
        if (c[m] - want).abs() > row_tol || direct.im.abs() > row_tol {
            return Err(Error::Inconsistency(format!(
                "drift vector mismatch at index {m}: column route {:.15e}, commutator route {:.15e}",
                c[m], want
            )));
        }
    }

    Ok(BlochSystem {
        dim: n,
        a,
        c,
        basis: basis.clone(),
    })
}

/// Direct density-matrix evaluation of the generator,
/// −i[H, ρ] + Σ_d (V_d ρ V_d† − ½{V_d†V_d, ρ}); the independent oracle for
/// the Bloch form.
pub fn apply_lindbladian(rho: &ComplexMatrix, system: &LindbladSystem) -> Result<ComplexMatrix> {
    mat::ensure_dim(rho, system.dim())?;
    mat::ensure_finite(rho)?;
    mat::ensure_hermitian(rho)?;
    let h = system.hamiltonian();
    let mut out = mat::commutator(h, rho) * Complex64::new(0.0, -1.0);
    let half = Complex64::new(0.5, 0.0);
    for v in system.lindblad_ops() {
        let vd = v.adjoint();
        let w = &vd * v;
        out += v * rho * vd - mat::anticommutator(&w, rho) * half;
    }
    Ok(out)
}

//! On-disk system description: complex numbers as `[re, im]` pairs,
//! matrices row-major, optional per-operator decay rates folded in as
//! √rate scaling.

use lindbloch::{Complex64, ComplexMatrix, LindbladSystem};
use serde::{Deserialize, Serialize};

pub type ComplexEntry = [f64; 2];
pub type MatrixSpec = Vec<Vec<ComplexEntry>>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SystemSpec {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hamiltonian: Option<MatrixSpec>,
    pub lindblad_ops: Vec<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rates: Option<Vec<f64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InitialState {
    pub rho: MatrixSpec,
}

pub fn to_matrix(spec: &MatrixSpec, dim: usize, what: &str) -> Result<ComplexMatrix, String> {
    if spec.len() != dim || spec.iter().any(|row| row.len() != dim) {
        return Err(format!("{what} must be a {dim}x{dim} matrix"));
    }
    Ok(ComplexMatrix::from_fn(dim, dim, |i, j| {
        Complex64::new(spec[i][j][0], spec[i][j][1])
    }))
}

impl SystemSpec {
    pub fn build(&self) -> Result<LindbladSystem, String> {
        if let Some(rates) = &self.rates {
            if rates.len() != self.lindblad_ops.len() {
                return Err(format!(
                    "rates list has {} entries for {} operators",
                    rates.len(),
                    self.lindblad_ops.len()
                ));
            }
            if let Some(r) = rates.iter().find(|r| !r.is_finite() || **r < 0.0) {
                return Err(format!("rates must be finite and nonnegative, got {r}"));
            }
        }
        let hamiltonian = match &self.hamiltonian {
            Some(h) => to_matrix(h, self.dim, "hamiltonian")?,
            None => ComplexMatrix::zeros(self.dim, self.dim),
        };
        let mut ops = Vec::with_capacity(self.lindblad_ops.len());
        for (k, op) in self.lindblad_ops.iter().enumerate() {
            let mut m = to_matrix(op, self.dim, &format!("lindblad_ops[{k}]"))?;
            if let Some(rates) = &self.rates {
                m *= Complex64::new(rates[k].sqrt(), 0.0);
            }
            ops.push(m);
        }
        LindbladSystem::new(hamiltonian, ops).map_err(|e| e.to_string())
    }
}

impl InitialState {
    pub fn to_matrix(&self, dim: usize) -> Result<ComplexMatrix, String> {
        to_matrix(&self.rho, dim, "rho")
    }
}

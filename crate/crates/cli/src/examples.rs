//! Built-in three-level reference systems, usable anywhere a spec file
//! is accepted.

use crate::spec_format::{MatrixSpec, SystemSpec};

fn real_matrix(rows: &[[f64; 3]; 3]) -> MatrixSpec {
    rows.iter()
        .map(|row| row.iter().map(|&x| [x, 0.0]).collect())
        .collect()
}

pub const NAMES: [&str; 4] = ["example1", "example2", "example3", "example4"];

pub fn by_name(name: &str) -> Option<SystemSpec> {
    let spec = match name {
        // unit upper-triangular decoherence; the non-contractive case
        "example1" => SystemSpec {
            dim: 3,
            hamiltonian: None,
            lindblad_ops: vec![real_matrix(&[[1., 1., 1.], [0., 1., 1.], [0., 0., 1.]])],
            rates: None,
        },
        // two channels that happen to be mutually adjoint: unital
        "example2" => SystemSpec {
            dim: 3,
            hamiltonian: None,
            lindblad_ops: vec![
                real_matrix(&[[0., 0., 1.], [0., 0., 0.], [0., 0., 0.]]),
                real_matrix(&[[0., 0., 0.], [1., 0., 0.], [0., 1., 0.]]),
            ],
            rates: None,
        },
        // one excited level decaying into two ground levels, with
        // explicit (equal) rates
        "example3" => SystemSpec {
            dim: 3,
            hamiltonian: None,
            lindblad_ops: vec![
                real_matrix(&[[0., 0., 1.], [0., 0., 0.], [0., 0., 0.]]),
                real_matrix(&[[0., 0., 0.], [0., 0., 1.], [0., 0., 0.]]),
            ],
            rates: Some(vec![1.0, 1.0]),
        },
        // cascade decay 3 → 2 → 1
        "example4" => SystemSpec {
            dim: 3,
            hamiltonian: None,
            lindblad_ops: vec![real_matrix(&[[0., 1., 0.], [0., 0., 1.], [0., 0., 0.]])],
            rates: None,
        },
        _ => return None,
    };
    Some(spec)
}

/// What `analyze` is expected to report, for eyeball cross-checks.
pub fn expected_findings(name: &str) -> &'static str {
    match name {
        "example1" => {
            "not unital, so not HS-norm contractive; max eigenvalue of A+A^T \
             is about 0.1914 > 0, so not HS-distance contractive either; the \
             unique fixed point is interior and a witness pair exists"
        }
        "example2" => {
            "unital (HS-norm contractive) even though A is not normal; \
             A+A^T <= 0, so HS-distance contractive"
        }
        "example3" => {
            "with equal rates: not unital, but HS-distance contractive; \
             the fixed-point set is three-dimensional (every mixture of the \
             two ground levels is stationary)"
        }
        "example4" => {
            "not unital and A is not normal, yet HS-distance contractive; \
             started from the highest level, the HS norm dips below 1 and \
             then climbs back to 1 at the pure ground state"
        }
        _ => "",
    }
}

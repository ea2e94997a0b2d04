//! Random-ensemble survey of HS-distance contractivity.
//!
//! Draws Ginibre decoherence operators, builds the affine Bloch system for
//! each, and tallies how often the symmetrized spectrum has positive
//! eigenvalues (i.e. the evolution fails to be an HS-distance contraction).
//! Sampling is reproducible: each (dimension, sample-index) pair owns a
//! dedicated ChaCha12 stream keyed off one master seed, so results are
//! independent of thread scheduling and of which other dimensions run.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::analysis::symmetric_spectrum;
use crate::basis::HermitianBasis;
use crate::error::{Error, Result};
use crate::superop::{build_bloch_system, LindbladSystem};
use crate::{Complex64, ComplexMatrix};

/// Recorded in survey output so archived results state how the operators
/// were drawn.
const GENERATOR: &str = "chacha12/rand_distr-0.5-standard-normal";

/// Distribution of the random decoherence operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ensemble {
    /// Entries with independent N(0, 1/2) real and imaginary parts.
    ComplexGinibre,
    /// Real entries, N(0, 1).
    RealGinibre,
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ensemble::ComplexGinibre => "complex-ginibre",
            Ensemble::RealGinibre => "real-ginibre",
        })
    }
}

/// Draws one random operator.  Entries are filled row-major, real part
/// before imaginary part, so a fixed RNG stream always yields the same
/// matrix.
pub fn sample_lindblad(dim: usize, ensemble: Ensemble, rng: &mut impl Rng) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(dim, dim);
    match ensemble {
        Ensemble::ComplexGinibre => {
            let scale = 0.5f64.sqrt();
            for i in 0..dim {
                for j in 0..dim {
                    let re: f64 = rng.sample(StandardNormal);
                    let im: f64 = rng.sample(StandardNormal);
                    m[(i, j)] = Complex64::new(re * scale, im * scale);
                }
            }
        }
        Ensemble::RealGinibre => {
            for i in 0..dim {
                for j in 0..dim {
                    let re: f64 = rng.sample(StandardNormal);
                    m[(i, j)] = Complex64::new(re, 0.0);
                }
            }
        }
    }
    m
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurveyConfig {
    pub dims: Vec<usize>,
    pub samples_per_dim: usize,
    pub seed: u64,
    pub ensemble: Ensemble,
}

impl SurveyConfig {
    fn validate(&self) -> Result<()> {
        if self.dims.is_empty() {
            return Err(Error::BadSurveyConfig("no dimensions requested".into()));
        }
        if let Some(&d) = self.dims.iter().find(|&&d| !(2..=12).contains(&d)) {
            return Err(Error::BadSurveyConfig(format!(
                "dimension {d} outside supported range 2..=12"
            )));
        }
        if self.samples_per_dim == 0 {
            return Err(Error::BadSurveyConfig("samples_per_dim must be ≥ 1".into()));
        }
        Ok(())
    }
}

/// Per-dimension tally.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DimStats {
    pub dim: usize,
    pub samples: usize,
    /// Samples whose symmetrized spectrum has at least one positive
    /// eigenvalue.
    pub non_contractive: usize,
    pub non_contractive_fraction: f64,
    pub max_positive_count: usize,
    /// histogram[k] = number of samples with exactly k positive
    /// eigenvalues; indices 0..N² (the spectrum has N²−1 entries).
    pub histogram: Vec<usize>,
    /// Samples whose drawn operator was normal to within 1e-6 absolute
    /// Frobenius norm of [V, V†] — measure-zero, expected to stay 0.
    pub normal_ops: usize,
    /// Samples where system assembly failed; counted, never dropped.
    pub failures: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurveyResult {
    pub config: SurveyConfig,
    pub generator: String,
    pub per_dim: Vec<DimStats>,
}

impl SurveyResult {
    /// CSV with one column per dimension:
    /// a percentage row of non-contractive samples and a row with the
    /// largest positive-eigenvalue count seen.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("quantity");
        for stats in &self.per_dim {
            out.push_str(&format!(",N={}", stats.dim));
        }
        out.push('\n');
        out.push_str("non_contractive_percent");
        for stats in &self.per_dim {
            out.push_str(&format!(",{}", 100.0 * stats.non_contractive_fraction));
        }
        out.push('\n');
        out.push_str("max_positive_count");
        for stats in &self.per_dim {
            out.push_str(&format!(",{}", stats.max_positive_count));
        }
        out.push('\n');
        out
    }
}

/// One sample: draw V on the stream for (dim, index), assemble, count
/// positive symmetrized eigenvalues.
struct SampleOutcome {
    positive_count: Option<usize>,
    normal_op: bool,
}

fn run_sample(
    dim: usize,
    index: usize,
    seed: u64,
    ensemble: Ensemble,
    basis: &HermitianBasis,
) -> SampleOutcome {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(((dim as u64) << 32) | index as u64);
    let v = sample_lindblad(dim, ensemble, &mut rng);
    let comm = &v * v.adjoint() - v.adjoint() * &v;
    let normal_op = comm.norm() <= 1e-6;
    let positive_count = LindbladSystem::dissipative(dim, vec![v])
        .and_then(|system| build_bloch_system(&system, basis))
        .map(|bloch| symmetric_spectrum(&bloch).positive_count())
        .ok();
    SampleOutcome {
        positive_count,
        normal_op,
    }
}

/// Runs the full survey.  Samples are evaluated in parallel; statistics
/// depend only on the config.
pub fn survey(config: &SurveyConfig) -> Result<SurveyResult> {
    config.validate()?;
    let per_dim = config
        .dims
        .iter()
        .map(|&dim| {
            let basis = HermitianBasis::new(dim)?;
            let outcomes: Vec<SampleOutcome> = (0..config.samples_per_dim)
                .into_par_iter()
                .map(|index| run_sample(dim, index, config.seed, config.ensemble, &basis))
                .collect();
            let mut histogram = vec![0usize; dim * dim];
            let mut failures = 0usize;
            let mut normal_ops = 0usize;
            for outcome in &outcomes {
                if outcome.normal_op {
                    normal_ops += 1;
                }
                match outcome.positive_count {
                    Some(k) => histogram[k] += 1,
                    None => failures += 1,
                }
            }
            let non_contractive: usize = histogram.iter().skip(1).sum();
            let evaluated = config.samples_per_dim - failures;
            let max_positive_count = histogram
                .iter()
                .rposition(|&count| count > 0)
                .unwrap_or(0);
            Ok(DimStats {
                dim,
                samples: config.samples_per_dim,
                non_contractive,
                non_contractive_fraction: if evaluated == 0 {
                    0.0
                } else {
                    non_contractive as f64 / evaluated as f64
                },
                max_positive_count,
                histogram,
                normal_ops,
                failures,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SurveyResult {
        config: config.clone(),
        generator: GENERATOR.to_string(),
        per_dim,
    })
}

mod examples;
mod spec_format;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lindbloch::{
    analyze, build_bloch_system, propagate, steady_state, survey, symmetric_spectrum, time_grid,
    witness_state, BlochSystem, Ensemble, HermitianBasis, LindbladSystem, SurveyConfig,
};
use spec_format::{InitialState, SystemSpec};

/// Contractivity analysis and simulation of Lindblad dynamics in the
/// Bloch-vector representation.
#[derive(Parser)]
#[command(name = "lindbloch", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide HS-norm/HS-distance contractivity and write a JSON report
    Analyze {
        /// Spec file path, or a built-in name (example1..example4)
        spec: String,
        /// Report destination (JSON)
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Integrate the flow and write a trajectory CSV
    Simulate {
        /// Spec file path, or a built-in name (example1..example4)
        spec: String,
        #[command(flatten)]
        start: Start,
        /// End of the time window (starts at 0)
        #[arg(long, default_value_t = 10.0)]
        t_max: f64,
        /// Number of grid points, including t = 0
        #[arg(long, default_value_t = 400)]
        steps: usize,
        /// Trajectory destination (CSV)
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Sample random generators per dimension and tabulate how many are
    /// not HS-distance contractive
    Survey {
        /// Dimensions: an inclusive range "2..8" or a list "2,3,5"
        #[arg(long, default_value = "2..8")]
        dims: String,
        /// Samples per dimension
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// RNG seed (identical runs are byte-identical)
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Operator ensemble: complex-ginibre or real-ginibre
        #[arg(long, default_value = "complex-ginibre")]
        ensemble: String,
        /// Output base path: writes BASE.csv and BASE.json
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write a built-in system as a spec file and print what its
    /// analysis should find
    Examples {
        /// One of example1..example4
        name: String,
        /// Destination (default: <name>.json)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Start {
    /// Initial state file: JSON {"rho": [[[re, im], ...], ...]}
    #[arg(long)]
    initial: Option<PathBuf>,
    /// Start from the fixed point perturbed along the fastest-growing
    /// direction; adds a distance_to_reference column
    #[arg(long)]
    witness: bool,
}

enum Failure {
    /// Unreadable, malformed, or invalid input (exit 2).
    Input(String),
    /// Numerical failure or unwritable output (exit 3).
    Compute(String),
    /// Witness requested for a contractive system (exit 4).
    WitnessContractive,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Compute(_) => 3,
            Failure::WitnessContractive => 4,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(m) | Failure::Compute(m) => m.clone(),
            Failure::WitnessContractive => {
                "the system is HS-distance contractive: no distance-growing \
                 witness pair exists"
                    .to_string()
            }
        }
    }
}

fn classify(e: lindbloch::Error) -> Failure {
    use lindbloch::Error::*;
    match e {
        NotSquare { .. } | DimensionMismatch { .. } | DimensionTooSmall(_) | NonFinite
        | NotHermitian { .. } | BadCoordinateLength { .. } | UnphysicalState { .. }
        | BadTimeGrid | BadSurveyConfig(_) => Failure::Input(e.to_string()),
        other => Failure::Compute(other.to_string()),
    }
}

fn read_to_string(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_output(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Compute(format!("{}: {e}", path.display())))
}

fn load_spec(arg: &str) -> Result<SystemSpec, Failure> {
    if let Some(spec) = examples::by_name(arg) {
        return Ok(spec);
    }
    let text = read_to_string(Path::new(arg))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{arg}: {e}")))
}

fn build_system(arg: &str) -> Result<LindbladSystem, Failure> {
    load_spec(arg)?.build().map_err(Failure::Input)
}

fn bloch_of(system: &LindbladSystem) -> Result<(HermitianBasis, BlochSystem), Failure> {
    let basis = HermitianBasis::new(system.dim()).map_err(classify)?;
    let bloch = build_bloch_system(system, &basis).map_err(classify)?;
    Ok((basis, bloch))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_analyze(spec: &str, output: &Path) -> Result<(), Failure> {
    let system = build_system(spec)?;
    let report = analyze(&system).map_err(classify)?;
    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| Failure::Compute(e.to_string()))?;
    write_output(output, &format!("{json}\n"))?;
    println!(
        "HS-norm contractive: {}; HS-distance contractive: {}",
        yes_no(report.hs_norm_contractive),
        yes_no(report.hs_distance_contractive)
    );
    Ok(())
}

fn cmd_simulate(
    spec: &str,
    start: &Start,
    t_max: f64,
    steps: usize,
    output: &Path,
) -> Result<(), Failure> {
    let system = build_system(spec)?;
    let (basis, bloch) = bloch_of(&system)?;
    let grid = time_grid(t_max, steps).map_err(classify)?;

    let csv = if let Some(initial) = &start.initial {
        let text = read_to_string(initial)?;
        let state: InitialState = serde_json::from_str(&text)
            .map_err(|e| Failure::Input(format!("{}: {e}", initial.display())))?;
        let rho = state.to_matrix(system.dim()).map_err(Failure::Input)?;
        let trace = rho.trace();
        if (trace.re - 1.0).abs() > 1e-10 || trace.im.abs() > 1e-10 {
            return Err(Failure::Input(format!(
                "initial state must have unit trace, got {} + {}i",
                trace.re, trace.im
            )));
        }
        let s0 = basis.bloch_vector(&rho).map_err(classify)?;
        propagate(&bloch, &s0, &grid).map_err(classify)?.to_csv()
    } else {
        if symmetric_spectrum(&bloch).contractive() {
            return Err(Failure::WitnessContractive);
        }
        let witness = witness_state(&bloch)
            .map_err(classify)?
            .expect("non-contractive spectrum must yield a witness or an error");
        let steady = steady_state(&bloch).map_err(classify)?;
        let s0 = &steady.bloch + &witness.direction * witness.alpha;
        let traj = propagate(&bloch, &s0, &grid)
            .map_err(classify)?
            .with_reference_point(&steady.bloch)
            .map_err(classify)?;
        println!(
            "witness: eigenvalue {:.6e}, amplitude {:.6e}, initial d/dt of squared distance {:.6e}",
            witness.eigenvalue, witness.alpha, witness.initial_rate
        );
        format!(
            "# initial_squared_distance_rate = {}\n{}",
            witness.initial_rate,
            traj.to_csv()
        )
    };

    write_output(output, &csv)?;
    println!(
        "wrote {} samples on [0, {t_max}] to {}",
        steps,
        output.display()
    );
    Ok(())
}

fn parse_dims(arg: &str) -> Result<Vec<usize>, Failure> {
    let bad = |_| Failure::Input(format!("cannot parse dimensions from {arg:?}"));
    if let Some((lo, hi)) = arg.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(bad)?;
        let hi: usize = hi.trim().parse().map_err(bad)?;
        if lo > hi {
            return Err(Failure::Input(format!("empty dimension range {arg:?}")));
        }
        return Ok((lo..=hi).collect());
    }
    arg.split(',').map(|p| p.trim().parse().map_err(bad)).collect()
}

fn cmd_survey(
    dims: &str,
    samples: usize,
    seed: u64,
    ensemble: &str,
    output: &Path,
) -> Result<(), Failure> {
    let ensemble = match ensemble {
        "complex-ginibre" => Ensemble::ComplexGinibre,
        "real-ginibre" => Ensemble::RealGinibre,
        other => {
            return Err(Failure::Input(format!(
                "unknown ensemble {other:?}; use complex-ginibre or real-ginibre"
            )))
        }
    };
    let config = SurveyConfig {
        dims: parse_dims(dims)?,
        samples_per_dim: samples,
        seed,
        ensemble,
    };
    let result = survey(&config).map_err(classify)?;
    let csv = result.to_csv();
    let json = serde_json::to_string_pretty(&result)
        .map_err(|e| Failure::Compute(e.to_string()))?;

    let base = output.display();
    write_output(&PathBuf::from(format!("{base}.csv")), &csv)?;
    write_output(&PathBuf::from(format!("{base}.json")), &format!("{json}\n"))?;
    print!("{csv}");
    Ok(())
}

fn cmd_examples(name: &str, output: Option<&Path>) -> Result<(), Failure> {
    let Some(spec) = examples::by_name(name) else {
        return Err(Failure::Input(format!(
            "unknown example {name:?}; available: {}",
            examples::NAMES.join(", ")
        )));
    };
    let json = serde_json::to_string_pretty(&spec)
        .map_err(|e| Failure::Compute(e.to_string()))?;
    let default = PathBuf::from(format!("{name}.json"));
    let path = output.unwrap_or(&default);
    write_output(path, &format!("{json}\n"))?;
    println!("wrote {}", path.display());
    println!("expected analysis: {}", examples::expected_findings(name));
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Analyze { spec, output } => cmd_analyze(spec, output),
        Command::Simulate {
            spec,
            start,
            t_max,
            steps,
            output,
        } => cmd_simulate(spec, start, *t_max, *steps, output),
        Command::Survey {
            dims,
            samples,
            seed,
            ensemble,
            output,
        } => cmd_survey(dims, *samples, *seed, ensemble, output),
        Command::Examples { name, output } => cmd_examples(name, output.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

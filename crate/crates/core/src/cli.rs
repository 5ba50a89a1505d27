//! Command-line front end: dispatches subcommands to the machine catalog
//! and the analysis layer, prints value reports with closed-form references
//! where they exist, and writes sweep CSVs.

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{
    average_copy_quality, cnot_coherence_check, linear_grid, optimize_statedep, sample_bound,
    statedep_objective, sweep_bh_concurrence, sweep_statedep_concurrence,
};
use crate::cloners::{
    apply_cloner, verify_unitarity, BHMachineParams, ClonerSpec, StateDepParams,
};
use crate::error::Error;
use crate::format::fmt_g12;
use crate::matrix::C64;
use crate::measures::{concurrence, hs_distance, l1_coherence};
use crate::state::InputQubit;
use crate::tol::TOL;

/// A failed run, split by exit code: 2 for unusable arguments, 3 for a
/// computation that finished but violated a numeric invariant.
#[derive(Debug)]
pub enum CliFailure {
    Usage(String),
    Numeric(String),
}

impl CliFailure {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliFailure::Usage(_) => 2,
            CliFailure::Numeric(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliFailure::Usage(m) | CliFailure::Numeric(m) => m,
        }
    }
}

impl From<Error> for CliFailure {
    fn from(e: Error) -> Self {
        // Validation-flavored errors are bad input; the invariant-flavored
        // ones mean a computation produced an unusable matrix.
        match e {
            Error::NonFinite(_)
            | Error::DimensionMismatch(_)
            | Error::NotNormalized { .. }
            | Error::InvalidParameter(_)
            | Error::QubitOutOfRange { .. }
            | Error::MatrixTooLarge { .. } => CliFailure::Usage(e.to_string()),
            Error::NotHermitian { .. }
            | Error::NotPositiveSemidefinite { .. }
            | Error::NonUnitTrace { .. } => CliFailure::Numeric(e.to_string()),
        }
    }
}

fn usage(message: impl Into<String>) -> CliFailure {
    CliFailure::Usage(message.into())
}

/// Inclusive evenly spaced grid, written `start:stop:steps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl GridSpec {
    pub fn points(&self) -> crate::error::Result<Vec<f64>> {
        linear_grid(self.start, self.stop, self.steps)
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, steps] = parts.as_slice() else {
            return Err(format!("grid must be start:stop:steps, got '{s}'"));
        };
        let start: f64 = start
            .parse()
            .map_err(|_| format!("bad grid start '{start}'"))?;
        let stop: f64 = stop.parse().map_err(|_| format!("bad grid stop '{stop}'"))?;
        let steps: usize = steps
            .parse()
            .map_err(|_| format!("bad grid step count '{steps}'"))?;
        if steps == 0 {
            return Err("grid needs at least 1 step".to_string());
        }
        if !start.is_finite() || !stop.is_finite() {
            return Err(format!("grid endpoints must be finite, got '{s}'"));
        }
        Ok(GridSpec { start, stop, steps })
    }
}

/// Machine tokens accepted by `--machine`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MachineToken {
    /// Basis copier; incoherent, generates no entanglement
    Wz,
    /// Equatorial-input machine; incoherent at the single-qubit level
    PhaseCov,
    /// Two-parameter machine family (requires --mu and --nu)
    BhGeneral,
    /// State-independent optimal machine
    BhOptimal,
    /// Maximal-entanglement machine (mu = 1/2, nu = 0)
    CoherenceMachine,
    /// Six-amplitude input-dependent machine (--params, optional)
    StateDep,
    /// Plain CNOT of the input onto the blank
    Cnot,
}

#[derive(Args, Debug)]
pub struct MachineSelect {
    /// Machine to run
    #[arg(long, value_enum)]
    pub machine: MachineToken,
    /// Machine parameter mu in [0, 1/2] (bh-general only)
    #[arg(long)]
    pub mu: Option<f64>,
    /// Machine parameter nu in [0, 2*sqrt(mu*(1-2*mu))] (bh-general only)
    #[arg(long)]
    pub nu: Option<f64>,
    /// Six amplitudes a,b1,b2,a_t,b1_t,b2_t (state-dep only; defaults to
    /// the optimized decimals)
    #[arg(long, value_delimiter = ',', num_args = 6, allow_negative_numbers = true)]
    pub params: Option<Vec<f64>>,
}

impl MachineSelect {
    fn build(&self) -> Result<ClonerSpec, CliFailure> {
        if self.machine != MachineToken::BhGeneral && (self.mu.is_some() || self.nu.is_some()) {
            return Err(usage("--mu/--nu apply only to --machine bh-general"));
        }
        if self.machine != MachineToken::StateDep && self.params.is_some() {
            return Err(usage("--params applies only to --machine state-dep"));
        }
        Ok(match self.machine {
            MachineToken::Wz => ClonerSpec::WoottersZurek,
            MachineToken::PhaseCov => ClonerSpec::PhaseCovariant,
            MachineToken::BhOptimal => ClonerSpec::BHOptimal,
            MachineToken::CoherenceMachine => ClonerSpec::CoherenceMachine,
            MachineToken::Cnot => ClonerSpec::CnotEntangler,
            MachineToken::BhGeneral => {
                let (Some(mu), Some(nu)) = (self.mu, self.nu) else {
                    return Err(usage("bh-general requires --mu and --nu"));
                };
                ClonerSpec::BHGeneral(BHMachineParams::new(mu, nu)?)
            }
            MachineToken::StateDep => ClonerSpec::StateDependent(statedep_from(&self.params)?),
        })
    }
}

fn statedep_from(params: &Option<Vec<f64>>) -> Result<StateDepParams, CliFailure> {
    match params {
        None => Ok(StateDepParams::optimized_defaults()),
        Some(p) => {
            let [a, b1, b2, a_t, b1_t, b2_t] = p.as_slice() else {
                return Err(usage("--params takes exactly 6 comma-separated amplitudes"));
            };
            Ok(StateDepParams::new(*a, *b1, *b2, *a_t, *b1_t, *b2_t)?)
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "qclone",
    version,
    about = "Qubit cloning machines as exact isometries, with entanglement \
             and coherence measures on their outputs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one machine on one pure input and report all measures
    Clone(CloneArgs),
    /// Sweep a machine over parameter grids and emit CSV
    Sweep(SweepArgs),
    /// Maximize the state-dependent machine's clone coherence
    Optimize(OptimizeArgs),
    /// Check column orthonormality of a machine's isometry
    Verify(MachineSelect),
    /// Average copy quality over inputs uniform in |alpha|^2
    Average(AverageArgs),
    /// Random-sample the concurrence <= l1-coherence bound
    Bound(BoundArgs),
}

#[derive(Args, Debug)]
pub struct CloneArgs {
    #[command(flatten)]
    pub machine: MachineSelect,
    /// Amplitude of |0>, in [0, 1]
    #[arg(long)]
    pub alpha: f64,
    /// Amplitude of |1>; defaults to sqrt(1 - alpha^2)
    #[arg(long)]
    pub beta: Option<f64>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Machine to sweep: bh-general, state-dep, or cnot
    #[arg(long, value_enum)]
    pub machine: MachineToken,
    /// mu grid start:stop:steps (bh-general only; nu is tied to 1 - 2*mu,
    /// so cells below mu = 1/6 emit NA; default 0:0.5:31)
    #[arg(long)]
    pub mu: Option<GridSpec>,
    /// alpha grid start:stop:steps
    #[arg(long, default_value = "0:1:101")]
    pub alpha: GridSpec,
    /// Six state-dep amplitudes (state-dep only; defaults to the optimized
    /// decimals)
    #[arg(long, value_delimiter = ',', num_args = 6, allow_negative_numbers = true)]
    pub params: Option<Vec<f64>>,
    /// Write the CSV here instead of standard output
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct OptimizeArgs {
    /// Grid resolution seeding the golden-section refinement
    #[arg(long, default_value_t = 64)]
    pub resolution: usize,
}

#[derive(Args, Debug)]
pub struct AverageArgs {
    #[command(flatten)]
    pub machine: MachineSelect,
    /// Midpoint-rule sample count over |alpha|^2
    #[arg(long, default_value_t = 10_000)]
    pub points: usize,
}

#[derive(Args, Debug)]
pub struct BoundArgs {
    /// Number of random states to draw
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    /// Generator seed; equal seeds reproduce bit-identical reports
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

/// Closed-form reference values for one machine at a real input; `None`
/// where no closed form applies.
struct References {
    two_l1: Option<f64>,
    two_concurrence: Option<f64>,
    clone_l1: Option<f64>,
    copy: Option<f64>,
}

fn references(spec: &ClonerSpec, alpha: f64, beta: f64) -> References {
    let ab = alpha * beta;
    match spec {
        ClonerSpec::WoottersZurek => References {
            two_l1: Some(0.0),
            two_concurrence: Some(0.0),
            clone_l1: Some(0.0),
            copy: Some(2.0 * ab * ab),
        },
        ClonerSpec::PhaseCovariant => References {
            // Basis inputs have closed forms; the concurrence reference
            // holds for all real inputs.
            two_l1: (ab == 0.0).then_some(0.5),
            two_concurrence: Some(0.0),
            clone_l1: (ab == 0.0).then_some(0.0),
            copy: None,
        },
        ClonerSpec::BHOptimal => References {
            two_l1: Some((8.0 * ab + 1.0) / 3.0),
            two_concurrence: Some(1.0 / 3.0),
            clone_l1: Some(4.0 * ab / 3.0),
            copy: Some(1.0 / 18.0),
        },
        ClonerSpec::BHGeneral(p) => {
            let (mu, nu) = (p.mu(), p.nu());
            References {
                two_l1: Some(2.0 * mu + 4.0 * ab * nu),
                two_concurrence: (ab == 0.0).then_some(2.0 * mu),
                clone_l1: Some(2.0 * nu * ab),
                copy: Some(
                    2.0 * mu * mu * (1.0 - 4.0 * ab * ab) + 2.0 * ab * ab * (nu - 1.0) * (nu - 1.0),
                ),
            }
        }
        ClonerSpec::CoherenceMachine => References {
            two_l1: Some(1.0),
            two_concurrence: Some(1.0),
            clone_l1: Some(0.0),
            copy: Some(0.5),
        },
        ClonerSpec::StateDependent(p) => References {
            two_l1: None,
            two_concurrence: None,
            clone_l1: Some(statedep_objective(p) * ab),
            copy: None,
        },
        ClonerSpec::CnotEntangler => References {
            two_l1: Some(2.0 * ab),
            two_concurrence: Some(2.0 * ab),
            clone_l1: Some(0.0),
            copy: Some(2.0 * ab * ab),
        },
    }
}

fn print_value(name: &str, value: f64, reference: Option<f64>) {
    match reference {
        Some(r) => println!(
            "{name}: {} (reference {}, deviation {})",
            fmt_g12(value),
            fmt_g12(r),
            fmt_g12((value - r).abs())
        ),
        None => println!("{name}: {}", fmt_g12(value)),
    }
}

fn run_clone(args: &CloneArgs) -> Result<(), CliFailure> {
    let spec = args.machine.build()?;
    let input = match args.beta {
        None => InputQubit::from_alpha(args.alpha)?,
        Some(beta) => {
            if args.alpha < 0.0 || beta < 0.0 {
                return Err(usage(
                    "amplitudes must be nonnegative reals; omit --beta to use sqrt(1 - alpha^2)",
                ));
            }
            InputQubit::new(C64::new(args.alpha, 0.0), C64::new(beta, 0.0))?
        }
    };
    let (alpha, beta) = (input.alpha().re, input.beta().re);
    let output = apply_cloner(&spec, &input)?;
    let refs = references(&spec, alpha, beta);
    println!("machine: {}", spec.token());
    println!("input: alpha = {}, beta = {}", fmt_g12(alpha), fmt_g12(beta));
    print_value(
        "two-qubit l1 coherence",
        l1_coherence(&output.two_qubit),
        refs.two_l1,
    );
    print_value(
        "two-qubit concurrence",
        concurrence(&output.two_qubit)?,
        refs.two_concurrence,
    );
    print_value(
        "clone l1 coherence",
        l1_coherence(&output.clone_a),
        refs.clone_l1,
    );
    print_value(
        "copy quality",
        hs_distance(&input.density(), &output.clone_a)?,
        refs.copy,
    );
    Ok(())
}

fn run_sweep(args: &SweepArgs) -> Result<(), CliFailure> {
    if args.machine != MachineToken::BhGeneral && args.mu.is_some() {
        return Err(usage("--mu grid applies only to --machine bh-general"));
    }
    if args.machine != MachineToken::StateDep && args.params.is_some() {
        return Err(usage("--params applies only to --machine state-dep"));
    }
    let alpha_grid = args.alpha.points()?;
    let result = match args.machine {
        MachineToken::BhGeneral => {
            let mu = args.mu.unwrap_or(GridSpec {
                start: 0.0,
                stop: 0.5,
                steps: 31,
            });
            sweep_bh_concurrence(&mu.points()?, &alpha_grid)?
        }
        MachineToken::StateDep => {
            sweep_statedep_concurrence(&alpha_grid, &statedep_from(&args.params)?)?
        }
        MachineToken::Cnot => cnot_coherence_check(&alpha_grid)?,
        _ => {
            return Err(usage(
                "sweep supports --machine bh-general, state-dep, and cnot",
            ))
        }
    };
    let csv = result.to_csv();
    match &args.output {
        Some(path) => {
            fs::write(path, &csv)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            println!("wrote {} rows to {}", result.rows.len(), path.display());
        }
        None => print!("{csv}"),
    }
    Ok(())
}

fn run_optimize(args: &OptimizeArgs) -> Result<(), CliFailure> {
    let result = optimize_statedep(args.resolution)?;
    let target = std::f64::consts::SQRT_2;
    print_value("best clone coherence coefficient", result.best_value, Some(target));
    println!("theta: {}", fmt_g12(result.theta));
    println!("phi: {}", fmt_g12(result.phi));
    println!(
        "ridge residual |theta + phi - pi/2|: {}",
        fmt_g12(result.ridge_residual)
    );
    let params: Vec<String> = result
        .best_params
        .as_array()
        .iter()
        .map(|&p| fmt_g12(p))
        .collect();
    println!("parameters a,b1,b2,a_t,b1_t,b2_t: {}", params.join(","));
    let deviation = (result.best_value - target).abs();
    if deviation > 1e-6 {
        return Err(CliFailure::Numeric(format!(
            "optimizer stopped {deviation} away from the sqrt(2) optimum"
        )));
    }
    Ok(())
}

fn run_verify(args: &MachineSelect) -> Result<(), CliFailure> {
    let spec = args.build()?;
    let report = verify_unitarity(&spec)?;
    println!("machine: {}", spec.token());
    println!("column 0 norm deviation: {}", fmt_g12(report.norm0_deviation));
    println!("column 1 norm deviation: {}", fmt_g12(report.norm1_deviation));
    println!("column overlap: {}", fmt_g12(report.overlap));
    println!(
        "max violation: {} (gate {})",
        fmt_g12(report.max_violation),
        fmt_g12(TOL.machine_normalization)
    );
    if report.max_violation > TOL.machine_normalization {
        return Err(CliFailure::Numeric(format!(
            "isometry violation {} exceeds the {} gate",
            report.max_violation, TOL.machine_normalization
        )));
    }
    Ok(())
}

fn run_average(args: &AverageArgs) -> Result<(), CliFailure> {
    let spec = args.machine.build()?;
    let average = average_copy_quality(&spec, args.points)?;
    let reference = match &spec {
        ClonerSpec::WoottersZurek => Some(1.0 / 3.0),
        ClonerSpec::BHOptimal => Some(1.0 / 18.0),
        ClonerSpec::CoherenceMachine => Some(0.5),
        // Integrate the copy-quality closed form over |alpha|^2.
        ClonerSpec::BHGeneral(p) => {
            Some((2.0 * p.mu() * p.mu() + (p.nu() - 1.0) * (p.nu() - 1.0)) / 3.0)
        }
        _ => None,
    };
    println!("machine: {}", spec.token());
    println!("points: {}", args.points);
    print_value("average copy quality", average, reference);
    Ok(())
}

fn run_bound(args: &BoundArgs) -> Result<(), CliFailure> {
    let report = sample_bound(args.samples, args.seed)?;
    println!("samples: {}", report.samples);
    println!("seed: {}", args.seed);
    println!("violations: {}", report.violations);
    println!(
        "max concurrence/coherence ratio: {}",
        fmt_g12(report.max_ratio)
    );
    println!(
        "max closed-form deviation: {}",
        fmt_g12(report.max_closed_form_deviation)
    );
    if report.violations > 0 {
        return Err(CliFailure::Numeric(format!(
            "{} samples violated concurrence <= l1 coherence",
            report.violations
        )));
    }
    if report.max_closed_form_deviation > 1e-9 {
        return Err(CliFailure::Numeric(format!(
            "closed-form concurrence disagreed with the spectral route by {}",
            report.max_closed_form_deviation
        )));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<(), CliFailure> {
    match &cli.command {
        Command::Clone(args) => run_clone(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Optimize(args) => run_optimize(args),
        Command::Verify(args) => run_verify(args),
        Command::Average(args) => run_average(args),
        Command::Bound(args) => run_bound(args),
    }
}

//! Command-line front end. Every subcommand reads at most one JSON document
//! and writes exactly one JSON document to standard output.
//!
//! Exit codes: `0` success, `1` constraint or canonicity failure, `2`
//! malformed input, `3` internal consistency failure.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::fock::transformed_vacuum;
use crate::hamiltonian::{diagonalize, fermi_oscillator_image, ExternalFieldHamiltonian};
use crate::transform::{
    isotropic_frame, AxisAngle, BVCoefficients, HaarSampler, KappaTriple, Transform, CANONICAL_TOLERANCE,
};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bvq", version, about = "Single-mode Bogolyubov-Valatin transformations")]
pub struct Cli {
    /// Read the JSON payload from this file instead of standard input.
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Absolute tolerance for canonicity and property checks.
    #[arg(long, global = true, default_value_t = CANONICAL_TOLERANCE)]
    tolerance: f64,

    /// Significant digits for numbers in the output (1 to 17).
    #[arg(long, global = true, default_value_t = 17)]
    precision: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report canonicity residuals of a coefficient set.
    Validate,
    /// Coefficients of the inverse transformation.
    Invert,
    /// Compose {"outer": ..., "inner": ...}; inner is applied first.
    Compose,
    /// The SO(3) matrix of a transformation.
    Rotation,
    /// Coefficients to axis-angle, or axis-angle to coefficients.
    AxisAngle,
    /// The orthonormal frame of a transformation or of a kappa triple.
    Frame,
    /// Reduce {"alpha": ..., "beta": ...} to a single Fermi oscillator.
    Diagonalize,
    /// The Fermi oscillator b†b - 1/2 expanded over (a†a - 1/2, a, a†).
    TransformH,
    /// The transformed vacuum U|0⟩ for an axis-angle payload.
    Vacuum,
    /// Haar-random canonical coefficient sets.
    Sample {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Run the randomized property suite.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComposeRequest {
    outer: BVCoefficients,
    inner: BVCoefficients,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum AxisAngleRequest {
    Coefficients(BVCoefficients),
    AxisAngle(AxisAngle),
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum FrameRequest {
    Coefficients(BVCoefficients),
    Kappa(KappaTriple),
}

#[derive(Debug, Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<&'a crate::transform::ValidationReport>,
}

#[derive(Debug, Serialize)]
struct ErrorDocument<'a> {
    error: ErrorBody<'a>,
}

enum Failure {
    Malformed(String),
    Library(Error),
    /// Already reported on stdout; carries the diagnostic for stderr.
    Reported(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::Library(e)
    }
}

/// Parses `args` and runs the command. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let _ = write!(stderr, "{e}");
            return code;
        }
    };
    if !(1..=17).contains(&cli.precision) {
        let _ = writeln!(stderr, "error: --precision must be between 1 and 17");
        return EXIT_MALFORMED;
    }
    if !(cli.tolerance.is_finite() && cli.tolerance >= 0.0) {
        let _ = writeln!(stderr, "error: --tolerance must be a non-negative number");
        return EXIT_MALFORMED;
    }

    let mut out = Vec::new();
    let result = execute(&cli, stdin, &mut out);
    let code = match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Reported(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_FAILURE
        }
        Err(Failure::Malformed(msg)) => {
            let _ = writeln!(stderr, "error: malformed input: {msg}");
            out.clear();
            let doc = ErrorDocument { error: ErrorBody { kind: "malformed_input", message: msg, report: None } };
            let _ = emit(&mut out, &doc, cli.precision);
            EXIT_MALFORMED
        }
        Err(Failure::Library(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            out.clear();
            let (kind, report, code) = classify(&e);
            let doc = ErrorDocument { error: ErrorBody { kind, message: e.to_string(), report } };
            let _ = emit(&mut out, &doc, cli.precision);
            code
        }
    };
    if stdout.write_all(&out).and_then(|_| stdout.flush()).is_err() {
        return EXIT_INTERNAL;
    }
    code
}

fn classify(e: &Error) -> (&'static str, Option<&crate::transform::ValidationReport>, i32) {
    match e {
        Error::NotCanonical(report) => ("not_canonical", Some(report), EXIT_FAILURE),
        Error::BasisMismatch => ("basis_mismatch", None, EXIT_FAILURE),
        Error::Domain(_) => ("domain", None, EXIT_FAILURE),
        Error::Constraint(_) => ("constraint", None, EXIT_FAILURE),
        Error::NotHermitian(_) => ("not_hermitian", None, EXIT_FAILURE),
        Error::Internal(_) => ("internal", None, EXIT_INTERNAL),
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read, out: &mut Vec<u8>) -> Result<(), Failure> {
    let tol = cli.tolerance;
    let digits = cli.precision;
    let certify = |l: BVCoefficients| Transform::with_tolerance(l, tol);

    match &cli.command {
        Command::Validate => {
            let l: BVCoefficients = read_payload(cli, stdin)?;
            let report = l.validate_within(tol);
            emit(out, &report, digits)?;
            if !report.canonical {
                return Err(Failure::Reported(format!(
                    "coefficients are not canonical (max residual {:.3e})",
                    report.max_residual()
                )));
            }
        }
        Command::Invert => {
            let l = certify(read_payload(cli, stdin)?)?;
            emit(out, &l.invert().coefficients(), digits)?;
        }
        Command::Compose => {
            let req: ComposeRequest = read_payload(cli, stdin)?;
            let outer = certify(req.outer)?;
            let inner = certify(req.inner)?;
            emit(out, &outer.compose(&inner).coefficients(), digits)?;
        }
        Command::Rotation => {
            let l = certify(read_payload(cli, stdin)?)?;
            emit(out, &l.rotation_matrix(), digits)?;
        }
        Command::AxisAngle => match read_payload(cli, stdin)? {
            AxisAngleRequest::Coefficients(l) => emit(out, &certify(l)?.axis_angle(), digits)?,
            AxisAngleRequest::AxisAngle(p) => emit(out, &Transform::from_axis_angle(&p)?.coefficients(), digits)?,
        },
        Command::Frame => {
            let kappa = match read_payload(cli, stdin)? {
                FrameRequest::Coefficients(l) => certify(l)?.kappa(),
                FrameRequest::Kappa(k) => k,
            };
            emit(out, &isotropic_frame(&kappa)?, digits)?;
        }
        Command::Diagonalize => {
            let h: ExternalFieldHamiltonian = read_payload(cli, stdin)?;
            emit(out, &diagonalize(&h)?, digits)?;
        }
        Command::TransformH => {
            let l = certify(read_payload(cli, stdin)?)?;
            emit(out, &fermi_oscillator_image(&l), digits)?;
        }
        Command::Vacuum => {
            let p: AxisAngle = read_payload(cli, stdin)?;
            emit(out, &transformed_vacuum(&p)?, digits)?;
        }
        Command::Sample { seed, count } => {
            if *count == 0 {
                return Err(Failure::Malformed("--count must be at least 1".into()));
            }
            let mut sampler = HaarSampler::new(*seed);
            let samples: Vec<BVCoefficients> = (0..*count).map(|_| sampler.next_transform().coefficients()).collect();
            emit(out, &samples, digits)?;
        }
        Command::Verify { seed, trials, jobs } => {
            if *trials == 0 {
                return Err(Failure::Malformed("--trials must be at least 1".into()));
            }
            let report = verify::run_with_tolerance(*seed, *trials, *jobs, tol);
            emit(out, &report, digits)?;
            if !report.passed {
                let names: Vec<&str> = report.failing().map(|p| p.name.as_str()).collect();
                return Err(Failure::Reported(format!("property check failed: {}", names.join(", "))));
            }
        }
    }
    Ok(())
}

fn read_payload<T: DeserializeOwned>(cli: &Cli, stdin: &mut dyn Read) -> Result<T, Failure> {
    let mut text = String::new();
    match &cli.input {
        Some(path) => {
            text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Malformed(format!("cannot read {}: {e}", path.display())))?;
        }
        None => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Malformed(format!("cannot read standard input: {e}")))?;
        }
    }
    serde_json::from_str(&text).map_err(|e| Failure::Malformed(e.to_string()))
}

fn emit<T: Serialize>(out: &mut Vec<u8>, value: &T, digits: usize) -> Result<(), Failure> {
    let mut ser = serde_json::Serializer::with_formatter(&mut *out, PrecisionFormatter { digits });
    value
        .serialize(&mut ser)
        .map_err(|e| Failure::Library(Error::Internal(format!("serialization failed: {e}"))))?;
    out.push(b'\n');
    Ok(())
}

/// Writes floats rounded to `digits` significant digits, in shortest form.
/// At 17 digits every double round-trips unchanged. Negative zero is
/// written as `0.0`.
struct PrecisionFormatter {
    digits: usize,
}

impl serde_json::ser::Formatter for PrecisionFormatter {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        let rounded = if self.digits >= 17 || !value.is_finite() {
            value
        } else {
            format!("{:.*e}", self.digits - 1, value).parse().unwrap_or(value)
        };
        serde_json::ser::CompactFormatter.write_f64(writer, rounded + 0.0)
    }
}

//! Command-line front end.
//!
//! Exit codes: `0` success or positive verdict, `1` definite negative verdict
//! (not a catalyst, no catalyst found), `2` input error, `3` usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalysis;
use crate::report::ReportDocument;
use crate::search::{self, SearchConfig, SearchMode, SearchOutcome};
use crate::transform;
use crate::{Error, NumericConfig, SchmidtSpectrum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "entcat",
    version,
    about = "Pure-state entanglement transformations, catalysis bounds and catalyst search"
)]
pub struct Cli {
    /// Absolute tolerance for every comparison.
    #[arg(long, global = true, default_value_t = NumericConfig::DEFAULT_EPSILON)]
    pub epsilon: f64,
    /// Seed for randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Kv)]
    pub format: Format,
    /// Divide input spectra by their sum instead of rejecting unnormalized input.
    #[arg(long, global = true)]
    pub renormalize: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `key: value` lines
    Kv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact2,
    Random,
}

/// Spectra are given inline as comma-separated decimals (`0.5,0.3,0.2`) or as
/// a path to a file with one coefficient per line and `#` comments.
#[derive(Debug, Args)]
pub struct Pair {
    /// Source spectrum
    pub source: String,
    /// Target spectrum
    pub target: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a pair and screen it for catalysis.
    Check {
        #[command(flatten)]
        pair: Pair,
    },
    /// Optimal conversion probability, optionally on n copies.
    Pmax {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        copies: Option<usize>,
    },
    /// Test whether a candidate state catalyses the conversion.
    Catalyze {
        #[command(flatten)]
        pair: Pair,
        /// Candidate catalyst spectrum
        catalyst: String,
    },
    /// Search for a catalyst of fixed dimension.
    Search {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Defaults to exact2 for --dim 2 and random otherwise.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[arg(long, default_value_t = SearchConfig::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long = "target-prob", default_value_t = 1.0)]
        target_prob: f64,
    },
    /// Bounds on the smallest coefficient of any working catalyst.
    #[command(group = clap::ArgGroup::new("input").required(true).args(["pmax", "pair"]))]
    Bound {
        #[arg(long)]
        pmax: Option<f64>,
        #[arg(long, num_args = 2, value_names = ["SOURCE", "TARGET"])]
        pair: Option<Vec<String>>,
        #[arg(long)]
        dim: usize,
        #[arg(long = "target-prob", default_value_t = 1.0)]
        target_prob: f64,
    },
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidSearchConfig(_) => EXIT_USAGE,
            _ => EXIT_INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match execute(&cli) {
        Ok((doc, code)) => {
            let text = match cli.format {
                Format::Kv => doc.render(),
                Format::Json => doc.render_json(),
            };
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

fn execute(cli: &Cli) -> Result<(ReportDocument, i32), Failure> {
    if !cli.epsilon.is_finite() || cli.epsilon < 0.0 {
        return Err(Failure::input(format!(
            "--epsilon must be a nonnegative number, got {}",
            cli.epsilon
        )));
    }
    let cfg = NumericConfig::default()
        .with_epsilon(cli.epsilon)
        .with_seed(cli.seed);
    let load = |what: &str, arg: &str| read_spectrum(what, arg, &cfg, cli.renormalize);

    match &cli.command {
        Command::Check { pair } => {
            let src = load("source", &pair.source)?;
            let tgt = load("target", &pair.target)?;
            Ok((check_report(&src, &tgt, &cfg), EXIT_OK))
        }
        Command::Pmax { pair, copies } => {
            let src = load("source", &pair.source)?;
            let tgt = load("target", &pair.target)?;
            Ok((pmax_report(&src, &tgt, copies.unwrap_or(1), &cfg)?, EXIT_OK))
        }
        Command::Catalyze { pair, catalyst } => {
            let src = load("source", &pair.source)?;
            let tgt = load("target", &pair.target)?;
            let cand = load("catalyst", catalyst)?;
            Ok(catalyze_report(&src, &tgt, &cand, &cfg))
        }
        Command::Search {
            pair,
            dim,
            mode,
            samples,
            target_prob,
        } => {
            let src = load("source", &pair.source)?;
            let tgt = load("target", &pair.target)?;
            let mode = mode.unwrap_or(if *dim == 2 {
                Mode::Exact2
            } else {
                Mode::Random
            });
            let sc = SearchConfig {
                dim: *dim,
                mode: match mode {
                    Mode::Exact2 => SearchMode::Exact2,
                    Mode::Random => SearchMode::Random,
                },
                sample_count: *samples,
                target_probability: *target_prob,
                prune: true,
                numeric: cfg,
            };
            Ok(search_report(&src, &tgt, &sc)?)
        }
        Command::Bound {
            pmax,
            pair,
            dim,
            target_prob,
        } => {
            let mut doc = ReportDocument::new();
            doc.text("command", "bound");
            let pmax = match (pmax, pair) {
                (Some(v), _) => *v,
                (None, Some(pair)) => {
                    let src = load("source", &pair[0])?;
                    let tgt = load("target", &pair[1])?;
                    doc.list("source", src.coefficients())
                        .list("target", tgt.coefficients());
                    transform::pmax(&src, &tgt, &cfg)
                }
                (None, None) => unreachable!("clap requires one of --pmax / --pair"),
            };
            bound_report(&mut doc, pmax, *dim, *target_prob)?;
            Ok((doc, EXIT_OK))
        }
    }
}

/// Reads a spectrum given inline or as a file path.
pub fn read_spectrum(
    what: &str,
    arg: &str,
    cfg: &NumericConfig,
    renormalize: bool,
) -> Result<SchmidtSpectrum, String> {
    let inline = arg
        .chars()
        .all(|c| c.is_ascii_digit() || matches!(c, '.' | ',' | 'e' | 'E' | '+' | '-' | ' '));
    let tokens: Vec<String> = if inline {
        arg.split(',').map(|t| t.trim().to_string()).collect()
    } else {
        let text =
            fs::read_to_string(arg).map_err(|e| format!("{what}: cannot read '{arg}': {e}"))?;
        text.lines()
            .map(|line| line.split('#').next().unwrap_or("").trim())
            .filter(|line| !line.is_empty())
            .map(str::to_string)
            .collect()
    };
    let values = tokens
        .iter()
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| format!("{what}: invalid number '{t}'"))
        })
        .collect::<Result<Vec<f64>, String>>()?;
    let built = if renormalize {
        SchmidtSpectrum::renormalized(&values, cfg)
    } else {
        SchmidtSpectrum::new(&values, cfg)
    };
    built.map_err(|e| match e {
        Error::NotNormalized { sum } => {
            format!("{what}: NotNormalized: coefficients sum to {sum}, not 1")
        }
        Error::NegativeEntry { index, value } => {
            format!("{what}: NegativeEntry: coefficient {index} is {value}")
        }
        other => format!("{what}: {other}"),
    })
}

impl From<String> for Failure {
    fn from(message: String) -> Self {
        Failure::input(message)
    }
}

pub fn check_report(
    src: &SchmidtSpectrum,
    tgt: &SchmidtSpectrum,
    cfg: &NumericConfig,
) -> ReportDocument {
    let report = transform::analyze(src, tgt, cfg);
    let screen = catalysis::necessary_conditions(src, tgt, cfg);
    let mut doc = ReportDocument::new();
    doc.text("command", "check")
        .list("source", src.coefficients())
        .list("target", tgt.coefficients())
        .text("classification", report.classification.as_str())
        .real("pmax_forward", report.pmax_forward)
        .real("pmax_backward", report.pmax_backward)
        .real("entropy_source", report.entropy_source)
        .real("entropy_target", report.entropy_target)
        .list("monotones_source", &report.monotones_source)
        .list("monotones_target", &report.monotones_target)
        .flag("largest_coeff_ok", screen.largest_coeff_ok)
        .flag("smallest_coeff_ok", screen.smallest_coeff_ok)
        .flag("entropy_ok", screen.entropy_ok)
        .flag("incomparable", screen.incomparable)
        .flag("marginally_isentropic", screen.marginally_isentropic)
        .flag("passes", screen.passes);
    doc
}

pub fn pmax_report(
    src: &SchmidtSpectrum,
    tgt: &SchmidtSpectrum,
    copies: usize,
    cfg: &NumericConfig,
) -> Result<ReportDocument, Error> {
    let best = transform::pmax_multicopy(src, tgt, copies, cfg)?;
    let mut doc = ReportDocument::new();
    doc.text("command", "pmax")
        .list("source", src.coefficients())
        .list("target", tgt.coefficients())
        .int("copies", copies)
        .real("pmax", best.value)
        .int("witness", best.witness);
    Ok(doc)
}

pub fn catalyze_report(
    src: &SchmidtSpectrum,
    tgt: &SchmidtSpectrum,
    cand: &SchmidtSpectrum,
    cfg: &NumericConfig,
) -> (ReportDocument, i32) {
    let verdict = catalysis::is_catalyst(src, tgt, cand, cfg);
    let mut doc = ReportDocument::new();
    doc.text("command", "catalyze")
        .list("source", src.coefficients())
        .list("target", tgt.coefficients())
        .list("catalyst", cand.coefficients())
        .flag("is_catalyst", verdict.is_catalyst);
    match verdict.first_violation {
        Some(l) => doc.int("first_violation", l),
        None => doc.text("first_violation", "none"),
    };
    doc.real("bound_value", verdict.bound_value)
        .real("pmax_pair", verdict.pmax_pair)
        .flag("saturated", verdict.saturated)
        .real("quasi_pmax", catalysis::quasi_pmax(src, tgt, cand, cfg));
    let code = if verdict.is_catalyst {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    (doc, code)
}

pub fn search_report(
    src: &SchmidtSpectrum,
    tgt: &SchmidtSpectrum,
    sc: &SearchConfig,
) -> Result<(ReportDocument, i32), Error> {
    let outcome = search::search(src, tgt, sc)?;
    let mut doc = ReportDocument::new();
    doc.text("command", "search")
        .list("source", src.coefficients())
        .list("target", tgt.coefficients())
        .text(
            "mode",
            match sc.mode {
                SearchMode::Exact2 => "exact2",
                SearchMode::Random => "random",
            },
        )
        .int("dim", sc.dim)
        .real("target_probability", sc.target_probability);
    if sc.mode == SearchMode::Random {
        doc.push("seed", crate::report::Value::Int(sc.numeric.seed))
            .int("samples", sc.sample_count);
    }
    doc.text("outcome", outcome.kind());
    match &outcome {
        SearchOutcome::Found {
            catalyst,
            verdict,
            probability,
            samples_tested,
            samples_pruned,
        } => {
            doc.list("catalyst", catalyst.coefficients())
                .flag("is_catalyst", verdict.is_catalyst)
                .real("probability", *probability)
                .real("bound_value", verdict.bound_value)
                .real("pmax_pair", verdict.pmax_pair)
                .flag("saturated", verdict.saturated)
                .int("samples_tested", *samples_tested)
                .int("samples_pruned", *samples_pruned);
        }
        SearchOutcome::NonExistence {
            breakpoints_examined,
        } => {
            doc.flag("certified", true)
                .int("breakpoints_examined", *breakpoints_examined)
                .int("interval_count", 0);
        }
        SearchOutcome::FoundInterval {
            intervals,
            breakpoints_examined,
        } => {
            doc.int("breakpoints_examined", *breakpoints_examined)
                .int("interval_count", intervals.len());
            for (i, iv) in intervals.iter().enumerate() {
                doc.list(&format!("interval_{}", i + 1), &[iv.lower, iv.upper]);
            }
        }
        SearchOutcome::NotFound {
            samples_tested,
            samples_pruned,
            screen_failures,
        } => {
            doc.int("samples_tested", *samples_tested)
                .int("samples_pruned", *samples_pruned)
                .text(
                    "screen_failures",
                    if screen_failures.is_empty() {
                        "none".to_string()
                    } else {
                        screen_failures.join(",")
                    },
                );
        }
        SearchOutcome::TrivialAlreadyTransformable => {}
    }
    let code = if outcome.is_success() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    Ok((doc, code))
}

pub fn bound_report(
    doc: &mut ReportDocument,
    pmax: f64,
    dim: usize,
    target_prob: f64,
) -> Result<(), Error> {
    let scaled = catalysis::corollary2_bound(pmax, target_prob, dim)?;
    doc.real("pmax", pmax)
        .int("dim", dim)
        .real("target_probability", target_prob)
        .real("max_scaled_smallest_coefficient", scaled)
        .real("max_smallest_coefficient", scaled / dim as f64);
    if dim == 2 {
        doc.real(
            "min_largest_coefficient",
            catalysis::min_largest_coefficient_p2(scaled),
        );
    }
    Ok(())
}

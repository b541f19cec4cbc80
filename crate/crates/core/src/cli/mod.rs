//! Command-line front end.
//!
//! Every subcommand prints one JSON document to standard output. Indices are
//! 0-based and rationals are strings. Exit status is 0 on success, 1 for bad
//! input or usage, 2 when an internal consistency check fails.

mod format;
mod random;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::extremal::{extremal_instance, extremal_min_size, extremal_witness, ExtremalSpec};
use crate::numeric::Rational;
use crate::oracle::{brute_min_rich, DEFAULT_MAX_N};
use crate::selector::{
    alon_bound, is_rich, select_rich_subset, sw_bound, target_vector, upper_bound_f, Instance,
    TargetRatio, TraceStep,
};

pub use format::{
    emit_instance, format_rational, format_vector, parse_instance, parse_ratio, parse_rational,
    InstanceFile,
};
pub use random::random_instance;

#[derive(Debug, Parser)]
#[command(
    name = "rich-subset",
    version,
    about = "Exact small rich subsets of nonnegative vectors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Select a rich subset within the size bound.
    Select {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        /// Include the recursion trace in the report.
        #[arg(long)]
        trace: bool,
    },
    /// Print the bound together with the two comparison bounds.
    Bound {
        #[arg(short = 'N', long = "n")]
        n: usize,
        #[arg(short = 'd', long = "d")]
        d: usize,
        #[arg(short = 'a', long = "a")]
        a: String,
    },
    /// Build the tight instance for the given parameters.
    Extremal {
        #[arg(short = 'd', long = "d")]
        d: usize,
        #[arg(short = 'a', long = "a")]
        a: String,
        #[arg(short = 'N', long = "n")]
        n: usize,
        /// Write the instance file here instead of embedding it in the report.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Exact minimum rich-set size by exhaustive search.
    Oracle {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        #[arg(long = "max-n", default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Check whether a comma-separated index list is rich.
    Verify {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        indices: String,
    },
    /// Generate a seeded random instance file.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(short = 'N', long = "n")]
        n: usize,
        #[arg(short = 'd', long = "d")]
        d: usize,
        #[arg(short = 'a', long = "a")]
        a: String,
        #[arg(long = "max-den", default_value_t = 10)]
        max_den: u64,
        #[arg(long = "zero-density", default_value = "0")]
        zero_density: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Table of the three bounds for every instance size from 1 to N.
    CompareBounds {
        #[arg(short = 'N', long = "n")]
        n: usize,
        #[arg(short = 'd', long = "d")]
        d: usize,
        #[arg(short = 'a', long = "a")]
        a: String,
    },
}

/// Report emitted by `select` and `verify`.
#[derive(Debug, Serialize)]
pub struct Report {
    pub indices: Vec<usize>,
    pub size: usize,
    pub bound_f: usize,
    pub sum: Vec<String>,
    pub target: Vec<String>,
    pub rich: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceStep>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds_comparison: Option<BoundsComparison>,
}

#[derive(Debug, Serialize)]
pub struct BoundsComparison {
    pub f: usize,
    pub sw: String,
    pub alon: String,
}

impl BoundsComparison {
    pub fn new(n: usize, d: usize, ratio: TargetRatio) -> Self {
        BoundsComparison {
            f: upper_bound_f(n, d, ratio),
            sw: format_rational(&sw_bound(n, d, ratio)),
            alon: format_rational(&alon_bound(n, d, ratio)),
        }
    }
}

impl Report {
    /// Richness is recomputed here rather than trusted from the caller.
    pub fn new(inst: &Instance, ratio: TargetRatio, indices: &[usize]) -> Result<Self> {
        let rich = is_rich(inst, ratio, indices)?;
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        Ok(Report {
            size: sorted.len(),
            bound_f: upper_bound_f(inst.n(), inst.d(), ratio),
            sum: format_vector(&inst.subset_sum(&sorted)),
            target: format_vector(&target_vector(inst, ratio)),
            rich,
            indices: sorted,
            trace: None,
            bounds_comparison: None,
        })
    }
}

/// Runs one invocation; `args` includes the program name. Returns the exit
/// status.
pub fn run_command<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Internal(_) => 2,
                _ => 1,
            }
        }
    }
}

fn read_instance(path: &Path) -> Result<(Instance, TargetRatio)> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
    parse_instance(&text)
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn parse_indices(text: &str) -> Result<Vec<usize>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Validation(format!("bad index {tok:?} in --indices")))
        })
        .collect()
}

fn execute(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Select { input, trace } => {
            let (inst, ratio) = read_instance(&input)?;
            let selection = select_rich_subset(&inst, ratio)?;
            let mut report = Report::new(&inst, ratio, &selection.indices)?;
            if !report.rich || report.size > report.bound_f {
                return Err(Error::Internal("selection failed re-verification".into()));
            }
            report.bounds_comparison = Some(BoundsComparison::new(inst.n(), inst.d(), ratio));
            if trace {
                report.trace = Some(selection.trace);
            }
            write_json(out, &report)
        }
        Command::Bound { n, d, a } => {
            let ratio = checked_params(n, d, &a)?;
            let b = BoundsComparison::new(n, d, ratio);
            write_json(
                out,
                &json!({ "n": n, "d": d, "a": ratio.to_string(), "f": b.f, "sw": b.sw, "alon": b.alon }),
            )
        }
        Command::Extremal { d, a, n, output } => {
            let ratio = checked_params(n, d, &a)?;
            let spec = ExtremalSpec::new(d, n, ratio)?;
            let inst = extremal_instance(&spec)?;
            let mut report = json!({
                "d": d,
                "n": n,
                "a": ratio.to_string(),
                "r": spec.r,
                "m": spec.m,
                "predicted_min": extremal_min_size(&spec)?,
                "bound_f": upper_bound_f(n, d, ratio),
                "tight_range": spec.in_tight_range(),
                "witness": extremal_witness(&spec)?,
            });
            match output {
                Some(path) => {
                    fs::write(&path, emit_instance(&inst, ratio))?;
                    report["output"] = Value::String(path.display().to_string());
                }
                None => {
                    report["instance"] =
                        serde_json::to_value(InstanceFile::from_instance(&inst, ratio))?;
                }
            }
            write_json(out, &report)
        }
        Command::Oracle { input, max_n } => {
            let (inst, ratio) = read_instance(&input)?;
            let res = brute_min_rich(&inst, ratio, max_n)?;
            write_json(
                out,
                &json!({
                    "min_size": res.min_size,
                    "witness": res.witness,
                    "explored": res.explored,
                    "bound_f": upper_bound_f(inst.n(), inst.d(), ratio),
                }),
            )
        }
        Command::Verify { input, indices } => {
            let (inst, ratio) = read_instance(&input)?;
            let indices = parse_indices(&indices)?;
            let report = Report::new(&inst, ratio, &indices).map_err(|e| match e {
                Error::InvalidArgument(m) => Error::Validation(m),
                other => other,
            })?;
            write_json(out, &report)
        }
        Command::Random {
            seed,
            n,
            d,
            a,
            max_den,
            zero_density,
            output,
        } => {
            let ratio = parse_ratio(&a)?;
            let density = parse_rational(&zero_density)?;
            let inst = random_instance(seed, n, d, max_den, &density)
                .map_err(|e| Error::Validation(e.to_string()))?;
            let text = emit_instance(&inst, ratio);
            match output {
                Some(path) => {
                    fs::write(&path, &text)?;
                    write_json(
                        out,
                        &json!({ "output": path.display().to_string(), "n": n, "d": d, "a": ratio.to_string() }),
                    )
                }
                None => {
                    out.write_all(text.as_bytes())?;
                    Ok(())
                }
            }
        }
        Command::CompareBounds { n, d, a } => {
            let ratio = checked_params(n, d, &a)?;
            let rows: Vec<Value> = (1..=n)
                .map(|k| {
                    let f = upper_bound_f(k, d, ratio);
                    let sw = sw_bound(k, d, ratio);
                    let alon = alon_bound(k, d, ratio);
                    let f_rat = Rational::from_integer(f.into());
                    json!({
                        "n": k,
                        "f": f,
                        "sw": format_rational(&sw),
                        "alon": format_rational(&alon),
                        "f_le_sw": f_rat <= sw,
                        "f_le_alon": f_rat <= alon,
                    })
                })
                .collect();
            write_json(
                out,
                &json!({ "d": d, "a": ratio.to_string(), "rows": rows }),
            )
        }
    }
}

fn checked_params(n: usize, d: usize, a: &str) -> Result<TargetRatio> {
    if n == 0 || d == 0 {
        return Err(Error::Validation("N and d must be positive".into()));
    }
    parse_ratio(a)
}

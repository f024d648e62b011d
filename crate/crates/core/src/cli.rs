//! Command-line front end.
//!
//! Exit codes: 0 when the command succeeds and the checked property holds,
//! 1 when a property is violated (the witness is printed), 2 for usage,
//! parse and precondition errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::exchange::ExchangeMatrix;
use crate::framed::FramedSeed;
use crate::green::{brute_force_green_search, source_mgs};
use crate::matrix::IntMatrix;
use crate::search::SearchReport;
use crate::sequence::MutationSequence;
use crate::unfolding::{build_truncation, verify_unfolding_commutation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cluster-unfold", version, about = "Seed mutation, sign-coherence, green sequences and unfoldings")]
pub struct RunConfig {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true, visible_alias = "json-out", alias = "json_out")]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Skew-symmetry, symmetrizer, sign-skew-symmetry and acyclicity.
    Classify { input: PathBuf },
    /// Mutate the framed seed along a sequence and print the result.
    Mutate {
        input: PathBuf,
        #[arg(short = 's', long = "seq")]
        sequence: MutationSequence,
    },
    /// Maximal green sequence from the source numbering.
    Mgs {
        input: PathBuf,
        /// Cross-check against an exhaustive search over green directions.
        #[arg(long)]
        brute_force: bool,
        /// Longest sequence the exhaustive search tries (default: n).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_len: Option<u64>,
    },
    /// Exhaustive sign-coherence check of c-vectors.
    Coherence {
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        depth: u64,
    },
    /// Build a truncation of the unfolding quiver.
    Unfold {
        input: PathBuf,
        #[arg(long = "m", value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long)]
        framed: bool,
        /// Write a Graphviz rendering to this file ("-" for standard output).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check that folding commutes with orbit-mutation along a sequence.
    VerifyUnfolding {
        input: PathBuf,
        #[arg(short = 's', long = "seq", default_value = "")]
        sequence: MutationSequence,
        #[arg(long = "m", value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
    },
    /// Exhaustive check that mutation preserves sign-skew-symmetry.
    TotalMutability {
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        depth: u64,
    },
}

/// What an input file turned out to contain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Matrix(ExchangeMatrix),
    Seed(FramedSeed),
}

impl Input {
    pub fn parse(text: &str) -> Result<Self, Error> {
        if text.trim_start().starts_with('{') {
            FramedSeed::from_document(text).map(Input::Seed)
        } else {
            ExchangeMatrix::parse(text).map(Input::Matrix)
        }
    }

    pub fn exchange_matrix(&self) -> &ExchangeMatrix {
        match self {
            Input::Matrix(b) => b,
            Input::Seed(s) => s.b(),
        }
    }

    /// The seed itself, or `(B, I)` for a bare matrix.
    pub fn seed(&self) -> Result<FramedSeed, Error> {
        match self {
            Input::Matrix(b) => FramedSeed::new(b.clone(), IntMatrix::identity(b.n())),
            Input::Seed(s) => Ok(s.clone()),
        }
    }
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn load(path: &Path) -> Result<Input, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Input::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn print_json(out: &mut impl Write, value: &impl Serialize) -> io::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    writeln!(out, "{text}")
}

fn bound(v: u64) -> usize {
    usize::try_from(v).unwrap_or(usize::MAX)
}

/// Runs one parsed command, writing its report to `out`. Diagnostics for exit
/// code 2 also go to `out`, prefixed with `error:`.
pub fn run(config: &RunConfig, out: &mut impl Write) -> i32 {
    match dispatch(config, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(out, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(out, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Parses `args` (program name first) and runs the command. Help and
/// version requests exit 0; malformed invocations exit 2.
pub fn run_from_args<I, T>(args: I, out: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, out),
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            }
        }
    }
}

fn dispatch(config: &RunConfig, out: &mut impl Write) -> Result<i32, Failure> {
    let json = config.json;
    match &config.command {
        Command::Classify { input } => {
            let b = load(input)?.exchange_matrix().clone();
            let report = b.classify();
            if json {
                print_json(out, &report)?;
            } else {
                let sym = match &report.symmetrizer {
                    Some(d) => format!("{d:?}"),
                    None => "none".into(),
                };
                writeln!(out, "n: {}", b.n())?;
                writeln!(out, "skew-symmetric: {}", report.skew_symmetric)?;
                writeln!(out, "symmetrizer: {sym}")?;
                writeln!(out, "sign-skew-symmetric: {}", report.sign_skew_symmetric)?;
                writeln!(out, "acyclic: {}", report.acyclic)?;
            }
            Ok(EXIT_OK)
        }
        Command::Mutate { input, sequence } => {
            let seed = load(input)?.seed()?.apply_sequence(sequence)?;
            if json {
                write!(out, "{}", seed.to_document())?;
            } else {
                writeln!(out, "sequence: {sequence}")?;
                write!(out, "{seed}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Mgs {
            input,
            brute_force,
            max_len,
        } => {
            let b = load(input)?.exchange_matrix().clone();
            let report = match source_mgs(&b) {
                Ok(r) => r,
                Err(e @ Error::GreenVerification(_)) => {
                    writeln!(out, "violation: {e}")?;
                    return Ok(EXIT_VIOLATED);
                }
                Err(e) => return Err(e.into()),
            };
            let mut code = EXIT_OK;
            let mut cross = None;
            if *brute_force {
                let max_len = max_len.map_or(b.n(), bound);
                let all = brute_force_green_search(&FramedSeed::extend(&b)?, max_len)?;
                let found = all.iter().any(|r| r.sequence == report.sequence);
                if !found {
                    code = EXIT_VIOLATED;
                }
                let sequences: Vec<String> = all.iter().map(|r| r.sequence.to_string()).collect();
                cross = Some((max_len, sequences, found));
            }
            if json {
                let mut value = serde_json::to_value(&report).expect("reports serialize");
                if let Some((max_len, sequences, found)) = &cross {
                    value["brute_force"] = json!({
                        "max_len": max_len,
                        "sequences": sequences,
                        "contains_source_sequence": found,
                    });
                }
                print_json(out, &value)?;
            } else {
                writeln!(out, "sequence: {}", report.sequence)?;
                writeln!(out, "green: {}", report.is_green_sequence)?;
                writeln!(out, "maximal: {}", report.is_maximal)?;
                write!(out, "final C =\n{}", report.final_c())?;
                if let Some((max_len, sequences, found)) = &cross {
                    writeln!(
                        out,
                        "brute force (length <= {max_len}): {} maximal green sequences",
                        sequences.len()
                    )?;
                    for s in sequences {
                        writeln!(out, "  {s}")?;
                    }
                    writeln!(out, "source sequence found: {found}")?;
                }
            }
            Ok(code)
        }
        Command::Coherence { input, depth } => {
            let seed = match load(input)? {
                Input::Matrix(b) => FramedSeed::extend(&b)?,
                Input::Seed(s) => s,
            };
            let report = seed.check_sign_coherence(bound(*depth))?;
            search_verdict(out, json, "sign-coherent", *depth, &report)
        }
        Command::TotalMutability { input, depth } => {
            let b = load(input)?.exchange_matrix().clone();
            let report = b.check_total_mutability(bound(*depth))?;
            search_verdict(out, json, "sign-skew-symmetric", *depth, &report)
        }
        Command::Unfold {
            input,
            m,
            framed,
            dot,
        } => {
            let b = load(input)?.exchange_matrix().clone();
            let q = build_truncation(&b, bound(*m), *framed)?;
            let max_depth = q.vertices().iter().map(|v| v.depth).max().unwrap_or(0);
            let rings: Vec<usize> = (0..=max_depth)
                .map(|d| q.vertices().iter().filter(|v| v.is_mutable() && v.depth == d).count())
                .collect();
            let gamma = q.check_gamma_conditions();
            let folds_back = match q.fold(None) {
                Ok(f) => f.b == b,
                Err(_) => false,
            };
            if let Some(path) = dot {
                if path.as_os_str() == "-" {
                    write!(out, "{}", q.to_dot())?;
                } else {
                    fs::write(path, q.to_dot()).map_err(|e| {
                        Failure::Usage(format!("cannot write {}: {e}", path.display()))
                    })?;
                }
            }
            if json {
                print_json(
                    out,
                    &json!({
                        "mutable_vertices": q.mutable_count(),
                        "frozen_vertices": q.frozen_count(),
                        "arrows": q.arrow_count(),
                        "interior_radius": q.interior_radius(),
                        "complete": q.is_complete(),
                        "rings": rings,
                        "gamma": gamma,
                        "folds_back": folds_back,
                    }),
                )?;
            } else if dot.as_deref().is_none_or(|p| p.as_os_str() != "-") {
                writeln!(out, "truncation depth: {m}{}", if *framed { " (framed)" } else { "" })?;
                writeln!(
                    out,
                    "vertices: {} mutable, {} frozen",
                    q.mutable_count(),
                    q.frozen_count()
                )?;
                writeln!(out, "arrows: {}", q.arrow_count())?;
                let rings: Vec<String> = rings.iter().map(usize::to_string).collect();
                writeln!(out, "rings: {}", rings.join(","))?;
                writeln!(out, "interior radius: {}", q.interior_radius())?;
                writeln!(out, "loop-free: {}", gamma.loop_free)?;
                writeln!(out, "2-cycle-free: {}", gamma.two_cycle_free)?;
                writeln!(out, "folds back to B: {folds_back}")?;
            }
            Ok(if gamma.ok() { EXIT_OK } else { EXIT_VIOLATED })
        }
        Command::VerifyUnfolding { input, sequence, m } => {
            let b = load(input)?.exchange_matrix().clone();
            let report = verify_unfolding_commutation(&b, sequence, bound(*m))?;
            if json {
                print_json(out, &report)?;
            } else {
                writeln!(out, "sequence: {sequence}")?;
                writeln!(out, "prefixes checked: {}", report.steps_checked)?;
                writeln!(out, "commutes: {}", report.ok)?;
                if let Some(d) = &report.first_divergence {
                    writeln!(out, "first divergence: step {} ({:?}): {}", d.step, d.kind, d.detail)?;
                }
            }
            Ok(if report.ok { EXIT_OK } else { EXIT_VIOLATED })
        }
    }
}

fn search_verdict(
    out: &mut impl Write,
    json: bool,
    property: &str,
    depth: u64,
    report: &SearchReport,
) -> Result<i32, Failure> {
    if json {
        print_json(out, report)?;
    } else {
        writeln!(out, "{property} up to depth {depth}: {}", report.ok)?;
        writeln!(out, "seeds visited: {}", report.visited)?;
        if let Some(seq) = &report.counterexample {
            writeln!(out, "counterexample: {seq}")?;
        }
    }
    Ok(if report.ok { EXIT_OK } else { EXIT_VIOLATED })
}

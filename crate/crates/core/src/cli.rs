//! Batch command line. `run` is the whole program; the binary only forwards
//! `std::env::args` and the standard streams.
//!
//! Exit status: 0 on success, 1 on a validation or I/O error, 2 on a usage error.

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{set_op, BipolarFuzzySet, NormPair, SetOp};
use crate::error::Error;
use crate::io::{
    read_dataset, write_audit, write_dataset, write_report, AggregateRow, ElementRow, Format,
    MeasureReport, Metadata, PairwiseMatrix, Precision,
};
use crate::measures::audit::{axiom_audit, matches_paper, AuditTarget};
use crate::measures::{
    border_cardinality, cardinality_point, cardinality_set, entropy_point, entropy_set,
    CardinalityKind, EntropyKind, VectorNorm,
};
use crate::metrics::{distance_matrix, set_distance, similarity_matrix, Aggregation, DistanceKind};

#[derive(Debug, Parser)]
#[command(name = "bipolar", version, about = "Measures for bipolar fuzzy sets")]
pub struct Cli {
    /// Render reals with two decimals, cut the way published tables print them.
    #[arg(long, global = true)]
    paper_rounding: bool,

    /// Input format; inferred from the file extension when absent.
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<Format>,

    /// Report format.
    #[arg(long = "to", global = true, value_parser = parse_format, default_value = "csv")]
    output_format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose every element into (t, f, u, c, i) and (tau, omega).
    Penta { input: PathBuf },
    /// Pairwise distance matrix of one set, or the distance between two sets.
    Dist(PairArgs),
    /// Pairwise similarity matrix of one set, or the similarity between two sets.
    Sim(PairArgs),
    /// Set and border cardinality.
    Card {
        input: PathBuf,
        #[arg(long, value_parser = parse_cardinality)]
        kind: CardinalityKind,
    },
    /// Set entropy.
    Entropy {
        input: PathBuf,
        #[arg(long, value_parser = parse_entropy)]
        kind: EntropyKind,
        /// Norm for the vector entropy `gm`.
        #[arg(long, value_parser = parse_norm)]
        norm: Option<VectorNorm>,
    },
    /// Apply a set operator.
    Setop {
        #[arg(value_enum)]
        op: OpName,
        a: PathBuf,
        b: Option<PathBuf>,
        #[arg(long, value_parser = parse_norms, default_value = "minmax")]
        tnorm: NormPair,
    },
    /// Check a cardinality or entropy measure against its axioms.
    Audit {
        #[arg(long)]
        kind: String,
        /// Which family `--kind` names; needed for pe, ph and pp.
        #[arg(long, value_enum)]
        measure: Option<MeasureFamily>,
        /// Exit 1 when the outcome differs from the published pass/fail pattern.
        #[arg(long)]
        expect_paper: bool,
    },
}

#[derive(Debug, Args)]
struct PairArgs {
    input: PathBuf,
    second: Option<PathBuf>,
    #[arg(long, value_parser = parse_distance)]
    kind: DistanceKind,
    /// How elementwise values combine when two sets are given.
    #[arg(long, value_parser = parse_aggregation, default_value = "mean")]
    aggregation: Aggregation,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OpName {
    Union,
    Intersection,
    Complement,
    Dual,
    Negation,
}

impl From<OpName> for SetOp {
    fn from(op: OpName) -> Self {
        match op {
            OpName::Union => SetOp::Union,
            OpName::Intersection => SetOp::Intersection,
            OpName::Complement => SetOp::Complement,
            OpName::Dual => SetOp::Dual,
            OpName::Negation => SetOp::Negation,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MeasureFamily {
    Card,
    Entropy,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}
fn parse_cardinality(s: &str) -> Result<CardinalityKind, String> {
    s.parse()
}
fn parse_entropy(s: &str) -> Result<EntropyKind, String> {
    s.parse()
}
fn parse_norm(s: &str) -> Result<VectorNorm, String> {
    s.parse()
}
fn parse_norms(s: &str) -> Result<NormPair, String> {
    s.parse()
}
fn parse_distance(s: &str) -> Result<DistanceKind, String> {
    s.parse()
}
fn parse_aggregation(s: &str) -> Result<Aggregation, String> {
    s.parse()
}

enum Failure {
    Usage(String),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// Runs the program on `argv` (including the program name).
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli) {
        Ok(bytes) => match emit(&cli, &bytes, stdout) {
            Ok(()) => 0,
            Err(msg) => {
                let _ = writeln!(stderr, "error: {msg}");
                1
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn emit(cli: &Cli, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), String> {
    match &cli.out {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| format!("cannot write `{}`: {e}", path.display())),
        None => stdout.write_all(bytes).map_err(|e| e.to_string()),
    }
}

fn precision(cli: &Cli) -> Precision {
    if cli.paper_rounding {
        Precision::Paper
    } else {
        Precision::default()
    }
}

fn load(cli: &Cli, path: &Path) -> Result<BipolarFuzzySet, Failure> {
    let file = File::open(path)
        .map_err(|e| Failure::Invalid(format!("cannot read `{}`: {e}", path.display())))?;
    let format = cli.format.unwrap_or_else(|| Format::from_path(path));
    read_dataset(BufReader::new(file), format)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn dataset_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn decompose(set: &BipolarFuzzySet) -> Vec<ElementRow> {
    set.iter()
        .map(|(id, x)| ElementRow::decompose(id, x))
        .collect()
}

fn execute(cli: &Cli) -> Result<Vec<u8>, Failure> {
    let precision = precision(cli);
    let report = match &cli.command {
        Command::Penta { input } => {
            let set = load(cli, input)?;
            let mut report = MeasureReport::new(Metadata::new(dataset_name(input), "penta"));
            report.elements = decompose(&set);
            report
        }
        Command::Dist(args) => pairwise(cli, args, false)?,
        Command::Sim(args) => pairwise(cli, args, true)?,
        Command::Card { input, kind } => {
            let set = load(cli, input)?;
            let mut meta = Metadata::new(dataset_name(input), "card");
            meta.cardinality_kinds = vec![kind.code().to_string()];
            let mut report = MeasureReport::new(meta);
            for (id, x) in set.iter() {
                let mut row = ElementRow::decompose(id, x);
                let n = cardinality_point(*kind, x)
                    .map_err(|e| Failure::Invalid(format!("element `{id}`: {e}")))?;
                row.cardinality.insert(kind.code().to_string(), Some(n));
                report.elements.push(row);
            }
            report.aggregates = vec![
                aggregate(
                    "set_cardinality",
                    kind.code(),
                    cardinality_set(*kind, &set)?,
                ),
                aggregate(
                    "border_cardinality",
                    kind.code(),
                    border_cardinality(*kind, &set)?,
                ),
            ];
            report
        }
        Command::Entropy { input, kind, norm } => {
            let kind = match (*kind, norm) {
                (EntropyKind::GrzegorzewskiMrowka(_), Some(norm)) => {
                    EntropyKind::GrzegorzewskiMrowka(*norm)
                }
                (_, Some(_)) => {
                    return Err(Failure::Usage("--norm applies to --kind gm only".into()))
                }
                (kind, None) => kind,
            };
            let set = load(cli, input)?;
            let label = kind.to_string();
            let mut meta = Metadata::new(dataset_name(input), "entropy");
            meta.entropy_kinds = vec![label.clone()];
            let mut report = MeasureReport::new(meta);
            for (id, x) in set.iter() {
                let mut row = ElementRow::decompose(id, x);
                let e = entropy_point(kind, x)
                    .map_err(|e| Failure::Invalid(format!("element `{id}`: {e}")))?;
                row.entropy.insert(label.clone(), Some(e.scalar));
                report.elements.push(row);
            }
            report.aggregates = vec![aggregate("set_entropy", &label, entropy_set(kind, &set)?)];
            report
        }
        Command::Setop { op, a, b, tnorm } => {
            let op = SetOp::from(*op);
            let first = load(cli, a)?;
            let second = match (op.is_binary(), b) {
                (true, Some(path)) => Some(load(cli, path)?),
                (true, None) => return Err(Failure::Usage(format!("{op:?} needs two inputs"))),
                (false, Some(_)) => return Err(Failure::Usage(format!("{op:?} takes one input"))),
                (false, None) => None,
            };
            let result = set_op(op, &first, second.as_ref(), *tnorm)?;
            return Ok(write_dataset(&result, cli.output_format)?);
        }
        Command::Audit {
            kind,
            measure,
            expect_paper,
        } => {
            let target = audit_target(kind, *measure)?;
            let report = axiom_audit(target);
            if *expect_paper && !matches_paper(target, &report) {
                return Err(Failure::Invalid(format!(
                    "audit of {target} disagrees with the published pattern: failed {:?}",
                    report
                        .failures()
                        .iter()
                        .map(|a| a.to_string())
                        .collect::<Vec<_>>()
                )));
            }
            return Ok(write_audit(&report, cli.output_format, precision)?);
        }
    };
    Ok(write_report(&report, cli.output_format, precision)?)
}

fn aggregate(name: &str, kind: &str, value: f64) -> AggregateRow {
    AggregateRow {
        name: name.to_string(),
        kind: kind.to_string(),
        value,
    }
}

fn pairwise(cli: &Cli, args: &PairArgs, similarity: bool) -> Result<MeasureReport, Failure> {
    let set = load(cli, &args.input)?;
    let command = if similarity { "sim" } else { "dist" };
    let mut meta = Metadata::new(dataset_name(&args.input), command);
    meta.distance_kind = Some(args.kind.code().to_string());
    let mut report = MeasureReport::new(meta);
    match &args.second {
        Some(path) => {
            let other = load(cli, path)?;
            let d = set_distance(args.kind, &set, &other, args.aggregation)?;
            let (name, value) = if similarity {
                ("set_similarity", 1.0 - d)
            } else {
                ("set_distance", d)
            };
            report.aggregates.push(aggregate(
                name,
                &format!("{}-{}", args.kind, args.aggregation),
                value,
            ));
        }
        None => {
            report.elements = decompose(&set);
            let rows = if similarity {
                similarity_matrix(args.kind, &set)
            } else {
                distance_matrix(args.kind, &set)
            };
            report.similarity = Some(PairwiseMatrix {
                measure: if similarity { "similarity" } else { "distance" }.to_string(),
                kind: args.kind.code().to_string(),
                ids: set.ids().map(str::to_string).collect(),
                rows,
            });
        }
    }
    Ok(report)
}

fn audit_target(kind: &str, family: Option<MeasureFamily>) -> Result<AuditTarget, Failure> {
    let card = kind.parse::<CardinalityKind>().ok();
    let entropy = kind.parse::<EntropyKind>().ok();
    match (family, card, entropy) {
        (Some(MeasureFamily::Card), Some(k), _) => Ok(AuditTarget::Cardinality(k)),
        (Some(MeasureFamily::Entropy), _, Some(k)) => Ok(AuditTarget::Entropy(k)),
        (None, Some(k), None) => Ok(AuditTarget::Cardinality(k)),
        (None, None, Some(k)) => Ok(AuditTarget::Entropy(k)),
        (None, Some(_), Some(_)) => Err(Failure::Usage(format!(
            "--kind {kind} names both a cardinality and an entropy; add --measure card or --measure entropy"
        ))),
        _ => Err(Failure::Usage(format!("unknown --kind `{kind}` for this measure"))),
    }
}

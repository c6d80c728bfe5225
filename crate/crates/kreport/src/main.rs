use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use complex::Basis;
use kreport::{
    checked_complex, compute, corpus_entry, CorpusEntry, KReport, ReportOptions, CORPUS,
};
use polyhedron::{build_complex, validate, CoxeterMatrix};
use torsion::{all_minors_unimodular, BlockSystem};
use zlinalg::read_triplets;

/// Exit code for failed checks.
const FAILED: u8 = 1;
/// Exit code for unusable input.
const BAD_INPUT: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "kreport",
    version,
    about = "Bredon homology and K-theory of compact hyperbolic reflection groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the full pipeline on a Coxeter matrix document.
    Compute {
        file: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Build the cell complex and list every invariant violation.
    Validate { file: PathBuf },
    /// Check that every minor of a matrix (triplet format) is -1, 0 or 1.
    Minors {
        file: PathBuf,
        /// Largest minor size to enumerate (default: the rank after reduction).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Built-in inputs.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusAction {
    /// List the built-in inputs.
    List,
    /// Run one built-in input.
    Run {
        name: String,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(clap::Args, Debug)]
struct RunArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write d1.txt, d2.txt and d3.txt (triplet format) into this directory.
    #[arg(long)]
    dump_matrices: Option<PathBuf>,
    /// Do not run the vertex-block minor criterion.
    #[arg(long)]
    skip_criterion: bool,
    /// Basis of the reported chain complex.
    #[arg(long, value_enum, default_value_t = BasisArg::Transformed)]
    basis: BasisArg,
    /// Use the alternative labelling of the Delta(2,3,5) classes.
    #[arg(long)]
    delta235_swap: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    Standard,
    Transformed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(BAD_INPUT)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Compute { file, run } => run_polyhedron(&read_matrix(&file)?, &run),
        Command::Validate { file } => {
            let cm = read_matrix(&file)?;
            let cc = build_complex(&cm).map_err(|e| e.to_string())?;
            let diags = validate(&cc);
            if diags.is_empty() {
                println!(
                    "{}: ok ({} faces, {} edges, {} vertices)",
                    cm.name(),
                    cc.faces.len(),
                    cc.edges.len(),
                    cc.vertices.len()
                );
                Ok(ExitCode::SUCCESS)
            } else {
                for d in &diags {
                    println!("{d}");
                }
                Ok(ExitCode::from(FAILED))
            }
        }
        Command::Minors { file, cap } => {
            let text = read(&file)?;
            let m = read_triplets(&text).map_err(|e| format!("{}: {e}", file.display()))?;
            let report = all_minors_unimodular(&m, cap);
            println!("{report}");
            Ok(exit(report.ok))
        }
        Command::Corpus { action } => match action {
            CorpusAction::List => {
                for (name, about) in CORPUS {
                    println!("{name:<22}{about}");
                }
                Ok(ExitCode::SUCCESS)
            }
            CorpusAction::Run { name, run } => match corpus_entry(&name) {
                Some(CorpusEntry::Polyhedron(cm)) => run_polyhedron(&cm, &run),
                Some(CorpusEntry::Blocks(sys)) => run_blocks(&sys, run.format),
                None => Err(format!(
                    "unknown corpus entry '{name}' (see `kreport corpus list`)"
                )),
            },
        },
    }
}

fn run_polyhedron(cm: &CoxeterMatrix, args: &RunArgs) -> Result<ExitCode, String> {
    checked_complex(cm).map_err(|e| e.to_string())?;
    let opts = ReportOptions {
        basis: match args.basis {
            BasisArg::Standard => Basis::Standard,
            BasisArg::Transformed => Basis::Transformed,
        },
        skip_criterion: args.skip_criterion,
        delta235_swap: args.delta235_swap,
    };
    let computation = compute(cm, opts).map_err(|e| e.to_string())?;
    if let Some(dir) = &args.dump_matrices {
        computation
            .chain
            .dump(dir)
            .map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    print_report(&computation.report, args.format);
    Ok(exit(computation.report.all_pass()))
}

fn print_report(report: &KReport, format: Format) {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Structured => print!("{}", report.to_json()),
    }
}

fn run_blocks(sys: &BlockSystem, format: Format) -> Result<ExitCode, String> {
    let report = sys.check(None).map_err(|e| e.to_string())?;
    match format {
        Format::Text => {
            println!("{}", sys.name);
            for (label, m) in &sys.blocks {
                println!("  block {label}: {}x{}", m.rows(), m.cols());
            }
            println!("  minors: {report}");
        }
        Format::Structured => {
            let blocks: Vec<serde_json::Value> = sys
                .blocks
                .iter()
                .map(|(label, m)| {
                    serde_json::json!({
                        "label": label,
                        "rows": m.to_i64_rows().unwrap_or_default(),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "name": sys.name,
                "blocks": blocks,
                "ok": report.ok,
                "reduced_size": report.reduced_size,
                "max_size_checked": report.max_size_checked,
                "minors_checked": report.minors_checked,
                "witness": report.witness.as_ref().map(ToString::to_string),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
    }
    Ok(exit(report.ok))
}

fn exit(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(FAILED)
    }
}

fn read(file: &PathBuf) -> Result<String, String> {
    fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))
}

fn read_matrix(file: &PathBuf) -> Result<CoxeterMatrix, String> {
    CoxeterMatrix::parse(&read(file)?).map_err(|e| format!("{}: {e}", file.display()))
}

//! Command-line front end: analyze single diagrams, reproduce catalog
//! tables, run the verification suites, and mirror codes.
//!
//! Exit codes: 0 success, 1 verification failure or table mismatch, 2 input
//! error, 3 I/O error.

use clap::{Parser, Subcommand, ValueEnum};
use std::fs;
use std::process::ExitCode;

use writhesplit::catalog::{load_catalog, reproduce_table_with_seed};
use writhesplit::diagram::{parse_diagram, CodeFormat, Diagram};
use writhesplit::nullification::{
    fundamental_cycles_monochromatic, report_with_seed, spanning_forest,
    verify_forest_independence, verify_mirror_antisymmetry, verify_parity_law,
};
use writhesplit::seifert::{build_seifert_graph, parallel_classes_monochromatic};
use writhesplit::Error;

#[derive(Parser)]
#[command(
    name = "writhesplit",
    version,
    about = "Writhe splitting and chirality detection for oriented alternating link diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Pd,
    Gauss,
}

impl From<FormatArg> for CodeFormat {
    fn from(f: FormatArg) -> CodeFormat {
        match f {
            FormatArg::Pd => CodeFormat::PdSigned,
            FormatArg::Gauss => CodeFormat::GaussSigned,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputArg {
    Json,
    Text,
    Csv,
}

#[derive(clap::Args)]
struct InputArgs {
    /// Inline diagram code.
    #[arg(long, conflicts_with = "file")]
    code: Option<String>,
    /// Read the diagram code from a file.
    #[arg(long)]
    file: Option<String>,
    /// Code grammar.
    #[arg(long, value_enum, default_value = "pd")]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant report for one diagram.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputArg,
        /// Forest-selection seed (only visible on non-invariant inputs).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Dump the Seifert graph adjacency (`u v sign` lines) to stderr.
        #[arg(long)]
        dump_graph: bool,
    },
    /// Grade every entry of a catalog against its published values.
    Batch {
        /// Newline-delimited JSON catalog.
        catalog: String,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the well-definedness verifiers on a catalog or a single code.
    Verify {
        /// Newline-delimited JSON catalog.
        catalog: Option<String>,
        #[command(flatten)]
        input: InputArgs,
        /// Forest samples per diagram for the independence check.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the mirror image of a diagram as a pd-signed code.
    Mirror {
        #[command(flatten)]
        input: InputArgs,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match &e {
                Error::Io(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn read_input(input: &InputArgs) -> Result<Diagram, Error> {
    let text = match (&input.code, &input.file) {
        (Some(code), None) => code.clone(),
        (None, Some(path)) => fs::read_to_string(path)?,
        (None, None) => {
            return Err(Error::Syntax(
                "provide a diagram with --code or --file".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap rejects conflicting inputs"),
    };
    parse_diagram(&text, input.format.into())
}

fn run() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            input,
            output,
            seed,
            dump_graph,
        } => {
            let d = read_input(&input)?;
            let report = report_with_seed(&d, seed)?;
            if dump_graph {
                let g = build_seifert_graph(&d)?;
                eprint!("{}", g.dump());
            }
            match output {
                OutputArg::Json => println!("{}", serde_json::to_string(&report).unwrap()),
                OutputArg::Text => print_report_text(&report),
                OutputArg::Csv => {
                    println!("n,s,k,c,o,w,w_x,w_y,alternating,reduced,split,verdict");
                    println!(
                        "{},{},{},{},{},{},{},{},{},{},{},{}",
                        report.n,
                        report.s,
                        report.k,
                        report.c,
                        report.o,
                        report.w,
                        report.w_x,
                        report.w_y,
                        report.alternating,
                        report.reduced,
                        report.split,
                        report.verdict
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Batch {
            catalog,
            output,
            seed,
        } => {
            let entries = load_catalog(&catalog)?;
            let table = reproduce_table_with_seed(&entries, seed);
            match output {
                OutputArg::Json => println!("{}", table.to_json()),
                OutputArg::Text => println!("{}", table.to_text()),
                OutputArg::Csv => print!("{}", table.to_csv()),
            }
            Ok(if table.has_mismatch() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Verify {
            catalog,
            input,
            trials,
            seed,
        } => {
            let mut targets: Vec<(String, Diagram)> = Vec::new();
            if let Some(path) = catalog {
                for entry in load_catalog(&path)? {
                    let d = parse_diagram(&entry.code, CodeFormat::PdSigned)?;
                    targets.push((entry.name, d));
                }
            }
            if input.code.is_some() || input.file.is_some() {
                targets.push(("input".into(), read_input(&input)?));
            }
            if targets.is_empty() {
                return Err(Error::Syntax(
                    "verify needs a catalog path or --code/--file".into(),
                ));
            }
            let mut failures = 0usize;
            for (name, d) in &targets {
                failures += verify_one(name, d, trials, seed);
            }
            if failures == 0 {
                println!("verify: all checks passed on {} diagram(s)", targets.len());
                Ok(ExitCode::SUCCESS)
            } else {
                println!("verify: {failures} check(s) failed");
                Ok(ExitCode::from(1))
            }
        }
        Command::Mirror { input } => {
            let d = read_input(&input)?;
            println!("{}", d.mirror().to_pd_string());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_report_text(r: &writhesplit::InvariantReport) {
    println!(
        "n={} s={} k={} c={} o={}  w={} w_x={} w_y={}",
        r.n, r.s, r.k, r.c, r.o, r.w, r.w_x, r.w_y
    );
    println!(
        "alternating={} reduced={} split={}  verdict={}",
        r.alternating, r.reduced, r.split, r.verdict
    );
    for warning in &r.warnings {
        println!("warning: {warning}");
    }
}

/// Run every applicable verifier on one diagram; returns the failure count.
fn verify_one(name: &str, d: &Diagram, trials: usize, seed: u64) -> usize {
    let mut failures = 0;
    let mut check = |label: &str, outcome: Result<bool, Error>| match outcome {
        Ok(true) => println!("{name}: {label}: ok"),
        Ok(false) => {
            println!("{name}: {label}: FAILED");
            failures += 1;
        }
        Err(e) => {
            println!("{name}: {label}: error: {e}");
            failures += 1;
        }
    };

    let g = match build_seifert_graph(d) {
        Ok(g) => g,
        Err(e) => {
            println!("{name}: seifert graph: error: {e}");
            return 1;
        }
    };

    // Eq. w = w_x + w_y holds for any forest; check the seeded one.
    let forest = spanning_forest(&g, seed);
    let ws = writhesplit::nullification::writhe_split(&g, &forest);
    check(
        "writhe split identity",
        Ok(ws.w == ws.w_x + ws.w_y && ws.w == d.writhe()),
    );
    check(
        "forest cardinality",
        Ok(forest.len() == g.circle_count() - g.component_count()),
    );
    check("forest independence", verify_forest_independence(&g, trials));
    check("mirror antisymmetry", verify_mirror_antisymmetry(d));
    if g.component_count() == 1 {
        check("component parity law", verify_parity_law(d));
    }
    if g.alternating() {
        check(
            "parallel classes monochromatic",
            Ok(parallel_classes_monochromatic(&g)),
        );
        check(
            "fundamental cycles monochromatic",
            Ok(fundamental_cycles_monochromatic(&g, &forest)),
        );
    }
    failures
}

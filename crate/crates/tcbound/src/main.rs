//! Thin command-line front end: `run` evaluates descriptors, `verify` runs
//! the self-check suites, `list` prints the built-in corpus.
//!
//! Exit codes: 0 success, 1 failed verification, 2 schema/input errors,
//! 3 bound inconsistency.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tcbound::bounds::{evaluate, EvalOptions};
use tcbound::descriptor::{builtin, builtin_names, DescriptorFile};
use tcbound::report::ReportFile;
use tcbound::selfcheck;
use tcbound::Error;

#[derive(Parser)]
#[command(
    name = "tcbound",
    version,
    about = "Certified upper and lower bounds for topological complexity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a descriptor (JSON file, directory of files, or built-in name)
    Run {
        /// Path to a descriptor file, a directory of `*.json` descriptors,
        /// or a built-in example name (see `tcbound list`)
        input: String,
        /// Print only the JSON report
        #[arg(long)]
        json: bool,
        /// Print only the text report
        #[arg(long)]
        text: bool,
        /// Maximum number of factors in the zero-divisor searches
        /// (default: 2·dim)
        #[arg(long)]
        max_depth: Option<usize>,
        /// Search the whole kernel of the diagonal map instead of barred
        /// generators (small rings only)
        #[arg(long)]
        exhaustive: bool,
        /// Display the reduced convention (values one lower)
        #[arg(long)]
        reduced: bool,
        /// Output directory for directory inputs (default: next to inputs)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the module self-check suites and print a pass/fail table
    Verify {
        /// Only run checks whose name contains this string (e.g. `padic`)
        #[arg(long)]
        only: Option<String>,
        /// Test mode: inject a corrupted preset that must fail validation
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// List the built-in example descriptors
    List,
}

const EXIT_OK: u8 = 0;
const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_SCHEMA: u8 = 2;
const EXIT_INCONSISTENT: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Run {
            input,
            json,
            text,
            max_depth,
            exhaustive,
            reduced,
            out,
        } => {
            let opts = EvalOptions {
                max_depth,
                exhaustive,
            };
            run(&input, json, text, reduced, out.as_deref(), &opts)
        }
        Command::Verify { only, inject_fault } => verify(only.as_deref(), inject_fault),
        Command::List => {
            for name in builtin_names() {
                println!("{name}");
            }
            EXIT_OK
        }
    };
    ExitCode::from(code)
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Inconsistency { .. } => EXIT_INCONSISTENT,
        _ => EXIT_SCHEMA,
    }
}

fn run(
    input: &str,
    json: bool,
    text: bool,
    reduced: bool,
    out: Option<&Path>,
    opts: &EvalOptions,
) -> u8 {
    let path = Path::new(input);
    if path.is_dir() {
        return run_directory(path, out, opts);
    }
    let file = if path.is_file() {
        match fs::read_to_string(path).map_err(Error::from).and_then(|t| DescriptorFile::from_json(&t)) {
            Ok(f) => f,
            Err(e) => {
                eprintln!("error: {e}");
                return exit_code_for(&e);
            }
        }
    } else {
        match builtin(input) {
            Some(f) => f,
            None => {
                eprintln!("error: `{input}` is neither a readable file nor a built-in example (try `tcbound list`)");
                return EXIT_SCHEMA;
            }
        }
    };
    match evaluate_file(&file, opts) {
        Ok(report) => {
            // Default: both renderings.
            let (show_json, show_text) = if json || text { (json, text) } else { (true, true) };
            if show_text {
                print!("{}", report.render_text(reduced));
            }
            if show_text && show_json {
                println!();
            }
            if show_json {
                println!("{}", report.to_json());
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn evaluate_file(file: &DescriptorFile, opts: &EvalOptions) -> Result<ReportFile, Error> {
    let space = file.to_space()?;
    let bounds = evaluate(&space, opts)?;
    Ok(ReportFile::new(&file.canonical_json(), &space, bounds))
}

fn run_directory(dir: &Path, out: Option<&Path>, opts: &EvalOptions) -> u8 {
    let mut entries: Vec<PathBuf> = match fs::read_dir(dir) {
        Ok(read) => read
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
            .collect(),
        Err(e) => {
            eprintln!("error: cannot read `{}`: {e}", dir.display());
            return EXIT_SCHEMA;
        }
    };
    entries.sort();
    let out_dir = out.unwrap_or(dir);
    let mut worst = EXIT_OK;
    for path in entries {
        let stem = path.file_stem().unwrap_or_default().to_string_lossy().to_string();
        let outcome = fs::read_to_string(&path)
            .map_err(Error::from)
            .and_then(|t| DescriptorFile::from_json(&t))
            .and_then(|file| evaluate_file(&file, opts));
        match outcome {
            Ok(report) => {
                let target = out_dir.join(format!("{stem}.report.json"));
                if let Err(e) = write_atomically(&target, report.to_json().as_bytes()) {
                    eprintln!("error: writing `{}`: {e}", target.display());
                    worst = worst.max(EXIT_SCHEMA);
                    continue;
                }
                println!(
                    "ok    {stem}  TC in [{}, {}]  -> {}",
                    report.bounds.lower,
                    report.bounds.upper,
                    target.display()
                );
            }
            Err(e) => {
                eprintln!("error {stem}: {e}");
                worst = worst.max(exit_code_for(&e));
            }
        }
    }
    worst
}

fn write_atomically(target: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let tmp = target.with_extension("report.json.tmp");
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, target)
}

fn verify(only: Option<&str>, inject_fault: bool) -> u8 {
    let results = selfcheck::run_all(only, inject_fault);
    if results.is_empty() {
        eprintln!("no checks match the filter");
        return EXIT_VERIFY_FAILED;
    }
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
    for r in &results {
        println!(
            "{:<width$}  {}  {}",
            r.name,
            if r.passed { "PASS" } else { "FAIL" },
            r.detail,
        );
    }
    if selfcheck::all_passed(&results) {
        EXIT_OK
    } else {
        let failed: Vec<&str> = results
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.name.as_str())
            .collect();
        eprintln!("failed: {}", failed.join(", "));
        EXIT_VERIFY_FAILED
    }
}

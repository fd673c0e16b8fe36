//! `splitcut` command-line interface.
//!
//! Exit codes: 0 success (or `yes`), 1 `no` from `decide`, 2 any error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use splitcut_core::bench::{bench_rows, CSV_HEADER};
use splitcut_core::generate::generate_split;
use splitcut_core::io::{parse_instance, write_instance, write_mapping};
use splitcut_core::oracle::{brute_force_maxcut_capped, DEFAULT_CAP};
use splitcut_core::reduction::maxcut_via_reduction_with;
use splitcut_core::report::SolveReport;
use splitcut_core::solver::decide_maxcut_with;
use splitcut_core::{
    build_split_instance, maxcut_split_with, recognize_split, CutReport, Graph, SolveOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "splitcut",
    version,
    about = "Exact maximum cut for split graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve maximum cut; non-split inputs go through the split reduction.
    Solve {
        file: PathBuf,
        /// Reduce even when the input is already split.
        #[arg(long)]
        force_reduction: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Is there a cut of size at least K? Prints `yes` or `no`.
    Decide {
        file: PathBuf,
        k: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Print a clique / independent set partition, or `not split`.
    Recognize { file: PathBuf },
    /// Write the split image of an instance plus an auxiliary-vertex sidecar.
    Reduce {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Sidecar path; defaults to OUTPUT with `.map` appended.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Exhaustive maximum cut, for cross-checking.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Write a random split instance.
    Generate {
        #[arg(long)]
        clique: usize,
        #[arg(long = "is")]
        independent: usize,
        #[arg(long)]
        prob: f64,
        #[arg(long)]
        seed: u64,
        /// Defaults to standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Subset counts and timings on balanced instances, as CSV.
    Bench {
        #[arg(long)]
        min_t: usize,
        #[arg(long)]
        max_t: usize,
        #[arg(long, default_value_t = 0.5)]
        prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_ERROR
        }
    }
}

type CmdResult = Result<i32, String>;

fn load(path: &Path) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_instance(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn instance_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn check_prob(p: f64) -> Result<(), String> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(format!("probability {p} outside [0, 1]"))
    }
}

fn emit_report(
    out: &mut dyn Write,
    name: String,
    g: &Graph,
    report: &CutReport,
    start: Instant,
    json: bool,
) -> CmdResult {
    let report = SolveReport::new(name, g, report, start.elapsed());
    let text = if json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    };
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
    Ok(EXIT_OK)
}

fn write_file(path: &Path, contents: &str) -> Result<(), String> {
    fs::write(path, contents).map_err(|e| format!("{}: {e}", path.display()))
}

fn execute(command: Command, out: &mut dyn Write) -> CmdResult {
    let io = |e: std::io::Error| e.to_string();
    match command {
        Command::Solve {
            file,
            force_reduction,
            json,
            threads,
        } => {
            let g = load(&file)?;
            let opts = SolveOptions {
                threads,
                force: None,
            };
            let start = Instant::now();
            let report = if !force_reduction && recognize_split(&g).is_some() {
                maxcut_split_with(&g, &opts)
            } else {
                maxcut_via_reduction_with(&g, &opts)
            }
            .map_err(|e| e.to_string())?;
            emit_report(out, instance_name(&file), &g, &report, start, json)
        }
        Command::Decide { file, k, threads } => {
            let g = load(&file)?;
            let opts = SolveOptions {
                threads,
                force: None,
            };
            let decision = decide_maxcut_with(&g, k, &opts).map_err(|e| e.to_string())?;
            writeln!(out, "{}", if decision.answer { "yes" } else { "no" }).map_err(io)?;
            Ok(if decision.answer { EXIT_OK } else { EXIT_NO })
        }
        Command::Recognize { file } => {
            let g = load(&file)?;
            match recognize_split(&g) {
                Some(p) => {
                    let labels = |s: &splitcut_core::VertexSet| {
                        s.iter()
                            .map(|v| (v + 1).to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    };
                    writeln!(out, "split").map_err(io)?;
                    writeln!(out, "clique: {}", labels(p.clique())).map_err(io)?;
                    writeln!(out, "independent: {}", labels(p.independent())).map_err(io)?;
                }
                None => writeln!(out, "not split").map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Reduce { file, output, map } => {
            let g = load(&file)?;
            let reduction = build_split_instance(&g);
            let comment = format!(
                "split image of {}: {} original + {} auxiliary vertices, max cut shifted by {}",
                instance_name(&file),
                g.n(),
                reduction.nonedge_count(),
                2 * reduction.nonedge_count()
            );
            write_file(&output, &write_instance(reduction.image(), &[&comment]))?;
            let map_path = map.unwrap_or_else(|| {
                let mut p = output.clone().into_os_string();
                p.push(".map");
                PathBuf::from(p)
            });
            write_file(&map_path, &write_mapping(&reduction))?;
            writeln!(
                out,
                "wrote {} ({} vertices, {} edges) and {}",
                output.display(),
                reduction.image().n(),
                reduction.image().m(),
                map_path.display()
            )
            .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Oracle { file, cap, json } => {
            let g = load(&file)?;
            let start = Instant::now();
            let report = brute_force_maxcut_capped(&g, cap).map_err(|e| e.to_string())?;
            emit_report(out, instance_name(&file), &g, &report, start, json)
        }
        Command::Generate {
            clique,
            independent,
            prob,
            seed,
            output,
        } => {
            check_prob(prob)?;
            let g = generate_split(clique, independent, prob, seed);
            let comment = format!(
                "generate --clique {clique} --is {independent} --prob {prob} --seed {seed}"
            );
            let text = write_instance(&g, &[&comment]);
            match output {
                Some(path) => write_file(&path, &text)?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Bench {
            min_t,
            max_t,
            prob,
            seed,
            threads,
        } => {
            check_prob(prob)?;
            if min_t < 2 || min_t > max_t {
                return Err(format!("need 2 <= min-t <= max-t, got {min_t}..{max_t}"));
            }
            let opts = SolveOptions {
                threads,
                force: None,
            };
            writeln!(out, "{CSV_HEADER}").map_err(io)?;
            for row in bench_rows(min_t, max_t, prob, seed, &opts).map_err(|e| e.to_string())? {
                writeln!(out, "{}", row.to_csv()).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
    }
}

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dlab::checks::{self, Ctx, Theorem2Mode};
use dlab::data::load_canonical_x;
use dlab::formats::{format_certificate, format_cnf, read_pointset, write_pointset, write_text};
use dlab::report::{exit_code, write_jsonl, write_table, CheckReport};
use dlab::search::{candidate_file, run_search};
use dlab_core::constructions::{make_convex, make_double_chain};
use dlab_core::exact::{chromatic_number, kcolor_cnf};
use dlab_core::graph::build_disjointness;

#[derive(Parser)]
#[command(name = "dlab", version, about = "Disjointness graphs of segments: constructions, exact coloring, checks")]
struct Cli {
    /// Solver node budget per call.
    #[arg(long, global = true, default_value_t = 2_000_000_000)]
    budget: u64,
    /// Worker threads for instance families.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Seed for sampled quantities.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Directory for certificates and CNF files.
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a generated point set.
    Gen {
        #[command(subcommand)]
        kind: Gen,
    },
    /// Search for a 16-point set passing every structural check and screen.
    SearchX {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of candidates to try.
        #[arg(long, default_value_t = 200)]
        budget: u64,
        #[arg(short, long)]
        output: PathBuf,
        /// Trace file, one "attempt seed verdict failed-check" line per candidate.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Exact chromatic number of D(P) for a point-set file.
    Chi {
        file: PathBuf,
        /// Write the certificate here.
        #[arg(long)]
        cert_out: Option<PathBuf>,
        /// Write CNF for (chi - 1)-colorability here.
        #[arg(long)]
        cnf_out: Option<PathBuf>,
    },
    /// Run one named check.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// Print bounds on d(m) for m = 3..n.
    Bounds {
        #[arg(long)]
        n: u64,
    },
    /// Run every check and write JSON lines.
    Report {
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum Gen {
    Convex {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    Dchain {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Propositions 3, 4, 5, 6, 7 and 10.
    Prop {
        #[arg(long)]
        id: u32,
    },
    /// Lemmas 11 to 24 (22 is the quadrilateral proposition).
    Lemma {
        #[arg(long)]
        id: u32,
        /// Number of sampled instances; all when absent.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// d(16) = 14: upper bounds, random subsets of X, or the full 13-coloring search.
    Theorem2 {
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Convex table for n = 3..max-n.
    Convex {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
    /// Double-chain table over the standard pairs.
    Dchain,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Upper,
    Subsets,
    Full,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("dlab: {e}");
            ExitCode::from(2)
        }
    }
}

fn print(reports: &[CheckReport]) -> i32 {
    let _ = write_table(&mut io::stdout().lock(), reports);
    exit_code(reports)
}

fn run(cli: Cli) -> Result<i32, Box<dyn std::error::Error>> {
    let ctx = Ctx { budget: cli.budget, threads: cli.threads, out_dir: cli.out_dir, seed: cli.seed };
    Ok(match cli.cmd {
        Cmd::Gen { kind } => {
            match kind {
                Gen::Convex { n, output } => write_pointset(&make_convex(n)?, output)?,
                Gen::Dchain { k, l, output } => write_pointset(&make_double_chain(k, l)?, output)?,
            }
            0
        }
        Cmd::SearchX { seed, budget, output, trace } => {
            let mut lines = Vec::new();
            let found = run_search(seed, budget, |line| {
                println!("{line}");
                lines.push(line.to_string());
            });
            if let Some(t) = trace {
                write_text(t, &(lines.join("\n") + "\n"))?;
            }
            match found {
                Ok(c) => {
                    write_text(&output, &candidate_file(&c))?;
                    println!("wrote {}", output.display());
                    0
                }
                Err(e) => {
                    eprintln!("{e}");
                    1
                }
            }
        }
        Cmd::Chi { file, cert_out, cnf_out } => {
            let ps = read_pointset(&file)?;
            let g = build_disjointness(&ps)?;
            let cert = chromatic_number(g.graph(), ctx.budget);
            if cert.is_exact() {
                println!("chi = {} ({} nodes)", cert.chi, cert.nodes);
            } else {
                println!("chi in [{}, {}] (budget hit after {} nodes)", cert.lower, cert.chi, cert.nodes);
            }
            if let Some(p) = cert_out {
                write_text(p, &format_certificate(&g, &cert))?;
            }
            if let Some(p) = cnf_out {
                let k = cert.chi.saturating_sub(1).max(1);
                write_text(&p, &format_cnf(&kcolor_cnf(g.graph(), k, true)))?;
                println!("wrote {k}-colorability CNF to {}", p.display());
            }
            if cert.is_exact() {
                0
            } else {
                1
            }
        }
        Cmd::Verify { what } => {
            let reports = match what {
                Verify::Prop { id } => {
                    let x = if matches!(id, 4 | 10) { Some(load_canonical_x()?) } else { None };
                    checks::cmd_prop(id, x.as_ref(), &ctx)?
                }
                Verify::Lemma { id, sample } => checks::cmd_lemma(id, &load_canonical_x()?, sample, &ctx)?,
                Verify::Theorem2 { mode } => {
                    let mode = match mode {
                        Mode::Upper => Theorem2Mode::Upper,
                        Mode::Subsets => Theorem2Mode::Subsets,
                        Mode::Full => Theorem2Mode::Full,
                    };
                    checks::cmd_theorem2(mode, &load_canonical_x()?, &ctx)?
                }
                Verify::Convex { max_n } => checks::cmd_convex_table(max_n, &ctx)?,
                Verify::Dchain => checks::cmd_double_chain_table(&checks::DOUBLE_CHAIN_PAIRS, &ctx)?,
            };
            print(&reports)
        }
        Cmd::Bounds { n } => print(&checks::cmd_bounds(n)),
        Cmd::Report { output } => {
            let reports = checks::run_all(&load_canonical_x()?, &ctx)?;
            let mut buf = Vec::new();
            write_jsonl(&mut buf, &reports)?;
            write_text(&output, std::str::from_utf8(&buf)?)?;
            let code = print(&reports);
            let _ = io::stdout().flush();
            code
        }
    })
}

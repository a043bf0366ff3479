use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use plumbing::algebra::circle_root_count;
use plumbing::coxeter::{bicolored_coxeter, classify_matrix_spectrum, classify_spectrum};
use plumbing::forms::{divide_form, seifert_matrix, tree_form, DivideCombinatorics, SeifertMatrix};
use plumbing::harness::{
    conjecture1_scan, optimal_family_check, parse_checks, sweep_forests, sweep_slalom, sweep_spiral, sweep_trees,
    SweepReport, DEFAULT_SEED,
};
use plumbing::omega::{signature_profile, verify_theorem_a};
use plumbing::trees::{canonical_code, lemma1_decompose, Forest, Tree};

#[derive(Parser)]
#[command(name = "plumb", version, about = "Signatures of tree-like Hopf plumbings and related checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    fn render(self, r: &SweepReport) -> String {
        match self {
            Format::Json => r.to_json(),
            Format::Csv => r.to_csv(),
            Format::Text => r.to_text(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a tree read from a file (`n` then one edge per line).
    Tree {
        file: PathBuf,
        #[arg(long, default_value = "sig,alex,coxeter")]
        show: String,
    },
    /// Exhaustive checks over a corpus.
    Sweep {
        #[command(subcommand)]
        corpus: SweepCorpus,
    },
    /// Chains of the extremal six-vertex tree and random gluings.
    Optimal {
        #[arg(long, default_value_t = 10)]
        copies: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Invariants of a square integer matrix, read as a Seifert matrix.
    Matrix {
        file: PathBuf,
        #[arg(long, default_value = "inertia,spectrum,profile")]
        show: String,
    },
    /// Symmetrized form of a divide given by its adjacency data.
    Divide { file: PathBuf },
}

#[derive(Subcommand)]
enum SweepCorpus {
    Trees {
        #[arg(long, default_value_t = 14)]
        max_n: usize,
        #[arg(long, default_value = "thm1")]
        check: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    Forests {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    Slalom {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    Spiral {
        #[arg(long, default_value_t = 100)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Alexander roots of trees lie on the unit circle or the negative axis.
    Roots {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn fields(show: &str, allowed: &[&str]) -> Result<Vec<String>> {
    let out: Vec<String> = show.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    for f in &out {
        if !allowed.contains(&f.as_str()) {
            bail!("unknown field '{f}', expected one of {}", allowed.join(","));
        }
    }
    Ok(out)
}

fn show_tree(t: &Tree, show: &str) -> Result<()> {
    println!("tree {} ({} vertices)", canonical_code(t), t.vertex_count());
    for f in fields(show, &["sig", "alex", "coxeter", "profile", "cert"])? {
        match f.as_str() {
            "sig" => {
                let i = tree_form(t).inertia();
                println!("inertia {i}  signature {}  b1 {}", i.signature(), t.b1());
            }
            "alex" => {
                let a = seifert_matrix(t);
                let delta = a.alexander_poly();
                println!("alexander {}", delta.pretty());
                println!("circle roots {}", circle_root_count(&delta)?);
            }
            "coxeter" => {
                let c = bicolored_coxeter(&Forest::from(t.clone()));
                let s = classify_spectrum(&c)?;
                println!("coxeter char poly {}", c.char_poly().pretty());
                println!(
                    "spectrum: circle {}  positive real {}  other {}",
                    s.circle_count, s.positive_real_count, s.other_count
                );
            }
            "profile" => print!("{}", signature_profile(&seifert_matrix(t))?),
            "cert" => println!("{}", serde_json::to_string_pretty(&lemma1_decompose(t))?),
            _ => unreachable!(),
        }
    }
    Ok(())
}

fn show_matrix(a: &SeifertMatrix, show: &str) -> Result<()> {
    for f in fields(show, &["inertia", "spectrum", "profile"])? {
        match f.as_str() {
            "inertia" => {
                let i = a.symmetrized().inertia();
                println!("symmetrized inertia {i}  signature {}", i.signature());
            }
            "spectrum" => {
                let s = classify_matrix_spectrum(&a.matrix().to_bigint())?;
                println!(
                    "spectrum: circle {}  positive real {}  other {}",
                    s.circle_count, s.positive_real_count, s.other_count
                );
            }
            "profile" => {
                let rep = verify_theorem_a(a);
                println!("alexander {}", a.alexander_poly().pretty());
                println!("|sigma| = {} <= circle roots {}: {}", rep.signature.abs(), rep.circle_roots, rep.pass);
                if !rep.vacuous {
                    print!("{}", signature_profile(a)?);
                }
            }
            _ => unreachable!(),
        }
    }
    Ok(())
}

fn emit(report: SweepReport, format: Format) -> Result<bool> {
    print!("{}", format.render(&report));
    if !matches!(format, Format::Text) {
        println!();
    }
    Ok(report.passed())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Tree { file, show } => {
            show_tree(&Tree::parse(&read(&file)?)?, &show)?;
            Ok(true)
        }
        Command::Matrix { file, show } => {
            show_matrix(&SeifertMatrix::parse(&read(&file)?)?, &show)?;
            Ok(true)
        }
        Command::Divide { file } => {
            let s = divide_form(&DivideCombinatorics::parse(&read(&file)?)?)?;
            let i = s.inertia();
            println!("{s}");
            println!("inertia {i}  signature {}", i.signature());
            Ok(true)
        }
        Command::Optimal { copies, seed, format } => emit(optimal_family_check(copies, seed)?, format),
        Command::Sweep { corpus } => match corpus {
            SweepCorpus::Trees { max_n, check, format } => emit(sweep_trees(max_n, &parse_checks(&check)?)?, format),
            SweepCorpus::Forests { max_n, format } => emit(sweep_forests(max_n)?, format),
            SweepCorpus::Slalom { max_n, format } => emit(sweep_slalom(max_n)?, format),
            SweepCorpus::Spiral { max_n, format } => emit(sweep_spiral(max_n)?, format),
            SweepCorpus::Roots { max_n, format } => emit(conjecture1_scan(max_n)?, format),
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

//! Command-line frontend: parse signed graphs from the `sg` text format and
//! run nullity, balance, normalization, classification, spectrum, harness
//! verification, and enumeration.
//!
//! Exit codes: 0 success, 1 invalid input, 2 `verify` found failures.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use signed_nullity::classify::{classify_extremal, build_cycle};
use signed_nullity::enumerate::{enumerate_unicyclic, signed_variants};
use signed_nullity::error::Error;
use signed_nullity::graph::SignedGraph;
use signed_nullity::graphfile;
use signed_nullity::harness::verify_all;
use signed_nullity::linalg::{adjacency_matrix, char_poly, cycle_eigenvalues, nullity_oracle};
use signed_nullity::nullity::{nullity_structural, NullityCertificate};
use signed_nullity::switching::{balance_witness, normalize_unicyclic};

#[derive(Parser)]
#[command(
    name = "signed-nullity",
    version,
    about = "Nullity, balance, and classification of signed graphs"
)]
struct Cli {
    /// Emit JSON on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural nullity with a reduction certificate; falls back to the
    /// rank oracle (with a notice) when the cycle rank is 2 or more.
    Nullity { file: PathBuf },
    /// Nullity from the exact integer rank of the adjacency matrix.
    Oracle { file: PathBuf },
    /// Balance test; prints a switching witness when balanced.
    Balance { file: PathBuf },
    /// Canonical switching representative, written in graph format.
    Normalize { file: PathBuf },
    /// Nullity class (n-2 .. n-5 or other) and extremal family.
    Classify { file: PathBuf },
    /// Closed-form eigenvalues and exact characteristic polynomial of a
    /// signed cycle.
    Spectrum {
        /// Cycle length (at least 3).
        #[arg(long)]
        cycle: usize,
        /// Use the unbalanced signing instead of the balanced one.
        #[arg(long)]
        unbalanced: bool,
    },
    /// Run the verification harness; exit code 2 if any check fails.
    Verify {
        /// Exhaustive sweep bound, 3..=9.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Enumerate connected unicyclic graphs of one order.
    Enumerate {
        /// Number of vertices.
        #[arg(long)]
        order: usize,
        /// Deduplicate up to isomorphism.
        #[arg(long)]
        iso: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn load(path: &Path) -> Result<SignedGraph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    graphfile::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable output"));
}

#[derive(Serialize)]
struct NullityOut<'a> {
    nullity: usize,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<&'a [signed_nullity::nullity::CertStep]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    notice: Option<String>,
}

#[derive(Serialize)]
struct ClassifyOut {
    n: usize,
    nullity: usize,
    class: String,
    family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<usize>,
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Nullity { file } => {
            let g = load(file)?;
            match nullity_structural(&g) {
                Ok((value, cert)) => {
                    if cli.json {
                        print_json(&NullityOut {
                            nullity: value,
                            method: "structural",
                            certificate: Some(&cert.steps),
                            notice: None,
                        });
                    } else {
                        print_structural(value, &cert);
                    }
                }
                Err(Error::CycleRankTooHigh(rank)) => {
                    let value = nullity_oracle(&g);
                    let notice = format!(
                        "cycle rank {rank} is outside the structural theory; \
                         used the rank oracle"
                    );
                    if cli.json {
                        print_json(&NullityOut {
                            nullity: value,
                            method: "oracle",
                            certificate: None,
                            notice: Some(notice),
                        });
                    } else {
                        eprintln!("notice: {notice}");
                        println!("nullity {value}");
                    }
                }
                Err(e) => return Err(e.to_string()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { file } => {
            let g = load(file)?;
            let value = nullity_oracle(&g);
            if cli.json {
                print_json(&NullityOut {
                    nullity: value,
                    method: "oracle",
                    certificate: None,
                    notice: None,
                });
            } else {
                println!("nullity {value}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Balance { file } => {
            let g = load(file)?;
            match balance_witness(&g) {
                Some(theta) => {
                    if cli.json {
                        let signs: Vec<String> =
                            theta.signs().iter().map(|s| s.to_string()).collect();
                        print_json(&serde_json::json!({
                            "balanced": true,
                            "switching": signs,
                        }));
                    } else {
                        println!("balanced");
                        let signs: Vec<String> =
                            theta.signs().iter().map(|s| s.to_string()).collect();
                        println!("switching: {}", signs.join(" "));
                    }
                }
                None => {
                    if cli.json {
                        print_json(&serde_json::json!({ "balanced": false }));
                    } else {
                        println!("unbalanced");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Normalize { file } => {
            let g = load(file)?;
            let (normalized, _) = normalize_unicyclic(&g).map_err(|e| e.to_string())?;
            if cli.json {
                print_json(&graph_json(&normalized));
            } else {
                print!("{}", graphfile::emit(&normalized));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { file } => {
            let g = load(file)?;
            let result = classify_extremal(&g).map_err(|e| e.to_string())?;
            let (r, s) = result.family.params();
            if cli.json {
                print_json(&ClassifyOut {
                    n: result.order,
                    nullity: result.nullity,
                    class: result.class.label().to_string(),
                    family: result.family.tag().to_string(),
                    r,
                    s,
                });
            } else {
                println!(
                    "n={} l={} balanced={} nullity={} class={} family={}",
                    result.order,
                    result.cycle_len,
                    result.balanced,
                    result.nullity,
                    result.class,
                    result.family
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum { cycle, unbalanced } => {
            let eigenvalues =
                cycle_eigenvalues(*cycle, !*unbalanced).map_err(|e| e.to_string())?;
            let graph = if *unbalanced {
                signed_variants(&build_cycle(*cycle))
                    .map_err(|e| e.to_string())?
                    .1
            } else {
                build_cycle(*cycle)
            };
            let poly = char_poly(&adjacency_matrix(&graph)).map_err(|e| e.to_string())?;
            let coeffs = poly.coeffs_i64().expect("cycle coefficients fit i64");
            if cli.json {
                print_json(&serde_json::json!({
                    "length": cycle,
                    "balanced": !unbalanced,
                    "eigenvalues": eigenvalues,
                    "char_poly": coeffs,
                }));
            } else {
                println!(
                    "cycle length {} ({})",
                    cycle,
                    if *unbalanced { "unbalanced" } else { "balanced" }
                );
                let formatted: Vec<String> =
                    eigenvalues.iter().map(|x| format!("{x:.6}")).collect();
                println!("eigenvalues: {}", formatted.join(" "));
                println!("char poly: {poly}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { max_n, seed } => {
            if !(3..=9).contains(max_n) {
                return Err(format!("--max-n must be in 3..=9, got {max_n}"));
            }
            let report = verify_all(*max_n, *seed);
            if cli.json {
                print_json(&report);
            } else {
                print!("{}", report.summary());
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Enumerate { order, iso } => {
            let stream = enumerate_unicyclic(*order, *iso).map_err(|e| e.to_string())?;
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            let mut write = |s: &str| out.write_all(s.as_bytes()).map_err(|e| e.to_string());
            if cli.json {
                write("[")?;
                for (i, g) in stream.enumerate() {
                    if i > 0 {
                        write(",")?;
                    }
                    write(&graph_json(&g).to_string())?;
                }
                write("]\n")?;
            } else {
                for (i, g) in stream.enumerate() {
                    if i > 0 {
                        write("\n")?;
                    }
                    write(&graphfile::emit(&g))?;
                }
            }
            out.flush().map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_structural(value: usize, cert: &NullityCertificate) {
    println!("nullity {value}");
    for step in &cert.steps {
        println!("{step}");
    }
}

fn graph_json(g: &SignedGraph) -> serde_json::Value {
    let edges: Vec<serde_json::Value> = g
        .edges()
        .iter()
        .map(|&(u, v, s)| serde_json::json!([u, v, s.to_string()]))
        .collect();
    serde_json::json!({ "n": g.order(), "edges": edges })
}

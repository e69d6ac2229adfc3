//! Command-line front end: `coproduct`, `verify` and `enum` subcommands with
//! deterministic text or JSON output.
//!
//! Exit codes: 0 on success, 1 when a verified law fails, 2 on usage or
//! parse errors.

use crate::doubling::{
    delta_monomial, enumerate_vpairs, enumerate_wpairs, gamma_monomial, parse_vmonomial,
    parse_wmonomial,
};
use crate::error::Error;
use crate::tree::{enumerate_trees, Forest};
use crate::verify::{parse_laws, verify_laws};
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Read;

#[derive(Parser)]
#[command(
    name = "rooted-forests",
    about = "Exact coproducts, doubling bialgebras and law verification on rooted forests",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a coproduct on forests or marked-pair monomials.
    Coproduct {
        /// Which coproduct: ck | contract | D | Dt.
        #[arg(long)]
        flavor: Flavor,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Input expressions; read from stdin (one per line) when absent.
        exprs: Vec<String>,
    },
    /// Verify structural laws exhaustively up to a vertex bound.
    Verify {
        /// Comma-separated law names, or "all".
        #[arg(long, default_value = "all")]
        laws: String,
        /// All basis elements on trees up to this many vertices are checked.
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        /// Worker count for fanning out instances.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List trees or pair classes of a given size in canonical order.
    Enum {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Number of vertices.
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Flavor {
    /// Connes–Kreimer coproduct on forests.
    Ck,
    /// Contraction coproduct on forests.
    Contract,
    /// Coproduct of the cut doubling, on monomials of admissible pairs.
    #[value(name = "D", alias = "d")]
    D,
    /// Coproduct of the contraction doubling.
    #[value(name = "Dt", alias = "dt")]
    Dt,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Trees,
    Vpairs,
    Wpairs,
}

/// Runs the CLI; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap reports usage errors on stderr with exit code 2; --help
            // and --version print to stdout with exit code 0.
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Coproduct {
            flavor,
            format,
            exprs,
        } => {
            let inputs = if exprs.is_empty() {
                read_stdin_lines()
            } else {
                exprs
            };
            for input in &inputs {
                println!("{}", coproduct_line(flavor, input, format)?);
            }
            Ok(0)
        }
        Command::Verify {
            laws,
            max_vertices,
            jobs,
            format,
        } => {
            if max_vertices < 1 {
                return Err(Error::Parse {
                    offset: 0,
                    message: "--max-vertices must be at least 1".into(),
                });
            }
            let laws = parse_laws(&laws)?;
            let reports = verify_laws(&laws, max_vertices, jobs);
            match format {
                Format::Text => {
                    for report in &reports {
                        println!("{report}");
                    }
                }
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&reports).expect("reports serialize")
                    );
                }
            }
            Ok(if reports.iter().all(|r| r.passed()) {
                0
            } else {
                1
            })
        }
        Command::Enum { kind, n } => {
            if n < 1 {
                return Err(Error::Parse {
                    offset: 0,
                    message: "--n must be at least 1".into(),
                });
            }
            match kind {
                Kind::Trees => {
                    for t in enumerate_trees(n) {
                        println!("{}", t.key());
                    }
                }
                Kind::Vpairs => {
                    for p in enumerate_vpairs(n) {
                        println!("{p}");
                    }
                }
                Kind::Wpairs => {
                    for p in enumerate_wpairs(n) {
                        println!("{p}");
                    }
                }
            }
            Ok(0)
        }
    }
}

/// Computes one coproduct line. Accepts an optional flavor prefix (`V:`/`W:`)
/// on pair inputs so that rendered output parses back.
fn coproduct_line(flavor: Flavor, input: &str, format: Format) -> Result<String, Error> {
    let rendered = match flavor {
        Flavor::Ck => {
            let f = Forest::parse(input)?;
            let d = crate::classic::coproduct_ck(&f);
            render(format, &d)
        }
        Flavor::Contract => {
            let f = Forest::parse(input)?;
            let d = crate::classic::coproduct_contract(&f);
            render(format, &d)
        }
        Flavor::D => {
            let body = strip_prefix(input, "V:");
            let m = parse_vmonomial(body)?;
            let d = delta_monomial(&m);
            render(format, &d)
        }
        Flavor::Dt => {
            let body = strip_prefix(input, "W:");
            let m = parse_wmonomial(body)?;
            let d = gamma_monomial(&m);
            render(format, &d)
        }
    };
    Ok(rendered)
}

fn strip_prefix<'a>(input: &'a str, tag: &str) -> &'a str {
    input.strip_prefix(tag).unwrap_or(input)
}

fn render<K: Ord + crate::lincomb::KeyParts>(
    format: Format,
    comb: &crate::lincomb::LinComb<K>,
) -> String {
    match format {
        Format::Text => comb.render(),
        Format::Json => comb.to_json().to_string(),
    }
}

fn read_stdin_lines() -> Vec<String> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .expect("failed to read stdin");
    buf.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect()
}

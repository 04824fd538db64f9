//! Command line interface. Exit status: 0 on success, 1 when a verification
//! fails, 2 for usage and input errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use cayley_core::gate::{elimination_report, DEFAULT_GATE_LEVEL, DEFAULT_S_MAX};
use cayley_core::product::{basis_product, mul_with};
use cayley_core::twist::mul_via_twist_with;
use cayley_core::{fano, tree, triples, Levels, ProductSpec};
use clap::{Parser, Subcommand, ValueEnum};

use crate::pgm::Gray;
use crate::{csv, json, par, pgm, report, verify, Error, Result};

#[derive(Debug, Parser)]
#[command(name = "cayley", version, about = "Cayley-Dickson doubling products, twists and sign tables")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Doubling,
    Twist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Pgm,
    PgmAscii,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply two elements given as JSON files.
    Mul {
        #[arg(long)]
        product: ProductSpec,
        #[arg(long, value_enum, default_value = "doubling")]
        engine: Engine,
        /// Zero-pad the lower-level operand instead of failing.
        #[arg(long)]
        promote: bool,
        x: PathBuf,
        y: PathBuf,
    },
    /// Print e_p e_q as +e<r> or -e<r>.
    BasisMul {
        #[arg(long)]
        product: ProductSpec,
        p: usize,
        q: usize,
    },
    /// Write the sign table for p, q < 2^n.
    TwistTable {
        #[arg(long)]
        product: ProductSpec,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 64)]
        plus_gray: u8,
        #[arg(long, default_value_t = 192)]
        minus_gray: u8,
    },
    /// List the structure constants (p, q, r) of a valid product.
    Triples {
        #[arg(long)]
        product: ProductSpec,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Screen and gate all 32 candidates; fails unless eight survive.
    Eliminate {
        #[arg(long, default_value_t = DEFAULT_S_MAX)]
        smax: usize,
        #[arg(long, default_value_t = DEFAULT_GATE_LEVEL)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate w2(p, q) with the twist tree.
    Tree {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        trace: bool,
    },
    /// Print the Fano plane orientation of a valid product.
    Fano {
        #[arg(long)]
        product: ProductSpec,
    },
    /// Scan the w2 ratio bands and power-of-two identities.
    Conjecture {
        #[arg(long)]
        bound: usize,
    },
    /// Run the invariant suite.
    Verify {
        #[arg(long)]
        level: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Failure,
}

impl Outcome {
    fn from_pass(pass: bool) -> Outcome {
        if pass {
            Outcome::Success
        } else {
            Outcome::Failure
        }
    }
}

fn write_to(out: &mut dyn Write, path: Option<&PathBuf>, bytes: &[u8]) -> Result<()> {
    match path {
        Some(p) => fs::write(p, bytes)?,
        None => out.write_all(bytes)?,
    }
    Ok(())
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<Outcome> {
    match cli.command {
        Command::Mul {
            product,
            engine,
            promote,
            x,
            y,
        } => {
            let x = json::decode(&fs::read_to_string(x)?)?;
            let y = json::decode(&fs::read_to_string(y)?)?;
            let levels = if promote { Levels::Promote } else { Levels::Strict };
            let z = match engine {
                Engine::Doubling => mul_with(product, &x, &y, levels)?,
                Engine::Twist => mul_via_twist_with(product.require_valid()?, &x, &y, levels)?,
            };
            writeln!(out, "{}", json::encode(&z))?;
        }
        Command::BasisMul { product, p, q } => {
            let r = basis_product(product, p, q)?
                .ok_or(cayley_core::Error::Unsupported("product is not a signed basis vector"))?;
            writeln!(out, "{r}")?;
        }
        Command::TwistTable {
            product,
            n,
            format,
            out: path,
            plus_gray,
            minus_gray,
        } => {
            let table = par::table_for(product, n)?;
            let gray = Gray {
                plus: plus_gray,
                minus: minus_gray,
            };
            let bytes = match format {
                Format::Csv => {
                    let mut s = csv::render_csv(&table);
                    s.push('\n');
                    s.into_bytes()
                }
                Format::Pgm => pgm::render_pgm(&table, true, gray)?,
                Format::PgmAscii => pgm::render_pgm(&table, false, gray)?,
            };
            write_to(out, path.as_ref(), &bytes)?;
        }
        Command::Triples { product, n, json } => {
            let set = triples::all_triples(product.require_valid()?, n)?;
            if json {
                writeln!(out, "{}", report::triples_json(&set))?;
            } else {
                write!(out, "{}", report::triples_text(&set))?;
            }
        }
        Command::Eliminate { smax, n, json } => {
            let r = elimination_report(smax, n)?;
            if json {
                writeln!(out, "{}", report::elimination_json(&r))?;
            } else {
                write!(out, "{}", report::elimination_text(&r))?;
            }
            return Ok(Outcome::from_pass(r.survivors_are_the_valid_eight()));
        }
        Command::Tree { p, q, trace } => {
            if trace {
                writeln!(out, "{}", tree::trace_string(p, q))?;
            } else {
                writeln!(out, "{}", tree::eval(p, q))?;
            }
        }
        Command::Fano { product } => {
            writeln!(out, "{}", fano::fano_orientation(product)?)?;
        }
        Command::Conjecture { bound } => {
            let r = tree::conjecture_scan(bound)?;
            write!(out, "{}", report::conjecture_text(&r))?;
        }
        Command::Verify { level } => {
            let checks = verify::run(level)?;
            write!(out, "{}", verify::render(&checks))?;
            return Ok(Outcome::from_pass(verify::all_passed(&checks)));
        }
    }
    Ok(Outcome::Success)
}

/// Maps a run result to the process exit status, reporting errors on stderr.
pub fn exit_code(result: Result<Outcome>) -> u8 {
    match result {
        Ok(Outcome::Success) => 0,
        Ok(Outcome::Failure) => 1,
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

//! Argument parsing and output for the `hlvertex` binary.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hlvertex::kostka::{kostka, kostka_table, KostkaKey, Method};
use hlvertex::rewrite::{
    evaluate, parse_word, rewrite_dominant, shift_support, swap_factors, OpSum, ShiftDirection,
};
use hlvertex::suites::{parse_suite_list, run_suites, SuiteOptions};
use hlvertex::symfunc::SymFunc;
use hlvertex::weights::{
    parse_blocked, parse_dominant, parse_partition, parse_shape, parse_weight, straighten,
    BlockedWeight, Straightened,
};
use hlvertex::Error;

#[derive(Parser, Debug)]
#[command(
    name = "hlvertex",
    version,
    about = "Hall-Littlewood vertex operators and generalized Kostka polynomials"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// One generalized Kostka polynomial.
    Kostka {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Blocks separated by `;`, e.g. "1;1".
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long)]
        eta: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// All nonzero entries with nonnegative entries up to a degree.
    Table {
        #[arg(long)]
        eta: String,
        #[arg(long)]
        max_degree: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Straightens `H_v` to a signed dominant operator or zero.
    Straighten {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Rewrites a two-factor word so every term is dominant.
    Rewrite {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Exchanges the block lengths of a two-factor word.
    Swap {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Moves one entry between the factors of a two-factor word.
    Shift {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value_t = DirectionArg::LeftToRight)]
        direction: DirectionArg,
    },
    /// Runs self-check suites.
    Check {
        /// A suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_degree: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Applies an operator word to a Schur function.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Partition indexing the Schur function; empty for 1.
        #[arg(long, default_value = "")]
        on_schur: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    Kostant,
    Vertex,
    Both,
}

impl MethodArg {
    fn method(self) -> Method {
        match self {
            MethodArg::Kostant => Method::Kostant,
            MethodArg::Vertex => Method::Vertex,
            MethodArg::Both => Method::Both,
        }
    }

    fn name(self) -> &'static str {
        match self {
            MethodArg::Kostant => "kostant",
            MethodArg::Vertex => "vertex",
            MethodArg::Both => "both",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DirectionArg {
    LeftToRight,
    RightToLeft,
}

/// Exit statuses.
const OK: u8 = 0;
const FAILURE: u8 = 1;
const USAGE: u8 = 2;

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::NotDominant(_)
        | Error::LengthMismatch { .. }
        | Error::InvalidArgument(_) => USAGE,
        _ => FAILURE,
    }
}

/// `gamma` with `;` is taken block by block; otherwise it is cut by `eta`.
fn blocked_for(gamma: &str, eta: &str) -> Result<BlockedWeight, Error> {
    let shape = parse_shape(eta)?;
    if gamma.contains(';') {
        let g = parse_blocked(gamma)?;
        if g.shape() != &shape {
            return Err(Error::InvalidArgument(format!(
                "gamma has blocks {} but eta is {shape}",
                g.shape()
            )));
        }
        return Ok(g);
    }
    BlockedWeight::split(&shape, &parse_weight(gamma)?)
}

fn render_sum(sum: &OpSum, json: bool) -> String {
    if json {
        sum.to_json().to_string()
    } else {
        sum.to_string()
    }
}

fn render_symfunc(f: &SymFunc, json: bool) -> String {
    if json {
        f.to_json().to_string()
    } else {
        f.to_string()
    }
}

/// Runs one parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut impl Write, err: &mut impl Write) -> u8 {
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_for(&e)
        }
    }
}

fn execute(cli: &Cli, out: &mut impl Write, err: &mut impl Write) -> Result<u8, Error> {
    let json = cli.json;
    let text = match &cli.command {
        Command::Kostka {
            lambda,
            gamma,
            eta,
            method,
        } => {
            let key = KostkaKey::new(parse_dominant(lambda)?, blocked_for(gamma, eta)?)?;
            let value = kostka(&key, method.method())?;
            if json {
                json!({ "key": key.to_json(), "method": method.name(), "value": value.to_json() })
                    .to_string()
            } else {
                value.to_string()
            }
        }
        Command::Table {
            eta,
            max_degree,
            method,
        } => {
            let table = kostka_table(&parse_shape(eta)?, *max_degree, method.method())?;
            if !table.warnings.is_empty() && !json {
                let _ = writeln!(
                    err,
                    "warning: {} entries have a negative coefficient (listed under --json)",
                    table.warnings.len()
                );
            }
            if json {
                table.to_json().to_string()
            } else {
                let rows: Vec<[String; 3]> = table
                    .nonzero()
                    .map(|e| {
                        [
                            e.key.lambda.to_string(),
                            e.key.gamma.to_string(),
                            e.value.to_string(),
                        ]
                    })
                    .collect();
                align(&["lambda", "gamma", "K"], &rows)
            }
        }
        Command::Straighten { weight } => {
            let v = parse_weight(weight)?;
            let s = straighten(&v);
            match (&s, json) {
                (Straightened::Zero, true) => {
                    json!({ "sign": 0, "weight": Value::Null }).to_string()
                }
                (Straightened::Zero, false) => "0".to_string(),
                (Straightened::Signed { sign, weight }, true) => {
                    json!({ "sign": sign, "weight": weight.entries() }).to_string()
                }
                (Straightened::Signed { sign, weight }, false) => {
                    let lead = if *sign < 0 { "-" } else { "" };
                    format!("{lead}H[{weight}]")
                }
            }
        }
        Command::Rewrite { word } => render_sum(&rewrite_dominant(&parse_word(word)?)?, json),
        Command::Swap { word } => render_sum(&swap_factors(&parse_word(word)?)?, json),
        Command::Shift { word, direction } => {
            let d = match direction {
                DirectionArg::LeftToRight => ShiftDirection::LeftToRight,
                DirectionArg::RightToLeft => ShiftDirection::RightToLeft,
            };
            render_sum(&shift_support(&parse_word(word)?, d)?, json)
        }
        Command::Eval { word, on_schur } => {
            let w = parse_word(word)?;
            let f = SymFunc::schur(parse_partition(on_schur)?);
            render_symfunc(&evaluate(&OpSum::word(w), &f), json)
        }
        Command::Check {
            suite,
            max_degree,
            seed,
        } => {
            let suites = parse_suite_list(suite)?;
            let opts = SuiteOptions {
                max_degree: *max_degree,
                seed: *seed,
            };
            let reports = run_suites(&suites, &opts);
            let all_ok = reports.iter().all(|r| r.ok());
            let text = if json {
                let v: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
                json!({ "ok": all_ok, "max_degree": max_degree, "seed": seed, "suites": v })
                    .to_string()
            } else {
                let mut lines = Vec::new();
                for r in &reports {
                    let status = if r.ok() { "ok" } else { "FAILED" };
                    lines.push(format!(
                        "{}: {} passed, {} failed ... {status}",
                        r.name,
                        r.passed(),
                        r.failed()
                    ));
                    for c in r.failures() {
                        match &c.detail {
                            Some(d) => lines.push(format!("  FAIL {}: {d}", c.label)),
                            None => lines.push(format!("  FAIL {}", c.label)),
                        }
                    }
                }
                lines.join("\n")
            };
            let _ = writeln!(out, "{text}");
            return Ok(if all_ok { OK } else { FAILURE });
        }
    };
    let _ = writeln!(out, "{text}");
    Ok(OK)
}

/// Left-aligned columns separated by two spaces.
fn align<const N: usize>(header: &[&str; N], rows: &[[String; N]]) -> String {
    let mut widths: [usize; N] = header.map(str::len);
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(header.to_vec())];
    for row in rows {
        out.push(line(row.iter().map(String::as_str).collect()));
    }
    out.join("\n")
}

/// Parses the process arguments and runs; clap errors exit with status 2.
pub fn main_exit() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    ExitCode::from(run(&cli, &mut stdout.lock(), &mut stderr.lock()))
}

//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification or law check fails, 2 on
//! usage and parse errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::harness::{run_suite, MinMax, RunConfig};
use crate::order::{split_top, Order};
use crate::relations::{equiv, ext_rel, tri_leq, Rel};
use crate::skew::{check_axioms, ext_max, ext_min};
use crate::stype::{s_iterate, s_of_term};
use crate::support::{enumerate_supports, support_literal, UltraToken};

#[derive(Parser, Debug)]
#[command(
    name = "ultraorder",
    version,
    about = "Ultrafilter extensions of symbolic linear orders"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide an extended relation between two tokens.
    Rel {
        #[arg(long)]
        term: String,
        #[arg(long, value_enum)]
        rel: RelArg,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the extended min or max of two tokens.
    Minmax {
        #[arg(long)]
        term: String,
        #[arg(long, value_enum)]
        op: OpArg,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        json: bool,
    },
    /// Order type of the set of supports.
    Stype {
        #[arg(long)]
        term: String,
        #[arg(long, default_value_t = 1)]
        iterate: usize,
        #[arg(long)]
        json: bool,
    },
    /// Sampled supports in increasing order.
    Supports {
        #[arg(long)]
        term: String,
        #[arg(long)]
        budget: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run the verification suites.
    Verify {
        /// Harness configuration as JSON.
        #[arg(long)]
        config: Option<std::path::PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Check the skew lattice laws on a universe of tokens.
    Laws {
        #[arg(long)]
        term: String,
        /// Comma-separated tokens.
        #[arg(long)]
        tokens: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RelArg {
    Lt,
    Le,
    Gt,
    Ge,
    Tri,
    Equiv,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OpArg {
    Min,
    Max,
}

/// Runs the CLI on `argv` (program name first) with the process streams.
pub fn run_cli<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_cli_with(
        argv,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

/// [`run_cli`] writing to the given streams.
pub fn run_cli_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Config(e.to_string())
}

fn emit(out: &mut dyn Write, json: bool, value: serde_json::Value, text: &str) -> Result<()> {
    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&value).expect("json values serialize")
        )
        .map_err(io)
    } else {
        writeln!(out, "{text}").map_err(io)
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Rel {
            term,
            rel,
            left,
            right,
            json,
        } => {
            let o = Order::parse(&term)?;
            let (u, v) = (
                UltraToken::parse(&o, &left)?,
                UltraToken::parse(&o, &right)?,
            );
            let (name, result) = match rel {
                RelArg::Lt => ("lt", ext_rel(&o, Rel::Lt, &u, &v)?),
                RelArg::Le => ("le", ext_rel(&o, Rel::Le, &u, &v)?),
                RelArg::Gt => ("gt", ext_rel(&o, Rel::Gt, &u, &v)?),
                RelArg::Ge => ("ge", ext_rel(&o, Rel::Ge, &u, &v)?),
                RelArg::Tri => ("tri", tri_leq(&o, &u, &v)?),
                RelArg::Equiv => ("equiv", equiv(&o, &u, &v)?),
            };
            let value = json!({ "term": term, "rel": name, "left": left, "right": right, "result": result });
            emit(out, json, value, &result.to_string())?;
        }
        Command::Minmax {
            term,
            op,
            left,
            right,
            json,
        } => {
            let o = Order::parse(&term)?;
            let (u, v) = (
                UltraToken::parse(&o, &left)?,
                UltraToken::parse(&o, &right)?,
            );
            let (op, r) = match op {
                OpArg::Min => (MinMax::Min, ext_min(&o, &u, &v)?),
                OpArg::Max => (MinMax::Max, ext_max(&o, &u, &v)?),
            };
            let lit = r.literal(&o);
            let value = json!({ "term": term, "op": op.name(), "left": left, "right": right, "result": lit });
            emit(out, json, value, &lit)?;
        }
        Command::Stype {
            term,
            iterate,
            json,
        } => {
            let t = crate::term::parse_order_term(&term)?;
            let s = if iterate == 1 {
                s_of_term(&t)?
            } else {
                s_iterate(&t, iterate)?
            };
            let value = json!({ "term": term, "iterate": iterate, "result": s.to_string() });
            emit(out, json, value, &s.to_string())?;
        }
        Command::Supports { term, budget, json } => {
            let o = Order::parse(&term)?;
            let lits: Vec<String> = enumerate_supports(&o, budget)?
                .iter()
                .map(|s| support_literal(&o, s))
                .collect();
            let value = json!({ "term": term, "budget": budget, "supports": lits });
            emit(out, json, value, &lits.join("\n"))?;
        }
        Command::Verify { config, seed, json } => {
            let mut cfg = match config {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(io)?;
                    serde_json::from_str::<RunConfig>(&text)
                        .map_err(|e| Error::Config(e.to_string()))?
                }
                None => RunConfig::default(),
            };
            if let Some(s) = seed {
                cfg.seed = s;
            }
            let report = run_suite(&cfg)?;
            if json {
                writeln!(out, "{}", report.to_json()).map_err(io)?;
            } else {
                writeln!(out, "{report}").map_err(io)?;
            }
            return Ok(if report.all_pass() { 0 } else { 1 });
        }
        Command::Laws { term, tokens, json } => {
            let o = Order::parse(&term)?;
            let mut universe = Vec::new();
            let mut rest = tokens.as_str();
            loop {
                let (head, tail) = split_top(rest, ',').unwrap_or((rest, ""));
                universe.push(UltraToken::parse(&o, head.trim())?);
                if tail.is_empty() {
                    break;
                }
                rest = tail;
            }
            let report = check_axioms(&o, &universe)?;
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report).expect("reports serialize")
                )
                .map_err(io)?;
            } else {
                write!(out, "{report}").map_err(io)?;
            }
            return Ok(if report.failed().is_empty() { 0 } else { 1 });
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("ultraorder").chain(args.iter().copied());
        let code = run_cli_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn examples() {
        assert_eq!(
            run(&["stype", "--term", "w"]),
            (0, "w + 1\n".into(), String::new())
        );
        let r = run(&[
            "rel", "--term", "w", "--rel", "lt", "--left", "L:top#a", "--right", "L:top#a",
        ]);
        assert_eq!(r, (0, "true\n".into(), String::new()));
        let r = run(&[
            "minmax", "--term", "w", "--op", "max", "--left", "pt:5", "--right", "L:top#a",
        ]);
        assert_eq!(r, (0, "L:top#a\n".into(), String::new()));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(&["rel", "--term", "w"]).0, 2);
        assert_eq!(run(&["frobnicate"]).0, 2);
        let (code, _, err) = run(&[
            "rel", "--term", "w", "--rel", "lt", "--left", "pt:1#a", "--right", "pt:2",
        ]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"), "{err}");
        assert_eq!(run(&["stype", "--term", "e"]).0, 2);
        assert_eq!(run(&["verify", "--config", "/nonexistent.json"]).0, 2);
        assert_eq!(run(&["--help"]).0, 0);
    }

    #[test]
    fn laws_exit_codes() {
        let (code, out, _) = run(&["laws", "--term", "3", "--tokens", "pt:0,pt:1,pt:2"]);
        assert_eq!(code, 0, "{out}");
        let (code, out, _) = run(&[
            "laws",
            "--term",
            "z",
            "--tokens",
            "R:bottom#a,R:bottom#b,pt:0",
        ]);
        assert_eq!(code, 1);
        assert!(out.contains("distributivity_min_left"));
        let (code, _, _) = run(&[
            "laws",
            "--term",
            "w * w",
            "--tokens",
            "pt:(0,1), L:before:(0,1)#a",
        ]);
        assert_eq!(code, 0);
    }

    #[test]
    fn supports_listing() {
        let (code, out, _) = run(&["supports", "--term", "z", "--budget", "1"]);
        assert_eq!((code, out.as_str()), (0, "R:bottom\npt:0\nL:top\n"));
    }
}

//! Command surface of the `eidos` binary.
//!
//! Every subcommand prints human text, or with `--json` one JSON object
//! tagged `"schema": "eidos/1"`. Exit codes: 0 success or yes, 1 no,
//! 2 derivation search ran out of depth, 3 error.

pub mod commands;
pub mod encode;
pub mod error;
pub mod scenario;

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use eidos_core::rational::parse_rational;
use eidos_core::{parse_eidostate, parse_term, Declarations, Eidostate, Term};

pub use error::CliError;

pub const EXIT_ERROR: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "eidos",
    version,
    about = "Exact coin-and-box calculus of eidostates"
)]
pub struct Cli {
    /// Print one JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and echo an expression.
    Parse { expr: String },
    /// Weight and entropy of an eidostate.
    Entropy { expr: String },
    /// Content vector of an eidostate.
    Content { expr: String },
    /// Canonical form `s_q + I_k`.
    Canon {
        expr: String,
        #[arg(long)]
        certificate: bool,
    },
    /// Entropic probability of each state.
    Prob { expr: String },
    /// Whether SRC → DST; with `--certificate`, search for a derivation.
    Reach {
        src: String,
        dst: String,
        #[arg(long)]
        certificate: bool,
        /// Search depth; defaults to EIDOS_MAX_DEPTH or 12.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Make states of different content uniform with mechanical states, or
    /// with reservoir rungs.
    Uniformize {
        /// States, as separate arguments or comma-separated.
        #[arg(required = true)]
        states: Vec<String>,
        /// `basic` or `box:{coin,...}`.
        #[arg(long, requires = "levels")]
        reservoir: Option<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        levels: Option<Vec<i64>>,
    },
    /// Attach information states so the probabilities hit a target.
    Tune {
        expr: String,
        #[arg(long, value_delimiter = ',', required = true)]
        target: Vec<String>,
    },
    /// Run a scenario file.
    Ledger { scenario: std::path::PathBuf },
    /// Check the axioms on the bounded universe.
    Axioms {
        #[arg(long, default_value_t = 2)]
        bound: usize,
    },
    /// Run a bundled scenario: `erasure` or `demon`.
    Demo { name: String },
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Splits `a,b,box[{h,t};1]` at top-level commas.
pub fn split_list(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn eido(text: &str) -> Result<Eidostate, CliError> {
    Ok(parse_eidostate(text, &Declarations::new())?)
}

/// Runs a parsed command, returning the JSON body, the text form and the
/// exit code.
pub fn execute(command: &Command) -> Result<(Value, String, i32), CliError> {
    let decls = Declarations::new();
    Ok(match command {
        Command::Parse { expr } => {
            let v = commands::parse_expr(expr, &decls)?;
            let text = format!(
                "{} ({}) = {}",
                v["expr"].as_str().unwrap_or(""),
                v["kind"].as_str().unwrap_or(""),
                v["value"].as_str().unwrap_or("")
            );
            (v, text, 0)
        }
        Command::Entropy { expr } => {
            let v = commands::entropy(&eido(expr)?);
            let text = format!(
                "weight {}\nS = {} bits (≈ {:.6})",
                str_of(&v["weight"]),
                str_of(&v["entropy"]),
                v["entropy_bits_approx"].as_f64().unwrap_or(f64::NAN)
            );
            (v, text, 0)
        }
        Command::Content { expr } => {
            let e = eido(expr)?;
            let text = e.content().to_string();
            (commands::content(&e), text, 0)
        }
        Command::Canon { expr, certificate } => {
            let v = commands::canon(&eido(expr)?, *certificate)?;
            let mut text = format!("{} = {}", str_of(&v["form"]), str_of(&v["canonical"]));
            append_certificate(&mut text, &v);
            (v, text, 0)
        }
        Command::Prob { expr } => {
            let v = commands::prob(&eido(expr)?)?;
            let text = dist_text(&v);
            (v, text, 0)
        }
        Command::Reach {
            src,
            dst,
            certificate,
            depth,
        } => {
            let depth = depth.unwrap_or_else(commands::default_depth);
            let (v, code) = commands::reach(&eido(src)?, &eido(dst)?, *certificate, depth)?;
            let mut text = match code {
                0 => "yes".to_string(),
                1 => format!("no ({})", str_of(&v["reason"])),
                _ => format!("undecided: no derivation within depth {depth}"),
            };
            append_certificate(&mut text, &v);
            (v, text, code)
        }
        Command::Uniformize {
            states,
            reservoir,
            levels,
        } => {
            let terms = states
                .iter()
                .flat_map(|s| split_list(s))
                .map(|s| parse_term(&s, &decls))
                .collect::<Result<Vec<Term>, _>>()?;
            let v = match (reservoir, levels) {
                (Some(r), Some(l)) => {
                    let spec = scenario::reservoir_from_flag(r, &decls)?;
                    commands::uniformize(&terms, Some((&spec, l)))?
                }
                (None, Some(_)) => {
                    return Err(CliError::Usage("--levels needs --reservoir".into()))
                }
                _ => commands::uniformize(&terms, None)?,
            };
            let text = format!("{}\n{}", str_of(&v["assembled"]), dist_text(&v));
            (v, text, 0)
        }
        Command::Tune { expr, target } => {
            let target = target
                .iter()
                .map(|p| parse_rational(p))
                .collect::<Result<Vec<_>, _>>()?;
            let v = commands::tune(&eido(expr)?, &target)?;
            let text = format!(
                "N = {}, counts = {}\n{}",
                v["N"],
                v["counts"],
                dist_text(&v)
            );
            (v, text, 0)
        }
        Command::Ledger { scenario: path } => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            scenario_outcome(&text)?
        }
        Command::Demo { name } => {
            let text = scenario::bundled(name).ok_or_else(|| {
                CliError::Usage(format!("no demo `{name}`; try erasure or demon"))
            })?;
            scenario_outcome(text)?
        }
        Command::Axioms { bound } => {
            let (v, code) = commands::axioms(*bound);
            let mut text = format!(
                "bound {}: {} terms, {} eidostates",
                v["bound"], v["terms"], v["eidostates"]
            );
            for a in v["axioms"].as_array().into_iter().flatten() {
                let _ = write!(
                    text,
                    "\n{:<6} {:<4} {:>8} checked  {}",
                    str_of(&a["id"]),
                    str_of(&a["status"]),
                    a["checked"],
                    str_of(&a["title"])
                );
                if let Some(c) = a["caveat"].as_str() {
                    let _ = write!(text, "\n       caveat: {c}");
                }
                if let Some(c) = a["counterexample"].as_str() {
                    let _ = write!(text, "\n       counterexample: {c}");
                }
            }
            (v, text, code)
        }
    })
}

fn scenario_outcome(text: &str) -> Result<(Value, String, i32), CliError> {
    let s = scenario::load(text)?;
    let v = scenario::run_scenario(&s)?;
    let mut out = format!("scenario {}", s.name);
    for step in v["steps"].as_array().into_iter().flatten() {
        let _ = write!(
            out,
            "\n{} [{}]: {}",
            str_of(&step["id"]),
            str_of(&step["op"]),
            step["result"]
        );
    }
    Ok((v, out, 0))
}

fn str_of(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn dist_text(v: &Value) -> String {
    let mut text = format!("weight {}", str_of(&v["weight"]));
    for e in v["dist"].as_array().into_iter().flatten() {
        let _ = write!(text, "\n  {}  {}", str_of(&e[0]), str_of(&e[1]));
    }
    text
}

fn append_certificate(text: &mut String, v: &Value) {
    for line in v["certificate"].as_array().into_iter().flatten() {
        let _ = write!(text, "\n{}", str_of(line));
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (rendered, String::new())
            } else {
                (String::new(), rendered)
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    match execute(&cli.command) {
        Ok((v, text, code)) => Outcome {
            code,
            stdout: if cli.json {
                encode::with_schema(v).to_string()
            } else {
                text
            },
            stderr: String::new(),
        },
        Err(e) => {
            let body = encode::with_schema(json!({
                "error": {"kind": e.kind(), "message": e.to_string()}
            }));
            let (stdout, stderr) = if cli.json {
                (body.to_string(), String::new())
            } else {
                (String::new(), format!("error: {e}"))
            };
            Outcome {
                code: EXIT_ERROR,
                stdout,
                stderr,
            }
        }
    }
}

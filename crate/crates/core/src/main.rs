use std::io::{self, BufRead, IsTerminal, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use magma_core::check::{self, CheckConfig};
use magma_core::config::Config;
use magma_core::eval::{Error, Session, Value};
use magma_core::oracle::{self, FiniteUniverse};
use magma_core::sexp::{self, ParseError};
use magma_core::{demo, DomainKind};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "magma", version, about = "Finitely generated magmas over preordered atoms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct SessionArgs {
    /// Atom domain: tag, plane or qdup.
    #[arg(short, long, default_value = "tag", value_parser = parse_domain)]
    domain: DomainKind,
    /// key = value file selecting the domain and the seed atoms a0, a1.
    #[arg(short, long)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Interactive evaluator reading expressions from stdin.
    Repl(SessionArgs),
    /// Evaluate every expression in a file, or stdin.
    Eval {
        #[command(flatten)]
        session: SessionArgs,
        #[arg(short, long)]
        file: Option<PathBuf>,
    },
    /// Run a property suite; `all` runs every suite.
    Check {
        suite: String,
        #[arg(long, default_value_t = CheckConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = CheckConfig::default().cases)]
        cases: usize,
        #[arg(long, default_value_t = CheckConfig::default().depth)]
        depth: usize,
    },
    /// Print a named construction and its checked facts; no name lists them.
    Demo {
        name: Option<String>,
        #[command(flatten)]
        session: SessionArgs,
    },
    /// Compare symbolic answers with a finite extensional model.
    Oracle {
        /// tag2x2, plane2, qdup4, tag:TxV, plane:N or qdup:QxC.
        #[arg(long, default_value = "tag2x2")]
        atoms: String,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn parse_domain(s: &str) -> Result<DomainKind, String> {
    DomainKind::from_name(s).ok_or_else(|| format!("unknown domain {s:?}; expected tag, plane or qdup"))
}

fn session(args: &SessionArgs) -> Result<Session, String> {
    let config = match &args.config {
        None => Config::defaults(args.domain),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            Config::parse(&text, args.domain).map_err(|e| format!("{}: {e}", path.display()))?
        }
    };
    Ok(config.session())
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("magma: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Repl(args) => match session(&args) {
            Ok(s) => repl(s),
            Err(e) => usage(e),
        },
        Command::Eval { session: args, file } => {
            let mut s = match session(&args) {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            let text = match file {
                Some(path) => std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    let mut buf = String::new();
                    io::stdin().read_to_string(&mut buf).map(|_| buf).map_err(|e| e.to_string())
                }
            };
            match text {
                Ok(text) => eval_batch(&mut s, &text),
                Err(e) => usage(e),
            }
        }
        Command::Check { suite, seed, cases, depth } => {
            let config = CheckConfig { seed, cases, depth };
            if suite != "all" && !check::suite_names().any(|n| n == suite) {
                let known: Vec<_> = check::suite_names().collect();
                return usage(format!("unknown suite {suite:?}; known suites: {}", known.join(" ")));
            }
            match check::run(&suite, &config) {
                Ok(reports) => {
                    let mut ok = true;
                    for r in &reports {
                        println!("{r}");
                        ok &= r.passed();
                    }
                    if ok {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_FAIL)
                    }
                }
                Err(e) => {
                    eprintln!("magma: {e}");
                    ExitCode::from(EXIT_FAIL)
                }
            }
        }
        Command::Demo { name: None, .. } => {
            for d in demo::DEMOS {
                println!("{:<28}{}", d.name, d.summary);
            }
            ExitCode::SUCCESS
        }
        Command::Demo { name: Some(name), session: args } => {
            if demo::find(&name).is_none() {
                return usage(format!("unknown demo {name:?}"));
            }
            let mut s = match session(&args) {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            eval_batch(&mut s, &format!("(demo {name})"))
        }
        Command::Oracle { atoms, depth, suite } => {
            if !oracle::SUITES.contains(&suite.as_str()) {
                return usage(format!("unknown oracle suite {suite:?}; known: {}", oracle::SUITES.join(" ")));
            }
            let mut u = match FiniteUniverse::from_spec(&atoms, depth) {
                Ok(u) => u,
                Err(e) => return usage(e),
            };
            match oracle::run_suite(&mut u, &suite) {
                Ok(report) => {
                    println!("{report}");
                    if report.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_FAIL)
                    }
                }
                Err(e) => {
                    eprintln!("magma: {e}");
                    ExitCode::from(EXIT_FAIL)
                }
            }
        }
    }
}

/// Print each value as it is produced; stop at the first error. A witness
/// whose facts do not all hold counts as a failure.
fn eval_batch(s: &mut Session, text: &str) -> ExitCode {
    let exprs = match sexp::parse_all(text) {
        Ok(es) => es,
        Err(e) => return usage(Error::from(e)),
    };
    let mut ok = true;
    for e in &exprs {
        match s.eval_top(e) {
            Ok(v) => {
                if let Value::Witness { witness, .. } = &v {
                    ok &= witness.verified();
                }
                println!("{v}");
            }
            Err(err) => {
                eprintln!("error: {err}");
                return ExitCode::from(EXIT_FAIL);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

/// Reads until the buffered text parses, then evaluates it. Errors are
/// reported and the session continues.
fn repl(mut s: Session) -> ExitCode {
    let interactive = io::stdin().is_terminal();
    let prompt = |cont: bool| {
        if interactive {
            print!("{}", if cont { "... " } else { "magma> " });
            let _ = io::stdout().flush();
        }
    };
    let mut buf = String::new();
    prompt(false);
    for line in io::stdin().lock().lines() {
        let Ok(line) = line else { break };
        buf.push_str(&line);
        buf.push('\n');
        match sexp::parse_all(&buf) {
            Err(ParseError::Unclosed(_)) => {
                prompt(true);
                continue;
            }
            Err(e) => eprintln!("error: {}", Error::from(e)),
            Ok(exprs) => {
                for e in &exprs {
                    match s.eval_top(e) {
                        Ok(v) => println!("{v}"),
                        Err(err) => eprintln!("error: {err}"),
                    }
                }
            }
        }
        buf.clear();
        prompt(false);
    }
    if !buf.trim().is_empty() {
        eprintln!("error: input ended inside an expression");
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::SUCCESS
}

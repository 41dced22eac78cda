//! Command-line front end.
//!
//! Exit codes: 0 success or predicate true, 1 predicate false, 2 usage or
//! parse error, 3 internal invariant violation.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::formats::{self, Automaton};
use crate::linalg;
use crate::monoid;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "automin", about = "Minimize automata and transducers", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MonoidFormat {
    Text,
    Block,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exit 0 if the dfa/nfa accepts WORD, 1 otherwise
    Accept { file: String, word: String },
    /// Print the transducer's output on WORD; exit 1 if undefined
    Apply { file: String, word: String },
    /// Minimize (nfa inputs are determinized first)
    Min {
        file: String,
        #[arg(short)]
        o: Option<String>,
    },
    /// Subset construction
    Det {
        file: String,
        #[arg(short)]
        o: Option<String>,
    },
    /// Backward-deterministic acceptor of the same language
    Codet {
        file: String,
        #[arg(short)]
        o: Option<String>,
    },
    /// Determinize the codeterminized automaton
    Brzozowski {
        file: String,
        #[arg(short)]
        o: Option<String>,
    },
    /// Minimize a weighted automaton
    Wmin {
        file: String,
        #[arg(short)]
        o: Option<String>,
    },
    /// Print the weight of WORD
    Wapply { file: String, word: String },
    /// Minimize a subsequential transducer
    Tmin {
        file: String,
        #[arg(short)]
        o: Option<String>,
    },
    /// Syntactic monoid of the accepted language
    Synmon {
        file: String,
        #[arg(long, value_enum, default_value = "text")]
        format: MonoidFormat,
        #[arg(short)]
        o: Option<String>,
    },
    /// Exit 0 if both files describe the same behaviour, 1 otherwise
    Equiv { left: String, right: String },
    /// Graphviz rendering
    ExportDot {
        file: String,
        #[arg(short)]
        o: Option<String>,
    },
}

/// A failure, already mapped to its exit code.
struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Contract(_) | Error::Invariant(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        msg: msg.into(),
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn load(&mut self, path: &str) -> Result<Automaton, Failure> {
        let text = if path == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| usage(format!("stdin: {e}")))?;
            s
        } else {
            fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?
        };
        let parsed = formats::parse_with_warnings(&text).map_err(|e| usage(format!("{path}: {e}")))?;
        for w in &parsed.warnings {
            let _ = writeln!(self.stderr, "warning: {path}: {w}");
        }
        Ok(parsed.automaton)
    }

    fn emit(&mut self, out: &Option<String>, text: &str) -> Result<(), Failure> {
        match out.as_deref() {
            None | Some("-") => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(|e| usage(format!("stdout: {e}"))),
            Some(path) => fs::write(path, text).map_err(|e| usage(format!("{path}: {e}"))),
        }
    }
}

fn mismatch(a: &Automaton, expected: &str) -> Failure {
    Error::KindMismatch {
        expected: expected.into(),
        found: a.kind().into(),
    }
    .into()
}

fn expect_kind(a: &Automaton, kinds: &[&str]) -> Result<(), Failure> {
    if kinds.contains(&a.kind()) {
        Ok(())
    } else {
        Err(mismatch(a, &kinds.join(" or ")))
    }
}

fn acceptor(a: &Automaton) -> Result<crate::nfa::Nfa, Failure> {
    expect_kind(a, &["dfa", "nfa"])?;
    Ok(a.as_nfa().expect("acceptor"))
}

fn exit_for(predicate: bool) -> i32 {
    if predicate {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

fn dispatch(cmd: Command, io: &mut Io) -> Result<i32, Failure> {
    match cmd {
        Command::Accept { file, word } => {
            let a = io.load(&file)?;
            let n = acceptor(&a)?;
            Ok(exit_for(n.accepts(&word)?))
        }
        Command::Apply { file, word } => {
            let a = io.load(&file)?;
            let Automaton::Sst(t) = &a else {
                return Err(mismatch(&a, "sst"));
            };
            match t.apply(&word)? {
                Some(out) => {
                    let shown = if out.is_empty() { "@".to_string() } else { out };
                    io.emit(&None, &format!("{shown}\n"))?;
                    Ok(EXIT_OK)
                }
                None => Ok(EXIT_FALSE),
            }
        }
        Command::Min { file, o } => {
            let a = io.load(&file)?;
            io.emit(&o, &formats::serialize(&a.minimize()))?;
            Ok(EXIT_OK)
        }
        Command::Det { file, o } => {
            let n = acceptor(&io.load(&file)?)?;
            io.emit(&o, &formats::serialize(&Automaton::Dfa(n.determinize())))?;
            Ok(EXIT_OK)
        }
        Command::Codet { file, o } => {
            let n = acceptor(&io.load(&file)?)?;
            io.emit(&o, &formats::serialize(&Automaton::Nfa(n.codeterminize())))?;
            Ok(EXIT_OK)
        }
        Command::Brzozowski { file, o } => {
            let n = acceptor(&io.load(&file)?)?;
            io.emit(&o, &formats::serialize(&Automaton::Dfa(n.brzozowski())))?;
            Ok(EXIT_OK)
        }
        Command::Wmin { file, o } => {
            let a = io.load(&file)?;
            expect_kind(&a, &["wfa"])?;
            io.emit(&o, &formats::serialize(&a.minimize()))?;
            Ok(EXIT_OK)
        }
        Command::Wapply { file, word } => {
            let a = io.load(&file)?;
            let Automaton::Wfa(w) = &a else {
                return Err(mismatch(&a, "wfa"));
            };
            let x = w.weight(&word)?;
            io.emit(&None, &format!("{}\n", linalg::format_rational(&x)))?;
            Ok(EXIT_OK)
        }
        Command::Tmin { file, o } => {
            let a = io.load(&file)?;
            expect_kind(&a, &["sst"])?;
            io.emit(&o, &formats::serialize(&a.minimize()))?;
            Ok(EXIT_OK)
        }
        Command::Synmon { file, format, o } => {
            let a = io.load(&file)?;
            expect_kind(&a, &["dfa", "nfa"])?;
            let r = monoid::syntactic_monoid(&a.as_dfa().expect("acceptor"));
            let text = match format {
                MonoidFormat::Text => formats::render_monoid(&r),
                MonoidFormat::Block => formats::serialize_monoid(&r),
            };
            io.emit(&o, &text)?;
            Ok(EXIT_OK)
        }
        Command::Equiv { left, right } => {
            let x = io.load(&left)?;
            let y = io.load(&right)?;
            Ok(exit_for(x.equivalent(&y)?))
        }
        Command::ExportDot { file, o } => {
            let a = io.load(&file)?;
            io.emit(&o, &formats::to_dot(&a))?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.stderr, "error: {}", f.msg);
            f.code
        }
    }
}

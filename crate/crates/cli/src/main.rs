//! `pinclass`: decide whether a finitely based permutation class contains
//! infinitely many simple permutations, and inspect the structures involved.
//!
//! Exit codes: 0 finite (or success), 3 infinite, 2 resource cap hit,
//! 1 usage or input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pinclass::automata::strict_pin_word_automaton;
use pinclass::decision::{decide_with, pin_transducer, DecideOptions, Verdict};
use pinclass::oracle::{pin_class_basis_with, pin_class_series, simples_in_class_with};
use pinclass::oscillation::{embed_into_inc_osc, EmbedError};
use pinclass::pin::perm_of;
use pinclass::{Basis, Error, Limits, Permutation, PinWord};

const EXIT_FINITE: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_CAP: u8 = 2;
const EXIT_INFINITE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "pinclass", version, about = "Simple permutations in finitely based classes")]
struct Cli {
    /// Worker threads for the parallel stages (0 = one per core).
    #[arg(long, global = true, env = "PINCLASS_JOBS", default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether Av(B) contains infinitely many simple permutations.
    Decide {
        /// Basis permutations, separated by commas or spaces. May be repeated.
        #[arg(long, required = true, num_args = 1..)]
        basis: Vec<String>,
        /// Cap on subset states during determinization.
        #[arg(long, env = "PINCLASS_STATE_CAP")]
        state_cap: Option<usize>,
        /// Feed only the ⪯-minimal pin words of the basis to the transducer.
        #[arg(long, env = "PINCLASS_MINIMAL_PINS")]
        minimal_pins: bool,
        /// Print the report as JSON.
        #[arg(long, env = "PINCLASS_JSON")]
        json: bool,
        /// Write the transducer and automata, in adjacency text form, to DIR.
        #[arg(long, value_name = "DIR", env = "PINCLASS_DUMP_AUTOMATA")]
        dump_automata: Option<PathBuf>,
        /// Print the elapsed time to standard error.
        #[arg(long)]
        timing: bool,
    },
    /// Enumerate the pin class.
    PinClass {
        #[command(subcommand)]
        action: PinClassAction,
    },
    /// Print the permutation of a pin word.
    PinPerm { word: String },
    /// Embed a permutation into the increasing oscillation.
    EmbedOsc { perm: String },
    /// Count simple permutations of Av(B) by length.
    Simples {
        /// Basis permutations, separated by commas or spaces. Empty for all permutations.
        #[arg(long, num_args = 0.., default_values_t = Vec::<String>::new())]
        basis: Vec<String>,
        #[arg(long)]
        max_len: usize,
        /// Also list the simple permutations of each length.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand, Debug)]
enum PinClassAction {
    /// Number of permutations of each length 1..=N.
    Count {
        #[arg(long)]
        max_len: usize,
    },
    /// Basis elements of length at most N, one per line.
    Basis {
        #[arg(long)]
        max_len: usize,
    },
}

/// A failure mapped to its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_basis(parts: &[String]) -> Result<Basis, Failure> {
    Ok(Basis::parse(&parts.join(" "))?)
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Decide { basis, state_cap, minimal_pins, json, dump_automata, timing } => {
            let basis = parse_basis(&basis)?;
            let mut limits = Limits::default();
            if let Some(cap) = state_cap {
                limits.state_cap = cap;
            }
            let opts = DecideOptions { limits, minimal_pins };
            let (report, failure) = match decide_with(&basis, &opts) {
                Ok(r) => (r, None),
                Err(e) => (e.partial, Some(Failure::from(e.error))),
            };
            print!("{}", if json { report.to_json() + "\n" } else { report.to_text() });
            if timing {
                eprintln!("elapsed: {:.3}s", report.stats.elapsed.as_secs_f64());
            }
            if let Some(dir) = dump_automata {
                dump(&dir, report.pin_language.as_ref())?;
            }
            if let Some(f) = failure {
                return Err(f);
            }
            Ok(match report.verdict {
                Some(Verdict::Infinite) => EXIT_INFINITE,
                _ => EXIT_FINITE,
            })
        }
        Command::PinClass { action: PinClassAction::Count { max_len } } => {
            for count in pin_class_series(max_len)? {
                println!("{count}");
            }
            Ok(0)
        }
        Command::PinClass { action: PinClassAction::Basis { max_len } } => {
            for p in pin_class_basis_with(max_len, &Limits::default())? {
                println!("{p}");
            }
            Ok(0)
        }
        Command::PinPerm { word } => {
            let w: PinWord = word.parse().map_err(Error::from)?;
            println!("{}", perm_of(&w));
            Ok(0)
        }
        Command::EmbedOsc { perm } => {
            let p: Permutation = perm.parse()?;
            match embed_into_inc_osc(&p) {
                Ok(positions) => {
                    let text: Vec<String> = positions.iter().map(usize::to_string).collect();
                    println!("{}", text.join(" "));
                }
                Err(EmbedError::Contains(b)) => println!("contains {b}"),
            }
            Ok(0)
        }
        Command::Simples { basis, max_len, list } => {
            let basis = parse_basis(&basis)?;
            let limits = Limits::default();
            for n in 1..=max_len {
                let simples = simples_in_class_with(&basis, n, &limits)?;
                println!("{n}\t{}", simples.len());
                if list {
                    for p in simples {
                        println!("  {p}");
                    }
                }
            }
            Ok(0)
        }
    }
}

fn dump(dir: &Path, pin_language: Option<&pinclass::automata::Dfa>) -> Result<(), Failure> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join("transducer.txt"), pin_transducer().to_text())?;
    fs::write(dir.join("strict.txt"), strict_pin_word_automaton().to_text())?;
    if let Some(l) = pin_language {
        fs::write(dir.join("pin_language.txt"), l.to_text())?;
    }
    Ok(())
}

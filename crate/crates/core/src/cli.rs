//! The `safra` command line.
//!
//! Exit codes: 0 success (or accept / equivalent), 1 reject or
//! counterexample found, 2 parse, validation and usage errors, 3 when the
//! exploration cap is exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::automaton::{AcceptanceKind, OmegaAutomaton};
use crate::determinize::{Determinization, DEFAULT_CAP};
use crate::equiv::{counterexample, WordSet};
use crate::error::Error;
use crate::format::{emit, parse};
use crate::its::build_its;
use crate::oracle::member;
use crate::random::{random_automaton, RandomSpec};
use crate::stateset::StateSet;
use crate::word::UltimatelyPeriodicWord;
use crate::{determinize_classic, determinize_improved, determinize_rabin};

#[derive(Parser, Debug)]
#[command(name = "safra", version, about = "Determinize and inspect ω-automata")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algo {
    Classic,
    Improved,
    Rabin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Buchi,
    Genbuchi,
    Streett,
    Parity,
    Rabin,
}

impl From<Kind> for AcceptanceKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Buchi => AcceptanceKind::Buchi,
            Kind::Genbuchi => AcceptanceKind::GenBuchi,
            Kind::Streett => AcceptanceKind::Streett,
            Kind::Parity => AcceptanceKind::Parity,
            Kind::Rabin => AcceptanceKind::Rabin,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a deterministic Rabin automaton.
    Determinize {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "improved")]
        algo: Algo,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write a JSON-lines dictionary from states to trees.
        #[arg(long)]
        dict: Option<PathBuf>,
    },
    /// Decide membership of an ultimately periodic word `u;v`.
    Member {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Compare two automata on sampled or enumerated words.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 4)]
        maxlen: usize,
        /// Test every word with |u| ≤ L and 1 ≤ |v| ≤ L instead of sampling.
        #[arg(long, value_name = "L")]
        exhaustive: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generate a seeded random automaton.
    Random {
        #[arg(long = "type", value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a CSV row of construction statistics.
    Stats {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "improved")]
        algo: Algo,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        no_header: bool,
    },
    /// Graphviz output for an automaton or for its reachable trees.
    Dot {
        input: PathBuf,
        /// Render every reachable tree of the construction instead.
        #[arg(long)]
        trees: bool,
        #[arg(long, value_enum, default_value = "improved")]
        algo: Algo,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the increasing tree of sets for a family of B sets.
    Its {
        /// Take the B sets of this automaton, after conversion to Streett.
        input: Option<PathBuf>,
        #[arg(long, conflicts_with = "input", requires = "b")]
        states: Option<usize>,
        /// One B set as space-separated states; repeat for B(1), B(2), ...
        #[arg(long, allow_hyphen_values = true)]
        b: Vec<String>,
        #[arg(long)]
        dot: bool,
    },
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::CapExceeded(_)) { 3 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn load(path: &Path) -> Result<OmegaAutomaton, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let a = parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let bad = a.validate();
    if !bad.is_empty() {
        let list: Vec<String> = bad.iter().map(ToString::to_string).collect();
        return Err(usage(format!("{}: invalid automaton: {}", path.display(), list.join("; "))));
    }
    Ok(a)
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| usage(e.to_string())),
    }
}

/// Output of any of the three constructions.
struct Built {
    automaton: OmegaAutomaton,
    /// Tree-labelled parts: one for classic/improved, one per pair for Rabin.
    parts: Vec<Determinization>,
}

fn build(a: &OmegaAutomaton, algo: Algo, cap: usize) -> Result<Built, Failure> {
    let is_rabin = a.acceptance().kind() == AcceptanceKind::Rabin;
    if is_rabin != (algo == Algo::Rabin) {
        return Err(usage(
            format!("algorithm {algo:?} does not accept {} input", a.acceptance().kind()).to_lowercase(),
        ));
    }
    Ok(match algo {
        Algo::Classic => {
            let d = determinize_classic(a, cap)?;
            Built { automaton: d.automaton.clone(), parts: vec![d] }
        }
        Algo::Improved => {
            let d = determinize_improved(a, cap)?;
            Built { automaton: d.automaton.clone(), parts: vec![d] }
        }
        Algo::Rabin => {
            let d = determinize_rabin(a, cap)?;
            Built { automaton: d.automaton, parts: d.components }
        }
    })
}

fn trees_dot(parts: &[Determinization]) -> String {
    let mut out = String::from("digraph trees {\n  node [shape=box];\n");
    for (c, part) in parts.iter().enumerate() {
        for (s, t) in part.trees.iter().enumerate() {
            let id = if parts.len() == 1 { format!("s{s}") } else { format!("c{c}s{s}") };
            out.push_str(&format!("  subgraph cluster_{id} {{\n  label=\"{id}\";\n"));
            if t.is_empty() {
                out.push_str(&format!("  {id}n [label=\"-\", shape=plaintext];\n"));
            } else {
                out.push_str(&t.dot_statements(&format!("{id}n")));
            }
            out.push_str("  }\n");
        }
    }
    out.push_str("}\n");
    out
}

fn parse_set(text: &str) -> Result<StateSet, Failure> {
    text.split_whitespace().map(|t| t.parse::<usize>().map_err(|_| usage(format!("bad state `{t}`")))).collect()
}

fn execute(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Determinize { input, algo, cap, out, dict } => {
            let a = load(&input)?;
            let built = build(&a, algo, cap)?;
            write_out(out.as_deref(), &emit(&built.automaton))?;
            if let Some(path) = dict {
                if algo == Algo::Rabin {
                    return Err(usage("--dict is not available for the rabin algorithm"));
                }
                fs::write(&path, built.parts[0].dictionary_jsonl())
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            eprintln!("states: {}, index: {}", built.automaton.states(), built.automaton.acceptance().index_size());
            Ok(0)
        }
        Command::Member { input, word } => {
            let a = load(&input)?;
            let w: UltimatelyPeriodicWord = word.parse()?;
            let accepted = member(&a, &w)?;
            println!("{}", if accepted { "accept" } else { "reject" });
            Ok(if accepted { 0 } else { 1 })
        }
        Command::Equiv { first, second, samples, maxlen, exhaustive, seed } => {
            let a = load(&first)?;
            let b = load(&second)?;
            let words = match exhaustive {
                Some(max_len) => WordSet::Exhaustive { max_len },
                None => WordSet::Sampled { samples, max_len: maxlen, seed },
            };
            match counterexample(&a, &b, words)? {
                Some(c) => {
                    let by = if c.in_first { "first" } else { "second" };
                    println!("counterexample: {} (accepted by the {by} automaton only)", c.word);
                    Ok(1)
                }
                None => {
                    println!("equivalent on tested set");
                    Ok(0)
                }
            }
        }
        Command::Random { kind, n, k, alphabet, density, seed, out } => {
            let spec = RandomSpec { kind: kind.into(), states: n, pairs: k, alphabet, density };
            let a = random_automaton(&spec, seed)?;
            write_out(out.as_deref(), &emit(&a))?;
            Ok(0)
        }
        Command::Stats { input, algo, cap, no_header } => {
            let a = load(&input)?;
            let start = Instant::now();
            let built = build(&a, algo, cap)?;
            let wall = start.elapsed().as_secs_f64() * 1000.0;
            let (n, k) = (a.states(), a.acceptance().index_size());
            let max_nodes = built.parts.iter().map(Determinization::max_nodes).max().unwrap_or(0);
            let max_spine = built.parts.iter().map(Determinization::max_spine).max().unwrap_or(0);
            if !no_header {
                println!("n,k,mu,algo,states,index,max_nodes,max_spine,wall_ms");
            }
            println!(
                "{n},{k},{},{},{},{},{max_nodes},{max_spine},{wall:.3}",
                n.min(k),
                format!("{algo:?}").to_lowercase(),
                built.automaton.states(),
                built.automaton.acceptance().index_size(),
            );
            Ok(0)
        }
        Command::Dot { input, trees, algo, cap, out } => {
            let a = load(&input)?;
            let text = if trees {
                trees_dot(&build(&a, algo, cap)?.parts)
            } else {
                let title = input.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                a.to_dot(&title)
            };
            write_out(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Its { input, states, b, dot } => {
            let (n, family) = match (input, states) {
                (Some(path), _) => {
                    let s = load(&path)?.as_streett()?;
                    let family = s.acceptance().pairs().unwrap_or_default().iter().map(|p| p.b.clone()).collect();
                    (s.states(), family)
                }
                (None, Some(n)) => (n, b.iter().map(|t| parse_set(t)).collect::<Result<Vec<_>, _>>()?),
                (None, None) => return Err(usage("give an automaton file or --states with --b sets")),
            };
            let its = build_its(n, &family)?;
            print!("{}", if dot { its.to_dot() } else { its.render() });
            Ok(0)
        }
    }
}

/// Runs the command line on `args` (program name first) and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn help_exits_zero_and_bad_flags_two() {
        assert_eq!(run(["safra", "--help"]), 0);
        assert_eq!(run(["safra", "determinize"]), 2);
        assert_eq!(run(["safra", "member", "/nonexistent", "--word", ";0"]), 2);
    }
}

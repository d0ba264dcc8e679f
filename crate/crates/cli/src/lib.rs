//! Command-line front end for `sofic-core`.
//!
//! [`run`] takes the argument list and the three standard streams, so the
//! whole interface can be driven from tests.

pub mod fixtures;
pub mod format;

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use sofic_core::markov::{
    build_k_block_model, hidden_markov_rep, rep_to_hidden_markov, BlockMap, MarkovError,
    MarkovMeasure,
};
use sofic_core::order::{
    is_k_step, lemma_jm_check, markov_order, VerdictKind,
};
use sofic_core::repr::{
    normalize, reduce, verify_measure_axioms, LinearRepresentation, ReprError,
    MAX_ENUMERATION_LEN,
};
use sofic_core::Workers;

use crate::format::{
    markov_fields, parse_markov, parse_rep, print_markov, print_rep, rep_fields, MarkovFileError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Human,
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "sofic", version, about = "Exact computations on hidden Markov measures")]
struct Cli {
    /// Output style; `machine` prints one `key=value` per line.
    #[arg(long, value_enum, default_value_t = OutputMode::Human, global = true)]
    output: OutputMode,
    /// List the bundled example files (usable as `@name`).
    #[arg(long)]
    fixtures: bool,
    /// Worker threads for parallel stages.
    #[arg(long, global = true, env = "SOFIC_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Option<Command>,
}

/// FILE arguments accept a path, `-` for stdin, or `@name` for a bundled example.
#[derive(Debug, Subcommand)]
enum Command {
    /// Value of a word.
    Eval {
        /// Representation file, `@fixture`, or `-` for stdin.
        file: String,
        /// Symbols run together, or comma-separated for longer names.
        word: String,
    },
    /// Minimal equivalent representation.
    Reduce {
        /// Representation file, `@fixture`, or `-` for stdin.
        file: String,
    },
    /// Stochastic normal form.
    Normalize {
        /// Representation file, `@fixture`, or `-` for stdin.
        file: String,
    },
    /// Markov order, or a proof that there is none.
    Order {
        /// Representation file, `@fixture`, or `-` for stdin.
        file: String,
        /// Give up after this many levels (default 4096).
        #[arg(long)]
        depth_cap: Option<u64>,
    },
    /// Whether the measure is k-step Markov.
    IsMarkov {
        /// Representation file, `@fixture`, or `-` for stdin.
        file: String,
        /// Order to test.
        #[arg(short = 'k')]
        k: usize,
    },
    /// Hidden Markov chain presenting a normalized representation.
    ToHmm {
        /// Representation file, `@fixture`, or `-` for stdin.
        file: String,
    },
    /// Representation of a Markov chain seen through a letter map.
    FromHmm {
        /// Markov chain file, `@fixture`, or `-` for stdin.
        #[arg(value_name = "MARKOV_FILE")]
        markov: String,
        /// Comma-separated `state=letter` pairs.
        #[arg(long)]
        map: String,
    },
    /// Check the consistency equations of a measure.
    Axioms {
        /// Representation file, `@fixture`, or `-` for stdin.
        file: String,
        /// Longest word to check (at most 31).
        #[arg(long)]
        max_len: usize,
    },
    /// Order-k block chain fitted to the measure.
    Kblock {
        /// Representation file, `@fixture`, or `-` for stdin.
        file: String,
        /// Block length.
        #[arg(short = 'k')]
        k: usize,
    },
    /// Check μ(abw)μ(b) = μ(ab)μ(bw) on all short words.
    JmCheck {
        /// Representation file, `@fixture`, or `-` for stdin.
        file: String,
        /// Longest word to check (at most 31).
        #[arg(long)]
        max_len: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<ReprError> for Failure {
    fn from(e: ReprError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<MarkovError> for Failure {
    fn from(e: MarkovError) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Result of a command: free-form human text plus ordered key/value pairs.
struct Report {
    human: String,
    fields: Vec<(String, String)>,
}

impl Report {
    fn from_fields(fields: Vec<(String, String)>) -> Self {
        let human = fields.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ") + "\n";
        Report { human, fields }
    }

    fn render(&self, mode: OutputMode) -> String {
        match mode {
            OutputMode::Human => self.human.clone(),
            OutputMode::Machine => self.fields.iter().map(|(k, v)| format!("{k}={v}\n")).collect(),
        }
    }
}

fn field(key: &str, value: impl ToString) -> (String, String) {
    (key.to_string(), value.to_string())
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut (dyn Read + Send), stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };
    if cli.fixtures {
        for f in fixtures::FIXTURES {
            let _ = writeln!(stdout, "@{}\t{}\t{}", f.name, f.kind.label(), f.description);
        }
        return EXIT_OK;
    }
    let Some(command) = cli.command else {
        let _ = writeln!(stderr, "error: a subcommand is required (see --help)");
        return EXIT_USAGE;
    };
    let outcome = match cli.threads {
        Some(threads) => match Workers::new(threads) {
            Ok(workers) => workers.install(|| execute(command, stdin)),
            Err(e) => Err(Failure::Usage(format!("cannot start {threads} worker threads: {e}"))),
        },
        None => execute(command, stdin),
    };
    match outcome {
        Ok(report) => {
            let _ = write!(stdout, "{}", report.render(cli.output));
            EXIT_OK
        }
        Err(Failure::Usage(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_USAGE
        }
        Err(Failure::Domain(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_DOMAIN
        }
    }
}

fn read_source(source: &str, stdin: &mut (dyn Read + Send), kind: fixtures::Kind) -> Result<String, Failure> {
    if let Some(name) = source.strip_prefix('@') {
        let fixture = fixtures::find(name)
            .ok_or_else(|| Failure::Usage(format!("no bundled example named `{name}` (see --fixtures)")))?;
        if fixture.kind != kind {
            return Err(Failure::Usage(format!("`@{name}` is a {} file", fixture.kind.label())));
        }
        return Ok(fixture.text.to_string());
    }
    if source == "-" {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(source).map_err(|e| Failure::Usage(format!("cannot read `{source}`: {e}")))
}

fn load_rep(source: &str, stdin: &mut (dyn Read + Send)) -> Result<LinearRepresentation, Failure> {
    let text = read_source(source, stdin, fixtures::Kind::Representation)?;
    parse_rep(&text).map_err(|e| Failure::Usage(format!("{source}: {e}")))
}

fn load_markov(source: &str, stdin: &mut (dyn Read + Send)) -> Result<MarkovMeasure, Failure> {
    let text = read_source(source, stdin, fixtures::Kind::Markov)?;
    parse_markov(&text).map_err(|e| match e {
        MarkovFileError::Syntax(e) => Failure::Usage(format!("{source}: {e}")),
        MarkovFileError::Invalid(e) => Failure::Domain(format!("{source}: {e}")),
    })
}

fn check_len(max_len: usize) -> Result<(), Failure> {
    if max_len > MAX_ENUMERATION_LEN {
        return Err(Failure::Usage(format!(
            "--max-len {max_len} exceeds the enumeration limit {MAX_ENUMERATION_LEN}"
        )));
    }
    Ok(())
}

fn parse_map(states: &sofic_core::repr::Alphabet, text: &str) -> Result<BlockMap, Failure> {
    let pairs = text
        .split(',')
        .map(|pair| {
            pair.split_once('=')
                .map(|(s, t)| (s.trim(), t.trim()))
                .ok_or_else(|| Failure::Usage(format!("map entry `{pair}` is not of the form state=letter")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    BlockMap::from_pairs(states, &pairs).map_err(|e| Failure::Usage(e.to_string()))
}

fn rep_report(rep: &LinearRepresentation) -> Report {
    Report { human: print_rep(rep), fields: rep_fields(rep) }
}

fn execute(command: Command, stdin: &mut (dyn Read + Send)) -> Result<Report, Failure> {
    match command {
        Command::Eval { file, word } => {
            let rep = load_rep(&file, stdin)?;
            let w = rep.alphabet().parse_word(&word).map_err(|e| Failure::Usage(e.to_string()))?;
            let value = rep.evaluate(&w);
            Ok(Report { human: format!("{value}\n"), fields: vec![field("value", value)] })
        }
        Command::Reduce { file } => Ok(rep_report(&reduce(&load_rep(&file, stdin)?))),
        Command::Normalize { file } => Ok(rep_report(&normalize(&load_rep(&file, stdin)?)?)),
        Command::Order { file, depth_cap } => {
            let verdict = markov_order(&load_rep(&file, stdin)?, depth_cap);
            let mut fields = match verdict.kind {
                VerdictKind::Order(k) => vec![field("verdict", "Order"), field("order", k)],
                VerdictKind::NotMarkov { proof_depth } => {
                    vec![field("verdict", "NotMarkov"), field("proof_depth", proof_depth)]
                }
                VerdictKind::Inconclusive { depth_reached } => {
                    vec![field("verdict", "Inconclusive"), field("depth_reached", depth_reached)]
                }
            };
            fields.push(field("minimal_dim", verdict.minimal_dim));
            fields.push(field("cutoff", &verdict.cutoff));
            Ok(Report::from_fields(fields))
        }
        Command::IsMarkov { file, k } => {
            let rep = load_rep(&file, stdin)?;
            Ok(Report::from_fields(vec![field("k", k), field("markov", is_k_step(&rep, k))]))
        }
        Command::ToHmm { file } => {
            let (m, f) = rep_to_hidden_markov(&load_rep(&file, stdin)?)?;
            let map = (0..m.states().len())
                .map(|s| format!("{}={}", m.states().symbol(s), f.target().symbol(f.apply(s))))
                .collect::<Vec<_>>()
                .join(",");
            let mut fields = markov_fields(&m);
            fields.push(field("map", &map));
            Ok(Report { human: format!("{}# map {map}\n", print_markov(&m)), fields })
        }
        Command::FromHmm { markov, map } => {
            let m = load_markov(&markov, stdin)?;
            let f = parse_map(m.states(), &map)?;
            Ok(rep_report(&hidden_markov_rep(&m, &f)?))
        }
        Command::Axioms { file, max_len } => {
            check_len(max_len)?;
            let rep = load_rep(&file, stdin)?;
            let report = verify_measure_axioms(&rep, max_len);
            let word = |w: &Option<_>| match w {
                Some(w) => rep.alphabet().render(w),
                None => "none".to_string(),
            };
            Ok(Report::from_fields(vec![
                field("holds", report.holds()),
                field("max_len", max_len),
                field("empty_value", &report.empty_value),
                field("right_violation", word(&report.right_violation)),
                field("left_violation", word(&report.left_violation)),
            ]))
        }
        Command::Kblock { file, k } => {
            let model = build_k_block_model(&load_rep(&file, stdin)?, k)?;
            let mut fields = vec![field("k", k)];
            fields.extend(markov_fields(model.markov()));
            Ok(Report { human: print_markov(model.markov()), fields })
        }
        Command::JmCheck { file, max_len } => {
            check_len(max_len)?;
            let rep = load_rep(&file, stdin)?;
            let report = lemma_jm_check(&rep, max_len);
            let mut fields = vec![
                field("holds", report.holds()),
                field("max_len", max_len),
                field("checked", report.checked),
            ];
            if let Some(v) = &report.violation {
                let alphabet = rep.alphabet();
                fields.push(field("violation_a", alphabet.symbol(v.a)));
                fields.push(field("violation_b", alphabet.symbol(v.b)));
                fields.push(field("violation_w", alphabet.render(&v.w)));
            }
            Ok(Report::from_fields(fields))
        }
    }
}

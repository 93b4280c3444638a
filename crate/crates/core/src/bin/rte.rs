use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rte_core::dl::text::{parse_kb, print_assertion, print_gci};
use rte_core::dl::Gci;
use rte_core::exec::{with_threads, Exec};
use rte_core::lexicon::{parse_lexicon, LexRelation};
use rte_core::pipeline::{evaluate, parse_corpus, rte_check, PipelineConfig, RteError};
use rte_core::saturation::{saturate_with, SaturationError};
use rte_core::semgraph::Matcher;
use rte_core::sentence::Vocabulary;
use rte_core::tableau::{Reasoner, ReasonerConfig, ReasonerError, DEFAULT_MAX_NODES};

#[derive(Parser)]
#[command(name = "rte", version, about = "Textual entailment by description-logic subgraph matching")]
struct Cli {
    /// Word lists replacing the bundled ones.
    #[arg(long, global = true)]
    words: Option<PathBuf>,
    /// Extra word lists or frames merged into the vocabulary.
    #[arg(long, global = true)]
    frames: Option<PathBuf>,
    /// Completion-graph node limit per tableau run.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_NODES)]
    max_nodes: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a text sentence entails a hypothesis sentence.
    Check {
        #[arg(long)]
        text: String,
        #[arg(long)]
        hyp: String,
        #[arg(long)]
        lexicon: Option<PathBuf>,
        /// Definitions in knowledge-base syntax, used when they share names with the pair.
        #[arg(long)]
        axioms: Option<PathBuf>,
        /// Print the background axioms, saturated A-Boxes and candidates.
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        dump_graphs: bool,
        /// Require distinct hypothesis nodes to map to distinct text nodes.
        #[arg(long)]
        injective: bool,
    },
    /// Evaluate an annotated corpus and print a confusion-matrix report.
    Eval {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        lexicon: Option<PathBuf>,
        #[arg(long)]
        axioms: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        /// Worker threads; 1 runs sequentially.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print the saturated A-Box of a knowledge-base file.
    Saturate {
        #[arg(long)]
        kb: PathBuf,
        /// Also print the tableau trace of the consistency check.
        #[arg(long)]
        explain: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

enum Failure {
    Input(String),
    Limit(String),
}

impl From<ReasonerError> for Failure {
    fn from(e: ReasonerError) -> Self {
        Failure::Limit(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_lexicon(path: Option<&PathBuf>) -> Result<Vec<LexRelation>, Failure> {
    match path {
        None => Ok(Vec::new()),
        Some(p) => parse_lexicon(&read(p)?).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
    }
}

fn load_axioms(path: Option<&PathBuf>) -> Result<std::collections::BTreeSet<Gci>, Failure> {
    match path {
        None => Ok(Default::default()),
        Some(p) => parse_kb(&read(p)?)
            .map(|kb| kb.tbox)
            .map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
    }
}

fn vocabulary(cli: &Cli) -> Result<Vocabulary, Failure> {
    let parse = |p: &PathBuf| {
        Vocabulary::parse(&read(p)?).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
    };
    let mut v = match &cli.words {
        Some(p) => parse(p)?,
        None => Vocabulary::standard(),
    };
    if let Some(p) = &cli.frames {
        v.extend(parse(p)?);
    }
    Ok(v)
}

fn reasoner(cli: &Cli, explain: bool) -> Reasoner {
    Reasoner::new(ReasonerConfig {
        max_nodes: cli.max_nodes,
        explain,
        ..Default::default()
    })
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Check {
            text,
            hyp,
            lexicon,
            axioms,
            explain,
            dump_graphs,
            injective,
        } => {
            let config = PipelineConfig {
                vocabulary: vocabulary(cli)?,
                lexicon: load_lexicon(lexicon.as_ref())?,
                axioms: load_axioms(axioms.as_ref())?,
                matcher: Matcher {
                    reasoner: reasoner(cli, false),
                    injective: *injective,
                },
                exec: Exec::default(),
            };
            let r = rte_check(text, hyp, &config).map_err(|e| match e {
                RteError::Reasoner(e) => Failure::from(e),
                other => Failure::Input(other.to_string()),
            })?;
            if *explain {
                println!("# background axioms");
                r.tbox.iter().for_each(|g| println!("{}", print_gci(g)));
                println!("# saturated text");
                r.text_abox.iter().for_each(|a| println!("{}", print_assertion(a)));
                println!("# saturated hypothesis");
                r.hyp_abox.iter().for_each(|a| println!("{}", print_assertion(a)));
                println!("# candidates");
                for (h, ts) in &r.candidates {
                    let ts: Vec<&str> = ts.iter().map(|t| t.as_str()).collect();
                    println!("{h} : {}", ts.join(" "));
                }
            }
            if *dump_graphs {
                print!("# text graph\n{}", r.text_graph);
                print!("# hypothesis graph\n{}", r.hyp_graph);
            }
            println!("entailed: {}", r.entailed);
            if let Some(w) = &r.witness {
                print!("{w}");
            }
            Ok(())
        }
        Command::Eval {
            corpus,
            lexicon,
            axioms,
            format,
            jobs,
        } => {
            let pairs = parse_corpus(&read(corpus)?)
                .map_err(|e| Failure::Input(format!("{}: {e}", corpus.display())))?;
            let config = PipelineConfig {
                vocabulary: vocabulary(cli)?,
                lexicon: load_lexicon(lexicon.as_ref())?,
                axioms: load_axioms(axioms.as_ref())?,
                matcher: Matcher {
                    reasoner: reasoner(cli, false),
                    injective: false,
                },
                exec: if *jobs == Some(1) { Exec::Sequential } else { Exec::Parallel },
            };
            let report = match jobs {
                Some(n) if *n > 1 => with_threads(*n, || evaluate(&pairs, &config))?,
                _ => evaluate(&pairs, &config)?,
            };
            match format {
                Format::Json => print!("{}", report.to_json()),
                Format::Tsv => print!("{}", report.to_tsv()),
            }
            Ok(())
        }
        Command::Saturate { kb, explain } => {
            let kb = parse_kb(&read(kb)?).map_err(|e| Failure::Input(format!("{}: {e}", kb.display())))?;
            let r = reasoner(cli, *explain);
            if *explain {
                for step in r.run(&kb, &[])?.trace {
                    println!("# {step}");
                }
            }
            let sat = saturate_with(&kb, &reasoner(cli, false), Exec::default()).map_err(|e| match e {
                SaturationError::Reasoner(e) => Failure::from(e),
                other => Failure::Input(other.to_string()),
            })?;
            sat.iter().for_each(|a| println!("{}", print_assertion(a)));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors are input errors; 2 is reserved for resource limits.
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use supercrystal::character::{character, skew_character, words};
use supercrystal::crystal::CrystalGraph;
use supercrystal::extremal::{genuine_highest, genuine_lowest, ghwt, glwt, glwt_formula};
use supercrystal::insertion::{insert, word_to_pq};
use supercrystal::tableau::{enumerate_tableaux, format_word};
use supercrystal::verify::{self, Theorem, VerifyConfig, DEFAULT_SEED};
use supercrystal::{Budget, Error, Letter, Rank, SkewShape, Tableau};

const EXIT_FAILURES: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "supercrystal",
    version,
    about = "Hook tableau crystals for U_q(gl(m|n))"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// List every semistandard tableau of a shape.
    Enumerate {
        #[arg(long)]
        rank: Rank,
        /// Straight shape `3,2,1` or skew shape `3,2/1`.
        #[arg(long)]
        shape: SkewShape,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Export the crystal graph of all tableaux of a shape.
    Graph {
        #[arg(long)]
        rank: Rank,
        #[arg(long)]
        shape: SkewShape,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Genuine highest and lowest weight vectors of a hook shape.
    Extremal {
        #[arg(long)]
        rank: Rank,
        #[arg(long)]
        shape: supercrystal::Partition,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Insert one letter into a tableau read from a JSON file and print the bumps.
    Insert {
        #[arg(long)]
        rank: Rank,
        #[arg(long)]
        tableau: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        letter: Letter,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Stream (word, P, Q) for every word of length k as JSON lines.
    Decompose {
        #[arg(long)]
        rank: Rank,
        #[arg(long)]
        power: usize,
    },
    /// Weight multiplicities of a shape.
    Character {
        #[arg(long)]
        rank: Rank,
        #[arg(long)]
        shape: SkewShape,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run exhaustive checks. JSON reports go to stdout, a timed table to stderr.
    Verify {
        /// reading, connected, knuth, bump, tensor, lowest, strings, counting, cone or all.
        #[arg(long, default_value = "all")]
        theorem: String,
        #[arg(long, default_value_t = 6)]
        max_boxes: usize,
        /// Ranks such as `2,2` or `1,1;2,2`; repeat the flag for more.
        #[arg(long)]
        ranks: Vec<String>,
        /// Seed for the randomized reading checks.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// Why a command stopped.
enum Failure {
    Lib(Error),
    Usage(String),
    Io(io::Error),
    /// Checks ran but some failed.
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget::from_env();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result =
        run(cli.command, &budget, &mut out).and_then(|()| out.flush().map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(EXIT_FAILURES),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAILURES)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Budget { .. } => EXIT_BUDGET,
                Error::Argument(_) | Error::Parse(_) => EXIT_USAGE,
                Error::Structure(_) | Error::Internal(_) => EXIT_FAILURES,
            })
        }
    }
}

fn warn_non_hook(shape: &SkewShape, rank: Rank) {
    if shape.is_straight() && !shape.outer().is_hook(rank) {
        eprintln!("warning: non-hook shape {shape} for rank {rank}");
    }
}

fn run(command: Command, budget: &Budget, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Enumerate {
            rank,
            shape,
            format,
        } => {
            warn_non_hook(&shape, rank);
            let all = enumerate_tableaux(&shape, rank, budget)?;
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&all).expect("tableaux serialize")
                )?,
                Format::Table => {
                    for t in &all {
                        writeln!(out, "{t}\n")?;
                    }
                    writeln!(out, "{} tableaux", all.len())?;
                }
            }
        }
        Command::Graph {
            rank,
            shape,
            dot,
            json,
        } => {
            if !dot && !json {
                return Err(Failure::Usage("choose --dot or --json".into()));
            }
            warn_non_hook(&shape, rank);
            let all = enumerate_tableaux(&shape, rank, budget)?;
            let graph = CrystalGraph::from_vertices(rank, all)?;
            if dot {
                write!(out, "{}", graph.export_dot())?;
            } else {
                writeln!(out, "{}", graph.export_json())?;
            }
        }
        Command::Extremal {
            rank,
            shape,
            format,
        } => {
            let h = genuine_highest(&shape, rank)?;
            let lo = genuine_lowest(&shape, rank)?;
            let hw = ghwt(&shape, rank)?;
            let lw = glwt(&shape, rank)?;
            let formula = glwt_formula(&hw, rank)?;
            match format {
                Format::Json => {
                    let v = json!({
                        "shape": shape,
                        "highest": h,
                        "lowest": lo,
                        "ghwt": hw,
                        "glwt": lw,
                        "glwt_formula": formula,
                    });
                    writeln!(out, "{v}")?;
                }
                Format::Table => {
                    writeln!(
                        out,
                        "genuine highest weight vector, weight {}:\n{h}\n",
                        hw.pretty()
                    )?;
                    writeln!(
                        out,
                        "genuine lowest weight vector, weight {}:\n{lo}\n",
                        lw.pretty()
                    )?;
                    writeln!(
                        out,
                        "lowest weight from the highest weight: {}",
                        formula.pretty()
                    )?;
                }
            }
        }
        Command::Insert {
            rank,
            tableau,
            letter,
            format,
        } => {
            let text = std::fs::read_to_string(&tableau)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", tableau.display())))?;
            let t: Tableau = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", tableau.display())))?;
            if !t.validate_semistandard(rank) {
                return Err(Failure::Usage(format!(
                    "tableau is not semistandard for rank {rank}:\n{t}"
                )));
            }
            if !rank.contains(letter) {
                return Err(Failure::Usage(format!(
                    "letter {letter} is not in the alphabet of rank {rank}"
                )));
            }
            let ins = insert(&t, letter)?;
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&ins).expect("insertion serializes")
                )?,
                Format::Table => {
                    for step in &ins.trace {
                        writeln!(out, "{step}")?;
                    }
                    writeln!(out, "added cell {}\n{}", ins.added, ins.tableau)?;
                }
            }
        }
        Command::Decompose { rank, power } => {
            for w in words(rank, power, budget)? {
                let (p, q) = word_to_pq(&w)?;
                let line = json!({ "word": format_word(&w), "p": p, "q": q });
                writeln!(out, "{line}")?;
            }
        }
        Command::Character {
            rank,
            shape,
            format,
        } => {
            warn_non_hook(&shape, rank);
            let ch = if shape.is_straight() {
                character(shape.outer(), rank, budget)?
            } else {
                skew_character(&shape, rank, budget)?
            };
            match format {
                Format::Json => writeln!(out, "{}", ch.to_json())?,
                Format::Table => writeln!(out, "{ch}")?,
            }
        }
        Command::Verify {
            theorem,
            max_boxes,
            ranks,
            seed,
        } => {
            let theorems: Vec<Theorem> = if theorem == "all" {
                Theorem::ALL.to_vec()
            } else {
                vec![theorem
                    .parse::<Theorem>()
                    .map_err(|e| Failure::Usage(e.to_string()))?]
            };
            let mut config = VerifyConfig {
                max_boxes,
                seed,
                budget: *budget,
                ..VerifyConfig::default()
            };
            if !ranks.is_empty() {
                let mut list = Vec::new();
                for r in &ranks {
                    list.extend(verify::parse_ranks(r).map_err(|e| Failure::Usage(e.to_string()))?);
                }
                config.ranks = list;
            }
            let mut failed = false;
            for t in theorems {
                let report = verify::run(t, &config)?;
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                )?;
                out.flush()?;
                eprintln!("{report}");
                failed |= !report.passed();
            }
            if failed {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}

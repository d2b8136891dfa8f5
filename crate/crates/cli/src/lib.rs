//! Command-line adapters over the `deckrec` library.
//!
//! [`run`] maps a parsed [`Cli`] to library calls and returns the text to
//! print together with the exit status; it does no combinatorics itself.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use deckrec::recognize::pairs_for;
use deckrec::{
    compute_deck, deck_equal, enumerate_graphs, parse_graph6, parse_graph6_stream,
    recognize_with_cap, reconstruct_all, subdeck, verify_recognizability, Deck, Filter, Graph,
    Verdict, DEFAULT_CAP,
};

/// Largest `n` that `verify` enumerates in full without `--force`.
pub const VERIFY_LIMIT: usize = 9;

#[derive(Debug, Parser)]
#[command(
    name = "deckrec",
    version,
    about = "Decks of small graphs and acyclicity recognition"
)]
pub struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the k-deck of graphs given in graph6.
    Deck(DeckArgs),
    /// Derive the j-deck from a deck file.
    Subdeck {
        #[arg(long)]
        j: usize,
        /// Deck file, or `-` for standard input.
        deck: PathBuf,
    },
    /// Compare two deck files.
    Compare { first: PathBuf, second: PathBuf },
    /// Decide whether the graphs with this deck are acyclic.
    Recognize {
        deck: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Exit with status 1 when the verdict is cyclic.
        #[arg(long)]
        status_verdict: bool,
    },
    /// List every graph with this deck.
    Reconstruct {
        deck: PathBuf,
        #[arg(long, value_enum, default_value_t = Restrict::All)]
        restrict: Restrict,
        /// Minimum girth of the listed graphs (forests always qualify).
        #[arg(long)]
        min_girth: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Check that (n-l)-decks separate acyclic from cyclic n-vertex graphs.
    Verify(VerifyArgs),
    /// Print known pairs of graphs with equal decks.
    Pairs {
        #[arg(long)]
        l: usize,
    },
}

#[derive(Debug, Args)]
pub struct DeckArgs {
    #[arg(long)]
    pub k: usize,
    /// graph6 strings.
    pub graphs: Vec<String>,
    /// File of graph6 lines, or `-` for standard input.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub l: usize,
    /// Worker threads.
    #[arg(long, env = "DECKREC_JOBS")]
    pub jobs: Option<usize>,
    /// Allow n above the default limit.
    #[arg(long)]
    pub force: bool,
    /// Only forests and graphs of girth above n - l; every mixed class
    /// contains one of each.
    #[arg(long)]
    pub restricted: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Restrict {
    All,
    Forests,
    Trees,
}

/// Text to print and the process exit status.
#[derive(Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub status: i32,
    pub text: String,
}

impl RunOutcome {
    fn ok(text: String) -> Self {
        RunOutcome { status: 0, text }
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_deck(path: &Path) -> Result<Deck> {
    let text = read_input(path)?;
    Deck::from_text(&text).with_context(|| format!("parsing deck {}", path.display()))
}

fn deck_graphs(args: &DeckArgs) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for s in &args.graphs {
        graphs.push(parse_graph6(s).with_context(|| format!("parsing graph6 {s:?}"))?);
    }
    if let Some(path) = &args.input {
        let text = read_input(path)?;
        let parsed = parse_graph6_stream(&text)
            .map_err(|(line, e)| anyhow::anyhow!("{}:{line}: {e}", path.display()))?;
        graphs.extend(parsed);
    }
    if graphs.is_empty() {
        bail!("no graphs given");
    }
    Ok(graphs)
}

fn compare_text(a: &Deck, b: &Deck) -> String {
    if deck_equal(a, b) {
        return "equal\n".to_string();
    }
    let mut out = String::from("unequal\n");
    if a.card_order() != b.card_order() {
        out.push_str(&format!(
            "card_order {} {}\n",
            a.card_order(),
            b.card_order()
        ));
        return out;
    }
    let codes: std::collections::BTreeSet<_> = a.cards().keys().chain(b.cards().keys()).collect();
    for code in codes {
        let (x, y) = (a.multiplicity(code), b.multiplicity(code));
        if x != y {
            out.push_str(&format!("{code}\t{x}\t{y}\n"));
        }
    }
    out
}

fn verify(args: &VerifyArgs) -> Result<String> {
    let VerifyArgs { n, l, .. } = *args;
    if n > VERIFY_LIMIT && !args.force {
        bail!("n = {n} is above {VERIFY_LIMIT}; pass --force to run anyway");
    }
    if l > n || n - l < 2 {
        bail!("need n - l >= 2, got n = {n}, l = {l}");
    }
    let filter = if args.restricted {
        Filter::min_girth(n - l + 1)
    } else {
        Filter::all()
    };
    let work = || -> Result<String> {
        let graphs = enumerate_graphs(n, &filter)?;
        Ok(verify_recognizability(n, l, &graphs)?.to_string())
    };
    match args.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .context("starting worker pool")?
            .install(work),
        None => work(),
    }
}

/// Executes one subcommand.
pub fn run(cli: &Cli) -> Result<RunOutcome> {
    Ok(match &cli.command {
        Command::Deck(args) => {
            let mut text = String::new();
            for (i, g) in deck_graphs(args)?.iter().enumerate() {
                if i > 0 {
                    text.push('\n');
                }
                text.push_str(
                    &compute_deck(g, args.k)
                        .with_context(|| format!("graph {g}"))?
                        .to_text(),
                );
            }
            RunOutcome::ok(text)
        }
        Command::Subdeck { j, deck } => RunOutcome::ok(subdeck(&read_deck(deck)?, *j)?.to_text()),
        Command::Compare { first, second } => {
            RunOutcome::ok(compare_text(&read_deck(first)?, &read_deck(second)?))
        }
        Command::Recognize {
            deck,
            cap,
            status_verdict,
        } => {
            let report = recognize_with_cap(&read_deck(deck)?, *cap)?;
            let status = i32::from(*status_verdict && report.verdict == Verdict::Cyclic);
            RunOutcome {
                status,
                text: report.to_string(),
            }
        }
        Command::Reconstruct {
            deck,
            restrict,
            min_girth,
            cap,
        } => {
            let mut filter = match restrict {
                Restrict::All => Filter::all(),
                Restrict::Forests => Filter::forests(),
                Restrict::Trees => Filter::trees(),
            };
            filter.min_girth = *min_girth;
            let r = reconstruct_all(&read_deck(deck)?, &filter, *cap)?;
            let mut text = format!(
                "exhausted={}\nacyclic_found={}\ncyclic_found={}\nmatches={}\n",
                r.exhausted,
                r.acyclic_found,
                r.cyclic_found,
                r.matches.len()
            );
            for m in &r.matches {
                text.push_str(&format!("match={m}\n"));
            }
            RunOutcome::ok(text)
        }
        Command::Verify(args) => RunOutcome::ok(verify(args)?),
        Command::Pairs { l } => {
            let mut text = String::new();
            for p in pairs_for(*l) {
                text.push_str(&format!(
                    "{}\t{}\t{}\t{}\n",
                    p.name, p.card_order, p.first, p.second
                ));
            }
            if text.is_empty() {
                bail!("no pairs are defined for l = {l}");
            }
            RunOutcome::ok(text)
        }
    })
}

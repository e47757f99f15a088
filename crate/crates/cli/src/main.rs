//! `twistree`: count, enumerate, map, sample and verify increasing
//! 1,2-trees and Cayley trees.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use twistree::enumeration::Family;

#[derive(Parser)]
#[command(name = "twistree", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Jsonl,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Direction {
    /// increasing 1,2-tree to Cayley tree
    Forward,
    /// Cayley tree to increasing 1,2-tree
    Inverse,
}

#[derive(Subcommand)]
enum Command {
    /// Print c(n, m) as `n<TAB>m<TAB>c` rows followed by the row sum.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Print every row up to n instead of row n only.
        #[arg(long)]
        full: bool,
    },
    /// Print every object of one size, one per line, in generation order.
    Enumerate {
        #[arg(long)]
        family: Family,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
        /// Largest n allowed; defaults to $TWISTREE_CAP, else 9.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Apply the bijection to one document.
    Map {
        #[arg(long, value_enum)]
        direction: Direction,
        /// Input document, `-` for stdin.
        #[arg(long = "in", default_value = "-")]
        input: PathBuf,
        /// Output document, `-` for stdout.
        #[arg(long, default_value = "-")]
        out: PathBuf,
        /// Use the single-pass forward transformation.
        #[arg(long)]
        express: bool,
    },
    /// Draw uniform random objects.
    Sample {
        #[arg(long)]
        family: Family,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
        /// Print one JSON line of draw statistics per object to stderr.
        #[arg(long)]
        stats: bool,
        /// Random streams the batch is split over; output depends on it.
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
        /// Replay whitespace-separated draws from a file instead of seeding.
        #[arg(long, conflicts_with_all = ["seed", "workers"])]
        script: Option<PathBuf>,
    },
    /// Check generating-function identities with exact rationals.
    #[command(group(ArgGroup::new("check").required(true).args(["pde", "closed_form", "lambert"])))]
    Verify {
        /// The partial differential equation of the edge series.
        #[arg(long)]
        pde: bool,
        /// The closed form in terms of the Cayley tree function.
        #[arg(long)]
        closed_form: bool,
        /// W e^W = x, listing the coefficients of W.
        #[arg(long)]
        lambert: bool,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
    },
    /// Histogram of twists or triangles over a sample, with a chi-square
    /// statistic against the exact counts.
    Stats {
        #[arg(long)]
        family: Family,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("twistree: {e}");
            ExitCode::from(e.code())
        }
    }
}

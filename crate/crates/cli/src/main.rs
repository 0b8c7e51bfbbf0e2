//! `vantage`: count orderings, build configurations, search, and verify.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "vantage", version, about = "Distance orderings of finite point sets")]
pub struct Cli {
    /// Worker threads; defaults to the available parallelism. Results do not
    /// depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Regions of the bisector arrangement of a 1-D or planar configuration.
    CountRegions {
        /// Configuration file; standard input when omitted or `-`.
        file: Option<PathBuf>,
        #[arg(long)]
        summary_json: bool,
    },
    /// Regions cut out of the sphere by the bisecting great circles.
    CountSphere {
        file: Option<PathBuf>,
        #[arg(long)]
        summary_json: bool,
    },
    /// The ordering seen from one vantage point, or from two (by distance sum).
    Ordering {
        file: Option<PathBuf>,
        /// Vantage point, coordinates separated by commas or spaces.
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        /// Second vantage point.
        #[arg(long, allow_hyphen_values = true)]
        and: Option<String>,
        /// Positive per-axis weights (single vantage only).
        #[arg(long)]
        weights: Option<String>,
    },
    /// Sample orderings from pairs of vantage points in the plane.
    TwoVantage {
        file: Option<PathBuf>,
        #[arg(long)]
        budget: u64,
        #[arg(long)]
        seed: u64,
        /// Check contiguity and up-down words (collinear input).
        #[arg(long)]
        collinear_checks: bool,
        /// Lattice resolution of vantage coordinates, in bits.
        #[arg(long, default_value_t = 16)]
        resolution: u32,
    },
    /// Build a named configuration and write it in the text format.
    Construct(ConstructArgs),
    /// Evaluate a closed-form count, or print the tables with `formula table`.
    Formula {
        name: String,
        args: Vec<u64>,
        #[arg(long)]
        csv: bool,
    },
    /// Search for achievable planar region counts.
    SearchAchievable {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        budget: u64,
        #[arg(long)]
        seed: u64,
        /// Witness store to append to.
        #[arg(long)]
        store: Option<PathBuf>,
        /// uniform, structured or mixed.
        #[arg(long, default_value = "mixed")]
        strategy: String,
        #[arg(long, default_value_t = 16)]
        span: i64,
        #[arg(long, default_value_t = 64)]
        max_den: i64,
    },
    /// Coverage table from a witness store, after re-verifying it.
    Report {
        #[arg(long)]
        store: PathBuf,
        #[arg(long)]
        csv: bool,
    },
    /// Exact counts for the five regular solids.
    PlatonicTable {
        #[arg(long)]
        csv: bool,
    },
    /// Run the acceptance suite.
    Verify {
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<u8>,
        /// Single-threaded kernels.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// equally-spaced, gap1d, free, free-sum, trapezoid, near-max,
    /// parallel-lines, circle-gadget, concyclic, grid, platonic, doubled
    pub kind: String,
    /// Solid name for `platonic`.
    pub solid: Option<String>,
    #[arg(short)]
    pub n: Option<usize>,
    #[arg(short)]
    pub k: Option<usize>,
    #[arg(short)]
    pub l: Option<usize>,
    #[arg(short)]
    pub m: Option<usize>,
    #[arg(short)]
    pub s: Option<usize>,
    #[arg(short)]
    pub t: Option<usize>,
    /// Place the free configuration on the unit sphere.
    #[arg(long)]
    pub sphere: bool,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output file; standard output when omitted.
    #[arg(short)]
    pub o: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        vantage_core::par::set_jobs(j.max(1));
    }
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use terracini_core::constructions::Generator;
use terracini_core::FieldSpec;

#[derive(Debug, Parser)]
#[command(name = "terracini", version, about = "Exact cohomology of plane zero-dimensional schemes and Terracini loci")]
pub struct Cli {
    /// `prime:<p>`, `prime` (p = 2^61 - 1) or `rational`. Defaults to the
    /// field recorded in the input file, else `prime`.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<FieldSpec>,

    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Emit JSON instead of tables.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the produced points/scheme file (construct, critical) or the
    /// rendered output (everything else) to this path.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: terracini_core::Error| e.to_string())
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SchemeInput {
    /// Points file; the scheme is the reduced point set.
    #[arg(long)]
    pub points: Option<PathBuf>,
    /// Scheme file.
    #[arg(long)]
    pub scheme: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function, Δ and h1 of a scheme, as CSV plus a summary.
    Hilbert {
        #[command(flatten)]
        input: SchemeInput,
        /// Use 2S instead of the reduced points.
        #[arg(long)]
        double: bool,
    },
    /// Numerical character, connectedness and degree bounds.
    Character {
        #[command(flatten)]
        input: SchemeInput,
        #[arg(long)]
        double: bool,
    },
    /// Terracini (and with --minimal, minimally Terracini) membership.
    Check {
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        minimal: bool,
    },
    /// Greedy search for a critical scheme inside 2S, with its checks.
    Critical {
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 8)]
        pool_size: usize,
    },
    /// Build witness configurations.
    #[command(subcommand)]
    Construct(Construct),
    /// Reproduce the published checks.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VariantArg {
    Grid,
    Conic,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Grid complete intersection (u_i : v_j : 1).
    Grid {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        /// Comma-separated u parameters (default 0, 1, …).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        u: Option<Vec<i64>>,
        /// Comma-separated v parameters (default 0, 2, 4, …).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        v: Option<Vec<i64>>,
    },
    /// Points (1 : t : t²) of the conic x0 x2 = x1².
    Conic {
        #[arg(long)]
        count: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Option<Vec<i64>>,
    },
    /// Intersection of the conic with a seeded degree-b curve (prime fields).
    ConicCi {
        #[arg(long)]
        b: usize,
    },
    /// Complete intersection of degrees t and (d + 3 - t)/2 and its
    /// critical scheme on the degree-t curve.
    O1o1 {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Grid)]
        variant: VariantArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// h1 of a grid complete intersection and of its one-point subsets.
    CiLemma {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Cardinalities x_i, y_i and the inequalities of the gap argument.
    Due2 {
        #[arg(long)]
        c: i64,
        #[arg(long)]
        d: i64,
        /// Also run this many mixed probe trials at each y_i.
        #[arg(long, default_value_t = 0)]
        probe_trials: usize,
    },
    /// d + 1 points on a conic: h1 table, characters and minimality.
    Due001 {
        #[arg(long)]
        d: usize,
    },
    /// Random search for minimally Terracini sets of y points (evidence only).
    Probe {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        y: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value = "mixed", value_parser = parse_generator)]
        generator: Generator,
    },
}

fn parse_generator(s: &str) -> Result<Generator, String> {
    s.parse().map_err(|e: terracini_core::Error| e.to_string())
}

impl Command {
    pub fn name(&self) -> String {
        match self {
            Command::Hilbert { .. } => "hilbert".into(),
            Command::Character { .. } => "character".into(),
            Command::Check { .. } => "check".into(),
            Command::Critical { .. } => "critical".into(),
            Command::Construct(c) => format!(
                "construct {}",
                match c {
                    Construct::Grid { .. } => "grid",
                    Construct::Conic { .. } => "conic",
                    Construct::ConicCi { .. } => "conic-ci",
                    Construct::O1o1 { .. } => "o1o1",
                }
            ),
            Command::Verify(v) => format!(
                "verify {}",
                match v {
                    Verify::CiLemma { .. } => "ci-lemma",
                    Verify::Due2 { .. } => "due2",
                    Verify::Due001 { .. } => "due001",
                    Verify::Probe { .. } => "probe",
                }
            ),
        }
    }
}

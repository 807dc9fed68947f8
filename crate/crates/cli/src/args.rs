use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "milnorhp",
    version,
    about = "Hilbert-Poincare series of Milnor algebras and their saturations"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Worker threads for grid and fixture runs (0 = all cores).
    #[arg(long, env = "MILNORHP_JOBS", default_value_t = 0, global = true)]
    pub jobs: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form series for a complete-intersection saturation of type (a, b).
    CiSeries(Triple),
    /// Subcase of a triple (a, b, d).
    Classify(Triple),
    /// Property checks over every triple with d <= d-max.
    Scan(ScanArgs),
    /// Full Groebner pipeline for one curve.
    Curve(CurveArgs),
    /// Numeric harness for the sequence lemmas.
    Lemmas(LemmaArgs),
    /// Runs the named golden curves.
    Fixtures(FixtureArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Triple {
    #[arg(long)]
    pub a: i64,
    #[arg(long)]
    pub b: i64,
    #[arg(long)]
    pub d: i64,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(i64).range(3..))]
    pub d_max: i64,
    /// Comma-separated check names; all registered checks by default.
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<String>,
    /// Include the per-triple rows in JSON output.
    #[arg(long)]
    pub rows: bool,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// Homogeneous polynomial, e.g. "x^3*z^4+x*y^5*z+x^7+y^7".
    #[arg(long)]
    pub poly: String,
    /// Comma-separated variable names (default x,y,z, or x,y,z,w when w occurs).
    #[arg(long)]
    pub vars: Option<String>,
    /// Truncation degree for the Hilbert series.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k_max: Option<u64>,
    /// Saturation strategy.
    #[arg(long, default_value = "certified-colon")]
    pub strategy: String,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    /// Which lemma to check (1, 2 or 3); all when omitted.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub check: Option<u8>,
    /// Lemma 1 family (1 to 5); all when omitted.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
    pub family: Option<u8>,
    /// Largest d for Lemmas 2 and 3 (defaults 50 and 40).
    #[arg(long, value_parser = clap::value_parser!(i64).range(3..))]
    pub d_max: Option<i64>,
    /// Largest m, n for Lemma 1.
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(i64).range(1..))]
    pub param_max: i64,
    /// Sequence length examined for Lemma 1.
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(3..))]
    pub window: u64,
}

#[derive(Debug, Args)]
pub struct FixtureArgs {
    /// Run only the fixture with this name.
    #[arg(long)]
    pub name: Option<String>,
    /// Skip fixtures marked slow.
    #[arg(long)]
    pub skip_slow: bool,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k_max: Option<u64>,
}

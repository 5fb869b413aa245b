//! Argument surface, one struct per subcommand.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "hyperk", version, about = "Hyperbolic number analysis tools")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a JSON interval collection as regular, weak, or both.
    ///
    /// The input file holds `{"parent": RECT, "pieces": [RECT, ...]}` where
    /// RECT is `[x0, x1, y0, y1]` and each coordinate is a JSON number or a
    /// rational string like "1/3". Rational coordinates are classified
    /// exactly; thirds written as floats fall back on a 1e-12 allowance.
    Classify(ClassifyArgs),
    /// Lift two real partitions to a strong partition of their product.
    PartitionGen(PartitionGenArgs),
    /// Total variation of a separable function over an interval.
    Variation(VariationArgs),
    /// Adaptive Riemann-Stieltjes integral over an interval.
    Integrate(IntegrateArgs),
    /// Numerical identity checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Compare the two sides of integration by parts.
    ///
    /// Computes the Stieltjes integral of F against G and the ordinary
    /// integral of F times G', and reports whether they agree within the
    /// tolerance. Disagreement exits 1; a non-convergent side exits 2.
    Parts(PartsArgs),
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Path to the collection JSON.
    pub input: PathBuf,
    /// Which class to test; the exit code follows this verdict.
    #[arg(long, value_enum, default_value_t = Kind::All)]
    pub kind: Kind,
    /// Also write the result JSON to this file.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Run every check; pass only if all of them pass.
    All,
    Regular,
    Weak,
    WeakStrict,
}

#[derive(Debug, Args)]
pub struct PartitionGenArgs {
    /// First-component cuts, a comma list of numbers or rationals
    /// ("0,1/3,2/3,1").
    #[arg(long, value_name = "LIST")]
    pub p: String,
    /// Second-component cuts, same format.
    #[arg(long, value_name = "LIST")]
    pub q: String,
    #[arg(long, value_enum, default_value_t = StrategyArg::Diagonal)]
    pub strategy: StrategyArg,
    /// Seed for the random strategy.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Refine until the diameter is below "T1,T2". Refined coordinates are
    /// emitted as floats, not rationals.
    #[arg(long, value_name = "T1,T2")]
    pub refine: Option<String>,
    /// Also write the result JSON to this file.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Write the chain points as a whitespace table.
    #[arg(long, value_name = "FILE")]
    pub plot: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    E1First,
    E2First,
    Diagonal,
    Random,
}

#[derive(Debug, Args)]
pub struct VariationArgs {
    /// First-component expression in x.
    #[arg(long, value_name = "EXPR")]
    pub f1: String,
    /// Second-component expression in x.
    #[arg(long, value_name = "EXPR")]
    pub f2: String,
    /// Lower corner "e1,e2".
    #[arg(long, value_name = "E1,E2")]
    pub lo: String,
    /// Upper corner "e1,e2".
    #[arg(long, value_name = "E1,E2")]
    pub hi: String,
    /// Declared jump abscissas of the first component.
    #[arg(long, value_name = "LIST")]
    pub jumps1: Option<String>,
    /// Declared jump abscissas of the second component.
    #[arg(long, value_name = "LIST")]
    pub jumps2: Option<String>,
    /// Also run the brute-force grid maximum on an MxN uniform grid.
    #[arg(long, value_name = "MxN")]
    pub grid: Option<String>,
    /// Also write the result JSON to this file.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Write the witness chain as a whitespace table.
    #[arg(long, value_name = "FILE")]
    pub plot: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IntegrateArgs {
    /// Integrand, first component.
    #[arg(long, value_name = "EXPR")]
    pub f1: String,
    /// Integrand, second component.
    #[arg(long, value_name = "EXPR")]
    pub f2: String,
    /// Integrator, first component; identity when omitted.
    #[arg(long, value_name = "EXPR", requires = "g2")]
    pub g1: Option<String>,
    /// Integrator, second component; identity when omitted.
    #[arg(long, value_name = "EXPR", requires = "g1")]
    pub g2: Option<String>,
    /// Lower corner "e1,e2".
    #[arg(long, value_name = "E1,E2")]
    pub lo: String,
    /// Upper corner "e1,e2".
    #[arg(long, value_name = "E1,E2")]
    pub hi: String,
    #[arg(long, value_enum, default_value_t = RuleArg::Midpoint)]
    pub rule: RuleArg,
    #[arg(long, value_enum, default_value_t = ModeArg::Signed)]
    pub mode: ModeArg,
    /// Seed for the random-tag convergence check.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Successive-sum tolerance, applied to both components.
    #[arg(long, value_name = "T")]
    pub tol: Option<f64>,
    /// Cross-check against the componentwise classical route.
    #[arg(long)]
    pub check: bool,
    /// Also write the result JSON to this file.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Write the refinement trace as a whitespace table.
    #[arg(long, value_name = "FILE")]
    pub plot: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Left,
    Right,
    Midpoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Signed,
    Absolute,
}

#[derive(Debug, Args)]
pub struct PartsArgs {
    /// F, first component.
    #[arg(long, value_name = "EXPR")]
    pub f1: String,
    /// F, second component.
    #[arg(long, value_name = "EXPR")]
    pub f2: String,
    /// G, first component; must be differentiable.
    #[arg(long, value_name = "EXPR")]
    pub g1: String,
    /// G, second component; must be differentiable.
    #[arg(long, value_name = "EXPR")]
    pub g2: String,
    /// Lower corner "e1,e2".
    #[arg(long, value_name = "E1,E2")]
    pub lo: String,
    /// Upper corner "e1,e2".
    #[arg(long, value_name = "E1,E2")]
    pub hi: String,
    /// Residual tolerance, applied to both components.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    /// Also write the result JSON to this file.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

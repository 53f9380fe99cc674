use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lomat_core::ring::RingKind;

#[derive(Debug, Parser)]
#[command(name = "lomat", version, about = "Exact checks for lattice-ordered matrix algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a cone matrix A and optionally sample the l-algebra axioms.
    CheckCone(CheckConeArgs),
    /// Check the consistency conditions and product law of structure data.
    VerifyStructure(FileArgs),
    /// Solve the positive-unit system for the Q of a structure-data file.
    SolveWeinberg(FileArgs),
    /// Build and verify the isomorphism onto the usual order (requires I in P).
    WeinbergIso(IsoArgs),
    /// Classify 2 x 2 structure data and verify the isomorphism.
    Classify2(FileArgs),
    /// Generate seeded structure data or a cone.
    OracleRun(OracleArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    Int,
    Rat,
    Quad2,
}

impl From<RingArg> for RingKind {
    fn from(r: RingArg) -> Self {
        match r {
            RingArg::Int => RingKind::Integers,
            RingArg::Rat => RingKind::Rationals,
            RingArg::Quad2 => RingKind::QuadraticSqrt2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Usual,
    Corner,
    Param,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Ring the input must be written over.
    #[arg(long, value_enum)]
    pub ring: Option<RingArg>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FileArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct CheckConeArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub output: Output,
    /// Number of random samples for the axiom check (needs --seed).
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct IsoArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub output: Output,
    /// Random element pairs for the product and join check (needs --seed).
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 3)]
    pub bound: u32,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, value_enum)]
    pub ring: RingArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 3)]
    pub bound: u32,
    /// Family of D for structure data.
    #[arg(long, value_enum, default_value_t = CaseArg::Usual)]
    pub case: CaseArg,
    /// Parameter a of the parametric family.
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    pub a: String,
    /// Parameter b of the parametric family.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub b: String,
    /// Item index within the seeded stream.
    #[arg(long, default_value_t = 0)]
    pub index: u64,
    /// Generate a cone instead of structure data.
    #[arg(long)]
    pub cone: bool,
    /// With --cone: random matrices on which to compare membership tests.
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
    #[arg(long, default_value_t = 10_000)]
    pub max_attempts: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

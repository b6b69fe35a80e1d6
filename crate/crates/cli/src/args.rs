use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "beauville",
    version,
    about = "Equivariant cohomology of subcanonical divisors on Beauville-type surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for parallel sweeps (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certificates for H^1(mL) != 0, for every m in [1, n-4] or a single m.
    VerifyTheorem {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Search diagonal (lambda, mu) for a given (n, m).
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        /// Enumerate every unit pair instead of following the diagonal recipe.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Table of h^0, h^1, h^2 and chi of O_S(mL).
    Cohomology {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, default_value_t = 0)]
        m_from: u32,
        #[arg(long)]
        m_to: u32,
    },
    /// Hilbert function and Cohen-Macaulay verdict of a cone R(S, dL).
    Cone {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Polarization multiple: the cone over dL.
        #[arg(long)]
        d: Option<u32>,
        /// Report the cone over tL together with its canonical cover.
        #[arg(long)]
        t: Option<u32>,
        #[arg(long, default_value_t = 10)]
        max_index: u32,
        /// Report the cones over L, K_S and K_S + L.
        #[arg(long)]
        three_cones: bool,
    },
    /// Exhaustive check of the n = 5 surfaces.
    Beauville5,
    /// Re-verify certificates from a JSON file written by `verify-theorem`.
    CheckCert { path: PathBuf },
}

#[derive(Debug, Args)]
pub struct SurfaceArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub lambda: i64,
    #[arg(long)]
    pub mu: i64,
}

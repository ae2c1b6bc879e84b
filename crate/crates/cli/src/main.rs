use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use quartic_acm::commands::{self, parse_quadruple, ChiInput, Output};
use quartic_acm::render::Format;
use quartic_acm::selfcheck::{Fault, Formulas};
use quartic_acm::{catalog_file, CliError};
use quartic_acm_core::catalog::{Catalog, Pool};
use quartic_acm_core::BundleInvariants;

/// Chern-class calculus and ACM invariant tables for hypersurfaces in P4.
#[derive(Parser)]
#[command(name = "quartic-acm", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Rank-two catalog file (`r c1 c2 star gg` per line) replacing the built-in one.
    #[arg(long, global = true, value_name = "FILE")]
    catalog: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PoolArg {
    Star,
    Normalized,
}

impl From<PoolArg> for Pool {
    fn from(p: PoolArg) -> Pool {
        match p {
            PoolArg::Star => Pool::StarOnly,
            PoolArg::Normalized => Pool::Normalized,
        }
    }
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.parse().map_err(|_| format!("`{s}` is not an integer"))
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ChiTarget {
    /// Evaluate on the line bundle O(a); requires -a.
    #[arg(long, requires = "a")]
    line: bool,

    /// Bundle invariants as k,c1,c2,c3.
    #[arg(long, value_parser = parse_quadruple)]
    bundle: Option<BundleInvariants>,
}

#[derive(Subcommand)]
enum Command {
    /// Euler characteristic of O(a) or of a bundle.
    Chi {
        /// Degree of the hypersurface in P4
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        target: ChiTarget,
        /// Twist of the line bundle
        #[arg(short = 'a', requires = "line", allow_negative_numbers = true, value_parser = parse_bigint)]
        a: Option<BigInt>,
    },
    /// Invariants of E(n).
    Twist {
        /// Degree of the hypersurface in P4
        #[arg(long)]
        r: u32,
        /// Bundle invariants as k,c1,c2,c3
        #[arg(long, value_parser = parse_quadruple)]
        bundle: BundleInvariants,
        /// Twist amount, may be negative
        #[arg(long, allow_negative_numbers = true, value_parser = parse_bigint)]
        n: BigInt,
    },
    /// Genus of the dependency-locus curve of a bundle.
    Genus {
        /// Degree of the hypersurface in P4
        #[arg(long)]
        r: u32,
        /// Bundle invariants as k,c1,c2,c3
        #[arg(long, value_parser = parse_quadruple)]
        bundle: BundleInvariants,
    },
    /// Admissible (k; c1, c2, c3, g) rows on the quartic threefold.
    Enumerate {
        /// Rank of the bundle
        #[arg(long)]
        k: u32,
    },
    /// Rank-four extensions of rank-two catalog bundles.
    Extensions {
        /// Degree of the hypersurface in P4
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value_t = PoolArg::Star)]
        pool: PoolArg,
    },
    /// Search the catalog for a rank 2+2 extension with given invariants.
    Decompose {
        /// Degree of the hypersurface in P4
        #[arg(long)]
        r: u32,
        /// Rank-four invariants as k,c1,c2,c3
        #[arg(long, value_parser = parse_quadruple)]
        target: BundleInvariants,
        #[arg(long, value_enum, default_value_t = PoolArg::Star)]
        pool: PoolArg,
        /// Exit with status 1 when no decomposition exists.
        #[arg(long)]
        expect_witness: bool,
    },
    /// Label admissible quadruples as realized or open.
    Coverage {
        /// Rank of the bundle
        #[arg(long)]
        k: u32,
    },
    /// Run the cross-module invariant suite.
    Selfcheck {
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
}

fn load_catalog(path: &Option<PathBuf>) -> Result<Catalog, CliError> {
    match path {
        Some(p) => Ok(catalog_file::load(p)?),
        None => Ok(Catalog::builtin()),
    }
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Chi { r, target, a } => {
            let input = match (target.bundle, a) {
                (Some(q), None) => ChiInput::Bundle(q),
                (None, Some(a)) => ChiInput::Line(a),
                _ => return Err(CliError::Usage("give either --line -a A or --bundle K,C1,C2,C3".into())),
            };
            commands::chi(r, &input, format)
        }
        Command::Twist { r, bundle, n } => commands::twist_cmd(r, &bundle, &n, format),
        Command::Genus { r, bundle } => commands::genus(r, &bundle, format),
        Command::Enumerate { k } => commands::enumerate(k, format),
        Command::Extensions { r, pool } => {
            commands::extensions(&load_catalog(&cli.catalog)?, r, pool.into(), format)
        }
        Command::Decompose { r, target, pool, expect_witness } => commands::decompose_cmd(
            &load_catalog(&cli.catalog)?,
            r,
            &target,
            pool.into(),
            expect_witness,
            format,
        ),
        Command::Coverage { k } => commands::coverage(&load_catalog(&cli.catalog)?, k, format),
        Command::Selfcheck { inject_fault } => {
            let formulas = inject_fault.map_or_else(Formulas::standard, Formulas::with_fault);
            commands::selfcheck_cmd(&formulas, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            for note in &out.notes {
                eprintln!("{note}");
            }
            print!("{}", out.stdout);
            ExitCode::SUCCESS
        }
        Err(err) => {
            if let CliError::SelfcheckFailed { report, .. } = &err {
                eprint!("{report}");
            }
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

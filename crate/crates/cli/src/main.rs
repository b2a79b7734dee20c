use std::path::PathBuf;
use std::process::ExitCode;

use bihom_cli::commands::{self, Construction, DeriveArgs, Invocation, SearchArgs};
use bihom_core::catalog::catalog_list;
use bihom_core::rota_baxter::{Ansatz, SearchConfig};
use bihom_core::AlgebraKind;
use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "bihom",
    version,
    about = "Exact checks, constructions and Rota-Baxter search for BiHom-type algebras"
)]
struct Cli {
    /// Machine-readable JSON report
    #[arg(long, global = true)]
    json: bool,

    /// Stamp reports with the current Unix time
    #[arg(long, global = true)]
    timestamps: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check algebra files against the identities of their declared kind
    Check {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        /// Check as this kind instead of the declared one
        #[arg(long)]
        kind_override: Option<AlgebraKind>,
    },
    /// Twist by a pair of maps: {x, y} = m(alpha2 x, beta2 y)
    Twist {
        path: PathBuf,
        /// Matrix file for alpha2
        #[arg(long)]
        alpha2: PathBuf,
        /// Matrix file for beta2
        #[arg(long)]
        beta2: PathBuf,
        /// Treat the input as this kind before twisting
        #[arg(long)]
        kind_override: Option<AlgebraKind>,
        /// Skip hypothesis checks; the output is tagged unverified
        #[arg(long)]
        unchecked: bool,
    },
    /// Build a derived algebra
    Derive {
        path: PathBuf,
        /// prelie-bracket, rb-prelie-left, rb-prelie-right, rb-bracket, rb-assoc or dendriform-split
        #[arg(long)]
        construction: Construction,
        /// Operator name from the file, or `zero` / `identity`
        #[arg(long)]
        operator: Option<String>,
        /// Weight, overriding the operator's own
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Treat the input as this kind before deriving
        #[arg(long)]
        kind_override: Option<AlgebraKind>,
        /// Skip hypothesis checks; the output is tagged unverified
        #[arg(long)]
        unchecked: bool,
    },
    /// Enumerate Rota-Baxter operators over F_p
    RbSearch {
        path: PathBuf,
        /// Rota-Baxter weight, an integer or fraction
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        weight: String,
        /// Prime modulus of the search field
        #[arg(long = "mod", default_value_t = SearchConfig::DEFAULT_MODULUS)]
        modulus: u64,
        /// full, upper-triangular, diagonal or nilpotent
        #[arg(long, default_value_t = Ansatz::Full)]
        ansatz: Ansatz,
        /// Try small-height rational lifts of every operator found
        #[arg(long)]
        lift: bool,
        /// Stop after this many operators
        #[arg(long)]
        max: Option<usize>,
        /// Do not require R to commute with alpha and beta
        #[arg(long)]
        no_commute: bool,
    },
    /// Bundled example algebras
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// List entry ids
    List,
    /// Print an entry as an algebra file
    Export { id: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::iter::once("bihom".to_string())
        .chain(std::env::args().skip(1))
        .collect::<Vec<_>>()
        .join(" ");
    let inv = Invocation {
        command: echo,
        timestamps: cli.timestamps,
    };
    let report = match &cli.command {
        Command::Check { paths, kind_override } => commands::check(&inv, paths, *kind_override),
        Command::Twist {
            path,
            alpha2,
            beta2,
            kind_override,
            unchecked,
        } => commands::twist(&inv, path, alpha2, beta2, *kind_override, *unchecked),
        Command::Derive {
            path,
            construction,
            operator,
            weight,
            kind_override,
            unchecked,
        } => commands::derive(
            &inv,
            path,
            &DeriveArgs {
                construction: *construction,
                operator: operator.as_deref(),
                weight: weight.as_deref(),
                kind_override: *kind_override,
                unchecked: *unchecked,
            },
        ),
        Command::RbSearch {
            path,
            weight,
            modulus,
            ansatz,
            lift,
            max,
            no_commute,
        } => commands::rb_search(
            &inv,
            path,
            &SearchArgs {
                weight,
                modulus: *modulus,
                ansatz: *ansatz,
                lift: *lift,
                max_candidates: *max,
                require_commute: !no_commute,
            },
        ),
        Command::Catalog { action } => return catalog(action, cli.json),
    };
    print!("{}", report.render(cli.json));
    ExitCode::from(report.exit_code() as u8)
}

fn catalog(action: &CatalogAction, json: bool) -> ExitCode {
    match action {
        CatalogAction::List if json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&catalog_list()).expect("ids serialize")
            );
        }
        CatalogAction::List => {
            for id in catalog_list() {
                println!("{id}");
            }
        }
        CatalogAction::Export { id } => match commands::catalog_export(id) {
            Ok(text) => print!("{text}"),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
    }
    ExitCode::SUCCESS
}

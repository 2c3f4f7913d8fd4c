use adlv::cli;
use clap::{Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "adlv",
    version,
    about = "Exact root-system verification: orbit-hull projection identities, folding, and affine Deligne-Lusztig non-emptiness criteria"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the projection identity for one (type, Levi, mu)
    Verify {
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: usize,
        /// Levi node indices, 1-based, comma separated
        #[arg(long, value_delimiter = ',')]
        levi: Vec<usize>,
        /// Dominant weight in fundamental coordinates, comma separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        mu: Vec<i64>,
        /// Ambient lattice: weight (default) or root
        #[arg(long, default_value = "weight")]
        lattice: String,
        /// Write the JSON report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Produce a witness certificate for one class of X_M
    Witness {
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, value_delimiter = ',')]
        levi: Vec<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        mu: Vec<i64>,
        /// Canonical coordinates of the class, comma separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        y: Vec<i64>,
        #[arg(long, default_value = "weight")]
        lattice: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-validate a stored certificate from its data alone
    CheckCert {
        /// Path to a certificate JSON file
        path: PathBuf,
    },
    /// Answer one non-emptiness query (split or quasi-split)
    Adlv {
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: usize,
        /// Diagram automorphism: id, flip, triality, or swap:i,j
        #[arg(long, default_value = "id")]
        sigma: String,
        #[arg(long, value_delimiter = ',')]
        levi: Vec<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        mu: Vec<i64>,
        /// Canonical coordinates of nu_M in Y_M, comma separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        nu: Vec<i64>,
    },
    /// Verify every (Levi, mu) under a bound and emit a CSV summary
    Sweep {
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 2)]
        mu_bound: i64,
        #[arg(long, default_value = "weight")]
        lattice: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    if let Ok(n) = std::env::var("ADLV_WORKERS") {
        if let Ok(n) = n.parse::<usize>() {
            rayon::ThreadPoolBuilder::new().num_threads(n).build_global().ok();
        }
    }
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify { family, rank, levi, mu, lattice, out } => {
            cli::cmd_verify(&family, rank, &levi, &mu, &lattice, out.as_deref())
        }
        Command::Witness { family, rank, levi, mu, y, lattice, out } => {
            cli::cmd_witness(&family, rank, &levi, &mu, &y, &lattice, out.as_deref())
        }
        Command::CheckCert { path } => cli::cmd_check_cert(&path),
        Command::Adlv { family, rank, sigma, levi, mu, nu } => {
            cli::cmd_adlv(&family, rank, &sigma, &levi, &mu, &nu)
        }
        Command::Sweep { family, rank, mu_bound, lattice, out } => {
            cli::cmd_sweep(&family, rank, mu_bound, &lattice, out.as_deref())
        }
    };
    std::process::exit(code);
}

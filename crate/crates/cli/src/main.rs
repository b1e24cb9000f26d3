use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use irregularity::io::Format;
use irregularity::oracle::SearchConstraints;
use irregularity_cli::{
    cmd_bound, cmd_certify, cmd_curves, cmd_irr, cmd_lp, cmd_search, cmd_sweep, CliError,
    VariantArg, Verdict,
};

#[derive(Parser)]
#[command(
    name = "irr",
    version,
    about = "Irregularity bounds, dual certificates and exhaustive checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Irregularity and degree profile of a graph file (`-` reads stdin)
    Irr {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
    },
    /// Every applicable upper bound for the given parameters
    Bound {
        #[command(flatten)]
        params: Params,
    },
    /// Dual certificate and its feasibility report
    Certify {
        #[arg(long)]
        delta: usize,
        #[arg(long, value_enum)]
        variant: VariantFlag,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        delta_min: Option<usize>,
    },
    /// Exact solve of the profile program
    Lp {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value_t = VariantFlag::Thm1)]
        variant: VariantFlag,
        /// Also write the program in text form
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Most irregular graph under the given constraints
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        delta_min: Option<usize>,
        /// Enumerate one graph per isomorphism class
        #[arg(long)]
        dedup: bool,
    },
    /// Bound curves over all m as CSV
    Curves {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        delta_min: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check every bound on all graphs up to a given order
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        /// Per-row CSV report
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Params {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    m: u64,
    #[arg(long)]
    delta: usize,
    #[arg(long)]
    delta_min: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantFlag {
    Thm1,
    Prop1,
    Prop2,
}

impl From<VariantFlag> for VariantArg {
    fn from(v: VariantFlag) -> Self {
        match v {
            VariantFlag::Thm1 => VariantArg::Thm1,
            VariantFlag::Prop1 => VariantArg::Prop1,
            VariantFlag::Prop2 => VariantArg::Prop2,
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|source| CliError::File {
            path: path.clone(),
            source,
        })
    }
}

fn run(cli: Cli) -> Result<Verdict, CliError> {
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Irr { input, format } => {
            let format = match format {
                FormatArg::Edgelist => Format::EdgeList,
                FormatArg::Graph6 => Format::Graph6,
            };
            let text = read_input(&input)?;
            cmd_irr(&text, &input.display().to_string(), format, &mut out)
        }
        Command::Bound { params } => {
            cmd_bound(params.n, params.m, params.delta, params.delta_min, &mut out)
        }
        Command::Certify {
            delta,
            variant,
            d,
            delta_min,
        } => cmd_certify(delta, variant.into(), d, delta_min, &mut out),
        Command::Lp {
            params,
            variant,
            output,
        } => {
            let variant = VariantArg::from(variant).with_delta_min(params.delta_min)?;
            cmd_lp(
                params.n,
                params.m,
                params.delta,
                variant,
                output.as_deref(),
                &mut out,
            )
        }
        Command::Search {
            n,
            m,
            delta,
            delta_min,
            dedup,
        } => {
            let mut c = SearchConstraints::new(n).dedup(dedup);
            c.m = m;
            c.delta_cap = delta;
            c.delta_min = delta_min;
            cmd_search(&c, &mut out)
        }
        Command::Curves {
            n,
            delta,
            delta_min,
            output,
        } => cmd_curves(n, delta, delta_min, output.as_deref(), &mut out),
        Command::Sweep { n, delta, output } => cmd_sweep(n, delta, output.as_deref(), &mut out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(verdict) => ExitCode::from(verdict.exit_code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

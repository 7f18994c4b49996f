use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fockbridge::config::{CliConfig, OutputFormat, RepSpec};
use fockbridge::json::BundleJson;
use fockbridge::{load, render, CliError, CliResult, Suite, Which};
use fockbridge_core::heisenberg::HeisenbergParams;
use fockbridge_core::partition::{Partition, SkewShape};
use fockbridge_core::symfunc::{set_degree_cap, strip_chains, Basis, DEFAULT_DEGREE_CAP};

/// Symmetric functions from representations of Heisenberg algebras.
#[derive(Parser, Debug)]
#[command(name = "fockbridge", version)]
struct Cli {
    /// fermionic, macdonald, llt1:<n>, tensor:<rep>^<n> or bundle:<path>
    #[arg(long, global = true, default_value = "fermionic")]
    rep: String,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    out: OutputFormat,
    /// Bind q or t, e.g. q=0. Repeatable.
    #[arg(long = "spec", global = true)]
    specs: Vec<String>,
    /// Largest symmetric function degree with cached transition matrices.
    #[arg(long, global = true, env = "FOCKBRIDGE_DEGREE_CAP", default_value_t = DEFAULT_DEGREE_CAP)]
    degree_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print F_{s/t} or G_{s/t}.
    Expand {
        #[arg(long)]
        shape: String,
        /// Defaults to the highest weight vector.
        #[arg(long)]
        base: Option<String>,
        #[arg(long = "fn", value_enum, default_value_t = Which::F)]
        which: Which,
        #[arg(long, value_enum, default_value_t = BasisArg::S)]
        basis: BasisArg,
    },
    /// Coefficient of x^weight in F_{s/t}; lists the tableaux for the Fermionic rep.
    Tableaux {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        base: Option<String>,
        /// A composition such as 1,1,2; empty for the identity.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        weight: String,
    },
    /// Run a verifier suite; exits 1 when an identity fails.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Write the U_k, D_k matrices of the rep as a JSON bundle.
    Bundle {
        #[arg(long, default_value_t = 4)]
        kmax: u32,
        #[arg(long, default_value_t = 4)]
        dmax: i64,
    },
}

#[derive(Args, Debug)]
struct Bounds {
    #[arg(long, default_value_t = 3)]
    kmax: u32,
    #[arg(long, default_value_t = 4)]
    dmax: i64,
    #[arg(long, default_value_t = 3)]
    abmax: u32,
    #[arg(long, default_value_t = 2)]
    xvars: usize,
    #[arg(long, default_value_t = 2)]
    yvars: usize,
    /// Index t of the Cauchy identity; defaults to the highest weight vector.
    #[arg(long)]
    base: Option<String>,
    /// Index r of the Cauchy identity; defaults to the highest weight vector.
    #[arg(long)]
    other: Option<String>,
    /// a_k used by the converse instead of the rep's own, e.g. "(1 - t^k)/(1 - q^k)".
    #[arg(long)]
    params: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Pieri,
    Cauchy,
    Du,
    Bf,
    Converse,
    Heisenberg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    P,
    H,
    M,
    S,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::P => Basis::P,
            BasisArg::H => Basis::H,
            BasisArg::M => Basis::M,
            BasisArg::S => Basis::S,
        }
    }
}

fn parse_weight(text: &str) -> CliResult<Vec<u32>> {
    let body = text
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']'])
        .trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|p| match p.trim().parse::<u32>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(CliError::Usage(format!("weight `{text}` must list positive integers"))),
        })
        .collect()
}

fn suite(arg: SuiteArg, b: Bounds) -> CliResult<Suite> {
    Ok(match arg {
        SuiteArg::Pieri => Suite::Pieri {
            k_max: b.kmax,
            d_max: b.dmax,
        },
        SuiteArg::Du => Suite::Du {
            ab_max: b.abmax,
            d_max: b.dmax,
        },
        SuiteArg::Heisenberg => Suite::Heisenberg {
            k_max: b.kmax,
            d_max: b.dmax,
        },
        SuiteArg::Bf => Suite::Bf {
            d_max: b.dmax,
            l_set: vec![-2, -1, 1, 2],
        },
        SuiteArg::Cauchy => Suite::Cauchy {
            x_vars: b.xvars,
            y_vars: b.yvars,
            d_max: u32::try_from(b.dmax).map_err(|_| CliError::Usage("--dmax must be nonnegative".into()))?,
            base: b.base,
            other: b.other,
        },
        SuiteArg::Converse => Suite::Converse {
            k_max: b.kmax,
            d_max: b.dmax,
            params: b
                .params
                .map(|p| HeisenbergParams::parse(&p).map_err(|e| CliError::Usage(format!("--params {p}: {e}"))))
                .transpose()?,
        },
    })
}

/// Returns the text to print and whether the command succeeded.
fn run(cli: Cli) -> CliResult<(String, bool)> {
    let config = CliConfig {
        rep: cli.rep.parse::<RepSpec>()?,
        degree_cap: cli.degree_cap,
        out: cli.out,
        bindings: CliConfig::bindings_from(&cli.specs)?,
    };
    set_degree_cap(config.degree_cap);
    let session = load(&config.rep, &config.bindings)?;
    match cli.command {
        Command::Expand {
            shape,
            base,
            which,
            basis,
        } => {
            let f = session.expand(&shape, base.as_deref(), which, basis.into())?;
            Ok((render::symfunc(&f, config.out), true))
        }
        Command::Tableaux { shape, base, weight } => {
            let weight = parse_weight(&weight)?;
            let c = session.tableaux(&shape, base.as_deref(), &weight)?;
            let chains = if config.rep == RepSpec::Fermionic {
                let outer: Partition = shape.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
                let inner: Partition = match &base {
                    Some(b) => b.parse().map_err(|e| CliError::Usage(format!("{e}")))?,
                    None => Partition::empty(),
                };
                Some(match SkewShape::new(outer, inner) {
                    Ok(skew) => strip_chains(&skew, &weight),
                    Err(_) => Vec::new(),
                })
            } else {
                None
            };
            Ok((render::tableaux(&c, chains.as_deref(), config.out), true))
        }
        Command::Verify { suite: arg, bounds } => {
            let outcome = session.verify(&suite(arg, bounds)?)?;
            Ok((render::outcome(&outcome, config.out), outcome.passed()))
        }
        Command::Bundle { kmax, dmax } => {
            let bundle = session.bundle(dmax, kmax)?;
            let text = serde_json::to_string_pretty(&BundleJson::from(&bundle))? + "\n";
            Ok((text, true))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok((text, ok)) => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

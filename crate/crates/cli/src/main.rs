//! `gtsl3`: exact actions, basis changes, intertwiners, generation
//! certificates, characters and the structural check registry.
//!
//! Exit codes: 0 success, 1 a check failed, 2 invalid input (the error is
//! printed as JSON on stderr).

mod commands;

use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gtsl3::{Error, Index, Params, Scalar};

#[derive(Parser, Debug)]
#[command(name = "gtsl3", version, about = "Exact computations in the Gelfand-Tsetlin sl3-modules M_{mu1,mu2}")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// mu1 as an exact rational such as 1/3 [default: 1/3]
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub mu1: Option<String>,
    /// mu2 as an exact rational [default: 0 for lbar-sets, 1/5 otherwise]
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub mu2: Option<String>,
    /// Keep mu1 (and mu2 unless given) as symbols
    #[arg(long, global = true)]
    pub symbolic: bool,
    /// Window radius
    #[arg(long, global = true)]
    pub window: Option<i64>,
    /// Machine-readable output
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply a generator or a word (rightmost letter first) to an element
    Act {
        #[arg(long, default_value = "w")]
        basis: String,
        #[arg(long = "gen", conflicts_with = "word")]
        generator: Option<String>,
        #[arg(long)]
        word: Option<String>,
        #[command(flatten)]
        input: ElementInput,
    },
    /// Convert between the u- and w-bases
    ChangeBasis {
        #[arg(long)]
        to: String,
        #[command(flatten)]
        input: ElementInput,
    },
    /// Evaluate <eta-element, w-element>
    Pair {
        #[arg(long)]
        eta: String,
        #[arg(long)]
        w: String,
    },
    /// Solve for GT-diagonal intertwiners on a window
    Hom {
        /// e.g. full, dual, l01, dual:l01, lge2, "dual:lbar<=-1"
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        /// Also propagate the recurrence from this seed index
        #[arg(long, allow_hyphen_values = true)]
        seed: Option<String>,
    },
    /// Generation certificate from start indices
    Generate {
        /// k,l,m; repeat for several starts
        #[arg(long, required = true, allow_hyphen_values = true)]
        start: Vec<String>,
        #[arg(long, default_value = "full")]
        module: String,
    },
    /// Weight multiplicities on a cone
    Character {
        #[arg(long, default_value = "lge0")]
        module: String,
        #[arg(long, default_value_t = 6)]
        cone: i64,
    },
    /// Closure type of an lbar-set
    Classify {
        #[arg(long)]
        set: String,
        #[arg(long, default_value = "w")]
        basis: String,
    },
    /// Run the structural check registry
    VerifyPaper {
        /// Run only this check id
        #[arg(long)]
        check: Option<String>,
        /// List check ids
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug, Clone)]
pub struct ElementInput {
    /// Element JSON, @file, or - for stdin
    #[arg(long, conflicts_with = "index")]
    pub element: Option<String>,
    /// Basis vector k,l,m
    #[arg(long, allow_hyphen_values = true)]
    pub index: Option<String>,
}

pub fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

pub fn read_arg(s: &str) -> gtsl3::Result<String> {
    if s == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map_err(|e| invalid(e.to_string()))?;
        Ok(buf)
    } else if let Some(path) = s.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| invalid(format!("{path}: {e}")))
    } else {
        Ok(s.to_string())
    }
}

pub fn parse_index(s: &str) -> gtsl3::Result<Index> {
    let parts: Vec<&str> = s.trim().trim_matches(|c| c == '[' || c == ']' || c == '(' || c == ')').split(',').collect();
    match parts.as_slice() {
        [k, l, m] => {
            let n = |x: &str| x.trim().parse::<i64>().map_err(|_| invalid(format!("bad index {s:?}")));
            let i = Index::new(n(k)?, n(l)?, n(m)?);
            if i.m < 0 {
                return Err(invalid(format!("index {s:?} has m < 0")));
            }
            Ok(i)
        }
        _ => Err(invalid(format!("index {s:?} is not k,l,m"))),
    }
}

impl Global {
    /// `wants_integral` picks the default `mu2 = 0` for commands on
    /// lbar-subquotients.
    pub fn params(&self, wants_integral: bool) -> gtsl3::Result<Params> {
        let mu1: Scalar = match (&self.mu1, self.symbolic) {
            (Some(s), _) => s.parse()?,
            (None, true) => Scalar::mu1(),
            (None, false) => Scalar::ratio(1, 3),
        };
        let mu2: Scalar = match (&self.mu2, self.symbolic, wants_integral) {
            (Some(s), _, _) => s.parse()?,
            (None, _, true) => Scalar::zero(),
            (None, true, false) => Scalar::mu2(),
            (None, false, false) => Scalar::ratio(1, 5),
        };
        Ok(Params::new(mu1, mu2))
    }

    pub fn explicit_params(&self) -> bool {
        self.mu1.is_some() || self.mu2.is_some()
    }
}

fn init_threads() {
    if let Some(n) = std::env::var("GT_SL3_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.render().to_string();
            eprintln!("{}", serde_json::json!({"error": msg.trim()}));
            return ExitCode::from(2);
        }
    };
    init_threads();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{}", gtsl3::json::error(&e));
            ExitCode::from(2)
        }
    }
}

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::json;

use unitary_weights::base_change::{bc_type, bc_weight};
use unitary_weights::intersect::intersect_types;
use unitary_weights::kisin::{breuil_mezard_check, infer_shape, ring_invariants, Shape};
use unitary_weights::lattice::{PrimeContext, UChar};
use unitary_weights::lparams::{predicted_weights, InertialTypeGl, TameLParam};
use unitary_weights::suites::{self, SuiteConfig};
use unitary_weights::weights::{jh_factors, weight, DlRepU};
use unitary_weights::Error;

#[derive(Parser, Debug)]
#[command(name = "uw", version, about = "Serre weight and type computations for unramified U(2)")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Odd prime.
    #[arg(long, global = true)]
    pub p: Option<i64>,
    /// Residue degree of the unramified extension.
    #[arg(long, global = true)]
    pub f: Option<usize>,
    /// Truncation degree for Laurent matrices.
    #[arg(long, global = true, default_value_t = 8)]
    pub trunc: usize,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Random trials per suite row.
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    /// Translation radius for the disjoint type search.
    #[arg(long, global = true, default_value_t = 2)]
    pub radius: i64,
    /// Include exhaustive rows in `check`.
    #[arg(long, global = true)]
    pub exhaustive: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Jordan-Holder factors of `R_w(mu)`.
    Jh { rep: String },
    /// Predicted weight set of a tame parameter.
    Predict { param: String },
    /// Base change of a type `{"w","mu"}` or of a weight `[[a,b,c,d],...]`.
    Bc { input: String },
    /// Intersection witness of two types, or null.
    Intersect { first: String, second: String },
    /// Shape of a parameter relative to an inertial type, or null.
    Shape { param: String, tau: String },
    /// Ring invariants attached to a shape vector.
    Multiplicity { shape: String },
    /// Multiplicity identity for a parameter and an inertial type.
    BmCheck { param: String, tau: String },
    /// Run a property suite (`all` for every suite).
    Check { suite: String },
}

enum Failure {
    Domain(Error),
    Parse(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn emit<T: Serialize>(x: &T) -> Result<String, Failure> {
    serde_json::to_string(x).map_err(|e| Failure::Usage(e.to_string()))
}

fn parse<T: DeserializeOwned>(s: &str) -> Result<T, Failure> {
    serde_json::from_str(s).map_err(|e| Failure::Parse(e.to_string()))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum BcInput {
    Type(DlRepU),
    Weight(UChar),
}

#[derive(Serialize)]
struct Multiplicity {
    e: u64,
    krull_dim: usize,
    domain: bool,
}

impl RunConfig {
    fn ctx(&self) -> Result<PrimeContext, Failure> {
        Ok(PrimeContext::new(self.p.unwrap_or(7), self.f.unwrap_or(1))?)
    }

    fn suite_config(&self) -> SuiteConfig {
        SuiteConfig {
            seed: self.seed,
            trials: self.trials,
            exhaustive: self.exhaustive,
            radius: self.radius,
            trunc: self.trunc,
            only: (self.p.is_some() || self.f.is_some()).then_some((self.p, self.f)),
        }
    }
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let cfg = &cli.config;
    let out = match &cli.command {
        Command::Jh { rep } => {
            let r: DlRepU = parse(rep)?;
            emit(&jh_factors(&r, &cfg.ctx()?)?)?
        }
        Command::Predict { param } => {
            let rho: TameLParam = parse(param)?;
            emit(&predicted_weights(&rho, &cfg.ctx()?)?)?
        }
        Command::Bc { input } => {
            let ctx = cfg.ctx()?;
            match parse(input)? {
                BcInput::Type(r) => emit(&bc_type(&r, &ctx)?)?,
                BcInput::Weight(mu) => emit(&bc_weight(&weight(&mu, &ctx)?, &ctx)?)?,
            }
        }
        Command::Intersect { first, second } => {
            let (a, b): (DlRepU, DlRepU) = (parse(first)?, parse(second)?);
            emit(&intersect_types(&a, &b, &cfg.ctx()?)?)?
        }
        Command::Shape { param, tau } => {
            let (rho, tau): (TameLParam, InertialTypeGl) = (parse(param)?, parse(tau)?);
            emit(&infer_shape(&rho, &tau, &cfg.ctx()?)?)?
        }
        Command::Multiplicity { shape } => {
            let s: Vec<Shape> = parse(shape)?;
            cfg.ctx()?;
            if let Some(f) = cfg.f {
                if s.len() != f {
                    return Err(Failure::Domain(Error::InvalidContext(format!(
                        "shape has length {}, expected {f}",
                        s.len()
                    ))));
                }
            }
            let r = ring_invariants(&s);
            emit(&Multiplicity { e: r.mod_p_multiplicity, krull_dim: r.krull_dim, domain: r.is_domain })?
        }
        Command::BmCheck { param, tau } => {
            let (rho, tau): (TameLParam, InertialTypeGl) = (parse(param)?, parse(tau)?);
            emit(&breuil_mezard_check(&rho, &tau, &cfg.ctx()?)?)?
        }
        Command::Check { .. } => unreachable!("handled by run"),
    };
    Ok(out)
}

fn check(suite: &str, cfg: &RunConfig) -> Result<bool, Failure> {
    let names: Vec<&str> = if suite == "all" { suites::SUITES.to_vec() } else { vec![suite] };
    let sc = cfg.suite_config();
    let mut ok = true;
    for name in names {
        let rep = suites::run(name, &sc)
            .ok_or_else(|| Failure::Usage(format!("unknown suite {name:?}")))?;
        print!("{rep}");
        ok &= rep.passed();
    }
    Ok(ok)
}

pub fn run(cli: Cli) -> ExitCode {
    let result = match &cli.command {
        Command::Check { suite } => check(suite, &cli.config).map(|ok| if ok { 0 } else { 1 }),
        _ => execute(&cli).map(|v| {
            println!("{v}");
            0
        }),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Domain(e)) => {
            eprintln!("{}", json!({ "error": e.name(), "message": e.to_string() }));
            ExitCode::from(2)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("{}", json!({ "error": "ParseError", "message": msg }));
            ExitCode::from(3)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("{}", json!({ "error": "Usage", "message": msg }));
            ExitCode::from(2)
        }
    }
}

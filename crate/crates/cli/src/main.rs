mod input;
mod report;
mod text;

use std::io::Write;
use std::process::ExitCode;

use affsch::twist::TwistedDatum;
use affsch::verify::{run_suite, Suite, SweepConfig, MAX_SWEEP_PAIRING, MAX_SWEEP_RANK};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use report::{ReportDocument, Request, VerifyResult};

#[derive(Parser)]
#[command(name = "affsch", version, about = "Singularities of Schubert varieties in twisted affine Grassmannians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Stratum-by-stratum smoothness report for the Schubert variety of mu.
    Analyze {
        /// Type label such as A1, C2, 2A3 or 3D4.
        #[arg(long = "type")]
        ty: String,
        /// Dominant coweight as pairings with the simple roots of Sigma.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Optional stratum to certify.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Dominance poset below mu with classified covering edges.
    Poset {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[command(flatten)]
        out: Output,
    },
    /// Run a property sweep.
    Verify {
        /// loop-basis, cartan-direction, k-symmetry, stembridge,
        /// mindeg-inequality, sl2-factorization or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long, default_value_t = 30)]
        max_pairing: i64,
        #[arg(long, default_value_t = 6)]
        window: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "AFFSCH_JOBS", default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Symbolic loop-algebra checks for one type.
    Loopcheck {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value_t = 2)]
        window: i64,
        #[command(flatten)]
        out: Output,
    },
}

enum Failure {
    Usage(String),
    Property(String),
}

impl From<affsch::Error> for Failure {
    fn from(e: affsch::Error) -> Self {
        use affsch::Error::*;
        match e {
            NonIntegral(_) | CapExceeded { .. } | Unclassified(_) | Inconsistent(_) | NonNilpotent | ZeroCartan(_) => {
                Failure::Property(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn emit<T: Serialize>(json: bool, doc: &ReportDocument<T>, text: impl FnOnce(&T) -> String) {
    let body = if json {
        serde_json::to_string_pretty(doc).expect("reports serialize") + "\n"
    } else {
        text(&doc.result)
    };
    // Ignore closed pipes such as `| head`.
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
}

fn datum(label: &str) -> Result<TwistedDatum, Failure> {
    Ok(TwistedDatum::parse(label)?)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Analyze { ty, mu, lambda, out } => {
            let t = datum(&ty)?;
            let mu = input::parse_coweight("--mu", &mu).map_err(Failure::Usage)?;
            let lambda = lambda.map(|l| input::parse_coweight("--lambda", &l)).transpose().map_err(Failure::Usage)?;
            let r = report::analyze(&t, &mu, lambda.as_ref())?;
            let pass = r.confirms_theorem;
            let req = Request { command: "analyze", type_label: Some(ty), mu: Some(mu), lambda, ..Default::default() };
            emit(out.json, &ReportDocument::new(req, 0, pass, r), text::analyze);
            Ok(pass)
        }
        Command::Poset { ty, mu, out } => {
            let t = datum(&ty)?;
            let mu = input::parse_coweight("--mu", &mu).map_err(Failure::Usage)?;
            let r = report::poset(&t, &mu)?;
            let req = Request { command: "poset", type_label: Some(ty), mu: Some(mu), ..Default::default() };
            emit(out.json, &ReportDocument::new(req, 0, true, r), text::poset);
            Ok(true)
        }
        Command::Verify { suite, max_rank, max_pairing, window, seed, jobs, out } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(|_| {
                    let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                    Failure::Usage(format!("unknown suite `{suite}`; expected one of {} or all", names.join(", ")))
                })?]
            };
            if max_rank > MAX_SWEEP_RANK || max_pairing > MAX_SWEEP_PAIRING {
                return Err(Failure::Usage(format!(
                    "bounds exceed --max-rank {MAX_SWEEP_RANK} / --max-pairing {MAX_SWEEP_PAIRING}"
                )));
            }
            let cfg = SweepConfig { max_rank, max_pairing, window, seed, jobs, ..Default::default() };
            let reports = suites.into_iter().map(|s| run_suite(s, &cfg)).collect::<Result<Vec<_>, _>>()?;
            let pass = reports.iter().all(|r| r.pass);
            let req = Request {
                command: "verify",
                suite: Some(suite),
                window: Some(window),
                max_rank: Some(max_rank),
                max_pairing: Some(max_pairing),
                ..Default::default()
            };
            emit(out.json, &ReportDocument::new(req, seed, pass, VerifyResult { suites: reports }), text::verify);
            Ok(pass)
        }
        Command::Loopcheck { ty, window, out } => {
            let t = datum(&ty)?;
            let r = report::loopcheck(&t, window)?;
            let pass = r.pass;
            let req = Request { command: "loopcheck", type_label: Some(ty), window: Some(window), ..Default::default() };
            emit(out.json, &ReportDocument::new(req, 0, pass, r), text::loopcheck);
            Ok(pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = run(cli);
    match &outcome {
        Err(Failure::Usage(m)) => eprintln!("error: {m}"),
        Err(Failure::Property(m)) => eprintln!("failure: {m}"),
        Ok(_) => {}
    }
    ExitCode::from(exit_code(&outcome))
}

fn exit_code(outcome: &Result<bool, Failure>) -> u8 {
    match outcome {
        Ok(true) => 0,
        Ok(false) | Err(Failure::Property(_)) => 1,
        Err(Failure::Usage(_)) => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use affsch::Error;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Ok(true)), 0);
        assert_eq!(exit_code(&Ok(false)), 1);
        assert_eq!(exit_code(&Err(Error::Unclassified("x".into()).into())), 1);
        assert_eq!(exit_code(&Err(Error::ZeroCartan("x".into()).into())), 1);
        assert_eq!(exit_code(&Err(Error::NonNilpotent.into())), 1);
        assert_eq!(exit_code(&Err(Error::NotDominant(vec![-1]).into())), 2);
    }
}

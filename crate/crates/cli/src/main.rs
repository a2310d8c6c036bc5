//! Command-line front end: verify single catalogued entries, certify and
//! print the cross-case summary table, and take vanishing-scale limits.
//! Reports go to standard output, diagnostics to standard error.
//!
//! Exit codes are part of the interface: 0 means every requested check
//! passed (a divergent limit is a valid answer, not a failure), 1 means a
//! mathematical check failed, 2 means the invocation itself was invalid.

mod dto;
mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use doublecheck::{
    case_spec, contract_case, list_cases, table2_rows, verify_case, BigRational, CaseId, CaseSpec,
    Error, QuadRational, Regime, Scalar, Var, VerificationReport,
};
use num_traits::{One, Signed, Zero};
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "doublecheck",
    version,
    about = "Exact verification of the nine catalogued double structures on the 3d kinematical algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full check pipeline for one entry.
    Verify(EntryArgs),
    /// Certify every entry, then print the summary table.
    Table2 {
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Take the vanishing-scale limit of one entry's transported objects.
    Contract(EntryArgs),
}

#[derive(Args)]
struct EntryArgs {
    /// Case id: A, B, C, D, E, F or G.
    case: String,
    /// Sign regime of the squared deformation parameter (cases C and F).
    #[arg(long, value_enum)]
    regime: Option<RegimeArg>,
    /// Fix an extra parameter, e.g. --set mu=2 or --set rho=1/2.
    #[arg(long = "set", value_name = "NAME=VALUE")]
    set: Vec<String>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegimeArg {
    Pos,
    Neg,
}

impl From<RegimeArg> for Regime {
    fn from(r: RegimeArg) -> Regime {
        match r {
            RegimeArg::Pos => Regime::Pos,
            RegimeArg::Neg => Regime::Neg,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Usage mistakes exit 2, mathematical failures exit 1. A denominator that
/// vanishes after a binding counts as mathematical: the invocation was
/// well-formed, the algebra itself degenerated.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::UnknownCase(_)
        | Error::RegimeRequired { .. }
        | Error::RegimeNotApplicable { .. }
        | Error::UnknownParameter { .. }
        | Error::InvalidParameterValue { .. } => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Verify(args) => {
            let (spec, bindings, shown) = prepare(&args)?;
            let report = verify_case(&spec, &bindings)?;
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&dto::verify(&report, &shown))
                        .expect("report serializes")
                );
            } else {
                print!("{}", render::verify(&report, &shown));
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Table2 { json } => table2(json),
        Command::Contract(args) => {
            let (spec, bindings, shown) = prepare(&args)?;
            let result = contract_case(&spec, &bindings)?;
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&dto::contract(&spec, &shown, &result))
                        .expect("result serializes")
                );
            } else {
                print!("{}", render::contract(&spec.label(), &shown, &result));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// The table is emitted only once every row is certified by the full
/// pipeline; entries are independent, so they verify concurrently.
fn table2(json: bool) -> Result<ExitCode, Error> {
    let specs = list_cases()
        .into_iter()
        .map(|(id, regime)| case_spec(id, regime))
        .collect::<Result<Vec<_>, Error>>()?;
    let reports: Vec<Result<VerificationReport, Error>> = std::thread::scope(|scope| {
        let handles: Vec<_> = specs
            .iter()
            .map(|spec| scope.spawn(move || verify_case(spec, &[])))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification does not panic"))
            .collect()
    });
    let mut certified = true;
    for report in reports {
        let report = report?;
        if !report.passed() {
            certified = false;
            for check in report.checks.iter().filter(|c| !c.passed) {
                eprintln!("{}: {} failed: {}", report.label(), check.name, check.residuals);
            }
        }
    }
    if !certified {
        eprintln!("summary table suppressed: the catalogue failed verification");
        return Ok(ExitCode::from(1));
    }
    let rows = table2_rows()?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&dto::table2(&rows)).expect("rows serialize")
        );
    } else {
        print!("{}", render::table2(&rows));
    }
    Ok(ExitCode::SUCCESS)
}

fn prepare(args: &EntryArgs) -> Result<(CaseSpec, Vec<(Var, Scalar)>, Vec<dto::Binding>), Error> {
    let id = CaseId::from_str(&args.case)?;
    let spec = case_spec(id, args.regime.map(Regime::from))?;
    let mut bindings: Vec<(Var, Scalar)> = Vec::new();
    let mut shown = Vec::new();
    for item in &args.set {
        let Some((name, value)) = item.split_once('=') else {
            return Err(Error::InvalidParameterValue {
                name: item.clone(),
                reason: "write --set name=value".to_string(),
            });
        };
        let name = name.trim().to_ascii_lowercase();
        let value = value.trim();
        let (var, scalar) = parse_binding(&spec, &name, value)?;
        if bindings.iter().any(|(v, _)| *v == var) {
            return Err(Error::InvalidParameterValue {
                name,
                reason: "parameter bound more than once".to_string(),
            });
        }
        bindings.push((var, scalar));
        shown.push(dto::Binding {
            name,
            value: value.to_string(),
        });
    }
    Ok((spec, bindings, shown))
}

/// User-level parameter names to internal realizations: `mu` is the square
/// of the variable `m`, `rho` is the variable `p` itself. The deformation
/// scale has no settable name on purpose: it is the limit variable.
fn parse_binding(spec: &CaseSpec, name: &str, value: &str) -> Result<(Var, Scalar), Error> {
    let invalid = |reason: String| Error::InvalidParameterValue {
        name: name.to_string(),
        reason,
    };
    let var = match name {
        "mu" => Var::M,
        "rho" => Var::P,
        "eta" | "s" => return Err(invalid("the deformation scale stays symbolic".to_string())),
        _ => {
            return Err(Error::UnknownParameter {
                case: spec.id,
                name: name.to_string(),
            })
        }
    };
    if !spec.parameters.contains(&var) {
        return Err(Error::UnknownParameter {
            case: spec.id,
            name: name.to_string(),
        });
    }
    let q = BigRational::from_str(value)
        .map_err(|_| invalid(format!("`{value}` is not rational (write n or n/d)")))?;
    match var {
        Var::M => {
            if !q.is_positive() {
                return Err(invalid("the constraint is mu > 0".to_string()));
            }
            // mu itself must be an exact square in Q(sqrt2), since the
            // engine computes with its square root.
            let root = QuadRational::sqrt_of_rational(&q).ok_or_else(|| {
                invalid("needs an exact square root: write q^2 or 2*q^2 with q rational".to_string())
            })?;
            Ok((Var::M, Scalar::from_quad(root)))
        }
        Var::P => {
            if q.is_zero() || q.abs() >= BigRational::one() {
                return Err(invalid(
                    "the constraint is -1 < rho < 1 with rho != 0".to_string(),
                ));
            }
            Ok((Var::P, Scalar::from_quad(QuadRational::from_rational(q))))
        }
        Var::S => unreachable!("the scale is rejected by name above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(case: &str, set: &[&str]) -> EntryArgs {
        EntryArgs {
            case: case.to_string(),
            regime: None,
            set: set.iter().map(|s| s.to_string()).collect(),
            json: false,
        }
    }

    #[test]
    fn usage_errors_exit_two_and_math_errors_exit_one() {
        assert_eq!(exit_code(&Error::UnknownCase("Q".to_string())), 2);
        assert_eq!(exit_code(&Error::RegimeRequired { case: CaseId::C }), 2);
        assert_eq!(exit_code(&Error::RegimeNotApplicable { case: CaseId::A }), 2);
        assert_eq!(
            exit_code(&Error::UnknownParameter {
                case: CaseId::A,
                name: "mu".to_string()
            }),
            2
        );
        assert_eq!(
            exit_code(&Error::InvalidParameterValue {
                name: "mu".to_string(),
                reason: String::new()
            }),
            2
        );
        assert_eq!(
            exit_code(&Error::DenominatorVanishes {
                binding: "p = 1".to_string()
            }),
            1
        );
        assert_eq!(
            exit_code(&Error::DivisionByZero {
                expr: String::new()
            }),
            1
        );
    }

    #[test]
    fn mu_binds_the_square_root() {
        let (spec, bindings, shown) = prepare(&entry("D", &["mu=4"])).unwrap();
        assert_eq!(spec.id, CaseId::D);
        assert_eq!(bindings, vec![(Var::M, Scalar::from_int(2))]);
        assert_eq!(shown[0].name, "mu");
        assert_eq!(shown[0].value, "4");

        let (_, bindings, _) = prepare(&entry("D", &["mu=2"])).unwrap();
        assert_eq!(bindings, vec![(Var::M, Scalar::sqrt2())]);

        let (_, bindings, _) = prepare(&entry("D", &["mu=9/4"])).unwrap();
        assert_eq!(bindings, vec![(Var::M, Scalar::from_ratio(3, 2))]);
    }

    #[test]
    fn mu_values_without_exact_roots_are_rejected() {
        for bad in ["mu=3", "mu=-1", "mu=0", "mu=x", "mu=1.5"] {
            let err = prepare(&entry("D", &[bad])).unwrap_err();
            assert!(
                matches!(err, Error::InvalidParameterValue { .. }),
                "{bad}: {err}"
            );
        }
    }

    #[test]
    fn rho_stays_inside_the_open_interval() {
        let (_, bindings, _) = prepare(&entry("G", &["rho=1/2"])).unwrap();
        assert_eq!(bindings, vec![(Var::P, Scalar::from_ratio(1, 2))]);
        let (_, bindings, _) = prepare(&entry("G", &["rho=-2/3"])).unwrap();
        assert_eq!(bindings, vec![(Var::P, Scalar::from_ratio(-2, 3))]);
        for bad in ["rho=0", "rho=1", "rho=-1", "rho=3/2"] {
            let err = prepare(&entry("G", &[bad])).unwrap_err();
            assert!(
                matches!(err, Error::InvalidParameterValue { .. }),
                "{bad}: {err}"
            );
        }
    }

    #[test]
    fn bindings_must_match_the_case_and_stay_unique() {
        let err = prepare(&entry("A", &["mu=1"])).unwrap_err();
        assert!(matches!(err, Error::UnknownParameter { .. }));
        let err = prepare(&entry("D", &["rho=1/2"])).unwrap_err();
        assert!(matches!(err, Error::UnknownParameter { .. }));
        let err = prepare(&entry("D", &["tau=1"])).unwrap_err();
        assert!(matches!(err, Error::UnknownParameter { .. }));
        let err = prepare(&entry("D", &["eta=1"])).unwrap_err();
        assert!(matches!(err, Error::InvalidParameterValue { .. }));
        let err = prepare(&entry("D", &["mu=1", "mu=4"])).unwrap_err();
        assert!(matches!(err, Error::InvalidParameterValue { .. }));
        let err = prepare(&entry("D", &["mu"])).unwrap_err();
        assert!(matches!(err, Error::InvalidParameterValue { .. }));
    }

    #[test]
    fn regime_combinations_follow_the_catalogue() {
        let mut args = entry("C", &[]);
        assert!(matches!(
            prepare(&args),
            Err(Error::RegimeRequired { case: CaseId::C })
        ));
        args.regime = Some(RegimeArg::Neg);
        assert!(prepare(&args).is_ok());
        let mut args = entry("A", &[]);
        args.regime = Some(RegimeArg::Pos);
        assert!(matches!(
            prepare(&args),
            Err(Error::RegimeNotApplicable { case: CaseId::A })
        ));
        assert!(matches!(
            prepare(&entry("Q", &[])),
            Err(Error::UnknownCase(_))
        ));
    }
}

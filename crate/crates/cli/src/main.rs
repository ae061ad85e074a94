//! `powergen`: closed forms, verification sweeps, numeric evaluation, and
//! Stirling tables for power-sum generating functions.
//!
//! Exit codes: 0 all checks passed (or output printed), 1 at least one
//! verification failed, 2 usage or domain error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use powergen_cli::json::{PolyJson, RatFnJson, ReportJson, TableJson};
use powergen_cli::render;
use powergen_core::exact::Polynomial;
use powergen_core::identities::{
    binomial_ogf, binomial_ogf_check, egf_closed_form, egf_closed_form_alt, egf_series_check,
    egf_split_check, ogf_closed_form, ogf_series_check, phi_recurrence_check, q_phi_check,
    tail_ogf_identity, weighted_power_ogf, weighted_power_ogf_check, VerificationReport,
};
use powergen_core::numeric::{
    e_series_num, ei_num, ein_num, gamma_triangle_check, harmonic_egf_check, m_series_num,
    polylog_num, reciprocal_sum_ogf_check, EvalOptions, NumericReport,
};
use powergen_core::ratfn::RatAtOne;
use powergen_core::special::{exp_poly, furdui_q, gen_geo_poly, geo_poly, StirlingTable};

#[derive(Parser)]
#[command(
    name = "powergen",
    version,
    about = "Exact closed forms and checks for power-sum generating functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one closed form (polynomial, e^x-weighted polynomial, or
    /// rational function)
    ClosedForm {
        /// Which family to print
        kind: ClosedFormKind,
        /// Power exponent
        #[arg(long)]
        p: u32,
        /// Binomial weight, used by binomial-ogf, weighted-ogf and omega-gen
        #[arg(long, default_value_t = 0)]
        r: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Sweep one identity over a parameter range and report every result
    Verify {
        /// Which identity to check
        identity: VerifyKind,
        /// Largest p in the sweep
        #[arg(long, default_value_t = 8)]
        p_max: u32,
        /// Largest r in the sweep (weighted families only)
        #[arg(long, default_value_t = 4)]
        r_max: u32,
        /// Number of series coefficients (or partial-sum terms) per check
        #[arg(long, default_value_t = 30)]
        order: u32,
        /// Prefix the power sums with a 0^p term under the convention 0^0=1.
        /// The e^x-route EGF check and the OGF check need this at p = 0;
        /// the Stirling-quotient route does not.
        #[arg(long)]
        zero_convention: bool,
        /// Tolerance for the floating-point identities
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Evaluate one of the numeric series
    Eval {
        /// Which function to evaluate
        func: EvalKind,
        /// Evaluation point
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        /// Exponent parameter, required by polylog, E and M (any real)
        #[arg(long, allow_negative_numbers = true)]
        p: Option<f64>,
        /// Truncation order for M
        #[arg(long, default_value_t = 60)]
        order: u32,
        /// Series tolerance
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Print a number triangle
    Table {
        /// Which table to print
        what: TableKind,
        /// Last row index
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosedFormKind {
    /// Stirling-quotient EGF factor A_p, printed with its e^x weight
    Egf,
    /// The phi-route EGF factor phi_p + its antiderivative
    EgfAlt,
    /// Power-sum OGF omega_p(x/(1-x))/(1-x)^2
    Ogf,
    /// Binomially weighted power-sum OGF
    BinomialOgf,
    /// OGF with coefficients C(n+r,r) n^p
    WeightedOgf,
    /// Exponential polynomial phi_p
    Phi,
    /// Geometric polynomial omega_p
    Omega,
    /// Generalized geometric polynomial omega_{p,r+1}
    OmegaGen,
    /// Derivative-recurrence polynomial Q_p (p >= 1)
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    /// EGF coefficients against brute-force power sums (phi route)
    Egf,
    /// e^x phi_p coefficient split and route agreement
    Prop1,
    /// OGF Taylor coefficients against brute-force power sums
    Ogf,
    /// Coefficients C(n+r,r) * (power sum)
    BinomialOgf,
    /// Coefficients C(n+r,r) * n^p
    WeightedOgf,
    /// Tail-sum series equals the difference of the two weighted OGFs
    Tail,
    /// Recurrence x(phi_p + phi_p') = phi_{p+1}
    Grunert,
    /// Q_p recurrence reproduces phi_p
    QEqualsPhi,
    /// Ein(x) + Ei(-x) - ln x = gamma
    EinTriangle,
    /// Harmonic-number EGF equals e^x Ein(x)
    HarmonicEgf,
    /// Reciprocal power sums against the polylogarithm
    ReciprocalOgf,
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalKind {
    /// Entire exponential integral Ein(x)
    Ein,
    /// Exponential integral Ei(x), x != 0
    Ei,
    /// Polylogarithm Li_p(x), |x| < 1
    Polylog,
    /// Power-weighted exponential series sum n^p x^n / n!
    #[value(name = "E", alias = "e")]
    PowerSeries,
    /// Power-sum exponential series, truncated at --order
    #[value(name = "M", alias = "m")]
    SumSeries,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    /// Stirling numbers of the second kind S(n,k)
    Stirling,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Latex,
    Json,
}

// Rust masks SIGPIPE at startup, which turns `powergen ... | head` into a
// println! panic once the reader goes away. Restore the default disposition
// so the process terminates quietly like any other pipeline stage.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::ClosedForm { kind, p, r, format } => {
            ensure_p_cap(p)?;
            print_closed_form(kind, p, r, format)?;
            Ok(true)
        }
        Command::Verify {
            identity,
            p_max,
            r_max,
            order,
            zero_convention,
            tol,
            format,
        } => {
            ensure_p_cap(p_max)?;
            if order == 0 {
                return Err("--order must be at least 1".to_string());
            }
            run_verify(identity, p_max, r_max, order, zero_convention, tol, format)
        }
        Command::Eval {
            func,
            x,
            p,
            order,
            tol,
        } => {
            let opts = EvalOptions {
                tolerance: tol,
                ..EvalOptions::default()
            };
            let evaluation = match func {
                EvalKind::Ein => ein_num(x, &opts),
                EvalKind::Ei => ei_num(x, &opts),
                EvalKind::Polylog => polylog_num(require_p(p, "polylog")?, x, &opts),
                EvalKind::PowerSeries => e_series_num(x, require_p(p, "E")?, &opts),
                EvalKind::SumSeries => Ok(m_series_num(x, require_p(p, "M")?, order)),
            }
            .map_err(|e| e.to_string())?;
            println!("{:.15} (±{:.1e})", evaluation.value, evaluation.bound);
            Ok(true)
        }
        Command::Table { what, n, format } => {
            ensure_p_cap(n)?;
            match what {
                TableKind::Stirling => print_stirling_table(n, format),
            }
            Ok(true)
        }
    }
}

/// Integer size parameters are capped (default 200, overridden by
/// POWERGEN_MAX_P) so a stray huge argument cannot wedge the process in
/// big-integer arithmetic.
fn ensure_p_cap(p: u32) -> Result<(), String> {
    let cap = match std::env::var("POWERGEN_MAX_P") {
        Ok(raw) => raw
            .trim()
            .parse::<u32>()
            .map_err(|_| format!("POWERGEN_MAX_P must be a nonnegative integer, got {raw:?}"))?,
        Err(_) => 200,
    };
    if p > cap {
        return Err(format!(
            "p = {p} exceeds the cap of {cap} (set POWERGEN_MAX_P to raise it)"
        ));
    }
    Ok(())
}

fn require_p(p: Option<f64>, func: &str) -> Result<f64, String> {
    p.ok_or_else(|| format!("eval {func} requires --p"))
}

enum ClosedForm {
    /// Polynomial printed with an e^x factor in front
    Weighted(Polynomial),
    Plain(Polynomial),
    Rational(RatAtOne),
}

fn print_closed_form(
    kind: ClosedFormKind,
    p: u32,
    r: u32,
    format: OutputFormat,
) -> Result<(), String> {
    let object = match kind {
        ClosedFormKind::Egf => ClosedForm::Weighted(egf_closed_form(p)),
        ClosedFormKind::EgfAlt => ClosedForm::Weighted(egf_closed_form_alt(p)),
        ClosedFormKind::Ogf => ClosedForm::Rational(ogf_closed_form(p)),
        ClosedFormKind::BinomialOgf => ClosedForm::Rational(binomial_ogf(p, r)),
        ClosedFormKind::WeightedOgf => ClosedForm::Rational(weighted_power_ogf(p, r)),
        ClosedFormKind::Phi => ClosedForm::Plain(exp_poly(p)),
        ClosedFormKind::Omega => ClosedForm::Plain(geo_poly(p)),
        ClosedFormKind::OmegaGen => ClosedForm::Plain(gen_geo_poly(p, r)),
        ClosedFormKind::Q => ClosedForm::Plain(furdui_q(p).map_err(|e| e.to_string())?),
    };
    let line = match (&object, format) {
        (ClosedForm::Weighted(poly), OutputFormat::Text) => render::egf_text(poly),
        (ClosedForm::Weighted(poly), OutputFormat::Latex) => render::egf_latex(poly),
        (ClosedForm::Weighted(poly), OutputFormat::Json) => to_json(&PolyJson::from(poly))?,
        (ClosedForm::Plain(poly), OutputFormat::Text) => render::poly_text(poly),
        (ClosedForm::Plain(poly), OutputFormat::Latex) => render::poly_latex(poly),
        (ClosedForm::Plain(poly), OutputFormat::Json) => to_json(&PolyJson::from(poly))?,
        (ClosedForm::Rational(f), OutputFormat::Text) => render::ratfn_text(f),
        (ClosedForm::Rational(f), OutputFormat::Latex) => render::ratfn_latex(f),
        (ClosedForm::Rational(f), OutputFormat::Json) => to_json(&RatFnJson::from(f))?,
    };
    println!("{line}");
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

fn run_verify(
    identity: VerifyKind,
    p_max: u32,
    r_max: u32,
    order: u32,
    zero_convention: bool,
    tol: f64,
    format: OutputFormat,
) -> Result<bool, String> {
    let opts = EvalOptions {
        tolerance: tol,
        ..EvalOptions::default()
    };
    let mut all_passed = true;

    let exact = |report: VerificationReport,
                 convention: Option<bool>,
                 all_passed: &mut bool|
     -> Result<(), String> {
        *all_passed &= report.passed();
        let line = if format == OutputFormat::Json {
            to_json(&ReportJson::from_exact(&report, convention))?
        } else {
            render::exact_report_line(&report)
        };
        println!("{line}");
        Ok(())
    };
    let numeric = |report: NumericReport, all_passed: &mut bool| -> Result<(), String> {
        *all_passed &= report.passed;
        let line = if format == OutputFormat::Json {
            to_json(&ReportJson::from_numeric(&report))?
        } else {
            render::numeric_report_line(&report)
        };
        println!("{line}");
        Ok(())
    };

    match identity {
        VerifyKind::Egf => {
            for p in 0..=p_max {
                exact(
                    egf_series_check(p, order, zero_convention),
                    Some(zero_convention),
                    &mut all_passed,
                )?;
            }
        }
        VerifyKind::Prop1 => {
            for p in 0..=p_max {
                exact(egf_split_check(p, order), None, &mut all_passed)?;
            }
        }
        VerifyKind::Ogf => {
            for p in 0..=p_max {
                exact(
                    ogf_series_check(p, order, zero_convention),
                    Some(zero_convention),
                    &mut all_passed,
                )?;
            }
        }
        VerifyKind::BinomialOgf => {
            for p in positive_sweep(p_max, "binomial-ogf")? {
                for r in 0..=r_max {
                    exact(binomial_ogf_check(p, r, order), None, &mut all_passed)?;
                }
            }
        }
        VerifyKind::WeightedOgf => {
            for p in positive_sweep(p_max, "weighted-ogf")? {
                for r in 0..=r_max {
                    exact(
                        weighted_power_ogf_check(p, r, order),
                        None,
                        &mut all_passed,
                    )?;
                }
            }
        }
        VerifyKind::Tail => {
            for p in positive_sweep(p_max, "tail")? {
                for r in 0..=r_max {
                    exact(tail_ogf_identity(p, r, order), None, &mut all_passed)?;
                }
            }
        }
        VerifyKind::Grunert => {
            for p in 0..=p_max {
                exact(phi_recurrence_check(p), None, &mut all_passed)?;
            }
        }
        VerifyKind::QEqualsPhi => {
            for p in positive_sweep(p_max, "q-equals-phi")? {
                let report = q_phi_check(p).map_err(|e| e.to_string())?;
                exact(report, None, &mut all_passed)?;
            }
        }
        VerifyKind::EinTriangle => {
            for x in [0.25, 1.0, 2.0, 5.0] {
                let report = gamma_triangle_check(x, &opts).map_err(|e| e.to_string())?;
                numeric(report, &mut all_passed)?;
            }
        }
        VerifyKind::HarmonicEgf => {
            for x in [-2.0, 0.5, 3.0] {
                numeric(harmonic_egf_check(x, order, &opts), &mut all_passed)?;
            }
        }
        VerifyKind::ReciprocalOgf => {
            for p in [1.0, 2.0, 3.0] {
                for x in [0.25, 0.5] {
                    let report =
                        reciprocal_sum_ogf_check(p, x, order, &opts).map_err(|e| e.to_string())?;
                    numeric(report, &mut all_passed)?;
                }
            }
        }
    }
    Ok(all_passed)
}

/// Sweeps that start at p = 1; p_max = 0 would silently check nothing.
fn positive_sweep(p_max: u32, identity: &str) -> Result<std::ops::RangeInclusive<u32>, String> {
    if p_max == 0 {
        return Err(format!("verify {identity} requires --p-max >= 1"));
    }
    Ok(1..=p_max)
}

fn print_stirling_table(n_max: u32, format: OutputFormat) {
    let table = StirlingTable::shared();
    let rows: Vec<Vec<String>> = (0..=n_max)
        .map(|n| table.row(n).iter().map(|v| v.to_string()).collect())
        .collect();
    if format == OutputFormat::Json {
        let json = serde_json::to_string(&TableJson { rows }).expect("strings serialize");
        println!("{json}");
    } else {
        for row in rows {
            println!("{}", row.join(" "));
        }
    }
}

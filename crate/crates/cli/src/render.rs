//! Deterministic text and LaTeX rendering.
//!
//! Text form: descending powers, reduced fractions, explicit `*` between an
//! integer coefficient and the variable, division only by integers
//! (`7*x^2/2`, never decimal). LaTeX form mirrors how such sums are usually
//! typeset: `\frac` for fractional coefficients, juxtaposition instead of
//! `*`, braces around every exponent.

use num_traits::{One, Signed, Zero};
use powergen_core::exact::{BigInt, Polynomial, Rational};
use powergen_core::identities::VerificationReport;
use powergen_core::numeric::NumericReport;
use powergen_core::ratfn::RatAtOne;

pub fn rational_text(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn text_term(numer: &BigInt, denom: &BigInt, power: usize) -> String {
    if power == 0 {
        return if denom.is_one() {
            numer.to_string()
        } else {
            format!("{numer}/{denom}")
        };
    }
    let mut out = String::new();
    if !numer.is_one() {
        out.push_str(&format!("{numer}*"));
    }
    if power == 1 {
        out.push('x');
    } else {
        out.push_str(&format!("x^{power}"));
    }
    if !denom.is_one() {
        out.push_str(&format!("/{denom}"));
    }
    out
}

fn latex_term(numer: &BigInt, denom: &BigInt, power: usize) -> String {
    let body = match power {
        0 => String::new(),
        1 => "x".to_string(),
        _ => format!("x^{{{power}}}"),
    };
    let top = if power == 0 {
        numer.to_string()
    } else if numer.is_one() {
        body
    } else {
        format!("{numer}{body}")
    };
    if denom.is_one() {
        top
    } else {
        format!("\\frac{{{top}}}{{{denom}}}")
    }
}

fn render_sum(poly: &Polynomial, term: impl Fn(&BigInt, &BigInt, usize) -> String, spaced: bool) -> String {
    let mut out = String::new();
    for power in (0..poly.coeffs().len()).rev() {
        let c = poly.coeff(power);
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            let sign = if negative { '-' } else { '+' };
            if spaced {
                out.push(' ');
                out.push(sign);
                out.push(' ');
            } else {
                out.push(sign);
            }
        }
        let abs = c.abs();
        out.push_str(&term(abs.numer(), abs.denom(), power));
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

pub fn poly_text(poly: &Polynomial) -> String {
    render_sum(poly, text_term, true)
}

pub fn poly_latex(poly: &Polynomial) -> String {
    render_sum(poly, latex_term, false)
}

/// `e^x * (...)` wrapper for the exponential generating functions.
pub fn egf_text(factor: &Polynomial) -> String {
    format!("e^x * ({})", poly_text(factor))
}

pub fn egf_latex(factor: &Polynomial) -> String {
    format!("e^{{x}}\\left({}\\right)", poly_latex(factor))
}

pub fn ratfn_text(f: &RatAtOne) -> String {
    let numerator = poly_text(f.numerator());
    if f.pole_order() == 0 {
        return numerator;
    }
    // parenthesize unless the numerator is a single clean monomial
    let needs_parens = numerator.contains(' ') || numerator.contains('/') || numerator.starts_with('-');
    let wrapped = if needs_parens {
        format!("({numerator})")
    } else {
        numerator
    };
    if f.pole_order() == 1 {
        format!("{wrapped}/(1-x)")
    } else {
        format!("{wrapped}/(1-x)^{}", f.pole_order())
    }
}

pub fn ratfn_latex(f: &RatAtOne) -> String {
    let numerator = poly_latex(f.numerator());
    match f.pole_order() {
        0 => numerator,
        1 => format!("\\frac{{{numerator}}}{{1-x}}"),
        m => format!("\\frac{{{numerator}}}{{(1-x)^{{{m}}}}}"),
    }
}

/// One sweep line for an exact coefficient check.
pub fn exact_report_line(report: &VerificationReport) -> String {
    let mut head = format!("{} p={}", report.identity, report.p);
    if let Some(r) = report.r {
        head.push_str(&format!(" r={r}"));
    }
    if let Some(order) = report.order {
        head.push_str(&format!(" order={order}"));
    }
    match &report.first_mismatch {
        None => format!("{head}: pass"),
        Some(m) => format!(
            "{head}: FAIL at n={} (expected {}, got {})",
            m.index,
            rational_text(&m.expected),
            rational_text(&m.got)
        ),
    }
}

/// One sweep line for a floating-point identity check.
pub fn numeric_report_line(report: &NumericReport) -> String {
    let mut head = report.identity.to_string();
    if let Some(p) = report.p {
        head.push_str(&format!(" p={p}"));
    }
    head.push_str(&format!(" x={}", report.x));
    if let Some(order) = report.order {
        head.push_str(&format!(" order={order}"));
    }
    let verdict = if report.passed { "pass" } else { "FAIL" };
    format!("{head}: {verdict} (gap {:.2e})", report.gap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use powergen_core::exact::rat;
    use powergen_core::identities::{egf_closed_form, ogf_closed_form};

    #[test]
    fn text_rendering_matches_contract() {
        let omega_two = Polynomial::from_coeffs(vec![rat(0, 1), rat(1, 1), rat(2, 1)]);
        assert_eq!(poly_text(&omega_two), "2*x^2 + x");
        assert_eq!(poly_text(&egf_closed_form(3)), "x^4/4 + 2*x^3 + 7*x^2/2 + x");
        assert_eq!(poly_text(&Polynomial::zero()), "0");
        assert_eq!(poly_text(&Polynomial::constant(rat(-3, 4))), "-3/4");
        let mixed = Polynomial::from_coeffs(vec![rat(1, 2), rat(-2, 1)]);
        assert_eq!(poly_text(&mixed), "-2*x + 1/2");
    }

    #[test]
    fn latex_rendering_matches_contract() {
        assert_eq!(
            egf_latex(&egf_closed_form(3)),
            "e^{x}\\left(\\frac{x^{4}}{4}+2x^{3}+\\frac{7x^{2}}{2}+x\\right)"
        );
        let mixed = Polynomial::from_coeffs(vec![rat(-1, 2), rat(0, 1), rat(3, 1)]);
        assert_eq!(poly_latex(&mixed), "3x^{2}-\\frac{1}{2}");
    }

    #[test]
    fn ratfn_rendering_matches_contract() {
        assert_eq!(ratfn_text(&ogf_closed_form(0)), "1/(1-x)^2");
        assert_eq!(ratfn_text(&ogf_closed_form(1)), "x/(1-x)^3");
        assert_eq!(ratfn_text(&ogf_closed_form(2)), "(x^2 + x)/(1-x)^4");
        assert_eq!(
            ratfn_latex(&ogf_closed_form(2)),
            "\\frac{x^{2}+x}{(1-x)^{4}}"
        );
        assert_eq!(
            ratfn_latex(&ogf_closed_form(1)),
            "\\frac{x}{(1-x)^{3}}"
        );
    }
}

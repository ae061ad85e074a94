//! Floating-point evaluation of the transcendental series: the entire
//! exponential integral Ein, the exponential integral Ei, the polylogarithm,
//! and the power-weighted exponential series, plus numeric checks of the
//! harmonic-number and reciprocal-power-sum generating function identities.
//!
//! Doubles are the public numeric type; tests compare against partial sums
//! carried out in exact rational arithmetic and rounded once at the end.
//! Series stop only past the term-magnitude hump (the terms of these series
//! grow before they decay when |x| > 1), and every returned value carries
//! the first omitted term as its error bound.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{BigInt, Polynomial, Rational};

/// Tolerance and term budget for series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    pub tolerance: f64,
    pub max_terms: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            tolerance: 1e-12,
            max_terms: 500,
        }
    }
}

/// Euler-Mascheroni constant, 30 significant digits.
///
/// Hard-coded rather than computed; the Ein/Ei triangle identity and the
/// frozen-value tests guard the transcription.
pub const EULER_GAMMA: f64 = 0.577215664901532860606512090082;

/// Past this |x| the alternating exponential-integral series cancels away
/// double precision, so evaluation refuses rather than returning noise.
const SERIES_X_CAP: f64 = 30.0;

/// A summed series value: the partial sum, the magnitude of the first
/// omitted term, and how many terms were taken.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    pub bound: f64,
    pub terms: usize,
}

/// One numeric identity check: both sides, their gap, and the verdict.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericReport {
    pub identity: &'static str,
    pub x: f64,
    pub p: Option<f64>,
    pub order: Option<u32>,
    pub tolerance: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
    pub passed: bool,
}

/// Shared loop for series with terms `sign_n * x^n / (n! n)`.
///
/// Stops once the next term is below `tolerance * max(1, |partial|)` and the
/// index has passed |x|, where the term magnitudes peak.
fn exp_integral_series(x: f64, alternating: bool, opts: &EvalOptions) -> Result<Evaluation> {
    let mut sum = 0.0;
    let mut pow = 1.0; // x^n / n! carried across iterations
    let mut bound = f64::INFINITY;
    for n in 1..=opts.max_terms {
        pow *= x / n as f64;
        let mut term = pow / n as f64;
        if alternating && n % 2 == 0 {
            term = -term;
        }
        sum += term;
        let next = (pow * x / ((n + 1) * (n + 1)) as f64).abs();
        bound = next;
        if next < opts.tolerance * sum.abs().max(1.0) && n as f64 > x.abs() {
            return Ok(Evaluation {
                value: sum,
                bound: next,
                terms: n,
            });
        }
    }
    Err(Error::Accuracy {
        message: format!("series did not converge within {} terms", opts.max_terms),
        bound,
    })
}

fn check_series_cap(name: &str, x: f64) -> Result<()> {
    if x.abs() > SERIES_X_CAP {
        // estimated cancellation floor: the term hump reaches about e^|x|
        return Err(Error::Accuracy {
            message: format!("{name} series loses double precision for |x| > {SERIES_X_CAP}"),
            bound: x.abs().exp() * f64::EPSILON,
        });
    }
    Ok(())
}

/// Entire exponential integral `Ein(x) = sum (-1)^(n-1) x^n / (n! n)`.
pub fn ein_num(x: f64, opts: &EvalOptions) -> Result<Evaluation> {
    check_series_cap("Ein", x)?;
    exp_integral_series(x, true, opts)
}

/// Exponential integral `Ei(x) = gamma + ln|x| + sum x^n / (n! n)`, x != 0.
pub fn ei_num(x: f64, opts: &EvalOptions) -> Result<Evaluation> {
    if x == 0.0 {
        return Err(Error::Domain("Ei requires x != 0".into()));
    }
    check_series_cap("Ei", x)?;
    let series = exp_integral_series(x, false, opts)?;
    Ok(Evaluation {
        value: EULER_GAMMA + x.abs().ln() + series.value,
        ..series
    })
}

/// Exact harmonic number `H_n = 1 + 1/2 + ... + 1/n`, n >= 1.
pub fn harmonic_exact(n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Domain("harmonic numbers require n >= 1".into()));
    }
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc += Rational::new(BigInt::one(), BigInt::from(k));
    }
    Ok(acc)
}

/// Checks the harmonic-number EGF identity
/// `sum_{n=1}^{order} H_n x^n / n!  ==  e^x Ein(x)` to `opts.tolerance`.
///
/// The left side is a direct partial sum; pick `order` large enough that its
/// omitted tail sits below the tolerance (order 40 already overshoots for
/// |x| <= 3). Equivalently this is the `p = -1` member of the power-sum EGF
/// family, since the inner sums are then the harmonic numbers.
pub fn harmonic_egf_check(x: f64, order: u32, opts: &EvalOptions) -> NumericReport {
    let mut lhs = 0.0;
    let mut h = 0.0;
    let mut pow = 1.0;
    for n in 1..=u64::from(order) {
        h += 1.0 / n as f64;
        pow *= x / n as f64;
        lhs += h * pow;
    }
    // the Ein truncation error is amplified by the e^x factor on the right
    // side, and the stop rule scales it by max(1, |partial|) on top; tighten
    // the inner tolerance so the product stays below opts.tolerance
    let ein_opts = EvalOptions {
        tolerance: opts.tolerance / (4.0 * x.exp().max(1.0)),
        ..*opts
    };
    let (rhs, gap) = match ein_num(x, &ein_opts) {
        Ok(e) => {
            let rhs = x.exp() * e.value;
            (rhs, (lhs - rhs).abs())
        }
        Err(_) => (f64::NAN, f64::INFINITY),
    };
    NumericReport {
        identity: "harmonic-egf",
        x,
        p: None,
        order: Some(order),
        tolerance: opts.tolerance,
        lhs,
        rhs,
        gap,
        passed: gap < opts.tolerance,
    }
}

/// Checks the triangle `Ein(x) + Ei(-x) - ln x == gamma` for x > 0, to
/// twice the tolerance (two series evaluations contribute).
pub fn gamma_triangle_check(x: f64, opts: &EvalOptions) -> Result<NumericReport> {
    if x <= 0.0 {
        return Err(Error::Domain(
            "the Ein/Ei/gamma triangle requires x > 0".into(),
        ));
    }
    let lhs = ein_num(x, opts)?.value + ei_num(-x, opts)?.value - x.ln();
    let gap = (lhs - EULER_GAMMA).abs();
    Ok(NumericReport {
        identity: "ein-triangle",
        x,
        p: None,
        order: None,
        tolerance: opts.tolerance,
        lhs,
        rhs: EULER_GAMMA,
        gap,
        passed: gap < 2.0 * opts.tolerance,
    })
}

/// Polylogarithm `Li_p(x) = sum_{n>=1} x^n / n^p` for |x| < 1, truncated
/// once the geometric tail bound `|x|^(N+1)/(1-|x|) * max(1, N^-p)` falls
/// below the tolerance.
pub fn polylog_num(p: f64, x: f64, opts: &EvalOptions) -> Result<Evaluation> {
    if x.abs() >= 1.0 {
        return Err(Error::Domain("polylog requires |x| < 1".into()));
    }
    if x == 0.0 {
        return Ok(Evaluation {
            value: 0.0,
            bound: 0.0,
            terms: 0,
        });
    }
    let mut sum = 0.0;
    let mut pow = 1.0;
    let mut bound = f64::INFINITY;
    for n in 1..=opts.max_terms {
        pow *= x;
        sum += pow / (n as f64).powf(p);
        let tail = pow.abs() * x.abs() / (1.0 - x.abs()) * (n as f64).powf(-p).max(1.0);
        bound = tail;
        if tail < opts.tolerance {
            return Ok(Evaluation {
                value: sum,
                bound: tail,
                terms: n,
            });
        }
    }
    Err(Error::Accuracy {
        message: format!("polylog did not converge within {} terms", opts.max_terms),
        bound,
    })
}

/// Checks `sum_n (1/1^p + ... + 1/n^p) x^n == Li_p(x)/(1-x)` for |x| < 1 by
/// direct partial summation of the left side up to `order`; at `p = 1` the
/// right side is also compared against `-ln(1-x)/(1-x)`.
///
/// Passing allows the tolerance plus the geometric bound on the truncated
/// left tail.
pub fn reciprocal_sum_ogf_check(
    p: f64,
    x: f64,
    order: u32,
    opts: &EvalOptions,
) -> Result<NumericReport> {
    if x.abs() >= 1.0 {
        return Err(Error::Domain(
            "the reciprocal-sum OGF requires |x| < 1".into(),
        ));
    }
    let mut lhs = 0.0;
    let mut inner = 0.0;
    let mut pow = 1.0;
    for n in 1..=u64::from(order) {
        inner += (n as f64).powf(-p);
        pow *= x;
        lhs += inner * pow;
    }
    let rhs = polylog_num(p, x, opts)?.value / (1.0 - x);
    let mut gap = (lhs - rhs).abs();
    if p == 1.0 {
        let closed = -(1.0 - x).ln() / (1.0 - x);
        gap = gap.max((lhs - closed).abs());
    }
    // inner sums grow at most like n * max(1, n^-p); bound the cut tail
    let nf = f64::from(order) + 1.0;
    let tail = if x == 0.0 {
        0.0
    } else {
        nf * nf.powf(-p).max(1.0) * x.abs().powf(nf) / (1.0 - x.abs()).powi(2)
    };
    Ok(NumericReport {
        identity: "reciprocal-ogf",
        x,
        p: Some(p),
        order: Some(order),
        tolerance: opts.tolerance,
        lhs,
        rhs,
        gap,
        passed: gap < opts.tolerance + tail,
    })
}

/// Power-weighted exponential series `E(x, p) = sum_{n>=1} n^p x^n / n!`.
///
/// For integer p >= 0 this equals `e^x phi_p(x)`; the series is summed
/// directly so that comparison stays meaningful for any real p.
pub fn e_series_num(x: f64, p: f64, opts: &EvalOptions) -> Result<Evaluation> {
    let mut sum = 0.0;
    let mut pow = 1.0;
    let mut bound = f64::INFINITY;
    let hump = x.abs() + p.max(0.0);
    for n in 1..=opts.max_terms {
        pow *= x / n as f64;
        sum += (n as f64).powf(p) * pow;
        let next = (((n + 1) as f64).powf(p) * pow * x / (n + 1) as f64).abs();
        bound = next;
        if next < opts.tolerance * sum.abs().max(1.0) && n as f64 > hump {
            return Ok(Evaluation {
                value: sum,
                bound: next,
                terms: n,
            });
        }
    }
    Err(Error::Accuracy {
        message: format!(
            "power-weighted series did not converge within {} terms",
            opts.max_terms
        ),
        bound,
    })
}

/// Power-sum exponential series
/// `M(x, p) = sum_{n>=1} (1^p + ... + n^p) x^n / n!`, truncated at `order`.
///
/// The truncation point is explicit, so there is no tolerance to steer;
/// the returned bound is the first omitted term.
pub fn m_series_num(x: f64, p: f64, order: u32) -> Evaluation {
    let mut sum = 0.0;
    let mut inner = 0.0;
    let mut pow = 1.0;
    for n in 1..=u64::from(order) {
        inner += (n as f64).powf(p);
        pow *= x / n as f64;
        sum += inner * pow;
    }
    let nf = f64::from(order) + 1.0;
    let bound = ((inner + nf.powf(p)) * pow * x / nf).abs();
    Evaluation {
        value: sum,
        bound,
        terms: order as usize,
    }
}

/// Evaluates a rational-coefficient polynomial at a float point.
///
/// Exact Horner evaluation happens on the rational side when the point is
/// exactly representable; this helper is the float shortcut for numeric
/// comparisons.
pub fn poly_eval_f64(p: &Polynomial, x: f64) -> f64 {
    let mut acc = 0.0;
    for c in p.coeffs().iter().rev() {
        acc = acc * x + ratio_to_f64(c);
    }
    acc
}

fn ratio_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().expect("rational out of f64 range")
}

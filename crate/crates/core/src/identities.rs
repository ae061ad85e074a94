//! Closed-form generating functions for the power sums
//! `1^p + 2^p + ... + n^p`, each paired with a coefficient-by-coefficient
//! check against brute-force summation.
//!
//! The brute-force side ([`faulhaber`]) is the ground truth: it is a one-line
//! definition with no room for error, so every closed form here is verified
//! against it and never the other way around. Checks return a
//! [`VerificationReport`] rather than erroring, so a failure carries the
//! first mismatching coefficient for diagnosis.
//!
//! On the `p = 0` edge the sums admit two conventions. With
//! `zero_convention` off the sum is literally `1^p + ... + n^p`; with it on,
//! a leading `0^p` term is included under the agreement `0^0 = 1`, which
//! shifts every `p = 0` sum up by one. The exponential-side check matches
//! the `phi`-based closed form only under the convention, while the
//! Stirling-quotient form [`egf_closed_form`] matches the plain sums as is;
//! both facts are pinned by tests.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::exact::{binomial, BigInt, Polynomial, Rational};
use crate::ratfn::{binomial_weight, compose_geometric, RatAtOne};
use crate::special::{exp_poly, furdui_q, gen_geo_poly, geo_poly, stirling2};

/// First coefficient position where a checked series disagreed with the
/// brute-force expectation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: u64,
    pub expected: Rational,
    pub got: Rational,
}

/// Outcome of one identity check at fixed parameters.
///
/// `identity` is the sweep tag the CLI exposes; the check passed exactly
/// when `first_mismatch` is absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: &'static str,
    pub p: u32,
    pub r: Option<u32>,
    pub order: Option<u32>,
    pub first_mismatch: Option<Mismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }

    fn from_pairs(
        identity: &'static str,
        p: u32,
        r: Option<u32>,
        order: Option<u32>,
        pairs: impl IntoIterator<Item = (u64, Rational, Rational)>,
    ) -> Self {
        let first_mismatch = pairs
            .into_iter()
            .find(|(_, expected, got)| expected != got)
            .map(|(index, expected, got)| Mismatch {
                index,
                expected,
                got,
            });
        VerificationReport {
            identity,
            p,
            r,
            order,
            first_mismatch,
        }
    }
}

/// Brute-force power sum `1^p + 2^p + ... + n^p`.
///
/// With `include_zero_term` a leading `0^p` is added under the agreement
/// `0^0 = 1`; for `p >= 1` that term vanishes, for `p = 0` the sum over
/// `0..=n` becomes `n + 1`.
pub fn faulhaber(p: u32, n: u64, include_zero_term: bool) -> BigInt {
    let mut acc = if include_zero_term && p == 0 {
        BigInt::one()
    } else {
        BigInt::zero()
    };
    for k in 1..=n {
        acc += BigInt::from(k).pow(p);
    }
    acc
}

/// The Stirling-quotient closed form
/// `A_p(x) = sum_{k=1}^{p+1} S(p+1, k)/k * x^k`.
///
/// `e^x A_p(x)` is the exponential generating function of the power sums:
/// its n-th coefficient times `n!` is `faulhaber(p, n)`.
pub fn egf_closed_form(p: u32) -> Polynomial {
    let mut coeffs = vec![Rational::zero()];
    for k in 1..=p + 1 {
        coeffs.push(Rational::new(stirling2(p + 1, k), BigInt::from(k)));
    }
    Polynomial::from_coeffs(coeffs)
}

/// The same closed form built by the other route:
/// `phi_p(x) + integral of phi_p`.
///
/// Equal to [`egf_closed_form`] for `p >= 1`; at `p = 0` the two differ by
/// exactly the constant 1, the same offset the zero-start convention adds to
/// the sums.
pub fn egf_closed_form_alt(p: u32) -> Polynomial {
    let phi = exp_poly(p);
    &phi + &phi.antiderivative()
}

/// `n(n-1)...(n-j+1)` as a big integer; zero when `j > n`.
fn falling(n: u64, j: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..j {
        if i >= n {
            return BigInt::zero();
        }
        acc *= n - i;
    }
    acc
}

/// `n! [x^n] (e^x a(x))`, exact: `sum_j a_j * n!/(n-j)!`.
pub fn egf_coefficient(a: &Polynomial, n: u64) -> Rational {
    let mut acc = Rational::zero();
    for (j, c) in a.coeffs().iter().enumerate() {
        let j = j as u64;
        if j > n {
            break;
        }
        acc += c * Rational::from_integer(falling(n, j));
    }
    acc
}

/// Checks `n! [x^n](e^x A) == faulhaber(p, n)` for `1 <= n <= order`, where
/// `A` is the phi-based closed form and the sums follow `zero_convention`.
///
/// For `p >= 1` the flag is irrelevant. At `p = 0` the check passes only
/// with the convention on; the Stirling-quotient form is the one that
/// matches the plain sums there (see the module notes).
pub fn egf_series_check(p: u32, order: u32, zero_convention: bool) -> VerificationReport {
    egf_series_check_with(&egf_closed_form_alt(p), p, order, zero_convention)
}

/// [`egf_series_check`] against a caller-supplied polynomial, so tests can
/// probe how mutations of the closed form are detected.
pub fn egf_series_check_with(
    a: &Polynomial,
    p: u32,
    order: u32,
    zero_convention: bool,
) -> VerificationReport {
    let pairs = (1..=u64::from(order)).map(|n| {
        let expected = Rational::from_integer(faulhaber(p, n, zero_convention));
        (n, expected, egf_coefficient(a, n))
    });
    VerificationReport::from_pairs("egf", p, None, Some(order), pairs)
}

/// Verifies the split of the exponential generating function into its
/// `e^x phi_p` part and the integral remainder: first that
/// `n! [x^n](e^x phi_p) == n^p` for `1 <= n <= order`, then that the
/// phi-based route reproduces the Stirling-quotient closed form (at `p = 0`
/// the routes differ by exactly the constant 1, and that exact offset is
/// what is asserted).
pub fn egf_split_check(p: u32, order: u32) -> VerificationReport {
    let phi = exp_poly(p);
    let power_pairs = (1..=u64::from(order)).map(|n| {
        let expected = Rational::from_integer(BigInt::from(n).pow(p));
        (n, expected, egf_coefficient(&phi, n))
    });
    let report = VerificationReport::from_pairs("prop1", p, None, Some(order), power_pairs);
    if !report.passed() {
        return report;
    }

    // route agreement, coefficient by coefficient
    let diff = &egf_closed_form_alt(p) - &egf_closed_form(p);
    let expected_diff = if p == 0 {
        Polynomial::one()
    } else {
        Polynomial::zero()
    };
    let top = diff
        .coeffs()
        .len()
        .max(expected_diff.coeffs().len()) as u64;
    let coeff_pairs =
        (0..top).map(|k| (k, expected_diff.coeff(k as usize), diff.coeff(k as usize)));
    VerificationReport::from_pairs("prop1", p, None, Some(order), coeff_pairs)
}

/// Ordinary generating function of the power sums:
/// `omega_p(x/(1-x)) / (1-x)^2`, normalized.
///
/// Its n-th Taylor coefficient is `faulhaber(p, n)` for `p >= 1`; at
/// `p = 0` it generates the zero-start sums `n + 1`.
pub fn ogf_closed_form(p: u32) -> RatAtOne {
    compose_geometric(&geo_poly(p), 2)
}

/// Checks the Taylor coefficients of [`ogf_closed_form`] against the sums
/// for `0 <= n < order`, under the given `p = 0` convention.
pub fn ogf_series_check(p: u32, order: u32, zero_convention: bool) -> VerificationReport {
    ogf_series_check_with(&ogf_closed_form(p), p, order, zero_convention)
}

/// [`ogf_series_check`] against a caller-supplied rational function.
pub fn ogf_series_check_with(
    f: &RatAtOne,
    p: u32,
    order: u32,
    zero_convention: bool,
) -> VerificationReport {
    let coeffs = f.taylor(order as usize);
    let pairs = coeffs.into_iter().enumerate().map(|(n, got)| {
        let n = n as u64;
        let expected = Rational::from_integer(faulhaber(p, n, zero_convention));
        (n, expected, got)
    });
    VerificationReport::from_pairs("ogf", p, None, Some(order), pairs)
}

/// Binomially weighted power-sum OGF: [`binomial_weight`] applied to
/// [`ogf_closed_form`], so coefficient n is `C(n+r, r) * faulhaber(p, n)`.
pub fn binomial_ogf(p: u32, r: u32) -> RatAtOne {
    binomial_weight(&ogf_closed_form(p), r)
}

/// Checks the coefficients of [`binomial_ogf`] against
/// `C(n+r, r) * faulhaber(p, n)` for `0 <= n < order`.
pub fn binomial_ogf_check(p: u32, r: u32, order: u32) -> VerificationReport {
    binomial_ogf_check_with(&binomial_ogf(p, r), p, r, order)
}

/// [`binomial_ogf_check`] against a caller-supplied rational function.
pub fn binomial_ogf_check_with(f: &RatAtOne, p: u32, r: u32, order: u32) -> VerificationReport {
    let coeffs = f.taylor(order as usize);
    let pairs = coeffs.into_iter().enumerate().map(|(n, got)| {
        let n = n as u64;
        let expected = binomial(n + u64::from(r), u64::from(r)) * faulhaber(p, n, false);
        (n, Rational::from_integer(expected), got)
    });
    VerificationReport::from_pairs("binomial-ogf", p, Some(r), Some(order), pairs)
}

/// OGF of the binomially weighted plain powers:
/// `gen_geo_poly(p, r)` composed with `x/(1-x)` over `(1-x)^(r+1)`, so
/// coefficient n is `C(n+r, r) * n^p`.
pub fn weighted_power_ogf(p: u32, r: u32) -> RatAtOne {
    compose_geometric(&gen_geo_poly(p, r), r + 1)
}

/// Checks the coefficients of [`weighted_power_ogf`] against
/// `C(n+r, r) * n^p` for `0 <= n < order` (with `0^0 = 1` at `n = 0`).
pub fn weighted_power_ogf_check(p: u32, r: u32, order: u32) -> VerificationReport {
    weighted_power_ogf_check_with(&weighted_power_ogf(p, r), p, r, order)
}

/// [`weighted_power_ogf_check`] against a caller-supplied rational function.
pub fn weighted_power_ogf_check_with(
    f: &RatAtOne,
    p: u32,
    r: u32,
    order: u32,
) -> VerificationReport {
    let coeffs = f.taylor(order as usize);
    let pairs = coeffs.into_iter().enumerate().map(|(n, got)| {
        let n = n as u64;
        let expected = binomial(n + u64::from(r), u64::from(r)) * BigInt::from(n).pow(p);
        (n, Rational::from_integer(expected), got)
    });
    VerificationReport::from_pairs("weighted-ogf", p, Some(r), Some(order), pairs)
}

/// Verifies the tail-sum identity: the series with coefficient
/// `C(n+r, r) * (1^p + ... + (n-1)^p)` equals
/// `binomial_ogf(p, r) - weighted_power_ogf(p, r)`.
///
/// The left side is summed directly; the right side goes through the
/// rational-function algebra and Taylor extraction.
pub fn tail_ogf_identity(p: u32, r: u32, order: u32) -> VerificationReport {
    let rhs = &binomial_ogf(p, r) - &weighted_power_ogf(p, r);
    tail_ogf_identity_with(&rhs, p, r, order)
}

/// [`tail_ogf_identity`] against a caller-supplied right-hand side.
pub fn tail_ogf_identity_with(rhs: &RatAtOne, p: u32, r: u32, order: u32) -> VerificationReport {
    let coeffs = rhs.taylor(order as usize);
    let pairs = coeffs.into_iter().enumerate().map(|(n, got)| {
        let n = n as u64;
        let expected = if n == 0 {
            BigInt::zero()
        } else {
            binomial(n + u64::from(r), u64::from(r)) * faulhaber(p, n - 1, false)
        };
        (n, Rational::from_integer(expected), got)
    });
    VerificationReport::from_pairs("tail", p, Some(r), Some(order), pairs)
}

/// Checks the recurrence `x (phi_p + phi_p') == phi_{p+1}` coefficientwise.
pub fn phi_recurrence_check(p: u32) -> VerificationReport {
    let phi = exp_poly(p);
    let lhs = (&phi + &phi.derivative()).mul_xpow(1);
    let rhs = exp_poly(p + 1);
    let top = lhs.coeffs().len().max(rhs.coeffs().len()) as u64;
    let pairs = (0..top).map(|k| (k, rhs.coeff(k as usize), lhs.coeff(k as usize)));
    VerificationReport::from_pairs("grunert", p, None, None, pairs)
}

/// Checks that the `Q_p` recurrence reproduces `phi_p` coefficientwise.
/// Domain error below `p = 1`, where `Q_p` is undefined.
pub fn q_phi_check(p: u32) -> Result<VerificationReport> {
    let q = furdui_q(p)?;
    let phi = exp_poly(p);
    let top = q.coeffs().len().max(phi.coeffs().len()) as u64;
    let pairs = (0..top).map(|k| (k, phi.coeff(k as usize), q.coeff(k as usize)));
    Ok(VerificationReport::from_pairs(
        "q-equals-phi",
        p,
        None,
        None,
        pairs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn poly(coeffs: &[(i64, i64)]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn int_poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| rat(c, 1)).collect())
    }

    fn perturbed(p: &Polynomial, index: usize) -> Polynomial {
        let mut coeffs: Vec<Rational> = (0..p.coeffs().len().max(index + 1))
            .map(|k| p.coeff(k))
            .collect();
        coeffs[index] += rat(1, 1);
        Polynomial::from_coeffs(coeffs)
    }

    #[test]
    fn faulhaber_examples() {
        assert_eq!(faulhaber(2, 3, false), BigInt::from(14));
        for p in 0..6 {
            assert_eq!(faulhaber(p, 0, false), BigInt::zero());
        }
        assert_eq!(faulhaber(0, 3, true), BigInt::from(4));
        assert_eq!(faulhaber(0, 3, false), BigInt::from(3));
        // zero-start term is invisible for p >= 1
        assert_eq!(faulhaber(2, 3, true), BigInt::from(14));
    }

    #[test]
    fn faulhaber_matches_polynomial_formulas() {
        for n in 0..=30u64 {
            let big = BigInt::from(n);
            assert_eq!(faulhaber(1, n, false), (&big * (&big + 1)) / 2);
            assert_eq!(
                faulhaber(2, n, false),
                (&big * (&big + 1) * (2 * &big + 1)) / 6
            );
            let tri = (&big * (&big + 1)) / 2;
            assert_eq!(faulhaber(3, n, false), &tri * &tri);
        }
    }

    #[test]
    fn faulhaber_telescopes() {
        for p in 0..=6 {
            for n in 1..=30u64 {
                let step = faulhaber(p, n, false) - faulhaber(p, n - 1, false);
                assert_eq!(step, BigInt::from(n).pow(p), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn egf_closed_form_first_values() {
        assert_eq!(egf_closed_form(1), poly(&[(0, 1), (1, 1), (1, 2)]));
        assert_eq!(
            egf_closed_form(2),
            poly(&[(0, 1), (1, 1), (3, 2), (1, 3)])
        );
        assert_eq!(
            egf_closed_form(3),
            poly(&[(0, 1), (1, 1), (7, 2), (2, 1), (1, 4)])
        );
        assert_eq!(
            egf_closed_form(4),
            poly(&[(0, 1), (1, 1), (15, 2), (25, 3), (5, 2), (1, 5)])
        );
    }

    #[test]
    fn alt_route_examples() {
        assert_eq!(egf_closed_form_alt(0), poly(&[(1, 1), (1, 1)]));
        assert_eq!(egf_closed_form_alt(1), poly(&[(0, 1), (1, 1), (1, 2)]));
        assert_eq!(egf_closed_form_alt(3), egf_closed_form(3));
    }

    #[test]
    fn routes_agree_above_zero_and_differ_by_one_at_zero() {
        for p in 1..=30 {
            assert_eq!(egf_closed_form_alt(p), egf_closed_form(p), "p={p}");
        }
        let diff = &egf_closed_form_alt(0) - &egf_closed_form(0);
        assert_eq!(diff, Polynomial::one());
    }

    #[test]
    fn egf_coefficient_basics() {
        // e^x alone: every n! [x^n] is 1
        for n in 0..10 {
            assert_eq!(egf_coefficient(&Polynomial::one(), n), rat(1, 1));
        }
        // e^x * x: n!/(n-1)! = n
        for n in 0..10 {
            assert_eq!(egf_coefficient(&Polynomial::x(), n), rat(n as i64, 1));
        }
    }

    #[test]
    fn egf_series_check_passes() {
        assert!(egf_series_check(3, 20, false).passed());
        assert!(egf_series_check(3, 20, true).passed());
        assert!(egf_series_check(0, 10, true).passed());
        for p in 1..=10 {
            assert!(egf_series_check(p, 25, false).passed(), "p={p}");
        }
    }

    #[test]
    fn egf_zero_case_needs_the_convention() {
        // phi-based form at p=0 generates n+1, the zero-start sums
        let report = egf_series_check(0, 10, false);
        assert!(!report.passed());
        let m = report.first_mismatch.unwrap();
        assert_eq!(m.index, 1);
        assert_eq!(m.expected, rat(1, 1));
        assert_eq!(m.got, rat(2, 1));
        // while the Stirling-quotient form matches the plain sums directly
        let a0 = egf_closed_form(0);
        for n in 1..=10u64 {
            assert_eq!(
                egf_coefficient(&a0, n),
                Rational::from_integer(faulhaber(0, n, false))
            );
        }
    }

    #[test]
    fn egf_mutation_is_detected_at_the_right_index() {
        let mutated = perturbed(&egf_closed_form(3), 2);
        let report = egf_series_check_with(&mutated, 3, 20, false);
        let m = report.first_mismatch.expect("mutation must fail");
        assert_eq!(m.index, 2);
    }

    #[test]
    fn split_check_examples() {
        assert!(egf_split_check(2, 15).passed());
        assert!(egf_split_check(0, 10).passed());
        assert!(egf_split_check(5, 25).passed());
        // the p=2 power part spelled out: n!(x^2+x) coefficients give n^2
        let phi2 = int_poly(&[0, 1, 1]);
        for n in 1..=15u64 {
            assert_eq!(
                egf_coefficient(&phi2, n),
                rat((n * n) as i64, 1),
                "n(n-1)+n at n={n}"
            );
        }
    }

    #[test]
    fn integral_remainder_generates_shifted_sums() {
        // n! [x^n] of e^x (A_p - phi_p) is the sum up to n-1
        for p in 0..=8 {
            let remainder = &egf_closed_form(p) - &exp_poly(p);
            for n in 2..=25u64 {
                assert_eq!(
                    egf_coefficient(&remainder, n),
                    Rational::from_integer(faulhaber(p, n - 1, false)),
                    "p={p} n={n}"
                );
            }
        }
    }

    #[test]
    fn ogf_closed_form_first_values() {
        assert_eq!(ogf_closed_form(0), RatAtOne::geometric_pow(2));
        assert_eq!(ogf_closed_form(1), RatAtOne::new(int_poly(&[0, 1]), 3));
        assert_eq!(ogf_closed_form(2), RatAtOne::new(int_poly(&[0, 1, 1]), 4));
    }

    #[test]
    fn ogf_series_check_passes() {
        let report = ogf_series_check(1, 20, false);
        assert!(report.passed());
        // coefficients are the triangular numbers
        let coeffs = ogf_closed_form(1).taylor(20);
        for (n, c) in coeffs.iter().enumerate() {
            assert_eq!(c, &rat((n * (n + 1) / 2) as i64, 1));
        }
        assert!(ogf_series_check(3, 20, false).passed());
        assert_eq!(ogf_closed_form(3).taylor(4)[3], rat(36, 1));
        assert!(ogf_series_check(0, 10, true).passed());
        assert!(!ogf_series_check(0, 10, false).passed());
    }

    #[test]
    fn ogf_mutation_is_detected_at_the_right_index() {
        let base = ogf_closed_form(2);
        let mutated = RatAtOne::new(perturbed(base.numerator(), 1), base.pole_order());
        let report = ogf_series_check_with(&mutated, 2, 20, false);
        assert_eq!(report.first_mismatch.unwrap().index, 1);
    }

    #[test]
    fn binomial_ogf_reduces_at_r_zero() {
        for p in 1..=8 {
            assert_eq!(binomial_ogf(p, 0), ogf_closed_form(p), "p={p}");
        }
    }

    #[test]
    fn binomial_ogf_coefficients() {
        // (p=1, r=1): coefficient n is (n+1) * n(n+1)/2
        let coeffs = binomial_ogf(1, 1).taylor(15);
        for (n, c) in coeffs.iter().enumerate() {
            let expected = rat(((n + 1) * n * (n + 1) / 2) as i64, 1);
            assert_eq!(c, &expected, "n={n}");
        }
        // (p=2, r=2) at n=2: C(4,2) * (1+4) = 30
        assert_eq!(binomial_ogf(2, 2).taylor(3)[2], rat(30, 1));
        for p in 1..=8 {
            for r in 0..=5 {
                assert!(binomial_ogf_check(p, r, 25).passed(), "p={p} r={r}");
            }
        }
    }

    #[test]
    fn weighted_power_ogf_structure() {
        assert_eq!(weighted_power_ogf(0, 0), RatAtOne::geometric_pow(1));
        assert_eq!(
            weighted_power_ogf(1, 0),
            RatAtOne::new(int_poly(&[0, 1]), 2)
        );
        assert_eq!(
            weighted_power_ogf(1, 1),
            RatAtOne::new(int_poly(&[0, 2]), 3)
        );
        let coeffs = weighted_power_ogf(1, 1).taylor(12);
        for (n, c) in coeffs.iter().enumerate() {
            assert_eq!(c, &rat(((n + 1) * n) as i64, 1), "n={n}");
        }
        for p in 0..=8 {
            for r in 0..=5 {
                assert!(weighted_power_ogf_check(p, r, 25).passed(), "p={p} r={r}");
            }
        }
    }

    #[test]
    fn tail_identity_examples() {
        // r = 0, p = 1: right side collapses to x^2/(1-x)^3
        let rhs = &binomial_ogf(1, 0) - &weighted_power_ogf(1, 0);
        assert_eq!(rhs, RatAtOne::new(int_poly(&[0, 0, 1]), 3));
        assert!(tail_ogf_identity(1, 0, 20).passed());
        assert!(tail_ogf_identity(2, 1, 15).passed());
        // order 1 compares only the vanishing constant coefficients
        for p in 1..=4 {
            for r in 0..=3 {
                assert!(tail_ogf_identity(p, r, 1).passed());
            }
        }
    }

    #[test]
    fn tail_mutation_is_detected_at_the_right_index() {
        let rhs = &binomial_ogf(2, 1) - &weighted_power_ogf(2, 1);
        let mutated = RatAtOne::new(perturbed(rhs.numerator(), 3), rhs.pole_order());
        let report = tail_ogf_identity_with(&mutated, 2, 1, 15);
        assert_eq!(report.first_mismatch.unwrap().index, 3);
    }

    #[test]
    fn recurrence_checks_pass() {
        for p in 0..=30 {
            assert!(phi_recurrence_check(p).passed(), "p={p}");
        }
        for p in 1..=30 {
            assert!(q_phi_check(p).unwrap().passed(), "p={p}");
        }
        assert!(q_phi_check(0).is_err());
    }

    #[test]
    fn report_status_tracks_mismatch() {
        let pass = egf_series_check(2, 10, false);
        assert!(pass.passed());
        assert!(pass.first_mismatch.is_none());
        let fail = egf_series_check(0, 10, false);
        assert!(!fail.passed());
        assert!(fail.first_mismatch.is_some());
        assert_eq!(fail.identity, "egf");
        assert_eq!(fail.p, 0);
    }
}

//! Rational functions with a single pole at `x = 1`.
//!
//! Every ordinary generating function in this crate is a polynomial divided
//! by a power of `(1 - x)`, so the type is exactly that: `N(x)/(1-x)^m`.
//! Restricting the pole keeps normalization, differentiation, and Taylor
//! extraction closed-form; nothing here needs general rational functions.
//!
//! Taylor coefficients come from the expansion
//! `1/(1-x)^m = sum_n C(n+m-1, m-1) x^n`, convolved with the numerator.

use num_traits::{One, Zero};

use crate::exact::{binomial, factorial, rat_int, BigInt, Polynomial, Rational};

/// `N(x) / (1-x)^m`, kept canonical: either `m = 0` (a plain polynomial) or
/// `(1-x)` does not divide `N`, i.e. `N(1) != 0`.
///
/// Canonical form makes `==` meaningful: two values compare equal exactly
/// when they denote the same function.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatAtOne {
    numerator: Polynomial,
    pole_order: u32,
}

/// `(1-x)^k` expanded: coefficient of `x^i` is `(-1)^i C(k, i)`.
fn one_minus_x_pow(k: u32) -> Polynomial {
    let coeffs = (0..=u64::from(k))
        .map(|i| {
            let b = Rational::from_integer(binomial(u64::from(k), i));
            if i % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .collect();
    Polynomial::from_coeffs(coeffs)
}

/// Quotient of `p` by `(1-x)`, valid only when `p(1) = 0`.
///
/// From `p = (1-x) q` the coefficients of `q` are the prefix sums of the
/// coefficients of `p`; `p(1) = 0` makes the top prefix sum vanish.
fn div_one_minus_x(p: &Polynomial) -> Polynomial {
    let mut acc = Rational::zero();
    let mut coeffs = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        acc += c;
        coeffs.push(acc.clone());
    }
    debug_assert!(coeffs.last().is_none_or(Zero::is_zero), "not divisible by 1-x");
    coeffs.pop();
    Polynomial::from_coeffs(coeffs)
}

impl RatAtOne {
    /// Builds `numerator/(1-x)^pole_order` and normalizes: factors of
    /// `(1-x)` shared with the numerator are cancelled, and a zero numerator
    /// collapses the pole order to zero.
    pub fn new(numerator: Polynomial, pole_order: u32) -> Self {
        let mut f = RatAtOne {
            numerator,
            pole_order,
        };
        f.normalize();
        f
    }

    pub fn zero() -> Self {
        RatAtOne::new(Polynomial::zero(), 0)
    }

    /// The polynomial `p` viewed as a rational function with no pole.
    pub fn from_poly(p: Polynomial) -> Self {
        RatAtOne::new(p, 0)
    }

    /// `1/(1-x)^m`.
    pub fn geometric_pow(m: u32) -> Self {
        RatAtOne::new(Polynomial::one(), m)
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn pole_order(&self) -> u32 {
        self.pole_order
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn normalize(&mut self) {
        if self.numerator.is_zero() {
            self.pole_order = 0;
            return;
        }
        let one = rat_int(1);
        while self.pole_order > 0 && self.numerator.eval(&one).is_zero() {
            self.numerator = div_one_minus_x(&self.numerator);
            self.pole_order -= 1;
        }
    }

    /// Derivative; the quotient rule collapses to
    /// `[N'(1-x) + m N] / (1-x)^(m+1)`.
    pub fn derivative(&self) -> RatAtOne {
        let m = rat_int(u64::from(self.pole_order));
        let n_prime = self.numerator.derivative();
        let numerator = &(&n_prime * &one_minus_x_pow(1)) + &self.numerator.scale(&m);
        RatAtOne::new(numerator, self.pole_order + 1)
    }

    /// First `count` Taylor coefficients at the origin, exact.
    ///
    /// Coefficient `n` is `sum_j N_j C(n-j+m-1, m-1)`; with `m = 0` it is
    /// just the numerator coefficient.
    pub fn taylor(&self, count: usize) -> Vec<Rational> {
        if self.pole_order == 0 {
            return (0..count).map(|n| self.numerator.coeff(n)).collect();
        }
        let m = u64::from(self.pole_order);
        (0..count as u64)
            .map(|n| {
                let mut acc = Rational::zero();
                for (j, c) in self.numerator.coeffs().iter().enumerate() {
                    let j = j as u64;
                    if j > n {
                        break;
                    }
                    acc += c * Rational::from_integer(binomial(n - j + m - 1, m - 1));
                }
                acc
            })
            .collect()
    }
}

impl std::ops::Add for &RatAtOne {
    type Output = RatAtOne;

    fn add(self, rhs: &RatAtOne) -> RatAtOne {
        let m = self.pole_order.max(rhs.pole_order);
        let lift = |f: &RatAtOne| &f.numerator * &one_minus_x_pow(m - f.pole_order);
        RatAtOne::new(&lift(self) + &lift(rhs), m)
    }
}

impl std::ops::Sub for &RatAtOne {
    type Output = RatAtOne;

    fn sub(self, rhs: &RatAtOne) -> RatAtOne {
        self + &-rhs
    }
}

impl std::ops::Neg for &RatAtOne {
    type Output = RatAtOne;

    fn neg(self) -> RatAtOne {
        // negating the numerator cannot break canonical form
        RatAtOne {
            numerator: -&self.numerator,
            pole_order: self.pole_order,
        }
    }
}

impl std::ops::Mul for &RatAtOne {
    type Output = RatAtOne;

    fn mul(self, rhs: &RatAtOne) -> RatAtOne {
        RatAtOne::new(
            &self.numerator * &rhs.numerator,
            self.pole_order + rhs.pole_order,
        )
    }
}

/// Substitutes `x -> x/(1-x)` into `P` and divides by `(1-x)^extra_pole`:
/// the result is `[sum_k P_k x^k (1-x)^(d-k)] / (1-x)^(d+extra_pole)` with
/// `d = deg P`.
///
/// This is the only composition the generating-function identities need.
pub fn compose_geometric(p: &Polynomial, extra_pole: u32) -> RatAtOne {
    let Some(d) = p.degree() else {
        return RatAtOne::zero();
    };
    let mut numerator = Polynomial::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = one_minus_x_pow((d - k) as u32).scale(c).mul_xpow(k);
        numerator = &numerator + &term;
    }
    RatAtOne::new(numerator, d as u32 + extra_pole)
}

/// Applies `f -> (1/r!) d^r/dx^r [x^r f]`, the operator that multiplies the
/// n-th Taylor coefficient by `C(n+r, r)`.
pub fn binomial_weight(f: &RatAtOne, r: u32) -> RatAtOne {
    let mut g = RatAtOne::new(f.numerator().mul_xpow(r as usize), f.pole_order());
    for _ in 0..r {
        g = g.derivative();
    }
    let scale = Rational::new(BigInt::one(), factorial(r));
    RatAtOne::new(g.numerator().scale(&scale), g.pole_order())
}

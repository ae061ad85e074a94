//! Stirling numbers of the second kind and the polynomial families built
//! from them.
//!
//! `S(n, k)` counts partitions of an n-element set into k nonempty blocks.
//! Three weightings of a Stirling row give the families used elsewhere:
//!
//! * exponential:        `phi_p(x)  = sum_k S(p, k) x^k`
//! * geometric:          `omega_p(x) = sum_k S(p, k) k! x^k`
//! * generalized, order r+1: `(1/r!) sum_k S(p, k) (k + r)! x^k`
//!
//! All constructors draw rows from one process-wide table that grows lazily
//! under a lock, so a row is computed once no matter which thread asks first.

use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, BigInt, Polynomial, Rational};

/// Cached triangle of Stirling numbers of the second kind.
///
/// Row `n` holds `S(n, 0) ..= S(n, n)`. Rows are appended on demand via the
/// recurrence `S(n, k) = k S(n-1, k) + S(n-1, k-1)` with `S(0, 0) = 1`;
/// the internal mutex makes growth safe to share across threads.
pub struct StirlingTable {
    rows: Mutex<Vec<Vec<BigInt>>>,
}

impl StirlingTable {
    pub fn new() -> Self {
        StirlingTable {
            rows: Mutex::new(vec![vec![BigInt::one()]]),
        }
    }

    /// The process-wide table shared by the polynomial constructors.
    pub fn shared() -> &'static StirlingTable {
        static TABLE: OnceLock<StirlingTable> = OnceLock::new();
        TABLE.get_or_init(StirlingTable::new)
    }

    /// `S(n, k)`; zero when `k > n`.
    pub fn value(&self, n: u32, k: u32) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        let mut rows = self.rows.lock().unwrap();
        Self::grow(&mut rows, n as usize);
        rows[n as usize][k as usize].clone()
    }

    /// Row `n` of the triangle: `[S(n, 0), ..., S(n, n)]`.
    pub fn row(&self, n: u32) -> Vec<BigInt> {
        let mut rows = self.rows.lock().unwrap();
        Self::grow(&mut rows, n as usize);
        rows[n as usize].clone()
    }

    fn grow(rows: &mut Vec<Vec<BigInt>>, n: usize) {
        while rows.len() <= n {
            let prev = rows.last().unwrap();
            let m = rows.len();
            let mut row = Vec::with_capacity(m + 1);
            row.push(BigInt::zero());
            for k in 1..m {
                row.push(BigInt::from(k) * &prev[k] + &prev[k - 1]);
            }
            row.push(BigInt::one());
            rows.push(row);
        }
    }
}

impl Default for StirlingTable {
    fn default() -> Self {
        StirlingTable::new()
    }
}

/// Stirling number of the second kind `S(n, k)` from the shared table.
pub fn stirling2(n: u32, k: u32) -> BigInt {
    StirlingTable::shared().value(n, k)
}

/// Exponential polynomial `phi_p(x) = sum_{k=0}^{p} S(p, k) x^k`.
///
/// `phi_0 = 1`, `phi_1 = x`, `phi_2 = x^2 + x`; for `p >= 1` the constant
/// term vanishes and the polynomial is monic of degree `p`.
pub fn exp_poly(p: u32) -> Polynomial {
    let row = StirlingTable::shared().row(p);
    Polynomial::from_coeffs(row.into_iter().map(Rational::from_integer).collect())
}

/// Geometric polynomial `omega_p(x) = sum_{k=0}^{p} S(p, k) k! x^k`.
pub fn geo_poly(p: u32) -> Polynomial {
    let row = StirlingTable::shared().row(p);
    let coeffs = row
        .into_iter()
        .enumerate()
        .map(|(k, s)| Rational::from_integer(s * factorial(k as u32)))
        .collect();
    Polynomial::from_coeffs(coeffs)
}

/// Generalized geometric polynomial of order `r + 1`:
/// `(1/r!) sum_{k=0}^{p} S(p, k) (k + r)! x^k`.
///
/// At `r = 0` this is `omega_p` again.
pub fn gen_geo_poly(p: u32, r: u32) -> Polynomial {
    let row = StirlingTable::shared().row(p);
    let r_fact = factorial(r);
    let coeffs = row
        .into_iter()
        .enumerate()
        .map(|(k, s)| Rational::new(s * factorial(k as u32 + r), r_fact.clone()))
        .collect();
    Polynomial::from_coeffs(coeffs)
}

/// The polynomial family `Q_p` defined by `Q_1 = x` and
/// `Q_{p+1} = x Q_p + x Q_p'`.
///
/// Computed by running the recurrence literally, so it stays an independent
/// route to `phi_p` rather than an alias of it; the identity `Q_p = phi_p`
/// is checked by tests, not assumed here. The recurrence has no base case
/// below `p = 1`, so `p = 0` is a domain error.
pub fn furdui_q(p: u32) -> Result<Polynomial> {
    if p == 0 {
        return Err(Error::Domain(
            "Q_p is defined by a recurrence starting at p = 1; p = 0 has no base case".into(),
        ));
    }
    let mut q = Polynomial::x();
    for _ in 1..p {
        q = (&q + &q.derivative()).mul_xpow(1);
    }
    Ok(q)
}

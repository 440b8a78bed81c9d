//! Exhaustive searches for representations of `4 F_p`, independent of the
//! cyclotomic construction. Deliberately naive.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fib::fib;
use crate::modarith::{exact_sqrt, is_prime, isqrt};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest `v` tried in the CaseI scan.
    pub max_v: u64,
    /// Primes above this are refused outright.
    pub enabled_max_p: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_v: 1_000_000,
            enabled_max_p: 59,
        }
    }
}

fn admit(p: u64, residue_mod4: u64, budget: &SearchBudget) -> Result<()> {
    if budget.max_v == 0 || budget.enabled_max_p == 0 {
        return Err(Error::Precondition(
            "search budgets must be positive".into(),
        ));
    }
    if !is_prime(p) || p % 4 != residue_mod4 {
        return Err(Error::Precondition(format!(
            "{p} is not a prime congruent to {residue_mod4} mod 4"
        )));
    }
    if p > budget.enabled_max_p {
        return Err(Error::BudgetExceeded(format!(
            "p = {p} is above the oracle cutoff {}",
            budget.enabled_max_p
        )));
    }
    Ok(())
}

/// Smallest `u >= 0` with `4 F_p = 5u^2 + p v^2`. The scan over
/// `u <= isqrt(4 F_p / 5)` is complete.
pub fn brute_force_case2(p: u64, budget: &SearchBudget) -> Result<(BigInt, BigInt)> {
    admit(p, 3, budget)?;
    let target = fib(p) * 4;
    let bound = isqrt(&(&target / 5))?;
    let p_big = BigInt::from(p);
    let mut u = BigInt::from(0);
    while u <= bound {
        let rest = &target - &u * &u * 5;
        if (&rest % &p_big) == BigInt::from(0) {
            if let Some(v) = exact_sqrt(&(rest / &p_big)) {
                return Ok((u, v));
            }
        }
        u += 1;
    }
    Err(Error::NotFound(p))
}

/// Smallest `v <= max_v` with `4 F_p + p v^2` a perfect square `u^2`.
pub fn brute_force_case1(p: u64, budget: &SearchBudget) -> Result<(BigInt, BigInt)> {
    admit(p, 1, budget)?;
    let target = fib(p) * 4;
    for v in 0..=budget.max_v {
        let v = BigInt::from(v);
        if let Some(u) = exact_sqrt(&(&target + &v * &v * p)) {
            return Ok((u, v));
        }
    }
    Err(Error::BudgetExceeded(format!(
        "no CaseI solution for p = {p} with v <= {}",
        budget.max_v
    )))
}

//! Exhaustive and randomized search for monic right divisors of `x^n - gamma`.

use alloc::vec::Vec;
use core::ops::Range;

use rand_core::RngCore;

use crate::error::Error;
use crate::poly::SkewPoly;
use crate::ring::{Derivation, RElement};
use crate::DEFAULT_SEARCH_BUDGET;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of candidates tested exhaustively.
    pub budget: u64,
    /// When the exhaustive space exceeds `budget`, sample this many random
    /// candidates instead of failing. `None` disables randomized mode.
    pub random_samples: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_SEARCH_BUDGET,
            random_samples: None,
        }
    }
}

/// Number of monic candidates of the given degree, if it fits in a `u64`.
pub fn candidate_count(degree: usize) -> Option<u64> {
    16u64.checked_pow(u32::try_from(degree).ok()?)
}

/// The monic polynomial of `degree` whose lower coefficients are the base-16
/// digits of `index`, coefficient of `x^0` least significant.
pub fn candidate(index: u64, degree: usize, der: Derivation) -> SkewPoly {
    let mut coeffs = Vec::with_capacity(degree + 1);
    let mut t = index;
    for _ in 0..degree {
        coeffs.push(RElement::from_index((t & 15) as u8));
        t >>= 4;
    }
    coeffs.push(RElement::ONE);
    SkewPoly::new(coeffs, der)
}

fn check_args(n: usize, gamma: RElement, degree: usize) -> Result<(), Error> {
    if !gamma.is_unit() {
        return Err(Error::GammaNotUnit(gamma));
    }
    if degree == 0 || degree >= n {
        return Err(Error::DegreeOutOfRange { degree, n });
    }
    Ok(())
}

/// Tests the candidates with indices in `range`, in increasing index order.
/// Parallel drivers split the full range and concatenate the results.
pub fn divisor_search_range(
    n: usize,
    gamma: RElement,
    der: Derivation,
    degree: usize,
    range: Range<u64>,
) -> Result<Vec<SkewPoly>, Error> {
    check_args(n, gamma, degree)?;
    let target = SkewPoly::x_pow_minus(n, gamma, der);
    let mut found = Vec::new();
    for t in range {
        let h = candidate(t, degree, der);
        if target.is_right_divisible_by(&h)? {
            found.push(h);
        }
    }
    Ok(found)
}

/// All monic right divisors of `x^n - gamma` of the given degree, in
/// increasing candidate-index order.
pub fn divisor_search(
    n: usize,
    gamma: RElement,
    der: Derivation,
    degree: usize,
    budget: u64,
) -> Result<Vec<SkewPoly>, Error> {
    check_args(n, gamma, degree)?;
    match candidate_count(degree) {
        Some(total) if total <= budget => divisor_search_range(n, gamma, der, degree, 0..total),
        _ => Err(Error::SearchSpaceTooLarge { degree, budget }),
    }
}

/// Samples `samples` random monic candidates. Results are deduplicated and
/// returned in candidate-index order.
pub fn random_divisor_search<R: RngCore + ?Sized>(
    n: usize,
    gamma: RElement,
    der: Derivation,
    degree: usize,
    samples: u64,
    rng: &mut R,
) -> Result<Vec<SkewPoly>, Error> {
    check_args(n, gamma, degree)?;
    let target = SkewPoly::x_pow_minus(n, gamma, der);
    let mut hits: Vec<Vec<u8>> = Vec::new();
    for _ in 0..samples {
        let mut coeffs = Vec::with_capacity(degree + 1);
        let mut word = 0u64;
        for i in 0..degree {
            if i % 16 == 0 {
                word = rng.next_u64();
            }
            coeffs.push(RElement::from_index((word >> (4 * (i % 16))) as u8 & 15));
        }
        coeffs.push(RElement::ONE);
        let h = SkewPoly::new(coeffs, der);
        if target.is_right_divisible_by(&h)? {
            hits.push(h.coeffs().iter().rev().map(|c| c.index() as u8).collect());
        }
    }
    // sorting the reversed index digits gives candidate-index order
    hits.sort();
    hits.dedup();
    Ok(hits
        .into_iter()
        .map(|digits| {
            let coeffs = digits.into_iter().rev().map(RElement::from_index).collect();
            SkewPoly::new(coeffs, der)
        })
        .collect())
}

/// Runs the exhaustive search when it fits the budget and falls back to
/// randomized sampling when `config.random_samples` allows it.
pub fn search_with_config<R: RngCore + ?Sized>(
    n: usize,
    gamma: RElement,
    der: Derivation,
    degree: usize,
    config: &SearchConfig,
    rng: &mut R,
) -> Result<Vec<SkewPoly>, Error> {
    match divisor_search(n, gamma, der, degree, config.budget) {
        Err(Error::SearchSpaceTooLarge { .. }) if config.random_samples.is_some() => {
            let samples = config.random_samples.unwrap_or(0);
            random_divisor_search(n, gamma, der, degree, samples, rng)
        }
        other => other,
    }
}

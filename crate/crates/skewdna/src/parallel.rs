//! Rayon drivers for the enumeration-heavy core routines. Results do not
//! depend on the number of worker threads.

use rayon::prelude::*;
use skewdna_core::distance::{self, basis_weight_bound, check_budget, params_with};
use skewdna_core::search::{candidate_count, divisor_search_range};
use skewdna_core::{
    CodeParams, Derivation, Distance, DistanceScan, Error, RElement, SkewPoly, Z4Code,
};

/// Exact minimum Lee distance, tasks spread over the thread pool.
pub fn min_lee_distance(code: &Z4Code, budget: u64) -> Result<CodeParams, Error> {
    if code.is_zero() {
        return Ok(params_with(code, Distance::Infinite));
    }
    check_budget(code, budget)?;
    let scan = DistanceScan::new(code);
    let d = (0..scan.task_count())
        .into_par_iter()
        .filter_map(|t| scan.scan_task(t))
        .min()
        .expect("nonzero code");
    Ok(params_with(code, Distance::Exact(d)))
}

/// Exact parameters within `budget`, otherwise an upper bound from the basis
/// rows and the first `partial` codewords of the scan.
pub fn params_or_bound(code: &Z4Code, budget: u64, partial: u64) -> CodeParams {
    match min_lee_distance(code, budget) {
        Ok(p) => p,
        Err(_) => {
            let scan = DistanceScan::new(code);
            let per_task = (partial / scan.task_count()).max(1);
            let seen = (0..scan.task_count())
                .into_par_iter()
                .filter_map(|t| scan.scan_task_partial(t, per_task).0)
                .min();
            let bound = [seen, basis_weight_bound(code)].into_iter().flatten().min();
            match bound {
                Some(b) => params_with(code, Distance::UpperBound(b)),
                None => distance::bounded_params(code),
            }
        }
    }
}

const CHUNK: u64 = 1 << 12;

/// All monic right divisors of `x^n - gamma` of the given degree, in
/// candidate-index order.
pub fn divisor_search(
    n: usize,
    gamma: RElement,
    der: Derivation,
    degree: usize,
    budget: u64,
) -> Result<Vec<SkewPoly>, Error> {
    // validates arguments on an empty range
    divisor_search_range(n, gamma, der, degree, 0..0)?;
    let total = match candidate_count(degree) {
        Some(t) if t <= budget => t,
        _ => return Err(Error::SearchSpaceTooLarge { degree, budget }),
    };
    let chunks: Vec<Vec<SkewPoly>> = (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let range = c * CHUNK..((c + 1) * CHUNK).min(total);
            divisor_search_range(n, gamma, der, degree, range).expect("validated")
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

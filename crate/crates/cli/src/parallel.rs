//! Deterministic multi-threaded level profiles.
//!
//! The rank range of t-subsets is split into contiguous chunks, each
//! evaluated independently, and the partials merged; the merge is
//! commutative on counts and keeps the lowest-ranked witness, so the
//! result is bit-identical to a sequential run regardless of scheduling.

use adesign_core::incidence::{
    binomial, merge_partials, t_level_profile_range, IncError, IncidenceStructure, LevelProfile,
    PartialProfile,
};

/// Work size (subset–block containment tests) above which threads are used.
const PARALLEL_THRESHOLD: u128 = 2_000_000;

pub fn profile(
    s: &IncidenceStructure,
    t: usize,
    cap: u64,
    jobs: usize,
) -> Result<LevelProfile, IncError> {
    let total = binomial(s.v() as u64, t as u64);
    let tests = total.saturating_mul(s.b().max(1) as u128);
    if tests > cap as u128 {
        return Err(IncError::CapExceeded {
            required: tests.min(u64::MAX as u128) as u64,
            cap,
        });
    }
    let jobs = effective_jobs(jobs, tests);
    if jobs <= 1 {
        return adesign_core::incidence::t_level_profile_with_cap(s, t, cap);
    }
    let total = total as u64;
    let chunk = total.div_ceil(jobs as u64);
    let parts: Vec<Result<PartialProfile, IncError>> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for j in 0..jobs as u64 {
            let start = j * chunk;
            let end = total.min(start + chunk);
            handles.push(scope.spawn(move || t_level_profile_range(s, t, start, end)));
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("profile worker panicked"))
            .collect()
    });
    let mut collected = Vec::with_capacity(parts.len());
    for p in parts {
        collected.push(p?);
    }
    Ok(merge_partials(t, collected))
}

fn effective_jobs(requested: usize, tests: u128) -> usize {
    if requested > 0 {
        return requested;
    }
    if tests < PARALLEL_THRESHOLD {
        1
    } else {
        std::thread::available_parallelism()
            .map(|n| n.get().min(8))
            .unwrap_or(1)
    }
}

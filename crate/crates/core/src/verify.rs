//! Enumeration bounds and the deterministic fan-out used by validators.

use rayon::prelude::*;

use crate::report::VerificationReport;

/// Truncation bounds for exhaustive checks.
///
/// `arity` caps operation arities (and composite arities) in multicategories;
/// `profile` caps the length of objects enumerated in free permutative
/// categories. `parallel` is the number of worker threads (1 = sequential).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub arity: usize,
    pub profile: usize,
    pub parallel: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            arity: 3,
            profile: 3,
            parallel: 1,
        }
    }
}

impl Bounds {
    pub fn new(arity: usize, profile: usize) -> Self {
        Self {
            arity,
            profile,
            parallel: 1,
        }
    }

    pub fn with_parallel(mut self, parallel: usize) -> Self {
        self.parallel = parallel.max(1);
        self
    }
}

const CHUNK: usize = 64;

/// Runs `check` over `items` in chunks and folds the partial reports in input
/// order, so the merged report does not depend on scheduling.
pub(crate) fn fan_out<I, F>(
    parallel: usize,
    items: &[I],
    template: &VerificationReport,
    check: F,
) -> VerificationReport
where
    I: Sync,
    F: Fn(&I, &mut VerificationReport) + Sync,
{
    let run_chunk = |chunk: &[I]| {
        let mut part = template.clone();
        for item in chunk {
            check(item, &mut part);
        }
        part
    };
    let parts: Vec<VerificationReport> = if parallel <= 1 || items.len() <= CHUNK {
        items.chunks(CHUNK).map(run_chunk).collect()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(parallel).build() {
            Ok(pool) => pool.install(|| items.par_chunks(CHUNK).map(run_chunk).collect()),
            Err(_) => items.chunks(CHUNK).map(run_chunk).collect(),
        }
    };
    let mut merged = template.clone();
    for part in parts {
        merged.absorb(part);
    }
    merged
}

/// Maps `f` over `items`, keeping input order in the output.
pub(crate) fn par_map<I, O, F>(parallel: usize, items: &[I], f: F) -> Vec<O>
where
    I: Sync,
    O: Send,
    F: Fn(&I) -> O + Sync,
{
    if parallel <= 1 || items.len() <= 1 {
        return items.iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(parallel).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}

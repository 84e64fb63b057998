//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) work is spread over the rayon pool
//! once it is large enough to pay for scheduling; [`set_parallel`] switches it
//! off at runtime so both paths can be compared in one binary. Results are
//! always assembled in index order, so output never depends on scheduling.

use std::sync::atomic::{AtomicBool, Ordering};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

static ENABLED: AtomicBool = AtomicBool::new(true);

/// Minimum number of scalar operations before a kernel goes parallel.
pub const MIN_PARALLEL_WORK: usize = 1 << 14;

pub fn set_parallel(on: bool) {
    ENABLED.store(on, Ordering::Relaxed);
}

pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && ENABLED.load(Ordering::Relaxed)
}

/// Runs `f(row_index, row)` over the `width`-sized rows of `data`.
pub fn for_each_row<T, F>(data: &mut [T], width: usize, work: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    if width == 0 {
        return;
    }
    #[cfg(feature = "parallel")]
    if parallel_enabled() && work >= MIN_PARALLEL_WORK {
        data.par_chunks_mut(width).enumerate().for_each(|(i, row)| f(i, row));
        return;
    }
    let _ = work;
    data.chunks_mut(width).enumerate().for_each(|(i, row)| f(i, row));
}

/// Order-preserving map over independent items (fuzz batches, check lists).
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() && items.len() > 1 {
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

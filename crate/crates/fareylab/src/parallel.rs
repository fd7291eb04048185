//! Optional worker-thread support.
//!
//! The env var `FAREYLAB_THREADS` (a positive integer) caps the worker
//! count; when it is absent everything runs single-threaded. Only pure
//! integer reductions are parallelized, so results are identical for any
//! thread count or partitioning.

use std::sync::OnceLock;

/// Worker count from `FAREYLAB_THREADS`; 1 when unset or unparseable.
pub fn worker_threads() -> usize {
    static THREADS: OnceLock<usize> = OnceLock::new();
    *THREADS.get_or_init(|| {
        std::env::var("FAREYLAB_THREADS")
            .ok()
            .and_then(|raw| raw.trim().parse::<usize>().ok())
            .filter(|&n| n >= 1)
            .unwrap_or(1)
    })
}

/// Σ f(lo', hi') over a partition of [lo, hi] into contiguous blocks, one
/// per worker. `f` must be a pure function of its block for the result to
/// be partition-independent.
pub fn sum_over_blocks<F>(lo: u64, hi: u64, f: F) -> u128
where
    F: Fn(u64, u64) -> u128 + Sync,
{
    if hi < lo {
        return 0;
    }
    let span = hi - lo + 1;
    let workers = worker_threads().min(span as usize).max(1);
    if workers == 1 {
        return f(lo, hi);
    }
    let chunk = span.div_ceil(workers as u64);
    std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(workers);
        for w in 0..workers as u64 {
            let block_lo = lo + w * chunk;
            let block_hi = (block_lo + chunk - 1).min(hi);
            if block_lo > hi {
                break;
            }
            let f = &f;
            handles.push(scope.spawn(move || f(block_lo, block_hi)));
        }
        handles.into_iter().map(|h| h.join().unwrap()).sum()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_sum_matches_direct_sum() {
        let direct: u128 = (1..=1000u64).map(|k| k as u128 * k as u128).sum();
        let blocked = sum_over_blocks(1, 1000, |lo, hi| {
            (lo..=hi).map(|k| k as u128 * k as u128).sum()
        });
        assert_eq!(blocked, direct);
        assert_eq!(sum_over_blocks(5, 4, |_, _| 7), 0);
        assert_eq!(sum_over_blocks(3, 3, |lo, hi| (lo + hi) as u128), 6);
    }
}

//! Execution strategy for the data-parallel loops (oracle scans, block
//! enumeration, sweeps). With the `parallel` feature disabled every
//! strategy runs sequentially.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Whether this strategy actually fans out in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Keeps `f(i)` for every `i` in `range` that yields `Some`, in index order.
pub(crate) fn filter_map_range<T, F>(exec: Exec, range: Range<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return range.into_par_iter().filter_map(f).collect();
    }
    let _ = exec;
    range.filter_map(f).collect()
}

pub(crate) fn count_range<F>(exec: Exec, range: Range<u64>, pred: F) -> u64
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return range.into_par_iter().filter(|&i| pred(i)).count() as u64;
    }
    let _ = exec;
    range.filter(|&i| pred(i)).count() as u64
}

/// Smallest-index result of `f` over `range`, so parallel and sequential runs agree.
pub(crate) fn find_first_range<T, F>(exec: Exec, range: Range<u64>, f: F) -> Option<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return range.into_par_iter().find_map_first(f);
    }
    let _ = exec;
    range.into_iter().find_map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let evens = filter_map_range(exec, 0..100, |i| (i % 2 == 0).then_some(i));
            assert_eq!(evens, (0..100).step_by(2).collect::<Vec<_>>());
            assert_eq!(count_range(exec, 0..100, |i| i % 3 == 0), 34);
            assert_eq!(find_first_range(exec, 0..1000, |i| (i > 500 && i % 7 == 0).then_some(i)), Some(504));
        }
    }
}

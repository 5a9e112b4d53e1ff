//! Execution mode switch.
//!
//! With the `parallel` feature (default) [`ExecMode::Parallel`] fans work
//! out over rayon's pool; without it every mode runs sequentially.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

/// Maps `f` over `0..len` and folds the results with an associative,
/// commutative `combine`. The outcome never depends on the mode.
pub fn map_reduce<T, F, C>(mode: ExecMode, len: usize, identity: T, f: F, combine: C) -> T
where
    T: Send + Sync + Clone,
    F: Fn(usize) -> T + Sync + Send,
    C: Fn(T, T) -> T + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            (0..len).into_par_iter().map(f).reduce(|| identity.clone(), &combine)
        }
        _ => (0..len).map(f).fold(identity, combine),
    }
}

/// Maps `f` over `0..len`, keeping input order.
pub fn map_collect<T, F>(mode: ExecMode, len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            (0..len).into_par_iter().map(f).collect()
        }
        _ => (0..len).map(f).collect(),
    }
}

/// Smallest index in `0..len` satisfying `pred`.
pub fn find_first<F>(mode: ExecMode, len: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            (0..len).into_par_iter().find_first(|&k| pred(k))
        }
        _ => (0..len).find(|&k| pred(k)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        for mode in [ExecMode::Sequential, ExecMode::Parallel] {
            assert_eq!(map_reduce(mode, 100, 0u64, |k| k as u64, |a, b| a + b), 4950);
            assert_eq!(map_collect(mode, 4, |k| k * k), vec![0, 1, 4, 9]);
            assert_eq!(find_first(mode, 1000, |k| k % 7 == 3 && k > 50), Some(52));
        }
    }
}

//! Execution strategy for the data-parallel loops (edge generation,
//! per-vertex map tables, edge verification).
//!
//! With the `parallel` feature these run on the rayon global pool;
//! without it, [`Execution::Parallel`] silently falls back to the
//! sequential path. Every loop yields the same result either way.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

pub(crate) fn map_range<T, F>(exec: Execution, len: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..len).map(f).collect()
}

pub(crate) fn flat_map_range<T, F>(exec: Execution, len: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Vec<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..len).into_par_iter().flat_map_iter(f).collect();
    }
    let _ = exec;
    (0..len).flat_map(f).collect()
}

pub(crate) fn sort_unstable<T: Ord + Send>(exec: Execution, v: &mut [T]) {
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        v.par_sort_unstable();
        return;
    }
    let _ = exec;
    v.sort_unstable();
}

/// Fold over a slice with an associative `combine`; `identity` must be
/// neutral for `combine`.
pub(crate) fn fold_slice<T, A, F, C>(exec: Execution, items: &[T], identity: A, f: F, combine: C) -> A
where
    T: Sync,
    A: Send + Clone + Sync,
    F: Fn(A, &T) -> A + Sync + Send,
    C: Fn(A, A) -> A + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items
            .par_iter()
            .fold(|| identity.clone(), &f)
            .reduce(|| identity.clone(), &combine);
    }
    let _ = (exec, &combine);
    items.iter().fold(identity, f)
}

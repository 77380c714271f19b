//! Execution-mode plumbing: the data-parallel inner loops (per-face filters,
//! per-face verification, suite sweeps) go through these helpers so that the
//! crate builds with or without the `parallel` feature and benchmarks can
//! compare both paths.

/// How data-parallel loops execute. With the `parallel` feature disabled
/// everything is sequential regardless of this value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    #[default]
    Rayon,
    Sequential,
}

#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(par: Parallelism, items: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    match par {
        Parallelism::Rayon => (0..items).into_par_iter().map(f).collect(),
        Parallelism::Sequential => (0..items).map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(_par: Parallelism, items: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..items).map(f).collect()
}

//! Data-parallel helpers with a sequential fallback.
//!
//! Everything that sweeps an independent collection (family tables, property
//! corpora, bound reports for many inputs) goes through [`map_indexed`] so the
//! `parallel` feature is the only place the rayon dependency shows up. Output
//! order always matches input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving input order in the output.
///
/// Runs on the rayon pool when the `parallel` feature is enabled, otherwise
/// sequentially. `f` must be deterministic; the two modes then produce
/// identical results.
pub fn map_indexed<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(usize, T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().enumerate().map(|(i, t)| f(i, t)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().enumerate().map(|(i, t)| f(i, t)).collect()
    }
}

/// Sequential twin of [`map_indexed`], available regardless of features.
///
/// Exists so benchmarks can compare the two paths inside one build.
pub fn map_indexed_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(usize, T) -> U,
{
    items.into_iter().enumerate().map(|(i, t)| f(i, t)).collect()
}

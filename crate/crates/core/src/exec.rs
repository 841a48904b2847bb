//! Data-parallel scan helpers.
//!
//! Whole-group scans (centralizers, exponent, associativity sweeps) go
//! through [`Exec`], which dispatches to rayon when the `parallel` feature
//! is enabled and to plain iterators otherwise. Requesting
//! [`Exec::Parallel`] without the feature silently runs sequentially.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
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
    /// Indices in `range` satisfying `pred`, in increasing order.
    pub fn filter<F>(self, range: Range<u32>, pred: F) -> Vec<u32>
    where
        F: Fn(u32) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().filter(|&i| pred(i)).collect(),
            _ => range.filter(|&i| pred(i)).collect(),
        }
    }

    pub fn all<F>(self, range: Range<u32>, pred: F) -> bool
    where
        F: Fn(u32) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().all(pred),
            _ => range.into_iter().all(pred),
        }
    }

    /// First index (smallest) failing `pred`, if any.
    pub fn find_failure<F>(self, range: Range<u32>, pred: F) -> Option<u32>
    where
        F: Fn(u32) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().find_first(|&i| !pred(i)),
            _ => range.into_iter().find(|&i| !pred(i)),
        }
    }

    pub fn max<F>(self, range: Range<u32>, f: F) -> u64
    where
        F: Fn(u32) -> u64 + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().map(f).max().unwrap_or(0),
            _ => range.map(f).max().unwrap_or(0),
        }
    }

    pub fn count<F>(self, range: Range<u32>, pred: F) -> u64
    where
        F: Fn(u32) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().filter(|&i| pred(i)).count() as u64,
            _ => range.filter(|&i| pred(i)).count() as u64,
        }
    }

    /// Apply `f` to every item of a slice, preserving order.
    pub fn map_slice<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }
}

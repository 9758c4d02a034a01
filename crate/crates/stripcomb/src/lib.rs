//! Exact enumerative combinatorics of height-bounded lattice paths,
//! alternating sequences, heaps of pieces, and alternating tableaux,
//! together with the determinantal reciprocity identities relating them.
//!
//! Everything is computed in exact arithmetic: arbitrary-precision rationals,
//! dense univariate polynomials, and sparse multivariate Laurent polynomials
//! in indexed variable families. Generating functions are represented as
//! rational functions in a formal variable `x` whose coefficients live in
//! that Laurent ring; identity checks compare both sides exactly.

pub mod altseq;
pub mod determinants;
pub mod error;
pub mod exact;
pub mod heaps;
pub mod multipoly;
pub mod orthopoly;
pub mod paths;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};

/// Maps items either sequentially or with rayon, depending on the `parallel`
/// feature and the requested number of jobs. Output order is deterministic.
pub fn maybe_par_map<T, U, F>(items: Vec<T>, jobs: usize, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if jobs != 1 {
            use rayon::prelude::*;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(if jobs == 0 { 0 } else { jobs })
                .build();
            if let Ok(pool) = pool {
                return pool.install(|| items.into_par_iter().map(&f).collect());
            }
        }
    }
    let _ = jobs;
    items.into_iter().map(f).collect()
}

/// Always-sequential variant of [`maybe_par_map`], kept unconditionally
/// compiled so benchmarks can compare the two code paths.
pub fn seq_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

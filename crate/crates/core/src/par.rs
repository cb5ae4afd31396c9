//! Order-preserving map over a slice: rayon when the `parallel` feature is on
//! and more than one job is requested, a plain loop otherwise.

/// `jobs == 0` means one worker per available core.
pub(crate) fn map<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if jobs == 0 {
            return items.par_iter().map(f).collect();
        }
        if jobs > 1 {
            if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
                return pool.install(|| items.par_iter().map(&f).collect());
            }
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = jobs;
    items.iter().map(f).collect()
}

/// Whether this build can run work in parallel.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}

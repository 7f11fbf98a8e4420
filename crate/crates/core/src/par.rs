//! Data-parallel helpers. Without the `parallel` feature everything runs sequentially.

/// Environment variable that caps the worker count.
pub const THREADS_ENV: &str = "HOLONOMY_FORGE_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

impl ExecMode {
    /// Whether work will actually be spread across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == ExecMode::Parallel
    }
}

/// `items.iter().map(f)` collected in order, in parallel when `mode` allows it.
pub fn map<T, R, F>(mode: ExecMode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// Reads the thread cap from the environment. Invalid or zero values are ignored.
pub fn thread_cap_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Sizes the global pool. Only the first call has an effect; returns whether it did.
pub fn init_threads(cap: Option<usize>) -> bool {
    #[cfg(feature = "parallel")]
    {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = cap {
            builder = builder.num_threads(n);
        }
        builder.build_global().is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = cap;
        false
    }
}

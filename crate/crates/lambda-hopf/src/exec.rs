//! Check execution strategy: data-parallel dispatch with a sequential
//! fallback. Results always come back in submission order, so the strategy
//! never changes report bytes.

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Worker cap; `None` lets the pool size itself.
    Parallel { threads: Option<usize> },
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel { threads: None }
        } else {
            Exec::Sequential
        }
    }
}

/// Reads the VERIFY_THREADS cap. Unset means the default strategy; `1`
/// means sequential; anything that is not a positive integer is a usage
/// error.
pub fn from_env() -> Result<Exec> {
    match std::env::var("VERIFY_THREADS") {
        Err(std::env::VarError::NotPresent) => Ok(Exec::default()),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(Error::Usage("VERIFY_THREADS is not valid UTF-8".into()))
        }
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(1) => Ok(Exec::Sequential),
            Ok(n) if n > 1 => Ok(Exec::Parallel { threads: Some(n) }),
            _ => Err(Error::Usage(format!(
                "VERIFY_THREADS must be a positive integer, got `{s}`"
            ))),
        },
    }
}

/// Runs `f` inside a sized worker pool for `Parallel`, directly otherwise.
/// Jobs dispatched by [`run_jobs`] within `f` share that pool.
pub fn with_pool<R: Send>(exec: Exec, f: impl FnOnce() -> R + Send) -> R {
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel { threads } => {
            match rayon::ThreadPoolBuilder::new()
                .num_threads(threads.unwrap_or(0))
                .build()
            {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            }
        }
        _ => f(),
    }
}

/// A deferred unit of work producing one result.
pub type Job<'a, T> = Box<dyn FnOnce() -> T + Send + 'a>;

/// Runs every job and returns results in submission order.
pub fn run_jobs<'a, T: Send>(exec: Exec, jobs: Vec<Job<'a, T>>) -> Vec<T> {
    #[cfg(feature = "parallel")]
    if matches!(exec, Exec::Parallel { .. }) {
        use rayon::prelude::*;
        return jobs.into_par_iter().map(|job| job()).collect();
    }
    let _ = &exec;
    jobs.into_iter().map(|job| job()).collect()
}

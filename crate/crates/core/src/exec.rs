//! Sequential or data-parallel execution of sweep work lists.
//!
//! Parallel execution needs the `parallel` feature; without it
//! [`Exec::Parallel`] runs sequentially. Results always come back in input
//! order, so reports are identical under either mode.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Exec {
    #[default]
    Sequential,
    Parallel,
}

impl Exec {
    /// True when this build can actually run work in parallel.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.into_par_iter().map(f).collect(),
            _ => items.into_iter().map(f).collect(),
        }
    }
}

/// Runs `op` with `workers` threads. One worker (or a build without the
/// `parallel` feature) runs sequentially on the calling thread.
pub fn with_workers<R, F>(workers: usize, op: F) -> R
where
    R: Send,
    F: FnOnce(Exec) -> R + Send,
{
    #[cfg(feature = "parallel")]
    if workers > 1 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
            return pool.install(|| op(Exec::Parallel));
        }
    }
    let _ = workers;
    op(Exec::Sequential)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_keep_order() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = Exec::Sequential.map(items.clone(), |x| x * x);
        let par = Exec::Parallel.map(items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[999], 999 * 999);
    }

    #[test]
    fn worker_pool() {
        let got = with_workers(3, |exec| exec.map((0..10).collect(), |x: u32| x + 1));
        assert_eq!(got, (1..11).collect::<Vec<_>>());
        assert_eq!(with_workers(1, |exec| exec), Exec::Sequential);
    }
}

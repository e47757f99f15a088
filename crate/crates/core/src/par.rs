//! Execution strategy for batch work. With the `parallel` feature, work
//! items run on the rayon pool; without it, `Parallel` quietly runs
//! sequentially. Results are returned in item order either way.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether `Parallel` actually uses threads in this build.
    pub const fn threads_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// `(0..items).map(f)`, possibly in parallel, in index order.
    pub fn map_indexed<T, F>(self, items: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            Execution::Sequential => (0..items).map(f).collect(),
            Execution::Parallel => parallel_map(items, f),
        }
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, F>(items: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..items).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, F>(items: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..items).map(f).collect()
}

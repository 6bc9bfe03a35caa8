//! Execution-mode selection for trial loops.
//!
//! Monte-Carlo trials derive their seeds deterministically from (root seed,
//! trial index), so parallel and sequential execution produce bit-identical
//! results. The `parallel` feature (default) enables the rayon path.

/// How independent trials are executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Execution {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        Execution::Parallel
    }

    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        Execution::Sequential
    }
}

/// Maps `f` over `0..n`, in parallel when requested.
pub(crate) fn map_indexed<T, F>(n: usize, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        Execution::Sequential => (0..n).map(f).collect(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequential_matches_order() {
        let v = map_indexed(5, Execution::Sequential, |i| i * i);
        assert_eq!(v, vec![0, 1, 4, 9, 16]);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        let s = map_indexed(100, Execution::Sequential, |i| i * 3 + 1);
        let p = map_indexed(100, Execution::Parallel, |i| i * 3 + 1);
        assert_eq!(s, p);
    }
}

//! Execution strategy for the exhaustive sweeps.
//!
//! `Exec::Parallel` uses rayon when the `parallel` feature is enabled and
//! silently runs sequentially otherwise. Every helper returns the same result
//! under both strategies; witness searches report the first witness in input
//! order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    pub fn map_range<R, F>(self, range: std::ops::Range<usize>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().map(f).collect();
        }
        range.map(f).collect()
    }

    /// First `Some` in input order.
    pub fn find_map_first<T, R, F>(self, items: &[T], f: F) -> Option<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().find_map_first(f);
        }
        items.iter().find_map(f)
    }

    pub fn find_map_first_range<R, F>(self, range: std::ops::Range<usize>, f: F) -> Option<R>
    where
        R: Send,
        F: Fn(usize) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().find_map_first(f);
        }
        range.into_iter().find_map(f)
    }

    pub fn count_range<F>(self, range: std::ops::Range<usize>, f: F) -> usize
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().filter(|&i| f(i)).count();
        }
        range.filter(|&i| f(i)).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        for e in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(e.map(&xs, |x| x * 2)[999], 1998);
            assert_eq!(e.find_map_first(&xs, |&x| (x % 97 == 96).then_some(x)), Some(96));
            assert_eq!(e.find_map_first_range(0..50, |i| (i > 10).then_some(i)), Some(11));
            assert_eq!(e.count_range(0..100, |i| i % 3 == 0), 34);
            assert_eq!(e.map_range(0..4, |i| i + 1), vec![1, 2, 3, 4]);
        }
    }
}

use std::sync::{PoisonError, RwLock};

/// A grow-only table indexed from 0, filled on demand and shared across
/// threads. Fill callbacks must be deterministic, so a cached value is always
/// identical to a fresh recomputation.
pub(crate) struct PrefixCache<T> {
    items: RwLock<Vec<T>>,
}

impl<T: Clone> PrefixCache<T> {
    pub(crate) const fn new() -> Self {
        Self {
            items: RwLock::new(Vec::new()),
        }
    }

    /// Returns entry `n`, calling `fill` to extend the table through at least
    /// index `n` if it is not there yet.
    pub(crate) fn get(&self, n: usize, fill: impl FnOnce(&mut Vec<T>, usize)) -> T {
        if let Some(v) = self
            .items
            .read()
            .unwrap_or_else(PoisonError::into_inner)
            .get(n)
        {
            return v.clone();
        }
        let mut items = self.items.write().unwrap_or_else(PoisonError::into_inner);
        if items.len() <= n {
            fill(&mut items, n);
        }
        items[n].clone()
    }
}

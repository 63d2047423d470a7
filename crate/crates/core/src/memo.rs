use std::hash::Hash;
use std::sync::{Arc, RwLock};

use rustc_hash::FxHashMap;

/// Concurrent memo table. Readers share the lock; values are computed
/// outside it, so two threads may compute the same entry, and the first
/// insert wins.
pub(crate) struct Memo<K, V> {
    map: RwLock<FxHashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo {
            map: RwLock::new(FxHashMap::default()),
        }
    }

    pub(crate) fn get(&self, key: &K) -> Option<Arc<V>> {
        self.map.read().unwrap().get(key).cloned()
    }

    pub(crate) fn get_or_insert_with(&self, key: &K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.get(key) {
            return v;
        }
        let value = Arc::new(compute());
        self.map
            .write()
            .unwrap()
            .entry(key.clone())
            .or_insert(value)
            .clone()
    }

    pub(crate) fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }
}

impl<K: Eq + Hash + Clone, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo::new()
    }
}

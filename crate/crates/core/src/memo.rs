//! A bounded, thread-safe memo table.
//!
//! Values are computed outside the lock, so two threads racing on the same
//! key may both compute it; the functions memoized here are pure, so either
//! result is the same value.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

pub const DEFAULT_CAPACITY: usize = 100_000;

#[derive(Debug)]
pub struct Memo<K, V> {
    map: Mutex<HashMap<K, Arc<V>>>,
    capacity: usize,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub fn new(capacity: usize) -> Self {
        Memo { map: Mutex::new(HashMap::new()), capacity }
    }

    pub fn get(&self, key: &K) -> Option<Arc<V>> {
        self.map.lock().unwrap().get(key).cloned()
    }

    /// Inserts unless the table is full. Returns the stored (or given) value.
    pub fn insert(&self, key: K, value: V) -> Arc<V> {
        let value = Arc::new(value);
        let mut map = self.map.lock().unwrap();
        if let Some(existing) = map.get(&key) {
            return existing.clone();
        }
        if map.len() < self.capacity {
            map.insert(key, value.clone());
        }
        value
    }

    pub fn get_or_insert_with<F: FnOnce() -> V>(&self, key: &K, f: F) -> Arc<V> {
        if let Some(v) = self.get(key) {
            return v;
        }
        let v = f();
        self.insert(key.clone(), v)
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.map.lock().unwrap().clear();
    }

    pub fn snapshot(&self) -> Vec<(K, Arc<V>)> {
        self.map.lock().unwrap().iter().map(|(k, v)| (k.clone(), v.clone())).collect()
    }
}

impl<K: Eq + Hash + Clone, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo::new(DEFAULT_CAPACITY)
    }
}

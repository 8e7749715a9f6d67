//! Shared coefficient cache.
//!
//! Keys are canonical strings so they can be persisted line-oriented.
//! The contract is write-once-idempotent: storing a different value under an
//! existing key is a hard error, recomputation of the same value is fine.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::{Content, Partition};

/// Which coefficient a cache entry holds.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CoeffKind {
    Kostka,
    Lr,
    MultiLr,
    Plethysm,
    WeightMult,
}

impl fmt::Display for CoeffKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CoeffKind::Kostka => "kostka",
            CoeffKind::Lr => "lr",
            CoeffKind::MultiLr => "multilr",
            CoeffKind::Plethysm => "plethysm",
            CoeffKind::WeightMult => "weightmult",
        };
        write!(f, "{s}")
    }
}

/// Canonicalized cache key: partitions trimmed, multi-LR factors sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoeffKey(String);

impl CoeffKey {
    pub fn kostka(shape: &Partition, content: &Content) -> Self {
        // Kostka numbers are invariant under permuting the content, so the
        // sorted content is the canonical argument.
        CoeffKey(format!(
            "{}|{}|{}",
            CoeffKind::Kostka,
            shape,
            content.sorted_descending()
        ))
    }

    pub fn lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> Self {
        // symmetric in the subscripts
        let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
        CoeffKey(format!("{}|{}|{};{}", CoeffKind::Lr, lambda, a, b))
    }

    pub fn multi_lr(lambda: &Partition, factors: &[Partition]) -> Self {
        let mut sorted: Vec<&Partition> = factors.iter().collect();
        sorted.sort();
        let parts: Vec<String> = sorted.iter().map(|p| p.to_string()).collect();
        CoeffKey(format!("{}|{}|{}", CoeffKind::MultiLr, lambda, parts.join(";")))
    }

    pub fn plethysm(nu: &Partition, d: usize, degree: u32) -> Self {
        CoeffKey(format!("{}|{}|{}|{}", CoeffKind::Plethysm, nu, d, degree))
    }

    pub fn weight_mult(mu: &Content, d: usize, degree: u32, n_vars: usize) -> Self {
        CoeffKey(format!(
            "{}|{}|{}|{}|{}",
            CoeffKind::WeightMult,
            mu.sorted_descending(),
            d,
            degree,
            n_vars
        ))
    }

    pub fn from_raw(s: &str) -> Self {
        CoeffKey(s.to_string())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

/// Thread-shared memo for all coefficient kinds. Cloning shares storage.
#[derive(Clone, Default)]
pub struct Cache {
    map: Arc<Mutex<HashMap<CoeffKey, BigInt>>>,
}

impl Cache {
    pub fn new() -> Self {
        Cache::default()
    }

    pub fn get(&self, key: &CoeffKey) -> Option<BigInt> {
        self.map.lock().unwrap().get(key).cloned()
    }

    /// Stores a value. A conflicting value for an existing key is a
    /// write-once violation.
    pub fn put(&self, key: CoeffKey, value: BigInt) -> Result<()> {
        let mut map = self.map.lock().unwrap();
        if let Some(old) = map.get(&key) {
            if *old != value {
                return Err(Error::FormatError {
                    line: 0,
                    message: format!(
                        "write-once violated for {}: {} vs {}",
                        key.as_str(),
                        old,
                        value
                    ),
                });
            }
            return Ok(());
        }
        map.insert(key, value);
        Ok(())
    }

    /// Computes through the cache. Redundant computation of a missed key is
    /// allowed; the stored value must agree.
    pub fn memo(&self, key: CoeffKey, compute: impl FnOnce() -> BigInt) -> BigInt {
        if let Some(v) = self.get(&key) {
            return v;
        }
        let v = compute();
        self.put(key, v.clone()).expect("idempotent coefficient recomputation");
        v
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Entries as sorted (key, decimal value) pairs, for persistence.
    pub fn dump(&self) -> Vec<(String, String)> {
        let map = self.map.lock().unwrap();
        let mut entries: Vec<(String, String)> = map
            .iter()
            .map(|(k, v)| (k.as_str().to_string(), v.to_string()))
            .collect();
        entries.sort();
        entries
    }

    /// Merges persisted entries back in; conflicts are write-once violations.
    pub fn absorb(&self, entries: Vec<(String, String)>) -> Result<()> {
        for (k, v) in entries {
            let value: BigInt = v.parse().map_err(|_| Error::FormatError {
                line: 0,
                message: format!("bad integer {v:?} for key {k:?}"),
            })?;
            self.put(CoeffKey::from_raw(&k), value)?;
        }
        Ok(())
    }
}

//! Partitions and content vectors.
//!
//! A partition is stored dense with trailing zeros trimmed, so the zero
//! partition is the empty vector and equality is canonical.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing vector of nonnegative integers (trailing zeros trimmed).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts, trimming trailing zeros.
    /// Panics if the parts are not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle a×b = (b, b, ..., b) with a rows.
    pub fn rect(rows: usize, width: u32) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![width; rows] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The i-th part, 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths of the Young diagram.
    pub fn transpose(&self) -> Partition {
        let width = self.part(0) as usize;
        let mut cols = Vec::with_capacity(width);
        for c in 0..width {
            cols.push(self.parts.iter().filter(|&&p| p as usize > c).count() as u32);
        }
        Partition { parts: cols }
    }

    /// Rowwise sum (λ+μ)_i = λ_i + μ_i.
    pub fn add_rowwise(&self, other: &Partition) -> Partition {
        let len = self.length().max(other.length());
        let parts = (0..len).map(|i| self.part(i) + other.part(i)).collect();
        Partition::new(parts)
    }

    /// True if the Young diagram of `inner` fits inside this one.
    pub fn contains(&self, inner: &Partition) -> bool {
        (0..inner.length()).all(|i| self.part(i) >= inner.part(i))
    }

    /// Dominance order: every prefix sum of `self` is at least the one of
    /// `other`. Only meaningful for partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 0..self.length().max(other.length()) {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return false;
            }
        }
        true
    }

    /// Frequency notation: entry i-1 counts the parts equal to i, for i in 1..=d.
    /// Requires |ρ| = d.
    pub fn frequency_notation(&self, d: usize) -> Result<Content> {
        if self.size() != d {
            return Err(Error::SizeMismatch {
                expected: d,
                found: self.size(),
                what: "frequency notation needs |rho| = d",
            });
        }
        let mut counts = vec![0u32; d];
        for &p in &self.parts {
            counts[p as usize - 1] += 1;
        }
        Ok(Content::new(counts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// Text format: comma separated parts, e.g. "16,8,8,8"; the empty partition is "0".
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: u32 = tok.trim().parse().map_err(|_| Error::FormatError {
                line: 0,
                message: format!("bad partition part {tok:?}"),
            })?;
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::FormatError {
                line: 0,
                message: format!("parts not weakly decreasing: {s:?}"),
            });
        }
        Ok(Partition::new(parts))
    }
}

/// Occurrence counts indexed by symbol, not necessarily sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Content {
    counts: Vec<u32>,
}

impl Content {
    pub fn new(counts: Vec<u32>) -> Self {
        Content { counts }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn count(&self, i: usize) -> u32 {
        self.counts.get(i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// The decreasing rearrangement, as a partition.
    pub fn sorted_descending(&self) -> Partition {
        let mut v = self.counts.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v)
    }
}

impl From<&Partition> for Content {
    fn from(p: &Partition) -> Self {
        Content::new(p.parts().to_vec())
    }
}

/// Iterates over all partitions of `n` with at most `max_len` parts (and parts
/// at most `max_part` if given), in reverse-lexicographic order, each exactly once.
pub fn partitions_of(
    n: usize,
    max_len: usize,
    max_part: Option<u32>,
) -> impl Iterator<Item = Partition> {
    PartitionIter::new(n, max_len, max_part)
}

struct PartitionIter {
    stack: Vec<(usize, u32, usize, Vec<u32>)>, // remaining, cap, slots, prefix
}

impl PartitionIter {
    fn new(n: usize, max_len: usize, max_part: Option<u32>) -> Self {
        let cap = max_part.unwrap_or(u32::MAX).min(n.try_into().unwrap_or(u32::MAX));
        PartitionIter { stack: vec![(n, cap, max_len, Vec::new())] }
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        while let Some((n, cap, slots, prefix)) = self.stack.pop() {
            if n == 0 {
                return Some(Partition { parts: prefix });
            }
            if slots == 0 || cap == 0 {
                continue;
            }
            // push smallest part first so the largest is popped first (reverse-lex)
            let lo = n.div_ceil(slots); // parts below this cannot fill n within the slots
            let hi = (cap as usize).min(n);
            for p in lo..=hi {
                let mut pre = prefix.clone();
                pre.push(p as u32);
                self.stack.push((n - p, p as u32, slots - 1, pre));
            }
        }
        None
    }
}

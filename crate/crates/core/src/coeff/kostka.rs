//! Kostka numbers by horizontal-strip dynamic programming.
//!
//! K(λ,μ) counts semistandard tableaux of shape λ and content μ, i.e. chains
//! ∅ = λ⁰ ⊆ λ¹ ⊆ … ⊆ λᵐ = λ where λʳ/λʳ⁻¹ is a horizontal strip of size μ_r.
//! This is the column-by-column Gelfand-pattern view of a tableau.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::cache::{Cache, CoeffKey};
use crate::error::{Error, Result};
use crate::partition::{Content, Partition};

/// Exact Kostka number K(λ,μ). Errors when |λ| ≠ total(μ).
pub fn kostka(cache: &Cache, shape: &Partition, content: &Content) -> Result<BigInt> {
    if shape.size() != content.total() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            found: content.total(),
            what: "kostka needs |shape| = total(content)",
        });
    }
    let key = CoeffKey::kostka(shape, content);
    Ok(cache.memo(key, || {
        // K is invariant under permuting μ; the sorted content prunes fastest
        // because unitriangularity can reject early.
        let mu = content.sorted_descending();
        if shape.is_empty() {
            return BigInt::one();
        }
        if !shape.dominates(&mu) {
            return BigInt::zero();
        }
        let mut memo: HashMap<(Vec<u32>, usize), BigInt> = HashMap::new();
        peel(shape.parts(), mu.parts(), mu.length(), &mut memo)
    }))
}

/// Counts chains peeling a horizontal strip of size mu[level-1] off `shape`,
/// recursing down to the empty shape.
fn peel(
    shape: &[u32],
    mu: &[u32],
    level: usize,
    memo: &mut HashMap<(Vec<u32>, usize), BigInt>,
) -> BigInt {
    let total: u64 = shape.iter().map(|&x| x as u64).sum();
    if level == 0 {
        return if total == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let used: u64 = mu[..level].iter().map(|&x| x as u64).sum();
    if total != used {
        return BigInt::zero();
    }
    let key = (shape.to_vec(), level);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let strip = mu[level - 1] as i64;
    let mut sum = BigInt::zero();
    // enumerate previous shapes: prev_i in [shape_{i+1}, shape_i] (interlacing),
    // removing exactly `strip` boxes in total
    let n = shape.len();
    let mut prev = vec![0u32; n];
    enumerate_strips(shape, 0, strip, &mut prev, &mut |prev| {
        let trimmed: Vec<u32> = {
            let mut v = prev.to_vec();
            while v.last() == Some(&0) {
                v.pop();
            }
            v
        };
        sum += peel(&trimmed, mu, level - 1, memo);
    });
    memo.insert(key, sum.clone());
    sum
}

fn enumerate_strips(
    shape: &[u32],
    i: usize,
    remaining: i64,
    prev: &mut [u32],
    f: &mut impl FnMut(&[u32]),
) {
    if i == shape.len() {
        if remaining == 0 {
            f(prev);
        }
        return;
    }
    let lo = shape.get(i + 1).copied().unwrap_or(0); // interlacing: prev_i >= shape_{i+1}
    let hi = shape[i];
    // removing shape[i] - prev_i boxes from row i
    for p in lo..=hi {
        let removed = (hi - p) as i64;
        if removed > remaining {
            continue;
        }
        // rows must stay weakly decreasing: prev_{i-1} >= prev_i holds because
        // prev_{i-1} >= shape_i >= p
        prev[i] = p;
        enumerate_strips(shape, i + 1, remaining - removed, prev, f);
    }
}

//! Weight-space dimensions of C[Sym^D C^N]_d.
//!
//! The μ-weight space is spanned by products of d monomials of degree D whose
//! exponent vectors sum to μ, so its dimension counts multisets of exponent
//! vectors. This is the oracle layer underneath the plethysm solve.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::cache::{Cache, CoeffKey};
use crate::error::{Error, Result};
use crate::partition::Content;

/// Number of multisets of `d` exponent vectors, each of degree `degree` in
/// `n_vars` variables, with coordinatewise sum `mu`.
pub fn weight_multiplicity(
    cache: &Cache,
    mu: &Content,
    d: usize,
    degree: u32,
    n_vars: usize,
) -> Result<BigInt> {
    if mu.total() != d * degree as usize {
        return Err(Error::SizeMismatch {
            expected: d * degree as usize,
            found: mu.total(),
            what: "weight multiplicity needs total(mu) = d*D",
        });
    }
    if mu.counts().iter().skip(n_vars).any(|&c| c != 0) {
        return Err(Error::SizeMismatch {
            expected: n_vars,
            found: mu.len(),
            what: "weight multiplicity needs length(mu) <= N",
        });
    }
    let key = CoeffKey::weight_mult(mu, d, degree, n_vars);
    Ok(cache.memo(key, || {
        // the count is symmetric in mu, and sorting speeds up pruning
        let sorted = mu.sorted_descending();
        let mut target: Vec<u32> = sorted.parts().to_vec();
        target.resize(n_vars, 0);
        count_multisets(&target, d, degree)
    }))
}

fn count_multisets(target: &[u32], d: usize, degree: u32) -> BigInt {
    let monomials = monomials_of_degree(degree, target.len());
    // suffix coordinate maxima for pruning
    let n = target.len();
    let mut sufmax = vec![vec![0u32; n]; monomials.len() + 1];
    for idx in (0..monomials.len()).rev() {
        for t in 0..n {
            sufmax[idx][t] = sufmax[idx + 1][t].max(monomials[idx][t]);
        }
    }
    let mut memo: HashMap<(usize, usize, Vec<u32>), BigInt> = HashMap::new();
    count_rec(&monomials, &sufmax, 0, d, target.to_vec(), &mut memo)
}

fn count_rec(
    monomials: &[Vec<u32>],
    sufmax: &[Vec<u32>],
    idx: usize,
    cnt: usize,
    rem: Vec<u32>,
    memo: &mut HashMap<(usize, usize, Vec<u32>), BigInt>,
) -> BigInt {
    if cnt == 0 {
        return if rem.iter().all(|&x| x == 0) { BigInt::one() } else { BigInt::zero() };
    }
    if idx == monomials.len() {
        return BigInt::zero();
    }
    for t in 0..rem.len() {
        if rem[t] as u64 > cnt as u64 * sufmax[idx][t] as u64 {
            return BigInt::zero();
        }
    }
    let key = (idx, cnt, rem.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mono = &monomials[idx];
    let mut sum = BigInt::zero();
    // take c >= 0 copies of this monomial, then move on
    let mut fit = cnt;
    for t in 0..rem.len() {
        if mono[t] > 0 {
            fit = fit.min((rem[t] / mono[t]) as usize);
        }
    }
    for c in 0..=fit {
        let next: Vec<u32> =
            rem.iter().zip(mono).map(|(&r, &m)| r - c as u32 * m).collect();
        sum += count_rec(monomials, sufmax, idx + 1, cnt - c, next, memo);
    }
    memo.insert(key, sum.clone());
    sum
}

/// All exponent vectors of total degree `degree` in `n_vars` variables,
/// in colexicographic order.
pub(crate) fn monomials_of_degree(degree: u32, n_vars: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n_vars];
    gen_monomials(degree, 0, &mut cur, &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

fn gen_monomials(left: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(cur.clone());
        cur[pos] = 0;
        return;
    }
    for v in 0..=left {
        cur[pos] = v;
        gen_monomials(left - v, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wm(mu: &[u32], d: usize, degree: u32, n: usize) -> BigInt {
        let cache = Cache::new();
        weight_multiplicity(&cache, &Content::new(mu.to_vec()), d, degree, n).unwrap()
    }

    #[test]
    fn single_variable_power() {
        assert_eq!(wm(&[8], 2, 4, 2), BigInt::one());
        assert_eq!(wm(&[12, 0, 0], 3, 4, 3), BigInt::one());
    }

    #[test]
    fn two_by_two_examples() {
        // {x^2, y^2} and {xy, xy}
        assert_eq!(wm(&[2, 2], 2, 2, 2), BigInt::from(2));
        // {x^2, xy} only
        assert_eq!(wm(&[3, 1], 2, 2, 2), BigInt::one());
    }

    #[test]
    fn symmetric_in_mu() {
        assert_eq!(wm(&[2, 4], 3, 2, 2), wm(&[4, 2], 3, 2, 2));
    }

    #[test]
    fn size_mismatch() {
        let cache = Cache::new();
        assert!(matches!(
            weight_multiplicity(&cache, &Content::new(vec![3]), 2, 2, 2),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn monomials_count_and_order() {
        let m = monomials_of_degree(2, 3);
        assert_eq!(m.len(), 6);
        // colex: last coordinate grows last... first element is (2,0,0)
        assert_eq!(m[0], vec![2, 0, 0]);
        assert_eq!(m[m.len() - 1], vec![0, 0, 2]);
    }
}

//! Plethysm coefficients a_ν(d,D).
//!
//! a_ν(d,D) is the multiplicity of the dual type ν in the degree-d polynomials
//! on degree-D forms. Two exact routes are implemented:
//!
//! * the unitriangular solve in dominance order: for every κ ⊵ ν the weight
//!   multiplicity satisfies wm(κ) = Σ_{π ⊵ κ} a_π K(π,κ) with K(κ,κ) = 1, so
//!   the a's fall out top-down starting from (dD);
//! * the determinantal alternant a_ν = Σ_{w∈S_N} sgn(w)·[x^{ν+δ−wδ}] h_d[h_D]
//!   over a cap-truncated coefficient table, for instances whose dominance
//!   upset is too large to sweep (hundreds of boxes).
//!
//! The solve is the primary route; the alternant takes over above
//! `SOLVE_UPSET_LIMIT` and the two are cross-checked in tests.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::cache::{Cache, CoeffKey};
use crate::coeff::kostka::kostka;
use crate::coeff::newton::{h_table, pack};
use crate::coeff::weight::weight_multiplicity;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Content, Partition};

/// Upset sizes beyond this switch the computation to the alternant route.
const SOLVE_UPSET_LIMIT: usize = 4000;

/// Exact plethysm coefficient a_ν(d, D).
pub fn plethysm(cache: &Cache, nu: &Partition, d: usize, degree: u32) -> Result<BigInt> {
    if nu.is_empty() {
        if d == 0 {
            return Ok(BigInt::one());
        }
        return Err(Error::SizeMismatch {
            expected: d * degree as usize,
            found: 0,
            what: "plethysm of the empty partition needs d = 0",
        });
    }
    if d == 0 {
        return Err(Error::DegenerateInput(format!(
            "a_nu(0,{degree}) is only defined for nu = (0), got nu = {nu}"
        )));
    }
    if nu.size() != d * degree as usize {
        return Err(Error::SizeMismatch {
            expected: d * degree as usize,
            found: nu.size(),
            what: "plethysm needs |nu| = d*D",
        });
    }
    let key = CoeffKey::plethysm(nu, d, degree);
    if let Some(v) = cache.get(&key) {
        return Ok(v);
    }

    let upset: Vec<Partition> = partitions_of(nu.size(), nu.length(), None)
        .filter(|k| k.dominates(nu))
        .collect();
    let value = if upset.len() <= SOLVE_UPSET_LIMIT {
        dominance_solve(cache, nu, d, degree, &upset)?
    } else {
        alternant(nu, d, degree)
    };
    cache.put(key, value.clone())?;
    Ok(value)
}

/// Top-down triangular solve over the dominance upset of ν. Computes and
/// caches a_κ for every κ ⊵ ν along the way.
fn dominance_solve(
    cache: &Cache,
    nu: &Partition,
    d: usize,
    degree: u32,
    upset: &[Partition],
) -> Result<BigInt> {
    let n_vars = nu.length();
    // κ ⊵ ν forces length(κ) ≤ length(ν)
    debug_assert!(upset.iter().all(|k| k.length() <= n_vars));
    // partitions_of emits reverse-lexicographically, which refines dominance:
    // every π ⊵ κ appears before κ
    let mut solved: Vec<(Partition, BigInt)> = Vec::with_capacity(upset.len());
    for kappa in upset {
        let mut a = weight_multiplicity(cache, &Content::from(kappa), d, degree, n_vars)?;
        for (pi, a_pi) in &solved {
            if a_pi.is_zero() || !pi.dominates(kappa) {
                continue;
            }
            a -= a_pi * kostka(cache, pi, &Content::from(kappa))?;
        }
        cache.put(CoeffKey::plethysm(kappa, d, degree), a.clone())?;
        solved.push((kappa.clone(), a));
    }
    let (last, value) = solved.last().unwrap();
    debug_assert_eq!(last, nu);
    debug_assert!(*value >= BigInt::zero(), "plethysm coefficients are nonnegative");
    Ok(value.clone())
}

/// a_ν = Σ_{w∈S_N} sgn(w) · [x^{ν+δ−wδ}] h_d[h_D] with δ = (N−1,…,1,0),
/// read off a coefficient table truncated to the box ν+δ.
fn alternant(nu: &Partition, d: usize, degree: u32) -> BigInt {
    let n = nu.length();
    let delta: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    let caps: Vec<u32> = (0..n).map(|i| nu.part(i) + delta[i]).collect();
    let table = h_table(d, degree, &caps);

    let mut total = BigInt::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    permute_with_sign(&mut perm, 0, 1, &mut |perm, sign| {
        let mut target = Vec::with_capacity(n);
        for i in 0..n {
            let val = nu.part(i) as i64 + delta[i] as i64 - delta[perm[i]] as i64;
            if val < 0 {
                return;
            }
            target.push(val as u32);
        }
        if let Some(&c) = table.get(&pack(&target)) {
            if sign > 0 {
                total += c;
            } else {
                total -= c;
            }
        }
    });
    debug_assert!(total >= BigInt::zero());
    total
}

fn permute_with_sign(
    perm: &mut Vec<usize>,
    at: usize,
    sign: i32,
    f: &mut impl FnMut(&[usize], i32),
) {
    let n = perm.len();
    if at == n {
        f(perm, sign);
        return;
    }
    for i in at..n {
        perm.swap(at, i);
        let s = if i == at { sign } else { -sign };
        permute_with_sign(perm, at + 1, s, f);
        perm.swap(at, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(nu: &str, d: usize, degree: u32) -> BigInt {
        let cache = Cache::new();
        plethysm(&cache, &nu.parse().unwrap(), d, degree).unwrap()
    }

    #[test]
    fn empty_partition_convention() {
        let cache = Cache::new();
        assert_eq!(plethysm(&cache, &Partition::empty(), 0, 5).unwrap(), BigInt::one());
        assert!(plethysm(&cache, &"2".parse().unwrap(), 0, 5).is_err());
    }

    #[test]
    fn single_row_is_one() {
        // a_(δ)(1,δ) = 1
        for delta in 1..8 {
            assert_eq!(a(&delta.to_string(), 1, delta as u32), BigInt::one());
        }
        // a_(dD) = 1 for several d
        assert_eq!(a("8", 2, 4), BigInt::one());
        assert_eq!(a("12", 3, 4), BigInt::one());
        assert_eq!(a("12", 4, 3), BigInt::one());
    }

    #[test]
    fn degree_two_even_row_rule() {
        // two-row shapes with both rows even are exactly the types in Sym^2(Sym^D)
        assert_eq!(a("8", 2, 4), BigInt::one());
        assert_eq!(a("6,2", 2, 4), BigInt::one());
        assert_eq!(a("7,1", 2, 4), BigInt::zero());
        assert_eq!(a("5,3", 2, 4), BigInt::zero());
        assert_eq!(a("4,4", 2, 4), BigInt::one());
        assert_eq!(a("4", 2, 2), BigInt::one());
        assert_eq!(a("3,1", 2, 2), BigInt::zero());
        assert_eq!(a("2,2", 2, 2), BigInt::one());
    }

    #[test]
    fn totals_reproduce_weight_multiplicities() {
        // Σ_ν a_ν(d,D) K(ν,μ) = wm(μ) for every weight μ
        let cache = Cache::new();
        for (d, degree) in [(2usize, 3u32), (3, 2), (2, 4), (3, 3)] {
            let size = d * degree as usize;
            for mu in partitions_of(size, size.min(6), None) {
                let n_vars = mu.length().max(1);
                let mut lhs = BigInt::zero();
                for nv in partitions_of(size, n_vars, None) {
                    let coeff = plethysm(&cache, &nv, d, degree).unwrap();
                    if coeff.is_zero() {
                        continue;
                    }
                    lhs += coeff * kostka(&cache, &nv, &Content::from(&mu)).unwrap();
                }
                let rhs =
                    weight_multiplicity(&cache, &Content::from(&mu), d, degree, n_vars)
                        .unwrap();
                assert_eq!(lhs, rhs, "totals at mu={mu}, d={d}, D={degree}");
            }
        }
    }

    #[test]
    fn kostka_upper_bound() {
        // a_ν(d,D) ≤ K(ν, (D repeated d times))
        let cache = Cache::new();
        for (d, degree) in [(2usize, 4u32), (3, 3), (4, 2), (2, 6)] {
            let size = d * degree as usize;
            let content = Content::new(vec![degree; d]);
            for nv in partitions_of(size, d, None) {
                let a = plethysm(&cache, &nv, d, degree).unwrap();
                let k = kostka(&cache, &nv, &content).unwrap();
                assert!(a <= k, "a_{nv}({d},{degree}) = {a} > K = {k}");
            }
        }
    }

    #[test]
    fn alternant_agrees_with_solve() {
        let cache = Cache::new();
        for (d, degree) in [(2usize, 3u32), (3, 2), (2, 4), (4, 2), (3, 4)] {
            let size = d * degree as usize;
            for nv in partitions_of(size, 4, None) {
                let upset: Vec<Partition> =
                    partitions_of(size, nv.length(), None).filter(|k| k.dominates(&nv)).collect();
                let solved = dominance_solve(&cache, &nv, d, degree, &upset).unwrap();
                let alt = alternant(&nv, d, degree);
                assert_eq!(solved, alt, "routes disagree at nu={nv}, d={d}, D={degree}");
            }
        }
    }
}

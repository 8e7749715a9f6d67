//! Truncated coefficient tables for iterated symmetric powers.
//!
//! `h_table(d, D, caps)` returns every coefficient of the polynomial whose
//! x^μ-coefficient counts multisets of d degree-D monomials summing to μ,
//! restricted to exponent vectors below `caps` coordinatewise. The table is
//! built with the Newton recurrence for complete homogeneous functions
//!     r·H_r = Σ_{s=1..r} P_s · H_{r−s},   P_s(x) = H_1(x^s),
//! so only vectors inside the cap box are ever materialized. This scales to
//! instances whose dominance upset is far too large for the triangular solve.
//!
//! Coefficients fit in i128 comfortably: a table entry is at most the number
//! of d-multisets of monomials, which stays below 2^90 for every instance in
//! scope; additions are checked.

use std::collections::HashMap;

/// Sparse table over exponent vectors packed into u64 (one byte per variable).
pub(crate) type Table = HashMap<u64, i128>;

pub(crate) fn pack(v: &[u32]) -> u64 {
    debug_assert!(v.len() <= 8 && v.iter().all(|&x| x < 256));
    v.iter().fold(0u64, |acc, &x| (acc << 8) | x as u64)
}

pub(crate) fn unpack(mut key: u64, n: usize) -> Vec<u32> {
    let mut v = vec![0u32; n];
    for i in (0..n).rev() {
        v[i] = (key & 0xff) as u32;
        key >>= 8;
    }
    v
}

/// Full truncated coefficient table of the degree-d iterate (see module docs).
pub(crate) fn h_table(d: usize, degree: u32, caps: &[u32]) -> Table {
    let n = caps.len();
    assert!(n <= 7, "at most 7 variables fit the packed key with the aux byte");
    assert!(caps.iter().all(|&c| c < 256) && degree < 256);

    let mut levels: Vec<Table> = Vec::with_capacity(d + 1);
    let mut h0 = Table::default();
    h0.insert(pack(&vec![0; n]), 1);
    levels.push(h0);

    for r in 1..=d {
        let mut acc: Table = Table::default();
        for s in 1..=r {
            let conv = convolve_power(&levels[r - s], s as u32, degree, caps);
            for (k, v) in conv {
                let slot = acc.entry(k).or_insert(0);
                *slot = slot.checked_add(v).expect("h_table overflow");
            }
        }
        let r128 = r as i128;
        acc.retain(|_, v| *v != 0);
        for v in acc.values_mut() {
            assert_eq!(*v % r128, 0, "Newton recurrence must divide exactly");
            *v /= r128;
        }
        levels.push(acc);
    }
    levels.pop().unwrap()
}

/// result(w) = Σ_{exponent vectors α of degree `degree`} h(w − s·α),
/// truncated to w ≤ caps. Runs as a coordinate sweep: the allocation of α is
/// decided one coordinate at a time while a residual-degree byte rides along
/// in the key, so intermediate states aggregate instead of multiplying out.
fn convolve_power(h: &Table, s: u32, degree: u32, caps: &[u32]) -> Table {
    let n = caps.len();
    let mut cur: Vec<(u64, i128)> =
        h.iter().map(|(&k, &v)| ((k << 8) | degree as u64, v)).collect();

    for t in 0..n {
        let shift = 8 * (n - t); // byte position of coordinate t, above the aux byte
        let mut next: Table = Table::default();
        for &(key, val) in &cur {
            let u = (key & 0xff) as u32;
            let vt = ((key >> shift) & 0xff) as u32;
            // room still available in the coordinates after t, for pruning
            let mut later_room = 0u32;
            for t2 in t + 1..n {
                let v2 = ((key >> (8 * (n - t2))) & 0xff) as u32;
                later_room += (caps[t2] - v2) / s;
            }
            let a_max = ((caps[t] - vt) / s).min(u);
            let a_min = u.saturating_sub(later_room);
            for a in a_min..=a_max {
                let new_key = key + ((s * a) as u64) * (1u64 << shift) - a as u64;
                let slot = next.entry(new_key).or_insert(0);
                *slot = slot.checked_add(val).expect("convolution overflow");
            }
        }
        cur = next.into_iter().collect();
    }

    let mut out = Table::default();
    for (key, val) in cur {
        debug_assert_eq!(key & 0xff, 0);
        let slot = out.entry(key >> 8).or_insert(0);
        *slot = slot.checked_add(val).expect("convolution overflow");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::cache::Cache;
    use crate::coeff::weight::weight_multiplicity;
    use crate::partition::Content;
    use num_bigint::BigInt;

    #[test]
    fn pack_round_trip() {
        let v = vec![29, 0, 15, 3];
        assert_eq!(unpack(pack(&v), 4), v);
    }

    #[test]
    fn matches_weight_multiplicity_small() {
        let cache = Cache::new();
        for (d, degree, caps) in
            [(2usize, 2u32, vec![4u32, 4]), (3, 2, vec![6, 4, 3]), (2, 4, vec![8, 5])]
        {
            let table = h_table(d, degree, &caps);
            let n = caps.len();
            assert!(!table.is_empty());
            for (&key, &coeff) in &table {
                let mu = unpack(key, n);
                let expect =
                    weight_multiplicity(&cache, &Content::new(mu.clone()), d, degree, n)
                        .unwrap();
                assert_eq!(BigInt::from(coeff), expect, "mu={mu:?} d={d} D={degree}");
            }
        }
    }

    #[test]
    fn table_is_complete_inside_box() {
        // every vector of the right total inside the box must be present with
        // the exact multiset count (zero entries are simply absent)
        let cache = Cache::new();
        let caps = vec![6u32, 4, 4];
        let table = h_table(3, 2, &caps);
        for a in 0..=caps[0] {
            for b in 0..=caps[1] {
                for c in 0..=caps[2] {
                    if a + b + c != 6 {
                        continue;
                    }
                    let mu = vec![a, b, c];
                    let expect =
                        weight_multiplicity(&cache, &Content::new(mu.clone()), 3, 2, 3)
                            .unwrap();
                    let got = table.get(&pack(&mu)).copied().unwrap_or(0);
                    assert_eq!(BigInt::from(got), expect, "mu={mu:?}");
                }
            }
        }
    }
}

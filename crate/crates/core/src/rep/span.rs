//! Rank computation for sets of straightened vectors, and the semistandard
//! tableau enumerator feeding the symmetrization spans.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::partition::Partition;
use crate::rep::straighten::TableauExpansion;
use crate::tableau::{Entry, Tableau};

/// Rank over the rationals of the coefficient matrix of `vectors` in the
/// semistandard basis, by exact Gaussian elimination.
pub fn span_dimension(vectors: &[TableauExpansion]) -> usize {
    // stable column order over all basis tableaux that occur
    let mut basis: BTreeMap<String, usize> = BTreeMap::new();
    for v in vectors {
        for (t, _) in v.terms() {
            let key = t.to_string();
            let next = basis.len();
            basis.entry(key).or_insert(next);
        }
    }
    // BTreeMap iteration is sorted by key; reindex accordingly
    let index: BTreeMap<&String, usize> =
        basis.keys().enumerate().map(|(i, k)| (k, i)).collect();
    let cols = basis.len();
    if cols == 0 {
        return 0;
    }
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for v in vectors {
        if v.is_zero() {
            continue;
        }
        let mut row = vec![BigRational::zero(); cols];
        for (t, c) in v.terms() {
            row[index[&t.to_string()]] = c.clone();
        }
        rows.push(row);
    }
    rank(rows)
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let p = rows[r][c].clone();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = &rows[i][c] / &p;
            for j in c..cols {
                let sub = &factor * &rows[r][j];
                rows[i][j] -= sub;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// All semistandard tableaux of the given shape with entries in 1..=m.
pub fn semistandard_tableaux(shape: &Partition, m: usize) -> Vec<Tableau> {
    let rows = shape.length();
    let mut grid: Vec<Vec<u32>> =
        (0..rows).map(|r| vec![0u32; shape.part(r) as usize]).collect();
    let mut out = Vec::new();
    fill(shape, m, 0, 0, &mut grid, &mut out);
    out
}

fn fill(
    shape: &Partition,
    m: usize,
    r: usize,
    c: usize,
    grid: &mut Vec<Vec<u32>>,
    out: &mut Vec<Tableau>,
) {
    if r == shape.length() {
        out.push(Tableau::new(
            grid.iter()
                .map(|row| row.iter().map(|&v| Entry::Plain(v)).collect())
                .collect(),
        ));
        return;
    }
    if c == shape.part(r) as usize {
        fill(shape, m, r + 1, 0, grid, out);
        return;
    }
    let mut lo = 1u32;
    if c > 0 {
        lo = lo.max(grid[r][c - 1]); // rows weakly increase
    }
    if r > 0 {
        lo = lo.max(grid[r - 1][c] + 1); // columns strictly increase
    }
    for v in lo..=m as u32 {
        grid[r][c] = v;
        fill(shape, m, r, c + 1, grid, out);
    }
    grid[r][c] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::straighten::straighten;
    use crate::tableau::young;
    use num_bigint::BigInt;

    #[test]
    fn duplicate_vectors_have_rank_one() {
        let v = straighten(&young(&["12", "2"]), 2).unwrap();
        assert_eq!(span_dimension(&[v.clone(), v.clone(), v]), 1);
    }

    #[test]
    fn empty_list_has_rank_zero() {
        assert_eq!(span_dimension(&[]), 0);
    }

    #[test]
    fn independent_basis_vectors() {
        let a = TableauExpansion::single(
            young(&["11"]),
            BigRational::from(BigInt::from(1)),
        );
        let mut b = TableauExpansion::single(
            young(&["12"]),
            BigRational::from(BigInt::from(2)),
        );
        b.add(&a);
        let c = {
            let mut c = a.clone();
            c.add(&b);
            c
        };
        assert_eq!(span_dimension(&[a, b, c]), 2);
    }

    #[test]
    fn ssyt_counts_match_kostka_totals() {
        // #SSYT(shape, entries <= m) = dim of the GL_m irreducible
        let shape: Partition = "2,1".parse().unwrap();
        assert_eq!(semistandard_tableaux(&shape, 2).len(), 2);
        assert_eq!(semistandard_tableaux(&shape, 3).len(), 8);
        let shape: Partition = "2,2".parse().unwrap();
        assert_eq!(semistandard_tableaux(&shape, 2).len(), 1);
        assert_eq!(semistandard_tableaux(&shape, 3).len(), 6);
    }

    #[test]
    fn ssyt_are_semistandard() {
        let shape: Partition = "3,2".parse().unwrap();
        for t in semistandard_tableaux(&shape, 3) {
            assert!(t.classify().is_semistandard);
        }
    }
}

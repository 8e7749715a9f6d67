//! Latin squares, their signs, and the Alon-Tarsi difference.
//!
//! The sign convention follows the column-only definition: the sign of a
//! square is the product of the signs of its m column permutations. Other
//! sources multiply row and column signs; results differ, so the convention
//! is pinned here and in the tests.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// An m×m grid in which every row and column is a permutation of 1..m.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatinSquare {
    order: usize,
    grid: Vec<u8>, // row-major, values 1..=order
}

impl LatinSquare {
    pub fn new(order: usize, grid: Vec<u8>) -> Result<Self> {
        if grid.len() != order * order {
            return Err(Error::InvalidSquare(format!(
                "grid has {} cells, expected {}",
                grid.len(),
                order * order
            )));
        }
        let sq = LatinSquare { order, grid };
        for i in 0..order {
            if !sq.is_permutation(sq.row(i)) {
                return Err(Error::InvalidSquare(format!("row {i} is not a permutation")));
            }
            let col: Vec<u8> = (0..order).map(|r| sq.grid[r * order + i]).collect();
            if !sq.is_permutation(col) {
                return Err(Error::InvalidSquare(format!("column {i} is not a permutation")));
            }
        }
        Ok(sq)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn row(&self, r: usize) -> Vec<u8> {
        self.grid[r * self.order..(r + 1) * self.order].to_vec()
    }

    fn is_permutation(&self, v: Vec<u8>) -> bool {
        let mut seen = vec![false; self.order + 1];
        for x in v {
            if x == 0 || x as usize > self.order || seen[x as usize] {
                return false;
            }
            seen[x as usize] = true;
        }
        true
    }

    /// Product over columns of the permutation sign of that column.
    pub fn sign(&self) -> i32 {
        let mut sign = 1;
        for c in 0..self.order {
            let col: Vec<u8> = (0..self.order).map(|r| self.grid[r * self.order + c]).collect();
            sign *= permutation_sign(&col);
        }
        sign
    }
}

fn permutation_sign(p: &[u8]) -> i32 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// square_sign as a checked operation on arbitrary grids.
pub fn square_sign(order: usize, grid: &[u8]) -> Result<i32> {
    Ok(LatinSquare::new(order, grid.to_vec())?.sign())
}

/// (#even, #odd) over all m×m Latin squares.
///
/// Plain exhaustive DFS through m = 5. For m ∈ {6,7} the first row is fixed
/// and the counts rescaled by m!: relabeling symbols by π multiplies every
/// column sign by sgn(π), hence the square sign by sgn(π)^m, so for even m
/// both counts scale by m! and for odd m each reduced square contributes
/// m!/2 even and m!/2 odd relabelings. The reduction is gated behind
/// `long_running` since m = 7 takes hours.
pub fn alon_tarsi_counts(m: usize, long_running: bool) -> Result<(BigInt, BigInt)> {
    if m == 0 || m > 7 {
        return Err(Error::BudgetExceeded { budget: 7, explored: m as u64 });
    }
    if m >= 6 && !long_running {
        return Err(Error::BudgetExceeded { budget: 5, explored: m as u64 });
    }
    let reduce = m >= 6;
    let (even, odd) = enumerate_signed(m, reduce);
    if !reduce {
        return Ok((BigInt::from(even), BigInt::from(odd)));
    }
    let mut fact = BigInt::from(1);
    for k in 2..=m {
        fact *= k as i64;
    }
    if m % 2 == 0 {
        Ok((fact.clone() * even, fact * odd))
    } else {
        let half: BigInt = fact / 2;
        let total = BigInt::from(even + odd);
        Ok((half.clone() * total.clone(), half * total))
    }
}

/// (#even − #odd) over all m×m Latin squares.
pub fn alon_tarsi_difference(m: usize, long_running: bool) -> Result<BigInt> {
    let (even, odd) = alon_tarsi_counts(m, long_running)?;
    Ok(even - odd)
}

/// The Alon-Tarsi condition: the difference is nonzero.
pub fn alon_tarsi_condition(m: usize, long_running: bool) -> Result<bool> {
    Ok(!alon_tarsi_difference(m, long_running)?.is_zero())
}

/// Counts (even, odd) squares; with `fix_first_row` only squares whose first
/// row is 1..m are visited.
fn enumerate_signed(m: usize, fix_first_row: bool) -> (u64, u64) {
    let mut grid = vec![0u8; m * m];
    let mut col_used = vec![0u32; m]; // bitmasks of used values per column
    let mut even = 0u64;
    let mut odd = 0u64;
    let start = if fix_first_row {
        for c in 0..m {
            grid[c] = c as u8 + 1;
            col_used[c] = 1 << c;
        }
        m
    } else {
        0
    };
    dfs(m, start, &mut grid, &mut col_used, 0, &mut even, &mut odd);
    (even, odd)
}

fn dfs(
    m: usize,
    pos: usize,
    grid: &mut Vec<u8>,
    col_used: &mut Vec<u32>,
    row_used: u32,
    even: &mut u64,
    odd: &mut u64,
) {
    if pos == m * m {
        let mut sign = 1;
        for c in 0..m {
            let col: Vec<u8> = (0..m).map(|r| grid[r * m + c]).collect();
            sign *= permutation_sign(&col);
        }
        if sign > 0 {
            *even += 1;
        } else {
            *odd += 1;
        }
        return;
    }
    let c = pos % m;
    let next_row_used = if c == 0 { 0 } else { row_used };
    for v in 0..m as u32 {
        let bit = 1 << v;
        if next_row_used & bit != 0 || col_used[c] & bit != 0 {
            continue;
        }
        grid[pos] = v as u8 + 1;
        col_used[c] |= bit;
        dfs(m, pos + 1, grid, col_used, next_row_used | bit, even, odd);
        col_used[c] &= !bit;
    }
    grid[pos] = 0;
}

/// Independent second counter for the total number of m×m Latin squares:
/// memoized recursion on the multiset of per-column availability masks, with
/// a Ryser-permanent shortcut once two rows remain. Shares nothing with the
/// signed DFS above.
pub fn count_all_squares(m: usize) -> Result<BigInt> {
    if m == 0 || m > 7 {
        return Err(Error::BudgetExceeded { budget: 7, explored: m as u64 });
    }
    let full: u32 = (1 << m) - 1;
    let mut memo: HashMap<Vec<u32>, BigInt> = HashMap::new();
    Ok(count_rows(m, &vec![full; m], &mut memo))
}

fn count_rows(m: usize, avail: &[u32], memo: &mut HashMap<Vec<u32>, BigInt>) -> BigInt {
    let remaining = avail[0].count_ones();
    if remaining == 0 {
        return BigInt::from(1);
    }
    if remaining == 2 {
        return BigInt::from(ryser_permanent(m, avail));
    }
    // columns are interchangeable for counting purposes
    let mut key: Vec<u32> = avail.to_vec();
    key.sort_unstable();
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let sorted = key.clone();
    let mut total = BigInt::zero();
    let mut row = vec![0u32; m];
    sdr_sum(m, 0, &sorted, 0, &mut row, &mut total, memo);
    memo.insert(key, total.clone());
    total
}

fn sdr_sum(
    m: usize,
    c: usize,
    avail: &[u32],
    used: u32,
    row: &mut Vec<u32>,
    total: &mut BigInt,
    memo: &mut HashMap<Vec<u32>, BigInt>,
) {
    if c == m {
        let next: Vec<u32> = avail.iter().zip(row.iter()).map(|(a, r)| a & !r).collect();
        *total += count_rows(m, &next, memo);
        return;
    }
    let mut free = avail[c] & !used;
    while free != 0 {
        let bit = free & free.wrapping_neg();
        free &= free - 1;
        row[c] = bit;
        sdr_sum(m, c + 1, avail, used | bit, row, total, memo);
    }
    row[c] = 0;
}

/// Ryser's formula for the permanent of the 0/1 availability matrix, used
/// when exactly two rows remain (each completion is determined by one SDR).
fn ryser_permanent(m: usize, avail: &[u32]) -> i64 {
    let n = m;
    let mut total: i64 = 0;
    for subset in 1u32..(1 << n) {
        let bits = subset.count_ones();
        let mut prod: i64 = 1;
        for &mask in avail.iter().take(n) {
            let cnt = (mask & subset).count_ones() as i64;
            prod *= cnt;
            if prod == 0 {
                break;
            }
        }
        let sign = if (n as u32 - bits) % 2 == 0 { 1 } else { -1 };
        total += sign * prod;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_of_small_squares() {
        // columns (1,2) and (2,1): signs +, −
        assert_eq!(square_sign(2, &[1, 2, 2, 1]).unwrap(), -1);
        // cyclic square of order 3
        let cyc = [1, 2, 3, 2, 3, 1, 3, 1, 2];
        let s = square_sign(3, &cyc).unwrap();
        // columns are (1,2,3),(2,3,1),(3,1,2): signs +,+,+
        assert_eq!(s, 1);
    }

    #[test]
    fn invalid_squares_rejected() {
        assert!(square_sign(2, &[1, 2, 1, 2]).is_err());
        assert!(square_sign(2, &[1, 1, 2, 2]).is_err());
        assert!(square_sign(2, &[1, 2, 2]).is_err());
    }

    #[test]
    fn row_permuted_sign_relation() {
        // swapping two rows applies a transposition inside every column,
        // multiplying the sign by (−1)^m
        let sq = [1, 2, 3, 2, 3, 1, 3, 1, 2];
        let swapped = [2, 3, 1, 1, 2, 3, 3, 1, 2];
        let a = square_sign(3, &sq).unwrap();
        let b = square_sign(3, &swapped).unwrap();
        assert_eq!(a * b, if 3 % 2 == 0 { 1 } else { -1 });
    }

    #[test]
    fn differences_small_orders() {
        assert_eq!(alon_tarsi_difference(1, false).unwrap(), BigInt::from(1));
        assert_eq!(alon_tarsi_difference(2, false).unwrap(), BigInt::from(-2));
        assert_eq!(alon_tarsi_difference(3, false).unwrap(), BigInt::zero());
        assert!(!alon_tarsi_difference(4, false).unwrap().is_zero());
        assert_eq!(alon_tarsi_difference(5, false).unwrap(), BigInt::zero());
    }

    #[test]
    fn budget_gating() {
        assert!(matches!(
            alon_tarsi_difference(6, false),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            alon_tarsi_difference(8, true),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn totals_against_second_counter() {
        let (e4, o4) = enumerate_signed(4, false);
        assert_eq!(e4 + o4, 576);
        assert_eq!(count_all_squares(4).unwrap(), BigInt::from(576));
        let (e5, o5) = enumerate_signed(5, false);
        assert_eq!(e5 + o5, 161280);
        assert_eq!(count_all_squares(5).unwrap(), BigInt::from(161280));
        assert_eq!(count_all_squares(1).unwrap(), BigInt::from(1));
        assert_eq!(count_all_squares(2).unwrap(), BigInt::from(2));
        assert_eq!(count_all_squares(3).unwrap(), BigInt::from(12));
    }
}

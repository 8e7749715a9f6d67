//! Straightening into the semistandard basis modulo the Grassmann-Plücker
//! (shuffle) relations.
//!
//! Strategy: sort each column tracking the sign (a repeated entry kills the
//! tableau), then repeatedly resolve the leftmost violating adjacent column
//! pair at its topmost violating row r by the exchange relation: the top r+1
//! entries of the right column against every (r+1)-subset of the left column,
//! preserving internal vertical order. Expansions are memoized per
//! column-sorted tableau.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::tableau::{Entry, Tableau};

/// A finite linear combination of semistandard tableaux of a common shape.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct TableauExpansion {
    terms: HashMap<Tableau, BigRational>,
}

impl TableauExpansion {
    pub fn zero() -> Self {
        TableauExpansion::default()
    }

    pub fn single(t: Tableau, coeff: BigRational) -> Self {
        let mut e = TableauExpansion::default();
        e.add_term(t, coeff);
        e
    }

    pub fn add_term(&mut self, t: Tableau, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(t).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            let dead: Vec<Tableau> = self
                .terms
                .iter()
                .filter(|(_, c)| c.is_zero())
                .map(|(t, _)| t.clone())
                .collect();
            for t in dead {
                self.terms.remove(&t);
            }
        }
    }

    pub fn add(&mut self, other: &TableauExpansion) {
        for (t, c) in &other.terms {
            self.add_term(t.clone(), c.clone());
        }
    }

    pub fn scale(&mut self, factor: &BigRational) {
        if factor.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= factor;
        }
    }

    pub fn coeff(&self, t: &Tableau) -> BigRational {
        self.terms.get(t).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tableau, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Printed as "coeff * tableau" lines in a deterministic order.
impl fmt::Display for TableauExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lines: Vec<(String, String)> = self
            .terms
            .iter()
            .map(|(t, c)| (t.to_string(), c.to_string()))
            .collect();
        lines.sort();
        for (i, (t, c)) in lines.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{c} * {t}")?;
        }
        Ok(())
    }
}

/// The class of T in the tableau module, expressed in the semistandard basis.
pub fn straighten(t: &Tableau, m: usize) -> Result<TableauExpansion> {
    for e in t.iter_entries() {
        match e.plain() {
            Some(v) if v >= 1 && v as usize <= m => {}
            _ => {
                return Err(Error::IndexError {
                    entry: e.plain().unwrap_or(0),
                    cols: m,
                })
            }
        }
    }
    Ok(straighten_rec(t, 0))
}

fn memo() -> &'static Mutex<HashMap<Tableau, TableauExpansion>> {
    static MEMO: OnceLock<Mutex<HashMap<Tableau, TableauExpansion>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn straighten_rec(t: &Tableau, depth: usize) -> TableauExpansion {
    assert!(depth < 512, "straightening recursion ran away; relation order is broken");
    // sort columns, tracking the sign; a repeated entry means the class is zero
    let mut cols = to_columns(t);
    let mut sign = 1i64;
    for col in &mut cols {
        sign *= sort_count_sign(col);
        if sign == 0 {
            return TableauExpansion::zero();
        }
    }
    let sorted = from_columns(&cols);
    let sign_rat = BigRational::from_integer(sign.into());

    if is_row_weakly_increasing(&sorted) {
        return TableauExpansion::single(sorted, sign_rat);
    }
    if let Some(hit) = memo().lock().unwrap().get(&sorted) {
        let mut e = hit.clone();
        e.scale(&sign_rat);
        return e;
    }

    let (c, r) = first_violation(&sorted).expect("non-semistandard sorted tableau");
    let k = r + 1;
    let left = cols[c].clone();
    let right = cols[c + 1].clone();
    let mut result = TableauExpansion::zero();
    let mut positions: Vec<usize> = Vec::with_capacity(k);
    exchange_subsets(left.len(), k, 0, &mut positions, &mut |sel| {
        let mut new_left = left.clone();
        let mut new_right = right.clone();
        for (i, &p) in sel.iter().enumerate() {
            new_left[p] = right[i];
            new_right[i] = left[p];
        }
        let mut new_cols = cols.clone();
        new_cols[c] = new_left;
        new_cols[c + 1] = new_right;
        let child = from_columns(&new_cols);
        result.add(&straighten_rec(&child, depth + 1));
    });

    memo().lock().unwrap().entry(sorted).or_insert_with(|| result.clone());
    result.scale(&sign_rat);
    result
}

fn exchange_subsets(
    n: usize,
    k: usize,
    start: usize,
    acc: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if acc.len() == k {
        f(acc);
        return;
    }
    let needed = k - acc.len();
    for p in start..=n.saturating_sub(needed) {
        acc.push(p);
        exchange_subsets(n, k, p + 1, acc, f);
        acc.pop();
    }
}

/// Sorts a column ascending; returns the permutation sign, or 0 on a repeat.
fn sort_count_sign(col: &mut [u32]) -> i64 {
    let mut sign = 1i64;
    for i in 1..col.len() {
        let mut j = i;
        while j > 0 && col[j - 1] > col[j] {
            col.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && col[j - 1] == col[j] {
            return 0;
        }
    }
    sign
}

fn to_columns(t: &Tableau) -> Vec<Vec<u32>> {
    (0..t.n_columns())
        .map(|c| t.column(c).iter().map(|e| e.plain().expect("plain entries")).collect())
        .collect()
}

fn from_columns(cols: &[Vec<u32>]) -> Tableau {
    let height = cols.first().map(|c| c.len()).unwrap_or(0);
    let rows: Vec<Vec<Entry>> = (0..height)
        .map(|r| {
            cols.iter()
                .filter(|col| r < col.len())
                .map(|col| Entry::Plain(col[r]))
                .collect()
        })
        .collect();
    Tableau::new(rows)
}

/// Columns are strictly increasing here, so semistandard == rows weakly increase.
fn is_row_weakly_increasing(t: &Tableau) -> bool {
    t.rows().iter().all(|row| {
        row.windows(2)
            .all(|w| w[0].plain().unwrap() <= w[1].plain().unwrap())
    })
}

fn first_violation(t: &Tableau) -> Option<(usize, usize)> {
    for c in 0..t.n_columns().saturating_sub(1) {
        let left = t.column(c);
        let right = t.column(c + 1);
        for r in 0..right.len() {
            if left[r].plain().unwrap() > right[r].plain().unwrap() {
                return Some((c, r));
            }
        }
    }
    None
}

/// P_m S = Σ over all m! entry relabelings π of the straightened class of πS.
pub fn symmetrize_pm(s: &Tableau, m: usize) -> Result<TableauExpansion> {
    let mut total = TableauExpansion::zero();
    let mut perm: Vec<u32> = (1..=m as u32).collect();
    let mut err = None;
    permute(&mut perm, 0, &mut |perm| {
        if err.is_some() {
            return;
        }
        match straighten(&s.relabel(perm), m) {
            Ok(e) => total.add(&e),
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

fn permute(perm: &mut Vec<u32>, at: usize, f: &mut impl FnMut(&[u32])) {
    if at == perm.len() {
        f(perm);
        return;
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        permute(perm, at + 1, f);
        perm.swap(at, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::gamma::gamma_eval;
    use crate::rep::matrix::RationalMatrix;
    use crate::tableau::young;
    use num_bigint::BigInt;

    fn rat(x: i64) -> BigRational {
        BigRational::from(BigInt::from(x))
    }

    #[test]
    fn semistandard_is_fixed() {
        let t = young(&["1122", "33"]);
        let e = straighten(&t, 3).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.coeff(&t), rat(1));
    }

    #[test]
    fn repeated_column_entry_is_zero() {
        let t = young(&["1", "1"]);
        assert!(straighten(&t, 2).unwrap().is_zero());
    }

    #[test]
    fn column_sort_sign() {
        let t = young(&["2", "1"]);
        let e = straighten(&t, 2).unwrap();
        assert_eq!(e.coeff(&young(&["1", "2"])), rat(-1));
    }

    #[test]
    fn entries_out_of_range_rejected() {
        assert!(straighten(&young(&["13"]), 2).is_err());
    }

    #[test]
    fn p3_worked_example() {
        let e = symmetrize_pm(&young(&["1122", "33"]), 3).unwrap();
        assert_eq!(e.coeff(&young(&["1122", "33"])), rat(4));
        assert_eq!(e.coeff(&young(&["1123", "23"])), rat(-4));
        assert_eq!(e.coeff(&young(&["1133", "22"])), rat(4));
        assert_eq!(e.len(), 3);
    }

    #[test]
    fn m1_symmetrization_is_identity() {
        let t = young(&["111"]);
        let e = symmetrize_pm(&t, 1).unwrap();
        assert_eq!(e.coeff(&t), rat(1));
        assert_eq!(e.len(), 1);
    }

    #[test]
    fn single_column_all_distinct() {
        // all π give the sorted column up to sign: m! terms collapse to ±m!·sorted...
        // the signed sum over all relabelings of a full column is m!·(sum of signs)=0
        // for m >= 2 only when signs cancel; here they do not because relabeling a
        // full regular column gives every permutation exactly once
        let t = young(&["1", "2"]);
        let e = symmetrize_pm(&t, 2).unwrap();
        // π = id gives +, π = (12) gives column (2,1) which sorts to −(1,2)
        assert!(e.is_zero());
    }

    #[test]
    fn straightening_preserves_gamma() {
        // γ(gT) must equal the γ of the straightened expansion for any g
        let g: RationalMatrix = "2,1,5;1,3,1;4,1,1".parse().unwrap();
        for t in [
            young(&["2211", "33"]),
            young(&["321", "21"]),
            young(&["231", "12"]),
            young(&["33", "21", "1"]),
            young(&["3321", "221", "1"]),
        ] {
            let direct = gamma_eval(&g, &t).unwrap();
            let e = straighten(&t, 3).unwrap();
            let mut via_basis = BigRational::zero();
            for (s, c) in e.terms() {
                via_basis += c * gamma_eval(&g, s).unwrap();
            }
            assert_eq!(direct, via_basis, "gamma mismatch for {t}");
        }
    }

    #[test]
    fn expansion_terms_are_semistandard() {
        let e = symmetrize_pm(&young(&["2211", "33"]), 3).unwrap();
        for (t, _) in e.terms() {
            assert!(t.classify().is_semistandard, "{t} not semistandard");
        }
    }
}

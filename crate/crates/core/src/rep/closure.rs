//! Evaluation of closure highest-weight functions A ↦ γ(A M_{δ,m} T):
//! the sum over all alphabet maps φ of the γ-contraction of φT.
//!
//! The map space factorizes over connected components of the symbol/column
//! incidence graph, and inside a component a DFS assigns symbols in order of
//! first appearance, pruning on column regularity and on completed columns
//! whose minor vanishes. Symbols never touching T contribute a free factor n
//! each.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rep::matrix::RationalMatrix;
use crate::tableau::Tableau;

/// What the evaluator saw along the way; `value` is the exact sum.
#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub value: BigRational,
    /// DFS nodes visited across all components.
    pub explored: u64,
    /// Whether every fully assigned component product was nonnegative.
    pub all_summands_nonnegative: bool,
}

/// Σ over φ: {1..δ} → {1..n} of γ(A·φT), where n = cols(A). Exact.
pub fn closure_hwv_eval(t: &Tableau, a: &RationalMatrix, budget: u64) -> Result<BigRational> {
    Ok(closure_hwv_eval_report(t, a, budget)?.value)
}

/// Like `closure_hwv_eval` but keeps the explored-branch count and the
/// per-summand nonnegativity flag.
pub fn closure_hwv_eval_report(
    t: &Tableau,
    a: &RationalMatrix,
    budget: u64,
) -> Result<ClosureReport> {
    let delta = {
        let mut max = 0u32;
        for e in t.iter_entries() {
            let v = e.plain().ok_or_else(|| {
                Error::DegenerateInput("closure evaluation needs plain integer entries".into())
            })?;
            if v == 0 {
                return Err(Error::IndexError { entry: 0, cols: a.cols() });
            }
            max = max.max(v);
        }
        max as usize
    };
    if t.shape().length() > a.rows() {
        return Err(Error::ShapeError(format!(
            "tableau height {} exceeds the {} rows of A",
            t.shape().length(),
            a.rows()
        )));
    }
    let n = a.cols();

    // columns as symbol lists
    let columns: Vec<Vec<u32>> = (0..t.n_columns())
        .map(|c| t.column(c).iter().map(|e| e.plain().unwrap()).collect())
        .collect();

    // a column with a repeated symbol is never regular under any φ
    for col in &columns {
        for i in 0..col.len() {
            if col[i + 1..].contains(&col[i]) {
                return Ok(ClosureReport {
                    value: BigRational::zero(),
                    explored: 0,
                    all_summands_nonnegative: true,
                });
            }
        }
    }

    // connected components of symbols through shared columns
    let mut comp = Components::new(delta);
    for col in &columns {
        for w in col.windows(2) {
            comp.union(w[0] as usize - 1, w[1] as usize - 1);
        }
    }
    let mut groups: HashMap<usize, Vec<u32>> = HashMap::new();
    let mut used = vec![false; delta];
    for col in &columns {
        for &s in col {
            used[s as usize - 1] = true;
        }
    }
    for s in 0..delta {
        if used[s] {
            groups.entry(comp.find(s)).or_default().push(s as u32 + 1);
        }
    }
    let free_symbols = used.iter().filter(|&&u| !u).count();

    let mut value = BigRational::one();
    let mut explored = 0u64;
    let mut all_nonneg = true;
    let mut det_memo: HashMap<(usize, Vec<u32>), BigRational> = HashMap::new();
    for symbols in groups.values() {
        let cols_of: Vec<usize> = (0..columns.len())
            .filter(|&c| columns[c].iter().any(|s| symbols.contains(s)))
            .collect();
        let sum = component_sum(
            a,
            &columns,
            symbols,
            &cols_of,
            budget,
            &mut explored,
            &mut all_nonneg,
            &mut det_memo,
        )?;
        if sum.is_zero() {
            value = BigRational::zero();
            // keep exploring the nonnegativity flag? the total is zero either
            // way; remaining components cannot flip exactness, so stop
            break;
        }
        value *= sum;
    }
    if !value.is_zero() && free_symbols > 0 {
        value *= BigRational::from(BigInt::from(n as u64).pow(free_symbols as u32));
    }
    Ok(ClosureReport { value, explored, all_summands_nonnegative: all_nonneg })
}

#[allow(clippy::too_many_arguments)]
fn component_sum(
    a: &RationalMatrix,
    columns: &[Vec<u32>],
    symbols: &[u32],
    cols_of: &[usize],
    budget: u64,
    explored: &mut u64,
    all_nonneg: &mut bool,
    det_memo: &mut HashMap<(usize, Vec<u32>), BigRational>,
) -> Result<BigRational> {
    // assignment order: first appearance scanning columns left to right,
    // top to bottom
    let mut order: Vec<u32> = Vec::new();
    for &c in cols_of {
        for &s in &columns[c] {
            if symbols.contains(&s) && !order.contains(&s) {
                order.push(s);
            }
        }
    }
    // for each column, the position (in `order`) after which it is complete
    let completion: Vec<usize> = cols_of
        .iter()
        .map(|&c| {
            columns[c]
                .iter()
                .map(|s| order.iter().position(|x| x == s).unwrap())
                .max()
                .unwrap()
        })
        .collect();

    let n = a.cols();
    let mut assign: HashMap<u32, u32> = HashMap::new();
    let mut sum = BigRational::zero();
    dfs(
        a,
        columns,
        cols_of,
        &order,
        &completion,
        0,
        n,
        &BigRational::one(),
        &mut assign,
        &mut sum,
        budget,
        explored,
        all_nonneg,
        det_memo,
    )?;
    Ok(sum)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    a: &RationalMatrix,
    columns: &[Vec<u32>],
    cols_of: &[usize],
    order: &[u32],
    completion: &[usize],
    at: usize,
    n: usize,
    partial: &BigRational,
    assign: &mut HashMap<u32, u32>,
    sum: &mut BigRational,
    budget: u64,
    explored: &mut u64,
    all_nonneg: &mut bool,
    det_memo: &mut HashMap<(usize, Vec<u32>), BigRational>,
) -> Result<()> {
    if at == order.len() {
        if partial < &BigRational::zero() {
            *all_nonneg = false;
        }
        *sum += partial;
        return Ok(());
    }
    let sym = order[at];
    'values: for v in 1..=n as u32 {
        *explored += 1;
        if *explored > budget {
            return Err(Error::BudgetExceeded { budget, explored: *explored });
        }
        // column regularity: v must not collide inside any column containing sym
        for (&ci, _) in cols_of.iter().zip(completion) {
            let col = &columns[ci];
            if !col.contains(&sym) {
                continue;
            }
            for &s2 in col {
                if s2 != sym {
                    if let Some(&v2) = assign.get(&s2) {
                        if v2 == v {
                            continue 'values;
                        }
                    }
                }
            }
        }
        assign.insert(sym, v);
        // multiply in the minors of columns completed exactly now
        let mut next_partial = partial.clone();
        let mut dead = false;
        for (idx, &ci) in cols_of.iter().enumerate() {
            if completion[idx] != at {
                continue;
            }
            let col = &columns[ci];
            let sel: Vec<u32> = col.iter().map(|s| assign[s]).collect();
            let key = (col.len(), sel);
            let det = det_memo
                .entry(key)
                .or_insert_with_key(|(len, sel)| {
                    let idxs: Vec<usize> = sel.iter().map(|&v| v as usize - 1).collect();
                    a.minor_det(*len, &idxs)
                })
                .clone();
            if det.is_zero() {
                dead = true;
                break;
            }
            next_partial *= det;
        }
        if !dead {
            dfs(
                a,
                columns,
                cols_of,
                order,
                completion,
                at + 1,
                n,
                &next_partial,
                assign,
                sum,
                budget,
                explored,
                all_nonneg,
                det_memo,
            )?;
        }
        assign.remove(&sym);
    }
    Ok(())
}

struct Components {
    parent: Vec<usize>,
}

impl Components {
    fn new(n: usize) -> Self {
        Components { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::young;
    use num_bigint::BigInt;

    fn rat(x: i64) -> BigRational {
        BigRational::from(BigInt::from(x))
    }

    #[test]
    fn one_box_sums_matrix_row() {
        // δ=1, T = one box, A one column: Σ_φ γ = A[0,0]
        let a: RationalMatrix = "5".parse().unwrap();
        let t = young(&["1"]);
        assert_eq!(closure_hwv_eval(&t, &a, 1000).unwrap(), rat(5));
    }

    #[test]
    fn brute_force_comparison_small() {
        // T over {1,2}, A 2x2: compare against explicit enumeration of all 4 maps
        let a: RationalMatrix = "1,2;3,5".parse().unwrap();
        let t = young(&["12", "21"]);
        let mut expect = BigRational::zero();
        for f1 in 1..=2u32 {
            for f2 in 1..=2u32 {
                let phi = |v: u32| if v == 1 { f1 } else { f2 };
                let img = t.map_entries(|e| {
                    crate::tableau::Entry::Plain(phi(e.plain().unwrap()))
                });
                expect += crate::rep::gamma::gamma_eval(&a, &img).unwrap();
            }
        }
        assert_eq!(closure_hwv_eval(&t, &a, 10_000).unwrap(), expect);
    }

    #[test]
    fn component_factorization_matches_brute_force() {
        // two disconnected symbol groups: {1} in column 1, {2} in column 2
        let a: RationalMatrix = "2,3;0,4".parse().unwrap();
        let t = young(&["12"]);
        // brute force: Σ_{f1,f2} A[0,f1]·A[0,f2] = (2+3)^2
        assert_eq!(closure_hwv_eval(&t, &a, 10_000).unwrap(), rat(25));
    }

    #[test]
    fn repeated_symbol_in_column_is_zero() {
        let a = RationalMatrix::identity(3);
        let t = young(&["11", "1"]); // wait: column 0 holds symbol 1 twice
        let t = t; // rows (1,1),(1): column 0 = (1,1)
        let r = closure_hwv_eval_report(&t, &a, 10).unwrap();
        assert!(r.value.is_zero());
        assert_eq!(r.explored, 0);
    }

    #[test]
    fn unused_symbols_multiply_free_choices() {
        // T uses only symbol 3; symbols 1,2 are free: factor n^2
        let a: RationalMatrix = "7".parse().unwrap();
        let t = young(&["3"]);
        assert_eq!(closure_hwv_eval(&t, &a, 100).unwrap(), rat(7));
        // with n = 2 columns the free factor matters: Σ over φ(3) of A-entry, times 2^2
        let a2: RationalMatrix = "1,10".parse().unwrap();
        let t2 = young(&["3"]);
        assert_eq!(closure_hwv_eval(&t2, &a2, 100).unwrap(), rat(44));
    }

    #[test]
    fn budget_is_enforced() {
        let a = RationalMatrix::identity(4);
        let t = young(&["1234", "2341", "3412", "4123"]);
        assert!(matches!(
            closure_hwv_eval(&t, &a, 3),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}

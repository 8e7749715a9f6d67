//! The lifted tableau T = leftpart + rightpart built from a regular source
//! tableau S of content D·ρ.
//!
//! leftpart is assembled from one m×D block tableau per block edge of the
//! (D,ρ_i)-hypergraphs: vertex v of H^(i) contributes a column with the name
//! symbol i_ℓ(v) in row i and block symbols j^i_k in the other rows (barred
//! per the barred sets for odd D). Link-vertex columns exchange their row-i
//! entries with the lowest flavor's link column. rightpart replaces each
//! entry i of S by name symbols i_ℓ so that every symbol reaches D
//! occurrences in total. All construction-level claims are asserted.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::lifting::hypergraph::{build_hypergraph_even, build_hypergraph_odd, Hypergraph};
use crate::orbit::OddCondition;
use crate::partition::Partition;
use crate::tableau::{Entry, Tableau};

#[derive(Clone, Debug)]
pub struct LiftedTableau {
    /// T over the plain alphabet {1..δ}.
    pub tableau: Tableau,
    /// T over the descriptive lifting alphabet, before renaming.
    pub symbolic: Tableau,
    /// The source tableau S.
    pub source: Tableau,
    pub m: usize,
    pub degree: u32,
    pub d: usize,
    /// Sorted content of S divided by D.
    pub rho: Partition,
    pub e_rho: u32,
    pub delta: usize,
    /// Bijection lifting symbol → {1..δ}, sorted by target value.
    pub rename: Vec<(Entry, u32)>,
    /// Per leftpart column: (flavor i, block index inside H^(i), vertex id).
    pub per_block: Vec<(u32, usize, usize)>,
    /// The hypergraphs, one per flavor with ρ_i > 0.
    pub hypergraphs: Vec<(u32, Hypergraph)>,
}

impl LiftedTableau {
    /// Width of the rectangular left part, e_ρ·D.
    pub fn left_width(&self) -> usize {
        self.per_block.len()
    }

    pub fn leftpart(&self) -> Tableau {
        self.tableau.split(self.left_width()).expect("left block is full height").0
    }

    pub fn rightpart(&self) -> Tableau {
        self.tableau.split(self.left_width()).expect("left block is full height").1
    }
}

pub fn lift_tableau(s: &Tableau, m: usize, degree: u32) -> Result<LiftedTableau> {
    if degree < 3 || m < 2 {
        return Err(Error::DegenerateInput(format!(
            "lifting needs D >= 3 and m >= 2, got D={degree}, m={m}"
        )));
    }
    s.check_regular()?;
    if s.shape().length() > m {
        return Err(Error::ShapeError(format!(
            "source has {} rows, more than m = {m}",
            s.shape().length()
        )));
    }
    let mut counts = vec![0usize; m];
    for e in s.iter_entries() {
        match e.plain() {
            Some(v) if v >= 1 && v as usize <= m => counts[v as usize - 1] += 1,
            _ => {
                return Err(Error::DegenerateInput(
                    "source entries must be plain integers in 1..=m".into(),
                ))
            }
        }
    }
    for (idx, &c) in counts.iter().enumerate() {
        if c % degree as usize != 0 {
            return Err(Error::ContentNotDivisible {
                entry: idx as u32 + 1,
                count: c,
                degree,
            });
        }
    }
    let rho_by_flavor: Vec<u32> = counts.iter().map(|&c| (c / degree as usize) as u32).collect();
    let d: usize = rho_by_flavor.iter().map(|&r| r as usize).sum();
    debug_assert_eq!(s.n_boxes(), d * degree as usize);
    let odd = degree % 2 == 1;
    if odd {
        OddCondition::require(degree, m)?;
    }

    let dm2 = degree - 2;
    let e_rho: u32 = rho_by_flavor
        .iter()
        .map(|&r| if odd { 2 * r.div_ceil(2 * dm2) } else { r.div_ceil(dm2) })
        .sum();

    // one hypergraph per flavor with mass
    let mut hypergraphs: Vec<(u32, Hypergraph)> = Vec::new();
    for (idx, &r) in rho_by_flavor.iter().enumerate() {
        if r == 0 {
            continue;
        }
        let h = if odd {
            build_hypergraph_odd(degree, r)?
        } else {
            build_hypergraph_even(degree, r)?
        };
        hypergraphs.push((idx as u32 + 1, h));
    }
    if hypergraphs.is_empty() {
        return Err(Error::DegenerateInput("source tableau has no boxes".into()));
    }
    let flavor_h = hypergraphs[0].0; // smallest flavor in I

    // barred sets for odd D: per flavor, per pair, per row j, the D-subset of
    // pair vertices whose columns carry the barred symbol in row j
    let mut barred_sets: HashMap<(u32, usize, u32), Vec<usize>> = HashMap::new();
    if odd {
        for (flavor, h) in &hypergraphs {
            for (p, &(left, right, v, w)) in h.bridge_pairs.iter().enumerate() {
                let mut pool: Vec<usize> = h.block_edges[left]
                    .iter()
                    .chain(h.block_edges[right].iter())
                    .copied()
                    .filter(|&x| x != v && x != w)
                    .collect();
                pool.sort_unstable();
                let mut subsets = Vec::with_capacity(m - 1);
                let mut acc = Vec::new();
                k_subsets(&pool, degree as usize - 1, 0, &mut acc, &mut subsets, m - 1);
                assert!(
                    subsets.len() == m - 1,
                    "binomial condition guarantees enough barred sets"
                );
                let mut row = 0usize;
                for j in 1..=m as u32 {
                    if j == *flavor {
                        continue;
                    }
                    let mut set = vec![v];
                    set.extend(&subsets[row]);
                    barred_sets.insert((*flavor, p, j), set);
                    row += 1;
                }
            }
        }
    }

    // the acute-B columns per (flavor, vertex)
    let mut columns: BTreeMap<(u32, usize), Vec<Entry>> = BTreeMap::new();
    for (flavor, h) in &hypergraphs {
        for v in 0..h.n_vertices {
            let k = h.k[v];
            let mut col = Vec::with_capacity(m);
            for j in 1..=m as u32 {
                if j == *flavor {
                    col.push(Entry::Name { i: *flavor, l: h.ell[v] as u32 + 1 });
                } else {
                    let barred = if odd {
                        barred_sets[&(*flavor, k, j)].contains(&v)
                    } else {
                        false
                    };
                    col.push(Entry::Block { j, i: *flavor, k: k as u32 + 1, barred });
                }
            }
            columns.insert((*flavor, v), col);
        }
    }

    // link swap: exchange the row-i entries of the link columns of H^(i) and
    // H^(h) for every flavor i above the smallest one
    for (flavor, _) in hypergraphs.iter().skip(1) {
        let row = *flavor as usize - 1;
        let from_h = columns[&(flavor_h, 0)][row];
        let from_i = columns[&(*flavor, 0)][row];
        columns.get_mut(&(*flavor, 0)).unwrap()[row] = from_h;
        columns.get_mut(&(flavor_h, 0)).unwrap()[row] = from_i;
    }

    // assemble leftpart in flavor, block, vertex order
    let mut left_cols: Vec<Vec<Entry>> = Vec::new();
    let mut per_block: Vec<(u32, usize, usize)> = Vec::new();
    for (flavor, h) in &hypergraphs {
        for (b, edge) in h.block_edges.iter().enumerate() {
            for &v in edge {
                left_cols.push(columns[&(*flavor, v)].clone());
                per_block.push((*flavor, b, v));
            }
        }
    }
    let leftpart = columns_to_tableau(&left_cols, m);
    debug_assert_eq!(leftpart.shape(), &Partition::rect(m, e_rho * degree));

    // claim: row j of leftpart carries only j-flavored symbols
    for (r, row) in leftpart.rows().iter().enumerate() {
        let j = r as u32 + 1;
        for e in row {
            let fits = match *e {
                Entry::Name { i, .. } => i == j,
                Entry::Block { j: jj, .. } => jj == j,
                Entry::Plain(_) => false,
            };
            assert!(fits, "row {j} of leftpart holds a foreign symbol {e}");
        }
    }

    // claim: every block symbol appears exactly D times in leftpart
    let mut left_counts: HashMap<Entry, usize> = HashMap::new();
    for e in leftpart.iter_entries() {
        *left_counts.entry(e).or_insert(0) += 1;
    }
    for (e, c) in &left_counts {
        if matches!(e, Entry::Block { .. }) {
            assert_eq!(*c, degree as usize, "block symbol {e} appears {c} times");
        }
    }

    if odd {
        // claim: per pair, the two bridge columns jointly carry all 2(m−1)
        // block symbols of that pair
        for (flavor, h) in &hypergraphs {
            for (p, &(_, _, v, w)) in h.bridge_pairs.iter().enumerate() {
                let mut want: Vec<Entry> = Vec::new();
                for j in 1..=m as u32 {
                    if j != *flavor {
                        for barred in [false, true] {
                            want.push(Entry::Block { j, i: *flavor, k: p as u32 + 1, barred });
                        }
                    }
                }
                let have: Vec<Entry> = columns[&(*flavor, v)]
                    .iter()
                    .chain(columns[&(*flavor, w)].iter())
                    .copied()
                    .collect();
                for e in want {
                    assert!(
                        have.contains(&e),
                        "bridge columns of pair {p} in flavor {flavor} miss {e}"
                    );
                }
            }
        }
    }

    // rightpart: replace D − n(i_ℓ) many entries i of S by i_ℓ, smallest ℓ first
    let mut needed: Vec<Vec<(u32, usize)>> = vec![Vec::new(); m + 1];
    for (flavor, h) in &hypergraphs {
        let mut sum = 0usize;
        for (idx, e) in h.name_edges.iter().enumerate() {
            let n_il = e.len();
            debug_assert!(n_il > 0 && n_il < degree as usize);
            needed[*flavor as usize].push((idx as u32 + 1, degree as usize - n_il));
            sum += degree as usize - n_il;
        }
        // claim: the replacements consume exactly the D·ρ_i entries i of S
        assert_eq!(
            sum,
            counts[*flavor as usize - 1],
            "divisibility claim broken for flavor {flavor}"
        );
    }
    let right_rows: Vec<Vec<Entry>> = s
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| {
                    let i = e.plain().unwrap();
                    let queue = &mut needed[i as usize];
                    let slot = queue.iter_mut().find(|(_, left)| *left > 0).unwrap();
                    slot.1 -= 1;
                    Entry::Name { i, l: slot.0 }
                })
                .collect()
        })
        .collect();
    assert!(needed.iter().flatten().all(|&(_, left)| left == 0));
    let rightpart = Tableau::new(right_rows);

    let symbolic = leftpart.concat(&rightpart);

    // every symbol appears exactly D times in T
    let mut total_counts: BTreeMap<Entry, usize> = BTreeMap::new();
    for e in symbolic.iter_entries() {
        *total_counts.entry(e).or_insert(0) += 1;
    }
    for (e, c) in &total_counts {
        assert_eq!(*c, degree as usize, "symbol {e} appears {c} != D times in T");
    }
    // a name symbol appears in leftpart iff it appears in rightpart
    for (e, _) in &total_counts {
        if matches!(e, Entry::Name { .. }) {
            let in_left = left_counts.get(e).copied().unwrap_or(0);
            assert!(in_left > 0 && in_left < degree as usize);
        }
    }

    // rename: names by (i,ℓ), then block symbols by (i,k,barred,j)
    let mut names: Vec<Entry> = Vec::new();
    let mut blocks: Vec<Entry> = Vec::new();
    for e in total_counts.keys() {
        match e {
            Entry::Name { .. } => names.push(*e),
            Entry::Block { .. } => blocks.push(*e),
            Entry::Plain(_) => unreachable!(),
        }
    }
    names.sort_by_key(|e| match e {
        Entry::Name { i, l } => (*i, *l),
        _ => unreachable!(),
    });
    blocks.sort_by_key(|e| match e {
        Entry::Block { j, i, k, barred } => (*i, *k, *barred, *j),
        _ => unreachable!(),
    });
    let rename: Vec<(Entry, u32)> = names
        .into_iter()
        .chain(blocks)
        .enumerate()
        .map(|(idx, e)| (e, idx as u32 + 1))
        .collect();
    let delta = rename.len();
    assert_eq!(delta, m * e_rho as usize + d, "symbol count must be m·e_ρ + d");

    let map: HashMap<Entry, u32> = rename.iter().copied().collect();
    let tableau = symbolic.map_entries(|e| Entry::Plain(map[&e]));

    let mut rho_sorted: Vec<u32> = rho_by_flavor.iter().copied().filter(|&r| r > 0).collect();
    rho_sorted.sort_unstable_by(|a, b| b.cmp(a));

    let lifted = LiftedTableau {
        tableau,
        symbolic,
        source: s.clone(),
        m,
        degree,
        d,
        rho: Partition::new(rho_sorted),
        e_rho,
        delta,
        rename,
        per_block,
        hypergraphs,
    };
    debug_assert_eq!(
        lifted.tableau.shape(),
        &s.shape().add_rowwise(&Partition::rect(m, e_rho * degree))
    );
    Ok(lifted)
}

fn k_subsets(
    pool: &[usize],
    k: usize,
    start: usize,
    acc: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if out.len() == limit {
        return;
    }
    if acc.len() == k {
        out.push(acc.clone());
        return;
    }
    let needed = k - acc.len();
    for p in start..=pool.len().saturating_sub(needed) {
        acc.push(pool[p]);
        k_subsets(pool, k, p + 1, acc, out, limit);
        acc.pop();
        if out.len() == limit {
            return;
        }
    }
}

fn columns_to_tableau(cols: &[Vec<Entry>], height: usize) -> Tableau {
    let rows: Vec<Vec<Entry>> = (0..height)
        .map(|r| cols.iter().map(|c| c[r]).collect())
        .collect();
    Tableau::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::young;

    #[test]
    fn even_two_row_superstandard() {
        let s = young(&["1111", "2222"]);
        let l = lift_tableau(&s, 2, 4).unwrap();
        assert_eq!(l.e_rho, 2);
        assert_eq!(l.delta, 6);
        assert_eq!(l.tableau.shape(), &"12,12".parse().unwrap());
        assert_eq!(l.rho, "1,1".parse().unwrap());
    }

    #[test]
    fn odd_single_row() {
        let s = young(&["111"]);
        let l = lift_tableau(&s, 2, 3).unwrap();
        assert_eq!(l.e_rho, 2);
        assert_eq!(l.delta, 5);
        assert_eq!(l.tableau.shape(), &"9,6".parse().unwrap());
    }

    #[test]
    fn rejects_bad_sources() {
        assert!(matches!(
            lift_tableau(&young(&["11", "12"]), 2, 4),
            Err(Error::NotRegular { .. })
        ));
        assert!(matches!(
            lift_tableau(&young(&["111"]), 2, 4),
            Err(Error::ContentNotDivisible { .. })
        ));
        assert!(matches!(
            lift_tableau(&young(&["111"]), 1, 3),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn rightpart_mirrors_source_flavors() {
        let s = young(&["111222"]);
        let l = lift_tableau(&s, 2, 3).unwrap();
        let right = l.symbolic.split(l.left_width()).unwrap().1;
        for (r, row) in right.rows().iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                match e {
                    Entry::Name { i, .. } => {
                        assert_eq!(*i, s.entry(r, c).plain().unwrap());
                    }
                    other => panic!("rightpart must hold name symbols, got {other}"),
                }
            }
        }
    }

    #[test]
    fn full_example_figure_shape() {
        // the worked even example: D = 6, m = 4, content (30,12,6) = 6·(5,2,1)
        let mut row1 = vec![1u32; 30];
        row1.extend([2, 3]);
        let mut row2 = vec![2u32; 11];
        row2.extend([3, 3]);
        let s = Tableau::from_rows(vec![row1, row2, vec![3, 3, 3]]);
        let l = lift_tableau(&s, 4, 6).unwrap();
        // e_rho = ceil(5/4)+ceil(2/4)+ceil(1/4) = 2+1+1 = 4
        assert_eq!(l.e_rho, 4);
        assert_eq!(l.left_width(), 24);
        assert_eq!(
            l.tableau.shape(),
            &s.shape().add_rowwise(&Partition::rect(4, 24)).clone()
        );
        assert_eq!(l.delta, 4 * 4 + 8);
    }
}

//! (D,K)-hypergraphs and their paired variant.
//!
//! Vertices are laid out linearly: the block edges are consecutive runs of D
//! vertices, the rightmost vertex of every block but the last shares a size-2
//! name edge with the leftmost vertex of the next block, and the remaining
//! vertices are covered left to right by name edges whose sizes start at one
//! with the surplus pushed into the earliest edges (capped at D−1). The
//! leftmost vertex is the link vertex; its name edge then has size at least 2
//! and contains a companion from the same block.

use std::collections::HashSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Hypergraph {
    pub n_vertices: usize,
    /// Set partition of the vertices into runs of size D.
    pub block_edges: Vec<Vec<usize>>,
    /// Set partition into edges of size 1..D, ordered by leftmost vertex.
    pub name_edges: Vec<Vec<usize>>,
    pub link_vertex: usize,
    /// (block index, block index, bridge vertex, bridge vertex); empty for even D.
    pub bridge_pairs: Vec<(usize, usize, usize, usize)>,
    /// vertex → name edge index (0-based).
    pub ell: Vec<usize>,
    /// vertex → block index (even D) or block-pair index (odd D), 0-based.
    pub k: Vec<usize>,
    /// block index → barred flag (odd D only, all false otherwise).
    pub barred: Vec<bool>,
}

impl Hypergraph {
    fn from_layout(degree: u32, n_blocks: usize, capacity: u32, paired: bool) -> Self {
        let d = degree as usize;
        let n = n_blocks * d;
        let block_edges: Vec<Vec<usize>> =
            (0..n_blocks).map(|b| (b * d..(b + 1) * d).collect()).collect();

        // inter-block bridges of size 2
        let mut name_edges: Vec<Vec<usize>> = Vec::new();
        let mut covered = vec![false; n];
        for b in 1..n_blocks {
            name_edges.push(vec![b * d - 1, b * d]);
            covered[b * d - 1] = true;
            covered[b * d] = true;
        }
        let remaining: Vec<usize> = (0..n).filter(|&v| !covered[v]).collect();
        let n_edges_left = capacity as usize + 1; // K + n_blocks − (n_blocks − 1)
        let mut sizes = vec![1usize; n_edges_left];
        let mut surplus = remaining.len() - n_edges_left;
        for s in sizes.iter_mut() {
            let extra = surplus.min(d - 2);
            *s += extra;
            surplus -= extra;
            if surplus == 0 {
                break;
            }
        }
        debug_assert_eq!(surplus, 0);
        let mut at = 0;
        for s in sizes {
            name_edges.push(remaining[at..at + s].to_vec());
            at += s;
        }
        name_edges.sort_by_key(|e| e[0]);

        let mut ell = vec![0usize; n];
        for (idx, e) in name_edges.iter().enumerate() {
            for &v in e {
                ell[v] = idx;
            }
        }
        let k: Vec<usize> = (0..n)
            .map(|v| if paired { (v / d) / 2 } else { v / d })
            .collect();
        let (bridge_pairs, barred) = if paired {
            let pairs = (0..n_blocks / 2)
                .map(|p| {
                    let left = 2 * p;
                    let right = 2 * p + 1;
                    // rightmost vertex of the odd block, leftmost of the even one
                    (left, right, right * d - 1, right * d)
                })
                .collect();
            // the left block edge of each pair is the barred one
            let barred = (0..n_blocks).map(|b| b % 2 == 0).collect();
            (pairs, barred)
        } else {
            (Vec::new(), vec![false; n_blocks])
        };

        Hypergraph {
            n_vertices: n,
            block_edges,
            name_edges,
            link_vertex: 0,
            bridge_pairs,
            ell,
            k,
            barred,
        }
    }
}

/// (D,K)-hypergraph with exactly ⌈K/(D−2)⌉ block edges, for even D ≥ 4, K ≥ 1.
pub fn build_hypergraph_even(degree: u32, capacity: u32) -> Result<Hypergraph> {
    if degree < 4 || degree % 2 != 0 {
        return Err(Error::DegenerateInput(format!(
            "even hypergraph needs even D >= 4, got {degree}"
        )));
    }
    if capacity < 1 {
        return Err(Error::DegenerateInput("hypergraph needs K >= 1".into()));
    }
    let n_blocks = capacity.div_ceil(degree - 2) as usize;
    Ok(Hypergraph::from_layout(degree, n_blocks, capacity, false))
}

/// (D,K)-paired-hypergraph with exactly 2⌈K/(2(D−2))⌉ block edges, for odd
/// D ≥ 3, K ≥ 1.
pub fn build_hypergraph_odd(degree: u32, capacity: u32) -> Result<Hypergraph> {
    if degree < 3 || degree % 2 != 1 {
        return Err(Error::DegenerateInput(format!(
            "paired hypergraph needs odd D >= 3, got {degree}"
        )));
    }
    if capacity < 1 {
        return Err(Error::DegenerateInput("hypergraph needs K >= 1".into()));
    }
    let n_blocks = 2 * capacity.div_ceil(2 * (degree - 2)) as usize;
    Ok(Hypergraph::from_layout(degree, n_blocks, capacity, true))
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<String>,
}

/// Checks every defining property; with `paired` also the bridge structure.
pub fn validate_hypergraph(
    h: &Hypergraph,
    degree: u32,
    capacity: u32,
    paired: bool,
) -> ValidationReport {
    let mut violations = Vec::new();
    let n = h.n_vertices;
    let d = degree as usize;

    // block edges: set partition into size-D edges
    let mut seen = vec![0usize; n];
    for e in &h.block_edges {
        if e.len() != d {
            violations.push(format!("block edge {e:?} has size {} != D", e.len()));
        }
        for &v in e {
            seen[v] += 1;
        }
    }
    if seen.iter().any(|&c| c != 1) {
        violations.push("block edges do not partition the vertex set".into());
    }

    // name edges: set partition into sizes 1..D
    let mut seen = vec![0usize; n];
    for e in &h.name_edges {
        if e.is_empty() || e.len() >= d {
            violations.push(format!(
                "name edge {e:?} has size {} outside [1, D-1]",
                e.len()
            ));
        }
        for &v in e {
            seen[v] += 1;
        }
    }
    if seen.iter().any(|&c| c != 1) {
        violations.push("name edges do not partition the vertex set".into());
    }

    // |E_Name| − |E_Block| = K
    if h.name_edges.len() as i64 - h.block_edges.len() as i64 != capacity as i64 {
        violations.push(format!(
            "|name| - |block| = {} != K = {capacity}",
            h.name_edges.len() as i64 - h.block_edges.len() as i64
        ));
    }

    // connectivity through both edge kinds
    if !connected(n, h.block_edges.iter().chain(h.name_edges.iter())) {
        violations.push("hypergraph is not connected".into());
    }

    // the link vertex's name edge meets its block edge in >= 2 vertices
    let link = h.link_vertex;
    let link_name: HashSet<usize> = h.name_edges[h.ell[link]].iter().copied().collect();
    let link_block = h
        .block_edges
        .iter()
        .find(|e| e.contains(&link))
        .map(|e| e.iter().filter(|v| link_name.contains(v)).count())
        .unwrap_or(0);
    if link_block < 2 {
        violations.push(
            "link vertex's name edge and block edge share fewer than 2 vertices".into(),
        );
    }
    if h.ell[link] != 0 {
        violations.push("link vertex is not in the first name edge".into());
    }
    if h.k[link] != 0 {
        violations.push("link vertex is not in the first block (pair)".into());
    }

    // labelings consistent with the edges
    for (idx, e) in h.name_edges.iter().enumerate() {
        if e.iter().any(|&v| h.ell[v] != idx) {
            violations.push(format!("ell labels inconsistent on name edge {idx}"));
        }
    }
    for (b, e) in h.block_edges.iter().enumerate() {
        let expect = if paired { b / 2 } else { b };
        if e.iter().any(|&v| h.k[v] != expect) {
            violations.push(format!("k labels inconsistent on block edge {b}"));
        }
    }

    if paired {
        if h.block_edges.len() % 2 != 0 {
            violations.push("odd number of block edges cannot be paired".into());
        }
        let mut in_pair = vec![false; h.block_edges.len()];
        for &(a, b, v, w) in &h.bridge_pairs {
            if a >= in_pair.len() || b >= in_pair.len() || in_pair[a] || in_pair[b] || a == b {
                violations.push(format!("bad block pair ({a},{b})"));
                continue;
            }
            in_pair[a] = true;
            in_pair[b] = true;
            if !h.block_edges[a].contains(&v) || !h.block_edges[b].contains(&w) {
                violations.push(format!("bridge vertices ({v},{w}) not in their blocks"));
            }
            if h.ell[v] != h.ell[w] {
                violations.push(format!(
                    "bridge vertices ({v},{w}) are not connected by a name edge"
                ));
            }
            if h.barred[a] == h.barred[b] {
                violations.push(format!("pair ({a},{b}) needs one barred block"));
            }
        }
        if in_pair.iter().any(|&x| !x) {
            violations.push("not every block edge belongs to a bridge pair".into());
        }
    } else if !h.bridge_pairs.is_empty() {
        violations.push("even hypergraph must not carry bridge pairs".into());
    }

    ValidationReport { ok: violations.is_empty(), violations }
}

fn connected<'a>(n: usize, edges: impl Iterator<Item = &'a Vec<usize>>) -> bool {
    if n == 0 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for e in edges {
        for w in e.windows(2) {
            let a = find(&mut parent, w[0]);
            let b = find(&mut parent, w[1]);
            if a != b {
                parent[a] = b;
            }
        }
    }
    let root = find(&mut parent, 0);
    (0..n).all(|v| find(&mut parent, v) == root)
}

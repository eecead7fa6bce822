//! Canonical labeling of small graphs and generation of every graph up to
//! isomorphism.
//!
//! A graph on `n ≤ 11` vertices is encoded as a bit string over the vertex
//! pairs `(i, j)`, `i < j`, pair `(i, j)` at bit `j(j-1)/2 + i`. The
//! canonical code is the smallest code over the leaves of an
//! individualization-refinement search; twins in the branching cell are
//! explored once since swapping them is an automorphism.

use std::collections::BTreeSet;

use crate::graph::{Graph, VertexId};

/// Largest vertex count the 64-bit code can hold.
pub const MAX_VERTICES: usize = 11;

fn pair_bit(i: usize, j: usize) -> u32 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    (j * (j - 1) / 2 + i) as u32
}

/// Code of `adj` under the labeling that puts vertex `order[p]` at position `p`.
fn code_of(adj: &[u64], order: &[usize]) -> u64 {
    let mut code = 0u64;
    for q in 1..order.len() {
        for p in 0..q {
            if adj[order[p]] >> order[q] & 1 == 1 {
                code |= 1 << pair_bit(p, q);
            }
        }
    }
    code
}

/// Adjacency rows of the graph with the given code.
pub fn decode(n: usize, code: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// Splits cells by neighbour counts into earlier cells until stable. New
/// cells are ordered by their count signature, which keeps the result
/// independent of vertex names.
fn refine(adj: &[u64], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(adj: &[u64], cells: Vec<Vec<usize>>, best: &mut u64) {
    let cells = refine(adj, cells);
    let Some(at) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        *best = (*best).min(code_of(adj, &order));
        return;
    };
    let cell = &cells[at];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        let twin = tried.iter().any(|&u| adj[u] & !(1 << v) == adj[v] & !(1 << u));
        if twin {
            continue;
        }
        tried.push(v);
        let mut split = cells[..at].to_vec();
        split.push(vec![v]);
        split.push(cell.iter().copied().filter(|&u| u != v).collect());
        split.extend(cells[at + 1..].iter().cloned());
        search(adj, split, best);
    }
}

/// Canonical code of the graph with adjacency rows `adj`: two graphs get the
/// same code exactly when they are isomorphic.
pub fn canonical_code(adj: &[u64]) -> u64 {
    assert!(adj.len() <= MAX_VERTICES, "canonical codes support at most {MAX_VERTICES} vertices");
    if adj.is_empty() {
        return 0;
    }
    let mut best = u64::MAX;
    search(adj, vec![(0..adj.len()).collect()], &mut best);
    best
}

pub fn is_connected(adj: &[u64]) -> bool {
    if adj.is_empty() {
        return true;
    }
    let all = if adj.len() == 64 { u64::MAX } else { (1u64 << adj.len()) - 1 };
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            next |= adj[f.trailing_zeros() as usize];
            f &= f - 1;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

/// Canonical codes of all graphs on `n` vertices, one per isomorphism class,
/// ascending. Built by attaching a new vertex to every class on `n - 1`
/// vertices in every possible way.
pub fn all_graphs(n: usize) -> Vec<u64> {
    assert!(n <= MAX_VERTICES, "canonical codes support at most {MAX_VERTICES} vertices");
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for size in 1..n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = decode(size, code);
            for attach in 0u64..1 << size {
                let mut adj = base.clone();
                adj.push(attach);
                for (i, row) in adj.iter_mut().enumerate().take(size) {
                    if attach >> i & 1 == 1 {
                        *row |= 1 << size;
                    }
                }
                next.insert(canonical_code(&adj));
            }
        }
        level = next;
    }
    if n == 0 {
        return Vec::new();
    }
    level.into_iter().collect()
}

/// Canonical codes of the connected graphs on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<u64> {
    all_graphs(n).into_iter().filter(|&c| is_connected(&decode(n, c))).collect()
}

/// The graph with the given code on vertex ids `1..=n`.
pub fn to_graph(n: usize, code: u64) -> Graph {
    let adj = decode(n, code);
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if adj[i] >> j & 1 == 1 {
                edges.push((i as VertexId + 1, j as VertexId + 1));
            }
        }
    }
    Graph::with_vertices(n as u32, &edges).expect("decoded graphs are simple")
}

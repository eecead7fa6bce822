#![allow(dead_code)]

use impsep::oracle::corpus::{separable_pairs, Corpus};
use impsep::{Graph, VertexId, VertexSet};

/// Every connected graph on at most `n` vertices (one per isomorphism
/// class) with every ordered pair of non-adjacent singletons.
pub fn exhaustive_instances(n: usize) -> Vec<(Graph, VertexSet, VertexSet)> {
    let mut out = Vec::new();
    for_each_instance(n, |g, x, y| out.push((g.clone(), x.clone(), y.clone())));
    out
}

/// Like [`exhaustive_instances`] without materializing the instances.
pub fn for_each_instance(n: usize, mut f: impl FnMut(&Graph, &VertexSet, &VertexSet)) {
    for g in Corpus::exhaustive(n).graphs().unwrap() {
        for (x, y) in separable_pairs(&g) {
            f(&g, &VertexSet::from([x]), &VertexSet::from([y]));
        }
    }
}

pub fn set(v: &[VertexId]) -> VertexSet {
    v.iter().copied().collect()
}

pub fn describe(g: &Graph, x: &VertexSet, y: &VertexSet) -> String {
    format!("edges {:?} x {:?} y {:?}", g.edges().collect::<Vec<_>>(), x, y)
}

/// All subsets of `items` with at most `max` elements, smallest first.
pub fn subsets(items: &[VertexId], max: usize) -> Vec<VertexSet> {
    (0..=max.min(items.len()))
        .flat_map(|size| impsep::oracle::combinations(items.len(), size))
        .map(|p| p.iter().map(|&i| items[i]).collect())
        .collect()
}

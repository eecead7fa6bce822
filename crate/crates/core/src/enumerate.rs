//! Enumeration of important separators of bounded excess.
//!
//! After normalizing, every important separator of excess at most `k` other
//! than `N(X)` itself is the compound witness of the attribute peeled from
//! some vertex set of at most `k` vertices. The candidate sets are scanned
//! in order of size and then lexicographically, so the output order is
//! deterministic and independent of the thread count.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::Result;
use crate::graph::{Graph, VertexId, VertexSet};
use crate::important::{is_important, normalize};
use crate::oracle::combinations;
use crate::separator::Separator;
use crate::witness::Normalized;

/// How candidate sets are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    Sequential,
    #[default]
    Parallel,
}

/// `sum_{i=0}^{k} C(n, i)`, an upper bound on the number of important
/// separators of excess at most `k` when `n` vertices are eligible.
pub fn binomial_bound(n: usize, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut term: u128 = 1;
    for i in 0..=k.min(n) {
        total = total.saturating_add(term);
        term = term.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    total
}

/// All important X-Y separators of size at most `r + k`, `r` being the
/// minimum separator size, uses parallel evaluation.
pub fn enumerate_important(g: &Graph, x: &VertexSet, y: &VertexSet, k: usize) -> Result<Vec<Separator>> {
    enumerate_important_with(g, x, y, k, Parallelism::default())
}

/// Like [`enumerate_important`] with explicit parallelism. Both modes return
/// the same list: the smallest important separator first, then the others
/// in the order their first generating set was scanned.
pub fn enumerate_important_with(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    k: usize,
    parallelism: Parallelism,
) -> Result<Vec<Separator>> {
    let (normal, smallest) = normalize(g, x, y)?;
    let view = Normalized::new(&normal, x, y)?;
    let r = view.min_size();
    let pool: Vec<VertexId> = normal
        .vertices()
        .filter(|v| !x.contains(v) && !y.contains(v) && !normal.is_undeletable(*v))
        .collect();
    let candidates: Vec<Vec<usize>> = (1..=k.min(pool.len())).flat_map(|size| combinations(pool.len(), size)).collect();

    let evaluate = |pick: &Vec<usize>| -> Result<Option<VertexSet>> {
        if !pick.iter().any(|&i| view.neighborhood().contains(&pool[i])) {
            return Ok(None);
        }
        let s: VertexSet = pick.iter().map(|&i| pool[i]).collect();
        let Some((_, cut)) = view.peel(&s, Some(k))? else {
            return Ok(None);
        };
        if cut.len() > r + k {
            return Ok(None);
        }
        let sep = Separator::new(&normal, x, y, cut)?;
        Ok(is_important(&normal, x, y, &sep)?.then(|| sep.into_cut()))
    };
    let found: Vec<Option<VertexSet>> = match parallelism {
        Parallelism::Sequential => candidates.iter().map(evaluate).collect::<Result<_>>()?,
        Parallelism::Parallel => candidates.par_iter().map(evaluate).collect::<Result<_>>()?,
    };

    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut out = Vec::new();
    for cut in std::iter::once(smallest.into_cut()).chain(found.into_iter().flatten()) {
        if seen.insert(cut.clone()) {
            out.push(Separator::new(g, x, y, cut)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[VertexId]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn bound_values() {
        assert_eq!(binomial_bound(5, 0), 1);
        assert_eq!(binomial_bound(5, 1), 6);
        assert_eq!(binomial_bound(5, 2), 16);
        assert_eq!(binomial_bound(3, 7), 8);
        assert_eq!(binomial_bound(0, 0), 1);
    }

    #[test]
    fn theta_enumeration() {
        let g = Graph::with_vertices(5, &[(1, 2), (2, 5), (1, 3), (3, 4), (4, 5)]).unwrap();
        let (x, y) = (set(&[1]), set(&[5]));
        let zero = enumerate_important(&g, &x, &y, 0).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].cut(), &set(&[2, 4]));
        let one: Vec<VertexSet> = enumerate_important(&g, &x, &y, 1).unwrap().into_iter().map(Separator::into_cut).collect();
        assert_eq!(one, vec![set(&[2, 4])]);
    }

    #[test]
    fn both_modes_agree() {
        let g = Graph::with_vertices(
            10,
            &[(1, 2), (1, 3), (2, 4), (2, 5), (3, 5), (3, 6), (4, 7), (5, 8), (6, 9), (7, 10), (8, 10), (9, 10), (4, 5)],
        )
        .unwrap();
        let (x, y) = (set(&[1]), set(&[10]));
        for k in 0..4 {
            let a = enumerate_important_with(&g, &x, &y, k, Parallelism::Sequential).unwrap();
            let b = enumerate_important_with(&g, &x, &y, k, Parallelism::Parallel).unwrap();
            assert_eq!(a, b);
        }
    }
}

//! Definitional brute-force reference implementations.
//!
//! Everything here works on its own bitmask copy of the graph and shares no
//! code with the flow or frontier algorithms, so it can serve as an
//! independent check. Running time is exponential in the number of deletable
//! vertices; inputs are capped accordingly.

pub mod canon;
pub mod corpus;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::mwc::{CutCertificate, MwcInstance};

/// Largest number of candidate cut vertices the oracle will enumerate over.
pub const MAX_CANDIDATES: usize = 24;

/// Bitmask view of a graph with at most 64 vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitGraph {
    ids: Vec<VertexId>,
    adj: Vec<u64>,
    frozen: u64,
}

impl BitGraph {
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let ids: Vec<VertexId> = g.vertices().collect();
        if ids.len() > 64 {
            return Err(Error::invalid("oracle supports at most 64 vertices"));
        }
        let pos = |v: VertexId| ids.iter().position(|&w| w == v).expect("own vertex");
        let mut adj = vec![0u64; ids.len()];
        let mut frozen = 0u64;
        for (i, &v) in ids.iter().enumerate() {
            for w in g.neighbors(v)? {
                adj[i] |= 1 << pos(w);
            }
            if g.is_undeletable(v) {
                frozen |= 1 << i;
            }
        }
        Ok(BitGraph { ids, adj, frozen })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn mask(&self, set: &VertexSet) -> Result<u64> {
        set.iter().try_fold(0u64, |m, &v| {
            let i = self.ids.iter().position(|&w| w == v).ok_or(Error::InvalidVertex(v))?;
            Ok(m | 1 << i)
        })
    }

    pub fn set(&self, mask: u64) -> VertexSet {
        bits(mask).map(|i| self.ids[i]).collect()
    }

    fn all(&self) -> u64 {
        if self.ids.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.ids.len()) - 1
        }
    }

    /// Vertices reachable from `from` avoiding `blocked`.
    pub fn reach(&self, from: u64, blocked: u64) -> u64 {
        let mut seen = from & !blocked;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for i in bits(frontier) {
                next |= self.adj[i];
            }
            next &= !blocked & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn neighborhood(&self, c: u64) -> u64 {
        bits(c).fold(0u64, |m, i| m | self.adj[i]) & !c
    }

    /// `NR(G, A, B)`.
    pub fn not_reachable(&self, a: u64, b: u64) -> u64 {
        self.all() & !self.reach(a, b) & !b
    }

    pub fn separates(&self, x: u64, y: u64, k: u64) -> bool {
        k & (x | y) == 0 && self.reach(x, k) & y == 0
    }

    pub fn is_minimal(&self, x: u64, y: u64, k: u64) -> bool {
        if !self.separates(x, y, k) {
            return false;
        }
        let rx = self.reach(x, k);
        let ry = self.reach(y, k);
        bits(k).all(|i| self.adj[i] & rx != 0 && self.adj[i] & ry != 0)
    }

    /// `Pr(G, X, Y, K)` computed literally.
    pub fn project(&self, x: u64, y: u64, k: u64) -> BitGraph {
        let drop = self.not_reachable(y, k) & !x;
        let keep: Vec<usize> = (0..self.len()).filter(|&i| drop >> i & 1 == 0).collect();
        let mut adj = vec![0u64; keep.len()];
        let mut frozen = 0u64;
        let relabel = |m: u64| -> u64 {
            keep.iter().enumerate().filter(|(_, &old)| m >> old & 1 == 1).fold(0, |acc, (new, _)| acc | 1 << new)
        };
        for (new, &old) in keep.iter().enumerate() {
            let mut row = self.adj[old];
            if x >> old & 1 == 1 {
                row |= k;
            }
            if k >> old & 1 == 1 {
                row |= x;
            }
            adj[new] = relabel(row & !drop);
            if self.frozen >> old & 1 == 1 {
                frozen |= 1 << new;
            }
        }
        BitGraph { ids: keep.iter().map(|&i| self.ids[i]).collect(), adj, frozen }
    }

    fn candidates(&self, x: u64, y: u64) -> Result<Vec<usize>> {
        let c: Vec<usize> = bits(self.all() & !x & !y & !self.frozen).collect();
        if c.len() > MAX_CANDIDATES {
            return Err(Error::invalid(format!(
                "oracle supports at most {MAX_CANDIDATES} candidate vertices"
            )));
        }
        Ok(c)
    }

    /// All X-Y separators with at most `max_size` vertices, as masks.
    pub fn separators(&self, x: u64, y: u64, max_size: usize) -> Result<Vec<u64>> {
        let cand = self.candidates(x, y)?;
        let mut out = Vec::new();
        for size in 0..=max_size.min(cand.len()) {
            for pick in combinations(cand.len(), size) {
                let k = pick.iter().fold(0u64, |m, &p| m | 1 << cand[p]);
                if self.separates(x, y, k) {
                    out.push(k);
                }
            }
        }
        Ok(out)
    }

    /// Minimal separators with at most `max_size` vertices for which no
    /// separator `K'` with `K < K'` and `|K'| <= |K|` exists.
    pub fn important(&self, x: u64, y: u64, max_size: usize) -> Result<Vec<u64>> {
        let seps = self.separators(x, y, max_size)?;
        // smallest separator size for every NR set
        let mut by_side: HashMap<u64, u32> = HashMap::new();
        for &k in &seps {
            let nr = self.not_reachable(y, k);
            let e = by_side.entry(nr).or_insert(u32::MAX);
            *e = (*e).min(k.count_ones());
        }
        Ok(seps
            .into_iter()
            .filter(|&k| self.is_minimal(x, y, k))
            .filter(|&k| {
                let nr = self.not_reachable(y, k);
                !by_side
                    .iter()
                    .any(|(&other, &size)| size <= k.count_ones() && other != nr && other & nr == nr)
            })
            .collect())
    }

    /// Smallest separator size, or `None` if X and Y cannot be separated.
    pub fn min_separator_size(&self, x: u64, y: u64) -> Result<Option<usize>> {
        let cand = self.candidates(x, y)?;
        for size in 0..=cand.len() {
            for pick in combinations(cand.len(), size) {
                let k = pick.iter().fold(0u64, |m, &p| m | 1 << cand[p]);
                if self.separates(x, y, k) {
                    return Ok(Some(size));
                }
            }
        }
        Ok(None)
    }

    /// Important separators disjoint with `s` whose size is the minimum over
    /// all separators disjoint with `s`.
    pub fn important_witnesses(&self, x: u64, y: u64, s: u64) -> Result<Vec<u64>> {
        let all = self.separators(x, y, self.len())?;
        let Some(best) = all.iter().filter(|&&k| k & s == 0).map(|k| k.count_ones()).min() else {
            return Ok(Vec::new());
        };
        Ok(self
            .important(x, y, best as usize)?
            .into_iter()
            .filter(|&k| k & s == 0 && k.count_ones() == best)
            .collect())
    }

    /// Compound witness of an attribute, following the recursive definition
    /// with brute-force important witnesses at each stage. `None` if the
    /// attribute is not well formed or some stage lacks a unique witness.
    pub fn compound_witness(&self, x: u64, y: u64, attribute: &[u64]) -> Result<Option<VertexSet>> {
        let Some((&first, rest)) = attribute.split_first() else {
            return Ok(None);
        };
        let nx = self.neighborhood(x);
        if first == 0 || first & !nx != 0 || rest.iter().any(|&s| s & nx != 0) {
            return Ok(None);
        }
        let witnesses = self.important_witnesses(x, y, first)?;
        let [k] = witnesses[..] else {
            return Ok(None);
        };
        if rest.is_empty() {
            return Ok(Some(self.set(k)));
        }
        let projected = self.project(x, y, k);
        let remap = |m: u64| -> Result<u64> { projected.mask(&self.set(m)) };
        let Ok(rest) = rest.iter().map(|&s| remap(s)).collect::<Result<Vec<_>>>() else {
            // some vertex of a later set was deleted by the projection
            return Ok(None);
        };
        projected.compound_witness(remap(x)?, remap(y)?, &rest)
    }
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// All `size`-subsets of `0..n` as ascending index vectors, in lexicographic order.
pub fn combinations(n: usize, size: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = (size <= n).then(|| (0..size).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let next = {
            let mut c = out.clone();
            let mut i = size;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if c[i] < n - size + i {
                    c[i] += 1;
                    for j in i + 1..size {
                        c[j] = c[j - 1] + 1;
                    }
                    break Some(c);
                }
            }
        };
        current = next;
        Some(out)
    })
}

fn sorted_sets(g: &BitGraph, masks: Vec<u64>) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = masks.into_iter().map(|m| g.set(m)).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Every X-Y separator of at most `max_size` deletable vertices, ordered by
/// size and then lexicographically.
pub fn oracle_separators(g: &Graph, x: &VertexSet, y: &VertexSet, max_size: usize) -> Result<Vec<VertexSet>> {
    let b = BitGraph::from_graph(g)?;
    let (xm, ym) = (b.mask(x)?, b.mask(y)?);
    if xm & ym != 0 {
        return Err(Error::invalid("X and Y overlap"));
    }
    Ok(sorted_sets(&b, b.separators(xm, ym, max_size)?))
}

/// Every important X-Y separator of at most `max_size` vertices, checked
/// against the definition over all separator pairs.
pub fn oracle_important(g: &Graph, x: &VertexSet, y: &VertexSet, max_size: usize) -> Result<Vec<VertexSet>> {
    let b = BitGraph::from_graph(g)?;
    let (xm, ym) = (b.mask(x)?, b.mask(y)?);
    if xm & ym != 0 {
        return Err(Error::invalid("X and Y overlap"));
    }
    Ok(sorted_sets(&b, b.important(xm, ym, max_size)?))
}

/// Minimum multiway cut by subset enumeration in increasing size; `None` when
/// two terminals are adjacent.
pub fn oracle_min_multiway_cut(inst: &MwcInstance) -> Result<Option<(usize, CutCertificate)>> {
    let b = BitGraph::from_graph(inst.graph())?;
    let terms: Vec<u64> = inst.terminals().iter().map(|&t| b.mask(&VertexSet::from([t]))).collect::<Result<_>>()?;
    let all_terms = terms.iter().fold(0, |m, t| m | t);
    let cand = b.candidates(all_terms, 0)?;
    for size in 0..=cand.len() {
        for pick in combinations(cand.len(), size) {
            let k = pick.iter().fold(0u64, |m, &p| m | 1 << cand[p]);
            if terms.iter().all(|&t| b.reach(t, k) & all_terms == t) {
                let cert = CutCertificate::new(inst, b.set(k))?;
                return Ok(Some((size, cert)));
            }
        }
    }
    Ok(None)
}

/// Size of a smallest isolating cut of every terminal, by brute force.
pub fn oracle_isolating_sizes(inst: &MwcInstance) -> Result<Vec<(VertexId, Option<usize>)>> {
    let b = BitGraph::from_graph(inst.graph())?;
    let all = b.mask(inst.terminals())?;
    inst.terminals()
        .iter()
        .map(|&t| {
            let tm = b.mask(&VertexSet::from([t]))?;
            Ok((t, b.min_separator_size(tm, all & !tm)?))
        })
        .collect()
}

//! Undirected simple graphs over stable vertex identifiers, and the structural
//! transformations used by the separator machinery.
//!
//! Every transformation returns a fresh [`Graph`]; identifiers of surviving
//! vertices never change.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = u32;
pub type VertexSet = BTreeSet<VertexId>;

/// Undirected simple graph with per-vertex deletability.
///
/// Vertices are kept in ascending id order and adjacency lists are sorted, so
/// every traversal is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    ids: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
    undeletable: Vec<bool>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.ids)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .field("undeletable", &self.undeletable_set())
            .finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting duplicate vertices, self-loops, parallel
    /// edges and edges with unknown endpoints.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let mut ids: Vec<VertexId> = vertices.into_iter().collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate vertex {}", w[0])));
        }
        let mut adj = vec![Vec::new(); ids.len()];
        for (u, v) in edges {
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            let iu = ids.binary_search(&u).map_err(|_| Error::InvalidVertex(u))?;
            let iv = ids.binary_search(&v).map_err(|_| Error::InvalidVertex(v))?;
            if adj[iu].contains(&iv) {
                return Err(Error::invalid(format!("duplicate edge {u}-{v}")));
            }
            adj[iu].push(iv);
            adj[iv].push(iu);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let undeletable = vec![false; ids.len()];
        Ok(Graph { ids, adj, undeletable })
    }

    /// Graph on `1..=n` with the given edges.
    pub fn with_vertices(n: u32, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        Graph::new(1..=n, edges.iter().copied())
    }

    /// Assembles a graph from index-level parts. `adj` must be symmetric,
    /// irreflexive and sorted.
    pub(crate) fn from_parts(ids: Vec<VertexId>, adj: Vec<Vec<usize>>, undeletable: Vec<bool>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(ids.len(), adj.len());
        debug_assert_eq!(ids.len(), undeletable.len());
        Graph { ids, adj, undeletable }
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.ids.iter().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.ids.iter().copied().collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(move |(i, list)| {
            list.iter()
                .filter(move |&&j| j > i)
                .map(move |&j| (self.ids[i], self.ids[j]))
        })
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.ids.binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: VertexId) -> Result<impl Iterator<Item = VertexId> + '_> {
        let i = self.index(v)?;
        Ok(self.adj[i].iter().map(move |&j| self.ids[j]))
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.adj[self.index(v)?].len())
    }

    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.adj[i].binary_search(&j).is_ok(),
            _ => false,
        }
    }

    pub fn is_undeletable(&self, v: VertexId) -> bool {
        self.index_of(v).is_some_and(|i| self.undeletable[i])
    }

    pub fn undeletable_set(&self) -> VertexSet {
        self.ids
            .iter()
            .zip(&self.undeletable)
            .filter(|(_, &u)| u)
            .map(|(&v, _)| v)
            .collect()
    }

    // ---- index-level helpers shared with the flow and separator code ----

    pub(crate) fn index_of(&self, v: VertexId) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub(crate) fn index(&self, v: VertexId) -> Result<usize> {
        self.index_of(v).ok_or(Error::InvalidVertex(v))
    }

    pub(crate) fn id(&self, i: usize) -> VertexId {
        self.ids[i]
    }

    pub(crate) fn adjacency(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub(crate) fn undeletable_at(&self, i: usize) -> bool {
        self.undeletable[i]
    }

    /// Membership mask of `set`; fails on vertices outside the graph.
    pub(crate) fn mask(&self, set: &VertexSet) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.ids.len()];
        for &v in set {
            mask[self.index(v)?] = true;
        }
        Ok(mask)
    }

    pub(crate) fn set_of(&self, mask: &[bool]) -> VertexSet {
        mask.iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| self.ids[i])
            .collect()
    }

    /// Vertices reachable from `sources` without entering `blocked`.
    pub(crate) fn reach_mask(&self, sources: &[bool], blocked: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.ids.len()];
        let mut queue = VecDeque::new();
        for i in 0..self.ids.len() {
            if sources[i] && !blocked[i] {
                seen[i] = true;
                queue.push_back(i);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] && !blocked[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Connected components of the graph, each sorted, ordered by smallest id.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.ids.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let c = out.len();
            let mut members = VertexSet::new();
            let mut stack = vec![start];
            comp[start] = c;
            while let Some(u) = stack.pop() {
                members.insert(self.ids[u]);
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = c;
                        stack.push(w);
                    }
                }
            }
            out.push(members);
        }
        out
    }

    /// `N(C)`: vertices outside `c` adjacent to some vertex of `c`.
    pub fn neighborhood(&self, c: &VertexSet) -> Result<VertexSet> {
        let mask = self.mask(c)?;
        let mut out = vec![false; self.ids.len()];
        for (i, _) in mask.iter().enumerate().filter(|(_, &m)| m) {
            for &j in &self.adj[i] {
                if !mask[j] {
                    out[j] = true;
                }
            }
        }
        Ok(self.set_of(&out))
    }

    /// `NR(G, A, B)`: vertices outside `b` not reachable from `a` in `G \ B`.
    pub fn reach_complement(&self, a: &VertexSet, b: &VertexSet) -> Result<VertexSet> {
        let (am, bm) = self.disjoint_masks(a, b)?;
        let seen = self.reach_mask(&am, &bm);
        let out: Vec<bool> = (0..self.ids.len()).map(|i| !seen[i] && !bm[i]).collect();
        Ok(self.set_of(&out))
    }

    /// `R(G, A, B)`: vertices reachable from `a` in `G \ B`.
    pub fn reachable(&self, a: &VertexSet, b: &VertexSet) -> Result<VertexSet> {
        let (am, bm) = self.disjoint_masks(a, b)?;
        Ok(self.set_of(&self.reach_mask(&am, &bm)))
    }

    fn disjoint_masks(&self, a: &VertexSet, b: &VertexSet) -> Result<(Vec<bool>, Vec<bool>)> {
        if !a.is_disjoint(b) {
            return Err(Error::invalid("source and blocking sets overlap"));
        }
        Ok((self.mask(a)?, self.mask(b)?))
    }

    /// Whether deleting `k` leaves no path between `x` and `y`. Sets that
    /// leave the graph or touch `x`/`y` are never separators.
    pub(crate) fn separates(&self, x: &VertexSet, y: &VertexSet, k: &VertexSet) -> bool {
        let (Ok(xm), Ok(ym), Ok(km)) = (self.mask(x), self.mask(y), self.mask(k)) else {
            return false;
        };
        if (0..self.ids.len()).any(|i| km[i] && (xm[i] || ym[i])) {
            return false;
        }
        let seen = self.reach_mask(&xm, &km);
        !(0..self.ids.len()).any(|i| seen[i] && ym[i])
    }

    /// Induced subgraph on the given vertex mask.
    pub(crate) fn induced_mask(&self, keep: &[bool]) -> Graph {
        let mut remap = vec![usize::MAX; self.ids.len()];
        let mut ids = Vec::new();
        let mut undeletable = Vec::new();
        for i in 0..self.ids.len() {
            if keep[i] {
                remap[i] = ids.len();
                ids.push(self.ids[i]);
                undeletable.push(self.undeletable[i]);
            }
        }
        let adj = (0..self.ids.len())
            .filter(|&i| keep[i])
            .map(|i| self.adj[i].iter().filter(|&&j| keep[j]).map(|&j| remap[j]).collect())
            .collect();
        Graph::from_parts(ids, adj, undeletable)
    }

    /// `G[S]`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        Ok(self.induced_mask(&self.mask(s)?))
    }

    /// `G \ S`.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<Graph> {
        let mask = self.mask(s)?;
        let keep: Vec<bool> = mask.iter().map(|m| !m).collect();
        Ok(self.induced_mask(&keep))
    }

    /// Replaces `s` by a single vertex `label` adjacent to `N(s)`. `label`
    /// must be a member of `s` or an unused id; it is undeletable if any
    /// member of `s` was.
    pub fn contract_set(&self, s: &VertexSet, label: VertexId) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::invalid("cannot contract an empty set"));
        }
        if self.contains(label) && !s.contains(&label) {
            return Err(Error::invalid(format!(
                "contraction label {label} collides with a surviving vertex"
            )));
        }
        let mask = self.mask(s)?;
        let frozen = (0..self.ids.len()).any(|i| mask[i] && self.undeletable[i]);
        let outside = self.neighborhood(s)?;

        let mut vertices: Vec<VertexId> = (0..self.ids.len())
            .filter(|&i| !mask[i])
            .map(|i| self.ids[i])
            .collect();
        vertices.push(label);
        let mut edges: Vec<(VertexId, VertexId)> = self
            .edges()
            .filter(|&(u, v)| !s.contains(&u) && !s.contains(&v))
            .collect();
        edges.extend(outside.iter().map(|&w| (label, w)));
        let mut g = Graph::new(vertices, edges)?;
        for i in 0..self.ids.len() {
            if !mask[i] && self.undeletable[i] {
                let j = g.index_of(self.ids[i]).expect("surviving vertex");
                g.undeletable[j] = true;
            }
        }
        if frozen {
            let j = g.index_of(label).expect("label present");
            g.undeletable[j] = true;
        }
        Ok(g)
    }

    /// Graph on `s` with the edges of `G[S]` plus an edge between any two
    /// vertices of `s` joined by a path whose interior avoids `s`.
    pub fn torso(&self, s: &VertexSet) -> Result<Graph> {
        let inside = self.mask(s)?;
        Ok(self.torso_mask(&inside))
    }

    pub(crate) fn torso_mask(&self, inside: &[bool]) -> Graph {
        let n = self.ids.len();
        let mut remap = vec![usize::MAX; n];
        let mut ids = Vec::new();
        let mut undeletable = Vec::new();
        for i in 0..n {
            if inside[i] {
                remap[i] = ids.len();
                ids.push(self.ids[i]);
                undeletable.push(self.undeletable[i]);
            }
        }
        let m = ids.len();
        let mut matrix = vec![vec![false; m]; m];
        for i in (0..n).filter(|&i| inside[i]) {
            for &j in self.adj[i].iter().filter(|&&j| inside[j]) {
                matrix[remap[i]][remap[j]] = true;
            }
        }
        // Each component of G \ S turns its attachment points into a clique.
        let mut visited = vec![false; n];
        let mut attach = vec![false; n];
        for start in 0..n {
            if inside[start] || visited[start] {
                continue;
            }
            let mut stack = vec![start];
            visited[start] = true;
            let mut touched = Vec::new();
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if inside[w] {
                        if !attach[w] {
                            attach[w] = true;
                            touched.push(w);
                        }
                    } else if !visited[w] {
                        visited[w] = true;
                        stack.push(w);
                    }
                }
            }
            for &a in &touched {
                for &b in &touched {
                    if a != b {
                        matrix[remap[a]][remap[b]] = true;
                    }
                }
                attach[a] = false;
            }
        }
        let adj = matrix
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, &e)| e).map(|(j, _)| j).collect())
            .collect();
        Graph::from_parts(ids, adj, undeletable)
    }

    /// `Pr(G, X, Y, K)`: deletes `NR(G, Y, K) \ X` and makes every vertex of
    /// `x` adjacent to every vertex of `k`.
    pub fn project(&self, x: &VertexSet, y: &VertexSet, k: &VertexSet) -> Result<Graph> {
        if !x.is_disjoint(y) {
            return Err(Error::invalid("X and Y overlap"));
        }
        self.mask(x)?;
        self.mask(y)?;
        if !self.separates(x, y, k) {
            return Err(Error::NotASeparator);
        }
        let xm = self.mask(x)?;
        let ym = self.mask(y)?;
        let km = self.mask(k)?;
        Ok(self.project_masks(&xm, &ym, &km))
    }

    /// Projection on masks; `km` must separate `xm` from `ym`.
    pub(crate) fn project_masks(&self, xm: &[bool], ym: &[bool], km: &[bool]) -> Graph {
        let n = self.ids.len();
        let from_y = self.reach_mask(ym, km);
        let keep: Vec<bool> = (0..n).map(|i| xm[i] || km[i] || from_y[i]).collect();
        let mut remap = vec![usize::MAX; n];
        let mut ids = Vec::new();
        let mut undeletable = Vec::new();
        for i in (0..n).filter(|&i| keep[i]) {
            remap[i] = ids.len();
            ids.push(self.ids[i]);
            undeletable.push(self.undeletable[i]);
        }
        let mut adj: Vec<Vec<usize>> = (0..n)
            .filter(|&i| keep[i])
            .map(|i| self.adj[i].iter().filter(|&&j| keep[j]).map(|&j| remap[j]).collect())
            .collect();
        for xi in (0..n).filter(|&i| xm[i]) {
            for ki in (0..n).filter(|&i| km[i]) {
                let (a, b) = (remap[xi], remap[ki]);
                if !adj[a].contains(&b) {
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph::from_parts(ids, adj, undeletable)
    }

    /// Marks `s` undeletable. Separator searches treat these vertices as
    /// having unbounded capacity.
    pub fn make_undeletable(&self, s: &VertexSet) -> Result<Graph> {
        let mask = self.mask(s)?;
        let mut g = self.clone();
        for (flag, m) in g.undeletable.iter_mut().zip(mask) {
            *flag |= m;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[VertexId]) -> VertexSet {
        v.iter().copied().collect()
    }

    // x=1, a=2, y=3
    fn path3() -> Graph {
        Graph::with_vertices(3, &[(1, 2), (2, 3)]).unwrap()
    }

    // x=1, a=2, b=3, c=4, y=5: x-a-y and x-b-c-y
    fn theta() -> Graph {
        Graph::with_vertices(5, &[(1, 2), (2, 5), (1, 3), (3, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(Graph::with_vertices(2, &[(1, 1)]), Err(Error::InvalidArgument(_))));
        assert!(matches!(
            Graph::with_vertices(2, &[(1, 2), (2, 1)]),
            Err(Error::InvalidArgument(_))
        ));
        assert_eq!(Graph::with_vertices(2, &[(1, 3)]).unwrap_err(), Error::InvalidVertex(3));
    }

    #[test]
    fn neighborhood_examples() {
        assert_eq!(path3().neighborhood(&set(&[1])).unwrap(), set(&[2]));
        let tri = Graph::with_vertices(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(tri.neighborhood(&set(&[1, 2])).unwrap(), set(&[3]));
        assert!(theta().neighborhood(&set(&[])).unwrap().is_empty());
        assert_eq!(path3().neighborhood(&set(&[9])), Err(Error::InvalidVertex(9)));
    }

    #[test]
    fn reach_complement_examples() {
        let g = path3();
        assert_eq!(g.reach_complement(&set(&[3]), &set(&[2])).unwrap(), set(&[1]));
        assert!(g.reach_complement(&set(&[3]), &set(&[])).unwrap().is_empty());
        assert_eq!(theta().reach_complement(&set(&[5]), &set(&[2, 4])).unwrap(), set(&[1, 3]));
        assert!(matches!(
            g.reach_complement(&set(&[2]), &set(&[2])),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn contract_examples() {
        let g = theta();
        assert_eq!(g.contract_set(&set(&[3]), 3).unwrap(), g);

        // star: center 1, leaves 2, 3, 4
        let star = Graph::with_vertices(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let c = star.contract_set(&set(&[2, 3]), 2).unwrap();
        assert_eq!(c.vertex_set(), set(&[1, 2, 4]));
        assert_eq!(c.neighbors(2).unwrap().collect::<Vec<_>>(), vec![1]);

        let c = g.contract_set(&set(&[1, 2]), 10).unwrap();
        assert_eq!(c.neighbors(10).unwrap().collect::<VertexSet>(), set(&[3, 5]));
        assert!(matches!(g.contract_set(&set(&[]), 1), Err(Error::InvalidArgument(_))));
        assert!(matches!(g.contract_set(&set(&[1, 2]), 5), Err(Error::InvalidArgument(_))));

        let frozen = g.make_undeletable(&set(&[2])).unwrap();
        assert!(frozen.contract_set(&set(&[1, 2]), 10).unwrap().is_undeletable(10));
    }

    #[test]
    fn torso_examples() {
        let g = theta();
        assert_eq!(g.torso(&g.vertex_set()).unwrap(), g);
        let t = path3().torso(&set(&[1, 3])).unwrap();
        assert_eq!(t.edges().collect::<Vec<_>>(), vec![(1, 3)]);
        let t = g.torso(&set(&[1, 2, 5])).unwrap();
        assert_eq!(t.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 5), (2, 5)]);
    }

    #[test]
    fn project_examples() {
        let g = theta();
        let p = g.project(&set(&[1]), &set(&[5]), &set(&[2, 4])).unwrap();
        assert_eq!(p.vertex_set(), set(&[1, 2, 4, 5]));
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 4), (2, 5), (4, 5)]);

        let g = path3();
        assert_eq!(g.project(&set(&[1]), &set(&[3]), &set(&[2])).unwrap(), g);

        // K = N(X): nothing is deleted
        let p = theta().project(&set(&[1]), &set(&[5]), &set(&[2, 3])).unwrap();
        assert_eq!(p, theta());

        assert_eq!(
            theta().project(&set(&[1]), &set(&[5]), &set(&[2])),
            Err(Error::NotASeparator)
        );
    }

    #[test]
    fn make_undeletable_flags() {
        let g = theta();
        assert_eq!(g.make_undeletable(&set(&[])).unwrap(), g);
        let h = g.make_undeletable(&set(&[2])).unwrap();
        assert_eq!(h.undeletable_set(), set(&[2]));
        assert_eq!(h.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn components_and_removal() {
        let g = theta().remove_vertices(&set(&[2, 3])).unwrap();
        assert_eq!(g.components(), vec![set(&[1]), set(&[4, 5])]);
    }
}

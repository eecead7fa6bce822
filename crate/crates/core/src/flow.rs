//! Internally vertex-disjoint X-Y path packing (vertex-split unit-capacity
//! network, breadth-first augmentation) and minimum vertex separators.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::separator::Separator;

const INF: u32 = u32::MAX / 4;

/// A set of X-Y paths whose interiors are pairwise disjoint on deletable
/// vertices. Each path starts at its only X vertex and ends at its only Y
/// vertex. Undeletable vertices have unbounded capacity and may be shared.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathSystem {
    paths: Vec<Vec<VertexId>>,
}

impl PathSystem {
    pub fn new(paths: Vec<Vec<VertexId>>) -> Self {
        PathSystem { paths }
    }

    pub fn paths(&self) -> &[Vec<VertexId>] {
        &self.paths
    }

    pub fn size(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

#[derive(Debug, Clone, Copy)]
struct Arc {
    to: usize,
    cap: u32,
    flow: i32,
    rev: usize,
}

/// Vertex-split flow network. Node 0 is the contracted X, node 1 the
/// contracted Y, graph index `i` maps to `2 + 2i` (in) and `3 + 2i` (out).
struct Network<'g> {
    g: &'g Graph,
    xm: Vec<bool>,
    ym: Vec<bool>,
    arcs: Vec<Vec<Arc>>,
    value: usize,
    deletable: usize,
}

const SOURCE: usize = 0;
const SINK: usize = 1;

fn node_in(i: usize) -> usize {
    2 + 2 * i
}

fn node_out(i: usize) -> usize {
    3 + 2 * i
}

fn vertex_of(node: usize) -> usize {
    (node - 2) / 2
}

impl<'g> Network<'g> {
    fn build(g: &'g Graph, x: &VertexSet, y: &VertexSet) -> Result<Self> {
        if x.is_empty() || y.is_empty() {
            return Err(Error::invalid("X and Y must be non-empty"));
        }
        if !x.is_disjoint(y) {
            return Err(Error::invalid("X and Y overlap"));
        }
        let xm = g.mask(x)?;
        let ym = g.mask(y)?;
        let n = g.vertex_count();
        let mut net = Network {
            g,
            xm,
            ym,
            arcs: vec![Vec::new(); 2 + 2 * n],
            value: 0,
            deletable: 0,
        };
        for i in 0..n {
            if net.xm[i] || net.ym[i] {
                continue;
            }
            let cap = if g.undeletable_at(i) { INF } else { 1 };
            if cap == 1 {
                net.deletable += 1;
            }
            net.add_arc(node_in(i), node_out(i), cap);
        }
        let mut from_source = vec![false; n];
        let mut to_sink = vec![false; n];
        for i in 0..n {
            for &j in g.adjacency(i) {
                match (net.terminal(i), net.terminal(j)) {
                    (Some(true), Some(false)) => return Err(Error::NoSeparatorExists),
                    (Some(_), Some(_)) => {}
                    (Some(true), None) => from_source[j] = true,
                    (None, Some(false)) => to_sink[i] = true,
                    (None, None) => net.add_arc(node_out(i), node_in(j), INF),
                    _ => {}
                }
            }
        }
        for i in 0..n {
            if from_source[i] {
                net.add_arc(SOURCE, node_in(i), INF);
            }
            if to_sink[i] {
                net.add_arc(node_out(i), SINK, INF);
            }
        }
        Ok(net)
    }

    /// `Some(true)` for X, `Some(false)` for Y.
    fn terminal(&self, i: usize) -> Option<bool> {
        if self.xm[i] {
            Some(true)
        } else if self.ym[i] {
            Some(false)
        } else {
            None
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let rf = self.arcs[to].len();
        let rt = self.arcs[from].len();
        self.arcs[from].push(Arc { to, cap, flow: 0, rev: rf });
        self.arcs[to].push(Arc { to: from, cap: 0, flow: 0, rev: rt });
    }

    fn push(&mut self, from: usize, idx: usize, amount: i32) {
        let Arc { to, rev, .. } = self.arcs[from][idx];
        self.arcs[from][idx].flow += amount;
        self.arcs[to][rev].flow -= amount;
    }

    fn residual(a: &Arc) -> i64 {
        a.cap as i64 - a.flow as i64
    }

    /// Pushes one unit along each seed path.
    fn seed(&mut self, seed: &PathSystem) -> Result<()> {
        for path in seed.paths() {
            let bad = || Error::invalid("seed path is not an X-Y path of this graph");
            if path.len() < 3 {
                return Err(bad());
            }
            let idx: Vec<usize> = path.iter().map(|&v| self.g.index(v)).collect::<Result<_>>()?;
            let (first, last) = (idx[0], idx[idx.len() - 1]);
            let inner = &idx[1..idx.len() - 1];
            if !self.xm[first] || !self.ym[last] || inner.iter().any(|&i| self.terminal(i).is_some()) {
                return Err(bad());
            }
            if idx.windows(2).any(|w| !self.g.adjacency(w[0]).contains(&w[1])) {
                return Err(bad());
            }
            let mut hops = vec![(SOURCE, node_in(inner[0]))];
            for (k, &i) in inner.iter().enumerate() {
                hops.push((node_in(i), node_out(i)));
                let next = inner.get(k + 1).map_or(SINK, |&j| node_in(j));
                hops.push((node_out(i), next));
            }
            for (from, to) in hops {
                let pos = self.arcs[from]
                    .iter()
                    .position(|a| a.to == to && a.cap > 0 && Self::residual(a) > 0)
                    .ok_or_else(bad)?;
                self.push(from, pos, 1);
            }
            self.value += 1;
        }
        Ok(())
    }

    /// One breadth-first augmentation by a single unit.
    fn augment(&mut self) -> bool {
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.arcs.len()];
        let mut seen = vec![false; self.arcs.len()];
        seen[SOURCE] = true;
        let mut queue = VecDeque::from([SOURCE]);
        'search: while let Some(u) = queue.pop_front() {
            for (k, a) in self.arcs[u].iter().enumerate() {
                if !seen[a.to] && Self::residual(a) > 0 {
                    seen[a.to] = true;
                    parent[a.to] = Some((u, k));
                    if a.to == SINK {
                        break 'search;
                    }
                    queue.push_back(a.to);
                }
            }
        }
        if !seen[SINK] {
            return false;
        }
        let mut v = SINK;
        while let Some((p, k)) = parent[v] {
            self.push(p, k, 1);
            v = p;
        }
        self.value += 1;
        true
    }

    fn maximize(&mut self) -> Result<()> {
        loop {
            if self.value > self.deletable {
                return Err(Error::NoSeparatorExists);
            }
            if !self.augment() {
                return Ok(());
            }
        }
    }

    /// Nodes reachable from the source in the residual network.
    fn residual_reach(&self) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[SOURCE] = true;
        let mut stack = vec![SOURCE];
        while let Some(u) = stack.pop() {
            for a in &self.arcs[u] {
                if !seen[a.to] && Self::residual(a) > 0 {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }

    /// Splits the current flow into paths, removing loops.
    fn decompose(&mut self) -> PathSystem {
        let g = self.g;
        let mut paths = Vec::with_capacity(self.value);
        for _ in 0..self.value {
            let mut inner: Vec<usize> = Vec::new();
            let mut node = SOURCE;
            while node != SINK {
                let k = self.arcs[node]
                    .iter()
                    .position(|a| a.cap > 0 && a.flow > 0)
                    .expect("flow conservation");
                self.push(node, k, -1);
                node = self.arcs[node][k].to;
                if node != SINK && node.is_multiple_of(2) {
                    let v = vertex_of(node);
                    if let Some(p) = inner.iter().position(|&w| w == v) {
                        inner.truncate(p);
                    }
                    inner.push(v);
                }
            }
            let first = inner[0];
            let last = inner[inner.len() - 1];
            let xv = g.adjacency(first).iter().copied().find(|&j| self.xm[j]).expect("X neighbour");
            let yv = g.adjacency(last).iter().copied().find(|&j| self.ym[j]).expect("Y neighbour");
            let mut path = Vec::with_capacity(inner.len() + 2);
            path.push(g.id(xv));
            path.extend(inner.iter().map(|&i| g.id(i)));
            path.push(g.id(yv));
            paths.push(path);
        }
        PathSystem { paths }
    }
}

/// A maximum system of internally vertex-disjoint X-Y paths.
///
/// Fails with [`Error::NoSeparatorExists`] when X is adjacent to Y or the two
/// are joined through undeletable vertices only.
pub fn max_disjoint_paths(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<PathSystem> {
    max_disjoint_paths_seeded(g, x, y, &PathSystem::default())
}

/// Like [`max_disjoint_paths`], starting from the flow given by `seed`.
pub fn max_disjoint_paths_seeded(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    seed: &PathSystem,
) -> Result<PathSystem> {
    let mut net = Network::build(g, x, y)?;
    net.seed(seed)?;
    net.maximize()?;
    Ok(net.decompose())
}

/// A minimum X-Y separator, the one closest to X.
pub fn min_separator(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<Separator> {
    let mut net = Network::build(g, x, y)?;
    net.maximize()?;
    let reach = net.residual_reach();
    let cut: VertexSet = (0..g.vertex_count())
        .filter(|&i| !net.xm[i] && !net.ym[i] && reach[node_in(i)] && !reach[node_out(i)])
        .map(|i| g.id(i))
        .collect();
    debug_assert_eq!(cut.len(), net.value);
    Separator::new(g, x, y, cut)
}

//! The unique smallest important X-Y separator, importance testing and
//! normalization.
//!
//! The smallest important separator is extracted from a maximum path system
//! by growing a frontier from Y inside the torso of the path vertices: each
//! round, every path whose first vertex adjacent to the frontier differs from
//! its last vertex outside the frontier gets the vertices in between absorbed
//! into the frontier. When the two coincide on every path, those vertices
//! form the answer.
//!
//! Undeletable vertices are handled by giving each one a separate copy per
//! path that crosses it plus one spare copy, which is enough to reproduce the
//! torso of the fully split graph.

use crate::error::{Error, Result};
use crate::flow::{max_disjoint_paths_seeded, PathSystem};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::separator::{is_minimal, Separator};

const X_NODE: usize = 0;
const Y_NODE: usize = 1;

/// The unique important X-Y separator of minimum size.
pub fn smallest_important_separator(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<Separator> {
    smallest_important_seeded(g, x, y, &PathSystem::default()).map(|(k, _)| k)
}

/// Smallest important separator together with the maximum path system it
/// was extracted from; the flow starts from `seed`.
pub(crate) fn smallest_important_seeded(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    seed: &PathSystem,
) -> Result<(Separator, PathSystem)> {
    let paths = max_disjoint_paths_seeded(g, x, y, seed)?;
    let cut = frontier_cut(g, x, y, &paths)?;
    Ok((Separator::new(g, x, y, cut)?, paths))
}

/// Contracted, copy-expanded graph on which the frontier runs.
struct Expanded {
    graph: Graph,
    /// Original vertex index behind each node (`usize::MAX` for X and Y).
    origin: Vec<usize>,
    /// Node sequence of every path, X node first, Y node last.
    routes: Vec<Vec<usize>>,
}

fn expand(g: &Graph, x: &VertexSet, y: &VertexSet, paths: &PathSystem) -> Result<Expanded> {
    let n = g.vertex_count();
    let xm = g.mask(x)?;
    let ym = g.mask(y)?;
    let inner: Vec<Vec<usize>> = paths
        .paths()
        .iter()
        .map(|p| p[1..p.len() - 1].iter().map(|&v| g.index(v)).collect())
        .collect::<Result<_>>()?;

    let mut crossings = vec![0usize; n];
    for route in &inner {
        for &i in route {
            crossings[i] += 1;
        }
    }

    let mut origin = vec![usize::MAX, usize::MAX];
    let mut nodes_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        if xm[i] {
            nodes_of[i].push(X_NODE);
        } else if ym[i] {
            nodes_of[i].push(Y_NODE);
        } else {
            let copies = if g.undeletable_at(i) && crossings[i] > 0 { crossings[i] + 1 } else { 1 };
            for _ in 0..copies {
                nodes_of[i].push(origin.len());
                origin.push(i);
            }
        }
    }

    let mut next_copy = vec![0usize; n];
    let routes = inner
        .iter()
        .map(|route| {
            let mut nodes = vec![X_NODE];
            for &i in route {
                nodes.push(nodes_of[i][next_copy[i]]);
                if nodes_of[i].len() > 1 {
                    next_copy[i] += 1;
                }
            }
            nodes.push(Y_NODE);
            nodes
        })
        .collect();

    let h = origin.len();
    let mut matrix = vec![vec![false; h]; h];
    for i in 0..n {
        for &j in g.adjacency(i).iter().filter(|&&j| j > i) {
            for &a in &nodes_of[i] {
                for &b in &nodes_of[j] {
                    if a != b {
                        matrix[a][b] = true;
                        matrix[b][a] = true;
                    }
                }
            }
        }
    }
    let adj = matrix
        .iter()
        .map(|row| row.iter().enumerate().filter(|(_, &e)| e).map(|(j, _)| j).collect())
        .collect();
    let graph = Graph::from_parts((0..h as VertexId).collect(), adj, vec![false; h]);
    Ok(Expanded { graph, origin, routes })
}

fn frontier_cut(g: &Graph, x: &VertexSet, y: &VertexSet, paths: &PathSystem) -> Result<VertexSet> {
    if paths.is_empty() {
        return Ok(VertexSet::new());
    }
    let Expanded { graph, origin, routes } = expand(g, x, y, paths)?;
    let h = graph.vertex_count();
    let mut on_path = vec![false; h];
    for route in &routes {
        for &node in route {
            on_path[node] = true;
        }
    }
    let torso = graph.torso_mask(&on_path);
    let torso_neighbors = |node: usize| {
        let t = torso.index_of(node as VertexId).expect("path node in torso");
        torso.adjacency(t).iter().map(|&w| torso.id(w) as usize).collect::<Vec<_>>()
    };

    let mut in_frontier = vec![false; h];
    let mut touches_frontier = vec![false; h];
    let absorb = |node: usize, in_frontier: &mut Vec<bool>, touches: &mut Vec<bool>| {
        in_frontier[node] = true;
        for w in torso_neighbors(node) {
            touches[w] = true;
        }
    };
    absorb(Y_NODE, &mut in_frontier, &mut touches_frontier);

    loop {
        let mut chosen = Vec::with_capacity(routes.len());
        let mut grow = Vec::new();
        for route in &routes {
            let last_outside = (0..route.len())
                .rev()
                .find(|&p| !in_frontier[route[p]])
                .expect("X node is never absorbed");
            let first_touching = (0..route.len())
                .find(|&p| touches_frontier[route[p]])
                .expect("frontier touches every path");
            debug_assert!(first_touching > 0, "X adjacent to the frontier");
            debug_assert!(first_touching <= last_outside);
            chosen.push(route[first_touching]);
            if first_touching != last_outside {
                grow.extend_from_slice(&route[first_touching + 1..=last_outside]);
            }
        }
        if grow.is_empty() {
            return Ok(chosen
                .into_iter()
                .map(|node| {
                    let i = origin[node];
                    debug_assert!(!g.undeletable_at(i), "frontier stopped on a frozen vertex");
                    g.id(i)
                })
                .collect());
        }
        for node in grow {
            if !in_frontier[node] {
                absorb(node, &mut in_frontier, &mut touches_frontier);
            }
        }
    }
}

/// Whether a minimal separator is important: in `Pr(G, X, Y, K)` the
/// smallest important separator must be `K` itself.
pub fn is_important(g: &Graph, x: &VertexSet, y: &VertexSet, k: &Separator) -> Result<bool> {
    if !is_minimal(g, x, y, k.cut()) {
        return Err(Error::NonMinimalSeparator);
    }
    let projected = g.project(x, y, k.cut())?;
    let smallest = smallest_important_separator(&projected, x, y)?;
    Ok(smallest.cut() == k.cut())
}

/// Projects `g` onto its smallest important separator `K*`. In the result
/// `N(X) = K*` is the only minimum separator and the important separators
/// are those of `g`. The returned separator is certified in the result.
pub fn normalize(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<(Graph, Separator)> {
    let smallest = smallest_important_separator(g, x, y)?;
    let projected = g.project(x, y, smallest.cut())?;
    let k = Separator::new(&projected, x, y, smallest.into_cut())?;
    Ok((projected, k))
}

/// `N(X)` is the only minimum X-Y separator.
pub fn is_normalized(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<bool> {
    let nx = g.neighborhood(x)?;
    if !nx.is_disjoint(y) || nx.iter().any(|&v| g.is_undeletable(v)) {
        return Ok(false);
    }
    match smallest_important_separator(g, x, y) {
        Ok(k) => Ok(k.cut() == &nx),
        Err(Error::NoSeparatorExists) => Ok(false),
        Err(e) => Err(e),
    }
}

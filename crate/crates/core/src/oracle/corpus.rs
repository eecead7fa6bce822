//! Test corpora: every small connected graph, or seeded random graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::format::GraphFile;
use crate::graph::{Graph, VertexId, VertexSet};
use crate::oracle::canon;

/// Largest graph size for exhaustive corpora.
pub const MAX_EXHAUSTIVE_N: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// One graph per isomorphism class of connected graphs on `1..=n`
    /// vertices, each with every ordered pair of distinct non-adjacent
    /// singletons as `x`, `y`.
    Exhaustive,
    /// `count` graphs `G(n', p)` with `n'` drawn from `min_n..=n`, each with
    /// one random `x`, `y` pair and terminal set.
    Random,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Corpus {
    pub seed: u64,
    pub mode: Mode,
    pub n: usize,
    pub min_n: usize,
    pub edge_prob: f64,
    pub count: usize,
    /// Terminal set size for random instances; 0 omits the `t` line.
    pub terminals: usize,
    /// Prefer pairwise non-adjacent terminals, falling back to arbitrary
    /// vertices when the graph has no large enough independent set.
    pub separated_terminals: bool,
}

impl Corpus {
    pub fn exhaustive(n: usize) -> Self {
        Corpus { seed: 0, mode: Mode::Exhaustive, n, min_n: 1, edge_prob: 0.0, count: 0, terminals: 0, separated_terminals: false }
    }

    pub fn random(seed: u64, min_n: usize, n: usize, edge_prob: f64, count: usize) -> Self {
        Corpus { seed, mode: Mode::Random, n, min_n, edge_prob, count, terminals: 0, separated_terminals: false }
    }

    pub fn with_terminals(mut self, terminals: usize) -> Self {
        self.terminals = terminals;
        self
    }

    pub fn with_separated_terminals(mut self) -> Self {
        self.separated_terminals = true;
        self
    }

    fn validate(&self) -> Result<()> {
        match self.mode {
            Mode::Exhaustive if self.n > MAX_EXHAUSTIVE_N => {
                Err(Error::invalid(format!("exhaustive corpora stop at n = {MAX_EXHAUSTIVE_N}")))
            }
            Mode::Random if self.min_n == 0 || self.min_n > self.n => Err(Error::invalid("need 1 <= min_n <= n")),
            Mode::Random if !(0.0..=1.0).contains(&self.edge_prob) => Err(Error::invalid("edge probability outside [0, 1]")),
            _ => Ok(()),
        }
    }

    /// The corpus graphs on vertex ids `1..=n'`.
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        self.validate()?;
        Ok(match self.mode {
            Mode::Exhaustive => (1..=self.n)
                .flat_map(|n| canon::connected_graphs(n).into_iter().map(move |c| canon::to_graph(n, c)))
                .collect(),
            Mode::Random => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                (0..self.count).map(|_| random_graph(&mut rng, self.min_n, self.n, self.edge_prob)).collect()
            }
        })
    }

    /// The corpus as instance files.
    pub fn instances(&self) -> Result<Vec<GraphFile>> {
        self.validate()?;
        match self.mode {
            Mode::Exhaustive => Ok(self
                .graphs()?
                .into_iter()
                .flat_map(|g| {
                    let pairs = separable_pairs(&g);
                    pairs.into_iter().map(move |(x, y)| GraphFile {
                        graph: g.clone(),
                        x: Some(VertexSet::from([x])),
                        y: Some(VertexSet::from([y])),
                        terminals: None,
                    })
                })
                .collect()),
            Mode::Random => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                Ok((0..self.count)
                    .map(|_| {
                        let graph = random_graph(&mut rng, self.min_n, self.n, self.edge_prob);
                        let ids: Vec<VertexId> = graph.vertices().collect();
                        let pair = random_pair(&mut rng, &graph);
                        let terminals = (self.terminals >= 2 && self.terminals <= ids.len()).then(|| {
                            if self.separated_terminals {
                                spread_terminals(&mut rng, &graph, self.terminals)
                            } else {
                                ids.choose_multiple(&mut rng, self.terminals).copied().collect()
                            }
                        });
                        GraphFile {
                            x: pair.map(|(x, _)| VertexSet::from([x])),
                            y: pair.map(|(_, y)| VertexSet::from([y])),
                            terminals,
                            graph,
                        }
                    })
                    .collect())
            }
        }
    }
}

fn random_graph(rng: &mut ChaCha8Rng, min_n: usize, n: usize, p: f64) -> Graph {
    let size = rng.gen_range(min_n..=n) as VertexId;
    let mut edges = Vec::new();
    for u in 1..=size {
        for v in u + 1..=size {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::with_vertices(size, &edges).expect("generated graphs are simple")
}

/// Ordered pairs of distinct non-adjacent vertices.
pub fn separable_pairs(g: &Graph) -> Vec<(VertexId, VertexId)> {
    let ids: Vec<VertexId> = g.vertices().collect();
    ids.iter()
        .flat_map(|&x| ids.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| x != y && !g.is_adjacent(x, y))
        .collect()
}

/// Greedy independent set in random order, topped up with other vertices.
fn spread_terminals(rng: &mut ChaCha8Rng, g: &Graph, count: usize) -> VertexSet {
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.shuffle(rng);
    let mut picked = VertexSet::new();
    for &v in &order {
        if picked.len() < count && picked.iter().all(|&u| !g.is_adjacent(u, v)) {
            picked.insert(v);
        }
    }
    for &v in &order {
        if picked.len() < count {
            picked.insert(v);
        }
    }
    picked
}

fn random_pair(rng: &mut ChaCha8Rng, g: &Graph) -> Option<(VertexId, VertexId)> {
    separable_pairs(g).choose(rng).copied()
}

//! Witness calculus on X-Y normalized graphs.
//!
//! In a normalized graph `N(X)` is the only minimum separator. For
//! `S ⊆ N(X)` the important witness `K(S)` is the unique important separator
//! among the smallest separators avoiding `S`; it is found as the smallest
//! important separator once `S` is made undeletable. Compound witnesses
//! chain this through successive projections: `K(S1)`, then `K(S2)` in
//! `Pr(G, X, Y, K(S1))`, and so on.

use crate::error::{Error, Result};
use crate::flow::PathSystem;
use crate::graph::{Graph, VertexSet};
use crate::important::smallest_important_seeded;
use crate::separator::Separator;

/// Excess of a separator over the minimum separator size, or infinity when no
/// separator with the required property exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExcessValue {
    Finite(usize),
    Infinite,
}

impl ExcessValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            ExcessValue::Finite(e) => Some(e),
            ExcessValue::Infinite => None,
        }
    }
}

/// Ordered sequence of pairwise-disjoint non-empty vertex sets naming a
/// compound witness. Well-formedness relative to a graph is only established
/// by [`Normalized::compound_witness`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Attribute {
    sets: Vec<VertexSet>,
}

impl Attribute {
    pub fn new(sets: Vec<VertexSet>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::invalid("an attribute has at least one set"));
        }
        if sets.iter().any(VertexSet::is_empty) {
            return Err(Error::invalid("attribute sets must be non-empty"));
        }
        for (i, a) in sets.iter().enumerate() {
            if sets[i + 1..].iter().any(|b| !a.is_disjoint(b)) {
                return Err(Error::invalid("attribute sets must be pairwise disjoint"));
            }
        }
        Ok(Attribute { sets })
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    /// Total number of vertices over all sets.
    pub fn rank(&self) -> usize {
        self.sets.iter().map(VertexSet::len).sum()
    }

    pub fn union(&self) -> VertexSet {
        self.sets.iter().flatten().copied().collect()
    }
}

/// One step of the witness chain: the stage graph (with the current set
/// frozen), its smallest important separator and the path system behind it.
#[derive(Debug, Clone)]
struct Stage {
    graph: Graph,
    cut: VertexSet,
    paths: PathSystem,
}

/// A graph verified to be X-Y normalized, with the witness operations.
#[derive(Debug, Clone)]
pub struct Normalized<'a> {
    graph: &'a Graph,
    x: &'a VertexSet,
    y: &'a VertexSet,
    base: Stage,
}

impl<'a> Normalized<'a> {
    /// Fails with [`Error::NotNormalized`] unless `N(X)` is the only minimum
    /// X-Y separator of `g`.
    pub fn new(graph: &'a Graph, x: &'a VertexSet, y: &'a VertexSet) -> Result<Self> {
        let nx = graph.neighborhood(x)?;
        if !nx.is_disjoint(y) || nx.iter().any(|&v| graph.is_undeletable(v)) {
            return Err(Error::NotNormalized);
        }
        let (k, paths) = match smallest_important_seeded(graph, x, y, &PathSystem::default()) {
            Ok(found) => found,
            Err(Error::NoSeparatorExists) => return Err(Error::NotNormalized),
            Err(e) => return Err(e),
        };
        if k.cut() != &nx {
            return Err(Error::NotNormalized);
        }
        let base = Stage { graph: graph.clone(), cut: nx, paths };
        Ok(Normalized { graph, x, y, base })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    /// `N(X)`, the unique minimum separator.
    pub fn neighborhood(&self) -> &VertexSet {
        &self.base.cut
    }

    /// Minimum separator size.
    pub fn min_size(&self) -> usize {
        self.base.cut.len()
    }

    /// Projects the previous stage onto its separator, freezes `s` and finds
    /// the smallest important separator there. The previous paths, rerouted
    /// from X straight to their separator vertex, seed the flow.
    fn advance(&self, prev: &Stage, s: &VertexSet) -> Result<Option<Stage>> {
        let projected = prev.graph.project(self.x, self.y, &prev.cut)?;
        let graph = projected.make_undeletable(s)?;
        let seed = PathSystem::new(
            prev.paths
                .paths()
                .iter()
                .map(|p| {
                    let at = p.iter().position(|v| prev.cut.contains(v)).expect("path crosses the cut");
                    std::iter::once(p[0]).chain(p[at..].iter().copied()).collect()
                })
                .collect(),
        );
        match smallest_important_seeded(&graph, self.x, self.y, &seed) {
            Ok((k, paths)) => Ok(Some(Stage { graph, cut: k.into_cut(), paths })),
            Err(Error::NoSeparatorExists) => Ok(None),
            Err(e) => Err(e),
        }
    }

    fn certify(&self, cut: VertexSet) -> Result<Separator> {
        Separator::new(self.graph, self.x, self.y, cut)
    }

    /// `K(S)`: `None` when the cover excess of `s` is infinite.
    pub fn important_witness(&self, s: &VertexSet) -> Result<Option<Separator>> {
        if !s.is_subset(&self.base.cut) {
            return Err(Error::NotInNeighborhood);
        }
        match self.advance(&self.base, s)? {
            Some(stage) => Ok(Some(self.certify(stage.cut)?)),
            None => Ok(None),
        }
    }

    /// Excess of the smallest separator disjoint with `s`.
    pub fn cover_excess(&self, s: &VertexSet) -> Result<ExcessValue> {
        Ok(match self.important_witness(s)? {
            Some(k) => ExcessValue::Finite(k.len() - self.min_size()),
            None => ExcessValue::Infinite,
        })
    }

    /// The unique well-formed attribute corresponding to `s`, peeled as
    /// `S1 = S ∩ N(X)` and recursively in the projection on `K(S1)`.
    /// `None` when `s` corresponds to no well-formed attribute.
    pub fn attribute_of(&self, s: &VertexSet) -> Result<Option<Attribute>> {
        Ok(self.peel(s, None)?.map(|(attr, _)| attr))
    }

    /// Peels `s` and returns the attribute with its compound witness. With
    /// `max_excess`, gives up once a stage separator exceeds it (stage sizes
    /// only grow along the chain).
    pub(crate) fn peel(&self, s: &VertexSet, max_excess: Option<usize>) -> Result<Option<(Attribute, VertexSet)>> {
        if s.is_empty() {
            return Ok(None);
        }
        let mut remaining = s.clone();
        let mut sets = Vec::new();
        let mut stage = self.base.clone();
        loop {
            let layer: VertexSet = remaining.intersection(&stage.cut).copied().collect();
            if layer.is_empty() {
                return Ok(None);
            }
            let Some(next) = self.advance(&stage, &layer)? else {
                return Ok(None);
            };
            if max_excess.is_some_and(|k| next.cut.len() > self.min_size() + k) {
                return Ok(None);
            }
            remaining.retain(|v| !layer.contains(v));
            sets.push(layer);
            stage = next;
            if remaining.is_empty() {
                return Ok(Some((Attribute { sets }, stage.cut)));
            }
        }
    }

    /// The compound witness of `attr`, or `None` when the attribute is not
    /// well formed here or some stage has infinite cover excess.
    pub fn compound_witness(&self, attr: &Attribute) -> Result<Option<Separator>> {
        Ok(self.compound_witness_trace(attr)?.map(|(k, _)| k))
    }

    /// Like [`Normalized::compound_witness`], also reporting the flow value
    /// of every stage, starting with the minimum separator size.
    pub fn compound_witness_trace(&self, attr: &Attribute) -> Result<Option<(Separator, Vec<usize>)>> {
        let mut earlier: Vec<VertexSet> = Vec::new();
        let mut stage = self.base.clone();
        let mut flows = vec![stage.paths.size()];
        for s in attr.sets() {
            if !s.is_subset(&stage.cut) {
                return Ok(None);
            }
            // a later set must avoid the neighbourhoods of X in all earlier stages
            if earlier.iter().any(|k| !k.is_disjoint(s)) {
                return Ok(None);
            }
            let Some(next) = self.advance(&stage, s)? else {
                return Ok(None);
            };
            earlier.push(std::mem::replace(&mut stage, next).cut);
            flows.push(stage.paths.size());
        }
        Ok(Some((self.certify(stage.cut)?, flows)))
    }
}

/// Cover excess of `s ⊆ N(X)` in the normalized graph `g`.
pub fn cover_excess(g: &Graph, x: &VertexSet, y: &VertexSet, s: &VertexSet) -> Result<ExcessValue> {
    Normalized::new(g, x, y)?.cover_excess(s)
}

/// Important witness `K(S)`; `None` when `s` has infinite cover excess.
pub fn important_witness(g: &Graph, x: &VertexSet, y: &VertexSet, s: &VertexSet) -> Result<Option<Separator>> {
    Normalized::new(g, x, y)?.important_witness(s)
}

pub fn attribute_of(g: &Graph, x: &VertexSet, y: &VertexSet, s: &VertexSet) -> Result<Option<Attribute>> {
    Normalized::new(g, x, y)?.attribute_of(s)
}

pub fn compound_witness(g: &Graph, x: &VertexSet, y: &VertexSet, attr: &Attribute) -> Result<Option<Separator>> {
    Normalized::new(g, x, y)?.compound_witness(attr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;
    use crate::important::normalize;

    fn set(v: &[VertexId]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn theta() -> Graph {
        Graph::with_vertices(5, &[(1, 2), (2, 5), (1, 3), (3, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn attribute_invariants() {
        assert!(Attribute::new(vec![]).is_err());
        assert!(Attribute::new(vec![set(&[])]).is_err());
        assert!(Attribute::new(vec![set(&[1, 2]), set(&[2])]).is_err());
        let a = Attribute::new(vec![set(&[1, 2]), set(&[3])]).unwrap();
        assert_eq!(a.rank(), 3);
        assert_eq!(a.union(), set(&[1, 2, 3]));
    }

    #[test]
    fn rejects_unnormalized_input() {
        let (x, y) = (set(&[1]), set(&[5]));
        assert_eq!(cover_excess(&theta(), &x, &y, &set(&[])).unwrap_err(), Error::NotNormalized);
        let (n, _) = normalize(&theta(), &x, &y).unwrap();
        assert_eq!(cover_excess(&n, &x, &y, &set(&[5])).unwrap_err(), Error::NotInNeighborhood);
    }

    #[test]
    fn normalized_theta() {
        let (x, y) = (set(&[1]), set(&[5]));
        let (n, _) = normalize(&theta(), &x, &y).unwrap();
        let view = Normalized::new(&n, &x, &y).unwrap();
        assert_eq!(view.cover_excess(&set(&[])).unwrap(), ExcessValue::Finite(0));
        assert_eq!(view.important_witness(&set(&[])).unwrap().unwrap().cut(), &set(&[2, 4]));
        // 2 is adjacent to y
        assert_eq!(view.cover_excess(&set(&[2])).unwrap(), ExcessValue::Infinite);
        assert!(view.important_witness(&set(&[2])).unwrap().is_none());
    }

    // x=1, N(x) = {2, 3}, layers {4,5,6}, {7,8,9}, each of 7, 8, 9 with two
    // private routes into y=10
    fn layered() -> Graph {
        Graph::with_vertices(
            16,
            &[
                (1, 2), (1, 3), (2, 4), (2, 5), (3, 5), (3, 6), (4, 7), (5, 8), (6, 9),
                (7, 11), (7, 12), (8, 13), (8, 14), (9, 15), (9, 16),
                (11, 10), (12, 10), (13, 10), (14, 10), (15, 10), (16, 10),
            ],
        )
        .unwrap()
    }

    #[test]
    fn witness_in_deeper_instance() {
        let (x, y) = (set(&[1]), set(&[10]));
        let g = layered();
        let view = Normalized::new(&g, &x, &y).unwrap();
        assert_eq!(view.neighborhood(), &set(&[2, 3]));
        assert_eq!(view.important_witness(&set(&[2])).unwrap().unwrap().cut(), &set(&[7, 8, 9]));
        assert_eq!(view.cover_excess(&set(&[2])).unwrap(), ExcessValue::Finite(1));
        assert_eq!(view.important_witness(&set(&[2, 3])).unwrap().unwrap().cut(), &set(&[7, 8, 9]));
    }

    #[test]
    fn attribute_examples() {
        let (x, y) = (set(&[1]), set(&[10]));
        let g = layered();
        let view = Normalized::new(&g, &x, &y).unwrap();
        assert_eq!(view.attribute_of(&set(&[])).unwrap(), None);
        assert_eq!(view.attribute_of(&set(&[4])).unwrap(), None);
        assert_eq!(view.attribute_of(&set(&[2, 4])).unwrap(), None);
        assert_eq!(
            view.attribute_of(&set(&[2])).unwrap(),
            Some(Attribute::new(vec![set(&[2])]).unwrap())
        );
        assert_eq!(
            view.attribute_of(&set(&[2, 7])).unwrap(),
            Some(Attribute::new(vec![set(&[2]), set(&[7])]).unwrap())
        );
        // 11 is adjacent to y once 7 is frozen
        assert_eq!(view.attribute_of(&set(&[2, 7, 11])).unwrap(), None);
    }

    #[test]
    fn compound_witness_examples() {
        let (x, y) = (set(&[1]), set(&[10]));
        let g = layered();
        let view = Normalized::new(&g, &x, &y).unwrap();
        let single = Attribute::new(vec![set(&[2])]).unwrap();
        assert_eq!(
            view.compound_witness(&single).unwrap(),
            view.important_witness(&set(&[2])).unwrap()
        );
        let not_subset = Attribute::new(vec![set(&[2]), set(&[5])]).unwrap();
        assert_eq!(view.compound_witness(&not_subset).unwrap(), None);
        let back_in_nx = Attribute::new(vec![set(&[2]), set(&[3])]).unwrap();
        assert_eq!(view.compound_witness(&back_in_nx).unwrap(), None);
        let deep = Attribute::new(vec![set(&[2]), set(&[7])]).unwrap();
        let (k, flows) = view.compound_witness_trace(&deep).unwrap().unwrap();
        assert_eq!(k.cut(), &set(&[8, 9, 11, 12]));
        assert_eq!(flows, vec![2, 3, 4]);
    }
}

//! Vertex multiway cut by branching on important isolating separators.
//!
//! For a terminal `t` an isolating cut separates `t` from the other
//! terminals. Some component of a solution's remainder contains `t`, and the
//! cut around it can be pushed to an important isolating separator. With
//! `m` the largest minimum isolating cut over all terminals, a cut of size
//! `m + k` only needs important separators of excess at most `k`.

use rayon::prelude::*;

use crate::enumerate::{enumerate_important_with, Parallelism};
use crate::error::{Error, Result};
use crate::flow::min_separator;
use crate::graph::{Graph, VertexId, VertexSet};
use crate::important::smallest_important_separator;
use crate::separator::Separator;

/// A graph with at least two terminals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MwcInstance {
    graph: Graph,
    terminals: VertexSet,
}

impl MwcInstance {
    pub fn new(graph: Graph, terminals: VertexSet) -> Result<Self> {
        if terminals.len() < 2 {
            return Err(Error::invalid("at least two distinct terminals are required"));
        }
        if let Some(&t) = terminals.iter().find(|&&t| !graph.contains(t)) {
            return Err(Error::InvalidVertex(t));
        }
        Ok(MwcInstance { graph, terminals })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn terminals(&self) -> &VertexSet {
        &self.terminals
    }

    /// The terminal set without `t`.
    fn others(&self, t: VertexId) -> VertexSet {
        self.terminals.iter().copied().filter(|&u| u != t).collect()
    }

    /// Smallest pair of adjacent terminals.
    fn adjacent_terminals(&self) -> Option<(VertexId, VertexId)> {
        let ts: Vec<VertexId> = self.terminals.iter().copied().collect();
        ts.iter()
            .enumerate()
            .flat_map(|(i, &u)| ts[i + 1..].iter().map(move |&v| (u, v)))
            .find(|&(u, v)| self.graph.is_adjacent(u, v))
    }
}

/// A verified multiway cut together with the components it leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCertificate {
    cut: VertexSet,
    components: Vec<VertexSet>,
}

impl CutCertificate {
    /// Checks that `cut` avoids the terminals and leaves no two terminals in
    /// a common component.
    pub fn new(inst: &MwcInstance, cut: VertexSet) -> Result<Self> {
        if !cut.is_disjoint(inst.terminals()) {
            return Err(Error::invalid("a multiway cut cannot contain terminals"));
        }
        let components = inst.graph().remove_vertices(&cut)?.components();
        for c in &components {
            if c.intersection(inst.terminals()).nth(1).is_some() {
                return Err(Error::invalid("two terminals remain connected"));
            }
        }
        Ok(CutCertificate { cut, components })
    }

    pub fn cut(&self) -> &VertexSet {
        &self.cut
    }

    pub fn into_cut(self) -> VertexSet {
        self.cut
    }

    /// Components of the graph with the cut deleted.
    pub fn components(&self) -> &[VertexSet] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.cut.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cut.is_empty()
    }
}

/// Minimum separator of `{t}` from the other terminals.
pub fn min_isolating_cut(inst: &MwcInstance, t: VertexId) -> Result<Separator> {
    if !inst.terminals().contains(&t) {
        return Err(Error::invalid(format!("{t} is not a terminal")));
    }
    min_separator(inst.graph(), &VertexSet::from([t]), &inst.others(t))
}

/// `m = max_t |minimum isolating cut of t|` and the terminal attaining it,
/// the smallest id on ties.
pub fn lower_bound_m(inst: &MwcInstance) -> Result<(usize, VertexId)> {
    if let Some((u, v)) = inst.adjacent_terminals() {
        return Err(Error::AdjacentTerminals(u, v));
    }
    let mut best: Option<(usize, VertexId)> = None;
    for &t in inst.terminals() {
        let m = min_isolating_cut(inst, t)?.len();
        if best.is_none_or(|(b, _)| m > b) {
            best = Some((m, t));
        }
    }
    Ok(best.expect("at least two terminals"))
}

/// Restricts to components holding at least two terminals.
fn trim(g: &Graph, terminals: &VertexSet) -> Result<(Graph, VertexSet)> {
    let keep: VertexSet = g
        .components()
        .into_iter()
        .filter(|c| c.intersection(terminals).nth(1).is_some())
        .flatten()
        .collect();
    let terms = terminals.intersection(&keep).copied().collect();
    Ok((g.induced_subgraph(&keep)?, terms))
}

fn branch(g: &Graph, terminals: &VertexSet, budget: usize) -> Result<Option<VertexSet>> {
    let (g, terminals) = trim(g, terminals)?;
    if terminals.len() < 2 {
        return Ok(Some(VertexSet::new()));
    }
    let inst = MwcInstance::new(g, terminals)?;
    let (m, t) = match lower_bound_m(&inst) {
        Ok(found) => found,
        Err(Error::AdjacentTerminals(..)) => return Ok(None),
        Err(e) => return Err(e),
    };
    if m > budget {
        return Ok(None);
    }
    let others = inst.others(t);
    let cuts = enumerate_important_with(inst.graph(), &VertexSet::from([t]), &others, budget - m, Parallelism::Sequential)?;
    for k in cuts {
        let rest = inst.graph().remove_vertices(k.cut())?;
        if let Some(mut sol) = branch(&rest, &others, budget - k.len())? {
            sol.extend(k.cut());
            return Ok(Some(sol));
        }
    }
    Ok(None)
}

/// A multiway cut of at most `budget` vertices, or `None` if there is none
/// (including when two terminals are adjacent).
pub fn solve_budget(inst: &MwcInstance, budget: usize) -> Result<Option<CutCertificate>> {
    match branch(inst.graph(), inst.terminals(), budget)? {
        Some(cut) => Ok(Some(CutCertificate::new(inst, cut)?)),
        None => Ok(None),
    }
}

/// A multiway cut of size at most `m + k`, or `None`. Fails with
/// [`Error::AdjacentTerminals`] when no multiway cut exists at all.
pub fn solve_above_guarantee(inst: &MwcInstance, k: usize) -> Result<Option<CutCertificate>> {
    solve_above_guarantee_with(inst, k, Parallelism::default())
}

/// Like [`solve_above_guarantee`]; in parallel mode the top-level branches
/// run concurrently and the first successful one in branch order is kept,
/// so both modes return the same certificate.
pub fn solve_above_guarantee_with(
    inst: &MwcInstance,
    k: usize,
    parallelism: Parallelism,
) -> Result<Option<CutCertificate>> {
    let (m, t) = lower_bound_m(inst)?;
    let tset = VertexSet::from([t]);
    let others = inst.others(t);
    if k == 0 {
        let sis = smallest_important_separator(inst.graph(), &tset, &others)?;
        return Ok(CutCertificate::new(inst, sis.into_cut()).ok());
    }
    let cuts = enumerate_important_with(inst.graph(), &tset, &others, k, parallelism)?;
    let attempt = |sep: &Separator| -> Result<Option<VertexSet>> {
        let rest = inst.graph().remove_vertices(sep.cut())?;
        Ok(branch(&rest, &others, m + k - sep.len())?.map(|mut sol| {
            sol.extend(sep.cut());
            sol
        }))
    };
    let found = match parallelism {
        Parallelism::Sequential => cuts.iter().map(attempt).find_map(Result::transpose),
        Parallelism::Parallel => cuts.par_iter().map(attempt).find_map_first(Result::transpose),
    };
    match found.transpose()? {
        Some(cut) => Ok(Some(CutCertificate::new(inst, cut)?)),
        None => Ok(None),
    }
}

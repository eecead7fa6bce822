//! Certified X-Y separators and the separator partial order.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A set of deletable vertices, disjoint from X and Y, whose deletion leaves
/// no X-Y path. `x_side` is `NR(G, Y, cut)`; `y_side` is everything reachable
/// from Y once the cut is deleted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separator {
    cut: VertexSet,
    x_side: VertexSet,
    y_side: VertexSet,
}

impl Separator {
    /// Certifies `cut` as an X-Y separator of `g`.
    pub fn new(g: &Graph, x: &VertexSet, y: &VertexSet, cut: VertexSet) -> Result<Self> {
        if !x.is_disjoint(y) {
            return Err(Error::invalid("X and Y overlap"));
        }
        let xm = g.mask(x)?;
        let ym = g.mask(y)?;
        let km = g.mask(&cut)?;
        let n = g.vertex_count();
        if (0..n).any(|i| km[i] && (xm[i] || ym[i] || g.undeletable_at(i))) {
            return Err(Error::NotASeparator);
        }
        let from_y = g.reach_mask(&ym, &km);
        let x_side: Vec<bool> = (0..n).map(|i| !from_y[i] && !km[i]).collect();
        if (0..n).any(|i| xm[i] && !x_side[i]) {
            return Err(Error::NotASeparator);
        }
        Ok(Separator {
            cut,
            x_side: g.set_of(&x_side),
            y_side: g.set_of(&from_y),
        })
    }

    pub fn cut(&self) -> &VertexSet {
        &self.cut
    }

    pub fn into_cut(self) -> VertexSet {
        self.cut
    }

    /// `NR(G, Y, cut)`.
    pub fn x_side(&self) -> &VertexSet {
        &self.x_side
    }

    pub fn y_side(&self) -> &VertexSet {
        &self.y_side
    }

    pub fn len(&self) -> usize {
        self.cut.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cut.is_empty()
    }
}

/// Verdict of [`compare`] under the order `K1 >= K2` iff
/// `NR(G, Y, K1) ⊇ NR(G, Y, K2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeparatorOrder {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// Whether deleting `k` disconnects `x` from `y`. Sets touching X or Y, or
/// leaving the graph, are not separators.
pub fn is_separator(g: &Graph, x: &VertexSet, y: &VertexSet, k: &VertexSet) -> bool {
    x.is_disjoint(y) && g.separates(x, y, k)
}

/// A separator no proper subset of which separates: every cut vertex touches
/// both the X side and the Y side.
pub fn is_minimal(g: &Graph, x: &VertexSet, y: &VertexSet, k: &VertexSet) -> bool {
    if !is_separator(g, x, y, k) {
        return false;
    }
    let (Ok(xm), Ok(ym), Ok(km)) = (g.mask(x), g.mask(y), g.mask(k)) else {
        return false;
    };
    let from_x = g.reach_mask(&xm, &km);
    let from_y = g.reach_mask(&ym, &km);
    k.iter().all(|&v| {
        let i = g.index_of(v).expect("checked by mask");
        let adj = g.adjacency(i);
        adj.iter().any(|&j| from_x[j]) && adj.iter().any(|&j| from_y[j])
    })
}

fn require_minimal(g: &Graph, x: &VertexSet, y: &VertexSet, k: &Separator) -> Result<()> {
    if is_minimal(g, x, y, k.cut()) {
        Ok(())
    } else {
        Err(Error::NonMinimalSeparator)
    }
}

/// `K1 <= K2` for minimal separators: `K1 \ K2 ⊆ NR(G, Y, K2)`.
fn below(k1: &Separator, k2: &Separator) -> bool {
    k1.cut().difference(k2.cut()).all(|v| k2.x_side().contains(v))
}

/// Orders two minimal X-Y separators.
pub fn compare(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    k1: &Separator,
    k2: &Separator,
) -> Result<SeparatorOrder> {
    require_minimal(g, x, y, k1)?;
    require_minimal(g, x, y, k2)?;
    Ok(match (below(k1, k2), below(k2, k1)) {
        (true, true) => SeparatorOrder::Equal,
        (true, false) => SeparatorOrder::Less,
        (false, true) => SeparatorOrder::Greater,
        (false, false) => SeparatorOrder::Incomparable,
    })
}

struct Parts {
    common: VertexSet,
    top: VertexSet,
    bottom: VertexSet,
}

fn split(k1: &Separator, k2: &Separator) -> Parts {
    let common: VertexSet = k1.cut().intersection(k2.cut()).copied().collect();
    let mut top = VertexSet::new();
    let mut bottom = VertexSet::new();
    for (a, b) in [(k1, k2), (k2, k1)] {
        for &v in a.cut().difference(&common) {
            if b.x_side().contains(&v) {
                top.insert(v);
            } else {
                bottom.insert(v);
            }
        }
    }
    Parts { common, top, bottom }
}

/// `Top(K1, K2)`: the parts of each separator lying on the X side of the
/// other, plus their intersection.
pub fn top(g: &Graph, x: &VertexSet, y: &VertexSet, k1: &Separator, k2: &Separator) -> Result<Separator> {
    require_minimal(g, x, y, k1)?;
    require_minimal(g, x, y, k2)?;
    let Parts { common, top, .. } = split(k1, k2);
    Separator::new(g, x, y, top.union(&common).copied().collect())
}

/// `Bottom(K1, K2)`: dominates both inputs.
pub fn bottom(g: &Graph, x: &VertexSet, y: &VertexSet, k1: &Separator, k2: &Separator) -> Result<Separator> {
    require_minimal(g, x, y, k1)?;
    require_minimal(g, x, y, k2)?;
    let Parts { common, bottom, .. } = split(k1, k2);
    Separator::new(g, x, y, bottom.union(&common).copied().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    fn set(v: &[VertexId]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn theta() -> Graph {
        Graph::with_vertices(5, &[(1, 2), (2, 5), (1, 3), (3, 4), (4, 5)]).unwrap()
    }

    fn sep(g: &Graph, cut: &[VertexId]) -> Separator {
        Separator::new(g, &set(&[1]), &set(&[5]), set(cut)).unwrap()
    }

    #[test]
    fn certification() {
        let g = theta();
        let k = sep(&g, &[2, 4]);
        assert_eq!(k.x_side(), &set(&[1, 3]));
        assert_eq!(k.y_side(), &set(&[5]));
        assert_eq!(Separator::new(&g, &set(&[1]), &set(&[5]), set(&[2])), Err(Error::NotASeparator));
        assert_eq!(
            Separator::new(&g, &set(&[1]), &set(&[5]), set(&[1, 2, 3])),
            Err(Error::NotASeparator)
        );
        let frozen = g.make_undeletable(&set(&[2])).unwrap();
        assert_eq!(
            Separator::new(&frozen, &set(&[1]), &set(&[5]), set(&[2, 4])),
            Err(Error::NotASeparator)
        );
    }

    #[test]
    fn minimality_checks() {
        let path = Graph::with_vertices(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(is_separator(&path, &set(&[1]), &set(&[3]), &set(&[2])));
        assert!(is_minimal(&path, &set(&[1]), &set(&[3]), &set(&[2])));
        let g = theta();
        let (x, y) = (set(&[1]), set(&[5]));
        assert!(is_separator(&g, &x, &y, &set(&[2, 3, 4])));
        assert!(!is_minimal(&g, &x, &y, &set(&[2, 3, 4])));
        assert!(!is_separator(&g, &x, &y, &set(&[])));
        assert!(!is_separator(&g, &x, &y, &set(&[1, 2])));
    }

    #[test]
    fn compare_examples() {
        let g = theta();
        let (x, y) = (set(&[1]), set(&[5]));
        let ac = sep(&g, &[2, 4]);
        let ab = sep(&g, &[2, 3]);
        assert_eq!(compare(&g, &x, &y, &ac, &ac).unwrap(), SeparatorOrder::Equal);
        assert_eq!(compare(&g, &x, &y, &ac, &ab).unwrap(), SeparatorOrder::Greater);
        assert_eq!(compare(&g, &x, &y, &ab, &ac).unwrap(), SeparatorOrder::Less);
        let fat = sep(&g, &[2, 3, 4]);
        assert_eq!(compare(&g, &x, &y, &fat, &ab), Err(Error::NonMinimalSeparator));
    }

    #[test]
    fn crossing_separators() {
        // x=1, y=6; routes 1-2-4-6 and 1-3-5-6
        let g = Graph::with_vertices(6, &[(1, 2), (2, 4), (4, 6), (1, 3), (3, 5), (5, 6)]).unwrap();
        let (x, y) = (set(&[1]), set(&[6]));
        let ad = Separator::new(&g, &x, &y, set(&[2, 5])).unwrap();
        let cb = Separator::new(&g, &x, &y, set(&[3, 4])).unwrap();
        assert_eq!(compare(&g, &x, &y, &ad, &cb).unwrap(), SeparatorOrder::Incomparable);
        assert_eq!(top(&g, &x, &y, &ad, &cb).unwrap().cut(), &set(&[2, 3]));
        let b = bottom(&g, &x, &y, &ad, &cb).unwrap();
        assert_eq!(b.cut(), &set(&[4, 5]));
        assert_eq!(compare(&g, &x, &y, &b, &ad).unwrap(), SeparatorOrder::Greater);
        assert_eq!(compare(&g, &x, &y, &b, &cb).unwrap(), SeparatorOrder::Greater);
    }

    #[test]
    fn top_bottom_examples() {
        let g = theta();
        let (x, y) = (set(&[1]), set(&[5]));
        let ab = sep(&g, &[2, 3]);
        let ac = sep(&g, &[2, 4]);
        assert_eq!(top(&g, &x, &y, &ab, &ab).unwrap(), ab);
        assert_eq!(bottom(&g, &x, &y, &ab, &ab).unwrap(), ab);
        // {a,b} lies below {a,c}: Bottom keeps c, Top keeps b
        assert_eq!(bottom(&g, &x, &y, &ab, &ac).unwrap().cut(), &set(&[2, 4]));
        assert_eq!(top(&g, &x, &y, &ab, &ac).unwrap().cut(), &set(&[2, 3]));
    }
}

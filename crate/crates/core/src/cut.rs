//! Cuts, the GF(2) cut space and bonds.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, Weight};

/// A proper bipartition of the vertex set together with its cutset.
///
/// The side is stored in canonical form: the part containing vertex 0.
/// Equality and hashing look only at the canonical side.
#[derive(Clone)]
pub struct Cut {
    graph: u64,
    side: BitSet,
    cutset: BitSet,
    raw: i64,
    weight: Weight,
}

impl Cut {
    pub(crate) fn from_side_unchecked(g: &Graph, side: BitSet) -> Cut {
        let side = if side.contains(0) { side } else { side.complement() };
        let mut cutset = BitSet::new(g.m());
        let mut raw = 0;
        for (i, e) in g.edges().iter().enumerate() {
            if side.contains(e.u) != side.contains(e.v) {
                cutset.insert(i);
                raw += e.cap;
            }
        }
        Cut {
            graph: g.id(),
            side,
            cutset,
            raw,
            weight: g.to_weight(raw),
        }
    }

    /// Cut with the given vertices on one side.
    pub fn from_vertices(g: &Graph, vertices: &[Vertex]) -> Result<Cut> {
        for &v in vertices {
            g.check_vertex(v)?;
        }
        cut_from_side(g, &BitSet::from_indices(g.n(), vertices.iter().copied()))
    }

    /// Canonical side, always containing vertex 0.
    pub fn side(&self) -> &BitSet {
        &self.side
    }

    pub fn side_vertices(&self) -> Vec<Vertex> {
        self.side.iter().collect()
    }

    /// Edge-incidence vector over edge ids.
    pub fn cutset(&self) -> &BitSet {
        &self.cutset
    }

    pub fn cutset_edges(&self) -> Vec<usize> {
        self.cutset.iter().collect()
    }

    pub fn weight(&self) -> Weight {
        self.weight
    }

    pub(crate) fn raw_weight(&self) -> i64 {
        self.raw
    }

    pub fn graph_id(&self) -> u64 {
        self.graph
    }

    pub fn separates(&self, u: Vertex, v: Vertex) -> bool {
        self.side.contains(u) != self.side.contains(v)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.side.contains(v)
    }
}

impl PartialEq for Cut {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side
    }
}

impl Eq for Cut {}

impl Hash for Cut {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.side.hash(state);
    }
}

/// Non-decreasing weight, then lexicographic order of the sorted side.
impl Ord for Cut {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then_with(|| self.side.iter().cmp(other.side.iter()))
    }
}

impl PartialOrd for Cut {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Cut {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cut({} {:?})", self.weight, self.side)
    }
}

/// The cut `(s, V \ s)` in canonical form.
pub fn cut_from_side(g: &Graph, side: &BitSet) -> Result<Cut> {
    assert_eq!(side.universe(), g.n(), "side width must equal vertex count");
    if side.is_empty() {
        return Err(Error::EmptySide);
    }
    if side.is_full() {
        return Err(Error::FullSide);
    }
    Ok(Cut::from_side_unchecked(g, side.clone()))
}

/// Sum of two cut-space vectors; `None` is the zero vector.
pub fn xor(g: &Graph, a: Option<&Cut>, b: Option<&Cut>) -> Result<Option<Cut>> {
    for c in [a, b].into_iter().flatten() {
        if c.graph != g.id() {
            return Err(Error::MixedGraph);
        }
    }
    match (a, b) {
        (None, None) => Ok(None),
        (Some(c), None) | (None, Some(c)) => Ok(Some(c.clone())),
        (Some(a), Some(b)) => {
            // Both sides contain vertex 0, so their symmetric difference does
            // not; the complement restores canonical form.
            let mut side = a.side.clone();
            side.xor_with(&b.side);
            if side.is_empty() {
                Ok(None)
            } else {
                Ok(Some(Cut::from_side_unchecked(g, side)))
            }
        }
    }
}

/// True iff both sides of the cut induce connected subgraphs.
pub fn is_bond(g: &Graph, c: &Cut) -> bool {
    let side = c.side();
    let other = side.complement();
    induces_connected(g, side) && induces_connected(g, &other)
}

fn induces_connected(g: &Graph, part: &BitSet) -> bool {
    let Some(start) = part.first() else {
        return false;
    };
    let mut seen = BitSet::new(g.n());
    seen.insert(start);
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &(y, _) in g.neighbors(x) {
            if part.contains(y) && !seen.contains(y) {
                seen.insert(y);
                count += 1;
                stack.push(y);
            }
        }
    }
    count == part.count()
}

/// Incremental Gaussian elimination over GF(2).
///
/// Rows are kept reduced against all earlier pivots, so a vector is reduced
/// by a single pass over the rows in insertion order.
#[derive(Debug, Clone)]
pub(crate) struct Gf2Basis {
    width: usize,
    rows: Vec<(usize, BitSet)>,
}

impl Gf2Basis {
    pub(crate) fn new(width: usize) -> Self {
        Gf2Basis {
            width,
            rows: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &BitSet) -> BitSet {
        let mut v = v.clone();
        for (pivot, row) in &self.rows {
            if v.contains(*pivot) {
                v.xor_with(row);
            }
        }
        v
    }

    pub(crate) fn is_independent(&self, v: &BitSet) -> bool {
        debug_assert_eq!(v.universe(), self.width);
        !self.reduce(v).is_empty()
    }

    /// Adds `v` if it is independent; returns whether it was added.
    pub(crate) fn insert(&mut self, v: &BitSet) -> bool {
        let r = self.reduce(v);
        match r.first() {
            Some(pivot) => {
                self.rows.push((pivot, r));
                true
            }
            None => false,
        }
    }
}

/// An ordered list of cuts of one graph with its GF(2) span.
#[derive(Debug, Clone)]
pub struct CutFamily {
    graph: u64,
    n: usize,
    cuts: Vec<Cut>,
    span: Gf2Basis,
}

impl CutFamily {
    pub fn new(g: &Graph) -> Self {
        CutFamily {
            graph: g.id(),
            n: g.n(),
            cuts: Vec::new(),
            span: Gf2Basis::new(g.m()),
        }
    }

    pub fn from_cuts<I: IntoIterator<Item = Cut>>(g: &Graph, cuts: I) -> Result<Self> {
        let mut fam = CutFamily::new(g);
        for c in cuts {
            fam.push(c)?;
        }
        Ok(fam)
    }

    /// Appends a cut whether or not it is independent; returns independence.
    pub fn push(&mut self, c: Cut) -> Result<bool> {
        if c.graph != self.graph {
            return Err(Error::MixedGraph);
        }
        let independent = self.span.insert(&c.cutset);
        self.cuts.push(c);
        Ok(independent)
    }

    /// True iff `c` lies outside the span of the family.
    pub fn is_independent_with(&self, c: &Cut) -> bool {
        self.span.is_independent(&c.cutset)
    }

    pub fn rank(&self) -> usize {
        self.span.rank()
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    pub fn cuts(&self) -> &[Cut] {
        &self.cuts
    }

    pub fn total_weight(&self) -> Weight {
        self.cuts.iter().map(Cut::weight).sum()
    }

    /// A basis of the cut space: `n - 1` independent cuts.
    pub fn is_basis(&self) -> bool {
        self.cuts.len() == self.n - 1 && self.rank() == self.n - 1
    }

    /// Whether some member separates `s` and `t`.
    pub fn has_separating_cut(&self, s: Vertex, t: Vertex) -> bool {
        self.cuts.iter().any(|c| c.separates(s, t))
    }
}

/// GF(2) rank of the family's incidence vectors.
pub fn rank(fam: &CutFamily) -> usize {
    fam.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri() -> Graph {
        Graph::unit(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    fn p3() -> Graph {
        Graph::unit(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn vcut(g: &Graph, vs: &[usize]) -> Cut {
        Cut::from_vertices(g, vs).unwrap()
    }

    #[test]
    fn cut_from_side_examples() {
        let g = tri();
        let c = vcut(&g, &[0]);
        assert_eq!(c.cutset_edges(), vec![0, 1]);
        assert_eq!(c.weight(), Weight::from_integer(2));

        let g = p3();
        let c = vcut(&g, &[0, 2]);
        assert_eq!(c.cutset_edges(), vec![0, 1]);
        assert_eq!(c.weight(), Weight::from_integer(2));
        assert_eq!(c.side_vertices(), vec![0, 2]);
        assert_eq!(Cut::from_vertices(&g, &[0, 1, 2]).unwrap_err(), Error::FullSide);
        assert_eq!(Cut::from_vertices(&g, &[]).unwrap_err(), Error::EmptySide);
    }

    #[test]
    fn canonical_side_contains_zero() {
        let g = p3();
        let c = vcut(&g, &[1, 2]);
        assert_eq!(c.side_vertices(), vec![0]);
        assert_eq!(c, vcut(&g, &[0]));
    }

    #[test]
    fn xor_examples() {
        let g = tri();
        let a = vcut(&g, &[0]);
        assert_eq!(xor(&g, Some(&a), Some(&a)).unwrap(), None);
        let b = vcut(&g, &[1]);
        let ab = xor(&g, Some(&a), Some(&b)).unwrap().unwrap();
        assert_eq!(ab.cutset_edges(), vec![1, 2]);
        assert_eq!(ab, vcut(&g, &[0, 1]));

        let g = p3();
        let s = xor(&g, Some(&vcut(&g, &[0])), Some(&vcut(&g, &[2]))).unwrap().unwrap();
        assert_eq!(s.cutset_edges(), vec![0, 1]);
        assert_eq!(s, vcut(&g, &[1]));
        assert_eq!(xor(&g, None, None).unwrap(), None);
    }

    #[test]
    fn xor_rejects_mixed_graphs() {
        let g = tri();
        let h = tri();
        let a = vcut(&g, &[0]);
        let b = vcut(&h, &[0]);
        assert_eq!(xor(&g, Some(&a), Some(&b)).unwrap_err(), Error::MixedGraph);
    }

    #[test]
    fn rank_examples() {
        let g = tri();
        let all = CutFamily::from_cuts(&g, [0, 1, 2].map(|v| vcut(&g, &[v]))).unwrap();
        assert_eq!(rank(&all), 2);
        let two = CutFamily::from_cuts(&g, [0, 1].map(|v| vcut(&g, &[v]))).unwrap();
        assert_eq!(rank(&two), 2);
        assert!(two.is_basis());
        assert_eq!(rank(&CutFamily::new(&g)), 0);
    }

    #[test]
    fn independence_examples() {
        let g = tri();
        let mut fam = CutFamily::new(&g);
        fam.push(vcut(&g, &[0])).unwrap();
        assert!(fam.is_independent_with(&vcut(&g, &[1])));
        assert!(!fam.is_independent_with(&vcut(&g, &[0])));
        fam.push(vcut(&g, &[1])).unwrap();
        assert!(!fam.is_independent_with(&vcut(&g, &[2])));
    }

    #[test]
    fn bond_examples() {
        let g = tri();
        assert!(is_bond(&g, &vcut(&g, &[0])));
        let g = p3();
        assert!(!is_bond(&g, &vcut(&g, &[0, 2])));
        let k4 = Graph::unit(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        for pair in [[0, 1], [0, 2], [0, 3]] {
            assert!(is_bond(&k4, &vcut(&k4, &pair)));
        }
    }
}

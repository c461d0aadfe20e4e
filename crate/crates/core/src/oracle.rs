//! Exhaustive ground truth for small graphs.
//!
//! Everything here is computed from the full list of bipartitions and plain
//! GF(2) elimination; nothing depends on flows, so the results cross-check
//! the flow-based strategies independently.

use std::collections::BTreeSet;

use crate::bits::BitSet;
use crate::cut::{Cut, CutFamily, Gf2Basis};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, Weight};

/// Default vertex bound for exhaustive enumeration.
pub const DEFAULT_MAX_N: usize = 16;

/// Vertex bound for enumerating every minimum cut basis.
pub const ALL_BASES_MAX_N: usize = 6;

/// All `2^(n-1) - 1` cuts of a graph sorted by (weight, side), plus the
/// table of pairwise minimum cut weights.
#[derive(Debug, Clone)]
pub struct CutCatalog {
    graph: Graph,
    cuts: Vec<Cut>,
    min_pair: Vec<i64>,
}

impl CutCatalog {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cuts(&self) -> &[Cut] {
        &self.cuts
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    fn raw_min(&self, u: Vertex, v: Vertex) -> i64 {
        self.min_pair[u * self.graph.n() + v]
    }

    /// Minimum weight of a cut separating `u` and `v`.
    pub fn min_cut_weight(&self, u: Vertex, v: Vertex) -> Result<Weight> {
        self.graph.check_vertex(u)?;
        self.graph.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(self.graph.to_weight(self.raw_min(u, v)))
    }

    /// All minimum-weight cuts separating `s` and `t`.
    pub fn min_st_cuts(&self, s: Vertex, t: Vertex) -> Result<BTreeSet<Cut>> {
        let w = self.min_cut_weight(s, t)?;
        Ok(self
            .cuts
            .iter()
            .filter(|c| c.separates(s, t) && c.weight() == w)
            .cloned()
            .collect())
    }
}

pub fn all_cuts(g: &Graph) -> Result<CutCatalog> {
    all_cuts_bounded(g, DEFAULT_MAX_N)
}

pub fn all_cuts_bounded(g: &Graph, max_n: usize) -> Result<CutCatalog> {
    let n = g.n();
    if n > max_n || n >= 63 {
        return Err(Error::TooLarge { n, max: max_n });
    }
    let mut cuts = Vec::with_capacity((1 << (n - 1)) - 1);
    // Vertex 0 is always on the side; the remaining bits range over every
    // subset of 1..n except the full one.
    for mask in 0u64..(1 << (n - 1)) - 1 {
        let side = BitSet::from_indices(n, std::iter::once(0).chain((1..n).filter(|v| mask >> (v - 1) & 1 == 1)));
        cuts.push(Cut::from_side_unchecked(g, side));
    }
    cuts.sort();

    let mut min_pair = vec![i64::MAX; n * n];
    for c in &cuts {
        let side: Vec<Vertex> = c.side().iter().collect();
        let other: Vec<Vertex> = c.side().complement().iter().collect();
        for &u in &side {
            for &v in &other {
                let w = c.raw_weight();
                for k in [u * n + v, v * n + u] {
                    if w < min_pair[k] {
                        min_pair[k] = w;
                    }
                }
            }
        }
    }
    Ok(CutCatalog {
        graph: g.clone(),
        cuts,
        min_pair,
    })
}

/// Cuts whose weight equals the minimum cut weight of some pair they separate.
pub fn relevant_by_minpair(cat: &CutCatalog) -> BTreeSet<Cut> {
    let n = cat.graph.n();
    cat.cuts
        .iter()
        .filter(|c| {
            let other: Vec<Vertex> = c.side().complement().iter().collect();
            c.side()
                .iter()
                .any(|u| other.iter().any(|&v| cat.min_pair[u * n + v] == c.raw_weight()))
        })
        .cloned()
        .collect()
}

/// Cuts that are not in the GF(2) span of all strictly lighter cuts.
pub fn relevant_by_greedy(cat: &CutCatalog) -> BTreeSet<Cut> {
    let mut lighter = Gf2Basis::new(cat.graph.m());
    let mut out = BTreeSet::new();
    let cuts = &cat.cuts;
    let mut i = 0;
    while i < cuts.len() {
        let w = cuts[i].raw_weight();
        let j = i + cuts[i..].iter().take_while(|c| c.raw_weight() == w).count();
        for c in &cuts[i..j] {
            if lighter.is_independent(c.cutset()) {
                out.insert(c.clone());
            }
        }
        for c in &cuts[i..j] {
            lighter.insert(c.cutset());
        }
        i = j;
    }
    out
}

/// Greedy scan in (weight, side) order; the result is a minimum cut basis.
pub fn min_basis_greedy(cat: &CutCatalog) -> CutFamily {
    let g = &cat.graph;
    let mut fam = CutFamily::new(g);
    for c in &cat.cuts {
        if fam.rank() == g.n() - 1 {
            break;
        }
        if fam.is_independent_with(c) {
            fam.push(c.clone()).expect("same graph");
        }
    }
    fam
}

/// Union of every minimum cut basis, by exhaustive search. Only for
/// `n <= ALL_BASES_MAX_N`.
pub fn union_of_minimum_bases(cat: &CutCatalog) -> Result<BTreeSet<Cut>> {
    let n = cat.graph.n();
    if n > ALL_BASES_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: ALL_BASES_MAX_N,
        });
    }
    let target: i64 = min_basis_greedy(cat).cuts().iter().map(Cut::raw_weight).sum();
    let mut search = BasisSearch {
        cuts: &cat.cuts,
        need: n - 1,
        target,
        chosen: Vec::new(),
        used: vec![false; cat.cuts.len()],
    };
    search.run(0, 0, &Gf2Basis::new(cat.graph.m()));
    Ok(cat
        .cuts
        .iter()
        .zip(&search.used)
        .filter(|(_, &u)| u)
        .map(|(c, _)| c.clone())
        .collect())
}

struct BasisSearch<'a> {
    cuts: &'a [Cut],
    need: usize,
    target: i64,
    chosen: Vec<usize>,
    used: Vec<bool>,
}

impl BasisSearch<'_> {
    fn run(&mut self, from: usize, weight: i64, span: &Gf2Basis) {
        if self.chosen.len() == self.need {
            if weight == self.target {
                for &i in &self.chosen {
                    self.used[i] = true;
                }
            }
            return;
        }
        let left = self.need - self.chosen.len();
        for i in from..self.cuts.len() {
            if i + left > self.cuts.len() {
                break;
            }
            // Sorted ascending: the cheapest completion starts at i.
            let bound: i64 = weight + self.cuts[i..i + left].iter().map(Cut::raw_weight).sum::<i64>();
            if bound > self.target {
                break;
            }
            if !span.is_independent(self.cuts[i].cutset()) {
                continue;
            }
            let mut next = span.clone();
            next.insert(self.cuts[i].cutset());
            self.chosen.push(i);
            self.run(i + 1, weight + self.cuts[i].raw_weight(), &next);
            self.chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(x: i64) -> Weight {
        Weight::from_integer(x)
    }

    fn p3() -> Graph {
        Graph::unit(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn tri() -> Graph {
        Graph::unit(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::unit(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn k23() -> Graph {
        Graph::unit(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn catalog_sizes() {
        assert_eq!(all_cuts(&p3()).unwrap().len(), 3);
        assert_eq!(all_cuts(&k4()).unwrap().len(), 7);
        assert_eq!(all_cuts(&Graph::unit(2, &[(0, 1)]).unwrap()).unwrap().len(), 1);
        let weights: Vec<_> = all_cuts(&k4()).unwrap().cuts().iter().map(Cut::weight).collect();
        assert_eq!(weights, [3, 3, 3, 3, 4, 4, 4].map(int));
    }

    #[test]
    fn catalog_bound() {
        let path: Vec<_> = (0..5).map(|i| (i, i + 1)).collect();
        let g = Graph::unit(6, &path).unwrap();
        assert_eq!(all_cuts_bounded(&g, 5).unwrap_err(), Error::TooLarge { n: 6, max: 5 });
    }

    #[test]
    fn relevant_examples() {
        let cat = all_cuts(&p3()).unwrap();
        let r = relevant_by_minpair(&cat);
        assert_eq!(r.len(), 2);
        assert!(!r.iter().any(|c| c.side_vertices() == vec![0, 2]));
        assert_eq!(r, relevant_by_greedy(&cat));

        let cat = all_cuts(&tri()).unwrap();
        assert_eq!(relevant_by_minpair(&cat).len(), 3);
        assert_eq!(relevant_by_greedy(&cat).len(), 3);

        let cat = all_cuts(&k4()).unwrap();
        let r = relevant_by_minpair(&cat);
        assert_eq!(r.len(), 4);
        assert!(r.iter().all(|c| c.weight() == int(3)));
        assert_eq!(r, relevant_by_greedy(&cat));

        let cat = all_cuts(&k23()).unwrap();
        assert_eq!(relevant_by_minpair(&cat), relevant_by_greedy(&cat));
    }

    #[test]
    fn min_basis_weights() {
        for (g, w) in [(p3(), 2), (tri(), 4), (k4(), 9)] {
            let b = min_basis_greedy(&all_cuts(&g).unwrap());
            assert!(b.is_basis());
            assert_eq!(b.total_weight(), int(w));
        }
    }

    #[test]
    fn union_of_bases_matches_relevant_set() {
        for g in [p3(), tri(), k4(), k23()] {
            let cat = all_cuts(&g).unwrap();
            assert_eq!(union_of_minimum_bases(&cat).unwrap(), relevant_by_minpair(&cat));
        }
    }

    #[test]
    fn pairwise_table() {
        let cat = all_cuts(&k23()).unwrap();
        assert_eq!(cat.min_cut_weight(0, 1).unwrap(), int(3));
        assert_eq!(cat.min_cut_weight(2, 3).unwrap(), int(2));
        assert_eq!(cat.min_st_cuts(0, 1).unwrap().len(), 8);
        assert_eq!(cat.min_cut_weight(1, 1).unwrap_err(), Error::SameVertex(1));
    }
}

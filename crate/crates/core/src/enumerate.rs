//! Relevant-cut enumeration strategies.
//!
//! * `GusT`: PQ-DAGs of the Gomory-Hu tree edges only.
//! * `GusP`: for every vertex pair, PQ-DAGs of the minimum tree edges on the
//!   tree path, contracted towards the pair.
//! * `Yeh`: cuts in non-decreasing weight order, filtered by a matrix of the
//!   first weight seen separating each pair.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::bits::BitSet;
use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::flow::{constrained_min_cut, flow_calls};
use crate::gomory_hu::{build_gomory_hu, path_min_edges};
use crate::graph::{Graph, Vertex, Weight};
use crate::oracle;
use crate::pqdag::{build_pqdag, contract, enumerate_closed_sets, PqDag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    GusT,
    GusP,
    Yeh,
    /// Exhaustive catalog; small graphs only.
    Oracle,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::GusT, Method::GusP, Method::Yeh, Method::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Method::GusT => "gus-t",
            Method::GusP => "gus-p",
            Method::Yeh => "yeh",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?} (expected gus-t, gus-p, yeh or oracle)"))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    pub flow_calls: u64,
    /// PQ-DAGs built from a max flow.
    pub dags_built: u64,
    /// PQ-DAG contractions (GUS-P only).
    pub contractions: u64,
    /// Cuts produced before deduplication.
    pub cuts_emitted: u64,
    pub elapsed: Duration,
}

impl Stats {
    fn merge(&mut self, other: &Stats) {
        self.flow_calls += other.flow_calls;
        self.dags_built += other.dags_built;
        self.contractions += other.contractions;
        self.cuts_emitted += other.cuts_emitted;
        self.elapsed += other.elapsed;
    }
}

/// Deduplicated set of cuts produced by one strategy.
#[derive(Debug, Clone)]
pub struct RelevantCutSet {
    graph: u64,
    method: Method,
    cuts: HashSet<Cut>,
    pub stats: Stats,
}

impl RelevantCutSet {
    pub fn new(g: &Graph, method: Method) -> Self {
        RelevantCutSet {
            graph: g.id(),
            method,
            cuts: HashSet::new(),
            stats: Stats::default(),
        }
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    pub fn contains(&self, c: &Cut) -> bool {
        self.cuts.contains(c)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cut> {
        self.cuts.iter()
    }

    /// Cuts by non-decreasing weight, then lexicographic side.
    pub fn sorted(&self) -> Vec<Cut> {
        let mut v: Vec<Cut> = self.cuts.iter().cloned().collect();
        v.sort();
        v
    }

    /// Set equality of the cuts, ignoring method and stats.
    pub fn same_cuts(&self, other: &RelevantCutSet) -> bool {
        self.cuts == other.cuts
    }

    /// Adds a cut; returns whether it was new.
    pub fn insert(&mut self, c: Cut) -> Result<bool> {
        if c.graph_id() != self.graph {
            return Err(Error::MixedGraph);
        }
        self.stats.cuts_emitted += 1;
        Ok(self.cuts.insert(c))
    }

    /// Union with another set over the same graph; stats are summed.
    pub fn merge(&mut self, other: RelevantCutSet) -> Result<()> {
        if other.graph != self.graph {
            return Err(Error::MixedGraph);
        }
        self.stats.merge(&other.stats);
        self.cuts.extend(other.cuts);
        Ok(())
    }
}

/// Hash-set union of cut streams over `g`.
pub fn dedup_union<S, I>(g: &Graph, method: Method, streams: S) -> Result<RelevantCutSet>
where
    S: IntoIterator<Item = I>,
    I: IntoIterator<Item = Cut>,
{
    let mut out = RelevantCutSet::new(g, method);
    for stream in streams {
        for c in stream {
            out.insert(c)?;
        }
    }
    Ok(out)
}

/// Runs the chosen strategy.
pub fn relevant_cuts(g: &Graph, method: Method) -> Result<RelevantCutSet> {
    match method {
        Method::GusT => Ok(relevant_gus_t(g)),
        Method::GusP => Ok(relevant_gus_p(g)),
        Method::Yeh => Ok(relevant_yeh(g)),
        Method::Oracle => {
            let start = Instant::now();
            let cat = oracle::all_cuts_bounded(g, oracle_max_n())?;
            let mut out = dedup_union(g, Method::Oracle, [oracle::relevant_by_minpair(&cat)])?;
            out.stats.elapsed = start.elapsed();
            Ok(out)
        }
    }
}

/// Oracle vertex bound, overridable through `CUTSPACE_ORACLE_MAX_N`.
pub fn oracle_max_n() -> usize {
    std::env::var("CUTSPACE_ORACLE_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(oracle::DEFAULT_MAX_N)
}

/// Closed sets of the PQ-DAGs of every Gomory-Hu tree edge, taken in
/// non-decreasing order of the edge weights.
pub fn relevant_gus_t(g: &Graph) -> RelevantCutSet {
    let start = Instant::now();
    let flows0 = flow_calls();
    let tree = build_gomory_hu(g);
    let mut edges: Vec<_> = tree.edges().iter().collect();
    edges.sort_by_key(|e| e.lambda);
    let mut out = RelevantCutSet::new(g, Method::GusT);
    for e in edges {
        let d = build_pqdag(g, e.child, e.parent).expect("tree edge joins distinct vertices");
        out.stats.dags_built += 1;
        for c in enumerate_closed_sets(g, &d) {
            out.insert(c).expect("same graph");
        }
    }
    out.stats.flow_calls = flow_calls() - flows0;
    out.stats.elapsed = start.elapsed();
    out
}

/// Minimum u,v-cuts for every pair from contracted tree-edge PQ-DAGs.
pub fn relevant_gus_p(g: &Graph) -> RelevantCutSet {
    let start = Instant::now();
    let flows0 = flow_calls();
    let tree = build_gomory_hu(g);
    let mut out = RelevantCutSet::new(g, Method::GusP);
    // One DAG per tree edge in each orientation, built on first use.
    let mut cache: Vec<[Option<PqDag>; 2]> = vec![[None, None]; tree.edges().len()];
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            for pe in path_min_edges(&tree, u, v).expect("distinct vertices") {
                let te = &tree.edges()[pe.edge];
                let slot = usize::from(pe.x != te.child);
                if cache[pe.edge][slot].is_none() {
                    let d = match &cache[pe.edge][1 - slot] {
                        Some(other) => other.reversed(),
                        None => {
                            out.stats.dags_built += 1;
                            build_pqdag(g, pe.x, pe.y).expect("distinct endpoints")
                        }
                    };
                    cache[pe.edge][slot] = Some(d);
                }
                let d = cache[pe.edge][slot].as_ref().unwrap();
                out.stats.contractions += 1;
                let dc = match contract(d, &[u], &[v]) {
                    Ok(dc) => dc,
                    Err(Error::Collapse) => continue,
                    Err(e) => unreachable!("contraction of a valid pair failed: {e}"),
                };
                for c in enumerate_closed_sets(g, &dc) {
                    out.insert(c).expect("same graph");
                }
            }
        }
    }
    out.stats.flow_calls = flow_calls() - flows0;
    out.stats.elapsed = start.elapsed();
    out
}

/// Pairwise table of the first (smallest) cut weight seen separating each
/// vertex pair. `None` stands for infinity.
#[derive(Debug, Clone)]
pub struct WeightMatrix {
    n: usize,
    scale: i64,
    entries: Vec<Option<i64>>,
    unset: usize,
    max_finite: Option<i64>,
}

impl WeightMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        WeightMatrix {
            n,
            scale: g.scale(),
            entries: vec![None; n * n],
            unset: n * (n - 1) / 2,
            max_finite: None,
        }
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<Weight> {
        self.entries[u * self.n + v].map(|w| Weight::new(w, self.scale))
    }

    fn raw(&self, u: Vertex, v: Vertex) -> Option<i64> {
        self.entries[u * self.n + v]
    }

    /// Sets an infinite entry; finite entries are never overwritten.
    fn set_if_unset(&mut self, u: Vertex, v: Vertex, w: i64) -> bool {
        if self.entries[u * self.n + v].is_some() {
            return false;
        }
        self.entries[u * self.n + v] = Some(w);
        self.entries[v * self.n + u] = Some(w);
        self.unset -= 1;
        self.max_finite = Some(self.max_finite.map_or(w, |m| m.max(w)));
        true
    }

    /// Number of unordered pairs still at infinity.
    pub fn infinite_entries(&self) -> usize {
        self.unset
    }

    pub fn max_finite(&self) -> Option<Weight> {
        self.max_finite.map(|w| Weight::new(w, self.scale))
    }
}

/// YEH strategy. See [`relevant_yeh_with_matrix`].
pub fn relevant_yeh(g: &Graph) -> RelevantCutSet {
    relevant_yeh_with_matrix(g).0
}

/// Scans cuts by non-decreasing weight. A cut is kept when it separates
/// some pair whose matrix entry is still infinite (and sets every such
/// entry), or a pair whose entry already equals the cut's weight, i.e. it
/// ties with the first minimum cut of that pair. The scan stops once no
/// entry is infinite and the current weight exceeds the largest entry.
pub fn relevant_yeh_with_matrix(g: &Graph) -> (RelevantCutSet, WeightMatrix) {
    let start = Instant::now();
    let flows0 = flow_calls();
    let mut w = WeightMatrix::new(g);
    let mut out = RelevantCutSet::new(g, Method::Yeh);
    let mut scanned = 0u64;
    for cut in ordered_cut_enumeration(g) {
        scanned += 1;
        let weight = cut.raw_weight();
        if w.unset == 0 && w.max_finite.is_some_and(|m| weight > m) {
            break;
        }
        let other: Vec<Vertex> = cut.side().complement().iter().collect();
        let mut keep = false;
        for u in cut.side().iter() {
            for &v in &other {
                match w.raw(u, v) {
                    None => {
                        w.set_if_unset(u, v, weight);
                        keep = true;
                    }
                    Some(x) if x == weight => keep = true,
                    Some(_) => {}
                }
            }
        }
        if keep {
            out.cuts.insert(cut);
        }
    }
    out.stats.cuts_emitted = scanned;
    out.stats.flow_calls = flow_calls() - flows0;
    out.stats.elapsed = start.elapsed();
    (out, w)
}

/// Every cut of `g`, lazily, in non-decreasing weight order.
pub fn ordered_cut_enumeration(g: &Graph) -> OrderedCuts<'_> {
    OrderedCuts::new(g)
}

/// A block of the cut space: cuts with `forced_in` on the canonical side
/// and `forced_out` off it, represented by its lightest member.
struct Subproblem {
    raw: i64,
    side: BitSet,
    forced_in: BitSet,
    forced_out: BitSet,
}

impl PartialEq for Subproblem {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Subproblem {}

impl PartialOrd for Subproblem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subproblem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.raw
            .cmp(&other.raw)
            .then_with(|| self.side.iter().cmp(other.side.iter()))
    }
}

/// Best-first partitioning of the cut space.
///
/// The initial blocks fix the smallest vertex missing from the canonical
/// side. Popping a block's lightest cut splits the rest of the block along
/// its free vertices (each child agrees with the popped cut on a prefix of
/// them and disagrees on the next), so every cut is produced exactly once.
pub struct OrderedCuts<'a> {
    g: &'a Graph,
    heap: BinaryHeap<Reverse<Subproblem>>,
}

impl<'a> OrderedCuts<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        let mut it = OrderedCuts {
            g,
            heap: BinaryHeap::new(),
        };
        for k in 1..n {
            let forced_in = BitSet::from_indices(n, 0..k);
            let forced_out = BitSet::from_indices(n, [k]);
            it.push(forced_in, forced_out);
        }
        it
    }

    fn push(&mut self, forced_in: BitSet, forced_out: BitSet) {
        let n = self.g.n();
        let (raw, side) = if forced_in.count() + forced_out.count() == n {
            let c = Cut::from_side_unchecked(self.g, forced_in.clone());
            (c.raw_weight(), forced_in.clone())
        } else {
            constrained_min_cut(self.g, &forced_in, &forced_out)
        };
        self.heap.push(Reverse(Subproblem {
            raw,
            side,
            forced_in,
            forced_out,
        }));
    }
}

impl Iterator for OrderedCuts<'_> {
    type Item = Cut;

    fn next(&mut self) -> Option<Cut> {
        let Reverse(top) = self.heap.pop()?;
        let n = self.g.n();
        let mut forced_in = top.forced_in;
        let mut forced_out = top.forced_out;
        let free: Vec<Vertex> = (0..n)
            .filter(|&v| !forced_in.contains(v) && !forced_out.contains(v))
            .collect();
        for &f in &free {
            let (mut cin, mut cout) = (forced_in.clone(), forced_out.clone());
            if top.side.contains(f) {
                cout.insert(f);
                forced_in.insert(f);
            } else {
                cin.insert(f);
                forced_out.insert(f);
            }
            self.push(cin, cout);
        }
        let cut = Cut::from_side_unchecked(self.g, top.side);
        debug_assert_eq!(cut.raw_weight(), top.raw);
        Some(cut)
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

    fn k2() -> Graph {
        Graph::unit(2, &[(0, 1)]).unwrap()
    }

    fn sides(r: &RelevantCutSet) -> Vec<Vec<Vertex>> {
        r.sorted().iter().map(Cut::side_vertices).collect()
    }

    #[test]
    fn gus_t_examples() {
        let r = relevant_gus_t(&p3());
        assert_eq!(sides(&r), vec![vec![0], vec![0, 1]]);
        assert!(r.iter().all(|c| c.weight() == int(1)));

        let r = relevant_gus_t(&tri());
        assert_eq!(r.len(), 3);
        assert!(r.iter().all(|c| c.weight() == int(2)));

        let r = relevant_gus_t(&k4());
        assert_eq!(r.len(), 4);
        assert!(r.iter().all(|c| c.weight() == int(3)));
    }

    #[test]
    fn gus_p_examples() {
        assert!(relevant_gus_p(&p3()).same_cuts(&relevant_gus_t(&p3())));
        let r = relevant_gus_p(&k23());
        assert!(r.same_cuts(&relevant_gus_t(&k23())));
        assert_eq!(r.iter().filter(|c| c.weight() == int(3) && c.separates(0, 1)).count(), 8);
        assert_eq!(relevant_gus_p(&k2()).len(), 1);
    }

    #[test]
    fn yeh_examples() {
        let (r, w) = relevant_yeh_with_matrix(&p3());
        assert_eq!(sides(&r), vec![vec![0], vec![0, 1]]);
        // the weight-2 cut is scanned and triggers termination
        assert_eq!(r.stats.cuts_emitted, 3);
        assert_eq!(w.infinite_entries(), 0);
        assert_eq!(w.max_finite(), Some(int(1)));

        let r = relevant_yeh(&tri());
        assert_eq!(r.len(), 3);
        assert_eq!(r.stats.cuts_emitted, 3);

        let r = relevant_yeh(&k2());
        assert_eq!(r.len(), 1);
        assert_eq!(r.stats.cuts_emitted, 1);
    }

    #[test]
    fn yeh_keeps_ties_for_filled_pairs() {
        let r = relevant_yeh(&k23());
        assert!(r.same_cuts(&relevant_gus_t(&k23())));
    }

    #[test]
    fn ordered_enumeration_examples() {
        let weights = |g: &Graph| ordered_cut_enumeration(g).map(|c| c.weight()).collect::<Vec<_>>();
        assert_eq!(weights(&p3()), [1, 1, 2].map(int));
        assert_eq!(weights(&tri()), [2, 2, 2].map(int));
        assert_eq!(weights(&k4()), [3, 3, 3, 3, 4, 4, 4].map(int));
        let distinct: HashSet<Cut> = ordered_cut_enumeration(&k23()).collect();
        assert_eq!(distinct.len(), 15);
    }

    #[test]
    fn dedup_union_examples() {
        let g = p3();
        let stream: Vec<Cut> = relevant_gus_t(&g).sorted();
        let once = dedup_union(&g, Method::GusT, [stream.clone()]).unwrap();
        let twice = dedup_union(&g, Method::GusT, [stream.clone(), stream]).unwrap();
        assert!(once.same_cuts(&twice));
        assert_eq!(twice.stats.cuts_emitted, 4);

        let d01 = build_pqdag(&g, 0, 1).unwrap();
        let d12 = build_pqdag(&g, 1, 2).unwrap();
        let u = dedup_union(
            &g,
            Method::GusT,
            [enumerate_closed_sets(&g, &d01).collect::<Vec<_>>(), enumerate_closed_sets(&g, &d12).collect()],
        )
        .unwrap();
        assert_eq!(u.len(), 2);

        let empty = dedup_union(&g, Method::GusT, Vec::<Vec<Cut>>::new()).unwrap();
        assert!(empty.is_empty());

        let h = p3();
        let foreign = Cut::from_vertices(&h, &[0]).unwrap();
        assert_eq!(dedup_union(&g, Method::GusT, [vec![foreign]]).unwrap_err(), Error::MixedGraph);
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("nope".parse::<Method>().is_err());
    }

    #[test]
    fn oracle_method_respects_bound() {
        let path: Vec<_> = (0..19).map(|i| (i, i + 1)).collect();
        let g = Graph::unit(20, &path).unwrap();
        assert!(matches!(relevant_cuts(&g, Method::Oracle), Err(Error::TooLarge { .. })));
    }
}

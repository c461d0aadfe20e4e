//! Maximum s,t-flows on undirected graphs and residual reachability.
//!
//! Each undirected edge `uv` of weight `w` is modelled as a pair of opposing
//! arcs of capacity `w`; the residual capacity of `u -> v` is
//! `w - f(u,v) + f(v,u)`. Flows are computed with Dinic's blocking-flow
//! algorithm on the exact integer capacities of [`Graph`], scanning arcs in
//! input edge order so results are reproducible.

use std::cell::Cell;
use std::collections::VecDeque;

use crate::bits::BitSet;
use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, Weight};

thread_local! {
    static FLOW_CALLS: Cell<u64> = const { Cell::new(0) };
}

/// Number of max-flow computations run on this thread so far.
pub fn flow_calls() -> u64 {
    FLOW_CALLS.with(Cell::get)
}

/// A maximum flow between `source` and `sink`.
#[derive(Debug, Clone)]
pub struct FlowResult {
    pub source: Vertex,
    pub sink: Vertex,
    value: i64,
    scale: i64,
    /// Net flow along each edge from `edge.u` to `edge.v` (scaled).
    net: Vec<i64>,
    caps: Vec<i64>,
}

impl FlowResult {
    pub fn value(&self) -> Weight {
        Weight::new(self.value, self.scale)
    }

    pub(crate) fn raw_value(&self) -> i64 {
        self.value
    }

    /// Flow on each directed arc: index `2i` is `u -> v` of edge `i`, `2i+1`
    /// is `v -> u`. At most one arc of each pair carries flow.
    pub fn arc_flows(&self) -> Vec<Weight> {
        self.net
            .iter()
            .flat_map(|&f| [f.max(0), (-f).max(0)])
            .map(|f| Weight::new(f, self.scale))
            .collect()
    }

    /// Arcs with positive residual capacity.
    pub fn residual(&self, g: &Graph) -> ResidualGraph {
        let mut succ = vec![Vec::new(); g.n()];
        for (i, e) in g.edges().iter().enumerate() {
            let f = self.net[i];
            if self.caps[i] - f > 0 {
                succ[e.u].push(e.v);
            }
            if self.caps[i] + f > 0 {
                succ[e.v].push(e.u);
            }
        }
        ResidualGraph { succ }
    }
}

/// Directed graph of arcs with positive residual capacity.
#[derive(Debug, Clone)]
pub struct ResidualGraph {
    succ: Vec<Vec<Vertex>>,
}

impl ResidualGraph {
    pub fn n(&self) -> usize {
        self.succ.len()
    }

    pub fn successors(&self, v: Vertex) -> &[Vertex] {
        &self.succ[v]
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.succ[u].contains(&v)
    }

    /// Vertices reachable from `start` along residual arcs.
    pub fn reachable_from(&self, start: Vertex) -> BitSet {
        let mut seen = BitSet::new(self.n());
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &self.succ[x] {
                if !seen.contains(y) {
                    seen.insert(y);
                    stack.push(y);
                }
            }
        }
        seen
    }
}

/// Maximum flow from `s` to `t`.
pub fn max_flow(g: &Graph, s: Vertex, t: Vertex) -> Result<FlowResult> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameVertex(s));
    }
    let mut net = Network::from_graph(g, 0);
    let value = net.run(s, t);
    Ok(FlowResult {
        source: s,
        sink: t,
        value,
        scale: g.scale(),
        net: net.edge_flows(g),
        caps: g.edges().iter().map(|e| e.cap).collect(),
    })
}

/// Minimum cut whose side is the residual-reachable set of the source.
pub fn min_cut_side(g: &Graph, fr: &FlowResult) -> Cut {
    let side = fr.residual(g).reachable_from(fr.source);
    let cut = Cut::from_side_unchecked(g, side);
    debug_assert_eq!(cut.raw_weight(), fr.value);
    cut
}

/// Minimum cut among those with every vertex of `sources` on one side and
/// every vertex of `sinks` on the other. Returns the scaled weight and the
/// residual-reachable side of the sources.
pub(crate) fn constrained_min_cut(g: &Graph, sources: &BitSet, sinks: &BitSet) -> (i64, BitSet) {
    debug_assert!(!sources.intersects(sinks));
    let n = g.n();
    let inf = g.total_raw() + 1;
    let mut net = Network::from_graph(g, 2);
    let (ss, tt) = (n, n + 1);
    for v in sources.iter() {
        net.add_arc(ss, v, inf, 0);
    }
    for v in sinks.iter() {
        net.add_arc(v, tt, inf, 0);
    }
    let value = net.run(ss, tt);
    let reach = net.reachable(ss);
    let side = BitSet::from_indices(n, (0..n).filter(|&v| reach[v]));
    (value, side)
}

struct Network {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    res: Vec<i64>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Network {
    fn from_graph(g: &Graph, extra: usize) -> Self {
        let nodes = g.n() + extra;
        let mut net = Network {
            head: vec![Vec::new(); nodes],
            to: Vec::with_capacity(2 * g.m()),
            res: Vec::with_capacity(2 * g.m()),
            level: vec![0; nodes],
            iter: vec![0; nodes],
        };
        for e in g.edges() {
            net.add_arc(e.u, e.v, e.cap, e.cap);
        }
        net
    }

    /// Adds the arc pair `u -> v` (capacity `cap`) and `v -> u` (`back`).
    fn add_arc(&mut self, u: usize, v: usize, cap: i64, back: i64) {
        let a = self.to.len();
        self.to.push(v);
        self.res.push(cap);
        self.to.push(u);
        self.res.push(back);
        self.head[u].push(a);
        self.head[v].push(a + 1);
    }

    fn edge_flows(&self, g: &Graph) -> Vec<i64> {
        g.edges()
            .iter()
            .enumerate()
            .map(|(i, e)| e.cap - self.res[2 * i])
            .collect()
    }

    fn run(&mut self, s: usize, t: usize) -> i64 {
        FLOW_CALLS.with(|c| c.set(c.get() + 1));
        let mut total = 0;
        while self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
        total
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.head[x] {
                let y = self.to[a];
                if self.res[a] > 0 && self.level[y] < 0 {
                    self.level[y] = self.level[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, x: usize, t: usize, limit: i64) -> i64 {
        if x == t {
            return limit;
        }
        while self.iter[x] < self.head[x].len() {
            let a = self.head[x][self.iter[x]];
            let y = self.to[a];
            if self.res[a] > 0 && self.level[y] == self.level[x] + 1 {
                let d = self.dfs(y, t, limit.min(self.res[a]));
                if d > 0 {
                    self.res[a] -= d;
                    self.res[a ^ 1] += d;
                    return d;
                }
            }
            self.iter[x] += 1;
        }
        0
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &a in &self.head[x] {
                let y = self.to[a];
                if self.res[a] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::unit(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::unit(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn int(x: i64) -> Weight {
        Weight::from_integer(x)
    }

    #[test]
    fn max_flow_examples() {
        assert_eq!(max_flow(&p3(), 0, 2).unwrap().value(), int(1));
        let g = k4();
        for s in 0..4 {
            for t in 0..4 {
                if s != t {
                    assert_eq!(max_flow(&g, s, t).unwrap().value(), int(3));
                }
            }
        }
        assert_eq!(max_flow(&g, 2, 2).unwrap_err(), Error::SameVertex(2));
    }

    #[test]
    fn min_cut_side_examples() {
        let g = p3();
        let fr = max_flow(&g, 0, 2).unwrap();
        let c = min_cut_side(&g, &fr);
        assert_eq!(c.side_vertices(), vec![0]);
        assert_eq!(c.weight(), int(1));

        // K_{2,3}: parts {0,1} and {2,3,4}.
        let k23 = Graph::unit(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let fr = max_flow(&k23, 0, 1).unwrap();
        let c = min_cut_side(&k23, &fr);
        assert_eq!(fr.value(), int(3));
        assert_eq!(c.weight(), int(3));
        assert!(c.separates(0, 1));

        let star = Graph::unit(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let fr = max_flow(&star, 2, 0).unwrap();
        let c = min_cut_side(&star, &fr);
        assert_eq!(c.weight(), int(1));
        // canonical form holds the complement of {2}
        assert_eq!(c.side_vertices(), vec![0, 1, 3]);
    }

    #[test]
    fn arc_flows_respect_capacity_and_conservation() {
        let g = Graph::new(
            4,
            [
                (0, 1, Weight::new(1, 2)),
                (1, 3, int(2)),
                (0, 2, int(1)),
                (2, 3, Weight::new(1, 3)),
                (1, 2, int(1)),
            ],
        )
        .unwrap();
        let fr = max_flow(&g, 0, 3).unwrap();
        let flows = fr.arc_flows();
        let mut excess = [Weight::from_integer(0); 4];
        for (i, e) in g.edges().iter().enumerate() {
            for (a, (x, y)) in [(2 * i, (e.u, e.v)), (2 * i + 1, (e.v, e.u))] {
                assert!(flows[a] >= int(0) && flows[a] <= e.weight);
                excess[x] -= flows[a];
                excess[y] += flows[a];
            }
        }
        assert_eq!(excess[1], int(0));
        assert_eq!(excess[2], int(0));
        assert_eq!(-excess[0], fr.value());
        // s,t-cuts: {0} 3/2, {0,1} 4, {0,2} 11/6, {0,1,2} 7/3
        assert_eq!(fr.value(), Weight::new(3, 2));
    }

    #[test]
    fn constrained_cut_forces_sides() {
        let g = p3();
        let (w, side) = constrained_min_cut(
            &g,
            &BitSet::from_indices(3, [0, 2]),
            &BitSet::from_indices(3, [1]),
        );
        assert_eq!(w, 2);
        assert_eq!(side.iter().collect::<Vec<_>>(), vec![0, 2]);
    }
}

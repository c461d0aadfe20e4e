//! Picard-Queyranne DAGs: a compact representation of every minimum s,t-cut.
//!
//! Nodes are the strongly connected components of the residual network of a
//! maximum s,t-flow. An arc `a -> b` means "if `a` is on the source side,
//! so is `b`", so the source sides of minimum cuts are exactly the closed
//! node sets (no arc leaving the set) containing the source node and not the
//! sink node. The source node absorbs everything reachable from `s`, the
//! sink node everything that reaches `t`; hence the source node is the
//! unique node without out-arcs and the sink node the unique node without
//! in-arcs.

use std::fmt::Write as _;

use crate::bits::BitSet;
use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::flow::{max_flow, ResidualGraph};
use crate::graph::{Graph, Vertex, Weight};

#[derive(Debug, Clone)]
pub struct PqDag {
    graph: u64,
    s: Vertex,
    t: Vertex,
    node_of: Vec<usize>,
    members: Vec<Vec<Vertex>>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
    /// Topological order: every arc points forward.
    topo: Vec<usize>,
    value: Weight,
}

impl PqDag {
    pub fn s(&self) -> Vertex {
        self.s
    }

    pub fn t(&self) -> Vertex {
        self.t
    }

    /// Weight shared by every minimum s,t-cut.
    pub fn cut_weight(&self) -> Weight {
        self.value
    }

    pub fn node_count(&self) -> usize {
        self.members.len()
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn source_node(&self) -> usize {
        self.source
    }

    pub fn sink_node(&self) -> usize {
        self.sink
    }

    pub fn node_of(&self, v: Vertex) -> usize {
        self.node_of[v]
    }

    pub fn members(&self, node: usize) -> &[Vertex] {
        &self.members[node]
    }

    pub fn successors(&self, node: usize) -> &[usize] {
        &self.succ[node]
    }

    pub fn predecessors(&self, node: usize) -> &[usize] {
        &self.pred[node]
    }

    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    /// The same DAG seen from `t`: closed sets become their complements,
    /// which describe the same cuts.
    pub fn reversed(&self) -> PqDag {
        PqDag {
            graph: self.graph,
            s: self.t,
            t: self.s,
            node_of: self.node_of.clone(),
            members: self.members.clone(),
            succ: self.pred.clone(),
            pred: self.succ.clone(),
            source: self.sink,
            sink: self.source,
            topo: self.topo.iter().rev().copied().collect(),
            value: self.value,
        }
    }

    /// Text dump: one line per node with its sorted member vertices, then
    /// one line per arc by node index.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "pqdag s={} t={} nodes={} arcs={}",
            self.s,
            self.t,
            self.node_count(),
            self.arc_count()
        );
        for (i, m) in self.members.iter().enumerate() {
            let tag = if i == self.source {
                " source"
            } else if i == self.sink {
                " sink"
            } else {
                ""
            };
            let vs: Vec<String> = m.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "node {i}{tag}: {}", vs.join(" "));
        }
        for (a, outs) in self.succ.iter().enumerate() {
            for b in outs {
                let _ = writeln!(out, "arc {a} {b}");
            }
        }
        out
    }

    /// Builds the canonical DAG from a vertex labelling and vertex-level
    /// arcs. Nodes are numbered source, sink, then by smallest member.
    fn assemble<I>(
        graph: u64,
        (s, t): (Vertex, Vertex),
        value: Weight,
        label: &[usize],
        arcs: I,
    ) -> PqDag
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let n = label.len();
        let (ls, lt) = (label[s], label[t]);
        debug_assert_ne!(ls, lt);
        let mut rename = vec![usize::MAX; n.max(label.iter().max().map_or(0, |m| m + 1))];
        rename[ls] = 0;
        rename[lt] = 1;
        let mut next = 2;
        for &l in label {
            if rename[l] == usize::MAX {
                rename[l] = next;
                next += 1;
            }
        }
        let node_of: Vec<usize> = label.iter().map(|&l| rename[l]).collect();
        let mut members = vec![Vec::new(); next];
        for (v, &k) in node_of.iter().enumerate() {
            members[k].push(v);
        }
        let mut succ = vec![Vec::new(); next];
        for (u, v) in arcs {
            let (a, b) = (node_of[u], node_of[v]);
            if a != b {
                succ[a].push(b);
            }
        }
        let mut pred = vec![Vec::new(); next];
        for (a, outs) in succ.iter_mut().enumerate() {
            outs.sort_unstable();
            outs.dedup();
            for &b in outs.iter() {
                pred[b].push(a);
            }
        }

        let mut indeg: Vec<usize> = pred.iter().map(Vec::len).collect();
        let mut topo: Vec<usize> = (0..next).filter(|&k| indeg[k] == 0).collect();
        let mut i = 0;
        while i < topo.len() {
            let a = topo[i];
            i += 1;
            for &b in &succ[a] {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    topo.push(b);
                }
            }
        }
        assert_eq!(topo.len(), next, "contracted residual graph must be acyclic");

        PqDag {
            graph,
            s,
            t,
            node_of,
            members,
            succ,
            pred,
            source: 0,
            sink: 1,
            topo,
            value,
        }
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.node_of.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.node_of.len(),
            })
        }
    }
}

/// Builds `D_{s,t}` from a maximum s,t-flow.
pub fn build_pqdag(g: &Graph, s: Vertex, t: Vertex) -> Result<PqDag> {
    let fr = max_flow(g, s, t)?;
    let rg = fr.residual(g);
    let comp = strong_components(&rg);
    let from_s = rg.reachable_from(s);
    let to_t = reaches(&rg, t);
    debug_assert!(!from_s.intersects(&to_t), "flow must be maximum");
    let label: Vec<usize> = (0..g.n())
        .map(|v| {
            if from_s.contains(v) {
                comp[s]
            } else if to_t.contains(v) {
                comp[t]
            } else {
                comp[v]
            }
        })
        .collect();
    let arcs = (0..g.n()).flat_map(|u| rg.successors(u).iter().map(move |&v| (u, v)));
    Ok(PqDag::assemble(g.id(), (s, t), fr.value(), &label, arcs))
}

/// `D_{s,t}(X, Y)`: `X` merged with all its successors into the source node,
/// `Y` with all its predecessors into the sink node.
pub fn contract(d: &PqDag, x: &[Vertex], y: &[Vertex]) -> Result<PqDag> {
    for &v in x.iter().chain(y) {
        d.check_vertex(v)?;
    }
    if x.iter().any(|v| y.contains(v)) {
        return Err(Error::Overlap);
    }
    let k = d.node_count();
    let closure = |starts: &mut dyn Iterator<Item = usize>, next: &Vec<Vec<usize>>| {
        let mut seen = vec![false; k];
        let mut stack: Vec<usize> = Vec::new();
        for a in starts {
            if !seen[a] {
                seen[a] = true;
                stack.push(a);
            }
        }
        while let Some(a) = stack.pop() {
            for &b in &next[a] {
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen
    };
    let to_source = closure(&mut x.iter().map(|&v| d.node_of[v]), &d.succ);
    let to_sink = closure(&mut y.iter().map(|&v| d.node_of[v]), &d.pred);
    if to_source[d.sink] || to_sink[d.source] || (0..k).any(|a| to_source[a] && to_sink[a]) {
        return Err(Error::Collapse);
    }
    let node_label: Vec<usize> = (0..k)
        .map(|a| {
            if to_source[a] {
                d.source
            } else if to_sink[a] {
                d.sink
            } else {
                a
            }
        })
        .collect();
    let label: Vec<usize> = d.node_of.iter().map(|&a| node_label[a]).collect();
    let arcs = d
        .succ
        .iter()
        .enumerate()
        .flat_map(|(a, outs)| outs.iter().map(move |&b| (d.members[a][0], d.members[b][0])));
    Ok(PqDag::assemble(d.graph, (d.s, d.t), d.value, &label, arcs))
}

/// Every minimum s,t-cut of `g` encoded by `d`, each exactly once.
pub fn enumerate_closed_sets<'a>(g: &'a Graph, d: &'a PqDag) -> impl Iterator<Item = Cut> + 'a {
    assert_eq!(g.id(), d.graph, "DAG was built from a different graph");
    ClosedSets::new(d).map(move |side| Cut::from_side_unchecked(g, side))
}

const FREE: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

struct Frame {
    node: usize,
    pos: usize,
    mark: usize,
    excluded: bool,
}

/// Depth-first enumeration of closed node sets.
///
/// Branches on the first free node in topological order: either it joins
/// the set together with all its successors, or it is excluded. Its
/// predecessors are always already excluded at that point, so every branch
/// reaches a leaf and each leaf is a distinct closed set.
pub struct ClosedSets<'a> {
    dag: &'a PqDag,
    state: Vec<u8>,
    trail: Vec<usize>,
    stack: Vec<Frame>,
    /// Scan position for the next descent.
    pos: usize,
    descending: bool,
    done: bool,
    ops: u64,
}

impl<'a> ClosedSets<'a> {
    pub fn new(dag: &'a PqDag) -> Self {
        let mut state = vec![FREE; dag.node_count()];
        state[dag.source] = IN;
        state[dag.sink] = OUT;
        ClosedSets {
            dag,
            state,
            trail: Vec::new(),
            stack: Vec::new(),
            pos: 0,
            descending: true,
            done: false,
            ops: 0,
        }
    }

    /// Elementary steps taken so far (node assignments, arc scans, order
    /// scans and undo steps). Used to measure delay.
    pub fn ops(&self) -> u64 {
        self.ops
    }

    fn include(&mut self, node: usize) {
        self.state[node] = IN;
        self.trail.push(node);
        let mut stack = vec![node];
        while let Some(a) = stack.pop() {
            self.ops += 1;
            for &b in &self.dag.succ[a] {
                self.ops += 1;
                if self.state[b] == FREE {
                    self.state[b] = IN;
                    self.trail.push(b);
                    stack.push(b);
                }
            }
        }
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let a = self.trail.pop().unwrap();
            self.state[a] = FREE;
            self.ops += 1;
        }
    }

    fn leaf(&mut self) -> BitSet {
        let mut side = BitSet::new(self.dag.node_of.len());
        for (a, &st) in self.state.iter().enumerate() {
            self.ops += 1;
            if st == IN {
                for &v in &self.dag.members[a] {
                    side.insert(v);
                }
            }
        }
        side
    }
}

impl Iterator for ClosedSets<'_> {
    type Item = BitSet;

    fn next(&mut self) -> Option<BitSet> {
        if self.done {
            return None;
        }
        loop {
            if self.descending {
                let topo = &self.dag.topo;
                while self.pos < topo.len() && self.state[topo[self.pos]] != FREE {
                    self.pos += 1;
                    self.ops += 1;
                }
                if self.pos == topo.len() {
                    self.descending = false;
                    return Some(self.leaf());
                }
                let node = topo[self.pos];
                self.stack.push(Frame {
                    node,
                    pos: self.pos,
                    mark: self.trail.len(),
                    excluded: false,
                });
                self.include(node);
                self.pos += 1;
            } else {
                let Some(top) = self.stack.last_mut() else {
                    self.done = true;
                    return None;
                };
                let (mark, node, pos, excluded) = (top.mark, top.node, top.pos, top.excluded);
                if excluded {
                    self.stack.pop();
                    self.undo(mark);
                    self.ops += 1;
                    continue;
                }
                top.excluded = true;
                self.undo(mark);
                self.state[node] = OUT;
                self.trail.push(node);
                self.ops += 1;
                self.pos = pos + 1;
                self.descending = true;
            }
        }
    }
}

fn reaches(rg: &ResidualGraph, target: Vertex) -> BitSet {
    let n = rg.n();
    let mut rev = vec![Vec::new(); n];
    for u in 0..n {
        for &v in rg.successors(u) {
            rev[v].push(u);
        }
    }
    let mut seen = BitSet::new(n);
    seen.insert(target);
    let mut stack = vec![target];
    while let Some(x) = stack.pop() {
        for &y in &rev[x] {
            if !seen.contains(y) {
                seen.insert(y);
                stack.push(y);
            }
        }
    }
    seen
}

/// Tarjan's strongly connected components, iterative. Returns a component
/// label per vertex.
fn strong_components(rg: &ResidualGraph) -> Vec<usize> {
    let n = rg.n();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;
    let mut call: Vec<(Vertex, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            let succ = rg.successors(v);
            if *i < succ.len() {
                let w = succ[*i];
                *i += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    comp
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

    fn k23() -> Graph {
        Graph::unit(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    fn sides(g: &Graph, d: &PqDag) -> Vec<Vec<Vertex>> {
        let mut v: Vec<_> = enumerate_closed_sets(g, d).map(|c| c.side_vertices()).collect();
        v.sort();
        v
    }

    #[test]
    fn p3_chain() {
        let g = p3();
        let d = build_pqdag(&g, 0, 2).unwrap();
        assert_eq!(d.node_count(), 3);
        assert_eq!(d.members(d.source_node()), &[0]);
        assert_eq!(d.members(d.sink_node()), &[2]);
        let mid = d.node_of(1);
        assert_eq!(d.successors(d.sink_node()), &[mid]);
        assert_eq!(d.successors(mid), &[d.source_node()]);
        assert_eq!(sides(&g, &d), vec![vec![0], vec![0, 1]]);
        assert!(enumerate_closed_sets(&g, &d).all(|c| c.weight() == int(1)));
    }

    #[test]
    fn k23_has_eight_cuts() {
        let g = k23();
        let d = build_pqdag(&g, 0, 1).unwrap();
        assert_eq!(d.node_count(), 5);
        for v in 2..5 {
            let a = d.node_of(v);
            assert_eq!(d.successors(a), &[d.source_node()]);
            assert_eq!(d.predecessors(a), &[d.sink_node()]);
        }
        let cuts: Vec<Cut> = enumerate_closed_sets(&g, &d).collect();
        assert_eq!(cuts.len(), 8);
        assert!(cuts.iter().all(|c| c.weight() == int(3) && c.separates(0, 1)));
    }

    #[test]
    fn same_vertex_rejected() {
        assert_eq!(build_pqdag(&p3(), 1, 1).unwrap_err(), Error::SameVertex(1));
    }

    #[test]
    fn contract_examples() {
        let g = p3();
        let d = build_pqdag(&g, 0, 2).unwrap();
        let same = contract(&d, &[], &[]).unwrap();
        assert_eq!(same.dump(), d.dump());

        let c = contract(&d, &[1], &[]).unwrap();
        assert_eq!(c.node_count(), 2);
        assert_eq!(c.members(c.source_node()), &[0, 1]);
        assert_eq!(sides(&g, &c), vec![vec![0, 1]]);

        assert_eq!(contract(&d, &[1], &[1]).unwrap_err(), Error::Overlap);
        assert_eq!(contract(&d, &[2], &[]).unwrap_err(), Error::Collapse);
    }

    #[test]
    fn two_node_dag_has_one_closed_set() {
        let g = Graph::unit(2, &[(0, 1)]).unwrap();
        let d = build_pqdag(&g, 0, 1).unwrap();
        assert_eq!(d.node_count(), 2);
        assert_eq!(sides(&g, &d), vec![vec![0]]);
    }

    #[test]
    fn reversed_dag_lists_same_cuts() {
        let g = k23();
        let d = build_pqdag(&g, 0, 1).unwrap();
        assert_eq!(sides(&g, &d), sides(&g, &d.reversed()));
    }

    #[test]
    fn dump_format() {
        let g = p3();
        let d = build_pqdag(&g, 0, 2).unwrap();
        assert_eq!(
            d.dump(),
            "pqdag s=0 t=2 nodes=3 arcs=2\nnode 0 source: 0\nnode 1 sink: 2\nnode 2: 1\narc 1 2\narc 2 0\n"
        );
    }
}

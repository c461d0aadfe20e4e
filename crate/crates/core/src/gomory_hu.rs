//! Gomory-Hu trees via Gusfield's method: `n - 1` max-flow calls on the
//! original graph, no contraction.

use crate::cut::{Cut, CutFamily};
use crate::error::{Error, Result};
use crate::flow::max_flow;
use crate::graph::{Graph, Vertex, Weight};

#[derive(Debug, Clone)]
pub struct TreeEdge {
    /// Endpoint farther from the root (vertex 0).
    pub child: Vertex,
    pub parent: Vertex,
    pub lambda: Weight,
    raw: i64,
    /// The cut obtained by deleting this edge from the tree.
    pub cut: Cut,
}

/// A tree edge oriented along a query path: `x` lies on the first vertex's side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathEdge {
    pub x: Vertex,
    pub y: Vertex,
    /// Index into [`GomoryHuTree::edges`].
    pub edge: usize,
}

/// Edge-weighted spanning tree encoding every pairwise minimum cut weight.
#[derive(Debug, Clone)]
pub struct GomoryHuTree {
    n: usize,
    graph: u64,
    parent: Vec<Option<Vertex>>,
    /// Tree edge joining each non-root vertex to its parent.
    edge_of: Vec<Option<usize>>,
    depth: Vec<usize>,
    edges: Vec<TreeEdge>,
}

impl GomoryHuTree {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn graph_id(&self) -> u64 {
        self.graph
    }

    fn check(&self, u: Vertex, v: Vertex) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(())
    }

    /// Tree edges on the path from `u` to `v`, in path order.
    pub fn path(&self, u: Vertex, v: Vertex) -> Result<Vec<PathEdge>> {
        self.check(u, v)?;
        let (mut a, mut b) = (u, v);
        let mut from_u = Vec::new();
        let mut from_v = Vec::new();
        while a != b {
            if self.depth[a] >= self.depth[b] {
                let p = self.parent[a].expect("non-root has a parent");
                from_u.push(PathEdge {
                    x: a,
                    y: p,
                    edge: self.edge_of[a].unwrap(),
                });
                a = p;
            } else {
                let p = self.parent[b].expect("non-root has a parent");
                from_v.push(PathEdge {
                    x: p,
                    y: b,
                    edge: self.edge_of[b].unwrap(),
                });
                b = p;
            }
        }
        from_u.extend(from_v.into_iter().rev());
        Ok(from_u)
    }
}

/// Builds a Gomory-Hu tree rooted at vertex 0.
pub fn build_gomory_hu(g: &Graph) -> GomoryHuTree {
    let n = g.n();
    let mut p = vec![0usize; n];
    let mut fl = vec![0i64; n];
    for s in 1..n {
        let t = p[s];
        let fr = max_flow(g, s, t).expect("s != t");
        let side = fr.residual(g).reachable_from(s);
        fl[s] = fr.raw_value();
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            if i != s && side.contains(i) && p[i] == t {
                p[i] = s;
            }
        }
        if side.contains(p[t]) {
            p[s] = p[t];
            p[t] = s;
            fl[s] = fl[t];
            fl[t] = fr.raw_value();
        }
    }
    debug_assert_eq!(p[0], 0);

    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    for v in 1..n {
        parent[v] = Some(p[v]);
        children[p[v]].push(v);
    }
    let mut depth = vec![0; n];
    let mut order = vec![0];
    let mut k = 0;
    while k < order.len() {
        let x = order[k];
        k += 1;
        for &c in &children[x] {
            depth[c] = depth[x] + 1;
            order.push(c);
        }
    }
    debug_assert_eq!(order.len(), n, "parent array must form a tree");

    // Subtree vertex sets, children before parents.
    let mut subtree: Vec<Vec<Vertex>> = (0..n).map(|v| vec![v]).collect();
    for &v in order.iter().rev() {
        if let Some(pv) = parent[v] {
            let sub = std::mem::take(&mut subtree[v]);
            subtree[pv].extend_from_slice(&sub);
            subtree[v] = sub;
        }
    }

    let mut edges = Vec::with_capacity(n - 1);
    let mut edge_of = vec![None; n];
    for v in 1..n {
        let cut = Cut::from_vertices(g, &subtree[v]).expect("proper subtree");
        edge_of[v] = Some(edges.len());
        edges.push(TreeEdge {
            child: v,
            parent: p[v],
            lambda: g.to_weight(fl[v]),
            raw: fl[v],
            cut,
        });
    }
    GomoryHuTree {
        n,
        graph: g.id(),
        parent,
        edge_of,
        depth,
        edges,
    }
}

/// Minimum weight of a `u`,`v`-cut: the smallest lambda on the tree path.
pub fn min_cut_weight(t: &GomoryHuTree, u: Vertex, v: Vertex) -> Result<Weight> {
    Ok(t.edges[min_raw_edge(t, u, v)?].lambda)
}

fn min_raw_edge(t: &GomoryHuTree, u: Vertex, v: Vertex) -> Result<usize> {
    let path = t.path(u, v)?;
    Ok(path
        .iter()
        .map(|pe| pe.edge)
        .min_by_key(|&e| t.edges[e].raw)
        .expect("path between distinct vertices is non-empty"))
}

/// Every edge on the `u`-`v` tree path attaining the path minimum, in path
/// order, oriented so that `x` is on `u`'s side.
pub fn path_min_edges(t: &GomoryHuTree, u: Vertex, v: Vertex) -> Result<Vec<PathEdge>> {
    let path = t.path(u, v)?;
    let min = path.iter().map(|pe| t.edges[pe.edge].raw).min().unwrap();
    Ok(path
        .into_iter()
        .filter(|pe| t.edges[pe.edge].raw == min)
        .collect())
}

/// The `n - 1` tree-edge cuts, a minimum cut basis of `g`.
pub fn basis_from_tree(g: &Graph, t: &GomoryHuTree) -> Result<CutFamily> {
    if g.id() != t.graph {
        return Err(Error::MixedGraph);
    }
    CutFamily::from_cuts(g, t.edges.iter().map(|e| e.cut.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(x: i64) -> Weight {
        Weight::from_integer(x)
    }

    fn k4() -> Graph {
        Graph::unit(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn p3_tree() {
        let g = Graph::unit(3, &[(0, 1), (1, 2)]).unwrap();
        let t = build_gomory_hu(&g);
        let mut pairs: Vec<_> = t
            .edges()
            .iter()
            .map(|e| (e.child.min(e.parent), e.child.max(e.parent), e.lambda))
            .collect();
        pairs.sort();
        assert_eq!(pairs, vec![(0, 1, int(1)), (1, 2, int(1))]);
        assert_eq!(min_cut_weight(&t, 0, 2).unwrap(), int(1));

        let both = path_min_edges(&t, 0, 2).unwrap();
        assert_eq!(both.iter().map(|e| (e.x, e.y)).collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let one = path_min_edges(&t, 0, 1).unwrap();
        assert_eq!(one.iter().map(|e| (e.x, e.y)).collect::<Vec<_>>(), vec![(0, 1)]);
        let rev = path_min_edges(&t, 2, 0).unwrap();
        assert_eq!(rev.iter().map(|e| (e.x, e.y)).collect::<Vec<_>>(), vec![(2, 1), (1, 0)]);

        let basis = basis_from_tree(&g, &t).unwrap();
        assert!(basis.is_basis());
        assert_eq!(basis.total_weight(), int(2));
        let mut sides: Vec<_> = basis.cuts().iter().map(Cut::side_vertices).collect();
        sides.sort();
        // {0} and the canonical form of {2}
        assert_eq!(sides, vec![vec![0], vec![0, 1]]);
    }

    #[test]
    fn triangle_and_k4() {
        let tri = Graph::unit(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let t = build_gomory_hu(&tri);
        assert!(t.edges().iter().all(|e| e.lambda == int(2)));
        assert_eq!(basis_from_tree(&tri, &t).unwrap().total_weight(), int(4));

        let g = k4();
        let t = build_gomory_hu(&g);
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(min_cut_weight(&t, u, v).unwrap(), int(3));
                }
            }
        }
        let basis = basis_from_tree(&g, &t).unwrap();
        assert_eq!(basis.total_weight(), int(9));
        assert!(basis.cuts().iter().all(|c| c.side().count() == 1 || c.side().count() == 3));
    }

    #[test]
    fn k23_pairwise_values() {
        let g = Graph::unit(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let t = build_gomory_hu(&g);
        assert_eq!(min_cut_weight(&t, 0, 1).unwrap(), int(3));
        for (u, v) in [(2, 3), (2, 4), (3, 4), (0, 2), (1, 4)] {
            assert_eq!(min_cut_weight(&t, u, v).unwrap(), int(2));
        }
        for e in t.edges() {
            assert_eq!(e.cut.weight(), e.lambda);
        }
    }

    #[test]
    fn same_vertex_queries_fail() {
        let t = build_gomory_hu(&k4());
        assert_eq!(min_cut_weight(&t, 1, 1).unwrap_err(), Error::SameVertex(1));
        assert_eq!(path_min_edges(&t, 3, 3).unwrap_err(), Error::SameVertex(3));
    }
}

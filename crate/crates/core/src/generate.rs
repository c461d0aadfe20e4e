//! Fixture families and random graph generators.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, Weight};

/// `K_{2,n-2}` with unit weights. Vertices 0 and 1 form the small part.
pub fn k2m(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    let edges: Vec<(Vertex, Vertex)> = [0, 1]
        .into_iter()
        .flat_map(|a| (2..n).map(move |b| (a, b)))
        .collect();
    Graph::unit(n, &edges)
}

/// Two complete binary trees with `leaves` leaves glued at their leaves.
#[derive(Debug, Clone)]
pub struct GluedTrees {
    pub graph: Graph,
    /// Root of the first tree.
    pub s: Vertex,
    /// Root of the second tree.
    pub t: Vertex,
    /// Shared leaf vertices, left to right.
    pub leaves: Vec<Vertex>,
}

/// Glued binary trees on `3 * leaves - 2` vertices. Edges incident with a
/// leaf weigh `1 / (2 * leaves)`, all others 1. `leaves` must be a power of
/// two, at least 2.
pub fn glued_trees(leaves: usize) -> Result<GluedTrees> {
    if leaves < 2 || !leaves.is_power_of_two() {
        return Err(Error::TooFewVertices(leaves));
    }
    let n = leaves;
    // Heap numbering 1..2n-1 for each tree; leaves are n..2n-1.
    let first = |i: usize| i - 1;
    let second = |i: usize| if i >= n { i - 1 } else { 2 * n - 1 + (i - 1) };
    let light = Weight::new(1, 2 * n as i64);
    let one = Weight::from_integer(1);
    let mut edges = Vec::with_capacity(4 * n - 4);
    for map in [&first as &dyn Fn(usize) -> usize, &second] {
        for i in 2..2 * n {
            let w = if i >= n { light } else { one };
            edges.push((map(i / 2), map(i), w));
        }
    }
    Ok(GluedTrees {
        graph: Graph::new(3 * n - 2, edges)?,
        s: first(1),
        t: second(1),
        leaves: (n..2 * n).map(first).collect(),
    })
}

/// Parameters for [`random_connected`].
#[derive(Debug, Clone)]
pub struct RandomSpec {
    pub n: usize,
    pub max_degree: usize,
    /// Edges added on top of the spanning tree (fewer if the degree bound
    /// makes them impossible to place).
    pub extra_edges: usize,
    pub weights: Vec<Weight>,
}

impl RandomSpec {
    /// Sparse "chemical-like" graphs: degree at most 4, weights 1 to 3,
    /// about one extra ring-closing edge per ten vertices.
    pub fn chemical(n: usize) -> Self {
        RandomSpec {
            n,
            max_degree: 4,
            extra_edges: n / 10 + 1,
            weights: (1..=3).map(Weight::from_integer).collect(),
        }
    }
}

/// Random connected graph: a degree-bounded random spanning tree plus extra
/// edges, with weights drawn uniformly from `spec.weights` and vertex labels
/// shuffled.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, spec: &RandomSpec) -> Result<Graph> {
    let n = spec.n;
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    assert!(spec.max_degree >= 2 || n == 2, "degree bound below 2 cannot connect {n} vertices");
    assert!(!spec.weights.is_empty(), "weight set must be non-empty");
    let mut label: Vec<Vertex> = (0..n).collect();
    label.shuffle(rng);
    let mut degree = vec![0usize; n];
    let mut adjacent = vec![false; n * n];
    let mut pairs = Vec::new();
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < spec.max_degree).collect();
        let u = *open.choose(rng).expect("a tree always has a vertex below the bound");
        pairs.push((u, v));
        degree[u] += 1;
        degree[v] += 1;
        adjacent[u * n + v] = true;
        adjacent[v * n + u] = true;
    }
    let mut placed = 0;
    let mut attempts = 0;
    while placed < spec.extra_edges && attempts < 50 * (spec.extra_edges + 1) {
        attempts += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || adjacent[u * n + v] || degree[u] >= spec.max_degree || degree[v] >= spec.max_degree {
            continue;
        }
        pairs.push((u, v));
        degree[u] += 1;
        degree[v] += 1;
        adjacent[u * n + v] = true;
        adjacent[v * n + u] = true;
        placed += 1;
    }
    let edges: Vec<_> = pairs
        .into_iter()
        .map(|(u, v)| (label[u], label[v], *spec.weights.choose(rng).unwrap()))
        .collect();
    Graph::new(n, edges)
}

/// Random connected graph on `n` vertices with no degree bound and a random
/// number of extra edges, for exhaustive cross-checks on small graphs.
pub fn random_small<R: Rng + ?Sized>(rng: &mut R, n: usize, weights: &[Weight]) -> Result<Graph> {
    let max_extra = n * (n - 1) / 2 - (n - 1);
    let spec = RandomSpec {
        n,
        max_degree: n.max(2),
        extra_edges: rng.gen_range(0..=max_extra),
        weights: weights.to_vec(),
    };
    random_connected(rng, &spec)
}

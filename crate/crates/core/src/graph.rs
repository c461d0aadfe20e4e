//! Weighted undirected graphs with exact rational weights.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, Zero};

use crate::error::{Error, Result};

/// Exact edge or cut weight.
pub type Weight = Ratio<i64>;

/// Vertex index in `0..n`.
pub type Vertex = usize;

static NEXT_GRAPH_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub weight: Weight,
    /// Weight scaled by the graph's common denominator.
    pub(crate) cap: i64,
}

impl Edge {
    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A connected, simple, positively weighted undirected graph.
///
/// Internally every weight is stored as an integer multiple of `1 / scale`,
/// where `scale` is the least common denominator of all edge weights, so
/// flows and cut weights are computed in exact integer arithmetic.
#[derive(Debug, Clone)]
pub struct Graph {
    id: u64,
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(Vertex, usize)>>,
    scale: i64,
    total: i64,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from `(u, v, w)` triples.
    ///
    /// Parallel edges are merged by summing their weights; the merged edge
    /// keeps the position of its first occurrence. Self-loops, non-positive
    /// weights and disconnected inputs are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Weight)>,
    {
        if n < 2 {
            return Err(Error::TooFewVertices(n));
        }
        let mut merged: Vec<(Vertex, Vertex, Weight)> = Vec::new();
        let mut index: HashMap<(Vertex, Vertex), usize> = HashMap::new();
        for (u, v, w) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if w <= Weight::zero() {
                return Err(Error::NonPositiveWeight { u, v });
            }
            let key = (u.min(v), u.max(v));
            match index.get(&key) {
                Some(&i) => {
                    let sum = merged[i].2.checked_add(&w).ok_or(Error::WeightOverflow)?;
                    merged[i].2 = sum;
                }
                None => {
                    index.insert(key, merged.len());
                    merged.push((u, v, w));
                }
            }
        }

        let mut scale: i64 = 1;
        for (_, _, w) in &merged {
            let d = *w.denom();
            let g = scale.gcd(&d);
            scale = (scale / g).checked_mul(d).ok_or(Error::WeightOverflow)?;
        }
        let mut total: i64 = 0;
        let mut out = Vec::with_capacity(merged.len());
        for (u, v, weight) in merged {
            let cap = weight
                .numer()
                .checked_mul(&(scale / weight.denom()))
                .ok_or(Error::WeightOverflow)?;
            total = total.checked_add(cap).ok_or(Error::WeightOverflow)?;
            out.push(Edge { u, v, weight, cap });
        }
        // Flow networks add "infinite" arcs of capacity total + 1 next to the
        // real ones; keep enough headroom that sums of those never overflow.
        if total.checked_mul(4 * n as i64).is_none() {
            return Err(Error::WeightOverflow);
        }

        let mut adj = vec![Vec::new(); n];
        for (i, e) in out.iter().enumerate() {
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
        let g = Graph {
            id: NEXT_GRAPH_ID.fetch_add(1, Ordering::Relaxed),
            n,
            edges: out,
            adj,
            scale,
            total,
        };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Graph with every listed edge at weight 1.
    pub fn unit(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        Graph::new(n, edges.iter().map(|&(u, v)| (u, v, Weight::from_integer(1))))
    }

    /// Identity used to reject mixing cuts of different graphs.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    /// `(neighbor, edge id)` pairs in input edge order.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn total_weight(&self) -> Weight {
        self.to_weight(self.total)
    }

    pub(crate) fn scale(&self) -> i64 {
        self.scale
    }

    pub(crate) fn total_raw(&self) -> i64 {
        self.total
    }

    pub(crate) fn to_weight(&self, raw: i64) -> Weight {
        Weight::new(raw, self.scale)
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &(y, _) in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.n
    }
}

//! Simple undirected graphs on dense integer labels, and families of graphs
//! sharing one vertex set.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    EmptyOrder,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("pairs {first} and {second} share an endpoint")]
    OverlappingPairs { first: Edge, second: Edge },
    #[error("member {member} has order {found}, family order is {expected}")]
    OrderMismatch { member: usize, expected: usize, found: usize },
}

/// Unordered vertex pair stored with the smaller label first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: usize,
    hi: usize,
}

impl Edge {
    /// Canonical pair for `{u, v}`. Panics on `u == v`.
    pub fn new(u: usize, v: usize) -> Self {
        assert_ne!(u, v, "an edge needs two distinct endpoints");
        Edge { lo: u.min(v), hi: u.max(v) }
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn hi(self) -> usize {
        self.hi
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.lo, self.hi)
    }

    pub fn touches(self, v: usize) -> bool {
        self.lo == v || self.hi == v
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.touches(other.lo) || self.touches(other.hi)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// A simple undirected graph on the label space `0..n`.
///
/// Adjacency is kept in ordered sets, so iteration over vertices, neighbours
/// and edges is always lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyOrder);
        }
        Ok(Graph { adj: alloc::vec![BTreeSet::new(); n], edge_count: 0 })
    }

    /// Builds a graph from a list of pairs; duplicates collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.insert(Edge::new(u, v));
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order() {
            Err(GraphError::OutOfRange { vertex: v, order: self.order() })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<Edge, GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(Edge::new(u, v))
    }

    /// Adds `{u, v}`. Returns `false` when the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let e = self.check_pair(u, v)?;
        Ok(self.insert(e))
    }

    pub(crate) fn insert(&mut self, e: Edge) -> bool {
        let fresh = self.adj[e.lo].insert(e.hi);
        if fresh {
            self.adj[e.hi].insert(e.lo);
            self.edge_count += 1;
        }
        fresh
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let e = self.check_pair(u, v)?;
        let present = self.adj[e.lo].remove(&e.hi);
        if present {
            self.adj[e.hi].remove(&e.lo);
            self.edge_count -= 1;
        }
        Ok(present)
    }

    /// Out-of-range labels and loops are simply reported as absent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(&v)
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.has_edge(e.lo, e.hi)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check(v)?;
        Ok(self.adj[v].len())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeSet::len).collect()
    }

    /// Number of vertices adjacent to both `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.adj[u].intersection(&self.adj[v]).count()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| Edge { lo: u, hi: v }))
    }

    pub fn edge_set(&self) -> BTreeSet<Edge> {
        self.edges().collect()
    }

    /// Image of the graph under `v ↦ map(v)`, which must be a permutation of
    /// `0..n`.
    pub fn relabel<F>(&self, map: F) -> Result<Graph, GraphError>
    where
        F: Fn(usize) -> usize,
    {
        let mut g = Graph::new(self.order())?;
        for e in self.edges() {
            g.add_edge(map(e.lo), map(e.hi))?;
        }
        Ok(g)
    }

    /// Copy of the graph on a larger label space; new vertices are isolated.
    pub fn with_order(&self, n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n)?;
        for e in self.edges() {
            g.add_edge(e.lo, e.hi)?;
        }
        Ok(g)
    }
}

/// `K_n` with the given pairs removed. The pairs must form a matching.
pub fn complete_minus_matching(n: usize, missing: &[(usize, usize)]) -> Result<Graph, GraphError> {
    let mut g = Graph::complete(n)?;
    let mut seen: Vec<Edge> = Vec::with_capacity(missing.len());
    for &(u, v) in missing {
        let e = g.check_pair(u, v)?;
        if let Some(&prev) = seen.iter().find(|p| p.shares_endpoint(e)) {
            return Err(GraphError::OverlappingPairs { first: prev, second: e });
        }
        seen.push(e);
        g.remove_edge(u, v)?;
    }
    Ok(g)
}

/// One graph of a family, optionally tagged with the step `d` of an
/// arithmetic outer cycle `(0, d, 2d, ...)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub graph: Graph,
    pub step: Option<usize>,
}

impl Member {
    pub fn new(graph: Graph) -> Self {
        Member { graph, step: None }
    }

    pub fn with_step(graph: Graph, step: usize) -> Self {
        Member { graph, step: Some(step) }
    }
}

/// First edge found in two members, `first < second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Collision {
    pub first: usize,
    pub second: usize,
    pub edge: Edge,
}

impl fmt::Display for Collision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "edge {} in members {} and {}", self.edge, self.first, self.second)
    }
}

/// An ordered list of graphs on the shared vertex set `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    n: usize,
    members: Vec<Member>,
}

impl Family {
    pub fn new(n: usize, members: Vec<Member>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyOrder);
        }
        for (i, m) in members.iter().enumerate() {
            if m.graph.order() != n {
                return Err(GraphError::OrderMismatch { member: i, expected: n, found: m.graph.order() });
            }
        }
        Ok(Family { n, members })
    }

    pub fn from_graphs(n: usize, graphs: Vec<Graph>) -> Result<Self, GraphError> {
        Family::new(n, graphs.into_iter().map(Member::new).collect())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Member count.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn member(&self, k: usize) -> &Graph {
        &self.members[k].graph
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.members.iter().map(|m| &m.graph)
    }

    pub fn into_members(self) -> Vec<Member> {
        self.members
    }

    /// Returns the first shared edge, scanning members in index order and
    /// each member's edges lexicographically.
    pub fn edges_disjoint(&self) -> Result<(), Collision> {
        let mut owner: BTreeMap<Edge, usize> = BTreeMap::new();
        for (j, g) in self.graphs().enumerate() {
            for e in g.edges() {
                if let Some(&i) = owner.get(&e) {
                    return Err(Collision { first: i, second: j, edge: e });
                }
                owner.insert(e, j);
            }
        }
        Ok(())
    }

    pub fn union(&self) -> Graph {
        let mut u = Graph { adj: alloc::vec![BTreeSet::new(); self.n], edge_count: 0 };
        for g in self.graphs() {
            for e in g.edges() {
                u.insert(e);
            }
        }
        u
    }

    pub fn total_edges(&self) -> usize {
        self.graphs().map(Graph::edge_count).sum()
    }
}

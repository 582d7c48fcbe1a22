//! Certificates of maximal outerplanarity.
//!
//! A maximal outerplanar graph on `n >= 3` vertices is a triangulated
//! polygon: a Hamiltonian outer cycle plus `n - 3` pairwise non-crossing
//! chords. [`certify_mop`] produces that decomposition and
//! [`verify_certificate`] re-checks one against a graph without trusting
//! whoever produced it.

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MopCertificate {
    /// Outer cycle as a vertex sequence, starting at vertex 0.
    pub cycle: Vec<usize>,
    /// The `n - 3` non-cycle edges, lexicographically sorted.
    pub chords: Vec<Edge>,
    /// `position[v]` is the index of `v` in `cycle`.
    pub position: Vec<usize>,
}

impl MopCertificate {
    pub fn order(&self) -> usize {
        self.cycle.len()
    }

    /// Consecutive cycle pairs in cycle order, closing edge last.
    pub fn outer_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.cycle.len();
        (0..n).map(move |i| Edge::new(self.cycle[i], self.cycle[(i + 1) % n]))
    }

    pub fn is_outer_edge(&self, e: Edge) -> bool {
        let n = self.cycle.len();
        let (Some(&a), Some(&b)) = (self.position.get(e.lo()), self.position.get(e.hi())) else {
            return false;
        };
        (a + 1) % n == b || (b + 1) % n == a
    }
}

/// Partition of a graph's edges by the number of common neighbours of
/// their endpoints.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeClassification {
    pub order: usize,
    /// Exactly one common neighbour.
    pub outer: Vec<Edge>,
    /// Exactly two common neighbours.
    pub chords: Vec<Edge>,
    /// Any other count.
    pub unclassified: Vec<Edge>,
}

impl EdgeClassification {
    /// Some edge fits neither class, or the outer candidates cannot close a
    /// Hamiltonian cycle because there are not exactly `n` of them.
    pub fn failed(&self) -> bool {
        !self.unclassified.is_empty() || self.outer.len() != self.order
    }
}

/// Candidate outer edges and chords. In a maximal outerplanar graph every
/// triangle is a face, so outer edges lie in one triangle and chords in two.
pub fn classify_edges(g: &Graph) -> EdgeClassification {
    let mut out = EdgeClassification { order: g.order(), ..EdgeClassification::default() };
    for e in g.edges() {
        match g.common_neighbors(e.lo(), e.hi()) {
            1 => out.outer.push(e),
            2 => out.chords.push(e),
            _ => out.unclassified.push(e),
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MopRejection {
    #[error("order {0} is below 3")]
    TooSmall(usize),
    #[error("edge count {found}, a maximal outerplanar graph needs {expected}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("edge {0} has neither one nor two common neighbours")]
    ClassificationFailure(Edge),
    #[error("outer candidates do not form a single Hamiltonian cycle")]
    NotHamiltonian,
    #[error("chords {0} and {1} cross")]
    CrossingChords(Edge, Edge),
}

/// Two chords cross when their endpoints strictly interleave along the
/// cycle. Chords sharing an endpoint never cross.
pub(crate) fn chords_cross(position: &[usize], a: Edge, b: Edge) -> bool {
    if a.shares_endpoint(b) {
        return false;
    }
    let (p, q) = ordered(position[a.lo()], position[a.hi()]);
    let inside = |v: usize| {
        let x = position[v];
        p < x && x < q
    };
    inside(b.lo()) != inside(b.hi())
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

pub(crate) fn first_crossing(position: &[usize], chords: &[Edge]) -> Option<(Edge, Edge)> {
    for (i, &a) in chords.iter().enumerate() {
        for &b in &chords[i + 1..] {
            if chords_cross(position, a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Walks a 2-regular edge set from vertex 0, taking the smaller neighbour
/// first. Returns `None` unless it is one cycle through all `n` vertices.
fn trace_cycle(n: usize, outer: &[Edge]) -> Option<Vec<usize>> {
    if outer.len() != n {
        return None;
    }
    let mut nbrs: Vec<Vec<usize>> = alloc::vec![Vec::with_capacity(2); n];
    for e in outer {
        nbrs[e.lo()].push(e.hi());
        nbrs[e.hi()].push(e.lo());
    }
    if nbrs.iter().any(|nb| nb.len() != 2) {
        return None;
    }
    let mut cycle = Vec::with_capacity(n);
    let mut seen = alloc::vec![false; n];
    let (mut prev, mut cur) = (usize::MAX, 0);
    while !seen[cur] {
        seen[cur] = true;
        cycle.push(cur);
        let nb = &nbrs[cur];
        let next = if prev == usize::MAX {
            nb[0].min(nb[1])
        } else if nb[0] == prev {
            nb[1]
        } else {
            nb[0]
        };
        prev = cur;
        cur = next;
    }
    (cycle.len() == n && cur == 0).then_some(cycle)
}

fn positions(cycle: &[usize]) -> Vec<usize> {
    let mut pos = alloc::vec![0; cycle.len()];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Certifies that `g` is maximal outerplanar.
pub fn certify_mop(g: &Graph) -> Result<MopCertificate, MopRejection> {
    let n = g.order();
    if n < 3 {
        return Err(MopRejection::TooSmall(n));
    }
    let expected = 2 * n - 3;
    if g.edge_count() != expected {
        return Err(MopRejection::WrongEdgeCount { expected, found: g.edge_count() });
    }
    let classes = classify_edges(g);
    if let Some(&e) = classes.unclassified.first() {
        return Err(MopRejection::ClassificationFailure(e));
    }
    let cycle = trace_cycle(n, &classes.outer).ok_or(MopRejection::NotHamiltonian)?;
    let position = positions(&cycle);
    if let Some((a, b)) = first_crossing(&position, &classes.chords) {
        return Err(MopRejection::CrossingChords(a, b));
    }
    Ok(MopCertificate { cycle, chords: classes.chords, position })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateDefect {
    #[error("cycle length {cycle} differs from graph order {order}")]
    CycleLength { cycle: usize, order: usize },
    #[error("cycle is not a permutation of the vertex set")]
    NotPermutation,
    #[error("position index disagrees with the cycle")]
    PositionMismatch,
    #[error("cycle pair {0} is not an edge of the graph")]
    MissingCycleEdge(Edge),
    #[error("expected {expected} chords, found {found}")]
    ChordCount { expected: usize, found: usize },
    #[error("chord {0} is not an edge of the graph, or lies on the cycle, or repeats")]
    BadChord(Edge),
    #[error("chords {0} and {1} cross")]
    Crossing(Edge, Edge),
    #[error("graph has {found} edges, certificate accounts for {expected}")]
    UnaccountedEdges { expected: usize, found: usize },
}

/// Re-validates every certificate invariant against `g`.
pub fn check_certificate(g: &Graph, c: &MopCertificate) -> Result<(), CertificateDefect> {
    let n = g.order();
    if c.cycle.len() != n || n < 3 {
        return Err(CertificateDefect::CycleLength { cycle: c.cycle.len(), order: n });
    }
    let mut seen = alloc::vec![false; n];
    for &v in &c.cycle {
        if v >= n || seen[v] {
            return Err(CertificateDefect::NotPermutation);
        }
        seen[v] = true;
    }
    if c.position.len() != n || c.cycle.iter().enumerate().any(|(i, &v)| c.position[v] != i) {
        return Err(CertificateDefect::PositionMismatch);
    }
    for e in c.outer_edges() {
        if !g.contains(e) {
            return Err(CertificateDefect::MissingCycleEdge(e));
        }
    }
    if c.chords.len() != n - 3 {
        return Err(CertificateDefect::ChordCount { expected: n - 3, found: c.chords.len() });
    }
    let mut chords = c.chords.clone();
    chords.sort_unstable();
    for (i, &e) in chords.iter().enumerate() {
        let repeated = i > 0 && chords[i - 1] == e;
        if repeated || e.hi() >= n || !g.contains(e) || c.is_outer_edge(e) {
            return Err(CertificateDefect::BadChord(e));
        }
    }
    if let Some((a, b)) = first_crossing(&c.position, &chords) {
        return Err(CertificateDefect::Crossing(a, b));
    }
    if g.edge_count() != 2 * n - 3 {
        return Err(CertificateDefect::UnaccountedEdges { expected: 2 * n - 3, found: g.edge_count() });
    }
    Ok(())
}

pub fn verify_certificate(g: &Graph, c: &MopCertificate) -> bool {
    check_certificate(g, c).is_ok()
}

impl fmt::Display for MopCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cycle (")?;
        for (i, v) in self.cycle.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "), {} chords", self.chords.len())
    }
}

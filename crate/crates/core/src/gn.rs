//! Rotated copies of the Guy–Nowakowski "graph zero", each completed to a
//! maximal outerplanar graph by one diagonal.
//!
//! Graph zero lives on `4r` vertices. Its four apexes `0, r, 2r, 3r` form a
//! square; between apex `qr` and apex `(q+1)r` the outer cycle runs through
//! the `r - 1` vertices `(q+1)r+1 ..= (q+2)r-1`, and apex `qr` fans out to
//! all of them. Along the arc the labels alternate from both ends of that
//! range, e.g. `.., r+2, 2r-2, r+1, 2r-1, r` approaching apex `r`, so the
//! vertex next to apex `qr` is `⌊(2q+3)r/2⌋`.

use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{complete_minus_matching, Collision, Edge, Family, Graph, Member};
use crate::mop::{certify_mop, MopRejection};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GnError {
    #[error("r must be at least 1")]
    ZeroR,
    #[error("graph index {index} out of range for r = {r}")]
    IndexOutOfRange { r: usize, index: usize },
    #[error("member {member} failed certification: {reason}")]
    NotMaximal { member: usize, reason: MopRejection },
    #[error("members overlap: {0}")]
    Overlap(Collision),
    #[error("union differs from K_4t minus the expected matching")]
    UnionMismatch,
}

/// Interior of the arc leaving apex `q·r`, in outer-cycle order.
fn arc(r: usize, q: usize) -> Vec<usize> {
    let n = 4 * r;
    let (mut lo, mut hi) = ((q + 1) * r + 1, (q + 2) * r - 1);
    let mut from_far_end = Vec::with_capacity(r.saturating_sub(1));
    while lo <= hi {
        from_far_end.push(hi % n);
        if lo != hi {
            from_far_end.push(lo % n);
        }
        lo += 1;
        hi -= 1;
    }
    from_far_end.reverse();
    from_far_end
}

/// Outer cycle of graph zero starting at apex 0.
pub fn graph_zero_cycle(r: usize) -> Result<Vec<usize>, GnError> {
    if r == 0 {
        return Err(GnError::ZeroR);
    }
    let mut cycle = Vec::with_capacity(4 * r);
    for q in 0..4 {
        cycle.push(q * r);
        cycle.extend(arc(r, q));
    }
    Ok(cycle)
}

/// Graph zero on `4r` vertices, `8r - 4` edges.
pub fn graph_zero(r: usize) -> Result<Graph, GnError> {
    let cycle = graph_zero_cycle(r)?;
    let n = 4 * r;
    let mut g = Graph::new(n).expect("n >= 4");
    for i in 0..n {
        g.insert(Edge::new(cycle[i], cycle[(i + 1) % n]));
    }
    for q in 0..4 {
        let apex = q * r;
        let next = ((q + 1) % 4) * r;
        if apex != next {
            g.insert(Edge::new(apex, next));
        }
        for v in arc(r, q) {
            g.insert(Edge::new(apex, v));
        }
    }
    Ok(g)
}

/// Graph `i`: graph zero shifted by `+i (mod 4r)` plus the diagonal
/// `{i, i + 2r}`.
pub fn gn_graph(r: usize, i: usize) -> Result<Graph, GnError> {
    if r == 0 {
        return Err(GnError::ZeroR);
    }
    if i >= r {
        return Err(GnError::IndexOutOfRange { r, index: i });
    }
    let n = 4 * r;
    let mut g = graph_zero(r)?.relabel(|v| (v + i) % n).expect("rotation is a permutation");
    g.insert(Edge::new(i, i + 2 * r));
    Ok(g)
}

/// The pairs `{i, i + 2t}` for `t <= i < 2t`, which no member covers.
pub fn gn_missing_matching(t: usize) -> Vec<(usize, usize)> {
    (t..2 * t).map(|i| (i, i + 2 * t)).collect()
}

/// `t` edge-disjoint maximal outerplanar graphs on `4t` vertices. The
/// result is checked before it is returned.
pub fn gn_family(t: usize) -> Result<Family, GnError> {
    if t == 0 {
        return Err(GnError::ZeroR);
    }
    let members = (0..t).map(|i| gn_graph(t, i).map(Member::new)).collect::<Result<Vec<_>, _>>()?;
    let family = Family::new(4 * t, members).expect("all members share order 4t");
    for (k, g) in family.graphs().enumerate() {
        certify_mop(g).map_err(|reason| GnError::NotMaximal { member: k, reason })?;
    }
    family.edges_disjoint().map_err(GnError::Overlap)?;
    let target = complete_minus_matching(4 * t, &gn_missing_matching(t)).expect("matching is valid");
    if family.union() != target {
        return Err(GnError::UnionMismatch);
    }
    Ok(family)
}

//! Exact outerplanarity test for small graphs.
//!
//! A graph is outerplanar iff each of its biconnected blocks is. A block on
//! `k >= 4` vertices is outerplanar iff it is a Hamiltonian cycle plus
//! pairwise non-crossing chords; its cycle edges are exactly the edges
//! `{u, v}` whose removal (of both endpoints) leaves the block connected,
//! since removing a chord's endpoints splits the cycle into two arcs that no
//! other chord may join.

use alloc::vec::Vec;

use thiserror::Error;

use crate::budget::Budgets;
use crate::graph::{Edge, Graph};
use crate::mop::first_crossing;

/// Hard ceiling of the bitmask representation.
pub const MASK_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("order {order} exceeds the oracle limit {limit}")]
pub struct OracleTooLarge {
    pub order: usize,
    pub limit: usize,
}

pub fn is_outerplanar_small(g: &Graph) -> Result<bool, OracleTooLarge> {
    is_outerplanar_bounded(g, Budgets::DEFAULT.outerplanar_max_n)
}

pub fn is_outerplanar_bounded(g: &Graph, max_n: usize) -> Result<bool, OracleTooLarge> {
    let limit = max_n.min(MASK_LIMIT);
    if g.order() > limit {
        return Err(OracleTooLarge { order: g.order(), limit });
    }
    Ok(outerplanar_masks(&adjacency_masks(g)))
}

pub(crate) fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w)).collect()
}

pub(crate) fn outerplanar_masks(adj: &[u64]) -> bool {
    let n = adj.len();
    let m: u32 = adj.iter().map(|a| a.count_ones()).sum::<u32>() / 2;
    if n >= 2 && m as usize > 2 * n - 3 {
        return false;
    }
    blocks(adj).into_iter().all(|b| block_outerplanar(adj, b))
}

struct Tarjan<'a> {
    adj: &'a [u64],
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<u64>,
}

const UNSEEN: usize = usize::MAX;

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut rest = self.adj[u];
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.disc[v] == UNSEEN {
                self.stack.push((u, v));
                self.visit(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    let mut mask = 0u64;
                    while let Some((a, b)) = self.stack.pop() {
                        mask |= 1 << a | 1 << b;
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(mask);
                }
            } else if v != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Vertex sets of the biconnected blocks (bridges included).
fn blocks(adj: &[u64]) -> Vec<u64> {
    let n = adj.len();
    let mut t = Tarjan {
        adj,
        disc: alloc::vec![UNSEEN; n],
        low: alloc::vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if t.disc[v] == UNSEEN {
            t.visit(v, UNSEEN);
        }
    }
    t.blocks
}

fn above(v: usize) -> u64 {
    u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0)
}

fn connected(mask: u64, adj: &[u64]) -> bool {
    if mask == 0 {
        return true;
    }
    let mut reach = 1u64 << mask.trailing_zeros();
    loop {
        let mut next = reach;
        let mut it = reach;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            next |= adj[v] & mask;
        }
        if next == reach {
            return reach == mask;
        }
        reach = next;
    }
}

fn block_outerplanar(adj: &[u64], block: u64) -> bool {
    let k = block.count_ones() as usize;
    if k <= 3 {
        return true;
    }
    let mut outer: Vec<Edge> = Vec::new();
    let mut chords: Vec<Edge> = Vec::new();
    let mut it = block;
    while it != 0 {
        let u = it.trailing_zeros() as usize;
        it &= it - 1;
        let mut nb = adj[u] & block & above(u);
        while nb != 0 {
            let v = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let rest = block & !(1 << u) & !(1 << v);
            if connected(rest, adj) {
                outer.push(Edge::new(u, v));
            } else {
                chords.push(Edge::new(u, v));
            }
        }
    }
    if outer.len() + chords.len() > 2 * k - 3 || outer.len() != k {
        return false;
    }
    let Some(position) = cycle_positions(adj.len(), block, &outer) else {
        return false;
    };
    first_crossing(&position, &chords).is_none()
}

/// Cyclic positions of the block's vertices if `outer` is one cycle through
/// all of them; vertices outside the block keep position 0 and are never
/// consulted.
fn cycle_positions(n: usize, block: u64, outer: &[Edge]) -> Option<Vec<usize>> {
    let mut nbrs: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    for e in outer {
        nbrs[e.lo()].push(e.hi());
        nbrs[e.hi()].push(e.lo());
    }
    let start = block.trailing_zeros() as usize;
    let k = block.count_ones() as usize;
    let mut position = alloc::vec![0usize; n];
    let mut visited = 0u64;
    let (mut prev, mut cur) = (usize::MAX, start);
    for i in 0..k {
        if nbrs[cur].len() != 2 || visited & 1 << cur != 0 {
            return None;
        }
        visited |= 1 << cur;
        position[cur] = i;
        let next = if nbrs[cur][0] == prev { nbrs[cur][1] } else { nbrs[cur][0] };
        prev = cur;
        cur = next;
    }
    (cur == start && visited == block).then_some(position)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k23() -> Graph {
        Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn forbidden_minors_themselves() {
        assert_eq!(is_outerplanar_small(&k23()), Ok(false));
        assert_eq!(is_outerplanar_small(&Graph::complete(4).unwrap()), Ok(false));
    }

    #[test]
    fn fig6_right_member_is_outerplanar() {
        let g = Graph::from_edges(7, [(0, 3), (3, 6), (1, 3), (3, 5), (4, 6), (1, 6), (1, 4), (1, 5), (0, 5)]).unwrap();
        assert_eq!(is_outerplanar_small(&g), Ok(true));
    }

    #[test]
    fn forests_and_cycles() {
        let star = Graph::from_edges(32, (1..32).map(|v| (0, v))).unwrap();
        assert_eq!(is_outerplanar_small(&star), Ok(true));
        let path = Graph::from_edges(32, (1..32).map(|v| (v - 1, v))).unwrap();
        assert_eq!(is_outerplanar_small(&path), Ok(true));
        let cycle = Graph::from_edges(12, (0..12).map(|v| (v, (v + 1) % 12))).unwrap();
        assert_eq!(is_outerplanar_small(&cycle), Ok(true));
        assert_eq!(is_outerplanar_small(&Graph::new(1).unwrap()), Ok(true));
    }

    #[test]
    fn blocks_glued_at_cut_vertices() {
        // two K4-e blocks sharing vertex 3, plus a pendant triangle
        let g = Graph::from_edges(
            9,
            [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4), (4, 5), (5, 6), (6, 3), (3, 5), (6, 7), (7, 8), (8, 6)],
        )
        .unwrap();
        assert_eq!(is_outerplanar_small(&g), Ok(true));
        let mut h = g.clone();
        h.add_edge(1, 3).unwrap();
        assert_eq!(is_outerplanar_small(&h), Ok(false));
    }

    #[test]
    fn subdivided_k4_is_rejected() {
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 4), (1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]).unwrap();
        // triangle 0,1,2 with a path 3,4,5 attached to all three corners
        let h = Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (1, 4), (4, 5), (2, 5)]).unwrap();
        assert_eq!(is_outerplanar_small(&g), Ok(false));
        assert_eq!(is_outerplanar_small(&h), Ok(false));
    }

    #[test]
    fn oracle_cap() {
        let g = Graph::new(33).unwrap();
        assert_eq!(is_outerplanar_small(&g), Err(OracleTooLarge { order: 33, limit: 32 }));
        assert_eq!(is_outerplanar_bounded(&g, 40), Ok(true));
    }
}

//! Exact chromatic number by branch and bound, for small graphs.

use alloc::vec::Vec;

use thiserror::Error;

use crate::budget::Budgets;
use crate::graph::Graph;
use crate::outerplanar::adjacency_masks;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("order {order} exceeds the colouring budget {limit}")]
pub struct ColorTooLarge {
    pub order: usize,
    pub limit: usize,
}

/// Size of a largest clique, by growing cliques over candidate masks.
pub fn clique_number(adj: &[u64]) -> usize {
    fn grow(adj: &[u64], size: usize, cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow(adj, size + 1, rest & adj[v], best);
            if size + rest.count_ones() as usize <= *best {
                return;
            }
        }
    }
    let all = if adj.len() >= 64 { u64::MAX } else { (1u64 << adj.len()) - 1 };
    let mut best = 0;
    grow(adj, 0, all, &mut best);
    best
}

fn colourable(adj: &[u64], order: &[usize], colours: &mut [usize], idx: usize, k: usize, used: usize) -> bool {
    let Some(&v) = order.get(idx) else {
        return true;
    };
    // a fresh colour is equivalent to any other fresh one
    for c in 0..(used + 1).min(k) {
        let clash = order[..idx].iter().any(|&w| adj[v] & 1 << w != 0 && colours[w] == c);
        if !clash {
            colours[v] = c;
            if colourable(adj, order, colours, idx + 1, k, used.max(c + 1)) {
                return true;
            }
        }
    }
    false
}

/// Smallest `k` for which a proper `k`-colouring exists. The clique number
/// is the starting lower bound.
pub fn chromatic_number_exact(g: &Graph, budgets: &Budgets) -> Result<usize, ColorTooLarge> {
    let n = g.order();
    if n > budgets.color_max_n || n > crate::outerplanar::MASK_LIMIT {
        return Err(ColorTooLarge { order: n, limit: budgets.color_max_n });
    }
    let adj = adjacency_masks(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(adj[v].count_ones()), v));
    let mut colours = alloc::vec![0; n];
    let mut k = clique_number(&adj).max(1);
    while !colourable(&adj, &order, &mut colours, 0, k, 0) {
        k += 1;
    }
    Ok(k)
}

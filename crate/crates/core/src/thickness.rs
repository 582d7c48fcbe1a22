//! Exhaustive outerthickness search for desk-scale graphs.

use alloc::vec::Vec;

use thiserror::Error;

use crate::budget::Budgets;
use crate::graph::{Edge, Graph};
use crate::outerplanar::{is_outerplanar_bounded, outerplanar_masks};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// `k` outerplanar edge sets partitioning the input.
    Decomposition { parts: Vec<Graph>, nodes: u64 },
    /// Every assignment was explored (up to colour symmetry).
    Refuted { nodes: u64 },
}

impl SearchOutcome {
    pub fn nodes(&self) -> u64 {
        match self {
            SearchOutcome::Decomposition { nodes, .. } | SearchOutcome::Refuted { nodes } => *nodes,
        }
    }

    pub fn parts(&self) -> Option<&[Graph]> {
        match self {
            SearchOutcome::Decomposition { parts, .. } => Some(parts),
            SearchOutcome::Refuted { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("part count must be positive")]
    NoParts,
    #[error("graph with {n} vertices and {m} edges exceeds the search budget ({max_n} vertices, {max_m} edges)")]
    TooLarge { n: usize, m: usize, max_n: usize, max_m: usize },
    #[error("search stopped after {nodes} nodes without a verdict")]
    BudgetExceeded { nodes: u64 },
}

struct Search<'a> {
    n: usize,
    edges: &'a [Edge],
    cap: usize,
    parts: Vec<Vec<u64>>,
    sizes: Vec<usize>,
    colour: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Search<'_> {
    fn run(&mut self, idx: usize, used: usize) -> Step {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Step::OutOfBudget;
        }
        if idx == self.edges.len() {
            return Step::Found;
        }
        let free: usize = self.sizes.iter().map(|&s| self.cap - s).sum();
        if free < self.edges.len() - idx {
            return Step::Exhausted;
        }
        let (u, v) = self.edges[idx].endpoints();
        // a colour never used before is interchangeable with any other unused one
        let limit = (used + 1).min(self.parts.len());
        for c in 0..limit {
            if self.sizes[c] == self.cap {
                continue;
            }
            self.parts[c][u] |= 1 << v;
            self.parts[c][v] |= 1 << u;
            self.sizes[c] += 1;
            if outerplanar_masks(&self.parts[c]) {
                self.colour[idx] = c;
                match self.run(idx + 1, used.max(c + 1)) {
                    Step::Exhausted => {}
                    other => return other,
                }
            }
            self.parts[c][u] &= !(1 << v);
            self.parts[c][v] &= !(1 << u);
            self.sizes[c] -= 1;
        }
        Step::Exhausted
    }
}

/// Searches for a partition of `g`'s edges into `k` outerplanar graphs.
///
/// Edges are coloured in lexicographic order, colours tried in ascending
/// index, and a new colour is only opened after all lower ones are in use,
/// so the first edge always gets colour 0. The verdict and the returned
/// decomposition are therefore fixed for a given input.
pub fn outerthickness_exact(g: &Graph, k: usize, budgets: &Budgets) -> Result<SearchOutcome, SearchError> {
    if k == 0 {
        return Err(SearchError::NoParts);
    }
    let (n, m) = (g.order(), g.edge_count());
    if n > budgets.search_max_n || m > budgets.search_max_m || n > crate::outerplanar::MASK_LIMIT {
        return Err(SearchError::TooLarge { n, m, max_n: budgets.search_max_n, max_m: budgets.search_max_m });
    }
    let edges: Vec<Edge> = g.edges().collect();
    let cap = if n >= 2 { 2 * n - 3 } else { 0 };
    let mut search = Search {
        n,
        edges: &edges,
        cap,
        parts: alloc::vec![alloc::vec![0u64; n]; k],
        sizes: alloc::vec![0; k],
        colour: alloc::vec![0; m],
        nodes: 0,
        max_nodes: budgets.search_max_nodes,
    };
    match search.run(0, 0) {
        Step::Found => {}
        Step::Exhausted => return Ok(SearchOutcome::Refuted { nodes: search.nodes }),
        Step::OutOfBudget => return Err(SearchError::BudgetExceeded { nodes: budgets.search_max_nodes }),
    }
    let mut parts: Vec<Graph> = (0..k).map(|_| Graph::new(search.n).expect("order is positive")).collect();
    for (e, &c) in edges.iter().zip(&search.colour) {
        parts[c].insert(*e);
    }
    debug_assert!(parts.iter().all(|p| is_outerplanar_bounded(p, n) == Ok(true)));
    Ok(SearchOutcome::Decomposition { parts, nodes: search.nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outerplanar::is_outerplanar_small;

    fn assert_partition(g: &Graph, parts: &[Graph]) {
        let total: usize = parts.iter().map(Graph::edge_count).sum();
        assert_eq!(total, g.edge_count());
        for e in g.edges() {
            assert_eq!(parts.iter().filter(|p| p.contains(e)).count(), 1);
        }
        for p in parts {
            assert_eq!(is_outerplanar_small(p), Ok(true));
        }
    }

    #[test]
    fn k4_splits_in_two() {
        let k4 = Graph::complete(4).unwrap();
        let out = outerthickness_exact(&k4, 2, &Budgets::DEFAULT).unwrap();
        assert_partition(&k4, out.parts().unwrap());
        assert!(matches!(outerthickness_exact(&k4, 1, &Budgets::DEFAULT), Ok(SearchOutcome::Refuted { .. })));
    }

    #[test]
    fn triangle_is_its_own_decomposition() {
        let k3 = Graph::complete(3).unwrap();
        let out = outerthickness_exact(&k3, 1, &Budgets::DEFAULT).unwrap();
        assert_eq!(out.parts().unwrap(), &[k3][..]);
    }

    #[test]
    fn budgets_are_enforced() {
        let k11 = Graph::complete(11).unwrap();
        assert!(matches!(outerthickness_exact(&k11, 3, &Budgets::DEFAULT), Err(SearchError::TooLarge { .. })));
        let tight = Budgets { search_max_nodes: 10, ..Budgets::DEFAULT };
        let k6 = Graph::complete(6).unwrap();
        assert_eq!(outerthickness_exact(&k6, 2, &tight), Err(SearchError::BudgetExceeded { nodes: 10 }));
        assert_eq!(outerthickness_exact(&k6, 0, &Budgets::DEFAULT), Err(SearchError::NoParts));
    }
}

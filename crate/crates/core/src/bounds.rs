//! Counting bounds for edge-disjoint maximal outerplanar families and the
//! small examples built on top of the constructions.

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::budget::Budgets;
use crate::extension::{extend_to, ExtensionError};
use crate::gn::{gn_family, GnError};
use crate::graph::{complete_minus_matching, Family, Graph};
use crate::thickness::{outerthickness_exact, SearchError, SearchOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("t must be at least 1")]
    ZeroT,
    #[error("order {0} is below 3")]
    TooFewVertices(usize),
    #[error("order {n} is below the minimum {min} for t = {t}")]
    BelowMinimum { t: usize, n: usize, min: usize },
    #[error(transparent)]
    Gn(#[from] GnError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
}

/// Fewest vertices carrying `t` edge-disjoint maximal outerplanar graphs:
/// `K_3` for one graph, `4t` otherwise.
pub fn min_vertices(t: usize) -> Result<usize, BoundsError> {
    match t {
        0 => Err(BoundsError::ZeroT),
        1 => Ok(3),
        _ => Ok(4 * t),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub t: usize,
    pub n: usize,
    /// `t(2n - 3)`.
    pub total_edges: usize,
    /// `C(n, 2)`.
    pub capacity: usize,
    /// `n² - (4t+1)n + 6t`, non-negative iff the edges fit.
    pub quadratic: i64,
    /// More edges than vertex pairs.
    pub counting_infeasible: bool,
    /// `t >= 2` and `n < 4t`.
    pub order_infeasible: bool,
    pub min_vertices: usize,
}

impl BoundReport {
    pub fn feasible(&self) -> bool {
        !self.counting_infeasible && !self.order_infeasible
    }
}

pub fn quadratic(t: usize, n: usize) -> i64 {
    let (t, n) = (t as i64, n as i64);
    n * n - (4 * t + 1) * n + 6 * t
}

/// Whether `t` edge-disjoint maximal outerplanar graphs can live on `n`
/// vertices, reporting the raw edge count and the vertex lower bound
/// separately.
pub fn counting_check(t: usize, n: usize) -> Result<BoundReport, BoundsError> {
    let min = min_vertices(t)?;
    if n < 3 {
        return Err(BoundsError::TooFewVertices(n));
    }
    let total_edges = t * (2 * n - 3);
    let capacity = n * (n - 1) / 2;
    Ok(BoundReport {
        t,
        n,
        total_edges,
        capacity,
        quadratic: quadratic(t, n),
        counting_infeasible: total_edges > capacity,
        order_infeasible: t >= 2 && n < min,
        min_vertices: min,
    })
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "t {}", self.t)?;
        writeln!(f, "n {}", self.n)?;
        writeln!(f, "edges {}", self.total_edges)?;
        writeln!(f, "capacity {}", self.capacity)?;
        writeln!(f, "quadratic {}", self.quadratic)?;
        writeln!(f, "min_vertices {}", self.min_vertices)?;
        writeln!(f, "counting {}", if self.counting_infeasible { "infeasible" } else { "feasible" })?;
        writeln!(f, "lower_bound {}", if self.order_infeasible { "infeasible" } else { "feasible" })?;
        writeln!(f, "verdict {}", if self.feasible() { "feasible" } else { "infeasible" })
    }
}

/// A graph with `t(2n - 3)` edges together with its decomposition into
/// `t` maximal outerplanar graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalWitness {
    pub graph: Graph,
    pub family: Family,
}

/// Rotated-graph-zero family on `4t` vertices, grown to `n` vertices. For
/// `t = 1, n = 3` the witness is `K_3`.
pub fn optimal_ot_graph(t: usize, n: usize) -> Result<OptimalWitness, BoundsError> {
    let min = min_vertices(t)?;
    if n < min {
        return Err(BoundsError::BelowMinimum { t, n, min });
    }
    let family = if n == 3 {
        Family::from_graphs(3, alloc::vec![Graph::complete(3).expect("n = 3")]).expect("order 3")
    } else {
        extend_to(&gn_family(t)?, n, false)?
    };
    Ok(OptimalWitness { graph: family.union(), family })
}

/// The two edge sets of a decomposition of `K_7 - {0,4}`: a maximal
/// outerplanar graph with outer cycle `0..6` and an outerplanar graph with
/// outer cycle `0,3,6,4,1,5` in which vertex 2 is isolated.
pub fn k7_minus_e_decomposition() -> Family {
    const MAXIMAL: [(usize, usize); 11] =
        [(0, 1), (0, 2), (0, 6), (1, 2), (2, 6), (2, 5), (2, 4), (2, 3), (3, 4), (4, 5), (5, 6)];
    const PARTIAL: [(usize, usize); 9] = [(0, 3), (3, 6), (1, 3), (3, 5), (4, 6), (1, 6), (1, 4), (1, 5), (0, 5)];
    let graphs: Vec<Graph> = [&MAXIMAL[..], &PARTIAL[..]]
        .into_iter()
        .map(|edges| Graph::from_edges(7, edges.iter().copied()).expect("labels below 7"))
        .collect();
    Family::from_graphs(7, graphs).expect("both members have order 7")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K7eWitness {
    pub k7e_two: SearchOutcome,
    pub k7_two: SearchOutcome,
    pub k7_three: SearchOutcome,
}

impl K7eWitness {
    /// `K_7 - e` splits into two outerplanar graphs, `K_7` does not, and
    /// `K_7 - e` has fewer than `2(2·7 - 3)` edges.
    pub fn confirms(&self) -> bool {
        let k7e_edges = complete_minus_matching(7, &[(0, 4)]).expect("valid pair").edge_count();
        matches!(self.k7e_two, SearchOutcome::Decomposition { .. })
            && matches!(self.k7_two, SearchOutcome::Refuted { .. })
            && matches!(self.k7_three, SearchOutcome::Decomposition { .. })
            && k7e_edges < 2 * (2 * 7 - 3)
    }
}

/// Exhaustive searches showing that adding the missing edge to `K_7 - e`
/// raises its outerthickness from 2 to 3.
pub fn maximality_witness_k7e(budgets: &Budgets) -> Result<K7eWitness, SearchError> {
    let k7 = Graph::complete(7).expect("n = 7");
    let k7e = complete_minus_matching(7, &[(0, 4)]).expect("valid pair");
    Ok(K7eWitness {
        k7e_two: outerthickness_exact(&k7e, 2, budgets)?,
        k7_two: outerthickness_exact(&k7, 2, budgets)?,
        k7_three: outerthickness_exact(&k7, 3, budgets)?,
    })
}

/// An outerthickness-2 graph with more edges than any 1-planar graph on the
/// same vertex count allows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub witness: OptimalWitness,
    pub edges: usize,
    /// `4n - 8`.
    pub one_planar_limit: usize,
}

impl Separation {
    pub fn separates(&self) -> bool {
        self.edges > self.one_planar_limit
    }
}

pub fn one_planar_separation(n: usize) -> Result<Separation, BoundsError> {
    let witness = optimal_ot_graph(2, n)?;
    let edges = witness.graph.edge_count();
    Ok(Separation { witness, edges, one_planar_limit: 4 * n - 8 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mop::certify_mop;
    use crate::outerplanar::is_outerplanar_small;

    #[test]
    fn minimum_orders() {
        assert_eq!(min_vertices(1), Ok(3));
        assert_eq!(min_vertices(2), Ok(8));
        assert_eq!(min_vertices(10), Ok(40));
        assert_eq!(min_vertices(0), Err(BoundsError::ZeroT));
    }

    #[test]
    fn reports() {
        let r = counting_check(2, 7).unwrap();
        assert_eq!((r.total_edges, r.capacity), (22, 21));
        assert!(r.counting_infeasible && !r.feasible());

        let r = counting_check(2, 8).unwrap();
        assert_eq!((r.total_edges, r.capacity), (26, 28));
        assert!(r.feasible());

        let r = counting_check(3, 11).unwrap();
        assert!(r.order_infeasible);
        assert_eq!(r.quadratic, -4);
    }

    #[test]
    fn quadratic_at_one_below_the_bound() {
        for t in 2..40 {
            assert_eq!(quadratic(t, 4 * t - 1), 2 - 2 * t as i64);
        }
    }

    #[test]
    fn witnesses() {
        let w = optimal_ot_graph(1, 3).unwrap();
        assert_eq!(w.graph, Graph::complete(3).unwrap());
        let w = optimal_ot_graph(2, 8).unwrap();
        assert_eq!(w.graph.edge_count(), 26);
        let w = optimal_ot_graph(3, 14).unwrap();
        assert_eq!(w.graph.edge_count(), 75);
        assert_eq!(w.family.len(), 3);
        assert!(matches!(optimal_ot_graph(2, 7), Err(BoundsError::BelowMinimum { .. })));
    }

    #[test]
    fn k7e_pictures() {
        let f = k7_minus_e_decomposition();
        assert_eq!(f.member(0).edge_count(), 11);
        assert_eq!(f.member(1).edge_count(), 9);
        assert!(certify_mop(f.member(0)).is_ok());
        assert!(certify_mop(f.member(1)).is_err());
        assert_eq!(is_outerplanar_small(f.member(1)), Ok(true));
        assert_eq!(f.edges_disjoint(), Ok(()));
        assert_eq!(f.union(), complete_minus_matching(7, &[(0, 4)]).unwrap());
    }

    #[test]
    fn separation_counts() {
        for (n, e, lim) in [(8, 26, 24), (9, 30, 28), (20, 74, 72)] {
            let s = one_planar_separation(n).unwrap();
            assert_eq!((s.edges, s.one_planar_limit), (e, lim));
            assert!(s.separates());
        }
    }
}

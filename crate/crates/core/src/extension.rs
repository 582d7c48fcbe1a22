//! Growing a family of edge-disjoint maximal outerplanar graphs by one
//! vertex.
//!
//! Pick one outer edge `{u_i, v_i}` per member so that the picks form a
//! matching, then hang the new vertex `x = n` on each picked edge as an ear.
//! The new edges `{u_i, x}`, `{v_i, x}` are distinct across members because
//! the picks share no endpoint.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Collision, Edge, Family, Member};
use crate::mop::{certify_mop, MopCertificate, MopRejection};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("member {member} is not maximal outerplanar: {reason}")]
    NotMaximal { member: usize, reason: MopRejection },
    #[error("every outer edge of member {member} is blocked")]
    NoFreeEdge { member: usize },
    #[error("plan has {found} edges for {expected} members")]
    PlanLength { expected: usize, found: usize },
    #[error("plan edge {edge} is not on the outer cycle of member {member}")]
    NotOuter { member: usize, edge: Edge },
    #[error("plan edges {0} and {1} share an endpoint")]
    NotMatching(Edge, Edge),
    #[error("new vertex must be {expected}, plan says {found}")]
    StaleVertex { expected: usize, found: usize },
    #[error("target order {target} is below the current order {current}")]
    Shrinking { current: usize, target: usize },
    #[error("members overlap: {0}")]
    Overlap(Collision),
    #[error("at order {at}: {source}")]
    At {
        at: usize,
        #[source]
        source: alloc::boxed::Box<ExtensionError>,
    },
}

/// One outer edge per member plus the label of the vertex to add.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionPlan {
    pub picks: Vec<Edge>,
    pub new_vertex: usize,
}

fn certificates(f: &Family) -> Result<Vec<MopCertificate>, ExtensionError> {
    f.graphs()
        .enumerate()
        .map(|(member, g)| certify_mop(g).map_err(|reason| ExtensionError::NotMaximal { member, reason }))
        .collect()
}

/// Greedy matching in member order; each member takes its lexicographically
/// smallest outer edge with no endpoint used by an earlier pick.
pub fn plan_extension(f: &Family) -> Result<ExtensionPlan, ExtensionError> {
    let certs = certificates(f)?;
    plan_from_certificates(f.order(), &certs)
}

fn plan_from_certificates(n: usize, certs: &[MopCertificate]) -> Result<ExtensionPlan, ExtensionError> {
    let mut blocked = alloc::vec![false; n];
    let mut picks = Vec::with_capacity(certs.len());
    for (member, cert) in certs.iter().enumerate() {
        let free: BTreeSet<Edge> = cert.outer_edges().filter(|e| !blocked[e.lo()] && !blocked[e.hi()]).collect();
        let &pick = free.first().ok_or(ExtensionError::NoFreeEdge { member })?;
        blocked[pick.lo()] = true;
        blocked[pick.hi()] = true;
        picks.push(pick);
    }
    Ok(ExtensionPlan { picks, new_vertex: n })
}

fn check_plan(f: &Family, certs: &[MopCertificate], plan: &ExtensionPlan) -> Result<(), ExtensionError> {
    if plan.new_vertex != f.order() {
        return Err(ExtensionError::StaleVertex { expected: f.order(), found: plan.new_vertex });
    }
    if plan.picks.len() != f.len() {
        return Err(ExtensionError::PlanLength { expected: f.len(), found: plan.picks.len() });
    }
    for (member, (&edge, cert)) in plan.picks.iter().zip(certs).enumerate() {
        if !f.member(member).contains(edge) || !cert.is_outer_edge(edge) {
            return Err(ExtensionError::NotOuter { member, edge });
        }
    }
    for (i, &a) in plan.picks.iter().enumerate() {
        if let Some(&b) = plan.picks[i + 1..].iter().find(|b| a.shares_endpoint(**b)) {
            return Err(ExtensionError::NotMatching(a, b));
        }
    }
    Ok(())
}

/// Applies a plan: every member gains vertex `n` and the two edges joining
/// it to its picked outer edge. Step metadata is dropped, as the new outer
/// cycles are no longer arithmetic.
pub fn extend_family(f: &Family, plan: &ExtensionPlan) -> Result<Family, ExtensionError> {
    let certs = certificates(f)?;
    check_plan(f, &certs, plan)?;
    Ok(apply(f, plan))
}

fn apply(f: &Family, plan: &ExtensionPlan) -> Family {
    let x = plan.new_vertex;
    let members = f
        .graphs()
        .zip(&plan.picks)
        .map(|(g, pick)| {
            let mut h = g.with_order(x + 1).expect("positive order");
            h.insert(Edge::new(pick.lo(), x));
            h.insert(Edge::new(pick.hi(), x));
            Member::new(h)
        })
        .collect();
    Family::new(x + 1, members).expect("members share the new order")
}

/// Certifies every member and checks pairwise disjointness.
pub fn verify_mop_family(f: &Family) -> Result<(), ExtensionError> {
    certificates(f)?;
    f.edges_disjoint().map_err(ExtensionError::Overlap)
}

/// Repeats plan-and-extend until the family has `target` vertices. In
/// strict mode every intermediate family is verified, otherwise only the
/// result.
pub fn extend_to(f: &Family, target: usize, strict: bool) -> Result<Family, ExtensionError> {
    if target < f.order() {
        return Err(ExtensionError::Shrinking { current: f.order(), target });
    }
    let at = |n: usize| move |e: ExtensionError| ExtensionError::At { at: n, source: alloc::boxed::Box::new(e) };
    let mut cur = f.clone();
    while cur.order() < target {
        let n = cur.order();
        let certs = certificates(&cur).map_err(at(n))?;
        if strict {
            cur.edges_disjoint().map_err(ExtensionError::Overlap).map_err(at(n))?;
        }
        let plan = plan_from_certificates(n, &certs).map_err(at(n))?;
        cur = apply(&cur, &plan);
    }
    verify_mop_family(&cur).map_err(at(cur.order()))?;
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use alloc::vec;

    fn triangle_family() -> Family {
        Family::from_graphs(3, vec![Graph::complete(3).unwrap()]).unwrap()
    }

    #[test]
    fn triangle_plan() {
        let plan = plan_extension(&triangle_family()).unwrap();
        assert_eq!(plan, ExtensionPlan { picks: vec![Edge::new(0, 1)], new_vertex: 3 });
        let ext = extend_family(&triangle_family(), &plan).unwrap();
        assert_eq!(ext.member(0).edge_count(), 5);
        assert!(certify_mop(ext.member(0)).is_ok());
    }

    #[test]
    fn bad_plans_are_rejected() {
        let f = triangle_family();
        let stale = ExtensionPlan { picks: vec![Edge::new(0, 1)], new_vertex: 4 };
        assert_eq!(extend_family(&f, &stale), Err(ExtensionError::StaleVertex { expected: 3, found: 4 }));
        let short = ExtensionPlan { picks: vec![], new_vertex: 3 };
        assert!(matches!(extend_family(&f, &short), Err(ExtensionError::PlanLength { .. })));

        let diamond = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let f = Family::from_graphs(4, vec![diamond]).unwrap();
        let chord = ExtensionPlan { picks: vec![Edge::new(0, 2)], new_vertex: 4 };
        assert_eq!(extend_family(&f, &chord), Err(ExtensionError::NotOuter { member: 0, edge: Edge::new(0, 2) }));
    }

    #[test]
    fn overlapping_picks_are_rejected() {
        let f = crate::doubling::doubling_family(1, &crate::budget::Budgets::DEFAULT).unwrap();
        let plan = ExtensionPlan { picks: vec![Edge::new(0, 1), Edge::new(0, 3)], new_vertex: 8 };
        assert_eq!(extend_family(&f, &plan), Err(ExtensionError::NotMatching(Edge::new(0, 1), Edge::new(0, 3))));
        let plan = plan_extension(&f).unwrap();
        assert_eq!(plan.picks, vec![Edge::new(0, 1), Edge::new(2, 5)]);
    }

    #[test]
    fn no_free_edge_is_reported() {
        // two copies of K3 on the same three vertices: second member is fully blocked
        let f = Family::from_graphs(3, vec![Graph::complete(3).unwrap(), Graph::complete(3).unwrap()]).unwrap();
        assert_eq!(plan_extension(&f), Err(ExtensionError::NoFreeEdge { member: 1 }));
    }

    #[test]
    fn extend_to_identity_and_shrink() {
        let f = triangle_family();
        assert_eq!(extend_to(&f, 3, true).unwrap(), f);
        assert_eq!(extend_to(&f, 2, true), Err(ExtensionError::Shrinking { current: 3, target: 2 }));
        let g = extend_to(&f, 9, true).unwrap();
        assert_eq!(g.member(0).edge_count(), 15);
    }
}

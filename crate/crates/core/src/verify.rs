//! Whole-family verification.

use alloc::vec::Vec;
use core::fmt;

use crate::bounds::{counting_check, BoundReport};
use crate::budget::Budgets;
use crate::doubling::realizes_step;
use crate::graph::{Collision, Family};
use crate::mop::{certify_mop, verify_certificate, MopCertificate, MopRejection};
use crate::outerplanar::{is_outerplanar_bounded, OracleTooLarge};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    /// Accept members that are outerplanar without being maximal.
    pub allow_nonmaximal: bool,
    pub budgets: Budgets,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MemberStatus {
    Maximal(MopCertificate),
    /// Not maximal, but the outerplanarity oracle accepts it.
    Outerplanar(MopRejection),
    NotOuterplanar(MopRejection),
    /// Not maximal, and too large for the oracle.
    Unknown(MopRejection, OracleTooLarge),
    /// Not maximal; the oracle was not consulted.
    Rejected(MopRejection),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemberReport {
    pub edges: usize,
    pub max_degree: usize,
    /// Vertices of maximum degree.
    pub peak_vertices: Vec<usize>,
    pub status: MemberStatus,
    pub step: Option<usize>,
    /// Whether the outer cycle is arithmetic with the recorded step.
    pub step_ok: Option<bool>,
}

impl MemberReport {
    fn passes(&self, allow_nonmaximal: bool) -> bool {
        let shape = match self.status {
            MemberStatus::Maximal(_) => true,
            MemberStatus::Outerplanar(_) => allow_nonmaximal,
            _ => false,
        };
        shape && self.step_ok != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub t: usize,
    pub n: usize,
    pub allow_nonmaximal: bool,
    pub members: Vec<MemberReport>,
    pub disjoint: Result<(), Collision>,
    pub union_edges: usize,
    /// `t(2n - 3)`, the edge count of an optimal union.
    pub optimal_edges: usize,
    pub bound: Option<BoundReport>,
}

impl VerificationReport {
    pub fn all_maximal(&self) -> bool {
        self.members.iter().all(|m| matches!(m.status, MemberStatus::Maximal(_)))
    }

    pub fn is_valid(&self) -> bool {
        let members = self.members.iter().all(|m| m.passes(self.allow_nonmaximal));
        let bound = self.allow_nonmaximal || self.bound.as_ref().is_some_and(BoundReport::feasible);
        !self.members.is_empty() && members && self.disjoint.is_ok() && bound
    }
}

pub fn verify_family(f: &Family, opts: &VerifyOptions) -> VerificationReport {
    let members = f
        .members()
        .iter()
        .map(|m| {
            let g = &m.graph;
            let max_degree = g.max_degree();
            let peak_vertices =
                g.degrees().iter().enumerate().filter(|(_, &d)| d == max_degree).map(|(v, _)| v).collect();
            let status = match certify_mop(g) {
                Ok(cert) if verify_certificate(g, &cert) => MemberStatus::Maximal(cert),
                Ok(_) => unreachable!("certify_mop produced a certificate that fails verification"),
                Err(why) if opts.allow_nonmaximal => match is_outerplanar_bounded(g, opts.budgets.outerplanar_max_n) {
                    Ok(true) => MemberStatus::Outerplanar(why),
                    Ok(false) => MemberStatus::NotOuterplanar(why),
                    Err(big) => MemberStatus::Unknown(why, big),
                },
                Err(why) => MemberStatus::Rejected(why),
            };
            let step_ok = m.step.map(|d| match &status {
                MemberStatus::Maximal(cert) => d < f.order() && d % 2 == 1 && realizes_step(cert, d),
                _ => false,
            });
            MemberReport { edges: g.edge_count(), max_degree, peak_vertices, status, step: m.step, step_ok }
        })
        .collect();
    VerificationReport {
        t: f.len(),
        n: f.order(),
        allow_nonmaximal: opts.allow_nonmaximal,
        members,
        disjoint: f.edges_disjoint(),
        union_edges: f.union().edge_count(),
        optimal_edges: f.len() * (2 * f.order()).saturating_sub(3),
        bound: counting_check(f.len(), f.order()).ok(),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family t={} n={}", self.t, self.n)?;
        writeln!(f, "mode {}", if self.allow_nonmaximal { "outerplanar" } else { "maximal" })?;
        for (k, m) in self.members.iter().enumerate() {
            write!(f, "member {k} edges={} max_degree={} peak=", m.edges, m.max_degree)?;
            for (i, v) in m.peak_vertices.iter().enumerate() {
                write!(f, "{}{v}", if i > 0 { "," } else { "" })?;
            }
            match &m.status {
                MemberStatus::Maximal(c) => write!(f, " status=maximal {c}")?,
                MemberStatus::Outerplanar(why) => write!(f, " status=outerplanar ({why})")?,
                MemberStatus::NotOuterplanar(why) => write!(f, " status=not-outerplanar ({why})")?,
                MemberStatus::Unknown(why, big) => write!(f, " status=unknown ({why}; {big})")?,
                MemberStatus::Rejected(why) => write!(f, " status=rejected ({why})")?,
            }
            if let (Some(d), Some(ok)) = (m.step, m.step_ok) {
                write!(f, " step={d} step_ok={}", yes(ok))?;
            }
            writeln!(f)?;
        }
        match &self.disjoint {
            Ok(()) => writeln!(f, "disjoint yes")?,
            Err(c) => writeln!(f, "disjoint no ({c})")?,
        }
        writeln!(f, "union_edges {} optimal_edges {}", self.union_edges, self.optimal_edges)?;
        match &self.bound {
            Some(b) => writeln!(f, "bound {}", if b.feasible() { "feasible" } else { "infeasible" })?,
            None => writeln!(f, "bound n/a")?,
        }
        writeln!(f, "valid {}", yes(self.is_valid()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::k7_minus_e_decomposition;
    use crate::doubling::doubling_family;
    use crate::graph::{Graph, Member};

    #[test]
    fn doubling_level_one_is_valid() {
        let f = doubling_family(1, &Budgets::DEFAULT).unwrap();
        let r = verify_family(&f, &VerifyOptions::default());
        assert!(r.is_valid());
        assert!(r.all_maximal());
        assert_eq!(r.union_edges, 26);
        assert_eq!(r.members[1].step_ok, Some(true));
    }

    #[test]
    fn k7e_needs_outerplanar_mode() {
        let f = k7_minus_e_decomposition();
        assert!(!verify_family(&f, &VerifyOptions::default()).is_valid());
        let lax = VerifyOptions { allow_nonmaximal: true, ..VerifyOptions::default() };
        let r = verify_family(&f, &lax);
        assert!(r.is_valid());
        assert!(matches!(r.members[1].status, MemberStatus::Outerplanar(_)));
    }

    #[test]
    fn wrong_step_fails() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let f = Family::new(4, alloc::vec![Member::with_step(g, 2)]).unwrap();
        let r = verify_family(&f, &VerifyOptions::default());
        assert_eq!(r.members[0].step_ok, Some(false));
        assert!(!r.is_valid());
    }
}

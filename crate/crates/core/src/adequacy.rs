//! Kauffman state graphs and the certificates built on them.
//!
//! At each crossing the A-smoothing joins slots 0–1 and 2–3, the
//! B-smoothing joins 1–2 and 3–0. A diagram is adequate when neither
//! all-A nor all-B state has a crossing whose two arcs lie on one loop.

use crate::diagram::topology::Topology;
use crate::diagram::{
    is_alternating, is_diagrammatically_prime, is_reduced, ClosureKind, LinkDiagram, Tangle,
};
use crate::error::{Error, Result};
use crate::unionfind::UnionFind;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Resolution {
    A,
    B,
}

impl Resolution {
    /// Slot pairs joined at every crossing.
    pub(crate) fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Resolution::A => [(0, 1), (2, 3)],
            Resolution::B => [(1, 2), (3, 0)],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateGraph {
    pub resolution: Resolution,
    pub loops: usize,
    /// Loops met by the two arcs of each crossing, in crossing order.
    pub edges: Vec<(usize, usize)>,
}

impl StateGraph {
    pub fn has_self_loop(&self) -> bool {
        self.edges.iter().any(|(a, b)| a == b)
    }
}

pub(crate) fn state_loops(topo: &Topology, choose: impl Fn(usize) -> Resolution) -> UnionFind {
    let mut uf = UnionFind::new(topo.darts());
    for x in 0..topo.darts() {
        uf.union(x, topo.partner[x]);
    }
    for c in 0..topo.n {
        for (s, t) in choose(c).pairs() {
            uf.union(4 * c + s, 4 * c + t);
        }
    }
    uf
}

pub fn state_graph(d: &LinkDiagram, r: Resolution) -> Result<StateGraph> {
    let topo = d.topology()?;
    let mut uf = state_loops(&topo, |_| r);
    let (class, k) = uf.classes();
    let edges = (0..topo.n)
        .map(|c| (class[4 * c + r.pairs()[0].0], class[4 * c + r.pairs()[1].0]))
        .collect();
    Ok(StateGraph {
        resolution: r,
        loops: k + topo.free_loops,
        edges,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdequacyReport {
    pub a_adequate: bool,
    pub b_adequate: bool,
    pub adequate: bool,
    pub s_a: usize,
    pub s_b: usize,
}

pub fn adequacy_report(d: &LinkDiagram) -> Result<AdequacyReport> {
    let a = state_graph(d, Resolution::A)?;
    let b = state_graph(d, Resolution::B)?;
    let (a_adequate, b_adequate) = (!a.has_self_loop(), !b.has_self_loop());
    Ok(AdequacyReport {
        a_adequate,
        b_adequate,
        adequate: a_adequate && b_adequate,
        s_a: a.loops,
        s_b: b.loops,
    })
}

/// Both closures are reduced alternating diagrams.
pub fn is_strongly_alternating(t: &Tangle) -> Result<bool> {
    t.check()?;
    for kind in [ClosureKind::Numerator, ClosureKind::Denominator] {
        let d = t.closure(kind);
        if !(is_alternating(&d)? && is_reduced(&d)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingCertificate {
    pub id: String,
    pub crossings: usize,
    pub certified: bool,
    pub reason: String,
}

/// An adequate diagram realises the crossing number of its link.
pub fn certify_crossing_number(d: &LinkDiagram, id: &str) -> Result<CrossingCertificate> {
    let r = adequacy_report(d)?;
    let reason = match (r.a_adequate, r.b_adequate) {
        (true, true) => "adequate: no all-A or all-B state loop meets itself".to_string(),
        (false, true) => "all-A state graph has a self-loop".to_string(),
        (true, false) => "all-B state graph has a self-loop".to_string(),
        (false, false) => "all-A and all-B state graphs have self-loops".to_string(),
    };
    Ok(CrossingCertificate {
        id: id.to_string(),
        crossings: d.crossing_count(),
        certified: r.adequate,
        reason,
    })
}

impl fmt::Display for CrossingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "id = {}", self.id)?;
        writeln!(f, "crossings = {}", self.crossings)?;
        let verdict = if self.certified { "certified-minimal" } else { "not-certified" };
        writeln!(f, "verdict = {verdict}")?;
        writeln!(f, "reason = {}", self.reason)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonAlternatingCertificate {
    pub id: String,
    pub adequate: bool,
    pub prime: bool,
    pub non_alternating: bool,
    pub verdict: bool,
}

/// A prime, adequate, non-alternating diagram represents a non-alternating
/// link. Primality is checked on the diagram itself.
pub fn certify_nonalternating(d: &LinkDiagram, id: &str) -> Result<NonAlternatingCertificate> {
    let prime = is_diagrammatically_prime(d).map_err(|e| match e {
        Error::Domain(m) => Error::Domain(format!("non-alternating certificate: {m}")),
        e => e,
    })?;
    let adequate = adequacy_report(d)?.adequate;
    let non_alternating = !is_alternating(d)?;
    Ok(NonAlternatingCertificate {
        id: id.to_string(),
        adequate,
        prime,
        non_alternating,
        verdict: adequate && prime && non_alternating,
    })
}

impl fmt::Display for NonAlternatingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "id = {}", self.id)?;
        writeln!(f, "adequate = {}", self.adequate)?;
        writeln!(f, "diagrammatically_prime = {}", self.prime)?;
        writeln!(f, "non_alternating_diagram = {}", self.non_alternating)?;
        let verdict = if self.verdict { "non-alternating" } else { "not-certified" };
        writeln!(f, "verdict = {verdict}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_link, single_crossing_tangle, BraidWord};

    fn trefoil() -> LinkDiagram {
        braid_link(&BraidWord::new(2, vec![1, 1, 1]).unwrap()).unwrap()
    }

    #[test]
    fn trefoil_states() {
        let a = state_graph(&trefoil(), Resolution::A).unwrap();
        let b = state_graph(&trefoil(), Resolution::B).unwrap();
        assert_eq!(a.edges.len(), 3);
        assert_eq!(
            {
                let mut l = [a.loops, b.loops];
                l.sort();
                l
            },
            [2, 3]
        );
        assert!(!a.has_self_loop() && !b.has_self_loop());
    }

    #[test]
    fn unknot_has_one_loop() {
        let g = state_graph(&LinkDiagram::unknot(), Resolution::A).unwrap();
        assert_eq!((g.loops, g.edges.len()), (1, 0));
    }

    #[test]
    fn kink_breaks_adequacy() {
        let k = trefoil().with_kink(1).unwrap();
        let r = adequacy_report(&k).unwrap();
        assert!(!r.adequate);
        assert!(r.a_adequate != r.b_adequate);
        assert!(!certify_crossing_number(&k, "kinked").unwrap().certified);
    }

    #[test]
    fn single_crossing_is_not_strongly_alternating() {
        assert!(!is_strongly_alternating(&single_crossing_tangle()).unwrap());
    }

    #[test]
    fn certificates_render_as_key_value_lines() {
        let c = certify_crossing_number(&trefoil(), "3_1").unwrap();
        let text = c.to_string();
        assert!(text.contains("verdict = certified-minimal"));
        assert!(text.lines().all(|l| l.contains(" = ")));
    }
}

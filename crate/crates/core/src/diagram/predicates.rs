//! Structural checks on closed diagrams.

use super::topology::Topology;
use super::LinkDiagram;
use crate::error::{Error, Result};
use crate::unionfind::UnionFind;
use std::collections::{HashMap, HashSet};

/// Outcome of [`validate`]. Flags that depend on a sound edge matching are
/// false whenever the matching is broken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub four_valent: bool,
    pub closed: bool,
    pub planar: bool,
    pub connected: bool,
    pub components: usize,
    pub crossings: usize,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.four_valent && self.closed && self.planar && self.connected
    }
}

pub fn validate(d: &LinkDiagram) -> ValidationReport {
    let mut count: HashMap<u32, usize> = HashMap::new();
    let mut zero = false;
    for &e in d.crossings().iter().flat_map(|c| c.slots.iter()) {
        zero |= e == 0;
        *count.entry(e).or_default() += 1;
    }
    let four_valent = !zero && count.values().all(|&k| k <= 2);
    let closed = count.values().all(|&k| k != 1);
    let mut report = ValidationReport {
        four_valent,
        closed,
        planar: false,
        connected: false,
        components: 0,
        crossings: d.crossing_count(),
    };
    if let Ok(topo) = d.topology() {
        report.planar = topo.is_planar();
        report.connected = is_connected(&topo);
        report.components = topo.strand_components();
    }
    report
}

/// One piece: either a single crossing-free loop or a connected projection
/// graph with no extra loops.
pub(crate) fn is_connected(topo: &Topology) -> bool {
    if topo.n == 0 {
        return topo.free_loops <= 1;
    }
    topo.free_loops == 0 && topo.vertex_components().1 == 1
}

/// Every strand meets crossings alternately under and over.
pub fn is_alternating(d: &LinkDiagram) -> Result<bool> {
    let topo = d.topology()?;
    Ok((0..topo.darts()).all(|x| (x ^ topo.partner[x]) & 1 == 1))
}

/// No crossing has two opposite corners in the same face.
pub fn is_reduced(d: &LinkDiagram) -> Result<bool> {
    let topo = d.topology()?;
    Ok(nugatory(&topo).is_empty())
}

pub(crate) fn nugatory(topo: &Topology) -> Vec<usize> {
    let (face, _) = topo.faces();
    (0..topo.n)
        .filter(|&c| face[4 * c] == face[4 * c + 2] || face[4 * c + 1] == face[4 * c + 3])
        .collect()
}

/// No pair of edges cuts the projection graph into two parts that both
/// contain crossings.
pub fn is_diagrammatically_prime(d: &LinkDiagram) -> Result<bool> {
    let topo = d.topology()?;
    if !is_connected(&topo) {
        return Err(Error::domain("primality needs a connected diagram"));
    }
    if topo.n == 0 {
        return Ok(true);
    }
    let (face, _) = topo.faces();
    // an edge is crossed by the dual edge between the faces on its two sides
    let mut by_faces: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for x in 0..topo.darts() {
        let y = topo.partner[x];
        if x > y {
            continue;
        }
        let left = face[x];
        let right = face[(x & !3) | ((x + 3) & 3)];
        if left != right {
            by_faces
                .entry((left.min(right), left.max(right)))
                .or_default()
                .push(x);
        }
    }
    for edges in by_faces.values().filter(|e| e.len() > 1) {
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i + 1..] {
                if splits(&topo, a, b) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn splits(topo: &Topology, a: usize, b: usize) -> bool {
    let cut: HashSet<usize> = [a, topo.partner[a], b, topo.partner[b]].into();
    let mut seen = vec![false; topo.n];
    let mut stack = vec![a / 4];
    seen[a / 4] = true;
    while let Some(v) = stack.pop() {
        for x in 4 * v..4 * v + 4 {
            if cut.contains(&x) {
                continue;
            }
            let w = topo.partner[x] / 4;
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().any(|s| !s)
}

/// Classes of crossings joined through bigon faces.
pub fn twist_regions(d: &LinkDiagram) -> Result<usize> {
    let topo = d.topology()?;
    let (face, nf) = topo.faces();
    let mut corners: Vec<Vec<usize>> = vec![Vec::new(); nf];
    for x in 0..topo.darts() {
        corners[face[x]].push(x / 4);
    }
    let mut uf = UnionFind::new(topo.n);
    for c in corners.iter().filter(|c| c.len() == 2 && c[0] != c[1]) {
        uf.union(c[0], c[1]);
    }
    Ok(uf.classes().1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_link, BraidWord, Crossing};

    fn trefoil() -> LinkDiagram {
        braid_link(&BraidWord::new(2, vec![1, 1, 1]).unwrap()).unwrap()
    }

    #[test]
    fn trefoil_checks() {
        let t = trefoil();
        let r = validate(&t);
        assert!(r.all_pass());
        assert_eq!((r.components, r.crossings), (1, 3));
        assert!(is_alternating(&t).unwrap());
        assert!(is_reduced(&t).unwrap());
        assert!(is_diagrammatically_prime(&t).unwrap());
        assert_eq!(twist_regions(&t).unwrap(), 1);
    }

    #[test]
    fn kink_is_nugatory() {
        let k = trefoil().with_kink(2).unwrap();
        assert!(!is_reduced(&k).unwrap());
    }

    #[test]
    fn unmatched_half_edge_is_flagged() {
        let d = LinkDiagram::new(vec![Crossing::new([1, 2, 2, 3])], 0);
        let r = validate(&d);
        assert!(!r.closed);
        assert!(!r.planar);
    }

    #[test]
    fn disconnected_primality_is_an_error() {
        let mut d = trefoil();
        d = LinkDiagram::new(d.crossings().to_vec(), 1);
        assert!(is_diagrammatically_prime(&d).is_err());
    }

    #[test]
    fn unknot_is_vacuously_fine() {
        let u = LinkDiagram::unknot();
        assert!(validate(&u).all_pass());
        assert!(is_alternating(&u).unwrap());
        assert!(is_diagrammatically_prime(&u).unwrap());
    }
}

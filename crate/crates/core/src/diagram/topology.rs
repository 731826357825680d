//! Combinatorial map of a diagram.
//!
//! Dart `4c + s` is slot `s` of crossing `c`. A tangle gets four extra darts
//! `4n..4n+4` for its boundary points, forming a vertex at infinity whose
//! rotation runs NW, NE, SE, SW. Faces are orbits of `partner ∘ rot`, so the
//! face of dart `d` is the region on the counterclockwise side of its slot.

use super::{Crossing, EdgeId};
use crate::error::{Error, Result};
use crate::unionfind::UnionFind;
use std::collections::HashMap;

pub(crate) type Dart = usize;

#[derive(Clone, Debug)]
pub(crate) struct Topology {
    pub n: usize,
    pub ports: bool,
    pub partner: Vec<Dart>,
    pub free_loops: usize,
}

impl Topology {
    pub fn build(crossings: &[Crossing], ends: Option<&[EdgeId; 4]>, free_loops: usize) -> Result<Self> {
        let n = crossings.len();
        let labels = crossings
            .iter()
            .flat_map(|c| c.slots)
            .chain(ends.into_iter().flat_map(|e| e.iter().copied()));
        let mut seen: HashMap<EdgeId, Vec<Dart>> = HashMap::new();
        for (d, e) in labels.enumerate() {
            if e == 0 {
                return Err(Error::domain(format!("slot {d} has no edge label")));
            }
            seen.entry(e).or_default().push(d);
        }
        let total = 4 * n + if ends.is_some() { 4 } else { 0 };
        let mut partner = vec![usize::MAX; total];
        for (e, darts) in &seen {
            match darts[..] {
                [a, b] => {
                    partner[a] = b;
                    partner[b] = a;
                }
                [_] => return Err(Error::domain(format!("edge {e} has an unmatched end"))),
                _ => {
                    return Err(Error::domain(format!(
                        "edge {e} appears {} times",
                        darts.len()
                    )))
                }
            }
        }
        Ok(Topology {
            n,
            ports: ends.is_some(),
            partner,
            free_loops,
        })
    }

    pub fn darts(&self) -> usize {
        self.partner.len()
    }

    pub fn vertices(&self) -> usize {
        self.n + usize::from(self.ports)
    }

    pub fn vertex(&self, d: Dart) -> usize {
        d / 4
    }

    pub fn is_port(&self, d: Dart) -> bool {
        d >= 4 * self.n
    }

    pub fn rot(&self, d: Dart) -> Dart {
        (d & !3) | ((d + 1) & 3)
    }

    /// Next dart along the strand through `d`'s crossing, if it has one.
    pub fn opposite(&self, d: Dart) -> Option<Dart> {
        (!self.is_port(d)).then_some((d & !3) | ((d + 2) & 3))
    }

    /// Face id of every dart and the number of faces.
    pub fn faces(&self) -> (Vec<usize>, usize) {
        let mut face = vec![usize::MAX; self.darts()];
        let mut count = 0;
        for start in 0..self.darts() {
            if face[start] != usize::MAX {
                continue;
            }
            let mut d = start;
            while face[d] == usize::MAX {
                face[d] = count;
                d = self.partner[self.rot(d)];
            }
            count += 1;
        }
        (face, count)
    }

    /// Connected component of every vertex (crossings, then infinity).
    pub fn vertex_components(&self) -> (Vec<usize>, usize) {
        let mut uf = UnionFind::new(self.vertices());
        for d in 0..self.darts() {
            uf.union(self.vertex(d), self.vertex(self.partner[d]));
        }
        uf.classes()
    }

    /// Every connected piece satisfies V - E + F = 2.
    pub fn is_planar(&self) -> bool {
        let (comp, k) = self.vertex_components();
        let (face, _) = self.faces();
        let mut v = vec![0i64; k];
        let mut e2 = vec![0i64; k];
        let mut faces: Vec<Vec<usize>> = vec![Vec::new(); k];
        for x in comp.iter() {
            v[*x] += 1;
        }
        for d in 0..self.darts() {
            let c = comp[self.vertex(d)];
            e2[c] += 1;
            faces[c].push(face[d]);
        }
        (0..k).all(|c| {
            faces[c].sort_unstable();
            faces[c].dedup();
            v[c] - e2[c] / 2 + faces[c].len() as i64 == 2
        })
    }

    /// Link components plus free loops; for a tangle, arcs count too.
    pub fn strand_components(&self) -> usize {
        let mut uf = UnionFind::new(self.darts());
        for d in 0..self.darts() {
            uf.union(d, self.partner[d]);
            if let Some(o) = self.opposite(d) {
                uf.union(d, o);
            }
        }
        uf.classes().1 + self.free_loops
    }

    /// Checkerboard colouring of faces, or `None` if adjacent faces clash.
    ///
    /// Corner `s` of a crossing has colour `colour(corner 0) ^ (s & 1)`.
    pub fn checkerboard(&self) -> Option<(Vec<usize>, Vec<u8>)> {
        let (face, nf) = self.faces();
        let mut colour = vec![u8::MAX; nf];
        let mut adj: Vec<Vec<(usize, u8)>> = vec![Vec::new(); nf];
        for c in 0..self.n {
            let f0 = face[4 * c];
            for s in 1..4 {
                let bit = (s & 1) as u8;
                adj[f0].push((face[4 * c + s], bit));
                adj[face[4 * c + s]].push((f0, bit));
            }
        }
        for start in 0..nf {
            if colour[start] != u8::MAX {
                continue;
            }
            colour[start] = 0;
            let mut stack = vec![start];
            while let Some(f) = stack.pop() {
                for &(g, bit) in &adj[f] {
                    let want = colour[f] ^ bit;
                    if colour[g] == u8::MAX {
                        colour[g] = want;
                        stack.push(g);
                    } else if colour[g] != want {
                        return None;
                    }
                }
            }
        }
        Some((face, colour))
    }
}

//! Relabelling-invariant code for diagram isomorphism.
//!
//! Crossings are renumbered breadth-first from a starting half-edge; each
//! crossing is read from an even slot so under and over stay put. The code
//! of a piece is the least over all starts. A tangle's pieces that meet the
//! boundary are read from the boundary, which is never rotated.

use super::topology::Topology;
use super::{LinkDiagram, Tangle};
use crate::error::Result;
use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u32>);

impl LinkDiagram {
    /// Equal for two diagrams iff they differ only by edge labels, the
    /// order of crossings and the choice of starting slot at each crossing.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        Ok(encode(&self.topology()?, false))
    }
}

impl Tangle {
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        Ok(encode(&self.topology()?, true))
    }
}

fn encode(topo: &Topology, ports: bool) -> CanonicalForm {
    let (comp, k) = topo.vertex_components();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (v, &c) in comp.iter().enumerate() {
        members[c].push(v);
    }
    let mut head = Vec::new();
    let mut pieces = Vec::new();
    for vs in members {
        if ports && vs.contains(&topo.n) {
            head = read(topo, topo.n, 0);
            continue;
        }
        let best = vs
            .iter()
            .flat_map(|&v| [(v, 0), (v, 2)])
            .map(|(v, off)| read(topo, v, off))
            .min()
            .unwrap_or_default();
        pieces.push(best);
    }
    pieces.sort();
    let mut code = head;
    for p in pieces {
        code.push(u32::MAX);
        code.extend(p);
    }
    code.push(u32::MAX);
    code.push(topo.free_loops as u32);
    CanonicalForm(code)
}

fn read(topo: &Topology, start: usize, start_off: usize) -> Vec<u32> {
    let mut id = vec![u32::MAX; topo.vertices()];
    let mut off = vec![0usize; topo.vertices()];
    let mut queue = VecDeque::from([start]);
    id[start] = 0;
    off[start] = start_off;
    let mut next = 1;
    let mut code = Vec::new();
    while let Some(v) = queue.pop_front() {
        for k in 0..4 {
            let x = 4 * v + (off[v] + k) % 4;
            let y = topo.partner[x];
            let w = y / 4;
            if id[w] == u32::MAX {
                id[w] = next;
                next += 1;
                off[w] = if w == topo.n && topo.ports { 0 } else { (y % 4) & !1 };
                queue.push_back(w);
            }
            code.push(id[w]);
            code.push(((y % 4 + 4 - off[w]) % 4) as u32);
        }
    }
    code
}

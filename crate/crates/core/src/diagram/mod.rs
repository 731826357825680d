//! Link diagrams and four-ended tangles.
//!
//! A diagram is stored the way the native text format writes it: one record
//! per crossing listing the edge labels at its four slots in counterclockwise
//! order. The strand through slots 0 and 2 is the under strand. Every edge
//! label occurs exactly twice; a tangle additionally lists the labels at its
//! NW, NE, SE and SW boundary points. Crossing-free closed loops are counted
//! separately as `free_loops`.
//!
//! Values are immutable once built; every operation returns a fresh value
//! with edges renumbered `1..=E` in order of first appearance.

mod builder;
mod canonical;
mod generators;
pub(crate) mod predicates;
pub(crate) mod topology;

pub use canonical::CanonicalForm;
pub use generators::{
    braid_link, connected_sum, pretzel_tangle, single_crossing_tangle, weaving_tangle, weaving_word,
};
pub use predicates::{
    is_alternating, is_diagrammatically_prime, is_reduced, twist_regions, validate,
    ValidationReport,
};

use crate::error::{Error, Result};
use crate::unionfind::UnionFind;
use builder::{slot_dirs, Dir};
use topology::Topology;

pub type EdgeId = u32;

/// Edge labels at the four slots of a crossing, counterclockwise. Slots 0
/// and 2 carry the under strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub slots: [EdgeId; 4],
}

impl Crossing {
    pub fn new(slots: [EdgeId; 4]) -> Self {
        Crossing { slots }
    }

    /// Swap over and under strands without changing the rotation.
    pub fn mirrored(self) -> Self {
        let [a, b, c, d] = self.slots;
        Crossing {
            slots: [b, c, d, a],
        }
    }
}

/// A closed diagram on the sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

impl LinkDiagram {
    /// Wraps raw crossing records. Nothing is checked here; see [`validate`].
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Self {
        LinkDiagram {
            crossings,
            free_loops,
        }
    }

    /// The zero-crossing diagram of the unknot.
    pub fn unknot() -> Self {
        LinkDiagram::new(Vec::new(), 1)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Number of edges, counting each crossing-free loop as one edge.
    pub fn edge_count(&self) -> usize {
        let mut labels: Vec<EdgeId> = self.crossings.iter().flat_map(|c| c.slots).collect();
        labels.sort_unstable();
        labels.dedup();
        labels.len() + self.free_loops
    }

    pub fn mirror(&self) -> Self {
        LinkDiagram::new(
            self.crossings.iter().map(|c| c.mirrored()).collect(),
            self.free_loops,
        )
    }

    /// Insert a Reidemeister I kink on edge `edge`.
    pub fn with_kink(&self, edge: EdgeId) -> Result<Self> {
        let mut crossings = self.crossings.clone();
        let pos = crossings
            .iter()
            .flat_map(|c| c.slots)
            .position(|e| e == edge)
            .ok_or_else(|| Error::domain(format!("edge {edge} not present")))?;
        let fresh = max_label(&crossings, &[]) + 1;
        crossings[pos / 4].slots[pos % 4] = fresh + 1;
        // slot 0 continues the old edge, slots 1 and 2 close a monogon
        crossings.push(Crossing::new([edge, fresh, fresh, fresh + 1]));
        Ok(LinkDiagram::new(crossings, self.free_loops).normalized())
    }

    pub(crate) fn topology(&self) -> Result<Topology> {
        Topology::build(&self.crossings, None, self.free_loops)
    }

    /// Renumber edges `1..=E` in order of first appearance.
    pub fn normalized(&self) -> Self {
        let (crossings, _) = renumber(&self.crossings, &[]);
        LinkDiagram::new(crossings, self.free_loops)
    }
}

/// Boundary points of a tangle, listed in clockwise order around its disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Port {
    NW = 0,
    NE = 1,
    SE = 2,
    SW = 3,
}

impl Port {
    pub const ALL: [Port; 4] = [Port::NW, Port::NE, Port::SE, Port::SW];

    pub fn name(self) -> &'static str {
        match self {
            Port::NW => "NW",
            Port::NE => "NE",
            Port::SE => "SE",
            Port::SW => "SW",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosureKind {
    /// Join NW to NE and SW to SE.
    Numerator,
    /// Join NW to SW and NE to SE.
    Denominator,
}

/// A diagram in a disk with four boundary points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tangle {
    crossings: Vec<Crossing>,
    ends: [EdgeId; 4],
    free_loops: usize,
}

impl Tangle {
    /// Wraps raw records; `ends` is indexed by [`Port`].
    pub fn new(crossings: Vec<Crossing>, ends: [EdgeId; 4], free_loops: usize) -> Self {
        Tangle {
            crossings,
            ends,
            free_loops,
        }
    }

    /// Two horizontal arcs, NW to NE and SW to SE. Identity for [`Tangle::sum`].
    pub fn zero() -> Self {
        Tangle::new(Vec::new(), [1, 1, 2, 2], 0)
    }

    /// Two vertical arcs, NW to SW and NE to SE.
    pub fn infinity() -> Self {
        Tangle::new(Vec::new(), [1, 2, 2, 1], 0)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn ends(&self) -> [EdgeId; 4] {
        self.ends
    }

    pub fn end(&self, port: Port) -> EdgeId {
        self.ends[port as usize]
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn edge_count(&self) -> usize {
        let mut labels: Vec<EdgeId> = self
            .crossings
            .iter()
            .flat_map(|c| c.slots)
            .chain(self.ends)
            .collect();
        labels.sort_unstable();
        labels.dedup();
        labels.len() + self.free_loops
    }

    pub fn mirror(&self) -> Self {
        Tangle::new(
            self.crossings.iter().map(|c| c.mirrored()).collect(),
            self.ends,
            self.free_loops,
        )
    }

    pub(crate) fn topology(&self) -> Result<Topology> {
        Topology::build(&self.crossings, Some(&self.ends), self.free_loops)
    }

    /// Checks matching and planarity with the ends on the outer face.
    pub fn check(&self) -> Result<()> {
        let topo = self.topology()?;
        if !topo.is_planar() {
            return Err(Error::domain("tangle is not planar with its ends on the outer face"));
        }
        Ok(())
    }

    /// Conway sum: `self`'s NE and SE ends are joined to `other`'s NW and SW.
    pub fn sum(&self, other: &Tangle) -> Tangle {
        let offset = max_label(&self.crossings, &self.ends);
        let shifted: Vec<Crossing> = other
            .crossings
            .iter()
            .map(|c| Crossing::new(c.slots.map(|e| e + offset)))
            .collect();
        let o = other.ends.map(|e| e + offset);
        let mut crossings = self.crossings.clone();
        crossings.extend(shifted);
        let s = self.ends;
        let (crossings, ends, loops) = glue(
            crossings,
            &[s[Port::NW as usize], o[Port::NE as usize], o[Port::SE as usize], s[Port::SW as usize]],
            &[
                (s[Port::NE as usize], o[Port::NW as usize]),
                (s[Port::SE as usize], o[Port::SW as usize]),
            ],
        );
        Tangle::new(
            crossings,
            [ends[0], ends[1], ends[2], ends[3]],
            self.free_loops + other.free_loops + loops,
        )
    }

    /// Left fold of [`Tangle::sum`]; fails on an empty list.
    pub fn sum_all<'a, I>(tangles: I) -> Result<Tangle>
    where
        I: IntoIterator<Item = &'a Tangle>,
    {
        let mut it = tangles.into_iter();
        let first = it
            .next()
            .ok_or_else(|| Error::domain("Conway sum of an empty list of tangles"))?;
        Ok(it.fold(first.clone(), |acc, t| acc.sum(t)))
    }

    pub fn closure(&self, kind: ClosureKind) -> LinkDiagram {
        let e = self.ends;
        let pairs = match kind {
            ClosureKind::Numerator => [(e[0], e[1]), (e[3], e[2])],
            ClosureKind::Denominator => [(e[0], e[3]), (e[1], e[2])],
        };
        let (crossings, _, loops) = glue(self.crossings.clone(), &[], &pairs);
        LinkDiagram::new(crossings, self.free_loops + loops)
    }

    /// Numerator closure plus a belt circle around both closure arcs.
    ///
    /// The belt meets each closure arc twice, passing over the upper arc and
    /// under the lower one, and runs between the arcs and the tangle disk.
    pub fn belt_closure(&self) -> LinkDiagram {
        let mut crossings = self.crossings.clone();
        let base = max_label(&self.crossings, &self.ends);
        let l = |k: u32| base + k;
        let [nw, ne, se, sw] = self.ends;
        let mut place = |under: Dir, over: Dir, at: [(Dir, EdgeId); 4]| {
            let dirs = slot_dirs(under, over);
            let slots = dirs.map(|d| at.iter().find(|(x, _)| *x == d).expect("direction").1);
            crossings.push(Crossing::new(slots));
        };
        // upper arc: NW rises through b1, across the top, down through b2 to NE
        place(Dir::N, Dir::W, [(Dir::S, nw), (Dir::N, l(1)), (Dir::E, l(2)), (Dir::W, l(5))]);
        place(Dir::N, Dir::W, [(Dir::S, ne), (Dir::N, l(1)), (Dir::W, l(2)), (Dir::E, l(3))]);
        // lower arc: SE drops through b3, under the bottom, back up through b4 to SW
        place(Dir::E, Dir::N, [(Dir::N, se), (Dir::S, l(6)), (Dir::E, l(3)), (Dir::W, l(4))]);
        place(Dir::E, Dir::N, [(Dir::N, sw), (Dir::S, l(6)), (Dir::E, l(4)), (Dir::W, l(5))]);
        LinkDiagram::new(crossings, self.free_loops).normalized()
    }

    pub fn normalized(&self) -> Self {
        let (crossings, ends) = renumber(&self.crossings, &self.ends);
        Tangle::new(crossings, [ends[0], ends[1], ends[2], ends[3]], self.free_loops)
    }
}

pub(crate) fn max_label(crossings: &[Crossing], ends: &[EdgeId]) -> EdgeId {
    crossings
        .iter()
        .flat_map(|c| c.slots)
        .chain(ends.iter().copied())
        .max()
        .unwrap_or(0)
}

/// Identify each pair of labels (consumed boundary points) and renumber.
/// Returns the crossings, the renumbered `kept` ends and the number of
/// crossing-free loops closed off by the identification.
fn glue(
    crossings: Vec<Crossing>,
    kept: &[EdgeId],
    pairs: &[(EdgeId, EdgeId)],
) -> (Vec<Crossing>, Vec<EdgeId>, usize) {
    let top = max_label(&crossings, kept)
        .max(pairs.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0)) as usize;
    let mut uf = UnionFind::new(top + 1);
    for &(a, b) in pairs {
        uf.union(a as usize, b as usize);
    }
    let mut uses = vec![0usize; top + 1];
    for e in crossings.iter().flat_map(|c| c.slots).chain(kept.iter().copied()) {
        let r = uf.find(e as usize);
        uses[r] += 1;
    }
    let mut closed: Vec<usize> = pairs
        .iter()
        .map(|&(a, _)| uf.find(a as usize))
        .filter(|&r| uses[r] == 0)
        .collect();
    closed.sort_unstable();
    closed.dedup();
    let merged: Vec<Crossing> = crossings
        .iter()
        .map(|c| Crossing::new(c.slots.map(|e| uf.find(e as usize) as EdgeId)))
        .collect();
    let kept: Vec<EdgeId> = kept.iter().map(|&e| uf.find(e as usize) as EdgeId).collect();
    let (crossings, kept) = renumber(&merged, &kept);
    (crossings, kept, closed.len())
}

fn renumber(crossings: &[Crossing], ends: &[EdgeId]) -> (Vec<Crossing>, Vec<EdgeId>) {
    let mut map = std::collections::HashMap::new();
    let mut next = 0;
    let mut fresh = |e: EdgeId| {
        *map.entry(e).or_insert_with(|| {
            next += 1;
            next
        })
    };
    let crossings = crossings
        .iter()
        .map(|c| Crossing::new(c.slots.map(&mut fresh)))
        .collect();
    let ends = ends.iter().map(|&e| fresh(e)).collect();
    (crossings, ends)
}

/// A braid word on `strands` strands; `+i` is the generator taking strand
/// `i` under strand `i + 1`, `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::domain(format!(
                "invalid braid word: need at least 2 strands, got {strands}"
            )));
        }
        if let Some(&bad) = letters
            .iter()
            .find(|&&g| g == 0 || g.unsigned_abs() as usize >= strands)
        {
            return Err(Error::domain(format!(
                "invalid braid word: generator {bad} outside 1..{} on {strands} strands",
                strands - 1
            )));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }
}

//! Place crossings by compass direction and join their half-edges.

use super::{Crossing, EdgeId, LinkDiagram, Port, Tangle};

/// Compass directions in counterclockwise order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Dir {
    E = 0,
    NE = 1,
    N = 2,
    NW = 3,
    W = 4,
    SW = 5,
    S = 6,
    SE = 7,
}

impl Dir {
    fn from_index(i: u8) -> Dir {
        [Dir::E, Dir::NE, Dir::N, Dir::NW, Dir::W, Dir::SW, Dir::S, Dir::SE][(i % 8) as usize]
    }

    fn turn(self, k: u8) -> Dir {
        Dir::from_index(self as u8 + k)
    }
}

/// Slot directions of a crossing whose under strand runs along `under` and
/// its opposite, and whose over strand runs along `over` and its opposite.
pub(crate) fn slot_dirs(under: Dir, over: Dir) -> [Dir; 4] {
    let rel = |d: Dir| (d as u8 + 8 - under as u8) % 8;
    let mut over_pair = [over, over.turn(4)];
    over_pair.sort_by_key(|&d| rel(d));
    debug_assert!(rel(over_pair[0]) != 0 && rel(over_pair[0]) < 4);
    [under, over_pair[0], under.turn(4), over_pair[1]]
}

#[derive(Clone, Copy, Debug)]
pub(crate) enum End {
    At(usize, Dir),
    Port(Port),
}

#[derive(Debug, Default)]
pub(crate) struct Builder {
    slots: Vec<[EdgeId; 4]>,
    dirs: Vec<[Dir; 4]>,
    ends: [EdgeId; 4],
    next: EdgeId,
    free_loops: usize,
}

impl Builder {
    pub fn new() -> Self {
        Builder::default()
    }

    pub fn crossing(&mut self, under: Dir, over: Dir) -> usize {
        self.slots.push([0; 4]);
        self.dirs.push(slot_dirs(under, over));
        self.slots.len() - 1
    }

    fn set(&mut self, end: End, label: EdgeId) {
        match end {
            End::At(c, d) => {
                let s = self.dirs[c]
                    .iter()
                    .position(|&x| x == d)
                    .expect("direction is not a slot of this crossing");
                debug_assert_eq!(self.slots[c][s], 0, "slot joined twice");
                self.slots[c][s] = label;
            }
            End::Port(p) => {
                debug_assert_eq!(self.ends[p as usize], 0, "port joined twice");
                self.ends[p as usize] = label;
            }
        }
    }

    pub fn join(&mut self, a: End, b: End) {
        self.next += 1;
        let l = self.next;
        self.set(a, l);
        self.set(b, l);
    }

    pub fn free_loop(&mut self) {
        self.free_loops += 1;
    }

    fn crossings(&self) -> Vec<Crossing> {
        debug_assert!(self.slots.iter().flatten().all(|&e| e != 0), "unjoined slot");
        self.slots.iter().map(|&s| Crossing::new(s)).collect()
    }

    pub fn into_link(self) -> LinkDiagram {
        LinkDiagram::new(self.crossings(), self.free_loops).normalized()
    }

    pub fn into_tangle(self) -> Tangle {
        debug_assert!(self.ends.iter().all(|&e| e != 0), "unjoined port");
        Tangle::new(self.crossings(), self.ends, self.free_loops).normalized()
    }
}

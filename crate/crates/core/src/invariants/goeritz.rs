//! Checkerboard surfaces: the Goeritz matrix and the Tait graph.

use super::bareiss::abs_determinant;
use crate::diagram::predicates::{is_connected, nugatory};
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_traits::One;

/// A proper two-colouring of the faces of a connected diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckerboardColoring {
    /// Colour of each face; `true` is shaded.
    pub shaded: Vec<bool>,
    /// Face at each corner of each crossing; corner `s` lies between slots
    /// `s` and `s + 1`.
    pub corners: Vec<[usize; 4]>,
    /// `+1` where the unshaded corners are the A-corners 1 and 3.
    pub eta: Vec<i8>,
}

impl CheckerboardColoring {
    pub fn face_count(&self) -> usize {
        self.shaded.len()
    }

    /// The two faces of one colour meeting at crossing `c`.
    pub fn incident(&self, c: usize, shaded: bool) -> (usize, usize) {
        let k = self.corners[c];
        if self.shaded[k[0]] == shaded {
            (k[0], k[2])
        } else {
            (k[1], k[3])
        }
    }
}

/// Shades the larger colour class, so the Goeritz matrix is built on the
/// smaller one.
pub fn checkerboard(d: &LinkDiagram) -> Result<CheckerboardColoring> {
    let topo = d.topology()?;
    if !is_connected(&topo) {
        return Err(Error::domain("checkerboard colouring needs a connected diagram"));
    }
    let (face, colour) = topo
        .checkerboard()
        .ok_or_else(|| Error::domain("faces admit no checkerboard colouring; diagram is not planar"))?;
    let ones = colour.iter().filter(|&&c| c == 1).count();
    let shade_one = ones * 2 >= colour.len();
    let shaded: Vec<bool> = colour.iter().map(|&c| (c == 1) == shade_one).collect();
    let corners: Vec<[usize; 4]> = (0..topo.n)
        .map(|c| [0, 1, 2, 3].map(|s| face[4 * c + s]))
        .collect();
    let eta = corners
        .iter()
        .map(|k| if shaded[k[1]] { -1 } else { 1 })
        .collect();
    Ok(CheckerboardColoring {
        shaded,
        corners,
        eta,
    })
}

fn reduced_laplacian(vertices: &[usize], edges: &[(usize, usize, i64)]) -> Vec<Vec<BigInt>> {
    let mut index = vec![usize::MAX; vertices.iter().max().map_or(0, |m| m + 1)];
    for (i, &v) in vertices.iter().enumerate() {
        index[v] = i;
    }
    let n = vertices.len().saturating_sub(1);
    let mut m = vec![vec![0i64; n]; n];
    for &(u, v, w) in edges {
        let (i, j) = (index[u], index[v]);
        if i == j {
            continue;
        }
        for (a, b) in [(i, j), (j, i)] {
            if a < n {
                m[a][a] += w;
                if b < n {
                    m[a][b] -= w;
                }
            }
        }
    }
    m.into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect()
}

fn colour_class(cb: &CheckerboardColoring, shaded: bool) -> Vec<usize> {
    (0..cb.face_count()).filter(|&f| cb.shaded[f] == shaded).collect()
}

/// `|det|` of the Goeritz matrix on the unshaded faces with one deleted.
pub fn determinant_goeritz(d: &LinkDiagram) -> Result<BigUint> {
    if d.crossing_count() == 0 {
        if d.free_loops() == 1 {
            return Ok(BigUint::one());
        }
        return Err(Error::domain("determinant needs a connected diagram"));
    }
    let cb = checkerboard(d)?;
    let edges: Vec<(usize, usize, i64)> = (0..cb.corners.len())
        .map(|c| {
            let (u, v) = cb.incident(c, false);
            (u, v, cb.eta[c] as i64)
        })
        .collect();
    Ok(abs_determinant(reduced_laplacian(&colour_class(&cb, false), &edges)))
}

/// Spanning trees of the Tait graph on the shaded faces.
pub fn tait_spanning_trees(d: &LinkDiagram) -> Result<BigUint> {
    let topo = d.topology()?;
    if !is_connected(&topo) {
        return Err(Error::domain("spanning-tree count needs a connected diagram"));
    }
    if !(0..topo.darts()).all(|x| (x ^ topo.partner[x]) & 1 == 1) {
        return Err(Error::domain("spanning-tree count needs an alternating diagram"));
    }
    if !nugatory(&topo).is_empty() {
        return Err(Error::domain("spanning-tree count needs a reduced diagram"));
    }
    if topo.n == 0 {
        return Ok(BigUint::one());
    }
    let cb = checkerboard(d)?;
    let edges: Vec<(usize, usize, i64)> = (0..cb.corners.len())
        .map(|c| {
            let (u, v) = cb.incident(c, true);
            (u, v, 1)
        })
        .collect();
    Ok(abs_determinant(reduced_laplacian(&colour_class(&cb, true), &edges)))
}

//! Braid closures, weaving and pretzel tangles, connected sums.

use super::builder::{Builder, Dir, End};
use super::{max_label, BraidWord, Crossing, LinkDiagram, Port, Tangle};
use crate::error::{Error, Result};

/// Lay the braid top to bottom. Returns, per position, the free top and
/// bottom half-edges, or `None` for a position no generator touches.
fn lay_braid(b: &mut Builder, word: &BraidWord) -> Vec<Option<(End, End)>> {
    let m = word.strands();
    let mut top: Vec<Option<End>> = vec![None; m];
    let mut open: Vec<Option<End>> = vec![None; m];
    for &g in word.letters() {
        let p = g.unsigned_abs() as usize - 1;
        // σ_i takes the strand at position i under its right neighbour
        let c = if g > 0 {
            b.crossing(Dir::NW, Dir::NE)
        } else {
            b.crossing(Dir::NE, Dir::NW)
        };
        for (q, d) in [(p, Dir::NW), (p + 1, Dir::NE)] {
            match open[q] {
                None => top[q] = Some(End::At(c, d)),
                Some(e) => b.join(e, End::At(c, d)),
            }
        }
        open[p] = Some(End::At(c, Dir::SW));
        open[p + 1] = Some(End::At(c, Dir::SE));
    }
    top.into_iter().zip(open).map(|(t, o)| t.zip(o)).collect()
}

/// Closure of every strand of the braid.
pub fn braid_link(word: &BraidWord) -> Result<LinkDiagram> {
    if word.letters().is_empty() {
        return Err(Error::domain("invalid braid word: empty"));
    }
    let mut b = Builder::new();
    for pos in lay_braid(&mut b, word) {
        match pos {
            Some((t, bottom)) => b.join(t, bottom),
            None => b.free_loop(),
        }
    }
    Ok(b.into_link())
}

/// `(σ1 σ2⁻¹ σ3 σ4⁻¹ ⋯ σ_{m-1}^{±1})^n` on `m` strands.
pub fn weaving_word(m: usize, n: usize) -> Result<BraidWord> {
    let layer = (1..m as i32).map(|i| if i % 2 == 1 { i } else { -i });
    let letters = std::iter::repeat_n(layer, n).flatten().collect();
    BraidWord::new(m, letters)
}

/// The weaving braid with every strand but the second and third closed.
/// Top and bottom of the second strand become NW and SW, of the third NE
/// and SE.
pub fn weaving_tangle(m: usize, n: usize) -> Result<Tangle> {
    if m < 3 || n < 1 {
        return Err(Error::domain(format!(
            "weaving tangle needs m >= 3 and n >= 1, got m = {m}, n = {n}"
        )));
    }
    let mut b = Builder::new();
    let positions = lay_braid(&mut b, &weaving_word(m, n)?);
    for (p, pos) in positions.into_iter().enumerate() {
        let (t, bottom) = pos.expect("weaving word touches every strand");
        match p {
            1 => {
                b.join(t, End::Port(Port::NW));
                b.join(bottom, End::Port(Port::SW));
            }
            2 => {
                b.join(t, End::Port(Port::NE));
                b.join(bottom, End::Port(Port::SE));
            }
            _ => b.join(t, bottom),
        }
    }
    Ok(b.into_tangle())
}

/// Three horizontal twist rows of `l`, `m` and `n` crossings stacked top to
/// bottom. The denominator closure is the pretzel link `P(l, m, n)`, and
/// both closures are alternating.
pub fn pretzel_tangle(l: usize, m: usize, n: usize) -> Result<Tangle> {
    if l < 1 || m < 1 || n < 1 {
        return Err(Error::domain(format!(
            "pretzel tangle needs every twist count >= 1, got ({l}, {m}, {n})"
        )));
    }
    let mut b = Builder::new();
    // (top-left, bottom-left, top-right, bottom-right) ends of each row
    let mut rows = Vec::with_capacity(3);
    for len in [l, m, n] {
        let first = b.crossing(Dir::NW, Dir::NE);
        let mut last = first;
        for _ in 1..len {
            let c = b.crossing(Dir::NW, Dir::NE);
            b.join(End::At(last, Dir::NE), End::At(c, Dir::NW));
            b.join(End::At(last, Dir::SE), End::At(c, Dir::SW));
            last = c;
        }
        rows.push((
            End::At(first, Dir::NW),
            End::At(first, Dir::SW),
            End::At(last, Dir::NE),
            End::At(last, Dir::SE),
        ));
    }
    b.join(rows[0].0, End::Port(Port::NW));
    b.join(rows[0].2, End::Port(Port::NE));
    for w in rows.windows(2) {
        b.join(w[0].1, w[1].0);
        b.join(w[0].3, w[1].2);
    }
    b.join(rows[2].1, End::Port(Port::SW));
    b.join(rows[2].3, End::Port(Port::SE));
    Ok(b.into_tangle())
}

/// One crossing, under strand from NW to SE.
pub fn single_crossing_tangle() -> Tangle {
    let mut b = Builder::new();
    let c = b.crossing(Dir::NW, Dir::NE);
    for (d, p) in [
        (Dir::NW, Port::NW),
        (Dir::NE, Port::NE),
        (Dir::SE, Port::SE),
        (Dir::SW, Port::SW),
    ] {
        b.join(End::At(c, d), End::Port(p));
    }
    b.into_tangle()
}

/// Connected sum of two diagrams, splicing edge `e1` of `d1` to edge `e2`
/// of `d2`.
pub fn connected_sum(d1: &LinkDiagram, e1: u32, d2: &LinkDiagram, e2: u32) -> Result<LinkDiagram> {
    let find = |d: &LinkDiagram, e: u32| -> Result<(usize, usize)> {
        let at: Vec<usize> = d
            .crossings()
            .iter()
            .flat_map(|c| c.slots)
            .enumerate()
            .filter(|&(_, x)| x == e)
            .map(|(i, _)| i)
            .collect();
        match at[..] {
            [a, b] => Ok((a, b)),
            _ => Err(Error::domain(format!("edge {e} is not an edge of the diagram"))),
        }
    };
    let (_, y1) = find(d1, e1)?;
    let (x2, y2) = find(d2, e2)?;
    let offset = max_label(d1.crossings(), &[]);
    let fresh = offset + max_label(d2.crossings(), &[]) + 1;
    let attempt = |swap: bool| {
        let mut cs: Vec<Crossing> = d1.crossings().to_vec();
        let n1 = cs.len();
        cs.extend(
            d2.crossings()
                .iter()
                .map(|c| Crossing::new(c.slots.map(|x| x + offset))),
        );
        let (a, b) = if swap { (y2, x2) } else { (x2, y2) };
        cs[y1 / 4].slots[y1 % 4] = fresh;
        cs[n1 + a / 4].slots[a % 4] = e1;
        cs[n1 + b / 4].slots[b % 4] = fresh;
        LinkDiagram::new(cs, d1.free_loops() + d2.free_loops())
    };
    let first = attempt(false);
    if first.topology()?.is_planar() {
        return Ok(first.normalized());
    }
    Ok(attempt(true).normalized())
}

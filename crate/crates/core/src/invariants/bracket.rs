//! Kauffman bracket by a sweep over crossings.
//!
//! Crossings are absorbed one at a time. For each way the smoothed arcs so
//! far can pair up the half-edges still waiting for a partner, we keep the
//! partial state sum; closed loops are paid for as soon as they close. The
//! table is keyed by that pairing, so its size depends on the width of the
//! frontier rather than on the number of states.

use super::LaurentPolynomial;
use crate::adequacy::Resolution;
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use std::collections::HashMap;

pub const DEFAULT_CAP: usize = 24;

/// Endpoints of open arcs; `mate[i]` pairs with frontier dart `darts[i]`.
type Pairing = Vec<(u32, u32)>;

/// `⟨D⟩`, normalised so the crossing-free unknot is 1. A-smoothings weigh
/// `A`, B-smoothings `A⁻¹`.
pub fn kauffman_bracket(d: &LinkDiagram, cap: usize) -> Result<LaurentPolynomial> {
    if d.crossing_count() > cap {
        return Err(Error::Resource(format!(
            "bracket of a {}-crossing diagram exceeds the cap of {cap}; use the determinant engines, or raise --cap",
            d.crossing_count()
        )));
    }
    let topo = d.topology()?;
    let n = topo.n;
    let partner = |x: u32| topo.partner[x as usize] as u32;
    let mut done = vec![false; n];
    let mut table: HashMap<Pairing, LaurentPolynomial> = HashMap::from([(Vec::new(), LaurentPolynomial::one())]);
    for _ in 0..n {
        let c = next_crossing(&topo.partner, &done);
        done[c] = true;
        let base = 4 * c as u32;
        let mut next: HashMap<Pairing, LaurentPolynomial> = HashMap::new();
        for (pairing, poly) in &table {
            for (r, weight) in [(Resolution::A, 1), (Resolution::B, -1)] {
                let mut mate: HashMap<u32, u32> = HashMap::new();
                for &(a, b) in pairing {
                    mate.insert(a, b);
                    mate.insert(b, a);
                }
                for (s, t) in r.pairs() {
                    mate.insert(base + s as u32, base + t as u32);
                    mate.insert(base + t as u32, base + s as u32);
                }
                let mut loops = 0;
                for x in base..base + 4 {
                    let y = partner(x);
                    let absorbed = done[y as usize / 4] && (y / 4 != c as u32 || x < y);
                    if !absorbed {
                        continue;
                    }
                    let a = mate.remove(&x).expect("open end");
                    if a == y {
                        mate.remove(&y);
                        loops += 1;
                        continue;
                    }
                    let b = mate.remove(&y).expect("open end");
                    mate.insert(a, b);
                    mate.insert(b, a);
                }
                let mut key: Pairing = mate.iter().filter(|(a, b)| a < b).map(|(&a, &b)| (a, b)).collect();
                key.sort_unstable();
                let mut term = poly.shift(weight);
                for _ in 0..loops {
                    term = term.mul_delta();
                }
                let slot = next.entry(key).or_default();
                *slot = std::mem::take(slot) + term;
            }
        }
        next.retain(|_, p| !p.is_zero());
        table = next;
    }
    let mut total = table.remove(&Vec::new()).unwrap_or_default();
    for _ in 0..topo.free_loops {
        total = total.mul_delta();
    }
    total
        .div_delta()
        .ok_or_else(|| Error::Inconsistency("state sum not divisible by the loop value".into()))
}

/// Unabsorbed crossing with the most edges into the absorbed set.
fn next_crossing(partner: &[usize], done: &[bool]) -> usize {
    (0..done.len())
        .filter(|&c| !done[c])
        .max_by_key(|&c| {
            let links = (4 * c..4 * c + 4).filter(|&x| done[partner[x] / 4]).count();
            (links, std::cmp::Reverse(c))
        })
        .expect("a crossing remains")
}

/// `(max - min exponent) / 4` of the bracket.
pub fn jones_breadth(d: &LinkDiagram, cap: usize) -> Result<usize> {
    let b = kauffman_bracket(d, cap)?;
    match (b.min_exponent(), b.max_exponent()) {
        (Some(lo), Some(hi)) => Ok(((hi - lo) / 4) as usize),
        _ => Err(Error::domain("bracket vanishes; breadth undefined")),
    }
}

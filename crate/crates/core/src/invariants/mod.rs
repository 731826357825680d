//! Exact invariants: the Kauffman bracket and three routes to the
//! determinant.

mod bareiss;
mod bracket;
mod cyclotomic;
mod goeritz;
mod laurent;

pub use bareiss::{abs_determinant, determinant as integer_determinant};
pub use bracket::{jones_breadth, kauffman_bracket, DEFAULT_CAP};
pub use goeritz::{checkerboard, determinant_goeritz, tait_spanning_trees, CheckerboardColoring};
pub use laurent::LaurentPolynomial;

use crate::diagram::{is_alternating, is_reduced, LinkDiagram};
use crate::error::{Error, Result};
use cyclotomic::Zeta8;
use num_bigint::BigUint;

/// Crossing count up to which [`determinant`] also checks the bracket.
pub const BRACKET_CHECK_LIMIT: usize = 16;

/// `|⟨D⟩|` at a primitive 8th root of unity.
pub fn bracket_determinant(d: &LinkDiagram, cap: usize) -> Result<BigUint> {
    let b = kauffman_bracket(d, cap)?;
    Zeta8::eval(&b)
        .modulus()
        .ok_or_else(|| Error::Inconsistency("bracket at the 8th root of unity is not an integer in modulus".into()))
}

/// Goeritz determinant, cross-checked against the Tait graph on reduced
/// alternating diagrams and against the bracket on small ones.
pub fn determinant(d: &LinkDiagram) -> Result<BigUint> {
    let det = determinant_goeritz(d)?;
    if is_reduced(d)? && is_alternating(d)? {
        let trees = tait_spanning_trees(d)?;
        if trees != det {
            return Err(Error::Inconsistency(format!(
                "Goeritz determinant {det} differs from Tait spanning-tree count {trees}"
            )));
        }
    }
    if d.crossing_count() <= BRACKET_CHECK_LIMIT {
        let via_bracket = bracket_determinant(d, BRACKET_CHECK_LIMIT)?;
        if via_bracket != det {
            return Err(Error::Inconsistency(format!(
                "Goeritz determinant {det} differs from bracket value {via_bracket}"
            )));
        }
    }
    Ok(det)
}

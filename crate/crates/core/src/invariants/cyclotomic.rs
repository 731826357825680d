//! The ring Z[ζ] for ζ a primitive 8th root of unity, as Z[x]/(x⁴ + 1).

use super::LaurentPolynomial;
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Zeta8(pub [BigInt; 4]);

impl Zeta8 {
    pub fn eval(p: &LaurentPolynomial) -> Self {
        let mut z = Zeta8::default();
        for (e, c) in p.terms() {
            let r = e.rem_euclid(8) as usize;
            if r < 4 {
                z.0[r] += c;
            } else {
                z.0[r - 4] -= c;
            }
        }
        z
    }

    fn mul(&self, o: &Zeta8) -> Zeta8 {
        let mut out = Zeta8::default();
        for i in 0..4 {
            for j in 0..4 {
                let t = &self.0[i] * &o.0[j];
                if i + j < 4 {
                    out.0[i + j] += t;
                } else {
                    out.0[i + j - 4] -= t;
                }
            }
        }
        out
    }

    /// Complex conjugate: ζ ↦ ζ⁻¹ = -ζ³.
    fn conj(&self) -> Zeta8 {
        let [a0, a1, a2, a3] = &self.0;
        Zeta8([a0.clone(), -a3, -a2, -a1])
    }

    /// |z|, which must be a rational integer for the values we evaluate.
    pub fn modulus(&self) -> Option<BigUint> {
        let n = self.mul(&self.conj());
        // z·z̄ is real: its ζ and ζ³ parts cancel and its ζ² part is zero
        if !(n.0[1].is_zero() && n.0[2].is_zero() && n.0[3].is_zero()) {
            return None;
        }
        let sq = match n.0[0].sign() {
            Sign::Minus => return None,
            _ => n.0[0].magnitude().clone(),
        };
        let r = sq.sqrt();
        (&r * &r == sq).then_some(r)
    }
}

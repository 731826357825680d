use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact Laurent polynomial in `A` with big-integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// `δ = -A² - A⁻²`, the value of a crossing-free loop.
    pub fn delta() -> Self {
        Self::monomial(-1, 2) + Self::monomial(-1, -2)
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn mul_delta(&self) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out.add_term(e + 2, -c);
            out.add_term(e - 2, -c);
        }
        out
    }

    /// Exact quotient by `δ`, or `None` if `δ` does not divide.
    pub fn div_delta(&self) -> Option<Self> {
        // δ = -A⁻²(1 + A⁴): divide by 1 + A⁴ from the bottom up
        let mut rest = self.clone();
        let mut q = Self::zero();
        while let Some(e) = rest.min_exponent() {
            if rest.max_exponent()? < e + 4 {
                return None;
            }
            let c = rest.terms[&e].clone();
            rest.add_term(e, -c.clone());
            rest.add_term(e + 4, -c.clone());
            q.add_term(e, c);
        }
        Some(-q.shift(2))
    }
}

impl Add for LaurentPolynomial {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for LaurentPolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for LaurentPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentPolynomial {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e, c) in &self.terms {
            for (&f, d) in &rhs.terms {
                out.add_term(e + f, c * d);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Terms `c*A^e` in increasing exponent, joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("{c}*A^{e}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl From<i64> for LaurentPolynomial {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl LaurentPolynomial {
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }
}

//! Fraction-free Gaussian elimination.
//!
//! A row that had a zero in the pivot column at some step only changes by
//! the factor `p_k / p_{k-1}`. We skip those rows and apply the accumulated
//! factor `p_k / p_s` when the row is next touched; the division is exact
//! because the scaled entries are minors of the input.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    // pivots[t + 1] is the pivot of step t; pivots[0] = 1
    let mut pivots: Vec<BigInt> = vec![BigInt::one()];
    let mut stamp = vec![0usize; n];
    let mut negate = false;
    for k in 0..n {
        let candidate = (k..n)
            .filter(|&i| !m[i][k].is_zero())
            .min_by_key(|&i| (m[i][k..].iter().filter(|x| !x.is_zero()).count(), i));
        let Some(r) = candidate else {
            return BigInt::zero();
        };
        if r != k {
            m.swap(r, k);
            stamp.swap(r, k);
            negate = !negate;
        }
        catch_up(&mut m[k], &mut stamp[k], &pivots, k);
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let p = pivot_row[k].clone();
        let prev = &pivots[k];
        for (off, row) in tail.iter_mut().enumerate() {
            if row[k].is_zero() {
                continue;
            }
            let i = k + 1 + off;
            catch_up(row, &mut stamp[i], &pivots, k);
            let f = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let v = &p * &row[j] - &f * &pivot_row[j];
                row[j] = v / prev;
            }
            stamp[i] = k + 1;
        }
        pivots.push(p);
    }
    let d = pivots.pop().expect("n >= 1");
    // rows untouched at the last steps still carry the right value: the
    // determinant is the final pivot
    if negate {
        -d
    } else {
        d
    }
}

/// Bring a row last updated at stamp `s` up to date with step `k - 1`.
fn catch_up(row: &mut [BigInt], s: &mut usize, pivots: &[BigInt], k: usize) {
    if *s == k {
        return;
    }
    let (num, den) = (&pivots[k], &pivots[*s]);
    for x in row.iter_mut().filter(|x| !x.is_zero()) {
        *x = &*x * num / den;
    }
    *s = k;
}

pub fn abs_determinant(m: Vec<Vec<BigInt>>) -> num_bigint::BigUint {
    determinant(m).abs().magnitude().clone()
}

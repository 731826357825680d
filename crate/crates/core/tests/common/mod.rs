//! Oracles shared by the integration tests. Nothing here calls into the
//! invariant engines being checked.
#![allow(dead_code)]

use linkdensity::diagram::{braid_link, pretzel_tangle, weaving_tangle};
use linkdensity::{BraidWord, ClosureKind, LinkDiagram, Tangle};
use num_bigint::{BigInt, BigUint};
use std::collections::{BTreeMap, HashMap};

/// Kauffman bracket by summing over all `2^c` states.
pub fn brute_bracket(d: &LinkDiagram) -> BTreeMap<i64, BigInt> {
    let xs = d.crossings();
    let c = xs.len();
    assert!(c <= 20, "brute force oracle limited to 20 crossings");
    let mut ids = HashMap::new();
    for x in xs {
        for &e in &x.slots {
            let n = ids.len();
            ids.entry(e).or_insert(n);
        }
    }
    let n = ids.len();
    // delta^j for j up to c + free loops
    let mut delta_pows: Vec<BTreeMap<i64, BigInt>> = vec![BTreeMap::from([(0, BigInt::from(1))])];
    let delta = BTreeMap::from([(2, BigInt::from(-1)), (-2, BigInt::from(-1))]);
    for _ in 0..(c + d.free_loops() + 1) {
        let next = mul(delta_pows.last().unwrap(), &delta);
        delta_pows.push(next);
    }
    let mut total = BTreeMap::new();
    for s in 0u64..(1u64 << c) {
        let mut parent: Vec<usize> = (0..n).collect();
        let mut a_count = 0i64;
        for (i, x) in xs.iter().enumerate() {
            let [p, q, r, t] = x.slots.map(|e| ids[&e]);
            let (u, v) = if s >> i & 1 == 0 {
                a_count += 1;
                ((p, q), (r, t))
            } else {
                ((q, r), (t, p))
            };
            join(&mut parent, u.0, u.1);
            join(&mut parent, v.0, v.1);
        }
        let loops = (0..n).filter(|&i| root(&mut parent, i) == i).count() + d.free_loops();
        let e = a_count - (c as i64 - a_count);
        for (k, v) in &delta_pows[loops - 1] {
            *total.entry(k + e).or_insert_with(BigInt::default) += v;
        }
    }
    total.retain(|_, v: &mut BigInt| *v != BigInt::default());
    total
}

fn root(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

fn join(p: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (root(p, a), root(p, b));
    p[ra] = rb;
}

fn mul(a: &BTreeMap<i64, BigInt>, b: &BTreeMap<i64, BigInt>) -> BTreeMap<i64, BigInt> {
    let mut out = BTreeMap::new();
    for (i, x) in a {
        for (j, y) in b {
            *out.entry(i + j).or_insert_with(BigInt::default) += x * y;
        }
    }
    out
}

/// `|<D>|` at `A = exp(iπ/4)`, exact in `Z[i, √2]` via `A^k` cycling with period 8.
pub fn bracket_magnitude(p: &BTreeMap<i64, BigInt>) -> BigUint {
    // A^k = cos(kπ/4) + i sin(kπ/4); track coefficients of 1, √2/2 in re and im.
    let (mut re, mut re_r, mut im, mut im_r) =
        (BigInt::default(), BigInt::default(), BigInt::default(), BigInt::default());
    for (k, c) in p {
        match k.rem_euclid(8) {
            0 => re += c,
            1 => {
                re_r += c;
                im_r += c;
            }
            2 => im += c,
            3 => {
                re_r -= c;
                im_r += c;
            }
            4 => re -= c,
            5 => {
                re_r -= c;
                im_r -= c;
            }
            6 => im -= c,
            _ => {
                re_r += c;
                im_r -= c;
            }
        }
    }
    // |z|² = (re + re_r/√2)² + (im + im_r/√2)²; the √2 part must vanish.
    let rational2 = 2 * (&re * &re + &im * &im) + &re_r * &re_r + &im_r * &im_r;
    let irrational = &re * &re_r + &im * &im_r;
    assert_eq!(irrational, BigInt::default(), "magnitude not an integer");
    let sq: BigInt = rational2 / 2;
    let r = sq.magnitude().sqrt();
    assert_eq!(&r * &r, *sq.magnitude(), "magnitude squared not a square");
    r
}

pub fn pretzel(l: usize, m: usize, n: usize, kind: ClosureKind) -> LinkDiagram {
    pretzel_tangle(l, m, n).unwrap().closure(kind)
}

pub fn weave(m: usize, n: usize, kind: ClosureKind) -> LinkDiagram {
    weaving_tangle(m, n).unwrap().closure(kind)
}

pub fn braid(strands: usize, letters: &[i32]) -> LinkDiagram {
    braid_link(&BraidWord::new(strands, letters.to_vec()).unwrap()).unwrap()
}

/// Small diagrams of mixed type: alternating and not, knots and links.
pub fn small_corpus() -> Vec<(String, LinkDiagram)> {
    use ClosureKind::*;
    let mut v = vec![
        ("trefoil".to_string(), braid(2, &[1, 1, 1])),
        ("figure eight".into(), braid(3, &[1, -2, 1, -2])),
        ("hopf".into(), braid(2, &[1, 1])),
        ("nonalt braid".into(), braid(3, &[1, 1, 2, 2, 1, -2])),
        ("three strand".into(), braid(4, &[1, 2, 3, -2, 1, 3])),
        ("w33 N".into(), weave(3, 3, Numerator)),
        ("w33 D".into(), weave(3, 3, Denominator)),
        ("w43 D".into(), weave(4, 3, Denominator)),
        ("w34 N".into(), weave(3, 4, Numerator)),
    ];
    for (l, m, n) in [(1, 1, 1), (2, 3, 2), (3, 1, 3), (2, 2, 4), (3, 3, 3)] {
        v.push((format!("pretzel {l} {m} {n} D"), pretzel(l, m, n, Denominator)));
        v.push((format!("pretzel {l} {m} {n} N"), pretzel(l, m, n, Numerator)));
    }
    let w = weaving_tangle(3, 3).unwrap();
    v.push(("w33 + mirror N".into(), w.sum(&w.mirror()).closure(Numerator)));
    v.push(("w33 belt".into(), w.belt_closure()));
    v
}

/// Strongly alternating tangles used as Conway summands.
pub fn summand_corpus() -> Vec<(String, Tangle)> {
    let mut v = Vec::new();
    for k in 4..=5 {
        v.push((format!("W{k},{k}"), weaving_tangle(k, k).unwrap()));
    }
    v.push(("W4,3".into(), weaving_tangle(4, 3).unwrap()));
    v.push(("W5,4".into(), weaving_tangle(5, 4).unwrap()));
    for (l, m, n) in [(2, 2, 2), (3, 2, 3), (2, 4, 3), (3, 5, 3), (4, 2, 5)] {
        v.push((format!("P{l},{m},{n}"), pretzel_tangle(l, m, n).unwrap()));
    }
    v
}

/// `2^{1/4}`, `π` and friends to 60 digits for fixed-point re-evaluation.
pub const SCALE_DIGITS: u32 = 60;
pub const PI_60: &str = "3141592653589793238462643383279502884197169399375105820974944";

pub fn scale() -> BigInt {
    BigInt::from(10).pow(SCALE_DIGITS)
}

/// `(1 - (8π / (11.524 + n·2^{1/4}))²)^{3/2}` in 60-digit fixed point.
pub fn xi_fixed(n: u64) -> f64 {
    let s = scale();
    let pi: BigInt = PI_60.parse::<BigInt>().unwrap() * &s / BigInt::from(10).pow(60);
    // 2^{1/4} = floor((2·s⁴)^{1/4})
    let fourth = (BigInt::from(2) * s.pow(4)).nth_root(4);
    let denom = BigInt::from(11524) * &s / 1000 + BigInt::from(n) * &fourth;
    let r = BigInt::from(8) * &pi * &s / denom;
    let one_minus: BigInt = &s - &r * &r / &s;
    let root: BigInt = (&one_minus * &s).sqrt();
    let val: BigInt = &one_minus * &root / &s;
    let (int, frac) = (&val / &s, &val % &s);
    let digits: BigInt = frac / BigInt::from(10).pow(SCALE_DIGITS - 18);
    int.to_string().parse::<f64>().unwrap() + digits.to_string().parse::<f64>().unwrap() * 1e-18
}

pub fn to_map(p: &linkdensity::invariants::LaurentPolynomial) -> BTreeMap<i64, BigInt> {
    p.terms().map(|(e, c)| (e, c.clone())).collect()
}

mod common;

use linkdensity::densities::{
    adams_upper, density_of, det_density, lackenby_upper, ln_big, vol_density_interval, xi,
    VolumeOracle, V3, V8,
};
use linkdensity::diagram::twist_regions;
use linkdensity::{ClosureKind, Error, LinkDiagram};
use num_bigint::BigUint;
use std::f64::consts::PI;

#[test]
fn constants() {
    // v8 = 4·Catalan, v3 = 3·Λ(π/3)
    let catalan = 0.915_965_594_177_219_0;
    assert!((V8 - 4.0 * catalan).abs() < 1e-15);
    assert!((V3 - 1.014_941_606_409_653_6).abs() < 1e-15);
}

#[test]
fn xi_against_fixed_point() {
    let mut prev = 0.0;
    for n in 12..=1000u64 {
        let x = xi(n).unwrap();
        assert!(x > 0.0 && x < 1.0, "n = {n}");
        assert!(x > prev, "n = {n}");
        assert!((x - common::xi_fixed(n)).abs() < 1e-12, "n = {n}: {x} vs {}", common::xi_fixed(n));
        prev = x;
    }
    assert!(matches!(xi(11), Err(Error::Domain(_))));
}

#[test]
fn twist_region_bound_on_pretzel() {
    let d = common::pretzel(7, 9, 7, ClosureKind::Numerator);
    assert_eq!(twist_regions(&d).unwrap(), 3);
    assert!((lackenby_upper(&d).unwrap() - 20.0 * V3).abs() < 1e-12);
}

#[test]
fn twist_region_bound_rejects_unreduced() {
    let d = common::weave(3, 3, ClosureKind::Numerator);
    assert!(matches!(lackenby_upper(&d), Err(Error::Domain(_))));
}

#[test]
fn twist_regions_of_weaves() {
    for k in 4..=7 {
        let d = common::weave(k, k, ClosureKind::Denominator);
        assert_eq!(twist_regions(&d).unwrap(), k * (k - 1));
        let n = common::weave(k, k, ClosureKind::Numerator);
        assert_eq!(twist_regions(&n).unwrap(), k * (k - 1) - 2);
    }
}

#[test]
fn density_arithmetic() {
    let det = BigUint::from(39u32);
    assert!((density_of(&det, 13) - 2.0 * PI * 39f64.ln() / 13.0).abs() < 1e-15);
    let big = BigUint::from(3u32).pow(1000);
    assert!((ln_big(&big) - 1000.0 * 3f64.ln()).abs() < 1e-9);
}

#[test]
fn det_density_report() {
    let d = common::pretzel(3, 5, 3, ClosureKind::Denominator);
    let r = det_density(&d, "p353").unwrap();
    assert_eq!(r.determinant, BigUint::from(39u32));
    assert_eq!(r.crossings, 11);
    assert!(r.certified_crossing);
    assert!(!r.degenerate);
    assert!(matches!(det_density(&LinkDiagram::unknot(), "u"), Err(Error::Domain(_))));
}

#[test]
fn degenerate_density_for_split_diagram() {
    let d = common::braid(2, &[1, -1]);
    assert!(det_density(&d, "split").unwrap().degenerate);
}

#[test]
fn volume_interval_with_oracle() {
    // figure eight: volume 2.029883212819307, 4 crossings
    let d = common::braid(3, &[1, -2, 1, -2]);
    let mut oracle = VolumeOracle::default();
    oracle.insert("4_1", 2.029883212819307, "tabulated");
    let iv = vol_density_interval(&d, "4_1", Some(&oracle)).unwrap();
    assert!((iv.lower - 2.029883212819307 / 4.0).abs() < 1e-15);
    // two twist regions: 10·v3 beats 4·v8
    assert!((iv.upper - 10.0 * linkdensity::densities::V3 / 4.0).abs() < 1e-15);
    assert!(iv.lower < iv.upper);

    oracle.insert("4_1", 100.0, "bogus");
    assert!(matches!(vol_density_interval(&d, "4_1", Some(&oracle)), Err(Error::Inconsistency(_))));
}

#[test]
fn volume_upper_bounds_below_octahedral() {
    for k in 4..=6 {
        let d = common::weave(k, k, ClosureKind::Numerator);
        let iv = vol_density_interval(&d, "w", None).unwrap();
        assert!(iv.upper < V8);
        let adams = adams_upper(&d).unwrap();
        assert!(adams.certified);
        assert!(iv.upper * d.crossing_count() as f64 <= adams.value + 1e-9);
    }
}

#[test]
fn oracle_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("vols-{}.csv", std::process::id()));
    std::fs::write(&dir, "id,volume,source\nw44,10.5,test\n").unwrap();
    let o = VolumeOracle::load(&dir).unwrap();
    std::fs::remove_file(&dir).unwrap();
    assert_eq!(o.get("w44"), Some((10.5, "test")));
    let bad = VolumeOracle::from_reader("id,volume,source\nx,abc,s\n".as_bytes());
    assert!(matches!(bad, Err(Error::Parse { line: 2, .. })));
}

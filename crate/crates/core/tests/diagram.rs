mod common;

use linkdensity::diagram::{
    is_alternating, is_diagrammatically_prime, is_reduced, pretzel_tangle, single_crossing_tangle,
    twist_regions, validate, weaving_tangle,
};
use linkdensity::densities::{det_density, V8};
use linkdensity::{ClosureKind, Error, Tangle};

#[test]
fn belt_adds_four_crossings_and_one_component() {
    let p = pretzel_tangle(3, 1, 3).unwrap();
    assert_eq!(p.belt_closure().crossing_count(), 11);
    let w = weaving_tangle(3, 2).unwrap();
    let n = validate(&w.closure(ClosureKind::Numerator));
    let b = validate(&w.belt_closure());
    assert_eq!(b.components, n.components + 1);
    assert!(validate(&pretzel_tangle(7, 7, 7).unwrap().belt_closure()).all_pass());
}

#[test]
fn closures_preserve_crossings_and_validate() {
    for (name, t) in common::summand_corpus() {
        for kind in [ClosureKind::Numerator, ClosureKind::Denominator] {
            let d = t.closure(kind);
            assert_eq!(d.crossing_count(), t.crossing_count(), "{name}");
            assert!(validate(&d).all_pass(), "{name} {kind:?}");
        }
    }
}

#[test]
fn mirror_keeps_structure() {
    for (name, d) in common::small_corpus() {
        let m = d.mirror();
        assert_eq!(m.crossing_count(), d.crossing_count());
        assert_eq!(is_alternating(&m).unwrap(), is_alternating(&d).unwrap(), "{name}");
        assert_eq!(twist_regions(&m).unwrap(), twist_regions(&d).unwrap(), "{name}");
    }
}

#[test]
fn pretzel_numerator_has_three_twist_regions() {
    let d = pretzel_tangle(7, 7, 7).unwrap().closure(ClosureKind::Numerator);
    assert_eq!(twist_regions(&d).unwrap(), 3);
}

#[test]
fn single_crossing_closure_is_nugatory() {
    let t = single_crossing_tangle();
    let r = [ClosureKind::Numerator, ClosureKind::Denominator]
        .map(|k| is_reduced(&t.closure(k)).unwrap());
    assert!(r.contains(&false));
}

#[test]
fn weaves_reduced_alternating_from_four() {
    for k in 4..=7 {
        let d = weaving_tangle(k, k).unwrap().closure(ClosureKind::Numerator);
        assert!(is_reduced(&d).unwrap() && is_alternating(&d).unwrap(), "k = {k}");
    }
}

#[test]
fn connected_sum_is_not_prime() {
    let t = common::braid(2, &[1, 1, 1]);
    let e = t.crossings()[0].slots[0];
    let s = linkdensity::diagram::connected_sum(&t, e, &t, e).unwrap();
    assert!(validate(&s).all_pass());
    assert!(!is_diagrammatically_prime(&s).unwrap());
    assert!(is_diagrammatically_prime(&t).unwrap());
}

#[test]
fn disconnected_input_is_rejected() {
    let split = common::braid(3, &[1, 1, 1]);
    assert!(!validate(&split).connected);
    assert!(matches!(is_diagrammatically_prime(&split), Err(Error::Domain(_))));
}

#[test]
fn zero_and_infinity_tangles() {
    assert_eq!(Tangle::zero().crossing_count(), 0);
    let n = Tangle::zero().closure(ClosureKind::Numerator);
    let d = Tangle::zero().closure(ClosureKind::Denominator);
    assert_eq!(n.free_loops() + d.free_loops(), 3);
    assert!(Tangle::infinity().check().is_ok());
}

/// Logged rather than assumed elsewhere: no alternating corpus diagram
/// exceeds the octahedral density.
#[test]
fn alternating_densities_stay_below_v8() {
    for k in 3..=10 {
        for kind in [ClosureKind::Numerator, ClosureKind::Denominator] {
            let d = common::weave(k, k, kind);
            let r = det_density(&d, "w").unwrap();
            assert!(r.det_density < V8 + 1e-9, "k = {k} {kind:?}: {}", r.det_density);
        }
    }
    for m in 1..40 {
        let d = common::pretzel(3, m, 3, ClosureKind::Denominator);
        assert!(det_density(&d, "p").unwrap().det_density < V8 + 1e-9);
    }
}

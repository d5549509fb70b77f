use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spacecurve::io::read_curve;
use spacecurve::lift::{LiftMode, RationalParam3};
use spacecurve::poly::{parse_upoly, Rat, UPoly};
use spacecurve::slice::{rng_from, sample_real_points, SliceFamily};
use spacecurve::verify::*;
use spacecurve::SpaceCurve;
use std::path::Path;

fn up(s: &str) -> UPoly<Rat> {
    parse_upoly(s, "t").unwrap()
}

fn quartic1() -> SpaceCurve {
    read_curve(&Path::new(env!("CARGO_MANIFEST_DIR")).join("data/quartic1.curve")).unwrap()
}

// (t, 1/t, t + 1/t) lies on x y = 1, z = x + y
fn hyperbola_param() -> RationalParam3 {
    RationalParam3 { components: [up("t^2"), up("1"), up("t^2 + 1")], denominator: up("t"), mode: LiftMode::Exact }
}

fn dist(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    (0..3).map(|i| (a[i] - b[i]).powi(2)).sum::<f64>().sqrt()
}

#[test]
fn infinity_structure_is_translation_invariant_but_not_scale_invariant() {
    let p = hyperbola_param();
    let c = SpaceCurve::parse(&["x*y - 1", "z - x - y"]).unwrap();
    assert!(structure_at_infinity_equal(&c, &p).unwrap());
    let moved = SpaceCurve::parse(&["(x - 1)*(y - 1) - 1", "(z - 1) - (x - 1) - (y - 1)"]).unwrap();
    assert!(structure_at_infinity_equal(&moved, &p).unwrap());
    let scaled = SpaceCurve::parse(&["x*y - 1", "z/2 - x - y"]).unwrap();
    assert!(!structure_at_infinity_equal(&scaled, &p).unwrap());
}

#[test]
fn a_curve_is_at_distance_zero_from_its_parametrization() {
    let c = SpaceCurve::parse(&["x*y - 1", "z - x - y"]).unwrap();
    let r = sampled_hausdorff(&c, &hyperbola_param(), &HausdorffConfig { half_width: 10.0, samples: 400, seed: 5 }).unwrap();
    assert!(r.estimate < 1e-6, "{r:?}");
    assert_eq!(r.verdict, Verdict::Finite);
}

#[test]
fn shifted_copy_stays_at_bounded_distance() {
    // same directions at infinity, offset by 1 in z: finite, nonzero distance
    let c = SpaceCurve::parse(&["x*y - 1", "z - x - y - 1"]).unwrap();
    let r = sampled_hausdorff(&c, &hyperbola_param(), &HausdorffConfig { half_width: 10.0, samples: 400, seed: 5 }).unwrap();
    assert!(r.estimate > 0.5 && r.estimate <= 1.0 + 1e-6, "{r:?}");
    assert_eq!(r.verdict, Verdict::Finite);
}

#[test]
fn mismatched_directions_are_suspect() {
    // on the pole branch y → ∞ the two curves separate linearly
    let c = SpaceCurve::parse(&["x*y - 1", "z - x - 2*y"]).unwrap();
    let r = sampled_hausdorff(&c, &hyperbola_param(), &HausdorffConfig { half_width: 10.0, samples: 400, seed: 5 }).unwrap();
    assert_eq!(r.verdict, Verdict::Suspect, "{r:?}");
}

#[test]
fn points_on_the_curve_have_distance_zero() {
    let c = quartic1();
    let pts = sample_real_points(&c, 3.0, 5, 11).unwrap();
    assert!(!pts.is_empty());
    for p in pts.iter().take(5) {
        let d = point_to_curve_distance(p, &c, 10.0, 2).unwrap().value();
        assert!(d < 1e-6, "{d}");
    }
}

/// Independent oracle: dense axis-slice sampling, coarse then refined
/// around the best hit with spacing 2e-5.
fn dense_oracle(curve: &SpaceCurve, p: &[f64; 3]) -> f64 {
    let mut rng = rng_from(99);
    let fams: Vec<SliceFamily> = (0..3).filter_map(|a| SliceFamily::axis(curve, a, &mut rng).ok()).collect();
    let scan = |fam: &SliceFamily, axis: usize, lo: f64, hi: f64, n: usize| -> (f64, f64) {
        let mut best = (f64::INFINITY, 0.0);
        for k in 0..=n {
            let s = lo + (hi - lo) * k as f64 / n as f64;
            for q in fam.real_section(s) {
                let d = dist(&q, p);
                if d < best.0 {
                    best = (d, q[axis]);
                }
            }
        }
        best
    };
    let mut best = f64::INFINITY;
    for (axis, fam) in fams.iter().enumerate() {
        let (_, s0) = scan(fam, axis, -10.0, 10.0, 2000);
        let (d, _) = scan(fam, axis, s0 - 0.02, s0 + 0.02, 2000);
        best = best.min(d);
    }
    best
}

#[test]
fn descent_agrees_with_dense_sampling() {
    let c = quartic1();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..3 {
        let p = [rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)];
        let d = point_to_curve_distance(&p, &c, 10.0, 1).unwrap().value();
        let oracle = dense_oracle(&c, &p);
        assert!((d - oracle).abs() < 1e-4, "{p:?}: descent {d} vs oracle {oracle}");
    }
}

#[test]
fn example_curve_has_one_asymptote_per_infinity_point() {
    let a = asymptotes_implicit(&quartic1()).unwrap();
    assert_eq!(a.len(), 4);
    for i in 0..4 {
        for j in i + 1..4 {
            assert!(a[i].parallel_defect(&a[j]) > 1e-3);
        }
        // real flag follows the point; complex directions come conjugated
        let im = a[i].direction.iter().any(|z| z.im.abs() > 1e-12);
        assert_eq!(a[i].is_real, !im);
    }
    assert_eq!(a.iter().filter(|l| l.is_real).count(), 2);
}

#[test]
fn branches_approach_their_asymptote_from_both_sides() {
    let p = hyperbola_param();
    let a = asymptotes_parametric(&p).unwrap();
    assert_eq!(a.len(), 1);
    let line = &a[0];
    let mut prev = f64::INFINITY;
    for h in [1e-1, 1e-2, 1e-3, 1e-4] {
        let (lo, hi) = (p.eval(-h), p.eval(h));
        // dominant coordinate is y = 1/t; both signs occur
        assert!(lo[1] < 0.0 && hi[1] > 0.0);
        let d = line.distance_to(&lo).max(line.distance_to(&hi));
        assert!(d < prev);
        prev = d;
    }
    assert!(prev < 1e-3);
}

#[test]
fn unbounded_iff_real_point_at_infinity() {
    use spacecurve::assumptions::infinity_points;
    // an ellipse in a tilted plane has only complex points at infinity
    let ellipse = SpaceCurve::parse(&["x^2 + 2*y^2 - 1", "z - x - y"]).unwrap();
    assert!(infinity_points(&ellipse).unwrap().iter().all(|p| !p.is_real));
    let far = sample_real_points(&ellipse, 50.0, 40, 3).unwrap();
    assert!(far.iter().all(|q| q.iter().all(|c| c.abs() < 3.0)));
    let hyp = SpaceCurve::parse(&["x*y - 1", "z - x - y"]).unwrap();
    assert!(infinity_points(&hyp).unwrap().iter().any(|p| p.is_real));
    let far = sample_real_points(&hyp, 50.0, 40, 3).unwrap();
    assert!(far.iter().any(|q| q.iter().any(|c| c.abs() > 20.0)));
}

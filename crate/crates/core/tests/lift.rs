use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spacecurve::implicit::{implicit_equations, random_rational_curve};
use spacecurve::lift::{lift, numeric_targets, LiftMode};
use spacecurve::plane_param::{PlaneParam, Provenance};
use spacecurve::projection::{Axis, ProjectionFrame};
use spacecurve::SpaceCurve;

// Independent oracle: at a pole ξ the point at infinity is (p1 : p2 : p3 : 0)(ξ),
// so the lift target is p3(ξ)/p1(ξ), read straight off the generating curve.
#[test]
fn chi_targets_are_limits_of_the_generating_curve() {
    let mut rng = ChaCha8Rng::seed_from_u64(314);
    for degree in [3, 4] {
        let original = random_rational_curve(&mut rng, degree);
        let [p1, p2, p3] = &original.components;
        let curve = SpaceCurve::new(&implicit_equations(&original)).unwrap();
        let frame_curve = ProjectionFrame::axis(Axis::Z).curve_in_frame(&curve).unwrap();
        let plane = PlaneParam::new(p1.clone(), p2.clone(), original.denominator.clone(), Provenance::Oracle).unwrap();

        let targets = numeric_targets(&frame_curve.top_forms(), &plane).unwrap();
        assert_eq!(targets.len(), degree);
        for t in &targets {
            let expected = p3.eval_complex(t.pole) / p1.eval_complex(t.pole);
            assert!((t.chi - expected).norm() < 1e-8 * (1.0 + expected.norm()), "{} vs {expected}", t.chi);
        }

        let exact = lift(&frame_curve, &plane, LiftMode::Exact).unwrap();
        assert_eq!(exact.mode, LiftMode::Exact);
        assert_eq!(&exact.lifted, p3);
        let numeric = lift(&frame_curve, &plane, LiftMode::Numeric).unwrap();
        let gap = (0..degree).map(|k| (spacecurve::poly::rat::to_f64(&numeric.lifted.coeff(k)) - spacecurve::poly::rat::to_f64(&p3.coeff(k))).abs());
        assert!(gap.fold(0.0, f64::max) < 1e-8);
    }
}

use eph_clifford::emit::{read_csv, write_csv, EmitConfig};
use eph_clifford::scenarios::{Curve, CurveSegment, TuningTables};
use eph_clifford::{
    moebius_family, moebius_map, subgroup_exp, Dual, Metric, MetricKind, MoebiusVariant,
    Multivector, PlanePoint, Subgroup,
};
use proptest::prelude::*;

const METRICS: [&[f64]; 4] = [&[-1.0, -1.0], &[-1.0, 0.0], &[-1.0, 1.0], &[1.0, -1.0, 0.0]];

fn metric_and_coeffs(count: usize) -> impl Strategy<Value = (Metric, Vec<Vec<f64>>)> {
    (0..METRICS.len()).prop_flat_map(move |i| {
        let m = Metric::new(METRICS[i]).unwrap();
        let blades = m.blade_count();
        (
            Just(m),
            prop::collection::vec(prop::collection::vec(-2.0..2.0f64, blades), count),
        )
    })
}

fn kind() -> impl Strategy<Value = MetricKind> {
    prop::sample::select(MetricKind::ALL.to_vec())
}

fn subgroup() -> impl Strategy<Value = Subgroup> {
    prop::sample::select(Subgroup::ALL.to_vec())
}

fn close(p: PlanePoint, q: PlanePoint, tol: f64) -> bool {
    let scale = 1.0_f64.max(p.u.abs()).max(p.v.abs());
    (p.u - q.u).abs() <= tol * scale && (p.v - q.v).abs() <= tol * scale
}

proptest! {
    #[test]
    fn star_is_an_involution((m, c) in metric_and_coeffs(1)) {
        let a = Multivector::from_coeffs(m, c[0].clone()).unwrap();
        prop_assert_eq!(a.star().star(), a);
    }

    #[test]
    fn bar_is_prime_after_star((m, c) in metric_and_coeffs(1)) {
        let a = Multivector::from_coeffs(m, c[0].clone()).unwrap();
        prop_assert_eq!(a.bar(), a.star().prime());
        prop_assert_eq!(a.bar(), a.prime().star());
    }

    // d/dt ⟨(a + t b) c (a + t b)̄⟩₀ by dual numbers against a centered
    // difference of the plain evaluation.
    #[test]
    fn dual_derivative_matches_finite_difference((m, c) in metric_and_coeffs(3), t0 in -1.0..1.0f64) {
        let lift = |v: &[f64]| -> Vec<Dual> { v.iter().map(|x| Dual::constant(*x)).collect() };
        let eval_dual = |t: Dual| -> Dual {
            let a = Multivector::from_coeffs(m, lift(&c[0])).unwrap();
            let b = Multivector::from_coeffs(m, lift(&c[1])).unwrap();
            let w = Multivector::from_coeffs(m, lift(&c[2])).unwrap();
            let x = a.add(&b.scale(t)).unwrap();
            x.gp(&w).unwrap().gp(&x.bar()).unwrap().coeff(0)
        };
        let eval = |t: f64| -> f64 {
            let a = Multivector::from_coeffs(m, c[0].clone()).unwrap();
            let b = Multivector::from_coeffs(m, c[1].clone()).unwrap();
            let w = Multivector::from_coeffs(m, c[2].clone()).unwrap();
            let x = a.add(&b.scale(t)).unwrap();
            x.gp(&w).unwrap().gp(&x.bar()).unwrap().coeff(0)
        };
        let de = eval_dual(Dual::variable(t0)).de;
        let h = 1e-6;
        let fd = (eval(t0 + h) - eval(t0 - h)) / (2.0 * h);
        prop_assert!((de - fd).abs() <= 1e-6 * de.abs().max(1.0), "{} vs {}", de, fd);
    }

    #[test]
    fn scalar_multiple_does_not_change_the_map(
        kind in kind(), s in subgroup(), t in -1.0..1.0f64,
        lambda in prop::sample::select(vec![-3.0, -0.5, 0.25, 2.0, 7.0]),
        u in -3.0..3.0f64, v in -3.0..3.0f64,
    ) {
        let m = subgroup_exp(s, t, kind.metric());
        let p = PlanePoint::new(u, v);
        if let (Ok(a), Ok(b)) = (moebius_map(&m, p), moebius_map(&m.scale(lambda), p)) {
            prop_assert!(close(a, b, 1e-9), "{:?} vs {:?}", a, b);
        }
    }

    #[test]
    fn one_parameter_group_law(
        kind in kind(), s in subgroup(), t1 in -1.0..1.0f64, t2 in -1.0..1.0f64,
        u in -3.0..3.0f64, v in -3.0..3.0f64,
    ) {
        let p = PlanePoint::new(u, v);
        let direct = MoebiusVariant::Direct;
        let step = moebius_family(s, kind, direct, t2, p)
            .and_then(|q| moebius_family(s, kind, direct, t1, q));
        let whole = moebius_family(s, kind, direct, t1 + t2, p);
        if let (Ok(a), Ok(b)) = (step, whole) {
            if a.u.abs() < 1e3 && a.v.abs() < 1e3 {
                prop_assert!(close(a, b, 1e-9), "{:?} vs {:?}", a, b);
            }
        }
    }

    #[test]
    fn upper_half_plane_is_preserved(
        kind in prop::sample::select(vec![MetricKind::Elliptic, MetricKind::Parabolic]),
        s in subgroup(), t in -3.0..3.0f64, u in -5.0..5.0f64, v in 0.01..5.0f64,
    ) {
        let q = moebius_family(s, kind, MoebiusVariant::Direct, t, PlanePoint::new(u, v)).unwrap();
        prop_assert!(q.v > 0.0, "{:?}", q);
    }

    #[test]
    fn csv_round_trip(mut curves in prop::collection::vec(curve(), 0..5)) {
        for (i, c) in curves.iter_mut().enumerate() {
            c.id = i;
        }
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        let cfg = EmitConfig::new(dir.path(), &TuningTables::default());
        write_csv(&curves, &path, &cfg).unwrap();
        let back = read_csv(&path).unwrap();
        // A curve with nothing to draw leaves no rows behind.
        let expected: Vec<Curve> = curves
            .iter()
            .map(Curve::normalized)
            .filter(|c| !c.segments.is_empty())
            .collect();
        prop_assert_eq!(back.len(), expected.len());
        for (b, e) in back.iter().zip(&expected) {
            prop_assert_eq!(
                (b.id, b.subgroup, b.kind, b.variant, b.arrow),
                (e.id, e.subgroup, e.kind, e.variant, e.arrow)
            );
            prop_assert!((b.color_grade - e.color_grade).abs() <= 5e-10);
            prop_assert_eq!(b.segments.len(), e.segments.len());
            for (sb, se) in b.segments.iter().zip(&e.segments) {
                prop_assert_eq!(sb.points.len(), se.points.len());
                for (pb, pe) in sb.points.iter().zip(&se.points) {
                    prop_assert!((pb.u - pe.u).abs() <= 5e-10 && (pb.v - pe.v).abs() <= 5e-10);
                }
            }
        }
    }
}

fn curve() -> impl Strategy<Value = Curve> {
    let point = (-9.0..9.0f64, -9.0..9.0f64).prop_map(|(u, v)| PlanePoint::new(u, v));
    let segment = prop::collection::vec(point, 0..6).prop_map(|points| CurveSegment { points });
    (
        subgroup(),
        kind(),
        prop::sample::select(MoebiusVariant::ALL.to_vec()),
        any::<bool>(),
        0.0..1.2f64,
        prop::collection::vec(segment, 0..4),
    )
        .prop_map(|(s, kind, variant, arrow, grade, segments)| {
            let mut c = Curve::new(0, s, kind, variant, grade);
            // Arrows are always written as direct-variant curves.
            if arrow {
                c.variant = MoebiusVariant::Direct;
            }
            c.arrow = arrow;
            c.segments = segments;
            c
        })
}

#[test]
fn hyperbolic_maps_leave_the_upper_half_plane() {
    let p = PlanePoint::new(0.0, 2.0);
    let q = moebius_family(
        Subgroup::K,
        MetricKind::Hyperbolic,
        MoebiusVariant::Direct,
        1.0,
        p,
    )
    .unwrap();
    assert!(q.v < 0.0, "{q:?}");
}

use eph_clifford::scenarios::{
    frame_parameter, future_past_frames, generate_arrows, generate_orbits, generate_transverses,
    in_limits, orbit_ordinate, Curve, TuningTables, DRAWN_VARIANTS,
};
use eph_clifford::{MetricKind, MoebiusVariant, PlanePoint, Subgroup};

fn pairs() -> impl Iterator<Item = (Subgroup, MetricKind)> {
    Subgroup::ALL
        .into_iter()
        .flat_map(|s| MetricKind::ALL.into_iter().map(move |k| (s, k)))
}

fn sorted_points(curves: &[Curve]) -> Vec<(u64, u64)> {
    let mut pts: Vec<_> = curves
        .iter()
        .flat_map(|c| c.points().map(|p| (p.u.to_bits(), p.v.to_bits())))
        .collect();
    pts.sort_unstable();
    pts
}

#[test]
fn orbits_and_transverses_visit_the_same_nodes() {
    let t = TuningTables::default();
    for (s, kind) in pairs() {
        let orbits = generate_orbits(s, kind, &t).unwrap();
        let transverses = generate_transverses(s, kind, &t).unwrap();
        for slot in 0..DRAWN_VARIANTS.len() {
            assert_eq!(
                sorted_points(&orbits.curves[slot]),
                sorted_points(&transverses.curves[slot]),
                "{s:?} {kind:?} slot {slot}"
            );
        }
        assert_eq!(orbits.stats.nodes, transverses.stats.nodes);
    }
}

#[test]
fn emitted_points_lie_inside_the_plot_area() {
    let t = TuningTables::default();
    for (s, kind) in pairs() {
        let family = generate_orbits(s, kind, &t).unwrap();
        for (slot, curves) in family.curves.iter().enumerate() {
            let cayley = DRAWN_VARIANTS[slot] != MoebiusVariant::Direct;
            for c in curves {
                for p in c.points() {
                    assert!(
                        in_limits(*p, kind, cayley, false, &t),
                        "{s:?} {kind:?} {p:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn n_orbits_are_horizontal_lines() {
    let t = TuningTables::default();
    for kind in MetricKind::ALL {
        let family = generate_orbits(Subgroup::N, kind, &t).unwrap();
        for c in &family.curves[0] {
            let vval = orbit_ordinate(Subgroup::N, kind, c.id, &t).unwrap();
            assert!(
                c.points().all(|p| (p.v - vval).abs() < 1e-12),
                "{kind:?} orbit {}",
                c.id
            );
        }
    }
}

#[test]
fn a_orbits_are_rays_from_the_origin() {
    let t = TuningTables::default();
    for kind in MetricKind::ALL {
        let family = generate_orbits(Subgroup::A, kind, &t).unwrap();
        for c in &family.curves[0] {
            let vval = orbit_ordinate(Subgroup::A, kind, c.id, &t).unwrap();
            let (dx, dy) = (
                (std::f64::consts::PI * vval).cos(),
                (std::f64::consts::PI * vval).sin(),
            );
            for p in c.points() {
                // Same direction as the seed, scaled by a positive factor.
                assert!(
                    (p.u * dy - p.v * dx).abs() < 1e-9,
                    "{kind:?} orbit {} at {p:?}",
                    c.id
                );
                assert!(p.u * dx + p.v * dy > 0.0);
            }
        }
    }
}

#[test]
fn arrows_follow_the_generator_fields() {
    let t = TuningTables::default();
    for (s, kind) in pairs() {
        let field = generate_arrows(s, kind, &t);
        assert_eq!(field.singular, 0);
        assert_eq!(field.arrows.len(), 20 * 11);
        for a in &field.arrows {
            let (x, y) = (a.base.u, a.base.v);
            let expected = match s {
                Subgroup::A => (2.0 * x, 2.0 * y),
                Subgroup::N => (1.0, 0.0),
                Subgroup::K => (1.0 + x * x + kind.signum() * y * y, 2.0 * x * y),
            };
            assert!(
                (a.offset.0 - expected.0).abs() < 1e-9 && (a.offset.1 - expected.1).abs() < 1e-9
            );
        }
        let curves = field.to_curves(0.5);
        assert_eq!(curves.len(), field.arrows.len());
        assert!(curves.iter().all(|c| c.arrow && c.points().count() == 2));
    }
}

#[test]
fn first_frame_is_the_unmapped_hyperbola_grid() {
    let t = TuningTables::default();
    let fp = &t.future_past;
    let frames = future_past_frames(&t);
    assert_eq!(frames.len(), fp.frames);
    for (k, c) in frames[0].iter().enumerate() {
        let expected: Vec<PlanePoint> = (-fp.nodes / 2..=fp.nodes / 2)
            .map(|l| {
                let tau = l as f64 / fp.node_scale;
                PlanePoint::new(fp.rad[k] * tau.cosh(), fp.rad[k] * tau.sinh())
            })
            .filter(|p| p.u.abs() <= t.ulim && p.v.abs() <= t.vlim)
            .collect();
        let got: Vec<PlanePoint> = c.points().copied().collect();
        assert_eq!(got, expected, "curve {k}");
    }
}

type Mat = [[f64; 2]; 2];

fn mul(a: Mat, b: Mat) -> Mat {
    let mut r = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    r
}

fn lin(terms: &[(f64, Mat)]) -> Mat {
    let mut r = [[0.0; 2]; 2];
    for (c, m) in terms {
        for i in 0..2 {
            for j in 0..2 {
                r[i][j] += c * m[i][j];
            }
        }
    }
    r
}

fn inv(m: Mat) -> Mat {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    [
        [m[1][1] / det, -m[0][1] / det],
        [-m[1][0] / det, m[0][0] / det],
    ]
}

/// The frame map evaluated in a real 2×2 matrix model of the hyperbolic
/// plane algebra (`e0² = -1`, `e1² = 1`).
fn frame_oracle(s: f64, p: PlanePoint) -> PlanePoint {
    const I: Mat = [[1.0, 0.0], [0.0, 1.0]];
    const E0: Mat = [[0.0, -1.0], [1.0, 0.0]];
    const E1: Mat = [[1.0, 0.0], [0.0, -1.0]];
    let w = lin(&[(p.u, E0), (p.v, E1)]);
    let num = lin(&[(1.0, w), (-s, E1)]);
    let den = lin(&[(s, mul(E1, w)), (1.0, I)]);
    let r = mul(num, inv(den));
    PlanePoint::new((r[1][0] - r[0][1]) / 2.0, (r[0][0] - r[1][1]) / 2.0)
}

#[test]
fn second_frame_matches_the_matrix_model() {
    let t = TuningTables::default();
    let fp = &t.future_past;
    let s = frame_parameter(1, fp.exp_scale);
    assert!((s - 0.107_446).abs() < 1e-6);

    let frames = future_past_frames(&t);
    for (k, c) in frames[1].iter().enumerate() {
        let expected: Vec<PlanePoint> = (-fp.nodes / 2..=fp.nodes / 2)
            .map(|l| {
                let tau = l as f64 / fp.node_scale;
                frame_oracle(
                    s,
                    PlanePoint::new(fp.rad[k] * tau.cosh(), fp.rad[k] * tau.sinh()),
                )
            })
            .filter(|p| p.u.abs() <= t.ulim && p.v.abs() <= t.vlim)
            .collect();
        let got: Vec<PlanePoint> = c.points().copied().collect();
        assert_eq!(got.len(), expected.len(), "curve {k}");
        for (g, e) in got.iter().zip(&expected) {
            assert!(
                (g.u - e.u).abs() < 1e-9 && (g.v - e.v).abs() < 1e-9,
                "{g:?} vs {e:?}"
            );
        }
    }
}

#[test]
fn frame_shading_splits_at_the_frame_count() {
    let t = TuningTables::default();
    let frames = future_past_frames(&t);
    for c in &frames[3] {
        let expected = if c.id < t.future_past.frames {
            0.0
        } else {
            1.0
        };
        assert_eq!(c.color_grade, expected);
    }
}

use super::curve::{Curve, CurveBuilder};
use super::nodes::in_limits;
use super::TuningTables;
use crate::algebra::Multivector;
use crate::moebius::{
    moebius_map, CliffordMatrix2, MetricKind, MoebiusVariant, PlanePoint, Subgroup,
};

/// Parameter of the Möbius map applied in frame `j`.
pub fn frame_parameter(j: usize, exp_scale: f64) -> f64 {
    if j > 0 {
        (j as f64 / exp_scale - 3.0).exp()
    } else {
        0.0
    }
}

/// `[[1, -s e1], [s e1, 1]]` in hyperbolic geometry.
pub fn frame_matrix(s: f64) -> CliffordMatrix2 {
    let m = MetricKind::Hyperbolic.metric();
    let e1 = Multivector::unit(m, 1).expect("plane metric");
    CliffordMatrix2 {
        a: Multivector::scalar(m, 1.0),
        b: e1.scale(-s),
        c: e1.scale(s),
        d: Multivector::scalar(m, 1.0),
    }
}

/// Hyperbolas `rad·(cosh τ, sinh τ)` pushed through the frame maps, one
/// curve collection per frame.
pub fn future_past_frames(tables: &TuningTables) -> Vec<Vec<Curve>> {
    let fp = &tables.future_past;
    let kind = MetricKind::Hyperbolic;
    (0..fp.frames)
        .map(|j| {
            let matrix = frame_matrix(frame_parameter(j, fp.exp_scale));
            (0..fp.curves)
                .map(|k| {
                    // Integer ratio: the first `frames` curves are dark, the rest light.
                    let color_grade = (k / fp.frames) as f64;
                    let mut b = CurveBuilder::new(Curve::new(
                        k,
                        Subgroup::K,
                        kind,
                        MoebiusVariant::Direct,
                        color_grade,
                    ));
                    for l in -fp.nodes / 2..=fp.nodes / 2 {
                        let tau = l as f64 / fp.node_scale;
                        let seed = PlanePoint::new(fp.rad[k] * tau.cosh(), fp.rad[k] * tau.sinh());
                        match moebius_map(&matrix, seed) {
                            Ok(p) if in_limits(p, kind, false, true, tables) => b.push(p),
                            _ => b.break_segment(),
                        }
                    }
                    b.finish()
                })
                .collect()
        })
        .collect()
}

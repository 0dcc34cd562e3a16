use std::f64::consts::PI;

use super::{ScenarioError, TuningTables};
use crate::moebius::{self, MetricKind, MoebiusError, MoebiusVariant, PlanePoint, Subgroup};

/// Slack on the hyperbolic unit-disk test for Cayley images.
pub const DISK_SLACK: f64 = 1.001;

/// Group parameter and seed point of one orbit node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeParams {
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

impl NodeParams {
    pub fn seed(&self) -> PlanePoint {
        PlanePoint::new(self.x, self.y)
    }
}

fn vpoint(tables: &TuningTables, kind: MetricKind, i: usize) -> Result<f64, ScenarioError> {
    tables.vpoints[kind.index()]
        .get(i)
        .copied()
        .ok_or(ScenarioError::IndexOutOfRange {
            index: i,
            limit: 10,
        })
}

/// Seed ordinate for orbit `vi` (the `vval` of the node).
pub fn orbit_ordinate(
    s: Subgroup,
    kind: MetricKind,
    vi: usize,
    tables: &TuningTables,
) -> Result<f64, ScenarioError> {
    let limit = tables.vilimit(s, kind);
    if vi >= limit {
        return Err(ScenarioError::IndexOutOfRange { index: vi, limit });
    }
    match s {
        Subgroup::A => {
            let vval = vi as f64 / (limit as f64 - 1.0);
            // Hyperbolic orbits need the lower half of the circle too.
            Ok(if kind == MetricKind::Hyperbolic {
                2.0 * vval
            } else {
                vval
            })
        }
        Subgroup::N if kind == MetricKind::Hyperbolic => {
            let offset = vi as i64 - (limit / 2) as i64;
            let sign = if offset < 0 { -1.0 } else { 1.0 };
            Ok(sign * vpoint(tables, kind, offset.unsigned_abs() as usize)?)
        }
        Subgroup::N | Subgroup::K => vpoint(tables, kind, vi),
    }
}

/// Parameters of the node at step value `f` on orbit `vi`.
pub fn node_params(
    s: Subgroup,
    kind: MetricKind,
    vi: usize,
    f: f64,
    tables: &TuningTables,
) -> Result<NodeParams, ScenarioError> {
    let vval = orbit_ordinate(s, kind, vi, tables)?;
    Ok(match s {
        Subgroup::A => NodeParams {
            t: f,
            x: (PI * vval).cos(),
            y: (PI * vval).sin(),
        },
        Subgroup::N => NodeParams {
            t: f,
            x: 0.0,
            y: vval,
        },
        Subgroup::K => NodeParams {
            t: f * PI,
            x: 0.0,
            y: vval,
        },
    })
}

pub fn eval_node(
    s: Subgroup,
    kind: MetricKind,
    variant: MoebiusVariant,
    node: &NodeParams,
) -> Result<PlanePoint, MoebiusError> {
    moebius::moebius_family(s, kind, variant, node.t, node.seed())
}

/// Coarse plot-area test. Hyperbolic pictures are further restricted to the
/// upper half-plane (direct images) or the unit disk `v² - u² ≤ 1` (Cayley
/// images), unless drawing the inversion frames.
pub fn in_limits(
    p: PlanePoint,
    kind: MetricKind,
    cayley: bool,
    inversion: bool,
    tables: &TuningTables,
) -> bool {
    p.u.abs() <= tables.ulim
        && p.v.abs() <= tables.vlim
        && (kind != MetricKind::Hyperbolic
            || inversion
            || (!cayley && p.v >= 0.0)
            || (cayley && -p.u * p.u + p.v * p.v - DISK_SLACK <= 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_params_examples() {
        let t = TuningTables::default();
        let n = node_params(Subgroup::A, MetricKind::Elliptic, 0, 0.5, &t).unwrap();
        assert_eq!(
            n,
            NodeParams {
                t: 0.5,
                x: 1.0,
                y: 0.0
            }
        );

        let n = node_params(Subgroup::K, MetricKind::Parabolic, 3, 0.2, &t).unwrap();
        assert_eq!(
            n,
            NodeParams {
                t: 0.2 * PI,
                x: 0.0,
                y: 0.5
            }
        );

        // 19 orbits, midpoint index 9 maps onto vpoints[0] = 0.
        let n = node_params(Subgroup::N, MetricKind::Hyperbolic, 9, 1.0, &t).unwrap();
        assert_eq!(n.y, 0.0);
        let below = node_params(Subgroup::N, MetricKind::Hyperbolic, 5, 1.0, &t).unwrap();
        let above = node_params(Subgroup::N, MetricKind::Hyperbolic, 13, 1.0, &t).unwrap();
        assert_eq!(below.y, -1.0);
        assert_eq!(above.y, 1.0);

        let last = node_params(Subgroup::A, MetricKind::Hyperbolic, 29, 0.0, &t).unwrap();
        assert!((last.x - 1.0).abs() < 1e-15 && last.y.abs() < 1e-14);

        assert_eq!(
            node_params(Subgroup::K, MetricKind::Elliptic, 10, 0.0, &t),
            Err(ScenarioError::IndexOutOfRange {
                index: 10,
                limit: 10
            })
        );
    }

    #[test]
    fn in_limits_examples() {
        let t = TuningTables::default();
        for kind in MetricKind::ALL {
            assert!(!in_limits(
                PlanePoint::new(0.0, 9.0),
                kind,
                false,
                false,
                &t
            ));
            assert!(in_limits(PlanePoint::new(8.5, -8.5), kind, false, true, &t));
        }
        let h = MetricKind::Hyperbolic;
        assert!(!in_limits(PlanePoint::new(1.0, -0.5), h, false, false, &t));
        assert!(in_limits(
            PlanePoint::new(1.0, -0.5),
            MetricKind::Elliptic,
            false,
            false,
            &t
        ));
        // The slack is on v² - u², so the disk edge on the axis is sqrt(1.001).
        assert!(in_limits(PlanePoint::new(0.0, 1.0004), h, true, false, &t));
        assert!(!in_limits(PlanePoint::new(0.0, 1.0005), h, true, false, &t));
        assert!(!in_limits(PlanePoint::new(0.0, 1.01), h, true, false, &t));
        assert!(in_limits(PlanePoint::new(0.0, 1.01), h, true, true, &t));
        assert!(in_limits(PlanePoint::new(3.0, -2.0), h, true, false, &t));
    }
}

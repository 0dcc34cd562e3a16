use super::checks::{check_focal_k, fit_parabola, FocalCheckReport, ParabolaCapture};
use super::curve::{Curve, CurveBuilder};
use super::nodes::{eval_node, in_limits, node_params, orbit_ordinate};
use super::{ScenarioError, TuningTables};
use crate::moebius::{self, MetricKind, MoebiusVariant, PlanePoint, Subgroup};

/// Variants drawn for orbits and transverses: the curve itself and its two
/// Cayley images.
pub const DRAWN_VARIANTS: [MoebiusVariant; 3] = [
    MoebiusVariant::Direct,
    MoebiusVariant::CayleyPoint,
    MoebiusVariant::Cayley1Point,
];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NodeStats {
    pub nodes: usize,
    pub singular: usize,
    pub out_of_bounds: usize,
    pub breaks: usize,
}

impl NodeStats {
    pub fn merge(&mut self, other: NodeStats) {
        self.nodes += other.nodes;
        self.singular += other.singular;
        self.out_of_bounds += other.out_of_bounds;
        self.breaks += other.breaks;
    }
}

/// Curves for one (subgroup, geometry), one list per entry of
/// [`DRAWN_VARIANTS`], plus whatever checks ran along the way.
#[derive(Debug, Clone)]
pub struct CurveFamily {
    pub subgroup: Subgroup,
    pub kind: MetricKind,
    pub curves: [Vec<Curve>; 3],
    pub focal_checks: Vec<FocalCheckReport>,
    pub parabolas: Vec<ParabolaCapture>,
    pub stats: NodeStats,
}

/// Last three regular Cayley images, oldest first.
#[derive(Debug, Default)]
struct ParabolaWindow {
    points: Vec<PlanePoint>,
}

impl ParabolaWindow {
    fn push(&mut self, p: PlanePoint) {
        if self.points.len() == 3 {
            self.points.remove(0);
        }
        self.points.push(p);
    }
}

struct NodeRow {
    builders: Vec<CurveBuilder>,
    stats: NodeStats,
}

impl NodeRow {
    fn new(s: Subgroup, kind: MetricKind, id: usize, color_grade: f64) -> Self {
        NodeRow {
            builders: DRAWN_VARIANTS
                .iter()
                .map(|&variant| CurveBuilder::new(Curve::new(id, s, kind, variant, color_grade)))
                .collect(),
            stats: NodeStats::default(),
        }
    }

    /// Evaluate one variant and append or break. Returns the mapped point
    /// when the map was regular, in bounds or not.
    fn step(
        &mut self,
        slot: usize,
        s: Subgroup,
        kind: MetricKind,
        node: &super::NodeParams,
        tables: &TuningTables,
    ) -> Option<PlanePoint> {
        let variant = DRAWN_VARIANTS[slot];
        self.stats.nodes += 1;
        match eval_node(s, kind, variant, node) {
            Ok(p) => {
                let cayley = variant != MoebiusVariant::Direct;
                if in_limits(p, kind, cayley, false, tables) {
                    self.builders[slot].push(p);
                } else {
                    self.stats.out_of_bounds += 1;
                    self.builders[slot].break_segment();
                }
                Some(p)
            }
            Err(_) => {
                self.stats.singular += 1;
                self.builders[slot].break_segment();
                None
            }
        }
    }

    fn finish(self, out: &mut [Vec<Curve>; 3], stats: &mut NodeStats) {
        let mut row_stats = self.stats;
        for (slot, b) in self.builders.into_iter().enumerate() {
            row_stats.breaks += b.breaks();
            out[slot].push(b.finish());
        }
        stats.merge(row_stats);
    }
}

/// Orbits of the subgroup through each seed, with the `K`-orbit focal
/// checks and the parabola fits of parabolic Cayley images.
pub fn generate_orbits(
    s: Subgroup,
    kind: MetricKind,
    tables: &TuningTables,
) -> Result<CurveFamily, ScenarioError> {
    let vilimit = tables.vilimit(s, kind);
    let fsteps = tables.fstep(s, kind);
    let fit_parabolas = kind == MetricKind::Parabolic && s != Subgroup::K;

    let mut family = CurveFamily {
        subgroup: s,
        kind,
        curves: Default::default(),
        focal_checks: Vec::new(),
        parabolas: Vec::new(),
        stats: NodeStats::default(),
    };
    let mut windows = [ParabolaWindow::default(), ParabolaWindow::default()];

    for vi in 0..vilimit {
        let vval = orbit_ordinate(s, kind, vi, tables)?;
        let color_grade = 1.2 * vi as f64 / vilimit as f64;
        let mut row = NodeRow::new(s, kind, vi, color_grade);
        let mut focal_values = Vec::new();
        let mut fits = [None, None];

        for j in -fsteps..=fsteps {
            let f = tables.step_value(s, kind, j);
            let node = node_params(s, kind, vi, f, tables)?;

            let direct = row.step(0, s, kind, &node, tables);
            // End nodes are excluded from the focal checks.
            if s == Subgroup::K && vval != 0.0 && j.abs() != fsteps {
                if let Some(p) = direct {
                    focal_values.push(check_focal_k(kind, vval, p));
                }
            }

            for slot in 1..3 {
                let Some(p) = row.step(slot, s, kind, &node, tables) else {
                    continue;
                };
                if fit_parabolas {
                    let w = &mut windows[slot - 1];
                    w.push(p);
                    if j == 1 && w.points.len() == 3 {
                        fits[slot - 1] = fit_parabola(w.points[0], w.points[1], w.points[2]).ok();
                    }
                }
            }
        }

        row.finish(&mut family.curves, &mut family.stats);
        if s == Subgroup::K && vval != 0.0 {
            family
                .focal_checks
                .push(FocalCheckReport::new(kind, vi, vval, focal_values));
        }
        if fit_parabolas {
            family.parabolas.push(ParabolaCapture {
                subgroup: s,
                vi,
                vval,
                fits,
            });
        }
    }
    Ok(family)
}

/// Curves across the orbits at fixed group parameter: one curve per step
/// value, visiting the orbit seeds in order.
pub fn generate_transverses(
    s: Subgroup,
    kind: MetricKind,
    tables: &TuningTables,
) -> Result<CurveFamily, ScenarioError> {
    let vilimit = tables.vilimit(s, kind);
    let fsteps = tables.fstep(s, kind);
    let mut family = CurveFamily {
        subgroup: s,
        kind,
        curves: Default::default(),
        focal_checks: Vec::new(),
        parabolas: Vec::new(),
        stats: NodeStats::default(),
    };
    for (id, j) in (-fsteps..=fsteps).enumerate() {
        let f = tables.step_value(s, kind, j);
        let mut row = NodeRow::new(s, kind, id, 1.2);
        for vi in 0..vilimit {
            let node = node_params(s, kind, vi, f, tables)?;
            for slot in 0..3 {
                row.step(slot, s, kind, &node, tables);
            }
        }
        row.finish(&mut family.curves, &mut family.stats);
    }
    Ok(family)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arrow {
    pub base: PlanePoint,
    pub offset: (f64, f64),
}

#[derive(Debug, Clone)]
pub struct ArrowField {
    pub subgroup: Subgroup,
    pub kind: MetricKind,
    pub arrows: Vec<Arrow>,
    pub singular: usize,
}

impl ArrowField {
    /// Each arrow as a two-point curve from its base to its tip.
    pub fn to_curves(&self, color_grade: f64) -> Vec<Curve> {
        self.arrows
            .iter()
            .enumerate()
            .map(|(id, a)| {
                let mut c = Curve::new(
                    id,
                    self.subgroup,
                    self.kind,
                    MoebiusVariant::Direct,
                    color_grade,
                );
                c.arrow = true;
                let tip = PlanePoint::new(a.base.u + a.offset.0, a.base.v + a.offset.1);
                c.segments.push(super::CurveSegment {
                    points: vec![a.base, tip],
                });
                c
            })
            .collect()
    }
}

/// Vector field of the subgroup on the arrow grid. Singular grid points
/// are skipped and counted.
pub fn generate_arrows(s: Subgroup, kind: MetricKind, tables: &TuningTables) -> ArrowField {
    let grid = &tables.arrows;
    let mut field = ArrowField {
        subgroup: s,
        kind,
        arrows: Vec::new(),
        singular: 0,
    };
    for k in grid.k_range.0..grid.k_range.1 {
        for j in grid.j_range.0..grid.j_range.1 {
            let base = PlanePoint::new(k as f64 * grid.spacing, j as f64 * grid.spacing);
            match moebius::vector_field(s, kind, MoebiusVariant::Direct, base) {
                Ok(offset) => field.arrows.push(Arrow { base, offset }),
                Err(_) => field.singular += 1,
            }
        }
    }
    field
}

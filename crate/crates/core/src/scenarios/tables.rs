use crate::moebius::{MetricKind, Subgroup};

/// Tuning constants for the regenerated pictures: orbit counts, step
/// counts, parameter ranges, seed ordinates and plot bounds.
///
/// Per-(subgroup, geometry) tables are indexed `[subgroup][kind]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TuningTables {
    pub vilimits: [[usize; 3]; 3],
    pub fsteps: [[i32; 3]; 3],
    pub flimits: [[f64; 3]; 3],
    /// Orbit-origin ordinates, indexed `[kind][point]`.
    pub vpoints: [[f64; 10]; 3],
    pub ulim: f64,
    pub vlim: f64,
    pub arrows: ArrowGrid,
    pub future_past: FuturePastParams,
}

/// Arrow base points are `(k·spacing, j·spacing)` for `k` in `k_range`,
/// `j` in `j_range` (half-open).
#[derive(Debug, Clone, PartialEq)]
pub struct ArrowGrid {
    pub k_range: (i32, i32),
    pub j_range: (i32, i32),
    pub spacing: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FuturePastParams {
    pub curves: usize,
    pub nodes: i32,
    pub frames: usize,
    pub exp_scale: f64,
    pub node_scale: f64,
    pub rad: [f64; 16],
}

impl Default for TuningTables {
    fn default() -> Self {
        TuningTables {
            vilimits: [[10, 20, 30], [10, 10, 19], [10, 10, 10]],
            fsteps: [[15, 15, 20], [15, 15, 25], [12, 15, 15]],
            flimits: [[2.0, 2.0, 4.0], [10.0, 4.0, 4.0], [0.5, 0.5, 0.5]],
            vpoints: [
                [
                    0.0,
                    1.0 / 8.0,
                    1.0 / 4.0,
                    1.0 / 2.0,
                    1.0,
                    2.0,
                    3.0,
                    5.0,
                    8.0,
                    16.0,
                ],
                [
                    0.0,
                    1.0 / 8.0,
                    1.0 / 4.0,
                    1.0 / 2.0,
                    1.0,
                    2.0,
                    3.0,
                    6.0,
                    10.0,
                    20.0,
                ],
                [
                    0.0,
                    1.0 / 8.0,
                    1.0 / 4.0,
                    1.0 / 2.0,
                    1.0,
                    2.0,
                    3.0,
                    5.0,
                    10.0,
                    100.0,
                ],
            ],
            ulim: 8.5,
            vlim: 8.5,
            arrows: ArrowGrid {
                k_range: (-10, 10),
                j_range: (0, 11),
                spacing: 1.0 / 3.0,
            },
            future_past: FuturePastParams {
                curves: 15,
                nodes: 40,
                frames: 8,
                exp_scale: 1.3,
                node_scale: 4.0,
                rad: [
                    1.0 / 5.0,
                    1.0 / 4.0,
                    1.0 / 3.5,
                    1.0 / 3.0,
                    1.0 / 2.5,
                    1.0 / 2.0,
                    1.0 / 1.5,
                    1.0,
                    1.5,
                    2.0,
                    2.5,
                    3.0,
                    3.5,
                    4.0,
                    4.5,
                    5.0,
                ],
            },
        }
    }
}

impl TuningTables {
    pub fn vilimit(&self, s: Subgroup, kind: MetricKind) -> usize {
        self.vilimits[s.index()][kind.index()]
    }

    pub fn fstep(&self, s: Subgroup, kind: MetricKind) -> i32 {
        self.fsteps[s.index()][kind.index()]
    }

    pub fn flimit(&self, s: Subgroup, kind: MetricKind) -> f64 {
        self.flimits[s.index()][kind.index()]
    }

    /// Group parameter at step `j`.
    pub fn step_value(&self, s: Subgroup, kind: MetricKind, j: i32) -> f64 {
        self.flimit(s, kind) * j as f64 / self.fstep(s, kind) as f64
    }
}

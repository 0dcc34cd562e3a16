//! The numeric program: orbits, transverses and arrow grids for every
//! (subgroup, geometry) pair, their Cayley images, the focal-property
//! checks, and the future-to-past frame sequence.

mod checks;
mod curve;
mod future_past;
mod nodes;
mod orbits;
mod tables;

use thiserror::Error;

pub use checks::{
    check_focal_k, check_parabolic_vertices, consecutive_close, fit_parabola, fmt_general,
    hyperbolic_foci, Focal, FocalCheckReport, ParabolaCapture, ParabolaFit, CONSTANCY_TOL,
};
pub use curve::{Curve, CurveBuilder, CurveSegment};
pub use future_past::{frame_matrix, frame_parameter, future_past_frames};
pub use nodes::{eval_node, in_limits, node_params, orbit_ordinate, NodeParams, DISK_SLACK};
pub use orbits::{
    generate_arrows, generate_orbits, generate_transverses, Arrow, ArrowField, CurveFamily,
    NodeStats, DRAWN_VARIANTS,
};
pub use tables::{ArrowGrid, FuturePastParams, TuningTables};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("parabola fit needs three distinct abscissae")]
    DegenerateAbscissae,
}

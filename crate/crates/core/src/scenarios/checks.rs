//! Numeric checks of the focal properties of `K`-orbits and of the parabolas
//! traced by Cayley images in parabolic geometry.

use std::fmt::Write as _;

use super::ScenarioError;
use crate::moebius::{MetricKind, PlanePoint, Subgroup};

/// Consecutive check values closer than this (absolutely or relatively)
/// count as equal.
pub const CONSTANCY_TOL: f64 = 0.001;

/// Below this |det| three abscissae are treated as coincident.
const VANDERMONDE_EPS: f64 = 1e-12;
/// Leading coefficients this small make the fit a straight line.
const FLAT_EPS: f64 = 1e-12;

/// Focal length and vertex of `v = a u² + b u + c`.
///
/// `u` is `b/(2a)`, the mirror image of the usual vertex abscissa; only its
/// square enters the vertex check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Focal {
    pub l: f64,
    pub u: f64,
    pub v: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParabolaFit {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// `None` when `a = 0`.
    pub focal: Option<Focal>,
}

impl ParabolaFit {
    pub fn from_coefficients(a: f64, b: f64, c: f64) -> Self {
        let focal = (a.abs() > FLAT_EPS).then(|| {
            let u = b / (2.0 * a);
            Focal {
                l: 1.0 / (4.0 * a),
                u,
                v: c - u * u,
            }
        });
        ParabolaFit { a, b, c, focal }
    }

    pub fn eval(&self, u: f64) -> f64 {
        (self.a * u + self.b) * u + self.c
    }

    /// `focal_v + focal_u²`; NaN for a degenerate fit.
    pub fn vertex_check(&self) -> f64 {
        self.focal.map_or(f64::NAN, |f| f.v + f.u * f.u)
    }
}

/// Parabola `v = a u² + b u + c` through three points.
pub fn fit_parabola(
    p0: PlanePoint,
    p1: PlanePoint,
    p2: PlanePoint,
) -> Result<ParabolaFit, ScenarioError> {
    let det = (p1.u - p0.u) * (p2.u - p0.u) * (p2.u - p1.u);
    if det.is_nan() || det.abs() <= VANDERMONDE_EPS {
        return Err(ScenarioError::DegenerateAbscissae);
    }
    let mut rows = [p0, p1, p2].map(|p| [p.u * p.u, p.u, 1.0, p.v]);
    // Gaussian elimination with partial pivoting.
    for col in 0..3 {
        let pivot = (col..3)
            .max_by(|&i, &j| rows[i][col].abs().total_cmp(&rows[j][col].abs()))
            .unwrap();
        rows.swap(col, pivot);
        for r in col + 1..3 {
            let k = rows[r][col] / rows[col][col];
            let pivot_row = rows[col];
            for (x, p) in rows[r].iter_mut().zip(pivot_row).skip(col) {
                *x -= k * p;
            }
        }
    }
    let mut x = [0.0; 3];
    for r in (0..3).rev() {
        let tail: f64 = (r + 1..3).map(|c| rows[r][c] * x[c]).sum();
        x[r] = (rows[r][3] - tail) / rows[r][r];
    }
    Ok(ParabolaFit::from_coefficients(x[0], x[1], x[2]))
}

/// Per-node quantity that stays constant along a `K`-orbit through
/// `(0, vval)`:
///
/// * elliptic: distance to the circle centre `(0, (v + 1/v)/2)`;
/// * parabolic: distance to `(0, v + 1/(4v))` minus the ordinate;
/// * hyperbolic: difference of distances to the foci `(0, f)` and
///   `(0, f - 2p)`, which may change sign between branches.
pub fn check_focal_k(kind: MetricKind, vval: f64, node: PlanePoint) -> f64 {
    let PlanePoint { u, v } = node;
    match kind {
        MetricKind::Elliptic => u.hypot(v - (vval + 1.0 / vval) / 2.0),
        MetricKind::Parabolic => u.hypot(v - (vval + 1.0 / vval / 4.0)) - v,
        MetricKind::Hyperbolic => {
            let (p, f) = hyperbolic_foci(vval);
            u.hypot(v - f) - u.hypot(v - f + 2.0 * p)
        }
    }
}

/// Half focal separation `p` and upper focus ordinate `f` of the hyperbolic
/// `K`-orbit through `(0, vval)`.
pub fn hyperbolic_foci(vval: f64) -> (f64, f64) {
    let p = (vval * vval + 1.0) / vval / 2f64.sqrt();
    // p²/2 - 1 = (v² - 1)² / (4v²); clamp the rounding noise at v = 1.
    let shift = (p * p / 2.0 - 1.0).max(0.0).sqrt();
    let f = if vval < 1.0 { p - shift } else { p + shift };
    (p, f)
}

/// The equality test applied between consecutive check values.
pub fn consecutive_close(prev: f64, next: f64) -> bool {
    let delta = next - prev;
    delta.abs() < CONSTANCY_TOL || (delta / next).abs() < CONSTANCY_TOL
}

/// Outcome of [`check_focal_k`] along one orbit.
#[derive(Debug, Clone, PartialEq)]
pub struct FocalCheckReport {
    pub kind: MetricKind,
    pub vi: usize,
    pub vval: f64,
    /// Check values at the interior nodes, in orbit order.
    pub values: Vec<f64>,
    /// Largest step between consecutive values, taking the smaller of the
    /// absolute and relative measure. Hyperbolic values are compared in
    /// magnitude.
    pub max_deviation: f64,
    pub sign_changes: usize,
    pub constant: bool,
}

impl FocalCheckReport {
    pub fn new(kind: MetricKind, vi: usize, vval: f64, values: Vec<f64>) -> Self {
        let hyperbolic = kind == MetricKind::Hyperbolic;
        let mut max_deviation: f64 = 0.0;
        let mut constant = true;
        let mut sign_changes = 0;
        for w in values.windows(2) {
            let (prev, next) = if hyperbolic {
                (w[0].abs(), w[1].abs())
            } else {
                (w[0], w[1])
            };
            let delta = next - prev;
            let dev = delta.abs().min((delta / next).abs());
            // NaN compares false, so it never hides behind max().
            if dev.is_nan() {
                max_deviation = f64::NAN;
            } else {
                max_deviation = max_deviation.max(dev);
            }
            constant &= consecutive_close(prev, next);
            if w[0].signum() != w[1].signum() && w[0] != 0.0 && w[1] != 0.0 {
                sign_changes += 1;
            }
        }
        FocalCheckReport {
            kind,
            vi,
            vval,
            values,
            max_deviation,
            sign_changes,
            constant,
        }
    }

    pub fn label(kind: MetricKind) -> &'static str {
        match kind {
            MetricKind::Elliptic => "Distance to center is:",
            MetricKind::Parabolic => "Directrice is:",
            MetricKind::Hyperbolic => "Difference to foci is:",
        }
    }

    /// One line in the `value====` style: `=` for each value equal to its
    /// predecessor, the value itself otherwise.
    pub fn render(&self) -> String {
        let mut out = String::from(Self::label(self.kind));
        let mut prev: Option<f64> = None;
        for &value in &self.values {
            match prev {
                Some(p) if consecutive_close(p, value) => out.push('='),
                _ => {
                    let _ = write!(out, " {value:5.3}");
                }
            }
            prev = Some(value);
        }
        out
    }
}

/// Parabolas fitted to the two Cayley images of one orbit.
#[derive(Debug, Clone, PartialEq)]
pub struct ParabolaCapture {
    pub subgroup: Subgroup,
    pub vi: usize,
    pub vval: f64,
    pub fits: [Option<ParabolaFit>; 2],
}

impl ParabolaCapture {
    pub fn render(&self) -> String {
        let head = format!(
            "Parab ({}/{:2}/{:6.3})",
            self.subgroup.letter(),
            self.vi,
            self.vval
        );
        match (
            self.fits[0].and_then(|f| f.focal),
            self.fits[1].and_then(|f| f.focal),
        ) {
            (Some(f0), Some(f1)) => {
                let mut line = format!(
                    "{head}; vert=({:6.3}, {:6.3}); l={:7.4}; second vert=({:6.3}, {:6.3}); l={:7.4}",
                    f0.u, f0.v, f0.l, f1.u, f1.v, f1.l
                );
                if self.subgroup == Subgroup::A {
                    let (c0, c1) = check_parabolic_vertices(
                        self.fits[0].as_ref().unwrap(),
                        self.fits[1].as_ref().unwrap(),
                    );
                    let _ = write!(
                        line,
                        "\nCheck vertices: {} and {}",
                        fmt_general(c0),
                        fmt_general(c1)
                    );
                }
                line
            }
            _ => format!("{head} is degenerate"),
        }
    }
}

/// `focal_v + focal_u²` for both fits; the vertices of the Cayley images of
/// `A`-orbits lie where this equals -1.
pub fn check_parabolic_vertices(fit0: &ParabolaFit, fit1: &ParabolaFit) -> (f64, f64) {
    (fit0.vertex_check(), fit1.vertex_check())
}

/// Six significant digits with trailing zeros dropped, like a default
/// iostream.
pub fn fmt_general(x: f64) -> String {
    let rounded: f64 = format!("{x:.5e}").parse().unwrap_or(x);
    if rounded == 0.0 {
        "0".to_string()
    } else {
        rounded.to_string()
    }
}

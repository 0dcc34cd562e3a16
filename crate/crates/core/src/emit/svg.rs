use std::fmt::Write as _;
use std::path::Path;

use super::{EmitConfig, EmitError};
use crate::moebius::PlanePoint;
use crate::scenarios::{Curve, CurveSegment};

/// Grey intensity in `[0.1, 0.9]` for a colour grade in `[0, 1.2]`; the
/// arrow-grid grade 0.6 lands on mid-grey 0.5.
pub fn grey_level(color_grade: f64) -> f64 {
    0.1 + 0.8 * (color_grade / 1.2).clamp(0.0, 1.0)
}

fn rgb(color_grade: f64) -> String {
    let g = (grey_level(color_grade) * 255.0).round() as u8;
    format!("rgb({g},{g},{g})")
}

fn visible(seg: &CurveSegment, (ulim, vlim): (f64, f64)) -> bool {
    let (mut umin, mut umax, mut vmin, mut vmax) = (
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
    );
    for p in &seg.points {
        umin = umin.min(p.u);
        umax = umax.max(p.u);
        vmin = vmin.min(p.v);
        vmax = vmax.max(p.v);
    }
    umax >= -ulim && umin <= ulim && vmax >= -vlim && vmin <= vlim
}

/// Renders one `<polyline>` per drawable segment, mathematical orientation
/// (v grows upwards), clipped to the viewport.
pub fn render_svg(curves: &[Curve], cfg: &EmitConfig) -> String {
    let (ulim, vlim) = cfg.viewport;
    let scale = cfg.svg_scale;
    let width = 2.0 * ulim * scale;
    let height = 2.0 * vlim * scale;
    let to_px = |p: &PlanePoint| ((p.u + ulim) * scale, (vlim - p.v) * scale);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#
    );
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, "<defs>");
    let _ = writeln!(
        out,
        r#"<clipPath id="viewport"><rect x="0" y="0" width="{width}" height="{height}"/></clipPath>"#
    );
    if curves.iter().any(|c| c.arrow) {
        let _ = writeln!(
            out,
            r#"<marker id="head" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="5" markerHeight="5" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="{}"/></marker>"#,
            rgb(0.6)
        );
    }
    let _ = writeln!(out, "</defs>");
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#
    );
    let _ = writeln!(
        out,
        r#"<g clip-path="url(#viewport)" fill="none" stroke-width="1">"#
    );
    for curve in curves {
        let stroke = rgb(curve.color_grade);
        let head = if curve.arrow {
            r#" marker-end="url(#head)""#
        } else {
            ""
        };
        for seg in curve.segments.iter().filter(|s| s.points.len() >= 2) {
            if !visible(seg, cfg.viewport) {
                continue;
            }
            let mut pts = String::new();
            for (i, p) in seg.points.iter().enumerate() {
                let (x, y) = to_px(p);
                if i > 0 {
                    pts.push(' ');
                }
                let _ = write!(pts, "{x:.3},{y:.3}");
            }
            let _ = writeln!(out, r#"<polyline points="{pts}" stroke="{stroke}"{head}/>"#);
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}

pub fn write_svg(curves: &[Curve], path: &Path, cfg: &EmitConfig) -> Result<(), EmitError> {
    std::fs::write(path, render_svg(curves, cfg)).map_err(|source| EmitError::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moebius::{MetricKind, MoebiusVariant, Subgroup};
    use crate::scenarios::TuningTables;

    fn curve(points: &[(f64, f64)], grade: f64) -> Curve {
        let mut c = Curve::new(
            0,
            Subgroup::K,
            MetricKind::Elliptic,
            MoebiusVariant::Direct,
            grade,
        );
        c.segments.push(CurveSegment {
            points: points.iter().map(|&(u, v)| PlanePoint::new(u, v)).collect(),
        });
        c
    }

    fn cfg() -> EmitConfig {
        EmitConfig::new(".", &TuningTables::default())
    }

    #[test]
    fn grey_scale() {
        assert_eq!(grey_level(0.0), 0.1);
        assert_eq!(grey_level(0.6), 0.5);
        assert!((grey_level(1.2) - 0.9).abs() < 1e-15);
        assert_eq!(rgb(0.6), "rgb(128,128,128)");
    }

    #[test]
    fn y_axis_points_up() {
        let svg = render_svg(&[curve(&[(0.0, 0.0), (1.0, 1.0)], 0.0)], &cfg());
        // 8.5 * 40 = 340 is the centre; v = 1 sits 40 px above it.
        assert!(
            svg.contains(r#"points="340.000,340.000 380.000,300.000""#),
            "{svg}"
        );
        assert!(svg.contains(r#"width="680""#));
    }

    #[test]
    fn outside_segments_are_not_drawn() {
        let svg = render_svg(&[curve(&[(20.0, 20.0), (30.0, 25.0)], 0.0)], &cfg());
        assert!(!svg.contains("<polyline"));
    }

    #[test]
    fn arrows_get_heads() {
        let mut c = curve(&[(0.0, 0.0), (1.0, 0.0)], 0.6);
        c.arrow = true;
        let svg = render_svg(&[c], &cfg());
        assert!(svg.contains(r#"marker-end="url(#head)""#));
        assert!(svg.contains(r#"stroke="rgb(128,128,128)""#));
        assert!(svg.contains(r#"<marker id="head""#));
    }
}

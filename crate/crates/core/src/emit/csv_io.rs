use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::{EmitConfig, EmitError};
use crate::moebius::{MetricKind, MoebiusVariant, PlanePoint, Subgroup};
use crate::scenarios::{Curve, CurveSegment};

pub const CSV_HEADER: [&str; 8] = [
    "curve_id",
    "segment_id",
    "u",
    "v",
    "color_grade",
    "subgroup",
    "metric",
    "variant",
];

const ARROW_VARIANT: &str = "arrow";

fn csv_err(path: &Path) -> impl Fn(csv::Error) -> EmitError + '_ {
    move |source| EmitError::Csv {
        path: path.to_path_buf(),
        source,
    }
}

/// One row per point, in generation order. Segments shorter than two
/// points are not written; the remaining segments of a curve are numbered
/// from zero.
pub fn write_csv(curves: &[Curve], path: &Path, cfg: &EmitConfig) -> Result<(), EmitError> {
    let file = File::create(path).map_err(|source| EmitError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(BufWriter::new(file));
    let err = csv_err(path);
    w.write_record(CSV_HEADER).map_err(&err)?;
    let prec = cfg.precision;
    for curve in curves {
        let curve = curve.normalized();
        let id = curve.id.to_string();
        let grade = format!("{:.prec$}", curve.color_grade);
        let subgroup = curve.subgroup.letter().to_string();
        let metric = curve.kind.letter().to_string();
        let variant = if curve.arrow {
            ARROW_VARIANT
        } else {
            curve.variant.name()
        };
        for (seg_id, seg) in curve.segments.iter().enumerate() {
            let seg_id = seg_id.to_string();
            for p in &seg.points {
                w.write_record([
                    id.as_str(),
                    seg_id.as_str(),
                    &format!("{:.prec$}", p.u),
                    &format!("{:.prec$}", p.v),
                    &grade,
                    &subgroup,
                    &metric,
                    variant,
                ])
                .map_err(&err)?;
            }
        }
    }
    let mut inner = w.into_inner().map_err(|e| EmitError::Io {
        path: path.to_path_buf(),
        source: e.into_error(),
    })?;
    inner.flush().map_err(|source| EmitError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Inverse of [`write_csv`].
pub fn read_csv(path: &Path) -> Result<Vec<Curve>, EmitError> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_path(path)
        .map_err(csv_err(path))?;
    let header = r.headers().map_err(csv_err(path))?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(EmitError::Parse {
            path: path.to_path_buf(),
            line: 1,
            message: format!("unexpected header {header:?}"),
        });
    }

    let mut curves: Vec<Curve> = Vec::new();
    let mut current_segment: Option<(usize, usize)> = None;
    for record in r.records() {
        let record = record.map_err(csv_err(path))?;
        let line = record.position().map_or(0, |p| p.line());
        let bad = |message: String| EmitError::Parse {
            path: path.to_path_buf(),
            line,
            message,
        };
        let num = |i: usize| -> Result<f64, EmitError> {
            record[i]
                .parse()
                .map_err(|e| bad(format!("column {}: {e}", CSV_HEADER[i])))
        };
        let id: usize = record[0]
            .parse()
            .map_err(|e| bad(format!("curve_id: {e}")))?;
        let seg: usize = record[1]
            .parse()
            .map_err(|e| bad(format!("segment_id: {e}")))?;
        let point = PlanePoint::new(num(2)?, num(3)?);

        let same_curve = curves.last().is_some_and(|c| c.id == id);
        if !same_curve {
            let subgroup: Subgroup = record[5].parse().map_err(bad)?;
            let kind: MetricKind = record[6].parse().map_err(bad)?;
            let (variant, arrow) = match &record[7] {
                ARROW_VARIANT => (MoebiusVariant::Direct, true),
                name => (name.parse().map_err(bad)?, false),
            };
            let mut curve = Curve::new(id, subgroup, kind, variant, num(4)?);
            curve.arrow = arrow;
            curves.push(curve);
            current_segment = None;
        }
        let curve = curves.last_mut().expect("pushed above");
        if current_segment != Some((id, seg)) {
            curve.segments.push(CurveSegment::default());
            current_segment = Some((id, seg));
        }
        curve.segments.last_mut().unwrap().points.push(point);
    }
    Ok(curves)
}

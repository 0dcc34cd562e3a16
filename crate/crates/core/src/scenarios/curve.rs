use crate::moebius::{MetricKind, MoebiusVariant, PlanePoint, Subgroup};

/// Unbroken run of points.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CurveSegment {
    pub points: Vec<PlanePoint>,
}

/// A polyline split into segments wherever a node was singular or left the
/// plot area.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub id: usize,
    pub subgroup: Subgroup,
    pub kind: MetricKind,
    pub variant: MoebiusVariant,
    /// Arrow of a vector-field grid rather than an orbit-like curve.
    pub arrow: bool,
    pub color_grade: f64,
    pub segments: Vec<CurveSegment>,
}

impl Curve {
    pub fn new(
        id: usize,
        subgroup: Subgroup,
        kind: MetricKind,
        variant: MoebiusVariant,
        color_grade: f64,
    ) -> Self {
        Curve {
            id,
            subgroup,
            kind,
            variant,
            arrow: false,
            color_grade,
            segments: Vec::new(),
        }
    }

    pub fn points(&self) -> impl Iterator<Item = &PlanePoint> {
        self.segments.iter().flat_map(|s| s.points.iter())
    }

    /// Drops segments that cannot be drawn (fewer than two points).
    pub fn normalized(&self) -> Curve {
        Curve {
            segments: self
                .segments
                .iter()
                .filter(|s| s.points.len() >= 2)
                .cloned()
                .collect(),
            ..self.clone()
        }
    }
}

/// Accumulates points into a [`Curve`], opening a new segment after each
/// break.
#[derive(Debug)]
pub struct CurveBuilder {
    curve: Curve,
    current: Vec<PlanePoint>,
    breaks: usize,
}

impl CurveBuilder {
    pub fn new(curve: Curve) -> Self {
        CurveBuilder {
            curve,
            current: Vec::new(),
            breaks: 0,
        }
    }

    pub fn push(&mut self, p: PlanePoint) {
        self.current.push(p);
    }

    /// Ends the current segment. Consecutive breaks collapse into one.
    pub fn break_segment(&mut self) {
        if !self.current.is_empty() {
            self.curve.segments.push(CurveSegment {
                points: std::mem::take(&mut self.current),
            });
            self.breaks += 1;
        }
    }

    pub fn breaks(&self) -> usize {
        self.breaks
    }

    pub fn finish(mut self) -> Curve {
        if !self.current.is_empty() {
            self.curve.segments.push(CurveSegment {
                points: self.current,
            });
        }
        self.curve
    }
}

//! 2×2 Clifford matrices acting on the plane by linear-fractional maps
//! `v ↦ (a v + b)(c v + d)⁻¹`, the metric-dependent Cayley matrices, and the
//! one-parameter subgroups `A`, `N`, `K` of SL(2,R).
//!
//! The plane is the span of `e0, e1` with `e0² = -1` and `e1² = σ`, where
//! `σ ∈ {-1, 0, 1}` selects elliptic, parabolic or hyperbolic geometry.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{AlgebraError, Metric, Multivector};
use crate::scalar::{Dual, Scalar};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MoebiusError {
    /// `c v + d` has no inverse at this point.
    #[error("singular denominator")]
    SingularDenominator,
    #[error("map result is not a vector (residual {0:e})")]
    ResultNotVector(f64),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub type Result<T, E = MoebiusError> = std::result::Result<T, E>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetricKind {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl MetricKind {
    pub const ALL: [MetricKind; 3] = [
        MetricKind::Elliptic,
        MetricKind::Parabolic,
        MetricKind::Hyperbolic,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// `σ = e1²`.
    pub fn signum(self) -> f64 {
        self.index() as f64 - 1.0
    }

    /// Plane metric `diag(-1, σ)`.
    pub fn metric(self) -> Metric {
        Metric::new(&[-1.0, self.signum()]).expect("plane metric is valid")
    }

    pub fn letter(self) -> char {
        ['e', 'p', 'h'][self.index()]
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MetricKind::Elliptic => "elliptic",
            MetricKind::Parabolic => "parabolic",
            MetricKind::Hyperbolic => "hyperbolic",
        })
    }
}

impl FromStr for MetricKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "e" | "elliptic" => Ok(MetricKind::Elliptic),
            "p" | "parabolic" => Ok(MetricKind::Parabolic),
            "h" | "hyperbolic" => Ok(MetricKind::Hyperbolic),
            _ => Err(format!("unknown metric kind `{s}`")),
        }
    }
}

/// Iwasawa subgroups of SL(2,R).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subgroup {
    A,
    N,
    K,
}

impl Subgroup {
    pub const ALL: [Subgroup; 3] = [Subgroup::A, Subgroup::N, Subgroup::K];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        ['A', 'N', 'K'][self.index()]
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Subgroup {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "A" | "a" => Ok(Subgroup::A),
            "N" | "n" => Ok(Subgroup::N),
            "K" | "k" => Ok(Subgroup::K),
            _ => Err(format!("unknown subgroup `{s}`")),
        }
    }
}

/// Which matrix a family evaluation uses: the subgroup element itself, its
/// conjugate by a Cayley matrix (operator images), or its product with a
/// Cayley matrix (point images).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoebiusVariant {
    Direct,
    CayleyOp,
    Cayley1Op,
    CayleyPoint,
    Cayley1Point,
}

impl MoebiusVariant {
    pub const ALL: [MoebiusVariant; 5] = [
        MoebiusVariant::Direct,
        MoebiusVariant::CayleyOp,
        MoebiusVariant::Cayley1Op,
        MoebiusVariant::CayleyPoint,
        MoebiusVariant::Cayley1Point,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            MoebiusVariant::Direct => "direct",
            MoebiusVariant::CayleyOp => "cayley_op",
            MoebiusVariant::Cayley1Op => "cayley1_op",
            MoebiusVariant::CayleyPoint => "cayley_point",
            MoebiusVariant::Cayley1Point => "cayley1_point",
        }
    }
}

impl fmt::Display for MoebiusVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MoebiusVariant {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        MoebiusVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown Moebius variant `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PlanePoint {
    pub u: f64,
    pub v: f64,
}

impl PlanePoint {
    pub const fn new(u: f64, v: f64) -> Self {
        PlanePoint { u, v }
    }
}

/// `[[a, b], [c, d]]` with multivector entries over one metric.
#[derive(Debug, Clone, PartialEq)]
pub struct CliffordMatrix2<S: Scalar = f64> {
    pub a: Multivector<S>,
    pub b: Multivector<S>,
    pub c: Multivector<S>,
    pub d: Multivector<S>,
}

impl<S: Scalar> CliffordMatrix2<S> {
    pub fn new(
        a: Multivector<S>,
        b: Multivector<S>,
        c: Multivector<S>,
        d: Multivector<S>,
    ) -> Result<Self> {
        let m = a.metric();
        if b.metric() != m || c.metric() != m || d.metric() != m {
            return Err(AlgebraError::MetricMismatch.into());
        }
        Ok(CliffordMatrix2 { a, b, c, d })
    }

    pub fn identity(metric: Metric) -> Self {
        let one = Multivector::scalar(metric, S::one());
        let zero = Multivector::zero(metric);
        CliffordMatrix2 {
            a: one.clone(),
            b: zero.clone(),
            c: zero,
            d: one,
        }
    }

    pub fn metric(&self) -> &Metric {
        self.a.metric()
    }

    /// Matrix product; entry products keep their order.
    pub fn mat_mul(&self, rhs: &Self) -> Result<Self> {
        let entry = |x: &Multivector<S>,
                     y: &Multivector<S>,
                     z: &Multivector<S>,
                     w: &Multivector<S>| { x.gp(y)?.add(&z.gp(w)?) };
        Ok(CliffordMatrix2 {
            a: entry(&self.a, &rhs.a, &self.b, &rhs.c)?,
            b: entry(&self.a, &rhs.b, &self.b, &rhs.d)?,
            c: entry(&self.c, &rhs.a, &self.d, &rhs.c)?,
            d: entry(&self.c, &rhs.b, &self.d, &rhs.d)?,
        })
    }

    pub fn scale(&self, s: S) -> Self {
        CliffordMatrix2 {
            a: self.a.scale(s),
            b: self.b.scale(s),
            c: self.c.scale(s),
            d: self.d.scale(s),
        }
    }

    /// Apply the linear-fractional map to the point `u e0 + v e1`.
    pub fn apply(&self, u: S, v: S) -> Result<(S, S)> {
        let point = Multivector::embed_vector(*self.metric(), &[u, v])?;
        let num = self.a.gp(&point)?.add(&self.b)?;
        let den = self.c.gp(&point)?.add(&self.d)?;
        let den_inv = den.inverse().map_err(|err| match err {
            AlgebraError::ZeroNorm | AlgebraError::NotInvertible(_) => {
                MoebiusError::SingularDenominator
            }
            other => other.into(),
        })?;
        let image = num.gp(&den_inv)?;
        let coords = image.extract_vector().map_err(|err| match err {
            AlgebraError::NotAVector(r) => MoebiusError::ResultNotVector(r),
            other => other.into(),
        })?;
        let (u, v) = (coords[0], coords[1]);
        if !(u.magnitude().is_finite() && v.magnitude().is_finite()) {
            return Err(MoebiusError::SingularDenominator);
        }
        Ok((u, v))
    }
}

/// `v ↦ (a v + b)(c v + d)⁻¹` on a plane point.
pub fn moebius_map(m: &CliffordMatrix2, p: PlanePoint) -> Result<PlanePoint> {
    let (u, v) = m.apply(p.u, p.v)?;
    Ok(PlanePoint { u, v })
}

fn scalar_entry<S: Scalar>(metric: Metric, s: f64) -> Multivector<S> {
    Multivector::scalar(metric, S::from_f64(s))
}

fn unit_entry<S: Scalar>(metric: Metric, k: usize, s: f64) -> Multivector<S> {
    Multivector::unit(metric, k)
        .expect("plane metric has two generators")
        .scale(S::from_f64(s))
}

fn plane_matrix<S: Scalar>(
    metric: Metric,
    entries: [(Option<usize>, f64); 4],
) -> CliffordMatrix2<S> {
    let build = |(unit, s): (Option<usize>, f64)| match unit {
        Some(k) => unit_entry(metric, k, s),
        None => scalar_entry(metric, s),
    };
    CliffordMatrix2 {
        a: build(entries[0]),
        b: build(entries[1]),
        c: build(entries[2]),
        d: build(entries[3]),
    }
}

/// The two Cayley matrices of a geometry and their inverses (up to a
/// scalar factor).
#[derive(Debug, Clone, PartialEq)]
pub struct CayleyMatrices<S: Scalar = f64> {
    pub c: CliffordMatrix2<S>,
    pub ci: CliffordMatrix2<S>,
    pub c1: CliffordMatrix2<S>,
    pub c1i: CliffordMatrix2<S>,
}

/// `T = [[1, e0], [e0, 1]]` relating the two Cayley transforms, and its
/// inverse `TI = [[1, -e0], [-e0, 1]]` (up to the factor `1 - e0² = 2`).
pub fn transfer_matrices<S: Scalar>(kind: MetricKind) -> (CliffordMatrix2<S>, CliffordMatrix2<S>) {
    let m = kind.metric();
    let t = plane_matrix(
        m,
        [(None, 1.0), (Some(0), 1.0), (Some(0), 1.0), (None, 1.0)],
    );
    let ti = plane_matrix(
        m,
        [(None, 1.0), (Some(0), -1.0), (Some(0), -1.0), (None, 1.0)],
    );
    (t, ti)
}

pub fn cayley_matrices<S: Scalar>(kind: MetricKind) -> CayleyMatrices<S> {
    let m = kind.metric();
    let sigma = kind.signum();
    match kind {
        MetricKind::Elliptic | MetricKind::Hyperbolic => {
            let c = plane_matrix(
                m,
                [(None, 1.0), (Some(1), -1.0), (Some(1), sigma), (None, 1.0)],
            );
            let ci = plane_matrix(
                m,
                [(None, 1.0), (Some(1), 1.0), (Some(1), -sigma), (None, 1.0)],
            );
            let (t, ti) = transfer_matrices(kind);
            let c1 = c.mat_mul(&t).expect("shared metric");
            let c1i = ti.mat_mul(&ci).expect("shared metric");
            CayleyMatrices { c, ci, c1, c1i }
        }
        MetricKind::Parabolic => CayleyMatrices {
            c: plane_matrix(
                m,
                [(None, 1.0), (Some(1), -1.0), (Some(1), -1.0), (None, 1.0)],
            ),
            ci: plane_matrix(
                m,
                [(None, 1.0), (Some(1), 1.0), (Some(1), 1.0), (None, 1.0)],
            ),
            c1: plane_matrix(
                m,
                [(None, 1.0), (Some(1), -1.0), (Some(1), 1.0), (None, 1.0)],
            ),
            c1i: plane_matrix(
                m,
                [(None, 1.0), (Some(1), 1.0), (Some(1), -1.0), (None, 1.0)],
            ),
        },
    }
}

/// `exp(t X)` for the generator `X` of the subgroup, written with Clifford
/// entries: `A = diag(eᵗ, e⁻ᵗ)`, `N = [[1, t e0], [0, 1]]`,
/// `K = [[cos t, sin t e0], [sin t e0, cos t]]`.
pub fn subgroup_exp<S: Scalar>(s: Subgroup, t: S, metric: Metric) -> CliffordMatrix2<S> {
    let scalar = |x: S| Multivector::scalar(metric, x);
    let e0 = |x: S| unit_entry::<S>(metric, 0, 1.0).scale(x);
    match s {
        Subgroup::A => CliffordMatrix2 {
            a: scalar(t.exp()),
            b: Multivector::zero(metric),
            c: Multivector::zero(metric),
            d: scalar((-t).exp()),
        },
        Subgroup::N => CliffordMatrix2 {
            a: scalar(S::one()),
            b: e0(t),
            c: Multivector::zero(metric),
            d: scalar(S::one()),
        },
        Subgroup::K => CliffordMatrix2 {
            a: scalar(t.cos()),
            b: e0(t.sin()),
            c: e0(t.sin()),
            d: scalar(t.cos()),
        },
    }
}

/// Matrix used by [`moebius_family`] for one (subgroup, geometry, variant).
pub fn family_matrix<S: Scalar>(
    s: Subgroup,
    kind: MetricKind,
    variant: MoebiusVariant,
    t: S,
) -> Result<CliffordMatrix2<S>> {
    let exp = subgroup_exp(s, t, kind.metric());
    if variant == MoebiusVariant::Direct {
        return Ok(exp);
    }
    let cay = cayley_matrices::<S>(kind);
    Ok(match variant {
        MoebiusVariant::Direct => unreachable!(),
        MoebiusVariant::CayleyOp => cay.c.mat_mul(&exp)?.mat_mul(&cay.ci)?,
        MoebiusVariant::Cayley1Op => cay.c1.mat_mul(&exp)?.mat_mul(&cay.c1i)?,
        MoebiusVariant::CayleyPoint => cay.c.mat_mul(&exp)?,
        MoebiusVariant::Cayley1Point => cay.c1.mat_mul(&exp)?,
    })
}

/// Image of `p` under the subgroup element at parameter `t`, in the chosen
/// variant.
pub fn moebius_family(
    s: Subgroup,
    kind: MetricKind,
    variant: MoebiusVariant,
    t: f64,
    p: PlanePoint,
) -> Result<PlanePoint> {
    moebius_map(&family_matrix(s, kind, variant, t)?, p)
}

/// Derived action `d/dt ρ(e^{tX}) p |_{t=0}`, computed by evaluating the
/// family at the dual parameter `t = ε`.
pub fn vector_field(
    s: Subgroup,
    kind: MetricKind,
    variant: MoebiusVariant,
    p: PlanePoint,
) -> Result<(f64, f64)> {
    let m = family_matrix(s, kind, variant, Dual::variable(0.0))?;
    let (u, v) = m.apply(Dual::constant(p.u), Dual::constant(p.v))?;
    Ok((u.de, v.de))
}

//! Dense multivectors over a Clifford algebra with a diagonal metric.
//!
//! Blades are indexed by bitmask: bit `k` of the index is set when generator
//! `e_k` is a factor, generators always taken in ascending order. Index 0 is
//! the scalar (identity) blade. The generators satisfy
//! `e_i e_j + e_j e_i = 2 B(i,j)`, so `e_k² = diag[k]`.

use std::fmt;

use thiserror::Error;

use crate::scalar::Scalar;

/// Largest supported number of generators.
pub const MAX_DIM: usize = 8;

/// Grade-purity tolerance (relative to the largest coefficient, floored at 1).
pub const EPS_GRADE: f64 = 1e-9;
/// Zero-norm tolerance (relative to the squared largest coefficient).
pub const EPS_ZERO: f64 = 1e-12;
/// Residual allowed in `a · a⁻¹ = 1` before an inverse is rejected.
pub const EPS_INV: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("metric dimension {0} outside 1..={MAX_DIM}")]
    DimensionOutOfRange(usize),
    #[error("metric entry {index} is not finite ({value})")]
    NonFiniteEntry { index: usize, value: f64 },
    #[error("generator index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("operands carry different metrics")]
    MetricMismatch,
    #[error("expected {expected} components, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("multivector is not a vector (non-grade-1 residual {0:e})")]
    NotAVector(f64),
    #[error("a·bar(a) is not scalar (residual {0:e})")]
    NormNotScalar(f64),
    #[error("zero norm, no inverse")]
    ZeroNorm,
    #[error("conjugate-based inverse failed validation (residual {0:e})")]
    NotInvertible(f64),
    #[error("multivector is not scalar (residual {0:e})")]
    NotScalar(f64),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

/// Diagonal metric: `diag[k] = B(k,k) = e_k²`.
#[derive(Clone, Copy)]
pub struct Metric {
    dim: usize,
    diag: [f64; MAX_DIM],
}

impl Metric {
    pub fn new(diag: &[f64]) -> Result<Self> {
        if diag.is_empty() || diag.len() > MAX_DIM {
            return Err(AlgebraError::DimensionOutOfRange(diag.len()));
        }
        let mut stored = [0.0; MAX_DIM];
        for (index, &value) in diag.iter().enumerate() {
            if !value.is_finite() {
                return Err(AlgebraError::NonFiniteEntry { index, value });
            }
            stored[index] = value;
        }
        Ok(Metric {
            dim: diag.len(),
            diag: stored,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag[..self.dim]
    }

    /// Square of generator `k`.
    pub fn square(&self, k: usize) -> f64 {
        self.diag[k]
    }

    /// Number of blades, `2^dim`.
    pub fn blade_count(&self) -> usize {
        1 << self.dim
    }
}

impl PartialEq for Metric {
    fn eq(&self, other: &Self) -> bool {
        self.diag() == other.diag()
    }
}

impl fmt::Debug for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Metric").field(&self.diag()).finish()
    }
}

/// Sign picked up when reordering the generator string `a·b` into ascending
/// order. Every generator of `b` has to move past the generators of `a`
/// with a larger index.
#[inline]
fn reorder_sign(a: usize, b: usize) -> f64 {
    let mut swaps = 0;
    let mut rest = a >> 1;
    while rest != 0 {
        swaps += (rest & b).count_ones();
        rest >>= 1;
    }
    if swaps % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Product of two basis blades: `(result blade, real factor)`.
#[inline]
fn blade_product(metric: &Metric, a: usize, b: usize) -> (usize, f64) {
    let mut factor = reorder_sign(a, b);
    let mut common = a & b;
    while common != 0 {
        let k = common.trailing_zeros() as usize;
        factor *= metric.diag[k];
        common &= common - 1;
    }
    (a ^ b, factor)
}

#[inline]
fn grade(blade: usize) -> u32 {
    blade.count_ones()
}

/// Element of the Clifford algebra stored as `2^n` blade coefficients.
#[derive(Clone, PartialEq)]
pub struct Multivector<S: Scalar = f64> {
    metric: Metric,
    coeff: Vec<S>,
}

impl<S: Scalar> fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = f.debug_map();
        for (blade, c) in self.coeff.iter().enumerate() {
            if c.magnitude() != 0.0 {
                terms.entry(&BladeName(blade), c);
            }
        }
        terms.finish()
    }
}

struct BladeName(usize);

impl fmt::Debug for BladeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        f.write_str("e")?;
        for k in 0..usize::BITS as usize {
            if self.0 & (1 << k) != 0 {
                write!(f, "{k}")?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(metric: Metric) -> Self {
        Multivector {
            metric,
            coeff: vec![S::zero(); metric.blade_count()],
        }
    }

    /// `s` times the identity.
    pub fn scalar(metric: Metric, s: S) -> Self {
        let mut mv = Self::zero(metric);
        mv.coeff[0] = s;
        mv
    }

    /// Generator `e_k`.
    pub fn unit(metric: Metric, k: usize) -> Result<Self> {
        if k >= metric.dim() {
            return Err(AlgebraError::IndexOutOfRange {
                index: k,
                dim: metric.dim(),
            });
        }
        let mut mv = Self::zero(metric);
        mv.coeff[1 << k] = S::one();
        Ok(mv)
    }

    pub fn from_coeffs(metric: Metric, coeff: Vec<S>) -> Result<Self> {
        if coeff.len() != metric.blade_count() {
            return Err(AlgebraError::LengthMismatch {
                expected: metric.blade_count(),
                got: coeff.len(),
            });
        }
        Ok(Multivector { metric, coeff })
    }

    /// `Σ v_k e_k`.
    pub fn embed_vector(metric: Metric, v: &[S]) -> Result<Self> {
        if v.len() != metric.dim() {
            return Err(AlgebraError::LengthMismatch {
                expected: metric.dim(),
                got: v.len(),
            });
        }
        let mut mv = Self::zero(metric);
        for (k, &x) in v.iter().enumerate() {
            mv.coeff[1 << k] = x;
        }
        Ok(mv)
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeff
    }

    /// Coefficient of the blade with bitmask `blade`.
    pub fn coeff(&self, blade: usize) -> S {
        self.coeff[blade]
    }

    /// Largest coefficient magnitude.
    pub fn max_magnitude(&self) -> f64 {
        self.coeff.iter().fold(0.0_f64, |m, c| m.max(c.magnitude()))
    }

    fn check_metric(&self, other: &Self) -> Result<()> {
        if self.metric == other.metric {
            Ok(())
        } else {
            Err(AlgebraError::MetricMismatch)
        }
    }

    fn map(&self, f: impl Fn(usize, S) -> S) -> Self {
        Multivector {
            metric: self.metric,
            coeff: self
                .coeff
                .iter()
                .enumerate()
                .map(|(blade, &c)| f(blade, c))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_metric(other)?;
        Ok(self.map(|blade, c| c + other.coeff[blade]))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_metric(other)?;
        Ok(self.map(|blade, c| c - other.coeff[blade]))
    }

    pub fn scale(&self, s: S) -> Self {
        self.map(|_, c| c * s)
    }

    pub fn neg(&self) -> Self {
        self.map(|_, c| -c)
    }

    /// Geometric (Clifford) product. The result is always in canonical
    /// ascending-generator blade form.
    pub fn gp(&self, other: &Self) -> Result<Self> {
        self.check_metric(other)?;
        let mut out = vec![S::zero(); self.coeff.len()];
        for (a, &ca) in self.coeff.iter().enumerate() {
            if ca.magnitude() == 0.0 {
                continue;
            }
            for (b, &cb) in other.coeff.iter().enumerate() {
                if cb.magnitude() == 0.0 {
                    continue;
                }
                let (blade, factor) = blade_product(&self.metric, a, b);
                if factor != 0.0 {
                    out[blade] = out[blade] + S::from_f64(factor) * ca * cb;
                }
            }
        }
        Ok(Multivector {
            metric: self.metric,
            coeff: out,
        })
    }

    /// Keep only grade-`g` blades.
    pub fn grade_part(&self, g: u32) -> Self {
        self.map(|blade, c| if grade(blade) == g { c } else { S::zero() })
    }

    /// Grade involution `a'`: flips the sign of every generator.
    pub fn prime(&self) -> Self {
        self.map(|blade, c| if grade(blade) % 2 == 1 { -c } else { c })
    }

    /// Reversion `a*`: reverses the order of generators in every product.
    pub fn star(&self) -> Self {
        self.map(|blade, c| {
            let g = grade(blade);
            if (g * g.saturating_sub(1) / 2) % 2 == 1 {
                -c
            } else {
                c
            }
        })
    }

    /// Clifford conjugation `ā = (a*)'`.
    pub fn bar(&self) -> Self {
        self.map(|blade, c| {
            let g = grade(blade);
            if (g * (g + 1) / 2) % 2 == 1 {
                -c
            } else {
                c
            }
        })
    }

    /// Residual outside grade `g`, as a fraction of `max(1, |a|_max)`.
    fn grade_residual(&self, g: u32) -> f64 {
        let off = self
            .coeff
            .iter()
            .enumerate()
            .filter(|(blade, _)| grade(*blade) != g)
            .fold(0.0_f64, |m, (_, c)| m.max(c.magnitude()));
        off / self.max_magnitude().max(1.0)
    }

    /// Scalar coefficient of a (numerically) scalar multivector.
    pub fn scalar_part(&self) -> Result<S> {
        let residual = self.grade_residual(0);
        if residual > EPS_GRADE {
            return Err(AlgebraError::NotScalar(residual));
        }
        Ok(self.coeff[0])
    }

    /// Recover `v` with `a = Σ v_k e_k`.
    ///
    /// Non-null generators use `v_k = ⟨a e_k + e_k a⟩₀ / (2 e_k²)`; null
    /// generators have no such formula and their blade coefficient is read
    /// directly.
    pub fn extract_vector(&self) -> Result<Vec<S>> {
        let residual = self.grade_residual(1);
        if residual > EPS_GRADE {
            return Err(AlgebraError::NotAVector(residual));
        }
        let mut out = Vec::with_capacity(self.metric.dim());
        for k in 0..self.metric.dim() {
            let sq = self.metric.square(k);
            if sq == 0.0 {
                out.push(self.coeff[1 << k]);
                continue;
            }
            let ek = Self::unit(self.metric, k)?;
            let sym = self.gp(&ek)?.add(&ek.gp(self)?)?;
            // The symmetric product is exactly scalar for a pure vector; any
            // leftover comes from the tolerated off-grade noise.
            out.push(sym.coeff[0] / S::from_f64(2.0 * sq));
        }
        Ok(out)
    }

    /// Signed squared norm `⟨a ā⟩₀`.
    pub fn norm_squared(&self) -> Result<S> {
        let prod = self.gp(&self.bar())?;
        let off = prod.coeff[1..]
            .iter()
            .fold(0.0_f64, |m, c| m.max(c.magnitude()));
        let scale = self.max_magnitude().powi(2).max(1.0);
        if off / scale > EPS_GRADE {
            return Err(AlgebraError::NormNotScalar(off / scale));
        }
        Ok(prod.coeff[0])
    }

    /// `sqrt(|a ā|)`.
    pub fn norm(&self) -> Result<S> {
        Ok(self.norm_squared()?.abs().sqrt())
    }

    /// `a⁻¹ = ā / (a ā)`, validated by `a a⁻¹ = 1`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm_squared()?;
        let scale = self.max_magnitude().powi(2);
        if n.re().abs() <= EPS_ZERO * scale || !n.re().is_finite() {
            return Err(AlgebraError::ZeroNorm);
        }
        let inv = self.bar().map(|_, c| c / n);
        let check = self.gp(&inv)?;
        let residual = check
            .coeff
            .iter()
            .enumerate()
            .fold(0.0_f64, |m, (blade, &c)| {
                let target = if blade == 0 { c - S::one() } else { c };
                m.max(target.magnitude())
            });
        if residual.is_nan() || residual > EPS_INV {
            return Err(AlgebraError::NotInvertible(residual));
        }
        Ok(inv)
    }
}

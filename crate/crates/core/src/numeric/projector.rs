use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::state::{inner, norm, StateVector};
use super::Tolerance;
use crate::error::{Error, Result};

/// Residual norm below which a span vector is treated as dependent.
pub const SPAN_DROP_THRESHOLD: f64 = 1e-9;

/// A self-adjoint idempotent matrix, identified with its range.
#[derive(Debug, Clone, PartialEq)]
pub struct Projector {
    matrix: ComplexMatrix,
    rank: usize,
}

impl Projector {
    /// Validates an arbitrary matrix as an orthogonal projector.
    pub fn new(matrix: ComplexMatrix, tol: &Tolerance) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let herm = matrix.hermiticity_residual();
        if herm > tol.proj {
            return Err(Error::NotProjector(format!(
                "‖P − P†‖_F = {herm:e} exceeds {:e}",
                tol.proj
            )));
        }
        let idem = matrix.matmul_unchecked(&matrix).distance(&matrix)?;
        if idem > tol.proj {
            return Err(Error::NotProjector(format!(
                "‖P² − P‖_F = {idem:e} exceeds {:e}",
                tol.proj
            )));
        }
        // With P idempotent and self-adjoint the eigenvalues sit at 0 or 1, so the
        // count above ½ is the rounded trace.
        let trace = matrix.trace().re;
        let rank = trace.round();
        if (trace - rank).abs() > tol.rank {
            return Err(Error::NotProjector(format!(
                "trace {trace} is not within {:e} of an integer",
                tol.rank
            )));
        }
        Ok(Projector {
            matrix,
            rank: rank as usize,
        })
    }

    pub fn zero(dim: usize) -> Self {
        Projector {
            matrix: ComplexMatrix::zeros(dim, dim),
            rank: 0,
        }
    }

    pub fn identity(dim: usize) -> Self {
        Projector {
            matrix: ComplexMatrix::identity(dim),
            rank: dim,
        }
    }

    /// Coordinate projector onto the given basis indices.
    pub fn coordinate(dim: usize, indices: &[usize]) -> Result<Self> {
        let mut diag = vec![0.0; dim];
        for &i in indices {
            if i >= dim {
                return Err(Error::IndexOutOfRange { index: i, len: dim });
            }
            diag[i] = 1.0;
        }
        let rank = diag.iter().filter(|&&x| x == 1.0).count();
        Ok(Projector {
            matrix: ComplexMatrix::diag_real(&diag),
            rank,
        })
    }

    /// `Σ v v†` for vectors the caller guarantees to be orthonormal.
    pub(crate) fn from_orthonormal<'a>(
        dim: usize,
        vectors: impl IntoIterator<Item = &'a [Complex64]>,
    ) -> Self {
        let vectors: Vec<&[Complex64]> = vectors.into_iter().collect();
        Projector {
            rank: vectors.len(),
            matrix: ComplexMatrix::sum_of_outer_products(dim, vectors),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `I − P`.
    pub fn complement(&self) -> Projector {
        let n = self.dim();
        Projector {
            matrix: ComplexMatrix::identity(n).zip_unchecked(&self.matrix, |a, b| a - b),
            rank: n - self.rank,
        }
    }

    /// `P ⊗ Q`.
    pub fn kron(&self, other: &Projector) -> Projector {
        Projector {
            matrix: self.matrix.kron(&other.matrix),
            rank: self.rank * other.rank,
        }
    }

    pub fn apply(&self, psi: &StateVector) -> Result<Vec<Complex64>> {
        self.matrix.mul_vec(psi.amplitudes())
    }

    /// `‖P² − P‖_F` and `‖P − P†‖_F`.
    pub fn residuals(&self) -> (f64, f64) {
        let idem = self
            .matrix
            .matmul_unchecked(&self.matrix)
            .distance(&self.matrix)
            .unwrap_or(f64::INFINITY);
        (idem, self.matrix.hermiticity_residual())
    }
}

/// Orthogonal projector onto the span of `vectors` in a `dim`-dimensional space.
///
/// Uses modified Gram–Schmidt with column pivoting: the remaining vector with the
/// largest residual is taken next (ties go to the earlier index), each accepted
/// direction is re-orthogonalized once, and the process stops when every residual
/// is below [`SPAN_DROP_THRESHOLD`]. An empty list yields the zero projector.
pub fn projector_from_span(
    dim: usize,
    vectors: &[Vec<Complex64>],
    _tol: &Tolerance,
) -> Result<Projector> {
    if dim == 0 {
        return Err(Error::config("span", "dimension must be positive"));
    }
    for v in vectors {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        super::matrix::check_finite(v, "span vector")?;
    }

    let mut residuals: Vec<Vec<Complex64>> = vectors.to_vec();
    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    while !residuals.is_empty() && basis.len() < dim {
        let (pivot, pivot_norm) = residuals
            .iter()
            .enumerate()
            .map(|(i, r)| (i, norm(r)))
            .fold(
                (0, -1.0),
                |best, cur| if cur.1 > best.1 { cur } else { best },
            );
        if pivot_norm < SPAN_DROP_THRESHOLD {
            break;
        }
        let mut q = residuals.remove(pivot);
        for b in &basis {
            let overlap = inner(b, &q);
            for (qi, bi) in q.iter_mut().zip(b) {
                *qi -= bi * overlap;
            }
        }
        let qn = norm(&q);
        if qn < SPAN_DROP_THRESHOLD {
            continue;
        }
        for qi in q.iter_mut() {
            *qi /= qn;
        }
        for r in residuals.iter_mut() {
            let overlap = inner(&q, r);
            for (ri, qi) in r.iter_mut().zip(&q) {
                *ri -= qi * overlap;
            }
        }
        basis.push(q);
    }
    Ok(Projector::from_orthonormal(
        dim,
        basis.iter().map(|v| v.as_slice()),
    ))
}

/// `⟨Ψ|P|Ψ⟩`, snapped to 0 or 1 when within `tol.eq` of either end.
pub fn expectation(p: &Projector, psi: &StateVector, tol: &Tolerance) -> Result<f64> {
    let raw = raw_expectation(p, psi)?;
    Ok(snap_unit(raw, tol.eq))
}

pub(crate) fn raw_expectation(p: &Projector, psi: &StateVector) -> Result<f64> {
    if p.dim() != psi.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: psi.dim(),
        });
    }
    let pv = p.apply(psi)?;
    Ok(inner(psi.amplitudes(), &pv).re)
}

pub(crate) fn snap_unit(x: f64, eps: f64) -> f64 {
    if x <= eps {
        0.0
    } else if x >= 1.0 - eps {
        1.0
    } else {
        x
    }
}

/// Projective collapse `P|Ψ⟩ / ‖P|Ψ⟩‖`.
pub fn measure_update(p: &Projector, psi: &StateVector, tol: &Tolerance) -> Result<StateVector> {
    let prob = raw_expectation(p, psi)?;
    if prob <= tol.eq {
        return Err(Error::ZeroProbabilityBranch(prob));
    }
    let pv = p.apply(psi)?;
    StateVector::normalized(pv)
}

//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.
//!
//! Each rotation zeroes one off-diagonal pair `(p, q)` with a 2×2 unitary
//! `[[c, −s·e^{iφ}], [s·e^{−iφ}, c]]`, where `φ = arg a_pq` and `θ` solves the
//! real 2×2 problem `[[a_pp, |a_pq|], [|a_pq|, a_qq]]`. Sweeps run in a fixed
//! order, so the result is bit-reproducible for a given input.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::projector::Projector;
use super::Tolerance;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Relative gap below which neighbouring eigenvalues share one eigenspace.
pub const EIGENVALUE_MERGE_GAP: f64 = 1e-8;

/// A square matrix with `‖A − A†‖_F ≤ tol.herm`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    matrix: ComplexMatrix,
}

impl HermitianOperator {
    pub fn new(matrix: ComplexMatrix, tol: &Tolerance) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let residual = matrix.hermiticity_residual();
        if residual > tol.herm {
            return Err(Error::NotHermitian(residual));
        }
        Ok(HermitianOperator { matrix })
    }

    pub fn diagonal(values: &[f64]) -> Self {
        HermitianOperator {
            matrix: ComplexMatrix::diag_real(values),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// Eigenvalues in ascending order with matching orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub(crate) struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<Complex64>>,
}

/// Diagonalizes the Hermitian part `(A + A†)/2` of a square matrix.
pub(crate) fn eigh(matrix: &ComplexMatrix) -> Eigen {
    let n = matrix.rows();
    let mut a = matrix.zip_unchecked(&matrix.adjoint(), |x, y| (x + y) * 0.5);
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re).then(i.cmp(&j)));
    Eigen {
        values: order.iter().map(|&i| a[(i, i)].re).collect(),
        vectors: order.iter().map(|&i| v.column(i)).collect(),
    }
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let n = a.rows();
    let b = a[(p, q)];
    let r = b.norm();
    if r == 0.0 {
        return;
    }
    let phase = b / r;
    let theta = 0.5 * (2.0 * r).atan2(a[(p, p)].re - a[(q, q)].re);
    let (s, c) = theta.sin_cos();
    let g_qp = phase.conj() * s; // s·e^{−iφ}
    let g_pq = -phase * s; // −s·e^{iφ}

    let data = a.entries_mut();
    // A ← A G
    for k in 0..n {
        let x = data[k * n + p];
        let y = data[k * n + q];
        data[k * n + p] = x * c + y * g_qp;
        data[k * n + q] = x * g_pq + y * c;
    }
    // A ← G† A
    for k in 0..n {
        let x = data[p * n + k];
        let y = data[q * n + k];
        data[p * n + k] = x * c + y * g_qp.conj();
        data[q * n + k] = x * g_pq.conj() + y * c;
    }
    data[p * n + q] = Complex64::new(0.0, 0.0);
    data[q * n + p] = Complex64::new(0.0, 0.0);
    data[p * n + p].im = 0.0;
    data[q * n + q].im = 0.0;

    let vd = v.entries_mut();
    for k in 0..n {
        let x = vd[k * n + p];
        let y = vd[k * n + q];
        vd[k * n + p] = x * c + y * g_qp;
        vd[k * n + q] = x * g_pq + y * c;
    }
}

/// One eigenvalue together with the projector onto its eigenspace.
#[derive(Debug, Clone)]
pub struct SpectralComponent {
    pub eigenvalue: f64,
    pub projector: Projector,
}

/// Decomposes `A = Σ λ P_λ` with eigenvalues ascending.
///
/// Eigenvalues whose gap is below `1e-8·(1 + ‖A‖_F)` are merged into one
/// eigenspace, whose reported eigenvalue is the cluster mean.
pub fn spectral_decompose(
    op: &HermitianOperator,
    tol: &Tolerance,
) -> Result<Vec<SpectralComponent>> {
    // Re-check so callers cannot smuggle in an operator built under a looser policy.
    let residual = op.matrix.hermiticity_residual();
    if residual > tol.herm {
        return Err(Error::NotHermitian(residual));
    }
    let n = op.dim();
    let eig = eigh(&op.matrix);
    let gap = EIGENVALUE_MERGE_GAP * (1.0 + op.matrix.frobenius_norm());

    let mut clusters: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for k in 1..=n {
        if k == n || eig.values[k] - eig.values[k - 1] >= gap {
            clusters.push((start, k));
            start = k;
        }
    }

    Ok(clusters
        .into_iter()
        .map(|(lo, hi)| {
            let eigenvalue = eig.values[lo..hi].iter().sum::<f64>() / (hi - lo) as f64;
            let projector =
                Projector::from_orthonormal(n, eig.vectors[lo..hi].iter().map(|v| v.as_slice()));
            SpectralComponent {
                eigenvalue,
                projector,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn diagonal_with_degeneracy() {
        let op = HermitianOperator::diagonal(&[1.0, 1.0, 2.0]);
        let parts = spectral_decompose(&op, &tol()).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].eigenvalue, 1.0);
        assert_eq!(parts[0].projector.rank(), 2);
        assert_eq!(parts[1].eigenvalue, 2.0);
        assert_eq!(parts[1].projector.rank(), 1);
    }

    #[test]
    fn zero_matrix_is_one_eigenspace() {
        let op = HermitianOperator::diagonal(&[0.0, 0.0, 0.0]);
        let parts = spectral_decompose(&op, &tol()).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].eigenvalue, 0.0);
        assert_eq!(parts[0].projector.matrix(), &ComplexMatrix::identity(3));
    }

    #[test]
    fn pauli_x() {
        let x = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let op = HermitianOperator::new(x, &tol()).unwrap();
        let parts = spectral_decompose(&op, &tol()).unwrap();
        assert_eq!(parts.len(), 2);
        assert!((parts[0].eigenvalue + 1.0).abs() < 1e-14);
        assert!((parts[1].eigenvalue - 1.0).abs() < 1e-14);
        let minus = ComplexMatrix::from_real_rows(&[&[0.5, -0.5], &[-0.5, 0.5]]).unwrap();
        let plus = ComplexMatrix::from_real_rows(&[&[0.5, 0.5], &[0.5, 0.5]]).unwrap();
        assert!(parts[0].projector.matrix().distance(&minus).unwrap() < 1e-14);
        assert!(parts[1].projector.matrix().distance(&plus).unwrap() < 1e-14);
    }

    #[test]
    fn complex_entries() {
        // Pauli-Y: eigenvalues ±1.
        let y = ComplexMatrix::new(
            2,
            2,
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(0.0, 0.0),
            ],
        )
        .unwrap();
        let op = HermitianOperator::new(y, &tol()).unwrap();
        let parts = spectral_decompose(&op, &tol()).unwrap();
        let mut recon = ComplexMatrix::zeros(2, 2);
        for part in &parts {
            recon.add_assign_unchecked(&part.projector.matrix().scale_real(part.eigenvalue));
        }
        assert!(recon.distance(op.matrix()).unwrap() < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!(matches!(
            HermitianOperator::new(m, &tol()),
            Err(Error::NotHermitian(_))
        ));
    }
}

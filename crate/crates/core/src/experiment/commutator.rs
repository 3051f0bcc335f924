//! Operator commutators against the commutators of their spectral projectors.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{
    commutator, spectral_decompose, Complex64, ComplexMatrix, HermitianOperator, Projector,
    Tolerance,
};

/// Largest dimension accepted by [`commutator_sweep`].
pub const MAX_SWEEP_DIM: usize = 64;

/// `[P, Q]` for Hermitian `P`, `Q`: `PQ − (PQ)†`, one product instead of two.
fn hermitian_commutator(p: &ComplexMatrix, q: &ComplexMatrix) -> ComplexMatrix {
    let pq = p.matmul(q).expect("operands share a dimension");
    pq.sub(&pq.adjoint()).expect("same shape")
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CommutatorIdentityReport {
    /// `‖Σ_α Σ_β q_α r_β [P_α, P_β] − [q, r]‖_F`.
    pub residual: f64,
    /// `residual / (1 + ‖q‖_F ‖r‖_F)`.
    pub relative: f64,
    pub holds: bool,
}

/// Checks that `[q, r]` equals the eigenvalue-weighted sum of projector commutators.
///
/// The identity holds when the residual is at most `100·ε_proj·(1 + ‖q‖_F‖r‖_F)`.
pub fn verify_spectral_commutator_identity(
    q: &HermitianOperator,
    r: &HermitianOperator,
    tol: &Tolerance,
) -> Result<CommutatorIdentityReport> {
    if q.dim() != r.dim() {
        return Err(Error::DimensionMismatch {
            expected: q.dim(),
            found: r.dim(),
        });
    }
    let qs = spectral_decompose(q, tol)?;
    let rs = spectral_decompose(r, tol)?;
    let n = q.dim();
    let mut lhs = ComplexMatrix::zeros(n, n);
    for a in &qs {
        for b in &rs {
            let weight = a.eigenvalue * b.eigenvalue;
            if weight == 0.0 {
                continue;
            }
            let c = hermitian_commutator(a.projector.matrix(), b.projector.matrix());
            lhs = lhs.add(&c.scale_real(weight))?;
        }
    }
    let rhs = commutator(q.matrix(), r.matrix())?;
    let residual = lhs.distance(&rhs)?;
    let scale = 1.0 + q.matrix().frobenius_norm() * r.matrix().frobenius_norm();
    Ok(CommutatorIdentityReport {
        residual,
        relative: residual / scale,
        holds: residual <= 100.0 * tol.proj * scale,
    })
}

/// Operator pairs for [`commutator_sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorFamily {
    /// Discrete position `q = diag(2πk/d)` and its Fourier conjugate `r = F q F†`.
    ClockShift,
    /// `q = diag(k)`, `r = diag(k²)`: a commuting control pair.
    Diagonal,
}

impl OperatorFamily {
    pub fn name(self) -> &'static str {
        match self {
            OperatorFamily::ClockShift => "clock-shift",
            OperatorFamily::Diagonal => "diagonal",
        }
    }

    /// The Hermitian pair of dimension `d`.
    pub fn operators(self, d: usize) -> (HermitianOperator, HermitianOperator) {
        match self {
            OperatorFamily::ClockShift => {
                let angles: Vec<f64> = (0..d).map(|k| 2.0 * PI * k as f64 / d as f64).collect();
                let q = ComplexMatrix::diag_real(&angles);
                let f = dft(d);
                let r = f.matmul(&q).and_then(|fq| fq.matmul(&f.adjoint()));
                let r = r.expect("square factors of equal size");
                // Symmetrize away rounding so the result is Hermitian to the last bit.
                let r = r.add(&r.adjoint()).expect("same shape").scale_real(0.5);
                (hermitian(q), hermitian(r))
            }
            OperatorFamily::Diagonal => {
                let k: Vec<f64> = (0..d).map(|k| k as f64).collect();
                let k2: Vec<f64> = k.iter().map(|k| k * k).collect();
                (
                    HermitianOperator::diagonal(&k),
                    HermitianOperator::diagonal(&k2),
                )
            }
        }
    }
}

fn hermitian(m: ComplexMatrix) -> HermitianOperator {
    HermitianOperator::new(m, &Tolerance::default()).expect("constructed Hermitian")
}

/// Unitary DFT matrix `F_jk = ω^{jk}/√d`, `ω = e^{2πi/d}`.
fn dft(d: usize) -> ComplexMatrix {
    let s = 1.0 / (d as f64).sqrt();
    let data = (0..d * d)
        .map(|idx| {
            let (j, k) = (idx / d, idx % d);
            // Reduce the exponent first to keep the angle small and exact.
            let e = (j * k) % d;
            Complex64::from_polar(s, 2.0 * PI * e as f64 / d as f64)
        })
        .collect();
    ComplexMatrix::new(d, d, data).expect("finite entries")
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub dim: usize,
    /// `max_{α,β} ‖[P_α, P_β]‖_F` over the spectral projectors of `q` and `r`.
    pub max_projector_commutator_norm: f64,
    /// `‖[q, r]‖_F`.
    pub operator_commutator_norm: f64,
}

/// Tabulates projector and operator commutator norms for each dimension.
///
/// The table is observational; nothing is asserted about its trend.
pub fn commutator_sweep(family: OperatorFamily, dims: &[usize]) -> Result<Vec<SweepRow>> {
    if dims.is_empty() {
        return Err(Error::config("dims", "at least one dimension is required"));
    }
    if let Some(&d) = dims.iter().find(|&&d| !(2..=MAX_SWEEP_DIM).contains(&d)) {
        return Err(Error::config(
            "dims",
            format!("{d} is outside 2..={MAX_SWEEP_DIM}"),
        ));
    }
    let tol = Tolerance::default();
    dims.iter()
        .map(|&d| {
            let (q, r) = family.operators(d);
            let projectors = |op: &HermitianOperator| -> Result<Vec<Projector>> {
                Ok(spectral_decompose(op, &tol)?
                    .into_iter()
                    .map(|c| c.projector)
                    .collect())
            };
            let (ps, qs) = (projectors(&q)?, projectors(&r)?);
            let mut max_norm = 0.0f64;
            for p in &ps {
                for s in &qs {
                    let norm = hermitian_commutator(p.matrix(), s.matrix()).frobenius_norm();
                    max_norm = max_norm.max(norm);
                }
            }
            Ok(SweepRow {
                dim: d,
                max_projector_commutator_norm: max_norm,
                operator_commutator_norm: commutator(q.matrix(), r.matrix())?.frobenius_norm(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commuting_diagonals() {
        let q = HermitianOperator::diagonal(&[1.0, 2.0, 2.0]);
        let r = HermitianOperator::diagonal(&[5.0, -1.0, 3.0]);
        let report = verify_spectral_commutator_identity(&q, &r, &Tolerance::default()).unwrap();
        assert_eq!(report.residual, 0.0);
        assert!(report.holds);
    }

    #[test]
    fn two_by_two_by_hand() {
        // [diag(1,2), σx] = [[0,-1],[1,0]]; norm √2.
        let q = HermitianOperator::diagonal(&[1.0, 2.0]);
        let r = HermitianOperator::new(
            ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap(),
            &Tolerance::default(),
        )
        .unwrap();
        let report = verify_spectral_commutator_identity(&q, &r, &Tolerance::default()).unwrap();
        assert!(report.holds);
        assert!(report.residual < 1e-14);
        let direct = commutator(q.matrix(), r.matrix()).unwrap();
        assert!((direct.frobenius_norm() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn mismatched_dimensions() {
        let q = HermitianOperator::diagonal(&[1.0, 2.0]);
        let r = HermitianOperator::diagonal(&[1.0, 2.0, 3.0]);
        assert!(matches!(
            verify_spectral_commutator_identity(&q, &r, &Tolerance::default()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn clock_shift_rows_match_mutually_unbiased_bases() {
        // Position and Fourier eigenvectors overlap with |⟨e|f⟩|² = 1/d, so each
        // rank-one commutator has norm √(2(1/d − 1/d²)).
        let rows = commutator_sweep(OperatorFamily::ClockShift, &[2, 3, 5, 8]).unwrap();
        assert_eq!(rows.len(), 4);
        for row in rows {
            let d = row.dim as f64;
            let expected = (2.0 * (1.0 / d - 1.0 / (d * d))).sqrt();
            assert!(
                (row.max_projector_commutator_norm - expected).abs() < 1e-10,
                "{row:?}"
            );
            assert!(row.operator_commutator_norm.is_finite());
        }
    }

    #[test]
    fn diagonal_family_commutes() {
        for row in commutator_sweep(OperatorFamily::Diagonal, &[2, 4, 7]).unwrap() {
            assert_eq!(row.max_projector_commutator_norm, 0.0);
            assert_eq!(row.operator_commutator_norm, 0.0);
        }
    }

    #[test]
    fn sweep_validation() {
        assert!(commutator_sweep(OperatorFamily::ClockShift, &[]).is_err());
        assert!(commutator_sweep(OperatorFamily::ClockShift, &[2, 1]).is_err());
        assert!(commutator_sweep(OperatorFamily::ClockShift, &[MAX_SWEEP_DIM + 1]).is_err());
    }

    #[test]
    fn sweep_is_bit_reproducible() {
        let a = commutator_sweep(OperatorFamily::ClockShift, &[2, 4, 8, 16]).unwrap();
        let b = commutator_sweep(OperatorFamily::ClockShift, &[2, 4, 8, 16]).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(
                x.max_projector_commutator_norm.to_bits(),
                y.max_projector_commutator_norm.to_bits()
            );
            assert_eq!(
                x.operator_commutator_norm.to_bits(),
                y.operator_commutator_norm.to_bits()
            );
        }
    }
}

//! The lattice `L(ℋ)` of closed subspaces of a finite-dimensional Hilbert space.
//!
//! A subspace is carried by its orthogonal projector. Meet and join are computed
//! from a single Hermitian eigendecomposition each:
//!
//! - `ran(A) ∩ ran(B)` is the kernel of the PSD sum `(I − P_A) + (I − P_B)`,
//! - `closed span(ran(A) ∪ ran(B))` is the range of `P_A + P_B`.
//!
//! Eigenvalues below `tol.rank` count as zero, eigenvalues at or above
//! `sqrt(tol.rank)` as nonzero; anything in between is reported as
//! [`Error::RankAmbiguous`] instead of being rounded.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::{
    commutator, eigh, projector_from_span, ComplexMatrix, Projector, StateVector, Tolerance,
};

/// A closed subspace, represented by its orthogonal projector.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    projector: Projector,
}

impl Subspace {
    pub fn from_projector(projector: Projector) -> Self {
        Subspace { projector }
    }

    pub fn from_span(dim: usize, vectors: &[Vec<Complex64>], tol: &Tolerance) -> Result<Self> {
        Ok(Subspace {
            projector: projector_from_span(dim, vectors, tol)?,
        })
    }

    /// Span of real vectors, for tests and examples.
    pub fn from_real_span(dim: usize, vectors: &[&[f64]], tol: &Tolerance) -> Result<Self> {
        let vectors: Vec<Vec<Complex64>> = vectors
            .iter()
            .map(|v| v.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Subspace::from_span(dim, &vectors, tol)
    }

    /// Span of the given computational basis vectors.
    pub fn coordinate(dim: usize, indices: &[usize]) -> Result<Self> {
        Ok(Subspace {
            projector: Projector::coordinate(dim, indices)?,
        })
    }

    /// The ray through a state.
    pub fn ray(state: &StateVector) -> Self {
        Subspace {
            projector: Projector::from_orthonormal(state.dim(), [state.amplitudes()]),
        }
    }

    pub fn projector(&self) -> &Projector {
        &self.projector
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        self.projector.matrix()
    }

    pub fn rank(&self) -> usize {
        self.projector.rank()
    }

    pub fn dim_ambient(&self) -> usize {
        self.projector.dim()
    }

    pub fn is_bottom(&self) -> bool {
        self.rank() == 0
    }

    pub fn is_top(&self) -> bool {
        self.rank() == self.dim_ambient()
    }

    /// Frobenius distance between the two projectors.
    pub fn distance(&self, other: &Subspace) -> Result<f64> {
        self.matrix().distance(other.matrix())
    }
}

/// Ambient dimension, tolerance policy and the lattice constants `0` and `1`.
#[derive(Debug, Clone)]
pub struct LatticeContext {
    dim: usize,
    tol: Tolerance,
    bottom: Subspace,
    top: Subspace,
}

enum Keep {
    Kernel,
    Range,
}

impl LatticeContext {
    pub fn new(dim: usize, tol: Tolerance) -> Result<Self> {
        if dim == 0 {
            return Err(Error::config("dimension", "must be positive"));
        }
        tol.validate()?;
        Ok(LatticeContext {
            dim,
            tol,
            bottom: Subspace::from_projector(Projector::zero(dim)),
            top: Subspace::from_projector(Projector::identity(dim)),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tolerance(&self) -> &Tolerance {
        &self.tol
    }

    pub fn bottom(&self) -> &Subspace {
        &self.bottom
    }

    pub fn top(&self) -> &Subspace {
        &self.top
    }

    fn check(&self, s: &Subspace) -> Result<()> {
        if s.dim_ambient() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.dim_ambient(),
            });
        }
        Ok(())
    }

    fn check2(&self, a: &Subspace, b: &Subspace) -> Result<()> {
        self.check(a)?;
        self.check(b)
    }

    /// Projector onto the kernel or range of a PSD matrix.
    fn psd_subspace(&self, m: &ComplexMatrix, keep: Keep) -> Result<Subspace> {
        let eig = eigh(m);
        let ceiling = self.tol.ambiguity_ceiling();
        let mut kernel = Vec::new();
        let mut range = Vec::new();
        for (value, vector) in eig.values.iter().zip(&eig.vectors) {
            if *value < self.tol.rank {
                kernel.push(vector.as_slice());
            } else if *value < ceiling {
                return Err(Error::RankAmbiguous(*value));
            } else {
                range.push(vector.as_slice());
            }
        }
        let chosen = match keep {
            Keep::Kernel => kernel,
            Keep::Range => range,
        };
        Ok(Subspace::from_projector(Projector::from_orthonormal(
            self.dim, chosen,
        )))
    }

    /// `ran(a) ∩ ran(b)`.
    pub fn meet(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check2(a, b)?;
        let ca = a.projector.complement();
        let cb = b.projector.complement();
        let sum = ca.matrix().add(cb.matrix())?;
        self.psd_subspace(&sum, Keep::Kernel)
    }

    /// Closed span of `ran(a) ∪ ran(b)`.
    pub fn join(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check2(a, b)?;
        let sum = a.matrix().add(b.matrix())?;
        self.psd_subspace(&sum, Keep::Range)
    }

    /// `I − P`.
    pub fn orthocomplement(&self, a: &Subspace) -> Result<Subspace> {
        self.check(a)?;
        Ok(Subspace::from_projector(a.projector.complement()))
    }

    /// `a ≤ b` iff `‖P_b P_a − P_a‖_F ≤ tol.eq`.
    pub fn leq(&self, a: &Subspace, b: &Subspace) -> Result<bool> {
        self.check2(a, b)?;
        let pb_pa = b.matrix().matmul(a.matrix())?;
        Ok(pb_pa.distance(a.matrix())? <= self.tol.eq)
    }

    /// Vanishing commutator within `tol.eq`.
    pub fn compatible(&self, a: &Subspace, b: &Subspace) -> Result<bool> {
        Ok(self.commutator_norm(a, b)? <= self.tol.eq)
    }

    /// `‖[P_a, P_b]‖_F`.
    pub fn commutator_norm(&self, a: &Subspace, b: &Subspace) -> Result<f64> {
        self.check2(a, b)?;
        Ok(commutator(a.matrix(), b.matrix())?.frobenius_norm())
    }

    /// Subspace equality: projector distance within `tol.eq`.
    pub fn equal(&self, a: &Subspace, b: &Subspace) -> Result<bool> {
        self.check2(a, b)?;
        Ok(a.distance(b)? <= self.tol.eq)
    }

    /// Residual `‖P_b − P_{a ⊔ (b ⊓ a⊥)}‖_F` of the orthomodular law for `a ≤ b`.
    pub fn orthomodular_residual(&self, a: &Subspace, b: &Subspace) -> Result<f64> {
        if !self.leq(a, b)? {
            return Err(Error::PreconditionViolation(
                "orthomodular check requires a ≤ b".into(),
            ));
        }
        let rhs = self.join(a, &self.meet(b, &self.orthocomplement(a)?)?)?;
        b.distance(&rhs)
    }

    /// Whether `b = a ⊔ (b ⊓ a⊥)` holds within `tol.proj`.
    pub fn check_orthomodular(&self, a: &Subspace, b: &Subspace) -> Result<bool> {
        Ok(self.orthomodular_residual(a, b)? <= self.tol.proj)
    }

    /// `‖a ⊓ (b ⊔ c) − (a ⊓ b) ⊔ (a ⊓ c)‖_F`; zero whenever the triple distributes.
    pub fn distributivity_defect(&self, a: &Subspace, b: &Subspace, c: &Subspace) -> Result<f64> {
        let lhs = self.meet(a, &self.join(b, c)?)?;
        let rhs = self.join(&self.meet(a, b)?, &self.meet(a, c)?)?;
        lhs.distance(&rhs)
    }
}

//! Dense complex linear algebra: matrices, pure states, projectors and
//! Hermitian spectral decomposition under one shared [`Tolerance`] policy.

mod matrix;
mod projector;
mod spectral;
mod state;
mod tolerance;

pub use matrix::{commutator, frobenius_norm, ComplexMatrix};
pub use num_complex::Complex64;
pub use projector::{
    expectation, measure_update, projector_from_span, Projector, SPAN_DROP_THRESHOLD,
};
pub use spectral::{
    spectral_decompose, HermitianOperator, SpectralComponent, EIGENVALUE_MERGE_GAP,
};
pub use state::StateVector;
pub use tolerance::Tolerance;

pub(crate) use spectral::eigh;

/// Kronecker product with the left factor as the slow index.
pub trait TensorProduct<Rhs = Self> {
    type Output;
    fn tensor(&self, rhs: &Rhs) -> Self::Output;
}

impl TensorProduct for ComplexMatrix {
    type Output = ComplexMatrix;
    fn tensor(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.kron(rhs)
    }
}

impl TensorProduct for StateVector {
    type Output = StateVector;
    fn tensor(&self, rhs: &StateVector) -> StateVector {
        self.kron(rhs)
    }
}

impl TensorProduct for Projector {
    type Output = Projector;
    fn tensor(&self, rhs: &Projector) -> Projector {
        self.kron(rhs)
    }
}

pub fn tensor_product<T: TensorProduct>(a: &T, b: &T) -> T::Output {
    a.tensor(b)
}

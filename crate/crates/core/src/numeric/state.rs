use num_complex::Complex64;

use super::matrix::check_finite;
use super::Tolerance;
use crate::error::{Error, Result};

/// A normalized pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

pub(crate) fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub(crate) fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

impl StateVector {
    /// Wraps amplitudes that are already normalized within `tol.norm`.
    pub fn new(amplitudes: Vec<Complex64>, tol: &Tolerance) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::config("state", "dimension must be positive"));
        }
        check_finite(&amplitudes, "state")?;
        let n = norm(&amplitudes);
        if (n - 1.0).abs() > tol.norm {
            return Err(Error::NotNormalized(n));
        }
        Ok(StateVector { amplitudes })
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::config("state", "dimension must be positive"));
        }
        check_finite(&amplitudes, "state")?;
        let n = norm(&amplitudes);
        if n == 0.0 {
            return Err(Error::NotNormalized(0.0));
        }
        Ok(StateVector {
            amplitudes: amplitudes.into_iter().map(|z| z / n).collect(),
        })
    }

    pub fn from_real(amplitudes: &[f64], tol: &Tolerance) -> Result<Self> {
        StateVector::new(
            amplitudes.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
            tol,
        )
    }

    /// The `i`-th computational basis vector of a `dim`-dimensional space.
    pub fn basis(dim: usize, i: usize) -> Result<Self> {
        if i >= dim {
            return Err(Error::IndexOutOfRange { index: i, len: dim });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[i] = Complex64::new(1.0, 0.0);
        Ok(StateVector { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(inner(&self.amplitudes, &other.amplitudes))
    }

    /// Kronecker product; `self` is the slow index.
    pub fn kron(&self, other: &StateVector) -> StateVector {
        let mut amplitudes = Vec::with_capacity(self.dim() * other.dim());
        for &a in &self.amplitudes {
            amplitudes.extend(other.amplitudes.iter().map(|&b| a * b));
        }
        StateVector { amplitudes }
    }

    pub fn distance(&self, other: &StateVector) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unnormalized() {
        let tol = Tolerance::default();
        assert!(matches!(
            StateVector::from_real(&[1.0, 1.0], &tol),
            Err(Error::NotNormalized(_))
        ));
        let s = StateVector::normalized(vec![Complex64::new(3.0, 0.0), Complex64::new(0.0, 4.0)])
            .unwrap();
        assert!((s.amplitudes()[0].re - 0.6).abs() < 1e-15);
        assert!(StateVector::normalized(vec![Complex64::new(0.0, 0.0)]).is_err());
    }

    #[test]
    fn kron_basis_bookkeeping() {
        let e0 = StateVector::basis(2, 0).unwrap();
        let e1 = StateVector::basis(2, 1).unwrap();
        assert_eq!(e0.kron(&e1), StateVector::basis(4, 1).unwrap());
    }
}

//! Seeded random fixtures and independent reference computations for tests.
#![allow(dead_code)]

use quantum_truth::lattice::Subspace;
use quantum_truth::numeric::{Complex64, ComplexMatrix, StateVector, Tolerance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn tol() -> Tolerance {
    Tolerance::default()
}

pub fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    // Box–Muller; good enough for generic test matrices.
    let u: f64 = rng.gen_range(f64::EPSILON..1.0);
    let v: f64 = rng.gen();
    (-2.0 * u.ln()).sqrt() * (2.0 * std::f64::consts::PI * v).cos()
}

pub fn complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(gaussian(rng), gaussian(rng))
}

pub fn random_vector(rng: &mut ChaCha8Rng, d: usize) -> Vec<Complex64> {
    (0..d).map(|_| complex(rng)).collect()
}

fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn norm(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Columns of a Haar-ish random unitary, by classical Gram–Schmidt run twice.
pub fn random_unitary(rng: &mut ChaCha8Rng, d: usize) -> Vec<Vec<Complex64>> {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    while cols.len() < d {
        let mut v = random_vector(rng, d);
        for _ in 0..2 {
            for u in &cols {
                let c = dot(u, &v);
                for (x, y) in v.iter_mut().zip(u) {
                    *x -= c * y;
                }
            }
        }
        let n = norm(&v);
        if n > 1e-6 {
            cols.push(v.into_iter().map(|x| x / n).collect());
        }
    }
    cols
}

/// `Σ_k u_k u_k†` computed entry by entry.
pub fn outer_sum(d: usize, cols: &[Vec<Complex64>]) -> ComplexMatrix {
    let mut data = vec![Complex64::new(0.0, 0.0); d * d];
    for u in cols {
        for i in 0..d {
            for j in 0..d {
                data[i * d + j] += u[i] * u[j].conj();
            }
        }
    }
    ComplexMatrix::new(d, d, data).unwrap()
}

/// `U diag(λ) U†` with a random unitary `U`.
pub fn hermitian_with_spectrum(rng: &mut ChaCha8Rng, eigenvalues: &[f64]) -> ComplexMatrix {
    let d = eigenvalues.len();
    let u = random_unitary(rng, d);
    let mut data = vec![Complex64::new(0.0, 0.0); d * d];
    for (lambda, col) in eigenvalues.iter().zip(&u) {
        for i in 0..d {
            for j in 0..d {
                data[i * d + j] += *lambda * col[i] * col[j].conj();
            }
        }
    }
    // Exact Hermitian symmetry.
    for i in 0..d {
        data[i * d + i].im = 0.0;
        for j in (i + 1)..d {
            data[j * d + i] = data[i * d + j].conj();
        }
    }
    ComplexMatrix::new(d, d, data).unwrap()
}

/// A generic Hermitian matrix `(X + X†)/2`.
pub fn random_hermitian(rng: &mut ChaCha8Rng, d: usize) -> ComplexMatrix {
    let x: Vec<Complex64> = (0..d * d).map(|_| complex(rng)).collect();
    let mut data = vec![Complex64::new(0.0, 0.0); d * d];
    for i in 0..d {
        for j in 0..d {
            data[i * d + j] = 0.5 * (x[i * d + j] + x[j * d + i].conj());
        }
    }
    ComplexMatrix::new(d, d, data).unwrap()
}

/// Spectrum with repeated values, drawn from a small integer set.
pub fn degenerate_spectrum(rng: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
    let distinct = rng.gen_range(1..=d.max(2) / 2 + 1);
    let levels: Vec<f64> = (0..distinct).map(|k| k as f64 - 1.0).collect();
    (0..d).map(|_| levels[rng.gen_range(0..distinct)]).collect()
}

pub fn random_state(rng: &mut ChaCha8Rng, d: usize) -> StateVector {
    StateVector::normalized(random_vector(rng, d)).unwrap()
}

pub fn state_from(v: Vec<Complex64>) -> StateVector {
    StateVector::normalized(v).unwrap()
}

pub fn span(d: usize, cols: &[Vec<Complex64>]) -> Subspace {
    Subspace::from_span(d, cols, &tol()).unwrap()
}

/// Random linear combination of `basis`.
pub fn combination(rng: &mut ChaCha8Rng, basis: &[Vec<Complex64>]) -> Vec<Complex64> {
    let d = basis[0].len();
    let mut v = vec![Complex64::new(0.0, 0.0); d];
    for b in basis {
        let c = complex(rng);
        for (x, y) in v.iter_mut().zip(b) {
            *x += c * y;
        }
    }
    v
}

pub fn max_abs_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    a.entries()
        .iter()
        .zip(b.entries())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

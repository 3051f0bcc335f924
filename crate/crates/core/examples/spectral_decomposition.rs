//! Split a Hermitian operator into eigenvalues and eigenprojectors, then rebuild it.

use quantum_truth::numeric::{
    spectral_decompose, Complex64, ComplexMatrix, HermitianOperator, Tolerance,
};

fn main() -> quantum_truth::Result<()> {
    let tol = Tolerance::default();
    let i = Complex64::i();
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);

    // A 3x3 operator with a doubly degenerate eigenvalue.
    let m = ComplexMatrix::from_complex_rows(vec![
        vec![2.0 * one, zero, zero],
        vec![zero, 1.5 * one, 0.5 * i],
        vec![zero, -0.5 * i, 1.5 * one],
    ])?;
    let op = HermitianOperator::new(m, &tol)?;
    let parts = spectral_decompose(&op, &tol)?;

    let mut rebuilt = ComplexMatrix::zeros(3, 3);
    for part in &parts {
        println!(
            "eigenvalue {:>6.3}  rank {}",
            part.eigenvalue,
            part.projector.rank()
        );
        rebuilt = rebuilt.add(&part.projector.matrix().scale_real(part.eigenvalue))?;
    }
    println!("‖Σ λ P_λ − A‖_F = {:.2e}", rebuilt.distance(op.matrix())?);
    Ok(())
}

//! Meet, join and orthocomplement of subspaces, and the failure of distributivity.

use quantum_truth::lattice::{LatticeContext, Subspace};
use quantum_truth::numeric::Tolerance;

fn main() -> quantum_truth::Result<()> {
    let tol = Tolerance::default();
    let l = LatticeContext::new(2, tol)?;
    let h = std::f64::consts::FRAC_1_SQRT_2;

    let x1 = Subspace::coordinate(2, &[0])?;
    let x2 = Subspace::coordinate(2, &[1])?;
    let d = Subspace::from_real_span(2, &[&[h, h]], &tol)?;

    println!("rank(X1 ⊓ X2) = {}", l.meet(&x1, &x2)?.rank());
    println!("rank(X1 ⊔ X2) = {}", l.join(&x1, &x2)?.rank());
    println!("X2 = X1⊥: {}", l.equal(&x2, &l.orthocomplement(&x1)?)?);
    println!("‖[P_D, P_X1]‖ = {:.6}", l.commutator_norm(&d, &x1)?);

    // D ⊓ (X1 ⊔ X2) = D, but (D ⊓ X1) ⊔ (D ⊓ X2) = 0.
    let defect = l.distributivity_defect(&d, &x1, &x2)?;
    println!("distributivity defect for (D, X1, X2) = {defect:.6}");

    // Orthomodularity survives: X1 ≤ X1 ⊔ D gives X1 ⊔ D = X1 ⊔ ((X1 ⊔ D) ⊓ X1⊥).
    let top = l.join(&x1, &d)?;
    println!(
        "orthomodular residual for (X1, X1 ⊔ D) = {:.2e}",
        l.orthomodular_residual(&x1, &top)?
    );
    Ok(())
}

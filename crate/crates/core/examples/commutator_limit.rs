//! Operator commutators against spectral-projector commutators as dimension grows.

use quantum_truth::experiment::{
    commutator_sweep, verify_spectral_commutator_identity, OperatorFamily,
};
use quantum_truth::numeric::Tolerance;

fn main() -> quantum_truth::Result<()> {
    let tol = Tolerance::default();
    for family in [OperatorFamily::ClockShift, OperatorFamily::Diagonal] {
        println!("{}", family.name());
        println!("  dim  max ‖[P_q, P_r]‖  ‖[q, r]‖");
        for row in commutator_sweep(family, &[2, 4, 8, 16, 32])? {
            println!(
                "  {:>3}  {:>15.6}  {:>8.4}",
                row.dim, row.max_projector_commutator_norm, row.operator_commutator_norm
            );
        }
    }

    let (q, r) = OperatorFamily::ClockShift.operators(6);
    let report = verify_spectral_commutator_identity(&q, &r, &tol)?;
    println!(
        "Σ q_α r_β [P_α, P_β] = [q, r] at d = 6: residual {:.2e}, holds {}",
        report.residual, report.holds
    );
    Ok(())
}

//! Probability of a join versus the sum of probabilities, for orthogonal and
//! non-orthogonal alternatives, and where Born degrees follow Łukasiewicz rules.

use quantum_truth::lattice::{LatticeContext, Subspace};
use quantum_truth::numeric::{StateVector, Tolerance};
use quantum_truth::valuation::{
    law_of_alternatives_check, lukasiewicz_coincidence_check, Valuation,
};

fn main() -> quantum_truth::Result<()> {
    let tol = Tolerance::default();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let l = LatticeContext::new(3, tol)?;

    // Two distinct rays in the e1-e2 plane: they meet only in 0 and span the plane.
    let a = Subspace::coordinate(3, &[0])?;
    let b = Subspace::from_real_span(3, &[&[h, h, 0.0]], &tol)?;
    let psi = StateVector::basis(3, 1)?;
    let r = law_of_alternatives_check(&psi, &a, &b, &tol)?;
    println!(
        "non-orthogonal: P(a ∨ b) = {:.3}, P(a) + P(b) = {:.3}, holds = {}",
        r.p_join, r.p_sum, r.holds
    );

    let c = Subspace::coordinate(3, &[1])?;
    let phi = StateVector::from_real(&[0.6, 0.0, 0.8], &tol)?;
    let r = law_of_alternatives_check(&phi, &a, &c, &tol)?;
    println!(
        "orthogonal:     P(a ∨ c) = {:.3}, P(a) + P(c) = {:.3}, holds = {}",
        r.p_join, r.p_sum, r.holds
    );

    // Orthogonal pair: Born degrees obey the Łukasiewicz connectives.
    let psi = StateVector::from_real(&[0.6, 0.48, 0.64], &tol)?;
    let r = lukasiewicz_coincidence_check(&psi, &a, &c, &tol)?;
    println!(
        "v(a ∨ c) = {:.4} vs min(v(a)+v(c), 1) = {:.4}",
        r.lhs_join, r.rhs_join
    );

    // The same proposition twice: v(a ∨ a) = v(a), not min(2 v(a), 1).
    let v = Valuation::born(psi.clone(), tol)?;
    let r = lukasiewicz_coincidence_check(&psi, &a, &a, &tol)?;
    println!(
        "v(a) = {:.2}: v(a ∨ a) = {:.2} vs {:.2}, matches = {}",
        v.probability_of(&a)?,
        r.lhs_join,
        r.rhs_join,
        r.join_matches
    );
    println!("a ∨ a has rank {}", l.join(&a, &a)?.rank());
    Ok(())
}

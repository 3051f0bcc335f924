//! The same propositions valued under each semantics, next to their probabilities.

use quantum_truth::lattice::{LatticeContext, Subspace};
use quantum_truth::mvl::TruthValue;
use quantum_truth::numeric::{StateVector, Tolerance};
use quantum_truth::valuation::{agreement_report, Valuation, ValuationPolicy};

fn main() -> quantum_truth::Result<()> {
    let tol = Tolerance::default();
    let l = LatticeContext::new(2, tol)?;
    let x1 = Subspace::coordinate(2, &[0])?;
    let x2 = Subspace::coordinate(2, &[1])?;
    let psi = StateVector::from_real(&[0.6, 0.8], &tol)?;

    let either = l.join(&x1, &x2)?;
    let both = l.meet(&x1, &x2)?;
    let props = [
        ("X1", &x1),
        ("X2", &x2),
        ("X1 ∨ X2", &either),
        ("X1 ∧ X2", &both),
    ];

    for policy in [
        ValuationPolicy::EigenstateBivalent,
        ValuationPolicy::BornDegree,
        ValuationPolicy::Supervaluation,
    ] {
        let v = Valuation::new(policy.clone(), Some(psi.clone()), tol)?;
        let cells: Vec<String> = props
            .iter()
            .map(|(name, s)| Ok(format!("{name} = {:<9}", show(v.value_of(s)?))))
            .collect::<quantum_truth::Result<_>>()?;
        println!("{:<9}  {}", policy.name(), cells.join("  ").trim_end());
    }

    let born = Valuation::born(psi.clone(), tol)?;
    println!(
        "probabilities: P(X1) = {:.2}, P(X2) = {:.2}",
        born.probability_of(&x1)?,
        born.probability_of(&x2)?
    );

    // Bivalent and Born valuations agree exactly on eigenstates.
    for state in [StateVector::basis(2, 0)?, psi] {
        let r = agreement_report(&state, &x1, &tol)?;
        println!(
            "state {:?}: bivalent {} born {} agree {}",
            state.amplitudes().iter().map(|z| z.re).collect::<Vec<_>>(),
            r.eigenstate_value,
            r.born_value,
            r.agree
        );
    }
    Ok(())
}

fn show(t: TruthValue) -> String {
    match t.as_degree() {
        Some(x) => format!("{x:.2}"),
        None => "undefined".into(),
    }
}

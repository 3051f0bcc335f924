//! Parse, print and evaluate formulas against a scenario file under several policies.

use quantum_truth::formula::{bind_and_evaluate, parse_formula, print_formula, ScenarioDocument};
use quantum_truth::numeric::Tolerance;

const SCENARIO: &str = include_str!("../scenarios/twoslit.json");

fn main() -> quantum_truth::Result<()> {
    let doc = ScenarioDocument::from_json(SCENARIO)?;
    let formulas = ["X1", "X1 ∨ X2", "(X1|X2)&!(X1&X2)", "X1 ^ X2", "X1 & !X1"];

    for policy in ["bivalent", "born", "super"] {
        let sc = doc.scenario(Some(policy), Tolerance::default())?;
        println!("policy {policy}");
        for text in formulas {
            let f = parse_formula(text)?;
            let ev = bind_and_evaluate(&f, &sc)?;
            println!(
                "  {:<26} truth {:<9} probability {:.2}",
                print_formula(&f),
                ev.truth.to_string(),
                ev.probability.unwrap_or(f64::NAN)
            );
        }
    }

    match parse_formula("X1 & (X2 |") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}

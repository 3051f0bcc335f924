//! Connective tables for the bivalent, Kleene and Łukasiewicz systems.

use quantum_truth::mvl::{self, truth_tables, LogicSystem, TruthValue};

fn main() -> quantum_truth::Result<()> {
    for system in [
        LogicSystem::Bivalent,
        LogicSystem::Kleene3,
        LogicSystem::LukasiewiczFuzzy,
    ] {
        let t = truth_tables(system);
        println!("{system}");
        for (i, a) in t.values.iter().enumerate() {
            let row: Vec<String> = t.xor[i].iter().map(|x| format!("{x:5.2}")).collect();
            println!("  {a:4.2} ^ _ : {}", row.join(" "));
        }
    }

    let half = TruthValue::HALF;
    let k = mvl::xor_compound(half, half, LogicSystem::Kleene3)?;
    println!("Kleene: (½ ∨ ½) ∧ ¬(½ ∧ ½) = {k}");
    let gap = mvl::disj(
        TruthValue::Undefined,
        TruthValue::TRUE,
        LogicSystem::Kleene3,
    )?;
    println!("a gap absorbs every connective: undefined ∨ 1 = {gap}");
    Ok(())
}

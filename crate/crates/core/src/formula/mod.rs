//! Propositional formulas: AST, parser, printer, scenario files and evaluation.

mod parser;
mod scenario;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use parser::{parse_formula, ParseError};
pub use scenario::{parse_policy, Scenario, ScenarioDocument, POLICY_NAMES};

use crate::error::{Error, Result};
use crate::lattice::{LatticeContext, Subspace};
use crate::mvl::{self, LogicSystem, TruthValue};
use crate::valuation::{Valuation, ValuationPolicy};

/// Maximum number of nested connectives.
pub const MAX_DEPTH: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Xor(Box<Formula>, Box<Formula>),
}

pub fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn xor(a: Formula, b: Formula) -> Self {
        Formula::Xor(Box::new(a), Box::new(b))
    }

    /// Number of nested connectives; an atom has depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Not(f) => 1 + f.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Xor(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    pub fn atoms(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Atom(name) => {
                out.insert(name.as_str());
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Xor(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Rewrites every `a ^ b` as `(a | b) & !(a & b)`.
    pub fn expand_xor(&self) -> Formula {
        match self {
            Formula::Atom(_) => self.clone(),
            Formula::Not(f) => Formula::not(f.expand_xor()),
            Formula::And(a, b) => Formula::and(a.expand_xor(), b.expand_xor()),
            Formula::Or(a, b) => Formula::or(a.expand_xor(), b.expand_xor()),
            Formula::Xor(a, b) => {
                let (a, b) = (a.expand_xor(), b.expand_xor());
                Formula::and(
                    Formula::or(a.clone(), b.clone()),
                    Formula::not(Formula::and(a, b)),
                )
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Or(..) => 1,
            Formula::Xor(..) => 2,
            Formula::And(..) => 3,
            Formula::Not(_) => 4,
            Formula::Atom(_) => 5,
        }
    }
}

/// Canonical ASCII rendering with the minimum parentheses needed to re-parse
/// to the same tree.
pub fn print_formula(f: &Formula) -> String {
    f.to_string()
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn child(f: &mut fmt::Formatter<'_>, node: &Formula, parenthesize: bool) -> fmt::Result {
            if parenthesize {
                write!(f, "({node})")
            } else {
                write!(f, "{node}")
            }
        }
        let p = self.precedence();
        match self {
            Formula::Atom(name) => f.write_str(name),
            Formula::Not(inner) => {
                f.write_str("!")?;
                child(f, inner, inner.precedence() < p)
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Xor(a, b) => {
                let op = match self {
                    Formula::And(..) => " & ",
                    Formula::Or(..) => " | ",
                    _ => " ^ ",
                };
                child(f, a, a.precedence() < p)?;
                f.write_str(op)?;
                child(f, b, b.precedence() <= p)
            }
        }
    }
}

/// Interprets connectives as lattice operations; `a ^ b` becomes `(a ⊔ b) ⊓ (a ⊓ b)⊥`.
pub fn evaluate_lattice(
    f: &Formula,
    lattice: &LatticeContext,
    atoms: &BTreeMap<String, Subspace>,
) -> Result<Subspace> {
    match f {
        Formula::Atom(name) => atoms
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnboundAtom(name.clone())),
        Formula::Not(inner) => lattice.orthocomplement(&evaluate_lattice(inner, lattice, atoms)?),
        Formula::And(a, b) => lattice.meet(
            &evaluate_lattice(a, lattice, atoms)?,
            &evaluate_lattice(b, lattice, atoms)?,
        ),
        Formula::Or(a, b) => lattice.join(
            &evaluate_lattice(a, lattice, atoms)?,
            &evaluate_lattice(b, lattice, atoms)?,
        ),
        Formula::Xor(a, b) => {
            let a = evaluate_lattice(a, lattice, atoms)?;
            let b = evaluate_lattice(b, lattice, atoms)?;
            let either = lattice.join(&a, &b)?;
            let both = lattice.meet(&a, &b)?;
            lattice.meet(&either, &lattice.orthocomplement(&both)?)
        }
    }
}

/// Interprets connectives through the truth tables of `system`.
pub fn evaluate_table(
    f: &Formula,
    system: LogicSystem,
    assignment: &BTreeMap<String, TruthValue>,
) -> Result<TruthValue> {
    match f {
        Formula::Atom(name) => assignment
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnboundAtom(name.clone())),
        Formula::Not(inner) => Ok(mvl::neg(evaluate_table(inner, system, assignment)?)),
        Formula::And(a, b) => mvl::conj(
            evaluate_table(a, system, assignment)?,
            evaluate_table(b, system, assignment)?,
            system,
        ),
        Formula::Or(a, b) => mvl::disj(
            evaluate_table(a, system, assignment)?,
            evaluate_table(b, system, assignment)?,
            system,
        ),
        Formula::Xor(a, b) => mvl::xor_compound(
            evaluate_table(a, system, assignment)?,
            evaluate_table(b, system, assignment)?,
            system,
        ),
    }
}

/// Result of evaluating a formula against a scenario.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub truth: TruthValue,
    /// `⟨Ψ|P|Ψ⟩` of the formula's subspace, when the scenario carries a state.
    pub probability: Option<f64>,
    /// The subspace the formula denotes, for lattice-backed policies.
    pub lattice_element: Option<Subspace>,
}

pub fn bind_and_evaluate(f: &Formula, sc: &Scenario) -> Result<Evaluation> {
    if let ValuationPolicy::TableDriven { system, assignment } = &sc.policy {
        return Ok(Evaluation {
            truth: evaluate_table(f, *system, assignment)?,
            probability: None,
            lattice_element: None,
        });
    }
    for atom in f.atoms() {
        if !sc.atoms.contains_key(atom) {
            return Err(Error::UnboundAtom(atom.to_string()));
        }
    }
    let lattice = LatticeContext::new(sc.dimension, sc.tol)?;
    let element = evaluate_lattice(f, &lattice, &sc.atoms)?;
    let valuation = Valuation::new(sc.policy.clone(), sc.state.clone(), sc.tol)?;
    let truth = valuation.value_of(&element)?;
    let probability = match sc.state {
        Some(_) => Some(valuation.probability_of(&element)?),
        None => None,
    };
    Ok(Evaluation {
        truth,
        probability,
        lattice_element: Some(element),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{StateVector, Tolerance};
    use proptest::prelude::*;

    #[test]
    fn atom_names() {
        assert!(is_atom_name("X1"));
        assert!(is_atom_name("a_b_2"));
        assert!(!is_atom_name("1X"));
        assert!(!is_atom_name("_x"));
        assert!(!is_atom_name(""));
    }

    #[test]
    fn printer_uses_minimal_parentheses() {
        let f = parse_formula("((A & B) | (C ^ D))").unwrap();
        assert_eq!(print_formula(&f), "A & B | C ^ D");
        let f = parse_formula("A & (B & C)").unwrap();
        assert_eq!(print_formula(&f), "A & (B & C)");
        let f = parse_formula("!(A | B) & !!C").unwrap();
        assert_eq!(print_formula(&f), "!(A | B) & !!C");
    }

    fn dim2_scenario(policy: ValuationPolicy) -> Scenario {
        let tol = Tolerance::default();
        let mut atoms = BTreeMap::new();
        atoms.insert("X1".to_string(), Subspace::coordinate(2, &[0]).unwrap());
        atoms.insert("X2".to_string(), Subspace::coordinate(2, &[1]).unwrap());
        Scenario {
            dimension: 2,
            atoms,
            state: Some(StateVector::from_real(&[0.6, 0.8], &tol).unwrap()),
            policy,
            tol,
        }
    }

    #[test]
    fn exclusive_disjunction_under_supervaluation() {
        let sc = dim2_scenario(ValuationPolicy::Supervaluation);
        let f = parse_formula("(X1 | X2) & !(X1 & X2)").unwrap();
        let ev = bind_and_evaluate(&f, &sc).unwrap();
        assert_eq!(ev.truth, TruthValue::TRUE);
        assert_eq!(ev.probability, Some(1.0));
        assert!(ev.lattice_element.unwrap().is_top());

        let atom = bind_and_evaluate(&parse_formula("X1").unwrap(), &sc).unwrap();
        assert_eq!(atom.truth, TruthValue::Undefined);
    }

    #[test]
    fn excluded_middle_under_born() {
        let sc = dim2_scenario(ValuationPolicy::BornDegree);
        let ev = bind_and_evaluate(&parse_formula("X1 | !X1").unwrap(), &sc).unwrap();
        assert_eq!(ev.truth, TruthValue::TRUE);
        let ev = bind_and_evaluate(&parse_formula("X1 & !X1").unwrap(), &sc).unwrap();
        assert_eq!(ev.truth, TruthValue::FALSE);
    }

    #[test]
    fn kleene_table_driven() {
        let mut assignment = BTreeMap::new();
        assignment.insert("X1".to_string(), TruthValue::HALF);
        assignment.insert("X2".to_string(), TruthValue::HALF);
        let sc = dim2_scenario(ValuationPolicy::TableDriven {
            system: LogicSystem::Kleene3,
            assignment,
        });
        let ev = bind_and_evaluate(&parse_formula("(X1 | X2) & !(X1 & X2)").unwrap(), &sc).unwrap();
        assert_eq!(ev.truth, TruthValue::HALF);
        assert!(ev.probability.is_none());
        assert!(ev.lattice_element.is_none());
    }

    #[test]
    fn unbound_atoms() {
        let sc = dim2_scenario(ValuationPolicy::BornDegree);
        let err = bind_and_evaluate(&parse_formula("X1 | Y").unwrap(), &sc).unwrap_err();
        assert_eq!(err, Error::UnboundAtom("Y".into()));
        let sc = dim2_scenario(ValuationPolicy::TableDriven {
            system: LogicSystem::Kleene3,
            assignment: BTreeMap::new(),
        });
        let err = bind_and_evaluate(&parse_formula("X1").unwrap(), &sc).unwrap_err();
        assert_eq!(err, Error::UnboundAtom("X1".into()));
    }

    fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf =
            prop::sample::select(vec!["A", "B", "C", "X1", "long_name_2"]).prop_map(Formula::atom);
        leaf.prop_recursive(8, 128, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                (inner.clone(), inner).prop_map(|(a, b)| Formula::xor(a, b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(f in arb_formula()) {
            let printed = print_formula(&f);
            prop_assert_eq!(parse_formula(&printed).unwrap(), f);
        }
    }
}

//! JSON scenario documents.
//!
//! ```json
//! {
//!   "dimension": 2,
//!   "atoms": { "X1": [[[1, 0], [0, 0]]], "X2": [[[0, 0], [1, 0]]] },
//!   "state": [[0.6, 0], [0.8, 0]],
//!   "policy": "super",
//!   "assignment": { "X1": 0.5, "X2": null },
//!   "experiment": { ... }
//! }
//! ```
//!
//! Complex numbers are `[re, im]` pairs. Each atom lists the vectors spanning
//! its subspace. `assignment` feeds the table-driven policies (`kleene3`,
//! `lukasiewicz`); `null` is the truth gap. Unknown keys are rejected.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::is_atom_name;
use crate::error::{Error, Result};
use crate::experiment::{ExperimentConfig, ExperimentSpec};
use crate::lattice::Subspace;
use crate::mvl::{LogicSystem, TruthValue};
use crate::numeric::{Complex64, StateVector, Tolerance};
use crate::valuation::ValuationPolicy;

/// Policy tags accepted in files and on the command line.
pub const POLICY_NAMES: [&str; 5] = ["bivalent", "born", "super", "kleene3", "lukasiewicz"];

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub atoms: Option<BTreeMap<String, Vec<Vec<[f64; 2]>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub state: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub policy: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignment: Option<BTreeMap<String, Option<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub experiment: Option<ExperimentSpec>,
}

/// Atoms bound to subspaces, an optional state and a valuation policy.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub dimension: usize,
    pub atoms: BTreeMap<String, Subspace>,
    pub state: Option<StateVector>,
    pub policy: ValuationPolicy,
    pub tol: Tolerance,
}

pub(crate) fn complex_vec(pairs: &[[f64; 2]]) -> Vec<Complex64> {
    pairs
        .iter()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect()
}

/// Maps a policy tag to a policy, pulling degrees from `assignment` for table-driven tags.
pub fn parse_policy(
    name: &str,
    assignment: Option<&BTreeMap<String, Option<f64>>>,
) -> Result<ValuationPolicy> {
    let system = match name {
        "bivalent" => return Ok(ValuationPolicy::EigenstateBivalent),
        "born" => return Ok(ValuationPolicy::BornDegree),
        "super" => return Ok(ValuationPolicy::Supervaluation),
        "kleene3" => LogicSystem::Kleene3,
        "lukasiewicz" => LogicSystem::LukasiewiczFuzzy,
        other => {
            return Err(Error::config(
                "policy",
                format!(
                    "unknown policy `{other}` (expected one of {})",
                    POLICY_NAMES.join(", ")
                ),
            ))
        }
    };
    let mut values = BTreeMap::new();
    for (atom, value) in assignment.into_iter().flatten() {
        let t = match value {
            None => TruthValue::Undefined,
            Some(x) => TruthValue::Degree(system.legalize(*x).map_err(|_| {
                Error::config(
                    format!("assignment.{atom}"),
                    format!("{x} is not a legal {system} value"),
                )
            })?),
        };
        values.insert(atom.clone(), t);
    }
    Ok(ValuationPolicy::TableDriven {
        system,
        assignment: values,
    })
}

impl ScenarioDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Scenario(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario documents always serialize")
    }

    /// Builds the evaluation scenario; `policy_override` replaces the file's policy.
    pub fn scenario(&self, policy_override: Option<&str>, tol: Tolerance) -> Result<Scenario> {
        let dimension = self
            .dimension
            .ok_or_else(|| Error::config("dimension", "missing"))?;
        if dimension == 0 {
            return Err(Error::config("dimension", "must be positive"));
        }

        let mut atoms = BTreeMap::new();
        for (name, vectors) in self.atoms.iter().flatten() {
            if !is_atom_name(name) {
                return Err(Error::config(
                    format!("atoms.{name}"),
                    "atom names must match [A-Za-z][A-Za-z0-9_]*",
                ));
            }
            let mut span = Vec::with_capacity(vectors.len());
            for (k, v) in vectors.iter().enumerate() {
                if v.len() != dimension {
                    return Err(Error::config(
                        format!("atoms.{name}[{k}]"),
                        format!("vector has length {}, expected {dimension}", v.len()),
                    ));
                }
                span.push(complex_vec(v));
            }
            let subspace = Subspace::from_span(dimension, &span, &tol)
                .map_err(|e| Error::config(format!("atoms.{name}"), e.to_string()))?;
            atoms.insert(name.clone(), subspace);
        }

        let state = match &self.state {
            None => None,
            Some(amps) => {
                if amps.len() != dimension {
                    return Err(Error::config(
                        "state",
                        format!("length {} does not match dimension {dimension}", amps.len()),
                    ));
                }
                Some(
                    StateVector::new(complex_vec(amps), &tol)
                        .map_err(|e| Error::config("state", e.to_string()))?,
                )
            }
        };

        let policy_name = policy_override
            .or(self.policy.as_deref())
            .ok_or_else(|| Error::config("policy", "missing"))?;
        let policy = parse_policy(policy_name, self.assignment.as_ref())?;
        if state.is_none()
            && matches!(
                policy,
                ValuationPolicy::EigenstateBivalent | ValuationPolicy::BornDegree
            )
        {
            return Err(Error::config(
                "state",
                format!("required by policy `{policy_name}`"),
            ));
        }

        Ok(Scenario {
            dimension,
            atoms,
            state,
            policy,
            tol,
        })
    }

    pub fn experiment(&self, tol: &Tolerance) -> Result<ExperimentConfig> {
        let spec = self
            .experiment
            .as_ref()
            .ok_or_else(|| Error::config("experiment", "missing"))?;
        ExperimentConfig::from_spec(spec, tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_SLIT: &str = r#"{
        "dimension": 2,
        "atoms": { "X1": [[[1, 0], [0, 0]]], "X2": [[[0, 0], [1, 0]]] },
        "state": [[0.6, 0], [0.8, 0]],
        "policy": "super"
    }"#;

    #[test]
    fn loads_scenario() {
        let doc = ScenarioDocument::from_json(TWO_SLIT).unwrap();
        let sc = doc.scenario(None, Tolerance::default()).unwrap();
        assert_eq!(sc.dimension, 2);
        assert_eq!(sc.atoms.len(), 2);
        assert_eq!(sc.policy, ValuationPolicy::Supervaluation);
        let sc = doc.scenario(Some("born"), Tolerance::default()).unwrap();
        assert_eq!(sc.policy, ValuationPolicy::BornDegree);
    }

    #[test]
    fn rejects_unknown_keys() {
        let err = ScenarioDocument::from_json(r#"{"dimension": 2, "colour": 1}"#).unwrap_err();
        assert!(matches!(&err, Error::Scenario(m) if m.contains("colour")));
    }

    #[test]
    fn field_diagnostics() {
        let tol = Tolerance::default();
        let doc = ScenarioDocument::from_json(
            r#"{"dimension": 2, "atoms": {"X": [[[1, 0]]]}, "policy": "super"}"#,
        )
        .unwrap();
        let err = doc.scenario(None, tol).unwrap_err();
        assert!(matches!(&err, Error::ConfigInvalid { field, .. } if field == "atoms.X[0]"));

        let doc = ScenarioDocument::from_json(
            r#"{"dimension": 2, "state": [[1, 0], [1, 0]], "policy": "born"}"#,
        )
        .unwrap();
        let err = doc.scenario(None, tol).unwrap_err();
        assert!(matches!(&err, Error::ConfigInvalid { field, .. } if field == "state"));

        let doc = ScenarioDocument::from_json(r#"{"dimension": 2, "policy": "born"}"#).unwrap();
        assert!(doc.scenario(None, tol).is_err());

        let doc = ScenarioDocument::from_json(r#"{"dimension": 2, "policy": "fuzzy"}"#).unwrap();
        assert!(matches!(
            doc.scenario(None, tol).unwrap_err(),
            Error::ConfigInvalid { field, .. } if field == "policy"
        ));
    }

    #[test]
    fn assignment_values() {
        let doc = ScenarioDocument::from_json(
            r#"{"dimension": 1, "policy": "kleene3", "assignment": {"A": 0.5, "B": null}}"#,
        )
        .unwrap();
        let sc = doc.scenario(None, Tolerance::default()).unwrap();
        match sc.policy {
            ValuationPolicy::TableDriven { system, assignment } => {
                assert_eq!(system, LogicSystem::Kleene3);
                assert_eq!(assignment["A"], TruthValue::HALF);
                assert_eq!(assignment["B"], TruthValue::Undefined);
            }
            other => panic!("unexpected policy {other:?}"),
        }
        let doc = ScenarioDocument::from_json(
            r#"{"dimension": 1, "policy": "kleene3", "assignment": {"A": 0.3}}"#,
        )
        .unwrap();
        assert!(doc.scenario(None, Tolerance::default()).is_err());
    }
}

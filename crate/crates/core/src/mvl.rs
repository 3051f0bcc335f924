//! Truth values and many-valued connectives.
//!
//! All systems share Łukasiewicz negation `¬t = 1 − t`. Disjunction and
//! conjunction are `max`/`min` for the bivalent and Kleene systems and the
//! bounded sum / product `min(a + b, 1)`, `max(a + b − 1, 0)` for the continuum
//! Łukasiewicz system. [`TruthValue::Undefined`] is absorbing for every
//! connective.

use std::fmt;

use crate::error::{Error, Result};

/// Distance within which a degree snaps onto a legal value of a finite system.
pub const SNAP_EPS: f64 = 1e-9;

/// A truth gap or a degree of truth in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TruthValue {
    Undefined,
    Degree(f64),
}

impl TruthValue {
    pub const FALSE: TruthValue = TruthValue::Degree(0.0);
    pub const TRUE: TruthValue = TruthValue::Degree(1.0);
    pub const HALF: TruthValue = TruthValue::Degree(0.5);

    /// A validated degree.
    pub fn degree(t: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::DegreeOutOfRange(t));
        }
        Ok(TruthValue::Degree(t))
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, TruthValue::Degree(_))
    }

    pub fn as_degree(&self) -> Option<f64> {
        match *self {
            TruthValue::Degree(t) => Some(t),
            TruthValue::Undefined => None,
        }
    }

    /// Equality with degrees compared within `eps`.
    pub fn approx_eq(&self, other: &TruthValue, eps: f64) -> bool {
        match (self, other) {
            (TruthValue::Undefined, TruthValue::Undefined) => true,
            (TruthValue::Degree(a), TruthValue::Degree(b)) => (a - b).abs() <= eps,
            _ => false,
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruthValue::Undefined => write!(f, "undefined"),
            TruthValue::Degree(t) => write!(f, "{t}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LogicSystem {
    Bivalent,
    Kleene3,
    LukasiewiczFuzzy,
}

impl LogicSystem {
    pub fn name(self) -> &'static str {
        match self {
            LogicSystem::Bivalent => "bivalent",
            LogicSystem::Kleene3 => "kleene3",
            LogicSystem::LukasiewiczFuzzy => "lukasiewicz",
        }
    }

    /// The finite value set, if any.
    pub fn values(self) -> Option<&'static [f64]> {
        match self {
            LogicSystem::Bivalent => Some(&[0.0, 1.0]),
            LogicSystem::Kleene3 => Some(&[0.0, 0.5, 1.0]),
            LogicSystem::LukasiewiczFuzzy => None,
        }
    }

    /// Checks `t` against the system's value set, snapping within [`SNAP_EPS`].
    pub fn legalize(self, t: f64) -> Result<f64> {
        let illegal = Error::IllegalValueForSystem {
            value: t,
            system: self.name(),
        };
        if !t.is_finite() || !(-SNAP_EPS..=1.0 + SNAP_EPS).contains(&t) {
            return Err(illegal);
        }
        match self.values() {
            Some(values) => values
                .iter()
                .copied()
                .find(|v| (v - t).abs() <= SNAP_EPS)
                .ok_or(illegal),
            None => Ok(t.clamp(0.0, 1.0)),
        }
    }
}

impl fmt::Display for LogicSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `1 − t`.
pub fn neg(t: TruthValue) -> TruthValue {
    match t {
        TruthValue::Undefined => TruthValue::Undefined,
        TruthValue::Degree(x) => TruthValue::Degree(1.0 - x),
    }
}

fn binary(
    a: TruthValue,
    b: TruthValue,
    sys: LogicSystem,
    f: impl Fn(f64, f64) -> f64,
) -> Result<TruthValue> {
    // Operands are validated even when the other side is a gap.
    let a = a.as_degree().map(|x| sys.legalize(x)).transpose()?;
    let b = b.as_degree().map(|x| sys.legalize(x)).transpose()?;
    Ok(match (a, b) {
        (Some(x), Some(y)) => TruthValue::Degree(f(x, y)),
        _ => TruthValue::Undefined,
    })
}

pub fn disj(a: TruthValue, b: TruthValue, sys: LogicSystem) -> Result<TruthValue> {
    match sys {
        LogicSystem::Bivalent | LogicSystem::Kleene3 => binary(a, b, sys, f64::max),
        LogicSystem::LukasiewiczFuzzy => binary(a, b, sys, |x, y| (x + y).min(1.0)),
    }
}

pub fn conj(a: TruthValue, b: TruthValue, sys: LogicSystem) -> Result<TruthValue> {
    match sys {
        LogicSystem::Bivalent | LogicSystem::Kleene3 => binary(a, b, sys, f64::min),
        LogicSystem::LukasiewiczFuzzy => binary(a, b, sys, |x, y| (x + y - 1.0).max(0.0)),
    }
}

/// Exclusive disjunction composed as `(a ∨ b) ∧ ¬(a ∧ b)`.
pub fn xor_compound(a: TruthValue, b: TruthValue, sys: LogicSystem) -> Result<TruthValue> {
    let either = disj(a, b, sys)?;
    let both = conj(a, b, sys)?;
    conj(either, neg(both), sys)
}

/// True iff `t` is `0` or `1` after snapping.
pub fn is_bivalent(t: TruthValue) -> bool {
    match t {
        TruthValue::Undefined => false,
        TruthValue::Degree(x) => x.abs() <= SNAP_EPS || (x - 1.0).abs() <= SNAP_EPS,
    }
}

/// Full operation tables of a system over a grid of degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct TruthTables {
    pub system: LogicSystem,
    pub values: Vec<f64>,
    pub neg: Vec<f64>,
    /// `conj[i][j] = values[i] ∧ values[j]`, likewise for the others.
    pub conj: Vec<Vec<f64>>,
    pub disj: Vec<Vec<f64>>,
    pub xor: Vec<Vec<f64>>,
}

/// Tables over the system's value set; the continuum system uses quarter steps.
pub fn truth_tables(system: LogicSystem) -> TruthTables {
    let values: Vec<f64> = match system.values() {
        Some(v) => v.to_vec(),
        None => vec![0.0, 0.25, 0.5, 0.75, 1.0],
    };
    let deg = |t: TruthValue| {
        t.as_degree()
            .expect("defined operands give defined results")
    };
    let table = |op: fn(TruthValue, TruthValue, LogicSystem) -> Result<TruthValue>| {
        values
            .iter()
            .map(|&a| {
                values
                    .iter()
                    .map(|&b| {
                        deg(op(TruthValue::Degree(a), TruthValue::Degree(b), system)
                            .expect("grid values are legal"))
                    })
                    .collect()
            })
            .collect()
    };
    TruthTables {
        system,
        neg: values
            .iter()
            .map(|&a| deg(neg(TruthValue::Degree(a))))
            .collect(),
        conj: table(conj),
        disj: table(disj),
        xor: table(xor_compound),
        values,
    }
}

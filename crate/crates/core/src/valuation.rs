//! Valuations of lattice elements and the checks relating truth to probability.
//!
//! Four policies are available:
//!
//! | policy                | value of a subspace `S` in state `Ψ`                         |
//! |-----------------------|--------------------------------------------------------------|
//! | `EigenstateBivalent`  | `1` if `Ψ ∈ ran P_S`, `0` if `Ψ ∈ ker P_S`, otherwise a gap    |
//! | `BornDegree`          | `⟨Ψ|P_S|Ψ⟩`                                                  |
//! | `Supervaluation`      | `0` on the bottom, `1` on the top, otherwise a gap            |
//! | `TableDriven`         | atoms carry assigned degrees; no lattice element is valued   |
//!
//! Truth and probability are kept apart: [`Valuation::probability_of`] always
//! returns `⟨Ψ|P|Ψ⟩`, even where [`Valuation::value_of`] reports a gap.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lattice::{LatticeContext, Subspace};
use crate::mvl::{LogicSystem, TruthValue};
use crate::numeric::{expectation, StateVector, Tolerance};

#[derive(Debug, Clone, PartialEq)]
pub enum ValuationPolicy {
    EigenstateBivalent,
    BornDegree,
    Supervaluation,
    TableDriven {
        system: LogicSystem,
        assignment: BTreeMap<String, TruthValue>,
    },
}

impl ValuationPolicy {
    pub fn name(&self) -> &'static str {
        match self {
            ValuationPolicy::EigenstateBivalent => "bivalent",
            ValuationPolicy::BornDegree => "born",
            ValuationPolicy::Supervaluation => "super",
            ValuationPolicy::TableDriven { system, .. } => system.name(),
        }
    }

    pub fn is_lattice_backed(&self) -> bool {
        !matches!(self, ValuationPolicy::TableDriven { .. })
    }
}

#[derive(Debug, Clone)]
pub struct Valuation {
    policy: ValuationPolicy,
    state: Option<StateVector>,
    tol: Tolerance,
}

impl Valuation {
    /// `EigenstateBivalent` and `BornDegree` need a state; the other policies may omit it.
    pub fn new(
        policy: ValuationPolicy,
        state: Option<StateVector>,
        tol: Tolerance,
    ) -> Result<Self> {
        tol.validate()?;
        if state.is_none()
            && matches!(
                policy,
                ValuationPolicy::EigenstateBivalent | ValuationPolicy::BornDegree
            )
        {
            return Err(Error::NoState);
        }
        Ok(Valuation { policy, state, tol })
    }

    pub fn eigenstate_bivalent(state: StateVector, tol: Tolerance) -> Result<Self> {
        Valuation::new(ValuationPolicy::EigenstateBivalent, Some(state), tol)
    }

    pub fn born(state: StateVector, tol: Tolerance) -> Result<Self> {
        Valuation::new(ValuationPolicy::BornDegree, Some(state), tol)
    }

    pub fn supervaluation(state: Option<StateVector>, tol: Tolerance) -> Result<Self> {
        Valuation::new(ValuationPolicy::Supervaluation, state, tol)
    }

    pub fn policy(&self) -> &ValuationPolicy {
        &self.policy
    }

    pub fn state(&self) -> Option<&StateVector> {
        self.state.as_ref()
    }

    pub fn tolerance(&self) -> &Tolerance {
        &self.tol
    }

    fn check_dim(&self, s: &Subspace) -> Result<()> {
        match &self.state {
            Some(psi) if psi.dim() != s.dim_ambient() => Err(Error::DimensionMismatch {
                expected: psi.dim(),
                found: s.dim_ambient(),
            }),
            _ => Ok(()),
        }
    }

    fn require_state(&self) -> Result<&StateVector> {
        self.state.as_ref().ok_or(Error::NoState)
    }

    pub fn value_of(&self, s: &Subspace) -> Result<TruthValue> {
        self.check_dim(s)?;
        match &self.policy {
            ValuationPolicy::EigenstateBivalent => {
                let e = expectation(s.projector(), self.require_state()?, &self.tol)?;
                Ok(if e == 1.0 {
                    TruthValue::TRUE
                } else if e == 0.0 {
                    TruthValue::FALSE
                } else {
                    TruthValue::Undefined
                })
            }
            ValuationPolicy::BornDegree => Ok(TruthValue::Degree(expectation(
                s.projector(),
                self.require_state()?,
                &self.tol,
            )?)),
            ValuationPolicy::Supervaluation => Ok(if s.is_bottom() {
                TruthValue::FALSE
            } else if s.is_top() {
                TruthValue::TRUE
            } else {
                TruthValue::Undefined
            }),
            ValuationPolicy::TableDriven { .. } => Err(Error::NotLatticeBacked),
        }
    }

    fn lattice(&self, a: &Subspace) -> Result<LatticeContext> {
        LatticeContext::new(a.dim_ambient(), self.tol)
    }

    /// Value of `a ⊓ b`.
    pub fn value_of_meet(&self, a: &Subspace, b: &Subspace) -> Result<TruthValue> {
        self.check_dim(a)?;
        let m = self.lattice(a)?.meet(a, b)?;
        self.value_of(&m)
    }

    /// Value of `a ⊔ b`.
    pub fn value_of_join(&self, a: &Subspace, b: &Subspace) -> Result<TruthValue> {
        self.check_dim(a)?;
        let j = self.lattice(a)?.join(a, b)?;
        self.value_of(&j)
    }

    /// `⟨Ψ|P|Ψ⟩`, defined regardless of whether the truth value is.
    pub fn probability_of(&self, s: &Subspace) -> Result<f64> {
        if !self.policy.is_lattice_backed() {
            return Err(Error::NoState);
        }
        self.check_dim(s)?;
        expectation(s.projector(), self.require_state()?, &self.tol)
    }
}

/// Bivalent truth value, Born degree and probability of one subspace side by side.
#[derive(Debug, Clone, PartialEq)]
pub struct AgreementReport {
    pub eigenstate_value: TruthValue,
    pub born_value: TruthValue,
    pub probability: f64,
    pub agree: bool,
}

/// Agreement holds only when the bivalent value exists and matches both others.
pub fn agreement_report(
    state: &StateVector,
    s: &Subspace,
    tol: &Tolerance,
) -> Result<AgreementReport> {
    let bivalent = Valuation::eigenstate_bivalent(state.clone(), *tol)?;
    let born = Valuation::born(state.clone(), *tol)?;
    let eigenstate_value = bivalent.value_of(s)?;
    let born_value = born.value_of(s)?;
    let probability = born.probability_of(s)?;
    let agree = match eigenstate_value {
        TruthValue::Degree(t) => {
            born_value.approx_eq(&eigenstate_value, tol.eq) && (t - probability).abs() <= tol.eq
        }
        TruthValue::Undefined => false,
    };
    Ok(AgreementReport {
        eigenstate_value,
        born_value,
        probability,
        agree,
    })
}

/// Born degrees of join and meet against the Łukasiewicz bounded sum and product.
#[derive(Debug, Clone, PartialEq)]
pub struct CoincidenceReport {
    pub join_matches: bool,
    pub meet_matches: bool,
    pub lhs_join: f64,
    pub rhs_join: f64,
    pub lhs_meet: f64,
    pub rhs_meet: f64,
}

pub fn lukasiewicz_coincidence_check(
    state: &StateVector,
    a: &Subspace,
    b: &Subspace,
    tol: &Tolerance,
) -> Result<CoincidenceReport> {
    let born = Valuation::born(state.clone(), *tol)?;
    let degree = |t: TruthValue| t.as_degree().expect("Born degrees are always defined");
    let va = degree(born.value_of(a)?);
    let vb = degree(born.value_of(b)?);
    let lhs_join = degree(born.value_of_join(a, b)?);
    let lhs_meet = degree(born.value_of_meet(a, b)?);
    let rhs_join = (va + vb).min(1.0);
    let rhs_meet = (va + vb - 1.0).max(0.0);
    Ok(CoincidenceReport {
        join_matches: (lhs_join - rhs_join).abs() <= tol.eq,
        meet_matches: (lhs_meet - rhs_meet).abs() <= tol.eq,
        lhs_join,
        rhs_join,
        lhs_meet,
        rhs_meet,
    })
}

/// `ℙ[a ⊔ b]` against `ℙ[a] + ℙ[b]` for mutually exclusive `a`, `b`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlternativesReport {
    pub p_join: f64,
    pub p_sum: f64,
    pub holds: bool,
}

pub fn law_of_alternatives_check(
    state: &StateVector,
    a: &Subspace,
    b: &Subspace,
    tol: &Tolerance,
) -> Result<AlternativesReport> {
    let lattice = LatticeContext::new(a.dim_ambient(), *tol)?;
    if !lattice.meet(a, b)?.is_bottom() {
        return Err(Error::PreconditionViolation(
            "law of alternatives needs a ⊓ b = 0".into(),
        ));
    }
    let born = Valuation::born(state.clone(), *tol)?;
    let p_join = born.probability_of(&lattice.join(a, b)?)?;
    let p_sum = born.probability_of(a)? + born.probability_of(b)?;
    Ok(AlternativesReport {
        p_join,
        p_sum,
        holds: (p_join - p_sum).abs() <= tol.eq,
    })
}

//! Truth values of quantum propositions.
//!
//! Propositions about a finite-dimensional quantum system are bound to closed
//! subspaces (orthogonal projectors) of its Hilbert space. The crate values them
//! under four semantics:
//!
//! - **bivalent** on eigenstates, with a truth gap everywhere else,
//! - **Born degree** `⟨Ψ|P|Ψ⟩` read as a many-valued truth degree,
//! - **table-driven** Kleene / Łukasiewicz connectives over assigned degrees,
//! - **supervaluation**, where only the bottom and top subspaces carry values.
//!
//! Modules, bottom-up:
//!
//! - [`numeric`]: complex matrices, states, projectors, spectral decomposition.
//! - [`lattice`]: meet, join, orthocomplement, order and compatibility in `L(ℋ)`.
//! - [`mvl`]: truth values and many-valued connectives.
//! - [`valuation`]: the four semantics and the truth/probability checks.
//! - [`formula`]: formula parser, printer, scenario files and evaluation.
//! - [`experiment`]: interference patterns, which-way sampling, commutator lab.
//! - [`cli`]: the `qtruth` command-line front end.

pub mod cli;
pub mod error;
pub mod experiment;
pub mod formula;
pub mod lattice;
pub mod mvl;
pub mod numeric;
pub mod valuation;

pub use error::{Error, Result};

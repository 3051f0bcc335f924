//! Which-way interference experiments and the commutator lab.
//!
//! A particle passes one of `n` distinguishable paths and lands on a screen of
//! `M` cells. The composite space is `ℂⁿ ⊗ ℂᴹ` with the path as the slow index;
//! the prepared state is `Σ c_i |i⟩ ⊗ |φ_i⟩`.
//!
//! Path wavefunctions must be mutually orthogonal as vectors (they are unitary
//! images of orthogonal slit states) but may overlap cell by cell, which is
//! where interference lives.

mod commutator;
mod patterns;
mod rng;
mod which_way;

pub use commutator::{
    commutator_sweep, verify_spectral_commutator_identity, CommutatorIdentityReport,
    OperatorFamily, SweepRow, MAX_SWEEP_DIM,
};
pub use patterns::{build_state, conditional_pattern, run_patterns, PatternReport, RegionProbs};
pub use rng::{WhichWayRng, DEFAULT_SEED};
pub use which_way::{simulate_which_way, simulate_which_way_with, WhichWayReport};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::is_atom_name;
use crate::numeric::{Complex64, Tolerance};

/// Named set of screen cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Region {
    pub name: String,
    pub cells: Vec<usize>,
}

/// The `"experiment"` object of a scenario document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub n_paths: usize,
    pub amplitudes: Vec<[f64; 2]>,
    pub screen_cells: usize,
    pub path_wavefunctions: Vec<Vec<[f64; 2]>>,
    #[serde(default)]
    pub regions: Vec<Region>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// A validated experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub(crate) amplitudes: Vec<Complex64>,
    pub(crate) screen_cells: usize,
    pub(crate) path_wavefunctions: Vec<Vec<Complex64>>,
    pub(crate) regions: Vec<Region>,
    pub(crate) seed: u64,
    pub(crate) tol: Tolerance,
}

fn sq_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

impl ExperimentConfig {
    pub fn new(
        amplitudes: Vec<Complex64>,
        screen_cells: usize,
        path_wavefunctions: Vec<Vec<Complex64>>,
        regions: Vec<Region>,
        seed: u64,
        tol: &Tolerance,
    ) -> Result<Self> {
        let n = amplitudes.len();
        if n < 2 {
            return Err(Error::config("n_paths", "at least two paths are required"));
        }
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::config("amplitudes", "non-finite amplitude"));
        }
        let total = sq_norm(&amplitudes);
        if (total - 1.0).abs() > tol.norm {
            return Err(Error::config(
                "amplitudes",
                format!("Σ|c_i|² = {total}, expected 1"),
            ));
        }
        if screen_cells < 2 {
            return Err(Error::config(
                "screen_cells",
                "at least two cells are required",
            ));
        }
        if path_wavefunctions.len() != n {
            return Err(Error::config(
                "path_wavefunctions",
                format!("{} wavefunctions for {n} paths", path_wavefunctions.len()),
            ));
        }
        for (i, phi) in path_wavefunctions.iter().enumerate() {
            let field = format!("path_wavefunctions[{i}]");
            if phi.len() != screen_cells {
                return Err(Error::config(
                    field,
                    format!(
                        "length {} does not match screen_cells {screen_cells}",
                        phi.len()
                    ),
                ));
            }
            if phi.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::config(field, "non-finite amplitude"));
            }
            let norm = sq_norm(phi).sqrt();
            if (norm - 1.0).abs() > tol.norm {
                return Err(Error::config(field, format!("norm {norm}, expected 1")));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let overlap: Complex64 = path_wavefunctions[i]
                    .iter()
                    .zip(&path_wavefunctions[j])
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                if overlap.norm() > tol.norm {
                    return Err(Error::config(
                        format!("path_wavefunctions[{i}], path_wavefunctions[{j}]"),
                        format!(
                            "overlap |⟨φ_{i}|φ_{j}⟩| = {:e}; path wavefunctions must be orthogonal",
                            overlap.norm()
                        ),
                    ));
                }
            }
        }
        for (k, region) in regions.iter().enumerate() {
            if !is_atom_name(&region.name) {
                return Err(Error::config(
                    format!("regions[{k}].name"),
                    "names must match [A-Za-z][A-Za-z0-9_]*",
                ));
            }
            if let Some(&bad) = region.cells.iter().find(|&&c| c >= screen_cells) {
                return Err(Error::config(
                    format!("regions[{k}].cells"),
                    format!("cell {bad} is outside 0..{screen_cells}"),
                ));
            }
        }
        Ok(ExperimentConfig {
            amplitudes,
            screen_cells,
            path_wavefunctions,
            regions,
            seed,
            tol: *tol,
        })
    }

    pub fn from_spec(spec: &ExperimentSpec, tol: &Tolerance) -> Result<Self> {
        if spec.amplitudes.len() != spec.n_paths {
            return Err(Error::config(
                "amplitudes",
                format!(
                    "{} amplitudes for n_paths = {}",
                    spec.amplitudes.len(),
                    spec.n_paths
                ),
            ));
        }
        let convert = |v: &[[f64; 2]]| -> Vec<Complex64> {
            v.iter().map(|&[re, im]| Complex64::new(re, im)).collect()
        };
        ExperimentConfig::new(
            convert(&spec.amplitudes),
            spec.screen_cells,
            spec.path_wavefunctions.iter().map(|v| convert(v)).collect(),
            spec.regions.clone(),
            spec.seed.unwrap_or(DEFAULT_SEED),
            tol,
        )
    }

    pub fn n_paths(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn screen_cells(&self) -> usize {
        self.screen_cells
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn path_wavefunction(&self, i: usize) -> Option<&[Complex64]> {
        self.path_wavefunctions.get(i).map(|v| v.as_slice())
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn tolerance(&self) -> &Tolerance {
        &self.tol
    }
}

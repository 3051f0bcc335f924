use serde::Serialize;

use super::ExperimentConfig;
use crate::error::{Error, Result};
use crate::numeric::{StateVector, TensorProduct};

/// `Σ c_i |i⟩ ⊗ |φ_i⟩` in the `n·M`-dimensional composite space.
pub fn build_state(cfg: &ExperimentConfig) -> Result<StateVector> {
    let n = cfg.n_paths();
    let mut amplitudes = vec![num_complex::Complex64::new(0.0, 0.0); n * cfg.screen_cells];
    for (i, (&c, phi)) in cfg
        .amplitudes
        .iter()
        .zip(&cfg.path_wavefunctions)
        .enumerate()
    {
        let path = StateVector::basis(n, i)?;
        let screen = StateVector::normalized(phi.clone())?;
        let branch = path.tensor(&screen);
        for (slot, z) in amplitudes.iter_mut().zip(branch.amplitudes()) {
            *slot += c * z;
        }
    }
    StateVector::new(amplitudes, &cfg.tol)
}

/// `|φ_i(cell)|²`: the screen pattern with only path `i` open.
pub fn conditional_pattern(cfg: &ExperimentConfig, i: usize) -> Result<Vec<f64>> {
    let phi = cfg
        .path_wavefunctions
        .get(i)
        .ok_or(Error::IndexOutOfRange {
            index: i,
            len: cfg.n_paths(),
        })?;
    Ok(phi.iter().map(|z| z.norm_sqr()).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionProbs {
    pub name: String,
    pub coherent: f64,
    pub mixture: f64,
    /// `ℙ[R | path i]` for each path.
    pub conditional: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PatternReport {
    /// `|Σ_i c_i φ_i(cell)|²`: no which-way information recorded.
    pub coherent: Vec<f64>,
    /// `Σ_i |c_i|² |φ_i(cell)|²`: which-way detectors present.
    pub mixture: Vec<f64>,
    /// `2 Re Σ_{i<j} c_i c̄_j φ_i(cell) φ̄_j(cell)`.
    pub interference_term: Vec<f64>,
    pub region_probs: Vec<RegionProbs>,
}

pub fn run_patterns(cfg: &ExperimentConfig) -> Result<PatternReport> {
    let n = cfg.n_paths();
    let m = cfg.screen_cells;
    let c = &cfg.amplitudes;
    let phi = &cfg.path_wavefunctions;

    let mut coherent = Vec::with_capacity(m);
    let mut mixture = Vec::with_capacity(m);
    let mut interference_term = Vec::with_capacity(m);
    #[allow(clippy::needless_range_loop)]
    for cell in 0..m {
        let sum: num_complex::Complex64 = (0..n).map(|i| c[i] * phi[i][cell]).sum();
        coherent.push(sum.norm_sqr());
        mixture.push(
            (0..n)
                .map(|i| c[i].norm_sqr() * phi[i][cell].norm_sqr())
                .sum(),
        );
        let mut cross = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                cross += (c[i] * c[j].conj() * phi[i][cell] * phi[j][cell].conj()).re;
            }
        }
        interference_term.push(2.0 * cross);
    }

    let conditionals: Vec<Vec<f64>> = (0..n)
        .map(|i| conditional_pattern(cfg, i))
        .collect::<Result<_>>()?;
    let region_probs = cfg
        .regions
        .iter()
        .map(|region| {
            let sum = |p: &[f64]| region.cells.iter().map(|&k| p[k]).sum::<f64>();
            RegionProbs {
                name: region.name.clone(),
                coherent: sum(&coherent),
                mixture: sum(&mixture),
                conditional: conditionals.iter().map(|p| sum(p)).collect(),
            }
        })
        .collect();

    Ok(PatternReport {
        coherent,
        mixture,
        interference_term,
        region_probs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::Region;
    use crate::numeric::{expectation, Complex64, Projector, Tolerance};

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn config(amps: Vec<f64>, phis: Vec<Vec<f64>>, regions: Vec<Region>) -> ExperimentConfig {
        let m = phis[0].len();
        ExperimentConfig::new(
            amps.into_iter().map(c).collect(),
            m,
            phis.into_iter()
                .map(|p| p.into_iter().map(c).collect())
                .collect(),
            regions,
            1,
            &Tolerance::default(),
        )
        .unwrap()
    }

    #[test]
    fn build_state_examples() {
        let cfg = config(vec![1.0, 0.0], vec![vec![1.0, 0.0], vec![0.0, 1.0]], vec![]);
        let psi = build_state(&cfg).unwrap();
        assert_eq!(psi, StateVector::basis(4, 0).unwrap());

        let cfg = config(vec![0.6, 0.8], vec![vec![1.0, 0.0], vec![0.0, 1.0]], vec![]);
        let psi = build_state(&cfg).unwrap();
        let expected = [0.6, 0.0, 0.0, 0.8];
        for (z, e) in psi.amplitudes().iter().zip(expected) {
            assert!((z - c(e)).norm() < 1e-15);
        }
    }

    #[test]
    fn conditional_examples() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let cfg = config(
            vec![h, h],
            vec![
                vec![0.0, 0.0, 1.0, 0.0],
                vec![0.5, 0.5, 0.0, 0.5 * 2f64.sqrt()],
            ],
            vec![],
        );
        assert_eq!(
            conditional_pattern(&cfg, 0).unwrap(),
            vec![0.0, 0.0, 1.0, 0.0]
        );
        assert!(matches!(
            conditional_pattern(&cfg, 2),
            Err(Error::IndexOutOfRange { .. })
        ));

        let cfg = config(
            vec![h, h],
            vec![vec![0.5, 0.5, 0.5, 0.5], vec![0.5, -0.5, 0.5, -0.5]],
            vec![],
        );
        assert_eq!(conditional_pattern(&cfg, 1).unwrap(), vec![0.25; 4]);

        let cfg = config(
            vec![h, h],
            vec![
                vec![0.25f64.sqrt(), 0.75f64.sqrt()],
                vec![0.75f64.sqrt(), -0.25f64.sqrt()],
            ],
            vec![],
        );
        let p = conditional_pattern(&cfg, 0).unwrap();
        assert!((p[0] - 0.25).abs() < 1e-15 && (p[1] - 0.75).abs() < 1e-15);
    }

    #[test]
    fn non_overlapping_paths_do_not_interfere() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let cfg = config(
            vec![h, h],
            vec![vec![1.0, 0.0, 0.0], vec![0.0, 0.6, 0.8]],
            vec![Region {
                name: "R".into(),
                cells: vec![0, 1],
            }],
        );
        let report = run_patterns(&cfg).unwrap();
        assert!(report.interference_term.iter().all(|&x| x == 0.0));
        for (a, b) in report.coherent.iter().zip(&report.mixture) {
            assert!((a - b).abs() < 1e-15);
        }
        let r = &report.region_probs[0];
        let half_sum = 0.5 * (r.conditional[0] + r.conditional[1]);
        assert!((r.mixture - half_sum).abs() < 1e-15);
    }

    #[test]
    fn two_cell_eraser() {
        // φ₁ = (1,1)/√2, φ₂ = (1,−1)/√2, equal amplitudes: all weight lands in cell 0.
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let cfg = config(vec![h, h], vec![vec![h, h], vec![h, -h]], vec![]);
        let report = run_patterns(&cfg).unwrap();
        assert!((report.coherent[0] - 1.0).abs() < 1e-15);
        assert!(report.coherent[1].abs() < 1e-15);
        assert!((report.mixture[0] - 0.5).abs() < 1e-15);
        assert!((report.interference_term[0] - 0.5).abs() < 1e-15);
        assert!((report.interference_term[1] + 0.5).abs() < 1e-15);
    }

    #[test]
    fn mixture_is_the_screen_marginal_of_the_marked_state() {
        let s = 1.0 / 3f64.sqrt();
        let cfg = config(
            vec![0.6, 0.8],
            vec![
                vec![s, s, s],
                vec![
                    0.0,
                    std::f64::consts::FRAC_1_SQRT_2,
                    -std::f64::consts::FRAC_1_SQRT_2,
                ],
            ],
            vec![],
        );
        let psi = build_state(&cfg).unwrap();
        let report = run_patterns(&cfg).unwrap();
        let tol = Tolerance::default();
        for cell in 0..3 {
            let screen = Projector::coordinate(3, &[cell]).unwrap();
            let marginal = Projector::identity(2).kron(&screen);
            let p = expectation(&marginal, &psi, &tol).unwrap();
            assert!((p - report.mixture[cell]).abs() < 1e-14);
        }
    }
}

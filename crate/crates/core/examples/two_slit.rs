//! Interference with no which-way record, the mixture with detectors present,
//! and the bivalence that follows each detector click.

use quantum_truth::experiment::{
    conditional_pattern, run_patterns, simulate_which_way, ExperimentConfig, Region,
};
use quantum_truth::numeric::{Complex64, Tolerance};

fn main() -> quantum_truth::Result<()> {
    let m = 8;
    // Two Fourier modes: orthogonal as vectors, overlapping on every cell.
    let mode = |k: usize| -> Vec<Complex64> {
        (0..m)
            .map(|x| {
                let angle = 2.0 * std::f64::consts::PI * (k * x) as f64 / m as f64;
                Complex64::from_polar(1.0 / (m as f64).sqrt(), angle)
            })
            .collect()
    };
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let cfg = ExperimentConfig::new(
        vec![h, h],
        m,
        vec![mode(1), mode(2)],
        vec![Region {
            name: "Left".into(),
            cells: vec![0, 1, 2, 3],
        }],
        7,
        &Tolerance::default(),
    )?;

    let report = run_patterns(&cfg)?;
    println!("cell  coherent  mixture  interference");
    for k in 0..m {
        println!(
            "{k:>4}  {:>8.4}  {:>7.4}  {:>12.4}",
            report.coherent[k], report.mixture[k], report.interference_term[k]
        );
    }
    let left = &report.region_probs[0];
    println!(
        "Left: coherent {:.4}, mixture {:.4}, ½(P[L|X1] + P[L|X2]) = {:.4}",
        left.coherent,
        left.mixture,
        0.5 * (left.conditional[0] + left.conditional[1])
    );
    let p1: Vec<String> = conditional_pattern(&cfg, 0)?
        .iter()
        .map(|p| format!("{p:.3}"))
        .collect();
    println!("P[cell | X1] = [{}]", p1.join(", "));

    let ww = simulate_which_way(&cfg, 10_000)?;
    println!(
        "which-way: clicks {:?}, exactly one detector true every time: {}, compound true every time: {}",
        ww.clicks, ww.post_click_bivalent, ww.xor_always_true
    );
    Ok(())
}

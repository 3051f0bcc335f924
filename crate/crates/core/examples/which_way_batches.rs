//! Deterministic parallel which-way batches from split generator streams.

use std::thread;

use quantum_truth::experiment::{simulate_which_way_with, ExperimentConfig, WhichWayRng};
use quantum_truth::numeric::{Complex64, Tolerance};

fn main() -> quantum_truth::Result<()> {
    let c = |x: f64| Complex64::new(x, 0.0);
    let cfg = ExperimentConfig::new(
        vec![c(0.6), c(0.0), c(0.8)],
        3,
        vec![
            vec![c(1.0), c(0.0), c(0.0)],
            vec![c(0.0), c(1.0), c(0.0)],
            vec![c(0.0), c(0.0), c(1.0)],
        ],
        vec![],
        2024,
        &Tolerance::default(),
    )?;

    let root = WhichWayRng::new(cfg.seed());
    let handles: Vec<_> = (0..4u64)
        .map(|stream| {
            let cfg = cfg.clone();
            let mut rng = root.split(stream);
            thread::spawn(move || simulate_which_way_with(&cfg, 2_500, &mut rng))
        })
        .collect();

    let mut totals = vec![0u64; cfg.n_paths()];
    for (stream, handle) in handles.into_iter().enumerate() {
        let report = handle.join().expect("batch thread")?;
        println!("stream {stream}: clicks {:?}", report.clicks);
        for (t, k) in totals.iter_mut().zip(&report.clicks) {
            *t += k;
        }
    }
    println!("total {totals:?}; expected fractions 0.36, 0, 0.64");
    Ok(())
}

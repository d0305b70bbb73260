//! Seeded random search for catalysts of growing dimension.
//!
//! Draws incomparable pairs that pass the necessary conditions and counts
//! how many get a catalyst at each dimension with a fixed sample budget.

use entcat::catalysis::necessary_conditions;
use entcat::search::{search, SearchConfig, SearchOutcome};
use entcat::{NumericConfig, SchmidtSpectrum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_spectrum(rng: &mut ChaCha8Rng, dim: usize, cfg: &NumericConfig) -> SchmidtSpectrum {
    let raw: Vec<f64> = (0..dim).map(|_| rng.random::<f64>()).collect();
    SchmidtSpectrum::renormalized(&raw, cfg).expect("positive entries")
}

fn main() -> entcat::Result<()> {
    let cfg = NumericConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);

    let mut pairs = Vec::new();
    while pairs.len() < 20 {
        let src = random_spectrum(&mut rng, 4, &cfg);
        let tgt = random_spectrum(&mut rng, 4, &cfg);
        if necessary_conditions(&src, &tgt, &cfg).passes {
            pairs.push((src, tgt));
        }
    }

    for p in 2..=4 {
        let mut hits = 0;
        let mut pruned = 0;
        for (i, (src, tgt)) in pairs.iter().enumerate() {
            let sc = SearchConfig::random(p, 5_000, cfg.with_seed(i as u64));
            match search(src, tgt, &sc)? {
                SearchOutcome::Found { .. } => hits += 1,
                SearchOutcome::NotFound { samples_pruned, .. } => pruned += samples_pruned,
                _ => {}
            }
        }
        println!(
            "p = {p}: catalyst found for {hits}/{} pairs, {pruned} samples pruned in misses",
            pairs.len()
        );
    }

    let jp = (
        SchmidtSpectrum::new(&[0.4, 0.4, 0.1, 0.1], &cfg)?,
        SchmidtSpectrum::new(&[0.5, 0.25, 0.25], &cfg)?,
    );
    let sc = SearchConfig::random(3, 5_000, cfg.with_seed(7));
    if let SearchOutcome::Found {
        catalyst,
        samples_tested,
        ..
    } = search(&jp.0, &jp.1, &sc)?
    {
        println!("JP pair, p = 3: {catalyst} after {samples_tested} tests");
    }
    Ok(())
}

//! A state that is not a full catalyst can still raise the success
//! probability. Searches for catalysts reaching a chosen probability.

use entcat::catalysis::quasi_pmax;
use entcat::search::{search, SearchConfig, SearchOutcome};
use entcat::transform::pmax;
use entcat::{NumericConfig, SchmidtSpectrum};

fn main() -> entcat::Result<()> {
    let cfg = NumericConfig::default().with_seed(3);
    let src = SchmidtSpectrum::new(&[0.31, 0.31, 0.30, 0.04, 0.04], &cfg)?;
    let tgt = SchmidtSpectrum::new(&[0.48, 0.24, 0.14, 0.14, 0.0], &cfg)?;
    println!("unassisted: {:.6}", pmax(&src, &tgt, &cfg));

    for x in [0.6, 0.75, 0.9] {
        let cand = SchmidtSpectrum::new(&[x, 1.0 - x], &cfg)?;
        println!("with {cand}: {:.6}", quasi_pmax(&src, &tgt, &cand, &cfg));
    }

    for target in [0.8, 0.9, 0.95, 1.0] {
        let sc = SearchConfig::random(2, 20_000, cfg).with_target_probability(target);
        match search(&src, &tgt, &sc)? {
            SearchOutcome::Found {
                catalyst,
                probability,
                ..
            } => {
                println!("P' = {target}: {catalyst} reaches {probability:.6}")
            }
            other => println!("P' = {target}: {}", other.kind()),
        }
    }
    Ok(())
}

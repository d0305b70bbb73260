//! Quick screen that rules out catalysis for most pairs before any search.

use entcat::catalysis::necessary_conditions;
use entcat::{NumericConfig, SchmidtSpectrum};

fn main() -> entcat::Result<()> {
    let cfg = NumericConfig::default();
    let cases: [(&str, &[f64], &[f64]); 4] = [
        (
            "worked pair",
            &[0.31, 0.31, 0.30, 0.04, 0.04],
            &[0.48, 0.24, 0.14, 0.14, 0.0],
        ),
        ("sharper source", &[0.6, 0.3, 0.1], &[0.5, 0.4, 0.1]),
        ("flatter target", &[0.5, 0.45, 0.05], &[0.55, 0.25, 0.2]),
        ("already comparable", &[0.5, 0.5], &[0.9, 0.1]),
    ];

    for (label, src, tgt) in cases {
        let src = SchmidtSpectrum::new(src, &cfg)?;
        let tgt = SchmidtSpectrum::new(tgt, &cfg)?;
        let screen = necessary_conditions(&src, &tgt, &cfg);
        if screen.passes {
            println!("{label}: passes, a catalyst may exist");
        } else {
            println!("{label}: ruled out by {}", screen.failures().join(", "));
        }
    }
    Ok(())
}

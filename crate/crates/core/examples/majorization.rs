//! Deterministic convertibility between pure states, decided by comparing
//! prefix sums of their Schmidt coefficients.

use entcat::transform::{analyze, classify};
use entcat::{NumericConfig, SchmidtSpectrum};

fn main() -> entcat::Result<()> {
    let cfg = NumericConfig::default();
    let source = SchmidtSpectrum::new(&[0.31, 0.31, 0.30, 0.04, 0.04], &cfg)?;
    let target = SchmidtSpectrum::new(&[0.48, 0.24, 0.14, 0.14, 0.0], &cfg)?;

    let report = analyze(&source, &target, &cfg);
    println!("source {source}  H = {:.6} bits", report.entropy_source);
    println!("target {target}  H = {:.6} bits", report.entropy_target);
    println!("classification: {}", report.classification.as_str());

    match target.majorizes(&source, &cfg).first_violation() {
        Some(l) => println!("source -> target fails at prefix length {l}"),
        None => println!("source -> target is deterministic"),
    }

    // Input order does not matter, coefficients are sorted on construction.
    let shuffled = SchmidtSpectrum::new(&[0.04, 0.30, 0.31, 0.04, 0.31], &cfg)?;
    println!(
        "source vs its permutation: {}",
        classify(&source, &shuffled, &cfg).as_str()
    );

    let flatter = SchmidtSpectrum::new(&[0.7, 0.3], &cfg)?;
    let sharper = SchmidtSpectrum::new(&[0.9, 0.1], &cfg)?;
    println!(
        "{flatter} vs {sharper}: {}",
        classify(&flatter, &sharper, &cfg).as_str()
    );
    Ok(())
}

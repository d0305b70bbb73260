//! Limits on the smallest coefficient of any catalyst of a given dimension,
//! for full catalysis and for a catalyst that only raises the probability.

use entcat::catalysis::{corollary2_bound, min_largest_coefficient_p2, theorem1_bound};
use entcat::transform::pmax;
use entcat::{NumericConfig, SchmidtSpectrum};

fn main() -> entcat::Result<()> {
    let cfg = NumericConfig::default();
    let src = SchmidtSpectrum::new(&[0.31, 0.31, 0.30, 0.04, 0.04], &cfg)?;
    let tgt = SchmidtSpectrum::new(&[0.48, 0.24, 0.14, 0.14, 0.0], &cfg)?;
    let p_max = pmax(&src, &tgt, &cfg);
    println!("P_max = {p_max:.12}");

    for p in 2..=5 {
        println!(
            "p = {p}: smallest coefficient <= {:.6}",
            theorem1_bound(p_max, p)?
        );
    }
    println!(
        "a 2x2 catalyst needs its largest coefficient >= {:.12}",
        min_largest_coefficient_p2(p_max)
    );

    println!("\nraising the probability to P':");
    for target in [0.6, 0.7, 0.8, 0.9, 1.0] {
        let scaled = corollary2_bound(p_max, target, 2)?;
        println!("  P' = {target:.1}: 2*gamma_2 <= {scaled:.6}");
    }
    Ok(())
}

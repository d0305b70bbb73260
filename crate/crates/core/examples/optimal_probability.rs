//! Best success probability of a conversion, and how it changes when
//! several copies are converted together.

use entcat::transform::{optimal_probability, pmax_multicopy};
use entcat::{NumericConfig, SchmidtSpectrum};

fn main() -> entcat::Result<()> {
    let cfg = NumericConfig::default();
    let pairs = [
        (
            vec![0.31, 0.31, 0.30, 0.04, 0.04],
            vec![0.48, 0.24, 0.14, 0.14, 0.0],
        ),
        (vec![0.4, 0.4, 0.1, 0.1], vec![0.5, 0.25, 0.25]),
        (vec![0.8, 0.2], vec![0.5, 0.5]),
    ];

    for (src, tgt) in &pairs {
        let src = SchmidtSpectrum::new(src, &cfg)?;
        let tgt = SchmidtSpectrum::new(tgt, &cfg)?;
        let single = optimal_probability(&src, &tgt, &cfg);
        println!("{src} -> {tgt}");
        println!(
            "  P_max = {:.12} (tightest at l = {})",
            single.value, single.witness
        );
        for copies in 2..=3 {
            let multi = pmax_multicopy(&src, &tgt, copies, &cfg)?;
            println!("  {copies} copies: {:.12}", multi.value);
        }
    }
    Ok(())
}

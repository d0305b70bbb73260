//! Checks candidate catalysts against a pair and reports how close each one
//! comes to the dimension bound.

use entcat::catalysis::{is_catalyst, quasi_pmax};
use entcat::{NumericConfig, SchmidtSpectrum};

fn show(src: &SchmidtSpectrum, tgt: &SchmidtSpectrum, cand: &SchmidtSpectrum, cfg: &NumericConfig) {
    let v = is_catalyst(src, tgt, cand, cfg);
    print!("{src} -> {tgt} with {cand}: ");
    if v.is_catalyst {
        print!("catalyst");
        if v.saturated {
            print!(" (saturates p*gamma_p = P_max = {:.6})", v.pmax_pair);
        }
        println!();
    } else {
        println!(
            "fails at prefix {}, probability with it attached {:.6}",
            v.first_violation.unwrap_or(0),
            quasi_pmax(src, tgt, cand, cfg)
        );
    }
}

fn main() -> entcat::Result<()> {
    let cfg = NumericConfig::default();
    let spec = |v: &[f64]| SchmidtSpectrum::new(v, &cfg);

    let jp_src = spec(&[0.4, 0.4, 0.1, 0.1])?;
    let jp_tgt = spec(&[0.5, 0.25, 0.25])?;
    show(&jp_src, &jp_tgt, &spec(&[0.6, 0.4])?, &cfg);
    show(&jp_src, &jp_tgt, &spec(&[0.7, 0.3])?, &cfg);

    let alpha = spec(&[0.31, 0.31, 0.30, 0.04, 0.04])?;
    let beta = spec(&[0.48, 0.24, 0.14, 0.14, 0.0])?;
    show(&alpha, &beta, &spec(&[0.75, 0.25])?, &cfg);
    // The target itself works as a catalyst here.
    show(&alpha, &beta, &beta, &cfg);
    Ok(())
}

//! Exact answer to "is there any 2x2 catalyst?", either the full set of
//! working catalysts or a certificate that none exists.

use entcat::search::{search_exact_p2, SearchOutcome};
use entcat::{NumericConfig, SchmidtSpectrum};

fn main() -> entcat::Result<()> {
    let cfg = NumericConfig::default();
    let pairs = [
        ("JP pair", vec![0.4, 0.4, 0.1, 0.1], vec![0.5, 0.25, 0.25]),
        (
            "worked pair",
            vec![0.31, 0.31, 0.30, 0.04, 0.04],
            vec![0.48, 0.24, 0.14, 0.14, 0.0],
        ),
        ("deterministic", vec![0.5, 0.5], vec![0.8, 0.2]),
    ];
    for (label, src, tgt) in pairs {
        let src = SchmidtSpectrum::new(&src, &cfg)?;
        let tgt = SchmidtSpectrum::new(&tgt, &cfg)?;
        match search_exact_p2(&src, &tgt, &cfg)? {
            SearchOutcome::FoundInterval {
                intervals,
                breakpoints_examined,
            } => {
                println!("{label}: (x, 1-x) works for");
                for iv in intervals {
                    println!("  x in [{:.12}, {:.12}]", iv.lower, iv.upper);
                }
                println!("  ({breakpoints_examined} breakpoints)");
            }
            SearchOutcome::NonExistence {
                breakpoints_examined,
            } => {
                println!("{label}: no 2x2 catalyst ({breakpoints_examined} breakpoints checked)")
            }
            other => println!("{label}: {}", other.kind()),
        }
    }
    Ok(())
}

//! Pure bipartite entanglement transformations on Schmidt spectra.
//!
//! Every LOCC-relevant property of a pure bipartite state is carried by its
//! ordered Schmidt coefficients, so this crate works entirely with sorted
//! probability vectors ([`SchmidtSpectrum`]) and never touches state vectors.
//!
//! The modules build on each other:
//!
//! - [`spectra`]: the spectrum type, tensor products, entropy and majorization.
//! - [`transform`]: deterministic convertibility, classification of pairs and
//!   the optimal single-shot conversion probability with its monotone table.
//! - [`catalysis`]: necessary conditions for catalysable pairs, catalyst
//!   verification and the upper bounds a working catalyst must respect.
//! - [`search`]: exact 2×2 catalyst feasibility by breakpoint enumeration and
//!   seeded randomized search for larger catalysts.
//! - [`report`] and [`cli`]: the line-oriented report document and the
//!   command-line front end behind the `entcat` binary.
//!
//! ```
//! use entcat::{catalysis, transform, NumericConfig, SchmidtSpectrum};
//!
//! let cfg = NumericConfig::default();
//! let src = SchmidtSpectrum::new(&[0.4, 0.4, 0.1, 0.1], &cfg).unwrap();
//! let tgt = SchmidtSpectrum::new(&[0.5, 0.25, 0.25, 0.0], &cfg).unwrap();
//! let cand = SchmidtSpectrum::new(&[0.6, 0.4], &cfg).unwrap();
//!
//! assert!(!transform::nielsen_transformable(&src, &tgt, &cfg));
//! let verdict = catalysis::is_catalyst(&src, &tgt, &cand, &cfg);
//! assert!(verdict.is_catalyst && verdict.saturated);
//! ```

pub mod catalysis;
pub mod cli;
mod error;
mod numeric;
pub mod report;
pub mod search;
pub mod spectra;
pub mod transform;

pub use error::{Error, Result};
pub use numeric::NumericConfig;
pub use spectra::{Majorization, SchmidtSpectrum};

//! Entanglement-assisted conversion: screening, verification and bounds.
//!
//! A catalyst `c` turns an impossible deterministic conversion `src → tgt`
//! into a possible one `src ⊗ c → tgt ⊗ c`. Any working catalyst of
//! dimension `p` with smallest coefficient `γ_p` satisfies
//! `p·γ_p ≤ P_max(src → tgt)`, and a catalyst that only raises the success
//! probability to `P′` satisfies `p·γ_p ≤ P_max / P′`.

use crate::transform::{self, TransformClassification};
use crate::{Error, NumericConfig, Result, SchmidtSpectrum};

/// Necessary conditions a pair must meet before any catalyst can help.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NecessaryConditionsReport {
    /// `α₁ ≤ β₁`
    pub largest_coeff_ok: bool,
    /// `α_n ≥ β_n` on the common padded dimension.
    pub smallest_coeff_ok: bool,
    /// `S(src) ≥ S(tgt)`
    pub entropy_ok: bool,
    pub incomparable: bool,
    /// The two entropies agree to within `ε`.
    pub marginally_isentropic: bool,
    pub entropy_source: f64,
    pub entropy_target: f64,
    pub passes: bool,
}

impl NecessaryConditionsReport {
    /// Names of the failed flags, in a fixed order.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut failed = Vec::new();
        if !self.largest_coeff_ok {
            failed.push("largest_coeff");
        }
        if !self.smallest_coeff_ok {
            failed.push("smallest_coeff");
        }
        if !self.entropy_ok {
            failed.push("entropy");
        }
        if !self.incomparable {
            failed.push("incomparable");
        }
        failed
    }
}

/// Result of testing one candidate catalyst against a pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatalystVerdict {
    pub is_catalyst: bool,
    /// Smallest violated prefix of the combined spectra when `is_catalyst` is
    /// false.
    pub first_violation: Option<usize>,
    /// `p·γ_p` for the candidate.
    pub bound_value: f64,
    /// `P_max(src → tgt)` without assistance.
    pub pmax_pair: f64,
    /// `|p·γ_p − P_max| ≤ ε`.
    pub saturated: bool,
}

pub fn necessary_conditions(
    src: &SchmidtSpectrum,
    tgt: &SchmidtSpectrum,
    cfg: &NumericConfig,
) -> NecessaryConditionsReport {
    let eps = cfg.epsilon;
    let n = src.dim().max(tgt.dim());
    let src = src.padded(n).expect("n is at least src.dim()");
    let tgt = tgt.padded(n).expect("n is at least tgt.dim()");

    let entropy_source = src.entropy();
    let entropy_target = tgt.entropy();
    let largest_coeff_ok = src.largest() <= tgt.largest() + eps;
    let smallest_coeff_ok = src.smallest() >= tgt.smallest() - eps;
    let entropy_ok = entropy_source >= entropy_target - eps;
    let incomparable =
        transform::classify(&src, &tgt, cfg) == TransformClassification::Incomparable;

    NecessaryConditionsReport {
        largest_coeff_ok,
        smallest_coeff_ok,
        entropy_ok,
        incomparable,
        marginally_isentropic: (entropy_source - entropy_target).abs() <= eps,
        entropy_source,
        entropy_target,
        passes: largest_coeff_ok && smallest_coeff_ok && entropy_ok && incomparable,
    }
}

/// Largest admissible smallest coefficient `γ_p` of a `p`-dimensional
/// catalyst, `P_max / p`.
///
/// For `p = 2` the catalyst `(x, 1 − x)` must therefore have
/// `x ≥ 1 − P_max / 2`.
pub fn theorem1_bound(pmax_pair: f64, p: usize) -> Result<f64> {
    check_probability("pmax", pmax_pair)?;
    if p == 0 {
        return Err(Error::ZeroDimension);
    }
    Ok(pmax_pair / p as f64)
}

/// Largest admissible `p·γ_p` for a catalyst that raises the conversion
/// probability to `p_prime`: `min(1, P_max / P′)`.
pub fn corollary2_bound(pmax_pair: f64, p_prime: f64, p: usize) -> Result<f64> {
    check_probability("pmax", pmax_pair)?;
    check_probability("target probability", p_prime)?;
    if p == 0 {
        return Err(Error::ZeroDimension);
    }
    Ok((pmax_pair / p_prime).min(1.0))
}

/// Smallest admissible largest coefficient `γ₁` of a 2×2 catalyst, given a
/// bound on `2·γ₂`.
pub fn min_largest_coefficient_p2(scaled_bound: f64) -> f64 {
    1.0 - scaled_bound / 2.0
}

/// Whether `src ⊗ cand → tgt ⊗ cand` is deterministic, with the bound data.
pub fn is_catalyst(
    src: &SchmidtSpectrum,
    tgt: &SchmidtSpectrum,
    cand: &SchmidtSpectrum,
    cfg: &NumericConfig,
) -> CatalystVerdict {
    let assisted_src = src.tensor(cand);
    let assisted_tgt = tgt.tensor(cand);
    let outcome = assisted_tgt.majorizes(&assisted_src, cfg);
    let pmax_pair = transform::pmax(src, tgt, cfg);
    let bound_value = cand.dim() as f64 * cand.smallest();
    CatalystVerdict {
        is_catalyst: outcome.holds(),
        first_violation: outcome.first_violation(),
        bound_value,
        pmax_pair,
        saturated: (bound_value - pmax_pair).abs() <= cfg.epsilon,
    }
}

/// Optimal conversion probability when `cand` is attached to both sides.
pub fn quasi_pmax(
    src: &SchmidtSpectrum,
    tgt: &SchmidtSpectrum,
    cand: &SchmidtSpectrum,
    cfg: &NumericConfig,
) -> f64 {
    transform::pmax(&src.tensor(cand), &tgt.tensor(cand), cfg)
}

/// Multi-copy test: `P_max(src^{⊗n} → tgt^{⊗n}) ≥ P_max(src → tgt)`.
///
/// This must hold whenever a saturated catalyst exists for the pair, so a
/// `false` result rules such catalysts out.
pub fn corollary1_check(
    src: &SchmidtSpectrum,
    tgt: &SchmidtSpectrum,
    copies: usize,
    cfg: &NumericConfig,
) -> Result<bool> {
    let multi = transform::pmax_multicopy(src, tgt, copies, cfg)?;
    Ok(multi.value >= transform::pmax(src, tgt, cfg) - cfg.epsilon)
}

fn check_probability(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidProbability { name, value })
    }
}

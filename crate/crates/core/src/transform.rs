//! Deterministic LOCC convertibility and optimal conversion probabilities.
//!
//! Deterministic conversion `src → tgt` exists exactly when the source
//! spectrum is majorized by the target spectrum. When it does not, the best
//! achievable success probability is the smallest ratio of tail-sum
//! monotones `E_l(src) / E_l(tgt)`.

use crate::numeric::tail_sums;
use crate::{NumericConfig, Result, SchmidtSpectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformClassification {
    EquivalentSpectra,
    SourceToTargetDeterministic,
    TargetToSourceDeterministic,
    Incomparable,
}

impl TransformClassification {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::EquivalentSpectra => "equivalent",
            Self::SourceToTargetDeterministic => "source_to_target",
            Self::TargetToSourceDeterministic => "target_to_source",
            Self::Incomparable => "incomparable",
        }
    }
}

/// Optimal conversion probability together with the monotone index that
/// attains the minimum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalProbability {
    pub value: f64,
    /// 1-based index `l` of the minimizing ratio; `1` when the conversion is
    /// deterministic.
    pub witness: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TransformReport {
    pub source: SchmidtSpectrum,
    pub target: SchmidtSpectrum,
    pub classification: TransformClassification,
    pub pmax_forward: f64,
    pub pmax_backward: f64,
    pub entropy_source: f64,
    pub entropy_target: f64,
    pub monotones_source: Vec<f64>,
    pub monotones_target: Vec<f64>,
}

/// Tail sums `E_l = Σ_{i ≥ l} s_i` for `l = 1..=dim`.
pub fn monotone_tails(s: &SchmidtSpectrum) -> Vec<f64> {
    tail_sums(s.coefficients())
}

/// Whether `src` converts to `tgt` with certainty, i.e. `src` is majorized by
/// `tgt`.
pub fn nielsen_transformable(
    src: &SchmidtSpectrum,
    tgt: &SchmidtSpectrum,
    cfg: &NumericConfig,
) -> bool {
    tgt.majorizes(src, cfg).holds()
}

pub fn classify(
    src: &SchmidtSpectrum,
    tgt: &SchmidtSpectrum,
    cfg: &NumericConfig,
) -> TransformClassification {
    let forward = nielsen_transformable(src, tgt, cfg);
    let backward = nielsen_transformable(tgt, src, cfg);
    match (forward, backward) {
        (true, true) => TransformClassification::EquivalentSpectra,
        _ if src.approx_eq(tgt, cfg.epsilon) => TransformClassification::EquivalentSpectra,
        (true, false) => TransformClassification::SourceToTargetDeterministic,
        (false, true) => TransformClassification::TargetToSourceDeterministic,
        (false, false) => TransformClassification::Incomparable,
    }
}

/// Maximal probability of converting `src` into `tgt` by LOCC.
pub fn pmax(src: &SchmidtSpectrum, tgt: &SchmidtSpectrum, cfg: &NumericConfig) -> f64 {
    optimal_probability(src, tgt, cfg).value
}

/// [`pmax`] with the minimizing monotone index.
///
/// Indices where the target tail is at most `cfg.epsilon` impose no
/// constraint and are skipped. The `l = 1` ratio compares two normalized
/// spectra and is taken to be exactly one.
pub fn optimal_probability(
    src: &SchmidtSpectrum,
    tgt: &SchmidtSpectrum,
    cfg: &NumericConfig,
) -> OptimalProbability {
    let n = src.dim().max(tgt.dim());
    let mut src_tails = tail_sums(src.coefficients());
    let mut tgt_tails = tail_sums(tgt.coefficients());
    src_tails.resize(n, 0.0);
    tgt_tails.resize(n, 0.0);

    let mut best = OptimalProbability {
        value: 1.0,
        witness: 1,
    };
    for l in 2..=n {
        let denominator = tgt_tails[l - 1];
        if denominator <= cfg.epsilon {
            continue;
        }
        let ratio = src_tails[l - 1].max(0.0) / denominator;
        if ratio < best.value {
            best = OptimalProbability {
                value: ratio,
                witness: l,
            };
        }
    }
    best
}

/// Optimal probability for `src^{⊗n} → tgt^{⊗n}`.
pub fn pmax_multicopy(
    src: &SchmidtSpectrum,
    tgt: &SchmidtSpectrum,
    copies: usize,
    cfg: &NumericConfig,
) -> Result<OptimalProbability> {
    let src_power = src.tensor_power(copies, cfg)?;
    let tgt_power = tgt.tensor_power(copies, cfg)?;
    Ok(optimal_probability(&src_power, &tgt_power, cfg))
}

/// Spectrum of the `p × p` maximally entangled state.
pub fn uniform_spectrum(p: usize) -> Result<SchmidtSpectrum> {
    SchmidtSpectrum::uniform(p)
}

/// Classification, both conversion probabilities, entropies and monotone
/// tables for a pair.
pub fn analyze(
    src: &SchmidtSpectrum,
    tgt: &SchmidtSpectrum,
    cfg: &NumericConfig,
) -> TransformReport {
    TransformReport {
        source: src.clone(),
        target: tgt.clone(),
        classification: classify(src, tgt, cfg),
        pmax_forward: pmax(src, tgt, cfg),
        pmax_backward: pmax(tgt, src, cfg),
        entropy_source: src.entropy(),
        entropy_target: tgt.entropy(),
        monotones_source: monotone_tails(src),
        monotones_target: monotone_tails(tgt),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> NumericConfig {
        NumericConfig::default()
    }

    fn spec(raw: &[f64]) -> SchmidtSpectrum {
        SchmidtSpectrum::new(raw, &cfg()).unwrap()
    }

    fn alpha() -> SchmidtSpectrum {
        spec(&[0.31, 0.31, 0.30, 0.04, 0.04])
    }

    fn beta() -> SchmidtSpectrum {
        spec(&[0.48, 0.24, 0.14, 0.14, 0.0])
    }

    fn assert_close(actual: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len());
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() <= tol, "{actual:?} vs {expected:?}");
        }
    }

    #[test]
    fn tails() {
        assert_eq!(monotone_tails(&spec(&[0.5, 0.5])), vec![1.0, 0.5]);
        assert_close(
            &monotone_tails(&alpha()),
            &[1.0, 0.69, 0.38, 0.08, 0.04],
            1e-15,
        );
        assert_eq!(monotone_tails(&spec(&[1.0])), vec![1.0]);
    }

    #[test]
    fn transformability() {
        let c = cfg();
        assert!(nielsen_transformable(
            &spec(&[0.5, 0.5]),
            &spec(&[1.0, 0.0]),
            &c
        ));
        assert!(!nielsen_transformable(&alpha(), &beta(), &c));
        assert!(!nielsen_transformable(
            &spec(&[0.4, 0.4, 0.1, 0.1]),
            &spec(&[0.5, 0.25, 0.25, 0.0]),
            &c
        ));
    }

    #[test]
    fn classification() {
        let c = cfg();
        assert_eq!(
            classify(&alpha(), &beta(), &c),
            TransformClassification::Incomparable
        );
        assert_eq!(
            classify(&spec(&[0.5, 0.5]), &spec(&[1.0, 0.0]), &c),
            TransformClassification::SourceToTargetDeterministic
        );
        assert_eq!(
            classify(&spec(&[1.0, 0.0]), &spec(&[0.5, 0.5]), &c),
            TransformClassification::TargetToSourceDeterministic
        );
        assert_eq!(
            classify(&alpha(), &alpha(), &c),
            TransformClassification::EquivalentSpectra
        );
        // padding does not change the class
        assert_eq!(
            classify(&spec(&[0.5, 0.5]), &spec(&[0.5, 0.5, 0.0]), &c),
            TransformClassification::EquivalentSpectra
        );
    }

    #[test]
    fn optimal_probability_examples() {
        let c = cfg();
        let p = optimal_probability(&alpha(), &beta(), &c);
        assert!((p.value - 4.0 / 7.0).abs() < 1e-12);
        assert_eq!(p.witness, 4);

        let p = optimal_probability(&spec(&[0.8, 0.2]), &spec(&[0.5, 0.5]), &c);
        assert!((p.value - 0.4).abs() < 1e-15);
        assert_eq!(p.witness, 2);

        let p = optimal_probability(&spec(&[0.5, 0.5]), &spec(&[1.0, 0.0]), &c);
        assert_eq!(p.value, 1.0);
        assert_eq!(p.witness, 1);
    }

    #[test]
    fn rank_increase_is_impossible() {
        let c = cfg();
        assert_eq!(pmax(&spec(&[1.0]), &spec(&[0.5, 0.5]), &c), 0.0);
    }

    #[test]
    fn multicopy() {
        let c = cfg();
        let src = spec(&[0.4, 0.4, 0.1, 0.1]);
        let tgt = spec(&[0.5, 0.25, 0.25, 0.0]);
        assert_eq!(
            pmax_multicopy(&src, &tgt, 1, &c).unwrap(),
            optimal_probability(&src, &tgt, &c)
        );
        let two = pmax_multicopy(&src, &tgt, 2, &c).unwrap();
        // exact rational value 24/25
        assert!((two.value - 0.96).abs() < 1e-12);
        assert!(two.value >= 0.8);

        let three = pmax_multicopy(&spec(&[0.5, 0.5]), &spec(&[1.0, 0.0]), 3, &c).unwrap();
        assert_eq!(three.value, 1.0);
    }

    #[test]
    fn uniform() {
        assert_eq!(uniform_spectrum(1).unwrap().coefficients(), &[1.0]);
        assert_eq!(uniform_spectrum(2).unwrap().coefficients(), &[0.5, 0.5]);
        assert_eq!(uniform_spectrum(4).unwrap().coefficients(), &[0.25; 4]);
        assert!(uniform_spectrum(0).is_err());
    }

    #[test]
    fn report_fields() {
        let r = analyze(&alpha(), &beta(), &cfg());
        assert_eq!(r.classification, TransformClassification::Incomparable);
        assert!(r.pmax_forward < 1.0 && r.pmax_backward < 1.0);
        assert_eq!(r.monotones_source.len(), 5);
        assert!((r.monotones_target[0] - 1.0).abs() < 1e-15);
        assert!(r.monotones_target.windows(2).all(|w| w[0] >= w[1]));
    }
}

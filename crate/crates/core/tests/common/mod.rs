//! Shared generators and independent oracles for the integration tests.
//!
//! The oracles here work on plain `Vec<f64>` and never call into the crate's
//! majorization, tail-sum or tensor code.
#![allow(dead_code)]

use entcat::{NumericConfig, SchmidtSpectrum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const EPS: f64 = 1e-9;

pub fn cfg() -> NumericConfig {
    NumericConfig::default()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn spec(raw: &[f64]) -> SchmidtSpectrum {
    SchmidtSpectrum::new(raw, &cfg()).unwrap()
}

pub fn alpha() -> SchmidtSpectrum {
    spec(&[0.31, 0.31, 0.30, 0.04, 0.04])
}

pub fn beta() -> SchmidtSpectrum {
    spec(&[0.48, 0.24, 0.14, 0.14, 0.0])
}

pub fn jp_source() -> SchmidtSpectrum {
    spec(&[0.4, 0.4, 0.1, 0.1])
}

pub fn jp_target() -> SchmidtSpectrum {
    spec(&[0.5, 0.25, 0.25, 0.0])
}

/// Random spectrum of dimension `dim`: normalized uniforms, with an
/// occasional zero entry and occasional repeated values.
pub fn random_spectrum(rng: &mut ChaCha8Rng, dim: usize) -> SchmidtSpectrum {
    let mut raw: Vec<f64> = (0..dim).map(|_| rng.random::<f64>()).collect();
    if dim > 2 && rng.random_bool(0.1) {
        raw[dim - 1] = 0.0;
    }
    if dim > 2 && rng.random_bool(0.1) {
        raw[1] = raw[0];
    }
    SchmidtSpectrum::renormalized(&raw, &cfg()).unwrap()
}

pub fn random_dim(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> usize {
    rng.random_range(lo..=hi)
}

// --- oracles ---------------------------------------------------------------

pub fn sorted_desc(v: &[f64]) -> Vec<f64> {
    let mut v = v.to_vec();
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v
}

/// Direct enumeration of all products.
pub fn oracle_tensor(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    sorted_desc(&out)
}

/// Plain prefix-sum loop: does `a` majorize `b`? Returns the first violated
/// prefix length on failure.
pub fn oracle_majorizes(a: &[f64], b: &[f64], eps: f64) -> Result<(), usize> {
    let a = sorted_desc(a);
    let b = sorted_desc(b);
    let n = a.len().max(b.len());
    let mut sa = 0.0;
    let mut sb = 0.0;
    for l in 0..n {
        sa += a.get(l).copied().unwrap_or(0.0);
        sb += b.get(l).copied().unwrap_or(0.0);
        if sb > sa + eps {
            return Err(l + 1);
        }
    }
    Ok(())
}

/// Optimal probability through `1 − prefix` instead of tail sums.
pub fn oracle_pmax(src: &[f64], tgt: &[f64]) -> f64 {
    let s = sorted_desc(src);
    let t = sorted_desc(tgt);
    let n = s.len().max(t.len());
    let mut best: f64 = 1.0;
    let mut ps = 0.0;
    let mut pt = 0.0;
    for l in 1..n {
        ps += s.get(l - 1).copied().unwrap_or(0.0);
        pt += t.get(l - 1).copied().unwrap_or(0.0);
        let es = (1.0 - ps).max(0.0);
        let et = 1.0 - pt;
        if et > EPS {
            best = best.min(es / et);
        }
    }
    best
}

pub fn oracle_entropy(p: &[f64]) -> f64 {
    p.iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| -x * x.ln() / std::f64::consts::LN_2)
        .sum()
}

/// Is `(x, 1 − x)` a catalyst, by the plain oracle.
pub fn oracle_p2_catalyst(src: &[f64], tgt: &[f64], x: f64, eps: f64) -> bool {
    let c = [x, 1.0 - x];
    oracle_majorizes(&oracle_tensor(tgt, &c), &oracle_tensor(src, &c), eps).is_ok()
}

/// Random spectrum with dimension drawn uniformly from `lo..=hi`.
pub fn random_spectrum_in(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> SchmidtSpectrum {
    let dim = random_dim(rng, lo, hi);
    random_spectrum(rng, dim)
}

//! Catalyst search.
//!
//! For 2×2 catalysts `(x, 1 − x)` the question is decided exactly. Each
//! coefficient of `src ⊗ (x, 1 − x)` is one of the lines `a_i·x` or
//! `a_i·(1 − x)`, and their descending order only changes where two lines
//! cross, at `x = a_j / (a_i + a_j)`. Between consecutive crossings every
//! prefix sum of both combined spectra is a fixed linear function of `x`, so
//! every majorization constraint is a linear inequality on that piece. The
//! feasible set is the union of the per-piece solutions, a finite list of
//! closed intervals. An empty union certifies that no 2×2 catalyst exists.
//!
//! Larger catalysts are searched by uniform sampling on the probability
//! simplex. Samples whose smallest coefficient already violates the bound
//! `p·γ_p ≤ P_max / P′` are discarded before any tensor work.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::catalysis::{self, CatalystVerdict};
use crate::transform::{self, TransformClassification};
use crate::{Error, NumericConfig, Result, SchmidtSpectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Exact breakpoint enumeration over 2×2 catalysts.
    Exact2,
    /// Seeded uniform sampling of `p`-dimensional catalysts.
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    /// Catalyst dimension `p`.
    pub dim: usize,
    pub mode: SearchMode,
    pub sample_count: usize,
    /// Success probability the assisted conversion must reach; `1` asks for
    /// a full catalyst.
    pub target_probability: f64,
    /// Discard samples that violate the catalyst bound before testing them.
    pub prune: bool,
    pub numeric: NumericConfig,
}

impl SearchConfig {
    pub const DEFAULT_SAMPLES: usize = 100_000;

    pub fn exact2(numeric: NumericConfig) -> Self {
        Self {
            dim: 2,
            mode: SearchMode::Exact2,
            sample_count: Self::DEFAULT_SAMPLES,
            target_probability: 1.0,
            prune: true,
            numeric,
        }
    }

    pub fn random(dim: usize, sample_count: usize, numeric: NumericConfig) -> Self {
        Self {
            dim,
            mode: SearchMode::Random,
            sample_count,
            target_probability: 1.0,
            prune: true,
            numeric,
        }
    }

    pub fn with_target_probability(mut self, target_probability: f64) -> Self {
        self.target_probability = target_probability;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.target_probability > 0.0 && self.target_probability <= 1.0) {
            return Err(Error::InvalidProbability {
                name: "target probability",
                value: self.target_probability,
            });
        }
        match self.mode {
            SearchMode::Exact2 if self.dim != 2 => Err(Error::InvalidSearchConfig(format!(
                "exact mode needs catalyst dimension 2, got {}",
                self.dim
            ))),
            SearchMode::Exact2 if self.target_probability != 1.0 => Err(
                Error::InvalidSearchConfig("exact mode needs target probability 1".into()),
            ),
            SearchMode::Random if self.dim < 2 => Err(Error::InvalidSearchConfig(format!(
                "catalyst dimension must be at least 2, got {}",
                self.dim
            ))),
            SearchMode::Random if self.sample_count == 0 => Err(Error::InvalidSearchConfig(
                "sample count must be positive".into(),
            )),
            _ => Ok(()),
        }
    }
}

/// Closed interval of feasible largest coefficients `x` for `(x, 1 − x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeasibleInterval {
    pub lower: f64,
    pub upper: f64,
}

impl FeasibleInterval {
    pub fn contains(&self, x: f64, tolerance: f64) -> bool {
        x >= self.lower - tolerance && x <= self.upper + tolerance
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SearchOutcome {
    Found {
        catalyst: SchmidtSpectrum,
        verdict: CatalystVerdict,
        /// Conversion probability reached with the catalyst attached.
        probability: f64,
        samples_tested: usize,
        samples_pruned: usize,
    },
    /// Exact certificate that no 2×2 catalyst exists.
    NonExistence {
        breakpoints_examined: usize,
    },
    FoundInterval {
        intervals: Vec<FeasibleInterval>,
        breakpoints_examined: usize,
    },
    NotFound {
        samples_tested: usize,
        samples_pruned: usize,
        /// Necessary conditions the pair failed; sampling is skipped when
        /// this is nonempty.
        screen_failures: Vec<&'static str>,
    },
    TrivialAlreadyTransformable,
}

impl SearchOutcome {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Found { .. } => "found",
            Self::NonExistence { .. } => "non_existence",
            Self::FoundInterval { .. } => "found_interval",
            Self::NotFound { .. } => "not_found",
            Self::TrivialAlreadyTransformable => "trivial_already_transformable",
        }
    }

    /// True for outcomes that provide (or do not need) a catalyst.
    pub fn is_success(&self) -> bool {
        matches!(
            self,
            Self::Found { .. } | Self::FoundInterval { .. } | Self::TrivialAlreadyTransformable
        )
    }
}

/// Runs the search selected by `sc.mode`.
pub fn search(
    src: &SchmidtSpectrum,
    tgt: &SchmidtSpectrum,
    sc: &SearchConfig,
) -> Result<SearchOutcome> {
    sc.validate()?;
    match sc.mode {
        SearchMode::Exact2 => search_exact_p2(src, tgt, &sc.numeric),
        SearchMode::Random => search_random(src, tgt, sc),
    }
}

/// Decides exactly whether some 2×2 catalyst `(x, 1 − x)` works for the pair.
pub fn search_exact_p2(
    src: &SchmidtSpectrum,
    tgt: &SchmidtSpectrum,
    cfg: &NumericConfig,
) -> Result<SearchOutcome> {
    match transform::classify(src, tgt, cfg) {
        TransformClassification::EquivalentSpectra
        | TransformClassification::SourceToTargetDeterministic => {
            return Ok(SearchOutcome::TrivialAlreadyTransformable)
        }
        TransformClassification::TargetToSourceDeterministic => {
            return Err(Error::NotIncomparable(
                "target converts to source deterministically",
            ))
        }
        TransformClassification::Incomparable => {}
    }

    let eps = cfg.epsilon;
    let slack = eps / 2.0;
    let pmax = transform::pmax(src, tgt, cfg);
    // 2·(1 − x) ≤ P_max
    let lower = (1.0 - pmax / 2.0).max(0.5);
    let upper = 1.0;

    let n = src.dim().max(tgt.dim());
    let src_coeffs = padded(src, n);
    let tgt_coeffs = padded(tgt, n);

    let points = breakpoints(&src_coeffs, &tgt_coeffs, lower, upper, eps);
    let breakpoints_examined = points.len();

    let mut pieces = Vec::new();
    if points.len() == 1 {
        let x = points[0];
        if constraint_margins(&src_coeffs, &tgt_coeffs, x, x)
            .iter()
            .all(|&(at_x, _)| at_x >= -slack)
        {
            pieces.push(FeasibleInterval { lower: x, upper: x });
        }
    }
    for w in points.windows(2) {
        if let Some(piece) = solve_piece(&src_coeffs, &tgt_coeffs, w[0], w[1], slack) {
            pieces.push(piece);
        }
    }

    let intervals = merge(pieces, eps);
    if intervals.is_empty() {
        Ok(SearchOutcome::NonExistence {
            breakpoints_examined,
        })
    } else {
        Ok(SearchOutcome::FoundInterval {
            intervals,
            breakpoints_examined,
        })
    }
}

fn padded(s: &SchmidtSpectrum, n: usize) -> Vec<f64> {
    let mut v = s.coefficients().to_vec();
    v.resize(n, 0.0);
    v
}

/// Crossings `a_j / (a_i + a_j)` of both families inside `(lower, upper)`,
/// plus the domain endpoints, sorted and deduplicated within `eps`.
fn breakpoints(src: &[f64], tgt: &[f64], lower: f64, upper: f64, eps: f64) -> Vec<f64> {
    let mut points = vec![lower, upper];
    for family in [src, tgt] {
        for &a in family {
            for &b in family {
                if a + b <= 0.0 {
                    continue;
                }
                let x = b / (a + b);
                if x > lower && x < upper {
                    points.push(x);
                }
            }
        }
    }
    points.sort_by(f64::total_cmp);
    let mut deduped: Vec<f64> = Vec::with_capacity(points.len());
    for x in points {
        match deduped.last() {
            Some(&last) if x - last <= eps => {}
            _ => deduped.push(x),
        }
    }
    // the last kept point is within eps of the domain's upper end
    if let Some(last) = deduped.last_mut() {
        *last = upper;
    }
    deduped
}

/// Linear pieces `value(x) = slope·x + intercept` of the combined spectrum
/// entries for one family.
fn lines(coeffs: &[f64]) -> Vec<(f64, f64)> {
    coeffs.iter().flat_map(|&a| [(a, 0.0), (-a, a)]).collect()
}

/// Prefix-sum lines of `family ⊗ (x, 1 − x)` for the entry order valid at
/// `probe`.
fn prefix_lines(coeffs: &[f64], probe: f64) -> Vec<(f64, f64)> {
    let mut entries = lines(coeffs);
    entries.sort_by(|p, q| {
        let vp = p.0 * probe + p.1;
        let vq = q.0 * probe + q.1;
        vq.total_cmp(&vp)
    });
    let mut slope = 0.0;
    let mut intercept = 0.0;
    entries
        .into_iter()
        .map(|(s, c)| {
            slope += s;
            intercept += c;
            (slope, intercept)
        })
        .collect()
}

/// For each prefix length, `target − source` prefix sums evaluated at `u`
/// and `v`, using the ordering valid on the open interval between them.
fn constraint_margins(src: &[f64], tgt: &[f64], u: f64, v: f64) -> Vec<(f64, f64)> {
    let probe = 0.5 * (u + v);
    let src_prefix = prefix_lines(src, probe);
    let tgt_prefix = prefix_lines(tgt, probe);
    src_prefix
        .iter()
        .zip(&tgt_prefix)
        .map(|(&(ss, sc), &(ts, tc))| {
            let slope = ts - ss;
            let intercept = tc - sc;
            (slope * u + intercept, slope * v + intercept)
        })
        .collect()
}

/// Part of `[u, v]` on which every margin is at least `-slack`.
fn solve_piece(src: &[f64], tgt: &[f64], u: f64, v: f64, slack: f64) -> Option<FeasibleInterval> {
    let mut lo = u;
    let mut hi = v;
    for (gu, gv) in constraint_margins(src, tgt, u, v) {
        let ok_u = gu >= -slack;
        let ok_v = gv >= -slack;
        match (ok_u, ok_v) {
            (true, true) => {}
            (false, false) => return None,
            _ => {
                // cut where the margin reaches zero when the good end is
                // genuinely nonnegative, otherwise at the slack level
                let good = if ok_u { gu } else { gv };
                let level = if good >= 0.0 { 0.0 } else { -slack };
                let crossing = u + (v - u) * (level - gu) / (gv - gu);
                let crossing = crossing.clamp(u, v);
                if ok_u {
                    hi = hi.min(crossing);
                } else {
                    lo = lo.max(crossing);
                }
            }
        }
    }
    (lo <= hi).then_some(FeasibleInterval {
        lower: lo,
        upper: hi,
    })
}

fn merge(mut pieces: Vec<FeasibleInterval>, eps: f64) -> Vec<FeasibleInterval> {
    pieces.sort_by(|a, b| a.lower.total_cmp(&b.lower));
    let mut merged: Vec<FeasibleInterval> = Vec::with_capacity(pieces.len());
    for piece in pieces {
        match merged.last_mut() {
            Some(last) if piece.lower <= last.upper + eps => {
                last.upper = last.upper.max(piece.upper);
            }
            _ => merged.push(piece),
        }
    }
    merged
}

/// Seeded random search for a `sc.dim`-dimensional (quasi-)catalyst.
///
/// Surviving samples are tested in order of decreasing smallest coefficient,
/// and the first hit in that order is returned. The outcome depends only on
/// the inputs, the seed and the sample count.
pub fn search_random(
    src: &SchmidtSpectrum,
    tgt: &SchmidtSpectrum,
    sc: &SearchConfig,
) -> Result<SearchOutcome> {
    sc.validate()?;
    let cfg = &sc.numeric;
    let eps = cfg.epsilon;
    let full = sc.target_probability >= 1.0;
    let pmax = transform::pmax(src, tgt, cfg);

    if full {
        if transform::nielsen_transformable(src, tgt, cfg) {
            return Ok(SearchOutcome::TrivialAlreadyTransformable);
        }
        let screen = catalysis::necessary_conditions(src, tgt, cfg);
        if !screen.passes {
            return Ok(SearchOutcome::NotFound {
                samples_tested: 0,
                samples_pruned: 0,
                screen_failures: screen.failures(),
            });
        }
    } else if pmax >= sc.target_probability - eps {
        return Ok(SearchOutcome::TrivialAlreadyTransformable);
    }

    let allowed = (pmax / sc.target_probability).min(1.0);
    let samples = sample_simplex(sc.dim, sc.sample_count, cfg.seed);
    let (mut survivors, pruned): (Vec<_>, Vec<_>) = samples
        .into_iter()
        .partition(|c| !sc.prune || c.dim() as f64 * c.smallest() <= allowed + eps);
    let samples_pruned = pruned.len();
    // stable, so equal γ_p keep sampling order
    survivors.sort_by(|a, b| b.smallest().total_cmp(&a.smallest()));

    let accepts = |cand: &SchmidtSpectrum| {
        if full {
            catalysis::is_catalyst(src, tgt, cand, cfg).is_catalyst
        } else {
            catalysis::quasi_pmax(src, tgt, cand, cfg) >= sc.target_probability - eps
        }
    };

    match survivors.par_iter().position_first(accepts) {
        Some(index) => {
            let catalyst = survivors.swap_remove(index);
            let verdict = catalysis::is_catalyst(src, tgt, &catalyst, cfg);
            let probability = catalysis::quasi_pmax(src, tgt, &catalyst, cfg);
            debug_assert!(!full || verdict.is_catalyst);
            Ok(SearchOutcome::Found {
                catalyst,
                verdict,
                probability,
                samples_tested: index + 1,
                samples_pruned,
            })
        }
        None => Ok(SearchOutcome::NotFound {
            samples_tested: survivors.len(),
            samples_pruned,
            screen_failures: Vec::new(),
        }),
    }
}

/// `count` points drawn uniformly from the probability simplex of dimension
/// `p`, each sorted descending.
///
/// Uses the spacings of `p − 1` sorted uniforms on `[0, 1]`.
pub fn sample_simplex(p: usize, count: usize, seed: u64) -> Vec<SchmidtSpectrum> {
    assert!(p >= 1, "simplex dimension must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cuts = vec![0.0; p + 1];
    (0..count)
        .map(|_| {
            cuts[0] = 0.0;
            cuts[p] = 1.0;
            for cut in &mut cuts[1..p] {
                *cut = rng.random::<f64>();
            }
            cuts[1..p].sort_by(f64::total_cmp);
            let spacings = cuts.windows(2).map(|w| w[1] - w[0]).collect();
            SchmidtSpectrum::from_unsorted(spacings, NumericConfig::DEFAULT_EPSILON)
        })
        .collect()
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

    fn jp() -> (SchmidtSpectrum, SchmidtSpectrum) {
        (spec(&[0.4, 0.4, 0.1, 0.1]), spec(&[0.5, 0.25, 0.25, 0.0]))
    }

    #[test]
    fn worked_pair_has_no_two_level_catalyst() {
        let outcome = search_exact_p2(&alpha(), &beta(), &cfg()).unwrap();
        assert!(
            matches!(outcome, SearchOutcome::NonExistence { breakpoints_examined } if breakpoints_examined >= 2),
            "{outcome:?}"
        );
    }

    #[test]
    fn jp_pair_interval() {
        let (s, t) = jp();
        let outcome = search_exact_p2(&s, &t, &cfg()).unwrap();
        let SearchOutcome::FoundInterval { intervals, .. } = outcome else {
            panic!("expected an interval, got {outcome:?}");
        };
        assert_eq!(intervals.len(), 1);
        // exact feasible set is [3/5, 5/8]
        assert!((intervals[0].lower - 0.6).abs() < 1e-12);
        assert!((intervals[0].upper - 0.625).abs() < 1e-12);
        assert!(intervals[0].contains(0.6, 1e-12));
    }

    #[test]
    fn exact_trivial_and_ineligible() {
        let c = cfg();
        let bell = spec(&[0.5, 0.5]);
        let product = spec(&[1.0, 0.0]);
        assert_eq!(
            search_exact_p2(&bell, &product, &c).unwrap(),
            SearchOutcome::TrivialAlreadyTransformable
        );
        assert!(matches!(
            search_exact_p2(&product, &bell, &c),
            Err(Error::NotIncomparable(_))
        ));
    }

    #[test]
    fn config_validation() {
        let c = cfg();
        let mut sc = SearchConfig::exact2(c);
        sc.dim = 3;
        assert!(matches!(
            search(&alpha(), &beta(), &sc),
            Err(Error::InvalidSearchConfig(_))
        ));
        let sc = SearchConfig::exact2(c).with_target_probability(0.9);
        assert!(sc.validate().is_err());
        let sc = SearchConfig::random(1, 10, c);
        assert!(sc.validate().is_err());
        let sc = SearchConfig::random(2, 0, c);
        assert!(sc.validate().is_err());
        let sc = SearchConfig::random(2, 10, c).with_target_probability(0.0);
        assert!(matches!(
            sc.validate(),
            Err(Error::InvalidProbability { .. })
        ));
    }

    #[test]
    fn random_finds_jp_catalyst() {
        let (s, t) = jp();
        let sc = SearchConfig::random(2, 10_000, cfg());
        let outcome = search_random(&s, &t, &sc).unwrap();
        let SearchOutcome::Found {
            catalyst, verdict, ..
        } = outcome
        else {
            panic!("expected a catalyst, got {outcome:?}");
        };
        assert!(verdict.is_catalyst);
        let x = catalyst.largest();
        assert!((0.6 - 1e-9..=0.625 + 1e-9).contains(&x), "x = {x}");
        assert!(verdict.bound_value <= verdict.pmax_pair + 1e-9);
    }

    #[test]
    fn random_finds_nothing_for_worked_pair() {
        let sc = SearchConfig::random(2, 5_000, cfg());
        let outcome = search_random(&alpha(), &beta(), &sc).unwrap();
        match outcome {
            SearchOutcome::NotFound {
                samples_tested,
                samples_pruned,
                screen_failures,
            } => {
                assert_eq!(samples_tested + samples_pruned, 5_000);
                assert!(samples_pruned > 0);
                assert!(screen_failures.is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn random_screen_and_trivial() {
        let c = cfg();
        let sc = SearchConfig::random(3, 100, c);
        assert_eq!(
            search_random(&spec(&[0.5, 0.5]), &spec(&[1.0]), &sc).unwrap(),
            SearchOutcome::TrivialAlreadyTransformable
        );
        let outcome = search_random(&spec(&[0.6, 0.4]), &spec(&[0.5, 0.5]), &sc).unwrap();
        let SearchOutcome::NotFound {
            samples_tested,
            screen_failures,
            ..
        } = outcome
        else {
            panic!("expected NotFound");
        };
        assert_eq!(samples_tested, 0);
        assert!(screen_failures.contains(&"largest_coeff"));
        assert!(screen_failures.contains(&"entropy"));
    }

    #[test]
    fn quasi_search_reaches_target() {
        let c = cfg();
        let target = 0.9;
        let sc = SearchConfig::random(3, 2_000, c).with_target_probability(target);
        let outcome = search_random(&alpha(), &beta(), &sc).unwrap();
        if let SearchOutcome::Found {
            catalyst,
            probability,
            ..
        } = &outcome
        {
            assert!(*probability >= target - 1e-9);
            let bound = catalysis::corollary2_bound(4.0 / 7.0, target, 3).unwrap();
            assert!(catalyst.dim() as f64 * catalyst.smallest() <= bound + 1e-9);
        }
        // already reachable without help
        let sc = SearchConfig::random(2, 10, c).with_target_probability(0.5);
        assert_eq!(
            search_random(&alpha(), &beta(), &sc).unwrap(),
            SearchOutcome::TrivialAlreadyTransformable
        );
    }

    #[test]
    fn random_search_is_deterministic() {
        let (s, t) = jp();
        let sc = SearchConfig::random(3, 3_000, cfg().with_seed(7));
        let a = search_random(&s, &t, &sc).unwrap();
        let b = search_random(&s, &t, &sc).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn simplex_samples() {
        for s in sample_simplex(1, 5, 0) {
            assert_eq!(s.coefficients(), &[1.0]);
        }
        let a = sample_simplex(2, 50, 3);
        assert_eq!(a, sample_simplex(2, 50, 3));
        assert_ne!(a, sample_simplex(2, 50, 4));
        for s in sample_simplex(5, 200, 1) {
            assert_eq!(s.dim(), 5);
            assert!((s.sum() - 1.0).abs() < 1e-12);
            assert!(s.coefficients().windows(2).all(|w| w[0] >= w[1]));
        }
    }
}

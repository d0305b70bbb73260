//! Ordered Schmidt coefficient distributions and their algebra.
//!
//! A [`SchmidtSpectrum`] is a probability vector sorted in descending order.
//! Trailing zeros are legal entries; the Schmidt rank is tracked separately,
//! so a spectrum padded to a larger dimension still remembers how many
//! coefficients are genuinely nonzero.

use std::fmt;

use crate::numeric::{prefix_sums, CompensatedSum};
use crate::{Error, NumericConfig, Result};

/// Descending-ordered Schmidt coefficients of a pure bipartite state.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtSpectrum {
    coefficients: Vec<f64>,
    rank: usize,
    // tolerance the rank was counted against
    epsilon: f64,
}

/// Outcome of a prefix-sum majorization test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Majorization {
    Holds,
    /// Smallest prefix length `l` (1-based) at which the test fails.
    Violated {
        prefix: usize,
    },
}

impl Majorization {
    pub fn holds(self) -> bool {
        matches!(self, Majorization::Holds)
    }

    pub fn first_violation(self) -> Option<usize> {
        match self {
            Majorization::Holds => None,
            Majorization::Violated { prefix } => Some(prefix),
        }
    }
}

impl SchmidtSpectrum {
    /// Validates `raw` and sorts it into descending order.
    ///
    /// Entries in `[-ε, 0)` are clamped to zero. The sum must lie within `ε`
    /// of one; the values are kept as given, without renormalization.
    pub fn new(raw: &[f64], cfg: &NumericConfig) -> Result<Self> {
        let coefficients = validate_entries(raw, cfg)?;
        let sum = sum(&coefficients);
        if (sum - 1.0).abs() > cfg.epsilon {
            return Err(Error::NotNormalized { sum });
        }
        Ok(Self::from_unsorted(coefficients, cfg.epsilon))
    }

    /// Like [`SchmidtSpectrum::new`], but divides by the sum instead of
    /// requiring it to be one.
    pub fn renormalized(raw: &[f64], cfg: &NumericConfig) -> Result<Self> {
        let mut coefficients = validate_entries(raw, cfg)?;
        let sum = sum(&coefficients);
        if !sum.is_finite() || sum <= 0.0 {
            return Err(Error::NotNormalized { sum });
        }
        for c in &mut coefficients {
            *c /= sum;
        }
        Ok(Self::from_unsorted(coefficients, cfg.epsilon))
    }

    /// Maximally entangled `p × p` spectrum: `p` entries of `1/p`.
    pub fn uniform(p: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::ZeroDimension);
        }
        let value = 1.0 / p as f64;
        Ok(Self {
            coefficients: vec![value; p],
            rank: p,
            epsilon: NumericConfig::DEFAULT_EPSILON,
        })
    }

    pub(crate) fn from_unsorted(mut coefficients: Vec<f64>, epsilon: f64) -> Self {
        // stable: equal values keep their relative order
        coefficients.sort_by(|a, b| b.total_cmp(a));
        let rank = coefficients.iter().take_while(|&&c| c > epsilon).count();
        Self {
            coefficients,
            rank,
            epsilon,
        }
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Number of stored coefficients, trailing zeros included.
    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    /// Number of coefficients strictly above the construction tolerance.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn largest(&self) -> f64 {
        self.coefficients[0]
    }

    /// Last stored coefficient; zero for a padded spectrum.
    pub fn smallest(&self) -> f64 {
        self.coefficients[self.coefficients.len() - 1]
    }

    pub fn sum(&self) -> f64 {
        sum(&self.coefficients)
    }

    /// Appends zeros up to `dim` entries.
    pub fn padded(&self, dim: usize) -> Result<Self> {
        if dim < self.dim() {
            return Err(Error::DimTooSmall {
                current: self.dim(),
                requested: dim,
            });
        }
        let mut coefficients = self.coefficients.clone();
        coefficients.resize(dim, 0.0);
        Ok(Self {
            coefficients,
            rank: self.rank,
            epsilon: self.epsilon,
        })
    }

    /// Spectrum of the product state: every pairwise product, sorted.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut products = Vec::with_capacity(self.dim() * other.dim());
        for &a in &self.coefficients {
            products.extend(other.coefficients.iter().map(|&b| a * b));
        }
        Self::from_unsorted(products, self.epsilon.max(other.epsilon))
    }

    /// `n`-fold tensor product of the spectrum with itself.
    pub fn tensor_power(&self, n: usize, cfg: &NumericConfig) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let entries = (self.dim() as u128)
            .checked_pow(n as u32)
            .unwrap_or(u128::MAX);
        if entries > cfg.size_cap as u128 {
            return Err(Error::SizeCapExceeded {
                entries,
                cap: cfg.size_cap,
            });
        }
        let mut power = self.clone();
        for _ in 1..n {
            power = power.tensor(self);
        }
        Ok(power)
    }

    /// Entanglement entropy in bits: the Shannon entropy of the spectrum.
    pub fn entropy(&self) -> f64 {
        let mut acc = CompensatedSum::default();
        for &c in &self.coefficients {
            if c > 0.0 {
                acc.add(-c * c.log2());
            }
        }
        acc.value().max(0.0)
    }

    /// Tests whether every prefix sum of `self` dominates the corresponding
    /// prefix sum of `other`, i.e. whether `other` is majorized by `self`.
    ///
    /// The shorter spectrum is padded with zeros. Each comparison carries
    /// `cfg.epsilon` of slack.
    pub fn majorizes(&self, other: &Self, cfg: &NumericConfig) -> Majorization {
        let n = self.dim().max(other.dim());
        let ours = prefix_sums(&self.coefficients);
        let theirs = prefix_sums(&other.coefficients);
        let at = |sums: &[f64], l: usize| -> f64 {
            // l is 1-based; prefixes past the end stay at the full sum
            sums[(l.min(sums.len())) - 1]
        };
        for l in 1..=n {
            if at(&theirs, l) > at(&ours, l) + cfg.epsilon {
                return Majorization::Violated { prefix: l };
            }
        }
        Majorization::Holds
    }

    /// Elementwise equality within `epsilon`, after padding to a common
    /// dimension.
    pub fn approx_eq(&self, other: &Self, epsilon: f64) -> bool {
        let n = self.dim().max(other.dim());
        (0..n).all(|i| {
            let a = self.coefficients.get(i).copied().unwrap_or(0.0);
            let b = other.coefficients.get(i).copied().unwrap_or(0.0);
            (a - b).abs() <= epsilon
        })
    }
}

impl fmt::Display for SchmidtSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn validate_entries(raw: &[f64], cfg: &NumericConfig) -> Result<Vec<f64>> {
    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }
    raw.iter()
        .enumerate()
        .map(|(index, &value)| {
            if !value.is_finite() {
                Err(Error::NonFinite { index })
            } else if value < -cfg.epsilon {
                Err(Error::NegativeEntry { index, value })
            } else {
                Ok(value.max(0.0))
            }
        })
        .collect()
}

fn sum(values: &[f64]) -> f64 {
    let mut acc = CompensatedSum::default();
    values.iter().for_each(|&v| acc.add(v));
    acc.value()
}

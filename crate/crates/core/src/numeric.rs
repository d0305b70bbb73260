/// Tolerance and seed policy shared by every comparison and sampler.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericConfig {
    /// Absolute slack on every inequality between probabilities or entropies.
    pub epsilon: f64,
    /// Seed for all randomized procedures.
    pub seed: u64,
    /// Largest spectrum (in entries) that tensor powers may produce.
    pub size_cap: usize,
}

impl NumericConfig {
    pub const DEFAULT_EPSILON: f64 = 1e-9;
    pub const DEFAULT_SIZE_CAP: usize = 1_000_000;

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        assert!(epsilon >= 0.0, "epsilon must be nonnegative");
        self.epsilon = epsilon;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

impl Default for NumericConfig {
    fn default() -> Self {
        Self {
            epsilon: Self::DEFAULT_EPSILON,
            seed: 0,
            size_cap: Self::DEFAULT_SIZE_CAP,
        }
    }
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Running prefix sums `s_1, s_1 + s_2, ...` with compensation.
pub(crate) fn prefix_sums(values: &[f64]) -> Vec<f64> {
    let mut acc = CompensatedSum::default();
    values
        .iter()
        .map(|&v| {
            acc.add(v);
            acc.value()
        })
        .collect()
}

/// Tail sums `E_l = sum_{i >= l} s_i` for `l = 1..=n`, with compensation.
pub(crate) fn tail_sums(values: &[f64]) -> Vec<f64> {
    let mut acc = CompensatedSum::default();
    let mut tails: Vec<f64> = values
        .iter()
        .rev()
        .map(|&v| {
            acc.add(v);
            acc.value()
        })
        .collect();
    tails.reverse();
    tails
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut acc = CompensatedSum::default();
        acc.add(1.0);
        for _ in 0..10 {
            acc.add(1e-16);
        }
        acc.add(-1.0);
        assert!((acc.value() - 1e-15).abs() < 1e-30);
    }

    #[test]
    fn prefix_and_tail_sums() {
        let v = [0.5, 0.25, 0.25];
        assert_eq!(prefix_sums(&v), vec![0.5, 0.75, 1.0]);
        assert_eq!(tail_sums(&v), vec![1.0, 0.5, 0.25]);
        assert!(tail_sums(&[]).is_empty());
    }
}

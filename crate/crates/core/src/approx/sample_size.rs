// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Fixed sample sizes from Hoeffding's inequality and a union bound over
//! labels. Logarithms are natural.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleSizeParams {
    /// Additive error in (0, 1]; `lambda` for the dataset-wide bound.
    pub epsilon: f64,
    /// Failure probability in (0, 1).
    pub delta: f64,
    /// Upper bound on the number of distinct labels.
    pub gamma: u64,
    /// Number of graphs, for the dataset-wide bound.
    pub dataset_size: Option<usize>,
}

impl SampleSizeParams {
    pub fn new(epsilon: f64, delta: f64, gamma: u64) -> Self {
        SampleSizeParams {
            epsilon,
            delta,
            gamma,
            dataset_size: None,
        }
    }

    pub fn with_dataset_size(mut self, size: usize) -> Self {
        self.dataset_size = Some(size);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon <= 1.0) {
            return Err(Error::Param(format!(
                "epsilon must lie in (0, 1], got {}",
                self.epsilon
            )));
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(Error::Param(format!(
                "delta must lie in (0, 1), got {}",
                self.delta
            )));
        }
        if self.gamma == 0 {
            return Err(Error::Param("gamma must be at least 1".into()));
        }
        Ok(())
    }
}

fn hoeffding_count(log_arg: f64, per_label_error: f64) -> u64 {
    (log_arg.ln() / (2.0 * per_label_error * per_label_error)).ceil() as u64
}

/// `ceil(ln(2 gamma / delta) / (2 (epsilon / gamma)^2))` samples for one
/// graph.
pub fn sample_size_theorem1(p: &SampleSizeParams) -> Result<u64> {
    p.validate()?;
    let gamma = p.gamma as f64;
    Ok(hoeffding_count(2.0 * gamma / p.delta, p.epsilon / gamma))
}

/// `ceil(ln(2 gamma |G| / delta) / (2 (lambda / gamma)^2))` samples per
/// graph so that every graph of a dataset of size `|G|` is covered at once,
/// with `lambda` passed as `epsilon`. The same count serves the 1-WL case.
pub fn sample_size_prop1(p: &SampleSizeParams) -> Result<u64> {
    p.validate()?;
    let size = p.dataset_size.ok_or_else(|| {
        Error::Param("dataset size is required for the dataset-wide bound".into())
    })?;
    if size == 0 {
        return Err(Error::Param("dataset size must be at least 1".into()));
    }
    let gamma = p.gamma as f64;
    Ok(hoeffding_count(
        2.0 * gamma / p.delta * size as f64,
        p.epsilon / gamma,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_graph_counts() {
        assert_eq!(
            sample_size_theorem1(&SampleSizeParams::new(0.1, 0.1, 10)).unwrap(),
            26492
        );
        assert_eq!(
            sample_size_theorem1(&SampleSizeParams::new(1.0, 0.5, 1)).unwrap(),
            1
        );
    }

    #[test]
    fn dataset_counts() {
        let p = SampleSizeParams::new(0.1, 0.1, 10).with_dataset_size(100);
        assert_eq!(sample_size_prop1(&p).unwrap(), 49518);
        let one = SampleSizeParams::new(0.1, 0.1, 10).with_dataset_size(1);
        assert_eq!(
            sample_size_prop1(&one).unwrap(),
            sample_size_theorem1(&one).unwrap()
        );
        assert!(sample_size_prop1(&SampleSizeParams::new(0.1, 0.1, 10)).is_err());
    }

    #[test]
    fn doubling_dataset_shifts_by_ln2() {
        let base = |n| {
            let g = 10.0f64;
            (2.0 * g / 0.1 * n as f64).ln() / (2.0 * (0.1 / g).powi(2))
        };
        let shift = 2f64.ln() / (2.0 * 0.01f64.powi(2));
        assert!((base(200) - base(100) - shift).abs() < 1e-6);
        let c = |n| {
            sample_size_prop1(&SampleSizeParams::new(0.1, 0.1, 10).with_dataset_size(n)).unwrap()
        };
        assert_eq!(c(200), (base(100) + shift).ceil() as u64);
    }

    #[test]
    fn monotone_in_gamma() {
        let mut last = 0;
        for gamma in 1..200 {
            let c = sample_size_theorem1(&SampleSizeParams::new(0.2, 0.05, gamma)).unwrap();
            assert!(c >= last);
            last = c;
        }
    }

    #[test]
    fn rejects_bad_ranges() {
        for p in [
            SampleSizeParams::new(0.0, 0.1, 1),
            SampleSizeParams::new(1.5, 0.1, 1),
            SampleSizeParams::new(0.1, 1.0, 1),
            SampleSizeParams::new(0.1, 0.1, 0),
        ] {
            assert!(sample_size_theorem1(&p).is_err());
        }
    }
}

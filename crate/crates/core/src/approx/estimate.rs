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

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interner::{LabelId, LabelInterner};
use crate::kernel::FeatureVector;
use crate::kset::KSet;

use super::local::{local_labels_private, sample_kset_uniform};

/// Hard cap on the total samples the adaptive estimator may draw.
pub const DEFAULT_MAX_SAMPLES: usize = 10_000_000;

/// One round of the adaptive estimator.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RoundLog {
    pub round: usize,
    pub batch: usize,
    pub total: usize,
    pub delta: f64,
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampledEstimate {
    /// Estimated normalized histogram per iteration; each block sums to 1.
    pub features: FeatureVector,
    pub sample_count: usize,
    pub seed: Option<u64>,
    pub rounds: Vec<RoundLog>,
    /// The graph had fewer than `k` vertices; all blocks are empty.
    pub too_small: bool,
}

impl SampledEstimate {
    fn empty(h: usize) -> Self {
        SampledEstimate {
            features: FeatureVector::zeros(h),
            sample_count: 0,
            seed: None,
            rounds: Vec::new(),
            too_small: true,
        }
    }
}

/// Label counts of a sample, per iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct RademacherState {
    m: usize,
    counts: Vec<BTreeMap<LabelId, u64>>,
}

impl RademacherState {
    pub fn new(h: usize) -> Self {
        RademacherState {
            m: 0,
            counts: vec![BTreeMap::new(); h + 1],
        }
    }

    /// Records one sample's labels at iterations `0..=h`.
    pub fn add(&mut self, labels: &[LabelId]) {
        debug_assert_eq!(labels.len(), self.counts.len());
        for (block, &l) in self.counts.iter_mut().zip(labels) {
            *block.entry(l).or_insert(0) += 1;
        }
        self.m += 1;
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn counts(&self) -> &[BTreeMap<LabelId, u64>] {
        &self.counts
    }

    /// Distinct realized value vectors: one per observed (iteration, label)
    /// pair plus the zero vector of every unobserved indicator.
    pub fn distinct_vectors(&self) -> usize {
        self.counts.iter().map(BTreeMap::len).sum::<usize>() + 1
    }

    pub fn max_count(&self) -> u64 {
        self.counts
            .iter()
            .flat_map(|b| b.values().copied())
            .max()
            .unwrap_or(0)
    }

    /// Massart bound on the conditional Rademacher average of the label
    /// indicators: `max ||v|| sqrt(2 ln |V|) / m`.
    pub fn rademacher_bound(&self) -> f64 {
        let norm = (self.max_count() as f64).sqrt();
        norm * (2.0 * (self.distinct_vectors() as f64).ln()).sqrt() / self.m as f64
    }

    pub fn to_features(&self) -> FeatureVector {
        let m = self.m as f64;
        FeatureVector {
            blocks: self
                .counts
                .iter()
                .map(|b| b.iter().map(|(&l, &c)| (l, c as f64 / m)).collect())
                .collect(),
        }
    }
}

/// With probability at least `1 - delta`, every label frequency of the
/// sample is within this distance of its population frequency:
/// `2 R + 3 sqrt(ln(2 / delta) / (2 m))` with `R` the Massart bound.
pub fn massart_deviation_bound(state: &RademacherState, delta: f64) -> Result<f64> {
    if state.m == 0 {
        return Err(Error::Param(
            "the deviation bound needs at least one sample".into(),
        ));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::Param(format!(
            "delta must lie in (0, 1), got {delta}"
        )));
    }
    let m = state.m as f64;
    Ok(2.0 * state.rademacher_bound() + 3.0 * ((2.0 / delta).ln() / (2.0 * m)).sqrt())
}

/// Labels samples, memoizing per k-set. Unseen sets are labeled in
/// parallel and imported into the caller's interner in first-seen order.
struct Labeler<'g> {
    graph: &'g Graph,
    h: usize,
    cache: HashMap<KSet, Vec<LabelId>>,
}

impl<'g> Labeler<'g> {
    fn new(graph: &'g Graph, h: usize) -> Self {
        Labeler {
            graph,
            h,
            cache: HashMap::new(),
        }
    }

    fn label_into(
        &mut self,
        samples: &[KSet],
        interner: &mut LabelInterner,
        state: &mut RademacherState,
    ) -> Result<()> {
        let mut fresh: Vec<&KSet> = Vec::new();
        let mut queued = std::collections::HashSet::new();
        for s in samples {
            if !self.cache.contains_key(s) && queued.insert(s) {
                fresh.push(s);
            }
        }
        let labeled: Vec<(LabelInterner, Vec<LabelId>)> = fresh
            .par_iter()
            .map(|s| local_labels_private(self.graph, s, self.h))
            .collect::<Result<_>>()?;
        for (s, (local, labels)) in fresh.into_iter().zip(labeled) {
            let mut memo = HashMap::new();
            let global = labels
                .into_iter()
                .map(|l| interner.import(&local, l, &mut memo))
                .collect();
            self.cache.insert(s.clone(), global);
        }
        for s in samples {
            state.add(&self.cache[s]);
        }
        Ok(())
    }
}

fn draw<R: Rng + ?Sized>(g: &Graph, k: usize, count: usize, rng: &mut R) -> Result<Vec<KSet>> {
    (0..count).map(|_| sample_kset_uniform(g, k, rng)).collect()
}

/// Fixed-size estimator: `sample_count` uniform k-sets, each adding
/// `1 / sample_count` to the bucket of its label at every iteration
/// `0..=h`.
///
/// A graph with fewer than `k` vertices yields the all-zero estimate with
/// `too_small` set.
pub fn algorithm1<R: Rng + ?Sized>(
    g: &Graph,
    k: usize,
    h: usize,
    sample_count: usize,
    rng: &mut R,
    interner: &mut LabelInterner,
) -> Result<SampledEstimate> {
    if sample_count == 0 {
        return Err(Error::Param("sample count must be at least 1".into()));
    }
    if k < 2 {
        return Err(Error::Param(format!("k-sets need k >= 2, got {k}")));
    }
    if g.num_vertices() < k {
        return Ok(SampledEstimate::empty(h));
    }
    let samples = draw(g, k, sample_count, rng)?;
    let mut state = RademacherState::new(h);
    Labeler::new(g, h).label_into(&samples, interner, &mut state)?;
    Ok(SampledEstimate {
        features: state.to_features(),
        sample_count,
        seed: None,
        rounds: Vec::new(),
        too_small: false,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AdaptiveParams {
    pub epsilon: f64,
    pub delta: f64,
    pub initial_size: usize,
    pub growth_factor: f64,
    pub max_samples: usize,
    /// Split `delta` geometrically over rounds (`delta / 2^(i+1)` in round
    /// `i`) so the guarantee survives the repeated stopping test. Off by
    /// default: every round is tested at the full `delta`.
    pub strict_delta: bool,
}

impl AdaptiveParams {
    pub fn new(epsilon: f64, delta: f64) -> Self {
        AdaptiveParams {
            epsilon,
            delta,
            initial_size: 100,
            growth_factor: 2.0,
            max_samples: DEFAULT_MAX_SAMPLES,
            strict_delta: false,
        }
    }

    fn validate(&self) -> Result<()> {
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
        if self.initial_size == 0 {
            return Err(Error::Param(
                "initial sample size must be at least 1".into(),
            ));
        }
        if !(self.growth_factor > 1.0 && self.growth_factor.is_finite()) {
            return Err(Error::Param(format!(
                "growth factor must exceed 1, got {}",
                self.growth_factor
            )));
        }
        Ok(())
    }

    fn batch(&self, round: usize) -> usize {
        (self.initial_size as f64 * self.growth_factor.powi(round as i32)).round() as usize
    }

    fn round_delta(&self, round: usize) -> f64 {
        if self.strict_delta {
            self.delta / 2f64.powi(round as i32 + 1)
        } else {
            self.delta
        }
    }
}

/// Adaptive estimator: draws growing batches until the Rademacher
/// deviation bound over all iterations' label indicators is at most
/// `epsilon`, then returns the accumulated frequencies.
pub fn algorithm2<R: Rng + ?Sized>(
    g: &Graph,
    k: usize,
    h: usize,
    params: &AdaptiveParams,
    rng: &mut R,
    interner: &mut LabelInterner,
) -> Result<SampledEstimate> {
    params.validate()?;
    if k < 2 {
        return Err(Error::Param(format!("k-sets need k >= 2, got {k}")));
    }
    if g.num_vertices() < k {
        return Ok(SampledEstimate::empty(h));
    }
    let mut labeler = Labeler::new(g, h);
    let mut state = RademacherState::new(h);
    let mut rounds = Vec::new();
    for round in 0.. {
        let batch = params.batch(round);
        if state.m() + batch > params.max_samples {
            let last = rounds.last().map_or(f64::INFINITY, |r: &RoundLog| r.bound);
            return Err(Error::Resource(format!(
                "adaptive sampling stopped at {} samples with bound {last:.4} > epsilon {}; \
                 the next batch of {batch} would pass the cap of {}",
                state.m(),
                params.epsilon,
                params.max_samples
            )));
        }
        let samples = draw(g, k, batch, rng)?;
        labeler.label_into(&samples, interner, &mut state)?;
        let delta = params.round_delta(round);
        let bound = massart_deviation_bound(&state, delta)?;
        rounds.push(RoundLog {
            round,
            batch,
            total: state.m(),
            delta,
            bound,
        });
        if bound <= params.epsilon {
            break;
        }
    }
    Ok(SampledEstimate {
        features: state.to_features(),
        sample_count: state.m(),
        seed: None,
        rounds,
        too_small: false,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EstimateMethod {
    Fixed(usize),
    Adaptive(AdaptiveParams),
}

/// Estimates for every graph of a dataset in one label space.
///
/// Graph `i` draws from ChaCha8 seeded with `seed` on stream `i`, and runs
/// against a private interner whose labels are then imported in graph
/// order, so results do not depend on the number of worker threads.
pub fn estimate_all(
    graphs: &[Graph],
    k: usize,
    h: usize,
    method: EstimateMethod,
    seed: u64,
    interner: &mut LabelInterner,
) -> Result<Vec<SampledEstimate>> {
    let runs: Vec<(LabelInterner, SampledEstimate)> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let mut local = LabelInterner::new();
            let est = match method {
                EstimateMethod::Fixed(m) => algorithm1(g, k, h, m, &mut rng, &mut local)?,
                EstimateMethod::Adaptive(p) => algorithm2(g, k, h, &p, &mut rng, &mut local)?,
            };
            Ok((local, est))
        })
        .collect::<Result<_>>()?;

    Ok(runs
        .into_iter()
        .map(|(local, mut est)| {
            let mut memo = HashMap::new();
            for block in &mut est.features.blocks {
                *block = block
                    .iter()
                    .map(|(&l, &w)| (interner.import(&local, l, &mut memo), w))
                    .collect();
            }
            est.seed = Some(seed);
            est
        })
        .collect())
}

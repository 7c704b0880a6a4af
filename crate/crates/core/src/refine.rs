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

//! Color refinement over an arbitrary neighbor structure, and the 1-WL
//! subtree features built on it.
//!
//! Every refinement round runs in two phases: refinement keys for all items
//! are computed in parallel, then interned in ascending key order. Label ids
//! therefore never depend on scheduling.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use rayon::prelude::*;

use crate::graph::Graph;
use crate::interner::{LabelId, LabelInterner, LabelKey};
use crate::kernel::FeatureVector;

/// Items below this count are refined on the calling thread.
const PAR_THRESHOLD: usize = 2048;

/// Anything whose items can be colored by neighbor aggregation: vertices of
/// a graph, k-sets under the local or global neighborhood.
pub trait NeighborSource: Sync {
    fn num_items(&self) -> usize;

    /// Appends the neighbors of `item` to `out` (which the caller clears).
    fn neighbors_into(&self, item: usize, out: &mut Vec<usize>);
}

impl NeighborSource for Graph {
    fn num_items(&self) -> usize {
        self.num_vertices()
    }

    fn neighbors_into(&self, item: usize, out: &mut Vec<usize>) {
        out.extend_from_slice(self.neighbors(item));
    }
}

impl<S: NeighborSource> NeighborSource for &S {
    fn num_items(&self) -> usize {
        (**self).num_items()
    }

    fn neighbors_into(&self, item: usize, out: &mut Vec<usize>) {
        (**self).neighbors_into(item, out)
    }
}

/// Labels of all colored items of one graph after some number of rounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub iteration: usize,
    pub labels: Vec<LabelId>,
}

impl Coloring {
    pub fn histogram(&self) -> BTreeMap<LabelId, f64> {
        let mut hist = BTreeMap::new();
        for &l in &self.labels {
            *hist.entry(l).or_insert(0.0) += 1.0;
        }
        hist
    }

    pub fn num_classes(&self) -> usize {
        canonical_partition(&self.labels)
            .iter()
            .max()
            .map_or(0, |m| m + 1)
    }

    pub fn partition(&self) -> Vec<usize> {
        canonical_partition(&self.labels)
    }
}

/// Renames classes by order of first occurrence. Two labelings induce the
/// same partition iff their canonical forms are equal.
pub fn canonical_partition<T: Copy + Eq + Hash>(labels: &[T]) -> Vec<usize> {
    let mut seen = HashMap::new();
    labels
        .iter()
        .map(|l| {
            let next = seen.len();
            *seen.entry(*l).or_insert(next)
        })
        .collect()
}

fn refine_key(prev: &[LabelId], item: usize, neighbors: &[usize]) -> LabelKey {
    let mut tuple: Vec<LabelId> = neighbors.iter().map(|&n| prev[n]).collect();
    tuple.sort_unstable();
    LabelKey::Refine(prev[item], tuple)
}

/// Phase one of a refinement round: the key of every item.
pub(crate) fn refine_keys<S: NeighborSource>(source: &S, prev: &[LabelId]) -> Vec<LabelKey> {
    let n = source.num_items();
    debug_assert_eq!(prev.len(), n);
    if n < PAR_THRESHOLD {
        let mut buf = Vec::new();
        (0..n)
            .map(|i| {
                buf.clear();
                source.neighbors_into(i, &mut buf);
                refine_key(prev, i, &buf)
            })
            .collect()
    } else {
        (0..n)
            .into_par_iter()
            .map_init(Vec::new, |buf, i| {
                buf.clear();
                source.neighbors_into(i, buf);
                refine_key(prev, i, buf)
            })
            .collect()
    }
}

/// Interns per-graph key lists as one batch and splits the ids back out.
pub(crate) fn intern_grouped(
    interner: &mut LabelInterner,
    keys: Vec<Vec<LabelKey>>,
    iteration: usize,
) -> Vec<Coloring> {
    let sizes: Vec<usize> = keys.iter().map(Vec::len).collect();
    let flat: Vec<LabelKey> = keys.into_iter().flatten().collect();
    let mut ids = interner.intern_batch(&flat).into_iter();
    sizes
        .into_iter()
        .map(|len| Coloring {
            iteration,
            labels: ids.by_ref().take(len).collect(),
        })
        .collect()
}

/// One refinement round applied jointly to several sources sharing an
/// interner.
pub fn refine_step_all<S: NeighborSource>(
    sources: &[S],
    prev: &[Coloring],
    interner: &mut LabelInterner,
) -> Vec<Coloring> {
    assert_eq!(sources.len(), prev.len());
    let keys: Vec<Vec<LabelKey>> = sources
        .par_iter()
        .zip(prev.par_iter())
        .map(|(s, c)| refine_keys(s, &c.labels))
        .collect();
    let iteration = prev.first().map_or(0, |c| c.iteration + 1);
    intern_grouped(interner, keys, iteration)
}

/// Runs exactly `h` rounds from `initial`; returns the `h + 1` colorings of
/// each source. No early stop on a stable partition.
pub fn refine_all<S: NeighborSource>(
    sources: &[S],
    initial: Vec<Coloring>,
    h: usize,
    interner: &mut LabelInterner,
) -> Vec<Vec<Coloring>> {
    let mut history: Vec<Vec<Coloring>> = initial.iter().map(|c| vec![c.clone()]).collect();
    let mut current = initial;
    for _ in 0..h {
        current = refine_step_all(sources, &current, interner);
        for (hist, c) in history.iter_mut().zip(&current) {
            hist.push(c.clone());
        }
    }
    history
}

fn initial_key(g: &Graph, v: usize) -> LabelKey {
    match g.node_label(v) {
        Some(l) => LabelKey::NodeLabel(l),
        None => LabelKey::Degree(g.degree(v)),
    }
}

/// Iteration-0 coloring: raw node labels, or degrees for unlabeled graphs.
pub fn initial_coloring(g: &Graph, interner: &mut LabelInterner) -> Coloring {
    initial_colorings(std::slice::from_ref(g), interner).remove(0)
}

fn initial_colorings(graphs: &[Graph], interner: &mut LabelInterner) -> Vec<Coloring> {
    let keys = graphs
        .iter()
        .map(|g| (0..g.num_vertices()).map(|v| initial_key(g, v)).collect())
        .collect();
    intern_grouped(interner, keys, 0)
}

pub fn wl1_step(g: &Graph, c: &Coloring, interner: &mut LabelInterner) -> Coloring {
    refine_step_all(std::slice::from_ref(g), std::slice::from_ref(c), interner).remove(0)
}

pub fn wl1_colorings(g: &Graph, h: usize, interner: &mut LabelInterner) -> Vec<Coloring> {
    wl1_colorings_all(std::slice::from_ref(g), h, interner).remove(0)
}

pub fn wl1_colorings_all(
    graphs: &[Graph],
    h: usize,
    interner: &mut LabelInterner,
) -> Vec<Vec<Coloring>> {
    let initial = initial_colorings(graphs, interner);
    refine_all(graphs, initial, h, interner)
}

/// Subtree-kernel features: one label histogram per iteration `0..=h`.
pub fn wl1_features(g: &Graph, h: usize, interner: &mut LabelInterner) -> FeatureVector {
    FeatureVector::from_colorings(&wl1_colorings(g, h, interner))
}

/// Features for a whole dataset over one shared label space.
pub fn wl1_features_all(
    graphs: &[Graph],
    h: usize,
    interner: &mut LabelInterner,
) -> Vec<FeatureVector> {
    wl1_colorings_all(graphs, h, interner)
        .iter()
        .map(|c| FeatureVector::from_colorings(c))
        .collect()
}

/// Isomorphism-test use of 1-WL: true if some iteration up to `h` yields
/// differing label counts, which proves the graphs non-isomorphic.
pub fn distinguishable(g1: &Graph, g2: &Graph, h: usize) -> bool {
    let mut interner = LabelInterner::new();
    let both = [g1.clone(), g2.clone()];
    let colorings = wl1_colorings_all(&both, h, &mut interner);
    colorings[0]
        .iter()
        .zip(&colorings[1])
        .any(|(a, b)| a.histogram() != b.histogram())
}

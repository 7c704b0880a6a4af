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

//! Exact k-set refinement: iteration 0 colors every k-set by isomorphism
//! type, later iterations refine over the local (k-LWL) or global (k-GWL)
//! neighborhood.

use rayon::prelude::*;

use crate::error::Result;
use crate::graph::Graph;
use crate::interner::{LabelInterner, LabelKey};
use crate::kernel::FeatureVector;
use crate::refine::{intern_grouped, refine_all, Coloring, NeighborSource};

use super::index::KSetIndex;
use super::iso::iso_code;
use super::neighbors::{check_budget, GlobalNeighbors, LocalNeighbors};

/// Largest `C(n, k)` exact modes accept per graph.
pub const DEFAULT_KSET_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Neighborhood {
    Local,
    Global,
}

enum Source<'a> {
    Local(LocalNeighbors<'a>),
    Global(GlobalNeighbors<'a>),
}

impl NeighborSource for Source<'_> {
    fn num_items(&self) -> usize {
        match self {
            Source::Local(s) => s.num_items(),
            Source::Global(s) => s.num_items(),
        }
    }

    fn neighbors_into(&self, item: usize, out: &mut Vec<usize>) {
        match self {
            Source::Local(s) => s.neighbors_into(item, out),
            Source::Global(s) => s.neighbors_into(item, out),
        }
    }
}

fn iso_keys(g: &Graph, index: &KSetIndex) -> Vec<LabelKey> {
    let key = |r: usize| LabelKey::IsoType(iso_code(g, index.unrank(r).vertices()));
    if index.len() < 2048 {
        (0..index.len()).map(key).collect()
    } else {
        (0..index.len()).into_par_iter().map(key).collect()
    }
}

/// Colorings `0..=h` of the k-sets of every graph, in colex rank order,
/// over one shared label space. Graphs with fewer than `k` vertices get
/// empty colorings.
pub fn kset_colorings_all(
    graphs: &[Graph],
    k: usize,
    h: usize,
    neighborhood: Neighborhood,
    budget: u64,
    interner: &mut LabelInterner,
) -> Result<Vec<Vec<Coloring>>> {
    let indices = graphs
        .iter()
        .map(|g| {
            let idx = KSetIndex::new(g.num_vertices(), k)?;
            check_budget(&idx, budget)?;
            Ok(idx)
        })
        .collect::<Result<Vec<_>>>()?;

    let keys: Vec<Vec<LabelKey>> = graphs
        .par_iter()
        .zip(indices.par_iter())
        .map(|(g, idx)| iso_keys(g, idx))
        .collect();
    let initial = intern_grouped(interner, keys, 0);

    let sources: Vec<Source> = graphs
        .iter()
        .zip(indices)
        .map(|(g, idx)| match neighborhood {
            Neighborhood::Local => Source::Local(LocalNeighbors::new(g, idx)),
            Neighborhood::Global => Source::Global(GlobalNeighbors::new(g, idx)),
        })
        .collect();
    Ok(refine_all(&sources, initial, h, interner))
}

pub fn kset_features_all(
    graphs: &[Graph],
    k: usize,
    h: usize,
    neighborhood: Neighborhood,
    budget: u64,
    interner: &mut LabelInterner,
) -> Result<Vec<FeatureVector>> {
    Ok(
        kset_colorings_all(graphs, k, h, neighborhood, budget, interner)?
            .iter()
            .map(|c| FeatureVector::from_colorings(c))
            .collect(),
    )
}

fn single(
    g: &Graph,
    k: usize,
    h: usize,
    neighborhood: Neighborhood,
    interner: &mut LabelInterner,
) -> Result<Vec<Coloring>> {
    Ok(kset_colorings_all(
        std::slice::from_ref(g),
        k,
        h,
        neighborhood,
        DEFAULT_KSET_BUDGET,
        interner,
    )?
    .remove(0))
}

pub fn klwl_colorings(
    g: &Graph,
    k: usize,
    h: usize,
    interner: &mut LabelInterner,
) -> Result<Vec<Coloring>> {
    single(g, k, h, Neighborhood::Local, interner)
}

pub fn kgwl_colorings(
    g: &Graph,
    k: usize,
    h: usize,
    interner: &mut LabelInterner,
) -> Result<Vec<Coloring>> {
    single(g, k, h, Neighborhood::Global, interner)
}

/// Local k-set WL features: per-iteration histograms over k-set labels.
pub fn klwl_features(
    g: &Graph,
    k: usize,
    h: usize,
    interner: &mut LabelInterner,
) -> Result<FeatureVector> {
    Ok(FeatureVector::from_colorings(&klwl_colorings(
        g, k, h, interner,
    )?))
}

/// Global k-set WL features.
pub fn kgwl_features(
    g: &Graph,
    k: usize,
    h: usize,
    interner: &mut LabelInterner,
) -> Result<FeatureVector> {
    Ok(FeatureVector::from_colorings(&kgwl_colorings(
        g, k, h, interner,
    )?))
}

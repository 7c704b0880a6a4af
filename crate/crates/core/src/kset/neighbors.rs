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

//! Global and local k-set neighborhoods, the directed k-set graph and
//! c-neighborhoods.
//!
//! A neighbor of `t` replaces one member `t_j` by a vertex `r` outside `t`.
//! In the local variant `r` must be adjacent to at least one member of `t`
//! (the replaced member included).

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::refine::NeighborSource;

use super::index::{KSet, KSetIndex};

/// All `k (n - k)` global neighbors, ordered by replaced position then by
/// incoming vertex.
pub fn global_neighbors(g: &Graph, t: &KSet) -> Vec<KSet> {
    let mut out = Vec::with_capacity(t.k() * g.num_vertices().saturating_sub(t.k()));
    for j in 0..t.k() {
        for r in 0..g.num_vertices() {
            if !t.contains(r) {
                out.push(t.replaced(j, r));
            }
        }
    }
    out
}

/// Vertices outside `t` adjacent to some member of `t`, ascending.
fn incoming_candidates(g: &Graph, t: &[usize], out: &mut Vec<usize>) {
    out.clear();
    for &v in t {
        out.extend(
            g.neighbors(v)
                .iter()
                .filter(|r| t.binary_search(r).is_err()),
        );
    }
    out.sort_unstable();
    out.dedup();
}

/// Local neighbors, ordered by replaced position then by incoming vertex.
pub fn local_neighbors(g: &Graph, t: &KSet) -> Vec<KSet> {
    let mut cand = Vec::new();
    incoming_candidates(g, t.vertices(), &mut cand);
    let mut out = Vec::with_capacity(t.k() * cand.len());
    for j in 0..t.k() {
        out.extend(cand.iter().map(|&r| t.replaced(j, r)));
    }
    out
}

/// Writes the rank of `t` with position `j` replaced by `r` into `scratch`.
fn replaced_rank(
    index: &KSetIndex,
    t: &[usize],
    j: usize,
    r: usize,
    scratch: &mut Vec<usize>,
) -> usize {
    scratch.clear();
    scratch.extend(
        t.iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, &v)| v),
    );
    let at = scratch.partition_point(|&x| x < r);
    scratch.insert(at, r);
    index.rank(scratch)
}

/// Global neighborhoods of all k-sets of a graph, generated on demand.
pub struct GlobalNeighbors<'a> {
    graph: &'a Graph,
    index: KSetIndex,
}

impl<'a> GlobalNeighbors<'a> {
    pub fn new(graph: &'a Graph, index: KSetIndex) -> Self {
        GlobalNeighbors { graph, index }
    }
}

impl NeighborSource for GlobalNeighbors<'_> {
    fn num_items(&self) -> usize {
        self.index.len()
    }

    fn neighbors_into(&self, item: usize, out: &mut Vec<usize>) {
        let k = self.index.k();
        let mut t = vec![0; k];
        self.index.unrank_into(item, &mut t);
        let mut scratch = Vec::with_capacity(k);
        for j in 0..k {
            for r in 0..self.graph.num_vertices() {
                if t.binary_search(&r).is_err() {
                    out.push(replaced_rank(&self.index, &t, j, r, &mut scratch));
                }
            }
        }
    }
}

/// Local neighborhoods of all k-sets of a graph, generated on demand.
pub struct LocalNeighbors<'a> {
    graph: &'a Graph,
    index: KSetIndex,
}

impl<'a> LocalNeighbors<'a> {
    pub fn new(graph: &'a Graph, index: KSetIndex) -> Self {
        LocalNeighbors { graph, index }
    }
}

impl NeighborSource for LocalNeighbors<'_> {
    fn num_items(&self) -> usize {
        self.index.len()
    }

    fn neighbors_into(&self, item: usize, out: &mut Vec<usize>) {
        let k = self.index.k();
        let mut t = vec![0; k];
        self.index.unrank_into(item, &mut t);
        let mut cand = Vec::new();
        incoming_candidates(self.graph, &t, &mut cand);
        let mut scratch = Vec::with_capacity(k);
        for j in 0..k {
            for &r in &cand {
                out.push(replaced_rank(&self.index, &t, j, r, &mut scratch));
            }
        }
    }
}

/// The directed k-set graph: an arc from every k-set to each of its local
/// neighbors, over colex ranks.
#[derive(Debug, Clone)]
pub struct KSetGraph {
    index: KSetIndex,
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl KSetGraph {
    pub fn index(&self) -> &KSetIndex {
        &self.index
    }

    pub fn num_nodes(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_arcs(&self) -> usize {
        self.targets.len()
    }

    /// Out-neighbor ranks of `rank`, ascending.
    pub fn out_neighbors(&self, rank: usize) -> &[usize] {
        &self.targets[self.offsets[rank]..self.offsets[rank + 1]]
    }

    /// Row offsets and column indices of the adjacency matrix.
    pub fn csr(&self) -> (&[usize], &[usize]) {
        (&self.offsets, &self.targets)
    }
}

impl NeighborSource for KSetGraph {
    fn num_items(&self) -> usize {
        self.num_nodes()
    }

    fn neighbors_into(&self, item: usize, out: &mut Vec<usize>) {
        out.extend_from_slice(self.out_neighbors(item));
    }
}

pub(crate) fn check_budget(index: &KSetIndex, budget: u64) -> Result<()> {
    if index.count() > budget {
        return Err(Error::Resource(format!(
            "{} vertices give C({}, {}) = {} k-sets, above the cap of {}; use sampled mode",
            index.n(),
            index.n(),
            index.k(),
            index.count(),
            budget
        )));
    }
    Ok(())
}

pub fn build_kset_graph(g: &Graph, k: usize, budget: u64) -> Result<KSetGraph> {
    let index = KSetIndex::new(g.num_vertices(), k)?;
    check_budget(&index, budget)?;
    let source = LocalNeighbors::new(g, index.clone());
    let mut offsets = Vec::with_capacity(index.len() + 1);
    offsets.push(0);
    let mut targets = Vec::new();
    let mut buf = Vec::new();
    for rank in 0..index.len() {
        buf.clear();
        source.neighbors_into(rank, &mut buf);
        buf.sort_unstable();
        targets.extend_from_slice(&buf);
        offsets.push(targets.len());
    }
    Ok(KSetGraph {
        index,
        offsets,
        targets,
    })
}

/// All k-sets within directed distance `c` of `t` in the k-set graph,
/// ascending. Expands local neighborhoods breadth-first without building
/// the k-set graph, so the cost depends on degrees only.
pub fn c_neighborhood(g: &Graph, t: &KSet, c: usize) -> Vec<KSet> {
    let mut seen: HashSet<KSet> = HashSet::new();
    seen.insert(t.clone());
    let mut queue = VecDeque::from([(t.clone(), 0usize)]);
    while let Some((s, d)) = queue.pop_front() {
        if d == c {
            continue;
        }
        for next in local_neighbors(g, &s) {
            if seen.insert(next.clone()) {
                queue.push_back((next, d + 1));
            }
        }
    }
    let mut out: Vec<KSet> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

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

//! Test-only brute-force reference implementations and random inputs.
//!
//! Everything here works on explicit vertex sets and dense adjacency
//! matrices with quadratic scans, and shares no code with the library beyond
//! building its input graphs.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use itertools::Itertools;
use kwl::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// A labeled graph held as dense matrices.
#[derive(Debug, Clone)]
pub struct Naive {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
    /// Whether `node` holds real labels; unlabeled graphs start 1-WL from
    /// degrees.
    pub labeled: bool,
    pub node: Vec<i64>,
    /// Edge label per pair; meaningful only where `adj` is set.
    pub edge: Vec<Vec<i64>>,
}

/// A random instance: the edge list it was drawn from plus both
/// representations built from that list independently.
#[derive(Debug, Clone)]
pub struct Instance {
    pub edges: Vec<(usize, usize)>,
    pub graph: Graph,
    pub naive: Naive,
}

impl Naive {
    pub fn new(
        n: usize,
        edges: &[(usize, usize)],
        node: Option<&[i64]>,
        edge: Option<&[i64]>,
    ) -> Naive {
        let mut adj = vec![vec![false; n]; n];
        let mut el = vec![vec![0; n]; n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u][v] = true;
            adj[v][u] = true;
            let l = edge.map_or(0, |e| e[i]);
            el[u][v] = l;
            el[v][u] = l;
        }
        Naive {
            n,
            adj,
            labeled: node.is_some(),
            node: node.map_or(vec![0; n], <[i64]>::to_vec),
            edge: el,
        }
    }
}

/// Erdos-Renyi graph; node labels from `0..node_alphabet` when given, edge
/// labels from `0..edge_alphabet` when given.
pub fn random_instance<R: Rng>(
    rng: &mut R,
    n: usize,
    p: f64,
    node_alphabet: Option<i64>,
    edge_alphabet: Option<i64>,
) -> Instance {
    let edges: Vec<(usize, usize)> = (0..n)
        .tuple_combinations()
        .filter(|_| rng.random_bool(p))
        .collect();
    let node: Option<Vec<i64>> =
        node_alphabet.map(|a| (0..n).map(|_| rng.random_range(0..a)).collect());
    let edge: Option<Vec<i64>> =
        edge_alphabet.map(|a| edges.iter().map(|_| rng.random_range(0..a)).collect());
    let graph = Graph::build(n, &edges, node.clone(), edge.clone()).expect("valid random graph");
    let naive = Naive::new(n, &edges, node.as_deref(), edge.as_deref());
    Instance {
        edges,
        graph,
        naive,
    }
}

/// Random simple 3-regular graph by the pairing model with restarts.
pub fn random_cubic<R: Rng>(rng: &mut R, n: usize) -> Graph {
    assert!(n.is_multiple_of(2) && n >= 4);
    'retry: loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(rng);
        let mut seen = BTreeSet::new();
        let mut edges = Vec::with_capacity(3 * n / 2);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                continue 'retry;
            }
            edges.push((u, v));
        }
        return Graph::build(n, &edges, None, None).expect("simple cubic graph");
    }
}

pub fn vertex_permutation<R: Rng>(rng: &mut R, inst: &Instance) -> Instance {
    let n = inst.naive.n;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<(usize, usize)> = inst
        .edges
        .iter()
        .map(|&(u, v)| (perm[u], perm[v]))
        .collect();
    let mut node = vec![0; n];
    for v in 0..n {
        node[perm[v]] = inst.naive.node[v];
    }
    let edge: Vec<i64> = inst
        .edges
        .iter()
        .map(|&(u, v)| inst.naive.edge[u][v])
        .collect();
    let graph = Graph::build(
        n,
        &edges,
        inst.graph.node_labels().map(|_| node.clone()),
        inst.graph.has_edge_labels().then(|| edge.clone()),
    )
    .unwrap();
    let labeled = inst.naive.labeled.then_some(&node[..]);
    let naive = Naive::new(n, &edges, labeled, Some(&edge));
    Instance {
        edges,
        graph,
        naive,
    }
}

/// All k-subsets in lexicographic order.
pub fn all_ksets(n: usize, k: usize) -> Vec<BTreeSet<usize>> {
    (0..n)
        .combinations(k)
        .map(|c| c.into_iter().collect())
        .collect()
}

/// Index of `s` in `sets`.
pub fn position(sets: &[BTreeSet<usize>], s: &BTreeSet<usize>) -> usize {
    sets.iter().position(|t| t == s).expect("set present")
}

/// True iff some bijection `s -> t` preserves node labels, adjacency and
/// edge labels.
pub fn isomorphic(g: &Naive, s: &BTreeSet<usize>, h: &Naive, t: &BTreeSet<usize>) -> bool {
    let s: Vec<usize> = s.iter().copied().collect();
    let t: Vec<usize> = t.iter().copied().collect();
    if s.len() != t.len() {
        return false;
    }
    t.iter().copied().permutations(t.len()).any(|image| {
        (0..s.len()).all(|i| g.node[s[i]] == h.node[image[i]])
            && (0..s.len()).all(|i| {
                (0..s.len()).all(|j| {
                    let (a, b) = (g.adj[s[i]][s[j]], h.adj[image[i]][image[j]]);
                    a == b && (!a || g.edge[s[i]][s[j]] == h.edge[image[i]][image[j]])
                })
            })
    })
}

/// Replacing one element of `t` by a vertex outside it; `local` keeps only
/// incoming vertices adjacent to some member of the original `t`.
pub fn naive_neighbors(g: &Naive, t: &BTreeSet<usize>, local: bool) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    for s in all_ksets(g.n, t.len()) {
        if s.intersection(t).count() + 1 != t.len() {
            continue;
        }
        let r = *s.difference(t).next().unwrap();
        if !local || t.iter().any(|&l| g.adj[l][r]) {
            out.push(s);
        }
    }
    out
}

/// Joint refinement of several graphs' k-sets. Returns, per graph, per
/// iteration `0..=h`, one label per k-set in [`all_ksets`] order; labels
/// are comparable across graphs.
pub fn naive_kset_refinement(
    graphs: &[&Naive],
    k: usize,
    h: usize,
    local: bool,
) -> Vec<Vec<Vec<usize>>> {
    let sets: Vec<Vec<BTreeSet<usize>>> = graphs.iter().map(|g| all_ksets(g.n, k)).collect();

    // Isomorphism classes by pairwise comparison against one representative
    // per class.
    let mut reps: Vec<(usize, BTreeSet<usize>)> = Vec::new();
    let mut labels: Vec<Vec<usize>> = Vec::new();
    for (gi, g) in graphs.iter().enumerate() {
        let mut l = Vec::new();
        for s in &sets[gi] {
            let class = reps
                .iter()
                .position(|(hi, t)| isomorphic(g, s, graphs[*hi], t))
                .unwrap_or_else(|| {
                    reps.push((gi, s.clone()));
                    reps.len() - 1
                });
            l.push(class);
        }
        labels.push(l);
    }

    let nbrs: Vec<Vec<Vec<usize>>> = graphs
        .iter()
        .enumerate()
        .map(|(gi, g)| {
            sets[gi]
                .iter()
                .map(|t| {
                    naive_neighbors(g, t, local)
                        .iter()
                        .map(|s| position(&sets[gi], s))
                        .collect()
                })
                .collect()
        })
        .collect();

    let mut out: Vec<Vec<Vec<usize>>> = labels.iter().map(|l| vec![l.clone()]).collect();
    for _ in 0..h {
        let mut ids: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let mut next = Vec::new();
        for gi in 0..graphs.len() {
            let prev = out[gi].last().unwrap();
            let mut l = Vec::new();
            for (i, ns) in nbrs[gi].iter().enumerate() {
                let mut multiset: Vec<usize> = ns.iter().map(|&j| prev[j]).collect();
                multiset.sort_unstable();
                let fresh = ids.len();
                l.push(*ids.entry((prev[i], multiset)).or_insert(fresh));
            }
            next.push(l);
        }
        for (gi, l) in next.into_iter().enumerate() {
            out[gi].push(l);
        }
    }
    out
}

/// Joint 1-WL over several graphs, labels comparable across graphs. Starts
/// from node labels, or from degrees for unlabeled graphs.
pub fn naive_wl1(graphs: &[&Naive], h: usize) -> Vec<Vec<Vec<usize>>> {
    let mut ids: BTreeMap<(bool, i64), usize> = BTreeMap::new();
    let mut out: Vec<Vec<Vec<usize>>> = graphs
        .iter()
        .map(|g| {
            vec![(0..g.n)
                .map(|v| {
                    let key = if g.labeled {
                        (true, g.node[v])
                    } else {
                        (false, g.adj[v].iter().filter(|&&a| a).count() as i64)
                    };
                    let fresh = ids.len();
                    *ids.entry(key).or_insert(fresh)
                })
                .collect()]
        })
        .collect();
    for _ in 0..h {
        let mut ids: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let next: Vec<Vec<usize>> = graphs
            .iter()
            .enumerate()
            .map(|(gi, g)| {
                let prev = out[gi].last().unwrap().clone();
                (0..g.n)
                    .map(|v| {
                        let mut m: Vec<usize> =
                            (0..g.n).filter(|&u| g.adj[v][u]).map(|u| prev[u]).collect();
                        m.sort_unstable();
                        let fresh = ids.len();
                        *ids.entry((prev[v], m)).or_insert(fresh)
                    })
                    .collect()
            })
            .collect();
        for (gi, l) in next.into_iter().enumerate() {
            out[gi].push(l);
        }
    }
    out
}

/// Relabels by order of first appearance, so equal partitions compare equal.
pub fn canonical<T: Copy + Eq + std::hash::Hash>(labels: &[T]) -> Vec<usize> {
    let mut seen = HashMap::new();
    labels
        .iter()
        .map(|l| {
            let fresh = seen.len();
            *seen.entry(*l).or_insert(fresh)
        })
        .collect()
}

/// Prints a single acceptance line and reports whether it passed.
pub fn report(id: u32, name: &str, passed: bool, detail: &str) -> bool {
    println!(
        "criterion {id:>2} [{}] {name}: {detail}",
        if passed { "PASS" } else { "FAIL" }
    );
    passed
}

pub fn mutag_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/MUTAG")
}

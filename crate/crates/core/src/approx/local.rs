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

use std::collections::HashMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interner::{LabelId, LabelInterner};
use crate::kset::{c_neighborhood, klwl_colorings, KSet, KSetIndex};

/// One k-set drawn uniformly from all `C(n, k)`: `k` distinct vertex draws
/// with redraw on collision, then sorted.
pub fn sample_kset_uniform<R: Rng + ?Sized>(g: &Graph, k: usize, rng: &mut R) -> Result<KSet> {
    let n = g.num_vertices();
    if k < 2 {
        return Err(Error::Param(format!("k-sets need k >= 2, got {k}")));
    }
    if n < k {
        return Err(Error::Param(format!(
            "cannot draw a {k}-set from {n} vertices"
        )));
    }
    let mut picked: Vec<usize> = Vec::with_capacity(k);
    while picked.len() < k {
        let v = rng.random_range(0..n);
        if !picked.contains(&v) {
            picked.push(v);
        }
    }
    picked.sort_unstable();
    Ok(KSet::from_sorted(picked))
}

/// Labels of `s` at iterations `0..=h` from the local refinement of the
/// subgraph induced by the vertices of its `h`-neighborhood, in a private
/// label space.
pub(crate) fn local_labels_private(
    g: &Graph,
    s: &KSet,
    h: usize,
) -> Result<(LabelInterner, Vec<LabelId>)> {
    s.check_in(g)?;
    let ball = c_neighborhood(g, s, h);
    let mut vertices: Vec<usize> = ball
        .iter()
        .flat_map(|t| t.vertices().iter().copied())
        .collect();
    vertices.sort_unstable();
    vertices.dedup();
    let (sub, map) = g.induced_subgraph(&vertices)?;

    let mut interner = LabelInterner::new();
    let colorings = klwl_colorings(&sub, s.k(), h, &mut interner)?;
    let image: Vec<usize> = s
        .vertices()
        .iter()
        .map(|&v| map.new_id(v).expect("s lies in its own neighborhood"))
        .collect();
    let rank = KSetIndex::new(sub.num_vertices(), s.k())?.rank(&image);
    let labels = colorings.iter().map(|c| c.labels[rank]).collect();
    Ok((interner, labels))
}

/// Labels of `s` at iterations `0..=h`, computed from its neighborhood
/// alone and expressed in `interner`'s label space.
///
/// They coincide with the labels the full-graph local refinement assigns
/// when run against the same interner.
pub fn local_labels(
    g: &Graph,
    s: &KSet,
    h: usize,
    interner: &mut LabelInterner,
) -> Result<Vec<LabelId>> {
    let (local, labels) = local_labels_private(g, s, h)?;
    let mut memo = HashMap::new();
    Ok(labels
        .into_iter()
        .map(|l| interner.import(&local, l, &mut memo))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interner::LabelKey;
    use crate::kset::iso_type;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn full_set_is_only_outcome() {
        let g = Graph::build(3, &[(0, 1)], None, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            assert_eq!(
                sample_kset_uniform(&g, 3, &mut rng).unwrap().vertices(),
                &[0, 1, 2]
            );
        }
        assert!(sample_kset_uniform(&g, 4, &mut rng).is_err());
    }

    #[test]
    fn uniform_frequencies() {
        let g = Graph::build(4, &[], None, None).unwrap();
        let idx = KSetIndex::new(4, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut hits = [0usize; 6];
        let draws = 60_000;
        for _ in 0..draws {
            let s = sample_kset_uniform(&g, 2, &mut rng).unwrap();
            hits[idx.rank(s.vertices())] += 1;
        }
        for h in hits {
            assert!((h as f64 / draws as f64 - 1.0 / 6.0).abs() <= 0.01);
        }
    }

    #[test]
    fn seeded_sequences_repeat() {
        let g = Graph::build(10, &[], None, None).unwrap();
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..50)
                .map(|_| sample_kset_uniform(&g, 3, &mut rng).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(3), draw(3));
        assert_ne!(draw(3), draw(4));
    }

    #[test]
    fn zero_iterations_is_iso_type() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4)], None, None).unwrap();
        let mut i = LabelInterner::new();
        let s = KSet::new(vec![1, 2]).unwrap();
        let labels = local_labels(&g, &s, 0, &mut i).unwrap();
        assert_eq!(labels, vec![iso_type(&g, &[1, 2], &mut i)]);
    }

    #[test]
    fn edge_with_isolated_vertex() {
        let g = Graph::build(3, &[(0, 1)], None, None).unwrap();
        let mut i = LabelInterner::new();
        let s = KSet::new(vec![0, 1]).unwrap();
        let labels = local_labels(&g, &s, 3, &mut i).unwrap();
        for j in 1..=3 {
            assert_eq!(i.key(labels[j]), &LabelKey::Refine(labels[j - 1], vec![]));
        }
    }
}

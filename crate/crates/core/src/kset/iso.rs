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

//! Isomorphism types of labeled induced k-vertex subgraphs.
//!
//! The canonical code is the lexicographically smallest
//! `(node labels, upper-triangle adjacency bits, upper-triangle edge labels)`
//! over all `k!` orderings of the set. Factorial in `k`; intended for the
//! small `k` (2 or 3) used in practice.

use itertools::Itertools;

use crate::graph::Graph;
use crate::interner::{LabelId, LabelInterner, LabelKey};

const ABSENT: i64 = i64::MIN;

/// Canonical code of `g[vertices]`. Equal codes iff the labeled induced
/// subgraphs are isomorphic.
pub fn iso_code(g: &Graph, vertices: &[usize]) -> Vec<i64> {
    let k = vertices.len();
    let node: Vec<i64> = vertices
        .iter()
        .map(|&v| g.node_label(v).unwrap_or(ABSENT))
        .collect();
    // edge[a][b]: None for a non-edge, Some(label or ABSENT) otherwise
    let mut edge = vec![vec![None; k]; k];
    for a in 0..k {
        for b in (a + 1)..k {
            if g.has_edge(vertices[a], vertices[b]) {
                let l = g.edge_label(vertices[a], vertices[b]).unwrap_or(ABSENT);
                edge[a][b] = Some(l);
                edge[b][a] = Some(l);
            }
        }
    }

    let pairs = k * (k - 1) / 2;
    let mut best: Option<Vec<i64>> = None;
    let mut code = Vec::with_capacity(k + 2 * pairs);
    for perm in (0..k).permutations(k) {
        code.clear();
        code.extend(perm.iter().map(|&p| node[p]));
        for a in 0..k {
            for b in (a + 1)..k {
                code.push(edge[perm[a]][perm[b]].is_some() as i64);
            }
        }
        for a in 0..k {
            for b in (a + 1)..k {
                code.push(edge[perm[a]][perm[b]].unwrap_or(ABSENT));
            }
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code.clone());
        }
    }
    best.unwrap_or_default()
}

pub fn iso_type(g: &Graph, vertices: &[usize], interner: &mut LabelInterner) -> LabelId {
    interner.intern(LabelKey::IsoType(iso_code(g, vertices)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri() -> Graph {
        Graph::build(3, &[(0, 1), (1, 2), (0, 2)], None, None).unwrap()
    }

    #[test]
    fn triangle_pairs_share_type() {
        let mut i = LabelInterner::new();
        let g = tri();
        let a = iso_type(&g, &[0, 1], &mut i);
        assert_eq!(a, iso_type(&g, &[1, 2], &mut i));
        assert_eq!(a, iso_type(&g, &[0, 2], &mut i));
    }

    #[test]
    fn edge_vs_non_edge() {
        let mut i = LabelInterner::new();
        let g = Graph::build(3, &[(0, 1)], None, None).unwrap();
        assert_ne!(iso_type(&g, &[0, 1], &mut i), iso_type(&g, &[0, 2], &mut i));
    }

    #[test]
    fn path_vs_edge_plus_isolated() {
        let mut i = LabelInterner::new();
        let p4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3)], None, None).unwrap();
        let path = iso_type(&p4, &[0, 1, 2], &mut i);
        assert_ne!(path, iso_type(&p4, &[0, 1, 3], &mut i));
        assert_eq!(path, iso_type(&p4, &[1, 2, 3], &mut i));
    }

    #[test]
    fn labels_matter() {
        let mut i = LabelInterner::new();
        let g = Graph::build(
            4,
            &[(0, 1), (2, 3)],
            Some(vec![1, 2, 2, 1]),
            Some(vec![7, 8]),
        )
        .unwrap();
        // same node labels, different edge labels
        assert_ne!(iso_type(&g, &[0, 1], &mut i), iso_type(&g, &[2, 3], &mut i));
        let g = Graph::build(4, &[(0, 1), (2, 3)], Some(vec![1, 2, 2, 1]), None).unwrap();
        assert_eq!(iso_type(&g, &[0, 1], &mut i), iso_type(&g, &[2, 3], &mut i));
    }
}

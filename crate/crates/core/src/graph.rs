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

//! Immutable undirected labeled graphs in compressed sparse row layout.

use crate::error::{Error, Result};

/// Undirected simple graph with optional categorical node and edge labels.
///
/// Neighbor lists are strictly ascending, the adjacency is symmetric and
/// there are no self-loops. Edge labels, when present, are stored parallel
/// to the flat neighbor array so both directions of an edge carry the same
/// label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
    node_labels: Option<Vec<i64>>,
    edge_labels: Option<Vec<i64>>,
    class_label: Option<i64>,
}

impl Graph {
    /// Builds a graph from an unordered edge list.
    ///
    /// Duplicate pairs (in either orientation) are merged. When
    /// `edge_labels` is given it must be parallel to `edges`, and duplicates
    /// of one edge must agree on the label.
    pub fn build(
        num_vertices: usize,
        edges: &[(usize, usize)],
        node_labels: Option<Vec<i64>>,
        edge_labels: Option<Vec<i64>>,
    ) -> Result<Graph> {
        if let Some(labels) = &node_labels {
            if labels.len() != num_vertices {
                return Err(Error::Graph(format!(
                    "{} node labels for {} vertices",
                    labels.len(),
                    num_vertices
                )));
            }
        }
        if let Some(labels) = &edge_labels {
            if labels.len() != edges.len() {
                return Err(Error::Graph(format!(
                    "{} edge labels for {} edges",
                    labels.len(),
                    edges.len()
                )));
            }
        }

        // (source, target, label) for both orientations
        let mut arcs: Vec<(usize, usize, i64)> = Vec::with_capacity(2 * edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= num_vertices || v >= num_vertices {
                return Err(Error::Graph(format!(
                    "edge ({u}, {v}) references a vertex outside [0, {num_vertices})"
                )));
            }
            if u == v {
                return Err(Error::Graph(format!("self-loop at vertex {u}")));
            }
            let label = edge_labels.as_ref().map_or(0, |l| l[i]);
            arcs.push((u, v, label));
            arcs.push((v, u, label));
        }
        arcs.sort_unstable();
        let mut deduped: Vec<(usize, usize, i64)> = Vec::with_capacity(arcs.len());
        for arc in arcs {
            match deduped.last() {
                Some(last) if last.0 == arc.0 && last.1 == arc.1 => {
                    if last.2 != arc.2 {
                        return Err(Error::Graph(format!(
                            "edge ({}, {}) listed with conflicting labels {} and {}",
                            arc.0, arc.1, last.2, arc.2
                        )));
                    }
                }
                _ => deduped.push(arc),
            }
        }

        let mut offsets = vec![0usize; num_vertices + 1];
        for &(u, _, _) in &deduped {
            offsets[u + 1] += 1;
        }
        for v in 0..num_vertices {
            offsets[v + 1] += offsets[v];
        }
        let neighbors = deduped.iter().map(|a| a.1).collect();
        let edge_labels = edge_labels.map(|_| deduped.iter().map(|a| a.2).collect());

        Ok(Graph {
            offsets,
            neighbors,
            node_labels,
            edge_labels,
            class_label: None,
        })
    }

    pub fn with_class_label(mut self, class: i64) -> Self {
        self.class_label = Some(class);
        self
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_edges(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn node_labels(&self) -> Option<&[i64]> {
        self.node_labels.as_deref()
    }

    pub fn has_edge_labels(&self) -> bool {
        self.edge_labels.is_some()
    }

    pub fn class_label(&self) -> Option<i64> {
        self.class_label
    }

    /// Sorted neighbor list of `v`. Panics on an out-of-range id.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.num_vertices())
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    /// Binary search over the sorted neighbor list of `u`.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Label of edge `{u, v}`; `None` if the edge is absent or the graph
    /// carries no edge labels.
    pub fn edge_label(&self, u: usize, v: usize) -> Option<i64> {
        let labels = self.edge_labels.as_ref()?;
        let pos = self.neighbors(u).binary_search(&v).ok()?;
        Some(labels[self.offsets[u] + pos])
    }

    pub fn node_label(&self, v: usize) -> Option<i64> {
        self.node_labels.as_ref().map(|l| l[v])
    }

    /// Checked variant of [`Graph::has_edge`].
    pub fn adjacency_query(&self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.has_edge(u, v))
    }

    /// Checked variant of [`Graph::degree`].
    pub fn degree_of(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.degree(v))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.num_vertices() {
            return Err(Error::Graph(format!(
                "vertex {v} out of range for graph with {} vertices",
                self.num_vertices()
            )));
        }
        Ok(())
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.num_vertices()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    /// Subgraph induced by `vertices`.
    ///
    /// New vertex ids follow the ascending order of the old ids. Runs in time
    /// proportional to the selected vertices and their degrees, never in the
    /// size of the host graph.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, VertexMap)> {
        let mut old_ids = vertices.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        if let Some(&last) = old_ids.last() {
            self.check_vertex(last)?;
        }
        let map = VertexMap { old_ids };

        let n = map.len();
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let mut neighbors = Vec::new();
        let mut edge_labels = self.edge_labels.as_ref().map(|_| Vec::new());
        for &old in &map.old_ids {
            let base = self.offsets[old];
            for (pos, &w) in self.neighbors(old).iter().enumerate() {
                if let Some(new_w) = map.new_id(w) {
                    // old neighbor lists are ascending and the map is monotone
                    neighbors.push(new_w);
                    if let (Some(out), Some(src)) = (edge_labels.as_mut(), &self.edge_labels) {
                        out.push(src[base + pos]);
                    }
                }
            }
            offsets.push(neighbors.len());
        }
        let node_labels = self
            .node_labels
            .as_ref()
            .map(|l| map.old_ids.iter().map(|&v| l[v]).collect());

        Ok((
            Graph {
                offsets,
                neighbors,
                node_labels,
                edge_labels,
                class_label: self.class_label,
            },
            map,
        ))
    }
}

/// Bijection between the vertices selected for an induced subgraph and
/// `0..len`. New id `i` is the `i`-th smallest selected old id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    old_ids: Vec<usize>,
}

impl VertexMap {
    pub fn len(&self) -> usize {
        self.old_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.old_ids.is_empty()
    }

    pub fn new_id(&self, old: usize) -> Option<usize> {
        self.old_ids.binary_search(&old).ok()
    }

    pub fn old_id(&self, new: usize) -> usize {
        self.old_ids[new]
    }

    pub fn old_ids(&self) -> &[usize] {
        &self.old_ids
    }
}

/// A named collection of graphs with one class label per graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    pub name: String,
    pub graphs: Vec<Graph>,
    pub class_labels: Vec<i64>,
}

impl Dataset {
    pub fn new(
        name: impl Into<String>,
        graphs: Vec<Graph>,
        class_labels: Vec<i64>,
    ) -> Result<Self> {
        if graphs.len() != class_labels.len() {
            return Err(Error::Dataset(format!(
                "{} graphs but {} class labels",
                graphs.len(),
                class_labels.len()
            )));
        }
        let graphs = graphs
            .into_iter()
            .zip(&class_labels)
            .map(|(g, &c)| g.with_class_label(c))
            .collect();
        Ok(Dataset {
            name: name.into(),
            graphs,
            class_labels,
        })
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

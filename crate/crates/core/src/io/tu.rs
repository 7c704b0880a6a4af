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

//! Reader for the TU graph collection text layout.
//!
//! A dataset `DS` is a directory holding
//!
//! * `DS_A.txt`: one `i, j` line per adjacency entry, global 1-based node ids
//! * `DS_graph_indicator.txt`: the 1-based graph id of node `i` on line `i`
//! * `DS_graph_labels.txt`: the class of graph `g` on line `g`
//! * optional `DS_node_labels.txt` / `DS_edge_labels.txt`, parallel to the
//!   indicator and adjacency files.
//!
//! Edges may be listed in one or both directions.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::{Dataset, Graph};

struct Lines {
    path: PathBuf,
    rows: Vec<(usize, String)>,
}

fn read_lines(path: &Path) -> Result<Lines> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let rows = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    Ok(Lines {
        path: path.to_path_buf(),
        rows,
    })
}

fn read_optional(path: &Path) -> Result<Option<Lines>> {
    if path.exists() {
        read_lines(path).map(Some)
    } else {
        Ok(None)
    }
}

fn format_err(path: &Path, line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

fn parse_int(lines: &Lines, line: usize, field: &str) -> Result<i64> {
    field.trim().parse::<i64>().map_err(|_| {
        format_err(
            &lines.path,
            line,
            format!("expected an integer, found {field:?}"),
        )
    })
}

fn ints(lines: &Lines) -> Result<Vec<i64>> {
    lines
        .rows
        .iter()
        .map(|(n, l)| parse_int(lines, *n, l))
        .collect()
}

fn count_mismatch(what: &str, path: &Path, got: usize, want: usize) -> Error {
    Error::Dataset(format!(
        "{} has {got} {what} entries, expected {want}",
        path.display()
    ))
}

/// Reads dataset `name` from `dir` into one [`Graph`] per graph id, with
/// local 0-based vertex ids assigned in global node-id order.
pub fn parse_tu_dataset(dir: impl AsRef<Path>, name: &str) -> Result<Dataset> {
    let dir = dir.as_ref();
    let file = |suffix: &str| dir.join(format!("{name}_{suffix}.txt"));

    let indicator = read_lines(&file("graph_indicator"))?;
    let graph_of: Vec<usize> = indicator
        .rows
        .iter()
        .map(|(n, l)| match parse_int(&indicator, *n, l)? {
            g if g >= 1 => Ok(g as usize - 1),
            g => Err(format_err(
                &indicator.path,
                *n,
                format!("graph id {g} is not 1-based"),
            )),
        })
        .collect::<Result<_>>()?;
    let num_nodes = graph_of.len();

    let class_lines = read_lines(&file("graph_labels"))?;
    let classes = ints(&class_lines)?;
    let num_graphs = classes.len();
    if let Some((node, &g)) = graph_of.iter().enumerate().find(|(_, &g)| g >= num_graphs) {
        return Err(format_err(
            &indicator.path,
            indicator.rows[node].0,
            format!("graph id {} exceeds the {num_graphs} class labels", g + 1),
        ));
    }

    // local ids in node order
    let mut sizes = vec![0usize; num_graphs];
    let local: Vec<usize> = graph_of
        .iter()
        .map(|&g| {
            sizes[g] += 1;
            sizes[g] - 1
        })
        .collect();

    let node_labels = match read_optional(&file("node_labels"))? {
        Some(lines) => {
            let labels = ints(&lines)?;
            if labels.len() != num_nodes {
                return Err(count_mismatch(
                    "node label",
                    &lines.path,
                    labels.len(),
                    num_nodes,
                ));
            }
            let mut per_graph: Vec<Vec<i64>> =
                sizes.iter().map(|&s| Vec::with_capacity(s)).collect();
            for (v, l) in labels.into_iter().enumerate() {
                per_graph[graph_of[v]].push(l);
            }
            Some(per_graph)
        }
        None => None,
    };

    let adjacency = read_lines(&file("A"))?;
    let edge_label_lines = read_optional(&file("edge_labels"))?;
    let edge_labels = match &edge_label_lines {
        Some(lines) => {
            let labels = ints(lines)?;
            if labels.len() != adjacency.rows.len() {
                return Err(count_mismatch(
                    "edge label",
                    &lines.path,
                    labels.len(),
                    adjacency.rows.len(),
                ));
            }
            Some(labels)
        }
        None => None,
    };

    let mut edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); num_graphs];
    let mut elabels: Vec<Vec<i64>> = vec![Vec::new(); num_graphs];
    for (row, (n, l)) in adjacency.rows.iter().enumerate() {
        let mut fields = l.split(',');
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(format_err(
                &adjacency.path,
                *n,
                format!("expected \"i, j\", found {l:?}"),
            ));
        };
        let endpoint = |f: &str| -> Result<usize> {
            match parse_int(&adjacency, *n, f)? {
                v if v >= 1 && (v as usize) <= num_nodes => Ok(v as usize - 1),
                v => Err(format_err(
                    &adjacency.path,
                    *n,
                    format!("node id {v} outside 1..={num_nodes}"),
                )),
            }
        };
        let (u, v) = (endpoint(a)?, endpoint(b)?);
        if graph_of[u] != graph_of[v] {
            return Err(format_err(
                &adjacency.path,
                *n,
                format!(
                    "edge ({}, {}) joins graphs {} and {}",
                    u + 1,
                    v + 1,
                    graph_of[u] + 1,
                    graph_of[v] + 1
                ),
            ));
        }
        if u == v {
            return Err(format_err(
                &adjacency.path,
                *n,
                format!("self-loop at node {}", u + 1),
            ));
        }
        let g = graph_of[u];
        edges[g].push((local[u], local[v]));
        if let Some(labels) = &edge_labels {
            elabels[g].push(labels[row]);
        }
    }

    let mut node_labels = node_labels.map(|v| v.into_iter());
    let graphs = (0..num_graphs)
        .map(|g| {
            let nl = node_labels
                .as_mut()
                .map(|it| it.next().expect("one entry per graph"));
            let el = edge_labels
                .as_ref()
                .map(|_| std::mem::take(&mut elabels[g]));
            Graph::build(sizes[g], &edges[g], nl, el)
                .map_err(|e| Error::Dataset(format!("graph {}: {e}", g + 1)))
        })
        .collect::<Result<Vec<_>>>()?;

    Dataset::new(name, graphs, classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs::write;

    fn fixture(dir: &Path, a: &str) {
        write(dir.join("T_graph_indicator.txt"), "1\n1\n1\n2\n2\n2\n").unwrap();
        write(dir.join("T_graph_labels.txt"), "1\n-1\n").unwrap();
        write(dir.join("T_A.txt"), a).unwrap();
    }

    const TWO_TRIANGLES: &str =
        "1, 2\n2, 1\n2, 3\n3, 2\n1, 3\n3, 1\n4, 5\n5, 4\n5, 6\n6, 5\n4,6\n6,4\n";

    #[test]
    fn two_triangles() {
        let dir = tempfile::tempdir().unwrap();
        fixture(dir.path(), TWO_TRIANGLES);
        let ds = parse_tu_dataset(dir.path(), "T").unwrap();
        assert_eq!(ds.len(), 2);
        for g in &ds.graphs {
            assert_eq!((g.num_vertices(), g.num_edges()), (3, 3));
            assert!(g.node_labels().is_none());
        }
        assert_eq!(ds.class_labels, vec![1, -1]);
    }

    #[test]
    fn optional_label_files() {
        let dir = tempfile::tempdir().unwrap();
        fixture(dir.path(), "1, 2\n2, 1\n4, 6\n");
        write(dir.path().join("T_node_labels.txt"), "0\n1\n2\n3\n4\n5\n").unwrap();
        write(dir.path().join("T_edge_labels.txt"), "7\n7\n9\n").unwrap();
        let ds = parse_tu_dataset(dir.path(), "T").unwrap();
        assert_eq!(ds.graphs[1].node_labels(), Some(&[3, 4, 5][..]));
        assert_eq!(ds.graphs[0].edge_label(1, 0), Some(7));
        assert_eq!(ds.graphs[1].edge_label(0, 2), Some(9));
    }

    #[test]
    fn zero_based_ids_rejected() {
        let dir = tempfile::tempdir().unwrap();
        fixture(dir.path(), "1, 2\n0, 1\n");
        match parse_tu_dataset(dir.path(), "T") {
            Err(Error::Format { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected a format error, got {other:?}"),
        }
    }

    #[test]
    fn cross_graph_edge_rejected() {
        let dir = tempfile::tempdir().unwrap();
        fixture(dir.path(), "1, 2\n3, 4\n");
        let err = parse_tu_dataset(dir.path(), "T").unwrap_err();
        assert!(matches!(err, Error::Format { line: 2, .. }), "{err}");
        assert!(err.to_string().contains("joins graphs 1 and 2"));
    }

    #[test]
    fn inconsistent_counts() {
        let dir = tempfile::tempdir().unwrap();
        fixture(dir.path(), TWO_TRIANGLES);
        write(dir.path().join("T_node_labels.txt"), "0\n1\n").unwrap();
        assert!(matches!(
            parse_tu_dataset(dir.path(), "T"),
            Err(Error::Dataset(_))
        ));

        let dir = tempfile::tempdir().unwrap();
        fixture(dir.path(), TWO_TRIANGLES);
        write(dir.path().join("T_graph_labels.txt"), "1\n").unwrap();
        assert!(matches!(
            parse_tu_dataset(dir.path(), "T"),
            Err(Error::Format { .. })
        ));
    }

    #[test]
    fn missing_mandatory_file() {
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(
            parse_tu_dataset(dir.path(), "T"),
            Err(Error::Io { .. })
        ));
    }
}

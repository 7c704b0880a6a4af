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

//! Refinement as sparse matrix-vector products over prime logarithms, checked
//! against combinatorial refinement.
//!
//! Run with `cargo run --example linalg_refinement`.

use kwl::kset::{build_kset_graph, klwl_colorings, DEFAULT_KSET_BUDGET};
use kwl::linalg::{densify, la_refinement, LaMode, SparseOperand};
use kwl::refine::{canonical_partition, wl1_colorings};
use kwl::{Graph, LabelInterner};

fn main() -> kwl::Result<()> {
    let g = Graph::build(
        7,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 4),
        ],
        Some(vec![0, 0, 1, 0, 1, 0, 0]),
        None,
    )?;
    let mut labels = LabelInterner::new();

    let exact = wl1_colorings(&g, 3, &mut labels);
    let initial = densify(&exact[0].labels);
    for mode in [LaMode::Paired, LaMode::Sum] {
        let la = la_refinement(&SparseOperand::from_graph(&g), &initial, 3, mode)?;
        for (i, (c, l)) in exact.iter().zip(&la).enumerate() {
            println!(
                "1-WL {mode:?} iteration {i}: {} classes (combinatorial {}), same partition: {}",
                l.iter().max().map_or(0, |m| m + 1),
                c.num_classes(),
                canonical_partition(l) == canonical_partition(&c.labels)
            );
        }
    }

    let exact = klwl_colorings(&g, 2, 2, &mut labels)?;
    let operand = SparseOperand::from_kset_graph(&build_kset_graph(&g, 2, DEFAULT_KSET_BUDGET)?);
    let la = la_refinement(&operand, &densify(&exact[0].labels), 2, LaMode::Paired)?;
    for (i, (c, l)) in exact.iter().zip(&la).enumerate() {
        println!(
            "2-LWL iteration {i}: same partition: {}",
            canonical_partition(l) == canonical_partition(&c.labels)
        );
    }
    Ok(())
}

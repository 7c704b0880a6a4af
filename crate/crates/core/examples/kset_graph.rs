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

//! The directed k-set graph of local neighborhoods, its ranking scheme and
//! c-neighborhoods.
//!
//! Run with `cargo run --example kset_graph`.

use kwl::kset::{
    build_kset_graph, c_neighborhood, global_neighbors, local_neighbors, KSet, DEFAULT_KSET_BUDGET,
};
use kwl::Graph;

fn main() -> kwl::Result<()> {
    // A path 0 - 1 - 2 - 3 - 4 with a pendant vertex 5 on 2.
    let g = Graph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)], None, None)?;
    let sg = build_kset_graph(&g, 2, DEFAULT_KSET_BUDGET)?;
    println!(
        "2-sets: {}, arcs: {} (global neighborhood would have {})",
        sg.num_nodes(),
        sg.num_arcs(),
        sg.num_nodes() * 2 * (g.num_vertices() - 2)
    );

    let index = sg.index();
    for rank in 0..sg.num_nodes().min(6) {
        let t = index.unrank(rank);
        let outs: Vec<String> = sg
            .out_neighbors(rank)
            .iter()
            .map(|&r| format!("{:?}", index.unrank(r).vertices()))
            .collect();
        println!("rank {rank:>2} {:?} -> {}", t.vertices(), outs.join(" "));
    }

    let t = KSet::new(vec![0, 1])?;
    println!(
        "local neighbors of {{0,1}}:  {}",
        local_neighbors(&g, &t).len()
    );
    println!(
        "global neighbors of {{0,1}}: {}",
        global_neighbors(&g, &t).len()
    );
    for c in 0..=3 {
        println!(
            "{c}-neighborhood of {{0,1}}: {} k-sets",
            c_neighborhood(&g, &t, c).len()
        );
    }
    Ok(())
}

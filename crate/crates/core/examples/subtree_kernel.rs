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

//! 1-WL subtree kernel on a handful of small graphs.
//!
//! Run with `cargo run --example subtree_kernel`.

use kwl::refine::{distinguishable, wl1_features_all};
use kwl::{gram_matrix, Graph, LabelInterner};

fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::build(n, &edges, None, None).expect("valid cycle")
}

fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::build(n, &edges, None, None).expect("valid path")
}

fn main() -> kwl::Result<()> {
    let star = Graph::build(5, &[(0, 1), (0, 2), (0, 3), (0, 4)], None, None)?;
    let graphs = vec![cycle(5), path(5), star, cycle(6)];
    let names = ["C5", "P5", "K1,4", "C6"];

    let mut labels = LabelInterner::new();
    let features = wl1_features_all(&graphs, 3, &mut labels);
    let k = gram_matrix(&features)?.cosine_normalize();

    println!(
        "cosine-normalized 1-WL subtree kernel, h = 3 ({} labels)",
        labels.len()
    );
    print!("{:>6}", "");
    for name in names {
        print!("{name:>8}");
    }
    println!();
    for (i, name) in names.iter().enumerate() {
        print!("{name:>6}");
        for x in k.row(i) {
            print!("{x:>8.3}");
        }
        println!();
    }

    // Regular graphs of equal degree and size stay indistinguishable.
    println!(
        "C6 vs 2xK3 distinguishable by 1-WL: {}",
        distinguishable(
            &cycle(6),
            &Graph::build(
                6,
                &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
                None,
                None
            )?,
            5
        )
    );
    Ok(())
}

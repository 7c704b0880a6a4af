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

//! k-set refinement with local and global neighborhoods separates graphs
//! that 1-WL cannot.
//!
//! Run with `cargo run --example local_kwl`.

use kwl::kset::{kgwl_features, klwl_features};
use kwl::refine::wl1_features;
use kwl::{Graph, LabelInterner};

fn main() -> kwl::Result<()> {
    let edges: Vec<_> = (0..6).map(|v| (v, (v + 1) % 6)).collect();
    let c6 = Graph::build(6, &edges, None, None)?;
    let two_k3 = Graph::build(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        None,
        None,
    )?;

    let mut labels = LabelInterner::new();
    let same_wl1 = wl1_features(&c6, 3, &mut labels) == wl1_features(&two_k3, 3, &mut labels);
    println!("1-WL, h = 3:   features equal = {same_wl1}");

    for h in 0..=2 {
        let a = klwl_features(&c6, 2, h, &mut labels)?;
        let b = klwl_features(&two_k3, 2, h, &mut labels)?;
        println!("2-LWL, h = {h}: features equal = {}", a == b);
        for (i, (x, y)) in a.blocks.iter().zip(&b.blocks).enumerate() {
            let fmt = |m: &kwl::kernel::Histogram| {
                m.iter()
                    .map(|(l, c)| format!("{l}:{c}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            println!("    iteration {i}: C6 [{}]  2xK3 [{}]", fmt(x), fmt(y));
        }
    }

    let a = kgwl_features(&c6, 2, 1, &mut labels)?;
    let b = kgwl_features(&two_k3, 2, 1, &mut labels)?;
    println!("2-GWL, h = 1: features equal = {}", a == b);
    Ok(())
}

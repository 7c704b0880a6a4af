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

//! Adaptive sampling: batches grow until the data-dependent deviation bound
//! drops below epsilon.
//!
//! Run with `cargo run --release --example adaptive_estimate`.

use kwl::approx::{algorithm2, AdaptiveParams};
use kwl::{Graph, LabelInterner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> kwl::Result<()> {
    // A 40-cycle with chords every 5 vertices.
    let n = 40;
    let mut edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    edges.extend((0..n).step_by(5).map(|v| (v, (v + n / 2) % n)));
    let g = Graph::build(n, &edges, None, None)?;

    let mut labels = LabelInterner::new();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for eps in [0.2, 0.1, 0.05] {
        let params = AdaptiveParams::new(eps, 0.1);
        let est = algorithm2(&g, 2, 2, &params, &mut rng, &mut labels)?;
        println!("epsilon {eps}: {} samples", est.sample_count);
        for r in &est.rounds {
            println!(
                "    round {:>2}: batch {:>6}, total {:>7}, bound {:.4}",
                r.round, r.batch, r.total, r.bound
            );
        }
    }
    Ok(())
}

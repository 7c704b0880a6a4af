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

//! Fixed-size sampling estimate of normalized 2-LWL features, compared with
//! the exact distribution.
//!
//! Run with `cargo run --release --example sampled_estimate`.

use kwl::approx::{algorithm1, sample_size_theorem1, SampleSizeParams};
use kwl::kernel::NormScope;
use kwl::kset::klwl_features;
use kwl::{Graph, LabelInterner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> kwl::Result<()> {
    // A 3x4 grid.
    let (rows, cols) = (3, 4);
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    let g = Graph::build(rows * cols, &edges, None, None)?;
    let (k, h) = (2, 2);

    let mut labels = LabelInterner::new();
    let exact = klwl_features(&g, k, h, &mut labels)?.l1_normalize(NormScope::PerBlock);

    // Enough samples for eps = 0.05, delta = 0.1 with at most 16 labels.
    let m = sample_size_theorem1(&SampleSizeParams::new(0.05, 0.1, 16))? as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let est = algorithm1(&g, k, h, m, &mut rng, &mut labels)?;

    println!("{m} samples; exact vs estimated frequencies");
    let mut worst: f64 = 0.0;
    for (i, (e, s)) in exact.blocks.iter().zip(&est.features.blocks).enumerate() {
        println!("iteration {i}:");
        for (label, p) in e {
            let q = s.get(label).copied().unwrap_or(0.0);
            worst = worst.max((p - q).abs());
            println!("    label {label:>3}: exact {p:.4}  sampled {q:.4}");
        }
    }
    println!("largest deviation: {worst:.4}");
    Ok(())
}

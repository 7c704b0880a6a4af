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

//! Sample counts required by the single-graph and dataset-wide bounds.
//!
//! Run with `cargo run --example sample_sizes`.

use kwl::approx::{sample_size_prop1, sample_size_theorem1, SampleSizeParams};

fn main() -> kwl::Result<()> {
    println!(
        "{:>6} {:>6} {:>6} {:>10} {:>12} {:>12}",
        "eps", "delta", "gamma", "one graph", "100 graphs", "10^4 graphs"
    );
    for (eps, delta, gamma) in [
        (0.1, 0.1, 10),
        (0.05, 0.1, 10),
        (0.1, 0.01, 100),
        (0.01, 0.05, 1000),
    ] {
        let p = SampleSizeParams::new(eps, delta, gamma);
        println!(
            "{eps:>6} {delta:>6} {gamma:>6} {:>10} {:>12} {:>12}",
            sample_size_theorem1(&p)?,
            sample_size_prop1(&p.with_dataset_size(100))?,
            sample_size_prop1(&p.with_dataset_size(10_000))?,
        );
    }
    Ok(())
}

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

//! Sampling estimators of the normalized local k-set WL feature vector.
//!
//! Both estimators label each sampled k-set by running the exact local
//! refinement on the subgraph induced by the k-set's `h`-neighborhood in the
//! k-set graph; that label equals the one the full graph would assign, so
//! per-sample work depends on degrees, `k` and `h` but not on graph size.

mod estimate;
mod local;
mod sample_size;

pub use estimate::{
    algorithm1, algorithm2, estimate_all, massart_deviation_bound, AdaptiveParams, EstimateMethod,
    RademacherState, RoundLog, SampledEstimate, DEFAULT_MAX_SAMPLES,
};
pub use local::{local_labels, sample_kset_uniform};
pub use sample_size::{sample_size_prop1, sample_size_theorem1, SampleSizeParams};

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

//! k-sets: subsets of exactly `k` distinct vertices, the objects colored by
//! the global and local k-set Weisfeiler-Lehman refinements.

mod features;
mod index;
mod iso;
mod neighbors;

pub use features::{
    kgwl_colorings, kgwl_features, klwl_colorings, klwl_features, kset_colorings_all,
    kset_features_all, Neighborhood, DEFAULT_KSET_BUDGET,
};
pub use index::{binomial, enumerate_ksets, KSet, KSetIndex};
pub use iso::{iso_code, iso_type};
pub use neighbors::{
    build_kset_graph, c_neighborhood, global_neighbors, local_neighbors, GlobalNeighbors,
    KSetGraph, LocalNeighbors,
};

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

//! Benchmark dataset ingestion and kernel/feature export.

mod export;
mod tu;

pub use export::{
    format_g17, read_gram_libsvm, write_features_sparse, write_gram_csv, write_gram_libsvm,
    FeatureIndexLayout,
};
pub use tu::parse_tu_dataset;

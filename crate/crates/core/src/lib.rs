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

//! Weisfeiler-Lehman family graph kernels.
//!
//! * [`refine`]: 1-WL color refinement and the subtree kernel features.
//! * [`kset`]: k-set refinement with the global neighborhood (k-GWL) and the
//!   local neighborhood (k-LWL), the directed k-set graph, c-neighborhoods.
//! * [`linalg`]: the same refinements as sparse matrix-vector products over
//!   prime logarithms.
//! * [`approx`]: sampled k-LWL feature estimates, fixed-size (Hoeffding) and
//!   adaptive (Rademacher averages).
//! * [`kernel`]: feature vectors, normalization, gram matrices.
//! * [`io`]: TU benchmark datasets in, precomputed kernels and sparse
//!   features out.
//!
//! ## Examples
//!
//! Each capability has a runnable example under `examples/`:
//!
//! - **`subtree_kernel`**: 1-WL subtree features and a cosine-normalized gram
//!   matrix of small graphs.
//! - **`local_kwl`**: 2-LWL separating a 6-cycle from two triangles, where
//!   1-WL and 2-GWL fail.
//! - **`kset_graph`**: the directed k-set graph, colex ranks, local versus
//!   global neighborhoods, c-neighborhoods.
//! - **`sampled_estimate`**: fixed-size sampling against the exact
//!   distribution.
//! - **`adaptive_estimate`**: growing batches until the deviation bound
//!   falls below epsilon.
//! - **`linalg_refinement`**: prime-logarithm refinement checked against
//!   combinatorial refinement, paired and sum mode.
//! - **`mutag_gram`**: every kernel and mode on the MUTAG benchmark.
//! - **`sample_sizes`**: sample counts required by the error bounds.
//!
//! ```bash
//! cargo run --example local_kwl
//! cargo run --release --example mutag_gram
//! ```
//!
//! The `kwl` binary wraps the dataset pipeline in [`pipeline`] with the
//! subcommands `info`, `features`, `gram` and `sample-size`.
//!
//! All labels of a run come from one [`LabelInterner`], so feature vectors of
//! different graphs index a common label space and their inner products are
//! kernel values.
//!
//! ```
//! use kwl::{Graph, LabelInterner, kset::klwl_features};
//!
//! let edges: Vec<_> = (0..6).map(|v| (v, (v + 1) % 6)).collect();
//! let c6 = Graph::build(6, &edges, None, None)?;
//! let two_k3 = Graph::build(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], None, None)?;
//!
//! let mut labels = LabelInterner::new();
//! let a = klwl_features(&c6, 2, 1, &mut labels)?;
//! let b = klwl_features(&two_k3, 2, 1, &mut labels)?;
//! assert_ne!(a, b); // 1-WL cannot tell these apart
//! # Ok::<(), kwl::Error>(())
//! ```

pub mod approx;
pub mod error;
pub mod graph;
pub mod interner;
pub mod io;
pub mod kernel;
pub mod kset;
pub mod linalg;
pub mod pipeline;
pub mod refine;

pub use error::{Error, Result};
pub use graph::{Dataset, Graph, VertexMap};
pub use interner::{LabelId, LabelInterner, LabelKey};
pub use kernel::{gram_matrix, FeatureVector, GramMatrix, NormScope};
pub use refine::Coloring;

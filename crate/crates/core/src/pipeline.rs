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

//! Orchestration of dataset runs: feature computation in every mode, gram
//! assembly, exports and the run manifest.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::approx::{
    estimate_all, sample_size_prop1, AdaptiveParams, EstimateMethod, RoundLog, SampleSizeParams,
};
use crate::error::{Error, Result};
use crate::graph::Dataset;
use crate::interner::{LabelId, LabelInterner};
use crate::io::{write_features_sparse, write_gram_csv, write_gram_libsvm};
use crate::kernel::{gram_matrix, FeatureVector, GramMatrix, NormScope};
use crate::kset::{build_kset_graph, kset_colorings_all, GlobalNeighbors, KSetIndex, Neighborhood};
use crate::linalg::{densify, la_refinement, LaMode, SparseOperand};
use crate::refine::{wl1_colorings_all, Coloring, NeighborSource};

macro_rules! string_enum {
    ($name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
        #[serde(rename_all = "kebab-case")]
        pub enum $name { $($variant),+ }

        impl FromStr for $name {
            type Err = String;
            fn from_str(s: &str) -> std::result::Result<Self, String> {
                match s {
                    $($text => Ok($name::$variant),)+
                    _ => Err(format!(
                        "unknown value {s:?}, expected one of: {}",
                        [$($text),+].join(", ")
                    )),
                }
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str(match self { $($name::$variant => $text),+ })
            }
        }
    };
}

string_enum!(KernelKind { Wl1 => "wl1", KwlGlobal => "kwl-global", KwlLocal => "kwl-local" });
string_enum!(Mode { Exact => "exact", Linalg => "linalg", Sampled => "sampled", Adaptive => "adaptive" });
string_enum!(Normalize { None => "none", L1Block => "l1-block", L1Full => "l1-full" });
string_enum!(OutputFormat { Libsvm => "libsvm", Csv => "csv", SparseFeatures => "sparse-features" });
string_enum!(LaModeArg { Paired => "paired", Sum => "sum" });

#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub dataset: PathBuf,
    pub name: String,
    pub kernel: KernelKind,
    pub k: usize,
    pub h: usize,
    /// Emit one output per iteration count `0..=h` instead of one at `h`.
    pub h_sweep: bool,
    pub mode: Mode,
    pub epsilon: Option<f64>,
    pub delta: Option<f64>,
    pub gamma: Option<u64>,
    pub samples: Option<usize>,
    pub initial_samples: usize,
    pub growth: f64,
    pub max_samples: usize,
    pub strict_delta: bool,
    pub la_mode: LaModeArg,
    pub max_ksets: u64,
    pub seed: u64,
    pub threads: usize,
    pub normalize: Normalize,
    pub gram_normalize: bool,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
}

impl RunConfig {
    pub fn new(dataset: impl Into<PathBuf>, name: impl Into<String>) -> Self {
        RunConfig {
            dataset: dataset.into(),
            name: name.into(),
            kernel: KernelKind::Wl1,
            k: 2,
            h: 3,
            h_sweep: false,
            mode: Mode::Exact,
            epsilon: None,
            delta: None,
            gamma: None,
            samples: None,
            initial_samples: 100,
            growth: 2.0,
            max_samples: crate::approx::DEFAULT_MAX_SAMPLES,
            strict_delta: false,
            la_mode: LaModeArg::Paired,
            max_ksets: crate::kset::DEFAULT_KSET_BUDGET,
            seed: 0,
            threads: 0,
            normalize: Normalize::None,
            gram_normalize: false,
            output: None,
            format: OutputFormat::Libsvm,
        }
    }

    /// Checks mode-specific parameters before any computation.
    pub fn validate(&self) -> Result<()> {
        let usage = |m: String| Err(Error::Param(m));
        if self.kernel != KernelKind::Wl1 && self.k < 2 {
            return usage(format!("k-set kernels need --k >= 2, got {}", self.k));
        }
        match self.mode {
            Mode::Sampled | Mode::Adaptive if self.kernel != KernelKind::KwlLocal => {
                return usage(format!(
                    "--mode {} is only defined for --kernel kwl-local",
                    self.mode
                ));
            }
            Mode::Sampled => {
                let by_formula =
                    self.gamma.is_some() && self.epsilon.is_some() && self.delta.is_some();
                if self.samples.is_none() && !by_formula {
                    return usage(
                        "--mode sampled needs --samples, or --gamma with --epsilon and --delta"
                            .into(),
                    );
                }
                if self.samples == Some(0) {
                    return usage("--samples must be at least 1".into());
                }
            }
            Mode::Adaptive if self.epsilon.is_none() || self.delta.is_none() => {
                return usage("--mode adaptive needs --epsilon and --delta".into());
            }
            _ => {}
        }
        Ok(())
    }

    /// Per-graph sample count of the fixed-size estimator.
    pub fn fixed_sample_count(&self, dataset_size: usize) -> Result<usize> {
        if let Some(m) = self.samples {
            return Ok(m);
        }
        match (self.gamma, self.epsilon, self.delta) {
            (Some(gamma), Some(eps), Some(delta)) => {
                let p =
                    SampleSizeParams::new(eps, delta, gamma).with_dataset_size(dataset_size.max(1));
                let m = sample_size_prop1(&p)?;
                usize::try_from(m)
                    .ok()
                    .filter(|&m| m <= self.max_samples)
                    .ok_or_else(|| {
                        Error::Resource(format!(
                            "the bound asks for {m} samples per graph, above --max-samples {}",
                            self.max_samples
                        ))
                    })
            }
            _ => Err(Error::Param("no sample count configured".into())),
        }
    }
}

/// Side information of a feature computation.
#[derive(Debug, Clone, Default, Serialize)]
pub struct FeatureReport {
    /// Indices of graphs with fewer than `k` vertices (all-zero features).
    pub too_small: Vec<usize>,
    pub samples_per_graph: Vec<usize>,
    /// Adaptive round log of every graph.
    pub rounds: Vec<Vec<RoundLog>>,
    /// Distinct labels over all iterations (dense per-iteration labels in
    /// linear-algebra mode).
    pub label_count: usize,
}

/// Feature vectors of every graph, blocks `0..=cfg.h`.
pub fn compute_features(
    ds: &Dataset,
    cfg: &RunConfig,
) -> Result<(Vec<FeatureVector>, FeatureReport)> {
    cfg.validate()?;
    let mut interner = LabelInterner::new();
    let mut report = FeatureReport::default();
    let graphs = &ds.graphs;
    if cfg.kernel != KernelKind::Wl1 {
        report.too_small = graphs
            .iter()
            .enumerate()
            .filter(|(_, g)| g.num_vertices() < cfg.k)
            .map(|(i, _)| i)
            .collect();
    }
    let neighborhood = match cfg.kernel {
        KernelKind::KwlGlobal => Neighborhood::Global,
        _ => Neighborhood::Local,
    };

    let features = match cfg.mode {
        Mode::Exact => {
            let colorings = match cfg.kernel {
                KernelKind::Wl1 => wl1_colorings_all(graphs, cfg.h, &mut interner),
                _ => kset_colorings_all(
                    graphs,
                    cfg.k,
                    cfg.h,
                    neighborhood,
                    cfg.max_ksets,
                    &mut interner,
                )?,
            };
            colorings
                .iter()
                .map(|c| FeatureVector::from_colorings(c))
                .collect()
        }
        Mode::Linalg => {
            let (features, dense_labels) = linalg_features(ds, cfg, neighborhood, &mut interner)?;
            report.label_count = dense_labels;
            features
        }
        Mode::Sampled | Mode::Adaptive => {
            let method = if cfg.mode == Mode::Sampled {
                EstimateMethod::Fixed(cfg.fixed_sample_count(ds.len())?)
            } else {
                let mut p = AdaptiveParams::new(
                    cfg.epsilon.expect("validated"),
                    cfg.delta.expect("validated"),
                );
                p.initial_size = cfg.initial_samples;
                p.growth_factor = cfg.growth;
                p.max_samples = cfg.max_samples;
                p.strict_delta = cfg.strict_delta;
                EstimateMethod::Adaptive(p)
            };
            let estimates = estimate_all(graphs, cfg.k, cfg.h, method, cfg.seed, &mut interner)?;
            report.samples_per_graph = estimates.iter().map(|e| e.sample_count).collect();
            if cfg.mode == Mode::Adaptive {
                report.rounds = estimates.iter().map(|e| e.rounds.clone()).collect();
            }
            estimates.into_iter().map(|e| e.features).collect()
        }
    };
    if cfg.mode != Mode::Linalg {
        report.label_count = interner.len();
    }

    let features = match cfg.normalize {
        Normalize::None => features,
        Normalize::L1Block => features
            .iter()
            .map(|f| f.l1_normalize(NormScope::PerBlock))
            .collect(),
        Normalize::L1Full => features
            .iter()
            .map(|f| f.l1_normalize(NormScope::WholeVector))
            .collect(),
    };
    Ok((features, report))
}

fn operand_from_source<S: NeighborSource>(source: &S) -> SparseOperand {
    let mut offsets = vec![0];
    let mut cols = Vec::new();
    let mut buf = Vec::new();
    for i in 0..source.num_items() {
        buf.clear();
        source.neighbors_into(i, &mut buf);
        buf.sort_unstable();
        cols.extend_from_slice(&buf);
        offsets.push(cols.len());
    }
    SparseOperand::from_csr(offsets, cols).expect("ranks stay in range")
}

/// Refinement of the whole dataset as one block-diagonal operand, so the
/// dense labels of every iteration are shared across graphs.
fn linalg_features(
    ds: &Dataset,
    cfg: &RunConfig,
    neighborhood: Neighborhood,
    interner: &mut LabelInterner,
) -> Result<(Vec<FeatureVector>, usize)> {
    let graphs = &ds.graphs;
    let (initial, operands): (Vec<Coloring>, Vec<SparseOperand>) = match cfg.kernel {
        KernelKind::Wl1 => (
            wl1_colorings_all(graphs, 0, interner)
                .into_iter()
                .map(|mut c| c.remove(0))
                .collect(),
            graphs.iter().map(SparseOperand::from_graph).collect(),
        ),
        _ => {
            let initial =
                kset_colorings_all(graphs, cfg.k, 0, neighborhood, cfg.max_ksets, interner)?
                    .into_iter()
                    .map(|mut c| c.remove(0))
                    .collect();
            let operands =
                graphs
                    .iter()
                    .map(|g| match neighborhood {
                        Neighborhood::Local => Ok(SparseOperand::from_kset_graph(
                            &build_kset_graph(g, cfg.k, cfg.max_ksets)?,
                        )),
                        Neighborhood::Global => Ok(operand_from_source(&GlobalNeighbors::new(
                            g,
                            KSetIndex::new(g.num_vertices(), cfg.k)?,
                        ))),
                    })
                    .collect::<Result<_>>()?;
            (initial, operands)
        }
    };
    let sizes: Vec<usize> = operands.iter().map(SparseOperand::dim).collect();
    let all_labels: Vec<LabelId> = initial
        .iter()
        .flat_map(|c| c.labels.iter().copied())
        .collect();
    let mode = match cfg.la_mode {
        LaModeArg::Paired => LaMode::Paired,
        LaModeArg::Sum => LaMode::Sum,
    };
    let rounds = la_refinement(
        &SparseOperand::block_diagonal(&operands),
        &densify(&all_labels),
        cfg.h,
        mode,
    )?;

    let mut features = vec![FeatureVector::default(); graphs.len()];
    let mut dense_labels = 0;
    for labels in &rounds {
        dense_labels += labels.iter().max().map_or(0, |&m| m + 1);
        let mut start = 0;
        for (f, &len) in features.iter_mut().zip(&sizes) {
            let c = Coloring {
                iteration: 0,
                labels: labels[start..start + len]
                    .iter()
                    .map(|&l| LabelId(l as u32))
                    .collect(),
            };
            f.blocks.push(c.histogram());
            start += len;
        }
    }
    Ok((features, dense_labels))
}

/// Keeps blocks `0..=h`.
pub fn truncate(features: &[FeatureVector], h: usize) -> Vec<FeatureVector> {
    features
        .iter()
        .map(|f| FeatureVector {
            blocks: f.blocks.iter().take(h + 1).cloned().collect(),
        })
        .collect()
}

pub fn build_gram(features: &[FeatureVector], cosine: bool) -> Result<GramMatrix> {
    let k = gram_matrix(features)?;
    Ok(if cosine { k.cosine_normalize() } else { k })
}

/// Table-style dataset statistics.
pub fn dataset_info(ds: &Dataset) -> String {
    let n = ds.len().max(1) as f64;
    let mut classes = ds.class_labels.clone();
    classes.sort_unstable();
    classes.dedup();
    let distinct = |labels: &mut dyn Iterator<Item = i64>| {
        let mut v: Vec<i64> = labels.collect();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    let node_labeled = ds.graphs.iter().any(|g| g.node_labels().is_some());
    let node_distinct = distinct(
        &mut ds
            .graphs
            .iter()
            .flat_map(|g| g.node_labels().unwrap_or(&[]).iter().copied()),
    );
    let edge_labeled = ds.graphs.iter().any(|g| g.has_edge_labels());
    let edge_distinct = distinct(&mut ds.graphs.iter().flat_map(|g| {
        g.edges()
            .filter_map(|(u, v)| g.edge_label(u, v))
            .collect::<Vec<_>>()
    }));

    let mut out = String::new();
    let _ = writeln!(out, "dataset: {}", ds.name);
    let _ = writeln!(out, "graphs: {}", ds.len());
    let _ = writeln!(out, "classes: {}", classes.len());
    let _ = writeln!(
        out,
        "avg nodes: {:.2}",
        ds.graphs.iter().map(|g| g.num_vertices()).sum::<usize>() as f64 / n
    );
    let _ = writeln!(
        out,
        "avg edges: {:.2}",
        ds.graphs.iter().map(|g| g.num_edges()).sum::<usize>() as f64 / n
    );
    let _ = writeln!(
        out,
        "max degree: {}",
        ds.graphs.iter().map(|g| g.max_degree()).max().unwrap_or(0)
    );
    let yes_no = |b: bool, d: usize| {
        if b {
            format!("yes ({d} distinct)")
        } else {
            "no".into()
        }
    };
    let _ = writeln!(out, "node labels: {}", yes_no(node_labeled, node_distinct));
    let _ = writeln!(out, "edge labels: {}", yes_no(edge_labeled, edge_distinct));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Output {
    Features,
    Gram,
}

#[derive(Debug, Serialize)]
struct Manifest<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    config: &'a RunConfig,
    graphs: usize,
    outputs: Vec<PathBuf>,
    wall_seconds: Timings,
    report: &'a FeatureReport,
}

#[derive(Debug, Default, Serialize)]
struct Timings {
    parse: f64,
    features: f64,
    write: f64,
}

fn output_path(base: &Path, h: usize, sweep: bool) -> PathBuf {
    if !sweep {
        return base.to_path_buf();
    }
    let stem = base
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match base.extension() {
        Some(ext) => format!("{stem}-h{h}.{}", ext.to_string_lossy()),
        None => format!("{stem}-h{h}"),
    };
    base.with_file_name(name)
}

pub fn manifest_path(output: &Path) -> PathBuf {
    let mut name = output
        .file_name()
        .map(|s| s.to_os_string())
        .unwrap_or_default();
    name.push(".manifest.json");
    output.with_file_name(name)
}

/// Runs `f` on a pool of `threads` workers (0 = one per core).
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Resource(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

/// Runs `features` or `gram` end to end on `cfg.threads` workers and
/// returns the files written, manifest last.
pub fn run(cfg: &RunConfig, what: Output) -> Result<Vec<PathBuf>> {
    with_threads(cfg.threads, || run_inner(cfg, what))?
}

fn run_inner(cfg: &RunConfig, what: Output) -> Result<Vec<PathBuf>> {
    cfg.validate()?;
    let output = cfg
        .output
        .clone()
        .ok_or_else(|| Error::Param("--output is required".into()))?;
    if what == Output::Features && cfg.format != OutputFormat::SparseFeatures {
        return Err(Error::Param(
            "features are written with --format sparse-features".into(),
        ));
    }
    if what == Output::Gram && cfg.format == OutputFormat::SparseFeatures {
        return Err(Error::Param(
            "gram matrices are written as libsvm or csv".into(),
        ));
    }

    let mut timings = Timings::default();
    let t = Instant::now();
    let ds = crate::io::parse_tu_dataset(&cfg.dataset, &cfg.name)?;
    timings.parse = t.elapsed().as_secs_f64();

    let t = Instant::now();
    let (features, report) = compute_features(&ds, cfg)?;
    timings.features = t.elapsed().as_secs_f64();

    let t = Instant::now();
    let hs: Vec<usize> = if cfg.h_sweep {
        (0..=cfg.h).collect()
    } else {
        vec![cfg.h]
    };
    let mut outputs = Vec::new();
    for h in hs {
        let path = output_path(&output, h, cfg.h_sweep);
        let feats = truncate(&features, h);
        match what {
            Output::Features => write_features_sparse(&feats, &ds.class_labels, &path)?,
            Output::Gram => {
                let k = build_gram(&feats, cfg.gram_normalize)?;
                match cfg.format {
                    OutputFormat::Csv => write_gram_csv(&k, &path)?,
                    _ => write_gram_libsvm(&k, &ds.class_labels, &path)?,
                }
            }
        }
        outputs.push(path);
    }
    timings.write = t.elapsed().as_secs_f64();

    let manifest = Manifest {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        command: match what {
            Output::Features => "features",
            Output::Gram => "gram",
        },
        config: cfg,
        graphs: ds.len(),
        outputs: outputs.clone(),
        wall_seconds: timings,
        report: &report,
    };
    let mpath = manifest_path(&output);
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    std::fs::write(&mpath, json + "\n").map_err(|e| Error::io(&mpath, e))?;
    outputs.push(mpath);
    Ok(outputs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enum_parsing() {
        assert_eq!(
            "kwl-local".parse::<KernelKind>().unwrap(),
            KernelKind::KwlLocal
        );
        assert_eq!(Mode::Adaptive.to_string(), "adaptive");
        assert!("bogus".parse::<Mode>().unwrap_err().contains("exact"));
    }

    #[test]
    fn validation() {
        let mut cfg = RunConfig::new(".", "X");
        cfg.mode = Mode::Sampled;
        assert!(cfg.validate().is_err());
        cfg.kernel = KernelKind::KwlLocal;
        assert!(cfg.validate().is_err());
        cfg.samples = Some(10);
        assert!(cfg.validate().is_ok());
        cfg.mode = Mode::Adaptive;
        cfg.epsilon = Some(0.1);
        assert!(cfg.validate().is_err());
        cfg.delta = Some(0.1);
        assert!(cfg.validate().is_ok());
        cfg.k = 1;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn sample_count_from_bound() {
        let mut cfg = RunConfig::new(".", "X");
        cfg.kernel = KernelKind::KwlLocal;
        cfg.mode = Mode::Sampled;
        cfg.gamma = Some(10);
        cfg.epsilon = Some(0.1);
        cfg.delta = Some(0.1);
        assert_eq!(cfg.fixed_sample_count(100).unwrap(), 49518);
        cfg.max_samples = 1000;
        assert!(matches!(
            cfg.fixed_sample_count(100),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn sweep_paths() {
        assert_eq!(
            output_path(Path::new("/x/k.txt"), 3, true),
            PathBuf::from("/x/k-h3.txt")
        );
        assert_eq!(
            output_path(Path::new("/x/k"), 0, true),
            PathBuf::from("/x/k-h0")
        );
        assert_eq!(
            output_path(Path::new("/x/k.txt"), 3, false),
            PathBuf::from("/x/k.txt")
        );
        assert_eq!(
            manifest_path(Path::new("/x/k.txt")),
            PathBuf::from("/x/k.txt.manifest.json")
        );
    }
}

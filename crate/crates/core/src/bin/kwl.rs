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

//! Command-line front end: `kwl info | features | gram | sample-size`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kwl::approx::{sample_size_prop1, sample_size_theorem1, SampleSizeParams};
use kwl::pipeline::{
    dataset_info, run, KernelKind, LaModeArg, Mode, Normalize, Output, OutputFormat, RunConfig,
};
use kwl::Error;

#[derive(Parser)]
#[command(
    name = "kwl",
    version,
    about = "Weisfeiler-Lehman family graph kernels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print dataset statistics.
    Info(DatasetArgs),
    /// Write per-graph sparse feature vectors.
    Features(RunArgs),
    /// Write the gram matrix of a kernel.
    Gram(RunArgs),
    /// Print the number of samples the error bounds require.
    SampleSize(SampleSizeArgs),
}

#[derive(Args)]
struct DatasetArgs {
    /// Directory holding the `<NAME>_*.txt` files.
    #[arg(long)]
    dataset: PathBuf,
    /// Dataset name; defaults to the directory name.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    data: DatasetArgs,
    #[arg(long, default_value = "wl1")]
    kernel: KernelKind,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 3)]
    h: usize,
    /// Write one output per iteration count 0..=h, suffixed `-h<i>`.
    #[arg(long)]
    h_sweep: bool,
    #[arg(long, default_value = "exact")]
    mode: Mode,
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long)]
    delta: Option<f64>,
    /// Upper bound on the number of distinct local labels (sampled mode).
    #[arg(long)]
    gamma: Option<u64>,
    /// Fixed number of samples per graph (sampled mode).
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 100)]
    initial_samples: usize,
    #[arg(long, default_value_t = 2.0)]
    growth: f64,
    #[arg(long, default_value_t = 10_000_000)]
    max_samples: usize,
    /// Split the failure probability across adaptive rounds.
    #[arg(long)]
    strict_delta: bool,
    #[arg(long, default_value = "paired")]
    la_mode: LaModeArg,
    /// Refuse graphs with more k-sets than this.
    #[arg(long, default_value_t = 50_000_000)]
    max_ksets: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long, default_value = "none")]
    normalize: Normalize,
    /// Cosine-normalize the gram matrix.
    #[arg(long)]
    gram_normalize: bool,
    #[arg(long)]
    output: PathBuf,
    #[arg(long)]
    format: Option<OutputFormat>,
}

#[derive(Args)]
struct SampleSizeArgs {
    #[arg(long)]
    epsilon: f64,
    #[arg(long)]
    delta: f64,
    #[arg(long)]
    gamma: u64,
    /// Dataset size; switches to the dataset-wide bound.
    #[arg(long)]
    graphs: Option<usize>,
}

fn dataset_name(d: &DatasetArgs) -> String {
    d.name.clone().unwrap_or_else(|| {
        d.dataset
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    })
}

fn config(a: RunArgs, what: Output) -> RunConfig {
    let mut cfg = RunConfig::new(a.data.dataset.clone(), dataset_name(&a.data));
    cfg.kernel = a.kernel;
    cfg.k = a.k;
    cfg.h = a.h;
    cfg.h_sweep = a.h_sweep;
    cfg.mode = a.mode;
    cfg.epsilon = a.epsilon;
    cfg.delta = a.delta;
    cfg.gamma = a.gamma;
    cfg.samples = a.samples;
    cfg.initial_samples = a.initial_samples;
    cfg.growth = a.growth;
    cfg.max_samples = a.max_samples;
    cfg.strict_delta = a.strict_delta;
    cfg.la_mode = a.la_mode;
    cfg.max_ksets = a.max_ksets;
    cfg.seed = a.seed;
    cfg.threads = a.threads;
    cfg.normalize = a.normalize;
    cfg.gram_normalize = a.gram_normalize;
    cfg.output = Some(a.output);
    cfg.format = a.format.unwrap_or(match what {
        Output::Features => OutputFormat::SparseFeatures,
        Output::Gram => OutputFormat::Libsvm,
    });
    cfg
}

fn execute(command: Command) -> kwl::Result<()> {
    match command {
        Command::Info(d) => {
            let ds = kwl::io::parse_tu_dataset(&d.dataset, &dataset_name(&d))?;
            print!("{}", dataset_info(&ds));
        }
        Command::Features(a) => report(run(&config(a, Output::Features), Output::Features)?),
        Command::Gram(a) => report(run(&config(a, Output::Gram), Output::Gram)?),
        Command::SampleSize(a) => {
            let p = SampleSizeParams::new(a.epsilon, a.delta, a.gamma);
            let m = match a.graphs {
                Some(n) => sample_size_prop1(&p.with_dataset_size(n))?,
                None => sample_size_theorem1(&p)?,
            };
            println!("{m}");
        }
    }
    Ok(())
}

fn report(paths: Vec<PathBuf>) {
    for p in paths {
        eprintln!("wrote {}", p.display());
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Param(_) => 1,
                Error::Resource(_) => 3,
                _ => 2,
            })
        }
    }
}

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

//! Writers for precomputed-kernel and sparse-feature files.
//!
//! Numbers are printed like C's `%.17g`, which round-trips every `f64`
//! and keeps output byte-stable.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::kernel::{FeatureVector, GramMatrix};

/// `%.17g` formatting.
pub fn format_g17(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        strip_zeros(&format!("{x:.*}", (16 - exp) as usize)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::io(path, e))
}

fn finish(path: &Path, mut w: BufWriter<File>) -> Result<()> {
    w.flush().map_err(|e| Error::io(path, e))
}

/// Precomputed-kernel format: row `i` is
/// `<class> 0:<i> 1:<K_i1> ... n:<K_in>` with 1-based `i`.
pub fn write_gram_libsvm(k: &GramMatrix, classes: &[i64], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    if classes.len() != k.size() {
        return Err(Error::Param(format!(
            "{} class labels for a {}x{} gram matrix",
            classes.len(),
            k.size(),
            k.size()
        )));
    }
    let mut w = create(path)?;
    for (i, class) in classes.iter().enumerate() {
        let mut line = format!("{class} 0:{}", i + 1);
        for (j, v) in k.row(i).iter().enumerate() {
            line.push_str(&format!(" {}:{}", j + 1, format_g17(*v)));
        }
        writeln!(w, "{line}").map_err(|e| Error::io(path, e))?;
    }
    finish(path, w)
}

/// Inverse of [`write_gram_libsvm`].
pub fn read_gram_libsvm(path: impl AsRef<Path>) -> Result<(GramMatrix, Vec<i64>)> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut classes = Vec::new();
    let mut rows = Vec::new();
    for (n, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        let bad = |m: &str| Error::Format {
            path: path.to_path_buf(),
            line: n + 1,
            message: m.to_string(),
        };
        let mut fields = line.split_whitespace();
        let class = fields
            .next()
            .and_then(|c| c.parse().ok())
            .ok_or_else(|| bad("missing class"))?;
        fields.next().ok_or_else(|| bad("missing serial index"))?;
        let row = fields
            .map(|f| {
                f.split_once(':')
                    .and_then(|(_, v)| v.parse::<f64>().ok())
                    .ok_or_else(|| bad("malformed index:value pair"))
            })
            .collect::<Result<Vec<f64>>>()?;
        classes.push(class);
        rows.push(row);
    }
    Ok((GramMatrix::from_rows(rows)?, classes))
}

/// Plain comma-separated rows, no header.
pub fn write_gram_csv(k: &GramMatrix, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut w = create(path)?;
    for i in 0..k.size() {
        let row: Vec<String> = k.row(i).iter().map(|&v| format_g17(v)).collect();
        writeln!(w, "{}", row.join(",")).map_err(|e| Error::io(path, e))?;
    }
    finish(path, w)
}

/// Column layout of concatenated per-iteration blocks: block `b` occupies
/// indices `offset(b) .. offset(b) + width(b)`, the first block starting at 1.
/// The width of a block is one more than the largest label id any vector
/// uses there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeatureIndexLayout {
    offsets: Vec<usize>,
}

impl FeatureIndexLayout {
    pub fn new(features: &[FeatureVector]) -> Self {
        let blocks = features.iter().map(|f| f.blocks.len()).max().unwrap_or(0);
        let mut offsets = Vec::with_capacity(blocks);
        let mut next = 1;
        for b in 0..blocks {
            offsets.push(next);
            let width = features
                .iter()
                .filter_map(|f| f.blocks.get(b)?.keys().next_back())
                .map(|l| l.index() + 1)
                .max()
                .unwrap_or(0);
            next += width;
        }
        FeatureIndexLayout { offsets }
    }

    pub fn offset(&self, block: usize) -> usize {
        self.offsets[block]
    }
}

/// One line per graph: `<class> <index>:<value> ...` with strictly
/// ascending indices `offset(block) + label id`.
pub fn write_features_sparse(
    features: &[FeatureVector],
    classes: &[i64],
    path: impl AsRef<Path>,
) -> Result<()> {
    let path = path.as_ref();
    if classes.len() != features.len() {
        return Err(Error::Param(format!(
            "{} class labels for {} feature vectors",
            classes.len(),
            features.len()
        )));
    }
    let layout = FeatureIndexLayout::new(features);
    let mut w = create(path)?;
    for (f, class) in features.iter().zip(classes) {
        let mut line = class.to_string();
        for (b, block) in f.blocks.iter().enumerate() {
            for (label, value) in block {
                line.push_str(&format!(
                    " {}:{}",
                    layout.offset(b) + label.index(),
                    format_g17(*value)
                ));
            }
        }
        writeln!(w, "{line}").map_err(|e| Error::io(path, e))?;
    }
    finish(path, w)
}

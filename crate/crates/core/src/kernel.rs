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

//! Feature vectors, their inner products and gram matrices.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::interner::LabelId;
use crate::refine::Coloring;

/// Sparse map label id -> weight for one iteration.
pub type Histogram = BTreeMap<LabelId, f64>;

/// Per-iteration label histograms `0..=h`, concatenated implicitly.
///
/// Weights are counts for exact features and probability masses for
/// sampled estimates.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FeatureVector {
    pub blocks: Vec<Histogram>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormScope {
    /// Every block divided by its own mass.
    PerBlock,
    /// The concatenation divided by the total mass.
    WholeVector,
}

impl FeatureVector {
    /// `h + 1` empty blocks.
    pub fn zeros(h: usize) -> Self {
        FeatureVector {
            blocks: vec![Histogram::new(); h + 1],
        }
    }

    pub fn from_colorings(colorings: &[Coloring]) -> Self {
        FeatureVector {
            blocks: colorings.iter().map(Coloring::histogram).collect(),
        }
    }

    /// Highest iteration index covered.
    pub fn h(&self) -> usize {
        self.blocks.len().saturating_sub(1)
    }

    pub fn block_mass(&self, block: usize) -> f64 {
        self.blocks[block].values().fold(0.0, |s, x| s + x)
    }

    pub fn total_mass(&self) -> f64 {
        (0..self.blocks.len())
            .map(|b| self.block_mass(b))
            .fold(0.0, |s, x| s + x)
    }

    /// L1 normalization. Zero-mass blocks (or vectors) are returned unchanged.
    pub fn l1_normalize(&self, scope: NormScope) -> FeatureVector {
        let scale = |block: &Histogram, mass: f64| -> Histogram {
            if mass > 0.0 {
                block.iter().map(|(&k, &w)| (k, w / mass)).collect()
            } else {
                block.clone()
            }
        };
        let blocks = match scope {
            NormScope::PerBlock => self
                .blocks
                .iter()
                .map(|b| scale(b, b.values().fold(0.0, |s, x| s + x)))
                .collect(),
            NormScope::WholeVector => {
                let total = self.total_mass();
                self.blocks.iter().map(|b| scale(b, total)).collect()
            }
        };
        FeatureVector { blocks }
    }

    /// Inner product over matching (iteration, label) pairs.
    pub fn dot(&self, other: &FeatureVector) -> Result<f64> {
        if self.blocks.len() != other.blocks.len() {
            return Err(Error::Param(format!(
                "feature vectors span different iteration counts ({} vs {})",
                self.h(),
                other.h()
            )));
        }
        Ok(self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| sparse_dot(a, b))
            .fold(0.0, |s, x| s + x))
    }
}

fn sparse_dot(a: &Histogram, b: &Histogram) -> f64 {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small
        .iter()
        .filter_map(|(k, w)| large.get(k).map(|v| w * v))
        .fold(0.0, |s, x| s + x)
}

/// Dense symmetric matrix of pairwise kernel values, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    n: usize,
    values: Vec<f64>,
}

impl GramMatrix {
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Param("gram matrix rows must form a square".into()));
        }
        Ok(GramMatrix {
            n,
            values: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            values[i * n + i] = 1.0;
        }
        GramMatrix { n, values }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.n..(i + 1) * self.n]
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| (self.get(i, j) - self.get(j, i)).abs() <= tol))
    }

    /// `K'_ij = K_ij / sqrt(K_ii K_jj)`; rows and columns with a zero
    /// diagonal become all zero.
    pub fn cosine_normalize(&self) -> GramMatrix {
        let n = self.n;
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let d = (self.get(i, i).max(0.0) * self.get(j, j).max(0.0)).sqrt();
                if d > 0.0 {
                    // Cauchy-Schwarz caps the ratio at 1; clamp rounding overshoot.
                    values[i * n + j] = if i == j {
                        1.0
                    } else {
                        (self.get(i, j) / d).clamp(-1.0, 1.0)
                    };
                }
            }
        }
        GramMatrix { n, values }
    }

    /// True iff `K + jitter * I` has a Cholesky factorization.
    pub fn psd_check(&self, jitter: f64) -> bool {
        let mut m = DMatrix::from_row_slice(self.n, self.n, &self.values);
        for i in 0..self.n {
            m[(i, i)] += jitter;
        }
        m.cholesky().is_some()
    }
}

/// All pairwise inner products; each unordered pair is computed once.
pub fn gram_matrix(features: &[FeatureVector]) -> Result<GramMatrix> {
    let n = features.len();
    if let Some(first) = features.first() {
        if features
            .iter()
            .any(|f| f.blocks.len() != first.blocks.len())
        {
            return Err(Error::Param(
                "all feature vectors must span the same iterations".into(),
            ));
        }
    }
    let upper: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (i..n)
                .map(|j| features[i].dot(&features[j]).expect("checked above"))
                .collect()
        })
        .collect();
    let mut values = vec![0.0; n * n];
    for (i, row) in upper.iter().enumerate() {
        for (off, &v) in row.iter().enumerate() {
            let j = i + off;
            values[i * n + j] = v;
            values[j * n + i] = v;
        }
    }
    Ok(GramMatrix { n, values })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(blocks: &[&[(u32, f64)]]) -> FeatureVector {
        FeatureVector {
            blocks: blocks
                .iter()
                .map(|b| b.iter().map(|&(k, w)| (LabelId(k), w)).collect())
                .collect(),
        }
    }

    #[test]
    fn normalize_blocks() {
        let v = fv(&[&[(0, 3.0)], &[(1, 2.0), (2, 1.0)], &[]]);
        let n = v.l1_normalize(NormScope::PerBlock);
        assert_eq!(n.blocks[0][&LabelId(0)], 1.0);
        assert!((n.blocks[1][&LabelId(1)] - 2.0 / 3.0).abs() < 1e-15);
        assert!((n.blocks[1][&LabelId(2)] - 1.0 / 3.0).abs() < 1e-15);
        assert!(n.blocks[2].is_empty());
        assert_eq!(n.l1_normalize(NormScope::PerBlock), n);

        let w = v.l1_normalize(NormScope::WholeVector);
        assert!((w.total_mass() - 1.0).abs() < 1e-15);
        assert_eq!(w.blocks[0][&LabelId(0)], 0.5);
    }

    #[test]
    fn dot_products() {
        let a = fv(&[&[(0, 3.0)], &[(1, 3.0)]]);
        let b = fv(&[&[(5, 1.0)], &[(6, 2.0)]]);
        assert_eq!(a.dot(&a).unwrap(), 18.0);
        assert_eq!(a.dot(&b).unwrap(), 0.0);
        // An empty float sum is -0.0; kernel values must print as 0.
        assert!(a.dot(&b).unwrap().is_sign_positive());
        assert!(a.dot(&fv(&[&[(0, 1.0)]])).is_err());
    }

    #[test]
    fn gram_shapes() {
        let a = fv(&[&[(0, 3.0)], &[(1, 3.0)]]);
        let k = gram_matrix(std::slice::from_ref(&a)).unwrap();
        assert_eq!(k.size(), 1);
        assert_eq!(k.get(0, 0), 18.0);

        let k2 = gram_matrix(&[a.clone(), a]).unwrap();
        assert!(k2.row(0).iter().chain(k2.row(1)).all(|&x| x == 18.0));
        let c = k2.cosine_normalize();
        assert!(c.row(0).iter().chain(c.row(1)).all(|&x| x == 1.0));
    }

    #[test]
    fn cosine_zero_diagonal() {
        let k = GramMatrix::from_rows(vec![vec![4.0, 0.0], vec![0.0, 0.0]]).unwrap();
        let c = k.cosine_normalize();
        assert_eq!(c.row(0), &[1.0, 0.0]);
        assert_eq!(c.row(1), &[0.0, 0.0]);
    }

    #[test]
    fn psd() {
        assert!(GramMatrix::identity(3).psd_check(0.0));
        let swap = GramMatrix::from_rows(vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert!(!swap.psd_check(0.0));
        let feats = vec![
            fv(&[&[(0, 1.0), (1, 2.0)]]),
            fv(&[&[(0, 2.0), (1, 4.0)]]),
            fv(&[&[(2, 1.0)]]),
        ];
        assert!(gram_matrix(&feats).unwrap().psd_check(1e-8));
    }
}

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

//! Refinement by sparse matrix-vector products over prime logarithms.
//!
//! Each label id `c` maps to the `c`-th prime `p_c`; one round computes
//! `v = log p(c) + A log p(c)`, so every item's value is the logarithm of
//! the product of its own prime and its neighbors' primes. By unique
//! factorization equal values mean equal (own + neighbor) multisets.
//!
//! The sum mixes the item's own prime with its neighbors', so an item with
//! label `x` next to `y` and one with label `y` next to `x` collide. The
//! default [`LaMode::Paired`] regroups on `(own label, value)`, which is
//! exactly multiset refinement; [`LaMode::Sum`] regroups on the value alone.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interner::LabelId;
use crate::kset::KSetGraph;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LaMode {
    /// Regroup by the aggregated value only.
    Sum,
    /// Regroup by own label and aggregated value.
    #[default]
    Paired,
}

/// Ascending primes, grown on demand.
#[derive(Debug, Clone, Default)]
pub struct PrimeTable {
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn new(n: usize) -> Self {
        let mut t = PrimeTable::default();
        t.ensure(n);
        t
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.primes
    }

    /// Grows the table to at least `n` primes, keeping the existing prefix.
    pub fn ensure(&mut self, n: usize) {
        if self.primes.len() >= n {
            return;
        }
        // p_n < n (ln n + ln ln n) for n >= 6
        let nf = n.max(6) as f64;
        let mut bound = (nf * (nf.ln() + nf.ln().ln())) as usize + 1;
        loop {
            let sieve = sieve(bound);
            if sieve.len() >= n {
                self.primes = sieve;
                self.primes.truncate(n);
                return;
            }
            bound *= 2;
        }
    }
}

fn sieve(bound: usize) -> Vec<u64> {
    let mut composite = vec![false; bound + 1];
    let mut out = Vec::new();
    for i in 2..=bound {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= bound {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Square 0/1 matrix in compressed sparse row form; row `i` lists the items
/// whose values are summed into item `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseOperand {
    offsets: Vec<usize>,
    cols: Vec<usize>,
}

impl SparseOperand {
    pub fn from_csr(offsets: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        let n = offsets.len().saturating_sub(1);
        if offsets.first() != Some(&0)
            || offsets.last() != Some(&cols.len())
            || offsets.windows(2).any(|w| w[0] > w[1])
            || cols.iter().any(|&c| c >= n)
        {
            return Err(Error::Param("malformed sparse operand".into()));
        }
        Ok(SparseOperand { offsets, cols })
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut offsets = vec![0];
        let mut cols = Vec::with_capacity(2 * g.num_edges());
        for v in 0..g.num_vertices() {
            cols.extend_from_slice(g.neighbors(v));
            offsets.push(cols.len());
        }
        SparseOperand { offsets, cols }
    }

    pub fn from_kset_graph(s: &KSetGraph) -> Self {
        let (offsets, cols) = s.csr();
        SparseOperand {
            offsets: offsets.to_vec(),
            cols: cols.to_vec(),
        }
    }

    /// Block-diagonal stacking, so several graphs refine in one label space.
    pub fn block_diagonal(parts: &[SparseOperand]) -> Self {
        let mut offsets = vec![0];
        let mut cols = Vec::new();
        let mut base = 0;
        for p in parts {
            for row in 0..p.dim() {
                cols.extend(p.row(row).iter().map(|&c| c + base));
                offsets.push(cols.len());
            }
            base += p.dim();
        }
        SparseOperand { offsets, cols }
    }

    pub fn dim(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn nnz(&self) -> usize {
        self.cols.len()
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.cols[self.offsets[i]..self.offsets[i + 1]]
    }
}

/// Aggregated values of one round plus the new dense labels.
pub fn la_step(
    operand: &SparseOperand,
    labels: &[usize],
    primes: &mut PrimeTable,
    mode: LaMode,
    tolerance: f64,
) -> Result<(Vec<f64>, Vec<usize>)> {
    if labels.len() != operand.dim() {
        return Err(Error::Param(format!(
            "operand has dimension {} but {} labels were given",
            operand.dim(),
            labels.len()
        )));
    }
    let max = labels.iter().copied().max().map_or(0, |m| m + 1);
    primes.ensure(max);
    let logs: Vec<f64> = labels
        .iter()
        .map(|&c| (primes.as_slice()[c] as f64).ln())
        .collect();
    let row_value = |i: usize| logs[i] + operand.row(i).iter().map(|&j| logs[j]).sum::<f64>();
    let values: Vec<f64> = if operand.dim() < 4096 {
        (0..operand.dim()).map(row_value).collect()
    } else {
        (0..operand.dim()).into_par_iter().map(row_value).collect()
    };
    let own = match mode {
        LaMode::Paired => Some(labels),
        LaMode::Sum => None,
    };
    let next = discretize(&values, own, tolerance);
    Ok((values, next))
}

/// Groups real values into dense ids.
///
/// Items are sorted by `(own label, value)` (or value alone without `own`);
/// runs whose consecutive values differ by at most `tolerance` form one
/// group. Ids ascend in sort order.
pub fn discretize(values: &[f64], own: Option<&[usize]>, tolerance: f64) -> Vec<usize> {
    let own_of = |i: usize| own.map_or(0, |o| o[i]);
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| {
        own_of(a)
            .cmp(&own_of(b))
            .then(values[a].total_cmp(&values[b]))
            .then(a.cmp(&b))
    });
    let mut ids = vec![0; values.len()];
    let mut next = 0;
    for (pos, &i) in order.iter().enumerate() {
        if pos > 0 {
            let p = order[pos - 1];
            if own_of(p) != own_of(i) || values[i] - values[p] > tolerance {
                next += 1;
            }
        }
        ids[i] = next;
    }
    ids
}

/// Renumbers arbitrary label ids densely in ascending id order.
pub fn densify(labels: &[LabelId]) -> Vec<usize> {
    let mut distinct = labels.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    labels
        .iter()
        .map(|l| distinct.binary_search(l).expect("present"))
        .collect()
}

/// `h` rounds from `initial`; returns the `h + 1` dense labelings.
pub fn la_refinement(
    operand: &SparseOperand,
    initial: &[usize],
    h: usize,
    mode: LaMode,
) -> Result<Vec<Vec<usize>>> {
    let mut primes = PrimeTable::default();
    let mut out = Vec::with_capacity(h + 1);
    out.push(initial.to_vec());
    for _ in 0..h {
        let (_, next) = la_step(
            operand,
            out.last().expect("non-empty"),
            &mut primes,
            mode,
            DEFAULT_TOLERANCE,
        )?;
        out.push(next);
    }
    Ok(out)
}

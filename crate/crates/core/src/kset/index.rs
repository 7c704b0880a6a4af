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

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Strictly ascending tuple of distinct vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KSet(Vec<usize>);

impl KSet {
    /// Sorts `vertices`; fails on repeated ids.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Param(format!("k-set {vertices:?} repeats a vertex")));
        }
        Ok(KSet(vertices))
    }

    pub(crate) fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        KSet(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// The set with its `pos`-th element replaced by `r`, where `r` is not
    /// already a member.
    pub fn replaced(&self, pos: usize, r: usize) -> KSet {
        debug_assert!(!self.contains(r));
        let mut v = self.0.clone();
        v.remove(pos);
        let at = v.partition_point(|&x| x < r);
        v.insert(at, r);
        KSet(v)
    }

    pub(crate) fn check_in(&self, g: &Graph) -> Result<()> {
        match self.0.last() {
            Some(&last) if last >= g.num_vertices() => Err(Error::Param(format!(
                "k-set {self} references a vertex outside the graph"
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Dense colexicographic numbering of all k-subsets of `0..n`.
///
/// The rank of `{t_0 < ... < t_{k-1}}` is `sum_i C(t_i, i + 1)`.
#[derive(Debug, Clone)]
pub struct KSetIndex {
    n: usize,
    k: usize,
    len: u64,
    // binom[i][v] = C(v, i) for 1 <= i <= k, 0 <= v <= n
    binom: Vec<Vec<u64>>,
}

impl KSetIndex {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::Param(format!("k-sets need k >= 2, got {k}")));
        }
        let binom = (0..=k)
            .map(|i| (0..=n).map(|v| binomial(v, i)).collect())
            .collect();
        Ok(KSetIndex {
            n,
            k,
            len: binomial(n, k),
            binom,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `C(n, k)` (saturating).
    pub fn count(&self) -> u64 {
        self.len
    }

    /// Number of k-sets as an index bound; only meaningful once the count
    /// has been checked against a budget.
    pub fn len(&self) -> usize {
        usize::try_from(self.len).unwrap_or(usize::MAX)
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn rank(&self, vertices: &[usize]) -> usize {
        debug_assert_eq!(vertices.len(), self.k);
        vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| self.binom[i + 1][v] as usize)
            .sum()
    }

    pub fn unrank(&self, rank: usize) -> KSet {
        let mut out = vec![0; self.k];
        self.unrank_into(rank, &mut out);
        KSet(out)
    }

    pub(crate) fn unrank_into(&self, rank: usize, out: &mut [usize]) {
        let mut r = rank as u64;
        let mut hi = self.n;
        for i in (1..=self.k).rev() {
            // largest v < hi with C(v, i) <= r
            let col = &self.binom[i][..hi];
            let v = col.partition_point(|&c| c <= r) - 1;
            out[i - 1] = v;
            r -= col[v];
            hi = v;
        }
    }

    /// All k-sets in rank order.
    pub fn iter(&self) -> impl Iterator<Item = KSet> + '_ {
        (0..self.len()).map(move |r| self.unrank(r))
    }
}

/// Index over all k-subsets of the vertices of `g`.
pub fn enumerate_ksets(g: &Graph, k: usize) -> Result<KSetIndex> {
    KSetIndex::new(g.num_vertices(), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn counts() {
        assert_eq!(KSetIndex::new(4, 2).unwrap().len(), 6);
        let full = KSetIndex::new(3, 3).unwrap();
        assert_eq!(full.iter().collect::<Vec<_>>(), vec![KSet(vec![0, 1, 2])]);
        assert!(KSetIndex::new(2, 3).unwrap().is_empty());
        assert!(KSetIndex::new(5, 1).is_err());
    }

    #[test]
    fn colex_order() {
        let idx = KSetIndex::new(4, 2).unwrap();
        let sets: Vec<Vec<usize>> = idx.iter().map(|s| s.0).collect();
        assert_eq!(
            sets,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(28, 3), 3276);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(10_000, 3), 166_616_670_000);
        assert_eq!(binomial(10_000, 100), u64::MAX);
    }

    #[test]
    fn replace_keeps_order() {
        let t = KSet::new(vec![5, 1, 3]).unwrap();
        assert_eq!(t.vertices(), &[1, 3, 5]);
        assert_eq!(t.replaced(0, 7).vertices(), &[3, 5, 7]);
        assert_eq!(t.replaced(2, 0).vertices(), &[0, 1, 3]);
        assert!(KSet::new(vec![1, 1]).is_err());
    }

    proptest! {
        #[test]
        fn rank_unrank_roundtrip(n in 2usize..30, k in 2usize..5, seed in any::<u64>()) {
            prop_assume!(k <= n);
            let idx = KSetIndex::new(n, k).unwrap();
            let r = (seed % idx.count()) as usize;
            let t = idx.unrank(r);
            prop_assert_eq!(t.k(), k);
            prop_assert!(t.vertices().windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(idx.rank(t.vertices()), r);
            if r + 1 < idx.len() {
                // strictly increasing in colex order
                let next = idx.unrank(r + 1);
                let rev = |s: &KSet| s.vertices().iter().rev().copied().collect::<Vec<_>>();
                prop_assert!(rev(&t) < rev(&next));
            }
        }
    }
}

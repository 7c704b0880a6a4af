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

//! The injective relabeling map shared by every refinement in a run.
//!
//! Keys are structural: a refinement key refers to earlier label ids of the
//! same interner, so equal ids always denote equal refinement histories.
//! This is what lets independently computed labelings (for example the
//! per-sample local runs of the sampling estimators) be merged into one
//! label space with [`LabelInterner::import`].

use std::collections::HashMap;
use std::fmt;

use indexmap::IndexSet;

/// Compact integer label, dense in interning order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelId(pub u32);

impl LabelId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for LabelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LabelKey {
    /// Raw categorical node label.
    NodeLabel(i64),
    /// Degree, the initial label of unlabeled vertices.
    Degree(usize),
    /// Canonical code of a labeled induced k-vertex subgraph.
    IsoType(Vec<i64>),
    /// Previous label plus the ascending tuple of neighbor labels.
    Refine(LabelId, Vec<LabelId>),
}

#[derive(Debug, Clone, Default)]
pub struct LabelInterner {
    keys: IndexSet<LabelKey>,
}

impl LabelInterner {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// Returns the id of `key`, issuing the next unused id for fresh keys.
    ///
    /// Neighbor tuples of [`LabelKey::Refine`] must already be sorted.
    pub fn intern(&mut self, key: LabelKey) -> LabelId {
        if let LabelKey::Refine(_, ref neighbors) = key {
            debug_assert!(
                neighbors.windows(2).all(|w| w[0] <= w[1]),
                "refinement keys must carry a sorted neighbor tuple"
            );
        }
        if let Some(idx) = self.keys.get_index_of(&key) {
            return LabelId(idx as u32);
        }
        let (idx, _) = self.keys.insert_full(key);
        LabelId(u32::try_from(idx).expect("label space exceeds u32"))
    }

    pub fn get(&self, key: &LabelKey) -> Option<LabelId> {
        self.keys.get_index_of(key).map(|i| LabelId(i as u32))
    }

    pub fn key(&self, id: LabelId) -> &LabelKey {
        &self.keys[id.index()]
    }

    /// Interns a batch of keys in ascending key order and returns the id of
    /// each input key, in input order.
    ///
    /// The ids handed out depend only on the set of keys, not on the order
    /// in which they were produced, so parallel key computation followed by
    /// one call here is deterministic.
    pub fn intern_batch(&mut self, keys: &[LabelKey]) -> Vec<LabelId> {
        let mut order: Vec<&LabelKey> = keys.iter().collect();
        order.sort_unstable();
        order.dedup();
        for key in order {
            if self.get(key).is_none() {
                self.intern(key.clone());
            }
        }
        keys.iter()
            .map(|k| self.get(k).expect("interned above"))
            .collect()
    }

    /// Translates `id` from `other` into this interner, interning the whole
    /// chain of keys it depends on.
    ///
    /// `memo` caches translations for repeated calls against the same
    /// `other` interner.
    pub fn import(
        &mut self,
        other: &LabelInterner,
        id: LabelId,
        memo: &mut HashMap<LabelId, LabelId>,
    ) -> LabelId {
        if let Some(&mapped) = memo.get(&id) {
            return mapped;
        }
        // explicit stack; refinement chains can be long
        let mut stack = vec![(id, false)];
        while let Some((cur, expanded)) = stack.pop() {
            if memo.contains_key(&cur) {
                continue;
            }
            match other.key(cur) {
                LabelKey::Refine(prev, neighbors) if !expanded => {
                    stack.push((cur, true));
                    stack.push((*prev, false));
                    for n in neighbors {
                        if !memo.contains_key(n) {
                            stack.push((*n, false));
                        }
                    }
                }
                LabelKey::Refine(prev, neighbors) => {
                    let prev = memo[prev];
                    let mut mapped: Vec<LabelId> = neighbors.iter().map(|n| memo[n]).collect();
                    mapped.sort_unstable();
                    let new = self.intern(LabelKey::Refine(prev, mapped));
                    memo.insert(cur, new);
                }
                leaf => {
                    let new = self.intern(leaf.clone());
                    memo.insert(cur, new);
                }
            }
        }
        memo[&id]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idempotent() {
        let mut i = LabelInterner::new();
        let a = i.intern(LabelKey::Refine(LabelId(3), vec![LabelId(1), LabelId(2)]));
        let b = i.intern(LabelKey::Refine(LabelId(3), vec![LabelId(1), LabelId(2)]));
        assert_eq!(a, b);
        assert_eq!(i.len(), 1);
    }

    #[test]
    fn fresh_keys_get_consecutive_ids() {
        let mut i = LabelInterner::new();
        let a = i.intern(LabelKey::Degree(1));
        let b = i.intern(LabelKey::Degree(2));
        assert_eq!((a, b), (LabelId(0), LabelId(1)));
    }

    #[test]
    #[cfg(debug_assertions)]
    #[should_panic(expected = "sorted")]
    fn unsorted_refine_key_is_caught() {
        let mut i = LabelInterner::new();
        i.intern(LabelKey::Refine(LabelId(3), vec![LabelId(2), LabelId(1)]));
    }

    #[test]
    fn batch_order_is_key_order() {
        let mut i = LabelInterner::new();
        let ids = i.intern_batch(&[
            LabelKey::Degree(5),
            LabelKey::NodeLabel(9),
            LabelKey::Degree(5),
            LabelKey::Degree(1),
        ]);
        // NodeLabel sorts before Degree, Degree(1) before Degree(5)
        assert_eq!(ids, vec![LabelId(2), LabelId(0), LabelId(2), LabelId(1)]);
    }

    #[test]
    fn import_preserves_structure() {
        let mut local = LabelInterner::new();
        let a = local.intern(LabelKey::NodeLabel(7));
        let b = local.intern(LabelKey::NodeLabel(3));
        let r = local.intern(LabelKey::Refine(a, vec![a, b]));
        let rr = local.intern(LabelKey::Refine(r, vec![r]));

        let mut global = LabelInterner::new();
        // pre-populate in another order so ids differ
        let gb = global.intern(LabelKey::NodeLabel(3));
        let ga = global.intern(LabelKey::NodeLabel(7));
        let mut memo = HashMap::new();
        let grr = global.import(&local, rr, &mut memo);

        let mut expected = vec![ga, gb];
        expected.sort();
        let gr = global.get(&LabelKey::Refine(ga, expected)).unwrap();
        assert_eq!(global.key(grr), &LabelKey::Refine(gr, vec![gr]));
        assert_eq!(memo[&a], ga);
    }
}

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::density::Density;
use crate::error::{Error, Result};
use crate::network::VertexId;
use crate::query::StdfAnswer;

/// Best flow found for one size class, with the subsets achieving it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DfEntry {
    pub value: u64,
    pub sources: Vec<VertexId>,
    pub sinks: Vec<VertexId>,
}

impl DfEntry {
    pub fn size(&self) -> usize {
        self.sources.len() + self.sinks.len()
    }

    /// Higher value first, then the lexicographically smaller
    /// `(sources, sinks)` witness.
    pub(crate) fn better_than(&self, other: &DfEntry) -> bool {
        match self.value.cmp(&other.value) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => (&self.sources, &self.sinks) < (&other.sources, &other.sinks),
        }
    }
}

/// Densest-flow array: entry `k` holds the largest flow over terminal subsets
/// of total size exactly `k`, for `k` in `0..=n`.
///
/// Sizes 0 and 1 carry value 0. From size 2 on, witnesses have both a source
/// and a sink. An entry is `None` only when an anytime computation stopped
/// before reaching that size class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensestFlowArray {
    entries: Vec<Option<DfEntry>>,
}

impl DensestFlowArray {
    pub fn from_entries(entries: Vec<Option<DfEntry>>) -> Self {
        assert!(!entries.is_empty(), "an array covers at least size 0");
        DensestFlowArray { entries }
    }

    /// Builds an array from plain values with empty witnesses (for tests of
    /// the merge algebra).
    pub fn from_values(values: &[u64]) -> Self {
        Self::from_entries(
            values
                .iter()
                .map(|&value| Some(DfEntry { value, sources: Vec::new(), sinks: Vec::new() }))
                .collect(),
        )
    }

    /// All-zero array over terminals that carry no flow. The witness of size
    /// `k` is the first `k` of `sources` followed by `sinks`.
    pub fn zeros(sources: &[VertexId], sinks: &[VertexId]) -> Self {
        let n = sources.len() + sinks.len();
        let entries = (0..=n)
            .map(|k| {
                let ks = k.min(sources.len());
                Some(DfEntry { value: 0, sources: sources[..ks].to_vec(), sinks: sinks[..k - ks].to_vec() })
            })
            .collect();
        DensestFlowArray { entries }
    }

    /// Largest size class `n`.
    pub fn max_size(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entry(&self, k: usize) -> Option<&DfEntry> {
        self.entries.get(k).and_then(Option::as_ref)
    }

    pub fn entries(&self) -> &[Option<DfEntry>] {
        &self.entries
    }

    pub fn value(&self, k: usize) -> Option<u64> {
        self.entry(k).map(|e| e.value)
    }

    pub fn values(&self) -> Vec<Option<u64>> {
        self.entries.iter().map(|e| e.as_ref().map(|e| e.value)).collect()
    }
}

fn union_sorted(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out = [a, b].concat();
    out.sort();
    out
}

/// Pairwise merge: `out[k1 + k2] = max(a[k1] + b[k2])`, scanning `k1` in the
/// outer loop and replacing only on a strictly larger value.
pub fn arr_mrg(a: &DensestFlowArray, b: &DensestFlowArray) -> DensestFlowArray {
    let mut out: Vec<Option<DfEntry>> = vec![None; a.entries.len() + b.entries.len() - 1];
    for (k1, x) in a.entries.iter().enumerate() {
        let Some(x) = x else { continue };
        for (k2, y) in b.entries.iter().enumerate() {
            let Some(y) = y else { continue };
            let value = x.value.saturating_add(y.value);
            let slot = &mut out[k1 + k2];
            if slot.as_ref().is_none_or(|cur| value > cur.value) {
                *slot = Some(DfEntry {
                    value,
                    sources: union_sorted(&x.sources, &y.sources),
                    sinks: union_sorted(&x.sinks, &y.sinks),
                });
            }
        }
    }
    DensestFlowArray { entries: out }
}

/// Merges arrays of overlap-free components by recursive halving. An empty
/// input yields the one-entry array of size 0.
pub fn merge(arrays: &[DensestFlowArray]) -> DensestFlowArray {
    match arrays {
        [] => DensestFlowArray::from_values(&[0]),
        [one] => one.clone(),
        _ => {
            let (left, right) = arrays.split_at(arrays.len() / 2);
            arr_mrg(&merge(left), &merge(right))
        }
    }
}

/// The entry maximizing `value / k'` over sizes `k' >= k`, compared exactly;
/// ties go to the smaller size.
pub fn answer(df: &DensestFlowArray, k: usize) -> Result<StdfAnswer> {
    if k == 0 {
        return Err(Error::Query("k must be at least 1".into()));
    }
    let n = df.max_size();
    if k > n {
        return Err(Error::Infeasible { k, available: n });
    }
    let mut best: Option<(&DfEntry, Density)> = None;
    for size in k..=n {
        let Some(e) = df.entry(size) else { continue };
        let d = Density::new(e.value, size as u64);
        if best.as_ref().is_none_or(|(_, bd)| d > *bd) {
            best = Some((e, d));
        }
    }
    let (e, density) = best.ok_or(Error::Infeasible { k, available: 0 })?;
    let mut ans = StdfAnswer::new(e.sources.clone(), e.sinks.clone(), e.value);
    ans.density = density;
    Ok(ans)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_array_is_identity() {
        let a = DensestFlowArray::from_values(&[0, 0, 5, 9]);
        let z = DensestFlowArray::from_values(&[0, 0, 0]);
        let m = arr_mrg(&z, &a);
        assert_eq!(m.values(), vec![Some(0), Some(0), Some(5), Some(9), Some(9), Some(9)]);
    }

    #[test]
    fn answer_prefers_smaller_size_on_ties() {
        let a = DensestFlowArray::from_values(&[0, 0, 4, 6]);
        let ans = answer(&a, 1).unwrap();
        assert_eq!(ans.density, Density::new(2, 1));
        assert_eq!(ans.value, 4);
    }

    #[test]
    fn answer_rejects_large_k() {
        let a = DensestFlowArray::from_values(&[0, 0, 4]);
        assert!(matches!(answer(&a, 3), Err(Error::Infeasible { k: 3, available: 2 })));
    }

    #[test]
    fn degenerate_answer() {
        let a = DensestFlowArray::from_values(&[0, 0, 0]);
        let ans = answer(&a, 2).unwrap();
        assert!(ans.degenerate);
        assert!(ans.density.is_zero());
    }

    #[test]
    fn zeros_witnesses() {
        let z = DensestFlowArray::zeros(&[VertexId(1)], &[VertexId(5)]);
        assert_eq!(z.entry(2).unwrap().size(), 2);
        assert_eq!(z.max_size(), 2);
    }
}

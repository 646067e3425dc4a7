//! Exact sets of lengths as eventually periodic subsets of N.
//!
//! `L(x)` is the set of lengths of walks from the identity to `x` in the atom
//! Cayley digraph (an edge `s -> s*a` for every atom `a`). The layer sets
//! `S_k` (elements reachable in exactly `k` steps) form a deterministic
//! sequence in a finite powerset, so it repeats: `S_i = S_j` for some first
//! `i < j`, after which it is periodic with period `j - i`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::FactorizationError;
use crate::bitset::BitSet;
use crate::monoid::{ElementId, FiniteMonoid};

/// Layers examined before giving up.
pub const LAYER_CAP: usize = 100_000;

/// `finite ∪ { n >= threshold : n mod period ∈ residues }`, with `period == 0`
/// exactly when the set is finite. Stored in canonical form (smallest period,
/// then smallest threshold), so equal sets compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LengthSet {
    pub finite: Vec<usize>,
    pub threshold: usize,
    pub period: usize,
    pub residues: Vec<usize>,
}

impl LengthSet {
    pub fn empty() -> Self {
        LengthSet {
            finite: Vec::new(),
            threshold: 0,
            period: 0,
            residues: Vec::new(),
        }
    }

    pub fn from_finite(mut values: Vec<usize>) -> Self {
        values.sort_unstable();
        values.dedup();
        LengthSet {
            threshold: values.last().map_or(0, |m| m + 1),
            finite: values,
            period: 0,
            residues: Vec::new(),
        }
    }

    /// Canonical form of the set whose membership is `bits[k]` for
    /// `k < start + period` and periodic with `period` from `start` on.
    pub(crate) fn from_periodic_bits(bits: &[bool], start: usize, period: usize) -> Self {
        debug_assert_eq!(bits.len(), start + period);
        let tail = &bits[start..];
        if period == 0 || !tail.iter().any(|&b| b) {
            return Self::from_finite((0..start).filter(|&k| bits[k]).collect());
        }
        let d = (1..=period)
            .filter(|d| period.is_multiple_of(*d))
            .find(|&d| (0..period).all(|k| tail[k] == tail[k % d]))
            .expect("d = period always works");
        let member = |k: usize| -> bool {
            if k < start {
                bits[k]
            } else {
                tail[(k - start) % d]
            }
        };
        let mut threshold = start;
        while threshold > 0 && bits[threshold - 1] == member(threshold - 1 + d) {
            threshold -= 1;
        }
        let mut residues: Vec<usize> = (threshold..threshold + d)
            .filter(|&k| member(k))
            .map(|k| k % d)
            .collect();
        residues.sort_unstable();
        LengthSet {
            finite: (0..threshold).filter(|&k| bits[k]).collect(),
            threshold,
            period: d,
            residues,
        }
    }

    pub fn contains(&self, k: usize) -> bool {
        if k < self.threshold {
            self.finite.binary_search(&k).is_ok()
        } else {
            self.period > 0 && self.residues.contains(&(k % self.period))
        }
    }

    pub fn is_finite(&self) -> bool {
        self.period == 0
    }

    pub fn is_empty(&self) -> bool {
        self.finite.is_empty() && self.residues.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.is_finite() && self.finite.len() == 1
    }

    /// Members `<= horizon`.
    pub fn truncate(&self, horizon: usize) -> Vec<usize> {
        (0..=horizon).filter(|&k| self.contains(k)).collect()
    }
}

impl fmt::Display for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_finite() {
            let items: Vec<String> = self.finite.iter().map(|k| k.to_string()).collect();
            return write!(f, "{{{}}}", items.join(","));
        }
        // list through two full periods past the threshold, then an ellipsis
        let shown = self.truncate(self.threshold + 2 * self.period);
        let items: Vec<String> = shown.iter().map(|k| k.to_string()).collect();
        write!(f, "{{{},...}}", items.join(","))
    }
}

/// The layer sets of the atom Cayley digraph up to their first repetition.
#[derive(Clone, Debug)]
pub struct LayerSequence {
    layers: Vec<BitSet>,
    /// First index of the repeating block.
    pub preperiod: usize,
    pub period: usize,
}

impl LayerSequence {
    pub fn compute(h: &FiniteMonoid) -> Result<Self, FactorizationError> {
        Self::compute_with_cap(h, LAYER_CAP)
    }

    pub fn compute_with_cap(h: &FiniteMonoid, cap: usize) -> Result<Self, FactorizationError> {
        let n = h.size();
        let mut first = BitSet::new(n);
        first.insert(0);
        let mut seen: HashMap<BitSet, usize> = HashMap::new();
        let mut layers = Vec::new();
        let mut current = first;
        loop {
            if let Some(&i) = seen.get(&current) {
                let period = layers.len() - i;
                return Ok(LayerSequence {
                    layers,
                    preperiod: i,
                    period,
                });
            }
            if layers.len() >= cap {
                return Err(FactorizationError::CapExceeded { layers: cap });
            }
            let mut next = BitSet::new(n);
            for s in current.iter() {
                for &a in h.atoms() {
                    next.insert(h.mul(ElementId(s), a).0);
                }
            }
            seen.insert(current.clone(), layers.len());
            layers.push(current);
            current = next;
        }
    }

    pub fn length_set(&self, x: ElementId) -> LengthSet {
        let bits: Vec<bool> = self.layers.iter().map(|l| l.contains(x.0)).collect();
        LengthSet::from_periodic_bits(&bits, self.preperiod, self.period)
    }

    pub fn layers(&self) -> &[BitSet] {
        &self.layers
    }
}

pub fn length_set(h: &FiniteMonoid, x: ElementId) -> Result<LengthSet, FactorizationError> {
    Ok(LayerSequence::compute(h)?.length_set(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::{enumerate_factorizations, DEFAULT_EXPLOSION_GUARD};
    use crate::monoid::{instance, InstanceKind};
    use crate::power::build_reduced_power_monoid;

    #[test]
    fn n3_zero_is_cofinite() {
        let n3 = instance(&InstanceKind::NullMonoid(1)).unwrap();
        let l = length_set(&n3, ElementId(2)).unwrap();
        assert_eq!(
            l,
            LengthSet {
                finite: vec![],
                threshold: 2,
                period: 1,
                residues: vec![0]
            }
        );
        assert_eq!(l.to_string(), "{2,3,4,...}");
        assert_eq!(
            length_set(&n3, ElementId(1)).unwrap(),
            LengthSet::from_finite(vec![1])
        );
        assert_eq!(
            length_set(&n3, ElementId(0)).unwrap(),
            LengthSet::from_finite(vec![0])
        );
    }

    #[test]
    fn groups_have_no_lengths_off_identity() {
        let c3 = instance(&InstanceKind::Cyclic(3)).unwrap();
        assert!(length_set(&c3, ElementId(1)).unwrap().is_empty());
    }

    #[test]
    fn power_monoid_full_set() {
        let p = build_reduced_power_monoid(&instance(&InstanceKind::Cyclic(3)).unwrap()).unwrap();
        let full = ElementId(p.monoid.size() - 1);
        let l = length_set(&p.monoid, full).unwrap();
        assert_eq!(l.truncate(6), vec![2, 3, 4, 5, 6]);
        assert!(!l.is_finite());
    }

    #[test]
    fn canonical_form_shrinks_period_and_threshold() {
        // bits 0..6 with period 4 starting at 2: pattern 1,0,1,0 has period 2
        let bits = [false, true, true, false, true, false];
        let l = LengthSet::from_periodic_bits(&bits, 2, 4);
        assert_eq!(l.period, 2);
        assert_eq!(l.threshold, 2);
        assert_eq!(l.finite, vec![1]);
        assert_eq!(l.residues, vec![0]);
        assert_eq!(l.truncate(8), vec![1, 2, 4, 6, 8]);
    }

    #[test]
    fn matches_brute_force_enumeration() {
        // lengths up to 6 read off the exhaustive list of factorizations
        let t4 = instance(&InstanceKind::NullMonoid(2)).unwrap();
        let layers = LayerSequence::compute(&t4).unwrap();
        for x in t4.elements() {
            let words = enumerate_factorizations(&t4, x, 6, DEFAULT_EXPLOSION_GUARD).unwrap();
            let mut lens: Vec<usize> = words.iter().map(|w| w.len()).collect();
            lens.sort_unstable();
            lens.dedup();
            assert_eq!(layers.length_set(x).truncate(6), lens);
        }
    }
}

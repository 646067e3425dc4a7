//! Minimal factorizations and the invariant kappa.
//!
//! A word that revisits a prefix product contains a loop; cutting the loop
//! out leaves a strictly shorter word with the same product whose letters
//! are a sub-multiset of the original, i.e. a strictly dominating word. So
//! every minimal factorization is a simple path from the identity in the
//! atom Cayley digraph, and it suffices to enumerate those (all of length
//! at most `|H| - 1`) and filter by domination element by element.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use super::{
    class_counts_of, counts_le, pi_eval, FactorizationError, FactorizationSystem,
    DEFAULT_EXPLOSION_GUARD,
};
use crate::bitset::BitSet;
use crate::monoid::{ElementId, FiniteMonoid};
use crate::words::AtomWord;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalClass {
    pub counts: Vec<u32>,
    pub representative: AtomWord,
}

impl MinimalClass {
    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representative.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub element: ElementId,
    /// Sorted by length, then by class counts.
    pub classes: Vec<MinimalClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalCatalog {
    /// One entry per element, in element order.
    pub entries: Vec<CatalogEntry>,
    pub kappa: usize,
}

impl MinimalCatalog {
    pub fn entry(&self, x: ElementId) -> &CatalogEntry {
        &self.entries[x.0]
    }

    /// Minimal lengths of `x`, ascending and deduplicated.
    pub fn minimal_lengths(&self, x: ElementId) -> Vec<usize> {
        let mut lens: Vec<usize> = self
            .entry(x)
            .classes
            .iter()
            .map(MinimalClass::len)
            .collect();
        lens.dedup();
        lens
    }
}

/// Returns a word strictly below `w` (same product, strictly smaller
/// multiset of associate classes), if one exists.
///
/// Strict domination forces a strictly shorter word, so the search runs
/// over states (product, class counts) with counts bounded by those of `w`.
pub fn find_dominating<S: FactorizationSystem + ?Sized>(s: &S, w: &AtomWord) -> Option<AtomWord> {
    if w.len() <= 1 {
        return None;
    }
    let target = pi_eval(s, w)?;
    let limit = class_counts_of(s, w);
    let max_len = w.len() - 1;
    let start = (s.identity(), vec![0u32; limit.len()]);
    // state -> (previous state, atom appended)
    type State = (ElementId, Vec<u32>);
    let mut parent: HashMap<State, Option<(State, ElementId)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((state, len)) = queue.pop_front() {
        if len >= 1 && state.0 == target {
            let mut letters = Vec::with_capacity(len);
            let mut cur = state;
            while let Some(Some((prev, a))) = parent.get(&cur).cloned() {
                letters.push(a);
                cur = prev;
            }
            letters.reverse();
            return Some(AtomWord::new(letters));
        }
        if len == max_len {
            continue;
        }
        for &a in s.atoms() {
            let c = s.atom_class(a).expect("atom");
            if state.1[c] >= limit[c] {
                continue;
            }
            let Some(next) = s.multiply(state.0, a) else {
                continue;
            };
            if !s.can_reach(next, target) {
                continue;
            }
            let mut counts = state.1.clone();
            counts[c] += 1;
            let key = (next, counts);
            if !parent.contains_key(&key) {
                parent.insert(key.clone(), Some((state.clone(), a)));
                queue.push_back((key, len + 1));
            }
        }
    }
    None
}

pub fn is_minimal<S: FactorizationSystem + ?Sized>(s: &S, w: &AtomWord) -> bool {
    find_dominating(s, w).is_none()
}

/// Exact catalog of minimal factorization classes of every element.
pub fn minimal_catalog(h: &FiniteMonoid) -> Result<MinimalCatalog, FactorizationError> {
    minimal_catalog_with_guard(h, DEFAULT_EXPLOSION_GUARD)
}

pub fn minimal_catalog_with_guard(
    h: &FiniteMonoid,
    guard: usize,
) -> Result<MinimalCatalog, FactorizationError> {
    let n = h.size();
    let classes = h.atom_classes().len();
    let mut candidates: Vec<BTreeMap<Vec<u32>, AtomWord>> = vec![BTreeMap::new(); n];

    // iterative DFS over simple paths from the identity
    let mut on_path = BitSet::new(n);
    on_path.insert(0);
    let mut letters: Vec<ElementId> = Vec::new();
    let mut counts = vec![0u32; classes];
    let mut products = vec![ElementId::IDENTITY];
    let mut next_atom = vec![0usize];
    let mut explored = 1usize;
    candidates[0].insert(counts.clone(), AtomWord::empty());
    let atoms = h.atoms();
    while let Some(top) = next_atom.last_mut() {
        if *top == atoms.len() {
            next_atom.pop();
            let p = products.pop().expect("aligned stacks");
            if let Some(a) = letters.pop() {
                on_path.remove(p.0);
                counts[h.atom_class_of(a).expect("atom")] -= 1;
            }
            continue;
        }
        let a = atoms[*top];
        *top += 1;
        let cur = *products.last().expect("non-empty");
        let next = h.mul(cur, a);
        if on_path.contains(next.0) {
            continue;
        }
        explored += 1;
        if explored > guard {
            return Err(FactorizationError::ExplosionGuard { limit: guard });
        }
        on_path.insert(next.0);
        letters.push(a);
        counts[h.atom_class_of(a).expect("atom")] += 1;
        products.push(next);
        next_atom.push(0);
        candidates[next.0]
            .entry(counts.clone())
            .or_insert_with(|| AtomWord::new(letters.clone()));
    }

    let mut entries = Vec::with_capacity(n);
    let mut kappa = 0;
    for (x, cands) in candidates.into_iter().enumerate() {
        let keys: Vec<&Vec<u32>> = cands.keys().collect();
        let mut minimal: Vec<MinimalClass> = cands
            .iter()
            .filter(|(k, _)| {
                let empty = k.iter().all(|&c| c == 0);
                !keys.iter().any(|other| {
                    *other != *k && other.iter().all(|&c| c == 0) == empty && counts_le(other, k)
                })
            })
            .map(|(k, w)| MinimalClass {
                counts: k.clone(),
                representative: w.clone(),
            })
            .collect();
        minimal.sort_by(|p, q| (p.len(), &p.counts).cmp(&(q.len(), &q.counts)));
        kappa = kappa.max(minimal.iter().map(MinimalClass::len).max().unwrap_or(0));
        entries.push(CatalogEntry {
            element: ElementId(x),
            classes: minimal,
        });
    }
    Ok(MinimalCatalog { entries, kappa })
}

/// Returns kappa and the union of all minimal lengths, checking that the
/// union is exactly `[0, kappa]`.
pub fn kappa_and_dichotomy(h: &FiniteMonoid) -> Result<(usize, Vec<usize>), FactorizationError> {
    let catalog = minimal_catalog(h)?;
    kappa_from_catalog(&catalog)
}

pub(crate) fn kappa_from_catalog(
    catalog: &MinimalCatalog,
) -> Result<(usize, Vec<usize>), FactorizationError> {
    let mut union: Vec<usize> = catalog
        .entries
        .iter()
        .flat_map(|e| e.classes.iter().map(MinimalClass::len))
        .collect();
    union.sort_unstable();
    union.dedup();
    if union != (0..=catalog.kappa).collect::<Vec<_>>() {
        return Err(FactorizationError::DichotomyViolation {
            kappa: catalog.kappa,
            found: union,
        });
    }
    Ok((catalog.kappa, union))
}

//! Factorizations into atoms.
//!
//! Everything here is phrased over a [`FactorizationSystem`]: an element
//! universe with identity, units, atoms grouped into associate classes, and a
//! (possibly partial) multiplication. [`FiniteMonoid`] is the main instance;
//! [`IntegerFragment`] models the positive integers up to a bound, where a
//! product is only defined while it stays within the bound.

mod classify;
mod lengths;
mod minimal;
mod primes;

pub use classify::{
    class_counts, classify_arithmetic, factorial_battery, ArithmeticFlags, FactorialFlags,
};
pub use lengths::{length_set, LayerSequence, LengthSet};
pub use minimal::{
    find_dominating, is_minimal, kappa_and_dichotomy, minimal_catalog, CatalogEntry,
    MinimalCatalog, MinimalClass,
};
pub use primes::{is_powerful, is_prime, PotentialConflict, PowerfulCheck, PrimeCheck};

use serde::Serialize;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::monoid::{ElementId, FiniteMonoid};
use crate::words::AtomWord;

/// Default cap on words explored by a single enumeration.
pub const DEFAULT_EXPLOSION_GUARD: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorizationError {
    #[error("enumeration exceeded {limit} explored words")]
    ExplosionGuard { limit: usize },
    #[error("layer sequence did not repeat within {layers} layers")]
    CapExceeded { layers: usize },
    #[error("{0} is not an atom")]
    NotAnAtom(ElementId),
    #[error("union of minimal lengths {found:?} is not the interval [0, {kappa}]")]
    DichotomyViolation { kappa: usize, found: Vec<usize> },
    #[error("independent routes disagree: {0}")]
    CrossCheckMismatch(String),
}

/// Capabilities needed to talk about factorizations in a structure.
pub trait FactorizationSystem {
    /// Every element id is strictly below this bound.
    fn id_bound(&self) -> usize;
    fn elements(&self) -> Vec<ElementId>;
    fn identity(&self) -> ElementId;
    fn is_unit(&self, x: ElementId) -> bool;
    /// Atoms in ascending id order.
    fn atoms(&self) -> &[ElementId];
    /// Associate class index of an atom.
    fn atom_class(&self, a: ElementId) -> Option<usize>;
    fn atom_class_count(&self) -> usize;
    /// `None` when the product leaves the modelled universe.
    fn multiply(&self, x: ElementId, y: ElementId) -> Option<ElementId>;
    /// Set of `y` with `x | y`.
    fn multiples(&self, x: ElementId) -> BitSet;
    fn element_name(&self, x: ElementId) -> String;
    /// False only when no extension of a word evaluating to `prefix` can
    /// evaluate to `target`.
    fn can_reach(&self, _prefix: ElementId, _target: ElementId) -> bool {
        true
    }
}

impl FactorizationSystem for FiniteMonoid {
    fn id_bound(&self) -> usize {
        self.size()
    }

    fn elements(&self) -> Vec<ElementId> {
        FiniteMonoid::elements(self).collect()
    }

    fn identity(&self) -> ElementId {
        ElementId::IDENTITY
    }

    fn is_unit(&self, x: ElementId) -> bool {
        FiniteMonoid::is_unit(self, x)
    }

    fn atoms(&self) -> &[ElementId] {
        FiniteMonoid::atoms(self)
    }

    fn atom_class(&self, a: ElementId) -> Option<usize> {
        self.atom_class_of(a)
    }

    fn atom_class_count(&self) -> usize {
        self.atom_classes().len()
    }

    fn multiply(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        Some(self.mul(x, y))
    }

    fn multiples(&self, x: ElementId) -> BitSet {
        self.ideal(x)
    }

    fn element_name(&self, x: ElementId) -> String {
        self.name(x).to_string()
    }
}

/// The integers `1..=bound` under multiplication, with atoms the primes.
/// Element ids are the integers themselves.
#[derive(Clone, Debug)]
pub struct IntegerFragment {
    bound: usize,
    primes: Vec<ElementId>,
    class_of: Vec<Option<usize>>,
}

impl IntegerFragment {
    pub fn new(bound: usize) -> Self {
        let bound = bound.max(1);
        let mut composite = vec![false; bound + 1];
        let mut primes = Vec::new();
        for p in 2..=bound {
            if !composite[p] {
                primes.push(ElementId(p));
                let mut q = p * p;
                while q <= bound {
                    composite[q] = true;
                    q += p;
                }
            }
        }
        let mut class_of = vec![None; bound + 1];
        for (i, p) in primes.iter().enumerate() {
            class_of[p.0] = Some(i);
        }
        IntegerFragment {
            bound,
            primes,
            class_of,
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn element(&self, n: usize) -> Option<ElementId> {
        (1..=self.bound).contains(&n).then_some(ElementId(n))
    }
}

impl FactorizationSystem for IntegerFragment {
    fn id_bound(&self) -> usize {
        self.bound + 1
    }

    fn elements(&self) -> Vec<ElementId> {
        (1..=self.bound).map(ElementId).collect()
    }

    fn identity(&self) -> ElementId {
        ElementId(1)
    }

    fn is_unit(&self, x: ElementId) -> bool {
        x.0 == 1
    }

    fn atoms(&self) -> &[ElementId] {
        &self.primes
    }

    fn atom_class(&self, a: ElementId) -> Option<usize> {
        self.class_of.get(a.0).copied().flatten()
    }

    fn atom_class_count(&self) -> usize {
        self.primes.len()
    }

    fn multiply(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        x.0.checked_mul(y.0)
            .filter(|&p| p <= self.bound)
            .map(ElementId)
    }

    fn multiples(&self, x: ElementId) -> BitSet {
        let mut s = BitSet::new(self.bound + 1);
        let mut k = x.0;
        while k <= self.bound {
            s.insert(k);
            k += x.0;
        }
        s
    }

    fn element_name(&self, x: ElementId) -> String {
        x.0.to_string()
    }

    fn can_reach(&self, prefix: ElementId, target: ElementId) -> bool {
        target.0.is_multiple_of(prefix.0)
    }
}

/// Left-to-right product of an atom word; `None` if some partial product
/// leaves the universe.
pub fn pi_eval<S: FactorizationSystem + ?Sized>(s: &S, w: &AtomWord) -> Option<ElementId> {
    w.letters
        .iter()
        .try_fold(s.identity(), |acc, &a| s.multiply(acc, a))
}

/// All atom words of length at most `max_len` evaluating to `x`, in
/// lexicographic order (atoms ordered by id, prefixes first).
pub fn enumerate_factorizations<S: FactorizationSystem + ?Sized>(
    s: &S,
    x: ElementId,
    max_len: usize,
    guard: usize,
) -> Result<Vec<AtomWord>, FactorizationError> {
    struct Dfs<'a, S: ?Sized> {
        s: &'a S,
        target: ElementId,
        max_len: usize,
        guard: usize,
        explored: usize,
        stack: Vec<ElementId>,
        out: Vec<AtomWord>,
    }

    impl<S: FactorizationSystem + ?Sized> Dfs<'_, S> {
        fn visit(&mut self, current: ElementId) -> Result<(), FactorizationError> {
            self.explored += 1;
            if self.explored > self.guard {
                return Err(FactorizationError::ExplosionGuard { limit: self.guard });
            }
            if current == self.target {
                self.out.push(AtomWord::new(self.stack.clone()));
            }
            if self.stack.len() == self.max_len {
                return Ok(());
            }
            for &a in self.s.atoms() {
                let Some(next) = self.s.multiply(current, a) else {
                    continue;
                };
                if !self.s.can_reach(next, self.target) {
                    continue;
                }
                self.stack.push(a);
                self.visit(next)?;
                self.stack.pop();
            }
            Ok(())
        }
    }

    let mut dfs = Dfs {
        s,
        target: x,
        max_len,
        guard,
        explored: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    dfs.visit(s.identity())?;
    Ok(dfs.out)
}

/// Key of a factorization class: the product together with how many letters
/// fall in each associate class of atoms. Two atom words are congruent iff
/// their keys are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FactorizationClass {
    pub element: ElementId,
    pub class_counts: Vec<u32>,
}

impl FactorizationClass {
    pub fn len(&self) -> usize {
        self.class_counts.iter().map(|&c| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn class_counts_of<S: FactorizationSystem + ?Sized>(s: &S, w: &AtomWord) -> Vec<u32> {
    let mut counts = vec![0u32; s.atom_class_count()];
    for &a in &w.letters {
        let c = s.atom_class(a).expect("letters of an atom word are atoms");
        counts[c] += 1;
    }
    counts
}

/// Class key of an atom word, or `None` if the word cannot be evaluated.
pub fn factorization_class<S: FactorizationSystem + ?Sized>(
    s: &S,
    w: &AtomWord,
) -> Option<FactorizationClass> {
    Some(FactorizationClass {
        element: pi_eval(s, w)?,
        class_counts: class_counts_of(s, w),
    })
}

/// Outcome of comparing two atom words under the factorization preorder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    Equivalent,
    AStrictlyBelow,
    BStrictlyBelow,
    Incomparable,
    DifferentProducts,
}

pub(crate) fn counts_le(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `wa` is below `wb` when both evaluate to the same element and the
/// letters of `wa` embed injectively, up to associates, into those of `wb`.
pub fn compare<S: FactorizationSystem + ?Sized>(s: &S, wa: &AtomWord, wb: &AtomWord) -> Comparison {
    if pi_eval(s, wa) != pi_eval(s, wb) {
        return Comparison::DifferentProducts;
    }
    if wa.is_empty() != wb.is_empty() {
        return Comparison::Incomparable;
    }
    let (ca, cb) = (class_counts_of(s, wa), class_counts_of(s, wb));
    match (counts_le(&ca, &cb), counts_le(&cb, &ca)) {
        (true, true) => Comparison::Equivalent,
        (true, false) => Comparison::AStrictlyBelow,
        (false, true) => Comparison::BStrictlyBelow,
        (false, false) => Comparison::Incomparable,
    }
}

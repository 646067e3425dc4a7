//! Finite monoids given by their Cayley table.
//!
//! A [`FiniteMonoid`] stores the full multiplication table with the identity
//! fixed at index 0. Units, inverses, atoms and the association partition are
//! computed once when the monoid is built; everything else is derived on
//! demand by exhaustive scans, which is the intended scale (tables of a few
//! hundred elements, a few thousand for power monoids).

mod instances;
mod io;
mod properties;

pub use instances::{direct_product, instance, InstanceKind, INSTANCE_CAP};
pub use io::{read_cayley_json, to_cayley_json, CayleyFile};
pub use properties::{property_battery, PropertyReport, Witness};

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::BitSet;

/// Index of an element inside its owning structure.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ElementId(pub usize);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoidError {
    #[error("table is empty")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    Shape {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("expected {expected} names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("entry ({row},{col}) = {value} is outside [0, {size})")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("element 0 is not a two-sided identity (fails at {0})")]
    NoIdentity(usize),
    #[error("not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("unknown instance kind `{0}`")]
    UnknownKind(String),
    #[error("invalid instance parameters: {0}")]
    BadParameters(String),
    #[error("size limit exceeded: {requested} > {cap}")]
    SizeLimit { requested: u128, cap: u128 },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("malformed Cayley file: {0}")]
    Format(String),
}

/// Partition of a monoid into classes of associated elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssociationPartition {
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<ElementId>>,
}

/// Cayley-table monoid with identity at index 0.
#[derive(Clone, Debug)]
pub struct FiniteMonoid {
    size: usize,
    table: Vec<usize>,
    names: Vec<String>,
    inverse: Vec<Option<usize>>,
    association: AssociationPartition,
    atoms: Vec<ElementId>,
    is_atom: Vec<bool>,
    /// Associate classes of atoms, ordered by smallest member.
    atom_classes: Vec<Vec<ElementId>>,
    atom_class_of: Vec<Option<usize>>,
}

impl PartialEq for FiniteMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.names == other.names
    }
}

impl Eq for FiniteMonoid {}

impl FiniteMonoid {
    /// Validates and builds a monoid from a row-major table (row = left factor).
    pub fn new(table: Vec<Vec<usize>>, names: Vec<String>) -> Result<Self, MonoidError> {
        let n = table.len();
        if n == 0 {
            return Err(MonoidError::Empty);
        }
        if names.len() != n {
            return Err(MonoidError::NameCount {
                expected: n,
                got: names.len(),
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(MonoidError::Shape {
                    row,
                    len: entries.len(),
                    expected: n,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(MonoidError::IndexOutOfRange {
                        row,
                        col,
                        value,
                        size: n,
                    });
                }
                flat.push(value);
            }
        }
        validate_flat(n, &flat)?;
        Ok(Self::from_flat_unchecked(flat, names))
    }

    /// Builds from a flat table that is associative with identity 0 by construction.
    pub(crate) fn from_flat_unchecked(table: Vec<usize>, names: Vec<String>) -> Self {
        let size = names.len();
        debug_assert_eq!(table.len(), size * size);
        let mut m = FiniteMonoid {
            size,
            table,
            names,
            inverse: Vec::new(),
            association: AssociationPartition {
                class_of: Vec::new(),
                classes: Vec::new(),
            },
            atoms: Vec::new(),
            is_atom: Vec::new(),
            atom_classes: Vec::new(),
            atom_class_of: Vec::new(),
        };
        m.compute_units();
        m.compute_association();
        m.compute_atoms();
        m
    }

    /// Runs full validation on an already-built monoid.
    pub fn validate(&self) -> Result<(), MonoidError> {
        validate_flat(self.size, &self.table)
    }

    fn compute_units(&mut self) {
        let n = self.size;
        self.inverse = (0..n)
            .map(|x| (0..n).find(|&y| self.table[x * n + y] == 0 && self.table[y * n + x] == 0))
            .collect();
    }

    fn compute_association(&mut self) {
        let n = self.size;
        let units: Vec<usize> = (0..n).filter(|&x| self.inverse[x].is_some()).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = BitSet::new(n);
            for &u in &units {
                let ux = self.table[u * n + x];
                for &v in &units {
                    members.insert(self.table[ux * n + v]);
                }
            }
            let members: Vec<ElementId> = members.iter().map(ElementId).collect();
            for m in &members {
                class_of[m.0] = id;
            }
            classes.push(members);
        }
        self.association = AssociationPartition { class_of, classes };
    }

    fn compute_atoms(&mut self) {
        let n = self.size;
        let mut decomposable = vec![false; n];
        let non_units: Vec<usize> = (0..n).filter(|&x| self.inverse[x].is_none()).collect();
        for &x in &non_units {
            for &y in &non_units {
                decomposable[self.table[x * n + y]] = true;
            }
        }
        self.is_atom = (0..n)
            .map(|x| self.inverse[x].is_none() && !decomposable[x])
            .collect();
        self.atoms = (0..n).filter(|&x| self.is_atom[x]).map(ElementId).collect();
        let mut atom_class_of = vec![None; n];
        let mut atom_classes: Vec<Vec<ElementId>> = Vec::new();
        let mut by_assoc = vec![usize::MAX; self.association.classes.len()];
        for &a in &self.atoms {
            let c = self.association.class_of[a.0];
            if by_assoc[c] == usize::MAX {
                by_assoc[c] = atom_classes.len();
                atom_classes.push(Vec::new());
            }
            atom_classes[by_assoc[c]].push(a);
            atom_class_of[a.0] = Some(by_assoc[c]);
        }
        self.atom_classes = atom_classes;
        self.atom_class_of = atom_class_of;
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> ElementId {
        ElementId::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.size).map(ElementId)
    }

    #[inline]
    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        ElementId(self.table[x.0 * self.size + y.0])
    }

    /// Left-to-right product of a sequence; the empty product is the identity.
    pub fn product<I: IntoIterator<Item = ElementId>>(&self, items: I) -> ElementId {
        items
            .into_iter()
            .fold(ElementId::IDENTITY, |acc, x| self.mul(acc, x))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: ElementId) -> &str {
        &self.names[x.0]
    }

    pub fn element_by_name(&self, name: &str) -> Result<ElementId, MonoidError> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(ElementId)
            .ok_or_else(|| MonoidError::UnknownElement(name.to_string()))
    }

    pub fn is_unit(&self, x: ElementId) -> bool {
        self.inverse[x.0].is_some()
    }

    pub fn inverse(&self, x: ElementId) -> Option<ElementId> {
        self.inverse[x.0].map(ElementId)
    }

    /// Units paired with their inverses.
    pub fn units(&self) -> Vec<(ElementId, ElementId)> {
        self.inverse
            .iter()
            .enumerate()
            .filter_map(|(x, inv)| inv.map(|i| (ElementId(x), ElementId(i))))
            .collect()
    }

    pub fn unit_ids(&self) -> Vec<ElementId> {
        self.elements().filter(|&x| self.is_unit(x)).collect()
    }

    pub fn non_units(&self) -> Vec<ElementId> {
        self.elements().filter(|&x| !self.is_unit(x)).collect()
    }

    pub fn atoms(&self) -> &[ElementId] {
        &self.atoms
    }

    pub fn is_atom(&self, x: ElementId) -> bool {
        self.is_atom[x.0]
    }

    pub fn association(&self) -> &AssociationPartition {
        &self.association
    }

    pub fn atom_classes(&self) -> &[Vec<ElementId>] {
        &self.atom_classes
    }

    pub fn atom_class_of(&self, a: ElementId) -> Option<usize> {
        self.atom_class_of[a.0]
    }

    /// Two-sided ideal `H x H`.
    pub fn ideal(&self, x: ElementId) -> BitSet {
        let n = self.size;
        let mut right = BitSet::new(n);
        for v in 0..n {
            right.insert(self.table[x.0 * n + v]);
        }
        let mut out = BitSet::new(n);
        for r in right.iter() {
            for u in 0..n {
                out.insert(self.table[u * n + r]);
            }
        }
        out
    }

    /// `x` divides `y` when `y = u x v` for some `u, v`.
    pub fn divides(&self, x: ElementId, y: ElementId) -> bool {
        let n = self.size;
        (0..n).any(|v| {
            let xv = self.table[x.0 * n + v];
            (0..n).any(|u| self.table[u * n + xv] == y.0)
        })
    }

    /// `y = u x v` for some units `u, v`.
    pub fn associated(&self, x: ElementId, y: ElementId) -> bool {
        self.association.class_of[x.0] == self.association.class_of[y.0]
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.size;
        (0..n).all(|x| (x..n).all(|y| self.table[x * n + y] == self.table[y * n + x]))
    }

    /// Semigroup generated by `gens` (no identity unless it is a product).
    pub fn semigroup_closure(&self, gens: &[ElementId]) -> BitSet {
        let n = self.size;
        let mut set = BitSet::new(n);
        let mut queue: VecDeque<usize> = VecDeque::new();
        for g in gens {
            if set.insert(g.0) {
                queue.push_back(g.0);
            }
        }
        while let Some(s) = queue.pop_front() {
            for g in gens {
                let p = self.table[s * n + g.0];
                if set.insert(p) {
                    queue.push_back(p);
                }
            }
        }
        set
    }

    /// Least submonoid containing `seeds` that is closed under taking divisors.
    pub fn divisor_closed_submonoid(&self, seeds: &[ElementId]) -> Vec<ElementId> {
        let n = self.size;
        let mut set = BitSet::new(n);
        set.insert(0);
        for s in seeds {
            set.insert(s.0);
        }
        loop {
            let mut next = set.clone();
            let members: Vec<usize> = set.iter().collect();
            for &x in &members {
                for &y in &members {
                    next.insert(self.table[x * n + y]);
                }
            }
            for z in 0..n {
                if !next.contains(z)
                    && members
                        .iter()
                        .any(|&y| self.divides(ElementId(z), ElementId(y)))
                {
                    next.insert(z);
                }
            }
            if next == set {
                break;
            }
            set = next;
        }
        set.iter().map(ElementId).collect()
    }

    /// Restricts the table to a subset containing the identity and closed
    /// under multiplication. Returns the submonoid and the embedding of its
    /// elements into `self`.
    pub fn submonoid(
        &self,
        elements: &[ElementId],
    ) -> Result<(FiniteMonoid, Vec<ElementId>), MonoidError> {
        let mut members: Vec<ElementId> = elements.to_vec();
        members.sort();
        members.dedup();
        if members.first() != Some(&ElementId::IDENTITY) {
            return Err(MonoidError::NoIdentity(0));
        }
        let mut pos = vec![usize::MAX; self.size];
        for (i, m) in members.iter().enumerate() {
            pos[m.0] = i;
        }
        let k = members.len();
        let mut table = Vec::with_capacity(k * k);
        for &x in &members {
            for &y in &members {
                let p = self.mul(x, y);
                if pos[p.0] == usize::MAX {
                    return Err(MonoidError::BadParameters(format!(
                        "subset not closed: {} * {} = {}",
                        self.name(x),
                        self.name(y),
                        self.name(p)
                    )));
                }
                table.push(pos[p.0]);
            }
        }
        let names = members.iter().map(|&m| self.names[m.0].clone()).collect();
        Ok((FiniteMonoid::from_flat_unchecked(table, names), members))
    }

    /// One representative (smallest index) per associate class of atoms.
    pub fn atom_transversal(&self) -> Vec<ElementId> {
        self.atom_classes.iter().map(|c| c[0]).collect()
    }

    /// Shrinks `gens` to a subset generating the same semigroup up to units,
    /// removing one redundant element at a time (lowest index first) until
    /// no member lies in the semigroup generated by the others.
    pub fn reduce_generating_set(&self, gens: &[ElementId]) -> Vec<ElementId> {
        let units = self.unit_ids();
        let sandwich = |a: ElementId| -> Vec<ElementId> {
            let mut out = Vec::new();
            for &u in &units {
                for &v in &units {
                    out.push(self.mul(self.mul(u, a), v));
                }
            }
            out.sort();
            out.dedup();
            out
        };
        let mut current: Vec<ElementId> = gens.to_vec();
        current.sort();
        current.dedup();
        'outer: loop {
            for (i, &a) in current.iter().enumerate() {
                let own = sandwich(a);
                let mut others: Vec<ElementId> = current
                    .iter()
                    .flat_map(|&b| sandwich(b))
                    .filter(|x| !own.contains(x))
                    .collect();
                others.sort();
                others.dedup();
                if self.semigroup_closure(&others).contains(a.0) {
                    current.remove(i);
                    continue 'outer;
                }
            }
            break;
        }
        current
    }

    /// `ord(x) = |{x^k : k >= 1}|` for every element.
    pub fn orders(&self) -> Vec<usize> {
        self.elements()
            .map(|x| {
                let mut seen = BitSet::new(self.size);
                let mut p = x;
                while seen.insert(p.0) {
                    p = self.mul(p, x);
                }
                seen.count()
            })
            .collect()
    }

    /// All idempotents, flagged `true` when non-trivial (different from 1).
    pub fn idempotents(&self) -> Vec<(ElementId, bool)> {
        self.elements()
            .filter(|&x| self.mul(x, x) == x)
            .map(|x| (x, x != ElementId::IDENTITY))
            .collect()
    }
}

fn validate_flat(n: usize, t: &[usize]) -> Result<(), MonoidError> {
    for x in 0..n {
        if t[x] != x || t[x * n] != x {
            return Err(MonoidError::NoIdentity(x));
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = t[x * n + y];
            for z in 0..n {
                if t[xy * n + z] != t[x * n + t[y * n + z]] {
                    return Err(MonoidError::NotAssociative { x, y, z });
                }
            }
        }
    }
    Ok(())
}

//! Exhaustive structural checks on a finite monoid.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{ElementId, FiniteMonoid};
use crate::bitset::BitSet;

/// Counterexample tuple of element ids.
pub type Witness = Vec<ElementId>;

/// Flags decided by exhaustive scans. Every false flag has a witness, found
/// by lexicographic scan order over the element indices in the tuple.
///
/// Witness shapes: `acyclic` is `(u, x, v)` with `u x v = x` and `u` or `v`
/// a non-unit; `unit_cancellative` is `(x, y)` with `y` a non-unit and
/// `xy = x` or `yx = x`; `cancellative` is `(x, y, z)` with `y != z` and
/// `xy = xz` or `yx = zx`; `normalizing` is `(a)` with `aH != Ha`;
/// `commutative` is `(x, y)` with `xy != yx`; `reduced` is a unit other than
/// the identity; `group` is a non-unit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub acyclic: bool,
    pub unit_cancellative: bool,
    pub cancellative: bool,
    pub normalizing: bool,
    pub commutative: bool,
    pub reduced: bool,
    pub group: bool,
    pub witnesses: BTreeMap<&'static str, Witness>,
}

pub fn property_battery(h: &FiniteMonoid) -> PropertyReport {
    let mut witnesses = BTreeMap::new();
    let mut flag = |name: &'static str, w: Option<Witness>| -> bool {
        match w {
            Some(w) => {
                witnesses.insert(name, w);
                false
            }
            None => true,
        }
    };
    let acyclic = flag("acyclic", acyclic_witness(h));
    let unit_cancellative = flag("unit_cancellative", unit_cancellative_witness(h));
    let cancellative = flag("cancellative", cancellative_witness(h));
    let normalizing = flag("normalizing", normalizing_witness(h));
    let commutative = flag("commutative", commutative_witness(h));
    let reduced = flag(
        "reduced",
        h.elements()
            .find(|&u| u != h.identity() && h.is_unit(u))
            .map(|u| vec![u]),
    );
    let group = flag(
        "group",
        h.elements().find(|&x| !h.is_unit(x)).map(|x| vec![x]),
    );
    PropertyReport {
        acyclic,
        unit_cancellative,
        cancellative,
        normalizing,
        commutative,
        reduced,
        group,
        witnesses,
    }
}

fn acyclic_witness(h: &FiniteMonoid) -> Option<Witness> {
    for u in h.elements() {
        for x in h.elements() {
            let ux = h.mul(u, x);
            for v in h.elements() {
                if (!h.is_unit(u) || !h.is_unit(v)) && h.mul(ux, v) == x {
                    return Some(vec![u, x, v]);
                }
            }
        }
    }
    None
}

fn unit_cancellative_witness(h: &FiniteMonoid) -> Option<Witness> {
    for x in h.elements() {
        for y in h.elements().filter(|&y| !h.is_unit(y)) {
            if h.mul(x, y) == x || h.mul(y, x) == x {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

fn cancellative_witness(h: &FiniteMonoid) -> Option<Witness> {
    for x in h.elements() {
        for y in h.elements() {
            for z in h.elements().filter(|&z| z > y) {
                if h.mul(x, y) == h.mul(x, z) || h.mul(y, x) == h.mul(z, x) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

fn normalizing_witness(h: &FiniteMonoid) -> Option<Witness> {
    let n = h.size();
    h.elements()
        .find(|&a| {
            let mut left = BitSet::new(n);
            let mut right = BitSet::new(n);
            for x in h.elements() {
                left.insert(h.mul(a, x).0);
                right.insert(h.mul(x, a).0);
            }
            left != right
        })
        .map(|a| vec![a])
}

fn commutative_witness(h: &FiniteMonoid) -> Option<Witness> {
    for x in h.elements() {
        for y in h.elements().filter(|&y| y > x) {
            if h.mul(x, y) != h.mul(y, x) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

impl PropertyReport {
    /// Re-evaluates every witness against `h`; true when each one still
    /// refutes its flag.
    pub fn witnesses_hold(&self, h: &FiniteMonoid) -> bool {
        self.witnesses
            .iter()
            .all(|(&name, w)| match (name, w.as_slice()) {
                ("acyclic", &[u, x, v]) => {
                    (!h.is_unit(u) || !h.is_unit(v)) && h.mul(h.mul(u, x), v) == x
                }
                ("unit_cancellative", &[x, y]) => {
                    !h.is_unit(y) && (h.mul(x, y) == x || h.mul(y, x) == x)
                }
                ("cancellative", &[x, y, z]) => {
                    y != z && (h.mul(x, y) == h.mul(x, z) || h.mul(y, x) == h.mul(z, x))
                }
                ("normalizing", &[a]) => {
                    let mut l: Vec<_> = h.elements().map(|x| h.mul(a, x)).collect();
                    let mut r: Vec<_> = h.elements().map(|x| h.mul(x, a)).collect();
                    l.sort();
                    l.dedup();
                    r.sort();
                    r.dedup();
                    l != r
                }
                ("commutative", &[x, y]) => h.mul(x, y) != h.mul(y, x),
                ("reduced", &[u]) => u != h.identity() && h.is_unit(u),
                ("group", &[x]) => !h.is_unit(x),
                _ => false,
            })
    }
}

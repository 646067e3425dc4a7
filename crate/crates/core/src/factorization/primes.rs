//! Prime elements and powerful atoms.

use std::collections::VecDeque;

use serde::Serialize;

use super::{FactorizationError, FactorizationSystem};
use crate::monoid::ElementId;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum PrimeCheck {
    Prime,
    /// Units are never prime.
    Unit,
    /// `p | x*y` while `p` divides neither `x` nor `y`.
    Counterexample {
        x: ElementId,
        y: ElementId,
    },
}

impl PrimeCheck {
    pub fn is_prime(&self) -> bool {
        matches!(self, PrimeCheck::Prime)
    }
}

/// Decides primality by scanning every pair whose product is defined.
pub fn is_prime<S: FactorizationSystem + ?Sized>(s: &S, p: ElementId) -> PrimeCheck {
    if s.is_unit(p) {
        return PrimeCheck::Unit;
    }
    let multiples = s.multiples(p);
    let elements = s.elements();
    for &x in &elements {
        for &y in &elements {
            let Some(xy) = s.multiply(x, y) else {
                continue;
            };
            if multiples.contains(xy.0) && !multiples.contains(x.0) && !multiples.contains(y.0) {
                return PrimeCheck::Counterexample { x, y };
            }
        }
    }
    PrimeCheck::Prime
}

/// Two walks from the identity reaching `element` with different numbers of
/// letters associated to the atom under test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PotentialConflict {
    pub element: ElementId,
    pub first: usize,
    pub second: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerfulCheck {
    pub powerful: bool,
    pub conflict: Option<PotentialConflict>,
}

/// Labels the atom Cayley digraph breadth-first from the identity, giving
/// each edge weight 1 when its atom is associated to `a` and 0 otherwise.
/// `a` is powerful exactly when every reachable vertex gets one potential:
/// factorizations of an element are walks to the same vertex, and every
/// edge leaving a reachable vertex extends some walk.
pub fn is_powerful<S: FactorizationSystem + ?Sized>(
    s: &S,
    a: ElementId,
) -> Result<PowerfulCheck, FactorizationError> {
    let target_class = s.atom_class(a).ok_or(FactorizationError::NotAnAtom(a))?;
    let weights: Vec<(ElementId, usize)> = s
        .atoms()
        .iter()
        .map(|&b| (b, usize::from(s.atom_class(b) == Some(target_class))))
        .collect();
    let mut potential: Vec<Option<usize>> = vec![None; s.id_bound()];
    let start = s.identity();
    potential[start.0] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let pv = potential[v.0].expect("queued vertices are labelled");
        for &(b, w) in &weights {
            let Some(t) = s.multiply(v, b) else {
                continue;
            };
            match potential[t.0] {
                None => {
                    potential[t.0] = Some(pv + w);
                    queue.push_back(t);
                }
                Some(pt) if pt != pv + w => {
                    return Ok(PowerfulCheck {
                        powerful: false,
                        conflict: Some(PotentialConflict {
                            element: t,
                            first: pt,
                            second: pv + w,
                        }),
                    });
                }
                Some(_) => {}
            }
        }
    }
    Ok(PowerfulCheck {
        powerful: true,
        conflict: None,
    })
}

//! Arithmetic classification: atomicity, finiteness of lengths and of
//! factorization classes, and the factorial family.

use std::collections::{BTreeMap, HashSet};

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::Serialize;

use super::lengths::LayerSequence;
use super::minimal::{minimal_catalog, MinimalCatalog};
use super::primes::is_powerful;
use super::{FactorizationError, DEFAULT_EXPLOSION_GUARD};
use crate::bitset::BitSet;
use crate::monoid::{ElementId, FiniteMonoid};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArithmeticFlags {
    pub atomic: bool,
    /// Atomic with every set of lengths finite.
    pub bf: bool,
    /// Atomic with finitely many factorization classes per element.
    pub ff: bool,
    pub hf: bool,
    /// Each flag that fails names an element showing it.
    pub witnesses: BTreeMap<&'static str, ElementId>,
    /// Number of factorization classes per element, present when finite.
    pub class_counts: Option<Vec<usize>>,
}

/// Atom Cayley digraph restricted to the part reachable from the identity.
fn reachable(h: &FiniteMonoid) -> BitSet {
    let mut seen = BitSet::new(h.size());
    seen.insert(0);
    let mut stack = vec![ElementId::IDENTITY];
    while let Some(s) = stack.pop() {
        for &a in h.atoms() {
            let t = h.mul(s, a);
            if seen.insert(t.0) {
                stack.push(t);
            }
        }
    }
    seen
}

/// Elements having infinitely many factorization classes: those reachable
/// from a vertex that lies on a cycle of the atom Cayley digraph, itself
/// reachable from the identity. Pumping the cycle adds letters, so each
/// pass gives a new class; conversely without such a cycle every walk is
/// a simple path.
fn infinite_class_elements(h: &FiniteMonoid) -> BitSet {
    let n = h.size();
    let mut g: DiGraph<(), ()> = DiGraph::with_capacity(n, n * h.atoms().len());
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for s in 0..n {
        for &a in h.atoms() {
            g.add_edge(nodes[s], nodes[h.mul(ElementId(s), a).0], ());
        }
    }
    let from_identity = reachable(h);
    let mut pumped = BitSet::new(n);
    let mut stack = Vec::new();
    for scc in tarjan_scc(&g) {
        let v = scc[0].index();
        let cyclic = scc.len() > 1 || h.atoms().iter().any(|&a| h.mul(ElementId(v), a).0 == v);
        if cyclic && from_identity.contains(v) && pumped.insert(v) {
            stack.push(v);
        }
    }
    while let Some(s) = stack.pop() {
        for &a in h.atoms() {
            let t = h.mul(ElementId(s), a).0;
            if pumped.insert(t) {
                stack.push(t);
            }
        }
    }
    pumped
}

/// Counts factorization classes per element by a breadth-first sweep over
/// (element, class counts) states. Returns `None` if some class count is
/// infinite, which shows up as a state surviving past `|H| - 1` letters.
pub fn class_counts(h: &FiniteMonoid) -> Result<Option<Vec<usize>>, FactorizationError> {
    let n = h.size();
    let k = h.atom_classes().len();
    let mut counts = vec![0usize; n];
    let mut frontier: HashSet<(ElementId, Vec<u32>)> =
        HashSet::from([(ElementId::IDENTITY, vec![0; k])]);
    let mut explored = 0usize;
    for _ in 0..n {
        for (x, _) in &frontier {
            counts[x.0] += 1;
        }
        let mut next = HashSet::new();
        for (x, c) in &frontier {
            for &a in h.atoms() {
                let mut c2 = c.clone();
                c2[h.atom_class_of(a).expect("atom")] += 1;
                next.insert((h.mul(*x, a), c2));
            }
        }
        explored += next.len();
        if explored > DEFAULT_EXPLOSION_GUARD {
            return Err(FactorizationError::ExplosionGuard {
                limit: DEFAULT_EXPLOSION_GUARD,
            });
        }
        frontier = next;
        if frontier.is_empty() {
            return Ok(Some(counts));
        }
    }
    // a word of length |H| has a repeated prefix product, hence a loop
    Ok(None)
}

pub fn classify_arithmetic(h: &FiniteMonoid) -> Result<ArithmeticFlags, FactorizationError> {
    let mut witnesses = BTreeMap::new();

    let closure = h.semigroup_closure(h.atoms());
    let missing = h.non_units().into_iter().find(|x| !closure.contains(x.0));
    if let Some(x) = missing {
        witnesses.insert("not_atomic", x);
    }
    let atomic = missing.is_none();

    let layers = LayerSequence::compute(h)?;
    let lengths: Vec<_> = h.elements().map(|x| layers.length_set(x)).collect();
    let infinite_length = lengths.iter().position(|l| !l.is_finite()).map(ElementId);
    if let Some(x) = infinite_length {
        witnesses.insert("infinite_lengths", x);
    }

    let pumped = infinite_class_elements(h);
    let infinite_classes = pumped.iter().next().map(ElementId);
    if let Some(x) = infinite_classes {
        witnesses.insert("infinite_classes", x);
    }
    if infinite_length.is_some() != infinite_classes.is_some() {
        return Err(FactorizationError::CrossCheckMismatch(format!(
            "length route says finite = {}, class route says finite = {}",
            infinite_length.is_none(),
            infinite_classes.is_none()
        )));
    }
    let class_counts = if infinite_classes.is_none() {
        let counts = class_counts(h)?;
        if counts.is_none() {
            return Err(FactorizationError::CrossCheckMismatch(
                "class sweep found a loop the cycle search missed".into(),
            ));
        }
        counts
    } else {
        None
    };

    let not_hf = h
        .non_units()
        .into_iter()
        .find(|x| !lengths[x.0].is_singleton());
    if let Some(x) = not_hf {
        witnesses.insert("not_half_factorial", x);
    }

    Ok(ArithmeticFlags {
        atomic,
        bf: atomic && infinite_length.is_none(),
        ff: atomic && infinite_classes.is_none(),
        hf: atomic && not_hf.is_none(),
        witnesses,
        class_counts,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorialFlags {
    pub factorial: bool,
    pub minimally_factorial: bool,
    pub hmf: bool,
    pub bmf: bool,
    pub fmf: bool,
}

/// The factorial family. Factoriality is decided twice, once from powerful
/// atoms and once from class counts, and the two must agree.
pub fn factorial_battery(h: &FiniteMonoid) -> Result<FactorialFlags, FactorizationError> {
    let catalog = minimal_catalog(h)?;
    factorial_battery_with(h, &classify_arithmetic(h)?, &catalog)
}

pub(crate) fn factorial_battery_with(
    h: &FiniteMonoid,
    flags: &ArithmeticFlags,
    catalog: &MinimalCatalog,
) -> Result<FactorialFlags, FactorizationError> {
    let mut all_powerful = true;
    for &a in h.atoms() {
        if !is_powerful(h, a)?.powerful {
            all_powerful = false;
            break;
        }
    }
    let via_powerful = flags.atomic && all_powerful;
    let via_counts = flags.bf
        && flags
            .class_counts
            .as_ref()
            .is_some_and(|c| h.non_units().iter().all(|x| c[x.0] == 1));
    if via_powerful != via_counts {
        return Err(FactorizationError::CrossCheckMismatch(format!(
            "factorial via powerful atoms = {via_powerful}, via class counts = {via_counts}"
        )));
    }
    let non_units = h.non_units();
    let minimally_factorial = non_units
        .iter()
        .all(|&x| catalog.entry(x).classes.len() == 1);
    let hmf = flags.atomic
        && non_units
            .iter()
            .all(|&x| catalog.minimal_lengths(x).len() == 1);
    Ok(FactorialFlags {
        factorial: via_powerful,
        minimally_factorial,
        hmf,
        // a finite catalog means finitely many minimal classes per element
        bmf: flags.atomic,
        fmf: flags.atomic,
    })
}

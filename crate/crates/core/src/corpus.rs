//! Small-monoid enumeration, the curated corpus, and the corpus scan.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;

use crate::factorization::{
    classify_arithmetic, factorial_battery, is_powerful, is_prime, kappa_and_dichotomy,
    FactorizationError, LayerSequence,
};
use crate::monoid::{
    direct_product, instance, property_battery, ElementId, FiniteMonoid, InstanceKind,
};
use crate::power::build_reduced_power_monoid;

fn default_names(n: usize) -> Vec<String> {
    std::iter::once("1".to_string())
        .chain((1..n).map(|i| format!("s{i}")))
        .collect()
}

/// Every associative table of order `n` with a two-sided identity, found
/// by scanning all `n^(n*n)` candidate tables. The identity is relabelled
/// to index 0 (swapping it with whatever sat there), duplicates removed.
/// Only sensible for `n <= 3`.
pub fn brute_force_monoids(n: usize) -> Vec<FiniteMonoid> {
    assert!((1..=3).contains(&n), "brute force is limited to order 3");
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut found = BTreeSet::new();
    let mut t = vec![0usize; cells];
    for mut code in 0..total {
        for c in t.iter_mut() {
            *c = code % n;
            code /= n;
        }
        let Some(e) = (0..n).find(|&e| (0..n).all(|x| t[e * n + x] == x && t[x * n + e] == x))
        else {
            continue;
        };
        let assoc = (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]]))
        });
        if !assoc {
            continue;
        }
        let swap = |v: usize| {
            if v == e {
                0
            } else if v == 0 {
                e
            } else {
                v
            }
        };
        let mut relabelled = vec![0; cells];
        for x in 0..n {
            for y in 0..n {
                relabelled[swap(x) * n + swap(y)] = swap(t[x * n + y]);
            }
        }
        found.insert(relabelled);
    }
    found
        .into_iter()
        .map(|t| FiniteMonoid::from_flat_unchecked(t, default_names(n)))
        .collect()
}

/// Every monoid table of order `n` with identity at index 0, by
/// backtracking over the non-identity cells with associativity pruning.
pub fn enumerate_monoids(n: usize) -> Vec<FiniteMonoid> {
    const UNSET: usize = usize::MAX;
    let mut t = vec![UNSET; n * n];
    for x in 0..n {
        t[x] = x;
        t[x * n] = x;
    }
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|i| (1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();

    // checks the triples (a, b, c) that use cell (i, j) and whose other
    // cells are known; identity triples hold by construction
    fn consistent(t: &[usize], n: usize, i: usize, j: usize) -> bool {
        let get = |x: usize, y: usize| t[x * n + y];
        let holds = |a: usize, b: usize, c: usize| {
            let (ab, bc) = (get(a, b), get(b, c));
            if ab == usize::MAX || bc == usize::MAX {
                return true;
            }
            let (l, r) = (get(ab, c), get(a, bc));
            l == usize::MAX || r == usize::MAX || l == r
        };
        for x in 1..n {
            if !holds(i, j, x) || !holds(x, i, j) {
                return false;
            }
            for y in 1..n {
                if (get(x, y) == i && !holds(x, y, j)) || (get(x, y) == j && !holds(i, x, y)) {
                    return false;
                }
            }
        }
        true
    }

    fn go(
        t: &mut Vec<usize>,
        n: usize,
        cells: &[(usize, usize)],
        k: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == cells.len() {
            out.push(t.clone());
            return;
        }
        let (i, j) = cells[k];
        for v in 0..n {
            t[i * n + j] = v;
            if consistent(t, n, i, j) {
                go(t, n, cells, k + 1, out);
            }
        }
        t[i * n + j] = usize::MAX;
    }

    let mut tables = Vec::new();
    if n == 1 {
        tables.push(vec![0]);
    } else {
        go(&mut t, n, &cells, 0, &mut tables);
    }
    for table in tables {
        out.push(FiniteMonoid::from_flat_unchecked(table, default_names(n)));
    }
    out
}

/// Lexicographically least relabelling of the table over permutations
/// fixing the identity.
pub fn canonical_table(h: &FiniteMonoid) -> Vec<usize> {
    let n = h.size();
    let rows = h.table_rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<usize>> = None;
    permute(&mut perm, 1, &mut |p| {
        // p maps old index to new index
        let mut inv = vec![0; n];
        for (old, &new) in p.iter().enumerate() {
            inv[new] = old;
        }
        let mut t = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                t.push(p[rows[inv[x]][inv[y]]]);
            }
        }
        if best.as_ref().is_none_or(|b| t < *b) {
            best = Some(t);
        }
    });
    best.expect("at least the identity permutation")
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k >= p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Representatives of the isomorphism classes among `monoids`.
pub fn up_to_isomorphism(monoids: &[FiniteMonoid]) -> Vec<FiniteMonoid> {
    let mut seen = BTreeSet::new();
    monoids
        .iter()
        .filter(|h| seen.insert(canonical_table(h)))
        .cloned()
        .collect()
}

#[derive(Clone, Debug)]
pub struct CorpusMember {
    pub name: String,
    pub monoid: FiniteMonoid,
}

/// N3, T4, C2..C6, a few direct products, the two-element monoid with
/// zero, transformations of a 3-set, gl(2,2), gl(2,3) and P(C2)..P(C5).
pub fn curated_corpus() -> Vec<CorpusMember> {
    let inst = |k: InstanceKind| instance(&k).expect("built-in instance");
    let mut out: Vec<CorpusMember> = Vec::new();
    let mut add = |name: &str, monoid: FiniteMonoid| {
        out.push(CorpusMember {
            name: name.to_string(),
            monoid,
        })
    };
    add("trivial", inst(InstanceKind::Trivial));
    add("H2", inst(InstanceKind::TwoElementWithZero));
    add("N3", inst(InstanceKind::NullMonoid(1)));
    add("T4", inst(InstanceKind::NullMonoid(2)));
    for m in 2..=6 {
        add(&format!("C{m}"), inst(InstanceKind::Cyclic(m)));
    }
    let c2 = inst(InstanceKind::Cyclic(2));
    let c3 = inst(InstanceKind::Cyclic(3));
    let n3 = inst(InstanceKind::NullMonoid(1));
    let h2 = inst(InstanceKind::TwoElementWithZero);
    add("C2xC3", direct_product(&c2, &c3).expect("small"));
    add("C2xN3", direct_product(&c2, &n3).expect("small"));
    add("N3xN3", direct_product(&n3, &n3).expect("small"));
    add("H2xC3", direct_product(&h2, &c3).expect("small"));
    add("T_2", inst(InstanceKind::FullTransformation(2)));
    add("T_3", inst(InstanceKind::FullTransformation(3)));
    add("gl(2,2)", inst(InstanceKind::Gl { n: 2, m: 2 }));
    add("gl(2,3)", inst(InstanceKind::Gl { n: 2, m: 3 }));
    for m in 2..=5 {
        let p = build_reduced_power_monoid(&inst(InstanceKind::Cyclic(m))).expect("small base");
        add(&format!("P(C{m})"), p.monoid);
    }
    out
}

/// Curated corpus plus every monoid of order at most 3 (found by brute
/// force over all candidate tables, one per isomorphism class).
pub fn full_corpus() -> Vec<CorpusMember> {
    let mut out = curated_corpus();
    for n in 1..=3 {
        for (i, m) in up_to_isomorphism(&brute_force_monoids(n))
            .into_iter()
            .enumerate()
        {
            out.push(CorpusMember {
                name: format!("order{n}#{i}"),
                monoid: m,
            });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub member: String,
    pub property: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MemberSummary {
    pub name: String,
    pub size: usize,
    pub group: bool,
    pub acyclic: bool,
    pub atomic: bool,
    pub bf: bool,
    pub ff: bool,
    pub factorial: bool,
    pub kappa: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub members: Vec<MemberSummary>,
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

/// Horizon for the length subadditivity check.
pub const SUM_HORIZON: usize = 30;

/// Runs the structural and arithmetic checks on every member and collects
/// violations instead of stopping at the first one.
pub fn corpus_scan(members: &[CorpusMember]) -> ScanReport {
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut summaries = Vec::new();
    for m in members {
        let mut violate = |property: &str, detail: String| {
            violations.push(Violation {
                member: m.name.clone(),
                property: property.to_string(),
                detail,
            })
        };
        match scan_member(&m.monoid, &mut violate) {
            Ok(s) => summaries.push(MemberSummary {
                name: m.name.clone(),
                ..s
            }),
            Err(e) => violate("computation", e.to_string()),
        }
    }
    ScanReport {
        members: summaries,
        violations,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn scan_member(
    h: &FiniteMonoid,
    violate: &mut impl FnMut(&str, String),
) -> Result<MemberSummary, FactorizationError> {
    let props = property_battery(h);
    if props.acyclic != props.group {
        violate(
            "acyclic iff group",
            format!("acyclic = {}, group = {}", props.acyclic, props.group),
        );
    }
    if props.acyclic && !props.unit_cancellative {
        violate("acyclic implies unit-cancellative", String::new());
    }
    if props.acyclic {
        if let Some((e, _)) = h
            .idempotents()
            .into_iter()
            .find(|&(_, nontrivial)| nontrivial)
        {
            violate(
                "acyclic has no non-trivial idempotent",
                format!("idempotent {}", h.name(e)),
            );
        }
    }

    // classify_arithmetic cross-checks BF against FF itself
    let flags = classify_arithmetic(h)?;
    if flags.bf != flags.ff {
        violate("BF iff FF", format!("bf = {}, ff = {}", flags.bf, flags.ff));
    }

    let layers = LayerSequence::compute(h)?;
    let masks: Vec<u64> = h
        .elements()
        .map(|x| {
            layers
                .length_set(x)
                .truncate(SUM_HORIZON)
                .into_iter()
                .fold(0u64, |m, k| m | 1 << k)
        })
        .collect();
    let horizon_mask = (1u64 << (SUM_HORIZON + 1)) - 1;
    for x in h.elements() {
        for y in h.elements() {
            let xy = h.mul(x, y).0;
            let mut sum = 0u64;
            for a in 0..=SUM_HORIZON {
                if masks[x.0] >> a & 1 == 1 {
                    sum |= (masks[y.0] << a) & horizon_mask;
                }
            }
            if sum & !masks[xy] != 0 {
                violate(
                    "L(x)+L(y) in L(xy)",
                    format!("x = {}, y = {}", h.name(x), h.name(y)),
                );
            }
        }
    }

    if flags.atomic {
        for &a in h.atoms() {
            if is_powerful(h, a)?.powerful && !is_prime(h, a).is_prime() {
                violate("powerful implies prime", format!("atom {}", h.name(a)));
            }
        }
    }

    let factorial = factorial_battery(h)?;
    if props.group && !factorial.factorial {
        violate("groups are factorial", String::new());
    }
    let (kappa, _) = kappa_and_dichotomy(h)?;
    if kappa + 1 > h.size() {
        violate(
            "kappa bound",
            format!("kappa = {kappa}, |H| = {}", h.size()),
        );
    }
    Ok(MemberSummary {
        name: String::new(),
        size: h.size(),
        group: props.group,
        acyclic: props.acyclic,
        atomic: flags.atomic,
        bf: flags.bf,
        ff: flags.ff,
        factorial: factorial.factorial,
        kappa,
    })
}

/// Elements `x` with `x` an atom, prime and not powerful; used to exhibit
/// the failure of the converse of "powerful implies prime".
pub fn prime_not_powerful(h: &FiniteMonoid) -> Result<Vec<ElementId>, FactorizationError> {
    let mut out = Vec::new();
    for &a in h.atoms() {
        if is_prime(h, a).is_prime() && !is_powerful(h, a)?.powerful {
            out.push(a);
        }
    }
    Ok(out)
}

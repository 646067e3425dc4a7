//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero when a criterion fails that is not listed in `KNOWN_FAILURES`.
//!
//! Derived values are recomputed here by small brute-force oracles that do
//! not call the library routines under test.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use monofact::corpus::{
    corpus_scan, enumerate_monoids, full_corpus, prime_not_powerful, up_to_isomorphism,
    CorpusMember,
};
use monofact::factorization::{
    class_counts, classify_arithmetic, factorial_battery, is_powerful, is_prime, minimal_catalog,
    pi_eval, LayerSequence,
};
use monofact::integers::fta_report;
use monofact::monoid::{instance, property_battery, ElementId, FiniteMonoid, InstanceKind};
use monofact::power::{base_criterion, build_reduced_power_monoid, kappa_report};
use monofact::presentation::{
    a_k, adian_check, bounded_length_set, congruent_bounded, example_4_10, example_4_8,
    example_5_4, neighbors_4_10, normal_form_4_10, psi, Congruence, GenWord, Presentation,
};

/// Criteria expected to fail, with the reason recorded in the README.
/// Criterion 7 asks for lengths 3, 6 and 9 in the class of `x*z` in the
/// four-letter family; the conserved weighting `y - 2w` forces every word
/// congruent to `x*z` to have length `2 + 3 #w`, so only 2, 5, 8, ... occur.
const KNOWN_FAILURES: &[u32] = &[7];

type Outcome = Result<String, String>;
type Criterion<'a> = (u32, &'static str, Box<dyn Fn() -> Outcome + 'a>);

/// Brute-force view of a Cayley table.
struct Oracle {
    n: usize,
    t: Vec<Vec<usize>>,
    unit: Vec<bool>,
    atoms: Vec<usize>,
    /// Associate class of each atom, classes numbered by smallest member.
    class_of: HashMap<usize, usize>,
    classes: usize,
}

impl Oracle {
    fn new(h: &FiniteMonoid) -> Self {
        let t = h.table_rows();
        let n = t.len();
        let unit: Vec<bool> = (0..n)
            .map(|x| (0..n).any(|y| t[x][y] == 0 && t[y][x] == 0))
            .collect();
        let atoms: Vec<usize> = (0..n)
            .filter(|&x| {
                !unit[x] && !(0..n).any(|a| !unit[a] && (0..n).any(|b| !unit[b] && t[a][b] == x))
            })
            .collect();
        let mut class_of = HashMap::new();
        let mut classes = 0;
        for &a in &atoms {
            if class_of.contains_key(&a) {
                continue;
            }
            for &b in &atoms {
                let assoc =
                    (0..n).any(|u| unit[u] && (0..n).any(|v| unit[v] && t[t[u][a]][v] == b));
                if assoc {
                    class_of.insert(b, classes);
                }
            }
            classes += 1;
        }
        Oracle {
            n,
            t,
            unit,
            atoms,
            class_of,
            classes,
        }
    }

    fn divides(&self, x: usize, y: usize) -> bool {
        (0..self.n).any(|u| (0..self.n).any(|v| self.t[self.t[u][x]][v] == y))
    }

    fn is_prime(&self, p: usize) -> bool {
        !self.unit[p]
            && (0..self.n).all(|x| {
                (0..self.n).all(|y| {
                    !self.divides(p, self.t[x][y]) || self.divides(p, x) || self.divides(p, y)
                })
            })
    }

    fn group(&self) -> bool {
        self.unit.iter().all(|&u| u)
    }

    fn acyclic(&self) -> bool {
        let n = self.n;
        !(0..n).any(|u| {
            (0..n).any(|x| {
                (0..n).any(|v| (!self.unit[u] || !self.unit[v]) && self.t[self.t[u][x]][v] == x)
            })
        })
    }

    fn atomic(&self) -> bool {
        let mut reach = vec![false; self.n];
        let mut stack: Vec<usize> = self.atoms.clone();
        for &a in &self.atoms {
            reach[a] = true;
        }
        while let Some(s) = stack.pop() {
            for &a in &self.atoms {
                let t = self.t[s][a];
                if !reach[t] {
                    reach[t] = true;
                    stack.push(t);
                }
            }
        }
        (0..self.n).all(|x| self.unit[x] || reach[x])
    }

    /// `layers[k]` is the set of products of exactly `k` atoms.
    fn layers(&self, upto: usize) -> Vec<Vec<bool>> {
        let mut cur = vec![false; self.n];
        cur[0] = true;
        let mut out = vec![cur.clone()];
        for _ in 0..upto {
            let mut next = vec![false; self.n];
            for s in (0..self.n).filter(|&s| cur[s]) {
                for &a in &self.atoms {
                    next[self.t[s][a]] = true;
                }
            }
            out.push(next.clone());
            cur = next;
        }
        out
    }

    /// Minimal factorization classes as `(element, counts)`, from every atom
    /// word of length at most `n - 1` followed by a domination filter.
    fn naive_catalog(&self) -> BTreeSet<(usize, Vec<u32>)> {
        let mut seen: BTreeSet<(usize, Vec<u32>)> = BTreeSet::new();
        let mut frontier = vec![(0usize, vec![0u32; self.classes])];
        seen.insert(frontier[0].clone());
        for _ in 1..self.n {
            let mut next = Vec::new();
            for (s, counts) in &frontier {
                for &a in &self.atoms {
                    let mut c = counts.clone();
                    c[self.class_of[&a]] += 1;
                    let key = (self.t[*s][a], c);
                    if seen.insert(key.clone()) {
                        next.push(key);
                    }
                }
            }
            frontier = next;
        }
        let dominated = |(x, c): &(usize, Vec<u32>)| {
            seen.iter()
                .any(|(y, d)| y == x && d != c && d.iter().zip(c).all(|(p, q)| p <= q))
        };
        seen.iter().filter(|k| !dominated(k)).cloned().collect()
    }
}

fn corpus_member<'a>(corpus: &'a [CorpusMember], name: &str) -> &'a FiniteMonoid {
    &corpus
        .iter()
        .find(|m| m.name == name)
        .expect("corpus member")
        .monoid
}

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn c1_small_scan(corpus: &[CorpusMember]) -> Outcome {
    let start = Instant::now();
    let report = corpus_scan(corpus);
    check(
        report.violations.is_empty(),
        format!("scan violations: {:?}", report.violations),
    )?;
    const HORIZON: usize = 30;
    for m in corpus {
        let h = &m.monoid;
        let o = Oracle::new(h);
        let props = property_battery(h);
        let flags = classify_arithmetic(h).map_err(|e| e.to_string())?;
        check(
            props.acyclic == o.acyclic(),
            format!("{}: acyclic flag", m.name),
        )?;
        check(props.group == o.group(), format!("{}: group flag", m.name))?;
        check(
            o.acyclic() == o.group(),
            format!("{}: acyclic but not group", m.name),
        )?;
        check(flags.bf == flags.ff, format!("{}: bf != ff", m.name))?;
        // a length >= n pumps, so BF means atomic with no element in layers n..2n
        let layers = o.layers(2 * o.n.max(HORIZON));
        let bf = o.atomic() && layers[o.n..].iter().all(|l| l.iter().all(|&b| !b));
        check(flags.bf == bf, format!("{}: bf oracle", m.name))?;
        if props.acyclic {
            check(
                props.unit_cancellative,
                format!("{}: acyclic, not unit-cancellative", m.name),
            )?;
            let idem = (1..o.n).any(|x| o.t[x][x] == x);
            check(
                !idem,
                format!("{}: acyclic with a non-trivial idempotent", m.name),
            )?;
        }
        let seq = LayerSequence::compute(h).map_err(|e| e.to_string())?;
        for x in 0..o.n {
            let lib = seq.length_set(ElementId(x));
            for (k, layer) in layers.iter().enumerate().take(HORIZON + 1) {
                check(
                    lib.contains(k) == layer[x],
                    format!("{}: L({x}) at {k}", m.name),
                )?;
            }
        }
        for x in 0..o.n {
            for y in 0..o.n {
                let xy = o.t[x][y];
                for a in (0..=HORIZON).filter(|&a| layers[a][x]) {
                    for b in (0..=HORIZON - a).filter(|&b| layers[b][y]) {
                        check(
                            layers[a + b][xy],
                            format!("{}: L({x}) + L({y}) not in L(xy)", m.name),
                        )?;
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    check(
        elapsed < Duration::from_secs(120),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "{} members, 0 violations, {:.1?}",
        corpus.len(),
        elapsed
    ))
}

fn c2_powerful_prime(corpus: &[CorpusMember]) -> Outcome {
    let mut atomic_members = 0;
    for m in corpus {
        let h = &m.monoid;
        let o = Oracle::new(h);
        if !o.atomic() {
            continue;
        }
        atomic_members += 1;
        for &a in h.atoms() {
            let powerful = is_powerful(h, a).map_err(|e| e.to_string())?.powerful;
            let prime = is_prime(h, a).is_prime();
            check(
                prime == o.is_prime(a.0),
                format!("{}: prime decider on {}", m.name, h.name(a)),
            )?;
            check(
                !powerful || prime,
                format!("{}: {} powerful, not prime", m.name, h.name(a)),
            )?;
        }
    }
    let n3 = corpus_member(corpus, "N3");
    let found = prime_not_powerful(n3).map_err(|e| e.to_string())?;
    let names: Vec<&str> = found.iter().map(|&x| n3.name(x)).collect();
    check(
        names == ["a"],
        format!("N3 prime and not powerful: {names:?}"),
    )?;
    Ok(format!(
        "{atomic_members} atomic members; N3: a prime, not powerful"
    ))
}

fn c3_factorial(corpus: &[CorpusMember]) -> Outcome {
    let mut factorial_members = Vec::new();
    for m in corpus {
        let h = &m.monoid;
        let flags = classify_arithmetic(h).map_err(|e| e.to_string())?;
        let mut all_powerful = true;
        for &a in h.atoms() {
            all_powerful &= is_powerful(h, a).map_err(|e| e.to_string())?.powerful;
        }
        let route_a = flags.atomic && all_powerful;
        let counts = class_counts(h).map_err(|e| e.to_string())?;
        // one class for every non-unit; units only have the empty word
        let route_b = counts.is_some_and(|c| h.non_units().iter().all(|x| c[x.0] == 1));
        check(
            route_a == route_b,
            format!(
                "{}: powerful route {route_a}, class route {route_b}",
                m.name
            ),
        )?;
        let battery = factorial_battery(h).map_err(|e| e.to_string())?;
        check(battery.factorial == route_a, format!("{}: battery", m.name))?;
        if Oracle::new(h).group() {
            check(
                battery.factorial,
                format!("{}: group not factorial", m.name),
            )?;
        }
        if battery.factorial {
            factorial_members.push(m.name.clone());
        }
    }
    Ok(format!(
        "routes agree; factorial: {}",
        factorial_members.join(" ")
    ))
}

/// Catalog classes keyed like the oracle: counts reordered by each class's
/// smallest atom.
fn library_catalog(h: &FiniteMonoid) -> Result<BTreeSet<(usize, Vec<u32>)>, String> {
    let cat = minimal_catalog(h).map_err(|e| e.to_string())?;
    let mut order: Vec<(ElementId, usize)> = h
        .atom_classes()
        .iter()
        .enumerate()
        .map(|(i, c)| (*c.iter().min().expect("class"), i))
        .collect();
    order.sort();
    let mut out = BTreeSet::new();
    for entry in &cat.entries {
        for class in &entry.classes {
            if pi_eval(h, &class.representative) != Some(entry.element) {
                return Err(format!(
                    "representative of {} evaluates elsewhere",
                    h.name(entry.element)
                ));
            }
            out.insert((
                entry.element.0,
                order.iter().map(|&(_, i)| class.counts[i]).collect(),
            ));
        }
    }
    Ok(out)
}

fn c4_catalog(corpus: &[CorpusMember]) -> Outcome {
    let mut checked = 0;
    let mut classes = 0;
    for m in corpus.iter().filter(|m| m.monoid.size() <= 16) {
        let naive = Oracle::new(&m.monoid).naive_catalog();
        let lib = library_catalog(&m.monoid)?;
        check(
            naive == lib,
            format!("{}: catalog differs from enumeration", m.name),
        )?;
        checked += 1;
        classes += naive.len();
    }
    Ok(format!(
        "{checked} members, {classes} minimal classes, all equal"
    ))
}

fn c5_dichotomy(corpus: &[CorpusMember]) -> Outcome {
    for m in corpus.iter().filter(|m| m.monoid.size() <= 16) {
        let naive = Oracle::new(&m.monoid).naive_catalog();
        let lens: BTreeSet<usize> = naive
            .iter()
            .map(|(_, c)| c.iter().sum::<u32>() as usize)
            .collect();
        let kappa = minimal_catalog(&m.monoid).map_err(|e| e.to_string())?.kappa;
        check(
            lens == (0..=kappa).collect(),
            format!("{}: minimal lengths {lens:?}, kappa {kappa}", m.name),
        )?;
    }
    for m in corpus.iter().filter(|m| m.monoid.size() > 16) {
        let cat = minimal_catalog(&m.monoid).map_err(|e| e.to_string())?;
        let lens: BTreeSet<usize> = m
            .monoid
            .elements()
            .flat_map(|x| cat.minimal_lengths(x))
            .collect();
        check(
            lens == (0..=cat.kappa).collect(),
            format!("{}: gap in minimal lengths", m.name),
        )?;
    }
    let kappa = |name: &str| minimal_catalog(corpus_member(corpus, name)).map(|c| c.kappa);
    check(kappa("N3") == Ok(2), "kappa(N3) != 2")?;
    let c3 = instance(&InstanceKind::Cyclic(3)).expect("C3");
    let r3 = kappa_report(&c3).map_err(|e| e.to_string())?;
    check(r3.kappa == 2, format!("kappa(P(C3)) = {}", r3.kappa))?;
    let start = Instant::now();
    let c5 = instance(&InstanceKind::Cyclic(5)).expect("C5");
    let r5 = kappa_report(&c5).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    check(
        (r5.kappa, r5.bound, r5.equal) == (4, 4, true),
        format!("P(C5): {r5:?}"),
    )?;
    check(
        elapsed < Duration::from_secs(60),
        format!("P(C5) took {elapsed:?}"),
    )?;
    Ok(format!(
        "kappa(N3)=2, kappa(P(C3))=2, kappa(P(C5))=4=|K|-1 in {elapsed:.1?}"
    ))
}

fn c6_power_criterion() -> Outcome {
    let start = Instant::now();
    let mut bases = 0;
    for n in 1..=6 {
        for base in up_to_isomorphism(&enumerate_monoids(n)) {
            let t = base.table_rows();
            let criterion = (1..n).all(|x| t[x][x] != 0 && t[x][x] != x);
            check(
                criterion == base_criterion(&base),
                format!("order {n}: criterion evaluation"),
            )?;
            let built = build_reduced_power_monoid(&base).map_err(|e| e.to_string())?;
            let direct = Oracle::new(&built.monoid).atomic();
            check(
                direct
                    == classify_arithmetic(&built.monoid)
                        .map_err(|e| e.to_string())?
                        .atomic,
                "atomic flag",
            )?;
            check(
                criterion == direct,
                format!("order {n}: criterion {criterion}, direct {direct}"),
            )?;
            bases += 1;
        }
    }
    for (m, expect) in [(2, false), (3, true), (5, true)] {
        let built =
            build_reduced_power_monoid(&instance(&InstanceKind::Cyclic(m)).expect("cyclic"))
                .expect("small");
        check(
            Oracle::new(&built.monoid).atomic() == expect,
            format!("P(C{m}) atomic != {expect}"),
        )?;
    }
    Ok(format!(
        "{bases} bases of order <= 6 agree; C2 no, C3 and C5 yes; {:.1?}",
        start.elapsed()
    ))
}

fn lengths_of(
    p: &Presentation,
    target: &str,
    max_len: usize,
) -> Result<(BTreeSet<usize>, Duration), String> {
    let t = p.parse_word(target).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let probe = bounded_length_set(p, &t, max_len, 2_000_000).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(30) {
        return Err(format!("{target}: search took {elapsed:?}"));
    }
    Ok((probe.lengths.into_iter().collect(), elapsed))
}

/// Every word of the four-letter family congruent to `w` has the same
/// value of each conserved weighting; with `#x` and `#z` fixed and
/// `#y - 2#w` fixed, the length is determined by `#w` alone.
fn forced_lengths_4_10(w: &GenWord, max_len: usize) -> BTreeSet<usize> {
    let count = |g: u8| w.0.iter().filter(|&&c| c == g).count() as i64;
    let (ws, xs, ys, zs) = (count(0), count(1), count(2), count(3));
    let base = xs + zs + ys - 2 * ws;
    (0..=max_len as i64)
        .filter_map(|nw| {
            let len = base + 3 * nw;
            (ys - 2 * ws + 2 * nw >= 0 && len >= 0 && len <= max_len as i64).then_some(len as usize)
        })
        .collect()
}

fn c7_presentations() -> Outcome {
    for n in 1..=8 {
        check(
            adian_check(&example_4_8(n))
                .map_err(|e| e.to_string())?
                .is_adian,
            format!("4.8 n={n} not Adian"),
        )?;
    }
    check(
        adian_check(&example_5_4())
            .map_err(|e| e.to_string())?
            .is_adian,
        "5.4 not Adian",
    )?;

    let p1 = example_4_8(1);
    let (x, yxy) = (p1.parse_word("x").unwrap(), p1.parse_word("y*x*y").unwrap());
    match congruent_bounded(&p1, &x, &yxy, 10_000) {
        Congruence::Equivalent { chain } => {
            check(
                chain.len() == 2 && p1.is_r_chain(&chain),
                format!("chain {chain:?}"),
            )?;
        }
        other => return Err(format!("x vs y*x*y: {other:?}")),
    }

    let (l48, t48) = lengths_of(&example_4_8(2), "x*x", 8)?;
    check(
        l48.is_superset(&BTreeSet::from([2, 4, 6, 8])),
        format!("4.8 x*x lengths {l48:?}"),
    )?;
    let (l54, t54) = lengths_of(&example_5_4(), "x*y*x", 9)?;
    check(
        l54.is_superset(&BTreeSet::from([3, 5, 7, 9])),
        format!("5.4 x*y*x lengths {l54:?}"),
    )?;

    let p410 = example_4_10(12);
    let (l410, t410) = lengths_of(&p410, "x*z", 9)?;
    let forced = forced_lengths_4_10(&a_k(0), 9);
    let (l_a1, _) = lengths_of(&p410, "x*y*z", 9)?;
    check(
        l410 == forced,
        format!("4.10 x*z lengths {l410:?}, weighting bound {forced:?}"),
    )?;
    let want = BTreeSet::from([2, 3, 6, 9]);
    check(
        l410.is_superset(&want),
        format!(
            "4.10 x*z lengths <= 9 are {l410:?}, not a superset of {want:?}; \
             conserved weightings allow only {forced:?}; x*y*z gives {l_a1:?}"
        ),
    )?;
    Ok(format!(
        "Adian checks, chain of length 1, lengths found in {t48:.1?}, {t54:.1?}, {t410:.1?}"
    ))
}

fn c8_engine() -> Outcome {
    let p = example_4_10(12);
    let nf = |s: &str| p.render(&normal_form_4_10(&p.parse_word(s).unwrap()).unwrap());
    for (input, expect) in [
        ("y*x*y*z*w", "x*z"),
        ("y*y*x*y*y*z*w*w", "x*z"),
        ("x*z", "x*z"),
    ] {
        check(nf(input) == expect, format!("nf({input}) = {}", nf(input)))?;
    }
    for k in 0..=20 {
        let lhs = normal_form_4_10(&a_k(k)).unwrap();
        let rhs = normal_form_4_10(&GenWord([vec![2], a_k(k + 1).0, vec![0]].concat())).unwrap();
        check(lhs == rhs, format!("nf not invariant at k={k}"))?;
    }
    let report = monofact::presentation::verify_4_10_properties(10_000, 12, 2024);
    check(report.failures() == 0, format!("{report:?}"))?;

    // congruent pairs by random R-chains, generated here
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut pairs = 0;
    while pairs < 1000 {
        let len = rng.gen_range(0..=12);
        let mut w = GenWord((0..len).map(|_| rng.gen_range(0..4u8)).collect());
        if rng.gen_bool(0.7) {
            let at = rng.gen_range(0..=w.len());
            w.0.splice(at..at, a_k(rng.gen_range(0..3)).0);
        }
        let mut v = w.clone();
        for _ in 0..rng.gen_range(1..6) {
            if let Some(next) = neighbors_4_10(&v).choose(&mut rng) {
                v = next.clone();
            }
        }
        let (pw, pv) = (psi(&w).unwrap(), psi(&v).unwrap());
        check(
            pw.ell == pv.ell,
            format!("psi differs on {} and {}", p.render(&w), p.render(&v)),
        )?;
        check(pw.reassemble() == w, "psi blocks do not reassemble")?;
        pairs += 1;
    }
    Ok(format!(
        "nf examples, 10^4 samples ({} cancellativity, {} acyclicity, {} confluence checks) with 0 failures, psi on {pairs} pairs",
        report.cancellativity_checked, report.acyclicity_checked, report.confluence_checked
    ))
}

fn c9_integers() -> Outcome {
    let start = Instant::now();
    let report = fta_report(10_000, 100).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let primes = (2..=100usize)
        .filter(|&p| (2..p).all(|d| p % d != 0))
        .count();
    check(
        report.non_unique.is_empty(),
        format!("non-unique: {:?}", report.non_unique),
    )?;
    check(
        report.primes_checked == primes,
        format!(
            "{} primes checked, expected {primes}",
            report.primes_checked
        ),
    )?;
    check(
        report.primes_failing.is_empty(),
        format!("failing primes {:?}", report.primes_failing),
    )?;
    check(
        elapsed < Duration::from_secs(30),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "n <= 10^4 unique ({} words), {primes} primes prime and powerful, {elapsed:.1?}",
        report.words_examined
    ))
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_monofact"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "{args:?} exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

fn c10_determinism() -> Outcome {
    let runs: [&[&str]; 6] = [
        &["analyze", "--null", "1"],
        &["powerset", "--cyclic", "3"],
        &["factorize", "a", "--null", "2", "--max-len", "5"],
        &[
            "present",
            "--example",
            "4.10",
            "verify",
            "--samples",
            "300",
            "--seed",
            "7",
        ],
        &["corpus", "--format", "text"],
        &["ints", "--bound", "500", "--prime-bound", "30"],
    ];
    for args in runs {
        let (a, b) = (run_cli(args)?, run_cli(args)?);
        check(a == b, format!("{args:?}: reports differ"))?;
    }
    let n3: serde_json::Value =
        serde_json::from_slice(&run_cli(runs[0])?).map_err(|e| e.to_string())?;
    check(
        n3["version"] == env!("CARGO_PKG_VERSION"),
        "version missing",
    )?;
    check(
        n3["input"]["sha256"]
            .as_str()
            .is_some_and(|s| s.len() == 64),
        "digest missing",
    )?;
    let r = &n3["result"];
    check(
        r["atomic"] == true && r["bf"] == false && r["kappa"] == 2,
        format!(
            "N3 report: atomic {} bf {} kappa {}",
            r["atomic"], r["bf"], r["kappa"]
        ),
    )?;
    let s1: BTreeMap<String, serde_json::Value> =
        serde_json::from_slice::<serde_json::Value>(&run_cli(runs[1])?)
            .map_err(|e| e.to_string())?["result"]
            .as_object()
            .expect("object")
            .clone()
            .into_iter()
            .collect();
    check(
        s1["criterion"] == true && s1["kappa"] == 2 && s1["bound"] == 2,
        format!("powerset C3: {s1:?}"),
    )?;
    Ok(format!(
        "{} commands byte-identical across runs",
        runs.len()
    ))
}

fn main() -> ExitCode {
    let corpus = full_corpus();
    let criteria: Vec<Criterion> = vec![
        (1, "small-monoid scan", Box::new(|| c1_small_scan(&corpus))),
        (
            2,
            "powerful implies prime",
            Box::new(|| c2_powerful_prime(&corpus)),
        ),
        (
            3,
            "factorial cross-check",
            Box::new(|| c3_factorial(&corpus)),
        ),
        (
            4,
            "minimal catalog oracle",
            Box::new(|| c4_catalog(&corpus)),
        ),
        (5, "dichotomy and kappa", Box::new(|| c5_dichotomy(&corpus))),
        (6, "power monoid atomicity", Box::new(c6_power_criterion)),
        (7, "presentation examples", Box::new(c7_presentations)),
        (8, "four-letter engine", Box::new(c8_engine)),
        (9, "integer fragment", Box::new(c9_integers)),
        (10, "determinism", Box::new(c10_determinism)),
    ];
    let mut unexpected = Vec::new();
    for (id, title, run) in &criteria {
        let outcome = run();
        let known = KNOWN_FAILURES.contains(id);
        match &outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {title}: {detail}"),
            Err(detail) => println!(
                "criterion {id:>2} FAIL  {title}: {detail}{}",
                if known { " [known]" } else { "" }
            ),
        }
        if outcome.is_ok() == known {
            unexpected.push(*id);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: results match expectations");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}

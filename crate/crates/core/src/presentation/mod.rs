//! Finitely presented monoids `<X | R>`: parsing, the Adian graph check,
//! bounded congruence search and bounded length probes.

mod example410;
mod functionals;

pub use example410::{
    neighbors_4_10, normal_form_4_10, normal_form_4_10_closed, psi, verify_4_10_properties,
    PsiBlock, PsiDecomposition, VerifyReport,
};
pub use functionals::conserved_functionals;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::Serialize;
use thiserror::Error;

use crate::words::{parse_word, render_word, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("relation {0} has an empty side")]
    EmptyRelationSide(usize),
    #[error("word uses letters outside {{w,x,y,z}}")]
    AlphabetMismatch,
    #[error("at most 255 generators are supported")]
    TooManyGenerators,
}

/// A word over the generators, stored as generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenWord(pub Vec<u8>);

impl GenWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &GenWord) -> GenWord {
        GenWord([self.0.as_slice(), other.0.as_slice()].concat())
    }
}

/// Which built-in family a presentation came from, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    User,
    /// `x^n = y x^n y`.
    Example48 {
        n: usize,
    },
    /// `xyx = yxyxy`.
    Example54,
    /// `x y^k z = y x y^(k+1) z w` for `k <= kmax`.
    Example410 {
        kmax: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<(GenWord, GenWord)>,
    pub family: Family,
}

impl Presentation {
    pub fn generator(&self, name: &str) -> Option<u8> {
        self.generators
            .iter()
            .position(|g| g == name)
            .map(|i| i as u8)
    }

    pub fn parse_word(&self, text: &str) -> Result<GenWord, PresentationError> {
        parse_word(text, |s| self.generator(s))
            .map(GenWord)
            .map_err(|e| match e {
                WordError::UnknownLetter(s) => PresentationError::UnknownGenerator(s),
                other => PresentationError::Parse {
                    offset: 0,
                    message: other.to_string(),
                },
            })
    }

    pub fn render(&self, w: &GenWord) -> String {
        render_word(&w.0, |g| self.generators[g as usize].clone())
    }

    /// All words one relation application away from `w`, in order of
    /// relation, then direction (left to right first), then position.
    pub fn neighbors(&self, w: &GenWord) -> Vec<GenWord> {
        let mut out = Vec::new();
        for (l, r) in &self.relations {
            for (from, to) in [(l, r), (r, l)] {
                for pos in occurrences(&w.0, &from.0) {
                    let mut next = Vec::with_capacity(w.len() + to.len() - from.len());
                    next.extend_from_slice(&w.0[..pos]);
                    next.extend_from_slice(&to.0);
                    next.extend_from_slice(&w.0[pos + from.len()..]);
                    out.push(GenWord(next));
                }
            }
        }
        out
    }

    /// Checks that consecutive words differ by exactly one relation
    /// application (or are equal).
    pub fn is_r_chain(&self, chain: &[GenWord]) -> bool {
        chain
            .windows(2)
            .all(|p| p[0] == p[1] || self.neighbors(&p[0]).contains(&p[1]))
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens: {}", self.generators.join(" "))?;
        for (l, r) in &self.relations {
            write!(f, "; rel: {} = {}", self.render(l), self.render(r))?;
        }
        Ok(())
    }
}

fn occurrences(haystack: &[u8], needle: &[u8]) -> Vec<usize> {
    if needle.is_empty() {
        return (0..=haystack.len()).collect();
    }
    if needle.len() > haystack.len() {
        return Vec::new();
    }
    (0..=haystack.len() - needle.len())
        .filter(|&i| &haystack[i..i + needle.len()] == needle)
        .collect()
}

/// Parses `gens: x y; rel: x*x = y*x*x*y; rel: ...`. Clauses are separated
/// by `;` or newlines, words are `*`-joined generators and `e` is the empty
/// word.
pub fn parse_presentation(text: &str) -> Result<Presentation, PresentationError> {
    let mut generators: Option<Vec<String>> = None;
    let mut pending: Vec<(usize, &str)> = Vec::new();
    let mut offset = 0;
    for clause in text.split([';', '\n']) {
        let start = offset + (clause.len() - clause.trim_start().len());
        offset += clause.len() + 1;
        let clause = clause.trim();
        if clause.is_empty() {
            continue;
        }
        let err = |message: String| PresentationError::Parse {
            offset: start,
            message,
        };
        let Some((key, body)) = clause.split_once(':') else {
            return Err(err(format!("expected `gens:` or `rel:`, found `{clause}`")));
        };
        match key.trim() {
            "gens" => {
                if generators.is_some() {
                    return Err(err("generators declared twice".into()));
                }
                let names: Vec<String> = body.split_whitespace().map(str::to_string).collect();
                if names.is_empty() {
                    return Err(err("no generators".into()));
                }
                if names.len() > 255 {
                    return Err(PresentationError::TooManyGenerators);
                }
                let mut seen = HashSet::new();
                for n in &names {
                    if n == "e" || n.contains('*') || n.contains('=') {
                        return Err(err(format!("`{n}` cannot be a generator name")));
                    }
                    if !seen.insert(n) {
                        return Err(err(format!("generator `{n}` repeated")));
                    }
                }
                generators = Some(names);
            }
            "rel" => pending.push((start, body)),
            other => return Err(err(format!("unknown clause `{other}`"))),
        }
    }
    let Some(generators) = generators else {
        return Err(PresentationError::Parse {
            offset: 0,
            message: "missing `gens:` clause".into(),
        });
    };
    let mut p = Presentation {
        generators,
        relations: Vec::new(),
        family: Family::User,
    };
    for (start, body) in pending {
        let Some((l, r)) = body.split_once('=') else {
            return Err(PresentationError::Parse {
                offset: start,
                message: "relation needs `=`".into(),
            });
        };
        let lhs = p.parse_word(l)?;
        let rhs = p.parse_word(r)?;
        p.relations.push((lhs, rhs));
    }
    Ok(p)
}

fn xs(n: usize, g: u8) -> Vec<u8> {
    vec![g; n]
}

/// `<x, y | x^n = y x^n y>`.
pub fn example_4_8(n: usize) -> Presentation {
    let (x, y) = (0, 1);
    let lhs = xs(n, x);
    let rhs = [vec![y], xs(n, x), vec![y]].concat();
    Presentation {
        generators: vec!["x".into(), "y".into()],
        relations: vec![(GenWord(lhs), GenWord(rhs))],
        family: Family::Example48 { n },
    }
}

/// `<x, y | xyx = yxyxy>`.
pub fn example_5_4() -> Presentation {
    Presentation {
        generators: vec!["x".into(), "y".into()],
        relations: vec![(GenWord(vec![0, 1, 0]), GenWord(vec![1, 0, 1, 0, 1]))],
        family: Family::Example54,
    }
}

/// Generator order of the four-letter family.
pub const W: u8 = 0;
pub const X: u8 = 1;
pub const Y: u8 = 2;
pub const Z: u8 = 3;

/// `x y^k z`.
pub fn a_k(k: usize) -> GenWord {
    GenWord([vec![X], xs(k, Y), vec![Z]].concat())
}

/// The relations `a_k = y a_(k+1) w` for `0 <= k <= kmax`. The full family
/// is infinite; the exact engine in this module handles all `k` at once.
pub fn example_4_10(kmax: usize) -> Presentation {
    let relations = (0..=kmax)
        .map(|k| (a_k(k), GenWord([vec![Y], a_k(k + 1).0, vec![W]].concat())))
        .collect();
    Presentation {
        generators: vec!["w".into(), "x".into(), "y".into(), "z".into()],
        relations,
        family: Family::Example410 { kmax },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdianReport {
    pub left_edges: Vec<(String, String)>,
    pub right_edges: Vec<(String, String)>,
    pub left_acyclic: bool,
    pub right_acyclic: bool,
    pub is_adian: bool,
}

/// An undirected multigraph is a forest iff no edge joins two vertices
/// already connected; loops and parallel edges fail immediately.
fn forest(vertices: usize, edges: &[(u8, u8)]) -> bool {
    let mut uf = UnionFind::<usize>::new(vertices);
    edges.iter().all(|&(a, b)| uf.union(a as usize, b as usize))
}

pub fn adian_check(p: &Presentation) -> Result<AdianReport, PresentationError> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (i, (l, r)) in p.relations.iter().enumerate() {
        let (Some(&lf), Some(&rf), Some(&ll), Some(&rl)) =
            (l.0.first(), r.0.first(), l.0.last(), r.0.last())
        else {
            return Err(PresentationError::EmptyRelationSide(i));
        };
        left.push((lf, rf));
        right.push((ll, rl));
    }
    let n = p.generators.len();
    let (left_acyclic, right_acyclic) = (forest(n, &left), forest(n, &right));
    let name = |e: &[(u8, u8)]| -> Vec<(String, String)> {
        e.iter()
            .map(|&(a, b)| {
                (
                    p.generators[a as usize].clone(),
                    p.generators[b as usize].clone(),
                )
            })
            .collect()
    };
    Ok(AdianReport {
        left_edges: name(&left),
        right_edges: name(&right),
        left_acyclic,
        right_acyclic,
        is_adian: left_acyclic && right_acyclic,
    })
}

/// Why two words are certainly not congruent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Refutation {
    /// An integer letter weighting equal on both sides of every relation
    /// but different on the two words.
    Functional {
        weights: Vec<i64>,
        u_value: i64,
        v_value: i64,
    },
    /// The class of `u` is finite, was enumerated completely, and misses `v`.
    ClassExhausted { class_size: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Congruence {
    Equivalent { chain: Vec<GenWord> },
    Refuted(Refutation),
    Unknown { expanded: usize },
}

fn weigh(weights: &[i64], w: &GenWord) -> i64 {
    w.0.iter().map(|&g| weights[g as usize]).sum()
}

/// Semidecides `u == v mod R#`. Conserved functionals are tried first; then
/// a bidirectional breadth-first search expands at most `budget` words.
pub fn congruent_bounded(p: &Presentation, u: &GenWord, v: &GenWord, budget: usize) -> Congruence {
    for weights in conserved_functionals(p) {
        let (u_value, v_value) = (weigh(&weights, u), weigh(&weights, v));
        if u_value != v_value {
            return Congruence::Refuted(Refutation::Functional {
                weights,
                u_value,
                v_value,
            });
        }
    }
    if u == v {
        return Congruence::Equivalent {
            chain: vec![u.clone()],
        };
    }

    type Parents = HashMap<GenWord, Option<GenWord>>;
    fn path(parents: &Parents, mut w: GenWord) -> Vec<GenWord> {
        let mut out = vec![w.clone()];
        while let Some(Some(prev)) = parents.get(&w) {
            out.push(prev.clone());
            w = prev.clone();
        }
        out
    }

    let mut sides: [(Parents, VecDeque<GenWord>); 2] = [
        (
            HashMap::from([(u.clone(), None)]),
            VecDeque::from([u.clone()]),
        ),
        (
            HashMap::from([(v.clone(), None)]),
            VecDeque::from([v.clone()]),
        ),
    ];
    let mut expanded = 0;
    loop {
        // grow the side with the smaller frontier by one full layer
        let s = usize::from(sides[1].1.len() < sides[0].1.len());
        if sides[s].1.is_empty() {
            return Congruence::Refuted(Refutation::ClassExhausted {
                class_size: sides[s].0.len(),
            });
        }
        let layer: Vec<GenWord> = sides[s].1.drain(..).collect();
        for w in layer {
            if expanded >= budget {
                return Congruence::Unknown { expanded };
            }
            expanded += 1;
            for next in p.neighbors(&w) {
                if sides[s].0.contains_key(&next) {
                    continue;
                }
                sides[s].0.insert(next.clone(), Some(w.clone()));
                if sides[1 - s].0.contains_key(&next) {
                    let mut mine = path(&sides[s].0, next.clone());
                    let theirs = path(&sides[1 - s].0, next);
                    mine.reverse();
                    mine.extend(theirs.into_iter().skip(1));
                    if s == 1 {
                        mine.reverse();
                    }
                    return Congruence::Equivalent { chain: mine };
                }
                sides[s].1.push_back(next);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthProbe {
    /// Lengths of words found congruent to the target, ascending.
    pub lengths: Vec<usize>,
    /// False when the budget ran out before the search finished.
    pub complete: bool,
    /// `normal_form` (exact per length) or `class_search` (lower bound).
    pub method: &'static str,
    /// True when generators are only assumed to be atoms.
    pub atoms_assumed: bool,
}

/// Lengths `<= max_len` of generator words congruent to `target`.
///
/// For the four-letter family every word up to `max_len` is normalized and
/// compared, which is exact. Otherwise the congruence class of `target` is
/// explored breadth-first through words of length at most `max_len` plus
/// the longest relation side, so every reported length is realized but the
/// list may miss lengths reachable only through longer words.
pub fn bounded_length_set(
    p: &Presentation,
    target: &GenWord,
    max_len: usize,
    budget: usize,
) -> Result<LengthProbe, PresentationError> {
    let atoms_assumed = p.family == Family::User;
    if let Family::Example410 { .. } = p.family {
        let goal = normal_form_4_10(target)?;
        let mut lengths = Vec::new();
        let mut examined = 0usize;
        let mut complete = true;
        'outer: for len in 0..=max_len {
            let mut word = vec![0u8; len];
            loop {
                examined += 1;
                if examined > budget {
                    complete = false;
                    break 'outer;
                }
                if normal_form_4_10(&GenWord(word.clone()))? == goal {
                    lengths.push(len);
                    break;
                }
                // next word in lexicographic order over {w,x,y,z}
                let Some(i) = word.iter().rposition(|&g| g < Z) else {
                    break;
                };
                word[i] += 1;
                for g in &mut word[i + 1..] {
                    *g = 0;
                }
            }
        }
        return Ok(LengthProbe {
            lengths,
            complete,
            method: "normal_form",
            atoms_assumed,
        });
    }

    let slack = p
        .relations
        .iter()
        .map(|(l, r)| l.len().max(r.len()))
        .max()
        .unwrap_or(0);
    let cap = max_len.max(target.len()) + slack;
    let mut seen: HashSet<GenWord> = HashSet::from([target.clone()]);
    let mut queue = VecDeque::from([target.clone()]);
    let mut found = vec![false; max_len + 1];
    let mut expanded = 0;
    let mut complete = true;
    while let Some(w) = queue.pop_front() {
        if w.len() <= max_len {
            found[w.len()] = true;
        }
        if expanded >= budget {
            complete = false;
            break;
        }
        expanded += 1;
        for next in p.neighbors(&w) {
            if next.len() <= cap && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(LengthProbe {
        lengths: (0..=max_len).filter(|&k| found[k]).collect(),
        complete,
        method: "class_search",
        atoms_assumed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_grammar() {
        let p = parse_presentation("gens: x y; rel: x*x = y*x*x*y").unwrap();
        assert_eq!(p.generators, ["x", "y"]);
        assert_eq!(p.relations, example_4_8(2).relations);
        let q = parse_presentation("gens: x; rel: x = x*x").unwrap();
        assert_eq!(q.relations.len(), 1);
        let e = parse_presentation("gens: a b\nrel: a*b = e").unwrap();
        assert_eq!(e.relations[0].1, GenWord(vec![]));
        assert_eq!(e.to_string(), "gens: a b; rel: a*b = e");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_presentation("rel: x = y"),
            Err(PresentationError::Parse { .. })
        ));
        assert_eq!(
            parse_presentation("gens: x; rel: x = q"),
            Err(PresentationError::UnknownGenerator("q".into()))
        );
        assert_eq!(
            parse_presentation("gens: x;  frob: x"),
            Err(PresentationError::Parse {
                offset: 10,
                message: "unknown clause `frob`".into()
            })
        );
        assert!(parse_presentation("gens: x; rel: x*x").is_err());
        assert!(parse_presentation("gens: x x").is_err());
        assert!(parse_presentation("gens: e").is_err());
        assert!(parse_presentation("gens: x; rel: x** = x").is_err());
    }

    #[test]
    fn adian_examples() {
        for n in 1..=6 {
            let r = adian_check(&example_4_8(n)).unwrap();
            assert!(r.is_adian);
            assert_eq!(r.left_edges, vec![("x".to_string(), "y".to_string())]);
        }
        assert!(adian_check(&example_5_4()).unwrap().is_adian);
        let loopy = parse_presentation("gens: x; rel: x = x*x").unwrap();
        let r = adian_check(&loopy).unwrap();
        assert!(!r.is_adian && !r.left_acyclic);
        let parallel = parse_presentation("gens: x y; rel: x = y*y; rel: x*x = y").unwrap();
        assert!(!adian_check(&parallel).unwrap().left_acyclic);
        let empty = parse_presentation("gens: x; rel: x = e").unwrap();
        assert_eq!(
            adian_check(&empty),
            Err(PresentationError::EmptyRelationSide(0))
        );
    }

    #[test]
    fn adian_matches_brute_force_cycle_search() {
        // oracle: an undirected multigraph has a cycle iff some edge's
        // endpoints stay connected after deleting that edge
        fn connected_without(edges: &[(u8, u8)], skip: usize, a: u8, b: u8) -> bool {
            let mut reach = vec![a];
            let mut changed = true;
            while changed {
                changed = false;
                for (i, &(p, q)) in edges.iter().enumerate() {
                    if i == skip {
                        continue;
                    }
                    for (s, t) in [(p, q), (q, p)] {
                        if reach.contains(&s) && !reach.contains(&t) {
                            reach.push(t);
                            changed = true;
                        }
                    }
                }
            }
            reach.contains(&b)
        }
        fn has_cycle(edges: &[(u8, u8)]) -> bool {
            edges
                .iter()
                .enumerate()
                .any(|(i, &(a, b))| a == b || connected_without(edges, i, a, b))
        }
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let n = rng.gen_range(1..5u8);
            let rels = rng.gen_range(0..5);
            let word = |rng: &mut rand_chacha::ChaCha8Rng| {
                GenWord(
                    (0..rng.gen_range(1..4))
                        .map(|_| rng.gen_range(0..n))
                        .collect(),
                )
            };
            let relations: Vec<_> = (0..rels)
                .map(|_| (word(&mut rng), word(&mut rng)))
                .collect();
            let p = Presentation {
                generators: (0..n).map(|i| format!("g{i}")).collect(),
                relations,
                family: Family::User,
            };
            let r = adian_check(&p).unwrap();
            let left: Vec<_> = p.relations.iter().map(|(l, r)| (l.0[0], r.0[0])).collect();
            let right: Vec<_> = p
                .relations
                .iter()
                .map(|(l, r)| (*l.0.last().unwrap(), *r.0.last().unwrap()))
                .collect();
            assert_eq!(r.left_acyclic, !has_cycle(&left));
            assert_eq!(r.right_acyclic, !has_cycle(&right));
        }
    }

    #[test]
    fn congruence_examples() {
        let p = example_4_8(1);
        let (x, yxy) = (p.parse_word("x").unwrap(), p.parse_word("y*x*y").unwrap());
        let Congruence::Equivalent { chain } = congruent_bounded(&p, &x, &yxy, 1000) else {
            panic!()
        };
        assert_eq!(chain, vec![x.clone(), yxy.clone()]);
        let Congruence::Equivalent { chain } = congruent_bounded(&p, &yxy, &x, 1000) else {
            panic!()
        };
        assert_eq!(chain, vec![yxy, x]);

        let q = example_4_10(3);
        let (u, v) = (
            q.parse_word("x*z").unwrap(),
            q.parse_word("y*x*y*z*w").unwrap(),
        );
        let Congruence::Equivalent { chain } = congruent_bounded(&q, &u, &v, 1000) else {
            panic!()
        };
        assert!(q.is_r_chain(&chain));
        let (x, z) = (q.parse_word("x").unwrap(), q.parse_word("z").unwrap());
        let Congruence::Refuted(Refutation::Functional {
            weights,
            u_value,
            v_value,
        }) = congruent_bounded(&q, &x, &z, 1000)
        else {
            panic!()
        };
        assert_ne!(u_value, v_value);
        for (l, r) in &q.relations {
            assert_eq!(weigh(&weights, l), weigh(&weights, r));
        }
    }

    #[test]
    fn longer_chains_revalidate() {
        let p = example_5_4();
        let u = p.parse_word("x*y*x").unwrap();
        let v = p.parse_word("y*y*x*y*x*y*y").unwrap();
        let Congruence::Equivalent { chain } = congruent_bounded(&p, &u, &v, 10_000) else {
            panic!()
        };
        assert!(p.is_r_chain(&chain));
        assert_eq!((chain.first(), chain.last()), (Some(&u), Some(&v)));
        // equal conserved weights and infinite classes: search cannot settle it
        let w = p.parse_word("x*y*x*x").unwrap();
        let z = p.parse_word("x*x*y*x").unwrap();
        assert!(matches!(
            congruent_bounded(&p, &w, &z, 200),
            Congruence::Unknown { .. }
        ));
    }

    #[test]
    fn finite_classes_are_refuted_by_exhaustion() {
        let p = parse_presentation("gens: a b; rel: a*b = b*a").unwrap();
        let (u, v) = (
            p.parse_word("a*a*b").unwrap(),
            p.parse_word("a*b*b").unwrap(),
        );
        // counts differ, so the functional route answers first
        assert!(matches!(
            congruent_bounded(&p, &u, &v, 100),
            Congruence::Refuted(Refutation::Functional { .. })
        ));
        let (u, v) = (
            p.parse_word("a*a*b*b").unwrap(),
            p.parse_word("a*b*a*b").unwrap(),
        );
        assert!(matches!(
            congruent_bounded(&p, &u, &v, 100),
            Congruence::Equivalent { .. }
        ));
        let q = parse_presentation("gens: a b c; rel: a*b = c*c").unwrap();
        let (u, v) = (q.parse_word("b*a").unwrap(), q.parse_word("a*b").unwrap());
        assert_eq!(
            congruent_bounded(&q, &u, &v, 100),
            Congruence::Refuted(Refutation::ClassExhausted { class_size: 1 })
        );
    }

    #[test]
    fn length_probes() {
        let p = example_4_8(2);
        let r = bounded_length_set(&p, &p.parse_word("x*x").unwrap(), 8, 100_000).unwrap();
        assert_eq!(r.lengths, vec![2, 4, 6, 8]);
        assert_eq!(r.method, "class_search");
        let q = example_5_4();
        let r = bounded_length_set(&q, &q.parse_word("x*y*x").unwrap(), 9, 100_000).unwrap();
        assert_eq!(r.lengths, vec![3, 5, 7, 9]);
    }

    #[test]
    fn four_letter_lengths_step_by_three() {
        // x*z is congruent exactly to the words y^k x y^k z w^k
        let p = example_4_10(0);
        let r = bounded_length_set(&p, &a_k(0), 9, 10_000_000).unwrap();
        assert!(r.complete);
        assert_eq!(r.lengths, vec![2, 5, 8]);
        let r = bounded_length_set(&p, &a_k(1), 9, 10_000_000).unwrap();
        assert_eq!(r.lengths, vec![3, 6, 9]);
    }
}

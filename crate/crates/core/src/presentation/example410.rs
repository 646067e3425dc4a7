//! Exact engine for the four-letter family `a_k = y a_(k+1) w` with
//! `a_k = x y^k z`, over the alphabet `w, x, y, z` (indices 0..4).
//!
//! Every word decomposes uniquely as
//! `z_0 y^r1 a_s1 w^t1 z_1 ... y^rl a_sl w^tl z_l` where the fillers contain
//! no `x y* z` factor, no filler before a block ends in `y` and no filler
//! after a block starts with `w`. Two words are congruent iff they share
//! fillers and, block by block, differ by a common shift of `(r, s, t)`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{GenWord, PresentationError, W, X, Y, Z};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsiBlock {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    /// Filler following this block.
    pub filler: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsiDecomposition {
    pub ell: usize,
    pub head: Vec<u8>,
    pub blocks: Vec<PsiBlock>,
}

impl PsiDecomposition {
    pub fn reassemble(&self) -> GenWord {
        let mut out = self.head.clone();
        for b in &self.blocks {
            out.extend(std::iter::repeat_n(Y, b.r));
            out.push(X);
            out.extend(std::iter::repeat_n(Y, b.s));
            out.push(Z);
            out.extend(std::iter::repeat_n(W, b.t));
            out.extend_from_slice(&b.filler);
        }
        GenWord(out)
    }

    /// Normal iff some exponent vanishes in every block.
    pub fn is_normal(&self) -> bool {
        self.blocks.iter().all(|b| b.r.min(b.s).min(b.t) == 0)
    }
}

fn check_alphabet(w: &GenWord) -> Result<(), PresentationError> {
    if w.0.iter().all(|&g| g <= Z) {
        Ok(())
    } else {
        Err(PresentationError::AlphabetMismatch)
    }
}

/// Counts the `x y^s z` factors and returns the canonical decomposition.
/// Such factors cannot overlap (each holds one `x` and one `z`), so a left
/// to right scan finds all of them.
pub fn psi(word: &GenWord) -> Result<PsiDecomposition, PresentationError> {
    check_alphabet(word)?;
    let w = &word.0;
    // (position of x, s) for every factor
    let mut factors = Vec::new();
    let mut i = 0;
    while i < w.len() {
        if w[i] == X {
            let mut j = i + 1;
            while j < w.len() && w[j] == Y {
                j += 1;
            }
            if j < w.len() && w[j] == Z {
                factors.push((i, j - i - 1));
                i = j + 1;
                continue;
            }
        }
        i += 1;
    }

    // split each gap between factors into w-run, filler, y-run
    let mut head = Vec::new();
    let mut blocks: Vec<PsiBlock> = Vec::new();
    let mut gap_start = 0;
    for (k, &(xpos, s)) in factors.iter().enumerate() {
        let gap = &w[gap_start..xpos];
        let t = if k > 0 {
            gap.iter().take_while(|&&g| g == W).count()
        } else {
            0
        };
        let rest = &gap[t..];
        let r = rest.iter().rev().take_while(|&&g| g == Y).count();
        let filler = rest[..rest.len() - r].to_vec();
        if k == 0 {
            head = filler;
        } else {
            let prev = blocks.last_mut().expect("k > 0");
            prev.t = t;
            prev.filler = filler;
        }
        blocks.push(PsiBlock {
            r,
            s,
            t: 0,
            filler: Vec::new(),
        });
        gap_start = xpos + s + 2;
    }
    if let Some(last) = blocks.last_mut() {
        let tail = &w[gap_start..];
        let t = tail.iter().take_while(|&&g| g == W).count();
        last.t = t;
        last.filler = tail[t..].to_vec();
    } else {
        head = w.clone();
    }
    Ok(PsiDecomposition {
        ell: blocks.len(),
        head,
        blocks,
    })
}

/// Leftmost position of `y x y^m z w` with `m >= 1`, returning `(start, m)`.
fn leftmost_redex(w: &[u8]) -> Option<(usize, usize)> {
    (0..w.len()).find_map(|i| {
        if w.get(i) != Some(&Y) || w.get(i + 1) != Some(&X) {
            return None;
        }
        let m = w[i + 2..].iter().take_while(|&&g| g == Y).count();
        (m >= 1 && w.get(i + 2 + m) == Some(&Z) && w.get(i + 3 + m) == Some(&W)).then_some((i, m))
    })
}

fn contract(w: &mut Vec<u8>, start: usize, m: usize) {
    // y x y^m z w  ->  x y^(m-1) z
    w.remove(start + 3 + m);
    w.remove(start + 2);
    w.remove(start);
}

/// Normal form by repeatedly contracting the leftmost `y x y^m z w`.
pub fn normal_form_4_10(word: &GenWord) -> Result<GenWord, PresentationError> {
    check_alphabet(word)?;
    let mut w = word.0.clone();
    while let Some((start, m)) = leftmost_redex(&w) {
        contract(&mut w, start, m);
    }
    Ok(GenWord(w))
}

/// Normal form read off the decomposition: lower each block's exponents by
/// their minimum.
pub fn normal_form_4_10_closed(word: &GenWord) -> Result<GenWord, PresentationError> {
    let mut d = psi(word)?;
    for b in &mut d.blocks {
        let k = b.r.min(b.s).min(b.t);
        b.r -= k;
        b.s -= k;
        b.t -= k;
    }
    Ok(d.reassemble())
}

/// All words one application of some relation `a_k = y a_(k+1) w` away,
/// in either direction.
pub fn neighbors_4_10(word: &GenWord) -> Vec<GenWord> {
    let w = &word.0;
    let mut out = Vec::new();
    for i in 0..w.len() {
        if w[i] != X {
            continue;
        }
        let m = w[i + 1..].iter().take_while(|&&g| g == Y).count();
        if w.get(i + 1 + m) != Some(&Z) {
            continue;
        }
        // expand a_m at i
        let mut e = w[..i].to_vec();
        e.push(Y);
        e.push(X);
        e.extend(std::iter::repeat_n(Y, m + 1));
        e.push(Z);
        e.push(W);
        e.extend_from_slice(&w[i + 2 + m..]);
        out.push(GenWord(e));
        // contract y a_m w around it
        if i > 0 && w[i - 1] == Y && m >= 1 && w.get(i + 2 + m) == Some(&W) {
            let mut c = w.clone();
            contract(&mut c, i - 1, m);
            out.push(GenWord(c));
        }
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub cancellativity_checked: usize,
    /// Samples where the hypothesis `nf(zu) = nf(zv)` (or `nf(uz) = nf(vz)`) held.
    pub cancellativity_hits: usize,
    pub cancellativity_failures: usize,
    pub acyclicity_checked: usize,
    pub acyclicity_hits: usize,
    pub acyclicity_failures: usize,
    pub confluence_checked: usize,
    pub confluence_failures: usize,
    pub psi_checked: usize,
    pub psi_failures: usize,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.cancellativity_failures
            + self.acyclicity_failures
            + self.confluence_failures
            + self.psi_failures
    }
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> GenWord {
    let len = rng.gen_range(0..=max_len);
    GenWord((0..len).map(|_| rng.gen_range(W..=Z)).collect())
}

/// A random word rich in `x y* z` factors.
fn random_blocky_word(rng: &mut ChaCha8Rng, max_len: usize) -> GenWord {
    let mut w = Vec::new();
    while w.len() < max_len {
        if rng.gen_bool(0.4) {
            w.extend(std::iter::repeat_n(Y, rng.gen_range(0..3)));
            w.push(X);
            w.extend(std::iter::repeat_n(Y, rng.gen_range(0..3)));
            w.push(Z);
            w.extend(std::iter::repeat_n(W, rng.gen_range(0..3)));
        } else {
            w.push(rng.gen_range(W..=Z));
        }
    }
    w.truncate(max_len);
    GenWord(w)
}

/// A random congruent word reached by a short random R-chain.
fn random_congruent(rng: &mut ChaCha8Rng, w: &GenWord, steps: usize) -> GenWord {
    let mut cur = w.clone();
    for _ in 0..steps {
        let next = neighbors_4_10(&cur);
        match next.choose(rng) {
            Some(n) => cur = n.clone(),
            None => break,
        }
    }
    cur
}

/// Seeded random checks of cancellativity, acyclicity, confluence and the
/// invariance of `psi` under the defining relations.
pub fn verify_4_10_properties(samples: usize, max_len: usize, seed: u64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = VerifyReport::default();
    let nf = |w: &GenWord| normal_form_4_10(w).expect("alphabet is fixed");
    for _ in 0..samples {
        // cancellativity: half the pairs are congruent by construction
        let z = random_blocky_word(&mut rng, max_len / 3);
        let u = random_blocky_word(&mut rng, max_len / 3);
        let v = if rng.gen_bool(0.5) {
            random_congruent(&mut rng, &u, 3)
        } else {
            random_word(&mut rng, max_len / 3)
        };
        let same = nf(&u) == nf(&v);
        for (lu, lv) in [(z.concat(&u), z.concat(&v)), (u.concat(&z), v.concat(&z))] {
            rep.cancellativity_checked += 1;
            let hyp = nf(&lu) == nf(&lv);
            rep.cancellativity_hits += usize::from(hyp);
            // nf is a congruence invariant, so the two sides must agree
            if hyp != same {
                rep.cancellativity_failures += 1;
            }
        }

        // acyclicity: u z v == z forces u = v = e
        let z = random_blocky_word(&mut rng, max_len / 2);
        let (u, v) = if rng.gen_bool(0.3) {
            (GenWord::default(), GenWord::default())
        } else {
            (
                random_word(&mut rng, max_len / 4),
                random_word(&mut rng, max_len / 4),
            )
        };
        rep.acyclicity_checked += 1;
        if nf(&u.concat(&z).concat(&v)) == nf(&z) {
            rep.acyclicity_hits += 1;
            if !u.is_empty() || !v.is_empty() {
                rep.acyclicity_failures += 1;
            }
        }

        // confluence: random contraction orders end at the same word
        let base = random_blocky_word(&mut rng, max_len);
        let mut w = random_congruent(&mut rng, &base, 4);
        let expect = nf(&w);
        loop {
            let redexes: Vec<(usize, usize)> = (0..w.len())
                .filter_map(|i| {
                    leftmost_redex(&w.0[i..])
                        .filter(|&(s, _)| s == 0)
                        .map(|(_, m)| (i, m))
                })
                .collect();
            let Some(&(i, m)) = redexes.choose(&mut rng) else {
                break;
            };
            contract(&mut w.0, i, m);
        }
        rep.confluence_checked += 1;
        if w != expect || normal_form_4_10_closed(&base).expect("alphabet") != expect {
            rep.confluence_failures += 1;
        }

        // psi is constant along R-chains
        let a = random_blocky_word(&mut rng, max_len);
        let b = random_congruent(&mut rng, &a, 5);
        rep.psi_checked += 1;
        if psi(&a).expect("alphabet").ell != psi(&b).expect("alphabet").ell {
            rep.psi_failures += 1;
        }
    }
    rep
}

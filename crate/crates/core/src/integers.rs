//! Unique factorization in the positive integers, checked with the generic
//! deciders on an [`IntegerFragment`].

use std::collections::BTreeSet;

use serde::Serialize;

use crate::factorization::{
    enumerate_factorizations, factorization_class, is_powerful, is_prime, FactorizationError,
    FactorizationSystem, IntegerFragment, DEFAULT_EXPLOSION_GUARD,
};
use crate::monoid::ElementId;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FtaReport {
    pub bound: usize,
    /// Integers with more than one factorization class (expected empty).
    pub non_unique: Vec<usize>,
    /// Total number of ordered factorizations examined.
    pub words_examined: usize,
    pub prime_bound: usize,
    pub primes_checked: usize,
    pub primes_failing: Vec<usize>,
}

/// Enumerates every factorization of every `n <= bound` into primes and
/// counts classes; then runs the prime and powerful deciders on each prime
/// up to `prime_bound`.
pub fn fta_report(bound: usize, prime_bound: usize) -> Result<FtaReport, FactorizationError> {
    let ints = IntegerFragment::new(bound);
    let max_len = usize::BITS as usize - bound.leading_zeros() as usize;
    let mut non_unique = Vec::new();
    let mut words_examined = 0;
    for n in 1..=bound {
        let words =
            enumerate_factorizations(&ints, ElementId(n), max_len, DEFAULT_EXPLOSION_GUARD)?;
        words_examined += words.len();
        let classes: BTreeSet<_> = words
            .iter()
            .map(|w| factorization_class(&ints, w))
            .collect();
        if classes.len() != 1 {
            non_unique.push(n);
        }
    }
    let mut primes_checked = 0;
    let mut primes_failing = Vec::new();
    for &p in ints.atoms().iter().take_while(|p| p.0 <= prime_bound) {
        primes_checked += 1;
        if !is_prime(&ints, p).is_prime() || !is_powerful(&ints, p)?.powerful {
            primes_failing.push(p.0);
        }
    }
    Ok(FtaReport {
        bound,
        non_unique,
        words_examined,
        prime_bound,
        primes_checked,
        primes_failing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fragment() {
        let r = fta_report(500, 50).unwrap();
        assert!(r.non_unique.is_empty());
        assert_eq!(r.primes_checked, 15);
        assert!(r.primes_failing.is_empty());
    }
}

//! Reduced power monoids: subsets of a finite monoid containing its
//! identity, under setwise multiplication.

use serde::Serialize;
use thiserror::Error;

use crate::factorization::{classify_arithmetic, minimal_catalog, FactorizationError};
use crate::monoid::{ElementId, FiniteMonoid, MonoidError};

/// Largest base monoid accepted (the result has `2^(|K|-1)` elements).
pub const BASE_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PowerError {
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Factorization(#[from] FactorizationError),
    #[error("direct atomicity ({direct}) disagrees with the base criterion ({criterion})")]
    CrossCheckMismatch { criterion: bool, direct: bool },
    #[error("kappa {kappa} exceeds |K| - 1 = {bound}")]
    BoundViolation { kappa: usize, bound: usize },
}

#[derive(Clone, Debug)]
pub struct PowerMonoidBuild {
    pub base: FiniteMonoid,
    pub monoid: FiniteMonoid,
    /// Bit `k` of `subset_of[i]` is set when base element `k` lies in the
    /// subset that is element `i` of the result. Element `i` has mask
    /// `subset_of[i]`, and masks increase with `i`.
    pub subset_of: Vec<u64>,
}

impl PowerMonoidBuild {
    pub fn subset(&self, x: ElementId) -> Vec<ElementId> {
        let mask = self.subset_of[x.0];
        (0..self.base.size())
            .filter(|k| mask >> k & 1 == 1)
            .map(ElementId)
            .collect()
    }

    pub fn element_of(&self, subset: &[ElementId]) -> Option<ElementId> {
        let mask = subset.iter().fold(1u64, |m, k| m | 1 << k.0);
        self.subset_of.binary_search(&mask).ok().map(ElementId)
    }
}

pub fn build_reduced_power_monoid(base: &FiniteMonoid) -> Result<PowerMonoidBuild, PowerError> {
    let k = base.size();
    if k > BASE_CAP {
        return Err(MonoidError::SizeLimit {
            requested: 1u128 << (k - 1),
            cap: 1u128 << (BASE_CAP - 1),
        }
        .into());
    }
    let n = 1usize << (k - 1);
    // element i is the subset {1} ∪ {j + 1 : bit j of i}
    let subset_of: Vec<u64> = (0..n as u64).map(|i| (i << 1) | 1).collect();
    let mut table = Vec::with_capacity(n * n);
    for &x in &subset_of {
        for &y in &subset_of {
            let mut prod = 0u64;
            for a in (0..k).filter(|a| x >> a & 1 == 1) {
                for b in (0..k).filter(|b| y >> b & 1 == 1) {
                    prod |= 1 << base.mul(ElementId(a), ElementId(b)).0;
                }
            }
            table.push((prod >> 1) as usize);
        }
    }
    let names = subset_of
        .iter()
        .map(|&m| {
            let items: Vec<&str> = (0..k)
                .filter(|a| m >> a & 1 == 1)
                .map(|a| base.name(ElementId(a)))
                .collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    Ok(PowerMonoidBuild {
        base: base.clone(),
        monoid: FiniteMonoid::from_flat_unchecked(table, names),
        subset_of,
    })
}

/// `1 != x^2 != x` for every non-identity `x` of the base.
pub fn base_criterion(base: &FiniteMonoid) -> bool {
    base.elements().skip(1).all(|x| {
        let sq = base.mul(x, x);
        sq != ElementId::IDENTITY && sq != x
    })
}

/// Atomicity of the reduced power monoid, read off the base and checked
/// against a direct computation on the built monoid.
pub fn atomicity_criterion(base: &FiniteMonoid) -> Result<bool, PowerError> {
    let criterion = base_criterion(base);
    let built = build_reduced_power_monoid(base)?;
    let direct = classify_arithmetic(&built.monoid)?.atomic;
    if criterion != direct {
        return Err(PowerError::CrossCheckMismatch { criterion, direct });
    }
    Ok(criterion)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KappaReport {
    pub kappa: usize,
    pub bound: usize,
    pub equal: bool,
}

pub fn kappa_report(base: &FiniteMonoid) -> Result<KappaReport, PowerError> {
    let built = build_reduced_power_monoid(base)?;
    let kappa = minimal_catalog(&built.monoid)?.kappa;
    let bound = base.size() - 1;
    if kappa > bound {
        return Err(PowerError::BoundViolation { kappa, bound });
    }
    Ok(KappaReport {
        kappa,
        bound,
        equal: kappa == bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{instance, InstanceKind};

    fn cyclic(m: usize) -> FiniteMonoid {
        instance(&InstanceKind::Cyclic(m)).unwrap()
    }

    #[test]
    fn sizes_names_and_products() {
        let p2 = build_reduced_power_monoid(&cyclic(2)).unwrap();
        assert_eq!(p2.monoid.names(), ["{1}", "{1,g}"]);
        let p3 = build_reduced_power_monoid(&cyclic(3)).unwrap();
        assert_eq!(p3.monoid.size(), 4);
        p3.monoid.validate().unwrap();
        let b = p3.element_of(&[ElementId(1)]).unwrap();
        let full = p3.element_of(&[ElementId(1), ElementId(2)]).unwrap();
        assert_eq!(p3.monoid.mul(b, b), full);
        assert_eq!(
            p3.subset(full),
            vec![ElementId(0), ElementId(1), ElementId(2)]
        );
        let p5 = build_reduced_power_monoid(&cyclic(5)).unwrap();
        assert_eq!(p5.monoid.size(), 16);
        p5.monoid.validate().unwrap();
        assert_eq!(p5.monoid.unit_ids(), vec![ElementId(0)]);
    }

    #[test]
    fn setwise_products_match_direct_oracle() {
        let t = instance(&InstanceKind::FullTransformation(2)).unwrap();
        let p = build_reduced_power_monoid(&t).unwrap();
        for x in p.monoid.elements() {
            for y in p.monoid.elements() {
                let mut expect: Vec<ElementId> = Vec::new();
                for &a in &p.subset(x) {
                    for &b in &p.subset(y) {
                        expect.push(t.mul(a, b));
                    }
                }
                expect.sort();
                expect.dedup();
                assert_eq!(p.subset(p.monoid.mul(x, y)), expect);
            }
        }
    }

    #[test]
    fn size_cap() {
        let big = cyclic(13);
        assert!(matches!(
            build_reduced_power_monoid(&big),
            Err(PowerError::Monoid(MonoidError::SizeLimit { .. }))
        ));
    }

    #[test]
    fn criterion_examples() {
        assert!(!atomicity_criterion(&cyclic(2)).unwrap());
        assert!(atomicity_criterion(&cyclic(3)).unwrap());
        assert!(!atomicity_criterion(&cyclic(4)).unwrap());
        assert!(atomicity_criterion(&cyclic(5)).unwrap());
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(
            kappa_report(&cyclic(3)).unwrap(),
            KappaReport {
                kappa: 2,
                bound: 2,
                equal: true
            }
        );
        assert!(kappa_report(&cyclic(2)).unwrap().kappa <= 1);
    }
}

//! Semiprime, prime and their "strong" variants, decided by closing a family
//! of ideals under the star product.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::ideals::{all_ideals, star_subgroup};
use crate::set::ElementSet;

/// Largest number of leaves [`brute_force_products`] accepts.
pub const MAX_BRUTE_FORCE_DEPTH: usize = 8;

/// A parenthesized star product of ideals together with its value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductTree {
    Leaf {
        ideal: ElementSet,
    },
    Product {
        left: Box<ProductTree>,
        right: Box<ProductTree>,
        value: ElementSet,
    },
}

impl ProductTree {
    pub fn value(&self) -> &ElementSet {
        match self {
            ProductTree::Leaf { ideal } => ideal,
            ProductTree::Product { value, .. } => value,
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            ProductTree::Leaf { .. } => 1,
            ProductTree::Product { left, right, .. } => left.leaves() + right.leaves(),
        }
    }

    /// Recomputes the product from the leaves.
    pub fn evaluate(&self, a: &SkewBrace) -> ElementSet {
        match self {
            ProductTree::Leaf { ideal } => ideal.clone(),
            ProductTree::Product { left, right, .. } => {
                star_subgroup(a, &left.evaluate(a), &right.evaluate(a))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Derivation {
    Generator,
    Product(ElementSet, ElementSet),
}

/// Smallest family containing `generators` and closed under
/// `(X, Y) -> X * Y`.
#[derive(Clone, Debug)]
pub struct StarClosure {
    pub generators: Vec<ElementSet>,
    pub reached: BTreeSet<ElementSet>,
    pub contains_zero: bool,
    pub derivation: BTreeMap<ElementSet, Derivation>,
}

impl StarClosure {
    /// A product tree evaluating to `target`, built from recorded parents.
    pub fn witness(&self, target: &ElementSet) -> Option<ProductTree> {
        match self.derivation.get(target)? {
            Derivation::Generator => Some(ProductTree::Leaf {
                ideal: target.clone(),
            }),
            Derivation::Product(x, y) => Some(ProductTree::Product {
                left: Box::new(self.witness(x)?),
                right: Box::new(self.witness(y)?),
                value: target.clone(),
            }),
        }
    }

    pub fn zero_witness(&self) -> Option<ProductTree> {
        self.reached
            .iter()
            .find(|s| s.len() == 1)
            .and_then(|z| self.witness(z))
    }
}

/// Worklist closure. Parents are recorded the first time a set is reached,
/// and the worklist is processed in insertion order, so witnesses are
/// deterministic.
pub fn star_closure(a: &SkewBrace, generators: &[ElementSet]) -> StarClosure {
    let mut derivation = BTreeMap::new();
    let mut order: Vec<ElementSet> = Vec::new();
    for g in generators {
        if !derivation.contains_key(g) {
            derivation.insert(g.clone(), Derivation::Generator);
            order.push(g.clone());
        }
    }
    let mut next = 0;
    while next < order.len() {
        let x = order[next].clone();
        for k in 0..=next {
            let y = order[k].clone();
            for (l, r) in [(&x, &y), (&y, &x)] {
                let p = star_subgroup(a, l, r);
                if !derivation.contains_key(&p) {
                    derivation.insert(p.clone(), Derivation::Product(l.clone(), r.clone()));
                    order.push(p);
                }
            }
        }
        next += 1;
    }
    let reached: BTreeSet<ElementSet> = order.into_iter().collect();
    let contains_zero = reached.iter().any(|s| s.len() == 1);
    StarClosure {
        generators: generators.to_vec(),
        reached,
        contains_zero,
        derivation,
    }
}

fn nonzero_ideals(a: &SkewBrace) -> Vec<ElementSet> {
    all_ideals(a).into_iter().filter(|i| i.len() > 1).collect()
}

/// A nonzero ideal `I` with `I * I = {0}`.
pub fn semiprime_witness(a: &SkewBrace) -> Option<ElementSet> {
    nonzero_ideals(a)
        .into_iter()
        .find(|i| star_subgroup(a, i, i).len() == 1)
}

pub fn is_semiprime(a: &SkewBrace) -> bool {
    semiprime_witness(a).is_none()
}

/// Nonzero ideals `I`, `J` with `I * J = {0}`.
pub fn prime_witness(a: &SkewBrace) -> Option<(ElementSet, ElementSet)> {
    let ideals = nonzero_ideals(a);
    ideals
        .iter()
        .flat_map(|i| ideals.iter().map(move |j| (i, j)))
        .find(|(i, j)| star_subgroup(a, i, j).len() == 1)
        .map(|(i, j)| (i.clone(), j.clone()))
}

pub fn is_prime(a: &SkewBrace) -> bool {
    prime_witness(a).is_none()
}

/// A product of copies of one nonzero ideal that vanishes.
pub fn strongly_semiprime_witness(a: &SkewBrace) -> Option<ProductTree> {
    nonzero_ideals(a)
        .into_iter()
        .map(|i| star_closure(a, std::slice::from_ref(&i)))
        .find(|c| c.contains_zero)
        .and_then(|c| c.zero_witness())
}

pub fn is_strongly_semiprime(a: &SkewBrace) -> bool {
    nonzero_ideals(a)
        .iter()
        .all(|i| !star_closure(a, std::slice::from_ref(i)).contains_zero)
}

/// A product of nonzero ideals that vanishes.
pub fn strongly_prime_witness(a: &SkewBrace) -> Option<ProductTree> {
    star_closure(a, &nonzero_ideals(a)).zero_witness()
}

pub fn is_strongly_prime(a: &SkewBrace) -> bool {
    !star_closure(a, &nonzero_ideals(a)).contains_zero
}

/// Values of every product tree with at most `depth` leaves drawn from
/// `ideals`, enumerated level by level on the number of leaves.
pub fn brute_force_products(
    a: &SkewBrace,
    ideals: &[ElementSet],
    depth: usize,
) -> Result<BTreeSet<ElementSet>> {
    if depth > MAX_BRUTE_FORCE_DEPTH {
        return Err(Error::Capacity(format!(
            "product trees with {depth} leaves exceed the limit of {MAX_BRUTE_FORCE_DEPTH}"
        )));
    }
    if depth == 0 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    // by_leaves[k] holds the values of trees with exactly k + 1 leaves
    let mut by_leaves: Vec<BTreeSet<ElementSet>> = vec![ideals.iter().cloned().collect()];
    let mut cache: BTreeMap<(ElementSet, ElementSet), ElementSet> = BTreeMap::new();
    for k in 2..=depth {
        let mut level = BTreeSet::new();
        for left in 1..k {
            let right = k - left;
            for x in &by_leaves[left - 1] {
                for y in &by_leaves[right - 1] {
                    let v = cache
                        .entry((x.clone(), y.clone()))
                        .or_insert_with(|| star_subgroup(a, x, y))
                        .clone();
                    level.insert(v);
                }
            }
        }
        by_leaves.push(level);
    }
    Ok(by_leaves.into_iter().flatten().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimenessReport {
    pub semiprime: bool,
    pub prime: bool,
    pub strongly_semiprime: bool,
    pub strongly_prime: bool,
    pub witness: Option<ProductTree>,
}

pub fn primeness_report(a: &SkewBrace) -> PrimenessReport {
    let ideals = nonzero_ideals(a);
    let joint = star_closure(a, &ideals);
    let strongly_semiprime = ideals
        .iter()
        .all(|i| !star_closure(a, std::slice::from_ref(i)).contains_zero);
    PrimenessReport {
        semiprime: is_semiprime(a),
        prime: is_prime(a),
        strongly_semiprime,
        strongly_prime: !joint.contains_zero,
        witness: joint.zero_witness(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{almost_trivial, trivial};
    use crate::groups::*;

    #[test]
    fn trivial_braces_are_not_semiprime() {
        let a = trivial(&make_cyclic(6).unwrap());
        assert!(!is_semiprime(&a) && !is_prime(&a));
        assert!(!is_strongly_semiprime(&a) && !is_strongly_prime(&a));
        let w = strongly_prime_witness(&a).unwrap();
        assert_eq!(w.value().len(), 1);
        assert_eq!(w.evaluate(&a), *w.value());
    }

    #[test]
    fn almost_trivial_simple_group_is_prime() {
        let a = almost_trivial(&make_alternating(5).unwrap());
        assert!(is_semiprime(&a) && is_prime(&a));
        assert!(is_strongly_semiprime(&a) && is_strongly_prime(&a));
        let c = star_closure(&a, &[ElementSet::full(60)]);
        assert_eq!(c.reached.len(), 1);
    }

    #[test]
    fn almost_trivial_d8_center_witness() {
        let g = make_dihedral(8).unwrap();
        let a = almost_trivial(&g);
        assert!(!is_semiprime(&a));
        // D8 has several nonzero ideals with trivial self-commutator; the
        // center is one of them
        let z = g.center();
        assert_eq!(star_subgroup(&a, &z, &z).len(), 1);
        assert!(semiprime_witness(&a).is_some());
    }

    #[test]
    fn closure_of_almost_trivial_is_derived_series() {
        for g in [
            make_symmetric(4).unwrap(),
            make_dihedral(8).unwrap(),
            make_alternating(4).unwrap(),
        ] {
            let a = almost_trivial(&g);
            let c = star_closure(&a, &[ElementSet::full(g.order())]);
            let expected: BTreeSet<ElementSet> = g.derived_series().into_iter().collect();
            assert_eq!(c.reached, expected);
        }
    }

    #[test]
    fn brute_force_levels() {
        let g = make_symmetric(3).unwrap();
        let a = almost_trivial(&g);
        let ideals = nonzero_ideals(&a);
        let one = brute_force_products(&a, &ideals, 1).unwrap();
        assert_eq!(one, ideals.iter().cloned().collect());
        let closure = star_closure(&a, &ideals);
        let six = brute_force_products(&a, &ideals, 6).unwrap();
        assert!(six.is_subset(&closure.reached));
        assert_eq!(six.iter().any(|s| s.len() == 1), closure.contains_zero);
        assert!(matches!(
            brute_force_products(&a, &ideals, 9),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn report_is_consistent() {
        let a = trivial(&make_cyclic(5).unwrap());
        let r = primeness_report(&a);
        assert!(!r.semiprime && !r.prime && !r.strongly_semiprime && !r.strongly_prime);
        assert!(r.witness.is_some());
    }
}

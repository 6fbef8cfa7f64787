//! Left ideals, ideals, star products of subsets and quotient braces.

use serde::Serialize;

use crate::brace::{BraceMorphism, SkewBrace};
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// The four component checks that make up "ideal".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealWitness {
    pub subset: ElementSet,
    pub is_add_subgroup: bool,
    pub is_lambda_stable: bool,
    pub is_add_normal: bool,
    pub is_circ_normal: bool,
}

impl IdealWitness {
    pub fn is_ideal(&self) -> bool {
        self.is_add_subgroup && self.is_lambda_stable && self.is_add_normal && self.is_circ_normal
    }

    pub fn is_left_ideal(&self) -> bool {
        self.is_add_subgroup && self.is_lambda_stable
    }

    /// Name of the first failing check, if any.
    pub fn first_failure(&self) -> Option<&'static str> {
        [
            (self.is_add_subgroup, "additive subgroup"),
            (self.is_lambda_stable, "λ-stable"),
            (self.is_add_normal, "normal in (A,+)"),
            (self.is_circ_normal, "normal in (A,∘)"),
        ]
        .into_iter()
        .find_map(|(ok, name)| (!ok).then_some(name))
    }
}

fn is_lambda_stable(a: &SkewBrace, s: &ElementSet) -> bool {
    let members: Vec<usize> = s.iter().collect();
    (0..a.order()).all(|x| members.iter().all(|&y| s.contains(a.lambda(x, y))))
}

/// Additive subgroup with `λ_a(S) ⊆ S` for all `a`.
pub fn is_left_ideal(a: &SkewBrace, s: &ElementSet) -> bool {
    a.add_group().is_subgroup(s) && is_lambda_stable(a, s)
}

pub fn is_ideal(a: &SkewBrace, s: &ElementSet) -> IdealWitness {
    let add = a.add_group();
    let circ = a.circ_group();
    let is_add_subgroup = add.is_subgroup(s);
    IdealWitness {
        subset: s.clone(),
        is_add_subgroup,
        is_lambda_stable: s.carrier_order() == a.order() && is_lambda_stable(a, s),
        is_add_normal: is_add_subgroup && add.is_conjugation_invariant(s),
        is_circ_normal: circ.is_subgroup(s) && circ.is_conjugation_invariant(s),
    }
}

/// `X * Y`: the additive subgroup generated by all `x * y`.
pub fn star_subgroup(a: &SkewBrace, x: &ElementSet, y: &ElementSet) -> ElementSet {
    let ys: Vec<usize> = y.iter().collect();
    let products = ElementSet::from_indices(
        a.order(),
        x.iter()
            .flat_map(|u| ys.iter().map(move |&v| (u, v)))
            .map(|(u, v)| a.star(u, v)),
    );
    a.add_group().subgroup_generated(&products)
}

/// `A² = A * A`.
pub fn a_squared(a: &SkewBrace) -> ElementSet {
    let whole = ElementSet::full(a.order());
    let sq = star_subgroup(a, &whole, &whole);
    debug_assert!(is_ideal(a, &sq).is_ideal(), "A² must be an ideal");
    sq
}

/// `A²_op = A *op A`. Subgroups of `(A,+)` and its opposite coincide, so the
/// result is generated in `(A,+)`.
pub fn a_op_squared(a: &SkewBrace) -> ElementSet {
    let n = a.order();
    let products = ElementSet::from_indices(
        n,
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .map(|(x, y)| a.star_op(x, y)),
    );
    let sq = a.add_group().subgroup_generated(&products);
    debug_assert!(is_ideal(a, &sq).is_ideal(), "A²_op must be an ideal");
    sq
}

fn require_add_subgroup(a: &SkewBrace, s: &ElementSet) -> Result<()> {
    if a.add_group().is_subgroup(s) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{s:?} is not a subgroup of (A,+)"
        )))
    }
}

/// `S + T`, the additive subgroup generated by `S ∪ T`.
pub fn subgroup_sum(a: &SkewBrace, s: &ElementSet, t: &ElementSet) -> Result<ElementSet> {
    require_add_subgroup(a, s)?;
    require_add_subgroup(a, t)?;
    Ok(a.add_group().subgroup_generated(&s.union(t)))
}

pub fn subgroup_intersection(a: &SkewBrace, s: &ElementSet, t: &ElementSet) -> Result<ElementSet> {
    require_add_subgroup(a, s)?;
    require_add_subgroup(a, t)?;
    Ok(s.intersection(t))
}

/// `A / I` with its canonical projection. Cosets are numbered by increasing
/// minimal representative.
pub fn quotient_brace(a: &SkewBrace, i: &ElementSet) -> Result<(SkewBrace, BraceMorphism)> {
    let w = is_ideal(a, i);
    if let Some(failed) = w.first_failure() {
        return Err(Error::Precondition(format!(
            "{i:?} is not an ideal: not {failed}"
        )));
    }
    a.quotient_unchecked(i)
}

/// Every ideal, sorted by size then lexicographically. Normal subgroups of
/// `(A,+)` are enumerated first and then filtered.
pub fn all_ideals(a: &SkewBrace) -> Vec<ElementSet> {
    let circ = a.circ_group();
    a.add_group()
        .normal_subgroups()
        .into_iter()
        .filter(|s| {
            is_lambda_stable(a, s) && circ.is_subgroup(s) && circ.is_conjugation_invariant(s)
        })
        .collect()
}

/// Every sub-skew brace: subgroups of `(A,+)` closed under `∘`, in the order
/// returned by the subgroup enumeration.
pub fn all_sub_braces(a: &SkewBrace, limit: usize) -> Result<Vec<ElementSet>> {
    let circ = a.circ_group();
    Ok(a.add_group()
        .subgroups(limit)?
        .into_iter()
        .filter(|s| circ.is_subgroup(s))
        .collect())
}

/// Exactly two ideals. Rejects the one-element brace.
pub fn is_simple(a: &SkewBrace) -> Result<bool> {
    if a.order() == 1 {
        return Err(Error::Degenerate(
            "the one-element brace is not considered simple".into(),
        ));
    }
    Ok(all_ideals(a).len() == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{almost_trivial, semidirect_product, trivial};
    use crate::groups::*;

    fn sd_c2_c3() -> SkewBrace {
        let c2 = trivial(&make_cyclic(2).unwrap());
        let c3 = trivial(&make_cyclic(3).unwrap());
        semidirect_product(&c2, &c3, &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap()
    }

    #[test]
    fn trivial_and_whole_are_ideals() {
        let a = almost_trivial(&make_dihedral(8).unwrap());
        let zero = ElementSet::singleton(8, 0);
        let whole = ElementSet::full(8);
        assert!(is_left_ideal(&a, &zero));
        assert!(is_left_ideal(&a, &whole));
        assert!(is_ideal(&a, &zero).is_ideal());
        assert!(is_ideal(&a, &whole).is_ideal());
        let center = make_dihedral(8).unwrap().center();
        assert!(is_left_ideal(&a, &center));
    }

    #[test]
    fn c2_factor_of_semidirect_product() {
        let a = sd_c2_c3();
        // (1, 0) is index 3 under the pair encoding
        let w = is_ideal(&a, &ElementSet::from_indices(6, [0, 3]));
        assert!(w.is_add_subgroup && w.is_lambda_stable && w.is_add_normal);
        assert!(!w.is_circ_normal);
        assert!(w.is_left_ideal());
        assert_eq!(w.first_failure(), Some("normal in (A,∘)"));
        assert!(quotient_brace(&a, &w.subset).is_err());
    }

    #[test]
    fn star_subgroups() {
        let g = make_symmetric(3).unwrap();
        let op = almost_trivial(&g);
        let whole = ElementSet::full(6);
        let zero = ElementSet::singleton(6, 0);
        assert_eq!(star_subgroup(&op, &whole, &zero), zero);
        assert_eq!(star_subgroup(&op, &zero, &whole), zero);
        assert_eq!(star_subgroup(&op, &whole, &whole), g.commutator_subgroup());
        assert_eq!(a_squared(&trivial(&g)), zero);
        assert_eq!(a_op_squared(&trivial(&g)), g.commutator_subgroup());
        assert_eq!(a_squared(&op), g.commutator_subgroup());
        assert_eq!(a_op_squared(&op), zero);
    }

    #[test]
    fn sums_and_intersections() {
        let a = trivial(&make_cyclic(6).unwrap());
        let s = ElementSet::from_indices(6, [0, 2, 4]);
        let t = ElementSet::from_indices(6, [0, 3]);
        let zero = ElementSet::singleton(6, 0);
        assert_eq!(subgroup_sum(&a, &s, &zero).unwrap(), s);
        assert_eq!(subgroup_sum(&a, &s, &t).unwrap(), ElementSet::full(6));
        assert_eq!(
            subgroup_intersection(&a, &s, &ElementSet::full(6)).unwrap(),
            s
        );
        assert_eq!(subgroup_intersection(&a, &s, &t).unwrap(), zero);
        let not_sub = ElementSet::from_indices(6, [0, 1]);
        assert!(matches!(
            subgroup_sum(&a, &s, &not_sub),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn quotients() {
        let g = make_dihedral(8).unwrap();
        let a = almost_trivial(&g);
        let (q, proj) = quotient_brace(&a, &ElementSet::singleton(8, 0)).unwrap();
        assert_eq!(q, a);
        assert!(proj.is_bijective());
        let (q, _) = quotient_brace(&a, &ElementSet::full(8)).unwrap();
        assert_eq!(q.order(), 1);
        let (q, _) = quotient_brace(&a, &a_squared(&a)).unwrap();
        assert!(q.is_trivial());
    }

    #[test]
    fn ideal_enumeration() {
        for g in [
            make_dihedral(8).unwrap(),
            make_quaternion().unwrap(),
            make_alternating(4).unwrap(),
        ] {
            let normals = g.normal_subgroups();
            assert_eq!(all_ideals(&trivial(&g)), normals);
            assert_eq!(all_ideals(&almost_trivial(&g)), normals);
        }
        assert!(is_simple(&trivial(&make_cyclic(5).unwrap())).unwrap());
        assert!(!is_simple(&trivial(&make_cyclic(4).unwrap())).unwrap());
        assert!(matches!(
            is_simple(&trivial(&make_cyclic(1).unwrap())),
            Err(Error::Degenerate(_))
        ));
        assert!(is_simple(&almost_trivial(&make_alternating(5).unwrap())).unwrap());
    }
}

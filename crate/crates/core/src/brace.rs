//! Skew braces: two group structures on one carrier linked by
//! `a∘(b+c) = a∘b − a + a∘c`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{cosets, FiniteGroup};
use crate::iso::{self, Structure};
use crate::set::ElementSet;

/// Default bound on the order of braces whose axioms are checked.
pub const DEFAULT_ORDER_CAP: usize = 512;

#[derive(Clone, PartialEq, Eq)]
pub struct SkewBrace {
    add: FiniteGroup,
    circ: FiniteGroup,
}

impl std::fmt::Debug for SkewBrace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SkewBrace(order {})", self.order())
    }
}

/// Checks that `add` and `circ` share their identity and satisfy the left
/// brace identity on every triple.
pub fn validate_skew_brace(add: FiniteGroup, circ: FiniteGroup) -> Result<SkewBrace> {
    SkewBrace::with_order_cap(add, circ, DEFAULT_ORDER_CAP)
}

impl SkewBrace {
    pub fn new(add: FiniteGroup, circ: FiniteGroup) -> Result<Self> {
        Self::with_order_cap(add, circ, DEFAULT_ORDER_CAP)
    }

    pub fn with_order_cap(add: FiniteGroup, circ: FiniteGroup, cap: usize) -> Result<Self> {
        if add.order() != circ.order() {
            return Err(Error::InvalidArgument(format!(
                "additive group has order {} but multiplicative group has order {}",
                add.order(),
                circ.order()
            )));
        }
        if add.order() > cap {
            return Err(Error::Capacity(format!(
                "brace of order {} exceeds the order cap {cap}",
                add.order()
            )));
        }
        if add.identity() != circ.identity() {
            return Err(Error::Axiom {
                axiom: "shared identity".into(),
                witness: vec![add.identity(), circ.identity()],
            });
        }
        let brace = Self { add, circ };
        if let Some(w) = brace.left_brace_violation() {
            return Err(Error::Axiom {
                axiom: "a∘(b+c) = a∘b − a + a∘c".into(),
                witness: w.to_vec(),
            });
        }
        Ok(brace)
    }

    pub(crate) fn from_parts_unchecked(add: FiniteGroup, circ: FiniteGroup) -> Self {
        debug_assert_eq!(add.order(), circ.order());
        debug_assert_eq!(add.identity(), circ.identity());
        Self { add, circ }
    }

    /// Lexicographically least `(a, b, c)` violating the left brace identity.
    pub fn left_brace_violation(&self) -> Option<[usize; 3]> {
        let n = self.order();
        for a in 0..n {
            let na = self.neg(a);
            for b in 0..n {
                let ab_na = self.plus(self.circ(a, b), na);
                for c in 0..n {
                    if self.circ(a, self.plus(b, c)) != self.plus(ab_na, self.circ(a, c)) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn zero(&self) -> usize {
        self.add.identity()
    }

    pub fn add_group(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn circ_group(&self) -> &FiniteGroup {
        &self.circ
    }

    #[inline]
    pub fn plus(&self, a: usize, b: usize) -> usize {
        self.add.mul(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.add.inv(a)
    }

    /// `a − b = a + (−b)`
    #[inline]
    pub fn minus(&self, a: usize, b: usize) -> usize {
        self.plus(a, self.neg(b))
    }

    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.circ.mul(a, b)
    }

    /// Inverse in `(A,∘)`.
    #[inline]
    pub fn circ_inv(&self, a: usize) -> usize {
        self.circ.inv(a)
    }

    /// `λ_a(b) = −a + a∘b`
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.plus(self.neg(a), self.circ(a, b))
    }

    /// `λ^op_a(b) = a∘b − a`
    #[inline]
    pub fn lambda_op(&self, a: usize, b: usize) -> usize {
        self.minus(self.circ(a, b), a)
    }

    /// `a * b = λ_a(b) − b`
    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.minus(self.lambda(a, b), b)
    }

    /// `a *op b = −b + a∘b − a`
    #[inline]
    pub fn star_op(&self, a: usize, b: usize) -> usize {
        self.minus(self.plus(self.neg(b), self.circ(a, b)), a)
    }

    /// Same `∘`, additive group replaced by its opposite.
    pub fn opposite(&self) -> Self {
        Self {
            add: self.add.opposite(),
            circ: self.circ.clone(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.add == self.circ
    }

    /// Lexicographically least `(a, b, c)` violating
    /// `(a+b)∘c = a∘c − c + b∘c`, or `None` if the brace is two-sided.
    pub fn two_sided_violation(&self) -> Option<[usize; 3]> {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                let ab = self.plus(a, b);
                for c in 0..n {
                    let rhs = self.plus(self.minus(self.circ(a, c), c), self.circ(b, c));
                    if self.circ(ab, c) != rhs {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    pub fn is_two_sided(&self) -> bool {
        self.two_sided_violation().is_none()
    }

    /// Least `(g, x, y)` such that conjugation by `g` in `(A,∘)` fails to
    /// preserve `x + y`.
    pub fn inner_automorphism_violation(&self) -> Option<[usize; 3]> {
        let n = self.order();
        for g in 0..n {
            let conj: Vec<usize> = (0..n).map(|x| self.circ.conj(g, x)).collect();
            for x in 0..n {
                for y in 0..n {
                    if conj[self.plus(x, y)] != self.plus(conj[x], conj[y]) {
                        return Some([g, x, y]);
                    }
                }
            }
        }
        None
    }

    /// Two-sidedness decided by checking that every inner automorphism of
    /// `(A,∘)` is additive, hence a brace automorphism.
    pub fn is_two_sided_via_inner(&self) -> bool {
        self.inner_automorphism_violation().is_none()
    }

    /// True iff `s` is closed under both operations (and so is a sub-brace).
    pub fn is_sub_brace(&self, s: &ElementSet) -> bool {
        self.add.is_subgroup(s) && self.circ.is_subgroup(s)
    }

    /// A sub-brace as a brace in its own right, with its inclusion map.
    /// Elements are relabelled in increasing order.
    pub fn substructure(&self, s: &ElementSet) -> Result<(SkewBrace, BraceMorphism)> {
        if !self.is_sub_brace(s) {
            return Err(Error::Precondition(format!(
                "{s:?} is not a sub-skew brace"
            )));
        }
        let (add, elems) = self.add.restrict(s)?;
        let (circ, _) = self.circ.restrict(s)?;
        let inclusion = BraceMorphism {
            domain_order: elems.len(),
            codomain_order: self.order(),
            map: elems,
        };
        Ok((Self::from_parts_unchecked(add, circ), inclusion))
    }

    /// Coset brace `A / I` with its projection. No ideal check; callers go
    /// through [`crate::ideals::quotient_brace`].
    pub(crate) fn quotient_unchecked(
        &self,
        ideal: &ElementSet,
    ) -> Result<(SkewBrace, BraceMorphism)> {
        let (reps, proj) = cosets(self.order(), ideal, |a, b| self.plus(a, b));
        let q = reps.len();
        let mut add = vec![0; q * q];
        let mut circ = vec![0; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                add[i * q + j] = proj[self.plus(a, b)];
                circ[i * q + j] = proj[self.circ(a, b)];
            }
        }
        let bad = || Error::Internal("quotient tables do not form groups".into());
        let add = FiniteGroup::from_flat_unchecked(q, add).ok_or_else(bad)?;
        let circ = FiniteGroup::from_flat_unchecked(q, circ).ok_or_else(bad)?;
        let brace =
            Self::new(add, circ).map_err(|e| Error::Internal(format!("quotient brace: {e}")))?;
        let hom = BraceMorphism {
            domain_order: self.order(),
            codomain_order: q,
            map: proj,
        };
        Ok((brace, hom))
    }

    fn structure<'a>(&self, ops: &'a [&'a [usize]]) -> Structure<'a> {
        Structure {
            order: self.order(),
            identity: self.zero(),
            ops,
        }
    }

    /// Backtracking search for a brace isomorphism `self -> other`.
    pub fn find_isomorphism(&self, other: &SkewBrace) -> Result<Option<BraceMorphism>> {
        let n = self.order().max(other.order());
        if n > crate::group::ISO_ORDER_CAP {
            return Err(Error::Capacity(format!(
                "brace isomorphism search is capped at order {}, got {n}",
                crate::group::ISO_ORDER_CAP
            )));
        }
        let a = [self.add.flat_table(), self.circ.flat_table()];
        let b = [other.add.flat_table(), other.circ.flat_table()];
        Ok(
            iso::find_isomorphism(self.structure(&a), other.structure(&b)).map(|map| {
                BraceMorphism {
                    domain_order: self.order(),
                    codomain_order: other.order(),
                    map,
                }
            }),
        )
    }

    /// All brace isomorphisms `self -> other`, capacity error past `limit`.
    pub fn isomorphisms(&self, other: &SkewBrace, limit: usize) -> Result<Vec<BraceMorphism>> {
        let a = [self.add.flat_table(), self.circ.flat_table()];
        let b = [other.add.flat_table(), other.circ.flat_table()];
        Ok(
            iso::all_isomorphisms(self.structure(&a), other.structure(&b), limit)?
                .into_iter()
                .map(|map| BraceMorphism {
                    domain_order: self.order(),
                    codomain_order: other.order(),
                    map,
                })
                .collect(),
        )
    }

    pub fn to_file(&self) -> BraceFile {
        BraceFile {
            order: self.order(),
            add: self.add.rows(),
            circ: self.circ.rows(),
        }
    }
}

/// `Triv(G)`: both operations are the group operation.
pub fn trivial(g: &FiniteGroup) -> SkewBrace {
    SkewBrace::from_parts_unchecked(g.clone(), g.clone())
}

/// `opTriv(G)`, the opposite of the trivial brace.
pub fn almost_trivial(g: &FiniteGroup) -> SkewBrace {
    trivial(g).opposite()
}

/// `A × B` with pair encoding `(i, j) -> i * |B| + j`.
pub fn direct_product(a: &SkewBrace, b: &SkewBrace) -> SkewBrace {
    SkewBrace::from_parts_unchecked(a.add.direct_product(&b.add), a.circ.direct_product(&b.circ))
}

/// `A ⋉ B` on pairs encoded as in [`direct_product`]:
/// `(a,b) + (a',b') = (a+a', b+b')` and `(a,b)∘(a',b') = (a∘a', b∘σ_a(b'))`.
///
/// `action[a]` is the permutation `σ_a` of `B`; it must be a brace
/// automorphism of `B`, and `a -> σ_a` a homomorphism from `(A,∘)`.
pub fn semidirect_product(
    a: &SkewBrace,
    b: &SkewBrace,
    action: &[Vec<usize>],
) -> Result<SkewBrace> {
    let (n, m) = (a.order(), b.order());
    if action.len() != n {
        return Err(Error::Precondition(format!(
            "action has {} entries for a brace of order {n}",
            action.len()
        )));
    }
    for (x, sigma) in action.iter().enumerate() {
        BraceMorphism::new(b, b, sigma.clone())
            .ok()
            .filter(BraceMorphism::is_bijective)
            .ok_or_else(|| {
                Error::Precondition(format!("action of {x} is not a brace automorphism"))
            })?;
    }
    for x in 0..n {
        for y in 0..n {
            let xy = a.circ(x, y);
            if (0..m).any(|z| action[xy][z] != action[x][action[y][z]]) {
                return Err(Error::Precondition(format!(
                    "action is not multiplicative at ({x}, {y})"
                )));
            }
        }
    }
    let size = n * m;
    let mut add = Vec::with_capacity(size * size);
    let mut circ = Vec::with_capacity(size * size);
    for p in 0..size {
        let (x, u) = (p / m, p % m);
        for q in 0..size {
            let (y, v) = (q / m, q % m);
            add.push(a.plus(x, y) * m + b.plus(u, v));
            circ.push(a.circ(x, y) * m + b.circ(u, action[x][v]));
        }
    }
    let add = FiniteGroup::from_flat(size, add)?;
    let circ = FiniteGroup::from_flat(size, circ)?;
    SkewBrace::new(add, circ)
}

/// Brace from an exact factorization `G = BC`: `a + a' = a a'` and
/// `a∘a' = b a' c` where `a = b c` with `b ∈ B`, `c ∈ C`.
pub fn from_exact_factorization(
    g: &FiniteGroup,
    b: &ElementSet,
    c: &ElementSet,
) -> Result<SkewBrace> {
    if !g.is_subgroup(b) || !g.is_subgroup(c) {
        return Err(Error::Precondition("factors must be subgroups".into()));
    }
    if b.intersection(c).len() != 1 || b.len() * c.len() != g.order() {
        return Err(Error::Precondition(format!(
            "not an exact factorization: |B| = {}, |C| = {}, |B ∩ C| = {}, |G| = {}",
            b.len(),
            c.len(),
            b.intersection(c).len(),
            g.order()
        )));
    }
    let n = g.order();
    let mut factor = vec![(0, 0); n];
    for x in b.iter() {
        for y in c.iter() {
            factor[g.mul(x, y)] = (x, y);
        }
    }
    let mut circ = Vec::with_capacity(n * n);
    for &(bx, cx) in &factor {
        for y in 0..n {
            circ.push(g.mul(g.mul(bx, y), cx));
        }
    }
    let circ = FiniteGroup::from_flat(n, circ)?;
    SkewBrace::new(g.clone(), circ)
}

/// A map between braces preserving both operations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraceMorphism {
    domain_order: usize,
    codomain_order: usize,
    map: Vec<usize>,
}

impl BraceMorphism {
    pub fn new(domain: &SkewBrace, codomain: &SkewBrace, map: Vec<usize>) -> Result<Self> {
        if map.len() != domain.order() || map.iter().any(|&y| y >= codomain.order()) {
            return Err(Error::NotAHomomorphism(
                "map does not fit domain and codomain".into(),
            ));
        }
        let n = domain.order();
        for x in 0..n {
            for y in 0..n {
                if map[domain.plus(x, y)] != codomain.plus(map[x], map[y]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "f({x} + {y}) != f({x}) + f({y})"
                    )));
                }
                if map[domain.circ(x, y)] != codomain.circ(map[x], map[y]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "f({x} ∘ {y}) != f({x}) ∘ f({y})"
                    )));
                }
            }
        }
        Ok(Self {
            domain_order: n,
            codomain_order: codomain.order(),
            map,
        })
    }

    pub(crate) fn from_parts_unchecked(
        domain_order: usize,
        codomain_order: usize,
        map: Vec<usize>,
    ) -> Self {
        Self {
            domain_order,
            codomain_order,
            map,
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_parts_unchecked(order, order, (0..order).collect())
    }

    pub fn domain_order(&self) -> usize {
        self.domain_order
    }

    pub fn codomain_order(&self) -> usize {
        self.codomain_order
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn image(&self) -> ElementSet {
        ElementSet::from_indices(self.codomain_order, self.map.iter().copied())
    }

    pub fn kernel(&self, codomain_zero: usize) -> ElementSet {
        ElementSet::from_indices(
            self.domain_order,
            (0..self.domain_order).filter(|&x| self.map[x] == codomain_zero),
        )
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.domain_order
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.codomain_order
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// `other ∘ self`
    pub fn then(&self, other: &BraceMorphism) -> Self {
        assert_eq!(self.codomain_order, other.domain_order);
        Self::from_parts_unchecked(
            self.domain_order,
            other.codomain_order,
            self.map.iter().map(|&y| other.map[y]).collect(),
        )
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.codomain_order];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(Self::from_parts_unchecked(
            self.codomain_order,
            self.domain_order,
            inv,
        ))
    }
}

/// On-disk brace format.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BraceFile {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub circ: Vec<Vec<usize>>,
}

impl BraceFile {
    pub fn into_brace(self, cap: usize) -> Result<SkewBrace> {
        if self.add.len() != self.order || self.circ.len() != self.order {
            return Err(Error::InvalidArgument(format!(
                "declared order {} does not match the tables",
                self.order
            )));
        }
        if self.order > cap {
            return Err(Error::Capacity(format!(
                "brace of order {} exceeds the order cap {cap}",
                self.order
            )));
        }
        let add = FiniteGroup::from_table(self.add)?;
        let circ = FiniteGroup::from_table(self.circ)?;
        SkewBrace::with_order_cap(add, circ, cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::*;

    #[test]
    fn trivial_brace_is_valid_and_two_sided() {
        let c4 = make_cyclic(4).unwrap();
        let t = validate_skew_brace(c4.clone(), c4.clone()).unwrap();
        assert!(t.is_two_sided());
        let d8 = make_dihedral(8).unwrap();
        let t = trivial(&d8);
        assert!(SkewBrace::new(t.add_group().clone(), t.circ_group().clone()).is_ok());
        assert!(t.is_two_sided());
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(t.star(a, b), 0);
                assert_eq!(t.lambda(a, b), b);
            }
        }
    }

    #[test]
    fn incompatible_tables_give_least_witness() {
        let c6 = make_cyclic(6).unwrap();
        let base = make_symmetric(3).unwrap();
        // relabel S3 until the tables stop being compatible
        let mut found = None;
        for p in permutations_fixing_zero(6) {
            let mut rows = vec![vec![0; 6]; 6];
            for a in 0..6 {
                for b in 0..6 {
                    rows[p[a]][p[b]] = p[base.mul(a, b)];
                }
            }
            let s3 = FiniteGroup::from_table(rows).unwrap();
            if let Err(e) = validate_skew_brace(c6.clone(), s3.clone()) {
                found = Some((s3, e));
                break;
            }
        }
        let (s3, err) = found.unwrap();
        let mut least = None;
        'outer: for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    let lhs = s3.mul(a, c6.mul(b, c));
                    let rhs = c6.mul(c6.mul(s3.mul(a, b), c6.inv(a)), s3.mul(a, c));
                    if lhs != rhs {
                        least = Some(vec![a, b, c]);
                        break 'outer;
                    }
                }
            }
        }
        assert_eq!(
            err,
            Error::Axiom {
                axiom: "a∘(b+c) = a∘b − a + a∘c".into(),
                witness: least.unwrap()
            }
        );
    }

    fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![0]];
        for _ in 1..n {
            out = out
                .into_iter()
                .flat_map(|p| {
                    let free: Vec<usize> = (1..n).filter(|x| !p.contains(x)).collect();
                    free.into_iter().map(move |x| [p.clone(), vec![x]].concat())
                })
                .collect();
        }
        out
    }

    #[test]
    fn identity_mismatch_is_reported() {
        let c2 = make_cyclic(2).unwrap();
        let swapped = FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]]).unwrap();
        let err = validate_skew_brace(c2, swapped).unwrap_err();
        assert_eq!(
            err,
            Error::Axiom {
                axiom: "shared identity".into(),
                witness: vec![0, 1]
            }
        );
    }

    #[test]
    fn opposite_is_involution_and_gives_optriv_star() {
        let d8 = make_dihedral(8).unwrap();
        let t = trivial(&d8);
        assert_eq!(t.opposite().opposite(), t);
        let op = almost_trivial(&d8);
        for g in 0..8 {
            for h in 0..8 {
                // g*h = h^-1 g h g^-1
                let expected = d8.mul(d8.mul(d8.mul(d8.inv(h), g), h), d8.inv(g));
                assert_eq!(op.star(g, h), expected);
                assert_eq!(op.lambda_op(g, h), h);
                assert_eq!(op.lambda(g, h), d8.conj(g, h));
                assert_eq!(op.star_op(g, h), op.opposite().star(g, h));
            }
        }
        let c6 = make_cyclic(6).unwrap();
        assert_eq!(almost_trivial(&c6), trivial(&c6));
    }

    #[test]
    fn star_vanishes_on_zero() {
        let b = almost_trivial(&make_symmetric(3).unwrap());
        for a in 0..6 {
            assert_eq!(b.star(a, 0), 0);
            assert_eq!(b.star(0, a), 0);
            assert_eq!(b.lambda(0, a), a);
        }
    }

    fn inversion_c2_c3() -> SkewBrace {
        let c2 = trivial(&make_cyclic(2).unwrap());
        let c3 = trivial(&make_cyclic(3).unwrap());
        semidirect_product(&c2, &c3, &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap()
    }

    #[test]
    fn semidirect_c2_c3() {
        let a = inversion_c2_c3();
        assert_eq!(a.order(), 6);
        assert!(a
            .add_group()
            .find_isomorphism(&make_cyclic(6).unwrap())
            .unwrap()
            .is_some());
        assert!(a
            .circ_group()
            .find_isomorphism(&make_dihedral(6).unwrap())
            .unwrap()
            .is_some());
        assert!(!a.is_two_sided());
        assert!(!a.is_two_sided_via_inner());
        assert!(a.two_sided_violation().is_some());
        let c2 = trivial(&make_cyclic(2).unwrap());
        let c3 = trivial(&make_cyclic(3).unwrap());
        let id = semidirect_product(&c2, &c3, &[vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        assert_eq!(id, direct_product(&c2, &c3));
        let bad = semidirect_product(&c2, &c3, &[vec![0, 1, 2], vec![1, 0, 2]]);
        assert!(matches!(bad, Err(Error::Precondition(_))));
    }

    #[test]
    fn exact_factorizations() {
        let d6 = make_dihedral(6).unwrap();
        let rot = ElementSet::from_indices(6, [0, 1, 2]);
        let refl = ElementSet::from_indices(6, [0, 3]);
        let e = d6.trivial_subgroup();
        let b = from_exact_factorization(&d6, &rot, &refl).unwrap();
        assert_eq!(b.order(), 6);
        assert_eq!(
            from_exact_factorization(&d6, &d6.whole(), &e).unwrap(),
            trivial(&d6)
        );
        let flipped = from_exact_factorization(&d6, &e, &d6.whole()).unwrap();
        assert_eq!(flipped.circ_group(), &d6.opposite());
        assert!(from_exact_factorization(&d6, &rot, &rot).is_err());
    }

    #[test]
    fn direct_product_with_trivial_group() {
        let a = almost_trivial(&make_symmetric(3).unwrap());
        let one = trivial(&make_cyclic(1).unwrap());
        let p = direct_product(&a, &one);
        assert_eq!(p, a);
    }

    #[test]
    fn two_sided_equivalence_on_small_braces() {
        let braces = [
            trivial(&make_cyclic(2).unwrap()),
            almost_trivial(&make_quaternion().unwrap()),
            inversion_c2_c3(),
            from_exact_factorization(
                &make_dihedral(8).unwrap(),
                &ElementSet::from_indices(8, [0, 1, 2, 3]),
                &ElementSet::from_indices(8, [0, 4]),
            )
            .unwrap(),
        ];
        for b in &braces {
            assert_eq!(b.is_two_sided(), b.is_two_sided_via_inner());
        }
        assert!(braces[0].is_two_sided());
    }
}

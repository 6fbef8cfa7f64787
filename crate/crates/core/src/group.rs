//! Finite groups given by Cayley tables.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::iso::{self, Structure};
use crate::set::ElementSet;

/// Default order bound for isomorphism searches.
pub const ISO_ORDER_CAP: usize = 200;

/// A finite group on the carrier `0..order`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table, checking the Latin
    /// square property, the identity, inverses and associativity.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidOrder {
                order,
                reason: "a group has at least one element".into(),
            });
        }
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotAGroup(format!(
                    "row {i} has length {} instead of {order}",
                    row.len()
                )));
            }
            table.extend(row);
        }
        Self::from_flat(order, table)
    }

    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 || table.len() != order * order {
            return Err(Error::NotAGroup(format!(
                "table of size {} does not match order {order}",
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::NotAGroup(format!("entry {bad} outside 0..{order}")));
        }
        let g = Self::from_flat_unchecked(order, table)
            .ok_or_else(|| Error::NotAGroup("no two-sided identity or missing inverses".into()))?;
        g.verify()?;
        Ok(g)
    }

    /// Derives identity and inverses without checking the group axioms.
    /// Returns `None` if there is no identity or some element lacks an inverse.
    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<usize>) -> Option<Self> {
        let identity = (0..order).find(|&e| {
            (0..order).all(|x| table[e * order + x] == x && table[x * order + e] == x)
        })?;
        let mut inverses = vec![usize::MAX; order];
        for x in 0..order {
            inverses[x] = (0..order).find(|&y| table[x * order + y] == identity)?;
        }
        Some(Self {
            order,
            table,
            identity,
            inverses,
        })
    }

    /// Full check of the group axioms: Latin square, identity, inverses and
    /// associativity over all triples.
    pub fn verify(&self) -> Result<()> {
        let n = self.order;
        let mut seen = vec![usize::MAX; n];
        for x in 0..n {
            for y in 0..n {
                let v = self.mul(x, y);
                if seen[v] == x {
                    return Err(Error::NotAGroup(format!("row {x} repeats entry {v}")));
                }
                seen[v] = x;
            }
        }
        let mut seen = vec![usize::MAX; n];
        for y in 0..n {
            for x in 0..n {
                let v = self.mul(x, y);
                if seen[v] == y {
                    return Err(Error::NotAGroup(format!("column {y} repeats entry {v}")));
                }
                seen[v] = y;
            }
        }
        for x in 0..n {
            if self.mul(self.identity, x) != x || self.mul(x, self.identity) != x {
                return Err(Error::NotAGroup(format!(
                    "{} is not an identity",
                    self.identity
                )));
            }
            if self.mul(x, self.inverses[x]) != self.identity {
                return Err(Error::NotAGroup(format!("bad inverse for {x}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    pub(crate) fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `g x g^-1`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a^-1 b^-1 a b`
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut n = 1;
        while y != self.identity {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The opposite group, `x *op y = y * x`.
    pub fn opposite(&self) -> Self {
        let n = self.order;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = self.mul(y, x);
            }
        }
        Self {
            order: n,
            table,
            identity: self.identity,
            inverses: self.inverses.clone(),
        }
    }

    /// Direct product with pair encoding `(i, j) -> i * |other| + j`.
    pub fn direct_product(&self, other: &Self) -> Self {
        let m = other.order;
        let n = self.order * m;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (a, b) = (x / m, x % m);
                let (c, d) = (y / m, y % m);
                table[x * n + y] = self.mul(a, c) * m + other.mul(b, d);
            }
        }
        let inverses = (0..n)
            .map(|x| self.inv(x / m) * m + other.inv(x % m))
            .collect();
        Self {
            order: n,
            table,
            identity: self.identity * m + other.identity,
            inverses,
        }
    }

    pub fn trivial_subgroup(&self) -> ElementSet {
        ElementSet::singleton(self.order, self.identity)
    }

    pub fn whole(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    /// Smallest subgroup containing `s`.
    pub fn subgroup_generated(&self, s: &ElementSet) -> ElementSet {
        self.generated_by(s.iter())
    }

    /// Closure of `{e}` under right multiplication by a greedily thinned
    /// generating sequence drawn from `items`.
    pub(crate) fn generated_by(&self, items: impl Iterator<Item = usize>) -> ElementSet {
        let mut members = self.trivial_subgroup();
        let mut gens: Vec<usize> = Vec::new();
        for s in items {
            if members.contains(s) {
                continue;
            }
            gens.push(s);
            let mut queue: Vec<usize> = members.iter().collect();
            let mut i = 0;
            while i < queue.len() {
                let x = queue[i];
                i += 1;
                for &g in &gens {
                    let y = self.mul(x, g);
                    if members.insert(y) {
                        queue.push(y);
                    }
                }
            }
        }
        members
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        if s.carrier_order() != self.order || !s.contains(self.identity) {
            return false;
        }
        let members: Vec<usize> = s.iter().collect();
        members
            .iter()
            .all(|&x| members.iter().all(|&y| s.contains(self.mul(x, y))))
    }

    pub fn is_normal(&self, s: &ElementSet) -> Result<bool> {
        if !self.is_subgroup(s) {
            return Err(Error::Precondition(format!("{s:?} is not a subgroup")));
        }
        Ok(self.is_conjugation_invariant(s))
    }

    pub(crate) fn is_conjugation_invariant(&self, s: &ElementSet) -> bool {
        let members: Vec<usize> = s.iter().collect();
        (0..self.order).all(|g| members.iter().all(|&x| s.contains(self.conj(g, x))))
    }

    pub fn conjugacy_classes(&self) -> Vec<ElementSet> {
        let mut seen = ElementSet::empty(self.order);
        let mut classes = Vec::new();
        for x in 0..self.order {
            if seen.contains(x) {
                continue;
            }
            let class =
                ElementSet::from_indices(self.order, (0..self.order).map(|g| self.conj(g, x)));
            seen = seen.union(&class);
            classes.push(class);
        }
        classes
    }

    /// All normal subgroups, obtained by closing joins of conjugacy classes.
    /// Sorted by size, then lexicographically.
    pub fn normal_subgroups(&self) -> Vec<ElementSet> {
        let closures: Vec<ElementSet> = self
            .conjugacy_classes()
            .iter()
            .map(|c| self.subgroup_generated(c))
            .collect();
        let mut found: BTreeSet<ElementSet> = BTreeSet::new();
        let mut work = vec![self.trivial_subgroup()];
        found.insert(self.trivial_subgroup());
        while let Some(n) = work.pop() {
            for c in &closures {
                if c.is_subset(&n) {
                    continue;
                }
                let m = self.subgroup_generated(&n.union(c));
                if found.insert(m.clone()) {
                    work.push(m);
                }
            }
        }
        found.into_iter().collect()
    }

    /// All subgroups, by repeatedly joining cyclic subgroups. Sorted by size,
    /// then lexicographically. Fails past `limit` subgroups.
    pub fn subgroups(&self, limit: usize) -> Result<Vec<ElementSet>> {
        let mut cyclic: BTreeSet<ElementSet> = BTreeSet::new();
        for x in 0..self.order {
            cyclic.insert(self.subgroup_generated(&ElementSet::singleton(self.order, x)));
        }
        let cyclic: Vec<ElementSet> = cyclic.into_iter().collect();
        let mut found: BTreeSet<ElementSet> = cyclic.iter().cloned().collect();
        let mut work: Vec<ElementSet> = cyclic.clone();
        while let Some(h) = work.pop() {
            for c in &cyclic {
                if c.is_subset(&h) {
                    continue;
                }
                let k = self.subgroup_generated(&h.union(c));
                if found.insert(k.clone()) {
                    if found.len() > limit {
                        return Err(Error::Capacity(format!(
                            "more than {limit} subgroups in a group of order {}",
                            self.order
                        )));
                    }
                    work.push(k);
                }
            }
        }
        Ok(found.into_iter().collect())
    }

    pub fn center(&self) -> ElementSet {
        ElementSet::from_indices(
            self.order,
            (0..self.order).filter(|&g| (0..self.order).all(|x| self.mul(g, x) == self.mul(x, g))),
        )
    }

    /// `[H, K]`, generated by all commutators of elements of `h` and `k`.
    pub fn commutator_of(&self, h: &ElementSet, k: &ElementSet) -> ElementSet {
        let ks: Vec<usize> = k.iter().collect();
        let comms = h.iter().flat_map(|a| ks.iter().map(move |&b| (a, b)));
        let set = ElementSet::from_indices(self.order, comms.map(|(a, b)| self.commutator(a, b)));
        self.subgroup_generated(&set)
    }

    pub fn commutator_subgroup(&self) -> ElementSet {
        self.commutator_of(&self.whole(), &self.whole())
    }

    /// Coset group `G/N`. Cosets are numbered by increasing minimal
    /// representative; the projection sends each element to its coset.
    pub fn quotient(&self, n: &ElementSet) -> Result<(FiniteGroup, GroupHom)> {
        if !self.is_normal(n)? {
            return Err(Error::Precondition(format!(
                "{n:?} is not a normal subgroup"
            )));
        }
        let (reps, proj) = cosets(self.order, n, |a, b| self.mul(a, b));
        let q = reps.len();
        let mut table = vec![0; q * q];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * q + j] = proj[self.mul(a, b)];
            }
        }
        let group = FiniteGroup::from_flat_unchecked(q, table)
            .ok_or_else(|| Error::Internal("quotient table is not a group".into()))?;
        let hom = GroupHom {
            domain_order: self.order,
            codomain_order: q,
            map: proj,
        };
        Ok((group, hom))
    }

    /// `Ab(G) = G/[G,G]` with its canonical projection.
    pub fn abelianization(&self) -> (FiniteGroup, GroupHom) {
        self.quotient(&self.commutator_subgroup())
            .expect("the commutator subgroup is normal")
    }

    pub fn derived_series(&self) -> Vec<ElementSet> {
        let mut terms = vec![self.whole()];
        loop {
            let last = terms.last().unwrap();
            let next = self.commutator_of(last, last);
            if &next == last {
                break;
            }
            terms.push(next);
        }
        terms
    }

    pub fn lower_central_series(&self) -> Vec<ElementSet> {
        let mut terms = vec![self.whole()];
        loop {
            let last = terms.last().unwrap();
            let next = self.commutator_of(last, &self.whole());
            if &next == last {
                break;
            }
            terms.push(next);
        }
        terms
    }

    /// Number of steps for the derived series to reach the trivial group,
    /// or `None` if the group is not soluble.
    pub fn derived_length(&self) -> Option<usize> {
        let s = self.derived_series();
        (s.last().unwrap().len() == 1).then(|| s.len() - 1)
    }

    /// Nilpotency class, or `None` if the group is not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let s = self.lower_central_series();
        (s.last().unwrap().len() == 1).then(|| s.len() - 1)
    }

    /// A subgroup as a group in its own right. Elements are relabelled in
    /// increasing order; the returned vector maps new labels to old ones.
    pub fn restrict(&self, s: &ElementSet) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(s) {
            return Err(Error::Precondition(format!("{s:?} is not a subgroup")));
        }
        let elems = s.to_vec();
        let mut index = vec![usize::MAX; self.order];
        for (i, &x) in elems.iter().enumerate() {
            index[x] = i;
        }
        let m = elems.len();
        let mut table = vec![0; m * m];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                table[i * m + j] = index[self.mul(a, b)];
            }
        }
        let g = FiniteGroup::from_flat_unchecked(m, table)
            .ok_or_else(|| Error::Internal("restricted table is not a group".into()))?;
        Ok((g, elems))
    }

    fn structure<'a>(&'a self, ops: &'a [&'a [usize]]) -> Structure<'a> {
        Structure {
            order: self.order,
            identity: self.identity,
            ops,
        }
    }

    /// Backtracking search for an isomorphism `self -> other`.
    pub fn find_isomorphism(&self, other: &FiniteGroup) -> Result<Option<GroupHom>> {
        self.check_iso_cap(other)?;
        let a = [self.flat_table()];
        let b = [other.flat_table()];
        Ok(
            iso::find_isomorphism(self.structure(&a), other.structure(&b)).map(|map| GroupHom {
                domain_order: self.order,
                codomain_order: other.order,
                map,
            }),
        )
    }

    /// Every isomorphism `self -> other`; capacity error past `limit`.
    pub fn isomorphisms(&self, other: &FiniteGroup, limit: usize) -> Result<Vec<GroupHom>> {
        self.check_iso_cap(other)?;
        let a = [self.flat_table()];
        let b = [other.flat_table()];
        Ok(
            iso::all_isomorphisms(self.structure(&a), other.structure(&b), limit)?
                .into_iter()
                .map(|map| GroupHom {
                    domain_order: self.order,
                    codomain_order: other.order,
                    map,
                })
                .collect(),
        )
    }

    pub fn automorphisms(&self, limit: usize) -> Result<Vec<GroupHom>> {
        self.isomorphisms(self, limit)
    }

    fn check_iso_cap(&self, other: &FiniteGroup) -> Result<()> {
        let n = self.order.max(other.order);
        if n > ISO_ORDER_CAP {
            return Err(Error::Capacity(format!(
                "isomorphism search is capped at order {ISO_ORDER_CAP}, got {n}"
            )));
        }
        Ok(())
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile {
            order: self.order,
            table: self.rows(),
            labels: None,
        }
    }
}

/// Partition of `0..order` into cosets `x N` under `mul`; returns the
/// minimal representatives in increasing order and the coset index of each
/// element. `n` must be a subgroup for the result to be meaningful.
pub(crate) fn cosets(
    order: usize,
    n: &ElementSet,
    mul: impl Fn(usize, usize) -> usize,
) -> (Vec<usize>, Vec<usize>) {
    let mut proj = vec![usize::MAX; order];
    let mut reps = Vec::new();
    let members: Vec<usize> = n.iter().collect();
    for x in 0..order {
        if proj[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &m in &members {
            proj[mul(x, m)] = id;
        }
    }
    (reps, proj)
}

/// A homomorphism between finite groups, as an index map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupHom {
    domain_order: usize,
    codomain_order: usize,
    map: Vec<usize>,
}

impl GroupHom {
    /// Checks `map[x y] = map[x] map[y]` for all pairs.
    pub fn new(domain: &FiniteGroup, codomain: &FiniteGroup, map: Vec<usize>) -> Result<Self> {
        if map.len() != domain.order() {
            return Err(Error::NotAHomomorphism(format!(
                "map has length {} but the domain has order {}",
                map.len(),
                domain.order()
            )));
        }
        if map.iter().any(|&y| y >= codomain.order()) {
            return Err(Error::NotAHomomorphism("image outside the codomain".into()));
        }
        for x in domain.elements() {
            for y in domain.elements() {
                if map[domain.mul(x, y)] != codomain.mul(map[x], map[y]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "f({x} * {y}) != f({x}) * f({y})"
                    )));
                }
            }
        }
        Ok(Self {
            domain_order: domain.order(),
            codomain_order: codomain.order(),
            map,
        })
    }

    pub fn identity(order: usize) -> Self {
        Self {
            domain_order: order,
            codomain_order: order,
            map: (0..order).collect(),
        }
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

    pub fn is_bijective(&self) -> bool {
        self.domain_order == self.codomain_order
            && ElementSet::from_indices(self.codomain_order, self.map.iter().copied()).len()
                == self.codomain_order
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.codomain_order];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(Self {
            domain_order: self.codomain_order,
            codomain_order: self.domain_order,
            map: inv,
        })
    }

    /// `other ∘ self`
    pub fn then(&self, other: &GroupHom) -> Self {
        assert_eq!(self.codomain_order, other.domain_order);
        Self {
            domain_order: self.domain_order,
            codomain_order: other.codomain_order,
            map: self.map.iter().map(|&y| other.map[y]).collect(),
        }
    }

    pub fn kernel(&self, codomain_identity: usize) -> ElementSet {
        ElementSet::from_indices(
            self.domain_order,
            (0..self.domain_order).filter(|&x| self.map[x] == codomain_identity),
        )
    }
}

/// On-disk group format.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GroupFile {
    pub fn into_group(self) -> Result<FiniteGroup> {
        if self.table.len() != self.order {
            return Err(Error::NotAGroup(format!(
                "declared order {} but table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.order {
                return Err(Error::InvalidArgument(format!(
                    "{} labels for a group of order {}",
                    labels.len(),
                    self.order
                )));
            }
        }
        FiniteGroup::from_table(self.table)
    }
}

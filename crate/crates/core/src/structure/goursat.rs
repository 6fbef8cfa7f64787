//! Pullbacks of braces and the Goursat correspondence between subdirect
//! products of `A × B` and triples `(I, J, ρ: A/I ≅ B/J)`.

use crate::brace::{BraceMorphism, SkewBrace};
use crate::error::{Error, Result};
use crate::ideals::quotient_brace;
use crate::set::ElementSet;

/// `A ×_C B = {(a, b) | f(a) = g(b)}` with its two projections.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub brace: SkewBrace,
    pub proj_a: BraceMorphism,
    pub proj_b: BraceMorphism,
    /// Element `k` of `brace` is the pair `pairs[k]`; pairs are increasing in
    /// the product encoding `a * |B| + b`.
    pub pairs: Vec<(usize, usize)>,
    b_order: usize,
    a_order: usize,
}

impl Pullback {
    /// The pullback as a subset of `direct_product(A, B)`.
    pub fn as_subset(&self) -> ElementSet {
        ElementSet::from_indices(
            self.a_order * self.b_order,
            self.pairs.iter().map(|&(x, y)| x * self.b_order + y),
        )
    }
}

/// Sub-brace of `A × B` on the given pairs, which must be closed under both
/// componentwise operations.
fn brace_on_pairs(a: &SkewBrace, b: &SkewBrace, pairs: Vec<(usize, usize)>) -> Result<Pullback> {
    let m = b.order();
    let mut index = vec![usize::MAX; a.order() * m];
    for (k, &(x, y)) in pairs.iter().enumerate() {
        index[x * m + y] = k;
    }
    let size = pairs.len();
    let mut add = Vec::with_capacity(size * size);
    let mut circ = Vec::with_capacity(size * size);
    for &(x, y) in &pairs {
        for &(u, v) in &pairs {
            let s = index[a.plus(x, u) * m + b.plus(y, v)];
            let c = index[a.circ(x, u) * m + b.circ(y, v)];
            if s == usize::MAX || c == usize::MAX {
                return Err(Error::Precondition(
                    "pairs are not closed under the operations".into(),
                ));
            }
            add.push(s);
            circ.push(c);
        }
    }
    // a subset of a finite brace closed under both operations is a sub-brace,
    // so the axioms need no re-check
    let bad = || Error::Internal("pullback tables do not form groups".into());
    let add = crate::group::FiniteGroup::from_flat_unchecked(size, add).ok_or_else(bad)?;
    let circ = crate::group::FiniteGroup::from_flat_unchecked(size, circ).ok_or_else(bad)?;
    let brace = SkewBrace::from_parts_unchecked(add, circ);
    debug_assert!(size > 64 || brace.left_brace_violation().is_none());
    let proj_a =
        BraceMorphism::from_parts_unchecked(size, a.order(), pairs.iter().map(|p| p.0).collect());
    let proj_b = BraceMorphism::from_parts_unchecked(size, m, pairs.iter().map(|p| p.1).collect());
    Ok(Pullback {
        brace,
        proj_a,
        proj_b,
        pairs,
        a_order: a.order(),
        b_order: m,
    })
}

/// Pullback of `f: A -> C` and `g: B -> C`.
pub fn pullback(
    a: &SkewBrace,
    b: &SkewBrace,
    f: &BraceMorphism,
    g: &BraceMorphism,
) -> Result<Pullback> {
    if f.codomain_order() != g.codomain_order() {
        return Err(Error::Precondition(
            "morphisms do not share a codomain".into(),
        ));
    }
    if f.domain_order() != a.order() || g.domain_order() != b.order() {
        return Err(Error::Precondition(
            "morphism domains do not match the braces".into(),
        ));
    }
    let pairs: Vec<(usize, usize)> = (0..a.order())
        .flat_map(|x| (0..b.order()).map(move |y| (x, y)))
        .filter(|&(x, y)| f.apply(x) == g.apply(y))
        .collect();
    brace_on_pairs(a, b, pairs)
}

/// `(I, J, ρ)` with `ρ: A/I -> B/J` an isomorphism of braces. Quotients are
/// the canonical ones from [`quotient_brace`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoursatDatum {
    pub i: ElementSet,
    pub j: ElementSet,
    pub rho: BraceMorphism,
}

/// Recovers `(I, J, ρ)` from a subdirect product `C ⊆ A × B`.
pub fn goursat_decompose(a: &SkewBrace, b: &SkewBrace, c: &ElementSet) -> Result<GoursatDatum> {
    let m = b.order();
    if c.carrier_order() != a.order() * m {
        return Err(Error::Precondition("subset does not live in A × B".into()));
    }
    let pairs: Vec<(usize, usize)> = c.iter().map(|k| (k / m, k % m)).collect();
    if !c.contains(a.zero() * m + b.zero()) {
        return Err(Error::Precondition("subset does not contain zero".into()));
    }
    let sub = brace_on_pairs(a, b, pairs.clone())?;
    if !sub.proj_a.is_surjective() || !sub.proj_b.is_surjective() {
        return Err(Error::Precondition(
            "not a subdirect product: a projection is not onto".into(),
        ));
    }
    let i = ElementSet::from_indices(
        a.order(),
        pairs.iter().filter(|p| p.1 == b.zero()).map(|p| p.0),
    );
    let j = ElementSet::from_indices(m, pairs.iter().filter(|p| p.0 == a.zero()).map(|p| p.1));
    let internal = |e: Error| Error::Internal(format!("Goursat kernel is not an ideal: {e}"));
    let (qa, pa) = quotient_brace(a, &i).map_err(internal)?;
    let (qb, pb) = quotient_brace(b, &j).map_err(internal)?;
    let mut rho = vec![usize::MAX; qa.order()];
    for &(x, y) in &pairs {
        let (u, v) = (pa.apply(x), pb.apply(y));
        if rho[u] == usize::MAX {
            rho[u] = v;
        } else if rho[u] != v {
            return Err(Error::Internal(format!(
                "ρ is not well defined at coset {u}"
            )));
        }
    }
    let rho = BraceMorphism::new(&qa, &qb, rho).map_err(|e| Error::Internal(format!("ρ: {e}")))?;
    if !rho.is_bijective() {
        return Err(Error::Internal("ρ is not bijective".into()));
    }
    Ok(GoursatDatum { i, j, rho })
}

/// The subdirect product attached to `(I, J, ρ)`: the pullback of
/// `ρ ∘ π_I: A -> B/J` and `π_J: B -> B/J`.
pub fn goursat_compose(a: &SkewBrace, b: &SkewBrace, datum: &GoursatDatum) -> Result<Pullback> {
    let (qa, pa) = quotient_brace(a, &datum.i)?;
    let (qb, pb) = quotient_brace(b, &datum.j)?;
    let rho = BraceMorphism::new(&qa, &qb, datum.rho.map().to_vec())?;
    if !rho.is_bijective() {
        return Err(Error::Precondition("ρ is not an isomorphism".into()));
    }
    pullback(a, b, &pa.then(&rho), &pb)
}

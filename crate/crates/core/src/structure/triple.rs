//! Triples `(G, H, θ: Ab(G) ≅ Ab(H))` and their correspondence with weakly
//! trivial braces.

use std::collections::HashSet;

use crate::brace::{almost_trivial, trivial, BraceMorphism, SkewBrace};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupHom};
use crate::ideals::{a_op_squared, a_squared, quotient_brace};

use super::goursat::{pullback, Pullback};
use super::is_weakly_trivial;

/// Bound on the number of isomorphisms enumerated per factor when comparing
/// triples.
pub const TRIPLE_SEARCH_CAP: usize = 50_000;

#[derive(Clone, Debug)]
pub struct Triple {
    g: FiniteGroup,
    h: FiniteGroup,
    /// `Ab(G) -> Ab(H)` on the canonical abelianizations.
    theta: GroupHom,
    ab_g: (FiniteGroup, GroupHom),
    ab_h: (FiniteGroup, GroupHom),
}

impl Triple {
    /// `theta` is given on the labels of `g.abelianization()` and
    /// `h.abelianization()` and must be an isomorphism.
    pub fn new(g: FiniteGroup, h: FiniteGroup, theta: Vec<usize>) -> Result<Self> {
        let ab_g = g.abelianization();
        let ab_h = h.abelianization();
        let theta = GroupHom::new(&ab_g.0, &ab_h.0, theta)?;
        if !theta.is_bijective() {
            return Err(Error::Precondition("θ is not an isomorphism".into()));
        }
        Ok(Self {
            g,
            h,
            theta,
            ab_g,
            ab_h,
        })
    }

    /// `(G, G, id)`.
    pub fn diagonal(g: FiniteGroup) -> Self {
        let ab = g.abelianization();
        let theta = GroupHom::identity(ab.0.order());
        Self {
            h: g.clone(),
            g,
            theta,
            ab_h: ab.clone(),
            ab_g: ab,
        }
    }

    /// `(G, H, θ)` with θ the first isomorphism `Ab(G) -> Ab(H)` found by
    /// search.
    pub fn with_any_theta(g: FiniteGroup, h: FiniteGroup) -> Result<Self> {
        let ab_g = g.abelianization();
        let ab_h = h.abelianization();
        let theta = ab_g
            .0
            .find_isomorphism(&ab_h.0)?
            .ok_or_else(|| Error::Precondition("Ab(G) and Ab(H) are not isomorphic".into()))?;
        Ok(Self {
            g,
            h,
            theta,
            ab_g,
            ab_h,
        })
    }

    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn h(&self) -> &FiniteGroup {
        &self.h
    }

    pub fn theta(&self) -> &GroupHom {
        &self.theta
    }

    pub fn ab_g(&self) -> &FiniteGroup {
        &self.ab_g.0
    }

    pub fn ab_h(&self) -> &FiniteGroup {
        &self.ab_h.0
    }
}

/// Pullback of `Triv(G) -> Triv(Ab(G)) ≅ opTriv(Ab(H)) <- opTriv(H)`, a
/// weakly trivial brace inside `Triv(G) × opTriv(H)`.
pub fn triple_to_brace(t: &Triple) -> Result<SkewBrace> {
    Ok(triple_pullback(t)?.brace)
}

/// [`triple_to_brace`] keeping the pair labels: element `k` is
/// `(g, h) = pairs[k]` with `g ∈ G`, `h ∈ H`.
pub fn triple_pullback(t: &Triple) -> Result<Pullback> {
    let a = trivial(&t.g);
    let b = almost_trivial(&t.h);
    let f = BraceMorphism::from_parts_unchecked(
        t.g.order(),
        t.ab_h.0.order(),
        (0..t.g.order())
            .map(|x| t.theta.apply(t.ab_g.1.apply(x)))
            .collect(),
    );
    let g =
        BraceMorphism::from_parts_unchecked(t.h.order(), t.ab_h.0.order(), t.ab_h.1.map().to_vec());
    let p = pullback(&a, &b, &f, &g)?;
    if !is_weakly_trivial(&p.brace) {
        return Err(Error::Internal(
            "pullback of a triple is not weakly trivial".into(),
        ));
    }
    Ok(p)
}

/// `((A/A², ∘), (A/A²_op, ∘), θ)` with θ induced by the identity of
/// `A/(A² + A²_op)`.
pub fn brace_to_triple(a: &SkewBrace) -> Result<Triple> {
    if !is_weakly_trivial(a) {
        return Err(Error::Precondition("brace is not weakly trivial".into()));
    }
    let (q1, p1) = quotient_brace(a, &a_squared(a))?;
    let (q2, p2) = quotient_brace(a, &a_op_squared(a))?;
    let g = q1.circ_group().clone();
    let h = q2.circ_group().clone();
    let (ab_g, pg) = g.abelianization();
    let (_, ph) = h.abelianization();
    let mut theta = vec![usize::MAX; ab_g.order()];
    for x in 0..a.order() {
        let (u, v) = (pg.apply(p1.apply(x)), ph.apply(p2.apply(x)));
        if theta[u] == usize::MAX {
            theta[u] = v;
        } else if theta[u] != v {
            return Err(Error::Internal(format!(
                "canonical θ is not well defined at {u}"
            )));
        }
    }
    Triple::new(g, h, theta).map_err(|e| Error::Internal(format!("canonical θ: {e}")))
}

/// Map induced on abelianizations by `phi: G1 -> G2`.
fn induced(phi: &GroupHom, p1: &GroupHom, p2: &GroupHom, ab1_order: usize) -> Vec<usize> {
    let mut bar = vec![usize::MAX; ab1_order];
    for x in 0..phi.domain_order() {
        bar[p1.apply(x)] = p2.apply(phi.apply(x));
    }
    bar
}

/// Searches for `φ_G`, `φ_H` making `θ2 ∘ φ̄_G = φ̄_H ∘ θ1`.
pub fn triples_equivalent(t1: &Triple, t2: &Triple) -> Result<bool> {
    if t1.g.order() != t2.g.order()
        || t1.h.order() != t2.h.order()
        || t1.ab_g.0.order() != t2.ab_g.0.order()
    {
        return Ok(false);
    }
    let phis_g = t1.g.isomorphisms(&t2.g, TRIPLE_SEARCH_CAP)?;
    if phis_g.is_empty() {
        return Ok(false);
    }
    let phis_h = t1.h.isomorphisms(&t2.h, TRIPLE_SEARCH_CAP)?;
    let bars_h: HashSet<Vec<usize>> = phis_h
        .iter()
        .map(|phi| induced(phi, &t1.ab_h.1, &t2.ab_h.1, t1.ab_h.0.order()))
        .collect();
    let theta1_inv = t1.theta.inverse().expect("θ is bijective");
    let mut tried: HashSet<Vec<usize>> = HashSet::new();
    for phi in &phis_g {
        let bar_g = induced(phi, &t1.ab_g.1, &t2.ab_g.1, t1.ab_g.0.order());
        if !tried.insert(bar_g.clone()) {
            continue;
        }
        // required φ̄_H = θ2 ∘ φ̄_G ∘ θ1⁻¹
        let required: Vec<usize> = (0..t1.ab_h.0.order())
            .map(|y| t2.theta.apply(bar_g[theta1_inv.apply(y)]))
            .collect();
        if bars_h.contains(&required) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::*;

    #[test]
    fn abelian_diagonal_triple_is_trivial_brace() {
        let g = make_cyclic(6).unwrap();
        let b = triple_to_brace(&Triple::diagonal(g.clone())).unwrap();
        assert_eq!(b.order(), 6);
        assert!(b.find_isomorphism(&trivial(&g)).unwrap().is_some());
    }

    #[test]
    fn c4_inversion_is_equivalent_to_identity() {
        let c4 = make_cyclic(4).unwrap();
        let id = Triple::diagonal(c4.clone());
        // Ab(C4) = C4 with the same labels
        let inv = Triple::new(c4.clone(), c4.clone(), vec![0, 3, 2, 1]).unwrap();
        assert!(triples_equivalent(&id, &id).unwrap());
        assert!(triples_equivalent(&id, &inv).unwrap());
        let other = Triple::diagonal(make_presented_c5_c4().unwrap());
        assert!(!triples_equivalent(&other, &id).unwrap());
    }

    #[test]
    fn theta_must_be_bijective() {
        let c4 = make_cyclic(4).unwrap();
        assert!(Triple::new(c4.clone(), c4.clone(), vec![0, 2, 0, 2]).is_err());
        assert!(Triple::new(c4.clone(), c4, vec![0, 2, 1, 3]).is_err());
    }

    #[test]
    fn trivial_brace_triple() {
        let g = make_symmetric(3).unwrap();
        let t = brace_to_triple(&trivial(&g)).unwrap();
        assert_eq!(t.g().order(), 6);
        assert_eq!(t.h().order(), 2);
        assert!(t
            .h()
            .find_isomorphism(&g.abelianization().0)
            .unwrap()
            .is_some());
    }
}

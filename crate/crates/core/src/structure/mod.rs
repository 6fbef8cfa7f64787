//! Weak triviality, subdirect products, the triple classification, the
//! descending series and the classification of simple two-sided braces.

mod goursat;
mod series;
mod triple;

pub use goursat::{goursat_compose, goursat_decompose, pullback, GoursatDatum, Pullback};
pub use series::{
    is_left_nilpotent, is_right_nilpotent, is_soluble, is_strongly_nilpotent, series, SeriesKind,
    SeriesReport,
};
pub use triple::{brace_to_triple, triple_pullback, triple_to_brace, triples_equivalent, Triple};

use serde::Serialize;

use crate::brace::{direct_product, BraceMorphism, SkewBrace};
use crate::error::{Error, Result};
use crate::ideals::{a_op_squared, a_squared, is_simple, quotient_brace};
use crate::set::ElementSet;

/// `A² ∩ A²_op = {0}`.
pub fn is_weakly_trivial(a: &SkewBrace) -> bool {
    a_squared(a).intersection(&a_op_squared(a)).len() == 1
}

/// `A / (A² ∩ A²_op)`, which is always weakly trivial.
pub fn weakly_trivial_quotient(a: &SkewBrace) -> Result<(SkewBrace, BraceMorphism)> {
    let kernel = a_squared(a).intersection(&a_op_squared(a));
    let (q, proj) = quotient_brace(a, &kernel)?;
    if !is_weakly_trivial(&q) {
        return Err(Error::Internal(
            "A/(A² ∩ A²_op) is not weakly trivial".into(),
        ));
    }
    Ok((q, proj))
}

/// The canonical map `A -> A/A² × A/A²_op` of a weakly trivial brace.
#[derive(Clone, Debug)]
pub struct SubdirectEmbedding {
    pub product: SkewBrace,
    pub embedding: BraceMorphism,
    /// `A -> A/A²`
    pub to_trivial: BraceMorphism,
    /// `A -> A/A²_op`
    pub to_almost_trivial: BraceMorphism,
    pub trivial_factor: SkewBrace,
    pub almost_trivial_factor: SkewBrace,
}

impl SubdirectEmbedding {
    /// Image of a subset of `A` in the product.
    pub fn image_of(&self, s: &ElementSet) -> ElementSet {
        s.map_into(self.product.order(), self.embedding.map())
    }
}

pub fn subdirect_embedding(a: &SkewBrace) -> Result<SubdirectEmbedding> {
    if !is_weakly_trivial(a) {
        return Err(Error::Precondition("brace is not weakly trivial".into()));
    }
    let (q1, p1) = quotient_brace(a, &a_squared(a))?;
    let (q2, p2) = quotient_brace(a, &a_op_squared(a))?;
    let product = direct_product(&q1, &q2);
    let m = q2.order();
    let map = (0..a.order())
        .map(|x| p1.apply(x) * m + p2.apply(x))
        .collect();
    let embedding = BraceMorphism::new(a, &product, map)
        .map_err(|e| Error::Internal(format!("subdirect embedding: {e}")))?;
    if !embedding.is_injective() {
        return Err(Error::Internal(
            "subdirect embedding is not injective".into(),
        ));
    }
    Ok(SubdirectEmbedding {
        product,
        embedding,
        to_trivial: p1,
        to_almost_trivial: p2,
        trivial_factor: q1,
        almost_trivial_factor: q2,
    })
}

/// The three possible shapes of a simple two-sided skew brace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SimpleTwoSidedClass {
    /// `Triv(G)` with `G` simple.
    Trivial,
    /// `opTriv(G)` with `G` simple.
    AlmostTrivial,
    /// A two-sided brace with `A² = A²_op = A`.
    TwoSidedBrace,
}

pub fn classify_simple_two_sided(a: &SkewBrace) -> Result<SimpleTwoSidedClass> {
    if !is_simple(a)? {
        return Err(Error::Precondition("brace is not simple".into()));
    }
    if !a.is_two_sided() {
        return Err(Error::Precondition("brace is not two-sided".into()));
    }
    let sq = a_squared(a);
    let sq_op = a_op_squared(a);
    if sq.len() == 1 {
        Ok(SimpleTwoSidedClass::Trivial)
    } else if sq_op.len() == 1 {
        Ok(SimpleTwoSidedClass::AlmostTrivial)
    } else if sq.len() == a.order() && sq_op.len() == a.order() && a.add_group().is_abelian() {
        Ok(SimpleTwoSidedClass::TwoSidedBrace)
    } else {
        Err(Error::Internal(
            "simple two-sided brace fits no class".into(),
        ))
    }
}

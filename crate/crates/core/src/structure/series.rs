//! Left, right, strong and derived series of a skew brace.

use std::collections::HashMap;

use serde::Serialize;

use crate::brace::SkewBrace;
use crate::ideals::star_subgroup;
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    /// `A^{n+1} = A * A^n`
    Left,
    /// `A^{(n+1)} = A^{(n)} * A`
    Right,
    /// `A^{[n+1]} = <A^{[i]} * A^{[n+1-i]} : 1 <= i <= n>`
    Strong,
    /// `A_{n+1} = A_n * A_n`
    Derived,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 4] = [
        SeriesKind::Left,
        SeriesKind::Right,
        SeriesKind::Strong,
        SeriesKind::Derived,
    ];
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// `terms[0] = A`; the last term is the stable one.
    pub terms: Vec<ElementSet>,
    pub stabilized: bool,
    pub reaches_zero: bool,
    /// Number of terms; when the series reaches zero this is the least `n`
    /// with `A_n = {0}`.
    pub length: usize,
}

impl SeriesReport {
    fn new(kind: SeriesKind, mut terms: Vec<ElementSet>) -> Self {
        terms.dedup();
        let reaches_zero = terms.last().is_some_and(|t| t.len() == 1);
        let length = terms.len();
        Self {
            kind,
            terms,
            stabilized: true,
            reaches_zero,
            length,
        }
    }

    /// 1-based term, with the stable value repeated past the end.
    pub fn term(&self, n: usize) -> &ElementSet {
        assert!(n >= 1);
        &self.terms[(n - 1).min(self.terms.len() - 1)]
    }
}

pub fn series(a: &SkewBrace, kind: SeriesKind) -> SeriesReport {
    let whole = ElementSet::full(a.order());
    if kind == SeriesKind::Strong {
        return SeriesReport::new(kind, strong_terms(a));
    }
    let mut terms = vec![whole.clone()];
    loop {
        let last = terms.last().unwrap();
        let next = match kind {
            SeriesKind::Left => star_subgroup(a, &whole, last),
            SeriesKind::Right => star_subgroup(a, last, &whole),
            SeriesKind::Derived => star_subgroup(a, last, last),
            SeriesKind::Strong => unreachable!(),
        };
        if &next == last {
            break;
        }
        terms.push(next);
    }
    SeriesReport::new(kind, terms)
}

/// Each strong term depends on all earlier ones, so a single repeat does not
/// settle the series. If the terms are constant from index `n` through `2n`
/// (1-based) they stay constant forever: every product `T_i * T_j` with
/// `i + j = m + 1` can be matched to one with `i + j = m` whose factors lie
/// in the constant stretch.
fn strong_terms(a: &SkewBrace) -> Vec<ElementSet> {
    let mut terms = vec![ElementSet::full(a.order())];
    let mut products: HashMap<(usize, usize), ElementSet> = HashMap::new();
    let mut run_start = 1;
    loop {
        let n = terms.len();
        if terms[n - 1].len() == 1 || n >= 2 * run_start && n > 1 {
            break;
        }
        let mut acc = ElementSet::singleton(a.order(), a.zero());
        for i in 1..=n {
            let j = n + 1 - i;
            let p = products
                .entry((i, j))
                .or_insert_with(|| star_subgroup(a, &terms[i - 1], &terms[j - 1]));
            acc = acc.union(p);
        }
        let next = a.add_group().subgroup_generated(&acc);
        if next != terms[n - 1] {
            run_start = n + 1;
        }
        terms.push(next);
    }
    terms
}

pub fn is_left_nilpotent(a: &SkewBrace) -> bool {
    series(a, SeriesKind::Left).reaches_zero
}

pub fn is_right_nilpotent(a: &SkewBrace) -> bool {
    series(a, SeriesKind::Right).reaches_zero
}

pub fn is_strongly_nilpotent(a: &SkewBrace) -> bool {
    series(a, SeriesKind::Strong).reaches_zero
}

pub fn is_soluble(a: &SkewBrace) -> bool {
    series(a, SeriesKind::Derived).reaches_zero
}

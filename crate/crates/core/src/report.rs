//! The JSON analysis report for a single brace.

use serde::Serialize;

use crate::brace::SkewBrace;
use crate::group::{FiniteGroup, ISO_ORDER_CAP};
use crate::ideals::{all_ideals, is_simple};
use crate::primeness::{primeness_report, PrimenessReport};
use crate::structure::{is_weakly_trivial, series, SeriesKind};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub order: usize,
    pub abelian: bool,
    pub nilpotency_class: Option<usize>,
    pub derived_length: Option<usize>,
}

impl GroupSummary {
    pub fn of(g: &FiniteGroup) -> Self {
        Self {
            order: g.order(),
            abelian: g.is_abelian(),
            nilpotency_class: g.nilpotency_class(),
            derived_length: g.derived_length(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesSummary {
    pub length: usize,
    pub reaches_zero: bool,
    pub term_sizes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AllSeries {
    pub left: SeriesSummary,
    pub right: SeriesSummary,
    pub strong: SeriesSummary,
    pub derived: SeriesSummary,
}

pub const SEARCH_CAPPED: &str = "search-capped";

/// A boolean, or the string `"search-capped"` past the isomorphism cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum IsoOutcome {
    Decided(bool),
    Capped(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub brace: String,
    pub order: usize,
    pub two_sided: bool,
    pub weakly_trivial: bool,
    pub ideal_count: usize,
    /// `None` for the one-element brace.
    pub simple: Option<bool>,
    pub series: AllSeries,
    pub left_nilpotent: bool,
    pub right_nilpotent: bool,
    pub strongly_nilpotent: bool,
    pub soluble: bool,
    pub primeness: PrimenessReport,
    pub additive_group: GroupSummary,
    pub multiplicative_group: GroupSummary,
    pub isomorphic_add_mult: IsoOutcome,
}

fn summarize(a: &SkewBrace, kind: SeriesKind) -> SeriesSummary {
    let s = series(a, kind);
    SeriesSummary {
        length: s.length,
        reaches_zero: s.reaches_zero,
        term_sizes: s.terms.iter().map(|t| t.len()).collect(),
    }
}

/// Full structural report. Product-tree witnesses are kept only when
/// `witnesses` is set.
pub fn analyze(name: &str, a: &SkewBrace, witnesses: bool) -> AnalysisReport {
    let series = AllSeries {
        left: summarize(a, SeriesKind::Left),
        right: summarize(a, SeriesKind::Right),
        strong: summarize(a, SeriesKind::Strong),
        derived: summarize(a, SeriesKind::Derived),
    };
    let mut primeness = primeness_report(a);
    if !witnesses {
        primeness.witness = None;
    }
    let isomorphic_add_mult = if a.order() > ISO_ORDER_CAP {
        IsoOutcome::Capped(SEARCH_CAPPED)
    } else {
        match a.add_group().find_isomorphism(a.circ_group()) {
            Ok(found) => IsoOutcome::Decided(found.is_some()),
            Err(_) => IsoOutcome::Capped(SEARCH_CAPPED),
        }
    };
    AnalysisReport {
        schema: SCHEMA_VERSION,
        brace: name.to_string(),
        order: a.order(),
        two_sided: a.is_two_sided(),
        weakly_trivial: is_weakly_trivial(a),
        ideal_count: all_ideals(a).len(),
        simple: is_simple(a).ok(),
        left_nilpotent: series.left.reaches_zero,
        right_nilpotent: series.right.reaches_zero,
        strongly_nilpotent: series.strong.reaches_zero,
        soluble: series.derived.reaches_zero,
        series,
        primeness,
        additive_group: GroupSummary::of(a.add_group()),
        multiplicative_group: GroupSummary::of(a.circ_group()),
        isomorphic_add_mult,
    }
}

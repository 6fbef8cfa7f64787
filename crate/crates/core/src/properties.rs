//! Named property suites: each lemma, theorem and invariant becomes an
//! exhaustive check over one brace, selectable by name.

use serde::Serialize;

use crate::brace::{almost_trivial, SkewBrace};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, ISO_ORDER_CAP};
use crate::ideals::{
    a_op_squared, a_squared, all_ideals, is_ideal, is_left_ideal, quotient_brace, star_subgroup,
};
use crate::primeness::{
    brute_force_products, is_prime, is_semiprime, is_strongly_prime, is_strongly_semiprime,
    star_closure, MAX_BRUTE_FORCE_DEPTH,
};
use crate::set::ElementSet;
use crate::structure::{
    brace_to_triple, goursat_compose, goursat_decompose, is_weakly_trivial, series,
    subdirect_embedding, triple_to_brace, weakly_trivial_quotient, SeriesKind,
};
use crate::ybe::solution_from_brace;

/// Subgroup and automorphism enumeration bounds used by the sweeps.
const SUBGROUP_LIMIT: usize = 20_000;
const AUTOMORPHISM_LIMIT: usize = 100_000;
/// Braces up to this order are compared against the product-tree oracle.
pub const ORACLE_MAX_ORDER: usize = 32;
pub const ORACLE_DEPTH: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail(String),
    OutOfHypothesis(String),
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }

    fn from_check(r: std::result::Result<(), String>) -> Self {
        match r {
            Ok(()) => Outcome::Pass,
            Err(w) => Outcome::Fail(w),
        }
    }
}

pub struct Property {
    pub selector: &'static str,
    pub statement: &'static str,
    check: fn(&SkewBrace) -> Outcome,
}

impl Property {
    pub fn check(&self, a: &SkewBrace) -> Outcome {
        (self.check)(a)
    }
}

impl std::fmt::Debug for Property {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.selector)
    }
}

macro_rules! prop {
    ($sel:expr, $stmt:expr, $f:expr) => {
        Property {
            selector: $sel,
            statement: $stmt,
            check: $f,
        }
    };
}

static REGISTRY: &[Property] = &[
    prop!(
        "group:axioms",
        "both groups pass the Latin-square, identity, inverse and associativity checks",
        group_axioms
    ),
    prop!(
        "group:abelianization",
        "G/[G,G] is abelian for both groups",
        group_abelianization
    ),
    prop!(
        "group:normal-lattice",
        "normal subgroups are closed under intersection and product",
        group_normal_lattice
    ),
    prop!(
        "group:isomorphism-round-trip",
        "isomorphisms compose with their inverses to the identity",
        group_iso_round_trip
    ),
    prop!(
        "lemma:distributivity",
        "a*(b+c) = a*b+b+a*c-b and (a∘b)*c = a*(b*c)+b*c+a*c",
        distributivity_left
    ),
    prop!(
        "lemma:distributivity-right",
        "two-sided: (a+b)*c = -b+a*c+b+b*c and a*(b∘c) = a*c+a*b+(a*b)*c",
        distributivity_right
    ),
    prop!(
        "lemma:lambda-homomorphism",
        "λ is a homomorphism (A,∘) -> Aut(A,+)",
        lambda_homomorphism
    ),
    prop!(
        "proposition:two-sided-inner",
        "two-sided iff inner automorphisms of (A,∘) are brace automorphisms",
        two_sided_inner
    ),
    prop!(
        "lemma:opposite",
        "opposite is an involution with the same ideals",
        opposite_involution
    ),
    prop!(
        "corollary:characteristic-ideal",
        "two-sided: characteristic subgroups of (A,+) are ideals",
        characteristic_ideal
    ),
    prop!(
        "lemma:squares-are-ideals",
        "A² and A²_op are ideals",
        squares_are_ideals
    ),
    prop!(
        "lemma:minimal-trivial-quotient",
        "A/A² is trivial and A² lies in every ideal with trivial quotient",
        minimal_trivial_quotient
    ),
    prop!(
        "lemma:centralize",
        "two-sided: A² and A²_op commute in (A,+)",
        centralize
    ),
    prop!(
        "lemma:star-circ-normal",
        "two-sided: X*Y is ∘-normal for ∘-normal X, Y",
        star_circ_normal
    ),
    prop!(
        "lemma:star-left-ideal",
        "X*I is a left ideal for ∘-normal X and left ideal I",
        star_left_ideal
    ),
    prop!(
        "lemma:star-add-normal",
        "two-sided: I*J is +-normal for ideals I, J with J ⊆ A²_op",
        star_add_normal
    ),
    prop!(
        "lemma:distr-center",
        "two-sided: c*(a+b) = c*a+c*b and (a+b)*c = a*c+b*c for c ∈ Z(A,+)",
        distr_center
    ),
    prop!(
        "lemma:star-associativity",
        "two-sided: (a*b)*c = a*(b*c) for c ∈ Z(A,+)",
        star_associativity
    ),
    prop!(
        "theorem:central-intersection",
        "two-sided: A²∩A²_op ⊆ Z(A²+A²_op,+) and is a two-sided brace",
        central_intersection
    ),
    prop!(
        "corollary:extension",
        "two-sided: weakly trivial quotient by a two-sided brace of abelian type",
        extension
    ),
    prop!(
        "proposition:weakly-trivial-quotient",
        "A/(A²∩A²_op) is weakly trivial",
        weakly_trivial_quotient_prop
    ),
    prop!(
        "corollary:weakly-trivial-two-sided",
        "weakly trivial braces are two-sided",
        weakly_trivial_two_sided
    ),
    prop!(
        "lemma:weakly-trivial-ideals",
        "weakly trivial: I is an ideal iff its image is +-normal in A/A²×A/A²_op",
        weakly_trivial_ideals
    ),
    prop!(
        "lemma:weakly-trivial-quotient-criterion",
        "weakly trivial: A/I weakly trivial iff (I∩A²)+(I∩A²_op) = I∩(A²+A²_op)",
        quotient_criterion
    ),
    prop!(
        "corollary:weakly-trivial-lengths",
        "weakly trivial: (A,+) and (A,∘) share derived length and nilpotency class",
        weakly_trivial_lengths
    ),
    prop!(
        "proposition:weakly-trivial-nilpotency",
        "weakly trivial: left, right and strong nilpotency coincide",
        weakly_trivial_nilpotency
    ),
    prop!(
        "theorem:left-right-strong",
        "strongly nilpotent iff left and right nilpotent",
        left_right_strong
    ),
    prop!(
        "theorem:soluble-bound",
        "two-sided with (A,∘) of derived length n: (A,+) has derived length at most n+1",
        soluble_bound
    ),
    prop!(
        "lemma:nilpotent-sum",
        "two-sided with (A,∘) of class n: (A²+A²_op,+) has class at most n+1",
        nilpotent_sum
    ),
    prop!(
        "theorem:abelian-by-nilpotent",
        "two-sided, (A,∘) nilpotent: (A,+) is abelian-by-nilpotent and nilpotent-by-abelian",
        abelian_by_nilpotent
    ),
    prop!(
        "lemma:power",
        "two-sided, A^(m) ⊆ Z(A,+): A^(m+k) = A^(m)*A^(k) and A^(mk) = (A^(m))^(k)",
        power_lemma
    ),
    prop!(
        "theorem:nilpotency-equivalence",
        "two-sided of nilpotent type: left, right and strong nilpotency coincide",
        nilpotency_equivalence
    ),
    prop!(
        "theorem:nilpotent-type-strongly-nilpotent",
        "two-sided with nilpotent (A,+): strongly nilpotent and (A,∘) nilpotent",
        nilpotent_type_strong
    ),
    prop!(
        "goursat:embedding-round-trip",
        "weakly trivial: the subdirect image decomposes and recomposes to itself",
        goursat_embedding_round_trip
    ),
    prop!(
        "triple:round-trip",
        "weakly trivial: the brace of its triple is isomorphic to it",
        triple_round_trip
    ),
    prop!(
        "primeness:implications",
        "strongly prime ⟹ prime and strongly semiprime ⟹ semiprime",
        primeness_implications
    ),
    prop!(
        "theorem:strong-primeness-equivalence",
        "two-sided: prime = strongly prime and semiprime = strongly semiprime",
        strong_primeness_equivalence
    ),
    prop!(
        "primeness:nested-chain",
        "I_{n+1} = I_n*I_n stays inside the closure of {I}",
        nested_chain
    ),
    prop!(
        "primeness:almost-trivial-commutators",
        "almost trivial: closure products are commutator subgroups and contain the derived series",
        almost_trivial_commutators
    ),
    prop!(
        "primeness:brute-force-oracle",
        "closure agrees with product-tree enumeration on reachability of {0}",
        brute_force_oracle
    ),
    prop!(
        "ybe:braid",
        "the solutions of A and of its opposite are non-degenerate and braided",
        ybe_braid
    ),
];

pub fn registry() -> &'static [Property] {
    REGISTRY
}

/// `all`, an exact selector, or a prefix ending in `*` such as `lemma:*`.
pub fn select(selector: &str) -> Result<Vec<&'static Property>> {
    let chosen: Vec<&Property> = if selector == "all" {
        REGISTRY.iter().collect()
    } else if let Some(prefix) = selector.strip_suffix('*') {
        REGISTRY
            .iter()
            .filter(|p| p.selector.starts_with(prefix))
            .collect()
    } else {
        REGISTRY.iter().filter(|p| p.selector == selector).collect()
    };
    if chosen.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "unknown property selector {selector:?}"
        )));
    }
    Ok(chosen)
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub property: &'static str,
    pub brace: String,
    pub outcome: Outcome,
}

/// Runs every selected property on every brace, ordered by brace name and
/// then by registry order.
pub fn run(properties: &[&Property], braces: &[(String, SkewBrace)]) -> Vec<CheckResult> {
    let mut sorted: Vec<&(String, SkewBrace)> = braces.iter().collect();
    sorted.sort_by(|x, y| x.0.cmp(&y.0));
    let mut out = Vec::new();
    for (name, a) in sorted {
        for p in properties {
            out.push(CheckResult {
                property: p.selector,
                brace: name.clone(),
                outcome: p.check(a),
            });
        }
    }
    out
}

fn out_of_hypothesis(why: &str) -> Outcome {
    Outcome::OutOfHypothesis(why.to_string())
}

fn require_two_sided(a: &SkewBrace) -> Option<Outcome> {
    (!a.is_two_sided()).then(|| out_of_hypothesis("not two-sided"))
}

fn require_weakly_trivial(a: &SkewBrace) -> Option<Outcome> {
    (!is_weakly_trivial(a)).then(|| out_of_hypothesis("not weakly trivial"))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
}

fn check_all(n: usize, f: impl Fn(usize, usize, usize) -> bool) -> std::result::Result<(), String> {
    match triples(n).find(|&(a, b, c)| !f(a, b, c)) {
        None => Ok(()),
        Some((a, b, c)) => Err(format!("a={a} b={b} c={c}")),
    }
}

fn sum(a: &SkewBrace, terms: &[usize]) -> usize {
    terms.iter().fold(a.zero(), |acc, &t| a.plus(acc, t))
}

// group core

fn group_axioms(a: &SkewBrace) -> Outcome {
    for (name, g) in [("+", a.add_group()), ("∘", a.circ_group())] {
        if let Err(e) = g.verify() {
            return Outcome::Fail(format!("({name}): {e}"));
        }
    }
    Outcome::Pass
}

fn group_abelianization(a: &SkewBrace) -> Outcome {
    for (name, g) in [("+", a.add_group()), ("∘", a.circ_group())] {
        if !g.abelianization().0.is_abelian() {
            return Outcome::Fail(format!("Ab of ({name}) is not abelian"));
        }
    }
    Outcome::Pass
}

fn group_normal_lattice(a: &SkewBrace) -> Outcome {
    for (name, g) in [("+", a.add_group()), ("∘", a.circ_group())] {
        let normals = g.normal_subgroups();
        for x in &normals {
            for y in &normals {
                let meet = x.intersection(y);
                let join = g.subgroup_generated(&x.union(y));
                if !normals.contains(&meet) || !normals.contains(&join) {
                    return Outcome::Fail(format!("({name}): {x:?} and {y:?}"));
                }
            }
        }
    }
    Outcome::Pass
}

fn group_iso_round_trip(a: &SkewBrace) -> Outcome {
    if a.order() > ISO_ORDER_CAP {
        return out_of_hypothesis("order above the isomorphism cap");
    }
    let (add, circ) = (a.add_group(), a.circ_group());
    for (dom, cod) in [(add, add), (add, circ), (circ, add)] {
        match dom.find_isomorphism(cod) {
            Err(e) => return Outcome::Fail(e.to_string()),
            Ok(None) => {}
            Ok(Some(phi)) => {
                if crate::group::GroupHom::new(dom, cod, phi.map().to_vec()).is_err() {
                    return Outcome::Fail("witness is not a homomorphism".into());
                }
                let inv = phi.inverse().expect("isomorphisms are bijective");
                if (0..dom.order()).any(|x| inv.apply(phi.apply(x)) != x)
                    || (0..cod.order()).any(|y| phi.apply(inv.apply(y)) != y)
                {
                    return Outcome::Fail("witness does not invert".into());
                }
            }
        }
    }
    Outcome::Pass
}

// brace core

fn distributivity_left(a: &SkewBrace) -> Outcome {
    Outcome::from_check(check_all(a.order(), |x, y, z| {
        let s = |p, q| a.star(p, q);
        s(x, a.plus(y, z)) == sum(a, &[s(x, y), y, s(x, z), a.neg(y)])
            && s(a.circ(x, y), z) == sum(a, &[s(x, s(y, z)), s(y, z), s(x, z)])
    }))
}

fn distributivity_right(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_two_sided(a) {
        return o;
    }
    Outcome::from_check(check_all(a.order(), |x, y, z| {
        let s = |p, q| a.star(p, q);
        s(a.plus(x, y), z) == sum(a, &[a.neg(y), s(x, z), y, s(y, z)])
            && s(x, a.circ(y, z)) == sum(a, &[s(x, z), s(x, y), s(s(x, y), z)])
    }))
}

fn lambda_homomorphism(a: &SkewBrace) -> Outcome {
    let n = a.order();
    for x in 0..n {
        let mut seen = ElementSet::empty(n);
        for y in 0..n {
            if !seen.insert(a.lambda(x, y)) {
                return Outcome::Fail(format!("λ_{x} is not injective"));
            }
        }
    }
    Outcome::from_check(check_all(n, |x, y, z| {
        a.lambda(a.circ(x, y), z) == a.lambda(x, a.lambda(y, z))
            && a.lambda(x, a.plus(y, z)) == a.plus(a.lambda(x, y), a.lambda(x, z))
    }))
}

fn two_sided_inner(a: &SkewBrace) -> Outcome {
    let (p, q) = (a.is_two_sided(), a.is_two_sided_via_inner());
    if p == q {
        Outcome::Pass
    } else {
        Outcome::Fail(format!(
            "right identity says {p}, inner automorphisms say {q}"
        ))
    }
}

fn opposite_involution(a: &SkewBrace) -> Outcome {
    let op = a.opposite();
    if op.opposite() != *a {
        return Outcome::Fail("opposite is not an involution".into());
    }
    if all_ideals(a) != all_ideals(&op) {
        return Outcome::Fail("ideals of A and its opposite differ".into());
    }
    Outcome::Pass
}

fn characteristic_ideal(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_two_sided(a) {
        return o;
    }
    if a.order() > ISO_ORDER_CAP {
        return out_of_hypothesis("order above the isomorphism cap");
    }
    let add = a.add_group();
    let (subgroups, autos) = match (
        add.subgroups(SUBGROUP_LIMIT),
        add.automorphisms(AUTOMORPHISM_LIMIT),
    ) {
        (Ok(s), Ok(t)) => (s, t),
        _ => return out_of_hypothesis("subgroup or automorphism enumeration capped"),
    };
    for s in subgroups {
        let characteristic = autos
            .iter()
            .all(|phi| s.iter().all(|x| s.contains(phi.apply(x))));
        if characteristic && !is_ideal(a, &s).is_ideal() {
            return Outcome::Fail(format!("characteristic subgroup {s:?} is not an ideal"));
        }
    }
    Outcome::Pass
}

// ideals

fn squares_are_ideals(a: &SkewBrace) -> Outcome {
    for (name, s) in [("A²", a_squared(a)), ("A²_op", a_op_squared(a))] {
        if let Some(f) = is_ideal(a, &s).first_failure() {
            return Outcome::Fail(format!("{name} is not {f}"));
        }
    }
    Outcome::Pass
}

fn minimal_trivial_quotient(a: &SkewBrace) -> Outcome {
    let sq = a_squared(a);
    match quotient_brace(a, &sq) {
        Ok((q, _)) if q.is_trivial() => {}
        _ => return Outcome::Fail("A/A² is not a trivial brace".into()),
    }
    for i in all_ideals(a) {
        let (q, _) = quotient_brace(a, &i).expect("ideal");
        if q.is_trivial() && !sq.is_subset(&i) {
            return Outcome::Fail(format!("A/I is trivial but A² ⊄ I = {i:?}"));
        }
    }
    Outcome::Pass
}

fn centralize(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_two_sided(a) {
        return o;
    }
    let sq_op = a_op_squared(a);
    for x in a_squared(a).iter() {
        for y in sq_op.iter() {
            if a.plus(x, y) != a.plus(y, x) {
                return Outcome::Fail(format!("{x} ∈ A² and {y} ∈ A²_op do not commute"));
            }
        }
    }
    Outcome::Pass
}

/// Conjugacy classes and normal subgroups of `(A,∘)`.
fn circ_normal_subsets(a: &SkewBrace) -> Vec<ElementSet> {
    let circ = a.circ_group();
    let mut sets = circ.conjugacy_classes();
    sets.extend(circ.normal_subgroups());
    sets.sort();
    sets.dedup();
    sets
}

fn is_circ_normal(a: &SkewBrace, s: &ElementSet) -> bool {
    let circ = a.circ_group();
    circ.is_subgroup(s) && circ.is_normal(s).unwrap_or(false)
}

fn star_circ_normal(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_two_sided(a) {
        return o;
    }
    let sets = circ_normal_subsets(a);
    for x in &sets {
        for y in &sets {
            let p = star_subgroup(a, x, y);
            if !is_circ_normal(a, &p) {
                return Outcome::Fail(format!("X={x:?} Y={y:?}"));
            }
        }
    }
    Outcome::Pass
}

fn left_ideals(a: &SkewBrace) -> Option<Vec<ElementSet>> {
    let subs = a.add_group().subgroups(SUBGROUP_LIMIT).ok()?;
    Some(subs.into_iter().filter(|s| is_left_ideal(a, s)).collect())
}

fn star_left_ideal(a: &SkewBrace) -> Outcome {
    let Some(lefts) = left_ideals(a) else {
        return out_of_hypothesis("subgroup enumeration capped");
    };
    for x in circ_normal_subsets(a) {
        for i in &lefts {
            let p = star_subgroup(a, &x, i);
            if !is_left_ideal(a, &p) {
                return Outcome::Fail(format!("X={x:?} I={i:?}"));
            }
        }
    }
    Outcome::Pass
}

fn star_add_normal(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_two_sided(a) {
        return o;
    }
    let sq_op = a_op_squared(a);
    let ideals = all_ideals(a);
    for i in &ideals {
        for j in ideals.iter().filter(|j| j.is_subset(&sq_op)) {
            let p = star_subgroup(a, i, j);
            if !a.add_group().is_normal(&p).unwrap_or(false) {
                return Outcome::Fail(format!("I={i:?} J={j:?}"));
            }
        }
    }
    Outcome::Pass
}

fn distr_center(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_two_sided(a) {
        return o;
    }
    let n = a.order();
    for c in a.add_group().center().iter() {
        for x in 0..n {
            for y in 0..n {
                let s = |p, q| a.star(p, q);
                if s(c, a.plus(x, y)) != a.plus(s(c, x), s(c, y))
                    || s(a.plus(x, y), c) != a.plus(s(x, c), s(y, c))
                {
                    return Outcome::Fail(format!("c={c} a={x} b={y}"));
                }
            }
        }
    }
    Outcome::Pass
}

fn star_associativity(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_two_sided(a) {
        return o;
    }
    let n = a.order();
    for c in a.add_group().center().iter() {
        for x in 0..n {
            for y in 0..n {
                if a.star(a.star(x, y), c) != a.star(x, a.star(y, c)) {
                    return Outcome::Fail(format!("a={x} b={y} c={c}"));
                }
            }
        }
    }
    Outcome::Pass
}

// structure

fn sum_and_meet(a: &SkewBrace) -> (ElementSet, ElementSet) {
    let (sq, sq_op) = (a_squared(a), a_op_squared(a));
    let meet = sq.intersection(&sq_op);
    let join = a.add_group().subgroup_generated(&sq.union(&sq_op));
    (join, meet)
}

fn restricted(g: &FiniteGroup, s: &ElementSet) -> FiniteGroup {
    g.restrict(s).expect("subgroup").0
}

fn central_intersection(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_two_sided(a) {
        return o;
    }
    let (join, meet) = sum_and_meet(a);
    for x in meet.iter() {
        if let Some(y) = join.iter().find(|&y| a.plus(x, y) != a.plus(y, x)) {
            return Outcome::Fail(format!("{x} ∈ A²∩A²_op does not commute with {y}"));
        }
    }
    match a.substructure(&meet) {
        Ok((k, _)) if k.is_two_sided() && k.add_group().is_abelian() => Outcome::Pass,
        Ok(_) => Outcome::Fail("A²∩A²_op is not a two-sided brace".into()),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn extension(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_two_sided(a) {
        return o;
    }
    let (q, proj) = match weakly_trivial_quotient(a) {
        Ok(x) => x,
        Err(e) => return Outcome::Fail(e.to_string()),
    };
    if !is_weakly_trivial(&q) {
        return Outcome::Fail("quotient is not weakly trivial".into());
    }
    let kernel = proj.kernel(q.zero());
    match a.substructure(&kernel) {
        Ok((k, _)) if k.is_two_sided() && k.add_group().is_abelian() => Outcome::Pass,
        _ => Outcome::Fail(format!(
            "kernel {kernel:?} is not a two-sided brace of abelian type"
        )),
    }
}

fn weakly_trivial_quotient_prop(a: &SkewBrace) -> Outcome {
    match weakly_trivial_quotient(a) {
        Ok((q, _)) if is_weakly_trivial(&q) => Outcome::Pass,
        Ok(_) => Outcome::Fail("quotient is not weakly trivial".into()),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn weakly_trivial_two_sided(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_weakly_trivial(a) {
        return o;
    }
    match a.two_sided_violation() {
        None => Outcome::Pass,
        Some(w) => Outcome::Fail(format!("right identity fails at {w:?}")),
    }
}

fn weakly_trivial_ideals(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_weakly_trivial(a) {
        return o;
    }
    let e = match subdirect_embedding(a) {
        Ok(e) => e,
        Err(err) => return Outcome::Fail(err.to_string()),
    };
    let Ok(subs) = a.add_group().subgroups(SUBGROUP_LIMIT) else {
        return out_of_hypothesis("subgroup enumeration capped");
    };
    let padd = e.product.add_group();
    for s in subs {
        let ideal = is_ideal(a, &s).is_ideal();
        let normal_image = padd.is_normal(&e.image_of(&s)).unwrap_or(false);
        if ideal != normal_image {
            return Outcome::Fail(format!("{s:?}: ideal={ideal}, normal image={normal_image}"));
        }
    }
    Outcome::Pass
}

fn quotient_criterion(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_weakly_trivial(a) {
        return o;
    }
    let (sq, sq_op) = (a_squared(a), a_op_squared(a));
    let add = a.add_group();
    let join = add.subgroup_generated(&sq.union(&sq_op));
    for i in all_ideals(a) {
        let lhs = add.subgroup_generated(&i.intersection(&sq).union(&i.intersection(&sq_op)));
        let criterion = lhs == i.intersection(&join);
        let (q, _) = quotient_brace(a, &i).expect("ideal");
        if criterion != is_weakly_trivial(&q) {
            return Outcome::Fail(format!("I={i:?}: criterion={criterion}"));
        }
    }
    Outcome::Pass
}

fn weakly_trivial_lengths(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_weakly_trivial(a) {
        return o;
    }
    let (add, circ) = (a.add_group(), a.circ_group());
    if add.derived_length() != circ.derived_length() {
        return Outcome::Fail(format!(
            "derived lengths {:?} vs {:?}",
            add.derived_length(),
            circ.derived_length()
        ));
    }
    if add.nilpotency_class() != circ.nilpotency_class() {
        return Outcome::Fail(format!(
            "nilpotency classes {:?} vs {:?}",
            add.nilpotency_class(),
            circ.nilpotency_class()
        ));
    }
    if add.derived_length().is_some() && !series(a, SeriesKind::Derived).reaches_zero {
        return Outcome::Fail("soluble groups but the brace is not soluble".into());
    }
    if add.nilpotency_class().is_some()
        && !(series(a, SeriesKind::Left).reaches_zero && series(a, SeriesKind::Right).reaches_zero)
    {
        return Outcome::Fail(
            "nilpotent groups but the brace is not left and right nilpotent".into(),
        );
    }
    Outcome::Pass
}

fn nilpotency_flags(a: &SkewBrace) -> [bool; 3] {
    [SeriesKind::Left, SeriesKind::Right, SeriesKind::Strong].map(|k| series(a, k).reaches_zero)
}

fn weakly_trivial_nilpotency(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_weakly_trivial(a) {
        return o;
    }
    let f = nilpotency_flags(a);
    if f[0] == f[1] && f[1] == f[2] {
        Outcome::Pass
    } else {
        Outcome::Fail(format!("left/right/strong = {f:?}"))
    }
}

fn left_right_strong(a: &SkewBrace) -> Outcome {
    let [l, r, s] = nilpotency_flags(a);
    if s == (l && r) {
        Outcome::Pass
    } else {
        Outcome::Fail(format!("left={l} right={r} strong={s}"))
    }
}

fn soluble_bound(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_two_sided(a) {
        return o;
    }
    let Some(n) = a.circ_group().derived_length() else {
        return out_of_hypothesis("(A,∘) is not soluble");
    };
    match a.add_group().derived_length() {
        Some(m) if m <= n + 1 => Outcome::Pass,
        other => Outcome::Fail(format!("(A,∘) length {n}, (A,+) length {other:?}")),
    }
}

fn nilpotent_sum(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_two_sided(a) {
        return o;
    }
    let Some(n) = a.circ_group().nilpotency_class() else {
        return out_of_hypothesis("(A,∘) is not nilpotent");
    };
    let (join, _) = sum_and_meet(a);
    match restricted(a.add_group(), &join).nilpotency_class() {
        Some(c) if c <= n + 1 => Outcome::Pass,
        other => Outcome::Fail(format!("(A,∘) class {n}, (A²+A²_op,+) class {other:?}")),
    }
}

fn abelian_by_nilpotent(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_two_sided(a) {
        return o;
    }
    if a.circ_group().nilpotency_class().is_none() {
        return out_of_hypothesis("(A,∘) is not nilpotent");
    }
    let add = a.add_group();
    let (join, meet) = sum_and_meet(a);
    if !restricted(add, &meet).is_abelian() {
        return Outcome::Fail("A²∩A²_op is not abelian".into());
    }
    match add.quotient(&meet) {
        Ok((q, _)) if q.nilpotency_class().is_some() => {}
        _ => return Outcome::Fail("(A,+)/(A²∩A²_op) is not nilpotent".into()),
    }
    if restricted(add, &join).nilpotency_class().is_none() {
        return Outcome::Fail("(A²+A²_op,+) is not nilpotent".into());
    }
    match add.quotient(&join) {
        Ok((q, _)) if q.is_abelian() => {}
        _ => return Outcome::Fail("(A,+)/(A²+A²_op) is not abelian".into()),
    }
    Outcome::Pass
}

/// `X^(1) = X`, `X^(k+1) = X^(k) * X`, up to `k = count`.
fn right_powers(a: &SkewBrace, x: &ElementSet, count: usize) -> Vec<ElementSet> {
    let mut out = vec![x.clone()];
    while out.len() < count {
        let next = star_subgroup(a, out.last().unwrap(), x);
        out.push(next);
    }
    out
}

fn power_lemma(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_two_sided(a) {
        return o;
    }
    let right = series(a, SeriesKind::Right);
    let bound = right.length + 2;
    let center = a.add_group().center();
    let mut applied = false;
    for m in 1..=bound {
        let am = right.term(m);
        if !am.is_subset(&center) {
            continue;
        }
        applied = true;
        let powers = right_powers(a, am, bound);
        for k in 1..=bound {
            if *right.term(m + k) != star_subgroup(a, am, right.term(k)) {
                return Outcome::Fail(format!("A^({}) ≠ A^({m})*A^({k})", m + k));
            }
            if *right.term(m * k) != powers[k - 1] {
                return Outcome::Fail(format!("A^({}) ≠ (A^({m}))^({k})", m * k));
            }
        }
    }
    if applied {
        Outcome::Pass
    } else {
        out_of_hypothesis("no right-series term lies in Z(A,+)")
    }
}

fn nilpotency_equivalence(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_two_sided(a) {
        return o;
    }
    if a.add_group().nilpotency_class().is_none() {
        return out_of_hypothesis("(A,+) is not nilpotent");
    }
    let f = nilpotency_flags(a);
    if f[0] == f[1] && f[1] == f[2] {
        Outcome::Pass
    } else {
        Outcome::Fail(format!("left/right/strong = {f:?}"))
    }
}

fn nilpotent_type_strong(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_two_sided(a) {
        return o;
    }
    if a.add_group().nilpotency_class().is_none() {
        return out_of_hypothesis("(A,+) is not nilpotent");
    }
    if !series(a, SeriesKind::Strong).reaches_zero {
        return Outcome::Fail("not strongly nilpotent".into());
    }
    if a.circ_group().nilpotency_class().is_none() {
        return Outcome::Fail("(A,∘) is not nilpotent".into());
    }
    Outcome::Pass
}

fn goursat_embedding_round_trip(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_weakly_trivial(a) {
        return o;
    }
    let run = || -> Result<Option<String>> {
        let e = subdirect_embedding(a)?;
        let image = e.embedding.image();
        let datum = goursat_decompose(&e.trivial_factor, &e.almost_trivial_factor, &image)?;
        let back = goursat_compose(&e.trivial_factor, &e.almost_trivial_factor, &datum)?;
        if back.as_subset() != image {
            return Ok(Some("recomposed subset differs".into()));
        }
        let again = goursat_decompose(
            &e.trivial_factor,
            &e.almost_trivial_factor,
            &back.as_subset(),
        )?;
        Ok((again != datum).then(|| "datum changed on the second pass".to_string()))
    };
    match run() {
        Ok(None) => Outcome::Pass,
        Ok(Some(w)) => Outcome::Fail(w),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn triple_round_trip(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_weakly_trivial(a) {
        return o;
    }
    if a.order() > ISO_ORDER_CAP {
        return out_of_hypothesis("order above the isomorphism cap");
    }
    let run = || -> Result<bool> {
        let back = triple_to_brace(&brace_to_triple(a)?)?;
        Ok(back.find_isomorphism(a)?.is_some())
    };
    match run() {
        Ok(true) => Outcome::Pass,
        Ok(false) => Outcome::Fail("round trip is not isomorphic".into()),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

// primeness

fn primeness_implications(a: &SkewBrace) -> Outcome {
    let (p, sp, s, ss) = (
        is_prime(a),
        is_strongly_prime(a),
        is_semiprime(a),
        is_strongly_semiprime(a),
    );
    if (sp && !p) || (ss && !s) || (p && !s) || (sp && !ss) {
        Outcome::Fail(format!(
            "prime={p} strongly_prime={sp} semiprime={s} strongly_semiprime={ss}"
        ))
    } else {
        Outcome::Pass
    }
}

fn strong_primeness_equivalence(a: &SkewBrace) -> Outcome {
    if let Some(o) = require_two_sided(a) {
        return o;
    }
    let (p, sp, s, ss) = (
        is_prime(a),
        is_strongly_prime(a),
        is_semiprime(a),
        is_strongly_semiprime(a),
    );
    if p == sp && s == ss {
        Outcome::Pass
    } else {
        Outcome::Fail(format!(
            "prime={p} strongly_prime={sp} semiprime={s} strongly_semiprime={ss}"
        ))
    }
}

fn nonzero_ideals(a: &SkewBrace) -> Vec<ElementSet> {
    all_ideals(a).into_iter().filter(|i| i.len() > 1).collect()
}

fn nested_chain(a: &SkewBrace) -> Outcome {
    for i in nonzero_ideals(a) {
        let closure = star_closure(a, std::slice::from_ref(&i));
        let mut term = i.clone();
        loop {
            if !closure.reached.contains(&term) {
                return Outcome::Fail(format!("chain term {term:?} of I={i:?} missing"));
            }
            let next = star_subgroup(a, &term, &term);
            if next == term {
                break;
            }
            term = next;
        }
    }
    Outcome::Pass
}

fn almost_trivial_commutators(a: &SkewBrace) -> Outcome {
    let g = a.circ_group();
    if *a != almost_trivial(g) {
        return out_of_hypothesis("not almost trivial");
    }
    for i in nonzero_ideals(a) {
        let closure = star_closure(a, std::slice::from_ref(&i));
        for (set, how) in &closure.derivation {
            if let crate::primeness::Derivation::Product(x, y) = how {
                if g.commutator_of(x, y) != *set {
                    return Outcome::Fail(format!("{x:?} * {y:?} is not their commutator"));
                }
            }
        }
        let mut term = i.clone();
        loop {
            if !closure.reached.contains(&term) {
                return Outcome::Fail(format!("derived term {term:?} of I={i:?} missing"));
            }
            let next = g.commutator_of(&term, &term);
            if next == term {
                break;
            }
            term = next;
        }
    }
    Outcome::Pass
}

fn brute_force_oracle(a: &SkewBrace) -> Outcome {
    if a.order() > ORACLE_MAX_ORDER {
        return out_of_hypothesis("order above the oracle bound");
    }
    let ideals = nonzero_ideals(a);
    let reaches_zero = |family: &[ElementSet], depth| {
        brute_force_products(a, family, depth)
            .expect("depth within bounds")
            .iter()
            .any(|s| s.len() == 1)
    };
    // predicate level: vanishing products of one ideal, and of any ideals
    let semiprime_trees = ideals
        .iter()
        .all(|i| !reaches_zero(std::slice::from_ref(i), ORACLE_DEPTH));
    if semiprime_trees != is_strongly_semiprime(a) {
        return Outcome::Fail(format!(
            "strongly semiprime: closure={} trees={semiprime_trees}",
            !semiprime_trees
        ));
    }
    let prime_trees = !reaches_zero(&ideals, ORACLE_DEPTH);
    if prime_trees != is_strongly_prime(a) {
        return Outcome::Fail(format!(
            "strongly prime: closure={} trees={prime_trees}",
            !prime_trees
        ));
    }
    // family level: tree values lie in the closure, and a vanishing closure
    // witness is found again by enumeration at its own leaf count
    let mut families: Vec<Vec<ElementSet>> = ideals.iter().map(|i| vec![i.clone()]).collect();
    families.push(ideals);
    for family in families {
        let closure = star_closure(a, &family);
        let brute = brute_force_products(a, &family, ORACLE_DEPTH).expect("depth within bounds");
        if !brute.is_subset(&closure.reached) {
            return Outcome::Fail(format!(
                "tree value outside the closure for generators {family:?}"
            ));
        }
        if let Some(w) = closure.zero_witness() {
            let leaves = w.leaves().max(ORACLE_DEPTH);
            if leaves > MAX_BRUTE_FORCE_DEPTH {
                return out_of_hypothesis(
                    "zero witness needs more leaves than the enumeration allows",
                );
            }
            if w.evaluate(a).len() != 1 || !reaches_zero(&family, leaves) {
                return Outcome::Fail(format!(
                    "closure witness for {family:?} is not confirmed by enumeration"
                ));
            }
        }
    }
    Outcome::Pass
}

fn ybe_braid(a: &SkewBrace) -> Outcome {
    for (name, b) in [("A", a.clone()), ("A_op", a.opposite())] {
        match solution_from_brace(&b) {
            Ok(s) if s.check_braid() && s.is_non_degenerate() => {}
            Ok(s) => {
                return Outcome::Fail(format!("{name}: braid witness {:?}", s.braid_violation()))
            }
            Err(e) => return Outcome::Fail(format!("{name}: {e}")),
        }
    }
    Outcome::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::parse_brace;

    #[test]
    fn selectors() {
        assert_eq!(select("lemma:distributivity").unwrap().len(), 1);
        assert!(select("lemma:*").unwrap().len() > 5);
        assert_eq!(select("all").unwrap().len(), registry().len());
        assert!(select("lemma:nonexistent").is_err());
        let mut names: Vec<&str> = registry().iter().map(|p| p.selector).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), registry().len());
    }

    #[test]
    fn hypothesis_filter() {
        let sd = parse_brace("sd:c2-c3").unwrap();
        let p = select("theorem:strong-primeness-equivalence").unwrap();
        assert!(matches!(p[0].check(&sd), Outcome::OutOfHypothesis(_)));
        let wt = parse_brace("wt-d8").unwrap();
        assert_eq!(p[0].check(&wt), Outcome::Pass);
    }

    #[test]
    fn small_brace_passes_everything() {
        let a = parse_brace("optriv:S3").unwrap();
        for p in registry() {
            assert!(!p.check(&a).is_fail(), "{}: {:?}", p.selector, p.check(&a));
        }
    }
}

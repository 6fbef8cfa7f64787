use braceforge::brace::{almost_trivial, direct_product, trivial};
use braceforge::catalog::{parse_brace, parse_group};
use braceforge::groups::*;
use braceforge::ideals::{a_op_squared, a_squared, all_ideals, quotient_brace};
use braceforge::structure::*;
use braceforge::{ElementSet, FiniteGroup};
use proptest::prelude::*;

#[test]
fn wt100_embeds_in_its_factors() {
    let a = parse_brace("wt100").unwrap();
    assert!(is_weakly_trivial(&a));
    let e = subdirect_embedding(&a).unwrap();
    assert_eq!(e.product.order(), 400);
    assert_eq!(e.embedding.image().len(), 100);
    assert_eq!(e.embedding.kernel(e.product.zero()).len(), 1);
    let t = brace_to_triple(&a).unwrap();
    let c5c4 = make_presented_c5_c4().unwrap();
    assert!(t.g().find_isomorphism(&c5c4).unwrap().is_some());
    assert!(t.h().find_isomorphism(&c5c4).unwrap().is_some());
    assert_eq!(t.ab_g().order(), 4);
}

#[test]
fn wt100_is_a_pullback_over_c4() {
    let g = make_presented_c5_c4().unwrap();
    let p = triple_pullback(&Triple::diagonal(g.clone())).unwrap();
    assert_eq!(p.brace.order(), 100);
    assert!(p.proj_a.is_surjective() && p.proj_b.is_surjective());
    // both coordinates map to the same element of Ab(G) ≅ C4
    let (_, ab) = g.abelianization();
    assert!(p.pairs.iter().all(|&(x, y)| ab.apply(x) == ab.apply(y)));
    assert!(p
        .brace
        .find_isomorphism(&parse_brace("wt100").unwrap())
        .unwrap()
        .is_some());
}

#[test]
fn trivial_times_almost_trivial_is_weakly_trivial() {
    let a = trivial(&make_symmetric(3).unwrap());
    let b = almost_trivial(&make_dihedral(8).unwrap());
    let p = direct_product(&a, &b);
    assert!(is_weakly_trivial(&p));
    assert!(p.is_two_sided());
}

#[test]
fn quotient_of_semidirect_example() {
    let a = parse_brace("sd:c2-c3").unwrap();
    let (q, _) = weakly_trivial_quotient(&a).unwrap();
    assert!(is_weakly_trivial(&q));
}

#[test]
fn simple_catalog_braces_are_trivial_or_almost_trivial() {
    assert_eq!(
        classify_simple_two_sided(&parse_brace("optriv:A5").unwrap()).unwrap(),
        SimpleTwoSidedClass::AlmostTrivial
    );
    assert_eq!(
        classify_simple_two_sided(&parse_brace("triv:C7").unwrap()).unwrap(),
        SimpleTwoSidedClass::Trivial
    );
}

fn group_pool() -> Vec<FiniteGroup> {
    ["c4", "v4", "s3", "d8", "q8", "c6", "c2xc2xc2", "c2xs3"]
        .iter()
        .map(|s| parse_group(s).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_triples_round_trip(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), k in any::<prop::sample::Index>()) {
        let pool = group_pool();
        let g = pool[i.index(pool.len())].clone();
        let h = pool[j.index(pool.len())].clone();
        let (ab_g, ab_h) = (g.abelianization().0, h.abelianization().0);
        let thetas = ab_g.isomorphisms(&ab_h, 1000).unwrap();
        prop_assume!(!thetas.is_empty());
        let theta = thetas[k.index(thetas.len())].map().to_vec();
        let t = Triple::new(g.clone(), h.clone(), theta).unwrap();
        let a = triple_to_brace(&t).unwrap();
        prop_assert_eq!(a.order() * ab_g.order(), g.order() * h.order());
        prop_assert!(is_weakly_trivial(&a));
        prop_assert!(a.is_two_sided());
        let back = brace_to_triple(&a).unwrap();
        prop_assert!(triples_equivalent(&t, &back).unwrap());
        prop_assert!(triple_to_brace(&back).unwrap().find_isomorphism(&a).unwrap().is_some());
    }

    #[test]
    fn goursat_round_trip_on_random_data(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), pick in any::<prop::sample::Index>()) {
        let names = ["triv:S3", "optriv:S3", "optriv:D8", "triv:Q8", "wt-d8", "radical:2,3", "ef:d6"];
        let a = parse_brace(names[i.index(names.len())]).unwrap();
        let b = parse_brace(names[j.index(names.len())]).unwrap();
        let mut data = Vec::new();
        for ii in all_ideals(&a) {
            let (qa, _) = quotient_brace(&a, &ii).unwrap();
            for jj in all_ideals(&b) {
                let (qb, _) = quotient_brace(&b, &jj).unwrap();
                if qa.order() == qb.order() {
                    for rho in qa.isomorphisms(&qb, 1000).unwrap() {
                        data.push(GoursatDatum { i: ii.clone(), j: jj.clone(), rho });
                    }
                }
            }
        }
        let d = &data[pick.index(data.len())];
        let c = goursat_compose(&a, &b, d).unwrap();
        prop_assert!(c.proj_a.is_surjective() && c.proj_b.is_surjective());
        prop_assert_eq!(c.brace.order(), a.order() * d.j.len());
        prop_assert_eq!(&goursat_decompose(&a, &b, &c.as_subset()).unwrap(), d);
    }

    #[test]
    fn weakly_trivial_ideals_match_normal_images(k in any::<prop::sample::Index>()) {
        let names = ["wt-d8", "wt100", "triple:S3,S3,id", "triple:Q8,D8,auto", "triv:A4", "optriv:S4"];
        let a = parse_brace(names[k.index(names.len())]).unwrap();
        let e = subdirect_embedding(&a).unwrap();
        for s in a.add_group().normal_subgroups() {
            let ideal = all_ideals(&a).contains(&s);
            prop_assert_eq!(ideal, e.product.add_group().is_normal(&e.image_of(&s)).unwrap());
        }
        let (sq, sq_op) = (a_squared(&a), a_op_squared(&a));
        prop_assert_eq!(sq.intersection(&sq_op), ElementSet::singleton(a.order(), a.zero()));
    }

    #[test]
    fn series_terms_descend_through_ideals(k in any::<prop::sample::Index>()) {
        let names = ["wt-d8", "radical:2,4", "radical:ut3f3", "optriv:D8", "ef:s4", "sd:c2-s3", "prod:optriv:D8;triv:C3"];
        let a = parse_brace(names[k.index(names.len())]).unwrap();
        for kind in SeriesKind::ALL {
            let s = series(&a, kind);
            prop_assert_eq!(s.terms.len(), s.length);
            prop_assert_eq!(s.terms[0].len(), a.order());
            for w in s.terms.windows(2) {
                prop_assert!(w[1].is_subset(&w[0]) && w[1] != w[0]);
            }
            prop_assert_eq!(s.reaches_zero, s.terms.last().unwrap().len() == 1);
        }
    }
}

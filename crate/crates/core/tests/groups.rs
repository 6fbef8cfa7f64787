use braceforge::groups::*;
use braceforge::{ElementSet, FiniteGroup};
use proptest::prelude::*;

fn relabel(g: &FiniteGroup, perm: &[usize]) -> FiniteGroup {
    let n = g.order();
    let mut inv = vec![0; n];
    for (x, &p) in perm.iter().enumerate() {
        inv[p] = x;
    }
    let rows = (0..n)
        .map(|i| (0..n).map(|j| perm[g.mul(inv[i], inv[j])]).collect())
        .collect();
    FiniteGroup::from_table(rows).unwrap()
}

fn small_groups() -> Vec<FiniteGroup> {
    vec![
        make_cyclic(6).unwrap(),
        make_dihedral(8).unwrap(),
        make_quaternion().unwrap(),
        make_symmetric(3).unwrap(),
        make_alternating(4).unwrap(),
        make_presented_c5_c4().unwrap(),
    ]
}

#[test]
fn holomorph_of_c5_is_the_presented_group() {
    let hol = make_holomorph_cp(5).unwrap();
    assert_eq!(hol.order(), 20);
    assert!(hol
        .find_isomorphism(&make_presented_c5_c4().unwrap())
        .unwrap()
        .is_some());
    let hol3 = make_holomorph_cp(3).unwrap();
    assert!(!hol3.is_abelian());
    assert!(hol3
        .find_isomorphism(&make_symmetric(3).unwrap())
        .unwrap()
        .is_some());
}

#[test]
fn dihedral_six_subgroup_structure() {
    let d6 = make_dihedral(6).unwrap();
    let sizes: Vec<usize> = d6.normal_subgroups().iter().map(ElementSet::len).collect();
    assert_eq!(sizes, vec![1, 3, 6]);
    let rotations = d6.normal_subgroups()[1].clone();
    assert!(d6.is_normal(&rotations).unwrap());
    let reflection = (0..6).find(|&x| d6.element_order(x) == 2).unwrap();
    let r = d6.subgroup_generated(&ElementSet::singleton(6, reflection));
    assert!(!d6.is_normal(&r).unwrap());
}

#[test]
fn cyclic_four_has_three_subgroups() {
    let c4 = make_cyclic(4).unwrap();
    let subs = c4.subgroups(100).unwrap();
    assert_eq!(subs.len(), 3);
    assert!(subs.contains(&ElementSet::from_indices(4, [0, 2])));
}

#[test]
fn dihedral_eight_modulo_center() {
    let d8 = make_dihedral(8).unwrap();
    let z = d8.center();
    assert_eq!(z, d8.commutator_subgroup());
    let (q, proj) = d8.quotient(&z).unwrap();
    assert_eq!(q.order(), 4);
    assert!(q.is_abelian());
    assert_eq!(proj.kernel(q.identity()), z);
    assert_eq!(d8.nilpotency_class(), Some(2));
    let reflection = (0..8)
        .find(|&x| d8.element_order(x) == 2 && !z.contains(x))
        .unwrap();
    assert_eq!(
        d8.subgroup_generated(&ElementSet::singleton(8, reflection))
            .len(),
        2
    );
}

#[test]
fn presented_group_series() {
    let g = make_presented_c5_c4().unwrap();
    assert_eq!(g.derived_length(), Some(2));
    assert_eq!(g.nilpotency_class(), None);
    assert_eq!(g.commutator_subgroup().len(), 5);
    let ab = g.abelianization().0;
    assert!(ab
        .find_isomorphism(&make_cyclic(4).unwrap())
        .unwrap()
        .is_some());
}

#[test]
fn alternating_five_is_simple() {
    let a5 = make_alternating(5).unwrap();
    assert_eq!(a5.normal_subgroups().len(), 2);
    assert_eq!(a5.commutator_subgroup().len(), 60);
}

proptest! {
    #[test]
    fn relabeling_preserves_invariants(idx in 0usize..6, seed in any::<u64>()) {
        let g = &small_groups()[idx];
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by the seed
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = relabel(g, &perm);
        let phi = g.find_isomorphism(&h).unwrap().expect("relabeling is an isomorphism");
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(phi.apply(g.mul(x, y)), h.mul(phi.apply(x), phi.apply(y)));
            }
        }
        prop_assert_eq!(g.is_abelian(), h.is_abelian());
        prop_assert_eq!(g.derived_length(), h.derived_length());
        prop_assert_eq!(g.nilpotency_class(), h.nilpotency_class());
        prop_assert_eq!(g.center().len(), h.center().len());
        prop_assert_eq!(g.normal_subgroups().len(), h.normal_subgroups().len());
        prop_assert_eq!(g.conjugacy_classes().len(), h.conjugacy_classes().len());
    }

    #[test]
    fn generated_subgroups_are_subgroups(idx in 0usize..6, picks in proptest::collection::vec(any::<prop::sample::Index>(), 0..3)) {
        let g = &small_groups()[idx];
        let n = g.order();
        let s = ElementSet::from_indices(n, picks.iter().map(|p| p.index(n)));
        let h = g.subgroup_generated(&s);
        prop_assert!(g.is_subgroup(&h));
        prop_assert!(s.is_subset(&h));
        prop_assert_eq!(n % h.len(), 0);
        prop_assert_eq!(g.subgroup_generated(&h), h.clone());
        let (sub, elems) = g.restrict(&h).unwrap();
        prop_assert_eq!(sub.order(), h.len());
        prop_assert!(sub.verify().is_ok());
        prop_assert_eq!(elems.len(), h.len());
    }

    #[test]
    fn quotients_by_normal_subgroups(idx in 0usize..6, k in any::<prop::sample::Index>()) {
        let g = &small_groups()[idx];
        let normals = g.normal_subgroups();
        let n = &normals[k.index(normals.len())];
        let (q, proj) = g.quotient(n).unwrap();
        prop_assert_eq!(q.order() * n.len(), g.order());
        prop_assert_eq!(proj.kernel(q.identity()), n.clone());
        for x in 0..g.order() {
            for y in 0..g.order() {
                prop_assert_eq!(proj.apply(g.mul(x, y)), q.mul(proj.apply(x), proj.apply(y)));
            }
        }
    }
}

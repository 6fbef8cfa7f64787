use std::sync::OnceLock;

use braceforge::catalog::{catalog_up_to, parse_brace};
use braceforge::ideals::all_ideals;
use braceforge::primeness::*;
use braceforge::ybe::{solution_from_brace, SetSolution};
use braceforge::{ElementSet, SkewBrace};
use proptest::prelude::*;

fn braces() -> &'static [(String, SkewBrace)] {
    static CELL: OnceLock<Vec<(String, SkewBrace)>> = OnceLock::new();
    CELL.get_or_init(|| catalog_up_to(32))
}

fn nonzero_ideals(a: &SkewBrace) -> Vec<ElementSet> {
    all_ideals(a).into_iter().filter(|i| i.len() > 1).collect()
}

#[test]
fn almost_trivial_dihedral_is_not_semiprime() {
    let a = parse_brace("optriv:D8").unwrap();
    let w = semiprime_witness(&a).unwrap();
    assert_eq!(w.len(), 2);
    assert!(!is_semiprime(&a));
    assert!(is_prime(&parse_brace("optriv:A5").unwrap()));
    assert!(is_strongly_prime(&parse_brace("optriv:A5").unwrap()));
}

#[test]
fn almost_trivial_s4_needs_eight_leaves() {
    // S4 > A4 > V4 > 1: the single-ideal family of S4 only vanishes with 8 leaves
    let a = parse_brace("optriv:S4").unwrap();
    let whole = ElementSet::full(24);
    let closure = star_closure(&a, std::slice::from_ref(&whole));
    assert!(closure.contains_zero);
    let w = closure.zero_witness().unwrap();
    assert_eq!(w.leaves(), 8);
    let reaches = |d| {
        brute_force_products(&a, std::slice::from_ref(&whole), d)
            .unwrap()
            .iter()
            .any(|s| s.len() == 1)
    };
    assert!(!reaches(7));
    assert!(reaches(8));
    assert!(matches!(
        brute_force_products(&a, &[whole], 9),
        Err(braceforge::Error::Capacity(_))
    ));
}

#[test]
fn corrupted_solution_reports_least_witness() {
    let a = parse_brace("triv:S3").unwrap();
    let s = solution_from_brace(&a).unwrap();
    let n = s.size();
    let mut table: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| s.r(x, y))
        .collect();
    table.swap(7, 8);
    let bad = SetSolution::from_table(n, table).unwrap();
    let brute = (0..n)
        .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| [x, y, z])))
        .find(|&[x, y, z]| {
            let r12 = |(a, b, c): (usize, usize, usize)| {
                let (p, q) = bad.r(a, b);
                (p, q, c)
            };
            let r23 = |(a, b, c): (usize, usize, usize)| {
                let (p, q) = bad.r(b, c);
                (a, p, q)
            };
            r12(r23(r12((x, y, z)))) != r23(r12(r23((x, y, z))))
        });
    assert_eq!(bad.braid_violation(), brute);
    assert!(!bad.check_braid());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_order_independent(k in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let (_, a) = &braces()[k.index(braces().len())];
        let ideals = nonzero_ideals(a);
        let mut shuffled = ideals.clone();
        let mut s = seed;
        for i in (1..shuffled.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (s >> 33) as usize % (i + 1));
        }
        let c1 = star_closure(a, &ideals);
        let c2 = star_closure(a, &shuffled);
        prop_assert_eq!(&c1.reached, &c2.reached);
        prop_assert_eq!(c1.contains_zero, c2.contains_zero);
    }

    #[test]
    fn closure_witnesses_evaluate(k in any::<prop::sample::Index>(), g in any::<prop::sample::Index>()) {
        let (_, a) = &braces()[k.index(braces().len())];
        let ideals = nonzero_ideals(a);
        prop_assume!(!ideals.is_empty());
        let gen = ideals[g.index(ideals.len())].clone();
        let c = star_closure(a, std::slice::from_ref(&gen));
        for target in &c.reached {
            let tree = c.witness(target).unwrap();
            prop_assert_eq!(&tree.evaluate(a), target);
            prop_assert_eq!(tree.value(), target);
        }
        let brute = brute_force_products(a, std::slice::from_ref(&gen), 5).unwrap();
        prop_assert!(brute.is_subset(&c.reached));
    }

    #[test]
    fn brace_solutions_are_braided(k in any::<prop::sample::Index>()) {
        let (_, a) = &braces()[k.index(braces().len())];
        for b in [a.clone(), a.opposite()] {
            let s = solution_from_brace(&b).unwrap();
            prop_assert!(s.is_bijective());
            prop_assert!(s.is_non_degenerate());
            prop_assert_eq!(s.braid_violation(), None);
            let file = serde_json::to_string(&s.to_file()).unwrap();
            let back: braceforge::ybe::SolutionFile = serde_json::from_str(&file).unwrap();
            prop_assert_eq!(back.into_solution().unwrap(), s);
        }
    }
}

//! Group builders with fixed element labellings.
//!
//! | builder | labelling |
//! |---|---|
//! | [`make_cyclic`] | `i` is the residue `i mod n` |
//! | [`make_dihedral`] | `r^k s^f` is `f * n + k` (`n` rotations) |
//! | [`make_presented_c5_c4`] | `a^k b^l` is `4k + l` |
//! | [`make_holomorph_cp`] | affine map `t -> u t + b` is `b (p - 1) + (u - 1)` |
//! | [`make_quaternion`] | `±q` is `4 s + q`, `s = 0` for `+`, `q` in `1, i, j, k` |
//! | permutation groups | breadth-first discovery order from the identity |

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

fn from_fn(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<FiniteGroup> {
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            table.push(mul(a, b));
        }
    }
    FiniteGroup::from_flat(order, table)
}

pub fn make_cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidOrder {
            order: 0,
            reason: "cyclic group of order zero".into(),
        });
    }
    from_fn(n, |a, b| (a + b) % n)
}

/// Dihedral group of order `two_n`.
pub fn make_dihedral(two_n: usize) -> Result<FiniteGroup> {
    if two_n < 2 || two_n % 2 == 1 {
        return Err(Error::InvalidOrder {
            order: two_n,
            reason: "dihedral groups have even order at least 2".into(),
        });
    }
    let n = two_n / 2;
    from_fn(two_n, |x, y| {
        let (a, e) = (x % n, x / n);
        let (b, f) = (y % n, y / n);
        let k = if e == 0 { (a + b) % n } else { (a + n - b) % n };
        ((e + f) % 2) * n + k
    })
}

/// `<a, b | a^5 = b^4 = 1, b^-1 a b = a^2>`. Conjugation by `b` sends `a` to
/// `a^3`, so `(a^k b^l)(a^m b^n) = a^(k + 3^l m) b^(l + n)`.
pub fn make_presented_c5_c4() -> Result<FiniteGroup> {
    const POW3: [usize; 4] = [1, 3, 4, 2];
    from_fn(20, |x, y| {
        let (k, l) = (x / 4, x % 4);
        let (m, n) = (y / 4, y % 4);
        ((k + POW3[l] * m) % 5) * 4 + (l + n) % 4
    })
}

pub(crate) fn is_prime_number(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// `Hol(C_p) = C_p ⋊ Aut(C_p)`, the affine maps `t -> u t + b` of `Z/p`.
pub fn make_holomorph_cp(p: usize) -> Result<FiniteGroup> {
    if !is_prime_number(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let q = p - 1;
    from_fn(p * q, |x, y| {
        let (b, u) = (x / q, x % q + 1);
        let (c, v) = (y / q, y % q + 1);
        ((b + u * c) % p) * q + (u * v % p - 1)
    })
}

pub fn make_quaternion() -> Result<FiniteGroup> {
    // unit products (sign, unit) for 1, i, j, k
    const T: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    from_fn(8, |x, y| {
        let (s, q) = (x / 4, x % 4);
        let (t, r) = (y / 4, y % 4);
        let (u, w) = T[q][r];
        ((s + t + u) % 2) * 4 + w
    })
}

/// Group generated by permutations of `0..degree`, composed right to left.
pub fn from_permutations(generators: &[Vec<usize>]) -> Result<FiniteGroup> {
    let degree = generators.first().map_or(0, Vec::len);
    for g in generators {
        let mut seen = vec![false; degree];
        if g.len() != degree
            || g.iter()
                .any(|&i| i >= degree || std::mem::replace(&mut seen[i], true))
        {
            return Err(Error::InvalidArgument(format!(
                "{g:?} is not a permutation of 0..{degree}"
            )));
        }
    }
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&i| p[i]).collect() };
    let mut elems: Vec<Vec<usize>> = vec![(0..degree).collect()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(elems[0].clone(), 0)]);
    let mut i = 0;
    while i < elems.len() {
        for g in generators {
            let y = compose(&elems[i], g);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elems.len());
                elems.push(y);
            }
        }
        i += 1;
    }
    let n = elems.len();
    from_fn(n, |a, b| index[&compose(&elems[a], &elems[b])])
}

fn cycle(degree: usize, points: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for w in 0..points.len() {
        p[points[w]] = points[(w + 1) % points.len()];
    }
    p
}

pub fn make_symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidOrder {
            order: 0,
            reason: "symmetric group on no points".into(),
        });
    }
    if n == 1 {
        return make_cyclic(1);
    }
    let all: Vec<usize> = (0..n).collect();
    from_permutations(&[cycle(n, &[0, 1]), cycle(n, &all)])
}

/// Alternating group on `n >= 3` points, generated by 3-cycles `(0 1 i)`.
pub fn make_alternating(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return make_cyclic(1);
    }
    let gens: Vec<Vec<usize>> = (2..n).map(|i| cycle(n, &[0, 1, i])).collect();
    from_permutations(&gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::ElementSet;

    #[test]
    fn cyclic_basics() {
        let c1 = make_cyclic(1).unwrap();
        assert_eq!(c1.rows(), vec![vec![0]]);
        let c4 = make_cyclic(4).unwrap();
        assert_eq!(c4.mul(1, 3), 0);
        assert_eq!(c4.inv(1), 3);
        assert!(matches!(make_cyclic(0), Err(Error::InvalidOrder { .. })));
    }

    #[test]
    fn c5_nonidentity_elements_have_order_five() {
        let c5 = make_cyclic(5).unwrap();
        // exhaustive: smallest k >= 1 with k*x = 0 mod 5
        for x in 1..5 {
            let brute = (1..=5).find(|k| (k * x) % 5 == 0).unwrap();
            assert_eq!(brute, 5);
            assert_eq!(c5.element_order(x), 5);
        }
    }

    #[test]
    fn dihedral_eight() {
        let d8 = make_dihedral(8).unwrap();
        assert_eq!(d8.center().len(), 2);
        assert_eq!(d8.commutator_subgroup().len(), 2);
        assert_eq!(d8.center(), d8.commutator_subgroup());
        assert!(matches!(make_dihedral(7), Err(Error::InvalidOrder { .. })));
        let d2 = make_dihedral(2).unwrap();
        assert!(d2
            .find_isomorphism(&make_cyclic(2).unwrap())
            .unwrap()
            .is_some());
    }

    #[test]
    fn presented_c5_c4() {
        let g = make_presented_c5_c4().unwrap();
        let a = 4; // a^1 b^0
        let b = 1; // a^0 b^1
        let a2 = g.mul(a, a);
        assert_eq!(g.mul(g.mul(g.inv(b), a), b), a2);
        let derived = g.commutator_subgroup();
        assert_eq!(derived, g.subgroup_generated(&ElementSet::singleton(20, a)));
        assert_eq!(derived.len(), 5);
        let (ab, proj) = g.abelianization();
        assert!(ab
            .find_isomorphism(&make_cyclic(4).unwrap())
            .unwrap()
            .is_some());
        assert_eq!(ab.element_order(proj.apply(b)), 4);
    }

    #[test]
    fn holomorphs() {
        let h5 = make_holomorph_cp(5).unwrap();
        assert_eq!(h5.order(), 20);
        assert!(h5
            .find_isomorphism(&make_presented_c5_c4().unwrap())
            .unwrap()
            .is_some());
        let h3 = make_holomorph_cp(3).unwrap();
        assert!(!h3.is_abelian());
        assert!(h3
            .find_isomorphism(&make_symmetric(3).unwrap())
            .unwrap()
            .is_some());
        let h2 = make_holomorph_cp(2).unwrap();
        assert_eq!(h2.order(), 2);
        assert!(h2.is_abelian());
        assert!(matches!(
            make_holomorph_cp(6),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn permutation_groups() {
        assert_eq!(make_symmetric(4).unwrap().order(), 24);
        assert_eq!(make_alternating(4).unwrap().order(), 12);
        assert_eq!(make_alternating(5).unwrap().order(), 60);
        let q8 = make_quaternion().unwrap();
        assert_eq!(q8.center().len(), 2);
        assert!(q8
            .find_isomorphism(&make_dihedral(8).unwrap())
            .unwrap()
            .is_none());
    }
}

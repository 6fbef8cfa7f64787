//! Jacobson radical rings and their correspondence with two-sided braces of
//! abelian type.

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A finite ring without unit whose adjoint operation `a∘b = a + b + ab`
/// is a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalRing {
    add: FiniteGroup,
    mult: Vec<usize>,
}

impl RadicalRing {
    /// Checks that `add` is abelian, `mult` is associative and bi-additive,
    /// and the adjoint operation is a group.
    pub fn new(add: FiniteGroup, mult: Vec<Vec<usize>>) -> Result<Self> {
        let n = add.order();
        if mult.len() != n
            || mult
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
        {
            return Err(Error::InvalidArgument(
                "multiplication table has the wrong shape".into(),
            ));
        }
        if !add.is_abelian() {
            return Err(Error::Precondition(
                "additive group of a ring must be abelian".into(),
            ));
        }
        let ring = Self {
            add,
            mult: mult.into_iter().flatten().collect(),
        };
        ring.check_ring_axioms()?;
        ring.adjoint_group()?;
        Ok(ring)
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order() + b]
    }

    pub fn add_group(&self) -> &FiniteGroup {
        &self.add
    }

    fn check_ring_axioms(&self) -> Result<()> {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::Precondition(format!(
                            "multiplication not associative at ({a}, {b}, {c})"
                        )));
                    }
                    let bc = self.add.mul(b, c);
                    if self.mul(a, bc) != self.add.mul(self.mul(a, b), self.mul(a, c)) {
                        return Err(Error::Precondition(format!(
                            "left distributivity fails at ({a}, {b}, {c})"
                        )));
                    }
                    if self.mul(bc, a) != self.add.mul(self.mul(b, a), self.mul(c, a)) {
                        return Err(Error::Precondition(format!(
                            "right distributivity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn adjoint_group(&self) -> Result<FiniteGroup> {
        let n = self.order();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(self.add.mul(self.add.mul(a, b), self.mul(a, b)));
            }
        }
        FiniteGroup::from_flat(n, table)
            .map_err(|e| Error::Precondition(format!("adjoint operation is not a group: {e}")))
    }

    /// The two-sided brace `(R, +, ∘)` with `a∘b = a + b + ab`.
    pub fn to_brace(&self) -> Result<SkewBrace> {
        SkewBrace::new(self.add.clone(), self.adjoint_group()?)
    }

    /// Nilpotent ring `pZ / p^k Z`; element `i` is the residue `p i`.
    pub fn multiples_mod(p: usize, k: u32) -> Result<Self> {
        if p < 2 || k < 1 {
            return Err(Error::InvalidArgument(format!(
                "need p >= 2 and k >= 1, got p = {p}, k = {k}"
            )));
        }
        let modulus = p.pow(k);
        let n = modulus / p;
        let add = FiniteGroup::from_flat(n, (0..n * n).map(|x| (x / n + x % n) % n).collect())?;
        // (p a)(p b) = p (p a b)
        let mult = (0..n)
            .map(|a| (0..n).map(|b| (p * a * b) % n).collect())
            .collect();
        Self::new(add, mult)
    }

    /// Strictly upper triangular `dim × dim` matrices over `F_p`. The
    /// entries above the diagonal, read row by row, are the base-`p` digits
    /// of the element index (least significant first).
    pub fn strictly_upper_triangular(p: usize, dim: usize) -> Result<Self> {
        if !crate::groups::is_prime_number(p) || dim < 1 {
            return Err(Error::InvalidArgument(format!(
                "need prime p and dim >= 1, got p = {p}, dim = {dim}"
            )));
        }
        let slots: Vec<(usize, usize)> = (0..dim)
            .flat_map(|i| (i + 1..dim).map(move |j| (i, j)))
            .collect();
        let n = p.pow(slots.len() as u32);
        let decode = |x: usize| -> Vec<Vec<usize>> {
            let mut m = vec![vec![0; dim]; dim];
            let mut x = x;
            for &(i, j) in &slots {
                m[i][j] = x % p;
                x /= p;
            }
            m
        };
        let encode = |m: &Vec<Vec<usize>>| -> usize {
            slots.iter().rev().fold(0, |acc, &(i, j)| acc * p + m[i][j])
        };
        let mats: Vec<Vec<Vec<usize>>> = (0..n).map(decode).collect();
        let mut add = Vec::with_capacity(n * n);
        let mut mult = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let mut s = vec![vec![0; dim]; dim];
                let mut t = vec![vec![0; dim]; dim];
                for i in 0..dim {
                    for j in 0..dim {
                        s[i][j] = (mats[a][i][j] + mats[b][i][j]) % p;
                        t[i][j] = (0..dim)
                            .map(|k| mats[a][i][k] * mats[b][k][j])
                            .sum::<usize>()
                            % p;
                    }
                }
                add.push(encode(&s));
                mult[a][b] = encode(&t);
            }
        }
        Self::new(FiniteGroup::from_flat(n, add)?, mult)
    }
}

/// The radical ring of a two-sided brace of abelian type, with `*` as the
/// ring multiplication.
pub fn to_radical_ring(a: &SkewBrace) -> Result<RadicalRing> {
    if !a.add_group().is_abelian() {
        return Err(Error::Precondition("additive group is not abelian".into()));
    }
    if let Some(w) = a.two_sided_violation() {
        return Err(Error::Precondition(format!(
            "brace is not two-sided, witness {w:?}"
        )));
    }
    let n = a.order();
    let mult = (0..n)
        .map(|x| (0..n).map(|y| a.star(x, y)).collect())
        .collect();
    let ring = RadicalRing::new(a.add_group().clone(), mult).map_err(|e| {
        Error::Internal(format!("two-sided brace did not yield a radical ring: {e}"))
    })?;
    for x in 0..n {
        for y in 0..n {
            let adj = a.plus(a.plus(x, y), ring.mul(x, y));
            if adj != a.circ(x, y) {
                return Err(Error::Internal(format!("a∘b != a + b + ab at ({x}, {y})")));
            }
        }
    }
    Ok(ring)
}

//! Set-theoretic solutions of the Yang–Baxter equation.

use serde::{Deserialize, Serialize};

use crate::brace::SkewBrace;
use crate::error::{Error, Result};

/// `r: X × X -> X × X` on `X = {0, .., size - 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSolution {
    size: usize,
    table: Vec<(usize, usize)>,
}

/// JSON form: `r[x][y] = [u, v]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolutionFile {
    pub size: usize,
    pub r: Vec<Vec<[usize; 2]>>,
}

impl SetSolution {
    /// `table[x * size + y] = r(x, y)`. Only the shape is checked.
    pub fn from_table(size: usize, table: Vec<(usize, usize)>) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidOrder {
                order: 0,
                reason: "a solution needs a nonempty set".into(),
            });
        }
        if table.len() != size * size {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries, got {}",
                size * size,
                table.len()
            )));
        }
        if let Some(bad) = table.iter().position(|&(u, v)| u >= size || v >= size) {
            return Err(Error::InvalidArgument(format!(
                "entry {bad} is out of range"
            )));
        }
        Ok(Self { size, table })
    }

    pub fn flip(size: usize) -> Self {
        let table = (0..size)
            .flat_map(|x| (0..size).map(move |y| (y, x)))
            .collect();
        Self { size, table }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        self.table[x * self.size + y]
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.table.len()];
        self.table
            .iter()
            .all(|&(u, v)| !std::mem::replace(&mut seen[u * self.size + v], true))
    }

    /// Every `y -> σ_x(y)` and every `x -> τ_y(x)` is a permutation, where
    /// `r(x, y) = (σ_x(y), τ_y(x))`.
    pub fn is_non_degenerate(&self) -> bool {
        let n = self.size;
        let mut seen = vec![0usize; n];
        for x in 0..n {
            for y in 0..n {
                let u = self.r(x, y).0;
                if seen[u] == x + 1 {
                    return false;
                }
                seen[u] = x + 1;
            }
        }
        let mut seen = vec![0usize; n];
        for y in 0..n {
            for x in 0..n {
                let v = self.r(x, y).1;
                if seen[v] == y + 1 {
                    return false;
                }
                seen[v] = y + 1;
            }
        }
        true
    }

    /// Least `(x, y, z)` on which `r1 r2 r1` and `r2 r1 r2` differ.
    pub fn braid_violation(&self) -> Option<[usize; 3]> {
        let n = self.size;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    // (r × id)(id × r)(r × id)
                    let (a1, b1) = self.r(x, y);
                    let (b2, c2) = self.r(b1, z);
                    let (a3, b3) = self.r(a1, b2);
                    let lhs = (a3, b3, c2);
                    // (id × r)(r × id)(id × r)
                    let (q1, r1) = self.r(y, z);
                    let (p2, q2) = self.r(x, q1);
                    let (q3, r3) = self.r(q2, r1);
                    if lhs != (p2, q3, r3) {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    pub fn check_braid(&self) -> bool {
        self.braid_violation().is_none()
    }

    pub fn to_file(&self) -> SolutionFile {
        SolutionFile {
            size: self.size,
            r: (0..self.size)
                .map(|x| {
                    (0..self.size)
                        .map(|y| <[usize; 2]>::from(self.r(x, y)))
                        .collect()
                })
                .collect(),
        }
    }
}

impl SolutionFile {
    pub fn into_solution(self) -> Result<SetSolution> {
        if self.r.len() != self.size || self.r.iter().any(|row| row.len() != self.size) {
            return Err(Error::InvalidArgument(
                "solution table is not square".into(),
            ));
        }
        SetSolution::from_table(
            self.size,
            self.r.into_iter().flatten().map(|[u, v]| (u, v)).collect(),
        )
    }
}

/// `r(x, y) = (λ_x(y), ρ_y(x))` with `ρ_y(x) = λ_x(y)⁻¹ ∘ x ∘ y`, checked
/// exhaustively before it is returned.
pub fn solution_from_brace(a: &SkewBrace) -> Result<SetSolution> {
    let n = a.order();
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let u = a.lambda(x, y);
            let v = a.circ(a.circ(a.circ_inv(u), x), y);
            table.push((u, v));
        }
    }
    let s = SetSolution { size: n, table };
    if let Some(w) = s.braid_violation() {
        return Err(Error::Internal(format!(
            "brace solution violates the braid relation at {w:?}"
        )));
    }
    if !s.is_non_degenerate() || !s.is_bijective() {
        return Err(Error::Internal("brace solution is degenerate".into()));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{almost_trivial, trivial};
    use crate::groups::*;

    #[test]
    fn trivial_brace_gives_conjugation() {
        let g = make_symmetric(3).unwrap();
        let s = solution_from_brace(&trivial(&g)).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(s.r(x, y), (y, g.mul(g.mul(g.inv(y), x), y)));
            }
        }
    }

    #[test]
    fn one_element_and_flip() {
        let s = solution_from_brace(&trivial(&make_cyclic(1).unwrap())).unwrap();
        assert_eq!(s.r(0, 0), (0, 0));
        assert!(SetSolution::flip(4).check_braid());
        assert!(SetSolution::flip(4).is_non_degenerate());
    }

    #[test]
    fn corrupted_table_fails() {
        let s = solution_from_brace(&almost_trivial(&make_dihedral(8).unwrap())).unwrap();
        assert!(s.check_braid());
        let mut table = s.table.clone();
        table.swap(1, 2);
        let bad = SetSolution::from_table(8, table).unwrap();
        let w = bad.braid_violation().unwrap();
        assert!(w.iter().all(|&i| i < 8));
    }

    #[test]
    fn file_round_trip() {
        let s = solution_from_brace(&trivial(&make_cyclic(3).unwrap())).unwrap();
        let json = serde_json::to_string(&s.to_file()).unwrap();
        let back: SolutionFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.into_solution().unwrap(), s);
    }
}

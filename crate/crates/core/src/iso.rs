//! Backtracking isomorphism search over finite structures given by
//! multiplication tables.
//!
//! The domain is generated (under its first operation) by a greedily chosen
//! generating sequence. A candidate isomorphism is fixed by the images of
//! those generators; images are restricted to elements with matching
//! element-order profiles and the partial map is propagated along
//! `x -> x * g` so that inconsistencies prune early. Any further operations
//! (the circle operation of a brace) are checked on the partial map as a
//! necessary condition and exhaustively on every complete candidate.

use std::ops::ControlFlow;

use crate::error::{Error, Result};

const UNSET: usize = usize::MAX;

/// A finite carrier `0..order` with one or more binary operations, each a
/// group with the same identity.
#[derive(Clone, Copy)]
pub(crate) struct Structure<'a> {
    pub order: usize,
    pub identity: usize,
    /// Row-major `order * order` tables. The first one drives generation.
    pub ops: &'a [&'a [usize]],
}

impl Structure<'_> {
    #[inline]
    fn op(&self, k: usize, a: usize, b: usize) -> usize {
        self.ops[k][a * self.order + b]
    }

    fn element_order(&self, k: usize, x: usize) -> usize {
        let mut y = x;
        let mut n = 1;
        while y != self.identity {
            y = self.op(k, y, x);
            n += 1;
        }
        n
    }

    fn profile(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| {
                (0..self.ops.len())
                    .map(|k| self.element_order(k, x))
                    .collect()
            })
            .collect()
    }

    /// Greedy generating sequence under the first operation, preferring
    /// elements of large order.
    fn generators(&self, profile: &[Vec<usize>]) -> Vec<usize> {
        let mut candidates: Vec<usize> = (0..self.order).collect();
        candidates.sort_by(|&a, &b| profile[b][0].cmp(&profile[a][0]).then(a.cmp(&b)));
        let mut reached = vec![false; self.order];
        reached[self.identity] = true;
        let mut members = vec![self.identity];
        let mut gens = Vec::new();
        for c in candidates {
            if reached[c] {
                continue;
            }
            gens.push(c);
            let mut i = 0;
            // re-close: every member times every generator
            let mut queue = members.clone();
            while i < queue.len() {
                let x = queue[i];
                i += 1;
                for &g in &gens {
                    let y = self.op(0, x, g);
                    if !reached[y] {
                        reached[y] = true;
                        members.push(y);
                        queue.push(y);
                    }
                }
            }
            if members.len() == self.order {
                break;
            }
        }
        gens
    }
}

struct Search<'a, F> {
    dom: Structure<'a>,
    cod: Structure<'a>,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
    assigned: Vec<usize>,
    visit: F,
}

impl<F: FnMut(&[usize]) -> ControlFlow<()>> Search<'_, F> {
    fn run(&mut self, level: usize) -> ControlFlow<()> {
        if level == self.gens.len() {
            if self.assigned.len() == self.dom.order && self.full_check() {
                return (self.visit)(&self.map);
            }
            return ControlFlow::Continue(());
        }
        for ci in 0..self.candidates[level].len() {
            let h = self.candidates[level][ci];
            if self.used[h] {
                continue;
            }
            let mark = self.assigned.len();
            if self.extend(level, h) {
                self.run(level + 1)?;
            }
            for &x in &self.assigned[mark..] {
                self.used[self.map[x]] = false;
                self.map[x] = UNSET;
            }
            self.assigned.truncate(mark);
        }
        ControlFlow::Continue(())
    }

    /// Assign `gens[level] -> h` and propagate. Returns false on conflict;
    /// the caller rolls back everything past its mark either way.
    fn extend(&mut self, level: usize, h: usize) -> bool {
        let gen_images: Vec<usize> = self.gens[..level]
            .iter()
            .map(|&g| self.map[g])
            .chain(std::iter::once(h))
            .collect();
        let active = &self.gens[..=level];
        let mut i = 0;
        let mut queue: Vec<usize> = self.assigned.clone();
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            let fx = self.map[x];
            for (j, &g) in active.iter().enumerate() {
                let y = self.dom.op(0, x, g);
                let fy = self.cod.op(0, fx, gen_images[j]);
                if self.map[y] != UNSET {
                    if self.map[y] != fy {
                        return false;
                    }
                } else {
                    if self.used[fy] {
                        return false;
                    }
                    self.map[y] = fy;
                    self.used[fy] = true;
                    self.assigned.push(y);
                    queue.push(y);
                }
            }
        }
        // necessary condition for the remaining operations
        for k in 1..self.dom.ops.len() {
            for &x in &self.assigned {
                for (j, &g) in active.iter().enumerate() {
                    let y = self.dom.op(k, x, g);
                    if self.map[y] != UNSET
                        && self.map[y] != self.cod.op(k, self.map[x], gen_images[j])
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn full_check(&self) -> bool {
        let n = self.dom.order;
        (1..self.dom.ops.len()).all(|k| {
            (0..n).all(|x| {
                (0..n).all(|y| {
                    self.map[self.dom.op(k, x, y)] == self.cod.op(k, self.map[x], self.map[y])
                })
            })
        })
    }
}

/// Calls `visit` on every isomorphism `dom -> cod` (as an index map) until it
/// breaks. Isomorphisms are visited in a deterministic order.
pub(crate) fn for_each_isomorphism<F>(dom: Structure<'_>, cod: Structure<'_>, visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if dom.order != cod.order || dom.ops.len() != cod.ops.len() {
        return;
    }
    let dp = dom.profile();
    let cp = cod.profile();
    let mut ds = dp.clone();
    let mut cs = cp.clone();
    ds.sort();
    cs.sort();
    if ds != cs {
        return;
    }
    let gens = dom.generators(&dp);
    let candidates = gens
        .iter()
        .map(|&g| (0..cod.order).filter(|&h| cp[h] == dp[g]).collect())
        .collect();
    let mut map = vec![UNSET; dom.order];
    let mut used = vec![false; cod.order];
    map[dom.identity] = cod.identity;
    used[cod.identity] = true;
    let mut search = Search {
        dom,
        cod,
        gens,
        candidates,
        map,
        used,
        assigned: vec![dom.identity],
        visit,
    };
    let _ = search.run(0);
}

pub(crate) fn find_isomorphism(dom: Structure<'_>, cod: Structure<'_>) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_isomorphism(dom, cod, |m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// All isomorphisms, failing with a capacity error past `limit`.
pub(crate) fn all_isomorphisms(
    dom: Structure<'_>,
    cod: Structure<'_>,
    limit: usize,
) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut overflow = false;
    for_each_isomorphism(dom, cod, |m| {
        if out.len() == limit {
            overflow = true;
            return ControlFlow::Break(());
        }
        out.push(m.to_vec());
        ControlFlow::Continue(())
    });
    if overflow {
        return Err(Error::Capacity(format!(
            "more than {limit} isomorphisms between structures of order {}",
            dom.order
        )));
    }
    Ok(out)
}

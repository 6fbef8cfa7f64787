//! Builder expressions for groups and braces, and the built-in catalog.
//!
//! Groups: `C<n>`, `D<2n>`, `S<n>`, `A<n>` (n <= 5), `Q8`, `V4`, `c5c4`,
//! `hol<p>`, and products such as `C2xS3`. Names are case-insensitive.
//!
//! Braces:
//!
//! | expression | brace |
//! |---|---|
//! | `triv:G`, `optriv:G` | trivial and almost trivial brace on `G` |
//! | `triple:G,H,T` | weakly trivial brace of a triple, `T` one of `id`, `neg`, `auto` |
//! | `wt100`, `wt-d8` | `triple:c5c4,c5c4,id` and `triple:d8,d8,id` |
//! | `sd:c2-c<n>`, `sd:c2-s3` | `Triv(C2) ⋉ Triv(X)`, the generator acting by inversion or by a transposition |
//! | `ef:d6`, `ef:d8`, `ef:a4`, `ef:s4`, `ef:c5c4` | brace of an exact factorization |
//! | `radical:p,k`, `radical:ut<d>f<p>` | `pZ/p^kZ` and strictly upper triangular matrices |
//! | `prod:X;Y` | direct product; nest with parentheses, `prod:(prod:X;Y);Z` |
//! | `op:X` | opposite brace |
//! | a path ending in `.json` | brace file |

use crate::brace::{
    almost_trivial, direct_product, from_exact_factorization, semidirect_product, trivial,
    BraceFile, SkewBrace, DEFAULT_ORDER_CAP,
};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::groups::*;
use crate::radical::RadicalRing;
use crate::set::ElementSet;
use crate::structure::{triple_to_brace, Triple};

/// Catalog entries; each name is also a builder expression.
const CATALOG: &[&str] = &[
    "triv:C1",
    "triv:C2",
    "triv:C3",
    "triv:C4",
    "triv:C5",
    "triv:C6",
    "triv:C7",
    "triv:C8",
    "triv:V4",
    "triv:S3",
    "triv:D8",
    "triv:Q8",
    "triv:A4",
    "triv:S4",
    "triv:c5c4",
    "triv:A5",
    "optriv:C2",
    "optriv:C3",
    "optriv:C4",
    "optriv:C5",
    "optriv:C6",
    "optriv:C7",
    "optriv:C8",
    "optriv:S3",
    "optriv:D8",
    "optriv:Q8",
    "optriv:A4",
    "optriv:S4",
    "optriv:c5c4",
    "optriv:A5",
    "prod:triv:C2;optriv:S3",
    "prod:optriv:S3;triv:S3",
    "prod:optriv:D8;triv:C3",
    "wt100",
    "wt-d8",
    "op:wt-d8",
    "triple:S3,S3,id",
    "triple:Q8,D8,auto",
    "triple:C4,C4,neg",
    "triple:D8,C2xC2,auto",
    "sd:c2-c3",
    "sd:c2-c4",
    "sd:c2-c5",
    "sd:c2-s3",
    "op:sd:c2-c3",
    "ef:d6",
    "ef:d8",
    "ef:a4",
    "ef:s4",
    "ef:c5c4",
    "radical:2,3",
    "radical:2,4",
    "radical:3,2",
    "radical:ut3f2",
    "radical:ut3f3",
];

/// Every catalog brace, sorted by name.
pub fn catalog() -> Vec<(String, SkewBrace)> {
    catalog_names()
        .into_iter()
        .map(|name| {
            let brace = parse_brace(&name).unwrap_or_else(|e| panic!("catalog entry {name}: {e}"));
            (name, brace)
        })
        .collect()
}

pub fn catalog_names() -> Vec<String> {
    let mut names: Vec<String> = CATALOG.iter().map(|s| s.to_string()).collect();
    names.sort();
    names
}

/// Catalog braces of order at most `max_order`.
pub fn catalog_up_to(max_order: usize) -> Vec<(String, SkewBrace)> {
    catalog()
        .into_iter()
        .filter(|(_, b)| b.order() <= max_order)
        .collect()
}

fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Parses a group name such as `D8` or `C2xS3`.
pub fn parse_group(expr: &str) -> Result<FiniteGroup> {
    parse_group_at(expr, 0)
}

fn parse_group_at(expr: &str, offset: usize) -> Result<FiniteGroup> {
    let mut result: Option<FiniteGroup> = None;
    let mut pos = offset;
    for factor in expr.split(['x', 'X']) {
        let g = parse_group_factor(factor, pos)?;
        result = Some(match result {
            None => g,
            Some(h) => h.direct_product(&g),
        });
        pos += factor.len() + 1;
    }
    result.ok_or_else(|| parse_err(offset, "empty group name"))
}

fn parse_number(s: &str, position: usize) -> Result<usize> {
    s.parse()
        .map_err(|_| parse_err(position, format!("expected a number, found {s:?}")))
}

fn parse_group_factor(name: &str, position: usize) -> Result<FiniteGroup> {
    let lower = name.trim().to_ascii_lowercase();
    let bad = || parse_err(position, format!("unknown group {name:?}"));
    let in_range = |n: usize| {
        if n <= 5 {
            Ok(n)
        } else {
            Err(parse_err(position, format!("{name} is too large")))
        }
    };
    match lower.as_str() {
        "" => Err(parse_err(position, "empty group name")),
        "q8" => make_quaternion(),
        "v4" => Ok(make_cyclic(2)?.direct_product(&make_cyclic(2)?)),
        "c5c4" => make_presented_c5_c4(),
        _ => {
            if let Some(p) = lower.strip_prefix("hol") {
                return make_holomorph_cp(parse_number(p, position + 3)?);
            }
            let (head, digits) = lower.split_at(1);
            let n = parse_number(digits, position + 1)?;
            match head {
                "c" => make_cyclic(n),
                "d" => make_dihedral(n),
                "s" => make_symmetric(in_range(n)?),
                "a" => make_alternating(in_range(n)?),
                _ => Err(bad()),
            }
        }
    }
}

/// Parses a brace expression with the default order cap.
pub fn parse_brace(expr: &str) -> Result<SkewBrace> {
    parse_brace_with_cap(expr, DEFAULT_ORDER_CAP)
}

pub fn parse_brace_with_cap(expr: &str, cap: usize) -> Result<SkewBrace> {
    let b = parse_brace_at(expr, 0, cap)?;
    if b.order() > cap {
        return Err(Error::Capacity(format!(
            "brace of order {} exceeds the order cap {cap}",
            b.order()
        )));
    }
    Ok(b)
}

/// Splits at the first top-level `sep`.
fn split_top(s: &str, sep: char) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

fn parse_brace_at(expr: &str, offset: usize, cap: usize) -> Result<SkewBrace> {
    let trimmed = expr.trim_start();
    let offset = offset + (expr.len() - trimmed.len());
    let expr = trimmed.trim_end();
    if expr.is_empty() {
        return Err(parse_err(offset, "empty brace expression"));
    }
    if let Some(inner) = expr.strip_prefix('(') {
        return match inner.strip_suffix(')') {
            Some(inner) => parse_brace_at(inner, offset + 1, cap),
            None => Err(parse_err(offset + expr.len(), "missing ')'")),
        };
    }
    if expr.ends_with(".json") || std::path::Path::new(expr).is_file() {
        let text = std::fs::read_to_string(expr)?;
        let file: BraceFile = serde_json::from_str(&text)?;
        return file.into_brace(cap);
    }
    let lower = expr.to_ascii_lowercase();
    match lower.as_str() {
        "wt100" => return parse_brace_at("triple:c5c4,c5c4,id", 0, cap),
        "wt-d8" => return parse_brace_at("triple:d8,d8,id", 0, cap),
        _ => {}
    }
    let Some((kind, rest)) = expr.split_once(':') else {
        return Err(parse_err(offset, format!("unknown brace {expr:?}")));
    };
    let at = offset + kind.len() + 1;
    match kind.to_ascii_lowercase().as_str() {
        "triv" => Ok(trivial(&parse_group_at(rest, at)?)),
        "optriv" => Ok(almost_trivial(&parse_group_at(rest, at)?)),
        "op" => Ok(parse_brace_at(rest, at, cap)?.opposite()),
        "prod" => {
            let (x, y) = split_top(rest, ';').ok_or_else(|| parse_err(at, "expected prod:X;Y"))?;
            let a = parse_brace_at(x, at, cap)?;
            let b = parse_brace_at(y, at + x.len() + 1, cap)?;
            if a.order() * b.order() > cap {
                return Err(Error::Capacity(format!(
                    "product of order {} exceeds the order cap {cap}",
                    a.order() * b.order()
                )));
            }
            Ok(direct_product(&a, &b))
        }
        "triple" => parse_triple(rest, at),
        "sd" => semidirect(&rest.to_ascii_lowercase(), at),
        "ef" => exact_factorization(&rest.to_ascii_lowercase(), at),
        "radical" => radical(&rest.to_ascii_lowercase(), at),
        _ => Err(parse_err(offset, format!("unknown builder {kind:?}"))),
    }
}

fn parse_triple(rest: &str, at: usize) -> Result<SkewBrace> {
    let parts: Vec<&str> = rest.split(',').collect();
    let [g, h, theta] = parts[..] else {
        return Err(parse_err(at, "expected triple:G,H,THETA"));
    };
    let gg = parse_group_at(g, at)?;
    let hh = parse_group_at(h, at + g.len() + 1)?;
    let theta_at = at + g.len() + h.len() + 2;
    let t = match theta.trim().to_ascii_lowercase().as_str() {
        "id" => {
            let n = gg.abelianization().0.order();
            Triple::new(gg, hh, (0..n).collect())?
        }
        "neg" => {
            let (ab, _) = gg.abelianization();
            Triple::new(gg, hh, ab.inverses().to_vec())?
        }
        "auto" => Triple::with_any_theta(gg, hh)?,
        other => {
            return Err(parse_err(
                theta_at,
                format!("unknown θ {other:?}; expected id, neg or auto"),
            ))
        }
    };
    triple_to_brace(&t)
}

fn semidirect(rest: &str, at: usize) -> Result<SkewBrace> {
    let Some(target) = rest.strip_prefix("c2-") else {
        return Err(parse_err(at, "expected sd:c2-X"));
    };
    let c2 = trivial(&make_cyclic(2)?);
    let g = parse_group_at(target, at + 3)?;
    let n = g.order();
    let sigma: Vec<usize> = if g.is_abelian() {
        g.inverses().to_vec()
    } else {
        let t = (0..n)
            .find(|&x| g.element_order(x) == 2)
            .ok_or_else(|| parse_err(at + 3, "group has no involution"))?;
        (0..n).map(|x| g.conj(t, x)).collect()
    };
    semidirect_product(&c2, &trivial(&g), &[(0..n).collect(), sigma])
}

fn order_subgroup(g: &FiniteGroup, size: usize, avoid: &ElementSet) -> Result<ElementSet> {
    g.subgroups(10_000)?
        .into_iter()
        .find(|s| s.len() == size && s.intersection(avoid).len() == 1)
        .ok_or_else(|| Error::Internal(format!("no complement of order {size}")))
}

fn exact_factorization(rest: &str, at: usize) -> Result<SkewBrace> {
    let (g, b, c) = match rest {
        "d6" | "d8" => {
            let g = make_dihedral(if rest == "d6" { 6 } else { 8 })?;
            let n = g.order() / 2;
            let rotations = ElementSet::from_indices(2 * n, 0..n);
            let reflection = ElementSet::from_indices(2 * n, [0, n]);
            (g, rotations, reflection)
        }
        "a4" | "s4" => {
            let g = if rest == "a4" {
                make_alternating(4)?
            } else {
                make_symmetric(4)?
            };
            let v4 = g
                .normal_subgroups()
                .into_iter()
                .find(|s| s.len() == 4)
                .ok_or_else(|| Error::Internal("no normal Klein subgroup".into()))?;
            let c = order_subgroup(&g, g.order() / 4, &v4)?;
            (g, v4, c)
        }
        "c5c4" => {
            let g = make_presented_c5_c4()?;
            let a = ElementSet::from_indices(20, (0..5).map(|k| 4 * k));
            let b = ElementSet::from_indices(20, 0..4);
            (g, a, b)
        }
        _ => return Err(parse_err(at, format!("unknown factorization {rest:?}"))),
    };
    from_exact_factorization(&g, &b, &c)
}

fn radical(rest: &str, at: usize) -> Result<SkewBrace> {
    if let Some(spec) = rest.strip_prefix("ut") {
        let (d, p) = spec
            .split_once('f')
            .ok_or_else(|| parse_err(at, "expected radical:ut<d>f<p>"))?;
        let d = parse_number(d, at + 2)?;
        let p = parse_number(p, at + 3 + d.to_string().len())?;
        return RadicalRing::strictly_upper_triangular(p, d)?.to_brace();
    }
    let (p, k) = rest
        .split_once(',')
        .ok_or_else(|| parse_err(at, "expected radical:p,k"))?;
    let p = parse_number(p.trim(), at)?;
    let k = parse_number(k.trim(), at + p.to_string().len() + 1)?;
    let k = u32::try_from(k).map_err(|_| parse_err(at, "exponent too large"))?;
    RadicalRing::multiples_mod(p, k)?.to_brace()
}

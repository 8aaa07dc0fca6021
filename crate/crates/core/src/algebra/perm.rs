use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::{Error, Result};

/// Permutation of `0..degree` stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(pub Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Left-to-right product: apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn is_even(&self) -> bool {
        let mut seen = alloc::vec![false; self.degree()];
        let mut transpositions = 0;
        for s in 0..self.degree() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Cycle notation with 1-based points; `()` for the identity.
    pub fn to_cycles(&self) -> String {
        let wide = self.degree() > 9;
        let mut out = String::new();
        let mut seen = alloc::vec![false; self.degree()];
        for s in 0..self.degree() {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            out.push('(');
            let mut x = s;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if wide && !first {
                    out.push(',');
                }
                let _ = write!(out, "{}", x + 1);
                first = false;
                x = self.0[x] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Parses cycle notation such as `(123)(45)` or `(1,2,10)` into a
/// permutation of the given degree.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
    let bad = |m: &str| Error::InvalidSpec(alloc::format!("permutation {text:?}: {m}"));
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(bad("empty"));
    }
    let mut used = alloc::vec![false; degree];
    while !rest.is_empty() {
        let body_end = rest.find(')').ok_or_else(|| bad("missing ')'"))?;
        if !rest.starts_with('(') {
            return Err(bad("expected '('"));
        }
        let body = &rest[1..body_end];
        rest = rest[body_end + 1..].trim_start();
        let points: Vec<usize> = if body.contains(',') {
            body.split(',').map(|s| s.trim().parse::<usize>().map_err(|_| bad("bad point"))).collect::<Result<_>>()?
        } else {
            body.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| bad("bad point")))
                .collect::<Result<_>>()?
        };
        for &p in &points {
            if p == 0 || p > degree {
                return Err(bad("point out of range"));
            }
            if used[p - 1] {
                return Err(bad("cycles are not disjoint"));
            }
            used[p - 1] = true;
        }
        for w in 0..points.len() {
            let from = points[w] - 1;
            let to = points[(w + 1) % points.len()] - 1;
            images[from] = to as u32;
        }
    }
    Ok(Perm(images))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip() {
        let p = parse_cycles("(123)(45)", 5).unwrap();
        assert_eq!(p.0, alloc::vec![1, 2, 0, 4, 3]);
        assert_eq!(p.to_cycles(), "(123)(45)");
        assert!(!p.is_even());
        let q = parse_cycles("(1,2,10)", 10).unwrap();
        assert_eq!(q.to_cycles(), "(1,2,10)");
        assert!(parse_cycles("(12)(23)", 3).is_err());
        assert!(parse_cycles("()", 3).unwrap().is_identity());
    }
}

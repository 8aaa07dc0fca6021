//! Text syntax for [`FamilySpec`], e.g. `cyclic:64`, `abelian:9x3`,
//! `sd:q=3,p=2,a=2,t=1`, `perm:deg=4,gens=(123);(12)(34)` or
//! `prod:<spec>|<spec>`.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{parse_cycles, FamilySpec};
use crate::Error;

fn bad(text: &str, why: &str) -> Error {
    Error::InvalidSpec(format!("{text:?}: {why}"))
}

fn num(text: &str, s: &str) -> Result<u32, Error> {
    s.trim().parse::<u32>().map_err(|_| bad(text, "expected a number"))
}

/// Parses `k1=v1,k2=v2` into pairs.
fn keyvals<'a>(text: &str, body: &'a str) -> Result<Vec<(&'a str, &'a str)>, Error> {
    body.split(',')
        .map(|kv| kv.split_once('=').map(|(k, v)| (k.trim(), v.trim())).ok_or_else(|| bad(text, "expected key=value")))
        .collect()
}

fn take(text: &str, kv: &[(&str, &str)], key: &str) -> Result<Option<u32>, Error> {
    match kv.iter().find(|(k, _)| *k == key) {
        Some((_, v)) => Ok(Some(num(text, v)?)),
        None => Ok(None),
    }
}

fn need(text: &str, kv: &[(&str, &str)], key: &str) -> Result<u32, Error> {
    take(text, kv, key)?.ok_or_else(|| bad(text, &format!("missing {key}")))
}

fn only_keys(text: &str, kv: &[(&str, &str)], allowed: &[&str]) -> Result<(), Error> {
    match kv.iter().find(|(k, _)| !allowed.contains(k)) {
        Some((k, _)) => Err(bad(text, &format!("unknown key {k}"))),
        None => Ok(()),
    }
}

/// Splits at the first `|` outside square brackets.
fn split_product(body: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in body.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            '|' if depth == 0 => return Some((&body[..i], &body[i + 1..])),
            _ => {}
        }
    }
    None
}

fn unwrap_brackets(s: &str) -> &str {
    let s = s.trim();
    if s.starts_with('[') && s.ends_with(']') {
        &s[1..s.len() - 1]
    } else {
        s
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let text = text.trim();
        let (kind, body) = text.split_once(':').ok_or_else(|| bad(text, "expected kind:params"))?;
        let spec = match kind.trim() {
            "cyclic" => FamilySpec::Cyclic(num(text, body)?),
            "abelian" => FamilySpec::AbelianProduct(body.split('x').map(|s| num(text, s)).collect::<Result<_, _>>()?),
            "dihedral" => FamilySpec::Dihedral(num(text, body)?),
            "genq" => FamilySpec::GeneralizedQuaternion(num(text, body)?),
            "modular" => {
                let (p, a) = body.split_once(',').ok_or_else(|| bad(text, "expected modular:p,alpha"))?;
                FamilySpec::Modular { p: num(text, p)?, alpha: num(text, a)? }
            }
            "sd" => {
                let kv = keyvals(text, body)?;
                only_keys(text, &kv, &["q", "p", "a", "t"])?;
                FamilySpec::SemidirectCyclic {
                    q: need(text, &kv, "q")?,
                    p: need(text, &kv, "p")?,
                    alpha: need(text, &kv, "a")?,
                    t: need(text, &kv, "t")?,
                }
            }
            "mat" => {
                let kv = keyvals(text, body)?;
                only_keys(text, &kv, &["p", "m", "l", "M"])?;
                let p = need(text, &kv, "p")?;
                let matrix = if let Some(l) = take(text, &kv, "l")? {
                    Some([0, p - 1, 1, l % p])
                } else if let Some((_, m)) = kv.iter().find(|(k, _)| *k == "M") {
                    let e: Vec<u32> = m.split(';').map(|s| num(text, s)).collect::<Result<_, _>>()?;
                    if e.len() != 4 {
                        return Err(bad(text, "matrix needs four entries"));
                    }
                    Some([e[0], e[1], e[2], e[3]])
                } else {
                    None
                };
                FamilySpec::MatrixAction { p, m: need(text, &kv, "m")?, matrix }
            }
            "g3" => {
                let kv = keyvals(text, body)?;
                only_keys(text, &kv, &["p", "q", "r", "mu", "v"])?;
                FamilySpec::G3 {
                    p: need(text, &kv, "p")?,
                    q: need(text, &kv, "q")?,
                    r: need(text, &kv, "r")?,
                    mu: take(text, &kv, "mu")?,
                    v: take(text, &kv, "v")?,
                }
            }
            "perm" => {
                let (deg, gens) = body.split_once(",gens=").ok_or_else(|| bad(text, "expected deg=N,gens=..."))?;
                let degree = num(text, deg.trim().strip_prefix("deg=").ok_or_else(|| bad(text, "expected deg="))?)?;
                let generators = gens.split(';').map(|g| parse_cycles(g, degree as usize)).collect::<Result<_, _>>()?;
                FamilySpec::Permutation { degree, generators }
            }
            "sym" => FamilySpec::symmetric(num(text, body)?),
            "alt" => FamilySpec::alternating(num(text, body)?),
            "prod" => {
                let (a, b) = split_product(body).ok_or_else(|| bad(text, "expected prod:A|B"))?;
                FamilySpec::DirectProduct(Box::new(unwrap_brackets(a).parse()?), Box::new(unwrap_brackets(b).parse()?))
            }
            _ => return Err(bad(text, "unknown family")),
        };
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Cyclic(n) => write!(f, "cyclic:{n}"),
            AbelianProduct(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "abelian:{}", parts.join("x"))
            }
            Dihedral(n) => write!(f, "dihedral:{n}"),
            GeneralizedQuaternion(n) => write!(f, "genq:{n}"),
            Modular { p, alpha } => write!(f, "modular:{p},{alpha}"),
            SemidirectCyclic { q, p, alpha, t } => write!(f, "sd:q={q},p={p},a={alpha},t={t}"),
            MatrixAction { p, m, matrix } => {
                write!(f, "mat:p={p},m={m}")?;
                match matrix {
                    Some([0, b, 1, l]) if *b + 1 == *p => write!(f, ",l={l}"),
                    Some(e) => write!(f, ",M={};{};{};{}", e[0], e[1], e[2], e[3]),
                    None => Ok(()),
                }
            }
            G3 { p, q, r, mu, v } => {
                write!(f, "g3:p={p},q={q},r={r}")?;
                if let Some(mu) = mu {
                    write!(f, ",mu={mu}")?;
                }
                if let Some(v) = v {
                    write!(f, ",v={v}")?;
                }
                Ok(())
            }
            Permutation { degree, generators } => {
                let gens: Vec<String> = generators.iter().map(|g| g.to_cycles()).collect();
                write!(f, "perm:deg={degree},gens={}", gens.join(";"))
            }
            DirectProduct(a, b) => {
                let part = |s: &FamilySpec| {
                    let t = s.to_string();
                    if t.contains('|') {
                        format!("[{t}]")
                    } else {
                        t
                    }
                };
                write!(f, "prod:{}|{}", part(a), part(b))
            }
        }
    }
}

impl serde::Serialize for FamilySpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

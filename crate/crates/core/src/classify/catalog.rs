//! A deterministic list of pairwise non-isomorphic groups of bounded order.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::profile::GroupProfile;
use crate::algebra::{build_family, companion_of_order};
use crate::arith::{is_prime, primes_up_to};
use crate::lattice::enumerate_subgroups;
use crate::FamilySpec;

/// Abelian groups of rank above this are left out; their lattices grow too
/// fast to be useful.
pub const CATALOG_MAX_RANK: usize = 4;

/// Invariant factor lists `d1 >= d2 >= ...`, `d_(i+1) | d_i`, rank 2 and up.
fn invariant_lists(max: u64) -> Vec<Vec<u32>> {
    fn extend(cur: &mut Vec<u64>, prod: u64, max: u64, out: &mut Vec<Vec<u32>>) {
        if cur.len() >= 2 {
            out.push(cur.iter().map(|&d| d as u32).collect());
        }
        if cur.len() == CATALOG_MAX_RANK {
            return;
        }
        let last = *cur.last().unwrap();
        for d in 2..=last {
            if last.is_multiple_of(d) && prod * d <= max {
                cur.push(d);
                extend(cur, prod * d, max, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    for d1 in 2..=max / 2 {
        extend(&mut vec![d1], d1, max, &mut out);
    }
    out
}

/// Candidate specs, before isomorphism classes are merged.
fn candidates(max_order: usize) -> Vec<FamilySpec> {
    use FamilySpec::*;
    let max = max_order as u64;
    let primes = primes_up_to(max);
    let mut out = Vec::new();
    for n in 4..=max {
        if !is_prime(n) {
            out.push(Cyclic(n as u32));
        }
    }
    out.extend(invariant_lists(max).into_iter().map(AbelianProduct));
    for (n, order) in [(4u32, 24u64), (5, 120)] {
        if order <= max {
            out.push(FamilySpec::symmetric(n));
        }
    }
    for (n, order) in [(4u32, 12u64), (5, 60)] {
        if order <= max {
            out.push(FamilySpec::alternating(n));
        }
    }
    for n in (6..=max).step_by(2) {
        out.push(Dihedral(n as u32));
    }
    let mut n = 8;
    while n <= max {
        out.push(GeneralizedQuaternion(n as u32));
        n *= 2;
    }
    for &p in &primes {
        let start = if p == 2 { 4 } else { 3 };
        for alpha in start.. {
            if p.pow(alpha) > max {
                break;
            }
            out.push(Modular { p: p as u32, alpha });
        }
    }
    // Z_q : Z_(p^alpha) with q an odd prime power
    for q in 3..=max / 2 {
        let Some((r, _)) = crate::arith::prime_power(q) else { continue };
        if r == 2 {
            continue;
        }
        let phi = q / r * (r - 1);
        for &p in primes.iter().filter(|&&p| p != r) {
            for alpha in 1.. {
                if q * p.pow(alpha) > max {
                    break;
                }
                for t in 1..=alpha {
                    if phi % p.pow(t) == 0 {
                        out.push(SemidirectCyclic { q: q as u32, p: p as u32, alpha, t });
                    }
                }
            }
        }
    }
    for &p in &primes {
        for m in 2..=max / (p * p) {
            if companion_of_order(p, m).is_some() {
                out.push(MatrixAction { p: p as u32, m: m as u32, matrix: None });
            }
        }
        if p > 2 && p.pow(3) <= max {
            // Heisenberg group: a unipotent action
            out.push(MatrixAction { p: p as u32, m: p as u32, matrix: Some([1, 1, 0, 1]) });
        }
    }
    for &p in &primes {
        for &q in &primes {
            for &r in &primes {
                if q < r && q != p && r != p && p * q * r <= max && (p - 1) % q == 0 && (p - 1) % r == 0 {
                    out.push(G3 { p: p as u32, q: q as u32, r: r as u32, mu: None, v: None });
                }
            }
        }
    }
    let bases: Vec<(FamilySpec, u64)> = vec![
        (Dihedral(6), 6),
        (Dihedral(8), 8),
        (GeneralizedQuaternion(8), 8),
        (Dihedral(10), 10),
        (FamilySpec::alternating(4), 12),
        (SemidirectCyclic { q: 3, p: 2, alpha: 2, t: 1 }, 12),
        (SemidirectCyclic { q: 7, p: 3, alpha: 1, t: 1 }, 21),
    ];
    for (base, order) in &bases {
        for k in 2..=max / order {
            out.push(FamilySpec::product(Cyclic(k as u32), base.clone()));
        }
    }
    if 36 <= max {
        out.push(FamilySpec::product(Dihedral(6), Dihedral(6)));
    }
    out
}

/// One group per isomorphism class met among the candidate families, by
/// order and then by family, with prime orders left out.
///
/// Classes are told apart by [`GroupProfile::fingerprint`]; two
/// non-isomorphic groups sharing a fingerprint would be merged.
pub fn catalog(max_order: usize) -> Vec<FamilySpec> {
    let mut found: Vec<(usize, usize, FamilySpec)> = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, spec) in candidates(max_order).into_iter().enumerate() {
        let Ok(g) = build_family(&spec, max_order) else { continue };
        if is_prime(g.order() as u64) {
            continue;
        }
        let lat = enumerate_subgroups(&g);
        if seen.insert(GroupProfile::new(&g, &lat).fingerprint()) {
            found.push((g.order(), i, spec));
        }
    }
    found.sort_by_key(|(o, i, _)| (*o, *i));
    found.into_iter().map(|x| x.2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_catalog() {
        let c = catalog(16);
        let orders: Vec<usize> = c.iter().map(|s| build_family(s, 16).unwrap().order()).collect();
        let count = |n| orders.iter().filter(|&&o| o == n).count();
        assert_eq!((count(4), count(6), count(8), count(9), count(12)), (2, 2, 5, 2, 5));
        assert!(orders.windows(2).all(|w| w[0] <= w[1]));
        let names: Vec<_> = c.iter().map(|s| s.display_name()).collect();
        assert!(names.contains(&"Q8".into()) && names.contains(&"A4".into()));
    }
}

#[cfg(test)]
mod probe {
    extern crate std;
    use super::*;
    use crate::classify::intersection_graph;
    use std::println;

    #[test]
    #[ignore]
    fn catalog_sizes() {
        for max in [64usize, 100, 200, 300] {
            let t = std::time::Instant::now();
            let c = catalog(max);
            println!("max {max}: {} groups in {:?}", c.len(), t.elapsed());
        }
        let c = catalog(300);
        let mut big = Vec::new();
        for s in &c {
            let t = std::time::Instant::now();
            let g = build_family(s, 300).unwrap();
            let lat = enumerate_subgroups(&g);
            let ig = intersection_graph(&lat);
            big.push((t.elapsed(), s.display_name(), ig.n(), ig.edge_count()));
        }
        big.sort();
        for b in big.iter().rev().take(15) {
            println!("{b:?}");
        }
    }
}

//! Subgroups as sorted element sets and the full subgroup lattice.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::arith::is_prime;
use crate::bits::BitSet;
use crate::{Error, FiniteGroup, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<usize>,
    bits: BitSet,
    parent_order: usize,
    ambient: u64,
}

impl Subgroup {
    fn from_bits(g: &FiniteGroup, bits: BitSet) -> Self {
        Subgroup { elements: bits.iter().collect(), bits, parent_order: g.order(), ambient: g.fingerprint() }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Sorted element list.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.parent_order && self.bits.contains(x)
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// `|H ∩ K|` without building the intersection.
    pub fn meet_order(&self, other: &Subgroup) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    pub fn is_normal_in(&self, g: &FiniteGroup) -> bool {
        (0..g.order()).all(|x| {
            let xi = g.inv(x);
            self.elements.iter().all(|&h| self.bits.contains(g.mul(g.mul(x, h), xi)))
        })
    }

    /// Greedy generating set: scan elements ascending and keep those not yet
    /// generated.
    pub fn generators(&self, g: &FiniteGroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = BitSet::from_iter(g.order(), [0]);
        for &x in &self.elements {
            if !span.contains(x) {
                gens.push(x);
                span = closure(g, &span, &gens);
            }
        }
        gens
    }
}

/// Closure of `start` (which must contain the identity) under right
/// multiplication by `gens`.
fn closure(g: &FiniteGroup, start: &BitSet, gens: &[usize]) -> BitSet {
    let mut bits = start.clone();
    let mut queue: Vec<usize> = start.iter().collect();
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &s in gens {
            let y = g.mul(x, s);
            if bits.insert(y) {
                queue.push(y);
            }
        }
    }
    bits
}

/// The smallest subgroup containing every element of `seed`.
pub fn generated_subgroup(g: &FiniteGroup, seed: &[usize]) -> Result<Subgroup> {
    if let Some(&x) = seed.iter().find(|&&x| x >= g.order()) {
        return Err(Error::ElementOutOfRange(x));
    }
    let start = BitSet::from_iter(g.order(), [0]);
    Ok(Subgroup::from_bits(g, closure(g, &start, seed)))
}

pub fn intersect_subgroups(h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    if h.ambient != k.ambient || h.parent_order != k.parent_order {
        return Err(Error::AmbientMismatch);
    }
    let mut bits = h.bits.clone();
    bits.intersect_with(&k.bits);
    Ok(Subgroup { elements: bits.iter().collect(), bits, parent_order: h.parent_order, ambient: h.ambient })
}

/// All subgroups of a group in canonical order: by order, then by the
/// sorted element list.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    group_order: usize,
    subgroups: Vec<Subgroup>,
    normal: Vec<bool>,
    generators: Vec<Vec<usize>>,
}

impl SubgroupLattice {
    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    pub fn generators(&self, i: usize) -> &[usize] {
        &self.generators[i]
    }

    /// Indices of the subgroups other than `{e}` and `G`.
    pub fn proper_nontrivial(&self) -> Vec<usize> {
        (0..self.subgroups.len())
            .filter(|&i| {
                let o = self.subgroups[i].order();
                o != 1 && o != self.group_order
            })
            .collect()
    }

    pub fn count_of_order(&self, k: usize) -> usize {
        self.subgroups.iter().filter(|h| h.order() == k).count()
    }
}

/// Enumerates every subgroup: start from the cyclic ones and keep adding
/// `<H, x>` until nothing new appears.
pub fn enumerate_subgroups(g: &FiniteGroup) -> SubgroupLattice {
    let n = g.order();
    let mut known: BTreeSet<BitSet> = BTreeSet::new();
    let mut work: Vec<(BitSet, Vec<usize>)> = Vec::new();
    let trivial = BitSet::from_iter(n, [0]);
    known.insert(trivial.clone());
    work.push((trivial.clone(), Vec::new()));
    for x in 1..n {
        let c = closure(g, &trivial, &[x]);
        if known.insert(c.clone()) {
            work.push((c, alloc::vec![x]));
        }
    }
    let mut head = 1;
    while head < work.len() {
        let (h, gens) = work[head].clone();
        head += 1;
        let mut done = h.clone();
        for x in 0..n {
            if done.contains(x) {
                continue;
            }
            // every element of the coset xH generates the same join
            for &y in h.iter().collect::<Vec<_>>().iter() {
                done.insert(g.mul(x, y));
            }
            let mut next_gens = gens.clone();
            next_gens.push(x);
            let k = closure(g, &h, &next_gens);
            if known.insert(k.clone()) {
                work.push((k, next_gens));
            }
        }
    }
    let mut subgroups: Vec<Subgroup> = known.into_iter().map(|b| Subgroup::from_bits(g, b)).collect();
    subgroups.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    let normal = subgroups.iter().map(|h| h.is_normal_in(g)).collect();
    let generators = subgroups.iter().map(|h| h.generators(g)).collect();
    SubgroupLattice { group_order: n, subgroups, normal, generators }
}

/// Number of subgroups of prime order.
pub fn prime_order_count(lat: &SubgroupLattice) -> usize {
    lat.subgroups.iter().filter(|h| is_prime(h.order() as u64)).count()
}

/// Number of Sylow `p`-subgroups.
pub fn sylow_count(lat: &SubgroupLattice, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut n = lat.group_order as u64;
    if !n.is_multiple_of(p) {
        return Err(Error::NotADivisor(p));
    }
    let mut pk = 1;
    while n.is_multiple_of(p) {
        n /= p;
        pk *= p;
    }
    Ok(lat.count_of_order(pk as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_family;
    use crate::FamilySpec;

    fn group(s: &str) -> FiniteGroup {
        build_family(&s.parse::<FamilySpec>().unwrap(), 512).unwrap()
    }

    #[test]
    fn cyclic_subgroups_match_divisors() {
        let g = group("cyclic:12");
        let lat = enumerate_subgroups(&g);
        assert_eq!(lat.len(), 6);
        assert_eq!(lat.proper_nontrivial().len(), 4);
        let h = generated_subgroup(&g, &[4, 6]).unwrap();
        assert_eq!(h.order(), 6);
    }

    #[test]
    fn counts() {
        let a4 = enumerate_subgroups(&group("alt:4"));
        assert_eq!(a4.len(), 10);
        assert_eq!(prime_order_count(&a4), 7);
        let s3 = enumerate_subgroups(&group("sym:3"));
        assert_eq!(sylow_count(&s3, 2), Ok(3));
        assert_eq!(sylow_count(&s3, 5), Err(Error::NotADivisor(5)));
        assert_eq!(sylow_count(&s3, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn ambient_mismatch() {
        let a = generated_subgroup(&group("cyclic:6"), &[2]).unwrap();
        let b = generated_subgroup(&group("cyclic:8"), &[2]).unwrap();
        assert_eq!(intersect_subgroups(&a, &b), Err(Error::AmbientMismatch));
    }
}

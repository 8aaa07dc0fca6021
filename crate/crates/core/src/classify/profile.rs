//! Isomorphism-invariant data of a group and the named classes it falls
//! into.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::factorize;
use crate::lattice::Subgroup;
use crate::{FiniteGroup, SubgroupLattice};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowData {
    pub p: u64,
    pub exponent: u32,
    pub count: usize,
    pub cyclic: bool,
    pub elementary_abelian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupProfile {
    pub order: usize,
    pub factors: Vec<(u64, u32)>,
    pub abelian: bool,
    pub cyclic: bool,
    pub center: usize,
    pub involutions: usize,
    pub class_count: usize,
    /// `order -> number of elements`.
    pub element_orders: BTreeMap<usize, usize>,
    /// `order -> number of subgroups`.
    pub subgroup_orders: BTreeMap<usize, usize>,
    /// `order -> number of normal subgroups`.
    pub normal_orders: BTreeMap<usize, usize>,
    pub sylow: Vec<SylowData>,
    /// Invariant factors, largest first, for abelian groups.
    pub invariants: Option<Vec<u64>>,
}

fn sub_is_abelian(g: &FiniteGroup, h: &Subgroup) -> bool {
    let e = h.elements();
    e.iter().all(|&a| e.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

impl GroupProfile {
    pub fn new(g: &FiniteGroup, lat: &SubgroupLattice) -> Self {
        let order = g.order();
        let orders = g.element_orders();
        let mut element_orders = BTreeMap::new();
        for &o in &orders {
            *element_orders.entry(o).or_insert(0) += 1;
        }
        let mut subgroup_orders = BTreeMap::new();
        let mut normal_orders = BTreeMap::new();
        for (i, h) in lat.subgroups().iter().enumerate() {
            *subgroup_orders.entry(h.order()).or_insert(0) += 1;
            if lat.is_normal(i) {
                *normal_orders.entry(h.order()).or_insert(0) += 1;
            }
        }
        let factors = factorize(order as u64);
        let sylow = factors
            .iter()
            .map(|&(p, a)| {
                let pa = p.pow(a) as usize;
                let first = lat.subgroups().iter().find(|h| h.order() == pa).expect("Sylow subgroups exist");
                SylowData {
                    p,
                    exponent: a,
                    count: lat.count_of_order(pa),
                    cyclic: first.elements().iter().any(|&x| orders[x] == pa),
                    elementary_abelian: sub_is_abelian(g, first)
                        && first.elements().iter().all(|&x| x == 0 || orders[x] == p as usize),
                }
            })
            .collect();
        let abelian = g.is_abelian();
        let invariants = abelian.then(|| abelian_invariants(&factors, &orders));
        GroupProfile {
            order,
            abelian,
            cyclic: orders.contains(&order),
            center: g.center().len(),
            involutions: element_orders.get(&2).copied().unwrap_or(0),
            class_count: g.class_count(),
            element_orders,
            subgroup_orders,
            normal_orders,
            sylow,
            invariants,
            factors,
        }
    }

    pub fn has_element_of_order(&self, k: usize) -> bool {
        self.element_orders.contains_key(&k)
    }

    pub fn subgroups_of_order(&self, k: usize) -> usize {
        self.subgroup_orders.get(&k).copied().unwrap_or(0)
    }

    pub fn sylow_of(&self, p: u64) -> Option<&SylowData> {
        self.sylow.iter().find(|s| s.p == p)
    }

    /// Text key that two isomorphic groups always share.
    pub fn fingerprint(&self) -> String {
        format!(
            "{}|{:?}|{}|{}|{:?}|{:?}",
            self.order, self.element_orders, self.center, self.class_count, self.subgroup_orders, self.normal_orders
        )
    }

    pub fn class(&self) -> GroupClass {
        classify_profile(self)
    }
}

/// Invariant factors from the number of elements of each order.
fn abelian_invariants(factors: &[(u64, u32)], orders: &[usize]) -> Vec<u64> {
    let mut per_prime: Vec<Vec<u32>> = Vec::new();
    for &(p, a) in factors {
        // s[k] = log_p of the number of elements killed by p^k
        let mut s = vec![0u32; a as usize + 1];
        for k in 1..=a {
            let pk = p.pow(k) as usize;
            let cnt = orders.iter().filter(|&&o| pk.is_multiple_of(o)).count() as u64;
            let mut e = 0;
            let mut c = cnt;
            while c > 1 {
                c /= p;
                e += 1;
            }
            s[k as usize] = e;
        }
        // number of cyclic factors of exponent >= k is s[k] - s[k-1]
        let at_least: Vec<u32> = (1..=a as usize).map(|k| s[k] - s[k - 1]).collect();
        let rank = at_least.first().copied().unwrap_or(0);
        let exps: Vec<u32> = (0..rank).map(|i| at_least.iter().filter(|&&c| c > i).count() as u32).collect();
        per_prime.push(exps);
    }
    let rank = per_prime.iter().map(|v| v.len()).max().unwrap_or(0);
    (0..rank)
        .map(|i| {
            factors.iter().zip(&per_prime).map(|(&(p, _), exps)| p.pow(exps.get(i).copied().unwrap_or(0))).product()
        })
        .collect()
}

/// The group classes that carry closed-form or listed results.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum GroupClass {
    /// Cyclic of order `p1^e1 p2^e2 ...`; the exponents, largest first.
    Cyclic(Vec<u32>),
    /// `Z_p x Z_p`.
    ElementaryPair {
        p: u64,
    },
    /// `Z_(p^2) x Z_p`.
    SquareByPrime {
        p: u64,
    },
    /// `Z_(pq) x Z_p`.
    PrimePairByPrime {
        p: u64,
        q: u64,
    },
    Quaternion8,
    /// `M_(p^alpha)`; `M_8` is the dihedral group of order 8.
    Modular {
        p: u64,
        alpha: u32,
    },
    /// Nonabelian of order `pq`, `p | q - 1`.
    NonabelianPQ {
        p: u64,
        q: u64,
    },
    /// `Z_q : Z_(p^2)` with a faithful action.
    FaithfulCyclic {
        p: u64,
        q: u64,
    },
    /// `Z_q : Z_(p^2)` whose action has kernel of order `p`.
    HalfFaithfulCyclic {
        p: u64,
        q: u64,
    },
    /// `Z_(p^2) : Z_q`.
    CyclicSquareByPrime {
        p: u64,
        q: u64,
    },
    /// `(Z_p x Z_p) : Z_q` acting irreducibly; `A_4` is `p = 2, q = 3`.
    PlaneByPrime {
        p: u64,
        q: u64,
    },
    /// `(Z_p x Z_p) : Z_(q^2)` acting irreducibly with kernel-free square.
    PlaneBySquare {
        p: u64,
        q: u64,
    },
    /// `Z_p : (Z_q x Z_r)` with trivial centre.
    ThreePrimes {
        p: u64,
        q: u64,
        r: u64,
    },
    /// `(Z_p x Z_p) : Z_(qr)` acting irreducibly.
    PlaneByTwoPrimes {
        p: u64,
        q: u64,
        r: u64,
    },
    Other,
}

impl GroupClass {
    pub fn is_cyclic_with(&self, exps: &[u32]) -> bool {
        matches!(self, GroupClass::Cyclic(e) if e.as_slice() == exps)
    }
}

fn classify_profile(pr: &GroupProfile) -> GroupClass {
    use GroupClass::*;
    let f = &pr.factors;
    if pr.cyclic {
        let mut exps: Vec<u32> = f.iter().map(|x| x.1).collect();
        exps.sort_unstable_by(|a, b| b.cmp(a));
        return Cyclic(exps);
    }
    if let Some(inv) = &pr.invariants {
        if inv.len() == 2 {
            let (a, b) = (inv[0], inv[1]);
            let fb = factorize(b);
            if fb.len() == 1 && fb[0].1 == 1 {
                let p = b;
                if a == p {
                    return ElementaryPair { p };
                }
                if a == p * p {
                    return SquareByPrime { p };
                }
                let fa = factorize(a / p);
                if fa.len() == 1 && fa[0].1 == 1 && fa[0].0 != p {
                    return PrimePairByPrime { p, q: fa[0].0 };
                }
            }
        }
        return Other;
    }
    let n = pr.order;
    let trivial_centre = pr.center == 1;
    match *f.as_slice() {
        [(p, alpha)] if alpha >= 3 => {
            let top = p.pow(alpha - 1) as usize;
            if p == 2 && alpha == 3 {
                return if pr.involutions == 1 { Quaternion8 } else { Modular { p, alpha } };
            }
            if pr.has_element_of_order(top) && (p != 2 || pr.involutions == 3) {
                return Modular { p, alpha };
            }
            Other
        }
        [(p, 1), (q, 1)] => NonabelianPQ { p, q },
        [(a, ea), (b, eb)] if ea + eb == 3 => {
            let (p, q) = if ea == 2 { (a, b) } else { (b, a) };
            let sp = pr.sylow_of(p).unwrap();
            let sq = pr.sylow_of(q).unwrap();
            if sq.count == 1 && sp.cyclic {
                if trivial_centre {
                    return FaithfulCyclic { p, q };
                }
                if pr.center == p as usize {
                    return HalfFaithfulCyclic { p, q };
                }
            }
            if sp.count == 1 && sp.cyclic {
                return CyclicSquareByPrime { p, q };
            }
            if sp.count == 1 && sp.elementary_abelian && pr.subgroups_of_order((p * q) as usize) == 0 {
                return PlaneByPrime { p, q };
            }
            Other
        }
        [(a, 2), (b, 2)] => {
            for (p, q) in [(a, b), (b, a)] {
                let sp = pr.sylow_of(p).unwrap();
                let sq = pr.sylow_of(q).unwrap();
                if sp.count == 1
                    && sp.elementary_abelian
                    && sq.cyclic
                    && trivial_centre
                    && pr.subgroups_of_order((p * q * q) as usize) == 0
                {
                    return PlaneBySquare { p, q };
                }
            }
            Other
        }
        [_, _, _] if f.iter().all(|x| x.1 == 1) => {
            let p = f[2].0;
            let (q, r) = (f[0].0, f[1].0);
            if trivial_centre && pr.sylow_of(p).unwrap().count == 1 && pr.has_element_of_order((q * r) as usize) {
                return ThreePrimes { p, q, r };
            }
            Other
        }
        [_, _, _] => {
            let Some(&(p, _)) = f.iter().find(|x| x.1 == 2) else { return Other };
            if f.iter().filter(|x| x.1 == 1).count() != 2 {
                return Other;
            }
            let rest: Vec<u64> = f.iter().filter(|x| x.0 != p).map(|x| x.0).collect();
            let (q, r) = (rest[0], rest[1]);
            let sp = pr.sylow_of(p).unwrap();
            if sp.count == 1
                && sp.elementary_abelian
                && trivial_centre
                && pr.has_element_of_order((q * r) as usize)
                && pr.subgroups_of_order(n / p as usize) == 0
            {
                return PlaneByTwoPrimes { p, q, r };
            }
            Other
        }
        _ => Other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_family;
    use crate::lattice::enumerate_subgroups;

    fn class_of(s: &str) -> GroupClass {
        let g = build_family(&s.parse().unwrap(), 512).unwrap();
        GroupProfile::new(&g, &enumerate_subgroups(&g)).class()
    }

    #[test]
    fn recognises_named_groups() {
        use GroupClass::*;
        assert_eq!(class_of("cyclic:60"), Cyclic(vec![2, 1, 1]));
        assert_eq!(class_of("abelian:4x2"), SquareByPrime { p: 2 });
        assert_eq!(class_of("abelian:6x2"), PrimePairByPrime { p: 2, q: 3 });
        assert_eq!(class_of("abelian:15x3"), PrimePairByPrime { p: 3, q: 5 });
        assert_eq!(class_of("abelian:5x5"), ElementaryPair { p: 5 });
        assert_eq!(class_of("abelian:4x4"), Other);
        assert_eq!(class_of("genq:8"), Quaternion8);
        assert_eq!(class_of("dihedral:8"), Modular { p: 2, alpha: 3 });
        assert_eq!(class_of("modular:2,4"), Modular { p: 2, alpha: 4 });
        assert_eq!(class_of("dihedral:16"), Other);
        assert_eq!(class_of("genq:16"), Other);
        assert_eq!(class_of("modular:3,3"), Modular { p: 3, alpha: 3 });
        assert_eq!(class_of("dihedral:6"), NonabelianPQ { p: 2, q: 3 });
        assert_eq!(class_of("sd:q=5,p=2,a=2,t=2"), FaithfulCyclic { p: 2, q: 5 });
        assert_eq!(class_of("sd:q=3,p=2,a=2,t=1"), HalfFaithfulCyclic { p: 2, q: 3 });
        assert_eq!(class_of("dihedral:18"), CyclicSquareByPrime { p: 3, q: 2 });
        assert_eq!(class_of("alt:4"), PlaneByPrime { p: 2, q: 3 });
        assert_eq!(class_of("dihedral:12"), Other);
        assert_eq!(class_of("mat:p=3,m=4"), PlaneBySquare { p: 3, q: 2 });
        assert_eq!(class_of("g3:p=7,q=2,r=3"), ThreePrimes { p: 7, q: 2, r: 3 });
        assert_eq!(class_of("mat:p=5,m=6"), PlaneByTwoPrimes { p: 5, q: 2, r: 3 });
    }

    #[test]
    fn invariant_factors() {
        let g = build_family(&"abelian:12x6x2".parse().unwrap(), 512).unwrap();
        let pr = GroupProfile::new(&g, &enumerate_subgroups(&g));
        assert_eq!(pr.invariants, Some(vec![12, 6, 2]));
    }
}

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{FiniteGroup, Perm};
use crate::arith::{is_prime, mult_order, pow_mod};
use crate::{Error, Result};

/// Parametrised description of a group. Text syntax is handled by the
/// `FromStr` / `Display` impls.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilySpec {
    Cyclic(u32),
    /// Product of cyclic groups of the given orders.
    AbelianProduct(Vec<u32>),
    /// Dihedral group of the given order `2n`.
    Dihedral(u32),
    /// Generalised quaternion group of the given order `2^n`, `n >= 3`.
    GeneralizedQuaternion(u32),
    /// `<a, b | a^(p^(alpha-1)), b^p, b a b^-1 = a^(1 + p^(alpha-2))>`.
    Modular {
        p: u32,
        alpha: u32,
    },
    /// `Z_q : Z_(p^alpha)` where the generator acts by the least unit of
    /// multiplicative order `p^t` modulo `q`.
    SemidirectCyclic {
        q: u32,
        p: u32,
        alpha: u32,
        t: u32,
    },
    /// `(Z_p x Z_p) : Z_m` acting through a 2x2 matrix (row-major) of order
    /// `m`; without a matrix the least companion `[[0,-1],[1,l]]` is used.
    MatrixAction {
        p: u32,
        m: u32,
        matrix: Option<[u32; 4]>,
    },
    /// `Z_p : (Z_q x Z_r)` with `b^-1 a b = a^mu`, `c^-1 a c = a^v`.
    G3 {
        p: u32,
        q: u32,
        r: u32,
        mu: Option<u32>,
        v: Option<u32>,
    },
    Permutation {
        degree: u32,
        generators: Vec<Perm>,
    },
    DirectProduct(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn symmetric(n: u32) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            let cycle: Vec<u32> = (0..n).map(|i| (i + 1) % n).collect();
            let mut swap: Vec<u32> = (0..n).collect();
            swap.swap(0, 1);
            gens.push(Perm(cycle));
            gens.push(Perm(swap));
        }
        FamilySpec::Permutation { degree: n, generators: gens }
    }

    pub fn alternating(n: u32) -> Self {
        let mut gens = Vec::new();
        for k in 2..n {
            let mut p: Vec<u32> = (0..n).collect();
            p[0] = 1;
            p[1] = k;
            p[k as usize] = 0;
            gens.push(Perm(p));
        }
        FamilySpec::Permutation { degree: n, generators: gens }
    }

    pub fn product(a: FamilySpec, b: FamilySpec) -> Self {
        FamilySpec::DirectProduct(Box::new(a), Box::new(b))
    }

    /// Group order implied by the parameters, when it is known without
    /// building the group.
    pub fn nominal_order(&self) -> Option<u64> {
        use FamilySpec::*;
        Some(match self {
            Cyclic(n) | Dihedral(n) | GeneralizedQuaternion(n) => *n as u64,
            AbelianProduct(v) => v.iter().map(|&x| x as u64).product(),
            Modular { p, alpha } => (*p as u64).pow(*alpha),
            SemidirectCyclic { q, p, alpha, .. } => *q as u64 * (*p as u64).pow(*alpha),
            MatrixAction { p, m, .. } => (*p as u64) * (*p as u64) * *m as u64,
            G3 { p, q, r, .. } => (*p as u64) * (*q as u64) * (*r as u64),
            Permutation { .. } => return None,
            DirectProduct(a, b) => a.nominal_order()? * b.nominal_order()?,
        })
    }

    /// Short human-readable name.
    pub fn display_name(&self) -> String {
        use FamilySpec::*;
        match self {
            Cyclic(n) => format!("Z{n}"),
            AbelianProduct(v) => {
                let parts: Vec<String> = v.iter().map(|x| format!("Z{x}")).collect();
                parts.join("x")
            }
            Dihedral(n) => format!("D{n}"),
            GeneralizedQuaternion(n) => format!("Q{n}"),
            Modular { p, alpha } => format!("M{}", (*p as u64).pow(*alpha)),
            SemidirectCyclic { q, p, alpha, t } => {
                let top = (*p as u64).pow(*alpha);
                if *t <= 1 {
                    format!("Z{q}:Z{top}")
                } else {
                    format!("Z{q}:{t}Z{top}")
                }
            }
            MatrixAction { p, m, .. } => format!("(Z{p}xZ{p}):Z{m}"),
            G3 { p, q, r, .. } => format!("Z{p}:(Z{q}xZ{r})"),
            Permutation { degree, generators } => {
                // Only recognises the standard generating sets.
                if *self == FamilySpec::symmetric(*degree) {
                    format!("S{degree}")
                } else if *self == FamilySpec::alternating(*degree) {
                    format!("A{degree}")
                } else {
                    format!("Perm{degree}[{}]", generators.len())
                }
            }
            DirectProduct(a, b) => {
                let wrap = |s: &FamilySpec| {
                    let n = s.display_name();
                    if matches!(s, DirectProduct(..)) || n.contains(':') {
                        format!("({n})")
                    } else {
                        n
                    }
                };
                format!("{}x{}", wrap(a), wrap(b))
            }
        }
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidSpec(msg)
}

fn table_from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> alloc::vec::Vec<u16> {
    let mut table = alloc::vec![0u16; order * order];
    for a in 0..order {
        for b in 0..order {
            table[a * order + b] = f(a, b) as u16;
        }
    }
    table
}

fn check_budget(order: u64, limit: usize) -> Result<usize> {
    if order > limit as u64 {
        Err(Error::OrderBudget { order: order as usize, limit })
    } else {
        Ok(order as usize)
    }
}

fn require_prime(x: u32, what: &str) -> Result<()> {
    if is_prime(x as u64) {
        Ok(())
    } else {
        Err(invalid(format!("{what} = {x} must be prime")))
    }
}

/// Least `i` in `1..q` whose multiplicative order modulo `q` is `target`.
pub(crate) fn least_unit_of_order(q: u64, target: u64) -> Option<u64> {
    (1..q.max(2)).find(|&i| mult_order(i, q) == Some(target))
}

type Mat = [u64; 4];

fn mat_mul(a: &Mat, b: &Mat, p: u64) -> Mat {
    [
        (a[0] * b[0] + a[1] * b[2]) % p,
        (a[0] * b[1] + a[1] * b[3]) % p,
        (a[2] * b[0] + a[3] * b[2]) % p,
        (a[2] * b[1] + a[3] * b[3]) % p,
    ]
}

/// Multiplicative order of an invertible matrix, `None` if singular.
fn mat_order(m: &Mat, p: u64) -> Option<u64> {
    let det = (m[0] * m[3] + p * p - m[1] * m[2]) % p;
    if det == 0 {
        return None;
    }
    let id = [1, 0, 0, 1];
    let mut x = *m;
    let mut k = 1;
    while x != id {
        x = mat_mul(&x, m, p);
        k += 1;
    }
    Some(k)
}

/// Least companion matrix `[[0,-1],[1,l]]` over `F_p` of order exactly `m`.
pub(crate) fn companion_of_order(p: u64, m: u64) -> Option<Mat> {
    (0..p).map(|l| [0, p - 1, 1, l]).find(|c| mat_order(c, p) == Some(m))
}

/// Builds the group described by `spec`, refusing anything larger than
/// `max_order`.
pub fn build_family(spec: &FamilySpec, max_order: usize) -> Result<FiniteGroup> {
    use FamilySpec::*;
    let name = spec.display_name();
    let (order, table) = match spec {
        Cyclic(n) => {
            if *n == 0 {
                return Err(invalid("cyclic order must be positive".into()));
            }
            let n = check_budget(*n as u64, max_order)?;
            (n, table_from_fn(n, |a, b| (a + b) % n))
        }
        AbelianProduct(orders) => {
            if orders.is_empty() || orders.contains(&0) {
                return Err(invalid("abelian product needs positive factors".into()));
            }
            let total: u64 = orders.iter().map(|&x| x as u64).product();
            let n = check_budget(total, max_order)?;
            let radix: Vec<usize> = orders.iter().map(|&x| x as usize).collect();
            let table = table_from_fn(n, |a, b| {
                let (mut a, mut b, mut out, mut stride) = (a, b, 0, 1);
                for &r in &radix {
                    out += ((a % r + b % r) % r) * stride;
                    a /= r;
                    b /= r;
                    stride *= r;
                }
                out
            });
            (n, table)
        }
        Dihedral(order) => {
            if *order < 2 || order % 2 != 0 {
                return Err(invalid(format!("dihedral order {order} must be even and >= 2")));
            }
            let n = check_budget(*order as u64, max_order)?;
            let h = n / 2;
            let table = table_from_fn(n, |a, b| {
                let (k1, s1, k2, s2) = (a % h, a / h, b % h, b / h);
                let k = if s1 == 0 { (k1 + k2) % h } else { (k1 + h - k2) % h };
                k + h * (s1 ^ s2)
            });
            (n, table)
        }
        GeneralizedQuaternion(order) => {
            if *order < 8 || !order.is_power_of_two() {
                return Err(invalid(format!("quaternion order {order} must be 2^n with n >= 3")));
            }
            let n = check_budget(*order as u64, max_order)?;
            let h = n / 2;
            let table = table_from_fn(n, |a, b| {
                let (k1, s1, k2, s2) = (a % h, a / h, b % h, b / h);
                match (s1, s2) {
                    (0, _) => (k1 + k2) % h + h * s2,
                    (_, 0) => (k1 + h - k2) % h + h,
                    _ => (k1 + h - k2 + h / 2) % h,
                }
            });
            (n, table)
        }
        Modular { p, alpha } => {
            require_prime(*p, "p")?;
            if *alpha < 3 {
                return Err(invalid("modular group needs alpha >= 3".into()));
            }
            let n = check_budget((*p as u64).pow(*alpha), max_order)?;
            let (pp, big) = (*p as usize, n / *p as usize);
            let r = (*p as u64).pow(alpha - 2) + 1;
            let powers: Vec<usize> = (0..pp).map(|j| pow_mod(r, j as u64, big as u64) as usize).collect();
            let table = table_from_fn(n, |a, b| {
                let (i1, j1, i2, j2) = (a % big, a / big, b % big, b / big);
                (i1 + i2 * powers[j1]) % big + big * ((j1 + j2) % pp)
            });
            (n, table)
        }
        SemidirectCyclic { q, p, alpha, t } => {
            require_prime(*p, "p")?;
            if *q < 2 || *alpha == 0 || t > alpha {
                return Err(invalid("semidirect product needs q >= 2 and 1 <= alpha, t <= alpha".into()));
            }
            let target = (*p as u64).pow(*t);
            let i = least_unit_of_order(*q as u64, target)
                .ok_or_else(|| invalid(format!("no unit of order {target} modulo {q}")))?;
            let top = (*p as u64).pow(*alpha);
            let n = check_budget(*q as u64 * top, max_order)?;
            let (qq, top) = (*q as usize, top as usize);
            let powers: Vec<usize> = (0..top).map(|y| pow_mod(i, y as u64, *q as u64) as usize).collect();
            let table = table_from_fn(n, |a, b| {
                let (x1, y1, x2, y2) = (a % qq, a / qq, b % qq, b / qq);
                (x1 + x2 * powers[y1]) % qq + qq * ((y1 + y2) % top)
            });
            (n, table)
        }
        MatrixAction { p, m, matrix } => {
            require_prime(*p, "p")?;
            if *m == 0 {
                return Err(invalid("matrix order must be positive".into()));
            }
            let pl = *p as u64;
            let mat = match matrix {
                Some(mm) => {
                    let mm = [mm[0] as u64 % pl, mm[1] as u64 % pl, mm[2] as u64 % pl, mm[3] as u64 % pl];
                    if mat_order(&mm, pl) != Some(*m as u64) {
                        return Err(invalid(format!("matrix does not have order {m} over F_{p}")));
                    }
                    mm
                }
                None => companion_of_order(pl, *m as u64)
                    .ok_or_else(|| invalid(format!("no companion matrix of order {m} over F_{p}")))?,
            };
            let n = check_budget(pl * pl * *m as u64, max_order)?;
            let (pp, mm) = (*p as usize, *m as usize);
            let mut powers = Vec::with_capacity(mm);
            let mut acc: Mat = [1, 0, 0, 1];
            for _ in 0..mm {
                powers.push(acc);
                acc = mat_mul(&acc, &mat, pl);
            }
            let sq = pp * pp;
            let table = table_from_fn(n, |a, b| {
                let (v1, k1, v2, k2) = (a % sq, a / sq, b % sq, b / sq);
                let (x1, y1, x2, y2) = (v1 % pp, v1 / pp, (v2 % pp) as u64, (v2 / pp) as u64);
                let mk = &powers[k1];
                let x = (x1 as u64 + mk[0] * x2 + mk[1] * y2) % pl;
                let y = (y1 as u64 + mk[2] * x2 + mk[3] * y2) % pl;
                x as usize + pp * y as usize + sq * ((k1 + k2) % mm)
            });
            (n, table)
        }
        G3 { p, q, r, mu, v } => {
            require_prime(*p, "p")?;
            require_prime(*q, "q")?;
            require_prime(*r, "r")?;
            if q == r || (p - 1) % q != 0 || (p - 1) % r != 0 {
                return Err(invalid("need distinct q, r dividing p - 1".into()));
            }
            let pl = *p as u64;
            let pick = |given: &Option<u32>, ord: u32, what: &str| -> Result<u64> {
                match given {
                    Some(x) => {
                        let x = *x as u64 % pl;
                        if x == 1 || pow_mod(x, ord as u64, pl) != 1 {
                            return Err(invalid(format!("{what} must be a nontrivial {ord}-th root of unity mod {p}")));
                        }
                        Ok(x)
                    }
                    None => Ok(least_unit_of_order(pl, ord as u64).unwrap()),
                }
            };
            let mu = pick(mu, *q, "mu")?;
            let vv = pick(v, *r, "v")?;
            let n = check_budget(pl * *q as u64 * *r as u64, max_order)?;
            let (pp, qq, rr) = (*p as usize, *q as usize, *r as usize);
            let mu_inv = pow_mod(mu, pl - 2, pl);
            let v_inv = pow_mod(vv, pl - 2, pl);
            let mut lambda = alloc::vec![0usize; qq * rr];
            for y in 0..qq {
                for z in 0..rr {
                    lambda[y + qq * z] = (pow_mod(mu_inv, y as u64, pl) * pow_mod(v_inv, z as u64, pl) % pl) as usize;
                }
            }
            let table = table_from_fn(n, |a, b| {
                let (x1, y1, z1) = (a % pp, (a / pp) % qq, a / (pp * qq));
                let (x2, y2, z2) = (b % pp, (b / pp) % qq, b / (pp * qq));
                (x1 + x2 * lambda[y1 + qq * z1]) % pp + pp * ((y1 + y2) % qq) + pp * qq * ((z1 + z2) % rr)
            });
            (n, table)
        }
        Permutation { degree, generators } => {
            let d = *degree as usize;
            if d == 0 || generators.iter().any(|g| g.degree() != d) {
                return Err(invalid("generators must act on the stated degree".into()));
            }
            for g in generators {
                let mut seen = alloc::vec![false; d];
                for &x in &g.0 {
                    if x as usize >= d || seen[x as usize] {
                        return Err(invalid("generator is not a permutation".into()));
                    }
                    seen[x as usize] = true;
                }
            }
            let mut elems = alloc::vec![Perm::identity(d)];
            let mut index: BTreeMap<Perm, usize> = BTreeMap::new();
            index.insert(elems[0].clone(), 0);
            let mut head = 0;
            while head < elems.len() {
                for g in generators {
                    let next = elems[head].then(g);
                    if !index.contains_key(&next) {
                        if elems.len() >= max_order {
                            return Err(Error::OrderBudget { order: elems.len() + 1, limit: max_order });
                        }
                        index.insert(next.clone(), elems.len());
                        elems.push(next);
                    }
                }
                head += 1;
            }
            let n = elems.len();
            let table = table_from_fn(n, |a, b| index[&elems[a].then(&elems[b])]);
            (n, table)
        }
        DirectProduct(a, b) => {
            if let Some(o) = spec.nominal_order() {
                check_budget(o, max_order)?;
            }
            let ga = build_family(a, max_order)?;
            let gb = build_family(b, max_order)?;
            return direct_product(&ga, &gb, max_order);
        }
    };
    FiniteGroup::from_table(order, table, spec.clone(), name)
}

/// `G x H` with element `(g, h)` encoded as `g + |G| * h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup, max_order: usize) -> Result<FiniteGroup> {
    let n = check_budget(g.order() as u64 * h.order() as u64, max_order)?;
    let m = g.order();
    let table = table_from_fn(n, |a, b| g.mul(a % m, b % m) + m * h.mul(a / m, b / m));
    let spec = FamilySpec::product(g.family().clone(), h.family().clone());
    let name = spec.display_name();
    FiniteGroup::from_table(n, table, spec, name)
}

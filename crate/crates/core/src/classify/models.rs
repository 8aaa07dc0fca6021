//! Closed-form intersection graphs of the named families.

use alloc::vec::Vec;

use crate::algebra::{build_family, companion_of_order};
use crate::arith::{factorize, is_prime, primes_up_to};
use crate::graph::GraphExpr;
use crate::FamilySpec;

use GraphExpr::{Kbar, Kmn, K};

/// Which closed form a model comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum ModelRule {
    CyclicPrimePower,
    CyclicTwoPrimes,
    CyclicSquareTimesPrime,
    CyclicCubeTimesPrime,
    CyclicFourthTimesPrime,
    CyclicTwoSquares,
    ElementaryPair,
    FourByTwo,
    Quaternion8,
    NonabelianPQ,
    FaithfulCyclic,
    PlaneByPrime,
    Alternating4,
    PlaneBySquare,
    SquareByPrime,
    ModularCube,
    Modular16,
    HalfFaithfulCyclic,
    CyclicSquareByPrime,
}

impl ModelRule {
    pub const ALL: [ModelRule; 19] = [
        ModelRule::CyclicPrimePower,
        ModelRule::CyclicTwoPrimes,
        ModelRule::CyclicSquareTimesPrime,
        ModelRule::CyclicCubeTimesPrime,
        ModelRule::CyclicFourthTimesPrime,
        ModelRule::CyclicTwoSquares,
        ModelRule::ElementaryPair,
        ModelRule::FourByTwo,
        ModelRule::Quaternion8,
        ModelRule::NonabelianPQ,
        ModelRule::FaithfulCyclic,
        ModelRule::PlaneByPrime,
        ModelRule::Alternating4,
        ModelRule::PlaneBySquare,
        ModelRule::SquareByPrime,
        ModelRule::ModularCube,
        ModelRule::Modular16,
        ModelRule::HalfFaithfulCyclic,
        ModelRule::CyclicSquareByPrime,
    ];

    pub fn key(self) -> &'static str {
        use ModelRule::*;
        match self {
            CyclicPrimePower => "cyclic-prime-power",
            CyclicTwoPrimes => "cyclic-pq",
            CyclicSquareTimesPrime => "cyclic-p2q",
            CyclicCubeTimesPrime => "cyclic-p3q",
            CyclicFourthTimesPrime => "cyclic-p4q",
            CyclicTwoSquares => "cyclic-p2q2",
            ElementaryPair => "elementary-pair",
            FourByTwo => "z4xz2",
            Quaternion8 => "q8",
            NonabelianPQ => "nonabelian-pq",
            FaithfulCyclic => "faithful-cyclic-by-cyclic",
            PlaneByPrime => "plane-by-prime",
            Alternating4 => "a4",
            PlaneBySquare => "plane-by-square",
            SquareByPrime => "square-by-prime",
            ModularCube => "modular-cube",
            Modular16 => "modular-16",
            HalfFaithfulCyclic => "half-faithful-cyclic-by-cyclic",
            CyclicSquareByPrime => "cyclic-square-by-prime",
        }
    }
}

/// A published closed form for one group, plus the corrected form when
/// the published one does not match the group's lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedModel {
    pub rule: ModelRule,
    pub expr: GraphExpr,
    pub corrected: Option<GraphExpr>,
}

fn model(rule: ModelRule, expr: GraphExpr) -> Option<ExpectedModel> {
    Some(ExpectedModel { rule, expr, corrected: None })
}

fn k1_plus(rest: GraphExpr) -> GraphExpr {
    GraphExpr::join(K(1), rest)
}

/// `K_(p+2)` with pendant vertices hung on `p` of its vertices.
fn clique_with_pendants(p: usize, each: usize) -> GraphExpr {
    (0..p).fold(K(p + 2), |acc, v| GraphExpr::pendants(acc, v, each))
}

fn prime(x: u32) -> bool {
    is_prime(x as u64)
}

/// `p` when `x = p^2` for a prime `p`.
fn prime_root(x: u32) -> Option<u32> {
    match factorize(x as u64).as_slice() {
        &[(p, 2)] => Some(p as u32),
        _ => None,
    }
}

/// The closed form stated for `rule` at the group `spec`, if `spec` is an
/// instance of it.
pub fn model_for_rule(rule: ModelRule, spec: &FamilySpec) -> Option<ExpectedModel> {
    use FamilySpec::*;
    use ModelRule as R;
    let cyclic_exps = |n: u32| -> Vec<u32> {
        let mut e: Vec<u32> = factorize(n as u64).iter().map(|f| f.1).collect();
        e.sort_unstable_by(|a, b| b.cmp(a));
        e
    };
    match (rule, spec) {
        (R::CyclicPrimePower, Cyclic(n)) => match factorize(*n as u64).as_slice() {
            &[(_, a)] if a >= 2 => model(rule, K(a as usize - 1)),
            _ => None,
        },
        (R::CyclicTwoPrimes, Cyclic(n)) if cyclic_exps(*n) == [1, 1] => model(rule, Kbar(2)),
        (R::CyclicSquareTimesPrime, Cyclic(n)) if cyclic_exps(*n) == [2, 1] => {
            model(rule, k1_plus(GraphExpr::union(K(2), K(1))))
        }
        (R::CyclicCubeTimesPrime, Cyclic(n)) if cyclic_exps(*n) == [3, 1] => {
            model(rule, GraphExpr::join(K(2), GraphExpr::union(K(3), K(1))))
        }
        (R::CyclicFourthTimesPrime, Cyclic(n)) if cyclic_exps(*n) == [4, 1] => {
            model(rule, GraphExpr::join(K(3), GraphExpr::union(K(4), K(1))))
        }
        (R::CyclicTwoSquares, Cyclic(n)) if cyclic_exps(*n) == [2, 2] => {
            model(rule, GraphExpr::join(K(3), GraphExpr::copies(2, K(2))))
        }
        (R::ElementaryPair, AbelianProduct(v)) if v.len() == 2 && v[0] == v[1] && prime(v[0]) => {
            model(rule, Kbar(v[0] as usize + 1))
        }
        (R::FourByTwo, AbelianProduct(v)) if v.as_slice() == [4, 2] => Some(ExpectedModel {
            rule,
            expr: k1_plus(GraphExpr::union(K(4), Kbar(2))),
            corrected: Some(k1_plus(GraphExpr::union(K(3), Kbar(2)))),
        }),
        (R::SquareByPrime, AbelianProduct(v)) if v.len() == 2 && prime(v[1]) && v[0] == v[1] * v[1] => {
            let p = v[1] as usize;
            model(rule, k1_plus(GraphExpr::union(K(p + 1), Kbar(p))))
        }
        (R::Quaternion8, GeneralizedQuaternion(8)) => model(rule, K(4)),
        (R::NonabelianPQ, SemidirectCyclic { q, p, alpha: 1, t: 1 }) if prime(*q) && prime(*p) && (q - 1) % p == 0 => {
            model(rule, Kbar(*q as usize + 1))
        }
        (R::NonabelianPQ, Dihedral(n)) if n % 2 == 0 && prime(n / 2) && n / 2 > 2 => {
            model(rule, Kbar(*n as usize / 2 + 1))
        }
        (R::FaithfulCyclic, SemidirectCyclic { q, p, alpha: 2, t: 2 })
            if prime(*q) && prime(*p) && (q - 1) % (p * p) == 0 =>
        {
            model(rule, k1_plus(GraphExpr::union(K(1), GraphExpr::copies(*q as usize, K(2)))))
        }
        (R::HalfFaithfulCyclic, SemidirectCyclic { q, p, alpha: 2, t: 1 })
            if prime(*q) && prime(*p) && (q - 1) % p == 0 =>
        {
            model(rule, k1_plus(GraphExpr::union(K(1), K(*q as usize + 1))))
        }
        (R::CyclicSquareByPrime, SemidirectCyclic { q, p, alpha: 1, t: 1 }) => {
            let r = prime_root(*q)?;
            if !prime(*p) || (r - 1) % p != 0 {
                return None;
            }
            let r = r as usize;
            Some(ExpectedModel { rule, expr: clique_with_pendants(r, 1), corrected: Some(clique_with_pendants(r, r)) })
        }
        (R::CyclicSquareByPrime, Dihedral(n)) => {
            let r = prime_root(n / 2).filter(|&r| r > 2 && n % 2 == 0)? as usize;
            Some(ExpectedModel { rule, expr: clique_with_pendants(r, 1), corrected: Some(clique_with_pendants(r, r)) })
        }
        (R::PlaneByPrime, MatrixAction { p, m, matrix: None })
            if prime(*m) && prime(*p) && (p + 1) % m == 0 && companion_of_order(*p as u64, *m as u64).is_some() =>
        {
            let p = *p as usize;
            model(rule, GraphExpr::union(Kmn(1, p + 1), Kbar(p * p)))
        }
        (R::PlaneBySquare, MatrixAction { p, m, matrix: None }) => {
            prime_root(*m)?;
            if !prime(*p) || (p + 1) % m != 0 || companion_of_order(*p as u64, *m as u64).is_none() {
                return None;
            }
            let p = *p as usize;
            model(rule, k1_plus(GraphExpr::union(Kmn(1, p + 1), GraphExpr::copies(p * p, K(2)))))
        }
        (R::Alternating4, s) if *s == FamilySpec::alternating(4) => model(rule, GraphExpr::union(Kmn(1, 3), Kbar(4))),
        (R::ModularCube, Modular { p, alpha: 3 }) if *p > 2 => {
            let p = *p as usize;
            model(rule, k1_plus(GraphExpr::union(K(p + 1), Kbar(p))))
        }
        // The two non-central involutions also lie in <a^2, b>.
        (R::Modular16, Modular { p: 2, alpha: 4 }) => Some(ExpectedModel {
            rule,
            expr: k1_plus(GraphExpr::union(K(6), Kbar(2))),
            corrected: Some(k1_plus(GraphExpr::pendants(K(6), 0, 2))),
        }),
        _ => None,
    }
}

/// The published closed form for the family `spec`, if there is one.
pub fn expected_model_for(spec: &FamilySpec) -> Option<ExpectedModel> {
    ModelRule::ALL.iter().find_map(|&r| model_for_rule(r, spec))
}

/// One group to test against one closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaCase {
    pub rule: ModelRule,
    pub spec: FamilySpec,
}

/// Every instance of every closed form with group order at most
/// `max_order`, ordered by rule and then by parameters.
pub fn formula_cases(max_order: usize) -> Vec<FormulaCase> {
    use FamilySpec::*;
    use ModelRule as R;
    let max = max_order as u64;
    let primes = primes_up_to(max / 2 + 1);
    let mut out = Vec::new();
    let mut push = |rule: ModelRule, spec: FamilySpec| {
        let order = spec
            .nominal_order()
            .or_else(|| build_family(&spec, max_order).ok().map(|g| g.order() as u64))
            .unwrap_or(u64::MAX);
        if order <= max && model_for_rule(rule, &spec).is_some() {
            out.push(FormulaCase { rule, spec });
        }
    };
    for rule in ModelRule::ALL {
        match rule {
            R::CyclicPrimePower
            | R::CyclicTwoPrimes
            | R::CyclicSquareTimesPrime
            | R::CyclicCubeTimesPrime
            | R::CyclicFourthTimesPrime
            | R::CyclicTwoSquares => {
                for n in 4..=max {
                    push(rule, Cyclic(n as u32));
                }
            }
            R::ElementaryPair => {
                primes.iter().for_each(|&p| push(rule, AbelianProduct(alloc::vec![p as u32, p as u32])))
            }
            R::SquareByPrime => {
                primes.iter().for_each(|&p| push(rule, AbelianProduct(alloc::vec![(p * p) as u32, p as u32])))
            }
            R::FourByTwo => push(rule, AbelianProduct(alloc::vec![4, 2])),
            R::Quaternion8 => push(rule, GeneralizedQuaternion(8)),
            R::Alternating4 => push(rule, FamilySpec::alternating(4)),
            R::ModularCube => primes.iter().for_each(|&p| push(rule, Modular { p: p as u32, alpha: 3 })),
            R::Modular16 => push(rule, Modular { p: 2, alpha: 4 }),
            R::NonabelianPQ | R::FaithfulCyclic | R::HalfFaithfulCyclic => {
                let (alpha, t) = match rule {
                    R::NonabelianPQ => (1, 1),
                    R::FaithfulCyclic => (2, 2),
                    _ => (2, 1),
                };
                for &p in &primes {
                    for &q in &primes {
                        push(rule, SemidirectCyclic { q: q as u32, p: p as u32, alpha, t });
                    }
                }
            }
            R::CyclicSquareByPrime => {
                for &p in &primes {
                    for &q in &primes {
                        push(rule, SemidirectCyclic { q: (p * p) as u32, p: q as u32, alpha: 1, t: 1 });
                    }
                }
            }
            R::PlaneByPrime | R::PlaneBySquare => {
                for &p in &primes {
                    for m in 2..=max / (p * p) {
                        push(rule, MatrixAction { p: p as u32, m: m as u32, matrix: None });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::eval_expr;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn models_by_family() {
        assert_eq!(expected_model_for(&spec("cyclic:32")).unwrap().expr, K(4));
        assert_eq!(expected_model_for(&spec("sd:q=5,p=2,a=1,t=1")).unwrap().expr, Kbar(6));
        assert_eq!(
            expected_model_for(&spec("modular:3,3")).unwrap().expr,
            GraphExpr::join(K(1), GraphExpr::union(K(4), Kbar(3)))
        );
        assert_eq!(
            expected_model_for(&spec("cyclic:12")).unwrap().expr,
            GraphExpr::join(K(1), GraphExpr::union(K(2), K(1)))
        );
        assert!(expected_model_for(&spec("cyclic:7")).is_none());
        assert!(expected_model_for(&spec("cyclic:60")).is_none());
        assert!(expected_model_for(&spec("dihedral:8")).is_none());
    }

    #[test]
    fn pendant_readings() {
        let m = expected_model_for(&spec("dihedral:18")).unwrap();
        assert_eq!(eval_expr(&m.expr).unwrap().n(), 8);
        assert_eq!(eval_expr(m.corrected.as_ref().unwrap()).unwrap().n(), 14);
    }

    #[test]
    fn enough_cases() {
        let cases = formula_cases(256);
        assert!(cases.len() >= 40);
        assert!(cases.iter().all(|c| c.spec.nominal_order().is_none_or(|o| o <= 256)));
        for rule in ModelRule::ALL {
            assert!(cases.iter().any(|c| c.rule == rule), "{rule:?}");
        }
    }
}

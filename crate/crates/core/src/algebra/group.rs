use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::FamilySpec;
use crate::{Error, Result};

/// A finite group stored as a full multiplication table.
///
/// Elements are `0..order` and element `0` is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    family: FamilySpec,
    name: String,
    fingerprint: u64,
}

/// First violated group axiom found by [`verify_group_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomFailure {
    Closure { a: usize, b: usize },
    Identity { x: usize },
    Inverse { x: usize },
    Associativity { a: usize, b: usize, c: usize },
}

impl FiniteGroup {
    /// Wraps a table without checking the axioms beyond its shape.
    pub fn from_table(order: usize, table: Vec<u16>, family: FamilySpec, name: String) -> Result<Self> {
        if order == 0 || table.len() != order * order {
            return Err(Error::NotAGroup("table size does not match order".into()));
        }
        if order > u16::MAX as usize {
            return Err(Error::OrderBudget { order, limit: u16::MAX as usize });
        }
        let mut inverse = vec![u16::MAX; order];
        for a in 0..order {
            for b in 0..order {
                let c = table[a * order + b] as usize;
                if c >= order {
                    return Err(Error::NotAGroup(alloc::format!("{a}*{b} out of range")));
                }
                if c == 0 {
                    inverse[a] = b as u16;
                }
            }
        }
        let mut fingerprint = 0xcbf2_9ce4_8422_2325u64;
        for &x in &table {
            fingerprint ^= x as u64;
            fingerprint = fingerprint.wrapping_mul(0x100_0000_01b3);
        }
        Ok(FiniteGroup { order, table, inverse, family, name, fingerprint })
    }

    /// Like [`FiniteGroup::from_table`] but also runs the full axiom check.
    pub fn from_table_checked(order: usize, table: Vec<u16>, family: FamilySpec, name: String) -> Result<Self> {
        let g = Self::from_table(order, table, family, name)?;
        verify_group_axioms(&g).map_err(|f| Error::NotAGroup(alloc::format!("{f:?}")))?;
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn family(&self) -> &FamilySpec {
        &self.family
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn table(&self) -> &[u16] {
        &self.table
    }

    /// Hash of the table, used to tell ambient groups apart.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|x| self.element_order(x)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a))).collect()
    }

    /// Number of conjugacy classes.
    pub fn class_count(&self) -> usize {
        let mut seen = vec![false; self.order];
        let mut classes = 0;
        for x in 0..self.order {
            if seen[x] {
                continue;
            }
            classes += 1;
            for g in 0..self.order {
                let y = self.mul(self.mul(g, x), self.inv(g));
                seen[y] = true;
            }
        }
        classes
    }
}

pub fn element_order(g: &FiniteGroup, x: usize) -> usize {
    g.element_order(x)
}

/// Exhaustive check of closure, identity, inverses and associativity.
pub fn verify_group_axioms(g: &FiniteGroup) -> core::result::Result<(), AxiomFailure> {
    let n = g.order;
    for a in 0..n {
        for b in 0..n {
            if g.table[a * n + b] as usize >= n {
                return Err(AxiomFailure::Closure { a, b });
            }
        }
    }
    for x in 0..n {
        if g.mul(0, x) != x || g.mul(x, 0) != x {
            return Err(AxiomFailure::Identity { x });
        }
    }
    for x in 0..n {
        let y = g.inverse[x] as usize;
        if y >= n || g.mul(x, y) != 0 || g.mul(y, x) != 0 {
            return Err(AxiomFailure::Inverse { x });
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = g.mul(a, b);
            for c in 0..n {
                if g.mul(ab, c) != g.mul(a, g.mul(b, c)) {
                    return Err(AxiomFailure::Associativity { a, b, c });
                }
            }
        }
    }
    Ok(())
}

//! Finite unital rings as dense operation tables.
//!
//! Elements are the indices `0..order`; index `0` is always the additive
//! identity. Tables are immutable after validation, so a [`FiniteRing`] can
//! be shared freely across concurrent workers.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Law, RingError};

/// A validated finite associative ring with identity.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    name: String,
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    one: usize,
    provenance: String,
}

/// A validated element index of some [`FiniteRing`].
///
/// Elements carry no ring reference; values are only meaningful relative to
/// the ring whose [`FiniteRing::element`] produced them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Element {
    index: usize,
}

impl Element {
    pub fn index(self) -> usize {
        self.index
    }
}

impl FiniteRing {
    /// Builds and fully validates a ring from row-major nested tables.
    ///
    /// Index `0` must be the additive identity; `neg` is derived from the
    /// addition table. Every group, identity, associativity and
    /// distributivity law is checked over all triples.
    pub fn from_tables(
        name: &str,
        order: usize,
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
        one: usize,
    ) -> Result<FiniteRing, RingError> {
        let flatten = |what: &'static str, rows: &[Vec<usize>]| -> Result<Vec<u32>, RingError> {
            if rows.len() != order {
                return Err(RingError::DimensionMismatch {
                    what,
                    expected: order,
                    got: rows.len(),
                });
            }
            let mut flat = Vec::with_capacity(order * order);
            for row in rows {
                if row.len() != order {
                    return Err(RingError::DimensionMismatch {
                        what,
                        expected: order,
                        got: row.len(),
                    });
                }
                for &v in row {
                    flat.push(v as u32);
                }
            }
            Ok(flat)
        };
        let add = flatten("addition table rows", add)?;
        let mul = flatten("multiplication table rows", mul)?;
        FiniteRing::from_flat(name, order, add, mul, one)
    }

    /// Builds and fully validates a ring from flat row-major tables.
    pub fn from_flat(
        name: &str,
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        one: usize,
    ) -> Result<FiniteRing, RingError> {
        let ring = FiniteRing::assemble(name, order, add, mul, one)?;
        ring.validate()?;
        Ok(ring)
    }

    /// Builds a ring from flat tables known to be valid, skipping the
    /// `O(n^3)` law scan. Shape and range are still checked, and `neg` is
    /// still derived (so a missing additive inverse is caught).
    ///
    /// Intended for tables produced by an already-validated construction.
    pub fn from_flat_trusted(
        name: &str,
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        one: usize,
    ) -> Result<FiniteRing, RingError> {
        FiniteRing::assemble(name, order, add, mul, one)
    }

    fn assemble(
        name: &str,
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        one: usize,
    ) -> Result<FiniteRing, RingError> {
        if order == 0 {
            return Err(RingError::DimensionMismatch {
                what: "ring order",
                expected: 1,
                got: 0,
            });
        }
        if add.len() != order * order {
            return Err(RingError::DimensionMismatch {
                what: "addition table",
                expected: order * order,
                got: add.len(),
            });
        }
        if mul.len() != order * order {
            return Err(RingError::DimensionMismatch {
                what: "multiplication table",
                expected: order * order,
                got: mul.len(),
            });
        }
        if one >= order {
            return Err(RingError::IndexOutOfRange {
                index: one,
                order,
            });
        }
        for &v in add.iter().chain(mul.iter()) {
            if v as usize >= order {
                return Err(RingError::IndexOutOfRange {
                    index: v as usize,
                    order,
                });
            }
        }
        // Identity at 0 and inverses are structural: derive neg here so even
        // trusted tables cannot produce a ring without negation.
        for a in 0..order {
            if add[a] as usize != a {
                return Err(RingError::AxiomViolation {
                    law: Law::AdditiveIdentity,
                    witness: [a, 0, 0],
                });
            }
        }
        let mut neg = vec![0u32; order];
        for a in 0..order {
            let mut found = None;
            for b in 0..order {
                if add[a * order + b] == 0 {
                    found = Some(b as u32);
                    break;
                }
            }
            match found {
                Some(b) => neg[a] = b,
                None => {
                    return Err(RingError::AxiomViolation {
                        law: Law::AdditiveInverse,
                        witness: [a, a, a],
                    })
                }
            }
        }
        Ok(FiniteRing {
            name: name.to_string(),
            order,
            add,
            mul,
            neg,
            one,
            provenance: name.to_string(),
        })
    }

    /// Re-checks every ring law. Cost `O(n^3)`.
    pub fn validate(&self) -> Result<(), RingError> {
        let n = self.order;
        for a in 0..n {
            if self.add(0, a) != a || self.add(a, 0) != a {
                return Err(RingError::AxiomViolation {
                    law: Law::AdditiveIdentity,
                    witness: [a, 0, 0],
                });
            }
            for b in a..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(RingError::AxiomViolation {
                        law: Law::AdditiveCommutativity,
                        witness: [a, b, b],
                    });
                }
            }
        }
        for a in 0..n {
            if self.mul(self.one, a) != a || self.mul(a, self.one) != a {
                return Err(RingError::AxiomViolation {
                    law: Law::MultiplicativeIdentity,
                    witness: [a, a, a],
                });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.add(a, b);
                let axb = self.mul(a, b);
                for c in 0..n {
                    if self.add(ab, c) != self.add(a, self.add(b, c)) {
                        return Err(RingError::AxiomViolation {
                            law: Law::AdditiveAssociativity,
                            witness: [a, b, c],
                        });
                    }
                    if self.mul(axb, c) != self.mul(a, self.mul(b, c)) {
                        return Err(RingError::AxiomViolation {
                            law: Law::MultiplicativeAssociativity,
                            witness: [a, b, c],
                        });
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(RingError::AxiomViolation {
                            law: Law::LeftDistributivity,
                            witness: [a, b, c],
                        });
                    }
                    if self.mul(ab, c) != self.add(self.mul(a, c), self.mul(b, c)) {
                        return Err(RingError::AxiomViolation {
                            law: Law::RightDistributivity,
                            witness: [a, b, c],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The construction expression this ring replays from.
    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn set_provenance(&mut self, provenance: &str) {
        self.provenance = provenance.to_string();
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `a^k` for `k >= 1`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = a;
        for _ in 1..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Validates an index into this ring, the guarded API boundary.
    pub fn element(&self, index: usize) -> Result<Element, RingError> {
        if index < self.order {
            Ok(Element { index })
        } else {
            Err(RingError::IndexOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    fn check_index(&self, index: usize) -> Result<usize, RingError> {
        if index < self.order {
            Ok(index)
        } else {
            Err(RingError::IndexOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    pub fn checked_add(&self, a: usize, b: usize) -> Result<usize, RingError> {
        Ok(self.add(self.check_index(a)?, self.check_index(b)?))
    }

    pub fn checked_mul(&self, a: usize, b: usize) -> Result<usize, RingError> {
        Ok(self.mul(self.check_index(a)?, self.check_index(b)?))
    }

    pub fn checked_neg(&self, a: usize) -> Result<usize, RingError> {
        Ok(self.neg(self.check_index(a)?))
    }

    pub fn checked_sub(&self, a: usize, b: usize) -> Result<usize, RingError> {
        Ok(self.sub(self.check_index(a)?, self.check_index(b)?))
    }

    /// `Z(R) = {a : ar = ra for all r}`.
    pub fn center(&self) -> Subset {
        let mut flags = vec![false; self.order];
        'outer: for a in 0..self.order {
            for r in 0..self.order {
                if self.mul(a, r) != self.mul(r, a) {
                    continue 'outer;
                }
            }
            flags[a] = true;
        }
        Subset::from_flags(flags)
    }

    /// `E(R) = {e : e^2 = e}`.
    pub fn idempotents(&self) -> Subset {
        let mut flags = vec![false; self.order];
        for a in 0..self.order {
            flags[a] = self.mul(a, a) == a;
        }
        Subset::from_flags(flags)
    }

    /// The units: elements with a two-sided multiplicative inverse.
    pub fn units(&self) -> Subset {
        let mut flags = vec![false; self.order];
        for a in 0..self.order {
            flags[a] = self.is_unit(a);
        }
        Subset::from_flags(flags)
    }

    pub fn is_unit(&self, a: usize) -> bool {
        let mut right = false;
        let mut left = false;
        for v in 0..self.order {
            if self.mul(a, v) == self.one {
                right = true;
            }
            if self.mul(v, a) == self.one {
                left = true;
            }
            if right && left {
                return true;
            }
        }
        false
    }

    /// Same order, tables and identity; names and provenance are ignored.
    pub fn eq_tables(&self, other: &FiniteRing) -> bool {
        self.order == other.order
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}

/// A set of elements of a ring of some fixed order, as membership flags.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subset {
    flags: Vec<bool>,
}

impl Subset {
    pub fn empty(order: usize) -> Subset {
        Subset {
            flags: vec![false; order],
        }
    }

    pub fn full(order: usize) -> Subset {
        Subset {
            flags: vec![true; order],
        }
    }

    pub fn from_flags(flags: Vec<bool>) -> Subset {
        Subset { flags }
    }

    pub fn from_indices(order: usize, indices: &[usize]) -> Result<Subset, RingError> {
        let mut flags = vec![false; order];
        for &i in indices {
            if i >= order {
                return Err(RingError::IndexOutOfRange { index: i, order });
            }
            flags[i] = true;
        }
        Ok(Subset { flags })
    }

    /// The length of the flag vector, i.e. the order of the owning ring.
    pub fn order(&self) -> usize {
        self.flags.len()
    }

    #[inline]
    pub fn contains(&self, index: usize) -> bool {
        self.flags[index]
    }

    pub fn insert(&mut self, index: usize) {
        self.flags[index] = true;
    }

    pub fn count(&self) -> usize {
        self.flags.iter().filter(|&&f| f).count()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.iter().all(|&f| !f)
    }

    /// Member indices in ascending order.
    pub fn indices(&self) -> Vec<usize> {
        self.flags
            .iter()
            .enumerate()
            .filter_map(|(i, &f)| f.then_some(i))
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.flags
            .iter()
            .enumerate()
            .filter_map(|(i, &f)| f.then_some(i))
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.flags
            .iter()
            .zip(other.flags.iter())
            .all(|(&a, &b)| !a || b)
    }

    pub fn intersect(&self, other: &Subset) -> Subset {
        Subset {
            flags: self
                .flags
                .iter()
                .zip(other.flags.iter())
                .map(|(&a, &b)| a && b)
                .collect(),
        }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset {
            flags: self
                .flags
                .iter()
                .zip(other.flags.iter())
                .map(|(&a, &b)| a || b)
                .collect(),
        }
    }

    pub fn complement(&self) -> Subset {
        Subset {
            flags: self.flags.iter().map(|&a| !a).collect(),
        }
    }

    /// Compact display like `{0, 4, 8}`.
    pub fn render(&self) -> String {
        let items: Vec<String> = self.iter().map(|i| format!("{i}")).collect();
        format!("{{{}}}", items.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    fn zmod_tables(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let add = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mul = (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
        (add, mul)
    }

    #[test]
    fn z2_xor_and_is_a_ring() {
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![0, 0], vec![0, 1]];
        let r = FiniteRing::from_tables("Z2", 2, &add, &mul, 1).unwrap();
        assert_eq!(r.order(), 2);
        assert_eq!(r.one(), 1);
        assert_eq!(r.add(1, 1), 0);
        assert_eq!(r.mul(1, 1), 1);
        assert_eq!(r.neg(1), 1);
    }

    #[test]
    fn constant_zero_multiplication_breaks_identity() {
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![0, 0], vec![0, 0]];
        let err = FiniteRing::from_tables("bad", 2, &add, &mul, 1).unwrap_err();
        assert_eq!(
            err,
            RingError::AxiomViolation {
                law: Law::MultiplicativeIdentity,
                witness: [1, 1, 1],
            }
        );
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let add = vec![vec![0, 1]];
        let mul = vec![vec![0, 0], vec![0, 1]];
        assert!(matches!(
            FiniteRing::from_tables("bad", 2, &add, &mul, 1),
            Err(RingError::DimensionMismatch { .. })
        ));
        let add = vec![vec![0, 7], vec![1, 0]];
        let mul = vec![vec![0, 0], vec![0, 1]];
        assert!(matches!(
            FiniteRing::from_tables("bad", 2, &add, &mul, 1),
            Err(RingError::IndexOutOfRange { index: 7, .. })
        ));
    }

    #[test]
    fn z6_matches_modular_arithmetic_oracle() {
        let (add, mul) = zmod_tables(6);
        let r = FiniteRing::from_tables("Z6", 6, &add, &mul, 1).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(r.add(a, b), (a + b) % 6);
                assert_eq!(r.mul(a, b), (a * b) % 6);
            }
            assert_eq!(r.add(a, r.neg(a)), 0);
        }
        assert_eq!(r.mul(2, 3), 0);
        assert_eq!(r.add(4, 5), 3);
    }

    #[test]
    fn ring_ops_examples() {
        let z12 = construct::zmod(12).unwrap();
        assert_eq!(z12.ring.neg(5), 7);
        assert_eq!(z12.ring.checked_add(4, 5).unwrap(), 9);
        assert!(matches!(
            z12.ring.checked_mul(3, 12),
            Err(RingError::IndexOutOfRange { index: 12, .. })
        ));
        assert!(z12.ring.element(11).is_ok());
        assert!(z12.ring.element(12).is_err());
    }

    #[test]
    fn center_of_commutative_ring_is_everything() {
        let z12 = construct::zmod(12).unwrap();
        assert_eq!(z12.ring.center().count(), 12);
    }

    // Oracle: square every residue directly.
    #[test]
    fn idempotents_of_z12() {
        let oracle: Vec<usize> = (0..12usize).filter(|i| (i * i) % 12 == *i).collect();
        assert_eq!(oracle, vec![0, 1, 4, 9]);
        let z12 = construct::zmod(12).unwrap();
        assert_eq!(z12.ring.idempotents().indices(), oracle);
        let z4 = construct::zmod(4).unwrap();
        assert_eq!(z4.ring.idempotents().indices(), vec![0, 1]);
    }

    // Oracle: gcd-based unit test for Z_n.
    #[test]
    fn units_of_z12() {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let oracle: Vec<usize> = (0..12usize).filter(|i| gcd(*i, 12) == 1).collect();
        assert_eq!(oracle, vec![1, 5, 7, 11]);
        let z12 = construct::zmod(12).unwrap();
        assert_eq!(z12.ring.units().indices(), oracle);
        let z2 = construct::zmod(2).unwrap();
        assert_eq!(z2.ring.units().indices(), vec![1]);
    }

    #[test]
    fn left_and_right_inverses_agree_on_matrix_ring() {
        let caps = crate::Caps::default();
        let z2 = construct::zmod(2).unwrap();
        let m2 = construct::matrix_ring(&z2, 2, &caps).unwrap();
        let r = &m2.ring;
        for a in 0..r.order() {
            let left = (0..r.order()).any(|v| r.mul(v, a) == r.one());
            let right = (0..r.order()).any(|v| r.mul(a, v) == r.one());
            assert_eq!(left, right);
            assert_eq!(left, r.is_unit(a));
        }
    }

    #[test]
    fn center_is_a_commutative_subring() {
        let caps = crate::Caps::default();
        let z2 = construct::zmod(2).unwrap();
        for built in [
            construct::matrix_ring(&z2, 2, &caps).unwrap(),
            construct::upper_triangular(&z2, 2, &caps).unwrap(),
        ] {
            let r = &built.ring;
            let z = r.center();
            // Only the scalar matrices commute with everything.
            assert_eq!(z.indices(), vec![r.zero(), r.one()]);
            assert!(z.contains(r.zero()));
            assert!(z.contains(r.one()));
            for a in z.iter() {
                assert!(z.contains(r.neg(a)));
                for b in z.iter() {
                    assert!(z.contains(r.add(a, b)));
                    assert!(z.contains(r.mul(a, b)));
                    assert_eq!(r.mul(a, b), r.mul(b, a));
                }
            }
        }
    }

    #[test]
    fn subset_basics() {
        let s = Subset::from_indices(6, &[0, 2, 4]).unwrap();
        assert_eq!(s.count(), 3);
        assert!(s.contains(2));
        assert!(!s.contains(1));
        assert_eq!(s.complement().indices(), vec![1, 3, 5]);
        assert_eq!(s.render(), "{0, 2, 4}");
        assert!(Subset::from_indices(4, &[9]).is_err());
        let t = Subset::from_indices(6, &[0, 2]).unwrap();
        assert!(t.is_subset_of(&s));
        assert_eq!(t.union(&s), s);
        assert_eq!(t.intersect(&s), t);
    }
}

//! The prime radical `P(R)` by three independent algorithms, together with
//! the nilpotent elements `N(R)`, the square-zero elements `N_2(R)` and the
//! Jacobson radical `J(R)`.
//!
//! The three `P(R)` routes are deliberately unrelated in mechanism:
//!
//! 1. [`prime_radical_fixpoint`] — greatest-fixpoint deletion deciding
//!    strong nilpotence,
//! 2. [`prime_radical_ideal_nilpotency`] — nilpotency of the principal
//!    two-sided ideal generated by each element,
//! 3. [`prime_radical_prime_intersection`] — intersection of all two-sided
//!    prime ideals (within the enumeration cap).
//!
//! [`radical_profile`] runs all enabled routes and fails loudly on any
//! disagreement: a mismatch is an implementation bug, never mathematics.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::RingError;
use crate::ideals::{self, IdealKind};
use crate::ring::{FiniteRing, Subset};
use crate::Caps;

/// `N(R)`: elements with `a^k = 0` for some `k <= order`.
///
/// In a ring of order `n` a nilpotent element has nilpotency index at most
/// `n` (the nonzero powers below the index are pairwise distinct), so the
/// power cutoff is exact, not a heuristic.
pub fn nilpotents(ring: &FiniteRing) -> Subset {
    let n = ring.order();
    let mut flags = vec![false; n];
    for a in 0..n {
        let mut p = a;
        for _ in 0..n {
            if p == ring.zero() {
                flags[a] = true;
                break;
            }
            p = ring.mul(p, a);
        }
        if p == ring.zero() {
            flags[a] = true;
        }
    }
    Subset::from_flags(flags)
}

/// `N_2(R) = {a : a^2 = 0}`.
pub fn square_zero(ring: &FiniteRing) -> Subset {
    let mut flags = vec![false; ring.order()];
    for a in 0..ring.order() {
        flags[a] = ring.mul(a, a) == ring.zero();
    }
    Subset::from_flags(flags)
}

/// `P(R)` as the strongly nilpotent elements, via greatest-fixpoint
/// deletion.
///
/// An element is strongly nilpotent iff it admits no infinite sequence
/// `p_0 = a`, `p_{i+1} = p_i r p_i` avoiding zero; the set of elements that
/// *do* admit one is the greatest fixpoint of
/// `X -> {x != 0 : exists r, x r x in X}`, computed by deleting elements
/// from `R \ {0}` until stable. `P(R)` is the complement.
pub fn prime_radical_fixpoint(ring: &FiniteRing) -> Subset {
    let n = ring.order();
    let mut alive = vec![true; n];
    alive[ring.zero()] = false;
    loop {
        let mut changed = false;
        for x in 0..n {
            if !alive[x] {
                continue;
            }
            let survives = (0..n).any(|r| alive[ring.mul(ring.mul(x, r), x)]);
            if !survives {
                alive[x] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Subset::from_flags(alive.iter().map(|&a| !a).collect())
}

/// `P(R) = {a : the two-sided ideal generated by a is nilpotent}`.
pub fn prime_radical_ideal_nilpotency(ring: &FiniteRing) -> Subset {
    let mut flags = vec![false; ring.order()];
    for a in 0..ring.order() {
        let ideal = ideals::ideal_generated(ring, &[a], IdealKind::TwoSided);
        flags[a] = ideals::is_nilpotent_ideal(ring, &ideal)
            .expect("generated ideal is two-sided")
            .is_some();
    }
    Subset::from_flags(flags)
}

/// `P(R)` as the intersection of all two-sided prime ideals.
///
/// Needs the full ideal lattice, so it is capped by
/// [`Caps::ideal_enum_cap`].
pub fn prime_radical_prime_intersection(
    ring: &FiniteRing,
    caps: &Caps,
) -> Result<Subset, RingError> {
    let lattice = ideals::enumerate_two_sided_ideals(ring, caps)?;
    let mut acc = Subset::full(ring.order());
    for ideal in lattice.iter() {
        if ideals::is_prime_ideal(ring, ideal)? {
            acc = acc.intersect(ideal.members());
        }
    }
    Ok(acc)
}

/// `J(R) = {a : 1 - ra is a unit for all r}` (quasi-regularity).
///
/// The left and right forms agree in a finite ring; both are computed and
/// their agreement asserted.
pub fn jacobson_radical(ring: &FiniteRing) -> Subset {
    let n = ring.order();
    let units = ring.units();
    let quasi = |products: &dyn Fn(usize, usize) -> usize| -> Vec<bool> {
        (0..n)
            .map(|a| (0..n).all(|r| units.contains(ring.sub(ring.one(), products(r, a)))))
            .collect()
    };
    let left = quasi(&|r, a| ring.mul(r, a));
    let right = quasi(&|r, a| ring.mul(a, r));
    assert_eq!(
        left, right,
        "left and right quasi-regularity must agree in a finite ring"
    );
    Subset::from_flags(left)
}

/// All radicals of one ring, with per-algorithm provenance for `P(R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalProfile {
    /// The prime radical (consensus of all enabled algorithms).
    pub p: Subset,
    /// The nilpotent elements.
    pub n: Subset,
    /// The square-zero elements.
    pub n2: Subset,
    /// The Jacobson radical.
    pub j: Subset,
    /// True iff all enabled `P(R)` algorithms returned identical subsets.
    pub methods_agreed: bool,
    /// `(algorithm name, subset)` in a fixed order: fixpoint, rar, primes.
    pub per_method: Vec<(&'static str, Subset)>,
}

impl RadicalProfile {
    pub fn method(&self, name: &str) -> Option<&Subset> {
        self.per_method
            .iter()
            .find_map(|(m, s)| (*m == name).then_some(s))
    }
}

/// Runs every enabled `P(R)` algorithm and assembles the profile.
///
/// The fixpoint and ideal-nilpotency routes always run; the
/// prime-intersection route runs when the order is within the enumeration
/// cap. Any disagreement is an error naming the differing subsets.
pub fn radical_profile(ring: &FiniteRing, caps: &Caps) -> Result<RadicalProfile, RingError> {
    let mut per_method: Vec<(&'static str, Subset)> = Vec::new();
    per_method.push(("fixpoint", prime_radical_fixpoint(ring)));
    per_method.push(("rar", prime_radical_ideal_nilpotency(ring)));
    if ring.order() <= caps.ideal_enum_cap {
        per_method.push(("primes", prime_radical_prime_intersection(ring, caps)?));
    }
    let agreed = per_method.windows(2).all(|w| w[0].1 == w[1].1);
    if !agreed {
        return Err(RingError::OracleDisagreement {
            methods: per_method
                .iter()
                .map(|(name, s)| (*name, s.indices()))
                .collect(),
        });
    }
    Ok(RadicalProfile {
        p: per_method[0].1.clone(),
        n: nilpotents(ring),
        n2: square_zero(ring),
        j: jacobson_radical(ring),
        methods_agreed: agreed,
        per_method,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use std::vec::Vec;

    fn caps() -> Caps {
        Caps::default()
    }

    // Oracle: direct power scan on residues.
    #[test]
    fn nilpotents_of_zn() {
        fn oracle(n: usize) -> Vec<usize> {
            (0..n)
                .filter(|&a| {
                    let mut p = a % n;
                    for _ in 0..n {
                        if p == 0 {
                            return true;
                        }
                        p = (p * a) % n;
                    }
                    p == 0
                })
                .collect()
        }
        let z12 = construct::zmod(12).unwrap();
        assert_eq!(nilpotents(&z12.ring).indices(), oracle(12));
        assert_eq!(oracle(12), vec![0, 6]);
        let z6 = construct::zmod(6).unwrap();
        assert_eq!(nilpotents(&z6.ring).indices(), vec![0]);
    }

    // Oracle: over F_2, a 2x2 matrix is nilpotent iff trace and determinant
    // both vanish (Cayley-Hamilton); that gives exactly {0, e12, e21, J}.
    #[test]
    fn nilpotents_of_m2_z2() {
        let z2 = construct::zmod(2).unwrap();
        let m2 = construct::matrix_ring(&z2, 2, &caps()).unwrap();
        let mut oracle: Vec<usize> = Vec::new();
        for x in 0..m2.ring.order() {
            let cells = m2.coords.matrix_of(x).unwrap();
            let trace = (cells[0][0] + cells[1][1]) % 2;
            let det = (cells[0][0] * cells[1][1] + cells[0][1] * cells[1][0]) % 2;
            if trace == 0 && det == 0 {
                oracle.push(x);
            }
        }
        assert_eq!(oracle.len(), 4);
        assert_eq!(nilpotents(&m2.ring).indices(), oracle);
    }

    #[test]
    fn square_zero_is_contained_in_nilpotents() {
        let z2 = construct::zmod(2).unwrap();
        let t3 = construct::upper_triangular(&z2, 3, &caps()).unwrap();
        let n2 = square_zero(&t3.ring);
        let n = nilpotents(&t3.ring);
        assert!(n2.is_subset_of(&n));
        assert!(n2.contains(0));
    }

    #[test]
    fn prime_radical_of_z12_three_ways() {
        let z12 = construct::zmod(12).unwrap();
        let expected = vec![0, 6];
        assert_eq!(prime_radical_fixpoint(&z12.ring).indices(), expected);
        assert_eq!(prime_radical_ideal_nilpotency(&z12.ring).indices(), expected);
        assert_eq!(
            prime_radical_prime_intersection(&z12.ring, &caps())
                .unwrap()
                .indices(),
            expected
        );
    }

    #[test]
    fn prime_radical_of_reduced_and_simple_rings_is_zero() {
        let z6 = construct::zmod(6).unwrap();
        assert_eq!(prime_radical_fixpoint(&z6.ring).indices(), vec![0]);
        let z2 = construct::zmod(2).unwrap();
        let m2 = construct::matrix_ring(&z2, 2, &caps()).unwrap();
        assert_eq!(prime_radical_fixpoint(&m2.ring).indices(), vec![0]);
        assert_eq!(
            prime_radical_prime_intersection(&m2.ring, &caps())
                .unwrap()
                .indices(),
            vec![0]
        );
    }

    // The constant-diagonal family over Z_2 encodes the diagonal in the
    // lowest digit, so the radical is exactly the even indices.
    #[test]
    fn prime_radical_of_s4_z2_is_the_zero_diagonal_half() {
        let z2 = construct::zmod(2).unwrap();
        let s4 = construct::sn_ring(&z2, 4, &caps()).unwrap();
        assert_eq!(s4.ring.order(), 128);
        let p = prime_radical_fixpoint(&s4.ring);
        assert_eq!(p.count(), 64);
        for x in 0..s4.ring.order() {
            assert_eq!(p.contains(x), x % 2 == 0);
        }
        // Every element is a unit or in the radical.
        let units = s4.ring.units();
        for x in 0..s4.ring.order() {
            assert!(units.contains(x) ^ p.contains(x));
        }
    }

    #[test]
    fn rar_route_on_triangular_and_truncated_polynomials() {
        let z2 = construct::zmod(2).unwrap();
        let t2 = construct::upper_triangular(&z2, 2, &caps()).unwrap();
        assert_eq!(
            prime_radical_ideal_nilpotency(&t2.ring).indices(),
            vec![0, 2]
        );
        let v3 = construct::vn_ring(&z2, 3, &caps()).unwrap();
        let p = prime_radical_ideal_nilpotency(&v3.ring);
        assert_eq!(p.count(), 4);
        for x in 0..v3.ring.order() {
            assert_eq!(p.contains(x), x % 2 == 0);
        }
    }

    #[test]
    fn jacobson_radical_examples() {
        let z12 = construct::zmod(12).unwrap();
        assert_eq!(jacobson_radical(&z12.ring).indices(), vec![0, 6]);
        let z2 = construct::zmod(2).unwrap();
        let t2 = construct::upper_triangular(&z2, 2, &caps()).unwrap();
        assert_eq!(jacobson_radical(&t2.ring).indices(), vec![0, 2]);
        let m2 = construct::matrix_ring(&z2, 2, &caps()).unwrap();
        assert_eq!(jacobson_radical(&m2.ring).indices(), vec![0]);
    }

    #[test]
    fn profile_agreement_and_containments() {
        let caps = caps();
        let z2 = construct::zmod(2).unwrap();
        for built in [
            construct::zmod(12).unwrap(),
            construct::sn_ring(&z2, 4, &caps).unwrap(),
            construct::zmod(2).unwrap(),
        ] {
            let profile = radical_profile(&built.ring, &caps).unwrap();
            assert!(profile.methods_agreed);
            assert_eq!(profile.per_method.len(), 3);
            assert_eq!(profile.p, profile.j);
            assert!(profile.p.is_subset_of(&profile.n));
            assert!(profile.n2.is_subset_of(&profile.n));
        }
    }

    #[test]
    fn prime_intersection_is_skipped_above_the_cap() {
        let z4 = construct::zmod(4).unwrap();
        let m2z4 = construct::matrix_ring(&z4, 2, &caps()).unwrap();
        assert_eq!(m2z4.ring.order(), 256);
        let profile = radical_profile(&m2z4.ring, &caps()).unwrap();
        assert_eq!(profile.per_method.len(), 2);
        assert!(profile.methods_agreed);
        // P(M_2(Z_4)) is the matrices over {0, 2}.
        assert_eq!(profile.p.count(), 16);
        for x in profile.p.iter() {
            let cells = m2z4.coords.matrix_of(x).unwrap();
            assert!(cells.iter().flatten().all(|&c| c == 0 || c == 2));
        }
    }

    #[test]
    fn profile_of_a_field_is_trivial() {
        let gf4 = construct::polynomial_quotient(2, &[1, 1, 1], &caps()).unwrap();
        let profile = radical_profile(&gf4.ring, &caps()).unwrap();
        assert_eq!(profile.p.indices(), vec![0]);
        assert_eq!(profile.n.indices(), vec![0]);
        assert_eq!(profile.j.indices(), vec![0]);
    }
}

//! Exhaustive checkers for the ring classes under study.
//!
//! Every checker scans tuples in lexicographic order and reports the least
//! violating tuple on failure, so reports are reproducible bit for bit. The
//! shared prime radical is passed in precomputed (see
//! [`crate::radicals::radical_profile`]) and consulted by flag lookup.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::RingError;
use crate::ideals::{self, Ideal, IdealKind};
use crate::radicals::{self, RadicalProfile};
use crate::ring::{FiniteRing, Subset};
use crate::Caps;

/// Verdict of one property check, with the lexicographically least
/// violating tuple when the verdict is `false` and the number of tuples the
/// scan examined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: String,
    pub verdict: bool,
    pub witness: Option<Vec<usize>>,
    pub scanned: u64,
}

impl PropertyReport {
    fn holds(property: &str, scanned: u64) -> PropertyReport {
        PropertyReport {
            property: String::from(property),
            verdict: true,
            witness: None,
            scanned,
        }
    }

    fn fails(property: &str, witness: Vec<usize>, scanned: u64) -> PropertyReport {
        PropertyReport {
            property: String::from(property),
            verdict: false,
            witness: Some(witness),
            scanned,
        }
    }
}

/// Which permutation of a zero product `abc = 0` the conclusion inspects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Permutation {
    Bac,
    Acb,
    Cba,
}

impl Permutation {
    fn apply(self, ring: &FiniteRing, a: usize, b: usize, c: usize) -> usize {
        match self {
            Permutation::Bac => ring.mul(ring.mul(b, a), c),
            Permutation::Acb => ring.mul(ring.mul(a, c), b),
            Permutation::Cba => ring.mul(ring.mul(c, b), a),
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Permutation::Bac => "",
            Permutation::Acb => "_acb",
            Permutation::Cba => "_cba",
        }
    }
}

fn scan_zero_triples(
    ring: &FiniteRing,
    perm: Permutation,
    admits: impl Fn(usize) -> bool,
) -> (bool, Option<Vec<usize>>, u64) {
    let n = ring.order();
    let mut scanned = 0u64;
    for a in 0..n {
        for b in 0..n {
            let ab = ring.mul(a, b);
            for c in 0..n {
                scanned += 1;
                if ring.mul(ab, c) == ring.zero() && !admits(perm.apply(ring, a, b, c)) {
                    return (false, Some(vec![a, b, c]), scanned);
                }
            }
        }
    }
    (true, None, scanned)
}

/// `abc = 0` implies `bac = 0`.
pub fn is_symmetric(ring: &FiniteRing) -> PropertyReport {
    let (verdict, witness, scanned) =
        scan_zero_triples(ring, Permutation::Bac, |t| t == ring.zero());
    PropertyReport {
        property: String::from("symmetric"),
        verdict,
        witness,
        scanned,
    }
}

/// `abc = 0` implies `bac in P(R)`.
pub fn is_p_symmetric(ring: &FiniteRing, p: &Subset) -> PropertyReport {
    is_p_symmetric_permuted(ring, p, Permutation::Bac)
}

/// `abc = 0` implies the permuted product lies in `P(R)`.
pub fn is_p_symmetric_permuted(
    ring: &FiniteRing,
    p: &Subset,
    perm: Permutation,
) -> PropertyReport {
    let (verdict, witness, scanned) = scan_zero_triples(ring, perm, |t| p.contains(t));
    PropertyReport {
        property: format!("p_symmetric{}", perm.suffix()),
        verdict,
        witness,
        scanned,
    }
}

/// `abc = 0` implies `bac in Z(R)`.
pub fn is_central_symmetric(ring: &FiniteRing) -> PropertyReport {
    let center = ring.center();
    let (verdict, witness, scanned) =
        scan_zero_triples(ring, Permutation::Bac, |t| center.contains(t));
    PropertyReport {
        property: String::from("central_symmetric"),
        verdict,
        witness,
        scanned,
    }
}

/// `abc = 0` implies `bac` nilpotent.
pub fn is_generalized_weakly_symmetric(ring: &FiniteRing) -> PropertyReport {
    let nil = radicals::nilpotents(ring);
    let (verdict, witness, scanned) =
        scan_zero_triples(ring, Permutation::Bac, |t| nil.contains(t));
    PropertyReport {
        property: String::from("generalized_weakly_symmetric"),
        verdict,
        witness,
        scanned,
    }
}

/// `ab = 0` implies `aRb ⊆ P(R)`; witness `(a, b, r)` with `arb` outside.
pub fn is_p_semicommutative(ring: &FiniteRing, p: &Subset) -> PropertyReport {
    let n = ring.order();
    let mut scanned = 0u64;
    for a in 0..n {
        for b in 0..n {
            scanned += 1;
            if ring.mul(a, b) != ring.zero() {
                continue;
            }
            for r in 0..n {
                scanned += 1;
                if !p.contains(ring.mul(ring.mul(a, r), b)) {
                    return PropertyReport::fails("p_semicommutative", vec![a, b, r], scanned);
                }
            }
        }
    }
    PropertyReport::holds("p_semicommutative", scanned)
}

/// 2-primality, decided through all three equivalent forms at once:
/// `N(R) = P(R)`, `ab in P(R) => ba in P(R)`, and `R/P(R)` reduced. The
/// forms must agree; disagreement is an implementation-bug signal.
pub fn is_2_primal(
    ring: &FiniteRing,
    profile: &RadicalProfile,
) -> Result<PropertyReport, RingError> {
    let n = ring.order();
    let mut scanned = 0u64;

    let mut witness_n: Option<usize> = None;
    for a in 0..n {
        scanned += 1;
        if profile.n.contains(a) && !profile.p.contains(a) {
            witness_n = Some(a);
            break;
        }
    }
    let form_equal = witness_n.is_none() && profile.p == profile.n;

    let mut witness_swap: Option<(usize, usize)> = None;
    'swap: for a in 0..n {
        for b in 0..n {
            scanned += 1;
            if profile.p.contains(ring.mul(a, b)) && !profile.p.contains(ring.mul(b, a)) {
                witness_swap = Some((a, b));
                break 'swap;
            }
        }
    }
    let form_swap = witness_swap.is_none();

    let p_ideal = Ideal::from_subset(ring, profile.p.clone(), IdealKind::TwoSided)?;
    let (quotient, _projection) = ideals::quotient_ring(ring, &p_ideal)?;
    scanned += quotient.order() as u64;
    let form_reduced = radicals::nilpotents(&quotient).count() == 1;

    if form_equal != form_swap || form_swap != form_reduced {
        return Err(RingError::EquivalenceBroken {
            property: "two_primal",
            details: format!(
                "N=P:{form_equal} swap:{form_swap} quotient-reduced:{form_reduced}"
            ),
        });
    }
    Ok(match witness_n {
        None => PropertyReport::holds("two_primal", scanned),
        Some(a) => PropertyReport::fails("two_primal", vec![a], scanned),
    })
}

/// `ab = 0` implies `Rbra` is a nil left ideal; witness `(a, b, r, s)` with
/// `s b r a` not nilpotent.
pub fn is_weakly_reversible(ring: &FiniteRing) -> PropertyReport {
    let n = ring.order();
    let nil = radicals::nilpotents(ring);
    let mut scanned = 0u64;
    for a in 0..n {
        for b in 0..n {
            scanned += 1;
            if ring.mul(a, b) != ring.zero() {
                continue;
            }
            for r in 0..n {
                let bra = ring.mul(ring.mul(b, r), a);
                for s in 0..n {
                    scanned += 1;
                    if !nil.contains(ring.mul(s, bra)) {
                        return PropertyReport::fails(
                            "weakly_reversible",
                            vec![a, b, r, s],
                            scanned,
                        );
                    }
                }
            }
        }
    }
    PropertyReport::holds("weakly_reversible", scanned)
}

/// Every maximal left ideal is two-sided; witness `(m, r)` with `m` in some
/// maximal left ideal that does not contain `m r`.
pub fn is_left_quasi_duo(ring: &FiniteRing, caps: &Caps) -> Result<PropertyReport, RingError> {
    let maximal = ideals::enumerate_maximal_left_ideals(ring, caps)?;
    let mut scanned = 0u64;
    for ideal in maximal.iter() {
        for m in ideal.members().iter() {
            for r in 0..ring.order() {
                scanned += 1;
                if !ideal.contains(ring.mul(m, r)) {
                    return Ok(PropertyReport::fails("left_quasi_duo", vec![m, r], scanned));
                }
            }
        }
    }
    Ok(PropertyReport::holds("left_quasi_duo", scanned))
}

/// Every two-sided prime ideal is inclusion-maximal among proper two-sided
/// ideals; the witness is the member list of a non-maximal prime.
pub fn all_primes_maximal(ring: &FiniteRing, caps: &Caps) -> Result<PropertyReport, RingError> {
    let lattice = ideals::enumerate_two_sided_ideals(ring, caps)?;
    let proper: Vec<&Ideal> = lattice.iter().filter(|i| i.is_proper()).collect();
    let mut scanned = 0u64;
    for ideal in lattice.iter() {
        if !ideals::is_prime_ideal(ring, ideal)? {
            continue;
        }
        for other in proper.iter() {
            scanned += 1;
            if other.members() != ideal.members()
                && ideal.members().is_subset_of(other.members())
            {
                return Ok(PropertyReport::fails(
                    "primes_maximal",
                    ideal.members().indices(),
                    scanned,
                ));
            }
        }
    }
    Ok(PropertyReport::holds("primes_maximal", scanned))
}

fn coefficient_tuples(order: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut digits = vec![0usize; len];
    loop {
        out.push(digits.clone());
        let mut i = 0;
        loop {
            if i == len {
                return out;
            }
            digits[i] += 1;
            if digits[i] < order {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn poly_product(ring: &FiniteRing, f: &[usize], g: &[usize]) -> Vec<usize> {
    let mut out = vec![ring.zero(); f.len() + g.len() - 1];
    for (i, &fi) in f.iter().enumerate() {
        for (j, &gj) in g.iter().enumerate() {
            out[i + j] = ring.add(out[i + j], ring.mul(fi, gj));
        }
    }
    out
}

fn is_zero_poly(ring: &FiniteRing, f: &[usize]) -> bool {
    f.iter().all(|&c| c == ring.zero())
}

fn scan_budget(order: usize, factors: u32, cap: u128, what: &'static str) -> Result<u128, RingError> {
    let required = (order as u128)
        .checked_pow(factors)
        .unwrap_or(u128::MAX);
    if required > cap {
        return Err(RingError::CapExceeded {
            what,
            required,
            cap,
        });
    }
    Ok(required)
}

/// Degree-bounded Armendariz check: for all `f, g` of degree `<= d`,
/// `fg = 0` in `R[x]` forces every coefficient product `a_i b_j = 0`.
/// Witness: the concatenated coefficient tuples of `f` and `g`.
pub fn is_armendariz_bounded(
    ring: &FiniteRing,
    d: usize,
    caps: &Caps,
) -> Result<PropertyReport, RingError> {
    let len = d + 1;
    scan_budget(
        ring.order(),
        2 * len as u32,
        caps.pair_budget,
        "Armendariz pair scan",
    )?;
    let name = format!("armendariz(d={d})");
    let tuples = coefficient_tuples(ring.order(), len);
    let mut scanned = 0u64;
    for f in tuples.iter() {
        for g in tuples.iter() {
            scanned += 1;
            if !is_zero_poly(ring, &poly_product(ring, f, g)) {
                continue;
            }
            let clean = f
                .iter()
                .all(|&fi| g.iter().all(|&gj| ring.mul(fi, gj) == ring.zero()));
            if !clean {
                let mut witness = f.clone();
                witness.extend_from_slice(g);
                return Ok(PropertyReport::fails(&name, witness, scanned));
            }
        }
    }
    Ok(PropertyReport::holds(&name, scanned))
}

/// Degree-bounded polynomial form of P-symmetry: for all `f, g, h` of
/// degree `<= d` with `fgh = 0`, every coefficient of `gfh` lies in `P(R)`.
/// Witness: the concatenated coefficient tuples of `f`, `g` and `h`.
pub fn is_p_symmetric_poly_bounded(
    ring: &FiniteRing,
    p: &Subset,
    d: usize,
    caps: &Caps,
) -> Result<PropertyReport, RingError> {
    let len = d + 1;
    scan_budget(
        ring.order(),
        3 * len as u32,
        caps.triple_budget,
        "polynomial triple scan",
    )?;
    let name = format!("p_symmetric_poly(d={d})");
    let tuples = coefficient_tuples(ring.order(), len);
    let mut scanned = 0u64;
    for f in tuples.iter() {
        for g in tuples.iter() {
            let fg = poly_product(ring, f, g);
            let gf = poly_product(ring, g, f);
            for h in tuples.iter() {
                scanned += 1;
                if !is_zero_poly(ring, &poly_product(ring, &fg, h)) {
                    continue;
                }
                let gfh = poly_product(ring, &gf, h);
                if !gfh.iter().all(|&c| p.contains(c)) {
                    let mut witness = f.clone();
                    witness.extend_from_slice(g);
                    witness.extend_from_slice(h);
                    return Ok(PropertyReport::fails(&name, witness, scanned));
                }
            }
        }
    }
    Ok(PropertyReport::holds(&name, scanned))
}

//! Generated ideals, ideal lattices, primality and nilpotency tests, and
//! quotient rings.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::RingError;
use crate::ring::{FiniteRing, Subset};
use crate::Caps;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum IdealKind {
    Left,
    TwoSided,
}

/// A left or two-sided ideal, stored as membership flags.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ideal {
    kind: IdealKind,
    members: Subset,
    generators: Option<Vec<usize>>,
}

impl Ideal {
    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    pub fn members(&self) -> &Subset {
        &self.members
    }

    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.contains(index)
    }

    pub fn count(&self) -> usize {
        self.members.count()
    }

    pub fn is_proper(&self) -> bool {
        self.members.count() < self.members.order()
    }

    /// Wraps a membership set after re-checking the closure laws of `kind`.
    pub fn from_subset(
        ring: &FiniteRing,
        members: Subset,
        kind: IdealKind,
    ) -> Result<Ideal, RingError> {
        let ideal = Ideal {
            kind,
            members,
            generators: None,
        };
        if let Some(reason) = ideal.closure_failure(ring) {
            return Err(RingError::NotAnIdeal { reason });
        }
        Ok(ideal)
    }

    /// Re-scans the defining closure laws; `None` means they all hold.
    pub fn closure_failure(&self, ring: &FiniteRing) -> Option<&'static str> {
        let m = &self.members;
        if m.order() != ring.order() {
            return Some("membership flags sized for a different ring");
        }
        if !m.contains(ring.zero()) {
            return Some("missing zero");
        }
        for a in m.iter() {
            if !m.contains(ring.neg(a)) {
                return Some("not closed under negation");
            }
            for b in m.iter() {
                if !m.contains(ring.add(a, b)) {
                    return Some("not closed under addition");
                }
            }
            for r in 0..ring.order() {
                if !m.contains(ring.mul(r, a)) {
                    return Some("not closed under left multiplication");
                }
                if self.kind == IdealKind::TwoSided && !m.contains(ring.mul(a, r)) {
                    return Some("not closed under right multiplication");
                }
            }
        }
        None
    }

    /// Whether the ideal is two-sided when re-scanned (left ideals may
    /// happen to be two-sided).
    pub fn is_two_sided(&self, ring: &FiniteRing) -> bool {
        let m = &self.members;
        m.iter()
            .all(|a| (0..ring.order()).all(|r| m.contains(ring.mul(a, r))))
    }
}

/// The least ideal of the given kind containing `gens`.
///
/// Closure under addition, negation and the admitted multiplications is
/// computed by worklist until fixpoint. Generators must be valid indices.
pub fn ideal_generated(ring: &FiniteRing, gens: &[usize], kind: IdealKind) -> Ideal {
    let n = ring.order();
    let mut flags = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let push = |flags: &mut Vec<bool>, stack: &mut Vec<usize>, x: usize| {
        if !flags[x] {
            flags[x] = true;
            stack.push(x);
        }
    };
    push(&mut flags, &mut stack, ring.zero());
    for &g in gens {
        assert!(g < n, "generator index out of range");
        push(&mut flags, &mut stack, g);
    }
    let mut members: Vec<usize> = Vec::new();
    while let Some(x) = stack.pop() {
        push(&mut flags, &mut stack, ring.neg(x));
        for &m in members.iter() {
            push(&mut flags, &mut stack, ring.add(x, m));
        }
        // x + x as well (members does not yet contain x)
        push(&mut flags, &mut stack, ring.add(x, x));
        for r in 0..n {
            push(&mut flags, &mut stack, ring.mul(r, x));
            if kind == IdealKind::TwoSided {
                push(&mut flags, &mut stack, ring.mul(x, r));
            }
        }
        members.push(x);
    }
    Ideal {
        kind,
        members: Subset::from_flags(flags),
        generators: Some(gens.to_vec()),
    }
}

/// Sum of two ideals of the same kind: `{i + j}` is already closed.
fn ideal_sum(ring: &FiniteRing, a: &Ideal, b: &Ideal) -> Ideal {
    debug_assert_eq!(a.kind, b.kind);
    let mut flags = vec![false; ring.order()];
    for i in a.members.iter() {
        for j in b.members.iter() {
            flags[ring.add(i, j)] = true;
        }
    }
    Ideal {
        kind: a.kind,
        members: Subset::from_flags(flags),
        generators: None,
    }
}

fn enumerate_lattice(
    ring: &FiniteRing,
    kind: IdealKind,
    caps: &Caps,
) -> Result<Vec<Ideal>, RingError> {
    if ring.order() > caps.ideal_enum_cap {
        return Err(RingError::CapExceeded {
            what: "ideal lattice enumeration (ring order)",
            required: ring.order() as u128,
            cap: caps.ideal_enum_cap as u128,
        });
    }
    // Seed with all principal (cyclic) ideals, then close under binary sums.
    let mut seen: BTreeSet<Subset> = BTreeSet::new();
    let mut lattice: Vec<Ideal> = Vec::new();
    let mut queue: Vec<Ideal> = Vec::new();
    for a in 0..ring.order() {
        let principal = ideal_generated(ring, &[a], kind);
        if seen.insert(principal.members.clone()) {
            queue.push(principal);
        }
    }
    while let Some(next) = queue.pop() {
        for existing in lattice.iter() {
            let sum = ideal_sum(ring, &next, existing);
            if !seen.contains(&sum.members) {
                seen.insert(sum.members.clone());
                queue.push(sum);
            }
        }
        lattice.push(next);
        if lattice.len() + queue.len() > caps.lattice_cap {
            return Err(RingError::CapExceeded {
                what: "ideal lattice enumeration (lattice size)",
                required: (lattice.len() + queue.len()) as u128,
                cap: caps.lattice_cap as u128,
            });
        }
    }
    // Deterministic order: by cardinality, then by membership flags.
    lattice.sort_by(|x, y| {
        (x.members.count(), &x.members).cmp(&(y.members.count(), &y.members))
    });
    Ok(lattice)
}

/// The complete lattice of two-sided ideals, including `{0}` and `R`.
pub fn enumerate_two_sided_ideals(
    ring: &FiniteRing,
    caps: &Caps,
) -> Result<Vec<Ideal>, RingError> {
    enumerate_lattice(ring, IdealKind::TwoSided, caps)
}

/// The complete lattice of left ideals.
pub fn enumerate_left_ideals(ring: &FiniteRing, caps: &Caps) -> Result<Vec<Ideal>, RingError> {
    enumerate_lattice(ring, IdealKind::Left, caps)
}

/// All maximal proper left ideals, by inclusion-maximality in the lattice.
pub fn enumerate_maximal_left_ideals(
    ring: &FiniteRing,
    caps: &Caps,
) -> Result<Vec<Ideal>, RingError> {
    let lattice = enumerate_left_ideals(ring, caps)?;
    let proper: Vec<&Ideal> = lattice.iter().filter(|i| i.is_proper()).collect();
    let mut maximal: Vec<Ideal> = Vec::new();
    for cand in proper.iter() {
        let dominated = proper.iter().any(|other| {
            other.members != cand.members && cand.members.is_subset_of(&other.members)
        });
        if !dominated {
            maximal.push((*cand).clone());
        }
    }
    Ok(maximal)
}

/// Elementwise primality: a proper two-sided ideal `I` is prime iff for all
/// `a, b` outside `I` some `r` has `arb` outside `I`.
pub fn is_prime_ideal(ring: &FiniteRing, ideal: &Ideal) -> Result<bool, RingError> {
    if ideal.kind != IdealKind::TwoSided {
        return Err(RingError::KindError);
    }
    if !ideal.is_proper() {
        return Ok(false);
    }
    let n = ring.order();
    for a in 0..n {
        if ideal.contains(a) {
            continue;
        }
        'pair: for b in 0..n {
            if ideal.contains(b) {
                continue;
            }
            for r in 0..n {
                if !ideal.contains(ring.mul(ring.mul(a, r), b)) {
                    continue 'pair;
                }
            }
            return Ok(false);
        }
    }
    Ok(true)
}

/// Nilpotency of a two-sided ideal: computes the power chain
/// `I ⊇ I^2 ⊇ ...` until `{0}` or a nonzero fixpoint. Returns the
/// nilpotency index (least `k` with `I^k = 0`) if nilpotent.
pub fn is_nilpotent_ideal(ring: &FiniteRing, ideal: &Ideal) -> Result<Option<usize>, RingError> {
    if ideal.kind != IdealKind::TwoSided {
        return Err(RingError::KindError);
    }
    let zero_only = |s: &Subset| s.count() == 1 && s.contains(ring.zero());
    let mut current = ideal.members.clone();
    let mut power = 1usize;
    if zero_only(&current) {
        return Ok(Some(1));
    }
    loop {
        // Next power: additive closure of pairwise products current * I.
        let mut flags = vec![false; ring.order()];
        let mut stack: Vec<usize> = Vec::new();
        let push = |flags: &mut Vec<bool>, stack: &mut Vec<usize>, x: usize| {
            if !flags[x] {
                flags[x] = true;
                stack.push(x);
            }
        };
        push(&mut flags, &mut stack, ring.zero());
        for x in current.iter() {
            for y in ideal.members.iter() {
                push(&mut flags, &mut stack, ring.mul(x, y));
            }
        }
        let mut members: Vec<usize> = Vec::new();
        while let Some(x) = stack.pop() {
            push(&mut flags, &mut stack, ring.neg(x));
            for &m in members.iter() {
                push(&mut flags, &mut stack, ring.add(x, m));
            }
            push(&mut flags, &mut stack, ring.add(x, x));
            members.push(x);
        }
        let next = Subset::from_flags(flags);
        power += 1;
        if zero_only(&next) {
            return Ok(Some(power));
        }
        if next == current {
            return Ok(None);
        }
        current = next;
    }
}

/// Quotient by a proper two-sided ideal. Returns the quotient ring (on
/// least-index coset representatives) and the projection map from parent
/// indices to quotient indices.
pub fn quotient_ring(
    ring: &FiniteRing,
    ideal: &Ideal,
) -> Result<(FiniteRing, Vec<usize>), RingError> {
    if ideal.kind != IdealKind::TwoSided {
        return Err(RingError::KindError);
    }
    if !ideal.is_proper() {
        return Err(RingError::ImproperIdeal);
    }
    let n = ring.order();
    // Coset representative: least index in x + I.
    let mut rep = vec![usize::MAX; n];
    for x in 0..n {
        let mut least = x;
        for i in ideal.members.iter() {
            let y = ring.add(x, i);
            if y < least {
                least = y;
            }
        }
        rep[x] = least;
    }
    let mut reps: Vec<usize> = rep.clone();
    reps.sort_unstable();
    reps.dedup();
    let m = reps.len();
    let class_of = |x: usize| reps.binary_search(&rep[x]).expect("coset representative");
    let mut projection = vec![0usize; n];
    for x in 0..n {
        projection[x] = class_of(x);
    }
    let mut add = vec![0u32; m * m];
    let mut mul = vec![0u32; m * m];
    for (i, &x) in reps.iter().enumerate() {
        for (j, &y) in reps.iter().enumerate() {
            add[i * m + j] = projection[ring.add(x, y)] as u32;
            mul[i * m + j] = projection[ring.mul(x, y)] as u32;
        }
    }
    let one = projection[ring.one()];
    let gens = ideal
        .generators
        .clone()
        .unwrap_or_else(|| ideal.members.indices());
    let gens_str: Vec<_> = gens.iter().map(|g| format!("{g}")).collect();
    let name = format!("quot({},gens=[{}])", ring.provenance(), gens_str.join(","));
    let quotient = FiniteRing::from_flat(&name, m, add, mul, one)?;
    Ok((quotient, projection))
}

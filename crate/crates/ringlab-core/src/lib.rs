//! Computational finite ring theory over dense operation tables.
//!
//! A [`FiniteRing`] is a validated Cayley-table presentation of a finite
//! associative unital ring: an `n x n` addition table, an `n x n`
//! multiplication table, a distinguished zero at index `0` and a
//! distinguished identity. Every question this crate answers is a bounded
//! quantifier over element indices, so everything is decided exactly by
//! exhaustive scan — no tolerances, no sampling.
//!
//! The crate is organised around the prime radical `P(R)`:
//!
//! - [`ring`]: ring representation, axiom validation, element arithmetic and
//!   the distinguished subsets (center, idempotents, units).
//! - [`ideals`]: generated ideals, ideal-lattice enumeration, primality and
//!   nilpotency tests, quotient rings.
//! - [`radicals`]: `P(R)` by three independent algorithms (strong-nilpotence
//!   fixpoint, nilpotency of `RaR`, intersection of primes), plus `N(R)`,
//!   `N_2(R)`, `J(R)`, cross-validated in a [`radicals::RadicalProfile`].
//! - [`construct`]: every ring construction the suite studies — `Z_n`,
//!   polynomial quotients, direct products, `M_n`/`T_n`/`S_n`/`V_n` matrix
//!   families, corner rings `eRe`, the pullback `{(x, y) : x - y in P(R)}`
//!   and truncated eventually-constant sequence rings — each with its
//!   predicted prime radical where a closed form is known.
//! - [`properties`]: exhaustive checkers for the symmetry classes
//!   (symmetric, P-symmetric, central symmetric, generalized weakly
//!   symmetric, P-semicommutative, 2-primal, weakly reversible, left
//!   quasi-duo, bounded Armendariz and polynomial checks), each returning a
//!   lexicographically least witness on failure.
//! - [`harness`]: a registry of executable theorem checks replayed over a
//!   ring corpus, producing a deterministic [`harness::SuiteReport`].
//!
//! The crate is `no_std` (alloc required); all IO, file formats and the CLI
//! live in the companion `ringlab` crate.

#![no_std]
// Loop variables here are ring element indices used to index several
// tables at once; iterator adapters would obscure that.
#![allow(clippy::needless_range_loop)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod construct;
pub mod error;
pub mod harness;
pub mod ideals;
pub mod properties;
pub mod radicals;
pub mod ring;

pub use error::{Law, RingError};
pub use ring::{Element, FiniteRing, Subset};

/// Resource caps for the exhaustive algorithms.
///
/// All caps are enforced with an explicit [`RingError::CapExceeded`]; nothing
/// is silently truncated or sampled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest ring order any construction may produce.
    pub order_cap: usize,
    /// Largest ring order for which ideal lattices are enumerated.
    pub ideal_enum_cap: usize,
    /// Safety cap on the number of distinct ideals a lattice enumeration may
    /// collect before aborting.
    pub lattice_cap: usize,
    /// Budget for the Armendariz pair scan: `order^(2(d+1))` must stay below.
    pub pair_budget: u128,
    /// Budget for polynomial triple scans: `order^(3(d+1))` must stay below.
    pub triple_budget: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order_cap: 512,
            ideal_enum_cap: 128,
            lattice_cap: 10_000,
            pair_budget: 1_000_000,
            triple_budget: 1_000_000,
        }
    }
}

impl Caps {
    /// Caps with a overridden order cap, keeping the other defaults.
    pub fn with_order_cap(order_cap: usize) -> Self {
        Caps {
            order_cap,
            ..Caps::default()
        }
    }
}

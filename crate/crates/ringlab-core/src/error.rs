//! Error types shared by all ring computations.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// The ring axioms checked at construction time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    AdditiveIdentity,
    AdditiveCommutativity,
    AdditiveAssociativity,
    AdditiveInverse,
    MultiplicativeIdentity,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Law::AdditiveIdentity => "additive identity",
            Law::AdditiveCommutativity => "additive commutativity",
            Law::AdditiveAssociativity => "additive associativity",
            Law::AdditiveInverse => "additive inverse",
            Law::MultiplicativeIdentity => "multiplicative identity",
            Law::MultiplicativeAssociativity => "multiplicative associativity",
            Law::LeftDistributivity => "left distributivity",
            Law::RightDistributivity => "right distributivity",
        };
        f.write_str(name)
    }
}

/// Everything that can go wrong while building rings or running checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingError {
    /// An operation table has the wrong shape or an entry out of range.
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    /// A ring axiom failed; the witness holds the elements at which it broke
    /// (unused slots repeat the last relevant element).
    AxiomViolation { law: Law, witness: [usize; 3] },
    /// An element index is not below the ring order.
    IndexOutOfRange { index: usize, order: usize },
    /// An ideal of the wrong kind was passed (the operation needs two-sided).
    KindError,
    /// A quotient by the whole ring was requested.
    ImproperIdeal,
    /// A membership set failed the closure laws of the requested ideal kind.
    NotAnIdeal { reason: &'static str },
    /// A resource cap was hit; `required` is the size the computation needed.
    CapExceeded {
        what: &'static str,
        required: u128,
        cap: u128,
    },
    /// The modulus of a polynomial quotient ring must be prime.
    NotPrime { n: usize },
    /// The defining polynomial of a quotient ring must be monic of degree >= 1.
    NotMonic,
    /// Corner rings need an idempotent element.
    NotIdempotent { index: usize },
    /// The designated subset is not a unital subring.
    NotASubring { reason: &'static str },
    /// Localization is only defined at multiplicative sets of central units.
    NotCentralUnits {
        index: usize,
        reason: &'static str,
    },
    /// A construction argument was malformed.
    InvalidArgument(String),
    /// Two enabled prime-radical algorithms returned different subsets.
    /// This signals an implementation bug, never a mathematical outcome.
    OracleDisagreement {
        methods: Vec<(&'static str, Vec<usize>)>,
    },
    /// Provably equivalent formulations of a property disagreed (a bug signal).
    EquivalenceBroken {
        property: &'static str,
        details: String,
    },
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::DimensionMismatch {
                what,
                expected,
                got,
            } => write!(f, "dimension mismatch in {what}: expected {expected}, got {got}"),
            RingError::AxiomViolation { law, witness } => write!(
                f,
                "ring axiom violated: {law} at elements ({}, {}, {})",
                witness[0], witness[1], witness[2]
            ),
            RingError::IndexOutOfRange { index, order } => {
                write!(f, "element index {index} out of range for ring of order {order}")
            }
            RingError::KindError => f.write_str("operation requires a two-sided ideal"),
            RingError::ImproperIdeal => f.write_str("quotient by the whole ring is not a ring"),
            RingError::NotAnIdeal { reason } => write!(f, "not an ideal: {reason}"),
            RingError::CapExceeded {
                what,
                required,
                cap,
            } => write!(f, "cap exceeded for {what}: required {required}, cap {cap}"),
            RingError::NotPrime { n } => write!(f, "{n} is not prime"),
            RingError::NotMonic => f.write_str("polynomial must be monic of degree >= 1"),
            RingError::NotIdempotent { index } => {
                write!(f, "element {index} is not idempotent")
            }
            RingError::NotASubring { reason } => write!(f, "not a unital subring: {reason}"),
            RingError::NotCentralUnits { index, reason } => {
                write!(f, "element {index} invalid for localization: {reason}")
            }
            RingError::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            RingError::OracleDisagreement { methods } => {
                write!(f, "prime radical algorithms disagree:")?;
                for (name, indices) in methods {
                    write!(f, " {name}={indices:?}")?;
                }
                Ok(())
            }
            RingError::EquivalenceBroken { property, details } => {
                write!(f, "equivalent forms of {property} disagree: {details}")
            }
        }
    }
}

impl core::error::Error for RingError {}

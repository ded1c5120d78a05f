//! Evaluation of ring expressions into constructed rings, with caching by
//! normalized expression string.

use std::collections::BTreeMap;
use std::sync::Arc;

use ringlab_core::construct::{self, ConstructedRing, Coords};
use ringlab_core::ideals::{self, IdealKind};
use ringlab_core::{Caps, RingError};

use crate::error::CliError;
use crate::expr::Expr;
use crate::ringfile;

/// Evaluates expressions against a fixed cap configuration, caching each
/// normalized expression's ring so repeated subexpressions build once.
pub struct Evaluator {
    caps: Caps,
    cache: BTreeMap<String, Arc<ConstructedRing>>,
}

impl Evaluator {
    pub fn new(caps: Caps) -> Evaluator {
        Evaluator {
            caps,
            cache: BTreeMap::new(),
        }
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn eval(&mut self, expr: &Expr) -> Result<Arc<ConstructedRing>, CliError> {
        let key = expr.to_string();
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit.clone());
        }
        let built = self.build(expr)?;
        let arc = Arc::new(built);
        self.cache.insert(key, arc.clone());
        Ok(arc)
    }

    fn build(&mut self, expr: &Expr) -> Result<ConstructedRing, CliError> {
        let caps = self.caps;
        match expr {
            Expr::Zmod(n) => {
                if *n > caps.order_cap {
                    return Err(RingError::CapExceeded {
                        what: "ring order",
                        required: *n as u128,
                        cap: caps.order_cap as u128,
                    }
                    .into());
                }
                Ok(construct::zmod(*n)?)
            }
            Expr::Gf { p, poly } => Ok(construct::galois_field(*p, poly, &caps)?),
            Expr::Quot { p, poly } => Ok(construct::polynomial_quotient(*p, poly, &caps)?),
            Expr::Matrix { n, inner } => {
                let base = self.eval(inner)?;
                Ok(construct::matrix_ring(&base, *n, &caps)?)
            }
            Expr::Upper { n, inner } => {
                let base = self.eval(inner)?;
                Ok(construct::upper_triangular(&base, *n, &caps)?)
            }
            Expr::ConstDiag { n, inner } => {
                let base = self.eval(inner)?;
                Ok(construct::sn_ring(&base, *n, &caps)?)
            }
            Expr::ConstSuper { n, inner } => {
                let base = self.eval(inner)?;
                Ok(construct::vn_ring(&base, *n, &caps)?)
            }
            Expr::Product(a, b) => {
                let left = self.eval(a)?;
                let right = self.eval(b)?;
                Ok(construct::direct_product(&left, &right, &caps)?)
            }
            Expr::Corner { inner, e } => {
                let base = self.eval(inner)?;
                Ok(construct::corner_ring(&base, *e)?)
            }
            Expr::Pullback(inner) => {
                let base = self.eval(inner)?;
                Ok(construct::pullback_ring(&base, &caps)?)
            }
            Expr::Rab { inner, sub, len } => {
                let base = self.eval(inner)?;
                Ok(construct::rab_truncated(&base, sub, *len, &caps)?)
            }
            Expr::QuotIdeal { inner, gens } => {
                let base = self.eval(inner)?;
                for &g in gens {
                    if g >= base.ring.order() {
                        return Err(RingError::IndexOutOfRange {
                            index: g,
                            order: base.ring.order(),
                        }
                        .into());
                    }
                }
                let ideal = ideals::ideal_generated(&base.ring, gens, IdealKind::TwoSided);
                let (quotient, projection) = ideals::quotient_ring(&base.ring, &ideal)?;
                // Coset representatives: least parent index per class.
                let mut reps = vec![usize::MAX; quotient.order()];
                for (x, &class) in projection.iter().enumerate() {
                    if reps[class] == usize::MAX {
                        reps[class] = x;
                    }
                }
                Ok(ConstructedRing {
                    ring: quotient,
                    predicted_p: None,
                    coords: Coords::Quotient {
                        reps,
                        parent: Box::new(base.coords.clone()),
                    },
                })
            }
            Expr::File(path) => {
                let mut ring = ringfile::read_ring(path.as_ref())?;
                if ring.order() > caps.order_cap {
                    return Err(RingError::CapExceeded {
                        what: "ring order",
                        required: ring.order() as u128,
                        cap: caps.order_cap as u128,
                    }
                    .into());
                }
                ring.set_provenance(&expr.to_string());
                Ok(ConstructedRing::opaque(ring))
            }
        }
    }
}

//! Ring constructions: `Z_n`, polynomial quotients, direct products, the
//! matrix families `M_n` / `T_n` / `S_n` / `V_n`, corner rings `eRe`, the
//! pullback `{(x, y) : x - y in P(R)}` and truncated eventually-constant
//! sequence rings.
//!
//! Each construction returns a [`ConstructedRing`]: the validated ring, a
//! predicted prime radical where a closed form is known (the harness checks
//! predictions against brute force — they are treated as predictions to
//! verify, not axioms), and a [`Coords`] tree that renders element indices
//! as human-readable matrices, residues, pairs or sequences.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::RingError;
use crate::radicals;
use crate::ring::{FiniteRing, Subset};
use crate::Caps;

/// How to decode an element index of a constructed ring for display, and —
/// for matrix families — how to encode a matrix back into an index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coords {
    /// No structure known: render the raw index.
    Plain,
    /// Residues mod `n`.
    Modular { n: usize },
    /// Residue polynomials mod p with `degree` coefficient digits,
    /// little-endian (digit `i` is the coefficient of `x^i`).
    Poly { p: usize, degree: usize },
    /// `n x n` matrices over a base ring. `slots[k]` lists the cells bound
    /// to digit `k` of the index (little-endian base `base_order`); cells in
    /// no slot are zero.
    Matrix {
        n: usize,
        base_order: usize,
        base: Box<Coords>,
        slots: Vec<Vec<(usize, usize)>>,
    },
    /// Pairs `(a, b)` with index `a * right_order + b`.
    Product {
        right_order: usize,
        left: Box<Coords>,
        right: Box<Coords>,
    },
    /// Elements of a corner ring `eRe`: `members[i]` is the parent index.
    Corner {
        members: Vec<usize>,
        parent: Box<Coords>,
    },
    /// Pairs of parent elements admitted by the pullback condition.
    Pullback {
        pairs: Vec<(usize, usize)>,
        parent: Box<Coords>,
    },
    /// Length-`len` sequences over the base followed by a constant tail in
    /// the subring whose sorted base indices are `tail`.
    Seq {
        len: usize,
        base_order: usize,
        base: Box<Coords>,
        tail: Vec<usize>,
    },
    /// Cosets: `reps[i]` is the least parent index in coset `i`.
    Quotient {
        reps: Vec<usize>,
        parent: Box<Coords>,
    },
}

impl Coords {
    /// Human-readable rendering of one element index.
    pub fn render(&self, index: usize) -> String {
        match self {
            Coords::Plain | Coords::Modular { .. } => format!("{index}"),
            Coords::Poly { p, degree } => {
                let digits = radix_digits(index, *p, *degree);
                render_poly(&digits)
            }
            Coords::Matrix { base, .. } => {
                let cells = self.matrix_of(index).expect("matrix coords");
                let rows: Vec<String> = cells
                    .iter()
                    .map(|row| {
                        let entries: Vec<String> =
                            row.iter().map(|&c| base.render(c)).collect();
                        format!("[{}]", entries.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
            Coords::Product {
                right_order,
                left,
                right,
            } => {
                let a = index / right_order;
                let b = index % right_order;
                format!("({}, {})", left.render(a), right.render(b))
            }
            Coords::Corner { members, parent } => parent.render(members[index]),
            Coords::Pullback { pairs, parent } => {
                let (x, y) = pairs[index];
                format!("({}, {})", parent.render(x), parent.render(y))
            }
            Coords::Seq {
                len,
                base_order,
                base,
                tail,
            } => {
                let head_span = pow_usize(*base_order, *len);
                let digits = radix_digits(index % head_span, *base_order, *len);
                let tail_pos = index / head_span;
                let heads: Vec<String> = digits.iter().map(|&d| base.render(d)).collect();
                format!("({}; {})", heads.join(", "), base.render(tail[tail_pos]))
            }
            Coords::Quotient { reps, parent } => format!("[{}]", parent.render(reps[index])),
        }
    }

    /// For matrix families: the full `n x n` matrix of base-ring indices.
    pub fn matrix_of(&self, index: usize) -> Option<Vec<Vec<usize>>> {
        match self {
            Coords::Matrix {
                n,
                base_order,
                slots,
                ..
            } => {
                let digits = radix_digits(index, *base_order, slots.len());
                let mut cells = vec![vec![0usize; *n]; *n];
                for (k, slot) in slots.iter().enumerate() {
                    for &(i, j) in slot {
                        cells[i][j] = digits[k];
                    }
                }
                Some(cells)
            }
            _ => None,
        }
    }

    /// For matrix families: encode a full matrix of base indices back into
    /// an element index. Returns `None` when the matrix does not fit the
    /// family's pattern (unequal tied cells or nonzero outside the slots).
    pub fn index_of_matrix(&self, cells: &[Vec<usize>]) -> Option<usize> {
        match self {
            Coords::Matrix {
                n,
                base_order,
                slots,
                ..
            } => {
                if cells.len() != *n || cells.iter().any(|row| row.len() != *n) {
                    return None;
                }
                let mut covered = vec![vec![false; *n]; *n];
                let mut index = 0usize;
                let mut weight = 1usize;
                for slot in slots {
                    let value = cells[slot[0].0][slot[0].1];
                    if value >= *base_order {
                        return None;
                    }
                    for &(i, j) in slot {
                        if cells[i][j] != value {
                            return None;
                        }
                        covered[i][j] = true;
                    }
                    index += value * weight;
                    weight *= base_order;
                }
                for i in 0..*n {
                    for j in 0..*n {
                        if !covered[i][j] && cells[i][j] != 0 {
                            return None;
                        }
                    }
                }
                Some(index)
            }
            _ => None,
        }
    }
}

/// A construction result: the ring, the closed-form prime radical when one
/// is known, and the coordinate map for decoding elements.
#[derive(Debug, Clone)]
pub struct ConstructedRing {
    pub ring: FiniteRing,
    pub predicted_p: Option<Subset>,
    pub coords: Coords,
}

impl ConstructedRing {
    /// Wraps an externally obtained ring with no structural information.
    pub fn opaque(ring: FiniteRing) -> ConstructedRing {
        ConstructedRing {
            ring,
            predicted_p: None,
            coords: Coords::Plain,
        }
    }
}

fn pow_usize(base: usize, exp: usize) -> usize {
    let mut acc = 1usize;
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

fn radix_digits(mut x: usize, base: usize, len: usize) -> Vec<usize> {
    let mut digits = vec![0usize; len];
    for d in digits.iter_mut() {
        *d = x % base;
        x /= base;
    }
    digits
}

fn checked_order(what: &'static str, base: usize, exp: usize, cap: usize) -> Result<usize, RingError> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc > cap as u128 {
            return Err(RingError::CapExceeded {
                what,
                required: acc,
                cap: cap as u128,
            });
        }
    }
    Ok(acc as usize)
}

/// `Z_n` with modular tables, `n >= 2`.
pub fn zmod(n: usize) -> Result<ConstructedRing, RingError> {
    if n < 2 {
        return Err(RingError::InvalidArgument(format!(
            "Z_n needs n >= 2, got {n}"
        )));
    }
    let mut add = vec![0u32; n * n];
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            add[a * n + b] = ((a + b) % n) as u32;
            mul[a * n + b] = ((a * b) % n) as u32;
        }
    }
    let ring = FiniteRing::from_flat(&format!("Z{n}"), n, add, mul, 1)?;
    Ok(ConstructedRing {
        ring,
        predicted_p: None,
        coords: Coords::Modular { n },
    })
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Renders little-endian coefficient digits as a polynomial in `x`,
/// highest power first, e.g. `[1, 1, 1] -> "x^2+x+1"`.
pub fn render_poly(digits: &[usize]) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (deg, &c) in digits.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (deg, c) {
            (0, _) => format!("{c}"),
            (1, 1) => String::from("x"),
            (1, _) => format!("{c}x"),
            (_, 1) => format!("x^{deg}"),
            (_, _) => format!("{c}x^{deg}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        String::from("0")
    } else {
        terms.join("+")
    }
}

fn poly_normalize(p: usize, f: &[usize]) -> Result<Vec<usize>, RingError> {
    if !is_prime(p) {
        return Err(RingError::NotPrime { n: p });
    }
    let reduced: Vec<usize> = f.iter().map(|&c| c % p).collect();
    if reduced.len() < 2 || *reduced.last().unwrap() != 1 {
        return Err(RingError::NotMonic);
    }
    Ok(reduced)
}

fn poly_mod(p: usize, a: Vec<usize>, f: &[usize]) -> Vec<usize> {
    let k = f.len() - 1;
    let mut reduced = poly_mod_by(p, a, f);
    reduced.resize(k, 0);
    reduced
}

fn poly_mul_mod(p: usize, a: &[usize], b: &[usize], f: &[usize]) -> Vec<usize> {
    let mut prod = vec![0usize; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    poly_mod(p, prod, f)
}

/// `Z_p[x] / (f)` on residue polynomials; `f` is given little-endian and
/// must be monic of degree >= 1 with `p` prime.
pub fn polynomial_quotient(
    p: usize,
    f: &[usize],
    caps: &Caps,
) -> Result<ConstructedRing, RingError> {
    let f = poly_normalize(p, f)?;
    let k = f.len() - 1;
    let order = checked_order("polynomial quotient ring order", p, k, caps.order_cap)?;
    let name = format!("Quot({p},{})", render_poly(&f));
    build_poly_ring(p, &f, order, name)
}

fn build_poly_ring(
    p: usize,
    f: &[usize],
    order: usize,
    name: String,
) -> Result<ConstructedRing, RingError> {
    let k = f.len() - 1;
    let mut add = vec![0u32; order * order];
    let mut mul = vec![0u32; order * order];
    let encode = |digits: &[usize]| -> usize {
        digits
            .iter()
            .rev()
            .fold(0usize, |acc, &d| acc * p + d)
    };
    let elements: Vec<Vec<usize>> = (0..order).map(|x| radix_digits(x, p, k)).collect();
    for (x, dx) in elements.iter().enumerate() {
        for (y, dy) in elements.iter().enumerate() {
            let sum: Vec<usize> = dx.iter().zip(dy.iter()).map(|(&a, &b)| (a + b) % p).collect();
            add[x * order + y] = encode(&sum) as u32;
            mul[x * order + y] = encode(&poly_mul_mod(p, dx, dy, f)) as u32;
        }
    }
    let ring = FiniteRing::from_flat(&name, order, add, mul, 1)?;
    Ok(ConstructedRing {
        ring,
        predicted_p: None,
        coords: Coords::Poly { p, degree: k },
    })
}

/// Brute-force irreducibility over `Z_p`: trial division by every monic
/// polynomial of degree `1 ..= deg(f)/2`.
pub fn poly_is_irreducible(p: usize, f: &[usize]) -> Result<bool, RingError> {
    let f = poly_normalize(p, f)?;
    let k = f.len() - 1;
    if k == 1 {
        return Ok(true);
    }
    for d in 1..=(k / 2) {
        let count = pow_usize(p, d);
        for t in 0..count {
            let mut g = radix_digits(t, p, d);
            g.push(1);
            // Remainder of f mod g: zero remainder means a proper factor.
            let rem = poly_mod_by(p, f.clone(), &g);
            if rem.iter().all(|&c| c == 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn poly_mod_by(p: usize, mut a: Vec<usize>, g: &[usize]) -> Vec<usize> {
    let k = g.len() - 1;
    while a.len() > k {
        let lead = *a.last().unwrap();
        let deg = a.len() - 1;
        if lead != 0 {
            for i in 0..=k {
                let idx = deg - k + i;
                a[idx] = (a[idx] + (p - 1) * lead * g[i]) % p;
            }
        }
        a.pop();
    }
    a
}

/// `GF(p^k) = Z_p[x] / (f)` for an irreducible monic `f`.
pub fn galois_field(p: usize, f: &[usize], caps: &Caps) -> Result<ConstructedRing, RingError> {
    let f = poly_normalize(p, f)?;
    if !poly_is_irreducible(p, &f)? {
        return Err(RingError::InvalidArgument(format!(
            "{} is not irreducible over Z_{p}",
            render_poly(&f)
        )));
    }
    let k = f.len() - 1;
    let order = checked_order("Galois field order", p, k, caps.order_cap)?;
    let name = format!("GF({p},{})", render_poly(&f));
    build_poly_ring(p, &f, order, name)
}

/// Componentwise direct product `A x B` with predicted radical
/// `P(A) x P(B)`.
pub fn direct_product(
    a: &ConstructedRing,
    b: &ConstructedRing,
    caps: &Caps,
) -> Result<ConstructedRing, RingError> {
    let na = a.ring.order();
    let nb = b.ring.order();
    let order128 = (na as u128) * (nb as u128);
    if order128 > caps.order_cap as u128 {
        return Err(RingError::CapExceeded {
            what: "direct product order",
            required: order128,
            cap: caps.order_cap as u128,
        });
    }
    let order = order128 as usize;
    let mut add = vec![0u32; order * order];
    let mut mul = vec![0u32; order * order];
    for xa in 0..na {
        for xb in 0..nb {
            let x = xa * nb + xb;
            for ya in 0..na {
                for yb in 0..nb {
                    let y = ya * nb + yb;
                    add[x * order + y] = (a.ring.add(xa, ya) * nb + b.ring.add(xb, yb)) as u32;
                    mul[x * order + y] = (a.ring.mul(xa, ya) * nb + b.ring.mul(xb, yb)) as u32;
                }
            }
        }
    }
    let right_name = if matches!(b.coords, Coords::Product { .. }) {
        format!("({})", b.ring.provenance())
    } else {
        String::from(b.ring.provenance())
    };
    let name = format!("{} x {}", a.ring.provenance(), right_name);
    let one = a.ring.one() * nb + b.ring.one();
    let ring = FiniteRing::from_flat(&name, order, add, mul, one)?;
    let pa = radicals::prime_radical_fixpoint(&a.ring);
    let pb = radicals::prime_radical_fixpoint(&b.ring);
    let mut flags = vec![false; order];
    for x in 0..order {
        flags[x] = pa.contains(x / nb) && pb.contains(x % nb);
    }
    Ok(ConstructedRing {
        ring,
        predicted_p: Some(Subset::from_flags(flags)),
        coords: Coords::Product {
            right_order: nb,
            left: Box::new(a.coords.clone()),
            right: Box::new(b.coords.clone()),
        },
    })
}

enum RadicalForm {
    /// No closed form known.
    NoPrediction,
    /// Every diagonal entry lies in `P(base)` (free entries unrestricted).
    DiagonalInP,
}

fn matrix_family(
    letter: char,
    base: &ConstructedRing,
    n: usize,
    slots: Vec<Vec<(usize, usize)>>,
    prediction: RadicalForm,
    caps: &Caps,
) -> Result<ConstructedRing, RingError> {
    if n == 0 {
        return Err(RingError::InvalidArgument(String::from(
            "matrix dimension must be >= 1",
        )));
    }
    let q = base.ring.order();
    let order = checked_order("matrix family order", q, slots.len(), caps.order_cap)?;
    let coords = Coords::Matrix {
        n,
        base_order: q,
        base: Box::new(base.coords.clone()),
        slots: slots.clone(),
    };
    // Flat n*n matrices for every element, decoded once.
    let mats: Vec<Vec<usize>> = (0..order)
        .map(|x| {
            let digits = radix_digits(x, q, slots.len());
            let mut cells = vec![0usize; n * n];
            for (k, slot) in slots.iter().enumerate() {
                for &(i, j) in slot {
                    cells[i * n + j] = digits[k];
                }
            }
            cells
        })
        .collect();
    let encode = |cells: &[usize]| -> usize {
        let mut index = 0usize;
        let mut weight = 1usize;
        for slot in slots.iter() {
            let (i, j) = slot[0];
            index += cells[i * n + j] * weight;
            weight *= q;
        }
        index
    };
    let br = &base.ring;
    let mut add = vec![0u32; order * order];
    let mut mul = vec![0u32; order * order];
    let mut prod = vec![0usize; n * n];
    for x in 0..order {
        for y in 0..order {
            let mx = &mats[x];
            let my = &mats[y];
            let mut sum = vec![0usize; n * n];
            for c in 0..n * n {
                sum[c] = br.add(mx[c], my[c]);
            }
            add[x * order + y] = encode(&sum) as u32;
            for i in 0..n {
                for j in 0..n {
                    let mut acc = br.zero();
                    for k in 0..n {
                        acc = br.add(acc, br.mul(mx[i * n + k], my[k * n + j]));
                    }
                    prod[i * n + j] = acc;
                }
            }
            mul[x * order + y] = encode(&prod) as u32;
        }
    }
    let mut identity = vec![0usize; n * n];
    for i in 0..n {
        identity[i * n + i] = br.one();
    }
    let one = encode(&identity);
    let name = format!("{letter}{n}({})", br.provenance());
    let ring = FiniteRing::from_flat(&name, order, add, mul, one)?;
    let predicted_p = match prediction {
        RadicalForm::NoPrediction => None,
        RadicalForm::DiagonalInP => {
            let p_base = radicals::prime_radical_fixpoint(br);
            let mut flags = vec![false; order];
            for (x, m) in mats.iter().enumerate() {
                flags[x] = (0..n).all(|i| p_base.contains(m[i * n + i]));
            }
            Some(Subset::from_flags(flags))
        }
    };
    Ok(ConstructedRing {
        ring,
        predicted_p,
        coords,
    })
}

/// `M_n(R)`: the full matrix ring, row-major free entries.
pub fn matrix_ring(
    base: &ConstructedRing,
    n: usize,
    caps: &Caps,
) -> Result<ConstructedRing, RingError> {
    let mut slots = Vec::new();
    for i in 0..n {
        for j in 0..n {
            slots.push(vec![(i, j)]);
        }
    }
    matrix_family('M', base, n, slots, RadicalForm::NoPrediction, caps)
}

/// `T_n(R)`: upper triangular matrices. Predicted radical: every diagonal
/// entry in `P(R)`, strict upper part free.
pub fn upper_triangular(
    base: &ConstructedRing,
    n: usize,
    caps: &Caps,
) -> Result<ConstructedRing, RingError> {
    let mut slots = Vec::new();
    for i in 0..n {
        for j in i..n {
            slots.push(vec![(i, j)]);
        }
    }
    matrix_family('T', base, n, slots, RadicalForm::DiagonalInP, caps)
}

/// `S_n(R)`: upper triangular with constant diagonal. Predicted radical:
/// diagonal value in `P(R)`.
pub fn sn_ring(
    base: &ConstructedRing,
    n: usize,
    caps: &Caps,
) -> Result<ConstructedRing, RingError> {
    if n == 0 {
        return Err(RingError::InvalidArgument(String::from(
            "matrix dimension must be >= 1",
        )));
    }
    let mut slots = vec![(0..n).map(|i| (i, i)).collect::<Vec<_>>()];
    for i in 0..n {
        for j in i + 1..n {
            slots.push(vec![(i, j)]);
        }
    }
    matrix_family('S', base, n, slots, RadicalForm::DiagonalInP, caps)
}

/// `V_n(R)`: constant superdiagonals (isomorphic to `R[x]/(x^n)`).
/// Predicted radical: constant term in `P(R)`.
pub fn vn_ring(
    base: &ConstructedRing,
    n: usize,
    caps: &Caps,
) -> Result<ConstructedRing, RingError> {
    if n == 0 {
        return Err(RingError::InvalidArgument(String::from(
            "matrix dimension must be >= 1",
        )));
    }
    let slots: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|k| (0..n - k).map(|i| (i, i + k)).collect())
        .collect();
    matrix_family('V', base, n, slots, RadicalForm::DiagonalInP, caps)
}

/// The corner ring `eRe` for an idempotent `e`, with unit `e` and predicted
/// radical `e P(R) e`.
pub fn corner_ring(parent: &ConstructedRing, e: usize) -> Result<ConstructedRing, RingError> {
    let r = &parent.ring;
    if e >= r.order() {
        return Err(RingError::IndexOutOfRange {
            index: e,
            order: r.order(),
        });
    }
    if r.mul(e, e) != e {
        return Err(RingError::NotIdempotent { index: e });
    }
    let mut members: Vec<usize> = (0..r.order())
        .map(|a| r.mul(r.mul(e, a), e))
        .collect();
    members.sort_unstable();
    members.dedup();
    let m = members.len();
    let pos = |x: usize| members.binary_search(&x).expect("corner closure");
    let mut add = vec![0u32; m * m];
    let mut mul = vec![0u32; m * m];
    for (i, &x) in members.iter().enumerate() {
        for (j, &y) in members.iter().enumerate() {
            add[i * m + j] = pos(r.add(x, y)) as u32;
            mul[i * m + j] = pos(r.mul(x, y)) as u32;
        }
    }
    let name = format!("corner({},{e})", r.provenance());
    let ring = FiniteRing::from_flat(&name, m, add, mul, pos(e))?;
    let p_parent = radicals::prime_radical_fixpoint(r);
    let mut flags = vec![false; m];
    for p in p_parent.iter() {
        flags[pos(r.mul(r.mul(e, p), e))] = true;
    }
    Ok(ConstructedRing {
        ring,
        predicted_p: Some(Subset::from_flags(flags)),
        coords: Coords::Corner {
            members,
            parent: Box::new(parent.coords.clone()),
        },
    })
}

/// The pullback `S = {(x, y) in R x R : x - y in P(R)}`, a subring of
/// `R x R` of order `|R| * |P(R)|`, with predicted radical
/// `{(x, y) : x, y in P(R)}`.
pub fn pullback_ring(
    parent: &ConstructedRing,
    caps: &Caps,
) -> Result<ConstructedRing, RingError> {
    let r = &parent.ring;
    let n = r.order();
    let p = radicals::prime_radical_fixpoint(r);
    let order128 = (n as u128) * (p.count() as u128);
    if order128 > caps.order_cap as u128 {
        return Err(RingError::CapExceeded {
            what: "pullback ring order",
            required: order128,
            cap: caps.order_cap as u128,
        });
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut pair_index = vec![usize::MAX; n * n];
    for x in 0..n {
        for y in 0..n {
            if p.contains(r.sub(x, y)) {
                pair_index[x * n + y] = pairs.len();
                pairs.push((x, y));
            }
        }
    }
    let order = pairs.len();
    debug_assert_eq!(order as u128, order128);
    let mut add = vec![0u32; order * order];
    let mut mul = vec![0u32; order * order];
    for (i, &(xa, ya)) in pairs.iter().enumerate() {
        for (j, &(xb, yb)) in pairs.iter().enumerate() {
            add[i * order + j] = pair_index[r.add(xa, xb) * n + r.add(ya, yb)] as u32;
            mul[i * order + j] = pair_index[r.mul(xa, xb) * n + r.mul(ya, yb)] as u32;
        }
    }
    let one = pair_index[r.one() * n + r.one()];
    let name = format!("pullback({})", r.provenance());
    let ring = FiniteRing::from_flat(&name, order, add, mul, one)?;
    let mut flags = vec![false; order];
    for (i, &(x, y)) in pairs.iter().enumerate() {
        flags[i] = p.contains(x) && p.contains(y);
    }
    Ok(ConstructedRing {
        ring,
        predicted_p: Some(Subset::from_flags(flags)),
        coords: Coords::Pullback {
            pairs,
            parent: Box::new(parent.coords.clone()),
        },
    })
}

/// Restriction of a ring to a verified unital subring on `members`.
pub fn subring(
    parent: &FiniteRing,
    members: &[usize],
    name: &str,
) -> Result<FiniteRing, RingError> {
    let mut sorted: Vec<usize> = members.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.is_empty() {
        return Err(RingError::NotASubring {
            reason: "empty member set",
        });
    }
    if *sorted.last().unwrap() >= parent.order() {
        return Err(RingError::IndexOutOfRange {
            index: *sorted.last().unwrap(),
            order: parent.order(),
        });
    }
    let contains = |x: usize| sorted.binary_search(&x).is_ok();
    if !contains(parent.one()) {
        return Err(RingError::NotASubring {
            reason: "missing the identity",
        });
    }
    if !contains(parent.zero()) {
        return Err(RingError::NotASubring {
            reason: "missing zero",
        });
    }
    for &x in sorted.iter() {
        if !contains(parent.neg(x)) {
            return Err(RingError::NotASubring {
                reason: "not closed under negation",
            });
        }
        for &y in sorted.iter() {
            if !contains(parent.add(x, y)) {
                return Err(RingError::NotASubring {
                    reason: "not closed under addition",
                });
            }
            if !contains(parent.mul(x, y)) {
                return Err(RingError::NotASubring {
                    reason: "not closed under multiplication",
                });
            }
        }
    }
    let m = sorted.len();
    let pos = |x: usize| sorted.binary_search(&x).expect("subring closure");
    let mut add = vec![0u32; m * m];
    let mut mul = vec![0u32; m * m];
    for (i, &x) in sorted.iter().enumerate() {
        for (j, &y) in sorted.iter().enumerate() {
            add[i * m + j] = pos(parent.add(x, y)) as u32;
            mul[i * m + j] = pos(parent.mul(x, y)) as u32;
        }
    }
    FiniteRing::from_flat(name, m, add, mul, pos(parent.one()))
}

/// Length-`len` truncation of the eventually-constant sequence ring over
/// `(A, B)`: sequences `(a_1, ..., a_len, b, b, ...)` with `a_i in A` and
/// `b` in the unital subring of `A` on `sub_members`. Componentwise
/// operations; isomorphic to `A^len x B`. Predicted radical: heads in
/// `P(A)`, tail in `P(A) ∩ P(B)`.
pub fn rab_truncated(
    a: &ConstructedRing,
    sub_members: &[usize],
    len: usize,
    caps: &Caps,
) -> Result<ConstructedRing, RingError> {
    if len == 0 {
        return Err(RingError::InvalidArgument(String::from(
            "truncation length must be >= 1",
        )));
    }
    let ar = &a.ring;
    let na = ar.order();
    let mut tail: Vec<usize> = sub_members.to_vec();
    tail.sort_unstable();
    tail.dedup();
    let tail_strs: Vec<String> = tail.iter().map(|m| format!("{m}")).collect();
    let name = format!(
        "RAB({},sub=[{}],L={len})",
        ar.provenance(),
        tail_strs.join(",")
    );
    let b_ring = subring(ar, &tail, &format!("sub({})", ar.provenance()))?;
    let nb = b_ring.order();
    let mut order128: u128 = nb as u128;
    for _ in 0..len {
        order128 = order128.saturating_mul(na as u128);
        if order128 > caps.order_cap as u128 {
            return Err(RingError::CapExceeded {
                what: "sequence ring order",
                required: order128,
                cap: caps.order_cap as u128,
            });
        }
    }
    let order = order128 as usize;
    let head_span = pow_usize(na, len);
    // Index = sum a_i * na^i + tail_pos * na^len.
    let decode = |x: usize| -> (Vec<usize>, usize) {
        (radix_digits(x % head_span, na, len), x / head_span)
    };
    let mut add = vec![0u32; order * order];
    let mut mul = vec![0u32; order * order];
    let tail_pos = |x: usize| tail.binary_search(&x).expect("tail closure");
    for x in 0..order {
        let (hx, tx) = decode(x);
        for y in 0..order {
            let (hy, ty) = decode(y);
            let mut sum = 0usize;
            let mut prod = 0usize;
            let mut weight = 1usize;
            for i in 0..len {
                sum += ar.add(hx[i], hy[i]) * weight;
                prod += ar.mul(hx[i], hy[i]) * weight;
                weight *= na;
            }
            sum += tail_pos(ar.add(tail[tx], tail[ty])) * head_span;
            prod += tail_pos(ar.mul(tail[tx], tail[ty])) * head_span;
            add[x * order + y] = sum as u32;
            mul[x * order + y] = prod as u32;
        }
    }
    let mut one = 0usize;
    let mut weight = 1usize;
    for _ in 0..len {
        one += ar.one() * weight;
        weight *= na;
    }
    one += tail_pos(ar.one()) * head_span;
    let ring = FiniteRing::from_flat(&name, order, add, mul, one)?;
    let pa = radicals::prime_radical_fixpoint(ar);
    let pb = radicals::prime_radical_fixpoint(&b_ring);
    let mut flags = vec![false; order];
    for x in 0..order {
        let (hx, tx) = decode(x);
        flags[x] = hx.iter().all(|&h| pa.contains(h))
            && pa.contains(tail[tx])
            && pb.contains(tx);
    }
    Ok(ConstructedRing {
        ring,
        predicted_p: Some(Subset::from_flags(flags)),
        coords: Coords::Seq {
            len,
            base_order: na,
            base: Box::new(a.coords.clone()),
            tail,
        },
    })
}

/// Localization at a multiplicatively closed set of central units.
///
/// In a finite ring every regular element is already a unit, so this is the
/// only case that exists: the localization is the ring itself under the
/// identity map. The subset is verified (each element central and a unit,
/// and the set closed under multiplication) and the parent is returned
/// unchanged.
pub fn localize_central_units(
    parent: &ConstructedRing,
    s: &[usize],
) -> Result<ConstructedRing, RingError> {
    let r = &parent.ring;
    let mut set: Vec<usize> = s.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() {
        return Err(RingError::InvalidArgument(String::from(
            "localization set must be nonempty",
        )));
    }
    let center = r.center();
    for &x in set.iter() {
        if x >= r.order() {
            return Err(RingError::IndexOutOfRange {
                index: x,
                order: r.order(),
            });
        }
        if !center.contains(x) {
            return Err(RingError::NotCentralUnits {
                index: x,
                reason: "not central",
            });
        }
        if !r.is_unit(x) {
            return Err(RingError::NotCentralUnits {
                index: x,
                reason: "not a unit",
            });
        }
    }
    for &x in set.iter() {
        for &y in set.iter() {
            if set.binary_search(&r.mul(x, y)).is_err() {
                return Err(RingError::NotCentralUnits {
                    index: r.mul(x, y),
                    reason: "set not multiplicatively closed",
                });
            }
        }
    }
    Ok(ConstructedRing {
        ring: parent.ring.clone(),
        predicted_p: Some(radicals::prime_radical_fixpoint(r)),
        coords: parent.coords.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::vec::Vec;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn zmod_basics() {
        assert!(zmod(1).is_err());
        let z6 = zmod(6).unwrap();
        assert_eq!(z6.ring.order(), 6);
        assert_eq!(z6.ring.name(), "Z6");
        assert_eq!(radicals::prime_radical_fixpoint(&z6.ring).indices(), vec![0]);
    }

    #[test]
    fn gf4_is_a_field() {
        let gf4 = galois_field(2, &[1, 1, 1], &caps()).unwrap();
        assert_eq!(gf4.ring.order(), 4);
        assert_eq!(gf4.ring.units().count(), 3);
        assert_eq!(gf4.ring.name(), "GF(2,x^2+x+1)");
        // x * x = x + 1 in GF(4) with f = x^2 + x + 1.
        assert_eq!(gf4.ring.mul(2, 2), 3);
        assert_eq!(gf4.coords.render(3), "x+1");
    }

    #[test]
    fn reducible_polynomials_are_rejected_for_gf() {
        assert!(galois_field(2, &[0, 0, 1], &caps()).is_err());
        assert!(poly_is_irreducible(2, &[1, 1, 1]).unwrap());
        assert!(!poly_is_irreducible(2, &[1, 0, 1]).unwrap());
        assert!(!poly_is_irreducible(2, &[0, 0, 0, 1]).unwrap());
        assert!(poly_is_irreducible(2, &[1, 1]).unwrap());
    }

    #[test]
    fn poly_quotient_errors() {
        assert!(matches!(
            polynomial_quotient(4, &[0, 0, 1], &caps()),
            Err(RingError::NotPrime { n: 4 })
        ));
        assert!(matches!(
            polynomial_quotient(2, &[1], &caps()),
            Err(RingError::NotMonic)
        ));
        assert!(matches!(
            polynomial_quotient(2, &[1, 0, 2], &caps()),
            Err(RingError::NotMonic)
        ));
    }

    #[test]
    fn degree_one_quotient_is_the_prime_field() {
        let q = polynomial_quotient(2, &[1, 1], &caps()).unwrap();
        let z2 = zmod(2).unwrap();
        assert!(q.ring.eq_tables(&z2.ring));
    }

    #[test]
    fn x_cubed_quotient_is_local_of_order_8() {
        let q = polynomial_quotient(2, &[0, 0, 0, 1], &caps()).unwrap();
        assert_eq!(q.ring.order(), 8);
        let p = radicals::prime_radical_fixpoint(&q.ring);
        assert_eq!(p.count(), 4);
        // P = (x): polynomials with zero constant term, i.e. even indices.
        for x in 0..8 {
            assert_eq!(p.contains(x), x % 2 == 0);
        }
    }

    #[test]
    fn vn_over_prime_field_matches_polynomial_quotient_tables() {
        let z2 = zmod(2).unwrap();
        let v3 = vn_ring(&z2, 3, &caps()).unwrap();
        let q = polynomial_quotient(2, &[0, 0, 0, 1], &caps()).unwrap();
        assert!(v3.ring.eq_tables(&q.ring));
        let z3 = zmod(3).unwrap();
        let v2 = vn_ring(&z3, 2, &caps()).unwrap();
        let q2 = polynomial_quotient(3, &[0, 0, 1], &caps()).unwrap();
        assert!(v2.ring.eq_tables(&q2.ring));
    }

    #[test]
    fn product_of_z4_and_z2() {
        let z4 = zmod(4).unwrap();
        let z2 = zmod(2).unwrap();
        let prod = direct_product(&z4, &z2, &caps()).unwrap();
        assert_eq!(prod.ring.order(), 8);
        assert_eq!(prod.ring.name(), "Z4 x Z2");
        let predicted = prod.predicted_p.as_ref().unwrap();
        assert_eq!(
            predicted,
            &radicals::prime_radical_fixpoint(&prod.ring)
        );
        // P = {0, 2} x {0}.
        assert_eq!(predicted.indices(), vec![0, 4]);
        assert_eq!(prod.coords.render(4), "(2, 0)");
    }

    #[test]
    fn product_projections_are_homomorphisms() {
        let z4 = zmod(4).unwrap();
        let z2 = zmod(2).unwrap();
        let prod = direct_product(&z4, &z2, &caps()).unwrap();
        let nb = z2.ring.order();
        for x in 0..prod.ring.order() {
            for y in 0..prod.ring.order() {
                let s = prod.ring.add(x, y);
                assert_eq!(s / nb, z4.ring.add(x / nb, y / nb));
                assert_eq!(s % nb, z2.ring.add(x % nb, y % nb));
                let m = prod.ring.mul(x, y);
                assert_eq!(m / nb, z4.ring.mul(x / nb, y / nb));
                assert_eq!(m % nb, z2.ring.mul(x % nb, y % nb));
            }
        }
    }

    #[test]
    fn family_dimension_one_is_the_base_ring() {
        let z6 = zmod(6).unwrap();
        for built in [
            matrix_ring(&z6, 1, &caps()).unwrap(),
            upper_triangular(&z6, 1, &caps()).unwrap(),
            sn_ring(&z6, 1, &caps()).unwrap(),
            vn_ring(&z6, 1, &caps()).unwrap(),
        ] {
            assert!(built.ring.eq_tables(&z6.ring));
        }
    }

    #[test]
    fn orders_of_matrix_families() {
        let z2 = zmod(2).unwrap();
        assert_eq!(matrix_ring(&z2, 2, &caps()).unwrap().ring.order(), 16);
        assert_eq!(upper_triangular(&z2, 2, &caps()).unwrap().ring.order(), 8);
        assert_eq!(upper_triangular(&z2, 3, &caps()).unwrap().ring.order(), 64);
        assert_eq!(sn_ring(&z2, 2, &caps()).unwrap().ring.order(), 4);
        assert_eq!(sn_ring(&z2, 4, &caps()).unwrap().ring.order(), 128);
        assert_eq!(vn_ring(&z2, 3, &caps()).unwrap().ring.order(), 8);
        let z4 = zmod(4).unwrap();
        assert!(matches!(
            upper_triangular(&z4, 3, &caps()),
            Err(RingError::CapExceeded { .. })
        ));
        assert_eq!(matrix_ring(&z4, 2, &caps()).unwrap().ring.order(), 256);
    }

    #[test]
    fn predicted_radicals_match_brute_force_on_small_families() {
        let z2 = zmod(2).unwrap();
        let z4 = zmod(4).unwrap();
        for built in [
            upper_triangular(&z2, 2, &caps()).unwrap(),
            upper_triangular(&z2, 3, &caps()).unwrap(),
            sn_ring(&z2, 2, &caps()).unwrap(),
            sn_ring(&z2, 4, &caps()).unwrap(),
            vn_ring(&z2, 3, &caps()).unwrap(),
            vn_ring(&z4, 2, &caps()).unwrap(),
        ] {
            let predicted = built.predicted_p.as_ref().unwrap();
            assert_eq!(
                predicted,
                &radicals::prime_radical_fixpoint(&built.ring),
                "prediction mismatch for {}",
                built.ring.name()
            );
        }
        // Sizes from the closed forms.
        assert_eq!(
            upper_triangular(&z2, 2, &caps())
                .unwrap()
                .predicted_p
                .unwrap()
                .count(),
            2
        );
        assert_eq!(
            upper_triangular(&z2, 3, &caps())
                .unwrap()
                .predicted_p
                .unwrap()
                .count(),
            8
        );
        assert_eq!(
            sn_ring(&z2, 4, &caps()).unwrap().predicted_p.unwrap().count(),
            64
        );
        assert_eq!(
            vn_ring(&z2, 3, &caps()).unwrap().predicted_p.unwrap().count(),
            4
        );
        assert_eq!(
            vn_ring(&z4, 2, &caps()).unwrap().predicted_p.unwrap().count(),
            8
        );
    }

    #[test]
    fn matrix_coords_round_trip() {
        let z2 = zmod(2).unwrap();
        let t2 = upper_triangular(&z2, 2, &caps()).unwrap();
        for x in 0..t2.ring.order() {
            let cells = t2.coords.matrix_of(x).unwrap();
            assert_eq!(t2.coords.index_of_matrix(&cells), Some(x));
            assert_eq!(cells[1][0], 0);
        }
        // A lower-triangular pattern does not encode.
        assert_eq!(
            t2.coords.index_of_matrix(&[vec![0, 0], vec![1, 0]]),
            None
        );
        let s2 = sn_ring(&z2, 2, &caps()).unwrap();
        // Unequal diagonal violates the constant-diagonal pattern.
        assert_eq!(
            s2.coords.index_of_matrix(&[vec![1, 0], vec![0, 0]]),
            None
        );
        assert_eq!(s2.coords.render(3), "[[1,1],[0,1]]");
    }

    #[test]
    fn corner_rings_of_z12() {
        let z12 = zmod(12).unwrap();
        let c1 = corner_ring(&z12, 1).unwrap();
        assert!(c1.ring.eq_tables(&z12.ring));
        let c4 = corner_ring(&z12, 4).unwrap();
        assert_eq!(c4.ring.order(), 3);
        let z3 = zmod(3).unwrap();
        assert!(c4.ring.eq_tables(&z3.ring));
        assert_eq!(c4.coords.render(1), "4");
        assert!(matches!(
            corner_ring(&z12, 2),
            Err(RingError::NotIdempotent { index: 2 })
        ));
        let c9 = corner_ring(&z12, 9).unwrap();
        assert_eq!(c9.ring.order(), 4);
        assert_eq!(
            c9.predicted_p.as_ref().unwrap(),
            &radicals::prime_radical_fixpoint(&c9.ring)
        );
    }

    #[test]
    fn corner_of_t2_at_e11_is_z2() {
        let z2 = zmod(2).unwrap();
        let t2 = upper_triangular(&z2, 2, &caps()).unwrap();
        let e11 = t2
            .coords
            .index_of_matrix(&[vec![1, 0], vec![0, 0]])
            .unwrap();
        let corner = corner_ring(&t2, e11).unwrap();
        assert!(corner.ring.eq_tables(&z2.ring));
    }

    #[test]
    fn pullback_of_z4() {
        let z4 = zmod(4).unwrap();
        let s = pullback_ring(&z4, &caps()).unwrap();
        assert_eq!(s.ring.order(), 8);
        let predicted = s.predicted_p.as_ref().unwrap();
        assert_eq!(predicted.count(), 4);
        assert_eq!(predicted, &radicals::prime_radical_fixpoint(&s.ring));
        assert_eq!(s.ring.name(), "pullback(Z4)");
    }

    #[test]
    fn pullback_of_a_field_is_the_diagonal() {
        let z2 = zmod(2).unwrap();
        let s = pullback_ring(&z2, &caps()).unwrap();
        assert!(s.ring.eq_tables(&z2.ring));
        let t2 = upper_triangular(&z2, 2, &caps()).unwrap();
        let st2 = pullback_ring(&t2, &caps()).unwrap();
        assert_eq!(st2.ring.order(), 16);
    }

    #[test]
    fn pullback_projections_realize_a_subdirect_product() {
        let z4 = zmod(4).unwrap();
        let s = pullback_ring(&z4, &caps()).unwrap();
        let pairs = match &s.coords {
            Coords::Pullback { pairs, .. } => pairs.clone(),
            _ => unreachable!(),
        };
        // Both coordinate projections are surjective homomorphisms.
        for want in 0..z4.ring.order() {
            assert!(pairs.iter().any(|&(x, _)| x == want));
            assert!(pairs.iter().any(|&(_, y)| y == want));
        }
        for (i, &(xa, ya)) in pairs.iter().enumerate() {
            for (j, &(xb, yb)) in pairs.iter().enumerate() {
                let (xs, ys) = pairs[s.ring.add(i, j)];
                assert_eq!(xs, z4.ring.add(xa, xb));
                assert_eq!(ys, z4.ring.add(ya, yb));
            }
        }
        // Kernels of the two projections intersect trivially.
        for (i, &(x, y)) in pairs.iter().enumerate() {
            if x == 0 && y == 0 {
                assert_eq!(i, s.ring.zero());
            }
        }
    }

    #[test]
    fn rab_rejects_non_subrings() {
        let z4 = zmod(4).unwrap();
        assert!(matches!(
            rab_truncated(&z4, &[0, 2], 1, &caps()),
            Err(RingError::NotASubring { reason: "missing the identity" })
        ));
    }

    #[test]
    fn rab_with_full_subring_is_a_power() {
        let z4 = zmod(4).unwrap();
        let r = rab_truncated(&z4, &[0, 1, 2, 3], 1, &caps()).unwrap();
        assert_eq!(r.ring.order(), 16);
        // Isomorphic to Z4 x Z4 via digit swap.
        let prod = direct_product(&z4, &z4, &caps()).unwrap();
        let swap = |x: usize| (x % 4) * 4 + x / 4;
        for x in 0..16 {
            for y in 0..16 {
                assert_eq!(swap(r.ring.add(x, y)), prod.ring.add(swap(x), swap(y)));
                assert_eq!(swap(r.ring.mul(x, y)), prod.ring.mul(swap(x), swap(y)));
            }
        }
        assert_eq!(
            r.predicted_p.as_ref().unwrap(),
            &radicals::prime_radical_fixpoint(&r.ring)
        );
    }

    #[test]
    fn rab_over_t2_with_constant_diagonal_subring() {
        let z2 = zmod(2).unwrap();
        let t2 = upper_triangular(&z2, 2, &caps()).unwrap();
        // Constant-diagonal elements of T2: indices 0, 2, 5, 7.
        let sub: Vec<usize> = (0..8)
            .filter(|&x| {
                let m = t2.coords.matrix_of(x).unwrap();
                m[0][0] == m[1][1]
            })
            .collect();
        assert_eq!(sub, vec![0, 2, 5, 7]);
        let r = rab_truncated(&t2, &sub, 1, &caps()).unwrap();
        assert_eq!(r.ring.order(), 32);
        assert_eq!(
            r.predicted_p.as_ref().unwrap(),
            &radicals::prime_radical_fixpoint(&r.ring)
        );
        assert_eq!(r.ring.name(), "RAB(T2(Z2),sub=[0,2,5,7],L=1)");
    }

    #[test]
    fn localization_at_central_units_is_the_identity() {
        let z12 = zmod(12).unwrap();
        let s = localize_central_units(&z12, &[1, 5, 7, 11]).unwrap();
        assert!(s.ring.eq_tables(&z12.ring));
        assert!(matches!(
            localize_central_units(&z12, &[1, 2]),
            Err(RingError::NotCentralUnits { index: 2, .. })
        ));
        assert!(matches!(
            localize_central_units(&z12, &[5]),
            Err(RingError::NotCentralUnits { .. })
        ));
        let z2 = zmod(2).unwrap();
        let m2 = matrix_ring(&z2, 2, &caps()).unwrap();
        // The identity alone is central and closed.
        let loc = localize_central_units(&m2, &[m2.ring.one()]).unwrap();
        assert!(loc.ring.eq_tables(&m2.ring));
    }

    #[test]
    fn s4_paper_matrices_encode_as_expected() {
        let z2 = zmod(2).unwrap();
        let s4 = sn_ring(&z2, 4, &caps()).unwrap();
        let mut a_cells = vec![vec![0usize; 4]; 4];
        a_cells[1][2] = 1;
        let mut b_cells = vec![vec![0usize; 4]; 4];
        b_cells[0][1] = 1;
        let a = s4.coords.index_of_matrix(&a_cells).unwrap();
        let b = s4.coords.index_of_matrix(&b_cells).unwrap();
        assert_eq!(a, 16);
        assert_eq!(b, 2);
        assert_eq!(s4.ring.mul(a, b), 0);
        assert_ne!(s4.ring.mul(b, a), 0);
    }

    #[test]
    fn center_of_s4_z2() {
        let z2 = zmod(2).unwrap();
        let s4 = sn_ring(&z2, 4, &caps()).unwrap();
        // Scalars plus the top-right corner cell: {0, I, e14, I + e14}.
        assert_eq!(s4.ring.center().indices(), vec![0, 1, 8, 9]);
    }

    #[test]
    fn renders_are_stable() {
        let z2 = zmod(2).unwrap();
        let v3 = vn_ring(&z2, 3, &caps()).unwrap();
        assert_eq!(v3.coords.render(1), "[[1,0,0],[0,1,0],[0,0,1]]");
        assert_eq!(render_poly(&[0, 0, 0, 1]), "x^3");
        assert_eq!(render_poly(&[1, 1]), "x+1");
        assert_eq!(render_poly(&[2, 0, 1]), "x^2+2");
        assert_eq!(render_poly(&[0]), "0");
    }
}

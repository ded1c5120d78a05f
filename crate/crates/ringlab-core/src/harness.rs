//! A registry of executable theorem checks replayed over a ring corpus.
//!
//! Each check carries an `anchor` stating the claim it verifies, runs the
//! claim as an implication on every applicable ring, and records one
//! outcome per ring: `pass`, `vacuous` (hypothesis false), `fail` (with a
//! replayable witness) or `skipped` (a resource cap). A failing check is a
//! finding, not an abort: the suite's purpose includes catching
//! implementation bugs and formula discrepancies.
//!
//! Outcomes are assembled deterministically (registry order, corpus order),
//! so suite reports are byte-identical across runs and across however the
//! caller schedules the per-check work.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::construct::{self, ConstructedRing};
use crate::error::RingError;
use crate::ideals::{self, Ideal, IdealKind};
use crate::properties::{self, Permutation};
use crate::radicals::{self, RadicalProfile};
use crate::Caps;

/// One corpus member: the expression it replays from and the built ring.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub expr: String,
    pub built: ConstructedRing,
}

/// The rings a suite run is quantified over.
#[derive(Debug, Clone)]
pub struct RingCorpus {
    pub entries: Vec<CorpusEntry>,
}

impl RingCorpus {
    pub fn from_built(items: Vec<ConstructedRing>) -> RingCorpus {
        RingCorpus {
            entries: items
                .into_iter()
                .map(|built| CorpusEntry {
                    expr: built.ring.provenance().to_string(),
                    built,
                })
                .collect(),
        }
    }

    /// The fifteen-ring default corpus.
    pub fn default_corpus(caps: &Caps) -> Result<RingCorpus, RingError> {
        let z2 = construct::zmod(2)?;
        let z4 = construct::zmod(4)?;
        let built = vec![
            z2.clone(),
            z4.clone(),
            construct::zmod(6)?,
            construct::zmod(12)?,
            construct::galois_field(2, &[1, 1, 1], caps)?,
            construct::polynomial_quotient(2, &[0, 0, 0, 1], caps)?,
            construct::upper_triangular(&z2, 2, caps)?,
            construct::upper_triangular(&z2, 3, caps)?,
            construct::sn_ring(&z2, 2, caps)?,
            construct::sn_ring(&z2, 4, caps)?,
            construct::vn_ring(&z4, 2, caps)?,
            construct::vn_ring(&z2, 3, caps)?,
            construct::matrix_ring(&z2, 2, caps)?,
            construct::direct_product(&z4, &z2, caps)?,
            construct::pullback_ring(&z4, caps)?,
        ];
        Ok(RingCorpus::from_built(built))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    /// The claim's hypothesis does not hold on this ring.
    Vacuous,
    Fail,
    /// A resource cap prevented the instance from running.
    Skipped,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Vacuous => "vacuous",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

/// Outcome of one check on one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub ring: String,
    pub status: CheckStatus,
    pub witness: Option<Vec<usize>>,
    pub detail: Option<String>,
}

impl CheckOutcome {
    fn pass(ring: &str) -> CheckOutcome {
        CheckOutcome {
            ring: ring.to_string(),
            status: CheckStatus::Pass,
            witness: None,
            detail: None,
        }
    }

    fn pass_with(ring: &str, detail: String) -> CheckOutcome {
        CheckOutcome {
            ring: ring.to_string(),
            status: CheckStatus::Pass,
            witness: None,
            detail: Some(detail),
        }
    }

    fn vacuous(ring: &str, detail: &str) -> CheckOutcome {
        CheckOutcome {
            ring: ring.to_string(),
            status: CheckStatus::Vacuous,
            witness: None,
            detail: Some(detail.to_string()),
        }
    }

    fn fail(ring: &str, witness: Option<Vec<usize>>, detail: String) -> CheckOutcome {
        CheckOutcome {
            ring: ring.to_string(),
            status: CheckStatus::Fail,
            witness,
            detail: Some(detail),
        }
    }

    fn skipped(ring: &str, detail: String) -> CheckOutcome {
        CheckOutcome {
            ring: ring.to_string(),
            status: CheckStatus::Skipped,
            witness: None,
            detail: Some(detail),
        }
    }
}

/// A registered theorem check.
#[derive(Clone, Copy)]
pub struct CheckDef {
    pub id: &'static str,
    /// The mathematical claim the check replays, stated self-contained.
    pub anchor: &'static str,
    /// Which rings the check quantifies over.
    pub scope: &'static str,
    pub run: fn(&RingCorpus, &Caps) -> Vec<CheckOutcome>,
}

/// All registered checks, sorted by id.
pub fn registry() -> Vec<CheckDef> {
    vec![
        CheckDef {
            id: "armendariz_polynomials",
            anchor: "If R is Armendariz and P-symmetric, then f g h = 0 in R[x] forces every \
                     coefficient of g f h into P(R); conversely the polynomial form implies \
                     P-symmetry of R (degree-bounded instances).",
            scope: "corpus rings within the polynomial scan budgets, degree 1",
            run: check_armendariz_polynomials,
        },
        CheckDef {
            id: "corner",
            anchor: "If R is P-symmetric and e is idempotent, then eRe is P-symmetric and \
                     P(eRe) = e P(R) e.",
            scope: "every idempotent of every P-symmetric corpus ring",
            run: check_corner,
        },
        CheckDef {
            id: "counterexamples",
            anchor: "S4 over Z2 is P-symmetric but neither symmetric nor central symmetric \
                     (witness pair A = e23, B = e12); M2 over Z2 is not P-symmetric (witness \
                     triple A = e21, B = e12, C = e11 + e12 has ABC = 0 and BAC not nilpotent).",
            scope: "fixed instances S4(Z2) and M2(Z2)",
            run: check_counterexamples,
        },
        CheckDef {
            id: "implication_chain",
            anchor: "symmetric implies P-symmetric; central symmetric implies P-symmetric; \
                     P-symmetric implies generalized weakly symmetric, P-semicommutative, \
                     weakly reversible, and N2(R) contained in P(R).",
            scope: "all corpus rings",
            run: check_implication_chain,
        },
        CheckDef {
            id: "matrix_families",
            anchor: "R is P-symmetric iff T_n(R) iff S_n(R) iff V_n(R) is P-symmetric; \
                     P(T_n(R)) is the upper triangular matrices with all diagonal entries in \
                     P(R), P(S_n(R)) those with constant diagonal in P(R), P(V_n(R)) those \
                     with constant term in P(R).",
            scope: "bases Z2 and Z4, families T/S/V, n in 1..=4, within the order cap",
            run: check_matrix_families,
        },
        CheckDef {
            id: "n2_in_p",
            anchor: "If R is P-symmetric, then N2(R) = {a : a^2 = 0} is contained in P(R); \
                     in particular R is P-semicommutative.",
            scope: "P-symmetric corpus rings",
            run: check_n2_in_p,
        },
        CheckDef {
            id: "permuted_equivalences",
            anchor: "For a 2-primal ring, these are equivalent: abc = 0 implies bac in P(R); \
                     abc = 0 implies acb in P(R); abc = 0 implies cba in P(R).",
            scope: "2-primal corpus rings",
            run: check_permuted_equivalences,
        },
        CheckDef {
            id: "pullback",
            anchor: "R is P-symmetric iff S = {(x, y) in R x R : x - y in P(R)} is \
                     P-symmetric.",
            scope: "corpus rings whose pullback fits the order cap",
            run: check_pullback,
        },
        CheckDef {
            id: "quasiduo_primes_maximal",
            anchor: "A left quasi-duo ring in which every prime ideal is maximal is \
                     P-symmetric.",
            scope: "corpus rings within the ideal enumeration cap",
            run: check_quasiduo_primes_maximal,
        },
        CheckDef {
            id: "quotient_lift",
            anchor: "If R/P(R) is P-symmetric, then R is P-symmetric.",
            scope: "all corpus rings",
            run: check_quotient_lift,
        },
        CheckDef {
            id: "rab",
            anchor: "For a unital subring B of A, the eventually-constant sequence ring over \
                     (A, B) is P-symmetric iff A and B are, and its prime radical is the \
                     sequences with heads in P(A) and tail in P(A) intersect P(B) \
                     (truncated instances).",
            scope: "fixed pairs (Z4, Z4, L=2), (T2(Z2), constant-diagonal subring, L=1), \
                    (M2(Z2), M2(Z2), L=1)",
            run: check_rab,
        },
        CheckDef {
            id: "radical_oracles",
            anchor: "P(R) = strongly nilpotent elements = {a : the ideal generated by a is \
                     nilpotent} = intersection of the prime ideals; in a finite ring \
                     P(R) = J(R), P(R) is contained in N(R), and P(R) is a nilpotent \
                     two-sided ideal.",
            scope: "all corpus rings",
            run: check_radical_oracles,
        },
        CheckDef {
            id: "two_primal_equiv",
            anchor: "These are equivalent: N(R) = P(R); ab in P(R) implies ba in P(R); \
                     R/P(R) is reduced.",
            scope: "all corpus rings",
            run: check_two_primal_equiv,
        },
    ]
}

/// One check's results for the report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub id: String,
    pub anchor: String,
    pub outcomes: Vec<CheckOutcome>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub corpus: Vec<String>,
    pub checks: Vec<CheckReport>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn failures(&self) -> usize {
        self.summary.fail
    }
}

/// The registry filtered to the requested ids (all when `filter` is none).
pub fn selected_checks(filter: Option<&[&str]>) -> Vec<CheckDef> {
    registry()
        .into_iter()
        .filter(|def| filter.is_none_or(|ids| ids.contains(&def.id)))
        .collect()
}

/// Deterministic assembly of per-check outcomes into a report.
pub fn assemble_report(
    corpus: &RingCorpus,
    results: Vec<(CheckDef, Vec<CheckOutcome>)>,
) -> SuiteReport {
    let mut summary = Summary::default();
    let mut checks = Vec::with_capacity(results.len());
    for (def, outcomes) in results {
        for outcome in outcomes.iter() {
            match outcome.status {
                CheckStatus::Pass | CheckStatus::Vacuous => summary.pass += 1,
                CheckStatus::Fail => summary.fail += 1,
                CheckStatus::Skipped => summary.skipped += 1,
            }
        }
        checks.push(CheckReport {
            id: def.id.to_string(),
            anchor: def.anchor.to_string(),
            outcomes,
        });
    }
    SuiteReport {
        corpus: corpus.entries.iter().map(|e| e.expr.clone()).collect(),
        checks,
        summary,
    }
}

/// Runs the selected checks sequentially and assembles the report.
pub fn run_suite(corpus: &RingCorpus, caps: &Caps, filter: Option<&[&str]>) -> SuiteReport {
    let results: Vec<(CheckDef, Vec<CheckOutcome>)> = selected_checks(filter)
        .into_iter()
        .map(|def| {
            let outcomes = (def.run)(corpus, caps);
            (def, outcomes)
        })
        .collect();
    assemble_report(corpus, results)
}

fn profile_of(
    entry: &CorpusEntry,
    caps: &Caps,
) -> Result<RadicalProfile, CheckOutcome> {
    radicals::radical_profile(&entry.built.ring, caps)
        .map_err(|e| CheckOutcome::fail(&entry.expr, None, format!("radical profile: {e}")))
}

fn check_radical_oracles(corpus: &RingCorpus, caps: &Caps) -> Vec<CheckOutcome> {
    corpus
        .entries
        .iter()
        .map(|entry| {
            let ring = &entry.built.ring;
            let profile = match profile_of(entry, caps) {
                Ok(p) => p,
                Err(outcome) => return outcome,
            };
            if !profile.methods_agreed {
                return CheckOutcome::fail(&entry.expr, None, "methods disagree".to_string());
            }
            if profile.p != profile.j {
                return CheckOutcome::fail(
                    &entry.expr,
                    None,
                    format!("P = {} but J = {}", profile.p.render(), profile.j.render()),
                );
            }
            if !profile.p.is_subset_of(&profile.n) {
                return CheckOutcome::fail(&entry.expr, None, "P not contained in N".to_string());
            }
            if !profile.n2.is_subset_of(&profile.n) {
                return CheckOutcome::fail(&entry.expr, None, "N2 not contained in N".to_string());
            }
            let ideal = match Ideal::from_subset(ring, profile.p.clone(), IdealKind::TwoSided) {
                Ok(i) => i,
                Err(e) => {
                    return CheckOutcome::fail(
                        &entry.expr,
                        None,
                        format!("P is not a two-sided ideal: {e}"),
                    )
                }
            };
            match ideals::is_nilpotent_ideal(ring, &ideal) {
                Ok(Some(index)) => CheckOutcome::pass_with(
                    &entry.expr,
                    format!("|P|={}, nilpotency index {index}", profile.p.count()),
                ),
                Ok(None) => {
                    CheckOutcome::fail(&entry.expr, None, "P is not nilpotent".to_string())
                }
                Err(e) => CheckOutcome::fail(&entry.expr, None, format!("{e}")),
            }
        })
        .collect()
}

fn check_two_primal_equiv(corpus: &RingCorpus, caps: &Caps) -> Vec<CheckOutcome> {
    corpus
        .entries
        .iter()
        .map(|entry| {
            let profile = match profile_of(entry, caps) {
                Ok(p) => p,
                Err(outcome) => return outcome,
            };
            match properties::is_2_primal(&entry.built.ring, &profile) {
                Ok(report) => CheckOutcome::pass_with(
                    &entry.expr,
                    format!("two_primal={}", report.verdict),
                ),
                Err(e) => CheckOutcome::fail(&entry.expr, None, format!("{e}")),
            }
        })
        .collect()
}

fn check_permuted_equivalences(corpus: &RingCorpus, caps: &Caps) -> Vec<CheckOutcome> {
    corpus
        .entries
        .iter()
        .map(|entry| {
            let ring = &entry.built.ring;
            let profile = match profile_of(entry, caps) {
                Ok(p) => p,
                Err(outcome) => return outcome,
            };
            let two_primal = match properties::is_2_primal(ring, &profile) {
                Ok(report) => report.verdict,
                Err(e) => return CheckOutcome::fail(&entry.expr, None, format!("{e}")),
            };
            if !two_primal {
                return CheckOutcome::vacuous(&entry.expr, "not 2-primal");
            }
            let bac = properties::is_p_symmetric_permuted(ring, &profile.p, Permutation::Bac);
            let acb = properties::is_p_symmetric_permuted(ring, &profile.p, Permutation::Acb);
            let cba = properties::is_p_symmetric_permuted(ring, &profile.p, Permutation::Cba);
            if bac.verdict == acb.verdict && bac.verdict == cba.verdict {
                CheckOutcome::pass_with(&entry.expr, format!("common verdict {}", bac.verdict))
            } else {
                let witness = [&bac, &acb, &cba]
                    .iter()
                    .find_map(|r| r.witness.clone());
                CheckOutcome::fail(
                    &entry.expr,
                    witness,
                    format!(
                        "bac={} acb={} cba={}",
                        bac.verdict, acb.verdict, cba.verdict
                    ),
                )
            }
        })
        .collect()
}

fn check_n2_in_p(corpus: &RingCorpus, caps: &Caps) -> Vec<CheckOutcome> {
    corpus
        .entries
        .iter()
        .map(|entry| {
            let ring = &entry.built.ring;
            let profile = match profile_of(entry, caps) {
                Ok(p) => p,
                Err(outcome) => return outcome,
            };
            if !properties::is_p_symmetric(ring, &profile.p).verdict {
                return CheckOutcome::vacuous(&entry.expr, "not P-symmetric");
            }
            if !profile.n2.is_subset_of(&profile.p) {
                let stray = profile
                    .n2
                    .iter()
                    .find(|&a| !profile.p.contains(a))
                    .expect("difference witness");
                return CheckOutcome::fail(
                    &entry.expr,
                    Some(vec![stray]),
                    "square-zero element outside P".to_string(),
                );
            }
            let semi = properties::is_p_semicommutative(ring, &profile.p);
            if semi.verdict {
                CheckOutcome::pass(&entry.expr)
            } else {
                CheckOutcome::fail(
                    &entry.expr,
                    semi.witness,
                    "not P-semicommutative".to_string(),
                )
            }
        })
        .collect()
}

fn check_implication_chain(corpus: &RingCorpus, caps: &Caps) -> Vec<CheckOutcome> {
    corpus
        .entries
        .iter()
        .map(|entry| {
            let ring = &entry.built.ring;
            let profile = match profile_of(entry, caps) {
                Ok(p) => p,
                Err(outcome) => return outcome,
            };
            let sym = properties::is_symmetric(ring);
            let psym = properties::is_p_symmetric(ring, &profile.p);
            let central = properties::is_central_symmetric(ring);
            let gws = properties::is_generalized_weakly_symmetric(ring);
            let semi = properties::is_p_semicommutative(ring, &profile.p);
            let weak = properties::is_weakly_reversible(ring);
            let n2_in_p = profile.n2.is_subset_of(&profile.p);
            let n2_witness = || {
                profile
                    .n2
                    .iter()
                    .find(|&a| !profile.p.contains(a))
                    .map(|a| vec![a])
            };
            let implications: [(&str, bool, bool, Option<Vec<usize>>); 6] = [
                ("symmetric => P-symmetric", sym.verdict, psym.verdict, psym.witness.clone()),
                (
                    "central symmetric => P-symmetric",
                    central.verdict,
                    psym.verdict,
                    psym.witness.clone(),
                ),
                (
                    "P-symmetric => generalized weakly symmetric",
                    psym.verdict,
                    gws.verdict,
                    gws.witness.clone(),
                ),
                (
                    "P-symmetric => P-semicommutative",
                    psym.verdict,
                    semi.verdict,
                    semi.witness.clone(),
                ),
                (
                    "P-symmetric => weakly reversible",
                    psym.verdict,
                    weak.verdict,
                    weak.witness.clone(),
                ),
                ("P-symmetric => N2 in P", psym.verdict, n2_in_p, n2_witness()),
            ];
            for (name, ante, cons, witness) in implications.iter() {
                if *ante && !*cons {
                    return CheckOutcome::fail(
                        &entry.expr,
                        witness.clone(),
                        format!("violated: {name}"),
                    );
                }
            }
            if implications.iter().any(|(_, ante, _, _)| *ante) {
                CheckOutcome::pass_with(
                    &entry.expr,
                    format!(
                        "symmetric={} p_symmetric={} central={}",
                        sym.verdict, psym.verdict, central.verdict
                    ),
                )
            } else {
                CheckOutcome::vacuous(&entry.expr, "no antecedent property holds")
            }
        })
        .collect()
}

fn check_quasiduo_primes_maximal(corpus: &RingCorpus, caps: &Caps) -> Vec<CheckOutcome> {
    corpus
        .entries
        .iter()
        .map(|entry| {
            let ring = &entry.built.ring;
            let quasi = match properties::is_left_quasi_duo(ring, caps) {
                Ok(r) => r,
                Err(e) => return CheckOutcome::skipped(&entry.expr, format!("{e}")),
            };
            let primes_max = match properties::all_primes_maximal(ring, caps) {
                Ok(r) => r,
                Err(e) => return CheckOutcome::skipped(&entry.expr, format!("{e}")),
            };
            if !(quasi.verdict && primes_max.verdict) {
                return CheckOutcome::vacuous(
                    &entry.expr,
                    if quasi.verdict {
                        "some prime ideal is not maximal"
                    } else {
                        "not left quasi-duo"
                    },
                );
            }
            let profile = match profile_of(entry, caps) {
                Ok(p) => p,
                Err(outcome) => return outcome,
            };
            let psym = properties::is_p_symmetric(ring, &profile.p);
            if psym.verdict {
                CheckOutcome::pass(&entry.expr)
            } else {
                CheckOutcome::fail(
                    &entry.expr,
                    psym.witness,
                    "hypothesis holds but the ring is not P-symmetric".to_string(),
                )
            }
        })
        .collect()
}

fn check_corner(corpus: &RingCorpus, caps: &Caps) -> Vec<CheckOutcome> {
    corpus
        .entries
        .iter()
        .map(|entry| {
            let ring = &entry.built.ring;
            let profile = match profile_of(entry, caps) {
                Ok(p) => p,
                Err(outcome) => return outcome,
            };
            if !properties::is_p_symmetric(ring, &profile.p).verdict {
                return CheckOutcome::vacuous(&entry.expr, "not P-symmetric");
            }
            let idempotents = ring.idempotents();
            for e in idempotents.iter() {
                let corner = match construct::corner_ring(&entry.built, e) {
                    Ok(c) => c,
                    Err(err) => {
                        return CheckOutcome::fail(
                            &entry.expr,
                            Some(vec![e]),
                            format!("corner construction failed: {err}"),
                        )
                    }
                };
                let p_corner = radicals::prime_radical_fixpoint(&corner.ring);
                if corner.predicted_p.as_ref() != Some(&p_corner) {
                    return CheckOutcome::fail(
                        &entry.expr,
                        Some(vec![e]),
                        "P(eRe) differs from e P(R) e".to_string(),
                    );
                }
                let psym = properties::is_p_symmetric(&corner.ring, &p_corner);
                if !psym.verdict {
                    return CheckOutcome::fail(
                        &entry.expr,
                        Some(vec![e]),
                        "corner ring is not P-symmetric".to_string(),
                    );
                }
            }
            CheckOutcome::pass_with(
                &entry.expr,
                format!("{} idempotents", idempotents.count()),
            )
        })
        .collect()
}

fn check_quotient_lift(corpus: &RingCorpus, caps: &Caps) -> Vec<CheckOutcome> {
    corpus
        .entries
        .iter()
        .map(|entry| {
            let ring = &entry.built.ring;
            let profile = match profile_of(entry, caps) {
                Ok(p) => p,
                Err(outcome) => return outcome,
            };
            let ideal = match Ideal::from_subset(ring, profile.p.clone(), IdealKind::TwoSided) {
                Ok(i) => i,
                Err(e) => return CheckOutcome::fail(&entry.expr, None, format!("{e}")),
            };
            let (quotient, _) = match ideals::quotient_ring(ring, &ideal) {
                Ok(q) => q,
                Err(e) => return CheckOutcome::fail(&entry.expr, None, format!("{e}")),
            };
            let p_q = radicals::prime_radical_fixpoint(&quotient);
            if !properties::is_p_symmetric(&quotient, &p_q).verdict {
                return CheckOutcome::vacuous(&entry.expr, "R/P(R) is not P-symmetric");
            }
            let psym = properties::is_p_symmetric(ring, &profile.p);
            if psym.verdict {
                CheckOutcome::pass(&entry.expr)
            } else {
                CheckOutcome::fail(
                    &entry.expr,
                    psym.witness,
                    "R/P(R) P-symmetric but R is not".to_string(),
                )
            }
        })
        .collect()
}

fn check_pullback(corpus: &RingCorpus, caps: &Caps) -> Vec<CheckOutcome> {
    corpus
        .entries
        .iter()
        .map(|entry| {
            let ring = &entry.built.ring;
            let pullback = match construct::pullback_ring(&entry.built, caps) {
                Ok(p) => p,
                Err(RingError::CapExceeded { required, cap, .. }) => {
                    return CheckOutcome::skipped(
                        &entry.expr,
                        format!("pullback order {required} exceeds cap {cap}"),
                    )
                }
                Err(e) => return CheckOutcome::fail(&entry.expr, None, format!("{e}")),
            };
            let p_r = radicals::prime_radical_fixpoint(ring);
            let p_s = radicals::prime_radical_fixpoint(&pullback.ring);
            if pullback.predicted_p.as_ref() != Some(&p_s) {
                return CheckOutcome::fail(
                    &entry.expr,
                    None,
                    "pullback radical differs from P x P".to_string(),
                );
            }
            let lhs = properties::is_p_symmetric(ring, &p_r).verdict;
            let rhs = properties::is_p_symmetric(&pullback.ring, &p_s).verdict;
            if lhs == rhs {
                CheckOutcome::pass_with(&entry.expr, format!("both sides {lhs}"))
            } else {
                CheckOutcome::fail(
                    &entry.expr,
                    None,
                    format!("R: {lhs}, pullback: {rhs}"),
                )
            }
        })
        .collect()
}

fn check_matrix_families(_corpus: &RingCorpus, caps: &Caps) -> Vec<CheckOutcome> {
    let mut outcomes = Vec::new();
    let bases = [construct::zmod(2), construct::zmod(4)];
    for base in bases.iter() {
        let base = match base {
            Ok(b) => b,
            Err(e) => {
                outcomes.push(CheckOutcome::fail("base", None, format!("{e}")));
                continue;
            }
        };
        let p_base = radicals::prime_radical_fixpoint(&base.ring);
        let base_psym = properties::is_p_symmetric(&base.ring, &p_base).verdict;
        type Builder = fn(&ConstructedRing, usize, &Caps) -> Result<ConstructedRing, RingError>;
        let families: [(char, Builder); 3] = [
            ('T', construct::upper_triangular),
            ('S', construct::sn_ring),
            ('V', construct::vn_ring),
        ];
        for (letter, build) in families.iter() {
            for n in 1..=4usize {
                let label = format!("{letter}{n}({})", base.ring.provenance());
                match build(base, n, caps) {
                    Err(RingError::CapExceeded { required, cap, .. }) => {
                        outcomes.push(CheckOutcome::skipped(
                            &label,
                            format!("order {required} exceeds cap {cap}"),
                        ));
                    }
                    Err(e) => outcomes.push(CheckOutcome::fail(&label, None, format!("{e}"))),
                    Ok(built) => {
                        let brute = radicals::prime_radical_fixpoint(&built.ring);
                        if built.predicted_p.as_ref() != Some(&brute) {
                            outcomes.push(CheckOutcome::fail(
                                &label,
                                None,
                                "closed-form radical differs from brute force".to_string(),
                            ));
                            continue;
                        }
                        let fam_psym =
                            properties::is_p_symmetric(&built.ring, &brute).verdict;
                        if fam_psym == base_psym {
                            outcomes.push(CheckOutcome::pass_with(
                                &label,
                                format!("|P|={}", brute.count()),
                            ));
                        } else {
                            outcomes.push(CheckOutcome::fail(
                                &label,
                                None,
                                format!("base P-symmetric: {base_psym}, family: {fam_psym}"),
                            ));
                        }
                    }
                }
            }
        }
    }
    outcomes
}

type RabInstance = (ConstructedRing, Vec<usize>, usize);

fn check_rab(_corpus: &RingCorpus, caps: &Caps) -> Vec<CheckOutcome> {
    let mut outcomes = Vec::new();
    let instances: Vec<Result<RabInstance, RingError>> = vec![
        construct::zmod(4).map(|a| {
            let sub = (0..4).collect();
            (a, sub, 2usize)
        }),
        construct::zmod(2)
            .and_then(|z2| construct::upper_triangular(&z2, 2, caps))
            .map(|t2| (t2, vec![0, 2, 5, 7], 1usize)),
        construct::zmod(2)
            .and_then(|z2| construct::matrix_ring(&z2, 2, caps))
            .map(|m2| {
                let sub = (0..16).collect();
                (m2, sub, 1usize)
            }),
    ];
    for instance in instances {
        let (a, sub, len) = match instance {
            Ok(t) => t,
            Err(e) => {
                outcomes.push(CheckOutcome::fail("instance", None, format!("{e}")));
                continue;
            }
        };
        let label = format!(
            "RAB({},sub=[{}],L={len})",
            a.ring.provenance(),
            sub.iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let rab = match construct::rab_truncated(&a, &sub, len, caps) {
            Ok(r) => r,
            Err(RingError::CapExceeded { required, cap, .. }) => {
                outcomes.push(CheckOutcome::skipped(
                    &label,
                    format!("order {required} exceeds cap {cap}"),
                ));
                continue;
            }
            Err(e) => {
                outcomes.push(CheckOutcome::fail(&label, None, format!("{e}")));
                continue;
            }
        };
        let b_ring = match construct::subring(&a.ring, &sub, "B") {
            Ok(b) => b,
            Err(e) => {
                outcomes.push(CheckOutcome::fail(&label, None, format!("{e}")));
                continue;
            }
        };
        let brute = radicals::prime_radical_fixpoint(&rab.ring);
        if rab.predicted_p.as_ref() != Some(&brute) {
            outcomes.push(CheckOutcome::fail(
                &label,
                None,
                "sequence-ring radical differs from the closed form".to_string(),
            ));
            continue;
        }
        let p_a = radicals::prime_radical_fixpoint(&a.ring);
        let p_b = radicals::prime_radical_fixpoint(&b_ring);
        let lhs = properties::is_p_symmetric(&a.ring, &p_a).verdict
            && properties::is_p_symmetric(&b_ring, &p_b).verdict;
        let rhs = properties::is_p_symmetric(&rab.ring, &brute).verdict;
        if lhs == rhs {
            outcomes.push(CheckOutcome::pass_with(&label, format!("both sides {lhs}")));
        } else {
            outcomes.push(CheckOutcome::fail(
                &label,
                None,
                format!("components: {lhs}, sequence ring: {rhs}"),
            ));
        }
    }
    outcomes
}

/// A named counterexample: on the ring `ring_expr` the property
/// `satisfies` holds while `violates` fails, and the stored witness tuple
/// re-certifies the failure from stored data alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub ring_expr: String,
    pub satisfies: &'static str,
    pub violates: &'static str,
    pub witness: Vec<usize>,
}

/// The registered counterexamples with their witness tuples encoded
/// through the constructions' coordinate maps.
pub fn counterexample_registry(
    caps: &Caps,
) -> Result<Vec<(ConstructedRing, Counterexample)>, RingError> {
    let z2 = construct::zmod(2)?;
    let s4 = construct::sn_ring(&z2, 4, caps)?;
    let m2 = construct::matrix_ring(&z2, 2, caps)?;
    let cell = |n: usize, i: usize, j: usize| {
        let mut cells = vec![vec![0usize; n]; n];
        cells[i][j] = 1;
        cells
    };
    // A has a single one at (1, 2), B at (0, 1): AB = 0 but BA = e13 is
    // nonzero and non-central.
    let a4 = s4
        .coords
        .index_of_matrix(&cell(4, 1, 2))
        .expect("A encodes");
    let b4 = s4
        .coords
        .index_of_matrix(&cell(4, 0, 1))
        .expect("B encodes");
    let one4 = s4.ring.one();
    // A = e21, B = e12, C = e11 + e12: ABC = 0 but BAC = C is idempotent.
    let a2 = m2
        .coords
        .index_of_matrix(&[vec![0, 0], vec![1, 0]])
        .expect("A encodes");
    let b2 = m2
        .coords
        .index_of_matrix(&[vec![0, 1], vec![0, 0]])
        .expect("B encodes");
    let c2 = m2
        .coords
        .index_of_matrix(&[vec![1, 1], vec![0, 0]])
        .expect("C encodes");
    Ok(vec![
        (
            s4.clone(),
            Counterexample {
                ring_expr: s4.ring.provenance().to_string(),
                satisfies: "p_symmetric",
                violates: "symmetric",
                witness: vec![a4, b4, one4],
            },
        ),
        (
            s4.clone(),
            Counterexample {
                ring_expr: s4.ring.provenance().to_string(),
                satisfies: "p_symmetric",
                violates: "central_symmetric",
                witness: vec![a4, b4, one4],
            },
        ),
        // Primes are maximal in M2 over a field, yet the ring is not
        // P-symmetric: the quasi-duo hypothesis cannot be dropped.
        (
            m2.clone(),
            Counterexample {
                ring_expr: m2.ring.provenance().to_string(),
                satisfies: "primes_maximal",
                violates: "p_symmetric",
                witness: vec![a2, b2, c2],
            },
        ),
        (
            m2.clone(),
            Counterexample {
                ring_expr: m2.ring.provenance().to_string(),
                satisfies: "primes_maximal",
                violates: "generalized_weakly_symmetric",
                witness: vec![a2, b2, c2],
            },
        ),
    ])
}

fn property_verdict(
    built: &ConstructedRing,
    name: &str,
    caps: &Caps,
) -> Result<bool, RingError> {
    let ring = &built.ring;
    Ok(match name {
        "symmetric" => properties::is_symmetric(ring).verdict,
        "central_symmetric" => properties::is_central_symmetric(ring).verdict,
        "generalized_weakly_symmetric" => {
            properties::is_generalized_weakly_symmetric(ring).verdict
        }
        "primes_maximal" => properties::all_primes_maximal(ring, caps)?.verdict,
        "p_symmetric" => {
            let profile = radicals::radical_profile(ring, caps)?;
            properties::is_p_symmetric(ring, &profile.p).verdict
        }
        other => panic!("unregistered property name {other}"),
    })
}

/// Re-checks a stored witness triple against the property it violates.
fn witness_violates(
    built: &ConstructedRing,
    name: &str,
    witness: &[usize],
    caps: &Caps,
) -> Result<bool, RingError> {
    let ring = &built.ring;
    let [a, b, c] = [witness[0], witness[1], witness[2]];
    let abc = ring.mul(ring.mul(a, b), c);
    let bac = ring.mul(ring.mul(b, a), c);
    if abc != ring.zero() {
        return Ok(false);
    }
    Ok(match name {
        "symmetric" => bac != ring.zero(),
        "central_symmetric" => !ring.center().contains(bac),
        "generalized_weakly_symmetric" => !radicals::nilpotents(ring).contains(bac),
        "p_symmetric" => {
            let profile = radicals::radical_profile(ring, caps)?;
            !profile.p.contains(bac)
        }
        other => panic!("unregistered property name {other}"),
    })
}

fn check_counterexamples(_corpus: &RingCorpus, caps: &Caps) -> Vec<CheckOutcome> {
    let registry = match counterexample_registry(caps) {
        Ok(r) => r,
        Err(e) => return vec![CheckOutcome::fail("registry", None, format!("{e}"))],
    };
    registry
        .iter()
        .map(|(built, entry)| {
            let label = format!("{} ({})", entry.ring_expr, entry.violates);
            match (
                property_verdict(built, entry.satisfies, caps),
                property_verdict(built, entry.violates, caps),
                witness_violates(built, entry.violates, &entry.witness, caps),
            ) {
                (Ok(true), Ok(false), Ok(true)) => CheckOutcome::pass_with(
                    &label,
                    format!("{} holds, {} fails", entry.satisfies, entry.violates),
                ),
                (Ok(sat), Ok(vio), Ok(certified)) => CheckOutcome::fail(
                    &label,
                    Some(entry.witness.clone()),
                    format!(
                        "{}={sat} {}={vio} stored-witness-valid={certified}",
                        entry.satisfies, entry.violates
                    ),
                ),
                (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
                    CheckOutcome::fail(&label, None, format!("{e}"))
                }
            }
        })
        .collect()
}

fn check_armendariz_polynomials(corpus: &RingCorpus, caps: &Caps) -> Vec<CheckOutcome> {
    corpus
        .entries
        .iter()
        .map(|entry| {
            let ring = &entry.built.ring;
            let armendariz = match properties::is_armendariz_bounded(ring, 1, caps) {
                Ok(r) => r,
                Err(e) => return CheckOutcome::skipped(&entry.expr, format!("{e}")),
            };
            let profile = match profile_of(entry, caps) {
                Ok(p) => p,
                Err(outcome) => return outcome,
            };
            let poly = match properties::is_p_symmetric_poly_bounded(ring, &profile.p, 1, caps) {
                Ok(r) => r,
                Err(e) => return CheckOutcome::skipped(&entry.expr, format!("{e}")),
            };
            let psym = properties::is_p_symmetric(ring, &profile.p);
            if armendariz.verdict && psym.verdict && !poly.verdict {
                return CheckOutcome::fail(
                    &entry.expr,
                    poly.witness,
                    "Armendariz P-symmetric ring fails the polynomial form".to_string(),
                );
            }
            if poly.verdict && !psym.verdict {
                return CheckOutcome::fail(
                    &entry.expr,
                    psym.witness,
                    "polynomial form holds but the ring is not P-symmetric".to_string(),
                );
            }
            if (armendariz.verdict && psym.verdict) || poly.verdict {
                CheckOutcome::pass_with(
                    &entry.expr,
                    format!("armendariz={} poly={}", armendariz.verdict, poly.verdict),
                )
            } else {
                CheckOutcome::vacuous(&entry.expr, "hypotheses do not apply")
            }
        })
        .collect()
}

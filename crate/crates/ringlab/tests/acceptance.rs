//! Acceptance suite: one test per release criterion, each printing a
//! PASS line and enforcing its time budget. All comparisons are exact —
//! the underlying arithmetic is table lookups, so there are no tolerances.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use ringlab::expr::parse_expression;
use ringlab_core::construct::{self, ConstructedRing};
use ringlab_core::harness::RingCorpus;
use ringlab_core::properties::{self, Permutation};
use ringlab_core::radicals;
use ringlab_core::{Caps, RingError};

fn caps() -> Caps {
    Caps::default()
}

fn corpus() -> RingCorpus {
    RingCorpus::default_corpus(&caps()).expect("default corpus builds")
}

fn finish(criterion: u32, label: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its budget: {elapsed:?} >= {budget:?}"
    );
    println!("acceptance criterion {criterion} ({label}): PASS in {elapsed:?}");
}

#[test]
fn criterion_1_radical_tri_oracle() {
    let started = Instant::now();
    let cap = caps();
    let corpus = corpus();
    assert_eq!(corpus.entries.len(), 15);
    for entry in corpus.entries.iter() {
        let profile = radicals::radical_profile(&entry.built.ring, &cap)
            .unwrap_or_else(|e| panic!("{}: {e}", entry.expr));
        assert!(profile.methods_agreed, "{}", entry.expr);
        // Every corpus ring is within the enumeration cap, so all three
        // algorithms ran and returned identical subsets.
        assert_eq!(profile.per_method.len(), 3, "{}", entry.expr);
        for pair in profile.per_method.windows(2) {
            assert_eq!(pair[0].1, pair[1].1, "{}", entry.expr);
        }
        assert_eq!(profile.p, profile.j, "{}: P = J", entry.expr);
        assert!(profile.p.is_subset_of(&profile.n), "{}: P in N", entry.expr);
    }
    finish(1, "radical tri-oracle", started, Duration::from_secs(60));
}

#[test]
fn criterion_2_closed_form_radicals() {
    let started = Instant::now();
    let cap = caps();
    type Builder = fn(&ConstructedRing, usize, &Caps) -> Result<ConstructedRing, RingError>;
    let families: [(char, Builder); 3] = [
        ('T', construct::upper_triangular),
        ('S', construct::sn_ring),
        ('V', construct::vn_ring),
    ];
    let mut capped: Vec<String> = Vec::new();
    for base_n in [2usize, 4] {
        let base = construct::zmod(base_n).unwrap();
        for (letter, build) in families.iter() {
            for n in 1..=3usize {
                let label = format!("{letter}{n}(Z{base_n})");
                match build(&base, n, &cap) {
                    Err(RingError::CapExceeded { .. }) => capped.push(label),
                    Err(e) => panic!("{label}: {e}"),
                    Ok(built) => {
                        let predicted = built.predicted_p.expect("closed form present");
                        let fixpoint = radicals::prime_radical_fixpoint(&built.ring);
                        let rar = radicals::prime_radical_ideal_nilpotency(&built.ring);
                        assert_eq!(predicted, fixpoint, "{label}");
                        assert_eq!(predicted, rar, "{label}");
                    }
                }
            }
        }
    }
    // Only T3(Z4) (order 4096) exceeds the default 512 cap.
    assert_eq!(capped, vec!["T3(Z4)".to_string()]);
    finish(2, "closed-form radicals", started, Duration::from_secs(60));
}

#[test]
fn criterion_3_named_counterexamples() {
    let started = Instant::now();
    let cap = caps();
    let z2 = construct::zmod(2).unwrap();

    let s4 = construct::sn_ring(&z2, 4, &cap).unwrap();
    let profile = radicals::radical_profile(&s4.ring, &cap).unwrap();
    assert!(properties::is_p_symmetric(&s4.ring, &profile.p).verdict);
    assert!(!properties::is_symmetric(&s4.ring).verdict);
    assert!(!properties::is_central_symmetric(&s4.ring).verdict);
    // The named pair: A has a single strict-upper one at (1, 2), B at (0, 1).
    let mut a_cells = vec![vec![0usize; 4]; 4];
    a_cells[1][2] = 1;
    let mut b_cells = vec![vec![0usize; 4]; 4];
    b_cells[0][1] = 1;
    let a = s4.coords.index_of_matrix(&a_cells).unwrap();
    let b = s4.coords.index_of_matrix(&b_cells).unwrap();
    assert_eq!(s4.ring.mul(a, b), s4.ring.zero());
    let ba = s4.ring.mul(b, a);
    assert_ne!(ba, s4.ring.zero());
    assert!(!s4.ring.center().contains(ba));

    let m2 = construct::matrix_ring(&z2, 2, &cap).unwrap();
    let profile = radicals::radical_profile(&m2.ring, &cap).unwrap();
    assert!(!properties::is_p_symmetric(&m2.ring, &profile.p).verdict);
    let a = m2.coords.index_of_matrix(&[vec![0, 0], vec![1, 0]]).unwrap();
    let b = m2.coords.index_of_matrix(&[vec![0, 1], vec![0, 0]]).unwrap();
    let c = m2.coords.index_of_matrix(&[vec![1, 1], vec![0, 0]]).unwrap();
    assert_eq!(m2.ring.mul(m2.ring.mul(a, b), c), m2.ring.zero());
    let bac = m2.ring.mul(m2.ring.mul(b, a), c);
    assert!(!profile.p.contains(bac));
    assert!(!radicals::nilpotents(&m2.ring).contains(bac));
    finish(3, "named counterexamples", started, Duration::from_secs(30));
}

#[test]
fn criterion_4_implication_lattice() {
    let started = Instant::now();
    let cap = caps();
    let mut antecedents_seen = 0usize;
    for entry in corpus().entries.iter() {
        let ring = &entry.built.ring;
        let profile = radicals::radical_profile(ring, &cap).unwrap();
        let sym = properties::is_symmetric(ring).verdict;
        let psym = properties::is_p_symmetric(ring, &profile.p).verdict;
        let central = properties::is_central_symmetric(ring).verdict;
        if sym {
            assert!(psym, "{}: symmetric => P-symmetric", entry.expr);
        }
        if central {
            assert!(psym, "{}: central => P-symmetric", entry.expr);
        }
        if psym {
            antecedents_seen += 1;
            assert!(
                properties::is_generalized_weakly_symmetric(ring).verdict,
                "{}: => generalized weakly symmetric",
                entry.expr
            );
            assert!(
                properties::is_p_semicommutative(ring, &profile.p).verdict,
                "{}: => P-semicommutative",
                entry.expr
            );
            assert!(
                properties::is_weakly_reversible(ring).verdict,
                "{}: => weakly reversible",
                entry.expr
            );
            assert!(
                profile.n2.is_subset_of(&profile.p),
                "{}: => N2 in P",
                entry.expr
            );
        }
    }
    // The lattice is not vacuous: most corpus rings are P-symmetric.
    assert!(antecedents_seen >= 10);
    finish(4, "implication lattice", started, Duration::from_secs(60));
}

#[test]
fn criterion_5_structural_theorems() {
    let started = Instant::now();
    let cap = caps();
    let corpus = corpus();

    // 2-primal three-way equivalence agrees on every ring.
    for entry in corpus.entries.iter() {
        let profile = radicals::radical_profile(&entry.built.ring, &cap).unwrap();
        properties::is_2_primal(&entry.built.ring, &profile)
            .unwrap_or_else(|e| panic!("{}: {e}", entry.expr));
    }

    // Quasi-duo + primes-maximal implies P-symmetric; non-vacuous on Z12
    // and T2(Z2).
    let mut hypothesis_held_on: Vec<&str> = Vec::new();
    for entry in corpus.entries.iter() {
        let ring = &entry.built.ring;
        let (quasi, primes_max) = match (
            properties::is_left_quasi_duo(ring, &cap),
            properties::all_primes_maximal(ring, &cap),
        ) {
            (Ok(q), Ok(p)) => (q, p),
            _ => continue,
        };
        if quasi.verdict && primes_max.verdict {
            hypothesis_held_on.push(entry.expr.as_str());
            let profile = radicals::radical_profile(ring, &cap).unwrap();
            assert!(
                properties::is_p_symmetric(ring, &profile.p).verdict,
                "{}: quasi-duo theorem",
                entry.expr
            );
        }
    }
    assert!(hypothesis_held_on.contains(&"Z12"));
    assert!(hypothesis_held_on.contains(&"T2(Z2)"));

    // Corner rings of every P-symmetric corpus ring, at every idempotent.
    for entry in corpus.entries.iter() {
        let ring = &entry.built.ring;
        let profile = radicals::radical_profile(ring, &cap).unwrap();
        if !properties::is_p_symmetric(ring, &profile.p).verdict {
            continue;
        }
        for e in ring.idempotents().iter() {
            let corner = construct::corner_ring(&entry.built, e).unwrap();
            let p_corner = radicals::prime_radical_fixpoint(&corner.ring);
            assert_eq!(
                corner.predicted_p.as_ref(),
                Some(&p_corner),
                "{}: P(eRe) = e P(R) e at e = {e}",
                entry.expr
            );
            assert!(
                properties::is_p_symmetric(&corner.ring, &p_corner).verdict,
                "{}: corner at e = {e}",
                entry.expr
            );
        }
    }

    // Quotient lift: R/P(R) P-symmetric forces R P-symmetric.
    for entry in corpus.entries.iter() {
        let ring = &entry.built.ring;
        let profile = radicals::radical_profile(ring, &cap).unwrap();
        let ideal = ringlab_core::ideals::Ideal::from_subset(
            ring,
            profile.p.clone(),
            ringlab_core::ideals::IdealKind::TwoSided,
        )
        .unwrap();
        let (quotient, _) = ringlab_core::ideals::quotient_ring(ring, &ideal).unwrap();
        let p_q = radicals::prime_radical_fixpoint(&quotient);
        if properties::is_p_symmetric(&quotient, &p_q).verdict {
            assert!(
                properties::is_p_symmetric(ring, &profile.p).verdict,
                "{}: quotient lift",
                entry.expr
            );
        }
    }

    // Pullback equivalence on the three named rings.
    let z2 = construct::zmod(2).unwrap();
    for built in [
        construct::zmod(4).unwrap(),
        construct::upper_triangular(&z2, 2, &cap).unwrap(),
        construct::matrix_ring(&z2, 2, &cap).unwrap(),
    ] {
        let pullback = construct::pullback_ring(&built, &cap).unwrap();
        let p_r = radicals::prime_radical_fixpoint(&built.ring);
        let p_s = radicals::prime_radical_fixpoint(&pullback.ring);
        assert_eq!(
            properties::is_p_symmetric(&built.ring, &p_r).verdict,
            properties::is_p_symmetric(&pullback.ring, &p_s).verdict,
            "pullback of {}",
            built.ring.name()
        );
    }

    // Truncated sequence rings on the three named pairs.
    let t2 = construct::upper_triangular(&z2, 2, &cap).unwrap();
    let m2 = construct::matrix_ring(&z2, 2, &cap).unwrap();
    let rab_instances: Vec<(ConstructedRing, Vec<usize>, usize)> = vec![
        (construct::zmod(4).unwrap(), (0..4).collect(), 2),
        (t2, vec![0, 2, 5, 7], 1),
        (m2, (0..16).collect(), 1),
    ];
    for (a, sub, len) in rab_instances {
        let rab = construct::rab_truncated(&a, &sub, len, &cap).unwrap();
        let brute = radicals::prime_radical_fixpoint(&rab.ring);
        assert_eq!(rab.predicted_p.as_ref(), Some(&brute), "{}", rab.ring.name());
        let b_ring = construct::subring(&a.ring, &sub, "B").unwrap();
        let p_a = radicals::prime_radical_fixpoint(&a.ring);
        let p_b = radicals::prime_radical_fixpoint(&b_ring);
        let lhs = properties::is_p_symmetric(&a.ring, &p_a).verdict
            && properties::is_p_symmetric(&b_ring, &p_b).verdict;
        let rhs = properties::is_p_symmetric(&rab.ring, &brute).verdict;
        assert_eq!(lhs, rhs, "{}", rab.ring.name());
    }

    finish(5, "structural theorems", started, Duration::from_secs(120));
}

#[test]
fn criterion_6_bounded_polynomial_theorem() {
    let started = Instant::now();
    let cap = caps();
    let z4 = construct::zmod(4).unwrap();
    let profile = radicals::radical_profile(&z4.ring, &cap).unwrap();
    for d in [1usize, 2] {
        let report = properties::is_armendariz_bounded(&z4.ring, d, &cap).unwrap();
        assert!(report.verdict, "Z4 Armendariz at degree {d}");
        assert_eq!(report.scanned, 4u64.pow(2 * (d as u32 + 1)));
    }
    let poly = properties::is_p_symmetric_poly_bounded(&z4.ring, &profile.p, 1, &cap).unwrap();
    assert!(poly.verdict);
    assert_eq!(poly.scanned, 4u64.pow(6));
    // The permuted-product scans agree with the straight-line theorem here.
    for perm in [Permutation::Bac, Permutation::Acb, Permutation::Cba] {
        assert!(properties::is_p_symmetric_permuted(&z4.ring, &profile.p, perm).verdict);
    }
    finish(6, "bounded polynomial theorem", started, Duration::from_secs(60));
}

fn run_binary(args: &[&str], dir: &PathBuf) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .args(args)
        .current_dir(dir)
        .env_remove("RINGLAB_CAP")
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

#[test]
fn criterion_7_determinism_and_round_trips() {
    let started = Instant::now();
    let dir = std::env::temp_dir().join(format!("ringlab-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    // verify --json is byte-identical across runs and worker counts.
    let first = run_binary(&["verify", "--json", "--jobs", "1"], &dir);
    let second = run_binary(&["verify", "--json", "--jobs", "1"], &dir);
    assert_eq!(first, second, "repeated runs differ");
    for jobs in ["2", "4", "13"] {
        let parallel = run_binary(&["verify", "--json", "--jobs", jobs], &dir);
        assert_eq!(first, parallel, "jobs={jobs} changed the report");
    }
    let parsed: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(parsed["summary"]["fail"], 0);
    assert_eq!(parsed["corpus"].as_array().unwrap().len(), 15);

    // .ring export / import round-trips bit-exact.
    run_binary(&["export", "S2(Z2)", "--out", "s2.ring"], &dir);
    let bytes_once = std::fs::read(dir.join("s2.ring")).unwrap();
    run_binary(&["export", "file(s2.ring)", "--out", "s2b.ring"], &dir);
    let bytes_twice = std::fs::read(dir.join("s2b.ring")).unwrap();
    assert_eq!(bytes_once, bytes_twice);

    // Expression parse/print round-trips over the corpus expression set
    // (plus grammar forms the corpus does not exercise).
    let mut expressions: Vec<String> = corpus().entries.iter().map(|e| e.expr.clone()).collect();
    expressions.push("RAB(T2(Z2),sub=[0,2,5,7],L=1)".to_string());
    expressions.push("quot(Z12,gens=[6])".to_string());
    expressions.push("corner(Z12,4)".to_string());
    expressions.push("file(s2.ring)".to_string());
    for text in expressions {
        let ast = parse_expression(&text).unwrap();
        assert_eq!(ast.to_string(), text);
        assert_eq!(parse_expression(&ast.to_string()).unwrap(), ast);
    }

    // Evaluation is cache-transparent: a cached rebuild equals a fresh one.
    let mut shared = ringlab::Evaluator::new(caps());
    let expr = parse_expression("V2(Z4)").unwrap();
    let warm = shared.eval(&expr).unwrap();
    let warm_again = shared.eval(&expr).unwrap();
    let fresh = ringlab::Evaluator::new(caps()).eval(&expr).unwrap();
    assert!(warm.ring.eq_tables(&warm_again.ring));
    assert!(warm.ring.eq_tables(&fresh.ring));

    // Corpus expressions replay to the exact rings the suite ran on.
    let mut evaluator = ringlab::Evaluator::new(caps());
    let by_expr: BTreeMap<String, ConstructedRing> = corpus()
        .entries
        .into_iter()
        .map(|e| (e.expr, e.built))
        .collect();
    for (expr_text, built) in by_expr.iter() {
        let replayed = evaluator.eval(&parse_expression(expr_text).unwrap()).unwrap();
        assert!(
            replayed.ring.eq_tables(&built.ring),
            "{expr_text} does not replay"
        );
    }

    finish(
        7,
        "determinism and round trips",
        started,
        Duration::from_secs(120),
    );
}

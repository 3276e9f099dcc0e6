//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Everything here is desk-scale and exact: the combinatorial statements are
//! verified by exhaustive enumeration over all Schubert indices of the listed
//! spaces, the numeric identities by seeded random rationals with zero
//! tolerance. Run with `cargo test --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use std::time::{Duration, Instant};

use schubert_duality::closedform::{grassmann_dual, grassmann_suitable, spinor_admissible};
use schubert_duality::dualcore::{DualityEngine, Method};
use schubert_duality::polarize::compute_h0;
use schubert_duality::rootsys::{Family, RootDatum, SchubertIndex, Side};
use schubert_duality::verify;

fn a_cases() -> Vec<Family> {
    let mut out = Vec::new();
    for r in 1..=3usize {
        for n in (2 * r + 1)..=8 {
            out.push(Family::A { r, n });
        }
    }
    out
}

fn report(criterion: &str, elapsed: Duration, budget: Duration, detail: &str) {
    println!("acceptance {criterion}: PASS in {elapsed:?} (budget {budget:?}) - {detail}");
    assert!(elapsed < budget, "{criterion} exceeded its {budget:?} budget: {elapsed:?}");
}

#[test]
fn criterion_01_worked_duality_arrays() {
    let start = Instant::now();
    assert_eq!(grassmann_dual(&[2, 4, 5], 3, 8).unwrap(), vec![3, 6, 7]);
    assert_eq!(grassmann_dual(&[2, 4, 6], 3, 8).unwrap(), vec![3, 5, 7]);
    report(
        "criterion 1 (worked arrays)",
        start.elapsed(),
        Duration::from_millis(1),
        "G(3,8): (2,4,5) -> (3,6,7), (2,4,6) -> (3,5,7)",
    );
}

#[test]
fn criterion_02_type_a_equivalence() {
    let start = Instant::now();
    let mut total = 0usize;
    for family in a_cases() {
        let Family::A { r, n } = family else { unreachable!() };
        let engine = DualityEngine::new(RootDatum::new(family).unwrap());
        assert_eq!(engine.h0(), r.max(n - r), "{family:?} h0");
        let datum = engine.datum().clone();
        for idx in datum.enumerate_cosets() {
            let SchubertIndex::List(l) = &idx else { unreachable!() };
            let closed = grassmann_suitable(l, r, n);
            let heights = engine.is_suitable_heights(&idx).unwrap();
            let oracle = engine.oracle(&idx).unwrap();
            assert_eq!(closed, heights, "{family:?} {idx}");
            assert_eq!(closed, oracle.suitable, "{family:?} {idx}");
            if closed {
                let dual = grassmann_dual(l, r, n).unwrap();
                assert_eq!(oracle.dual, Some(SchubertIndex::List(dual)), "{family:?} {idx}");
            }
            total += 1;
        }
    }
    report(
        "criterion 2 (type A equivalence)",
        start.elapsed(),
        Duration::from_secs(10),
        &format!("{total} cosets over r <= 3, n <= 8"),
    );
}

#[test]
fn criterion_03_type_d_equivalence() {
    let start = Instant::now();
    let mut total = 0usize;
    for p in 1..=3usize {
        let family = Family::Dspin { p };
        let engine = DualityEngine::new(RootDatum::new(family).unwrap());
        assert_eq!(engine.h0(), 2 * p + 1, "{family:?} h0");
        let datum = engine.datum().clone();
        for idx in datum.enumerate_cosets() {
            let SchubertIndex::Signs(signs) = &idx else { unreachable!() };
            let closed = spinor_admissible(signs).unwrap();
            let heights = engine.is_suitable_heights(&idx).unwrap();
            let oracle = engine.oracle(&idx).unwrap();
            assert_eq!(closed, heights, "{family:?} {idx}");
            assert_eq!(closed, oracle.suitable, "{family:?} {idx}");
            if closed {
                let dual = schubert_duality::closedform::spinor_dual(signs).unwrap();
                assert_eq!(oracle.dual, Some(SchubertIndex::Signs(dual)), "{family:?} {idx}");
            }
            total += 1;
        }
    }
    report(
        "criterion 3 (type D equivalence)",
        start.elapsed(),
        Duration::from_secs(10),
        &format!("{total} sign sequences over p <= 3"),
    );
}

#[test]
fn criterion_04_e6_p1() {
    let start = Instant::now();
    let engine = DualityEngine::new(RootDatum::new(Family::E6P1).unwrap());
    assert_eq!(engine.h0(), 8);
    let cosets = engine.datum().enumerate_cosets();
    assert_eq!(cosets.len(), 27);
    for idx in &cosets {
        let heights = engine.is_suitable_heights(idx).unwrap();
        let oracle = engine.oracle(idx).unwrap();
        assert_eq!(heights, oracle.suitable, "{idx}");
    }
    let reports = verify::check_equivalence(Family::E6P1).unwrap();
    assert!(verify::all_passed(&reports), "{}", verify::render(&reports));
    // Worked end-to-end example: the maximal linear subspace.
    let out = engine.oracle(&SchubertIndex::Word(vec![6, 5, 4, 3, 1])).unwrap();
    assert_eq!(out.dual, Some(SchubertIndex::Word(vec![1, 3, 4, 5, 6])));
    report(
        "criterion 4 (E6/P1)",
        start.elapsed(),
        Duration::from_secs(5),
        "27 cosets, unique Bruhat-maximal suitable class, worked dual",
    );
}

#[test]
fn criterion_05_e6_p3() {
    let start = Instant::now();
    let engine = DualityEngine::new(RootDatum::new(Family::E6P3).unwrap());
    assert_eq!(engine.h0(), 5);
    let cosets = engine.datum().enumerate_cosets();
    assert_eq!(cosets.len(), 216);
    let mut suitable = 0usize;
    for idx in &cosets {
        let heights = engine.is_suitable_heights(idx).unwrap();
        let oracle = engine.oracle(idx).unwrap();
        assert_eq!(heights, oracle.suitable, "{idx}");
        if oracle.suitable {
            suitable += 1;
        }
    }
    report(
        "criterion 5 (E6/P3)",
        start.elapsed(),
        Duration::from_secs(60),
        &format!("216 cosets, {suitable} suitable"),
    );
}

#[test]
fn criterion_06_biduality() {
    let start = Instant::now();
    let mut families = a_cases();
    families.extend([
        Family::Dspin { p: 1 },
        Family::Dspin { p: 2 },
        Family::Dspin { p: 3 },
        Family::E6P1,
        Family::E6P3,
    ]);
    let mut total = 0usize;
    for family in families {
        let reports = verify::check_biduality(family).unwrap();
        assert!(verify::all_passed(&reports), "{family:?}: {}", verify::render(&reports));
        let detail = &reports[0].detail;
        let n: usize = detail.split_whitespace().next().unwrap().parse().unwrap();
        total += n;
    }
    report(
        "criterion 6 (biduality involution)",
        start.elapsed(),
        Duration::from_secs(120),
        &format!("{total} suitable cosets round-trip across all cases"),
    );
}

#[test]
fn criterion_07_h0_table() {
    let start = Instant::now();
    let reports = verify::check_h0().unwrap();
    assert!(verify::all_passed(&reports), "{}", verify::render(&reports));
    assert_eq!(reports.len(), 8);
    // The table is symmetric between the two sides of each pair.
    for family in [Family::A { r: 2, n: 5 }, Family::Dspin { p: 2 }, Family::E6P1, Family::E6P3] {
        let p = RootDatum::new(family).unwrap();
        assert_eq!(compute_h0(&p), compute_h0(&p.dual()));
    }
    report(
        "criterion 7 (h0 table)",
        start.elapsed(),
        Duration::from_secs(30),
        "eight tabulated values exact",
    );
}

#[test]
fn criterion_08_octonion_oracle() {
    let start = Instant::now();
    let reports = verify::check_octonion(0x0c70, 1000, 100);
    assert!(verify::all_passed(&reports), "{}", verify::render(&reports));
    report(
        "criterion 8 (octonion oracle)",
        start.elapsed(),
        Duration::from_secs(60),
        "1000 norm pairs, 100 null rank-4 checks, quadric identity",
    );
}

#[test]
fn criterion_09_isotropic_predicates() {
    let start = Instant::now();
    let reports = verify::check_isotropic(0x150, 100);
    assert!(verify::all_passed(&reports), "{}", verify::render(&reports));
    report(
        "criterion 9 (isotropic predicates)",
        start.elapsed(),
        Duration::from_secs(60),
        "72-cell truth table, 100 exact complements",
    );
}

#[test]
fn criterion_10_non_monotonicity_witness() {
    let start = Instant::now();
    let l = vec![2usize, 4, 5];
    let m = vec![2usize, 4, 6];
    assert!(l.iter().zip(&m).all(|(a, b)| a <= b));
    let dl = grassmann_dual(&l, 3, 8).unwrap();
    let dm = grassmann_dual(&m, 3, 8).unwrap();
    assert_eq!(dl, vec![3, 6, 7]);
    assert_eq!(dm, vec![3, 5, 7]);
    // Order reversal would need dl <= dm componentwise; it fails in slot 2.
    assert!(!dl.iter().zip(&dm).all(|(a, b)| a <= b));
    report(
        "criterion 10 (non-monotonicity witness)",
        start.elapsed(),
        Duration::from_millis(10),
        "(2,4,5) <= (2,4,6) but duals (3,6,7) vs (3,5,7)",
    );
}

#[test]
fn criterion_11_structural_invariants() {
    let start = Instant::now();
    // check_equivalence carries the structural reports: order ideals, ideal
    // sizes, extreme targets. Oracle enumeration returning Ok is itself the
    // assertion that MultipleMinima never fires.
    let mut families = vec![
        Family::A { r: 2, n: 5 },
        Family::A { r: 2, n: 6 },
        Family::A { r: 3, n: 7 },
        Family::A { r: 3, n: 8 },
        Family::Dspin { p: 1 },
        Family::Dspin { p: 2 },
        Family::Dspin { p: 3 },
        Family::E6P1,
        Family::E6P3,
    ];
    for family in families.drain(..) {
        let reports = verify::check_equivalence(family).unwrap();
        assert!(verify::all_passed(&reports), "{family:?}: {}", verify::render(&reports));
        // The Q side enumerates without a MultipleMinima alarm as well.
        let q = DualityEngine::new(RootDatum::for_side(family, Side::Q).unwrap());
        q.enumerate_suitable(Method::Oracle).unwrap();
    }
    report(
        "criterion 11 (structural invariants)",
        start.elapsed(),
        Duration::from_secs(120),
        "order ideals, ideal sizes, extreme targets, unique minima",
    );
}

//! Exhaustive desk-scale verification suites.
//!
//! Each suite runs a family of independent cross-checks and returns one
//! report per property: criterion equivalence (heights vs closed form vs
//! oracle, plus frame agreement), the biduality involution, the `h0` table,
//! exact octonion identities on random rationals, and the isotropic
//! Grassmannian predicates on random exact forms. The CLI `check` command
//! and the acceptance tests both drive these.

use std::fmt::Write as _;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::closedform::{self, BilinearFormSpec};
use crate::dualcore::{DualError, DualityEngine, Method};
use crate::polarize::octonion::{left_mul_rank, oct_mul, oct_norm, quadric_point, Octonion};
use crate::ratmat::{self, Rat};
use crate::rootsys::{Family, RootDatum, SchubertIndex, Side};

/// Outcome of one verified property.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    /// Counts on success, the first counterexample on failure.
    pub detail: String,
}

impl CheckReport {
    fn pass(name: &str, detail: String) -> CheckReport {
        CheckReport { name: name.to_string(), passed: true, detail }
    }

    fn fail(name: &str, detail: String) -> CheckReport {
        CheckReport { name: name.to_string(), passed: false, detail }
    }
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

/// Render reports as stable one-line-per-property text.
pub fn render(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(
            out,
            "{} {} ({})",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
    }
    out
}

/// Criterion equivalence on one family (P side): the height bound, the
/// closed-form predicate where one exists, and oracle non-emptiness must
/// agree on every coset; on suitable cosets all routes must return the same
/// dual index. Structural invariants (order ideals, ideal sizes, extreme
/// targets) ride along.
pub fn check_equivalence(family: Family) -> Result<Vec<CheckReport>, DualError> {
    let datum = RootDatum::new(family)?;
    let engine = DualityEngine::new(datum.clone());
    let cosets = datum.enumerate_cosets();
    let mut reports = Vec::new();

    let mut suitable_count = 0usize;
    let mut mismatch: Option<String> = None;
    let mut structural: Option<String> = None;
    let mut closed_mismatch: Option<String> = None;
    let mut frame_mismatch: Option<String> = None;
    let has_closed_form = matches!(family, Family::A { .. } | Family::Dspin { .. });

    for idx in &cosets {
        let heights_ok = engine.is_suitable_heights(idx)?;
        let oracle = engine.oracle(idx)?;
        if oracle.suitable {
            suitable_count += 1;
        }
        if heights_ok != oracle.suitable && mismatch.is_none() {
            mismatch = Some(format!("{idx}: heights={heights_ok}, oracle={}", oracle.suitable));
        }
        if has_closed_form {
            let closed = engine.closed_form(idx)?;
            if closed.suitable != oracle.suitable || closed.dual != oracle.dual {
                closed_mismatch.get_or_insert_with(|| {
                    format!("{idx}: closed={:?}, oracle={:?}", closed.dual, oracle.dual)
                });
            }
            let base = engine.oracle_base_frame(idx)?;
            if base.suitable != oracle.suitable || base.dual != oracle.dual {
                frame_mismatch.get_or_insert_with(|| {
                    format!("{idx}: base={:?}, fixed={:?}", base.dual, oracle.dual)
                });
            }
        }
        // Structural: Q_w an order ideal; size = length in the cominuscule
        // cases; every achievable base-frame target is an extreme weight.
        let sub = engine.subquiver(idx)?;
        if !engine.quiver().is_order_ideal(&sub) {
            structural.get_or_insert_with(|| format!("{idx}: Q_w is not an order ideal"));
        }
        if family != Family::E6P3 {
            let w = datum.index_to_min_rep(idx)?;
            if sub.len() != datum.length(&w) {
                structural.get_or_insert_with(|| format!("{idx}: |Q_w| != length"));
            }
        }
        for target in engine.achievable_targets(idx)? {
            if engine.dual_datum().extreme_weight_to_coset(&target).is_err() {
                structural.get_or_insert_with(|| {
                    format!("{idx}: non-extreme target {}", engine.dual_datum().weight_string(&target))
                });
            }
        }
    }

    let total = cosets.len();
    reports.push(match mismatch {
        None => CheckReport::pass(
            "heights-vs-oracle",
            format!("{total} cosets, {suitable_count} suitable"),
        ),
        Some(d) => CheckReport::fail("heights-vs-oracle", d),
    });
    if has_closed_form {
        reports.push(match closed_mismatch {
            None => CheckReport::pass("closed-form-vs-oracle", format!("{total} cosets")),
            Some(d) => CheckReport::fail("closed-form-vs-oracle", d),
        });
        reports.push(match frame_mismatch {
            None => CheckReport::pass("base-frame-vs-fixed-frame", format!("{total} cosets")),
            Some(d) => CheckReport::fail("base-frame-vs-fixed-frame", d),
        });
    }
    reports.push(match structural {
        None => CheckReport::pass("structural-invariants", format!("{total} cosets")),
        Some(d) => CheckReport::fail("structural-invariants", d),
    });

    // The suitable set of E6/P1 is a lower Bruhat interval: one suitable
    // coset dominates all others.
    if family == Family::E6P1 {
        let suitable: Vec<&SchubertIndex> = cosets
            .iter()
            .zip(cosets.iter().map(|i| engine.oracle(i).map(|o| o.suitable)))
            .filter_map(|(i, s)| s.ok().filter(|&s| s).map(|_| i))
            .collect();
        let maxima: Vec<&&SchubertIndex> = suitable
            .iter()
            .filter(|a| {
                suitable
                    .iter()
                    .all(|b| a == &b || !datum.coset_leq(a, b).unwrap_or(false))
            })
            .collect();
        let dominates_all = maxima.len() == 1
            && suitable.iter().all(|a| datum.coset_leq(a, maxima[0]).unwrap_or(false));
        reports.push(if dominates_all {
            CheckReport::pass(
                "unique-bruhat-maximal-suitable",
                format!("w_max = [{}] over {} suitable", maxima[0], suitable.len()),
            )
        } else {
            CheckReport::fail(
                "unique-bruhat-maximal-suitable",
                format!("{} maximal suitable cosets", maxima.len()),
            )
        });
    }

    Ok(reports)
}

/// Biduality on one family: for every suitable coset on the P side, the
/// Q-side oracle applied to the dual returns the original index.
pub fn check_biduality(family: Family) -> Result<Vec<CheckReport>, DualError> {
    let p_engine = DualityEngine::new(RootDatum::new(family)?);
    let q_engine = DualityEngine::new(RootDatum::for_side(family, Side::Q)?);
    let mut count = 0usize;
    let mut failure: Option<String> = None;
    for (idx, outcome) in p_engine.enumerate_suitable(Method::Oracle)? {
        let Some(dual) = outcome.dual else { continue };
        count += 1;
        let back = q_engine.oracle(&dual)?;
        if back.dual.as_ref() != Some(&idx) && failure.is_none() {
            failure = Some(format!("{idx} -> {dual} -> {:?}", back.dual));
        }
    }
    Ok(vec![match failure {
        None => CheckReport::pass("biduality", format!("{count} suitable cosets round-trip")),
        Some(d) => CheckReport::fail("biduality", d),
    }])
}

/// The eight tabulated `h0` values.
pub fn check_h0() -> Result<Vec<CheckReport>, DualError> {
    let cases: [(Family, usize); 8] = [
        (Family::A { r: 2, n: 5 }, 3),
        (Family::A { r: 2, n: 6 }, 4),
        (Family::A { r: 3, n: 7 }, 4),
        (Family::A { r: 3, n: 8 }, 5),
        (Family::Dspin { p: 1 }, 3),
        (Family::Dspin { p: 2 }, 5),
        (Family::E6P1, 8),
        (Family::E6P3, 5),
    ];
    let mut reports = Vec::new();
    for (family, expect) in cases {
        let got = crate::polarize::compute_h0(&RootDatum::new(family)?);
        let name = format!("h0 {family:?}");
        reports.push(if got == expect {
            CheckReport::pass(&name, format!("h0 = {got}"))
        } else {
            CheckReport::fail(&name, format!("expected {expect}, got {got}"))
        });
    }
    Ok(reports)
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let num = rng.random_range(-9i64..=9);
    let den = rng.random_range(1i64..=4);
    Rat::new(num.into(), den.into())
}

fn random_octonion(rng: &mut ChaCha8Rng) -> Octonion {
    Octonion(std::array::from_fn(|_| random_rat(rng)))
}

/// A random nonzero null octonion: multiply a standard null vector by random
/// elements on both sides (the norm is multiplicative, so stays zero).
fn random_null_octonion(rng: &mut ChaCha8Rng) -> Octonion {
    let mut base = Octonion::zero();
    base.0[0] = ratmat::rat(1);
    base.0[4] = ratmat::rat(1);
    loop {
        let z = oct_mul(&oct_mul(&random_octonion(rng), &base), &random_octonion(rng));
        if !z.is_zero() {
            return z;
        }
    }
}

/// Exact octonion identities on seeded random rationals.
pub fn check_octonion(seed: u64, norm_trials: usize, rank_trials: usize) -> Vec<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::new();

    let mut bad = None;
    for k in 0..norm_trials {
        let a = random_octonion(&mut rng);
        let b = random_octonion(&mut rng);
        if oct_norm(&oct_mul(&a, &b)) != oct_norm(&a) * oct_norm(&b) {
            bad = Some(format!("trial {k}: N(ab) != N(a)N(b) for a={a}, b={b}"));
            break;
        }
    }
    reports.push(match bad {
        None => CheckReport::pass("norm-multiplicative", format!("{norm_trials} random pairs")),
        Some(d) => CheckReport::fail("norm-multiplicative", d),
    });

    let mut bad = None;
    for k in 0..rank_trials {
        let z = random_null_octonion(&mut rng);
        debug_assert!(oct_norm(&z).is_zero());
        let rank = left_mul_rank(&z);
        if rank != 4 {
            bad = Some(format!("trial {k}: rank L(z) = {rank} for null z={z}"));
            break;
        }
    }
    reports.push(match bad {
        None => CheckReport::pass("null-left-mul-rank-4", format!("{rank_trials} random null vectors")),
        Some(d) => CheckReport::fail("null-left-mul-rank-4", d),
    });

    let mut bad = None;
    for k in 0..norm_trials {
        let z1 = random_octonion(&mut rng);
        let z2 = random_octonion(&mut rng);
        match quadric_point(&z1, &z2) {
            Ok(p) => {
                let mid = Octonion(std::array::from_fn(|j| p[j + 1].clone()));
                if &p[0] * &p[9] != oct_norm(&mid) {
                    bad = Some(format!("trial {k}: t*u != N(z)"));
                    break;
                }
            }
            Err(_) => {
                if !(oct_norm(&z1).is_zero() && oct_norm(&z2).is_zero()) {
                    bad = Some(format!("trial {k}: quadric point undefined unexpectedly"));
                    break;
                }
            }
        }
    }
    reports.push(match bad {
        None => CheckReport::pass("quadric-point-on-quadric", format!("{norm_trials} random pairs")),
        Some(d) => CheckReport::fail("quadric-point-on-quadric", d),
    });

    reports
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Rat>> {
    loop {
        let m: Vec<Vec<Rat>> = (0..n)
            .map(|_| (0..n).map(|_| ratmat::rat(rng.random_range(-3i64..=3))).collect())
            .collect();
        if ratmat::inverse(&m).is_some() {
            return m;
        }
    }
}

fn transpose(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let rows = m.len();
    let cols = m[0].len();
    (0..cols).map(|c| (0..rows).map(|r| m[r][c].clone()).collect()).collect()
}

fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let k = b.len();
    let cols = b[0].len();
    (0..n)
        .map(|i| {
            (0..cols)
                .map(|j| (0..k).map(|t| &a[i][t] * &b[t][j]).sum())
                .collect()
        })
        .collect()
}

/// Isotropic-Grassmannian predicates: the 72-cell suitability truth table
/// plus random exact orthogonal-complement computations.
pub fn check_isotropic(seed: u64, trials: usize) -> Vec<CheckReport> {
    let mut reports = Vec::new();

    // Truth table over epsilon, r <= 6, rank <= 6.
    let mut bad = None;
    for eps in [1i8, -1] {
        for r in 1..=6usize {
            for rank in 1..=6usize {
                let expect = if eps == 1 { r <= rank } else { r % 2 == 0 && r <= rank };
                if closedform::iso_suitable(eps, r, rank) != expect {
                    bad = Some(format!("eps={eps}, r={r}, rank={rank}"));
                }
            }
        }
    }
    reports.push(match bad {
        None => CheckReport::pass("iso-suitable-truth-table", "72 cells".to_string()),
        Some(d) => CheckReport::fail("iso-suitable-truth-table", d),
    });

    // Random hyperbolic-plus-kernel forms, conjugated by a random basis
    // change; the orthogonal complement of an isotropic r-space avoiding the
    // kernel must have codimension exactly r.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = None;
    for k in 0..trials {
        let eps: i8 = if rng.random_bool(0.5) { 1 } else { -1 };
        let blocks = rng.random_range(1usize..=3);
        let zeros = rng.random_range(0usize..=2);
        let n = 2 * blocks + zeros;
        let r = rng.random_range(1usize..=blocks);
        let mut m = vec![vec![ratmat::rat(0); n]; n];
        for b in 0..blocks {
            m[2 * b][2 * b + 1] = ratmat::rat(1);
            m[2 * b + 1][2 * b] = ratmat::rat(i64::from(eps));
        }
        let t = random_invertible(&mut rng, n);
        let form = BilinearFormSpec::new(eps, mat_mul(&transpose(&t), &mat_mul(&m, &t)))
            .expect("congruence preserves epsilon-symmetry");
        // Random r-space inside the span of the "plus" hyperbolic vectors,
        // pulled through the basis change.
        let t_inv = ratmat::inverse(&t).unwrap();
        let mut basis: Vec<Vec<Rat>> = Vec::new();
        while basis.len() < r {
            let coeffs: Vec<Rat> =
                (0..blocks).map(|_| ratmat::rat(rng.random_range(-3i64..=3))).collect();
            let mut v = vec![ratmat::rat(0); n];
            for (b, c) in coeffs.iter().enumerate() {
                v[2 * b] = c.clone();
            }
            let v = ratmat::mat_vec(&t_inv, &v);
            let mut trial = basis.clone();
            trial.push(v);
            if ratmat::rank(&trial) == trial.len() {
                basis = trial;
            }
        }
        match closedform::coiso_dual(&form, &basis) {
            Ok(perp) => {
                let codim = n - perp.len();
                let ok = codim == r
                    && perp.iter().all(|v| {
                        basis.iter().all(|b| form.apply(b, v).is_zero())
                    });
                if !ok {
                    bad = Some(format!("trial {k}: codim {codim} != r {r}"));
                    break;
                }
            }
            Err(e) => {
                bad = Some(format!("trial {k}: unexpected error {e}"));
                break;
            }
        }
    }
    reports.push(match bad {
        None => CheckReport::pass("coiso-dual-codimension", format!("{trials} random instances")),
        Some(d) => CheckReport::fail("coiso-dual-codimension", d),
    });

    reports
}

//! Independent oracle for the degree-6 polarization rule.
//!
//! The implementation expands the Pluecker coordinates of the rational map
//! symbolically; this test recomputes every polarization component by plain
//! numeric evaluation and inclusion-exclusion, with no shared code beyond
//! the definition of the map itself: a pair of alternating forms goes to
//! the plane spanned by `m2 * ker(m1)` and `m1 * ker(m2)`, with `ker` the
//! Pfaffian kernel vector. The two routes must flag exactly the same
//! nonzero components on every 3+3 label multiset.

use itertools::Itertools;
use schubert_duality::polarize::{rule_e6p3, AltLabel};

type Mat5 = [[i128; 5]; 5];

fn pf4(m: &Mat5, r: [usize; 4]) -> i128 {
    m[r[0]][r[1]] * m[r[2]][r[3]] - m[r[0]][r[2]] * m[r[1]][r[3]]
        + m[r[0]][r[3]] * m[r[1]][r[2]]
}

fn pfaffian_kernel(m: &Mat5) -> [i128; 5] {
    let mut v = [0i128; 5];
    for i in 0..5 {
        let r: Vec<usize> = (0..5).filter(|&k| k != i).collect();
        let sign = if i % 2 == 0 { 1 } else { -1 };
        v[i] = sign * pf4(m, [r[0], r[1], r[2], r[3]]);
    }
    v
}

fn matvec(m: &Mat5, v: &[i128; 5]) -> [i128; 5] {
    let mut out = [0i128; 5];
    for i in 0..5 {
        for j in 0..5 {
            out[i] += m[i][j] * v[j];
        }
    }
    out
}

/// Pluecker coordinates of the map, pair slots in lexicographic order.
fn qbar(m1: &Mat5, m2: &Mat5) -> [i128; 10] {
    let v1 = matvec(m2, &pfaffian_kernel(m1));
    let v2 = matvec(m1, &pfaffian_kernel(m2));
    let mut out = [0i128; 10];
    let mut t = 0;
    for i in 0..5 {
        for j in i + 1..5 {
            out[t] = v1[i] * v2[j] - v1[j] * v2[i];
            t += 1;
        }
    }
    out
}

/// Targets with nonzero polarization on the given labels, via the numeric
/// inclusion-exclusion polarization formula.
fn polar_targets(labels: &[AltLabel; 6]) -> Vec<(u8, u8)> {
    let mut acc = [0i128; 10];
    for mask in 0u32..64 {
        let mut m1 = [[0i128; 5]; 5];
        let mut m2 = [[0i128; 5]; 5];
        for (k, &(second, i, j)) in labels.iter().enumerate() {
            if mask & (1 << k) == 0 {
                continue;
            }
            let (i, j) = (usize::from(i) - 1, usize::from(j) - 1);
            let m = if second { &mut m2 } else { &mut m1 };
            m[i][j] += 1;
            m[j][i] -= 1;
        }
        let sign = if (6 - mask.count_ones()) % 2 == 0 { 1 } else { -1 };
        let q = qbar(&m1, &m2);
        for (a, &b) in acc.iter_mut().zip(q.iter()) {
            *a += sign * b;
        }
    }
    let mut out = Vec::new();
    let mut t = 0;
    for i in 1..=5u8 {
        for j in i + 1..=5 {
            if acc[t] != 0 {
                out.push((i, j));
            }
            t += 1;
        }
    }
    out
}

#[test]
fn pfaffian_kernel_annihilates() {
    let entries: [i128; 10] = [3, -1, 4, 1, -5, 9, 2, -6, 5, 3];
    let mut m = [[0i128; 5]; 5];
    let mut t = 0;
    for i in 0..5 {
        for j in i + 1..5 {
            m[i][j] = entries[t];
            m[j][i] = -entries[t];
            t += 1;
        }
    }
    let k = pfaffian_kernel(&m);
    assert!(k.iter().any(|&x| x != 0));
    assert_eq!(matvec(&m, &k), [0; 5]);
}

#[test]
fn rule_matches_numeric_polarization_on_all_multisets() {
    let pairs: Vec<(u8, u8)> = (1..=5u8).flat_map(|i| (i + 1..=5).map(move |j| (i, j))).collect();
    let reds: Vec<AltLabel> = pairs.iter().map(|&(i, j)| (false, i, j)).collect();
    let blues: Vec<AltLabel> = pairs.iter().map(|&(i, j)| (true, i, j)).collect();
    let mut checked = 0usize;
    let mut fired = 0usize;
    for rt in reds.iter().copied().combinations_with_replacement(3) {
        for bt in blues.iter().copied().combinations_with_replacement(3) {
            let taus: Vec<AltLabel> = rt.iter().chain(bt.iter()).copied().collect();
            let by_rule: Vec<(u8, u8)> = rule_e6p3(&taus).unwrap().into_iter().collect();
            let arr: [AltLabel; 6] = taus.try_into().unwrap();
            let by_eval = polar_targets(&arr);
            assert_eq!(by_rule, by_eval, "labels {arr:?}");
            assert!(by_rule.len() <= 1, "one target per multiset: {arr:?}");
            checked += 1;
            if !by_rule.is_empty() {
                fired += 1;
            }
        }
    }
    assert_eq!(checked, 220 * 220);
    assert!(fired > 0);
    println!("checked {checked} multisets, {fired} with nonzero polarization");
}

#[test]
fn unbalanced_color_split_always_vanishes() {
    // Any 6-tuple without a 3/3 color split has zero polarization.
    let taus: Vec<AltLabel> = vec![
        (false, 1, 2),
        (false, 3, 4),
        (false, 1, 5),
        (false, 2, 3),
        (true, 4, 5),
        (true, 1, 3),
    ];
    assert!(rule_e6p3(&taus).unwrap().is_empty());
    let arr: [AltLabel; 6] = taus.try_into().unwrap();
    assert!(polar_targets(&arr).is_empty());
}

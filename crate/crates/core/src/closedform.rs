//! Explicit combinatorial duality maps and suitability predicates.
//!
//! * Grassmannian side: `C_l` in `G(r, n)` is suitable iff
//!   `l_i < n + 2i - 2r` for every `i`, and the dual list is produced by the
//!   greedy recursion `l*_i = min { y : y > l*_{i-1}, y > l_i, y not in l }`.
//! * Spinor side: a sign sequence is admissible iff every even prefix window
//!   `1..=2i` contains at least `i` plus signs, and the dual flips exactly
//!   one sign at a position dictated by two sequential branch conditions.
//! * Isotropic Grassmannians `G_B(r, V)` inside `G(r, V)`: suitability is a
//!   rank/parity predicate on the bilinear form, and the dual of an isotropic
//!   subspace is its orthogonal complement, computed exactly.

use std::fmt;

use crate::ratmat::{self, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedFormError {
    /// The Schubert variety has no dual.
    NotSuitable,
    /// Sign sequence with the wrong number of plus signs for its side.
    BadParity,
    /// The subspace meets the kernel of the bilinear form.
    DegeneratePoint,
    /// The subspace is not isotropic for the form.
    NotIsotropic,
    BadInput(String),
}

impl fmt::Display for ClosedFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedFormError::NotSuitable => write!(f, "not suitable: no dual variety"),
            ClosedFormError::BadParity => write!(f, "sign sequence has the wrong parity"),
            ClosedFormError::DegeneratePoint => {
                write!(f, "subspace meets the kernel of the form")
            }
            ClosedFormError::NotIsotropic => write!(f, "subspace is not isotropic"),
            ClosedFormError::BadInput(s) => write!(f, "bad input: {s}"),
        }
    }
}

impl std::error::Error for ClosedFormError {}

/// Suitability of `C_l` in `G(r, n)`: `l_i < n + 2i - 2r` for all `i`.
pub fn grassmann_suitable(l: &[usize], r: usize, n: usize) -> bool {
    debug_assert_eq!(l.len(), r);
    l.iter()
        .enumerate()
        .all(|(k, &li)| (li as i64) < n as i64 + 2 * (k as i64 + 1) - 2 * r as i64)
}

/// The greedy dual list; entries may exceed `n` exactly when unsuitable.
fn grassmann_dual_unchecked(l: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(l.len());
    let mut prev = 0usize;
    for &li in l {
        let mut y = prev.max(li) + 1;
        while l.contains(&y) {
            y += 1;
        }
        out.push(y);
        prev = y;
    }
    out
}

/// Dual list `l*` of a suitable `l`; strictly increasing, disjoint from `l`,
/// componentwise minimal among the admissible target lists.
pub fn grassmann_dual(l: &[usize], r: usize, n: usize) -> Result<Vec<usize>, ClosedFormError> {
    if l.len() != r {
        return Err(ClosedFormError::BadInput(format!("expected {r} entries, got {}", l.len())));
    }
    if !grassmann_suitable(l, r, n) {
        return Err(ClosedFormError::NotSuitable);
    }
    let out = grassmann_dual_unchecked(l);
    debug_assert!(out.last().is_none_or(|&y| y <= n));
    Ok(out)
}

fn check_parity(signs: &[i8]) -> Result<(), ClosedFormError> {
    if signs.len() % 2 == 0 || signs.iter().any(|&s| s != 1 && s != -1) {
        return Err(ClosedFormError::BadInput("need an odd-length +-1 sequence".into()));
    }
    let plus = signs.iter().filter(|&&s| s > 0).count();
    if plus % 2 == 1 {
        Ok(())
    } else {
        Err(ClosedFormError::BadParity)
    }
}

/// Admissibility of a sign sequence (odd number of `+`, length `2p+1`):
/// every window `1..=2i` holds at least `i` plus signs.
pub fn spinor_admissible(signs: &[i8]) -> Result<bool, ClosedFormError> {
    check_parity(signs)?;
    let p = signs.len() / 2;
    Ok((1..=p).all(|i| signs[..2 * i].iter().filter(|&&s| s > 0).count() >= i))
}

/// The dual sign sequence: a single flip at the position picked by the two
/// branch conditions, evaluated in order.
pub fn spinor_dual(signs: &[i8]) -> Result<Vec<i8>, ClosedFormError> {
    if !spinor_admissible(signs)? {
        return Err(ClosedFormError::NotSuitable);
    }
    let p = signs.len() / 2;
    let plus_count = |upto: usize| signs[..upto].iter().filter(|&&s| s > 0).count();
    // Branch 1: some odd window 1..=2i-1 with i <= p+1 holds exactly i-1 plus
    // signs; flip at 2*i0 - 1 for the least such i.
    let branch1 = (1..=p + 1).find(|&i| plus_count(2 * i - 1) == i - 1);
    let flip_pos = match branch1 {
        Some(i0) => 2 * i0 - 1,
        None => {
            // Branch 2: least i such that every prefix 1..=k with k >= i has
            // strictly more plus than minus signs.
            let m = signs.len();
            (1..=m)
                .find(|&i| (i..=m).all(|k| 2 * plus_count(k) > k))
                .expect("final prefix qualifies when branch 1 is empty")
        }
    };
    let mut out = signs.to_vec();
    out[flip_pos - 1] = -out[flip_pos - 1];
    Ok(out)
}

/// Bruhat comparison of single-flip sequences: `phi(eta, i) <= phi(eta, j)`.
pub fn spin_flip_leq(signs: &[i8], i: usize, j: usize) -> bool {
    let (si, sj) = (signs[i - 1], signs[j - 1]);
    (si > 0 && sj > 0 && i <= j) || (si > 0 && sj < 0) || (si < 0 && sj < 0 && i >= j)
}

/// Suitability of the isotropic Grassmannian `G_B(r, V)` inside `G(r, V)`:
/// `r <= rk B`, and additionally `r` even when the form is antisymmetric.
pub fn iso_suitable(epsilon: i8, r: usize, rank: usize) -> bool {
    match epsilon {
        1 => r <= rank,
        -1 => r % 2 == 0 && r <= rank,
        _ => false,
    }
}

/// An epsilon-symmetric bilinear form with exact rational entries.
#[derive(Clone, Debug)]
pub struct BilinearFormSpec {
    epsilon: i8,
    matrix: Vec<Vec<Rat>>,
    rank: usize,
}

impl BilinearFormSpec {
    pub fn new(epsilon: i8, matrix: Vec<Vec<Rat>>) -> Result<BilinearFormSpec, ClosedFormError> {
        if epsilon != 1 && epsilon != -1 {
            return Err(ClosedFormError::BadInput("epsilon must be +1 or -1".into()));
        }
        let n = matrix.len();
        if matrix.iter().any(|row| row.len() != n) {
            return Err(ClosedFormError::BadInput("form matrix must be square".into()));
        }
        let eps = ratmat::rat(i64::from(epsilon));
        for i in 0..n {
            for j in 0..n {
                if matrix[j][i] != &eps * &matrix[i][j] {
                    return Err(ClosedFormError::BadInput(
                        "matrix is not epsilon-symmetric".into(),
                    ));
                }
            }
        }
        let rank = ratmat::rank(&matrix);
        Ok(BilinearFormSpec { epsilon, matrix, rank })
    }

    pub fn epsilon(&self) -> i8 {
        self.epsilon
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.matrix
    }

    pub fn apply(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let by = ratmat::mat_vec(&self.matrix, y);
        x.iter().zip(&by).map(|(a, b)| a * b).sum()
    }

    pub fn is_suitable(&self, r: usize) -> bool {
        iso_suitable(self.epsilon, r, self.rank)
    }
}

/// Orthogonal complement `L^perp = { v : B(L, v) = 0 }` of an isotropic
/// `r`-dimensional subspace avoiding the kernel; a codimension-`r` subspace,
/// returned as a kernel basis.
pub fn coiso_dual(
    form: &BilinearFormSpec,
    basis: &[Vec<Rat>],
) -> Result<Vec<Vec<Rat>>, ClosedFormError> {
    let r = basis.len();
    let n = form.dim();
    if r == 0 || basis.iter().any(|v| v.len() != n) {
        return Err(ClosedFormError::BadInput("need r > 0 vectors of length dim V".into()));
    }
    if ratmat::rank(basis) < r {
        return Err(ClosedFormError::BadInput("basis vectors are dependent".into()));
    }
    for i in 0..r {
        for j in i..r {
            if !num_traits::Zero::is_zero(&form.apply(&basis[i], &basis[j])) {
                return Err(ClosedFormError::NotIsotropic);
            }
        }
    }
    // Rows b_i^T B; full row rank exactly when L avoids ker B.
    let rows: Vec<Vec<Rat>> = basis
        .iter()
        .map(|v| {
            (0..n)
                .map(|c| (0..n).map(|k| &v[k] * &form.matrix[k][c]).sum())
                .collect()
        })
        .collect();
    if ratmat::rank(&rows) < r {
        return Err(ClosedFormError::DegeneratePoint);
    }
    Ok(ratmat::kernel_basis(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    #[test]
    fn worked_duality_arrays() {
        assert_eq!(grassmann_dual(&[2, 4, 5], 3, 8).unwrap(), vec![3, 6, 7]);
        assert_eq!(grassmann_dual(&[2, 4, 6], 3, 8).unwrap(), vec![3, 5, 7]);
    }

    #[test]
    fn grassmann_suitability_boundaries() {
        assert!(grassmann_suitable(&[2, 4, 5], 3, 8));
        // The whole Grassmannian: the first inequality already fails.
        assert!(!grassmann_suitable(&[6, 7, 8], 3, 8));
        // The point cell is always suitable when 2r < n.
        assert!(grassmann_suitable(&[1, 2, 3], 3, 8));
        assert_eq!(grassmann_dual(&[6, 7, 8], 3, 8), Err(ClosedFormError::NotSuitable));
    }

    #[test]
    fn dual_of_a_block_is_the_next_block() {
        for r in 1..=3usize {
            for n in (2 * r + 1)..=8 {
                for p in r..=(n - r) {
                    let l: Vec<usize> = (p - r + 1..=p).collect();
                    let expect: Vec<usize> = (p + 1..=p + r).collect();
                    assert_eq!(grassmann_dual(&l, r, n).unwrap(), expect, "r={r} n={n} p={p}");
                }
            }
        }
    }

    #[test]
    fn recursion_completes_iff_inequalities_hold() {
        for r in 1..=3usize {
            for n in (2 * r + 1)..=8 {
                for l in (1..=n).combinations(r) {
                    let fits = grassmann_dual_unchecked(&l).last().copied().unwrap() <= n;
                    assert_eq!(fits, grassmann_suitable(&l, r, n), "l={l:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn dual_list_is_disjoint_increasing_and_minimal() {
        for l in (1..=8usize).combinations(3) {
            if !grassmann_suitable(&l, 3, 8) {
                continue;
            }
            let d = grassmann_dual(&l, 3, 8).unwrap();
            assert!(d.windows(2).all(|w| w[0] < w[1]));
            assert!(d.iter().all(|y| !l.contains(y)));
            // Minimality: any smaller value in slot i breaks a constraint.
            for i in 0..3 {
                let prev = if i == 0 { 0 } else { d[i - 1] };
                for y in 1..d[i] {
                    assert!(y <= prev || y <= l[i] || l.contains(&y));
                }
            }
        }
    }

    #[test]
    fn spinor_admissibility_examples() {
        assert!(spinor_admissible(&[1, 1, 1, 1, 1]).unwrap());
        assert!(!spinor_admissible(&[-1, -1, 1, 1, 1]).unwrap());
        assert!(spinor_admissible(&[-1, 1, 1, 1, -1]).unwrap());
        assert_eq!(spinor_admissible(&[1, 1, -1, -1, -1]), Err(ClosedFormError::BadParity));
        assert!(matches!(spinor_admissible(&[1, 1]), Err(ClosedFormError::BadInput(_))));
    }

    #[test]
    fn spinor_dual_branch_examples() {
        // Branch 1 at i0 = 1: flip position 1.
        assert_eq!(spinor_dual(&[-1, 1, 1, 1, -1]).unwrap(), vec![1, 1, 1, 1, -1]);
        // No odd window qualifies: branch 2 at i0 = 1.
        assert_eq!(spinor_dual(&[1, 1, 1, 1, 1]).unwrap(), vec![-1, 1, 1, 1, 1]);
        // Boundary case: branch 2 fires at the last position.
        assert_eq!(spinor_dual(&[1, 1, -1, -1, 1]).unwrap(), vec![1, 1, -1, -1, -1]);
        assert_eq!(spinor_dual(&[-1, -1, 1, 1, 1]), Err(ClosedFormError::NotSuitable));
    }

    #[test]
    fn spinor_dual_flips_exactly_one_sign() {
        for p in 1..=3usize {
            let m = 2 * p + 1;
            for mask in 0u32..(1 << m) {
                let signs: Vec<i8> =
                    (0..m).map(|k| if mask & (1 << k) == 0 { 1 } else { -1 }).collect();
                let Ok(true) = spinor_admissible(&signs) else { continue };
                let dual = spinor_dual(&signs).unwrap();
                let diffs: Vec<usize> = (0..m).filter(|&k| signs[k] != dual[k]).collect();
                assert_eq!(diffs.len(), 1, "{signs:?}");
                // The dual sits on the other component: odd number of minus.
                assert_eq!(dual.iter().filter(|&&s| s < 0).count() % 2, 1);
            }
        }
    }

    #[test]
    fn iso_suitable_examples() {
        assert!(iso_suitable(1, 3, 5));
        assert!(!iso_suitable(-1, 3, 8));
        assert!(!iso_suitable(-1, 2, 1));
        assert!(iso_suitable(-1, 2, 4));
        // Parity flip at fixed rank.
        assert_ne!(iso_suitable(-1, 2, 6), iso_suitable(-1, 3, 6));
    }

    fn hyperbolic_form(blocks: usize, zeros: usize, epsilon: i8) -> BilinearFormSpec {
        let n = 2 * blocks + zeros;
        let mut m = vec![vec![ratmat::rat(0); n]; n];
        for b in 0..blocks {
            m[2 * b][2 * b + 1] = ratmat::rat(1);
            m[2 * b + 1][2 * b] = ratmat::rat(i64::from(epsilon));
        }
        BilinearFormSpec::new(epsilon, m).unwrap()
    }

    #[test]
    fn coiso_dual_hyperbolic_examples() {
        let form = hyperbolic_form(2, 0, 1);
        assert_eq!(form.rank(), 4);
        // L spanned by the first hyperbolic basis vector: a hyperplane.
        let e1 = vec![ratmat::rat(1), ratmat::rat(0), ratmat::rat(0), ratmat::rat(0)];
        let perp = coiso_dual(&form, &[e1.clone()]).unwrap();
        assert_eq!(perp.len(), 3);
        for v in &perp {
            assert!(num_traits::Zero::is_zero(&form.apply(&e1, v)));
        }
        // A subspace inside the kernel is degenerate.
        let degenerate = hyperbolic_form(1, 2, 1);
        let e3 = vec![ratmat::rat(0), ratmat::rat(0), ratmat::rat(1), ratmat::rat(0)];
        assert_eq!(coiso_dual(&degenerate, &[e3]), Err(ClosedFormError::DegeneratePoint));
        // Non-isotropic input is rejected.
        let sym = BilinearFormSpec::new(1, ratmat::from_i64(&[vec![1, 0], vec![0, 1]])).unwrap();
        let e = vec![ratmat::rat(1), ratmat::rat(0)];
        assert_eq!(coiso_dual(&sym, &[e]), Err(ClosedFormError::NotIsotropic));
    }

    #[test]
    fn form_spec_validation() {
        assert!(BilinearFormSpec::new(1, ratmat::from_i64(&[vec![0, 1], vec![-1, 0]])).is_err());
        assert!(BilinearFormSpec::new(-1, ratmat::from_i64(&[vec![0, 1], vec![-1, 0]])).is_ok());
        assert!(BilinearFormSpec::new(2, ratmat::from_i64(&[vec![0]])).is_err());
    }
}

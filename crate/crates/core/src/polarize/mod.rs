//! Per-case polarization non-vanishing rules and the threshold `h0`.
//!
//! The rational map from cotangent directions at a fixed point to the incident
//! Schubert variety is polynomial of a case-dependent degree `d` (`r` for
//! Grassmannians, `p` for spinor varieties, 2 for `E6/P1`, 6 for `E6/P3`).
//! Duality of Schubert varieties is governed by which degree-`d` polarization
//! components are nonzero, and in every fundamental case that non-vanishing is
//! a short combinatorial condition on the cotangent weights involved. This
//! module states those conditions on case-specific labels, attaches labels to
//! the lattice roots by restricting to the marked node's Levi subgroup, and
//! computes the suitability threshold `h0` by brute force over
//! height-filtered label tuples.
//!
//! The split-octonion arithmetic backing the `E6/P1` quadric lives in
//! [`octonion`].

pub mod octonion;

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::quiver::{build_hasse, Quiver};
use crate::rootsys::{Family, RootDatum, WeightVec};

/// A cotangent (conormal-side) weight in its case-specific labeling.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CotangentLabel {
    /// Type A: the couple `(x, y)`, weight `eps_y - eps_x` at the frame of `x_l`.
    GrPair { x: usize, y: usize },
    /// Type D: the wedge `e_i^{eta_i} ^ e_j^{eta_j}`, positions `i < j`.
    SpinPair { i: usize, j: usize },
    /// `E6/P1`: a half-spin weight of the `D5` Levi, five signs.
    HalfSpin([i8; 5]),
    /// `E6/P3`: `e_a (x) (f_i* ^ f_j*)`; `second` picks `e_2` ("blue").
    AltPair { second: bool, i: u8, j: u8 },
}

impl fmt::Display for CotangentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CotangentLabel::GrPair { x, y } => write!(f, "({x},{y})"),
            CotangentLabel::SpinPair { i, j } => write!(f, "({i},{j})"),
            CotangentLabel::HalfSpin(s) => {
                for &x in s {
                    write!(f, "{}", if x > 0 { '+' } else { '-' })?;
                }
                Ok(())
            }
            CotangentLabel::AltPair { second, i, j } => {
                if *second {
                    write!(f, "_{i}{j}")
                } else {
                    write!(f, "{i}{j}")
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolarizeError {
    WrongArity { expected: usize, got: usize },
}

impl fmt::Display for PolarizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolarizeError::WrongArity { expected, got } => {
                write!(f, "wrong arity: expected {expected} labels, got {got}")
            }
        }
    }
}

impl std::error::Error for PolarizeError {}

/// Type A rule: the `r`-linear component indexed by the couples
/// `(x_k, y_k)` is nonzero iff all `2r` indices are pairwise distinct; the
/// target is then the sorted list of the `y_k`.
pub fn rule_a(r: usize, taus: &[(usize, usize)]) -> Result<Option<Vec<usize>>, PolarizeError> {
    if taus.len() != r {
        return Err(PolarizeError::WrongArity { expected: r, got: taus.len() });
    }
    let mut seen = BTreeSet::new();
    for &(x, y) in taus {
        if !seen.insert(x) || !seen.insert(y) {
            return Ok(None);
        }
    }
    let mut ys: Vec<usize> = taus.iter().map(|&(_, y)| y).collect();
    ys.sort_unstable();
    Ok(Some(ys))
}

/// Type D rule: the `p`-linear component indexed by position pairs
/// `(x_k, y_k)` inside `1..=2p+1` is nonzero iff the `2p` positions are
/// pairwise distinct; the target is the single sign flip at the missing
/// position `m`.
pub fn rule_d(p: usize, taus: &[(usize, usize)]) -> Result<Option<usize>, PolarizeError> {
    if taus.len() != p {
        return Err(PolarizeError::WrongArity { expected: p, got: taus.len() });
    }
    let m = 2 * p + 1;
    let mut seen = BTreeSet::new();
    for &(x, y) in taus {
        debug_assert!(x < y && 1 <= x && y <= m);
        if !seen.insert(x) || !seen.insert(y) {
            return Ok(None);
        }
    }
    let missing = (1..=m).find(|k| !seen.contains(k)).expect("exactly one index missing");
    Ok(Some(missing))
}

/// `E6/P1` rule: the bilinear component on two half-spin weights is nonzero
/// iff they agree in exactly one of the five positions; the target is then
/// the sum `eta + eta'` (a single `+-2` in the common slot).
pub fn rule_e6p1(eta: &[i8; 5], eta2: &[i8; 5]) -> Option<[i8; 5]> {
    let common = (0..5).filter(|&k| eta[k] == eta2[k]).count();
    if common != 1 {
        return None;
    }
    let mut sum = [0i8; 5];
    for k in 0..5 {
        sum[k] = eta[k] + eta2[k];
    }
    Some(sum)
}

/// One `E6/P3` label: `(second, {i, j})` with `i < j` in `1..=5`.
pub type AltLabel = (bool, u8, u8);

// The degree-6 rational map behind the E6/P3 rule sends a pair of
// alternating forms (m1, m2) on a 5-space to the plane spanned by
// m2 * ker(m1) and m1 * ker(m2), where ker is the Pfaffian kernel vector
// (quadratic in the entries). Pluecker coordinates of that plane are
// degree-6 polynomials; a polarization component is nonzero exactly when
// the corresponding monomial coefficient is nonzero. Individual
// arrangements of a label multiset (two reds into a Pfaffian, one red into
// the other factor, and dually for blues) can cancel in the signed sum, so
// the coefficients are expanded symbolically once and cached.

fn pair_index(i: u8, j: u8) -> usize {
    debug_assert!(1 <= i && i < j && j <= 5);
    let i = usize::from(i) - 1;
    let j = usize::from(j) - 1;
    // (0,1) (0,2) (0,3) (0,4) (1,2) (1,3) (1,4) (2,3) (2,4) (3,4)
    (0..i).map(|k| 4 - k).sum::<usize>() + (j - i - 1)
}

fn pair_of_index(t: usize) -> (u8, u8) {
    let mut t = t;
    for i in 0..5u8 {
        let row = usize::from(4 - i);
        if t < row {
            return (i + 1, i + 2 + t as u8);
        }
        t -= row;
    }
    unreachable!()
}

fn label_index(second: bool, i: u8, j: u8) -> u8 {
    (pair_index(i, j) + if second { 10 } else { 0 }) as u8
}

/// Sparse degree-6 monomial (coefficient, sorted variable ids).
type Monomial = (i64, Vec<u8>);

fn mono_mul(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (ca, va) in a {
        for (cb, vb) in b {
            let mut vars = va.clone();
            vars.extend_from_slice(vb);
            vars.sort_unstable();
            out.push((ca * cb, vars));
        }
    }
    out
}

/// Signed entry of an alternating matrix of color `a` as a monomial list.
fn entry(second: bool, row: usize, col: usize) -> Vec<Monomial> {
    match row.cmp(&col) {
        std::cmp::Ordering::Equal => Vec::new(),
        std::cmp::Ordering::Less => {
            vec![(1, vec![label_index(second, row as u8 + 1, col as u8 + 1)])]
        }
        std::cmp::Ordering::Greater => {
            vec![(-1, vec![label_index(second, col as u8 + 1, row as u8 + 1)])]
        }
    }
}

/// Pfaffian kernel vector of the 5x5 alternating matrix of one color:
/// entry `i` is `(-1)^i` times the Pfaffian of the matrix with row and
/// column `i` removed.
fn pfaffian_kernel_sym(second: bool) -> Vec<Vec<Monomial>> {
    (0..5)
        .map(|i| {
            let r: Vec<usize> = (0..5).filter(|&k| k != i).collect();
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let mut out = Vec::new();
            for (c, (x, y), (z, w)) in [
                (1, (r[0], r[1]), (r[2], r[3])),
                (-1, (r[0], r[2]), (r[1], r[3])),
                (1, (r[0], r[3]), (r[1], r[2])),
            ] {
                for (coeff, vars) in mono_mul(&entry(second, x, y), &entry(second, z, w)) {
                    out.push((sign * c * coeff, vars));
                }
            }
            out
        })
        .collect()
}

/// Multiset of six label ids -> nonzero coefficient per target pair.
fn build_polar_table() -> std::collections::HashMap<[u8; 6], [i64; 10]> {
    let k_red = pfaffian_kernel_sym(false);
    let k_blue = pfaffian_kernel_sym(true);
    // v1 = m_blue * k_red, v2 = m_red * k_blue; both cubic.
    let apply = |second: bool, kernel: &[Vec<Monomial>]| -> Vec<Vec<Monomial>> {
        (0..5)
            .map(|i| {
                let mut out = Vec::new();
                for j in 0..5 {
                    out.extend(mono_mul(&entry(second, i, j), &kernel[j]));
                }
                out
            })
            .collect()
    };
    let v1 = apply(true, &k_red);
    let v2 = apply(false, &k_blue);
    let mut table: std::collections::HashMap<[u8; 6], [i64; 10]> =
        std::collections::HashMap::new();
    for m in 0..5usize {
        for n in m + 1..5 {
            let t = pair_index(m as u8 + 1, n as u8 + 1);
            let mut add = |monos: Vec<Monomial>, sign: i64| {
                for (c, vars) in monos {
                    let key: [u8; 6] = vars.as_slice().try_into().expect("degree 6");
                    table.entry(key).or_default()[t] += sign * c;
                }
            };
            add(mono_mul(&v1[m], &v2[n]), 1);
            add(mono_mul(&v1[n], &v2[m]), -1);
        }
    }
    table.retain(|_, coeffs| coeffs.iter().any(|&c| c != 0));
    table
}

fn polar_table() -> &'static std::collections::HashMap<[u8; 6], [i64; 10]> {
    static TABLE: std::sync::OnceLock<std::collections::HashMap<[u8; 6], [i64; 10]>> =
        std::sync::OnceLock::new();
    TABLE.get_or_init(build_polar_table)
}

/// `E6/P3` rule: the degree-6 polarization on six labels (necessarily three
/// of each color, paired off as two Pfaffian factors and one transport
/// factor per color) is nonzero for the target `{m, n}` iff the signed sum
/// over all such arrangements survives cancellation. Targets with nonzero
/// coefficient are returned; by weight additivity there is at most one.
pub fn rule_e6p3(taus: &[AltLabel]) -> Result<BTreeSet<(u8, u8)>, PolarizeError> {
    if taus.len() != 6 {
        return Err(PolarizeError::WrongArity { expected: 6, got: taus.len() });
    }
    let mut key: [u8; 6] = [0; 6];
    for (k, &(second, i, j)) in taus.iter().enumerate() {
        key[k] = label_index(second, i, j);
    }
    key.sort_unstable();
    let mut targets = BTreeSet::new();
    if let Some(coeffs) = polar_table().get(&key) {
        for (t, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                targets.insert(pair_of_index(t));
            }
        }
    }
    Ok(targets)
}

/// Which rule a datum uses, with its degree parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleKind {
    Grass { r: usize },
    Spin { p: usize },
    OneCommonSign,
    RedBlue,
}

impl RuleKind {
    pub fn degree(self) -> usize {
        match self {
            RuleKind::Grass { r } => r,
            RuleKind::Spin { p } => p,
            RuleKind::OneCommonSign => 2,
            RuleKind::RedBlue => 6,
        }
    }
}

/// The cotangent weights of one side, as quiver roots with case labels.
///
/// The pairing `iota` between tangent and cotangent weights is the identity
/// on stored roots, so quiver heights transport to labels unchanged.
pub struct LabelSet {
    quiver: Quiver,
    labels: Vec<CotangentLabel>,
    kind: RuleKind,
}

// Levi node orders (1-based, Bourbaki): the D5 inside E6 for nodes 1/6, the
// A1 x A4 inside E6 for nodes 3/5. For the D5 orders the last two entries are
// the fork; this assignment makes the cotangent half-spin labels carry an
// even number of minus signs.
const LEVI_D5_NODE1: [usize; 5] = [6, 5, 4, 3, 2];
const LEVI_D5_NODE6: [usize; 5] = [1, 3, 4, 5, 2];
const LEVI_A4_NODE3: [usize; 4] = [2, 4, 5, 6];
const LEVI_A4_NODE5: [usize; 4] = [1, 3, 4, 2];
const LEVI_A1_NODE3: usize = 1;
const LEVI_A1_NODE5: usize = 6;

fn halfspin_label(datum: &RootDatum, order: &[usize; 5], gamma: &WeightVec) -> [i8; 5] {
    let m: Vec<i64> = order.iter().map(|&node| datum.pairing(gamma, node - 1)).collect();
    // Doubled epsilon coordinates of the D5 weight; half-spin entries are +-1.
    let fork = m[3] + m[4];
    let eps2 = [
        2 * (m[0] + m[1] + m[2]) + fork,
        2 * (m[1] + m[2]) + fork,
        2 * m[2] + fork,
        fork,
        m[4] - m[3],
    ];
    let mut signs = [0i8; 5];
    for (k, &e) in eps2.iter().enumerate() {
        assert!(e == 1 || e == -1, "not a half-spin weight: {eps2:?}");
        signs[k] = e as i8;
    }
    signs
}

fn altpair_label(datum: &RootDatum, a1: usize, path: &[usize; 4], gamma: &WeightVec) -> AltLabel {
    let a = datum.pairing(gamma, a1 - 1);
    assert!(a == 1 || a == -1, "not an A1 half weight");
    let m: Vec<i64> = path.iter().map(|&node| datum.pairing(gamma, node - 1)).collect();
    // Path coordinates e_1..e_5 with e_i - e_{i+1} = m_i, e_5 = 0.
    let mut e = [0i64; 5];
    for i in (0..4).rev() {
        e[i] = e[i + 1] + m[i];
    }
    let lo = *e.iter().min().unwrap();
    let pattern: Vec<u8> = (0..5).filter(|&k| e[k] != lo).map(|k| k as u8 + 1).collect();
    let pair: Vec<u8> = match pattern.len() {
        2 => pattern,
        3 => (1..=5).filter(|k| !pattern.contains(k)).collect(),
        _ => panic!("not a wedge-square weight: {e:?}"),
    };
    debug_assert!(e.iter().all(|&x| x == lo || x == lo + 1));
    (a < 0, pair[0], pair[1])
}

impl LabelSet {
    /// Build the labeled cotangent weight set for a datum.
    pub fn new(datum: &RootDatum) -> LabelSet {
        let quiver = build_hasse(datum);
        let (kind, labels) = match datum.family() {
            Family::A { r, .. } => {
                let labels = quiver
                    .vertices()
                    .iter()
                    .map(|g| {
                        let eps = datum.eps_coords_a(g);
                        let x = eps.iter().position(|&e| e > 0).unwrap() + 1;
                        let y = eps.iter().position(|&e| e < 0).unwrap() + 1;
                        CotangentLabel::GrPair { x, y }
                    })
                    .collect();
                (RuleKind::Grass { r }, labels)
            }
            Family::Dspin { p } => {
                let labels = quiver
                    .vertices()
                    .iter()
                    .map(|g| {
                        let eps = datum.eps_coords_d(g);
                        let pos: Vec<usize> =
                            (0..eps.len()).filter(|&k| eps[k] != 0).map(|k| k + 1).collect();
                        debug_assert_eq!(pos.len(), 2);
                        CotangentLabel::SpinPair { i: pos[0], j: pos[1] }
                    })
                    .collect();
                (RuleKind::Spin { p }, labels)
            }
            Family::E6P1 => {
                let order = if datum.marked() == 0 { &LEVI_D5_NODE1 } else { &LEVI_D5_NODE6 };
                let labels = quiver
                    .vertices()
                    .iter()
                    .map(|g| CotangentLabel::HalfSpin(halfspin_label(datum, order, g)))
                    .collect();
                (RuleKind::OneCommonSign, labels)
            }
            Family::E6P3 => {
                let (a1, path) = if datum.marked() == 2 {
                    (LEVI_A1_NODE3, &LEVI_A4_NODE3)
                } else {
                    (LEVI_A1_NODE5, &LEVI_A4_NODE5)
                };
                let labels = quiver
                    .vertices()
                    .iter()
                    .map(|g| {
                        let (second, i, j) = altpair_label(datum, a1, path, g);
                        CotangentLabel::AltPair { second, i, j }
                    })
                    .collect();
                (RuleKind::RedBlue, labels)
            }
        };
        LabelSet { quiver, labels, kind }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.kind.degree()
    }

    pub fn labels(&self) -> &[CotangentLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &CotangentLabel {
        &self.labels[v]
    }

    /// Does some valid degree-`d` multiset exist within `avail`?
    pub fn exists_tuple(&self, avail: &[usize]) -> bool {
        !self.achievable_sums(avail).is_empty()
    }

    /// All achievable target weights over multisets from `avail`, each with
    /// one witness tuple (the first found in deterministic order). Weights
    /// are reported as plain label-weight sums; the caller anchors them.
    pub fn achievable_sums(&self, avail: &[usize]) -> Vec<(WeightVec, Vec<usize>)> {
        let mut out: Vec<(WeightVec, Vec<usize>)> = Vec::new();
        let mut push = |sum: WeightVec, tuple: &[usize]| {
            if !out.iter().any(|(s, _)| *s == sum) {
                out.push((sum, tuple.to_vec()));
            }
        };
        match self.kind {
            RuleKind::Grass { r } => {
                for tuple in avail.iter().copied().combinations_with_replacement(r) {
                    let taus: Vec<(usize, usize)> = tuple
                        .iter()
                        .map(|&v| match self.labels[v] {
                            CotangentLabel::GrPair { x, y } => (x, y),
                            _ => unreachable!(),
                        })
                        .collect();
                    if rule_a(r, &taus).expect("arity by construction").is_some() {
                        push(self.sum_of(&tuple), &tuple);
                    }
                }
            }
            RuleKind::Spin { p } => {
                for tuple in avail.iter().copied().combinations_with_replacement(p) {
                    let taus: Vec<(usize, usize)> = tuple
                        .iter()
                        .map(|&v| match self.labels[v] {
                            CotangentLabel::SpinPair { i, j } => (i, j),
                            _ => unreachable!(),
                        })
                        .collect();
                    if rule_d(p, &taus).expect("arity by construction").is_some() {
                        push(self.sum_of(&tuple), &tuple);
                    }
                }
            }
            RuleKind::OneCommonSign => {
                for tuple in avail.iter().copied().combinations_with_replacement(2) {
                    let (CotangentLabel::HalfSpin(a), CotangentLabel::HalfSpin(b)) =
                        (&self.labels[tuple[0]], &self.labels[tuple[1]])
                    else {
                        unreachable!()
                    };
                    if rule_e6p1(a, b).is_some() {
                        push(self.sum_of(&tuple), &tuple);
                    }
                }
            }
            RuleKind::RedBlue => {
                let reds: Vec<usize> = avail
                    .iter()
                    .copied()
                    .filter(|&v| matches!(self.labels[v], CotangentLabel::AltPair { second: false, .. }))
                    .collect();
                let blues: Vec<usize> = avail
                    .iter()
                    .copied()
                    .filter(|&v| matches!(self.labels[v], CotangentLabel::AltPair { second: true, .. }))
                    .collect();
                let alt = |v: usize| -> AltLabel {
                    match self.labels[v] {
                        CotangentLabel::AltPair { second, i, j } => (second, i, j),
                        _ => unreachable!(),
                    }
                };
                for rt in reds.iter().copied().combinations_with_replacement(3) {
                    for bt in blues.iter().copied().combinations_with_replacement(3) {
                        let taus: Vec<AltLabel> =
                            rt.iter().chain(bt.iter()).map(|&v| alt(v)).collect();
                        let targets = rule_e6p3(&taus).expect("arity by construction");
                        if !targets.is_empty() {
                            debug_assert_eq!(targets.len(), 1, "one target per tuple");
                            let tuple: Vec<usize> =
                                rt.iter().chain(bt.iter()).copied().collect();
                            push(self.sum_of(&tuple), &tuple);
                        }
                    }
                }
            }
        }
        out
    }

    fn sum_of(&self, tuple: &[usize]) -> WeightVec {
        let rank = self.quiver.vertices()[0].0.len();
        let mut sum = WeightVec::zero(rank);
        for &v in tuple {
            sum = sum.add(&self.quiver.vertices()[v]);
        }
        sum
    }

    /// The maximal `h` such that some valid tuple uses only labels of height
    /// at least `h`.
    pub fn compute_h0(&self) -> usize {
        for h in (1..=self.quiver.max_height()).rev() {
            let avail: Vec<usize> = (0..self.labels.len())
                .filter(|&v| self.quiver.height(v) >= h)
                .collect();
            if self.exists_tuple(&avail) {
                return h;
            }
        }
        0
    }
}

/// Convenience wrapper: `h0` for a datum.
pub fn compute_h0(datum: &RootDatum) -> usize {
    LabelSet::new(datum).compute_h0()
}

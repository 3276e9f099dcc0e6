//! Exact root-system, weight-lattice and Weyl-group engine.
//!
//! Covers the three ambient types needed for the fundamental duality pairs:
//! `A_{n-1}` (Grassmannians), `D_{2p+1}` (spinor varieties) and `E6`, in
//! Bourbaki numbering throughout.
//!
//! Weights are stored in simple-root coordinates scaled by a fixed per-case
//! denominator (`n` for type A, `4` for type D, `3` for E6), which clears all
//! fundamental weights to integer vectors and turns the root order
//! `mu <= nu  iff  nu - mu is a nonnegative root combination` into a
//! coordinatewise integer check. Weyl elements are canonicalized by their
//! lattice matrix; reduced words are kept only as provenance.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::ratmat;

/// One of the four fundamental duality pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Grassmannian `G(r, n)` with `2r < n`, dual Grassmannian on the Q side.
    A { r: usize, n: usize },
    /// Spinor varieties `G_Q^{+/-}(2p+1, 4p+2)`, ambient type `D_{2p+1}`.
    Dspin { p: usize },
    /// `E6/P1 <-> E6/P6`.
    E6P1,
    /// `E6/P3 <-> E6/P5`.
    E6P3,
}

/// Which member of the pair a datum describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    P,
    Q,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::P => Side::Q,
            Side::Q => Side::P,
        }
    }
}

/// A weight in scaled simple-root coordinates.
///
/// The true weight is `(1/denom) * sum coords[i] * alpha_i` for the owning
/// datum's denominator. Addition, subtraction and the root order are exact.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVec(pub Vec<i64>);

impl WeightVec {
    pub fn zero(rank: usize) -> WeightVec {
        WeightVec(vec![0; rank])
    }

    pub fn add(&self, other: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> WeightVec {
        WeightVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Root order: `self <= other` iff `other - self` has all coordinates >= 0.
    pub fn leq(&self, other: &WeightVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All coordinates <= 0 and not zero (negative root test).
    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&a| a <= 0)
    }
}

impl fmt::Debug for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{:?}", self.0)
    }
}

/// A Weyl group element as an integer matrix on scaled root coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    /// Row-major `rank x rank`; column `j` is the image of `alpha_j`.
    matrix: Vec<i64>,
    rank: usize,
    /// Optional reduced word (1-based simple reflection indices), provenance only.
    word: Option<Vec<u8>>,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.word {
            Some(w) => write!(f, "W{w:?}"),
            None => write!(f, "W<matrix>"),
        }
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> WeylElement {
        let mut matrix = vec![0; rank * rank];
        for i in 0..rank {
            matrix[i * rank + i] = 1;
        }
        WeylElement { matrix, rank, word: Some(Vec::new()) }
    }

    pub fn word(&self) -> Option<&[u8]> {
        self.word.as_deref()
    }

    /// Apply to a weight: matrix-vector product on scaled coordinates.
    pub fn act(&self, v: &WeightVec) -> WeightVec {
        let n = self.rank;
        let mut out = vec![0i64; n];
        for (k, o) in out.iter_mut().enumerate() {
            let mut acc = 0i64;
            for j in 0..n {
                acc += self.matrix[k * n + j] * v.0[j];
            }
            *o = acc;
        }
        WeightVec(out)
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank;
        let mut matrix = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0i64;
                for k in 0..n {
                    acc += self.matrix[i * n + k] * other.matrix[k * n + j];
                }
                matrix[i * n + j] = acc;
            }
        }
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => {
                let mut w = a.clone();
                w.extend_from_slice(b);
                Some(w)
            }
            _ => None,
        };
        WeylElement { matrix, rank: n, word }
    }

    /// Exact inverse (Weyl matrices are unimodular).
    pub fn inverse(&self) -> WeylElement {
        let n = self.rank;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| self.matrix[i * n..(i + 1) * n].to_vec())
            .collect();
        let inv = ratmat::inverse(&ratmat::from_i64(&rows)).expect("Weyl matrix is invertible");
        let mut matrix = vec![0i64; n * n];
        for (i, row) in inv.iter().enumerate() {
            let ints = ratmat::to_i64(row);
            matrix[i * n..(i + 1) * n].copy_from_slice(&ints);
        }
        let word = self.word.as_ref().map(|w| w.iter().rev().copied().collect());
        WeylElement { matrix, rank: n, word }
    }

    pub fn is_identity(&self) -> bool {
        let n = self.rank;
        (0..n).all(|i| (0..n).all(|j| self.matrix[i * n + j] == i64::from(i == j)))
    }

    /// Same lattice automorphism, ignoring word provenance.
    pub fn same_element(&self, other: &WeylElement) -> bool {
        self.matrix == other.matrix
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootsysError {
    /// Case parameters out of range.
    InvalidParams(String),
    /// Weight not in the Weyl orbit of the expected extreme weight.
    NotExtreme,
    /// A Schubert index that does not fit its datum.
    InvalidIndex(String),
}

impl fmt::Display for RootsysError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootsysError::InvalidParams(s) => write!(f, "invalid case parameters: {s}"),
            RootsysError::NotExtreme => write!(f, "weight is not extreme for this datum"),
            RootsysError::InvalidIndex(s) => write!(f, "invalid Schubert index: {s}"),
        }
    }
}

impl std::error::Error for RootsysError {}

/// Index of a Schubert variety, encoded per case.
///
/// * type A (either side): strictly increasing list `l_1 < ... < l_r` in `1..=n`;
/// * type D (either side): sign sequence of length `2p+1`, odd number of `+`
///   on the P side, odd number of `-` on the Q side;
/// * E6 (either side): reduced word of the minimal coset representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchubertIndex {
    List(Vec<usize>),
    Signs(Vec<i8>),
    Word(Vec<u8>),
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchubertIndex::List(l) => {
                let parts: Vec<String> = l.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
            SchubertIndex::Signs(s) => {
                for &x in s {
                    write!(f, "{}", if x > 0 { '+' } else { '-' })?;
                }
                Ok(())
            }
            SchubertIndex::Word(w) => {
                let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

/// Root datum of one side of a fundamental pair: root system plus marked node.
#[derive(Clone, Debug)]
pub struct RootDatum {
    family: Family,
    side: Side,
    rank: usize,
    denom: i64,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>` (simply laced, so symmetric).
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<WeightVec>,
    positive_roots: Vec<WeightVec>,
    fundamental_weights: Vec<WeightVec>,
    /// 0-based index of the marked simple node.
    marked: usize,
}

fn a_cartan(rank: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        c[i][i] = 2;
        if i + 1 < rank {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    c
}

fn d_cartan(m: usize) -> Vec<Vec<i64>> {
    // alpha_i = e_i - e_{i+1} for i < m, alpha_m = e_{m-1} + e_m.
    let mut c = vec![vec![0i64; m]; m];
    for i in 0..m {
        c[i][i] = 2;
    }
    for i in 0..m.saturating_sub(2) {
        c[i][i + 1] = -1;
        c[i + 1][i] = -1;
    }
    c[m - 3][m - 1] = -1;
    c[m - 1][m - 3] = -1;
    c
}

fn e6_cartan() -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; 6]; 6];
    for i in 0..6 {
        c[i][i] = 2;
    }
    for &(a, b) in &[(1usize, 3usize), (3, 4), (4, 5), (5, 6), (2, 4)] {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    }
    c
}

impl RootDatum {
    /// Build the P-side datum of a fundamental pair.
    pub fn new(family: Family) -> Result<RootDatum, RootsysError> {
        RootDatum::for_side(family, Side::P)
    }

    /// Build the datum for a given side of the pair.
    pub fn for_side(family: Family, side: Side) -> Result<RootDatum, RootsysError> {
        let (rank, denom, cartan, p_marked, q_marked) = match family {
            Family::A { r, n } => {
                if r == 0 || 2 * r >= n {
                    return Err(RootsysError::InvalidParams(format!(
                        "type A needs 1 <= r and 2r < n, got r={r}, n={n}"
                    )));
                }
                (n - 1, n as i64, a_cartan(n - 1), r - 1, n - r - 1)
            }
            Family::Dspin { p } => {
                if p == 0 {
                    return Err(RootsysError::InvalidParams("type D needs p >= 1".into()));
                }
                let m = 2 * p + 1;
                (m, 4, d_cartan(m), m - 1, m - 2)
            }
            Family::E6P1 => (6, 3, e6_cartan(), 0, 5),
            Family::E6P3 => (6, 3, e6_cartan(), 2, 4),
        };
        let marked = match side {
            Side::P => p_marked,
            Side::Q => q_marked,
        };
        let denom_scale = denom;
        let simple_roots: Vec<WeightVec> = (0..rank)
            .map(|i| {
                let mut v = vec![0i64; rank];
                v[i] = denom_scale;
                WeightVec(v)
            })
            .collect();
        let positive_roots = positive_roots_by_closure(rank, &cartan, denom_scale);
        let fundamental_weights = fundamental_weights_from_cartan(&cartan, denom_scale);
        Ok(RootDatum {
            family,
            side,
            rank,
            denom,
            cartan,
            simple_roots,
            positive_roots,
            fundamental_weights,
            marked,
        })
    }

    /// The opposite side of the same pair.
    pub fn dual(&self) -> RootDatum {
        RootDatum::for_side(self.family, self.side.flip()).expect("valid family stays valid")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// 0-based marked node.
    pub fn marked(&self) -> usize {
        self.marked
    }

    pub fn simple_roots(&self) -> &[WeightVec] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[WeightVec] {
        &self.positive_roots
    }

    pub fn fundamental_weights(&self) -> &[WeightVec] {
        &self.fundamental_weights
    }

    /// Highest weight of the minimal projective embedding of this side.
    pub fn marked_fundamental_weight(&self) -> &WeightVec {
        &self.fundamental_weights[self.marked]
    }

    /// `<v, alpha_i^vee>` for 0-based `i`, exact.
    pub fn pairing(&self, v: &WeightVec, i: usize) -> i64 {
        let s: i64 = (0..self.rank).map(|j| self.cartan[i][j] * v.0[j]).sum();
        debug_assert_eq!(s % self.denom, 0, "non-lattice weight in pairing");
        s / self.denom
    }

    /// Reflection `s_i` applied to a weight.
    pub fn reflect(&self, i: usize, v: &WeightVec) -> WeightVec {
        let c = self.pairing(v, i);
        let mut out = v.clone();
        out.0[i] -= c * self.denom;
        out
    }

    /// The simple reflection `s_i` (0-based) as a Weyl element.
    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let n = self.rank;
        let mut matrix = vec![0i64; n * n];
        for k in 0..n {
            matrix[k * n + k] = 1;
        }
        for j in 0..n {
            matrix[i * n + j] -= self.cartan[i][j];
        }
        WeylElement { matrix, rank: n, word: Some(vec![(i + 1) as u8]) }
    }

    /// Build a Weyl element from a 1-based word, leftmost letter applied last.
    pub fn from_word(&self, word: &[u8]) -> Result<WeylElement, RootsysError> {
        let mut w = WeylElement::identity(self.rank);
        for &i in word {
            if i == 0 || i as usize > self.rank {
                return Err(RootsysError::InvalidIndex(format!(
                    "reflection index {i} out of range 1..={}",
                    self.rank
                )));
            }
            w = w.compose(&self.simple_reflection(i as usize - 1));
        }
        Ok(w)
    }

    /// Positive roots sent to negative roots by `w`; `|result| = length(w)`.
    pub fn inversion_roots(&self, w: &WeylElement) -> Vec<WeightVec> {
        self.positive_roots
            .iter()
            .filter(|g| w.act(g).is_negative())
            .cloned()
            .collect()
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots.iter().filter(|g| w.act(g).is_negative()).count()
    }

    /// Minimal-length representative of `w W_P` for the marked parabolic:
    /// greedy right-descent stripping over the unmarked generators.
    pub fn min_coset_rep(&self, w: &WeylElement) -> WeylElement {
        let mut cur = w.clone();
        'outer: loop {
            for j in 0..self.rank {
                if j == self.marked {
                    continue;
                }
                if cur.act(&self.simple_roots[j]).is_negative() {
                    cur = cur.compose(&self.simple_reflection(j));
                    continue 'outer;
                }
            }
            break;
        }
        cur
    }

    /// Lexicographically smallest reduced word (greedy smallest left descent).
    pub fn canonical_word(&self, w: &WeylElement) -> Vec<u8> {
        let mut inv = w.inverse();
        let mut word = Vec::new();
        while !inv.is_identity() {
            let j = (0..self.rank)
                .find(|&j| inv.act(&self.simple_roots[j]).is_negative())
                .expect("non-identity element has a descent");
            word.push((j + 1) as u8);
            inv = inv.compose(&self.simple_reflection(j));
        }
        word
    }

    /// Bruhat order on Weyl elements (standard lifting recursion).
    pub fn bruhat_leq(&self, u: &WeylElement, w: &WeylElement) -> bool {
        let lu = self.length(u);
        let lw = self.length(w);
        self.bruhat_leq_inner(u.clone(), lu, w.clone(), lw)
    }

    fn bruhat_leq_inner(&self, u: WeylElement, lu: usize, w: WeylElement, lw: usize) -> bool {
        if lu > lw {
            return false;
        }
        if lu == lw {
            return u.same_element(&w);
        }
        // Find a left descent of w: l(s_i w) < l(w).
        for i in 0..self.rank {
            let siw = self.simple_reflection(i).compose(&w);
            let lsiw = self.length(&siw);
            if lsiw < lw {
                let siu = self.simple_reflection(i).compose(&u);
                let lsiu = self.length(&siu);
                if lsiu < lu {
                    return self.bruhat_leq_inner(siu, lsiu, siw, lsiw);
                }
                return self.bruhat_leq_inner(u, lu, siw, lsiw);
            }
        }
        unreachable!("w with positive length has a descent");
    }

    /// Bruhat order on cosets via minimal representatives.
    pub fn coset_leq(&self, a: &SchubertIndex, b: &SchubertIndex) -> Result<bool, RootsysError> {
        let u = self.index_to_min_rep(a)?;
        let w = self.index_to_min_rep(b)?;
        Ok(self.bruhat_leq(&u, &w))
    }

    /// Full Weyl orbit of a weight, BFS order (deterministic).
    pub fn orbit(&self, start: &WeightVec) -> Vec<WeightVec> {
        let mut seen: HashSet<WeightVec> = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start.clone());
        while let Some(v) = queue.pop_front() {
            out.push(v.clone());
            for i in 0..self.rank {
                let r = self.reflect(i, &v);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        out
    }

    // ---- epsilon-coordinate views (types A and D) ----

    /// Type A: `denom`-scaled trace-zero epsilon coordinates (length n).
    pub fn eps_coords_a(&self, v: &WeightVec) -> Vec<i64> {
        let n = self.rank + 1;
        let mut eps = vec![0i64; n];
        for k in 0..n {
            let prev = if k == 0 { 0 } else { v.0[k - 1] };
            let cur = if k < self.rank { v.0[k] } else { 0 };
            eps[k] = cur - prev;
        }
        eps
    }

    /// Type A inverse: scaled epsilon coordinates (summing to 0) to a weight.
    pub fn weight_from_eps_a(&self, eps: &[i64]) -> WeightVec {
        debug_assert_eq!(eps.iter().sum::<i64>(), 0);
        let mut v = vec![0i64; self.rank];
        let mut acc = 0;
        for j in 0..self.rank {
            acc += eps[j];
            v[j] = acc;
        }
        WeightVec(v)
    }

    /// Type D: `denom`-scaled epsilon coordinates (length m).
    pub fn eps_coords_d(&self, v: &WeightVec) -> Vec<i64> {
        let m = self.rank;
        let mut eps = vec![0i64; m];
        for k in 0..m - 2 {
            let prev = if k == 0 { 0 } else { v.0[k - 1] };
            eps[k] = v.0[k] - prev;
        }
        eps[m - 2] = v.0[m - 2] - v.0[m - 3] + v.0[m - 1];
        eps[m - 1] = v.0[m - 1] - v.0[m - 2];
        eps
    }

    /// Type D inverse: scaled epsilon coordinates to a weight.
    pub fn weight_from_eps_d(&self, eps: &[i64]) -> WeightVec {
        let m = self.rank;
        let mut v = vec![0i64; m];
        let mut acc = 0;
        for k in 0..m - 2 {
            acc += eps[k];
            v[k] = acc;
        }
        let base = if m >= 3 { v[m - 3] } else { 0 };
        let s = base + eps[m - 2] + eps[m - 1];
        let d = base + eps[m - 2] - eps[m - 1];
        debug_assert!(s % 2 == 0 && d % 2 == 0, "non-lattice epsilon data");
        v[m - 1] = s / 2;
        v[m - 2] = d / 2;
        WeightVec(v)
    }

    // ---- Schubert indices ----

    /// Check an index against this datum (ranges, monotonicity, parity,
    /// reduced minimal word).
    pub fn validate_index(&self, idx: &SchubertIndex) -> Result<(), RootsysError> {
        match (self.family, idx) {
            (Family::A { r, n }, SchubertIndex::List(l)) => {
                if l.len() != r {
                    return Err(RootsysError::InvalidIndex(format!(
                        "expected {r} entries, got {}",
                        l.len()
                    )));
                }
                for (i, &x) in l.iter().enumerate() {
                    if x < 1 || x > n {
                        return Err(RootsysError::InvalidIndex(format!("entry {x} out of 1..={n}")));
                    }
                    if i > 0 && l[i - 1] >= x {
                        return Err(RootsysError::InvalidIndex("list not strictly increasing".into()));
                    }
                }
                Ok(())
            }
            (Family::Dspin { p }, SchubertIndex::Signs(s)) => {
                let m = 2 * p + 1;
                if s.len() != m {
                    return Err(RootsysError::InvalidIndex(format!(
                        "expected {m} signs, got {}",
                        s.len()
                    )));
                }
                if s.iter().any(|&x| x != 1 && x != -1) {
                    return Err(RootsysError::InvalidIndex("signs must be +1/-1".into()));
                }
                let plus = s.iter().filter(|&&x| x > 0).count();
                match self.side {
                    Side::P if plus % 2 == 1 => Ok(()),
                    Side::Q if (m - plus) % 2 == 1 => Ok(()),
                    _ => Err(RootsysError::InvalidIndex(format!(
                        "wrong sign parity for the {:?} side",
                        self.side
                    ))),
                }
            }
            (Family::E6P1 | Family::E6P3, SchubertIndex::Word(word)) => {
                let w = self.from_word(word)?;
                if self.length(&w) != word.len() {
                    return Err(RootsysError::InvalidIndex("word is not reduced".into()));
                }
                if !self.min_coset_rep(&w).same_element(&w) {
                    return Err(RootsysError::InvalidIndex(
                        "word is not a minimal coset representative".into(),
                    ));
                }
                Ok(())
            }
            _ => Err(RootsysError::InvalidIndex("index kind does not match case".into())),
        }
    }

    /// Weight of the T-fixed point indexed by `idx` in this side's minimal
    /// projective embedding.
    pub fn index_to_weight(&self, idx: &SchubertIndex) -> Result<WeightVec, RootsysError> {
        self.validate_index(idx)?;
        match (self.family, idx) {
            (Family::A { r, n }, SchubertIndex::List(l)) => {
                let r = r as i64;
                let sign = if self.side == Side::P { 1 } else { -1 };
                let eps: Vec<i64> = (1..=n)
                    .map(|k| sign * (if l.contains(&k) { n as i64 - r } else { -r }))
                    .collect();
                Ok(self.weight_from_eps_a(&eps))
            }
            (Family::Dspin { .. }, SchubertIndex::Signs(s)) => {
                let eps: Vec<i64> = s.iter().map(|&x| 2 * i64::from(x)).collect();
                Ok(self.weight_from_eps_d(&eps))
            }
            (_, SchubertIndex::Word(word)) => {
                let w = self.from_word(word)?;
                Ok(w.act(self.marked_fundamental_weight()))
            }
            _ => unreachable!("validated above"),
        }
    }

    /// Invert the orbit map: the minimal coset representative `x` with
    /// `x . mu0 = t` (`mu0` the marked fundamental weight), encoded per case.
    pub fn extreme_weight_to_coset(&self, t: &WeightVec) -> Result<SchubertIndex, RootsysError> {
        match self.family {
            Family::A { r, n } => {
                let eps = self.eps_coords_a(t);
                let (inside, outside) = match self.side {
                    Side::P => (n as i64 - r as i64, -(r as i64)),
                    Side::Q => (r as i64 - n as i64, r as i64),
                };
                let mut list = Vec::new();
                for (k, &e) in eps.iter().enumerate() {
                    if e == inside {
                        list.push(k + 1);
                    } else if e != outside {
                        return Err(RootsysError::NotExtreme);
                    }
                }
                if list.len() != r {
                    return Err(RootsysError::NotExtreme);
                }
                Ok(SchubertIndex::List(list))
            }
            Family::Dspin { .. } => {
                let eps = self.eps_coords_d(t);
                let mut signs = Vec::with_capacity(self.rank);
                for &e in &eps {
                    match e {
                        2 => signs.push(1i8),
                        -2 => signs.push(-1i8),
                        _ => return Err(RootsysError::NotExtreme),
                    }
                }
                let idx = SchubertIndex::Signs(signs);
                self.validate_index(&idx).map_err(|_| RootsysError::NotExtreme)?;
                Ok(idx)
            }
            Family::E6P1 | Family::E6P3 => {
                let x = self.orbit_walk(t)?;
                let x = self.min_coset_rep(&x);
                Ok(SchubertIndex::Word(self.canonical_word(&x)))
            }
        }
    }

    /// Greedy walk from `t` up to the marked fundamental weight; returns some
    /// `x` with `x . mu0 = t`.
    fn orbit_walk(&self, t: &WeightVec) -> Result<WeylElement, RootsysError> {
        let target = self.marked_fundamental_weight().clone();
        let mut cur = t.clone();
        let mut word: Vec<u8> = Vec::new();
        let cap = 4 * self.positive_roots.len() + 4;
        while cur != target {
            let Some(i) = (0..self.rank).find(|&i| self.pairing(&cur, i) < 0) else {
                return Err(RootsysError::NotExtreme);
            };
            cur = self.reflect(i, &cur);
            word.push((i + 1) as u8);
            if word.len() > cap {
                return Err(RootsysError::NotExtreme);
            }
        }
        self.from_word(&word)
    }

    /// Minimal coset representative for an index.
    pub fn index_to_min_rep(&self, idx: &SchubertIndex) -> Result<WeylElement, RootsysError> {
        match idx {
            SchubertIndex::Word(word) => {
                self.validate_index(idx)?;
                self.from_word(word)
            }
            _ => {
                let t = self.index_to_weight(idx)?;
                let x = self.orbit_walk(&t)?;
                Ok(self.min_coset_rep(&x))
            }
        }
    }

    /// All cosets of `W/W_marked` as Schubert indices, deterministic order.
    pub fn enumerate_cosets(&self) -> Vec<SchubertIndex> {
        match self.family {
            Family::A { r, n } => {
                use itertools::Itertools;
                (1..=n).combinations(r).map(SchubertIndex::List).collect()
            }
            Family::Dspin { p } => {
                let m = 2 * p + 1;
                let mut out = Vec::new();
                for mask in 0u32..(1 << m) {
                    let signs: Vec<i8> =
                        (0..m).map(|k| if mask & (1 << k) == 0 { 1 } else { -1 }).collect();
                    let idx = SchubertIndex::Signs(signs);
                    if self.validate_index(&idx).is_ok() {
                        out.push(idx);
                    }
                }
                out
            }
            Family::E6P1 | Family::E6P3 => {
                let orbit = self.orbit(self.marked_fundamental_weight());
                let mut words: Vec<Vec<u8>> = orbit
                    .iter()
                    .map(|t| match self.extreme_weight_to_coset(t) {
                        Ok(SchubertIndex::Word(w)) => w,
                        _ => unreachable!("orbit members are extreme"),
                    })
                    .collect();
                words.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
                words.into_iter().map(SchubertIndex::Word).collect()
            }
        }
    }

    /// Number of cosets without enumerating (for size guards).
    pub fn coset_count(&self) -> usize {
        match self.family {
            Family::A { r, n } => {
                let mut acc: usize = 1;
                for i in 0..r {
                    acc = acc * (n - i) / (i + 1);
                }
                acc
            }
            Family::Dspin { p } => 1 << (2 * p),
            Family::E6P1 => 27,
            Family::E6P3 => 216,
        }
    }

    /// Render a weight as rational simple-root coordinates.
    pub fn weight_string(&self, v: &WeightVec) -> String {
        let parts: Vec<String> = v
            .0
            .iter()
            .map(|&c| {
                if c % self.denom == 0 {
                    format!("{}", c / self.denom)
                } else {
                    format!("{c}/{}", self.denom)
                }
            })
            .collect();
        format!("({})", parts.join(","))
    }
}

fn positive_roots_by_closure(rank: usize, cartan: &[Vec<i64>], denom: i64) -> Vec<WeightVec> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..rank {
        let mut v = vec![0i64; rank];
        v[i] = denom;
        seen.insert(v.clone());
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..rank {
            let c: i64 = (0..rank).map(|j| cartan[i][j] * v[j]).sum::<i64>() / denom;
            let mut r = v.clone();
            r[i] -= c * denom;
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut pos: Vec<WeightVec> = seen
        .into_iter()
        .filter(|v| v.iter().all(|&c| c >= 0) && v.iter().any(|&c| c > 0))
        .map(WeightVec)
        .collect();
    // Sort by height then coordinates: deterministic and convenient.
    pos.sort_by_key(|v| (v.0.iter().sum::<i64>(), v.0.clone()));
    pos
}

fn fundamental_weights_from_cartan(cartan: &[Vec<i64>], denom: i64) -> Vec<WeightVec> {
    let rank = cartan.len();
    let inv = ratmat::inverse(&ratmat::from_i64(cartan)).expect("Cartan matrix is invertible");
    (0..rank)
        .map(|k| {
            // omega_k = sum_j (C^{-1})_{jk} alpha_j, scaled by denom.
            let coords: Vec<ratmat::Rat> = (0..rank)
                .map(|j| &inv[j][k] * ratmat::rat(denom))
                .collect();
            WeightVec(ratmat::to_i64(&coords))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum_a(r: usize, n: usize) -> RootDatum {
        RootDatum::new(Family::A { r, n }).unwrap()
    }

    fn datum_d(p: usize) -> RootDatum {
        RootDatum::new(Family::Dspin { p }).unwrap()
    }

    fn datum_e6(node: usize) -> RootDatum {
        match node {
            1 => RootDatum::new(Family::E6P1).unwrap(),
            3 => RootDatum::new(Family::E6P3).unwrap(),
            5 => RootDatum::for_side(Family::E6P3, Side::Q).unwrap(),
            6 => RootDatum::for_side(Family::E6P1, Side::Q).unwrap(),
            _ => panic!("bad node"),
        }
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(datum_a(3, 8).positive_roots().len(), 28); // n(n-1)/2
        assert_eq!(datum_d(2).positive_roots().len(), 20); // m(m-1) for D_5
        assert_eq!(datum_e6(1).positive_roots().len(), 36);
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(RootDatum::new(Family::A { r: 4, n: 8 }).is_err());
        assert!(RootDatum::new(Family::A { r: 0, n: 3 }).is_err());
        assert!(RootDatum::new(Family::Dspin { p: 0 }).is_err());
    }

    #[test]
    fn roots_have_integer_simple_coefficients() {
        for d in [datum_a(2, 5), datum_d(2), datum_e6(1)] {
            for g in d.positive_roots() {
                assert!(g.0.iter().all(|c| c % d.denom() == 0));
            }
        }
    }

    #[test]
    fn act_simple_cases() {
        let d = datum_e6(1);
        let id = WeylElement::identity(6);
        let w1 = d.fundamental_weights()[0].clone();
        assert_eq!(id.act(&w1), w1);
        for i in 0..6 {
            let s = d.simple_reflection(i);
            // s_i(alpha_i) = -alpha_i
            assert_eq!(s.act(&d.simple_roots()[i]), d.simple_roots()[i].neg());
            // s_i fixes the other fundamental weights
            for j in 0..6 {
                if j != i {
                    let w = &d.fundamental_weights()[j];
                    assert_eq!(&s.act(w), w);
                }
            }
        }
    }

    #[test]
    fn act_is_lattice_automorphism() {
        let d = datum_a(2, 5);
        let w = d.from_word(&[1, 3, 2, 4]).unwrap();
        let u = d.fundamental_weights()[1].clone();
        let v = d.positive_roots()[3].clone();
        assert_eq!(w.act(&u.add(&v)), w.act(&u).add(&w.act(&v)));
        assert_eq!(w.inverse().act(&w.act(&v)), v);
    }

    #[test]
    fn lengths_and_inversions() {
        let d = datum_a(1, 3); // A_2
        let id = WeylElement::identity(2);
        assert!(d.inversion_roots(&id).is_empty());
        let s1 = d.simple_reflection(0);
        assert_eq!(d.inversion_roots(&s1), vec![d.simple_roots()[0].clone()]);
        let w0 = d.from_word(&[1, 2, 1]).unwrap();
        assert_eq!(d.length(&w0), 3);
        assert_eq!(d.inversion_roots(&w0).len(), 3);
    }

    #[test]
    fn word_length_matches_inversions() {
        let d = datum_e6(1);
        for word in [vec![6u8, 5, 4, 3, 1], vec![1, 3, 4, 5, 6], vec![2, 4, 5, 3, 4]] {
            let w = d.from_word(&word).unwrap();
            assert_eq!(d.length(&w), word.len(), "word {word:?} should be reduced");
        }
    }

    #[test]
    fn min_coset_rep_examples() {
        let d6 = datum_e6(6);
        let id = WeylElement::identity(6);
        assert!(d6.min_coset_rep(&id).is_identity());
        // An element of W_P reduces to the identity.
        let u = d6.from_word(&[1, 3, 2]).unwrap();
        assert!(d6.min_coset_rep(&u).is_identity());
        // Coset reduction used for the maximal linear subspace of E6/P1.
        let w = d6.from_word(&[6, 5, 4, 3, 1, 3, 4, 5, 6]).unwrap();
        let rep = d6.min_coset_rep(&w);
        let expected = d6.from_word(&[1, 3, 4, 5, 6]).unwrap();
        assert!(rep.same_element(&expected));
        assert_eq!(d6.canonical_word(&rep), vec![1, 3, 4, 5, 6]);
    }

    #[test]
    fn coset_counts_by_orbit() {
        assert_eq!(datum_a(2, 5).enumerate_cosets().len(), 10);
        assert_eq!(datum_d(2).enumerate_cosets().len(), 16);
        assert_eq!(datum_e6(1).enumerate_cosets().len(), 27);
        assert_eq!(datum_e6(6).enumerate_cosets().len(), 27);
        assert_eq!(datum_e6(3).enumerate_cosets().len(), 216);
        assert_eq!(datum_e6(5).enumerate_cosets().len(), 216);
        for d in [datum_a(2, 5), datum_d(2), datum_e6(1), datum_e6(3)] {
            assert_eq!(d.enumerate_cosets().len(), d.coset_count());
        }
    }

    #[test]
    fn extreme_weight_roundtrip() {
        for d in [
            datum_a(2, 5),
            datum_a(3, 8).dual(),
            datum_d(2),
            datum_d(1).dual(),
            datum_e6(1),
            datum_e6(5),
        ] {
            for idx in d.enumerate_cosets() {
                let t = d.index_to_weight(&idx).unwrap();
                assert_eq!(d.extreme_weight_to_coset(&t).unwrap(), idx);
                let w = d.index_to_min_rep(&idx).unwrap();
                assert_eq!(w.act(d.marked_fundamental_weight()), t);
                assert!(d.min_coset_rep(&w).same_element(&w));
            }
        }
    }

    #[test]
    fn extreme_weight_rejects_non_orbit() {
        let d = datum_a(2, 5);
        assert_eq!(
            d.extreme_weight_to_coset(&d.simple_roots()[0]),
            Err(RootsysError::NotExtreme)
        );
    }

    #[test]
    fn e6_dual_side_word_example() {
        // Dual-side coset read off from an extreme weight of V6.
        let d6 = datum_e6(6);
        let x = d6.from_word(&[1, 3, 4, 5, 6]).unwrap();
        let t = x.act(d6.marked_fundamental_weight());
        assert_eq!(
            d6.extreme_weight_to_coset(&t).unwrap(),
            SchubertIndex::Word(vec![1, 3, 4, 5, 6])
        );
    }

    #[test]
    fn identity_coset_is_marked_weight() {
        for d in [datum_a(2, 5), datum_d(2), datum_e6(1), datum_e6(3)] {
            let t = d.marked_fundamental_weight().clone();
            let idx = d.extreme_weight_to_coset(&t).unwrap();
            assert!(d.index_to_min_rep(&idx).unwrap().is_identity());
        }
    }

    #[test]
    fn weight_order_is_antisymmetric() {
        let a = WeightVec(vec![1, 2, 0]);
        let b = WeightVec(vec![1, 3, 0]);
        assert!(a.leq(&b) && !b.leq(&a));
        assert!(a.leq(&a) && b.leq(&b));
    }

    #[test]
    fn bruhat_on_type_a_lists_matches_componentwise_order() {
        let d = datum_a(2, 5);
        let cosets = d.enumerate_cosets();
        for a in &cosets {
            for b in &cosets {
                let (SchubertIndex::List(la), SchubertIndex::List(lb)) = (a, b) else {
                    unreachable!()
                };
                let comp = la.iter().zip(lb).all(|(x, y)| x <= y);
                assert_eq!(d.coset_leq(a, b).unwrap(), comp, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn index_validation() {
        let d = datum_a(3, 8);
        assert!(d.validate_index(&SchubertIndex::List(vec![2, 4, 5])).is_ok());
        assert!(d.validate_index(&SchubertIndex::List(vec![4, 4, 5])).is_err());
        assert!(d.validate_index(&SchubertIndex::List(vec![2, 4])).is_err());
        assert!(d.validate_index(&SchubertIndex::Signs(vec![1, -1])).is_err());
        let dd = datum_d(2);
        assert!(dd.validate_index(&SchubertIndex::Signs(vec![1, 1, 1, 1, 1])).is_ok());
        assert!(dd.validate_index(&SchubertIndex::Signs(vec![1, 1, 1, 1, -1])).is_err());
        assert!(dd.dual().validate_index(&SchubertIndex::Signs(vec![1, 1, 1, 1, -1])).is_ok());
        let e = datum_e6(1);
        assert!(e.validate_index(&SchubertIndex::Word(vec![6, 5, 4, 3, 1])).is_ok());
        assert!(e.validate_index(&SchubertIndex::Word(vec![1, 1])).is_err());
        // Ends with a W_P generator: not a minimal representative.
        assert!(e.validate_index(&SchubertIndex::Word(vec![3])).is_err());
    }
}

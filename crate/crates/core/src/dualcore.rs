//! The duality engine: suitability tests and the brute-force dual oracle.
//!
//! For a Schubert index `[w]` the oracle enumerates degree-many multisets of
//! conormal weights, keeps those on which the polarization rule fires, and
//! reads the dual index off the lowest achievable target weight. Two frames
//! are used:
//!
//! * types A and D work at the dense torus-fixed point of the Schubert
//!   variety, where the conormal weights and the target order are immediate;
//! * the E6 cases (and, as a cross-check, every case) work at the base point:
//!   available weights are the quiver vertices outside the inversion set of
//!   the minimal representative, achievable sums are anchored into the dual
//!   side's weight lattice, and the lowest one is transported by `w` before
//!   inverting the orbit map.
//!
//! Suitability also has a closed criterion: every vertex of the tangent
//! ideal `Q_w` must have height at most `h0 - 1`. Both routes are exposed so
//! they can be checked against each other exhaustively.

use std::fmt;

use itertools::Itertools;

use crate::closedform::{self, ClosedFormError};
use crate::polarize::{rule_a, rule_d, CotangentLabel, LabelSet};
use crate::quiver::{subquiver_qw, Quiver, SubquiverQw};
use crate::rootsys::{Family, RootDatum, RootsysError, SchubertIndex, Side, WeightVec};

/// Result of a duality computation for one Schubert index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityOutcome {
    pub suitable: bool,
    /// Dual index on the opposite side; present iff suitable.
    pub dual: Option<SchubertIndex>,
    /// The lowest achievable target weight (base frame for E6, fixed frame
    /// for A/D), in the dual side's lattice.
    pub lowest_weight: Option<WeightVec>,
    /// One tuple of conormal labels achieving the lowest target.
    pub witness: Option<Vec<CotangentLabel>>,
}

impl DualityOutcome {
    fn unsuitable() -> DualityOutcome {
        DualityOutcome { suitable: false, dual: None, lowest_weight: None, witness: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualError {
    /// The achievable target set has no unique minimum. This is asserted
    /// never to happen; surfacing it is a correctness alarm, not a tie to be
    /// broken.
    MultipleMinima(String),
    /// Enumeration over this space exceeds the documented desk-scale bounds.
    TooLarge { detail: String },
    /// No closed form exists for this case/side.
    UnsupportedMethod(String),
    Index(RootsysError),
    ClosedForm(ClosedFormError),
}

impl fmt::Display for DualError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualError::MultipleMinima(s) => write!(f, "no unique lowest target weight: {s}"),
            DualError::TooLarge { detail } => write!(f, "enumeration too large: {detail}"),
            DualError::UnsupportedMethod(s) => write!(f, "unsupported method: {s}"),
            DualError::Index(e) => write!(f, "{e}"),
            DualError::ClosedForm(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for DualError {}

impl From<RootsysError> for DualError {
    fn from(e: RootsysError) -> DualError {
        DualError::Index(e)
    }
}

impl From<ClosedFormError> for DualError {
    fn from(e: ClosedFormError) -> DualError {
        DualError::ClosedForm(e)
    }
}

/// How to compute a dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Closed form where available (types A and D, P side), oracle otherwise.
    Auto,
    ClosedForm,
    Oracle,
}

/// Per-datum caches for duality computations on one side of a pair.
pub struct DualityEngine {
    datum: RootDatum,
    dual_datum: RootDatum,
    labels: LabelSet,
    h0: usize,
    /// Offset from raw label-weight sums to actual dual-side weights,
    /// anchored so the top achievable target of the identity coset is the
    /// dual side's highest weight.
    anchor: WeightVec,
}

impl DualityEngine {
    pub fn new(datum: RootDatum) -> DualityEngine {
        let labels = LabelSet::new(&datum);
        let dual_datum = datum.dual();
        let all: Vec<usize> = (0..labels.labels().len()).collect();
        let sums = labels.achievable_sums(&all);
        assert!(!sums.is_empty(), "identity coset always has achievable targets");
        let maxima: Vec<&WeightVec> = sums
            .iter()
            .map(|(s, _)| s)
            .filter(|s| sums.iter().all(|(t, _)| !(*s != t && s.leq(t))))
            .collect();
        assert_eq!(maxima.len(), 1, "unique top target at the identity coset");
        let anchor = dual_datum.marked_fundamental_weight().sub(maxima[0]);
        let h0 = labels.compute_h0();
        DualityEngine { datum, dual_datum, labels, h0, anchor }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn dual_datum(&self) -> &RootDatum {
        &self.dual_datum
    }

    pub fn quiver(&self) -> &Quiver {
        self.labels.quiver()
    }

    pub fn labels(&self) -> &LabelSet {
        &self.labels
    }

    pub fn h0(&self) -> usize {
        self.h0
    }

    /// Tangent ideal of an index in this side's quiver.
    pub fn subquiver(&self, idx: &SchubertIndex) -> Result<SubquiverQw, RootsysError> {
        subquiver_qw(self.labels.quiver(), &self.datum, idx)
    }

    /// Height criterion: suitable iff every vertex of `Q_w` has height at
    /// most `h0 - 1` (an empty ideal passes).
    pub fn is_suitable_heights(&self, idx: &SchubertIndex) -> Result<bool, RootsysError> {
        let sub = self.subquiver(idx)?;
        let q = self.labels.quiver();
        Ok(sub.vertex_ids().iter().all(|&v| q.height(v) <= self.h0 - 1))
    }

    /// Conormal labels of the index: fixed-point frame for types A and D,
    /// base frame (complement of the tangent ideal) for the E6 cases.
    pub fn conormal_labels(&self, idx: &SchubertIndex) -> Result<Vec<CotangentLabel>, DualError> {
        self.datum.validate_index(idx)?;
        match (self.datum.family(), idx) {
            (Family::A { .. }, SchubertIndex::List(l)) => Ok(self
                .fixed_frame_pairs_a(l)
                .into_iter()
                .map(|(x, y)| CotangentLabel::GrPair { x, y })
                .collect()),
            (Family::Dspin { .. }, SchubertIndex::Signs(signs)) => Ok(self
                .fixed_frame_pairs_d(signs)
                .into_iter()
                .map(|(i, j)| CotangentLabel::SpinPair { i, j })
                .collect()),
            _ => {
                let avail = self.available_base_labels(idx)?;
                Ok(avail.into_iter().map(|v| self.labels.label(v).clone()).collect())
            }
        }
    }

    fn fixed_frame_pairs_a(&self, l: &[usize]) -> Vec<(usize, usize)> {
        let Family::A { n, .. } = self.datum.family() else { unreachable!() };
        let mut out = Vec::new();
        for &x in l {
            for y in 1..=n {
                if l.contains(&y) {
                    continue;
                }
                let keep = match self.datum.side() {
                    Side::P => y > x,
                    Side::Q => y < x,
                };
                if keep {
                    out.push((x, y));
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn fixed_frame_pairs_d(&self, signs: &[i8]) -> Vec<(usize, usize)> {
        let m = signs.len();
        let mut out = Vec::new();
        for i in 1..=m {
            if signs[i - 1] < 0 {
                continue;
            }
            for j in i + 1..=m {
                out.push((i, j));
            }
        }
        out
    }

    /// Base-frame label ids outside the inversion set of the minimal rep.
    fn available_base_labels(&self, idx: &SchubertIndex) -> Result<Vec<usize>, RootsysError> {
        let w = self.datum.index_to_min_rep(idx)?;
        let inv = self.datum.inversion_roots(&w);
        let q = self.labels.quiver();
        Ok((0..q.vertices().len()).filter(|&v| !inv.contains(&q.vertices()[v])).collect())
    }

    /// The brute-force dual: fixed-point frame for A/D, base frame with
    /// transport for E6.
    pub fn oracle(&self, idx: &SchubertIndex) -> Result<DualityOutcome, DualError> {
        self.datum.validate_index(idx)?;
        match (self.datum.family(), idx) {
            (Family::A { .. }, SchubertIndex::List(l)) => self.oracle_fixed_a(l),
            (Family::Dspin { .. }, SchubertIndex::Signs(signs)) => self.oracle_fixed_d(signs),
            _ => self.oracle_base_frame(idx),
        }
    }

    fn oracle_fixed_a(&self, l: &[usize]) -> Result<DualityOutcome, DualError> {
        let Family::A { r, .. } = self.datum.family() else { unreachable!() };
        let pairs = self.fixed_frame_pairs_a(l);
        // Achievable target lists with one witness tuple each.
        let mut targets: Vec<(Vec<usize>, Vec<(usize, usize)>)> = Vec::new();
        for tuple in pairs.iter().copied().combinations_with_replacement(r) {
            if let Some(ys) = rule_a(r, &tuple).expect("arity r by construction") {
                if !targets.iter().any(|(t, _)| *t == ys) {
                    targets.push((ys, tuple));
                }
            }
        }
        if targets.is_empty() {
            return Ok(DualityOutcome::unsuitable());
        }
        let weighted: Vec<(WeightVec, usize)> = targets
            .iter()
            .enumerate()
            .map(|(k, (ys, _))| {
                let wt = self
                    .dual_datum
                    .index_to_weight(&SchubertIndex::List(ys.clone()))
                    .expect("target lists are valid dual indices");
                (wt, k)
            })
            .collect();
        let k = unique_minimum(&weighted).map_err(DualError::MultipleMinima)?;
        let (ys, tuple) = &targets[k];
        Ok(DualityOutcome {
            suitable: true,
            dual: Some(SchubertIndex::List(ys.clone())),
            lowest_weight: Some(weighted[k].0.clone()),
            witness: Some(tuple.iter().map(|&(x, y)| CotangentLabel::GrPair { x, y }).collect()),
        })
    }

    fn oracle_fixed_d(&self, signs: &[i8]) -> Result<DualityOutcome, DualError> {
        let Family::Dspin { p } = self.datum.family() else { unreachable!() };
        let pairs = self.fixed_frame_pairs_d(signs);
        let mut targets: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
        for tuple in pairs.iter().copied().combinations_with_replacement(p) {
            if let Some(m) = rule_d(p, &tuple).expect("arity p by construction") {
                if !targets.iter().any(|(t, _)| *t == m) {
                    targets.push((m, tuple));
                }
            }
        }
        if targets.is_empty() {
            return Ok(DualityOutcome::unsuitable());
        }
        let flip = |m: usize| -> Vec<i8> {
            let mut out = signs.to_vec();
            out[m - 1] = -out[m - 1];
            out
        };
        let weighted: Vec<(WeightVec, usize)> = targets
            .iter()
            .enumerate()
            .map(|(k, (m, _))| {
                let wt = self
                    .dual_datum
                    .index_to_weight(&SchubertIndex::Signs(flip(*m)))
                    .expect("single flips land on the dual side");
                (wt, k)
            })
            .collect();
        let k = unique_minimum(&weighted).map_err(DualError::MultipleMinima)?;
        let (m, tuple) = &targets[k];
        Ok(DualityOutcome {
            suitable: true,
            dual: Some(SchubertIndex::Signs(flip(*m))),
            lowest_weight: Some(weighted[k].0.clone()),
            witness: Some(tuple.iter().map(|&(i, j)| CotangentLabel::SpinPair { i, j }).collect()),
        })
    }

    /// Base-frame oracle, valid for every case and side.
    pub fn oracle_base_frame(&self, idx: &SchubertIndex) -> Result<DualityOutcome, DualError> {
        let w = self.datum.index_to_min_rep(idx)?;
        let avail = self.available_base_labels(idx)?;
        let sums = self.labels.achievable_sums(&avail);
        if sums.is_empty() {
            return Ok(DualityOutcome::unsuitable());
        }
        let weighted: Vec<(WeightVec, usize)> =
            sums.iter().enumerate().map(|(k, (s, _))| (s.clone(), k)).collect();
        let k = unique_minimum(&weighted).map_err(DualError::MultipleMinima)?;
        let mu1 = self.anchor.add(&weighted[k].0);
        let transported = w.act(&mu1);
        let dual = self.dual_datum.extreme_weight_to_coset(&transported)?;
        Ok(DualityOutcome {
            suitable: true,
            dual: Some(dual),
            lowest_weight: Some(mu1),
            witness: Some(sums[k].1.iter().map(|&v| self.labels.label(v).clone()).collect()),
        })
    }

    /// All achievable target weights of an index in the dual side's lattice
    /// (base frame, before transport); used by the structural checks.
    pub fn achievable_targets(&self, idx: &SchubertIndex) -> Result<Vec<WeightVec>, DualError> {
        let avail = self.available_base_labels(idx)?;
        Ok(self
            .labels
            .achievable_sums(&avail)
            .into_iter()
            .map(|(s, _)| self.anchor.add(&s))
            .collect())
    }

    /// Closed-form dual; types A and D on the P side only.
    pub fn closed_form(&self, idx: &SchubertIndex) -> Result<DualityOutcome, DualError> {
        self.datum.validate_index(idx)?;
        if self.datum.side() != Side::P {
            return Err(DualError::UnsupportedMethod(
                "closed forms are stated for the P side".into(),
            ));
        }
        match (self.datum.family(), idx) {
            (Family::A { r, n }, SchubertIndex::List(l)) => {
                if !closedform::grassmann_suitable(l, r, n) {
                    return Ok(DualityOutcome::unsuitable());
                }
                let dual = closedform::grassmann_dual(l, r, n)?;
                let idx = SchubertIndex::List(dual);
                let wt = self.dual_datum.index_to_weight(&idx)?;
                Ok(DualityOutcome {
                    suitable: true,
                    dual: Some(idx),
                    lowest_weight: Some(wt),
                    witness: None,
                })
            }
            (Family::Dspin { .. }, SchubertIndex::Signs(signs)) => {
                if !closedform::spinor_admissible(signs)? {
                    return Ok(DualityOutcome::unsuitable());
                }
                let dual = closedform::spinor_dual(signs)?;
                let idx = SchubertIndex::Signs(dual);
                let wt = self.dual_datum.index_to_weight(&idx)?;
                Ok(DualityOutcome {
                    suitable: true,
                    dual: Some(idx),
                    lowest_weight: Some(wt),
                    witness: None,
                })
            }
            _ => Err(DualError::UnsupportedMethod(
                "no closed form for the exceptional cases; use the oracle".into(),
            )),
        }
    }

    pub fn analyze(&self, idx: &SchubertIndex, method: Method) -> Result<DualityOutcome, DualError> {
        match method {
            Method::Oracle => self.oracle(idx),
            Method::ClosedForm => self.closed_form(idx),
            Method::Auto => match (self.datum.family(), self.datum.side()) {
                (Family::A { .. } | Family::Dspin { .. }, Side::P) => self.closed_form(idx),
                _ => self.oracle(idx),
            },
        }
    }

    /// Every coset with its outcome, in the datum's deterministic coset
    /// order. Guarded by the documented desk-scale bounds.
    pub fn enumerate_suitable(
        &self,
        method: Method,
    ) -> Result<Vec<(SchubertIndex, DualityOutcome)>, DualError> {
        self.check_scale(method)?;
        let mut out = Vec::new();
        for idx in self.datum.enumerate_cosets() {
            let outcome = self.analyze(&idx, method)?;
            out.push((idx, outcome));
        }
        Ok(out)
    }

    fn check_scale(&self, method: Method) -> Result<(), DualError> {
        let count = self.datum.coset_count();
        let limit = match (self.datum.family(), method) {
            (Family::A { .. }, Method::Oracle) => 1 << 9,
            (Family::A { .. }, _) => 10_000,
            (Family::Dspin { .. }, Method::Oracle) => 1 << 6,
            (Family::Dspin { .. }, _) => 1 << 10,
            _ => 216,
        };
        if count > limit {
            return Err(DualError::TooLarge {
                detail: format!(
                    "{count} cosets exceeds the {limit}-coset bound for {:?} with {method:?}",
                    self.datum.family()
                ),
            });
        }
        Ok(())
    }
}

/// Free-function form of the oracle for one-off queries.
pub fn dual_schubert_oracle(
    datum: &RootDatum,
    idx: &SchubertIndex,
) -> Result<DualityOutcome, DualError> {
    DualityEngine::new(datum.clone()).oracle(idx)
}

/// Index of the unique minimum under the root order, or the offending
/// minimal weights.
fn unique_minimum(weighted: &[(WeightVec, usize)]) -> Result<usize, String> {
    let minimal: Vec<usize> = (0..weighted.len())
        .filter(|&k| {
            weighted
                .iter()
                .all(|(other, _)| !(other != &weighted[k].0 && other.leq(&weighted[k].0)))
        })
        .collect();
    if minimal.len() == 1 {
        Ok(minimal[0])
    } else {
        Err(format!(
            "{} incomparable minimal targets: {:?}",
            minimal.len(),
            minimal.iter().map(|&k| &weighted[k].0).collect::<Vec<_>>()
        ))
    }
}

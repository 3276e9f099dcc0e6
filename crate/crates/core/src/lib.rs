//! Generalized projective duality for Schubert varieties.
//!
//! Classical duality sends a subvariety of projective space to the set of its
//! tangent hyperplanes. The same construction makes sense inside four families
//! of "fundamental" pairs of homogeneous spaces, where the cotangent bundles of
//! both sides resolve a common nilpotent orbit:
//!
//! * the Grassmannian `G(r, n)` and its dual Grassmannian (type A, `2r < n`),
//! * the two spinor varieties of a quadratic space of dimension `4p + 2`,
//! * `E6/P1 <-> E6/P6`,
//! * `E6/P3 <-> E6/P5`.
//!
//! For a Schubert variety the dual is again a Schubert variety, and both the
//! suitability question (does the dual exist?) and the dual index itself are
//! decided by finite weight combinatorics. This crate implements that
//! combinatorics exactly, twice over:
//!
//! * [`closedform`] holds the explicit maps: the Grassmannian list recursion,
//!   the spinor sign-flip rule, and the isotropic-Grassmannian predicates;
//! * [`dualcore`] holds a brute-force oracle that enumerates cotangent weight
//!   tuples, applies the per-case polarization non-vanishing rules from
//!   [`polarize`], and extracts the dual index from the lowest achievable
//!   target weight.
//!
//! [`rootsys`] is the underlying exact root-system and Weyl-group engine
//! (integer lattice arithmetic only), [`quiver`] builds the graded Hasse
//! diagram whose order ideals encode Schubert tangent spaces, and [`verify`]
//! bundles the exhaustive desk-scale cross-checks (criterion equivalences,
//! biduality, octonion identities) behind a reporting interface.
//!
//! No floating point is used anywhere; everything is `i64` lattice arithmetic
//! or `BigRational`.

pub mod closedform;
pub mod dualcore;
pub mod polarize;
pub mod quiver;
mod ratmat;
pub mod rootsys;
pub mod verify;

pub use rootsys::{Family, RootDatum, SchubertIndex, Side, WeightVec, WeylElement};

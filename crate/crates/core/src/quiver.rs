//! The tangent-space Hasse diagram of a fundamental homogeneous space.
//!
//! Vertices are the positive roots `gamma` with coefficient 1 on the marked
//! node; the tangent weight they stand for is `omega - gamma` with `omega` a
//! formal basepoint, so we store the raw roots. There is an arrow `u -> v`
//! exactly when `gamma_u - gamma_v` is a simple root ("arrows going down"),
//! and the height of a vertex is one plus the longest chain of arrows below
//! it, so the unique minimal vertex (the marked simple root itself) sits at
//! height 1.
//!
//! For a Schubert index the subquiver `Q_w` marks the inversion roots of the
//! minimal coset representative; these are exactly the order ideals of the
//! diagram. For `E6/P3` (not cominuscule) only the grade-1 part of the
//! cotangent space appears, which the marked-coefficient-1 filter produces by
//! itself.

use std::fmt::Write as _;

use serde::Serialize;

use crate::rootsys::{RootDatum, RootsysError, SchubertIndex, WeightVec};

/// Graded Hasse diagram of the tangent space at the base point.
#[derive(Clone, Debug)]
pub struct Quiver {
    vertices: Vec<WeightVec>,
    arrows: Vec<(usize, usize)>,
    heights: Vec<usize>,
}

/// An order ideal of a [`Quiver`], as a membership mask over its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubquiverQw {
    members: Vec<bool>,
}

impl SubquiverQw {
    pub fn contains(&self, v: usize) -> bool {
        self.members[v]
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.members.iter().all(|&m| !m)
    }

    pub fn vertex_ids(&self) -> Vec<usize> {
        (0..self.members.len()).filter(|&v| self.members[v]).collect()
    }
}

/// Output format for [`emit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dot,
    Ascii,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownFormat(pub String);

impl std::fmt::Display for UnknownFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "unknown format {:?} (expected dot, ascii or json)", self.0)
    }
}

impl std::error::Error for UnknownFormat {}

impl std::str::FromStr for Format {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Format, UnknownFormat> {
        match s {
            "dot" => Ok(Format::Dot),
            "ascii" => Ok(Format::Ascii),
            "json" => Ok(Format::Json),
            other => Err(UnknownFormat(other.to_string())),
        }
    }
}

/// Build the Hasse diagram for a datum.
pub fn build_hasse(datum: &RootDatum) -> Quiver {
    let marked = datum.marked();
    let denom = datum.denom();
    let mut vertices: Vec<WeightVec> = datum
        .positive_roots()
        .iter()
        .filter(|g| g.0[marked] == denom)
        .cloned()
        .collect();
    vertices.sort_by_key(|v| (v.0.iter().sum::<i64>(), v.0.clone()));
    let simple = datum.simple_roots();
    let mut arrows = Vec::new();
    for (u, gu) in vertices.iter().enumerate() {
        for (v, gv) in vertices.iter().enumerate() {
            if u != v && simple.contains(&gu.sub(gv)) {
                arrows.push((u, v));
            }
        }
    }
    // Height: 1 + longest chain of arrows below. Iterate to a fixed point;
    // the diagrams are tiny.
    let mut heights = vec![1usize; vertices.len()];
    let mut changed = true;
    while changed {
        changed = false;
        for &(u, v) in &arrows {
            if heights[u] < heights[v] + 1 {
                heights[u] = heights[v] + 1;
                changed = true;
            }
        }
    }
    Quiver { vertices, arrows, heights }
}

impl Quiver {
    pub fn vertices(&self) -> &[WeightVec] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn height(&self, v: usize) -> usize {
        self.heights[v]
    }

    pub fn max_height(&self) -> usize {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    pub fn vertex_id(&self, root: &WeightVec) -> Option<usize> {
        self.vertices.iter().position(|g| g == root)
    }

    /// Gradedness: every arrow drops the height by exactly one.
    pub fn is_graded(&self) -> bool {
        self.arrows.iter().all(|&(u, v)| self.heights[u] == self.heights[v] + 1)
    }

    /// Downward closure under arrows.
    pub fn is_order_ideal(&self, sub: &SubquiverQw) -> bool {
        self.arrows
            .iter()
            .all(|&(u, v)| !sub.contains(u) || sub.contains(v))
    }

    pub fn subquiver_from_roots(&self, roots: &[WeightVec]) -> SubquiverQw {
        let members = self.vertices.iter().map(|g| roots.contains(g)).collect();
        SubquiverQw { members }
    }
}

/// The subquiver `Q_w` of a Schubert index: inversion roots of the minimal
/// coset representative, restricted to the diagram's vertex set.
pub fn subquiver_qw(
    quiver: &Quiver,
    datum: &RootDatum,
    idx: &SchubertIndex,
) -> Result<SubquiverQw, RootsysError> {
    let w = datum.index_to_min_rep(idx)?;
    let inv = datum.inversion_roots(&w);
    Ok(quiver.subquiver_from_roots(&inv))
}

#[derive(Serialize)]
struct JsonVertex {
    id: usize,
    height: usize,
    weight: Vec<i64>,
}

#[derive(Serialize)]
struct JsonQuiver {
    vertices: Vec<JsonVertex>,
    arrows: Vec<(usize, usize)>,
    marked: Vec<usize>,
}

/// Render the quiver; `marked` vertices are visually distinguished.
pub fn emit(
    quiver: &Quiver,
    datum: &RootDatum,
    marked: Option<&SubquiverQw>,
    format: Format,
) -> String {
    let denom = datum.denom();
    let root_label = |v: usize| -> String {
        quiver.vertices[v]
            .0
            .iter()
            .map(|c| (c / denom).to_string())
            .collect::<Vec<_>>()
            .join("")
    };
    let is_marked = |v: usize| marked.map(|m| m.contains(v)).unwrap_or(false);
    match format {
        Format::Dot => {
            let mut out = String::from("digraph quiver {\n");
            for v in 0..quiver.vertices.len() {
                let style = if is_marked(v) { ", style=filled, fillcolor=gray" } else { "" };
                let _ = writeln!(
                    out,
                    "  v{v} [label=\"{} h{}\"{}];",
                    root_label(v),
                    quiver.heights[v],
                    style
                );
            }
            for &(u, v) in &quiver.arrows {
                let _ = writeln!(out, "  v{u} -> v{v};");
            }
            out.push_str("}\n");
            out
        }
        Format::Ascii => {
            let mut out = String::new();
            for h in (1..=quiver.max_height()).rev() {
                let row: Vec<String> = (0..quiver.vertices.len())
                    .filter(|&v| quiver.heights[v] == h)
                    .map(|v| {
                        if is_marked(v) {
                            format!("[{}]", root_label(v))
                        } else {
                            format!(" {} ", root_label(v))
                        }
                    })
                    .collect();
                let _ = writeln!(out, "h{h:>2} | {}", row.join(" "));
            }
            out
        }
        Format::Json => {
            let doc = JsonQuiver {
                vertices: (0..quiver.vertices.len())
                    .map(|v| JsonVertex {
                        id: v,
                        height: quiver.heights[v],
                        weight: quiver.vertices[v].0.iter().map(|c| c / denom).collect(),
                    })
                    .collect(),
                arrows: quiver.arrows.clone(),
                marked: (0..quiver.vertices.len()).filter(|&v| is_marked(v)).collect(),
            };
            let mut s = serde_json::to_string(&doc).expect("quiver serializes");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, RootDatum, Side};

    fn quiver_for(family: Family, side: Side) -> (RootDatum, Quiver) {
        let d = RootDatum::for_side(family, side).unwrap();
        let q = build_hasse(&d);
        (d, q)
    }

    #[test]
    fn projective_space_is_a_chain() {
        let (_, q) = quiver_for(Family::A { r: 1, n: 3 }, Side::P);
        assert_eq!(q.vertices().len(), 2);
        assert_eq!(q.arrows().len(), 1);
        assert_eq!(q.max_height(), 2);
        let (_, q) = quiver_for(Family::A { r: 1, n: 8 }, Side::P);
        assert_eq!(q.vertices().len(), 7);
        assert_eq!(q.max_height(), 7);
    }

    #[test]
    fn vertex_counts_and_hmax_match_the_table() {
        // (family, dim, h_max)
        let cases = [
            (Family::A { r: 3, n: 7 }, 12, 6),
            (Family::A { r: 2, n: 5 }, 6, 4),
            (Family::Dspin { p: 2 }, 10, 7),
            (Family::Dspin { p: 3 }, 21, 11),
            (Family::E6P1, 16, 11),
            (Family::E6P3, 20, 8),
        ];
        for (family, dim, hmax) in cases {
            for side in [Side::P, Side::Q] {
                let (_, q) = quiver_for(family, side);
                assert_eq!(q.vertices().len(), dim, "{family:?} {side:?} dimension");
                assert_eq!(q.max_height(), hmax, "{family:?} {side:?} h_max");
                assert!(q.is_graded(), "{family:?} {side:?} graded");
            }
        }
    }

    #[test]
    fn unique_minimal_vertex_at_height_one() {
        for family in [Family::A { r: 2, n: 6 }, Family::Dspin { p: 2 }, Family::E6P1, Family::E6P3]
        {
            let (d, q) = quiver_for(family, Side::P);
            let minimal: Vec<usize> =
                (0..q.vertices().len()).filter(|&v| q.height(v) == 1).collect();
            assert_eq!(minimal.len(), 1);
            assert_eq!(q.vertices()[minimal[0]], d.simple_roots()[d.marked()]);
        }
    }

    #[test]
    fn identity_and_full_subquivers() {
        let d = RootDatum::new(Family::A { r: 2, n: 5 }).unwrap();
        let q = build_hasse(&d);
        let empty = subquiver_qw(&q, &d, &SchubertIndex::List(vec![1, 2])).unwrap();
        assert!(empty.is_empty());
        let full = subquiver_qw(&q, &d, &SchubertIndex::List(vec![4, 5])).unwrap();
        assert_eq!(full.len(), q.vertices().len());
    }

    #[test]
    fn e6_example_ideal_has_five_vertices() {
        let d = RootDatum::new(Family::E6P1).unwrap();
        let q = build_hasse(&d);
        let sub = subquiver_qw(&q, &d, &SchubertIndex::Word(vec![6, 5, 4, 3, 1])).unwrap();
        assert_eq!(sub.len(), 5);
        assert!(q.is_order_ideal(&sub));
        let mut hs: Vec<usize> = sub.vertex_ids().iter().map(|&v| q.height(v)).collect();
        hs.sort_unstable();
        assert_eq!(hs, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn subquivers_are_order_ideals_and_sized_by_length() {
        for family in [Family::A { r: 2, n: 5 }, Family::Dspin { p: 2 }, Family::E6P1] {
            let d = RootDatum::new(family).unwrap();
            let q = build_hasse(&d);
            for idx in d.enumerate_cosets() {
                let sub = subquiver_qw(&q, &d, &idx).unwrap();
                assert!(q.is_order_ideal(&sub), "{family:?} {idx}");
                let w = d.index_to_min_rep(&idx).unwrap();
                assert_eq!(sub.len(), d.length(&w), "{family:?} {idx}");
            }
        }
        // E6/P3: |Q_w| counts only grade-1 inversions.
        let d = RootDatum::new(Family::E6P3).unwrap();
        let q = build_hasse(&d);
        for idx in d.enumerate_cosets() {
            let sub = subquiver_qw(&q, &d, &idx).unwrap();
            assert!(q.is_order_ideal(&sub), "E6P3 {idx}");
            let w = d.index_to_min_rep(&idx).unwrap();
            let grade1 = d
                .inversion_roots(&w)
                .iter()
                .filter(|g| g.0[d.marked()] == d.denom())
                .count();
            assert_eq!(sub.len(), grade1);
        }
    }

    #[test]
    fn bruhat_monotonicity_of_ideals() {
        for family in [Family::A { r: 2, n: 5 }, Family::Dspin { p: 2 }, Family::E6P1] {
            let d = RootDatum::new(family).unwrap();
            let q = build_hasse(&d);
            let cosets = d.enumerate_cosets();
            let subs: Vec<SubquiverQw> =
                cosets.iter().map(|i| subquiver_qw(&q, &d, i).unwrap()).collect();
            for (a, sa) in cosets.iter().zip(&subs) {
                for (b, sb) in cosets.iter().zip(&subs) {
                    if d.coset_leq(a, b).unwrap() {
                        for v in sa.vertex_ids() {
                            assert!(sb.contains(v), "{family:?}: {a} <= {b} but Q_w not nested");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn emit_formats() {
        let d = RootDatum::new(Family::A { r: 1, n: 3 }).unwrap();
        let q = build_hasse(&d);
        let ascii = emit(&q, &d, None, Format::Ascii);
        assert_eq!(ascii.lines().count(), 2);
        let dot = emit(&q, &d, None, Format::Dot);
        assert!(dot.starts_with("digraph quiver {"));
        assert!(dot.trim_end().ends_with('}'));
        let json = emit(&q, &d, None, Format::Json);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["vertices"].as_array().unwrap().len(), q.vertices().len());
        assert!("nonsense".parse::<Format>().is_err());
    }

    #[test]
    fn emit_marks_subquiver() {
        let d = RootDatum::new(Family::E6P1).unwrap();
        let q = build_hasse(&d);
        let sub = subquiver_qw(&q, &d, &SchubertIndex::Word(vec![6, 5, 4, 3, 1])).unwrap();
        let dot = emit(&q, &d, Some(&sub), Format::Dot);
        assert_eq!(dot.matches("style=filled").count(), 5);
        assert_eq!(dot.matches("label=").count(), 16);
        let json = emit(&q, &d, Some(&sub), Format::Json);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["marked"].as_array().unwrap().len(), 5);
    }
}

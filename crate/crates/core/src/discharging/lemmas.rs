//! Checks of the structural statements the discharging argument leans on.
//!
//! The statements are about minimal counterexamples, so an arbitrary
//! embedding can legitimately violate them in degenerate ways (a face
//! walking through a cut vertex, the two faces of a triangle coinciding as
//! vertex sets). Those cases are reported as [`Verdict::Degenerate`]; only a
//! violation on a simple face distinct from the triangle is a failure.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{classify, Element, StructureTags};
use crate::embedding::{EmbeddingError, FaceId, PlaneEmbedding};
use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    Degenerate(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub element: Element,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub name: &'static str,
    /// Set when the embedding as a whole is outside the statement's scope;
    /// no findings are produced then.
    pub precondition: Option<String>,
    pub findings: Vec<Finding>,
    /// Only for the vertex-profile check: per vertex, whether the
    /// alternative inequality `2 beta + alpha + gamma <= d` also holds.
    pub alternative_form: Vec<(VertexId, bool)>,
}

impl LemmaReport {
    fn new(name: &'static str) -> Self {
        LemmaReport { name, precondition: None, findings: Vec::new(), alternative_form: Vec::new() }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| matches!(f.verdict, Verdict::Fail(_)))
    }

    pub fn has_failure(&self) -> bool {
        self.failures().next().is_some()
    }

    pub fn is_degenerate(&self) -> bool {
        self.precondition.is_some()
            || self.findings.iter().any(|f| matches!(f.verdict, Verdict::Degenerate(_)))
    }

    /// `"fail"` beats `"degenerate"` beats `"pass"`.
    pub fn summary(&self) -> &'static str {
        if self.has_failure() {
            "fail"
        } else if self.is_degenerate() {
            "degenerate"
        } else {
            "pass"
        }
    }

    fn push(&mut self, element: Element, verdict: Verdict) {
        self.findings.push(Finding { element, verdict });
    }
}

/// Classifies, or explains why the statements do not apply.
fn scope(emb: &PlaneEmbedding, report: &mut LemmaReport) -> Result<Option<StructureTags>, EmbeddingError> {
    let tags = classify(emb)?;
    if !emb.graph().is_c4c5_free() {
        report.precondition = Some(String::from("graph contains a 4- or 5-cycle"));
        return Ok(None);
    }
    Ok(Some(tags))
}

/// Every bad 2-vertex lies, besides its 3-face, on a 7⁺-face.
pub fn check_lemma3(emb: &PlaneEmbedding) -> Result<LemmaReport, EmbeddingError> {
    let mut report = LemmaReport::new("lemma3");
    let Some(tags) = scope(emb, &mut report)? else {
        return Ok(report);
    };
    for v in tags.bad_two_vertices() {
        let corners = tags.corners(v);
        let tri = *tags.vertex(v).incident_three_faces.first().expect("bad 2-vertex has a 3-face");
        let mut rest = corners.clone();
        let pos = rest.iter().position(|&f| f == tri).unwrap();
        rest.remove(pos);
        let other = rest[0];
        let verdict = judge_lemma3(&tags, tri, other);
        report.push(Element::Vertex(v), verdict);
    }
    Ok(report)
}

fn judge_lemma3(tags: &StructureTags, tri: FaceId, other: FaceId) -> Verdict {
    let face = &tags.faces[other.0];
    if face.degree() >= 7 {
        return Verdict::Pass;
    }
    if other == tri {
        return Verdict::Degenerate(String::from("both corners on the same face"));
    }
    if !face.is_simple() {
        return Verdict::Degenerate(format!("{other} has a non-simple boundary walk"));
    }
    if face.vertex_set() == tags.faces[tri.0].vertex_set() {
        return Verdict::Degenerate(format!("{other} and {tri} bound the same triangle"));
    }
    Verdict::Fail(format!("other face {other} has degree {}", face.degree()))
}

/// Every k-face with k >= 7 meets at most k - 6 bad 2-vertices (counted per
/// corner).
pub fn check_lemma4(emb: &PlaneEmbedding) -> Result<LemmaReport, EmbeddingError> {
    let mut report = LemmaReport::new("lemma4");
    let Some(tags) = scope(emb, &mut report)? else {
        return Ok(report);
    };
    for (i, face) in tags.faces.iter().enumerate() {
        let k = face.degree();
        if k < 7 {
            continue;
        }
        let bad = face.vertices().filter(|&v| tags.vertex(v).bad_two).count();
        let verdict = if bad <= k - 6 {
            Verdict::Pass
        } else if !face.is_simple() {
            Verdict::Degenerate(format!("non-simple walk with {bad} bad 2-vertex corners"))
        } else {
            Verdict::Fail(format!("{bad} bad 2-vertices on a {k}-face"))
        };
        report.push(Element::Face(FaceId(i)), verdict);
    }
    Ok(report)
}

/// Every vertex of degree d satisfies `alpha <= floor(d/2)` and
/// `2 alpha + beta + gamma <= d`.
pub fn check_prop1b(emb: &PlaneEmbedding) -> Result<LemmaReport, EmbeddingError> {
    let mut report = LemmaReport::new("prop1b");
    let Some(tags) = scope(emb, &mut report)? else {
        return Ok(report);
    };
    for (&v, t) in &tags.vertex_tags {
        let d = t.degree;
        let (a, b, c) = (t.alpha(), t.beta(), t.gamma());
        report.alternative_form.push((v, 2 * b + a + c <= d));
        let verdict = if a <= d / 2 && 2 * a + b + c <= d {
            Verdict::Pass
        } else if twin_triangle(&tags, &t.incident_three_faces) {
            Verdict::Degenerate(String::from("a triangle bounds two faces"))
        } else {
            Verdict::Fail(format!("d={d} alpha={a} beta={b} gamma={c}"))
        };
        report.push(Element::Vertex(v), verdict);
    }
    Ok(report)
}

/// Is one of these 3-faces the other side of a triangle that is itself a
/// 3-face (the whole graph is then a triangle)?
fn twin_triangle(tags: &StructureTags, faces: &[FaceId]) -> bool {
    faces.iter().any(|&f| {
        tags.face_ids().any(|g| {
            g != f && tags.face(g).degree == 3 && tags.faces[g.0].vertex_set() == tags.faces[f.0].vertex_set()
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn embed(n: usize, edges: &[(usize, usize)], pts: &[(i64, i64)]) -> PlaneEmbedding {
        let g = Graph::from_edges(n, edges).unwrap();
        let coords = pts.iter().enumerate().map(|(i, &p)| (VertexId(i as u32), p)).collect();
        PlaneEmbedding::from_coordinates(g, &coords).unwrap()
    }

    #[test]
    fn k3_is_degenerate() {
        let e = embed(3, &[(0, 1), (1, 2), (0, 2)], &[(0, 0), (2, 0), (1, 2)]);
        let l3 = check_lemma3(&e).unwrap();
        assert_eq!(l3.findings.len(), 3);
        assert_eq!(l3.summary(), "degenerate");
        assert_eq!(check_prop1b(&e).unwrap().summary(), "degenerate");
        assert_eq!(check_lemma4(&e).unwrap().summary(), "pass");
    }

    #[test]
    fn triangle_on_nine_cycle() {
        // 9-cycle 0..8; triangle 0 9 10 outside it, 9 has degree 2
        let mut edges: Vec<(usize, usize)> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
        edges.extend([(0, 9), (0, 10), (9, 10), (10, 11)]);
        let mut pts: Vec<(i64, i64)> = alloc::vec![
            (0, 0), (10, 0), (20, 5), (25, 15), (20, 25), (10, 30), (0, 30), (-10, 25), (-10, 10),
        ];
        pts.extend([(-5, -20), (5, -20), (5, -30)]);
        let e = embed(12, &edges, &pts);
        assert!(e.graph().is_c4c5_free());
        let l3 = check_lemma3(&e).unwrap();
        assert_eq!(l3.findings.len(), 1);
        assert_eq!(l3.findings[0].element, Element::Vertex(VertexId(9)));
        // the outer face walks the 9-cycle plus the triangle and pendant edge
        assert_eq!(l3.findings[0].verdict, Verdict::Pass);
        assert_eq!(check_lemma4(&e).unwrap().summary(), "pass");
        assert_eq!(check_prop1b(&e).unwrap().summary(), "pass");
    }

    #[test]
    fn short_cycles_out_of_scope() {
        let e = embed(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], &[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let r = check_lemma4(&e).unwrap();
        assert!(r.precondition.is_some());
        assert!(r.findings.is_empty());
        assert_eq!(r.summary(), "degenerate");
    }

    #[test]
    fn hexagon_passes_vacuously() {
        let edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let e = embed(6, &edges, &[(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)]);
        assert!(check_lemma3(&e).unwrap().findings.is_empty());
        assert!(check_lemma4(&e).unwrap().findings.is_empty());
        assert_eq!(check_prop1b(&e).unwrap().summary(), "pass");
    }
}

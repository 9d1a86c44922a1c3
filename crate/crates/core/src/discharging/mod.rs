//! Structural classification of plane embeddings and discharging audits.
//!
//! Terminology follows the usual discharging vocabulary: a `k`-vertex has
//! degree `k`, a `k`-face has a boundary walk of length `k`. A 2-vertex on a
//! 3-face is *bad* (otherwise *good*); a 3-face containing a 2-vertex is
//! *bad* (otherwise *good*). A 3-face `f` is *pendant* to `v` when `v` is
//! not on `f` but is adjacent to a 3-vertex of `f`.

mod ledger;
mod lemmas;
mod rules;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::embedding::{EmbeddingError, Face, FaceId, PlaneEmbedding};
use crate::graph::VertexId;

pub use ledger::{
    format_charge, initial_charges, negative_elements, verify_conservation, Charge,
    ChargeLedger, LedgerMismatch,
};
pub use lemmas::{check_lemma3, check_lemma4, check_prop1b, Finding, LemmaReport, Verdict};
pub use rules::{
    apply_ruleset, DegreeRange, Discharge, DischargeRuleSet, Rule, RuleKind, RuleSetName,
    Transfer,
};

/// A vertex or a face of an embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(VertexId),
    Face(FaceId),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Face(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexTags {
    pub degree: usize,
    pub bad_two: bool,
    pub good_two: bool,
    /// One entry per corner of `v` on a 3-face.
    pub incident_three_faces: Vec<FaceId>,
    pub good_two_neighbors: Vec<VertexId>,
    pub pendant_faces: Vec<FaceId>,
}

impl VertexTags {
    /// Incident 3-faces.
    pub fn alpha(&self) -> usize {
        self.incident_three_faces.len()
    }

    /// Adjacent good 2-vertices.
    pub fn beta(&self) -> usize {
        self.good_two_neighbors.len()
    }

    /// Pendant 3-faces.
    pub fn gamma(&self) -> usize {
        self.pendant_faces.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceTags {
    pub degree: usize,
    pub bad_three: bool,
    pub good_three: bool,
    /// Sorted degrees of the corner vertices, e.g. `[2, 6, 6]`.
    pub signature: Vec<usize>,
}

/// Classification of every vertex and face of a plane embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTags {
    pub faces: Vec<Face>,
    pub face_tags: Vec<FaceTags>,
    pub vertex_tags: BTreeMap<VertexId, VertexTags>,
}

impl StructureTags {
    pub fn vertex(&self, v: VertexId) -> &VertexTags {
        &self.vertex_tags[&v]
    }

    pub fn face(&self, f: FaceId) -> &FaceTags {
        &self.face_tags[f.0]
    }

    pub fn face_ids(&self) -> impl Iterator<Item = FaceId> {
        (0..self.faces.len()).map(FaceId)
    }

    pub fn bad_two_vertices(&self) -> BTreeSet<VertexId> {
        self.vertex_tags.iter().filter(|(_, t)| t.bad_two).map(|(&v, _)| v).collect()
    }

    pub fn bad_three_faces(&self) -> BTreeSet<FaceId> {
        self.face_ids().filter(|&f| self.face(f).bad_three).collect()
    }

    /// Faces at the corners of `v`, one entry per corner.
    pub fn corners(&self, v: VertexId) -> Vec<FaceId> {
        self.face_ids()
            .flat_map(|f| core::iter::repeat_n(f, self.faces[f.0].occurrences(v)))
            .collect()
    }
}

/// Tags every vertex and face. The embedding must be connected and pass the
/// Euler check.
pub fn classify(emb: &PlaneEmbedding) -> Result<StructureTags, EmbeddingError> {
    emb.require_plane()?;
    let g = emb.graph();
    let faces = emb.trace_faces();
    let three: Vec<bool> = faces.iter().map(|f| f.degree() == 3).collect();

    let mut incident: BTreeMap<VertexId, Vec<FaceId>> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        if three[i] {
            for v in f.vertices() {
                incident.entry(v).or_default().push(FaceId(i));
            }
        }
    }
    let bad_two = |v: VertexId| g.degree(v) == 2 && incident.contains_key(&v);
    let good_two = |v: VertexId| g.degree(v) == 2 && !incident.contains_key(&v);

    let face_tags: Vec<FaceTags> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let mut signature: Vec<usize> = f.vertices().map(|v| g.degree(v)).collect();
            signature.sort_unstable();
            let bad = three[i] && f.vertices().any(|v| g.degree(v) == 2);
            FaceTags { degree: f.degree(), bad_three: bad, good_three: three[i] && !bad, signature }
        })
        .collect();

    let mut vertex_tags = BTreeMap::new();
    for v in g.vertices() {
        let mut pendant = Vec::new();
        for (i, f) in faces.iter().enumerate() {
            if !three[i] || f.occurrences(v) > 0 {
                continue;
            }
            if f.vertices().any(|w| g.degree(w) == 3 && g.has_edge(v, w)) {
                pendant.push(FaceId(i));
            }
        }
        vertex_tags.insert(
            v,
            VertexTags {
                degree: g.degree(v),
                bad_two: bad_two(v),
                good_two: good_two(v),
                incident_three_faces: incident.get(&v).cloned().unwrap_or_default(),
                good_two_neighbors: g.neighbors(v).filter(|&w| good_two(w)).collect(),
                pendant_faces: pendant,
            },
        );
    }
    Ok(StructureTags { faces, face_tags, vertex_tags })
}

/// Everything the discharging audit reports for one embedding and rule set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Audit {
    pub rules: RuleSetName,
    pub discharge: Discharge,
    pub conserved: bool,
    pub negative: Vec<(Element, Charge)>,
    pub lemma3: LemmaReport,
    pub lemma4: LemmaReport,
    pub prop1b: LemmaReport,
}

pub fn audit(emb: &PlaneEmbedding, rules: &DischargeRuleSet) -> Result<Audit, EmbeddingError> {
    let discharge = apply_ruleset(emb, rules)?;
    let conserved = verify_conservation(&discharge.initial, &discharge.final_charges)
        .expect("discharging keeps the element set");
    let negative = negative_elements(&discharge.final_charges);
    Ok(Audit {
        rules: rules.name,
        conserved,
        negative,
        discharge,
        lemma3: check_lemma3(emb)?,
        lemma4: check_lemma4(emb)?,
        prop1b: check_prop1b(emb)?,
    })
}

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{classify, initial_charges, Charge, ChargeLedger, Element};
use crate::embedding::{EmbeddingError, FaceId, PlaneEmbedding};

/// Degrees `min..=max`; `max = None` means unbounded (`min⁺`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeRange {
    pub min: usize,
    pub max: Option<usize>,
}

impl DegreeRange {
    pub const fn exactly(d: usize) -> Self {
        DegreeRange { min: d, max: Some(d) }
    }

    pub const fn between(min: usize, max: usize) -> Self {
        DegreeRange { min, max: Some(max) }
    }

    pub const fn at_least(min: usize) -> Self {
        DegreeRange { min, max: None }
    }

    pub fn contains(&self, d: usize) -> bool {
        d >= self.min && self.max.is_none_or(|m| d <= m)
    }
}

impl fmt::Display for DegreeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.max {
            None => write!(f, "{}+", self.min),
            Some(m) if m == self.min => write!(f, "{m}"),
            Some(m) => write!(f, "{}..{m}", self.min),
        }
    }
}

/// Who sends to whom. Every rule moves a fixed amount per target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    /// Vertex of the given degree to each adjacent good 2-vertex.
    VertexToGoodTwo(DegreeRange),
    /// Vertex of the given degree to each incident 3-face (per corner).
    VertexToThreeFace(DegreeRange),
    /// Vertex of the given degree to each pendant 3-face.
    VertexToPendant(DegreeRange),
    /// Face of the given degree to each incident bad 2-vertex (per corner).
    FaceToBadTwo(DegreeRange),
    /// Bad 3-face to each incident 2-vertex.
    BadThreeFaceToTwo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rule {
    pub id: &'static str,
    pub kind: RuleKind,
    pub amount: Charge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleSetName {
    R44,
    R35,
    R29,
}

impl RuleSetName {
    /// The defect pair the rule set was designed for.
    pub fn defects(self) -> [u32; 2] {
        match self {
            RuleSetName::R44 => [4, 4],
            RuleSetName::R35 => [3, 5],
            RuleSetName::R29 => [2, 9],
        }
    }
}

impl fmt::Display for RuleSetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleSetName::R44 => "R44",
            RuleSetName::R35 => "R35",
            RuleSetName::R29 => "R29",
        })
    }
}

impl FromStr for RuleSetName {
    type Err = ();

    /// Accepts `44`, `R44`, `r44` and likewise for the others.
    fn from_str(s: &str) -> Result<Self, ()> {
        match s.trim_start_matches(['R', 'r']) {
            "44" => Ok(RuleSetName::R44),
            "35" => Ok(RuleSetName::R35),
            "29" => Ok(RuleSetName::R29),
            _ => Err(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DischargeRuleSet {
    pub name: RuleSetName,
    pub rules: Vec<Rule>,
}

fn rule(id: &'static str, kind: RuleKind, numer: i64, denom: i64) -> Rule {
    Rule { id, kind, amount: Charge::new(numer, denom) }
}

impl DischargeRuleSet {
    pub fn r44() -> Self {
        use RuleKind::*;
        let six = DegreeRange::at_least(6);
        DischargeRuleSet {
            name: RuleSetName::R44,
            rules: alloc::vec![
                rule("R1", VertexToGoodTwo(six), 1, 1),
                rule("R2", VertexToThreeFace(six), 2, 1),
                rule("R3", VertexToPendant(six), 1, 1),
                rule("R4", FaceToBadTwo(DegreeRange::at_least(7)), 1, 1),
                rule("R5", VertexToThreeFace(DegreeRange::between(4, 5)), 1, 1),
                rule("R6", BadThreeFaceToTwo, 1, 1),
            ],
        }
    }

    pub fn r35() -> Self {
        use RuleKind::*;
        let five = DegreeRange::exactly(5);
        let six = DegreeRange::exactly(6);
        let seven = DegreeRange::at_least(7);
        DischargeRuleSet {
            name: RuleSetName::R35,
            rules: alloc::vec![
                rule("R1", VertexToGoodTwo(five), 4, 5),
                rule("R2", VertexToThreeFace(five), 8, 5),
                rule("R3", VertexToPendant(five), 4, 5),
                rule("R4", VertexToGoodTwo(six), 1, 1),
                rule("R5", VertexToThreeFace(DegreeRange::between(6, 7)), 2, 1),
                rule("R6", VertexToPendant(six), 1, 1),
                rule("R7", VertexToGoodTwo(seven), 6, 5),
                rule("R8", VertexToThreeFace(DegreeRange::at_least(8)), 12, 5),
                rule("R9", VertexToPendant(seven), 6, 5),
                rule("R10", FaceToBadTwo(DegreeRange::at_least(7)), 1, 1),
                rule("R11", VertexToThreeFace(DegreeRange::exactly(4)), 1, 1),
                rule("R12", BadThreeFaceToTwo, 1, 1),
            ],
        }
    }

    pub fn r29() -> Self {
        use RuleKind::*;
        let small = DegreeRange::between(4, 10);
        let big = DegreeRange::at_least(11);
        DischargeRuleSet {
            name: RuleSetName::R29,
            rules: alloc::vec![
                rule("R1", VertexToGoodTwo(small), 1, 2),
                rule("R2", VertexToThreeFace(DegreeRange::exactly(4)), 1, 1),
                rule("R3", VertexToPendant(small), 1, 2),
                rule("R4", VertexToThreeFace(DegreeRange::between(5, 10)), 3, 2),
                rule("R5", VertexToThreeFace(DegreeRange::exactly(11)), 5, 2),
                rule("R6", VertexToGoodTwo(big), 3, 2),
                rule("R7", VertexToThreeFace(DegreeRange::at_least(12)), 3, 1),
                rule("R8", VertexToPendant(big), 3, 2),
                rule("R9", FaceToBadTwo(DegreeRange::at_least(7)), 1, 1),
                rule("R10", BadThreeFaceToTwo, 1, 1),
            ],
        }
    }

    pub fn by_name(name: RuleSetName) -> Self {
        match name {
            RuleSetName::R44 => Self::r44(),
            RuleSetName::R35 => Self::r35(),
            RuleSetName::R29 => Self::r29(),
        }
    }

    pub fn rule(&self, id: &str) -> Option<&Rule> {
        self.rules.iter().find(|r| r.id == id)
    }
}

/// One application of one rule to one (source, target) incidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transfer {
    pub rule: &'static str,
    pub from: Element,
    pub to: Element,
    pub amount: Charge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discharge {
    pub initial: ChargeLedger,
    pub final_charges: ChargeLedger,
    pub transfers: Vec<Transfer>,
}

impl Discharge {
    /// Applies the logged transfers to the initial charges.
    pub fn replay(&self) -> ChargeLedger {
        let mut ledger = self.initial.clone();
        for t in &self.transfers {
            ledger.add(t.from, -t.amount);
            ledger.add(t.to, t.amount);
        }
        ledger
    }
}

/// Runs every rule against the initial classification and sums the
/// transfers. The log is ordered by rule, then source, then target as met
/// in the source's incidence list.
pub fn apply_ruleset(
    emb: &PlaneEmbedding,
    rules: &DischargeRuleSet,
) -> Result<Discharge, EmbeddingError> {
    let tags = classify(emb)?;
    let initial = initial_charges(emb)?;
    let g = emb.graph();
    let mut transfers = Vec::new();
    for r in &rules.rules {
        let mut send = |from: Element, to: Element| {
            transfers.push(Transfer { rule: r.id, from, to, amount: r.amount });
        };
        match r.kind {
            RuleKind::VertexToGoodTwo(range)
            | RuleKind::VertexToThreeFace(range)
            | RuleKind::VertexToPendant(range) => {
                for (&v, t) in &tags.vertex_tags {
                    if !range.contains(t.degree) {
                        continue;
                    }
                    let from = Element::Vertex(v);
                    match r.kind {
                        RuleKind::VertexToGoodTwo(_) => {
                            t.good_two_neighbors.iter().for_each(|&w| send(from, Element::Vertex(w)))
                        }
                        RuleKind::VertexToThreeFace(_) => {
                            t.incident_three_faces.iter().for_each(|&f| send(from, Element::Face(f)))
                        }
                        _ => t.pendant_faces.iter().for_each(|&f| send(from, Element::Face(f))),
                    }
                }
            }
            RuleKind::FaceToBadTwo(range) => {
                for (i, face) in tags.faces.iter().enumerate() {
                    if !range.contains(face.degree()) {
                        continue;
                    }
                    for v in face.vertices().filter(|&v| tags.vertex(v).bad_two) {
                        send(Element::Face(FaceId(i)), Element::Vertex(v));
                    }
                }
            }
            RuleKind::BadThreeFaceToTwo => {
                for (i, face) in tags.faces.iter().enumerate() {
                    if !tags.face_tags[i].bad_three {
                        continue;
                    }
                    for v in face.vertices().filter(|&v| g.degree(v) == 2) {
                        send(Element::Face(FaceId(i)), Element::Vertex(v));
                    }
                }
            }
        }
    }
    let mut discharge = Discharge { final_charges: initial.clone(), initial, transfers };
    discharge.final_charges = discharge.replay();
    Ok(discharge)
}

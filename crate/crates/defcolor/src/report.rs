//! JSON documents emitted by the command line tool. Exact charges are
//! strings `"p/q"`.

use serde::Serialize;

use defcolor_core::discharging::{format_charge, Audit, Element, LemmaReport, Verdict};
use defcolor_core::{Color, Graph, SolveOutcome, SolveRun};

#[derive(Debug, Serialize)]
pub struct SolveReport {
    pub format: &'static str,
    pub method: &'static str,
    pub outcome: &'static str,
    /// Color of vertex `i` at index `i`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<Color>>,
    pub nodes: u64,
    pub budget: Option<u64>,
}

impl SolveReport {
    pub fn new(g: &Graph, method: &'static str, run: &SolveRun, budget: Option<u64>) -> Self {
        let (outcome, coloring) = match &run.outcome {
            SolveOutcome::Sat(c) => ("sat", Some(g.vertices().map(|v| c.get(v).unwrap()).collect())),
            SolveOutcome::Unsat => ("unsat", None),
            SolveOutcome::BudgetExceeded(_) => ("budget_exceeded", None),
        };
        SolveReport { format: "defcolor-solve v1", method, outcome, coloring, nodes: run.nodes, budget }
    }
}

/// Exit status for a solve outcome: 0 sat, 10 unsat, 20 out of budget.
pub fn exit_code(outcome: &SolveOutcome) -> i32 {
    match outcome {
        SolveOutcome::Sat(_) => 0,
        SolveOutcome::Unsat => 10,
        SolveOutcome::BudgetExceeded(_) => 20,
    }
}

#[derive(Debug, Serialize)]
pub struct FindingJson {
    pub element: String,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct LemmaJson {
    pub summary: &'static str,
    pub precondition: Option<String>,
    pub findings: Vec<FindingJson>,
    /// Vertices where the alternative profile inequality fails (vertex
    /// profile check only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alternative_form_violations: Option<Vec<String>>,
}

impl From<&LemmaReport> for LemmaJson {
    fn from(r: &LemmaReport) -> Self {
        let findings = r
            .findings
            .iter()
            .map(|f| {
                let (verdict, detail) = match &f.verdict {
                    Verdict::Pass => ("pass", None),
                    Verdict::Fail(w) => ("fail", Some(w.clone())),
                    Verdict::Degenerate(w) => ("degenerate", Some(w.clone())),
                };
                FindingJson { element: f.element.to_string(), verdict, detail }
            })
            .collect();
        let alternative_form_violations = (r.name == "prop1b" && r.precondition.is_none()).then(|| {
            r.alternative_form.iter().filter(|(_, ok)| !ok).map(|(v, _)| Element::Vertex(*v).to_string()).collect()
        });
        LemmaJson { summary: r.summary(), precondition: r.precondition.clone(), findings, alternative_form_violations }
    }
}

#[derive(Debug, Serialize)]
pub struct LemmasJson {
    pub lemma3: LemmaJson,
    pub lemma4: LemmaJson,
    pub prop1b: LemmaJson,
}

#[derive(Debug, Serialize)]
pub struct TransferJson {
    pub rule: &'static str,
    /// `"out"` when this element sends, `"in"` when it receives.
    pub direction: &'static str,
    pub counterpart: String,
    pub amount: String,
}

#[derive(Debug, Serialize)]
pub struct ElementJson {
    pub element: String,
    pub initial: String,
    #[serde(rename = "final")]
    pub final_charge: String,
    pub transfers: Vec<TransferJson>,
}

#[derive(Debug, Serialize)]
pub struct ChargeJson {
    pub element: String,
    pub charge: String,
}

#[derive(Debug, Serialize)]
pub struct AuditReport {
    pub format: &'static str,
    pub ruleset: String,
    pub total_initial: String,
    pub total_final: String,
    pub conserved: bool,
    pub negative: Vec<ChargeJson>,
    pub elements: Vec<ElementJson>,
    pub lemmas: LemmasJson,
}

impl From<&Audit> for AuditReport {
    fn from(a: &Audit) -> Self {
        let d = &a.discharge;
        let elements = d
            .initial
            .iter()
            .map(|(e, initial)| {
                let transfers = d
                    .transfers
                    .iter()
                    .filter_map(|t| {
                        let (direction, counterpart) = if t.from == e {
                            ("out", t.to)
                        } else if t.to == e {
                            ("in", t.from)
                        } else {
                            return None;
                        };
                        Some(TransferJson {
                            rule: t.rule,
                            direction,
                            counterpart: counterpart.to_string(),
                            amount: format_charge(&t.amount),
                        })
                    })
                    .collect();
                ElementJson {
                    element: e.to_string(),
                    initial: format_charge(&initial),
                    final_charge: format_charge(&d.final_charges.get(e).unwrap()),
                    transfers,
                }
            })
            .collect();
        AuditReport {
            format: "defcolor-audit v1",
            ruleset: a.rules.to_string(),
            total_initial: format_charge(&d.initial.total()),
            total_final: format_charge(&d.final_charges.total()),
            conserved: a.conserved,
            negative: a
                .negative
                .iter()
                .map(|(e, c)| ChargeJson { element: e.to_string(), charge: format_charge(c) })
                .collect(),
            elements,
            lemmas: LemmasJson {
                lemma3: (&a.lemma3).into(),
                lemma4: (&a.lemma4).into(),
                prop1b: (&a.prop1b).into(),
            },
        }
    }
}

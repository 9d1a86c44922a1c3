use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use super::Element;
use crate::embedding::{EmbeddingError, FaceId, PlaneEmbedding};

/// Exact charge. Denominators seen in practice are 1, 2, 5 and 10.
pub type Charge = Ratio<i64>;

/// Always `p/q`, including integers (`-3/1`).
pub fn format_charge(c: &Charge) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChargeLedger {
    charges: BTreeMap<Element, Charge>,
}

impl ChargeLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, e: Element) -> Option<Charge> {
        self.charges.get(&e).copied()
    }

    pub fn set(&mut self, e: Element, c: Charge) {
        self.charges.insert(e, c);
    }

    /// Adds `delta` to `e`, which must already be present.
    pub fn add(&mut self, e: Element, delta: Charge) {
        *self.charges.get_mut(&e).expect("element is in the ledger") += delta;
    }

    pub fn total(&self) -> Charge {
        self.charges.values().fold(Charge::zero(), |acc, c| acc + c)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Element, Charge)> + '_ {
        self.charges.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.charges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.charges.is_empty()
    }

    fn same_elements(&self, other: &ChargeLedger) -> bool {
        self.charges.keys().eq(other.charges.keys())
    }
}

impl FromIterator<(Element, Charge)> for ChargeLedger {
    fn from_iter<I: IntoIterator<Item = (Element, Charge)>>(iter: I) -> Self {
        ChargeLedger { charges: iter.into_iter().collect() }
    }
}

/// `mu(v) = 2 d(v) - 6`, `mu(f) = d(f) - 6`. By Euler's formula the total is
/// -12 for every connected plane embedding.
pub fn initial_charges(emb: &PlaneEmbedding) -> Result<ChargeLedger, EmbeddingError> {
    emb.require_plane()?;
    let g = emb.graph();
    let mut ledger = ChargeLedger::new();
    for v in g.vertices() {
        ledger.set(Element::Vertex(v), Charge::from_integer(2 * g.degree(v) as i64 - 6));
    }
    for (i, f) in emb.trace_faces().iter().enumerate() {
        ledger.set(Element::Face(FaceId(i)), Charge::from_integer(f.degree() as i64 - 6));
    }
    Ok(ledger)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LedgerMismatch;

impl fmt::Display for LedgerMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ledgers cover different elements")
    }
}

impl core::error::Error for LedgerMismatch {}

/// Exact comparison of the two totals.
pub fn verify_conservation(
    initial: &ChargeLedger,
    final_charges: &ChargeLedger,
) -> Result<bool, LedgerMismatch> {
    if !initial.same_elements(final_charges) {
        return Err(LedgerMismatch);
    }
    Ok(initial.total() == final_charges.total())
}

/// Elements with negative charge, in element order.
pub fn negative_elements(ledger: &ChargeLedger) -> Vec<(Element, Charge)> {
    ledger.iter().filter(|(_, c)| *c < Charge::zero()).collect()
}

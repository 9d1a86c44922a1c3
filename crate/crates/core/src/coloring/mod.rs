//! Defective colorings: a `(d_1, ..., d_k)`-coloring assigns each vertex a
//! color `i` in `1..=k` such that it has at most `d_i` neighbors of its own
//! color.

mod cnf;
mod oracle;
mod solver;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexId};

pub use cnf::{export_cnf, Cnf, CnfEncoding};
pub use oracle::{
    always_extends, brute_force_oracle, deletion_preserves, for_each_valid_coloring,
    ORACLE_CAP,
};
pub use solver::solve;

/// Colors are `1..=k`.
pub type Color = u8;

/// Largest number of color classes a [`ColoringSpec`] may have.
pub const MAX_COLORS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    NoColors,
    TooManyColors(usize),
    TooFewColorsForCnf(usize),
    Uncolored(VertexId),
    UnknownVertex(VertexId),
    ColorOutOfRange { vertex: VertexId, color: Color, k: usize },
    /// Brute-force enumeration would exceed [`ORACLE_CAP`] assignments.
    InstanceTooLarge { n: usize, k: usize },
    /// A sub-search of a compound check ran out of budget.
    BudgetExceeded { nodes: u64 },
    ZeroBudget,
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::NoColors => write!(f, "a coloring spec needs at least one color"),
            ColoringError::TooManyColors(k) => {
                write!(f, "{k} colors requested, at most {MAX_COLORS} supported")
            }
            ColoringError::TooFewColorsForCnf(k) => {
                write!(f, "CNF export needs at least 2 colors, got {k}")
            }
            ColoringError::Uncolored(v) => write!(f, "vertex {v} has no color"),
            ColoringError::UnknownVertex(v) => write!(f, "vertex {v} is not in the graph"),
            ColoringError::ColorOutOfRange { vertex, color, k } => {
                write!(f, "color {color} at vertex {vertex} is outside 1..={k}")
            }
            ColoringError::InstanceTooLarge { n, k } => {
                write!(f, "{k}^{n} assignments exceed the brute-force cap of {ORACLE_CAP}")
            }
            ColoringError::BudgetExceeded { nodes } => {
                write!(f, "search budget exhausted after {nodes} nodes")
            }
            ColoringError::ZeroBudget => write!(f, "search budget must be positive"),
        }
    }
}

impl core::error::Error for ColoringError {}

/// Defect bounds `(d_1, ..., d_k)`. Order is not normalized.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoringSpec {
    defects: Vec<u32>,
}

impl ColoringSpec {
    pub fn new(defects: impl Into<Vec<u32>>) -> Result<Self, ColoringError> {
        let defects = defects.into();
        match defects.len() {
            0 => Err(ColoringError::NoColors),
            k if k > MAX_COLORS => Err(ColoringError::TooManyColors(k)),
            _ => Ok(ColoringSpec { defects }),
        }
    }

    pub fn k(&self) -> usize {
        self.defects.len()
    }

    /// Defect bound of `color` (1-based).
    pub fn defect(&self, color: Color) -> u32 {
        self.defects[color as usize - 1]
    }

    pub fn defects(&self) -> &[u32] {
        &self.defects
    }

    pub fn colors(&self) -> impl Iterator<Item = Color> {
        1..=self.k() as Color
    }

    /// Same number of colors and every bound at least as large.
    pub fn dominates(&self, other: &ColoringSpec) -> bool {
        self.k() == other.k() && self.defects.iter().zip(&other.defects).all(|(a, b)| a >= b)
    }
}

/// A vertex-to-color assignment.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Coloring {
    assignment: BTreeMap<VertexId, Color>,
}

impl Coloring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, v: VertexId, c: Color) {
        self.assignment.insert(v, c);
    }

    pub fn get(&self, v: VertexId) -> Option<Color> {
        self.assignment.get(&v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, Color)> + '_ {
        self.assignment.iter().map(|(&v, &c)| (v, c))
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// The color class `V_i`.
    pub fn class(&self, c: Color) -> impl Iterator<Item = VertexId> + '_ {
        self.iter().filter(move |&(_, x)| x == c).map(|(v, _)| v)
    }
}

impl FromIterator<(VertexId, Color)> for Coloring {
    fn from_iter<T: IntoIterator<Item = (VertexId, Color)>>(iter: T) -> Self {
        Coloring { assignment: iter.into_iter().collect() }
    }
}

/// Boundary conditions: vertices pinned to a color, and colors ruled out.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstraintSet {
    forced: BTreeMap<VertexId, Color>,
    forbidden: BTreeMap<VertexId, BTreeSet<Color>>,
}

impl ConstraintSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn force(mut self, v: VertexId, c: Color) -> Self {
        self.forced.insert(v, c);
        self
    }

    pub fn forbid(mut self, v: VertexId, c: Color) -> Self {
        self.forbidden.entry(v).or_default().insert(c);
        self
    }

    pub fn forced(&self) -> impl Iterator<Item = (VertexId, Color)> + '_ {
        self.forced.iter().map(|(&v, &c)| (v, c))
    }

    pub fn forbidden(&self) -> impl Iterator<Item = (VertexId, Color)> + '_ {
        self.forbidden.iter().flat_map(|(&v, cs)| cs.iter().map(move |&c| (v, c)))
    }

    /// Whether `c` is admissible at `v` under these constraints alone.
    pub fn permits(&self, v: VertexId, c: Color) -> bool {
        self.forced.get(&v).is_none_or(|&f| f == c)
            && self.forbidden.get(&v).is_none_or(|cs| !cs.contains(&c))
    }

    pub fn is_satisfied_by(&self, coloring: &Coloring) -> bool {
        self.forced().all(|(v, c)| coloring.get(v) == Some(c))
            && self.forbidden().all(|(v, c)| coloring.get(v) != Some(c))
    }

    pub(crate) fn validate(&self, g: &Graph, spec: &ColoringSpec) -> Result<(), ColoringError> {
        for (v, c) in self.forced().chain(self.forbidden()) {
            if !g.contains(v) {
                return Err(ColoringError::UnknownVertex(v));
            }
            if c == 0 || c as usize > spec.k() {
                return Err(ColoringError::ColorOutOfRange { vertex: v, color: c, k: spec.k() });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Sat(Coloring),
    Unsat,
    /// Search stopped after this many nodes without a verdict.
    BudgetExceeded(u64),
}

impl SolveOutcome {
    pub fn is_sat(&self) -> bool {
        matches!(self, SolveOutcome::Sat(_))
    }

    pub fn is_unsat(&self) -> bool {
        matches!(self, SolveOutcome::Unsat)
    }
}

/// An outcome together with the number of search nodes (assignments) spent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveRun {
    pub outcome: SolveOutcome,
    pub nodes: u64,
}

/// Checks every vertex against the defect bound of its own color.
pub fn is_valid_coloring(
    g: &Graph,
    spec: &ColoringSpec,
    coloring: &Coloring,
) -> Result<bool, ColoringError> {
    for v in g.vertices() {
        let c = coloring.get(v).ok_or(ColoringError::Uncolored(v))?;
        if c == 0 || c as usize > spec.k() {
            return Err(ColoringError::ColorOutOfRange { vertex: v, color: c, k: spec.k() });
        }
    }
    Ok(g.vertices().all(|v| {
        let c = coloring.get(v).unwrap();
        let same = g.neighbors(v).filter(|&u| coloring.get(u) == Some(c)).count();
        same as u64 <= u64::from(spec.defect(c))
    }))
}

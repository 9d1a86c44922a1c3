//! Exhaustive enumeration: the reference the search is checked against, and
//! the extension checks built on it.

use alloc::vec;
use alloc::vec::Vec;

use super::{
    is_valid_coloring, solve, Color, Coloring, ColoringError, ColoringSpec, ConstraintSet,
    SolveOutcome, SolveRun,
};
use crate::graph::{Graph, VertexId};

/// Most assignments the brute-force routines will enumerate.
pub const ORACLE_CAP: u64 = 100_000_000;

fn check_cap(n: usize, k: usize) -> Result<(), ColoringError> {
    let mut total: u64 = 1;
    for _ in 0..n {
        total = total.saturating_mul(k as u64);
        if total > ORACLE_CAP {
            return Err(ColoringError::InstanceTooLarge { n, k });
        }
    }
    Ok(())
}

/// Visits every total assignment in lexicographic order (first vertex most
/// significant, color 1 first) that is a valid `spec`-coloring. Stops early
/// when `visit` returns false.
pub fn for_each_valid_coloring(
    g: &Graph,
    spec: &ColoringSpec,
    mut visit: impl FnMut(&Coloring) -> bool,
) -> Result<u64, ColoringError> {
    let ids: Vec<VertexId> = g.vertices().collect();
    let k = spec.k() as Color;
    check_cap(ids.len(), spec.k())?;
    let mut digits: Vec<Color> = vec![1; ids.len()];
    let mut visited = 0u64;
    loop {
        visited += 1;
        let coloring: Coloring = ids.iter().copied().zip(digits.iter().copied()).collect();
        if is_valid_coloring(g, spec, &coloring)? && !visit(&coloring) {
            return Ok(visited);
        }
        // odometer step, last vertex fastest
        let mut i = ids.len();
        loop {
            if i == 0 {
                return Ok(visited);
            }
            i -= 1;
            if digits[i] < k {
                digits[i] += 1;
                break;
            }
            digits[i] = 1;
        }
    }
}

/// Same contract as [`solve`], decided by trying every assignment. Refuses
/// instances with more than [`ORACLE_CAP`] assignments.
pub fn brute_force_oracle(
    g: &Graph,
    spec: &ColoringSpec,
    cons: &ConstraintSet,
) -> Result<SolveRun, ColoringError> {
    cons.validate(g, spec)?;
    let mut found = None;
    let nodes = for_each_valid_coloring(g, spec, |c| {
        if cons.is_satisfied_by(c) {
            found = Some(c.clone());
            false
        } else {
            true
        }
    })?;
    let outcome = match found {
        Some(c) => SolveOutcome::Sat(c),
        None => SolveOutcome::Unsat,
    };
    Ok(SolveRun { outcome, nodes })
}

/// True iff every valid coloring of `g - v` leaves some color for `v` that
/// keeps both `v` and its neighbors within their defect bounds.
pub fn always_extends(g: &Graph, v: VertexId, spec: &ColoringSpec) -> Result<bool, ColoringError> {
    let rest = g.delete_vertex(v).map_err(|_| ColoringError::UnknownVertex(v))?;
    let neighbors: Vec<VertexId> = g.neighbors(v).collect();
    let mut extends = true;
    for_each_valid_coloring(&rest, spec, |c| {
        let fits = |color: Color| {
            let limit = spec.defect(color) as usize;
            let mut same = 0;
            for &u in &neighbors {
                if c.get(u) != Some(color) {
                    continue;
                }
                same += 1;
                let u_same = rest.neighbors(u).filter(|&x| c.get(x) == Some(color)).count();
                if u_same + 1 > limit {
                    return false;
                }
            }
            same <= limit
        };
        extends = spec.colors().any(fits);
        extends
    })?;
    Ok(extends)
}

/// True iff colorability of `g - v` implies colorability of `g`. Either
/// search running out of budget is an error, never a verdict.
pub fn deletion_preserves(
    g: &Graph,
    v: VertexId,
    spec: &ColoringSpec,
    budget: u64,
) -> Result<bool, ColoringError> {
    let rest = g.delete_vertex(v).map_err(|_| ColoringError::UnknownVertex(v))?;
    let none = ConstraintSet::new();
    match solve(&rest, spec, &none, budget)?.outcome {
        SolveOutcome::Unsat => return Ok(true),
        SolveOutcome::BudgetExceeded(nodes) => return Err(ColoringError::BudgetExceeded { nodes }),
        SolveOutcome::Sat(_) => {}
    }
    match solve(g, spec, &none, budget)?.outcome {
        SolveOutcome::Sat(_) => Ok(true),
        SolveOutcome::Unsat => Ok(false),
        SolveOutcome::BudgetExceeded(nodes) => Err(ColoringError::BudgetExceeded { nodes }),
    }
}

//! Exact backtracking search with defect-slack propagation and
//! conflict-directed backjumping.
//!
//! Every uncolored vertex keeps an implicit domain: color `c` is live at `w`
//! while `w` has at most `d_c` neighbors colored `c` and no neighbor colored
//! `c` has already used up its slack. After each assignment the domains of
//! the affected vertices are rechecked; a wiped-out domain yields a conflict
//! set (the assignments responsible for removing each of its colors), and
//! the search jumps back to the most recent vertex in that set.

use alloc::vec;
use alloc::vec::Vec;

use super::{Color, Coloring, ColoringError, ColoringSpec, ConstraintSet, SolveOutcome, SolveRun};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug)]
struct VarSet(Vec<u64>);

impl VarSet {
    fn new(n: usize) -> Self {
        VarSet(vec![0; n.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] & (1 << (i % 64)) != 0
    }

    fn union_with(&mut self, other: &VarSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
}

enum Failure {
    Conflict(VarSet),
    Budget,
}

struct Search {
    n: usize,
    k: usize,
    ids: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
    defect: Vec<u32>,
    static_domain: Vec<u64>,
    /// 0 while uncolored
    color: Vec<Color>,
    /// same[w * k + (c - 1)]: colored neighbors of w with color c
    same: Vec<u32>,
    uncolored: usize,
    nodes: u64,
    budget: u64,
    solution: Option<Vec<Color>>,
}

impl Search {
    fn same(&self, w: usize, c: Color) -> u32 {
        self.same[w * self.k + c as usize - 1]
    }

    fn saturated(&self, u: usize) -> bool {
        let c = self.color[u];
        c != 0 && self.same(u, c) >= self.defect[c as usize - 1]
    }

    fn allowed(&self, w: usize, c: Color) -> bool {
        self.static_domain[w] & (1 << (c - 1)) != 0
            && self.same(w, c) <= self.defect[c as usize - 1]
            && !self.adj[w].iter().any(|&u| self.color[u] == c && self.saturated(u))
    }

    fn domain_size(&self, w: usize) -> usize {
        (1..=self.k as Color).filter(|&c| self.allowed(w, c)).count()
    }

    /// Assignments that together rule out color `c` at `w`.
    fn explain(&self, w: usize, c: Color) -> VarSet {
        let mut why = VarSet::new(self.n);
        if self.static_domain[w] & (1 << (c - 1)) == 0 {
            return why;
        }
        if self.same(w, c) > self.defect[c as usize - 1] {
            for &u in &self.adj[w] {
                if self.color[u] == c {
                    why.insert(u);
                }
            }
            return why;
        }
        let u = self.adj[w]
            .iter()
            .copied()
            .find(|&u| self.color[u] == c && self.saturated(u))
            .expect("explain called on a live color");
        why.insert(u);
        for &x in &self.adj[u] {
            if self.color[x] == c {
                why.insert(x);
            }
        }
        why
    }

    fn wipeout_reason(&self, w: usize) -> VarSet {
        let mut why = VarSet::new(self.n);
        for c in 1..=self.k as Color {
            why.union_with(&self.explain(w, c));
        }
        why
    }

    fn assign(&mut self, v: usize, c: Color) {
        self.color[v] = c;
        self.uncolored -= 1;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            self.same[w * self.k + c as usize - 1] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = 0;
        self.uncolored += 1;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            self.same[w * self.k + c as usize - 1] -= 1;
        }
    }

    /// Uncolored vertex whose domain emptied after `v` got color `c`.
    fn forward_check(&self, v: usize, c: Color) -> Option<usize> {
        let mut hit: Option<usize> = None;
        let mut consider = |w: usize| {
            if self.color[w] == 0 && self.domain_size(w) == 0 {
                hit = Some(hit.map_or(w, |h: usize| h.min(w)));
            }
        };
        for &w in &self.adj[v] {
            consider(w);
            if self.color[w] == c {
                for &x in &self.adj[w] {
                    consider(x);
                }
            }
        }
        hit
    }

    /// Smallest live domain, then most colored neighbors, then lowest id.
    fn select(&self) -> usize {
        (0..self.n)
            .filter(|&w| self.color[w] == 0)
            .min_by_key(|&w| {
                let colored = self.adj[w].iter().filter(|&&u| self.color[u] != 0).count();
                (self.domain_size(w), usize::MAX - colored, w)
            })
            .expect("an uncolored vertex remains")
    }

    fn run(&mut self) -> Result<(), Failure> {
        if self.uncolored == 0 {
            self.solution = Some(self.color.clone());
            return Ok(());
        }
        let v = self.select();
        let mut conflict = VarSet::new(self.n);
        for c in 1..=self.k as Color {
            if !self.allowed(v, c) {
                conflict.union_with(&self.explain(v, c));
                continue;
            }
            if self.nodes >= self.budget {
                return Err(Failure::Budget);
            }
            self.nodes += 1;
            self.assign(v, c);
            let result = match self.forward_check(v, c) {
                Some(w) => Err(Failure::Conflict(self.wipeout_reason(w))),
                None => self.run(),
            };
            self.unassign(v);
            match result {
                Ok(()) => return Ok(()),
                Err(Failure::Budget) => return Err(Failure::Budget),
                Err(Failure::Conflict(mut below)) => {
                    if !below.contains(v) {
                        // v's value played no part; skip its other values
                        return Err(Failure::Conflict(below));
                    }
                    below.remove(v);
                    conflict.union_with(&below);
                }
            }
        }
        Err(Failure::Conflict(conflict))
    }
}

/// Decides whether `g` has a `spec`-coloring satisfying `cons`.
///
/// Unsat is only reported after the search space is exhausted; running out
/// of `budget` nodes gives [`SolveOutcome::BudgetExceeded`]. The result,
/// including the witness, is a deterministic function of the inputs.
pub fn solve(
    g: &Graph,
    spec: &ColoringSpec,
    cons: &ConstraintSet,
    budget: u64,
) -> Result<SolveRun, ColoringError> {
    if budget == 0 {
        return Err(ColoringError::ZeroBudget);
    }
    cons.validate(g, spec)?;
    let ids: Vec<VertexId> = g.vertices().collect();
    let n = ids.len();
    let k = spec.k();
    let index = |v: VertexId| ids.binary_search(&v).unwrap();
    let adj: Vec<Vec<usize>> = ids.iter().map(|&v| g.neighbors(v).map(index).collect()).collect();
    let static_domain: Vec<u64> = ids
        .iter()
        .map(|&v| {
            spec.colors()
                .filter(|&c| cons.permits(v, c))
                .fold(0u64, |m, c| m | (1 << (c - 1)))
        })
        .collect();
    if static_domain.iter().any(|&d| d == 0) {
        return Ok(SolveRun { outcome: SolveOutcome::Unsat, nodes: 0 });
    }
    let mut search = Search {
        n,
        k,
        ids,
        adj,
        defect: spec.defects().to_vec(),
        static_domain,
        color: vec![0; n],
        same: vec![0; n * k],
        uncolored: n,
        nodes: 0,
        budget,
        solution: None,
    };
    let outcome = match search.run() {
        Ok(()) => {
            let colors = search.solution.take().unwrap();
            SolveOutcome::Sat(search.ids.iter().copied().zip(colors).collect::<Coloring>())
        }
        Err(Failure::Budget) => SolveOutcome::BudgetExceeded(search.nodes),
        Err(Failure::Conflict(rest)) => {
            debug_assert!(rest.is_empty());
            SolveOutcome::Unsat
        }
    };
    Ok(SolveRun { outcome, nodes: search.nodes })
}

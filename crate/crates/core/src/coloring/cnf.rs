//! DIMACS CNF export.
//!
//! Variable `x(v, c)` (vertex index `i`, color `c`) is `i * k + c`. Each
//! vertex takes exactly one color. For every vertex `v` and color `c`, the
//! clause set `x(v, c) -> at most d_c of { x(u, c) : u in N(v) }` is encoded
//! with a sequential counter over the neighbors in increasing order. Counter
//! registers are tied to their inputs by full equivalences, so every
//! register is a function of the color variables and models correspond one
//! to one with valid constrained colorings.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::{Color, Coloring, ColoringError, ColoringSpec, ConstraintSet};
use crate::graph::{Graph, VertexId};

/// A CNF formula over variables `1..=num_vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: u32,
    pub clauses: Vec<Vec<i32>>,
}

impl Cnf {
    fn fresh(&mut self) -> i32 {
        self.num_vars += 1;
        self.num_vars as i32
    }

    /// Does `assignment` (indexed by variable, slot 0 unused) satisfy every
    /// clause?
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|cl| {
            cl.iter().any(|&l| assignment[l.unsigned_abs() as usize] == (l > 0))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfEncoding {
    pub cnf: Cnf,
    vertices: Vec<VertexId>,
    k: usize,
    comments: Vec<String>,
}

/// Register value: a literal, or a constant.
#[derive(Clone, Copy)]
enum Reg {
    False,
    True,
    Lit(i32),
}

impl CnfEncoding {
    pub fn color_var(&self, v: VertexId, c: Color) -> Option<i32> {
        let i = self.vertices.binary_search(&v).ok()?;
        Some((i * self.k + c as usize) as i32)
    }

    /// Reads the coloring off a model given as the list of true literals
    /// (DIMACS `v` line style; negative entries are ignored).
    pub fn decode(&self, model: &[i32]) -> Coloring {
        let mut coloring = Coloring::new();
        for &lit in model {
            if lit <= 0 || lit as usize > self.vertices.len() * self.k {
                continue;
            }
            let idx = (lit - 1) as usize;
            coloring.set(self.vertices[idx / self.k], (idx % self.k) as Color + 1);
        }
        coloring
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            let _ = writeln!(out, "c {c}");
        }
        let _ = writeln!(out, "p cnf {} {}", self.cnf.num_vars, self.cnf.clauses.len());
        for clause in &self.cnf.clauses {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }
}

/// `guard -> at most `bound` of `lits` are true`, sequential counter with
/// registers `s[i][j] <-> (at least j of lits[..=i])`.
fn at_most(cnf: &mut Cnf, guard: i32, lits: &[i32], bound: usize) {
    if bound >= lits.len() {
        return;
    }
    if bound == 0 {
        for &x in lits {
            cnf.clauses.push(alloc::vec![-guard, -x]);
        }
        return;
    }
    let mut prev: Vec<Reg> = Vec::new(); // prev[j - 1] = s[i - 1][j]
    for (i, &x) in lits.iter().enumerate() {
        if i > 0 {
            if let Some(&Reg::Lit(full)) = prev.get(bound - 1) {
                cnf.clauses.push(alloc::vec![-guard, -x, -full]);
            }
        }
        if i + 1 == lits.len() {
            break;
        }
        let mut cur = Vec::with_capacity(bound);
        for j in 1..=bound.min(i + 1) {
            // s[i][j] <-> s[i-1][j] | (x & s[i-1][j-1])
            let keep = prev.get(j - 1).copied().unwrap_or(Reg::False);
            let carry = if j == 1 { Reg::True } else { prev[j - 2] };
            let s = cnf.fresh();
            match keep {
                Reg::Lit(b) => {
                    cnf.clauses.push(alloc::vec![-b, s]);
                }
                Reg::True => unreachable!("registers are never constant true"),
                Reg::False => {}
            }
            match carry {
                Reg::True => {
                    cnf.clauses.push(alloc::vec![-x, s]);
                    let mut back = alloc::vec![-s, x];
                    if let Reg::Lit(b) = keep {
                        back.push(b);
                    }
                    cnf.clauses.push(back);
                }
                Reg::Lit(c) => {
                    cnf.clauses.push(alloc::vec![-x, -c, s]);
                    let mut back_x = alloc::vec![-s, x];
                    let mut back_c = alloc::vec![-s, c];
                    if let Reg::Lit(b) = keep {
                        back_x.push(b);
                        back_c.push(b);
                    }
                    cnf.clauses.push(back_x);
                    cnf.clauses.push(back_c);
                }
                Reg::False => unreachable!("carry comes from an existing register"),
            }
            cur.push(Reg::Lit(s));
        }
        prev = cur;
    }
}

/// Encodes "`g` has a `spec`-coloring satisfying `cons`" as CNF.
pub fn export_cnf(
    g: &Graph,
    spec: &ColoringSpec,
    cons: &ConstraintSet,
) -> Result<CnfEncoding, ColoringError> {
    let k = spec.k();
    if k < 2 {
        return Err(ColoringError::TooFewColorsForCnf(k));
    }
    cons.validate(g, spec)?;
    let vertices: Vec<VertexId> = g.vertices().collect();
    let n = vertices.len();
    let var = |i: usize, c: Color| (i * k + c as usize) as i32;
    let mut cnf = Cnf { num_vars: (n * k) as u32, clauses: Vec::new() };

    for i in 0..n {
        cnf.clauses.push(spec.colors().map(|c| var(i, c)).collect());
        for a in spec.colors() {
            for b in a + 1..=k as Color {
                cnf.clauses.push(alloc::vec![-var(i, a), -var(i, b)]);
            }
        }
    }
    for (v, c) in cons.forced() {
        let i = vertices.binary_search(&v).unwrap();
        cnf.clauses.push(alloc::vec![var(i, c)]);
    }
    for (v, c) in cons.forbidden() {
        let i = vertices.binary_search(&v).unwrap();
        cnf.clauses.push(alloc::vec![-var(i, c)]);
    }
    for (i, &v) in vertices.iter().enumerate() {
        for c in spec.colors() {
            let lits: Vec<i32> = g
                .neighbors(v)
                .map(|u| var(vertices.binary_search(&u).unwrap(), c))
                .collect();
            at_most(&mut cnf, var(i, c), &lits, spec.defect(c) as usize);
        }
    }

    let defects: Vec<String> = spec.defects().iter().map(|d| format!("{d}")).collect();
    let mut comments = alloc::vec![
        String::from("defcolor-cnf v1"),
        format!("spec ({})", defects.join(",")),
        format!("vertices {n} colors {k}; x(i,c) = i*{k} + c for vertex index i, color c"),
        String::from("at-most-d encoded by a sequential counter with full register equivalences"),
    ];
    for (i, v) in vertices.iter().enumerate() {
        if let Some(label) = g.label(*v) {
            comments.push(format!("label {i} {label}"));
        }
    }
    Ok(CnfEncoding { cnf, vertices, k, comments })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counts satisfying assignments by exhaustive enumeration.
    fn count_models(cnf: &Cnf) -> u64 {
        let n = cnf.num_vars as usize;
        assert!(n <= 24);
        let mut count = 0;
        for code in 0u64..(1 << n) {
            let mut a = alloc::vec![false; n + 1];
            for (bit, slot) in a.iter_mut().skip(1).enumerate() {
                *slot = code >> bit & 1 == 1;
            }
            if cnf.is_satisfied_by(&a) {
                count += 1;
            }
        }
        count
    }

    /// Models of `[guard] + at_most(lits, bound)` with guard forced true must
    /// number exactly the subsets of size <= bound.
    #[test]
    fn counter_counts_subsets_exactly() {
        for m in 1..=6usize {
            for bound in 0..=m {
                let mut cnf = Cnf { num_vars: m as u32 + 1, clauses: alloc::vec![alloc::vec![1]] };
                let lits: Vec<i32> = (2..=m as i32 + 1).collect();
                at_most(&mut cnf, 1, &lits, bound);
                let expected: u64 = (0..=bound).map(|j| binom(m as u64, j as u64)).sum();
                assert_eq!(count_models(&cnf), expected, "m={m} bound={bound}");
            }
        }
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn dimacs_header() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let spec = ColoringSpec::new([0, 0]).unwrap();
        let enc = export_cnf(&g, &spec, &ConstraintSet::new()).unwrap();
        let text = enc.to_dimacs();
        let header = text.lines().find(|l| l.starts_with("p ")).unwrap();
        assert_eq!(header, format!("p cnf {} {}", enc.cnf.num_vars, enc.cnf.clauses.len()));
        assert!(text.starts_with("c defcolor-cnf v1\n"));
        assert_eq!(enc.color_var(VertexId(1), 2), Some(4));
        assert_eq!(enc.decode(&[-1, 2, 3, -4, 5, -6]).get(VertexId(0)), Some(2));
    }

    #[test]
    fn single_color_rejected() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(
            export_cnf(&g, &ColoringSpec::new([3]).unwrap(), &ConstraintSet::new()),
            Err(ColoringError::TooFewColorsForCnf(1))
        );
    }
}

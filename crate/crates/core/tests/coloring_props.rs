use defcolor_core::coloring::{
    brute_force_oracle, export_cnf, for_each_valid_coloring, is_valid_coloring, Cnf,
};
use defcolor_core::{Color, ColoringSpec, ConstraintSet, Graph, SolveOutcome, VertexId};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let m = pairs.len();
        proptest::collection::vec(prop::bool::weighted(0.45), m).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&p, _)| p).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_spec() -> impl Strategy<Value = ColoringSpec> {
    proptest::collection::vec(0u32..3, 1..=3).prop_map(|d| ColoringSpec::new(d).unwrap())
}

/// A few random force/forbid entries on vertices `0..8` with colors `1..=3`,
/// kept only where they fit the graph and spec.
fn constraints(g: &Graph, spec: &ColoringSpec, raw: &[(u32, Color, bool)]) -> ConstraintSet {
    let mut cons = ConstraintSet::new();
    for &(v, c, force) in raw {
        let v = VertexId(v);
        if !g.contains(v) || c as usize > spec.k() {
            continue;
        }
        cons = if force { cons.force(v, c) } else { cons.forbid(v, c) };
    }
    cons
}

/// Number of models, by branching on the first unassigned variable of the
/// first clause not yet satisfied.
fn count_models(cnf: &Cnf) -> u64 {
    fn go(cnf: &Cnf, a: &mut Vec<Option<bool>>) -> u64 {
        let mut open = None;
        for cl in &cnf.clauses {
            let mut sat = false;
            let mut free = None;
            for &l in cl {
                match a[l.unsigned_abs() as usize] {
                    Some(b) if b == (l > 0) => sat = true,
                    Some(_) => {}
                    None => free = free.or(Some(l.unsigned_abs() as usize)),
                }
            }
            if sat {
                continue;
            }
            match free {
                None => return 0,
                Some(x) => {
                    open = Some(x);
                    break;
                }
            }
        }
        let Some(x) = open else {
            // every clause satisfied: unassigned variables are free
            let free = a.iter().skip(1).filter(|v| v.is_none()).count();
            return 1 << free;
        };
        let mut total = 0;
        for b in [false, true] {
            a[x] = Some(b);
            total += go(cnf, a);
        }
        a[x] = None;
        total
    }
    go(cnf, &mut vec![None; cnf.num_vars as usize + 1])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn solve_agrees_with_brute_force(
        g in arb_graph(7),
        spec in arb_spec(),
        raw in proptest::collection::vec((0u32..8, 1u8..=3, any::<bool>()), 0..3),
    ) {
        let cons = constraints(&g, &spec, &raw);
        let fast = defcolor_core::solve(&g, &spec, &cons, u64::MAX).unwrap();
        let slow = brute_force_oracle(&g, &spec, &cons).unwrap();
        prop_assert_eq!(fast.outcome.is_sat(), slow.outcome.is_sat());
        if let SolveOutcome::Sat(c) = &fast.outcome {
            prop_assert_eq!(is_valid_coloring(&g, &spec, c), Ok(true));
            prop_assert!(cons.is_satisfied_by(c));
            prop_assert_eq!(c.len(), g.vertex_count());
        }
    }

    #[test]
    fn more_defect_never_hurts(g in arb_graph(8), spec in arb_spec(), bump in 0usize..3) {
        let mut d = spec.defects().to_vec();
        let i = bump % d.len();
        d[i] += 1;
        let bigger = ColoringSpec::new(d).unwrap();
        prop_assert!(bigger.dominates(&spec));
        let none = ConstraintSet::new();
        let small = defcolor_core::solve(&g, &spec, &none, u64::MAX).unwrap().outcome;
        let large = defcolor_core::solve(&g, &bigger, &none, u64::MAX).unwrap().outcome;
        prop_assert!(!small.is_sat() || large.is_sat());
    }

    #[test]
    fn solve_is_deterministic(g in arb_graph(8), spec in arb_spec()) {
        let none = ConstraintSet::new();
        let a = defcolor_core::solve(&g, &spec, &none, 10_000).unwrap();
        let b = defcolor_core::solve(&g, &spec, &none, 10_000).unwrap();
        prop_assert_eq!(a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn cnf_models_are_colorings(
        g in arb_graph(5),
        d1 in 0u32..3,
        d2 in 0u32..3,
        raw in proptest::collection::vec((0u32..5, 1u8..=2, any::<bool>()), 0..2),
    ) {
        let spec = ColoringSpec::new([d1, d2]).unwrap();
        let cons = constraints(&g, &spec, &raw);
        let enc = export_cnf(&g, &spec, &cons).unwrap();
        let mut expected = 0u64;
        for_each_valid_coloring(&g, &spec, |c| {
            if cons.is_satisfied_by(c) {
                expected += 1;
            }
            true
        })
        .unwrap();
        prop_assert_eq!(count_models(&enc.cnf), expected);
    }
}

#[test]
fn budget_exhaustion_is_not_unsat() {
    let mut e = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            e.push((i, j));
        }
    }
    let k8 = Graph::from_edges(8, &e).unwrap();
    let spec = ColoringSpec::new([1, 1]).unwrap();
    let run = defcolor_core::solve(&k8, &spec, &ConstraintSet::new(), 5).unwrap();
    assert_eq!(run.outcome, SolveOutcome::BudgetExceeded(5));
    let run = defcolor_core::solve(&k8, &spec, &ConstraintSet::new(), u64::MAX).unwrap();
    assert_eq!(run.outcome, SolveOutcome::Unsat);
}

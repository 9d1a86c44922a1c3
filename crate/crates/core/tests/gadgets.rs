use defcolor_core::coloring::brute_force_oracle;
use defcolor_core::gadgets::{huv, non_1k, np_reduce, np_reduce_embedded, s_gadget};
use defcolor_core::{solve, ColoringSpec, ConstraintSet, Graph, SolveOutcome};

fn spec(d: &[u32]) -> ColoringSpec {
    ColoringSpec::new(d.to_vec()).unwrap()
}

#[test]
fn huv_lemma_matches_brute_force() {
    let h = huv();
    let t = |n: &str| h.terminal(n).unwrap();
    let mut cons = ConstraintSet::new().force(t("u"), 2).force(t("v"), 2);
    for n in ["a", "b", "c", "d"] {
        cons = cons.forbid(t(n), 2);
    }
    for k in 1..=3 {
        let s = spec(&[1, k]);
        assert!(brute_force_oracle(&h.graph, &s, &cons).unwrap().outcome.is_unsat());
        assert!(solve(&h.graph, &s, &cons, 1_000).unwrap().outcome.is_unsat());
    }
    // freeing b or d breaks the obstruction; a or c alone does not, since
    // b d c still needs color 1 with d seeing two 1-neighbors
    for (n, sat) in [("a", false), ("b", true), ("c", false), ("d", true)] {
        let mut loose = ConstraintSet::new().force(t("u"), 2).force(t("v"), 2);
        for m in ["a", "b", "c", "d"].into_iter().filter(|&m| m != n) {
            loose = loose.forbid(t(m), 2);
        }
        let run = brute_force_oracle(&h.graph, &spec(&[1, 1]), &loose).unwrap();
        assert_eq!(run.outcome.is_sat(), sat, "{n}");
    }
}

/// With `z` and one `x_j` both colored 2, some copy between them has no
/// neighbor of either colored 2, and that copy cannot be finished.
#[test]
fn amplifier_blocks_two_at_both_ends() {
    for k in 1..=2u32 {
        let s = s_gadget(k as usize).unwrap();
        let z = s.terminal("z").unwrap();
        for x in ["x1", "x2", "x3"] {
            let cons = ConstraintSet::new().force(z, 2).force(s.terminal(x).unwrap(), 2);
            let run = solve(&s.graph, &spec(&[1, k]), &cons, 10_000_000).unwrap();
            assert_eq!(run.outcome, SolveOutcome::Unsat, "k={k} {x}");
        }
        // so z itself can never take color 2
        let two = ConstraintSet::new().force(z, 2);
        assert!(solve(&s.graph, &spec(&[1, k]), &two, 10_000_000).unwrap().outcome.is_unsat());
    }
    // With k = 1 the amplifier alone is already stuck: z = 1 pushes every x_j
    // to color 2 and the path x1 x2 x3 breaks the bound. With k = 2, z = 1
    // extends.
    for (k, sat) in [(1, false), (2, true)] {
        let s = s_gadget(k).unwrap();
        let one = ConstraintSet::new().force(s.terminal("z").unwrap(), 1);
        let run = solve(&s.graph, &spec(&[1, k as u32]), &one, 10_000_000).unwrap();
        assert_eq!(run.outcome.is_sat(), sat, "k={k}");
    }
}

#[test]
fn composite_is_not_1k_colorable() {
    for k in 1..=2u32 {
        let g = non_1k(k as usize).unwrap();
        let run = solve(&g.graph, &spec(&[1, k]), &ConstraintSet::new(), 50_000_000).unwrap();
        assert_eq!(run.outcome, SolveOutcome::Unsat, "k={k}");
    }
}

#[test]
fn outputs_are_reproducible() {
    assert_eq!(non_1k(1).unwrap(), non_1k(1).unwrap());
    assert_eq!(s_gadget(2).unwrap(), s_gadget(2).unwrap());
    let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
    assert_eq!(np_reduce(&c6, 3).unwrap(), np_reduce(&c6, 3).unwrap());
}

#[test]
fn reduction_preserves_01_colorability_on_small_cases() {
    let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
    let c7 = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)]).unwrap();
    for g in [c6, c7] {
        let base = solve(&g, &spec(&[0, 1]), &ConstraintSet::new(), u64::MAX).unwrap().outcome;
        for k in 2..=3 {
            let h = np_reduce(&g, k).unwrap();
            assert!(h.graph.is_c4c5_free());
            let big = solve(&h.graph, &spec(&[0, k as u32]), &ConstraintSet::new(), u64::MAX)
                .unwrap()
                .outcome;
            assert_eq!(base.is_sat(), big.is_sat());
        }
    }
    let hex = huv().embedding.unwrap();
    let h = np_reduce_embedded(&hex, 2).unwrap();
    assert_eq!(h.graph, np_reduce(&huv().graph, 2).unwrap().graph);
}

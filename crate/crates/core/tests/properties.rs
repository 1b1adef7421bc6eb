//! Property suites for the structural invariants: codegree accounting,
//! containment monotonicity, the clique fast path against the generic
//! search, construction identities, and text-format round trips.

use proptest::prelude::*;

use codegree::constructions::{
    from_colouring, from_tournament, joint_restriction, ramsey_construction, suspension,
    PairColouring, Tournament,
};
use codegree::hypergraph::{all_pairs, all_triples, pair_count, triple_count, PairGraph, TriSystem};
use codegree::subgraph::{clique_number_at_least, contains, verify_embedding};

fn arb_trisystem(max_n: usize) -> impl Strategy<Value = TriSystem> {
    (2..=max_n).prop_flat_map(|n| {
        let nt = triple_count(n);
        proptest::collection::vec(any::<bool>(), nt).prop_map(move |keep| {
            let edges = all_triples(n)
                .zip(keep)
                .filter(|(_, k)| *k)
                .map(|(t, _)| t);
            TriSystem::new(n, edges).expect("generated triples are valid")
        })
    })
}

fn arb_colouring(max_n: usize, s: usize) -> impl Strategy<Value = PairColouring> {
    (3..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(1..=s as u16, pair_count(n))
            .prop_map(move |colours| PairColouring::new(n, s, colours).expect("valid"))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn codegree_accounting(g in arb_trisystem(8)) {
        let counts = g.codegree_counts();
        let total: usize = counts.iter().sum();
        prop_assert_eq!(total, 3 * g.edge_count());
        for p in all_pairs(g.n()) {
            let d = g.codegree(p[0], p[1]).unwrap();
            prop_assert_eq!(d, g.codegree(p[1], p[0]).unwrap());
            prop_assert!(d <= g.n() - 2);
        }
        for (v, deg) in g.degrees().iter().enumerate() {
            prop_assert_eq!(g.link_graph(v).unwrap().edge_count(), *deg);
        }
    }

    #[test]
    fn containment_is_reflexive_and_monotone(g in arb_trisystem(7), extra in any::<u32>()) {
        let w = contains(&g, &g);
        prop_assert!(w.is_some());
        prop_assert!(verify_embedding(&g, &g, &w.unwrap()));

        // Add some edges to g; every pattern it contained stays contained.
        let mut edges: Vec<[usize; 3]> = g.edges().to_vec();
        for (i, t) in all_triples(g.n()).enumerate() {
            if extra >> (i % 32) & 1 == 1 && !g.has_edge(t) {
                edges.push(t);
            }
        }
        let bigger = TriSystem::new(g.n(), edges).unwrap();
        prop_assert!(contains(&bigger, &g).is_some());
    }

    #[test]
    fn clique_path_agrees_with_generic_containment(g in arb_trisystem(8), s in 3usize..=8) {
        let fast = clique_number_at_least(&g, s).unwrap();
        let generic = contains(&g, &TriSystem::complete(s)).is_some();
        prop_assert_eq!(fast, generic);
    }

    #[test]
    fn tri_text_round_trips(g in arb_trisystem(8)) {
        let text = codegree::io::write_tri_string(&g);
        let path = std::env::temp_dir().join(format!("codegree-prop-{}.tri", std::process::id()));
        std::fs::write(&path, text).unwrap();
        let back = codegree::io::read_tri_file(&path).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn colour_relabelling_fixes_the_graph(c in arb_colouring(8, 4), perm_seed in 0u64..24) {
        // Apply one of the 24 permutations of the 4 colours.
        let perms: Vec<Vec<u16>> = {
            let mut out = Vec::new();
            let items = [1u16, 2, 3, 4];
            for a in 0..4 { for b in 0..4 { for cc in 0..4 {
                if a == b || b == cc || a == cc { continue; }
                let d = 6 - a - b - cc;
                out.push(vec![items[a], items[b], items[cc], items[d]]);
            }}}
            out
        };
        let perm = &perms[(perm_seed % 24) as usize];
        let relabelled = PairColouring::new(
            c.n(),
            4,
            c.colours().iter().map(|&x| perm[(x - 1) as usize]).collect(),
        ).unwrap();
        prop_assert_eq!(from_colouring(&c), from_colouring(&relabelled));
    }

    #[test]
    fn tournament_equals_its_colouring(forward in proptest::collection::vec(any::<bool>(), 28)) {
        let t = Tournament::new(8, forward).unwrap();
        prop_assert_eq!(from_tournament(&t), from_colouring(&t.as_colouring()));
    }

    #[test]
    fn ramsey_construction_extends_colouring(c in arb_colouring(8, 2)) {
        let base = from_colouring(&c);
        let ramsey = ramsey_construction(&c).unwrap();
        for t in base.edges() {
            prop_assert!(ramsey.has_edge(*t));
        }
    }

    #[test]
    fn suspension_link_is_the_original(n in 1usize..=7, mask in any::<u32>()) {
        let pairs = all_pairs(n)
            .enumerate()
            .filter(|(i, _)| mask >> (i % 32) & 1 == 1)
            .map(|(_, p)| p);
        let h = PairGraph::new(n, pairs).unwrap();
        prop_assert_eq!(suspension(&h).link_graph(n).unwrap(), h);
    }

    #[test]
    fn restriction_codegrees_drop_by_at_most_the_outside(g in arb_trisystem(8)) {
        let n = g.n();
        for p in all_pairs(n) {
            let inside = g.joint_neighbourhood(p[0], p[1]).unwrap();
            let restricted = joint_restriction(&g, p[0], p[1]).unwrap();
            let slack = n - inside.len();
            for (bi, &b) in inside.iter().enumerate() {
                for (ai, &a) in inside.iter().enumerate().take(bi) {
                    let before = g.codegree(a, b).unwrap();
                    let after = restricted.codegree(ai, bi).unwrap();
                    prop_assert!(after + slack >= before,
                        "pair ({a},{b}): {after} + {slack} < {before}");
                }
            }
        }
    }
}

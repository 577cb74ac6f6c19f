use lamplight::ev::{build_gadget, min_ev, verify_ev};
use lamplight::gf2::DEFAULT_NULLITY_CAP;
use lamplight::graph::{generate, parse_graph, random_connected, write_graph, Format, GraphKind};
use lamplight::oracle::{brute_solutions_ee, brute_solutions_ev, brute_solutions_vv};
use lamplight::vv_ee::{min_ee, min_vv};
use lamplight::{solve_report, verify_witness, Graph, Problem};
use proptest::prelude::*;

fn connected() -> impl Strategy<Value = Graph> {
    (1usize..=9, 0usize..12, any::<u64>())
        .prop_map(|(n, extra, seed)| random_connected(n, extra, seed).unwrap())
}

fn even_connected() -> impl Strategy<Value = Graph> {
    (1usize..=5, 0usize..10, any::<u64>())
        .prop_map(|(h, extra, seed)| random_connected(2 * h, extra, seed).unwrap())
}

// at most 7 vertices keeps the cycle space within the oracle's budget
fn any_graph() -> impl Strategy<Value = Graph> {
    (1usize..=7, 0.0f64..1.0, any::<u64>())
        .prop_map(|(n, p, seed)| generate(GraphKind::RandomGraph { n, p, seed }).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn every_solution_has_a_gadget_matching(g in even_connected()) {
        let gadget = build_gadget(&g).unwrap();
        for s in brute_solutions_ev(&g).unwrap() {
            let m = gadget.matching_for(&g, &s).unwrap();
            prop_assert!(gadget.star.is_perfect_matching(&m));
            prop_assert_eq!(gadget.star.weight_of(&m), 2 * s.count_ones() as u64);
            prop_assert_eq!(gadget.extract(&m), s);
        }
    }

    #[test]
    fn minimum_ev_matches_enumeration(g in any_graph()) {
        let best = brute_solutions_ev(&g).unwrap().iter().map(|s| s.count_ones()).min();
        let got = min_ev(&g).unwrap();
        prop_assert_eq!(got.as_ref().map(|s| s.size), best);
        if let Some(s) = got {
            prop_assert!(verify_ev(&g, &s.edges));
        }
    }

    #[test]
    fn minimum_vv_and_ee_match_enumeration(g in connected()) {
        let vv = brute_solutions_vv(&g).unwrap().iter().map(|s| s.count_ones()).min();
        prop_assert_eq!(min_vv(&g, DEFAULT_NULLITY_CAP).unwrap().map(|x| x.count_ones()), vv);
        if g.m() <= 14 {
            let ee = brute_solutions_ee(&g).unwrap().iter().map(|s| s.count_ones()).min();
            prop_assert_eq!(min_ee(&g, DEFAULT_NULLITY_CAP).unwrap().map(|x| x.count_ones()), ee);
        }
    }

    #[test]
    fn reports_verify(g in any_graph(), minimum in any::<bool>()) {
        for p in Problem::ALL {
            let r = solve_report(&g, p, minimum, DEFAULT_NULLITY_CAP).unwrap();
            if r.feasible {
                prop_assert!(verify_witness(&g, p, &r.witness).unwrap());
                prop_assert_eq!(r.size, Some(r.witness.len()));
                if let (Some(lo), Some(hi)) = (r.bounds.lower, r.bounds.upper) {
                    if r.optimal {
                        prop_assert!(lo <= r.witness.len() && r.witness.len() <= hi);
                    }
                }
            }
        }
    }

    #[test]
    fn text_formats_round_trip(g in any_graph()) {
        for f in [Format::EdgeList, Format::Dimacs] {
            let text = write_graph(&g, f);
            prop_assert_eq!(Format::detect(&text), f);
            prop_assert_eq!(parse_graph(&text, f).unwrap(), g.clone());
        }
    }

    #[test]
    fn relabelling_keeps_minimum_size(g in even_connected(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(
            min_ev(&g).unwrap().map(|s| s.size),
            min_ev(&h).unwrap().map(|s| s.size)
        );
    }
}

#[test]
fn disconnected_minimum_composes() {
    let c4 = generate(GraphKind::Cycle(4)).unwrap();
    let star = generate(GraphKind::Star(4)).unwrap();
    let g = c4.disjoint_union(&star);
    let s = min_ev(&g).unwrap().unwrap();
    assert_eq!(s.size, 2 + 3);
    assert!(verify_ev(&g, &s.edges));
    assert!(min_ev(&g.disjoint_union(&Graph::empty(1)))
        .unwrap()
        .is_none());
}

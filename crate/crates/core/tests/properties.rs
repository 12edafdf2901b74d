use cobond::bonds::{all_bonds, is_bond};
use cobond::construct::treewidth::composed_tree_decomposition;
use cobond::decomp::{strip_redundant_bags, validate_path_decomposition, validate_tree_decomposition};
use cobond::formats::{parse_edge_list, parse_graph6, to_graph6, write_edge_list, InputGraph};
use cobond::graph::is_two_connected;
use cobond::oracles::{exact_pathwidth, exact_treewidth};
use cobond::{bond_certified_pd, cocircumference, Graph};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            Graph::new(n, all.zip(bits).filter(|(_, k)| *k).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn composed_tree_decomposition_is_certified(g in graph(9)) {
        let c = composed_tree_decomposition(&g).unwrap();
        prop_assert_eq!(validate_tree_decomposition(&g, &c.decomposition), Ok(()));
        for (bag, cert) in c.decomposition.bags.iter().zip(&c.certificates) {
            match cert {
                Some(f) => {
                    prop_assert!(is_bond(&g, &f.edges).unwrap().is_some());
                    prop_assert!(bag.len() - 1 <= f.len());
                }
                None => prop_assert_eq!(bag.len(), 1),
            }
        }
        if g.m() > 0 {
            prop_assert!(c.width() <= cocircumference(&g).unwrap().0);
            prop_assert!(exact_treewidth(&g).unwrap() <= c.width());
        }
    }

    #[test]
    fn every_enumerated_bond_is_minimal(g in graph(7)) {
        for b in all_bonds(&g).unwrap() {
            prop_assert!(is_bond(&g, &b.edges).unwrap().is_some());
            for i in 0..b.edges.len() {
                let mut sub = b.edges.clone();
                sub.remove(i);
                prop_assert!(sub.is_empty() || is_bond(&g, &sub).unwrap().is_none());
            }
        }
    }

    #[test]
    fn edge_certificates_hold(g in graph(8)) {
        prop_assume!(is_two_connected(&g));
        let pw = exact_pathwidth(&g).unwrap();
        for e in g.edges() {
            let c = bond_certified_pd(&g, e.0, e.1).unwrap();
            prop_assert!(c.bond.contains_edge(*e));
            prop_assert_eq!(validate_path_decomposition(&g, &c.pd, None, None), Ok(()));
            prop_assert!(pw <= c.width() && c.width() <= c.bound());
            let s = strip_redundant_bags(&c.pd);
            prop_assert_eq!(validate_path_decomposition(&g, &s, None, None), Ok(()));
            prop_assert!(s.width().unwrap() <= c.width());
        }
    }

    #[test]
    fn formats_round_trip(g in graph(12)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g).unwrap()).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), InputGraph::Simple(g));
    }
}

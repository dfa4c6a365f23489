use gsym_core::{complement, Graph, GraphFamily};
use gsym_trees::{
    cofactor, count_labeled_trees, count_with_valences, deletion_contraction, enumerate_spanning_trees, labeled_trees,
    prufer_decode, prufer_encode, spanning_tree_count, LabeledTree, PruferSeq, SpanningMethod,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn family(s: &str) -> Graph {
    s.parse::<GraphFamily>().unwrap().build().unwrap()
}

#[test]
fn a_tree_spans_itself_once() {
    for t in labeled_trees(6).unwrap() {
        assert_eq!(cofactor(&t.to_graph(), 0, 0).unwrap(), BigInt::from(1));
    }
}

#[test]
fn complete_graph_spanning_trees_are_labelled_trees() {
    for n in 2..=7 {
        let g = GraphFamily::K(n).build().unwrap();
        assert_eq!(
            spanning_tree_count(&g, SpanningMethod::Cofactor).unwrap().exact.unwrap(),
            count_labeled_trees(n).unwrap()
        );
    }
}

#[test]
fn named_counts() {
    for (name, count) in [("petersen", 2000), ("cube3", 384), ("prism:c5", 1805), ("k3", 3), ("c9", 9)] {
        let g = family(name);
        assert_eq!(deletion_contraction(&g).unwrap(), BigInt::from(count), "{name}");
        assert_eq!(enumerate_spanning_trees(&g).unwrap(), BigInt::from(count), "{name}");
    }
    let circ = spanning_tree_count(&family("chord:10,4"), SpanningMethod::Circulant).unwrap().value;
    let exact = cofactor(&family("chord:10,4"), 0, 0).unwrap();
    assert!((circ - exact.to_string().parse::<f64>().unwrap()).abs() < 1e-6 * circ);
}

#[test]
fn disconnected_graphs_are_rejected() {
    let g = complement(&GraphFamily::K(4).build().unwrap());
    assert!(spanning_tree_count(&g, SpanningMethod::Cofactor).is_err());
}

fn arb_sequence() -> impl Strategy<Value = PruferSeq> {
    (2usize..12)
        .prop_flat_map(|n| proptest::collection::vec(0..n, n - 2).prop_map(move |v| PruferSeq::new(n, v).unwrap()))
}

proptest! {
    #[test]
    fn decoded_trees_have_the_encoded_valences(s in arb_sequence()) {
        let t: LabeledTree = prufer_decode(&s);
        let v = t.valences();
        for (i, &d) in v.iter().enumerate() {
            prop_assert_eq!(d - 1, s.values().iter().filter(|&&x| x == i).count());
        }
        prop_assert_eq!(prufer_encode(&t).unwrap(), s.clone());
        prop_assert!(count_with_valences(&v).unwrap() >= BigInt::from(1));
    }
}

use gsym_core::{complement, Graph};
use gsym_quantum::{is_prime, quantum_flag, quantum_table, two_maximal, Verdict};
use proptest::prelude::*;

#[test]
fn table_pattern() {
    for row in quantum_table() {
        let g = row.family.build().unwrap();
        let expected = if row.differs() { Verdict::HasQuantum } else { Verdict::NoQuantum };
        for (name, h) in [("graph", g.clone()), ("complement", complement(&g))] {
            let f = quantum_flag(&h).unwrap();
            assert_eq!(f.verdict, expected, "{} ({name}) via {}: {}", row.label, f.rule, f.reason);
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_relation(n, |_, _| it.next().unwrap())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]
    #[test]
    fn complement_invariance(g in arb_graph(9)) {
        let a = quantum_flag(&g).unwrap();
        let b = quantum_flag(&complement(&g)).unwrap();
        if a.verdict != Verdict::Unknown || b.verdict != Verdict::Unknown {
            prop_assert_eq!(a.verdict, b.verdict, "{} vs {}", a.rule, b.rule);
        }
    }

    #[test]
    fn certificates_are_sound(g in arb_graph(11)) {
        let f = quantum_flag(&g).unwrap();
        if let Some(c) = f.certificate {
            prop_assert_eq!(f.verdict, Verdict::NoQuantum);
            prop_assert!(is_prime(c.p) && c.p >= 5 && c.p == g.n());
            prop_assert!(two_maximal(&c.e, c.p).unwrap());
        }
    }
}

fn arb_circulant() -> impl Strategy<Value = (usize, Graph)> {
    prop_oneof![Just(5usize), Just(7), Just(11), Just(13)].prop_flat_map(|p| {
        proptest::collection::vec(any::<bool>(), (p - 1) / 2).prop_map(move |bits| {
            let g = Graph::from_relation(p, |i, j| {
                let r = (j + p - i) % p;
                bits[r.min(p - r) - 1]
            });
            (p, g)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn circulant_certificates_are_sound((p, g) in arb_circulant(), shift in 1usize..4) {
        let label: Vec<usize> = (0..p).map(|i| (i * (shift + 1)) % p).collect();
        for h in [g.clone(), g.relabel(&label).unwrap()] {
            let f = gsym_quantum::no_quantum_cert_circulant(&h);
            let data = gsym_quantum::circulant_data(&g).unwrap();
            let expect = two_maximal(&data.e, p).unwrap();
            prop_assert_eq!(f.verdict == Verdict::NoQuantum, expect);
            if let Some(c) = f.certificate {
                prop_assert!(two_maximal(&c.e, c.p).unwrap());
                prop_assert!(gsym_quantum::circulant_data(&h.relabel(&c.labelling).unwrap()).is_some());
            }
        }
    }
}

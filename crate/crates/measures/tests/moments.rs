use gsym_core::{Graph, GraphFamily};
use gsym_measures::{
    ade_t_series, bell_numbers, check_t_series, circular_measure, circular_moment, hankel_positive, loop_counts,
    moments_match, spectral_measure, DensityLaw, MomentOracle, MomentSequence,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn family(s: &str) -> Graph {
    s.parse::<GraphFamily>().unwrap().build().unwrap()
}

#[test]
fn spectral_measure_reproduces_loop_counts() {
    for name in ["petersen", "cube3", "c7", "k5", "segment6", "kneser:6,2", "ade:E7"] {
        let g = family(name);
        for root in [0, g.n() - 1] {
            let loops = loop_counts(&g, root, 12).unwrap();
            let mu = spectral_measure(&g, root).unwrap();
            assert!(moments_match(&mu, &loops, 1e-9), "{name} root {root}");
            assert!((mu.weights().iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn segment_end_gives_catalan_loops() {
    let g = family("segment20");
    let loops = loop_counts(&g, 0, 18).unwrap();
    for k in 0..=9 {
        assert_eq!(loops[2 * k], MomentOracle::Catalan.value(k));
    }
    assert!(loops.iter().skip(1).step_by(2).all(|x| *x == BigInt::from(0)));
}

#[test]
fn density_laws_match_their_oracles() {
    let oracle = [
        (DensityLaw::Semicircle, MomentOracle::Catalan, true),
        (DensityLaw::MarchenkoPastur, MomentOracle::Catalan, false),
        (DensityLaw::Arcsine, MomentOracle::Central, false),
        (DensityLaw::ModifiedArcsine, MomentOracle::Middle, false),
    ];
    for (law, seq, even_only) in oracle {
        for k in 0..=8u32 {
            let got = law.moment(k).unwrap();
            let want = if even_only {
                if k % 2 == 1 {
                    0.0
                } else {
                    seq.value(k as usize / 2).to_f64().unwrap()
                }
            } else {
                seq.value(k as usize).to_f64().unwrap()
            };
            assert!((got - want).abs() <= 1e-8 * want.max(1.0), "{law:?} k={k}: {got} vs {want}");
            assert_eq!(law.oracle_moment(k as usize).to_f64().unwrap(), want, "{law:?} k={k}");
        }
    }
}

#[test]
fn oracles_are_hankel_positive() {
    for seq in MomentOracle::ALL {
        let m = MomentSequence::from_integers(&seq.sequence(12));
        assert!(hankel_positive(&m).unwrap().positive, "{seq:?}");
    }
    assert_eq!(bell_numbers(6), [1, 1, 2, 5, 15, 52, 203].map(BigInt::from));
}

#[test]
fn hankel_rejects_a_non_moment_sequence() {
    let r = hankel_positive(&MomentSequence::from_i64(&[1, 0, -1])).unwrap();
    assert!(!r.positive);
    assert_eq!(r.first_failure, Some(2));
}

#[test]
fn ade_t_series_match_closed_forms() {
    for name in ["ade:A,6", "ade:D,7", "ade:E6", "ade:E7", "ade:E8", "ade:At,8"] {
        let fam: GraphFamily = name.parse().unwrap();
        let GraphFamily::Ade(tag, size) = fam.clone() else { unreachable!() };
        let expected = ade_t_series(tag, size).unwrap_or_else(|| panic!("{name}: no closed form"));
        let r = check_t_series(&fam.build().unwrap(), 16, Some(&expected)).unwrap();
        assert!(r.theta_integral && r.theta_paths_agree, "{name}");
        assert_eq!(r.matches, Some(true), "{name}");
    }
}

#[test]
fn circular_measure_of_a_cycle() {
    let g = family("c6").with_root(0).unwrap();
    let eps = circular_measure(&g).unwrap();
    assert!((circular_moment(&eps, 0) - 1.0).abs() < 1e-12);
    let loops = loop_counts(&g, 0, 6).unwrap();
    let mu = spectral_measure(&g, 0).unwrap();
    assert!(moments_match(&mu, &loops, 1e-9));
    assert!(circular_measure(&family("c6")).is_err());
    assert!(circular_measure(&family("k5").with_root(0).unwrap()).is_err());
}

proptest! {
    #[test]
    fn measures_of_finite_graphs_are_hankel_positive(n in 3usize..9, mask in any::<u64>()) {
        let g = Graph::from_relation(n, |i, j| j == i + 1 || mask >> ((i * 8 + j) % 64) & 1 == 1);
        let loops = loop_counts(&g, 0, 8).unwrap();
        let r = hankel_positive(&MomentSequence::from_integers(&loops)).unwrap();
        prop_assert!(r.positive);
        let mu = spectral_measure(&g, 0).unwrap();
        prop_assert!(moments_match(&mu, &loops, 1e-8));
    }
}

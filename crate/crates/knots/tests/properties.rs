use gsym_knots::{enumerate_nc2, jones_polynomial, BraidWord, LaurentPoly, TLElement};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn arb_element(k_up: usize, k_down: usize) -> impl Strategy<Value = TLElement<Q>> {
    let basis = enumerate_nc2(k_up, k_down).unwrap();
    let len = basis.len();
    proptest::collection::vec((0..len, -3i64..=3), 1..5).prop_map(move |terms| {
        terms.into_iter().fold(TLElement::zero(k_up, k_down), |acc, (i, c)| {
            acc.add(&TLElement::term(basis[i].clone(), q(c))).unwrap()
        })
    })
}

fn arb_braid(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (1..=max_strands).prop_flat_map(move |k| {
        let letter = if k == 1 {
            Just(0i32).boxed()
        } else {
            (1..k as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]).boxed()
        };
        proptest::collection::vec(letter, 0..=max_len)
            .prop_map(move |ls| BraidWord::new(k, ls.into_iter().filter(|&l| l != 0).collect()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn associative(a in arb_element(3, 1), b in arb_element(1, 5), c in arb_element(5, 3), n in 1i64..6) {
        let n = q(n);
        let left = a.compose(&b, &n).unwrap().compose(&c, &n).unwrap();
        let right = a.compose(&b.compose(&c, &n).unwrap(), &n).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn involution_antimultiplicative(a in arb_element(3, 3), b in arb_element(3, 3), n in 1i64..6) {
        let n = q(n);
        let lhs = a.compose(&b, &n).unwrap().involution();
        let rhs = b.involution().compose(&a.involution(), &n).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.involution().involution(), a);
    }

    #[test]
    fn trace_is_central(a in arb_element(3, 3), b in arb_element(3, 3), n in 1i64..6) {
        let n = q(n);
        let ab = a.compose(&b, &n).unwrap().markov_trace(&n).unwrap();
        let ba = b.compose(&a, &n).unwrap().markov_trace(&n).unwrap();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn markov_invariance(beta in arb_braid(4, 6), alpha_seed in proptest::collection::vec(-3i32..=3, 0..4), plus in any::<bool>()) {
        let v = jones_polynomial(&beta).unwrap();
        let k = beta.strands() as i32;
        let alpha: Vec<i32> = alpha_seed.into_iter().filter(|&l| l != 0 && l.abs() < k).collect();
        let alpha = BraidWord::new(beta.strands(), alpha).unwrap();
        prop_assert_eq!(&jones_polynomial(&beta.conjugate(&alpha).unwrap()).unwrap(), &v);
        prop_assert_eq!(&jones_polynomial(&beta.stabilize(plus)).unwrap(), &v);
    }

    #[test]
    fn skein(beta in arb_braid(4, 6), pick in any::<prop::sample::Index>()) {
        prop_assume!(!beta.letters().is_empty());
        let i = pick.index(beta.letters().len());
        let (plus, minus) = if beta.letters()[i] > 0 {
            (beta.clone(), beta.switch_letter(i, false).unwrap())
        } else {
            (beta.switch_letter(i, false).unwrap(), beta.clone())
        };
        let zero = beta.switch_letter(i, true).unwrap();
        let [vp, vm, v0] = [plus, minus, zero].map(|b| jones_polynomial(&b).unwrap());
        let s = |e: i32| LaurentPoly::monomial(e, BigInt::one());
        let lhs = &(&s(-2) * &vp) - &(&s(2) * &vm);
        let rhs = &(&s(1) - &s(-1)) * &v0;
        prop_assert_eq!(lhs, rhs);
    }
}

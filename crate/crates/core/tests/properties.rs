use proptest::prelude::*;

use extqsym::ballot::{enumerate, is_noncrossing, pairing_from_ballot, SeqFilter};
use extqsym::harmonics::{delta, is_harmonic, smallest_lex_monomial};
use extqsym::ideal::{leading_term_check, shift_identity_check, GFamily};
use extqsym::parse::{from_json, to_json};
use extqsym::quasisym::{pi, product_coefficient};
use extqsym::sym_coinv::reduce_mod_j;
use extqsym::{parse_poly, BinarySeq, ExtPolynomial, Monomial, Rational};

fn poly(n: usize) -> impl Strategy<Value = ExtPolynomial> {
    let mask = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    prop::collection::vec((any::<u64>(), -6i64..=6, 1i64..=4), 0..6).prop_map(move |terms| {
        ExtPolynomial::from_terms(
            n,
            terms
                .into_iter()
                .map(|(b, p, q)| (Monomial::from_bits(n, b & mask).unwrap(), Rational::new(p.into(), q.into()))),
        )
        .unwrap()
    })
}

fn sized<const MAX: usize>() -> impl Strategy<Value = usize> {
    0..=MAX
}

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Sign of the permutation sorting `seq`, by counting inversions pairwise.
fn sort_sign(seq: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 { 1 } else { -1 }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn monomial_product_matches_sorting_sign(n in 1usize..=12, a in any::<u64>(), b in any::<u64>()) {
        let mask = u64::MAX >> (64 - n);
        let (x, y) = (Monomial::from_bits(n, a & mask).unwrap(), Monomial::from_bits(n, b & mask).unwrap());
        let concat: Vec<usize> = x.indices().chain(y.indices()).collect();
        match x.mul(&y).unwrap() {
            None => prop_assert!(a & b & mask != 0),
            Some((sign, m)) => {
                prop_assert_eq!(m.bits(), (a | b) & mask);
                prop_assert_eq!(i64::from(sign.as_i8()), sort_sign(&concat));
            }
        }
    }

    #[test]
    fn multiplication_is_associative(t in sized::<7>().prop_flat_map(|n| (poly(n), poly(n), poly(n)))) {
        let (a, b, c) = t;
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(t in sized::<7>().prop_flat_map(|n| (poly(n), poly(n), poly(n)))) {
        let (a, b, c) = t;
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn graded_commutativity(t in sized::<7>().prop_flat_map(|n| (poly(n), poly(n), 0..=n, 0..=n))) {
        let (p, r, i, j) = t;
        let (a, b) = (p.homogeneous_part(i), r.homogeneous_part(j));
        let swapped = &b * &a;
        let expected = if i * j % 2 == 1 { -&swapped } else { swapped };
        prop_assert_eq!(&a * &b, expected);
    }

    #[test]
    fn partials_anticommute_and_square_to_zero(t in (1usize..=7).prop_flat_map(|n| (poly(n), 1..=n, 1..=n))) {
        let (p, i, j) = t;
        let a = p.partial(i).unwrap().partial(j).unwrap();
        let b = p.partial(j).unwrap().partial(i).unwrap();
        prop_assert_eq!(a, -&b);
        prop_assert!(p.partial(i).unwrap().partial(i).unwrap().is_zero());
    }

    #[test]
    fn partial_is_a_skew_derivation(t in (1usize..=7).prop_flat_map(|n| (poly(n), poly(n), 0..=n, 1..=n))) {
        let (p, r, d, i) = t;
        let a = p.homogeneous_part(d);
        let lhs = (&a * &r).partial(i).unwrap();
        let second = &a * &r.partial(i).unwrap();
        let rhs = &(&a.partial(i).unwrap() * &r) + &(if d % 2 == 1 { -&second } else { second });
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bar_is_an_involution_and_antimultiplicative(t in sized::<7>().prop_flat_map(|n| (poly(n), poly(n)))) {
        let (p, r) = t;
        prop_assert_eq!(p.bar().bar(), p.clone());
        prop_assert_eq!((&p * &r).bar(), &r.bar() * &p.bar());
    }

    #[test]
    fn inner_product_routes_agree(t in sized::<7>().prop_flat_map(|n| (poly(n), poly(n)))) {
        let (p, r) = t;
        let via_operator = ExtPolynomial::inner_product(&p, &r).unwrap();
        prop_assert_eq!(&via_operator, &ExtPolynomial::coefficient_dot(&p, &r).unwrap());
        prop_assert_eq!(via_operator, ExtPolynomial::inner_product(&r, &p).unwrap());
    }

    #[test]
    fn display_and_json_round_trip(t in sized::<9>().prop_flat_map(|n| (Just(n), poly(n)))) {
        let (n, p) = t;
        prop_assert_eq!(parse_poly(n, &p.to_string()).unwrap(), p.clone());
        let text = serde_json::to_string(&to_json(&p)).unwrap();
        prop_assert_eq!(from_json(&serde_json::from_str(&text).unwrap()).unwrap(), p);
    }

    #[test]
    fn pi_is_a_degree_preserving_involution(t in (2usize..=7).prop_flat_map(|n| (poly(n), 1..n))) {
        let (p, i) = t;
        let image = pi(i, &p).unwrap();
        for d in 0..=p.n() {
            prop_assert_eq!(pi(i, &p.homogeneous_part(d)).unwrap(), image.homogeneous_part(d));
        }
        prop_assert_eq!(pi(i, &image).unwrap(), p);
    }

    #[test]
    fn product_coefficient_is_symmetric(r in 0usize..60, s in 0usize..60) {
        prop_assert_eq!(product_coefficient(r, s), product_coefficient(s, r));
    }

    #[test]
    fn normal_form_is_linear_and_idempotent(t in sized::<7>().prop_flat_map(|n| (poly(n), poly(n), -3i64..=3))) {
        let (p, r, c) = t;
        let mut family = GFamily::new(p.n()).unwrap();
        let combo = &p + &r.scale(&q(c));
        let lhs = family.normal_form(&combo).unwrap().normal_form;
        let np = family.normal_form(&p).unwrap().normal_form;
        let nr = family.normal_form(&r).unwrap().normal_form;
        prop_assert_eq!(&lhs, &(&np + &nr.scale(&q(c))));
        prop_assert_eq!(&family.normal_form(&lhs).unwrap().normal_form, &lhs);
        for m in lhs.monomials() {
            prop_assert!(BinarySeq::from_monomial(m).is_ballot());
        }
        let res = family.normal_form(&combo).unwrap();
        prop_assert_eq!(res.reconstruct(&mut family).unwrap(), combo);
    }

    #[test]
    fn ideal_absorbs_products(t in (1usize..=7).prop_flat_map(|n| (poly(n), any::<u64>()))) {
        let (p, pick) = t;
        let n = p.n();
        let non_ballot = enumerate(n, SeqFilter::NonBallot).unwrap();
        let alpha = &non_ballot[(pick as usize) % non_ballot.len()];
        let mut family = GFamily::new(n).unwrap();
        let g = family.g(alpha).unwrap().clone();
        prop_assert!(family.in_ideal(&(&p * &g)).unwrap());
        prop_assert!(family.in_ideal(&(&g * &p)).unwrap());
    }

    #[test]
    fn reduce_mod_j_is_multiplicative(t in (1usize..=8).prop_flat_map(|n| (poly(n), poly(n)))) {
        let (p, r) = t;
        let lhs = reduce_mod_j(&(&p * &r)).unwrap();
        prop_assert_eq!(lhs, &reduce_mod_j(&p).unwrap() * &reduce_mod_j(&r).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn g_leading_term_and_shift(t in (1usize..=9).prop_flat_map(|n| (Just(n), any::<u64>()))) {
        let (n, bits) = t;
        let alpha = BinarySeq::from_bits(n, bits & (u64::MAX >> (64 - n))).unwrap();
        let mut family = GFamily::new(n).unwrap();
        prop_assert!(leading_term_check(&mut family, &alpha).unwrap());
        if n < 9 {
            prop_assert!(shift_identity_check(&alpha).unwrap());
        }
    }

    #[test]
    fn ballot_pairings(t in (0usize..=12).prop_flat_map(|n| (Just(n), any::<u64>()))) {
        let (n, bits) = t;
        let mask = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        let alpha = BinarySeq::from_bits(n, bits & mask).unwrap();
        prop_assume!(alpha.is_ballot());
        let c = pairing_from_ballot(&alpha).unwrap();
        prop_assert!(is_noncrossing(c.pairs()));
        prop_assert_eq!(c.len(), alpha.ones());
        let js: Vec<usize> = c.pairs().iter().map(|&(_, j)| j).collect();
        prop_assert_eq!(js, alpha.one_positions().collect::<Vec<_>>());
        if n <= 9 {
            let d = delta(&c, n).unwrap();
            prop_assert!(is_harmonic(&d));
            prop_assert_eq!(smallest_lex_monomial(&d), Some(alpha.to_monomial()));
        }
    }
}

use proptest::prelude::*;

use polarlink_core::ideal::{
    contains, dimension, groebner_basis, ideal_quotient, intersect, local_colength, mora_standard_basis, saturate,
    Colength, Ideal,
};
use polarlink_core::link::{lambda_from_gamma, morse_bounds, telescope_checks, telescope_sums, BoundFamily};
use polarlink_core::monomial::{Monomial, MonomialOrder};
use polarlink_core::oracle::truncated_colength_auto;
use polarlink_core::parse::parse_polynomial;
use polarlink_core::poly::{default_names, rat, Polynomial, Rational};
use polarlink_core::RationalMatrix;

const NVARS: usize = 3;

fn poly_with(nvars: usize, max_exp: u16, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0..=max_exp, nvars), -9i64..10, 1i64..4);
    prop::collection::vec(term, 0..max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            nvars,
            terms
                .into_iter()
                .map(|(e, n, d)| (Monomial::from_exponents(&e), Rational::new(n.into(), d.into()))),
        )
    })
}

fn poly_in(nvars: usize, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    poly_with(nvars, 3, max_terms)
}

fn poly() -> impl Strategy<Value = Polynomial> {
    poly_in(NVARS, 6)
}

fn nonzero_poly() -> impl Strategy<Value = Polynomial> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn invertible_matrix(dim: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(-5i64..6, dim * dim)
        .prop_map(move |v| {
            let rows = v.chunks(dim).map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
            RationalMatrix::from_rows(rows)
        })
        .prop_filter("invertible", |m| m.inverse().is_some())
}

/// Small ideals vanishing at the origin: generators without constant term.
fn small_ideal(nvars: usize) -> impl Strategy<Value = Ideal> {
    prop::collection::vec(poly_with(nvars, 2, 3), 1..3).prop_map(move |gens| {
        let gens = gens.into_iter().map(|g| {
            let c = Polynomial::constant(nvars, g.constant_term());
            &g - &c
        });
        Ideal::new(nvars, gens)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn print_then_parse(p in poly()) {
        let names = default_names(NVARS);
        let text = p.display(&names).to_string();
        let back = parse_polynomial(&text, &names).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.display(&names).to_string(), text);
    }

    #[test]
    fn linear_substitution_round_trip(p in poly(), m in invertible_matrix(NVARS)) {
        let inv = m.inverse().unwrap();
        let there = p.substitute_linear(&m).unwrap();
        prop_assert_eq!(there.substitute_linear(&inv).unwrap(), p);
    }

    #[test]
    fn order_is_additive(p in nonzero_poly(), q in nonzero_poly()) {
        let ord = |x: &Polynomial| x.order_of_vanishing().unwrap();
        prop_assert_eq!(ord(&(&p * &q)), ord(&p) + ord(&q));
    }

    #[test]
    fn leibniz_rule(p in poly(), q in poly(), i in 0..NVARS) {
        let d = |x: &Polynomial| x.partial_derivative(i).unwrap();
        prop_assert_eq!(d(&(&p * &q)), &(&d(&p) * &q) + &(&p * &d(&q)));
    }

    #[test]
    fn telescope_never_fails(inner in prop::collection::vec(0u64..50, 1..6)) {
        let mut gamma = vec![0];
        gamma.extend(inner);
        gamma.push(1);
        let n = gamma.len() - 2;
        let lambda = lambda_from_gamma(&gamma);
        for p in 0..=n {
            prop_assert!(telescope_sums(&lambda, &gamma, p).is_ok());
        }
        // right sides of the bounds are the signed telescope sums
        let checks = telescope_checks(&lambda, &gamma).unwrap();
        for row in morse_bounds(&gamma) {
            let c = checks[row.p];
            let sign = if row.p % 2 == 0 { 1 } else { -1 };
            let expected = match row.family {
                BoundFamily::Low => sign * c.forward,
                BoundFamily::High => sign * c.backward,
            };
            prop_assert_eq!(row.rhs, expected);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn global_dimension_is_coordinate_invariant(i in small_ideal(3), m in invertible_matrix(3)) {
        let moved = Ideal::new(3, i.generators().iter().map(|g| g.substitute_linear(&m).unwrap()));
        let a = dimension(&groebner_basis(&i, MonomialOrder::DegRevLex));
        let b = dimension(&groebner_basis(&moved, MonomialOrder::DegRevLex));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn local_dimension_is_coordinate_invariant(i in small_ideal(NVARS), m in invertible_matrix(NVARS)) {
        let moved = Ideal::new(NVARS, i.generators().iter().map(|g| g.substitute_linear(&m).unwrap()));
        let a = dimension(&mora_standard_basis(&i));
        let b = dimension(&mora_standard_basis(&moved));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn membership_by_normal_form_and_by_intersection(i in small_ideal(2), p in poly_in(2, 3), q in poly_in(2, 3)) {
        let gb = groebner_basis(&i, MonomialOrder::DegRevLex);
        // half the candidates are in the ideal by construction
        let mut candidates = vec![p.clone()];
        if let Some(g) = i.generators().first() {
            candidates.push(&(&p * g) + &(&q * i.generators().last().unwrap()));
        }
        for c in candidates.into_iter().filter(|c| !c.is_zero()) {
            let direct = contains(&gb, &c);
            let principal = Ideal::new(2, [c.clone()]);
            let meet = groebner_basis(&intersect(&i, &principal), MonomialOrder::DegRevLex);
            prop_assert_eq!(direct, contains(&meet, &c));
        }
    }

    #[test]
    fn saturation_contains_quotient_contains_ideal(i in small_ideal(2), j in small_ideal(2)) {
        let q = ideal_quotient(&i, &j);
        let (s, _) = saturate(&i, &j);
        let qb = groebner_basis(&q, MonomialOrder::DegRevLex);
        let sb = groebner_basis(&s, MonomialOrder::DegRevLex);
        for g in i.generators() {
            prop_assert!(contains(&qb, g));
        }
        for g in q.generators() {
            prop_assert!(contains(&sb, g));
        }
    }

    #[test]
    fn mora_matches_truncation(i in small_ideal(2), extra in 2u16..5) {
        // adding pure powers keeps the ideal zero-dimensional at the origin
        let x = Polynomial::term(Monomial::from_exponents(&[extra, 0]), rat(1));
        let y = Polynomial::term(Monomial::from_exponents(&[0, extra + 1]), rat(1));
        let i = i.with_generators([x, y]);
        let oracle = truncated_colength_auto(&i, 4, 40);
        prop_assert!(oracle.stable);
        prop_assert_eq!(local_colength(&i), Colength::Finite(oracle.value));
    }

    #[test]
    fn generator_order_does_not_change_reduced_basis(i in small_ideal(3)) {
        let mut rev = i.generators().to_vec();
        rev.reverse();
        let a = groebner_basis(&i, MonomialOrder::DegRevLex);
        let b = groebner_basis(&Ideal::new(3, rev), MonomialOrder::DegRevLex);
        prop_assert_eq!(a.basis(), b.basis());
    }
}

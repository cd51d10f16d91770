use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::parse::parse_polynomial_list;

fn ideal(text: &str, vars: &[&str]) -> Ideal {
    Ideal::new(vars.len(), parse_polynomial_list(text, vars).unwrap())
}

fn poly(text: &str, vars: &[&str]) -> Polynomial {
    crate::parse::parse_polynomial(text, vars).unwrap()
}

const XY: &[&str] = &["x", "y"];

fn same_ideal(a: &Ideal, b: &Ideal) -> bool {
    groebner_basis(a, MonomialOrder::DegRevLex) == groebner_basis(b, MonomialOrder::DegRevLex)
}

#[test]
fn groebner_trivial_cases() {
    let gb = groebner_basis(&ideal("x, y", XY), MonomialOrder::DegRevLex);
    assert_eq!(gb.basis(), &[poly("x", XY), poly("y", XY)]);
    let gb = groebner_basis(&Ideal::zero(2), MonomialOrder::DegRevLex);
    assert!(gb.basis().is_empty());
    assert_eq!(dimension(&gb), 2);
}

#[test]
fn groebner_membership_hand_example() {
    // x^3 = x*(x^2 - y) + x*y, and x*y = y*x ... the reduced basis must contain y-consequences
    let i = ideal("x^2 - y, x^3", XY);
    let gb = groebner_basis(&i, MonomialOrder::DegRevLex);
    assert!(contains(&gb, &poly("x^3", XY)));
    assert!(normal_form(&poly("x^3", XY), &gb).is_zero());
    // x*(x^2-y) - x^3 = -x*y, so x*y ∈ I; then y^2 = x^2*y - y*(x^2-y) ∈ I
    assert!(contains(&gb, &poly("x*y", XY)));
    assert!(contains(&gb, &poly("y^2", XY)));
    assert!(!contains(&gb, &poly("y", XY)));
    assert_eq!(gb.basis(), &[poly("x^2 - y", XY), poly("x*y", XY), poly("y^2", XY)]);
}

#[test]
fn buchberger_criterion_holds() {
    let i = ideal("x^3 - 2*x*y, x^2*y - 2*y^2 + x", XY);
    let gb = groebner_basis(&i, MonomialOrder::DegRevLex);
    for a in 0..gb.basis().len() {
        for b in a + 1..gb.basis().len() {
            assert!(normal_form(&s_polynomial(&gb, a, b), &gb).is_zero());
        }
    }
    for g in i.generators() {
        assert!(contains(&gb, g));
    }
    // classic example: reduced basis is {x^2, x*y, y^2 - x/2}
    assert_eq!(gb.basis(), &[poly("x^2", XY), poly("x*y", XY), poly("y^2 - 1/2*x", XY)]);
}

#[test]
fn reduced_basis_independent_of_generator_order() {
    let a = ideal("x^2*y - 1, x*y^2 - x, x + y^3", XY);
    let b = ideal("x + y^3, x*y^2 - x, x^2*y - 1", XY);
    assert_eq!(
        groebner_basis(&a, MonomialOrder::DegRevLex),
        groebner_basis(&b, MonomialOrder::DegRevLex)
    );
}

#[test]
fn normal_form_examples() {
    let gb = groebner_basis(&ideal("x, y", XY), MonomialOrder::DegRevLex);
    assert!(normal_form(&poly("x^2", XY), &gb).is_zero());
    let gb = groebner_basis(&ideal("x", XY), MonomialOrder::DegRevLex);
    assert_eq!(normal_form(&poly("x + 1", XY), &gb), poly("1", XY));
    let sb = mora_standard_basis(&ideal("y^2, x^2 + y^3", XY));
    assert!(normal_form(&poly("y^3", XY), &sb).is_zero());
}

#[test]
fn mora_examples() {
    let sb = mora_standard_basis(&ideal("x + x^2", XY));
    assert_eq!(sb.leading_monomials(), vec![Monomial::from_exponents(&[1, 0])]);
    assert_eq!(local_colength(&ideal("x + x^2, y", XY)), Colength::Finite(1));

    let sb = mora_standard_basis(&ideal("y^2, x^2 + y^3", XY));
    let mut lms = sb.leading_monomials();
    lms.sort();
    assert_eq!(
        lms,
        vec![Monomial::from_exponents(&[0, 2]), Monomial::from_exponents(&[2, 0])]
    );
    let std = standard_monomials(2, &lms).unwrap();
    let expect: Vec<Monomial> = [[0, 0], [0, 1], [1, 0], [1, 1]]
        .iter()
        .map(|e| Monomial::from_exponents(e))
        .collect();
    let mut std_sorted = std.clone();
    std_sorted.sort();
    let mut expect_sorted = expect;
    expect_sorted.sort();
    assert_eq!(std_sorted, expect_sorted);

    let sb = mora_standard_basis(&ideal("x", XY));
    assert_eq!(sb.basis(), &[poly("x", XY)]);
}

#[test]
fn mora_detects_local_units() {
    // 1 + x is a unit at the origin; x*(1+x) generates (x) locally
    let sb = mora_standard_basis(&ideal("1 + x", XY));
    assert!(sb.is_unit());
    assert_eq!(local_colength(&ideal("x + x^2, y - y^2", XY)), Colength::Finite(1));
    // the point (1, 0) of V(x^2 - x, y) is invisible at the origin
    assert_eq!(local_colength(&ideal("x^2 - x, y", XY)), Colength::Finite(1));
    // (y - x^2)(y - 1) with x^3: locally y = x^2, colength 3
    assert_eq!(
        local_colength(&ideal("(y - x^2)*(y - 1), x^3", XY)),
        Colength::Finite(3)
    );
}

#[test]
fn local_colength_examples() {
    assert_eq!(local_colength(&ideal("x, y^2", XY)), Colength::Finite(2));
    assert_eq!(local_colength(&ideal("y^2, x^2 + y^3", XY)), Colength::Finite(4));
    assert_eq!(local_colength(&ideal("x*y", XY)), Colength::Infinite);
}

#[test]
fn dimension_examples() {
    let d = |text: &str| dimension(&groebner_basis(&ideal(text, XY), MonomialOrder::DegRevLex));
    assert_eq!(d("x, y"), 0);
    assert_eq!(d("x*y"), 1);
    assert_eq!(d("1"), -1);
    assert_eq!(d("x + 1, y"), 0);
    // globally V(x^2 - x) has points off the origin; locally dimension is still 1
    let xyz = &["x", "y", "z"];
    let sb = mora_standard_basis(&ideal("-2*x*z, 2*y, -x^2", xyz));
    assert_eq!(dimension(&sb), 1);
}

#[test]
fn quotient_examples() {
    let q = ideal_quotient(&ideal("x^2, x*y", XY), &ideal("x", XY));
    assert!(same_ideal(&q, &ideal("x, y", XY)));
    let q = ideal_quotient(&ideal("x", XY), &ideal("y", XY));
    assert!(same_ideal(&q, &ideal("x", XY)));
    let i = ideal("x^2 + y, x*y^3", XY);
    let q = ideal_quotient(&i, &ideal("1", XY));
    assert!(same_ideal(&q, &i));
}

#[test]
fn saturation_examples() {
    let (s, e) = saturate(&ideal("x^2, x*y", XY), &ideal("x, y", XY));
    assert!(same_ideal(&s, &ideal("x", XY)));
    assert_eq!(e, 1);
    let (s, _) = saturate(&ideal("x*y", XY), &ideal("x", XY));
    assert!(same_ideal(&s, &ideal("y", XY)));
    let i = ideal("x^3 - y^2, x*y", XY);
    let (s, e) = saturate(&i, &ideal("1", XY));
    assert!(same_ideal(&s, &i));
    assert_eq!(e, 0);
    // embedded point of higher order: (x^3, x*y) : (x,y)^∞ = (x)
    let (s, e) = saturate(&ideal("x^3, x*y", XY), &ideal("x, y", XY));
    assert!(same_ideal(&s, &ideal("x", XY)));
    assert_eq!(e, 2);
}

#[test]
fn intersection_and_elimination() {
    let i = intersect(&ideal("x", XY), &ideal("y", XY));
    assert!(same_ideal(&i, &ideal("x*y", XY)));
    let i = intersect(&ideal("x^2, y", XY), &ideal("x, y^2", XY));
    assert!(same_ideal(&i, &ideal("x^2, x*y, y^2", XY)));
    // eliminate t from (x - t^2, y - t^3): the cusp y^2 - x^3
    let txy = &["t", "x", "y"];
    let e = eliminate(&ideal("x - t^2, y - t^3", txy), 1);
    assert!(same_ideal(&e, &ideal("y^2 - x^3", XY)));
}

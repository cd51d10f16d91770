//! Elimination, intersection, quotient and saturation.

use alloc::vec::Vec;

use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

use super::{contains, groebner_basis, Ideal, StandardBasis};

/// `ideal ∩ Q[z_count, ...]`, re-indexed so the surviving variables start at 0.
///
/// The result generators form the reduced degrevlex Groebner basis of the
/// elimination ideal.
pub fn eliminate(ideal: &Ideal, count: usize) -> Ideal {
    let gb = groebner_basis(ideal, MonomialOrder::Elimination { block: count });
    Ideal::new(
        ideal.nvars() - count,
        gb.basis().iter().filter_map(|g| g.unshift_vars(count)),
    )
}

fn is_unit_generated(ideal: &Ideal) -> bool {
    ideal.generators().iter().any(|g| g.is_constant())
}

/// `a ∩ b`, via elimination of a tag variable from `t*a + (1-t)*b`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Ideal {
    assert_eq!(a.nvars(), b.nvars());
    let n = a.nvars();
    if a.is_zero() || b.is_zero() {
        return Ideal::zero(n);
    }
    if is_unit_generated(a) {
        return b.clone();
    }
    if is_unit_generated(b) {
        return a.clone();
    }
    let t = Polynomial::var(n + 1, 0);
    let one_minus_t = &Polynomial::one(n + 1) - &t;
    let tagged = a
        .generators()
        .iter()
        .map(|g| &t * &g.shift_vars(1))
        .chain(b.generators().iter().map(|g| &one_minus_t * &g.shift_vars(1)));
    eliminate(&Ideal::new(n + 1, tagged), 1)
}

/// `ideal : (g)` for a single polynomial, given a Groebner basis of `ideal`.
fn quotient_by_element(ideal: &Ideal, gb: &StandardBasis, g: &Polynomial) -> Ideal {
    let n = ideal.nvars();
    if contains(gb, g) {
        return Ideal::unit(n);
    }
    if g.is_constant() {
        return ideal.clone();
    }
    let inter = intersect(ideal, &Ideal::new(n, [g.clone()]));
    Ideal::new(
        n,
        inter
            .generators()
            .iter()
            .map(|h| h.exact_div(g).expect("generators of I ∩ (g) are multiples of g")),
    )
}

/// `i : j = { p : p*j ⊆ i }`, as the intersection of the quotients by each generator of `j`.
///
/// The returned generators are the reduced degrevlex Groebner basis.
pub fn ideal_quotient(i: &Ideal, j: &Ideal) -> Ideal {
    let n = i.nvars();
    if j.is_zero() {
        return Ideal::unit(n);
    }
    let gb = groebner_basis(i, MonomialOrder::DegRevLex);
    let mut parts: Vec<Ideal> = Vec::new();
    for g in j.generators() {
        let q = quotient_by_element(i, &gb, g);
        if !is_unit_generated(&q) {
            parts.push(q);
        }
    }
    let Some(first) = parts.pop() else {
        return Ideal::unit(n);
    };
    let result = parts.iter().fold(first, |acc, p| intersect(&acc, p));
    groebner_basis(&result, MonomialOrder::DegRevLex).to_ideal()
}

/// `i : j^∞`, by iterating [`ideal_quotient`] until the reduced Groebner basis stabilizes.
///
/// Returns the saturation and the number of quotient steps that changed the ideal.
pub fn saturate(i: &Ideal, j: &Ideal) -> (Ideal, u32) {
    let mut current = groebner_basis(i, MonomialOrder::DegRevLex);
    let mut exponent = 0;
    loop {
        if current.is_unit() {
            return (current.to_ideal(), exponent);
        }
        let next = groebner_basis(&ideal_quotient(&current.to_ideal(), j), MonomialOrder::DegRevLex);
        if next == current {
            return (current.to_ideal(), exponent);
        }
        exponent += 1;
        current = next;
    }
}

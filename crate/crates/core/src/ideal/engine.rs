//! Term-level basis algorithms: Buchberger with the Gebauer-Moeller criteria for
//! global orders and Mora's tangent cone algorithm for the local order.
//!
//! Polynomials here are term vectors sorted descending by the active order,
//! always monic once they enter a basis.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Rational};

pub(crate) type Term = (Monomial, Rational);

/// Sort a polynomial's terms by `order`, largest first.
pub(crate) fn sorted_terms(p: &Polynomial, order: MonomialOrder) -> Vec<Term> {
    let mut t = p.terms().to_vec();
    if order != MonomialOrder::DegRevLex {
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    t
}

pub(crate) fn to_polynomial(nvars: usize, terms: &[Term]) -> Polynomial {
    Polynomial::from_terms(nvars, terms.iter().cloned())
}

fn make_monic(terms: &mut [Term]) {
    if let Some((_, lc)) = terms.first() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in terms.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// `a - c * m * b`, all sorted by `order`.
fn sub_mul(a: &[Term], c: &Rational, m: &Monomial, b: &[Term], order: MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(m);
        match order.cmp(&a[i].0, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bm, -(c * &b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &a[i].1 - c * &b[j].1;
                if !v.is_zero() {
                    out.push((bm, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        out.push((t.0.mul(m), -(c * &t.1)));
    }
    out
}

fn max_degree(terms: &[Term]) -> u32 {
    terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
}

/// `deg(p) - deg(lm(p))`.
fn ecart(terms: &[Term]) -> u32 {
    match terms.first() {
        Some((lm, _)) => max_degree(terms) - lm.degree(),
        None => 0,
    }
}

/// Drop every term of degree `>= corner`. Under the local order these are the trailing terms.
fn truncate(terms: &mut Vec<Term>, corner: Option<u32>) {
    if let Some(d) = corner {
        terms.retain(|(m, _)| m.degree() < d);
    }
}

/// Least `D` with `m^D` inside the monomial ideal of `lms`, when that ideal is zero-dimensional.
///
/// Under the local order, `m^D` in the leading ideal puts `m^D` in the ideal itself,
/// so terms of degree `>= D` can be discarded (the highest corner).
fn highest_corner(nvars: usize, lms: &[Monomial]) -> Option<u32> {
    let std = super::standard_monomials(nvars, lms)?;
    Some(std.iter().map(|m| m.degree() + 1).max().unwrap_or(0))
}

fn spoly(f: &[Term], g: &[Term], order: MonomialOrder) -> Vec<Term> {
    let lcm = f[0].0.lcm(&g[0].0);
    let mf = lcm.div(&f[0].0).expect("lcm divisible");
    let mg = lcm.div(&g[0].0).expect("lcm divisible");
    // both monic: mf*f - mg*g
    let scaled: Vec<Term> = f.iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    sub_mul(&scaled, &Rational::one(), &mg, g, order)
}

/// Full reduction of `p` modulo `reducers` (global orders only).
pub(crate) fn reduce_full(p: Vec<Term>, reducers: &[&[Term]], order: MonomialOrder) -> Vec<Term> {
    debug_assert!(order.is_global());
    let mut rest = p;
    let mut done: Vec<Term> = Vec::new();
    while !rest.is_empty() {
        let (lm, lc) = rest[0].clone();
        match reducers.iter().find(|g| g[0].0.divides(&lm)) {
            Some(g) => {
                let q = lm.div(&g[0].0).expect("divides");
                let c = &lc / &g[0].1;
                rest = sub_mul(&rest, &c, &q, g, order);
            }
            None => {
                done.push((lm, lc));
                rest.remove(0);
            }
        }
    }
    done
}

/// Top reduction only: stops as soon as the leading term is irreducible.
fn reduce_top(p: Vec<Term>, reducers: &[&[Term]], order: MonomialOrder) -> Vec<Term> {
    let mut rest = p;
    while let Some((lm, lc)) = rest.first().cloned() {
        match reducers.iter().find(|g| g[0].0.divides(&lm)) {
            Some(g) => {
                let q = lm.div(&g[0].0).expect("divides");
                let c = &lc / &g[0].1;
                rest = sub_mul(&rest, &c, &q, g, order);
            }
            None => break,
        }
    }
    rest
}

/// Mora's weak normal form. The result is zero iff `h` lies in the ideal
/// generated by `basis` in the local ring at the origin; otherwise its leading
/// monomial is not divisible by any leading monomial of `basis`.
pub(crate) fn mora_normal_form(h: Vec<Term>, basis: &[&[Term]], order: MonomialOrder) -> Vec<Term> {
    mora_normal_form_below(h, basis, order, None)
}

/// [`mora_normal_form`] discarding terms of degree `>= corner`, valid when `m^corner` lies in the ideal.
fn mora_normal_form_below(h: Vec<Term>, basis: &[&[Term]], order: MonomialOrder, corner: Option<u32>) -> Vec<Term> {
    let mut h = h;
    truncate(&mut h, corner);
    let mut extra: Vec<Vec<Term>> = Vec::new();
    while let Some(lm) = h.first().map(|t| t.0) {
        let mut best: Option<(&[Term], u32)> = None;
        for g in basis.iter().copied().chain(extra.iter().map(|v| v.as_slice())) {
            if g[0].0.divides(&lm) {
                let e = ecart(g);
                if best.is_none_or(|(_, be)| e < be) {
                    best = Some((g, e));
                }
            }
        }
        let Some((g, eg)) = best else {
            return h;
        };
        let q = lm.div(&g[0].0).expect("divides");
        let c = &h[0].1 / &g[0].1;
        let mut next = sub_mul(&h, &c, &q, g, order);
        truncate(&mut next, corner);
        if eg > ecart(&h) {
            extra.push(h);
        }
        h = next;
    }
    h
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct BasisElem {
    terms: Vec<Term>,
    sugar: u32,
    active: bool,
}

/// Buchberger's algorithm (global order) or Mora's algorithm (local order).
///
/// Returns a minimal standard basis, monic, sorted by leading monomial
/// (largest first). For global orders the result is the reduced Groebner basis.
pub(crate) fn standard_basis(gens: &[Polynomial], order: MonomialOrder) -> Vec<Vec<Term>> {
    standard_basis_below(gens, order, None)
}

/// Mora's algorithm for `I + m^corner`: every term of degree `>= corner` is
/// dropped as soon as it appears. The monomials of degree `corner` are left
/// implicit and do not appear in the result.
pub(crate) fn standard_basis_below(gens: &[Polynomial], order: MonomialOrder, seed: Option<u32>) -> Vec<Vec<Term>> {
    debug_assert!(seed.is_none() || order.is_local());
    let mut elems: Vec<BasisElem> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let global = order.is_global();
    let nvars = gens.first().map_or(0, |g| g.nvars());
    let mut corner: Option<u32> = seed;

    let mut inputs: Vec<Vec<Term>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| sorted_terms(g, order))
        .collect();
    // small leading monomials first
    inputs.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));

    for mut t in inputs {
        let sugar = max_degree(&t);
        t = if global {
            let reducers: Vec<&[Term]> = active(&elems);
            reduce_top(t, &reducers, order)
        } else {
            let reducers: Vec<&[Term]> = active(&elems);
            mora_normal_form_below(t, &reducers, order, corner)
        };
        if t.is_empty() {
            continue;
        }
        make_monic(&mut t);
        if t[0].0.is_one() {
            return alloc::vec![t[..1].to_vec()];
        }
        insert(&mut elems, &mut pairs, t, sugar, order);
        if !global {
            update_corner(&mut elems, &mut corner, nvars);
        }
    }

    while let Some(idx) = select_pair(&pairs, order) {
        let pair = pairs.swap_remove(idx);
        if corner.is_some_and(|d| pair.lcm.degree() >= d) {
            // the S-polynomial lies in m^corner
            continue;
        }
        let s = spoly(&elems[pair.i].terms, &elems[pair.j].terms, order);
        let reducers: Vec<&[Term]> = active(&elems);
        let mut h = if global {
            reduce_top(s, &reducers, order)
        } else {
            mora_normal_form_below(s, &reducers, order, corner)
        };
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        if h[0].0.is_one() {
            return alloc::vec![h[..1].to_vec()];
        }
        insert(&mut elems, &mut pairs, h, pair.sugar, order);
        if !global {
            update_corner(&mut elems, &mut corner, nvars);
        }
    }

    finalize(elems, order)
}

/// Recompute the highest corner after an insertion and truncate the basis to it.
fn update_corner(elems: &mut [BasisElem], corner: &mut Option<u32>, nvars: usize) {
    let lms: Vec<Monomial> = elems.iter().filter(|e| e.active).map(|e| e.terms[0].0).collect();
    let Some(d) = highest_corner(nvars, &lms) else {
        return;
    };
    if corner.is_none_or(|c| d < c) {
        *corner = Some(d);
        for e in elems.iter_mut() {
            // a leading monomial of degree >= d is itself in the ideal; keep it alone
            let lm = e.terms[0].clone();
            truncate(&mut e.terms, Some(d));
            if e.terms.is_empty() {
                e.terms.push(lm);
            }
        }
    }
}

fn active(elems: &[BasisElem]) -> Vec<&[Term]> {
    elems.iter().filter(|e| e.active).map(|e| e.terms.as_slice()).collect()
}

fn select_pair(pairs: &[Pair], order: MonomialOrder) -> Option<usize> {
    pairs
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            a.sugar
                .cmp(&b.sugar)
                .then_with(|| order.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
        })
        .map(|(k, _)| k)
}

fn pair_sugar(elems: &[BasisElem], i: usize, j: usize, lcm: &Monomial) -> u32 {
    let si = elems[i].sugar + lcm.degree() - elems[i].terms[0].0.degree();
    let sj = elems[j].sugar + lcm.degree() - elems[j].terms[0].0.degree();
    si.max(sj)
}

/// Add `h` to the basis and update the pair set.
///
/// Uses the Gebauer-Moeller installation of Buchberger's product and chain
/// criteria, which hold for the local order as well.
fn insert(elems: &mut Vec<BasisElem>, pairs: &mut Vec<Pair>, h: Vec<Term>, sugar: u32, _order: MonomialOrder) {
    let hi = elems.len();
    let lm_h = h[0].0;
    elems.push(BasisElem {
        terms: h,
        sugar,
        active: true,
    });

    let candidates: Vec<usize> = (0..hi).filter(|&g| elems[g].active).collect();

    let lcms: Vec<(usize, Monomial, bool)> = candidates
        .iter()
        .map(|&g| {
            let lm_g = elems[g].terms[0].0;
            (g, lm_h.lcm(&lm_g), lm_h.is_coprime(&lm_g))
        })
        .collect();

    // chain criterion among the new pairs
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    for (idx, (g, lcm, coprime)) in lcms.iter().enumerate() {
        let dominated = lcms[idx + 1..].iter().any(|o| o.1.divides(lcm)) || kept.iter().any(|o| o.1.divides(lcm));
        if *coprime || !dominated {
            kept.push((*g, *lcm, *coprime));
        }
    }
    // product criterion
    let new_pairs: Vec<(usize, Monomial)> = kept
        .into_iter()
        .filter(|(_, _, coprime)| !coprime)
        .map(|(g, lcm, _)| (g, lcm))
        .collect();

    // old pairs made redundant by h
    pairs.retain(|p| {
        if !lm_h.divides(&p.lcm) {
            return true;
        }
        let li = lm_h.lcm(&elems[p.i].terms[0].0);
        let lj = lm_h.lcm(&elems[p.j].terms[0].0);
        li == p.lcm || lj == p.lcm
    });

    for (g, lcm) in new_pairs {
        let sugar = pair_sugar(elems, g, hi, &lcm);
        pairs.push(Pair {
            i: g,
            j: hi,
            lcm,
            sugar,
        });
    }

    for g in candidates {
        if lm_h.divides(&elems[g].terms[0].0) {
            elems[g].active = false;
        }
    }
}

fn finalize(elems: Vec<BasisElem>, order: MonomialOrder) -> Vec<Vec<Term>> {
    let mut basis: Vec<Vec<Term>> = elems.into_iter().map(|e| e.terms).collect();
    basis.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    // keep an element only if no other (earlier, i.e. smaller or equal) leading monomial divides it
    let mut minimal: Vec<Vec<Term>> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|m| m[0].0.divides(&g[0].0)) {
            minimal.push(g);
        }
    }
    if order.is_global() {
        for k in 0..minimal.len() {
            let g = core::mem::take(&mut minimal[k]);
            let head = g[0].clone();
            let others: Vec<&[Term]> = minimal
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, v)| v.as_slice())
                .collect();
            let tail = reduce_full(g[1..].to_vec(), &others, order);
            let mut reduced = Vec::with_capacity(tail.len() + 1);
            reduced.push(head);
            reduced.extend(tail);
            minimal[k] = reduced;
        }
    }
    minimal.reverse();
    minimal
}

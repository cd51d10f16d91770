//! Ideals, Groebner bases, Mora standard bases and the operations built on them.

mod engine;
mod ops;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

pub use ops::{eliminate, ideal_quotient, intersect, saturate};

/// A finitely generated ideal in `Q[z_0, ..., z_{m-1}]`. Zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(nvars: usize, generators: impl IntoIterator<Item = Polynomial>) -> Self {
        let generators = generators
            .into_iter()
            .inspect(|g| assert_eq!(g.nvars(), nvars, "generator in wrong ring"))
            .filter(|g| !g.is_zero())
            .collect();
        Ideal { nvars, generators }
    }

    pub fn zero(nvars: usize) -> Self {
        Ideal {
            nvars,
            generators: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        Ideal::new(nvars, [Polynomial::one(nvars)])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// `self + other`.
    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.nvars, other.nvars);
        Ideal::new(self.nvars, self.generators.iter().chain(&other.generators).cloned())
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Ideal {
        Ideal::new(self.nvars, self.generators.iter().cloned().chain(extra))
    }
}

/// A standard basis of an ideal with respect to a monomial order.
///
/// For global orders `basis` is the reduced Groebner basis (monic, sorted by
/// leading monomial, largest first). For the local order it is a minimal monic
/// standard basis of the ideal generated in the localization at the origin.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    ideal: Ideal,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    sorted: Vec<Vec<engine::Term>>,
    reduced: bool,
}

impl StandardBasis {
    fn compute(ideal: &Ideal, order: MonomialOrder) -> Self {
        let sorted = engine::standard_basis(&ideal.generators, order);
        let basis = sorted.iter().map(|t| engine::to_polynomial(ideal.nvars, t)).collect();
        StandardBasis {
            ideal: ideal.clone(),
            order,
            basis,
            sorted,
            reduced: order.is_global(),
        }
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars
    }

    /// Leading monomials of the basis, i.e. minimal generators of the leading ideal.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|t| t[0].0).collect()
    }

    /// True when the ideal is the whole ring (globally, or locally for local orders).
    pub fn is_unit(&self) -> bool {
        self.sorted.iter().any(|t| t[0].0.is_one())
    }

    /// The basis as an ideal.
    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(self.nvars(), self.basis.iter().cloned())
    }

    /// Canonical text form: one generator per line.
    pub fn to_text(&self, names: &[String]) -> String {
        let mut out = String::new();
        for g in &self.basis {
            out.push_str(&alloc::format!("{}\n", g.display(names)));
        }
        out
    }
}

impl PartialEq for StandardBasis {
    /// Compares bases, which is ideal equality for reduced Groebner bases under the same order.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.basis == other.basis
    }
}

impl fmt::Display for StandardBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = crate::poly::default_names(self.nvars());
        f.write_str(&self.to_text(&names))
    }
}

/// Reduced Groebner basis for a global order.
pub fn groebner_basis(ideal: &Ideal, order: MonomialOrder) -> StandardBasis {
    assert!(order.is_global(), "groebner_basis needs a global order");
    StandardBasis::compute(ideal, order)
}

/// Mora standard basis for the local order at the origin.
pub fn mora_standard_basis(ideal: &Ideal) -> StandardBasis {
    StandardBasis::compute(ideal, MonomialOrder::NegDegRevLex)
}

/// Remainder of `p` modulo `basis`.
///
/// Global orders give the fully reduced remainder; the local order gives
/// Mora's weak normal form. Either way the result is zero iff `p` lies in the
/// ideal (locally at the origin for the local order).
pub fn normal_form(p: &Polynomial, basis: &StandardBasis) -> Polynomial {
    let order = basis.order;
    let terms = engine::sorted_terms(p, order);
    let reducers: Vec<&[engine::Term]> = basis.sorted.iter().map(|v| v.as_slice()).collect();
    let rem = if order.is_global() {
        engine::reduce_full(terms, &reducers, order)
    } else {
        engine::mora_normal_form(terms, &reducers, order)
    };
    engine::to_polynomial(p.nvars(), &rem)
}

pub fn contains(basis: &StandardBasis, p: &Polynomial) -> bool {
    normal_form(p, basis).is_zero()
}

/// The S-polynomial of two basis elements under the basis order (test support).
pub fn s_polynomial(basis: &StandardBasis, i: usize, j: usize) -> Polynomial {
    let (f, g) = (&basis.sorted[i], &basis.sorted[j]);
    let lcm = f[0].0.lcm(&g[0].0);
    let a = Polynomial::term(lcm.div(&f[0].0).unwrap(), crate::poly::rat(1));
    let b = Polynomial::term(lcm.div(&g[0].0).unwrap(), crate::poly::rat(1));
    &(&a * &basis.basis[i]) - &(&b * &basis.basis[j])
}

/// Krull dimension of the ring modulo the leading ideal of `basis`;
/// `-1` for the unit ideal.
///
/// Computed as the size of a largest set of variables containing no leading
/// monomial's support. For the local order this is the local dimension at the origin.
pub fn dimension(basis: &StandardBasis) -> i64 {
    monomial_ideal_dimension(basis.nvars(), &basis.leading_monomials())
}

pub fn monomial_ideal_dimension(nvars: usize, gens: &[Monomial]) -> i64 {
    if gens.iter().any(|m| m.is_one()) {
        return -1;
    }
    let supports: Vec<u32> = gens
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u32, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    (0u32..(1 << nvars))
        .filter(|set| supports.iter().all(|s| s & !set != 0))
        .map(|set| set.count_ones() as i64)
        .max()
        .unwrap_or(0)
}

/// Vector-space dimension of a quotient ring, possibly infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<u64> {
        match self {
            Colength::Finite(v) => Some(v),
            Colength::Infinite => None,
        }
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(v) => write!(f, "{v}"),
            Colength::Infinite => f.write_str("infinite"),
        }
    }
}

/// Monomials outside the monomial ideal generated by `gens`, when there are finitely many.
pub fn standard_monomials(nvars: usize, gens: &[Monomial]) -> Option<Vec<Monomial>> {
    if gens.iter().any(|m| m.is_one()) {
        return Some(Vec::new());
    }
    // each variable needs a pure power in the ideal
    let mut bounds = Vec::with_capacity(nvars);
    for i in 0..nvars {
        let b = gens
            .iter()
            .filter(|m| m.exponents().iter().enumerate().all(|(j, &e)| j == i || e == 0))
            .map(|m| m.exponent(i))
            .min()?;
        bounds.push(b);
    }
    let mut out = Vec::new();
    let mut exps = alloc::vec![0u16; nvars];
    loop {
        let m = Monomial::from_exponents(&exps);
        if !gens.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
        // odometer over the box of pure-power bounds
        let mut i = 0;
        loop {
            if i == nvars {
                out.sort();
                return Some(out);
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Dimension over the rationals of the local ring at the origin modulo `ideal`.
///
/// Counts standard monomials of a Mora standard basis; infinite when the
/// local dimension is positive.
///
/// When the ideal is zero-dimensional globally, with `N` points counted with
/// multiplicity, the local colength `c` is at most `N` and `m^c` lies in the
/// ideal locally. Mora then runs on `I + m^D` with every term of degree `>= D`
/// discarded, for `D` doubling up to `N + 1`. Once no standard monomial has
/// degree `D - 1`, `m^{D-1}` lies in `I + m^D`, Nakayama's lemma puts it in
/// `I`, and the count is exact. This keeps coefficient growth in check on
/// dense inputs where the untruncated algorithm stalls.
pub fn local_colength(ideal: &Ideal) -> Colength {
    let nvars = ideal.nvars();
    let global = groebner_basis(ideal, MonomialOrder::DegRevLex);
    if global.is_unit() {
        return Colength::Finite(0);
    }
    let Some(points) = standard_monomials(nvars, &global.leading_monomials()) else {
        return local_colength_of(&mora_standard_basis(ideal));
    };
    let total = points.len() as u32;
    let mut d = total.clamp(1, 8) + 1;
    loop {
        let sorted = engine::standard_basis_below(&ideal.generators, MonomialOrder::NegDegRevLex, Some(d));
        if sorted.iter().any(|t| t[0].0.is_one()) {
            return Colength::Finite(0);
        }
        let lms: Vec<Monomial> = sorted.iter().map(|t| t[0].0).collect();
        let standard: Vec<Monomial> = crate::monomial::monomials_below(nvars, d)
            .into_iter()
            .filter(|m| !lms.iter().any(|g| g.divides(m)))
            .collect();
        let top = standard.iter().map(Monomial::degree).max().unwrap_or(0);
        if top + 1 < d || d > total {
            return Colength::Finite(standard.len() as u64);
        }
        d = (2 * d).min(total + 1);
    }
}

pub fn local_colength_of(sb: &StandardBasis) -> Colength {
    assert!(sb.order.is_local());
    if sb.is_unit() {
        return Colength::Finite(0);
    }
    if dimension(sb) > 0 {
        return Colength::Infinite;
    }
    let lms = sb.leading_monomials();
    match standard_monomials(sb.nvars(), &lms) {
        Some(v) => Colength::Finite(v.len() as u64),
        None => Colength::Infinite,
    }
}

#[cfg(test)]
mod tests;

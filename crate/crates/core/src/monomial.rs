//! Exponent vectors and the monomial orders used by the basis engine.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Largest number of variables a [`Monomial`] can carry.
///
/// Desk-scale inputs use at most four coordinates; the ideal operations add
/// one tag variable on top of that.
pub const MAX_VARS: usize = 12;

/// A power product `z_0^e_0 * ... * z_{m-1}^e_{m-1}` over a fixed number of variables.
///
/// The derived `Ord` is never used directly; the canonical ordering is the
/// degree reverse lexicographic one (see [`MonomialOrder::DegRevLex`]).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    len: u8,
}

impl Monomial {
    /// The monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Monomial {
            exps: [0; MAX_VARS],
            len: nvars as u8,
        }
    }

    /// The variable `z_i` in `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        let mut m = Self::one(exps.len());
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.len as usize]
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    /// Total degree.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.exponents().iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents().iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents().iter().zip(other.exponents()).all(|(a, b)| a <= b)
    }

    /// `self * other`; panics on exponent overflow.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len, other.len);
        let mut out = *self;
        for (o, b) in out.exps[..self.len as usize].iter_mut().zip(other.exponents()) {
            *o = o.checked_add(*b).expect("monomial exponent overflow");
        }
        out
    }

    /// `self / other` when `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = *self;
        for (o, b) in out.exps[..self.len as usize].iter_mut().zip(other.exponents()) {
            *o = o.checked_sub(*b)?;
        }
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (o, b) in out.exps[..self.len as usize].iter_mut().zip(other.exponents()) {
            *o = (*o).max(*b);
        }
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (o, b) in out.exps[..self.len as usize].iter_mut().zip(other.exponents()) {
            *o = (*o).min(*b);
        }
        out
    }

    /// True when `self` and `other` share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exponents()
            .iter()
            .zip(other.exponents())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Insert `count` zero exponents in front (new variables become `z_0..z_{count-1}`).
    pub fn shift(&self, count: usize) -> Monomial {
        let n = self.nvars();
        let mut out = Monomial::one(n + count);
        out.exps[count..count + n].copy_from_slice(self.exponents());
        out
    }

    /// Drop the first `count` variables, which must have exponent zero.
    pub fn unshift(&self, count: usize) -> Option<Monomial> {
        if self.exponents()[..count].iter().any(|&e| e != 0) {
            return None;
        }
        Some(Monomial::from_exponents(&self.exponents()[count..]))
    }

    pub fn with_exponent(&self, i: usize, e: u16) -> Monomial {
        let mut out = *self;
        out.exps[i] = e;
        out
    }
}

/// All monomials of total degree `< degree`, in ascending degrevlex order.
pub fn monomials_below(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = alloc::vec![0u16; nvars];
    fn rec(i: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == exps.len() {
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in 0..=left {
            exps[i] = e as u16;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    if degree > 0 {
        rec(0, degree - 1, &mut exps, &mut out);
    }
    out.sort();
    out
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

/// Degree reverse lexicographic comparison, last variable cheapest.
#[inline]
fn degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        degrevlex(self.exponents(), other.exponents())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Monomial orders understood by the basis engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Global degree reverse lexicographic order.
    DegRevLex,
    /// Local order: lower total degree is larger, ties broken by degrevlex.
    /// Leading terms are the lowest-degree terms, which is what computations
    /// in the local ring at the origin need.
    NegDegRevLex,
    /// Global block order: the first `block` variables are compared first
    /// (degrevlex within the block), then the remaining ones. Used to
    /// eliminate the leading block.
    Elimination { block: usize },
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex(a.exponents(), b.exponents()),
            MonomialOrder::NegDegRevLex => b
                .degree()
                .cmp(&a.degree())
                .then_with(|| degrevlex(a.exponents(), b.exponents())),
            MonomialOrder::Elimination { block } => {
                let (a0, a1) = a.exponents().split_at(block);
                let (b0, b1) = b.exponents().split_at(block);
                degrevlex(a0, b0).then_with(|| degrevlex(a1, b1))
            }
        }
    }

    /// Global orders are well-orders (`1` is the smallest monomial).
    pub fn is_global(&self) -> bool {
        !matches!(self, MonomialOrder::NegDegRevLex)
    }

    pub fn is_local(&self) -> bool {
        !self.is_global()
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::DegRevLex => f.write_str("global-degrevlex"),
            MonomialOrder::NegDegRevLex => f.write_str("local-negdegrevlex"),
            MonomialOrder::Elimination { block } => write!(f, "elimination({block})"),
        }
    }
}

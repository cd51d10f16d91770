//! Exact multivariate polynomials over the rationals.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::PolyError;
use crate::matrix::RationalMatrix;
use crate::monomial::{Monomial, MonomialOrder};

/// Exact rational number, always kept in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Build a rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A polynomial with rational coefficients in a fixed number of variables.
///
/// Terms are stored in descending degrevlex order with no zero coefficients,
/// so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        let terms = if c.is_zero() { Vec::new() } else { alloc::vec![(m, c)] };
        Polynomial { nvars, terms }
    }

    /// Collect arbitrary terms, summing duplicates and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, acc: BTreeMap<Monomial, Rational>) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { nvars, terms }
    }

    /// Terms already sorted descending in degrevlex and free of zeros.
    pub(crate) fn from_sorted_terms(nvars: usize, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { nvars, terms }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in descending degrevlex order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Value at the origin.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars))
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Order of vanishing at the origin: the smallest total degree of a term.
    /// `None` stands for the infinite order of the zero polynomial.
    pub fn order_of_vanishing(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    /// Largest term with respect to `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<&(Monomial, Rational)> {
        self.terms
            .iter()
            .reduce(|a, b| if order.cmp(&a.0, &b.0).is_ge() { a } else { b })
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a * c)).collect();
        Polynomial::from_sorted_terms(self.nvars, terms)
    }

    /// Multiply by `c * m`. Multiplication by a monomial preserves any monomial order,
    /// so the storage order survives.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect();
        Polynomial::from_sorted_terms(self.nvars, terms)
    }

    /// Divide by the leading coefficient (degrevlex). Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial, PolyError> {
        if i >= self.nvars {
            return Err(PolyError::VariableOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        Ok(Polynomial::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m.exponent(i) > 0).map(|(m, c)| {
                let e = m.exponent(i);
                (m.with_exponent(i, e - 1), c * rat(e as i64))
            }),
        ))
    }

    /// Compose with the linear map `x_i -> sum_j matrix[i][j] * z_j`.
    pub fn substitute_linear(&self, matrix: &RationalMatrix) -> Result<Polynomial, PolyError> {
        if matrix.dim() != self.nvars {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars,
                found: matrix.dim(),
            });
        }
        if matrix.determinant().is_zero() {
            return Err(PolyError::SingularMatrix);
        }
        Ok(self.substitute_linear_unchecked(matrix))
    }

    pub(crate) fn substitute_linear_unchecked(&self, matrix: &RationalMatrix) -> Polynomial {
        let n = self.nvars;
        let images: Vec<Polynomial> = (0..n)
            .map(|i| Polynomial::from_terms(n, (0..n).map(|j| (Monomial::var(n, j), matrix.get(i, j).clone()))))
            .collect();
        // powers[i][e] = images[i]^e, built lazily up to the maximal exponent
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|_| alloc::vec![Polynomial::one(n)]).collect();
        for (m, _) in &self.terms {
            for (i, &e) in m.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
            }
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(n, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    prod = &prod * &powers[i][e as usize];
                }
            }
            for (t, a) in prod.terms {
                *acc.entry(t).or_insert_with(Rational::zero) += a;
            }
        }
        Polynomial::from_map(n, acc)
    }

    /// Substitute `z_i = 0`.
    pub fn set_var_zero(&self, i: usize) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.exponent(i) == 0).cloned().collect();
        Polynomial::from_sorted_terms(self.nvars, terms)
    }

    /// Embed into a ring with `count` new variables placed in front.
    pub fn shift_vars(&self, count: usize) -> Polynomial {
        // prepending zero exponents keeps the relative degrevlex order
        let terms = self.terms.iter().map(|(m, c)| (m.shift(count), c.clone())).collect();
        Polynomial::from_sorted_terms(self.nvars + count, terms)
    }

    /// Drop the first `count` variables; `None` if any of them occurs.
    pub fn unshift_vars(&self, count: usize) -> Option<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| m.unshift(count).map(|u| (u, c.clone())))
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial::from_sorted_terms(self.nvars - count, terms))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.terms.first()?;
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let q = m.div(lm)?;
            let qc = c / lc;
            rem = &rem - &divisor.mul_term(&q, &qc);
            quotient.push((q, qc));
        }
        // quotient terms come out in strictly descending order
        Some(Polynomial::from_sorted_terms(self.nvars, quotient))
    }

    /// Render with the given variable names.
    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        let sign = |c: &Rational| if negate_other { -c } else { c.clone() };
        loop {
            match (a.peek(), b.peek()) {
                (Some((ma, ca)), Some((mb, cb))) => match ma.cmp(mb) {
                    core::cmp::Ordering::Greater => {
                        out.push((*ma, ca.clone()));
                        a.next();
                    }
                    core::cmp::Ordering::Less => {
                        out.push((*mb, sign(cb)));
                        b.next();
                    }
                    core::cmp::Ordering::Equal => {
                        let s = if negate_other { ca - cb } else { ca + cb };
                        if !s.is_zero() {
                            out.push((*ma, s));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some((ma, ca)), None) => {
                    out.push((*ma, ca.clone()));
                    a.next();
                }
                (None, Some((mb, cb))) => {
                    out.push((*mb, sign(cb)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Polynomial::from_sorted_terms(self.nvars, out)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, rhs.nvars);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Polynomial::from_map(self.nvars, acc)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        Polynomial::from_sorted_terms(self.nvars, terms)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Default variable names `x0, x1, ...`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (0..nvars).map(|i| alloc::format!("x{i}")).collect()
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.poly.terms.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut first = true;
            if !mag.is_one() || m.is_one() {
                write!(f, "{mag}")?;
                first = false;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(&self.names[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars);
        write!(f, "{}", self.display(&names))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

//! Rank data of the link chain complex, Morse-type inequalities and
//! feasibility verdicts for supplied Betti numbers of the real link `K_X`.
//!
//! Everything here is integer arithmetic on a gamma vector
//! `(gamma^0, ..., gamma^{n+1})`; Betti numbers are reduced ranks
//! `b~^0, ..., b~^{2n-1}`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::LinkError;

fn sign(p: usize) -> i64 {
    if p.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn n_of(gamma: &[u64]) -> usize {
    assert!(gamma.len() >= 3, "gamma vector needs n >= 1");
    gamma.len() - 2
}

/// `lambda^k = gamma^k + gamma^{k+1}` for `k = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaProfile {
    pub lambda: Vec<u64>,
}

impl LambdaProfile {
    pub fn n(&self) -> usize {
        self.lambda.len() - 1
    }
}

pub fn lambda_from_gamma(gamma: &[u64]) -> LambdaProfile {
    let n = n_of(gamma);
    LambdaProfile {
        lambda: (0..=n).map(|k| gamma[k] + gamma[k + 1]).collect(),
    }
}

/// Ranks of the chain complex and the reduced cohomology degree of `K_X` each term maps to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplexSpec {
    pub ranks: Vec<u64>,
    /// Term `k` computes `H~^{n+k-1}(K_X)`.
    pub degrees: Vec<usize>,
}

pub fn chain_complex(lambda: &LambdaProfile) -> ChainComplexSpec {
    let n = lambda.n();
    ChainComplexSpec {
        ranks: lambda.lambda.clone(),
        degrees: (0..=n).map(|k| n + k - 1).collect(),
    }
}

/// One row of telescope arithmetic: the alternating sums over lambda and their closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TelescopeCheck {
    pub p: usize,
    /// `sum_{k<=p} (-1)^k lambda^k`
    pub forward: i64,
    /// `(-1)^p gamma^{p+1}`
    pub forward_expected: i64,
    /// `sum_{k<=p} (-1)^k lambda^{n-k}`
    pub backward: i64,
    /// `1 + (-1)^p gamma^{n-p}`
    pub backward_expected: i64,
}

impl TelescopeCheck {
    pub fn pass(&self) -> bool {
        self.forward == self.forward_expected && self.backward == self.backward_expected
    }
}

/// The two alternating lambda sums at `p`, checked against their gamma closed forms.
pub fn telescope_sums(lambda: &LambdaProfile, gamma: &[u64], p: usize) -> Result<(i64, i64), LinkError> {
    let check = telescope_check(lambda, gamma, p)?;
    if !check.pass() {
        return Err(LinkError::TelescopeViolation { p });
    }
    Ok((check.forward, check.backward))
}

pub fn telescope_check(lambda: &LambdaProfile, gamma: &[u64], p: usize) -> Result<TelescopeCheck, LinkError> {
    let n = lambda.n();
    if p > n {
        return Err(LinkError::DegreeOutOfRange { p, n });
    }
    assert_eq!(gamma.len(), n + 2, "gamma and lambda disagree on n");
    let l = |k: usize| lambda.lambda[k] as i64;
    let forward = (0..=p).map(|k| sign(k) * l(k)).sum();
    let backward = (0..=p).map(|k| sign(k) * l(n - k)).sum();
    Ok(TelescopeCheck {
        p,
        forward,
        forward_expected: sign(p) * gamma[p + 1] as i64,
        backward,
        backward_expected: 1 + sign(p) * gamma[n - p] as i64,
    })
}

pub fn telescope_checks(lambda: &LambdaProfile, gamma: &[u64]) -> Result<Vec<TelescopeCheck>, LinkError> {
    (0..=lambda.n()).map(|p| telescope_check(lambda, gamma, p)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundFamily {
    /// `(-1)^p sum_{k<=p} (-1)^k b~^{n+k-1} <= gamma^{p+1}`
    Low,
    /// `(-1)^p sum_{k<=p} (-1)^k b~^{2n-k-1} <= (-1)^p + gamma^{n-p}`
    High,
}

impl BoundFamily {
    pub fn number(self) -> u8 {
        match self {
            BoundFamily::Low => 1,
            BoundFamily::High => 2,
        }
    }
}

/// A linear inequality `sum coeff * b~^index <= rhs` on reduced Betti numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub family: BoundFamily,
    pub p: usize,
    /// `(index, coefficient)` pairs, ascending by index.
    pub terms: Vec<(usize, i64)>,
    pub rhs: i64,
}

impl BoundRow {
    /// Left side evaluated on a Betti vector.
    pub fn evaluate(&self, betti: &[u64]) -> i64 {
        self.terms.iter().map(|&(i, c)| c * betti[i] as i64).sum()
    }

    pub fn holds(&self, betti: &[u64]) -> bool {
        self.evaluate(betti) <= self.rhs
    }

    pub fn lhs_text(&self) -> String {
        let mut out = String::new();
        for (j, &(i, c)) in self.terms.iter().enumerate() {
            let body = if c.abs() == 1 {
                format!("b~^{i}")
            } else {
                format!("{}*b~^{i}", c.abs())
            };
            match (j, c < 0) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }
}

impl fmt::Display for BoundRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <= {}", self.lhs_text(), self.rhs)
    }
}

fn bound_row(family: BoundFamily, n: usize, p: usize, rhs: i64) -> BoundRow {
    let mut terms: Vec<(usize, i64)> = (0..=p)
        .map(|k| {
            let index = match family {
                BoundFamily::Low => n + k - 1,
                BoundFamily::High => 2 * n - k - 1,
            };
            (index, sign(p) * sign(k))
        })
        .collect();
    terms.sort();
    BoundRow { family, p, terms, rhs }
}

/// Both inequality families for `p = 0..=n`, family 1 first.
pub fn morse_bounds(gamma: &[u64]) -> Vec<BoundRow> {
    let n = n_of(gamma);
    let low = (0..=n).map(|p| bound_row(BoundFamily::Low, n, p, gamma[p + 1] as i64));
    let high = (0..=n).map(|p| bound_row(BoundFamily::High, n, p, sign(p) + gamma[n - p] as i64));
    low.chain(high).collect()
}

/// Reduced Betti ranks `b~^0..b~^{2n-1}` supplied as a hypothesis, with an optional component count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    pub values: Vec<u64>,
    pub components: Option<u64>,
}

/// Degrees where `b~^k` may be nonzero: `{0, 2n-1}` together with `[n-1, n+s]`.
pub fn support_window(n: usize, s: u32) -> Vec<usize> {
    let hi = (n + s as usize).min(2 * n - 1);
    let mut out: Vec<usize> = (n - 1..=hi).collect();
    for k in [0, 2 * n - 1] {
        if !out.contains(&k) {
            out.push(k);
        }
    }
    out.sort();
    out
}

/// One pass/fail line of the feasibility audit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, pass: bool, detail: String) -> FeasibilityCheck {
    FeasibilityCheck {
        name: name.into(),
        pass,
        detail,
    }
}

/// Audit supplied ranks against the vanishing window, both inequality families,
/// the Euler characteristic, the component count and, for curves, the exact sequence.
///
/// Only ranks are checked; torsion in the cohomology of `K_X` is invisible here.
pub fn betti_feasibility(
    betti: &BettiVector,
    gamma: &[u64],
    mult: u32,
    s: u32,
) -> Result<Vec<FeasibilityCheck>, LinkError> {
    let n = n_of(gamma);
    let b = &betti.values;
    if b.len() != 2 * n {
        return Err(LinkError::MalformedBetti {
            expected: 2 * n,
            found: b.len(),
        });
    }
    let mut out = Vec::new();

    let window = support_window(n, s);
    let outside: Vec<usize> = (0..2 * n).filter(|k| !window.contains(k) && b[*k] != 0).collect();
    out.push(check(
        "support_window",
        outside.is_empty(),
        format!("nonzero allowed in degrees {window:?}; nonzero outside: {outside:?}"),
    ));

    for row in morse_bounds(gamma) {
        let lhs = row.evaluate(b);
        out.push(check(
            format!("family{}_p{}", row.family.number(), row.p),
            lhs <= row.rhs,
            format!("{} : {lhs} <= {}", row, row.rhs),
        ));
    }

    let reduced_euler: i64 = b.iter().enumerate().map(|(k, &v)| sign(k) * v as i64).sum();
    out.push(check(
        "euler_characteristic",
        reduced_euler + 1 == 0,
        format!("reduced Euler characteristic {reduced_euler}, need -1 (ranks only, torsion not checked)"),
    ));

    if let Some(c) = betti.components {
        let top = b[2 * n - 1];
        out.push(check(
            "components_top_degree",
            top == c,
            format!("b~^{} = {top}, components = {c}", 2 * n - 1),
        ));
        if c != 1 {
            out.push(check(
                "components_force_s",
                s as usize == n - 1,
                format!("components = {c} != 1 needs s = {}, have s = {s}", n - 1),
            ));
        }
    }

    if n == 1 {
        let seq = n1_exact_sequence(gamma, mult)?;
        out.extend(seq.audit(b));
    }
    Ok(out)
}

/// The exact sequence `0 -> H~^0(K_X) -> Z^{mult-1} -> Z^{mult} -> H~^1(K_X) -> 0` of a curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveSequence {
    pub mult: u32,
    /// Middle ranks `(mult - 1, mult)`.
    pub middle: (u64, u64),
}

impl CurveSequence {
    pub fn audit(&self, betti: &[u64]) -> Vec<FeasibilityCheck> {
        let (b0, b1) = (betti[0] as i64, betti[1] as i64);
        alloc::vec![
            check(
                "n1_relation",
                b1 - b0 == 1,
                format!("b~^1 - b~^0 = {} (must be 1)", b1 - b0),
            ),
            check(
                "n1_exactness",
                betti[0] <= self.middle.0,
                format!("b~^0 = {b0} <= mult - 1 = {}", self.middle.0),
            ),
        ]
    }
}

pub fn n1_exact_sequence(gamma: &[u64], mult: u32) -> Result<CurveSequence, LinkError> {
    let n = n_of(gamma);
    if n != 1 {
        return Err(LinkError::NotCurve(n));
    }
    Ok(CurveSequence {
        mult,
        middle: (u64::from(mult) - 1, u64::from(mult)),
    })
}

/// Everything derived from a gamma vector, plus feasibility verdicts when Betti data is supplied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseReport {
    pub n: usize,
    pub gamma: Vec<u64>,
    pub mult: u32,
    pub s: u32,
    pub lambda: LambdaProfile,
    pub chain: ChainComplexSpec,
    pub bounds: Vec<BoundRow>,
    pub telescope: Vec<TelescopeCheck>,
    pub window: Vec<usize>,
    pub curve: Option<CurveSequence>,
    pub feasibility: Option<Vec<FeasibilityCheck>>,
}

pub fn morse_report(gamma: &[u64], mult: u32, s: u32, betti: Option<&BettiVector>) -> Result<MorseReport, LinkError> {
    let n = n_of(gamma);
    let lambda = lambda_from_gamma(gamma);
    let telescope = telescope_checks(&lambda, gamma)?;
    if let Some(bad) = telescope.iter().find(|c| !c.pass()) {
        return Err(LinkError::TelescopeViolation { p: bad.p });
    }
    let feasibility = betti.map(|b| betti_feasibility(b, gamma, mult, s)).transpose()?;
    Ok(MorseReport {
        n,
        gamma: gamma.to_vec(),
        mult,
        s,
        chain: chain_complex(&lambda),
        lambda,
        bounds: morse_bounds(gamma),
        telescope,
        window: support_window(n, s),
        curve: n1_exact_sequence(gamma, mult).ok(),
        feasibility,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    const CUBIC: [u64; 4] = [0, 4, 2, 1];

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_from_gamma(&[0, 1, 1, 1]).lambda, [1, 2, 2]);
        assert_eq!(lambda_from_gamma(&CUBIC).lambda, [4, 6, 3]);
        assert_eq!(lambda_from_gamma(&[0, 1, 1]).lambda, [1, 2]);
    }

    #[test]
    fn chain_degrees() {
        let c = chain_complex(&lambda_from_gamma(&CUBIC));
        assert_eq!(c.degrees, [1, 2, 3]);
        assert_eq!(c.ranks, [4, 6, 3]);
    }

    #[test]
    fn telescope_examples() {
        let l = lambda_from_gamma(&CUBIC);
        assert_eq!(telescope_sums(&l, &CUBIC, 0), Ok((4, 3)));
        assert_eq!(telescope_sums(&l, &CUBIC, 1), Ok((-2, -3)));
        assert_eq!(telescope_sums(&l, &CUBIC, 2).unwrap().0, 1);
        assert_eq!(
            telescope_sums(&l, &CUBIC, 3),
            Err(LinkError::DegreeOutOfRange { p: 3, n: 2 })
        );
        let bad = LambdaProfile { lambda: vec![4, 5, 3] };
        assert_eq!(
            telescope_sums(&bad, &CUBIC, 1),
            Err(LinkError::TelescopeViolation { p: 1 })
        );
    }

    #[test]
    fn cubic_bounds() {
        let rows = morse_bounds(&CUBIC);
        let find = |fam, p| rows.iter().find(|r| r.family == fam && r.p == p).unwrap();
        let r = find(BoundFamily::Low, 0);
        assert_eq!((r.terms.clone(), r.rhs), (vec![(1, 1)], 4));
        let r = find(BoundFamily::High, 0);
        assert_eq!((r.terms.clone(), r.rhs), (vec![(3, 1)], 3));
        let r = find(BoundFamily::Low, 1);
        assert_eq!((r.terms.clone(), r.rhs), (vec![(1, -1), (2, 1)], 2));
        assert_eq!(r.to_string(), "-b~^1 + b~^2 <= 2");
        let r = find(BoundFamily::High, 1);
        assert_eq!((r.terms.clone(), r.rhs), (vec![(2, 1), (3, -1)], 3));
    }

    #[test]
    fn curve_bounds() {
        let rows = morse_bounds(&[0, 1, 1]);
        assert_eq!(rows[0].to_string(), "b~^0 <= 1");
        assert_eq!(rows[2].to_string(), "b~^1 <= 2");
    }

    #[test]
    fn feasibility_curve() {
        let b = BettiVector {
            values: vec![1, 2],
            components: Some(2),
        };
        let checks = betti_feasibility(&b, &[0, 1, 1], 2, 0).unwrap();
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
        let b = BettiVector {
            values: vec![2, 3],
            components: None,
        };
        let checks = betti_feasibility(&b, &[0, 1, 1], 2, 0).unwrap();
        let f1 = checks.iter().find(|c| c.name == "family1_p0").unwrap();
        assert!(!f1.pass);
    }

    #[test]
    fn feasibility_quadric_and_cubic() {
        let b = BettiVector {
            values: vec![0, 0, 0, 1],
            components: None,
        };
        assert!(betti_feasibility(&b, &[0, 1, 1, 1], 2, 0)
            .unwrap()
            .iter()
            .all(|c| c.pass));
        let b = BettiVector {
            values: vec![0, 2, 2, 1],
            components: None,
        };
        let checks = betti_feasibility(&b, &CUBIC, 3, 0).unwrap();
        for name in ["family1_p0", "family2_p0", "family2_p1"] {
            assert!(checks.iter().find(|c| c.name == name).unwrap().pass);
        }
    }

    #[test]
    fn feasibility_window_and_components() {
        let b = BettiVector {
            values: vec![0, 0, 0, 0, 1, 0],
            components: Some(2),
        };
        let checks = betti_feasibility(&b, &[0, 1, 1, 1, 1], 2, 0).unwrap();
        let get = |n: &str| checks.iter().find(|c| c.name == n).unwrap().pass;
        assert!(!get("support_window"));
        assert!(!get("components_top_degree"));
        assert!(!get("components_force_s"));
        assert_eq!(
            betti_feasibility(&b, &CUBIC, 3, 0),
            Err(LinkError::MalformedBetti { expected: 4, found: 6 })
        );
    }

    #[test]
    fn curve_sequence() {
        assert_eq!(n1_exact_sequence(&[0, 1, 1], 2).unwrap().middle, (1, 2));
        assert_eq!(n1_exact_sequence(&CUBIC, 3), Err(LinkError::NotCurve(2)));
    }

    #[test]
    fn window() {
        assert_eq!(support_window(1, 0), [0, 1]);
        assert_eq!(support_window(2, 0), [0, 1, 2, 3]);
        assert_eq!(support_window(3, 0), [0, 2, 3, 5]);
        assert_eq!(support_window(3, 1), [0, 2, 3, 4, 5]);
    }
}

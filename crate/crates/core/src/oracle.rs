//! Independent cross-checks for the basis engine and the polar engine.
//!
//! The truncated colength never touches a standard basis: it counts the
//! dimension of `Q[z]_{<D} / (I + m^D)` by exact Gaussian elimination on the
//! truncated multiples of the generators. Once the count agrees at `D` and
//! `D + 1`, Nakayama's lemma gives `m^D ⊆ I` locally and the count is exact.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::OracleError;
use crate::ideal::{self, Colength, Ideal};
use crate::monomial::{monomials_below, Monomial};
use crate::polar::{self, CoordinateFrame, FramedPolynomial, GammaProfile};
use crate::poly::{Polynomial, Rational};

/// Largest truncation degree the automatic search will try.
pub const DEFAULT_DEGREE_CAP: u32 = 40;

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub name: String,
    pub expected: i64,
    pub actual: i64,
    pub pass: bool,
    pub context: String,
}

impl OracleVerdict {
    pub fn new(name: impl Into<String>, expected: i64, actual: i64, context: impl Into<String>) -> Self {
        OracleVerdict {
            name: name.into(),
            expected,
            actual,
            pass: expected == actual,
            context: context.into(),
        }
    }
}

/// Truncated colength of an ideal at a degree cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncatedColength {
    /// `dim Q[z]_{<D} / (I + m^D)`.
    pub value: u64,
    /// The value agrees at `D` and `D + 1`, so it equals the local colength.
    pub stable: bool,
    pub degree: u32,
}

type Row = Vec<(usize, BigInt)>;

/// Row-echelon accumulator with sparse primitive integer rows.
///
/// Elimination is fraction-free: `row <- (a/g) * row - (b/g) * pivot` where
/// `a`, `b` are the two leading coefficients and `g` their gcd, followed by
/// removal of the row content. This keeps entries far smaller than reduced
/// rationals do on dense generators.
struct Echelon {
    pivots: BTreeMap<usize, Row>,
}

impl Echelon {
    fn insert(&mut self, mut row: Row) {
        while let Some(col) = row.first().map(|t| t.0) {
            let Some(pivot) = self.pivots.get(&col) else {
                make_primitive(&mut row);
                self.pivots.insert(col, row);
                return;
            };
            row = eliminate_lead(&row, pivot);
            make_primitive(&mut row);
        }
    }
}

fn make_primitive(row: &mut Row) {
    let mut g = BigInt::zero();
    for (_, c) in row.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if row.first().is_some_and(|(_, c)| c.is_negative()) {
        g = -g;
    }
    if !g.is_one() && !g.is_zero() {
        for (_, c) in row.iter_mut() {
            *c /= &g;
        }
    }
}

/// `(a/g) * row - (b/g) * pivot` for leading coefficients `b` of `row` and `a` of `pivot`.
fn eliminate_lead(row: &[(usize, BigInt)], pivot: &[(usize, BigInt)]) -> Row {
    let g = row[0].1.gcd(&pivot[0].1);
    let a = &pivot[0].1 / &g;
    let b = &row[0].1 / &g;
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let take_row = j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i == row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push((row[i].0, &a * &row[i].1));
            i += 1;
        } else if take_pivot {
            out.push((pivot[j].0, -(&b * &pivot[j].1)));
            j += 1;
        } else {
            let v = &a * &row[i].1 - &b * &pivot[j].1;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Clear denominators of a rational row.
fn integer_row(row: Vec<(usize, Rational)>) -> Row {
    let lcm = row.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    row.into_iter()
        .map(|(col, c)| (col, c.numer() * (&lcm / c.denom())))
        .collect()
}

/// `dim Q[z]_{<D} / (I + m^D)` for every `D <= top`, from one elimination at `top`.
///
/// Columns are ordered by degree and each row pivots on its lowest monomial,
/// so projecting the row space onto the columns of degree `< D` keeps exactly
/// the rows whose pivot lies there. That projection is the row space of the
/// truncation at `D`: the extra multiples used at `top` project to zero.
pub fn truncated_quotient_dimensions(ideal: &Ideal, top: u32) -> Vec<u64> {
    let n = ideal.nvars();
    let columns = monomials_below(n, top);
    let index: BTreeMap<Monomial, usize> = columns.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut echelon = Echelon {
        pivots: BTreeMap::new(),
    };
    // short generators first: their multiples clear columns cheaply
    let mut gens: Vec<&Polynomial> = ideal.generators().iter().collect();
    gens.sort_by_key(|g| g.len());
    for g in gens {
        let ord = g.order_of_vanishing().expect("nonzero generator");
        if ord >= top {
            continue;
        }
        for m in monomials_below(n, top - ord) {
            let mut row: Vec<(usize, Rational)> = g
                .terms()
                .iter()
                .filter_map(|(t, c)| {
                    let prod = t.mul(&m);
                    index.get(&prod).map(|&col| (col, c.clone()))
                })
                .collect();
            row.sort_by_key(|(c, _)| *c);
            if !row.is_empty() {
                echelon.insert(integer_row(row));
            }
        }
    }
    (0..=top)
        .map(|d| {
            let width = columns.partition_point(|m| m.degree() < d);
            let rank = echelon.pivots.range(..width).count();
            (width - rank) as u64
        })
        .collect()
}

/// `dim Q[z]_{<D} / (I + m^D)` by Gaussian elimination.
pub fn truncated_quotient_dimension(ideal: &Ideal, degree: u32) -> u64 {
    truncated_quotient_dimensions(ideal, degree)[degree as usize]
}

/// Truncated colength at `degree`, with the stability test at `degree + 1`.
pub fn truncated_colength(ideal: &Ideal, degree: u32) -> TruncatedColength {
    assert!(degree >= 1, "degree cap must be positive");
    let dims = truncated_quotient_dimensions(ideal, degree + 1);
    let (value, next) = (dims[degree as usize], dims[degree as usize + 1]);
    TruncatedColength {
        value,
        stable: value == next,
        degree,
    }
}

/// Start at `start`, doubling the cap on instability while it stays within `cap`.
pub fn truncated_colength_auto(ideal: &Ideal, start: u32, cap: u32) -> TruncatedColength {
    let mut degree = start.max(1);
    loop {
        let result = truncated_colength(ideal, degree);
        if result.stable || degree.saturating_mul(2) > cap {
            return result;
        }
        degree *= 2;
    }
}

/// Try every degree below `start` in turn, then continue as [`truncated_colength_auto`].
///
/// Elimination cost grows steeply with the degree, and most ideals met in
/// practice stabilize well below the default start, so walking up from 1 is
/// usually far cheaper than starting there. Any stable degree gives the exact
/// colength, so the result does not depend on where the walk stops.
pub fn truncated_colength_search(ideal: &Ideal, start: u32, cap: u32) -> TruncatedColength {
    for degree in 1..start.min(cap) {
        let result = truncated_colength(ideal, degree);
        if result.stable {
            return result;
        }
    }
    truncated_colength_auto(ideal, start, cap)
}

/// Default starting truncation degree for ideals derived from `f`.
pub fn default_start_degree(f: &Polynomial) -> u32 {
    2 * f.total_degree().unwrap_or(0) + 4
}

/// `(d - 1)^(n + 1 - k)`: the polar multiplicities of the Fermat polynomial `sum z_i^d`.
pub fn bezout_gamma(n: u32, d: u32, k: u32) -> u64 {
    assert!(n >= 1 && d >= 2 && (1..=n).contains(&k));
    u64::from(d - 1).pow(n + 1 - k)
}

/// Teissier's identity for an isolated singularity:
/// `colength(polar_1 + (f)) = mu(f) + mu(f restricted to z_0 = 0)`, all in `frame`.
pub fn teissier_check(f: &Polynomial, frame: &CoordinateFrame) -> Result<OracleVerdict, OracleError> {
    teissier_parts(f, frame).map(|t| t.verdict)
}

/// Teissier's identity together with the two zero-dimensional ideals it measured.
#[derive(Clone, Debug)]
pub struct TeissierParts {
    pub verdict: OracleVerdict,
    /// `P_1 + (f)` in the frame, with its engine colength.
    pub polar_meets_f: (Ideal, u64),
    /// Jacobian ideal of `f` restricted to `z_0 = 0`, with its engine colength.
    pub section_jacobian: (Ideal, u64),
}

pub fn teissier_parts(f: &Polynomial, frame: &CoordinateFrame) -> Result<TeissierParts, OracleError> {
    polar::check_standing_assumptions(f)?;
    let Colength::Finite(mu) = polar::milnor_number(f) else {
        return Err(OracleError::NonIsolated);
    };
    let framed = FramedPolynomial::new(f, frame)?;
    let section_jacobian = polar::hyperplane_jacobian(&framed.poly, 0);
    let Colength::Finite(mu_section) = ideal::local_colength(&section_jacobian) else {
        return Err(OracleError::DegenerateFrame);
    };
    let polar = framed.polar_ideal(1)?;
    let meets = polar.ideal.with_generators([framed.poly.clone()]);
    let Colength::Finite(lhs) = ideal::local_colength(&meets) else {
        return Err(OracleError::DegenerateFrame);
    };
    Ok(TeissierParts {
        verdict: OracleVerdict::new(
            "teissier",
            (mu + mu_section) as i64,
            lhs as i64,
            format!("mu = {mu}, mu(section) = {mu_section}, frame = {:?}", frame.entries()),
        ),
        polar_meets_f: (meets, lhs),
        section_jacobian: (section_jacobian, mu_section),
    })
}

/// The three conventions every profile must satisfy:
/// `gamma^0 = 0`, `gamma^{n+1} = 1`, `gamma^n = mult - 1`.
pub fn gamma_identity_audit(gamma: &[u64], mult: u32) -> Vec<OracleVerdict> {
    let n = gamma.len().saturating_sub(2);
    let at = |k: usize| gamma.get(k).map(|&v| v as i64).unwrap_or(-1);
    alloc::vec![
        OracleVerdict::new("gamma_0_is_zero", 0, at(0), format!("gamma = {gamma:?}")),
        OracleVerdict::new("gamma_n_plus_1_is_one", 1, at(n + 1), format!("gamma = {gamma:?}")),
        OracleVerdict::new(
            "gamma_n_is_mult_minus_one",
            i64::from(mult) - 1,
            at(n),
            format!("gamma = {gamma:?}, mult = {mult}"),
        ),
    ]
}

/// Options for [`audit_profile`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuditConfig {
    /// Starting truncation degree; `None` uses `2 * deg f + 4`.
    pub start_degree: Option<u32>,
    pub degree_cap: u32,
    pub colength_checks: bool,
    pub teissier_checks: bool,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            start_degree: None,
            degree_cap: DEFAULT_DEGREE_CAP,
            colength_checks: true,
            teissier_checks: true,
        }
    }
}

/// Engine-vs-oracle verdict for one ideal whose local colength the engine computed.
pub fn colength_verdict(ideal: &Ideal, engine: u64, start: u32, cap: u32, context: String) -> OracleVerdict {
    let t = truncated_colength_search(ideal, start, cap);
    // an unstable truncation is not a valid oracle value
    let actual = if t.stable { t.value as i64 } else { -1 };
    OracleVerdict::new("colength_vs_truncated", actual, engine as i64, context)
}

/// Run every applicable oracle on a computed profile.
///
/// [`audit_header`] followed by [`audit_trial`] for each trial frame, in order.
pub fn audit_profile(f: &Polynomial, profile: &GammaProfile, config: &AuditConfig) -> Vec<OracleVerdict> {
    let mut out = audit_header(f, profile, config);
    for t in 0..profile.per_trial.len() {
        out.extend(audit_trial(f, profile, t, config));
    }
    out
}

/// The identity audit, then the engine-vs-oracle check of the Milnor number
/// when the singularity is isolated.
pub fn audit_header(f: &Polynomial, profile: &GammaProfile, config: &AuditConfig) -> Vec<OracleVerdict> {
    let mut out = gamma_identity_audit(&profile.gamma, profile.mult);
    if profile.s == 0 && config.colength_checks {
        let jac = polar::jacobian_ideal(f).expect("standing assumptions checked");
        if let Colength::Finite(mu) = ideal::local_colength(&jac) {
            let start = config.start_degree.unwrap_or_else(|| default_start_degree(f));
            out.push(colength_verdict(
                &jac,
                mu,
                start,
                config.degree_cap,
                "milnor number".into(),
            ));
        }
    }
    out
}

/// Oracles for trial `t`: an engine-vs-oracle check for every finite colength
/// the trial produced, then, for isolated singularities with a valid `gamma^1`,
/// Teissier's identity and engine-vs-oracle checks on the two ideals it uses.
pub fn audit_trial(f: &Polynomial, profile: &GammaProfile, t: usize, config: &AuditConfig) -> Vec<OracleVerdict> {
    let mut out = Vec::new();
    let eval = &profile.per_trial[t];
    let start = config.start_degree.unwrap_or_else(|| default_start_degree(f));
    let check = |ideal: &Ideal, v: u64, what: String| colength_verdict(ideal, v, start, config.degree_cap, what);
    if config.colength_checks {
        for trial in &eval.trials {
            if let Ok(v) = trial.outcome {
                out.push(check(&trial.section, v, format!("trial {t}, k = {}", trial.k)));
            }
        }
    }
    if profile.s == 0 && config.teissier_checks && eval.value(1).is_some() {
        match teissier_parts(f, &eval.frame) {
            Ok(mut parts) => {
                parts.verdict.context = format!("trial {t}: {}", parts.verdict.context);
                out.push(parts.verdict);
                if config.colength_checks {
                    let (ideal, v) = &parts.polar_meets_f;
                    out.push(check(ideal, *v, format!("trial {t}, polar curve meets f")));
                    let (ideal, v) = &parts.section_jacobian;
                    out.push(check(ideal, *v, format!("trial {t}, milnor number of z_0 = 0 section")));
                }
            }
            Err(e) => out.push(OracleVerdict {
                name: "teissier".into(),
                expected: 0,
                actual: -1,
                pass: false,
                context: format!("trial {t}: {e}"),
            }),
        }
    }
    out
}

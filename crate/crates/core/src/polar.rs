//! Relative polar ideals and polar multiplicities.
//!
//! For a coordinate frame `z = (z_0, ..., z_n)` the `k`-dimensional polar ideal
//! is `(∂f/∂z_k, ..., ∂f/∂z_n) : J(f)^∞`, which removes the components lying in
//! the critical locus. The polar multiplicity `gamma^k` is the local colength at
//! the origin of that ideal plus `(z_0, ..., z_{k-1})`, valid when the polar
//! ideal is `k`-dimensional at the origin and the intersection is proper.
//! The generic value is estimated as the minimum over sampled frames.

use alloc::vec::Vec;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{FrameDefect, PolarError};
use crate::ideal::{self, Colength, Ideal};
use crate::matrix::RationalMatrix;
use crate::poly::{rat, Polynomial};

/// Default bound on the absolute value of sampled frame entries.
pub const DEFAULT_FRAME_BOUND: i64 = 10;

/// Where a frame came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrameOrigin {
    Identity,
    Explicit,
    /// Drawn from `ChaCha8(seed)` on stream `trial`; `rejected` singular draws were discarded.
    Sampled {
        seed: u64,
        trial: u32,
        rejected: u32,
    },
}

/// An invertible integer change of coordinates `x = M z`.
///
/// Row `i` of `M` expresses the original variable `x_i` in the frame coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoordinateFrame {
    entries: Vec<Vec<i64>>,
    matrix: RationalMatrix,
    origin: FrameOrigin,
}

impl CoordinateFrame {
    pub fn identity(nvars: usize) -> Self {
        let entries = (0..nvars)
            .map(|i| (0..nvars).map(|j| i64::from(i == j)).collect())
            .collect();
        CoordinateFrame {
            entries,
            matrix: RationalMatrix::identity(nvars),
            origin: FrameOrigin::Identity,
        }
    }

    /// Frame from explicit integer rows; `None` if singular or not square.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        let matrix = RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect());
        if matrix.determinant().is_zero() {
            return None;
        }
        Some(CoordinateFrame {
            entries: rows,
            matrix,
            origin: FrameOrigin::Explicit,
        })
    }

    /// Draw a frame with entries uniform in `[-bound, bound]`, rejecting singular matrices.
    ///
    /// The draw depends only on `(nvars, seed, trial, bound)`.
    pub fn sample(nvars: usize, seed: u64, trial: u32, bound: i64) -> Self {
        assert!(bound >= 1, "frame bound must be positive");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        let mut rejected = 0;
        loop {
            let rows: Vec<Vec<i64>> = (0..nvars)
                .map(|_| (0..nvars).map(|_| rng.random_range(-bound..=bound)).collect())
                .collect();
            if let Some(mut frame) = Self::from_rows(rows) {
                frame.origin = FrameOrigin::Sampled { seed, trial, rejected };
                return frame;
            }
            rejected += 1;
        }
    }

    pub fn nvars(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn origin(&self) -> FrameOrigin {
        self.origin
    }

    /// `f` written in the frame coordinates.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, PolarError> {
        if f.nvars() != self.nvars() {
            return Err(PolarError::FrameDimension {
                expected: f.nvars(),
                found: self.nvars(),
            });
        }
        Ok(f.substitute_linear_unchecked(&self.matrix))
    }
}

/// Check the standing assumptions: at least two variables, `f != 0`, `f(0) = 0`,
/// and the origin is a critical point.
pub fn check_standing_assumptions(f: &Polynomial) -> Result<(), PolarError> {
    if f.is_zero() {
        return Err(PolarError::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(PolarError::NonzeroAtOrigin);
    }
    if f.nvars() < 2 {
        return Err(PolarError::TooFewVariables(f.nvars()));
    }
    if f.order_of_vanishing() < Some(2) {
        return Err(PolarError::SmoothOrigin);
    }
    Ok(())
}

fn partials(f: &Polynomial) -> Vec<Polynomial> {
    (0..f.nvars())
        .map(|i| f.partial_derivative(i).expect("index in range"))
        .collect()
}

/// The ideal of all first partial derivatives.
pub fn jacobian_ideal(f: &Polynomial) -> Result<Ideal, PolarError> {
    if f.is_zero() {
        return Err(PolarError::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(PolarError::NonzeroAtOrigin);
    }
    Ok(Ideal::new(f.nvars(), partials(f)))
}

/// Local dimension at the origin of the critical locus.
pub fn critical_dimension(f: &Polynomial) -> Result<u32, PolarError> {
    check_standing_assumptions(f)?;
    let jac = jacobian_ideal(f)?;
    let sb = ideal::mora_standard_basis(&jac);
    let d = ideal::dimension(&sb);
    // the origin lies on Σf, so the local dimension is at least 0
    debug_assert!(d >= 0);
    Ok(d as u32)
}

/// Milnor number: local colength of the Jacobian ideal, infinite for non-isolated singularities.
pub fn milnor_number(g: &Polynomial) -> Colength {
    ideal::local_colength(&Ideal::new(g.nvars(), partials(g)))
}

/// Jacobian ideal of `g` restricted to `z_i = 0`, plus `z_i`, in the ambient ring.
pub fn hyperplane_jacobian(g: &Polynomial, i: usize) -> Ideal {
    let h = g.set_var_zero(i);
    let n = g.nvars();
    let gens = (0..n)
        .filter(|&j| j != i)
        .map(|j| h.partial_derivative(j).expect("index in range"))
        .chain([Polynomial::var(n, i)]);
    Ideal::new(n, gens)
}

/// Milnor number of `g` restricted to the hyperplane `z_i = 0`.
pub fn hyperplane_milnor_number(g: &Polynomial, i: usize) -> Colength {
    ideal::local_colength(&hyperplane_jacobian(g, i))
}

/// Saturated polar ideal together with the number of quotient steps saturation took.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarIdeal {
    pub k: usize,
    pub ideal: Ideal,
    pub saturation_exponent: u32,
}

/// `f` in a fixed frame with its Jacobian ideal, shared by all polar indices.
#[derive(Clone, Debug)]
pub struct FramedPolynomial {
    pub poly: Polynomial,
    partials: Vec<Polynomial>,
    jacobian: Ideal,
}

impl FramedPolynomial {
    pub fn new(f: &Polynomial, frame: &CoordinateFrame) -> Result<Self, PolarError> {
        let poly = frame.apply(f)?;
        let partials = partials(&poly);
        let jacobian = Ideal::new(poly.nvars(), partials.iter().cloned());
        Ok(FramedPolynomial {
            poly,
            partials,
            jacobian,
        })
    }

    /// Ambient dimension parameter `n` (the ring has `n + 1` variables).
    pub fn n(&self) -> usize {
        self.poly.nvars() - 1
    }

    pub fn jacobian(&self) -> &Ideal {
        &self.jacobian
    }

    /// `(∂/∂z_k, ..., ∂/∂z_n) : J^∞` for `1 <= k <= n`.
    pub fn polar_ideal(&self, k: usize) -> Result<PolarIdeal, PolarError> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(PolarError::IndexOutOfRange { k, max: n });
        }
        let nv = self.poly.nvars();
        let gens = Ideal::new(nv, self.partials[k..].iter().cloned());
        let (ideal, saturation_exponent) = ideal::saturate(&gens, &self.jacobian);
        Ok(PolarIdeal {
            k,
            ideal,
            saturation_exponent,
        })
    }

    /// Evaluate `gamma^k` in this frame for `1 <= k <= n`.
    ///
    /// Every component of the polar ideal has dimension at least `k` (it is a
    /// saturation of an ideal with `n + 1 - k` generators), and cutting with `k`
    /// hyperplanes drops the local dimension by at most `k`. So a finite section
    /// colength pins the polar dimension to `k`, or to `-1` when the colength is
    /// zero. A standard basis of the polar ideal itself is only needed to
    /// classify an infinite section.
    pub fn gamma(&self, k: usize) -> Result<GammaTrial, PolarError> {
        let polar = self.polar_ideal(k)?;
        let section = section_ideal(&polar.ideal, k);
        let (polar_dimension, outcome) = match ideal::local_colength(&section) {
            Colength::Finite(0) => (-1, Ok(0)),
            Colength::Finite(v) => (k as i64, Ok(v)),
            Colength::Infinite => {
                let found = ideal::dimension(&ideal::mora_standard_basis(&polar.ideal));
                let defect = if found == k as i64 {
                    FrameDefect::ImproperIntersection
                } else {
                    FrameDefect::WrongPolarDimension { expected: k, found }
                };
                (found, Err(defect))
            }
        };
        Ok(GammaTrial {
            k,
            outcome,
            polar_dimension,
            saturation_exponent: polar.saturation_exponent,
            section,
        })
    }
}

/// `polar + (z_0, ..., z_{k-1})`, with the linear generators substituted into the others.
pub fn section_ideal(polar: &Ideal, k: usize) -> Ideal {
    let n = polar.nvars();
    let restricted = polar
        .generators()
        .iter()
        .map(|g| (0..k).fold(g.clone(), |acc, i| acc.set_var_zero(i)));
    Ideal::new(n, restricted.chain((0..k).map(|i| Polynomial::var(n, i))))
}

/// `gamma^k` in one frame, with the data needed to audit it.
#[derive(Clone, Debug)]
pub struct GammaTrial {
    pub k: usize,
    /// The colength when the frame is generic enough for this `k`.
    pub outcome: Result<u64, FrameDefect>,
    /// Local dimension at the origin of the polar ideal (`-1` when it is a unit there).
    pub polar_dimension: i64,
    pub saturation_exponent: u32,
    /// The ideal whose local colength is `gamma^k`.
    pub section: Ideal,
}

/// Polar ideal of `f` in `frame` for `1 <= k <= n`.
pub fn polar_ideal(f: &Polynomial, frame: &CoordinateFrame, k: usize) -> Result<PolarIdeal, PolarError> {
    check_standing_assumptions(f)?;
    FramedPolynomial::new(f, frame)?.polar_ideal(k)
}

/// `gamma^k` of `f` in `frame` for `0 <= k <= n + 1`.
///
/// `k = 0` and `k = n + 1` return the conventional values 0 and 1. For other
/// `k` a non-generic frame yields [`PolarError::NotGeneric`].
pub fn gamma_k(f: &Polynomial, frame: &CoordinateFrame, k: usize) -> Result<u64, PolarError> {
    check_standing_assumptions(f)?;
    let n = f.nvars() - 1;
    match k {
        0 => Ok(0),
        _ if k == n + 1 => Ok(1),
        _ if k > n + 1 => Err(PolarError::IndexOutOfRange { k, max: n + 1 }),
        _ => {
            let trial = FramedPolynomial::new(f, frame)?.gamma(k)?;
            trial.outcome.map_err(|defect| PolarError::NotGeneric { k, defect })
        }
    }
}

/// All polar multiplicities of `f` in one frame.
#[derive(Clone, Debug)]
pub struct FrameEvaluation {
    pub frame: CoordinateFrame,
    /// Entry `k - 1` holds `gamma^k` for `1 <= k <= n`.
    pub trials: Vec<GammaTrial>,
}

impl FrameEvaluation {
    pub fn value(&self, k: usize) -> Option<u64> {
        self.trials.get(k.checked_sub(1)?)?.outcome.ok()
    }
}

pub fn evaluate_frame(f: &Polynomial, frame: &CoordinateFrame) -> Result<FrameEvaluation, PolarError> {
    let framed = FramedPolynomial::new(f, frame)?;
    let trials = (1..=framed.n())
        .map(|k| framed.gamma(k))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FrameEvaluation {
        frame: frame.clone(),
        trials,
    })
}

/// Sampling parameters for [`gamma_profile`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingConfig {
    pub trials: u32,
    pub seed: u64,
    pub bound: i64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig {
            trials: 5,
            seed: 0,
            bound: DEFAULT_FRAME_BOUND,
        }
    }
}

impl SamplingConfig {
    pub fn frames(&self, nvars: usize) -> impl Iterator<Item = CoordinateFrame> + '_ {
        (0..self.trials).map(move |t| CoordinateFrame::sample(nvars, self.seed, t, self.bound))
    }
}

/// Polar multiplicities `(gamma^0, ..., gamma^{n+1})` with sampling diagnostics.
#[derive(Clone, Debug)]
pub struct GammaProfile {
    pub n: usize,
    pub gamma: Vec<u64>,
    pub mult: u32,
    pub s: u32,
    pub trials: u32,
    /// Every `k` has its minimum attained by at least half the trials (rounded up).
    pub stable: bool,
    /// `agreement[k - 1]`: number of trials attaining the minimum for `gamma^k`.
    pub agreement: Vec<u32>,
    pub per_trial: Vec<FrameEvaluation>,
}

impl GammaProfile {
    /// Build a profile from already evaluated frames.
    ///
    /// Takes the minimum valid value per `k` and enforces the conventions and the
    /// `gamma^n = mult - 1` identity.
    pub fn from_evaluations(f: &Polynomial, s: u32, per_trial: Vec<FrameEvaluation>) -> Result<Self, PolarError> {
        check_standing_assumptions(f)?;
        if per_trial.is_empty() {
            return Err(PolarError::NoTrials);
        }
        let n = f.nvars() - 1;
        let mult = f.order_of_vanishing().expect("nonzero");
        let trials = per_trial.len() as u32;
        let mut gamma = alloc::vec![0u64];
        let mut agreement = Vec::with_capacity(n);
        for k in 1..=n {
            let values: Vec<u64> = per_trial.iter().filter_map(|e| e.value(k)).collect();
            let min = *values.iter().min().ok_or(PolarError::NoValidFrame { k })?;
            agreement.push(values.iter().filter(|&&v| v == min).count() as u32);
            gamma.push(min);
        }
        gamma.push(1);
        if gamma[n] != u64::from(mult) - 1 {
            return Err(PolarError::GammaIdentityViolation {
                computed: gamma[n],
                expected: u64::from(mult) - 1,
            });
        }
        let needed = trials.div_ceil(2);
        let stable = agreement.iter().all(|&a| a >= needed);
        Ok(GammaProfile {
            n,
            gamma,
            mult,
            s,
            trials,
            stable,
            agreement,
            per_trial,
        })
    }
}

/// Estimate the generic polar multiplicities from `config.trials` sampled frames.
pub fn gamma_profile(f: &Polynomial, config: &SamplingConfig) -> Result<GammaProfile, PolarError> {
    check_standing_assumptions(f)?;
    if config.trials == 0 {
        return Err(PolarError::NoTrials);
    }
    let s = critical_dimension(f)?;
    let per_trial = config
        .frames(f.nvars())
        .map(|frame| evaluate_frame(f, &frame))
        .collect::<Result<Vec<_>, _>>()?;
    GammaProfile::from_evaluations(f, s, per_trial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn p(text: &str, vars: &[&str]) -> Polynomial {
        parse_polynomial(text, vars).unwrap()
    }

    const XY: &[&str] = &["x", "y"];
    const XYZ: &[&str] = &["x", "y", "z"];

    #[test]
    fn jacobian_examples() {
        let j = jacobian_ideal(&p("x^2 + y^2", XY)).unwrap();
        assert_eq!(j.generators(), &[p("2*x", XY), p("2*y", XY)]);
        let j = jacobian_ideal(&p("y^2 - x^2*z", XYZ)).unwrap();
        assert_eq!(j.generators(), &[p("-2*x*z", XYZ), p("2*y", XYZ), p("-x^2", XYZ)]);
        let j = jacobian_ideal(&p("x*y", XY)).unwrap();
        assert_eq!(j.generators(), &[p("y", XY), p("x", XY)]);
        assert_eq!(jacobian_ideal(&Polynomial::zero(2)), Err(PolarError::ZeroPolynomial));
        assert_eq!(jacobian_ideal(&p("x + 1", XY)), Err(PolarError::NonzeroAtOrigin));
    }

    #[test]
    fn critical_dimension_examples() {
        assert_eq!(critical_dimension(&p("x^2 + y^2 + z^2", XYZ)), Ok(0));
        assert_eq!(critical_dimension(&p("y^2 - x^2*z", XYZ)), Ok(1));
        assert_eq!(critical_dimension(&p("x^2", XY)), Ok(1));
        assert_eq!(critical_dimension(&p("x + y^2", XY)), Err(PolarError::SmoothOrigin));
    }

    #[test]
    fn milnor_examples() {
        assert_eq!(milnor_number(&p("x^2 + y^3", XY)), Colength::Finite(2));
        assert_eq!(milnor_number(&p("x^2 + y^2", XY)), Colength::Finite(1));
        assert_eq!(milnor_number(&p("y^2 - x^2*z", XYZ)), Colength::Infinite);
        assert_eq!(milnor_number(&p("x^3 + y^3", XY)), Colength::Finite(4));
    }

    #[test]
    fn polar_ideal_of_quadric_is_linear() {
        let f = p("x^2 + y^2 + z^2", XYZ);
        let pi = polar_ideal(&f, &CoordinateFrame::identity(3), 1).unwrap();
        let expect = Ideal::new(3, [p("y", XYZ), p("z", XYZ)]);
        assert_eq!(
            ideal::groebner_basis(&pi.ideal, crate::MonomialOrder::DegRevLex),
            ideal::groebner_basis(&expect, crate::MonomialOrder::DegRevLex)
        );
    }

    #[test]
    fn polar_ideal_of_node_in_explicit_frame() {
        let f = p("x*y", XY);
        let frame = CoordinateFrame::from_rows(alloc::vec![alloc::vec![1, 2], alloc::vec![1, -1]]).unwrap();
        let pi = polar_ideal(&f, &frame, 1).unwrap();
        // f(x+2y, x-y) = x^2 + x*y - 2*y^2, so ∂/∂y = x - 4y: a line other than Σf = {0}
        let gb = ideal::groebner_basis(&pi.ideal, crate::MonomialOrder::DegRevLex);
        assert_eq!(gb.basis(), &[p("x - 4*y", XY)]);
        assert_eq!(gamma_k(&f, &frame, 1), Ok(1));
        assert_eq!(gamma_k(&f, &frame, 0), Ok(0));
        assert_eq!(gamma_k(&f, &frame, 2), Ok(1));
    }

    #[test]
    fn umbrella_top_polar_ideal_is_a_quadric() {
        let f = p("y^2 - x^2*z", XYZ);
        let frame = CoordinateFrame::from_rows(alloc::vec![
            alloc::vec![1, 0, 2],
            alloc::vec![0, 1, 3],
            alloc::vec![0, 0, 1],
        ])
        .unwrap();
        let pi = polar_ideal(&f, &frame, 2).unwrap();
        assert_eq!(pi.ideal.generators().len(), 1);
        let g = &pi.ideal.generators()[0];
        assert_eq!(g.total_degree(), Some(2));
        assert_eq!(g.order_of_vanishing(), Some(1));
    }

    #[test]
    fn identity_frame_is_not_generic_for_fermat_curve_section() {
        // identity frame for x^2 + y^3: gamma^1 = colength(2x... ) -> (∂_y f) : J^∞ = (y^2) plus (x): 2
        let f = p("x^2 + y^3", XY);
        assert_eq!(gamma_k(&f, &CoordinateFrame::identity(2), 1), Ok(2));
        let prof = gamma_profile(&f, &SamplingConfig::default()).unwrap();
        assert_eq!(prof.gamma, [0, 1, 1]);
    }

    #[test]
    fn frame_sampling_is_deterministic_and_bounded() {
        let a = CoordinateFrame::sample(3, 7, 2, 10);
        let b = CoordinateFrame::sample(3, 7, 2, 10);
        assert_eq!(a, b);
        assert_ne!(a, CoordinateFrame::sample(3, 7, 3, 10));
        assert!(a.entries().iter().flatten().all(|v| v.abs() <= 10));
        assert!(!a.matrix().determinant().is_zero());
    }

    #[test]
    fn excluded_inputs() {
        let cfg = SamplingConfig::default();
        assert!(matches!(
            gamma_profile(&Polynomial::zero(2), &cfg),
            Err(PolarError::ZeroPolynomial)
        ));
        assert!(matches!(
            gamma_profile(&p("x*y + 1", XY), &cfg),
            Err(PolarError::NonzeroAtOrigin)
        ));
        assert!(matches!(
            gamma_profile(&p("x + y^2", XY), &cfg),
            Err(PolarError::SmoothOrigin)
        ));
        let zero_trials = SamplingConfig { trials: 0, ..cfg };
        assert!(matches!(
            gamma_profile(&p("x*y", XY), &zero_trials),
            Err(PolarError::NoTrials)
        ));
    }

    #[test]
    fn non_reduced_input_violates_identity() {
        // Σ(x^2) = V(x) is all of X: the polar curve is empty and gamma^1 = 0 != mult - 1
        let err = gamma_profile(&p("x^2", XY), &SamplingConfig::default()).unwrap_err();
        assert_eq!(
            err,
            PolarError::GammaIdentityViolation {
                computed: 0,
                expected: 1
            }
        );
    }
}

use polarlink_core::ideal::{local_colength, Colength, Ideal};
use polarlink_core::oracle::{
    audit_profile, bezout_gamma, teissier_check, truncated_colength, truncated_colength_auto, AuditConfig,
};
use polarlink_core::parse::{parse_polynomial, parse_polynomial_list};
use polarlink_core::polar::{self, gamma_profile, CoordinateFrame, FramedPolynomial, SamplingConfig};

fn ideal(text: &str, vars: &[&str]) -> Ideal {
    Ideal::new(vars.len(), parse_polynomial_list(text, vars).unwrap())
}

const ZERO_DIMENSIONAL: &[(&str, &[&str])] = &[
    ("x, y^2", &["x", "y"]),
    ("y^2, x^2 + y^3", &["x", "y"]),
    ("x^2, y^3", &["x", "y"]),
    ("x^2 + y^2, x*y", &["x", "y"]),
    ("x^3 - y^2, x*y", &["x", "y"]),
    ("x^2 - x, y^2 - y", &["x", "y"]),
    ("x*y - x^3, y^2 + x^2*y, x^4", &["x", "y"]),
    ("x^2 + y*z, y^2 + x*z, z^2 + x*y", &["x", "y", "z"]),
    ("x^2, y^2, z^2", &["x", "y", "z"]),
    ("x*y, y*z, x*z, x^2 + y^2 + z^2", &["x", "y", "z"]),
    ("x + y^2 + z^3, y + z^2, z^4", &["x", "y", "z"]),
    ("3*x^2 + 1/2*y^3, 2*x*y - y^4", &["x", "y"]),
];

#[test]
fn mora_matches_truncation_on_zero_dimensional_ideals() {
    for (text, vars) in ZERO_DIMENSIONAL {
        let i = ideal(text, vars);
        let engine = local_colength(&i);
        let oracle = truncated_colength_auto(&i, 4, 40);
        assert!(oracle.stable, "{text}: oracle unstable at D = {}", oracle.degree);
        assert_eq!(engine, Colength::Finite(oracle.value), "{text}");
    }
}

#[test]
fn positive_dimensional_ideals_agree_on_infinity() {
    for (text, vars) in [
        ("x*y", &["x", "y"][..]),
        ("x^2", &["x", "y"]),
        ("x*y, x*z", &["x", "y", "z"]),
    ] {
        let i = ideal(text, vars);
        assert_eq!(local_colength(&i), Colength::Infinite, "{text}");
        assert!(!truncated_colength(&i, 8).stable, "{text}");
    }
}

#[test]
fn fermat_profiles_match_bezout() {
    for (n, d) in [(1u32, 2u32), (1, 3), (2, 2), (2, 3), (3, 2), (2, 4)] {
        let vars: Vec<String> = (0..=n).map(|i| format!("z{i}")).collect();
        let text: Vec<String> = vars.iter().map(|v| format!("{v}^{d}")).collect();
        let f = parse_polynomial(&text.join(" + "), &vars).unwrap();
        let profile = gamma_profile(&f, &SamplingConfig::default()).unwrap();
        assert!(profile.stable);
        for k in 1..=n {
            assert_eq!(profile.gamma[k as usize], bezout_gamma(n, d, k), "n={n} d={d} k={k}");
        }
    }
}

#[test]
fn audit_passes_on_sample_profiles() {
    let cases: &[(&str, &[&str])] = &[
        ("x^2 + y^3", &["x", "y"]),
        ("x^3 + y^3 + z^3", &["x", "y", "z"]),
        ("y^2 - x^2*z", &["x", "y", "z"]),
        ("x*y*z", &["x", "y", "z"]),
    ];
    for (text, vars) in cases {
        let f = parse_polynomial(text, vars).unwrap();
        let profile = gamma_profile(&f, &SamplingConfig::default()).unwrap();
        let verdicts = audit_profile(&f, &profile, &AuditConfig::default());
        assert!(verdicts.len() > 3, "{text}");
        for v in &verdicts {
            assert!(v.pass, "{text}: {v:?}");
        }
    }
}

#[test]
fn teissier_cusp_depends_on_frame() {
    let vars = ["x", "y"];
    let f = parse_polynomial("x^2 + y^3", &vars).unwrap();
    let v = teissier_check(&f, &CoordinateFrame::identity(2)).unwrap();
    assert_eq!((v.expected, v.actual), (4, 4));
    // a generic line meets the cusp with multiplicity 2
    let frame = CoordinateFrame::sample(2, 0, 0, 10);
    let v = teissier_check(&f, &frame).unwrap();
    assert_eq!((v.expected, v.actual), (3, 3));
}

#[test]
fn teissier_binary_cubic_is_six_by_two_routes() {
    let vars = ["x", "y"];
    let f = parse_polynomial("x^3 + y^3", &vars).unwrap();
    for trial in 0..4 {
        let frame = CoordinateFrame::sample(2, 7, trial, 10);
        let v = teissier_check(&f, &frame).unwrap();
        assert_eq!((v.expected, v.actual), (6, 6));

        // same left side through the truncation oracle
        let framed = FramedPolynomial::new(&f, &frame).unwrap();
        let lhs = framed
            .polar_ideal(1)
            .unwrap()
            .ideal
            .with_generators([framed.poly.clone()]);
        let t = truncated_colength_auto(&lhs, 10, 40);
        assert!(t.stable);
        assert_eq!(t.value, 6);
        assert_eq!(polar::milnor_number(&f), Colength::Finite(4));
    }
}

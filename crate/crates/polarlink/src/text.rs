//! Plain-text rendering of a report. Carries the same numbers as the JSON.

use std::fmt::Write;

use crate::report::ReportDocument;

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn mark(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn render(r: &ReportDocument) -> String {
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "polarlink {} (report schema {})", r.engine_version, r.schema_version);
    let _ = writeln!(w, "input: {}", r.input.poly);
    let _ = writeln!(w, "vars: {}", r.input.vars.join(", "));
    let _ = writeln!(w, "canonical: {}", r.input.canonical);
    let _ = writeln!(
        w,
        "seed: {}  trials: {}  bound: {}  degree cap: {}",
        r.seed, r.input.trials, r.input.bound, r.input.degree_cap
    );
    let _ = writeln!(w, "status: {}", r.status);
    let _ = writeln!(w, "n: {}  mult: {}  s: {}", r.n, r.mult, r.s);
    let _ = writeln!(w, "gamma: {}", join(&r.gamma));
    let _ = writeln!(w, "lambda: {}", join(&r.lambda));

    let _ = writeln!(w, "\nchain complex:");
    for t in &r.chain_complex {
        let _ = writeln!(w, "  k={} rank {} -> H~^{}(K_X)", t.k, t.rank, t.cohomology_degree);
    }

    let _ = writeln!(w, "\nMorse bounds:");
    for b in &r.morse_bounds {
        let _ = write!(w, "  family {} p={}: {}", b.family, b.p, b.text);
        if let (Some(v), Some(h)) = (b.lhs_value, b.holds) {
            let _ = write!(w, "   [{}: lhs = {v}]", mark(h));
        }
        let _ = writeln!(w);
    }

    let _ = writeln!(w, "\ntelescope:");
    for t in &r.telescope {
        let _ = writeln!(
            w,
            "  p={}: forward {} (expected {}), backward {} (expected {}) {}",
            t.p,
            t.forward,
            t.forward_expected,
            t.backward,
            t.backward_expected,
            mark(t.pass)
        );
    }

    let _ = writeln!(
        w,
        "\nvanishing window: b~^k may be nonzero only for k in {}",
        join(&r.vanishing_window)
    );
    let _ = writeln!(w, "euler: {}", r.euler.statement);
    if let Some(c) = &r.curve_sequence {
        let _ = writeln!(
            w,
            "curve sequence: 0 -> H~^0 -> Z^{} -> Z^{} -> H~^1 -> 0, so {}",
            c.middle_ranks[0], c.middle_ranks[1], c.relation
        );
    }

    if let Some(f) = &r.feasibility {
        let _ = writeln!(w, "\nfeasibility ({}): b~ = {}", f.source, join(&f.betti));
        if let Some(c) = f.components {
            let _ = writeln!(w, "  components: {c}");
        }
        let _ = writeln!(w, "  note: {}", f.note);
        for c in &f.checks {
            let _ = writeln!(w, "  [{}] {}: {}", mark(c.pass), c.name, c.detail);
        }
    }

    let d = &r.diagnostics;
    let _ = writeln!(w, "\nstability: {}", if d.stable { "stable" } else { "unstable" });
    let _ = writeln!(w, "  agreement: {} (majority {})", join(&d.agreement), d.majority);
    for fr in &d.frames {
        let gamma: Vec<String> = fr
            .gamma
            .iter()
            .map(|g| g.map_or("-".to_string(), |v| v.to_string()))
            .collect();
        let _ = writeln!(
            w,
            "  trial {}: frame {:?}, rejected {}, gamma^1..n: {}",
            fr.trial,
            fr.matrix,
            fr.rejected_draws,
            gamma.join(" ")
        );
    }
    let _ = writeln!(w, "\noracles: {} checks, {} failed", d.oracles.len(), d.oracle_failures);
    for o in &d.oracles {
        let _ = writeln!(
            w,
            "  [{}] {}: expected {}, actual {} ({})",
            mark(o.pass),
            o.name,
            o.expected,
            o.actual,
            o.context
        );
    }
    out
}

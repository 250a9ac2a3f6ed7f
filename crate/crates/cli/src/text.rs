//! Deterministic plain-text rendering of the output documents. Every
//! line is derived from exact rational data, so two runs with the same
//! arguments produce byte-identical output.

use std::fmt::Write as _;

use crate::output::*;

fn tuple(xs: &[String]) -> String {
    format!("({})", xs.join(", "))
}

fn list(xs: &[String]) -> String {
    format!("[{}]", xs.join(", "))
}

fn int_list(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn cone(c: &ConeDoc) -> String {
    let rays: Vec<String> = c
        .rays
        .iter()
        .map(|r| {
            let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(", "))
        })
        .collect();
    format!("Cone({})", rays.join(", "))
}

pub fn error_text(req: &Request, err: &ErrorDoc) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "command: {}", req.command);
    let _ = writeln!(s, "error: {}", err.code);
    if let Some(h) = &err.hypothesis {
        let _ = writeln!(s, "hypothesis: {h}");
    }
    let _ = writeln!(s, "message: {}", err.message);
    s
}

pub fn surface_text(p: &SurfacePayload) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "surface: case {}, k = {}", p.case, p.k);
    let _ = writeln!(
        s,
        "gram matrix: {}",
        list(&[int_list(&p.gram[0]), int_list(&p.gram[1])])
    );
    let _ = writeln!(s, "effective cone: {}", cone(&p.eff_cone));
    let _ = writeln!(
        s,
        "nef cone: {} (matches closed form: {})",
        cone(&p.nef_cone),
        p.nef_matches_closed_form
    );
    let _ = writeln!(s, "nef generators:");
    for g in &p.nef_generators {
        let _ = writeln!(
            s,
            "  {}: self-intersection {}, genus {}",
            int_list(&g.class),
            g.self_intersection,
            g.genus
        );
    }
    s
}

pub fn hilb_nef_text(p: &HilbNefPayload) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "nef cone of X^[n]: case {}, k = {}, n = {}",
        p.case, p.k, p.n
    );
    let _ = writeln!(
        s,
        "threshold: {} (minimum n = {})",
        p.threshold_hypothesis, p.min_threshold_n
    );
    let _ = writeln!(s, "nef cone: {}", cone(&p.nef_cone));
    s
}

pub fn mori_text(p: &MoriPayload) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "mori cone of X^[n]: case {}, k = {}, n = {}",
        p.case, p.k, p.n
    );
    let _ = writeln!(s, "curves (functional against (w1^[n], w2^[n], B/2)):");
    for c in &p.curves {
        match (&c.class, &c.genus) {
            (Some(class), Some(genus)) => {
                let _ = writeln!(
                    s,
                    "  induced class {}, genus {}: {}",
                    tuple(class),
                    genus,
                    list(&c.functional)
                );
            }
            _ => {
                let _ = writeln!(s, "  contracted: {}", list(&c.functional));
            }
        }
    }
    s
}

pub fn lambda_text(p: &LambdaPayload) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "positivity cone Lambda_n: case {}, k = {}, n = {}",
        p.case, p.k, p.n
    );
    let _ = writeln!(s, "method: {}", p.method);
    let _ = writeln!(s, "lambda cone: {}", cone(&p.lambda_cone));
    if let Some(m) = p.matches_closed_form {
        let _ = writeln!(s, "matches closed form: {m}");
    }
    s
}

fn candidate_line(c: &CandidateDoc) -> String {
    let mut line = format!(
        "{} -> {}: center {}, radius^2 {}",
        tuple(&c.critical),
        tuple(&c.destabilizer),
        c.center,
        c.radius_sq
    );
    if c.degenerate {
        line.push_str(" (degenerate)");
    }
    line
}

pub fn walls_text(p: &WallsPayload) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "wall analysis: case {}, k = {}, n = {}",
        p.case, p.k, p.n
    );
    let _ = writeln!(
        s,
        "slice: H = {}, D = {}, H^2 = {}",
        tuple(&p.slice.h),
        tuple(&p.slice.d),
        p.slice.h_sq
    );
    let _ = writeln!(
        s,
        "candidates (critical -> destabilizer: center, radius^2):"
    );
    for c in &p.candidates {
        let _ = writeln!(s, "  {}", candidate_line(c));
    }
    let _ = writeln!(s, "chosen: {}", candidate_line(&p.chosen));
    let _ = writeln!(s, "gieseker lower bound varrho: {}", p.varrho);
    let _ = writeln!(s, "certified: {}", p.certified);
    let _ = writeln!(s, "vertical wall s: {}", p.vertical_s);
    let _ = writeln!(
        s,
        "nef divisor: {} -> ray {}",
        tuple(&p.nef_divisor),
        int_list(&p.nef_ray)
    );
    if let Some(path) = &p.svg_path {
        let _ = writeln!(s, "svg written to: {path}");
    }
    s
}

pub fn bounds_text(p: &BoundsPayload) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "nef bounds for X^[n]: case {}, k = {}, n = {}",
        p.case, p.k, p.n
    );
    let _ = writeln!(s, "threshold n' = {} (j = {})", p.n_prime, p.j);
    let _ = writeln!(s, "outer bound: {}", cone(&p.outer));
    let _ = writeln!(s, "inner bound: {}", cone(&p.inner));
    let kn = &p.knutsen;
    let _ = writeln!(
        s,
        "n-very-ampleness of L = {}: L^2 = {}, need >= {}: {}",
        tuple(&kn.l),
        kn.l_sq,
        kn.min_l_sq,
        if kn.ok { "holds" } else { "fails" }
    );
    let witness = match &kn.witness {
        Some(w) => tuple(w),
        None => "none".to_string(),
    };
    let _ = writeln!(
        s,
        "  witness: {}, search exhaustive: {} (bound {})",
        witness, kn.exhaustive, kn.bound
    );
    if let Some(imp) = &p.improved {
        let _ = writeln!(s, "improved inner bound (k >= 2n): {}", cone(imp));
    }
    if let Some(exact) = &p.exact {
        let _ = writeln!(s, "exact cone (n = k = 2): {}", cone(exact));
    }
    s
}

pub fn nested_text(p: &NestedPayload) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "nested scheme X^[n,n+1]: case {}, k = {}, n = {}",
        p.case, p.k, p.n
    );
    let _ = writeln!(
        s,
        "printed pairing table (columns: {}):",
        p.columns.join(", ")
    );
    for row in &p.printed_table {
        let _ = writeln!(s, "  {}: {}", row.curve, int_list(&row.entries));
    }
    let flags: Vec<String> = p
        .diff_flags
        .iter()
        .map(|f| format!("({}, {})", f.curve, f.column))
        .collect();
    let _ = writeln!(s, "diff recomputation flags: {}", list(&flags));
    let _ = writeln!(
        s,
        "nef generators and pairings (columns: {}):",
        p.curve_order.join(", ")
    );
    for (g, row) in p.generators.iter().zip(&p.pairings) {
        let _ = writeln!(
            s,
            "  base {} diff {}: {}",
            tuple(&g.base),
            tuple(&g.diff),
            list(row)
        );
    }
    let _ = writeln!(s, "checks:");
    for c in &p.checks {
        let _ = writeln!(s, "  {}: {}", c.name, if c.pass { "pass" } else { "FAIL" });
    }
    let _ = writeln!(s, "ok: {}", p.ok);
    s
}

pub fn special_text(p: &SpecialPayload) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "special analysis: n = 2, k = 2");
    let _ = writeln!(s, "nef cone: {}", cone(&p.nef_cone));
    let q = &p.qprime;
    let _ = writeln!(s, "quadric restrictions (p, q) on Q' = P^1 x P^1:");
    let _ = writeln!(s, "  w1: {}", tuple(&q.w1));
    let _ = writeln!(s, "  w2: {}", tuple(&q.w2));
    let _ = writeln!(s, "  B (lemma): {}", tuple(&q.b_lemma));
    let _ = writeln!(s, "  B (corollary): {}", tuple(&q.b_corollary));
    let _ = writeln!(s, "  discrepant: {}", q.discrepant);
    let _ = writeln!(s, "gamma_t ampleness:");
    for (name, side) in [("corollary", &p.gamma.corollary), ("lemma", &p.gamma.lemma)] {
        let _ = writeln!(s, "  {} sign: ample iff {}", name, side.ample_iff);
        for sample in &side.samples {
            let _ = writeln!(
                s,
                "    t = {}: class {}, ample {}",
                sample.t,
                tuple(&sample.class),
                sample.ample
            );
        }
    }
    let r = &p.ruled_surface;
    let _ = writeln!(
        s,
        "ruled surface: F.B = {}, w1.F = {}, w2.F = {}, mu_1 = {}",
        r.fiber_dot_b, r.w1_dot_fiber, r.w2_dot_fiber, r.hn_slope_mu1
    );
    let samples: Vec<String> = r
        .gamma_fiber_samples
        .iter()
        .map(|f| format!("t = {} -> {}", f.t, f.value))
        .collect();
    let _ = writeln!(s, "  gamma_t . F: {}", samples.join(", "));
    let _ = writeln!(s, "brill-noether rho(3, 1, 2) = {}", p.brill_noether_rho);
    let ks = &p.orthogonality_zero_for_k;
    let _ = writeln!(
        s,
        "boundary class orthogonal to section curve for k in {}..={}: true",
        ks.first().copied().unwrap_or(0),
        ks.last().copied().unwrap_or(0)
    );
    s
}

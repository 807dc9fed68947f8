//! Named curves with known answers.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Fixture {
    pub name: String,
    pub poly: String,
    pub vars: Vec<String>,
    /// Table subcase label when the curve stands for one.
    pub subcase: Option<&'static str>,
    /// Complete-intersection type `(a, b, d)` of the saturation.
    pub expected_abd: Option<(i64, i64, i64)>,
    /// Known `HP(N(f))` as dense coefficients.
    pub expected_hp_n: Option<Vec<i64>>,
    pub expected_tau: Option<i64>,
    pub expected_ct: Option<i64>,
    /// Known number of minimal generators of the saturation.
    pub expected_sat_gens: Option<usize>,
    /// `true` when the log-concavity predicate should pass.
    pub expected_predicate: Option<bool>,
    pub slow: bool,
}

fn vars(n: usize) -> Vec<String> {
    crate::mpoly::default_var_names(n)
}

fn base(name: &str, poly: &str, nvars: usize) -> Fixture {
    Fixture {
        name: name.into(),
        poly: poly.into(),
        vars: vars(nvars),
        subcase: None,
        expected_abd: None,
        expected_hp_n: None,
        expected_tau: None,
        expected_ct: None,
        expected_sat_gens: None,
        expected_predicate: None,
        slow: false,
    }
}

fn dense(pairs: &[(usize, i64)]) -> Vec<i64> {
    let top = pairs.iter().map(|p| p.0).max().unwrap_or(0);
    let mut v = vec![0; top + 1];
    for &(k, c) in pairs {
        v[k] = c;
    }
    v
}

/// The eight table curves, one per proper subcase, as
/// `(subcase, (a, b, d), f)`.
pub const TABLE: [(&str, (i64, i64, i64), &str); 8] = [
    ("1.1.1", (2, 2, 4), "x^2*y^2 + x*z^3 + y*z^3"),
    ("1.1.2", (1, 1, 4), "x*y*z^2 + x^4 + y^4"),
    ("1.2.1", (4, 7, 8), "x^3*y^5 + y^8 + z^8"),
    ("1.2.2", (3, 4, 6), "(x^2+y^2)^3 + (y^3+z^3)^2"),
    ("1.2.3", (2, 3, 6), "x^2*(x+z)^2*(x-z)^2 - y^2*(y-z)^2*(y^2+2*z^2)"),
    ("2.1.1", (5, 5, 7), "z*(x^6+y^6) + 2*y^7"),
    ("2.2.1", (5, 6, 7), "x^4*y^3 + z^7"),
    ("2.2.2", (8, 10, 12), "(x^4+y^4)^3 + (y^2+z^2)^6"),
];

/// Every fixture: the worked examples, the two counterexamples to the
/// stronger conjecture, the eight table curves and the `f_1^2 + f_2^2`
/// family for `m = 2, 3, 4`.
pub fn all() -> Vec<Fixture> {
    let mut out = Vec::new();

    let mut ex1 = base("ex1", "(x^2+y^2)^2 + (y^2+z^2)^2", 3);
    ex1.expected_abd = Some((2, 2, 4));
    ex1.expected_hp_n = Some(vec![0, 0, 2, 3, 2]);
    ex1.expected_sat_gens = Some(2);
    ex1.expected_predicate = Some(true);
    out.push(ex1);

    let mut ex2 = base("ex2", "(x^2+y^2)^3 + (y^3+z^3)^2", 3);
    ex2.expected_abd = Some((3, 4, 6));
    ex2.expected_tau = Some(12);
    ex2.expected_ct = Some(7);
    out.push(ex2);

    let mut ex3 = base("ex3", "x^3*z^4 + x*y^5*z + x^7 + y^7", 3);
    ex3.expected_hp_n = Some(dense(&[
        (3, 1),
        (4, 4),
        (5, 10),
        (6, 14),
        (7, 16),
        (8, 16),
        (9, 14),
        (10, 10),
        (11, 4),
        (12, 1),
    ]));
    ex3.expected_tau = Some(11);
    ex3.expected_ct = Some(11);
    ex3.expected_sat_gens = Some(4);
    ex3.expected_predicate = Some(true);
    out.push(ex3);

    let mut c1 = base("conca-i", "x^9*y + y^10 + x^3*y^5*z^2", 3);
    c1.expected_hp_n = Some(dense(&[
        (8, 1),
        (9, 2),
        (10, 3),
        (11, 5),
        (12, 6),
        (13, 5),
        (14, 3),
        (15, 2),
        (16, 1),
    ]));
    c1.expected_predicate = Some(false);
    out.push(c1);

    let mut c2 = base("conca-ii", "x^5 + y^5 + y*z*(x^3 + z^2*w)", 4);
    c2.expected_hp_n = Some(dense(&[(5, 1), (7, 1)]));
    c2.expected_predicate = Some(false);
    out.push(c2);

    for (label, abd, poly) in TABLE {
        let mut fx = base(&format!("table-{label}"), poly, 3);
        fx.subcase = Some(label);
        fx.expected_abd = Some(abd);
        fx.slow = abd.2 > 8;
        out.push(fx);
    }

    for m in 3..=4 {
        let mut fx = base(
            &format!("sum-of-squares-m{m}"),
            &format!("(x^{m}+y^{m})^2 + (y^{m}+z^{m})^2"),
            3,
        );
        fx.expected_abd = Some((m, m, 2 * m));
        out.push(fx);
    }
    out
}

pub fn by_name(name: &str) -> Option<Fixture> {
    all().into_iter().find(|f| f.name == name)
}

/// Differences between a pipeline report and the fixture's expected data.
pub fn mismatches(fx: &Fixture, r: &crate::pipeline::CurveReport) -> Vec<String> {
    use milnorhp_core::IntPoly;
    let mut out = Vec::new();
    if let Some(hp) = &fx.expected_hp_n {
        let want = IntPoly::from_i64s(hp);
        if r.hp_n != want {
            out.push(format!("hp_N = {}, expected {want}", r.hp_n));
        }
    }
    if let Some(tau) = fx.expected_tau.filter(|&t| t != r.tau) {
        out.push(format!("tau = {}, expected {tau}", r.tau));
    }
    if let Some(ct) = fx.expected_ct.filter(|&c| c != r.ct) {
        out.push(format!("ct = {}, expected {ct}", r.ct));
    }
    if let Some(n) = fx.expected_sat_gens.filter(|&n| n != r.sat_gens_count) {
        out.push(format!(
            "{} minimal generators of the saturation, expected {n}",
            r.sat_gens_count
        ));
    }
    if let Some(pass) = fx.expected_predicate.filter(|&p| p != r.seq_report.passes_conjecture()) {
        out.push(format!("predicate {}, expected {}", !pass, pass));
    }
    if let Some((a, b, d)) = fx.expected_abd {
        if r.ci_detect != Some((a, b)) {
            out.push(format!("inferred (a, b) = {:?}, expected ({a}, {b})", r.ci_detect));
        }
        if r.degree as i64 != d {
            out.push(format!("degree {}, expected {d}", r.degree));
        }
        if !r.certified_ci {
            out.push("saturation is not a certified complete intersection".into());
        }
        match milnorhp_core::hilbert::hp_n_ci_n2(a, b, d) {
            Ok(p) if p == r.hp_n => {}
            Ok(p) => out.push(format!("hp_N = {}, closed form gives {p}", r.hp_n)),
            Err(e) => out.push(e.to_string()),
        }
    }
    out
}

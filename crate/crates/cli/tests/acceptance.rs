//! One line per acceptance criterion. Runs without the libtest harness so the
//! verdicts are always printed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use milnorhp_core::checks::{run_scan, CheckRegistry};
use milnorhp_core::closedform::{audit, matching_subcases, q_polynomial, CIConfig};
use milnorhp_core::concavity::{conjecture_predicate, lemma1_grid, lemma2_grid, lemma3_grid};
use milnorhp_core::hilbert::{ci_invariants, diff_smooth_minus_n, hp_m_ci, hp_n_ci_n2, infer_ab, CIData};
use milnorhp_core::IntPoly;
use milnorhp_jacobian::fixtures::{self, TABLE};
use milnorhp_jacobian::hilbert::rank_oracle_mismatch;
use milnorhp_jacobian::ideal::is_groebner_basis;
use milnorhp_jacobian::{curve_pipeline, groebner, jacobian_ideal, parse_poly, saturate_irrelevant, CurveReport};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

/// `v * (1 + t + ... + t^{m-1})` as a running window sum.
fn times_pm(v: &[i64], m: i64) -> Vec<i64> {
    let m = m as usize;
    let mut out = Vec::with_capacity(v.len() + m - 1);
    let mut window = 0;
    for k in 0..v.len() + m - 1 {
        window += v.get(k).copied().unwrap_or(0);
        if k >= m {
            window -= v[k - m];
        }
        out.push(window);
    }
    out
}

/// `(P_{d-1}^3 - P_a P_b P_c, P_a P_b P_c)` by direct expansion.
fn oracle(a: i64, b: i64, d: i64) -> (Vec<i64>, Vec<i64>) {
    let c = 3 * d - 3 - a - b;
    let smooth = times_pm(&times_pm(&times_pm(&[1], d - 1), d - 1), d - 1);
    let diff = times_pm(&times_pm(&times_pm(&[1], a), b), c);
    let n = smooth
        .iter()
        .zip(diff.iter().chain(std::iter::repeat(&0)))
        .map(|(s, t)| s - t)
        .collect();
    (n, diff)
}

fn trim(v: &[i64]) -> &[i64] {
    let lo = v.iter().position(|&x| x != 0).unwrap_or(v.len());
    let hi = v.iter().rposition(|&x| x != 0).map_or(lo, |k| k + 1);
    &v[lo..hi]
}

fn log_concave(v: &[i64]) -> bool {
    let v = trim(v);
    v.windows(3)
        .all(|w| (w[1] as i128).pow(2) >= w[0] as i128 * w[2] as i128)
}

fn unimodal(v: &[i64]) -> bool {
    let v = trim(v);
    let peak = v.iter().enumerate().max_by_key(|p| p.1).map_or(0, |p| p.0);
    v[..=peak].windows(2).all(|w| w[0] <= w[1]) && v[peak..].windows(2).all(|w| w[0] >= w[1])
}

fn no_internal_zeros(v: &[i64]) -> bool {
    trim(v).iter().all(|&x| x != 0)
}

fn pipeline(s: &str, vars: &[String]) -> Result<CurveReport, String> {
    let f = parse_poly(s, vars).map_err(|e| e.to_string())?;
    curve_pipeline(&f, None).map_err(|e| e.to_string())
}

fn xyz() -> Vec<String> {
    vec!["x".into(), "y".into(), "z".into()]
}

fn c1() -> Check {
    let n = hp_n_ci_n2(2, 2, 4).map_err(|e| e.to_string())?;
    let diff = diff_smooth_minus_n(2, 2, 4).map_err(|e| e.to_string())?;
    ensure(n == poly(&[0, 0, 2, 3, 2]), || format!("hp_N = {n}"))?;
    ensure(diff == poly(&[1, 3, 4, 4, 4, 3, 1]), || format!("difference = {diff}"))?;
    for p in [&n, &diff] {
        let r = conjecture_predicate(p).map_err(|e| e.to_string())?;
        ensure(r.log_concave && r.unimodal && !r.internal_zeros, || {
            format!("predicate fails on {p}")
        })?;
    }
    Ok(format!("hp_N = {n}, difference = {diff}"))
}

fn c2() -> Check {
    let ci = CIData::new(6, 2, vec![3, 4]).map_err(|e| e.to_string())?;
    let m = hp_m_ci(&ci, 10).map_err(|e| e.to_string())?;
    let want = poly(&[1, 3, 6, 10, 15, 18, 19, 18, 16, 13, 12]);
    ensure(m == want, || format!("HP(M) = {m}"))?;
    let tail = hp_m_ci(&ci, 40).map_err(|e| e.to_string())?;
    ensure((10..=40).all(|k| tail.coeff(k) == 12.into()), || {
        "eventual constant is not 12".into()
    })?;
    let inv = ci_invariants(&ci);
    ensure((inv.top_degree, inv.tau, inv.ct) == (12, 12, 7), || format!("{inv:?}"))?;
    ensure(infer_ab(12, 7, 6) == Some((3, 4)), || {
        format!("infer_ab = {:?}", infer_ab(12, 7, 6))
    })?;
    Ok("HP(M) through t^10 and (T, tau, ct) = (12, 12, 7)".into())
}

fn c3() -> Check {
    let r = pipeline("x^3*z^4 + x*y^5*z + x^7 + y^7", &xyz())?;
    let want = poly(&[0, 0, 0, 1, 4, 10, 14, 16, 16, 14, 10, 4, 1]);
    ensure(r.hp_n == want, || format!("hp_N = {}", r.hp_n))?;
    ensure((r.tau, r.ct) == (11, 11), || {
        format!("(tau, ct) = ({}, {})", r.tau, r.ct)
    })?;
    ensure(r.ci_detect.is_none(), || format!("ci_detect = {:?}", r.ci_detect))?;
    ensure(r.sat_gens_count == 4, || {
        format!("{} minimal generators", r.sat_gens_count)
    })?;
    ensure(r.seq_report.passes_conjecture(), || "predicate fails".into())?;
    Ok(format!("hp_N = {}", r.hp_n))
}

fn c4() -> Check {
    let r = pipeline("x^9*y + y^10 + x^3*y^5*z^2", &xyz())?;
    let want = poly(&[0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 5, 6, 5, 3, 2, 1]);
    ensure(r.hp_n == want, || format!("hp_N = {}", r.hp_n))?;
    let lo = r.hp_n.order().unwrap_or(0);
    let k = r.seq_report.first_lc_violation.ok_or("no log-concavity violation")? + lo;
    let triple: Vec<i64> = (k - 1..=k + 1)
        .map(|i| i64::try_from(r.hp_n.coeff(i)).unwrap())
        .collect();
    ensure(triple == [2, 3, 5], || format!("violation at {triple:?}"))?;

    let vars: Vec<String> = ["x", "y", "z", "w"].map(String::from).to_vec();
    let r2 = pipeline("x^5 + y^5 + y*z*(x^3 + z^2*w)", &vars)?;
    ensure(r2.hp_n == poly(&[0, 0, 0, 0, 0, 1, 0, 1]), || {
        format!("hp_N = {}", r2.hp_n)
    })?;
    ensure(r2.seq_report.internal_zeros, || "internal zero not flagged".into())?;
    Ok(format!("violation at t^{k} (2, 3, 5); t^5 + t^7 has an internal zero"))
}

fn c5() -> Check {
    let mut triples = 0;
    let mut errata = 0;
    for cfg in CIConfig::grid(30).filter(|c| !c.is_degenerate()) {
        triples += 1;
        let matches = matching_subcases(cfg.a, cfg.b, cfg.d);
        ensure(matches.len() == 1, || format!("{cfg}: subcases {matches:?}"))?;
        let listed = audit(cfg).map_err(|e| e.to_string())?;
        errata += listed.len();
        let q = q_polynomial(cfg).map_err(|e| e.to_string())?;
        let (direct, _) = oracle(cfg.a, cfg.b, cfg.d);
        if listed.is_empty() {
            ensure(q.hp_n() == poly(&direct), || format!("{cfg}: t^a Q = {}", q.hp_n()))?;
        }
    }
    let reg = CheckRegistry::default();
    let checks = reg.select(&["closedform".into(), "coverage".into()])?;
    let scan = run_scan(&checks, 30);
    ensure(scan.is_clean(), || {
        format!("{} violations, first {:?}", scan.violations.len(), scan.violations[0])
    })?;
    Ok(format!(
        "{triples} triples, {errata} errata, {} itemized range overlaps with agreeing values",
        scan.notes.len()
    ))
}

fn grid_50() -> impl Iterator<Item = CIConfig> {
    CIConfig::grid(50).filter(|c| !c.is_degenerate() && c.d >= 3)
}

fn c6() -> Check {
    let mut n = 0;
    for cfg in grid_50() {
        n += 1;
        let (direct, _) = oracle(cfg.a, cfg.b, cfg.d);
        let hp = hp_n_ci_n2(cfg.a, cfg.b, cfg.d).map_err(|e| e.to_string())?;
        ensure(hp == poly(&direct), || {
            format!("{cfg}: closed form differs from the direct expansion")
        })?;
        ensure(direct.iter().all(|&x| x >= 0), || {
            format!("{cfg}: negative coefficient")
        })?;
        ensure(log_concave(&direct), || format!("{cfg}: not log-concave"))?;
        ensure(no_internal_zeros(&direct), || format!("{cfg}: internal zero"))?;
        ensure(unimodal(&direct), || format!("{cfg}: not unimodal"))?;
    }
    let reg = CheckRegistry::default();
    let scan = run_scan(&reg.select(&["theorem".into()])?, 50);
    ensure(scan.is_clean(), || {
        format!("theorem check: {:?}", scan.violations.first())
    })?;
    Ok(format!("{n} triples with d <= 50"))
}

fn c7() -> Check {
    let mut n = 0;
    for cfg in grid_50() {
        n += 1;
        let (_, diff) = oracle(cfg.a, cfg.b, cfg.d);
        let lib = diff_smooth_minus_n(cfg.a, cfg.b, cfg.d).map_err(|e| e.to_string())?;
        ensure(lib == poly(&diff), || {
            format!("{cfg}: difference differs from the direct expansion")
        })?;
        ensure(log_concave(&diff) && unimodal(&diff), || format!("{cfg}: fails"))?;
    }
    let reg = CheckRegistry::default();
    let scan = run_scan(&reg.select(&["prop1".into()])?, 50);
    ensure(scan.is_clean(), || {
        format!("prop1 check: {:?}", scan.violations.first())
    })?;
    Ok(format!("{n} triples with d <= 50"))
}

fn c8() -> Check {
    let mut slowest = Duration::ZERO;
    for (label, (a, b, d), f) in TABLE {
        let start = Instant::now();
        let r = pipeline(f, &xyz())?;
        slowest = slowest.max(start.elapsed());
        ensure(r.degree as i64 == d && r.ci_detect == Some((a, b)), || {
            format!("{label}: degree {}, inferred {:?}", r.degree, r.ci_detect)
        })?;
        let want = hp_n_ci_n2(a, b, d).map_err(|e| e.to_string())?;
        ensure(r.hp_n == want, || format!("{label}: hp_N = {}, formula {want}", r.hp_n))?;
        ensure(r.certified_ci, || {
            format!("{label}: saturation is not a certified complete intersection")
        })?;
    }
    Ok(format!("8 rows, slowest {slowest:.2?}"))
}

fn c9() -> Check {
    let all = fixtures::all();
    for fx in &all {
        let f = parse_poly(&fx.poly, &fx.vars).map_err(|e| e.to_string())?;
        let j = jacobian_ideal(&f).map_err(|e| e.to_string())?;
        let g = groebner(&j);
        ensure(is_groebner_basis(&g), || {
            format!("{}: S-pairs of GB(J) do not reduce to zero", fx.name)
        })?;
        let sat = saturate_irrelevant(&j).map_err(|e| e.to_string())?;
        ensure(is_groebner_basis(&sat), || {
            format!("{}: S-pairs of the saturation", fx.name)
        })?;
        let again = saturate_irrelevant(&sat).map_err(|e| e.to_string())?;
        ensure(again.same_basis(&sat), || {
            format!("{}: saturation is not idempotent", fx.name)
        })?;
        for (what, i) in [("J", &g), ("saturation", &sat)] {
            let bad = rank_oracle_mismatch(i, 8);
            ensure(bad.is_none(), || {
                format!("{}: {what} differs from the rank oracle at k = {bad:?}", fx.name)
            })?;
        }
    }
    Ok(format!("{} fixtures", all.len()))
}

fn c10() -> Check {
    let l1 = lemma1_grid(30, 50);
    ensure(l1.violations.is_empty(), || {
        format!("lemma 1: {:?}", l1.violations.first())
    })?;
    let l2 = lemma2_grid(50);
    ensure(l2.violations.is_empty(), || {
        format!("lemma 2: {:?}", l2.violations.first())
    })?;
    let l3 = lemma3_grid(40);
    ensure(l3.violations.is_empty(), || {
        format!("lemma 3: {:?}", l3.violations.first())
    })?;
    Ok(format!(
        "{} windows, {} region checks, {} node checks",
        l1.windows, l2.checked, l3.checked
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("example 1 golden series", c1, Duration::from_secs(1)),
        ("example 2 golden series", c2, Duration::from_secs(1)),
        ("example 3 pipeline", c3, Duration::from_secs(60)),
        ("counterexample curves", c4, Duration::from_secs(240)),
        ("closed-form oracle equivalence", c5, Duration::from_secs(30)),
        ("log-concavity grid d <= 50", c6, Duration::from_secs(60)),
        ("difference grid d <= 50", c7, Duration::from_secs(60)),
        ("table curves", c8, Duration::from_secs(35 * 60)),
        ("Groebner self-checks", c9, Duration::from_secs(600)),
        ("sequence lemma harness", c10, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut verdict = run();
        let took = start.elapsed();
        if verdict.is_ok() && took > *budget {
            verdict = Err(format!("took {took:.2?}, budget {budget:?}"));
        }
        match verdict {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({took:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

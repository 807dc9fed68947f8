use milnorhp_core::checks::{run_scan, CheckRegistry, ScanSummary};
use milnorhp_core::closedform::{audit, classify, matching_subcases, q_polynomial, CIConfig, ErrataEntry, SubcaseId};
use milnorhp_core::concavity::{analyze, conjecture_predicate, lemma1_grid_for, lemma2_grid, lemma3_grid, SeqReport};
use milnorhp_core::hilbert::{ci_invariants, diff_smooth_minus_n, hp_n_ci_n2, smooth_series, CIData};
use milnorhp_core::IntPoly;
use milnorhp_jacobian::fixtures::{self, Fixture};
use milnorhp_jacobian::parse::{infer_default_vars, parse_var_list};
use milnorhp_jacobian::pipeline::{curve_pipeline_with, CurveReport};
use milnorhp_jacobian::saturation::SaturationRegistry;
use milnorhp_jacobian::{parse_poly, AlgebraError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::args::{CurveArgs, FixtureArgs, LemmaArgs, ScanArgs, Triple};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Inconclusive(String),
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Inconclusive(_) => 3,
            CliError::Invariant(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Inconclusive(m) | CliError::Invariant(m) => m,
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::InconclusiveTruncation { k_max } => {
                CliError::Inconclusive(format!("{e} (suggested: --k-max {})", 2 * k_max.max(1)))
            }
            AlgebraError::Invariant(_) => CliError::Invariant(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

/// Reports whose verdicts decide the exit status carry `failed`.
pub struct Outcome<T> {
    pub value: T,
    pub failed: bool,
}

fn pred_violations(hp: &IntPoly, r: &SeqReport) -> Vec<String> {
    let lo = hp.order().unwrap_or(0);
    let c = |k: usize| hp.coeff(lo + k);
    let mut out = Vec::new();
    if let Some(k) = r.first_lc_violation {
        out.push(format!(
            "not log-concave at t^{}: coefficients {}, {}, {}",
            lo + k,
            c(k - 1),
            c(k),
            c(k + 1)
        ));
    }
    if let Some(k) = r.first_internal_zero {
        out.push(format!("internal zero at t^{}", lo + k));
    }
    if !r.unimodal {
        out.push("not unimodal".into());
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CiSeriesReport {
    pub a: i64,
    pub b: i64,
    pub d: i64,
    pub subcase: String,
    pub top_degree: i64,
    pub tau: i64,
    pub ct: i64,
    pub hp_n: IntPoly,
    pub smooth: IntPoly,
    pub difference: IntPoly,
    /// `q_0, ..., q_{floor(T/2) - a}` from the piecewise formulas.
    pub q_half: Vec<i64>,
    pub conjecture: SeqReport,
    pub question: SeqReport,
    pub log_concave: bool,
    pub unimodal: bool,
    pub internal_zeros: bool,
    pub errata: Vec<ErrataEntry>,
    pub violations: Vec<String>,
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

pub fn ci_series(t: Triple) -> Result<Outcome<CiSeriesReport>, CliError> {
    let Triple { a, b, d } = t;
    let cfg = CIConfig::new(a, b, d).map_err(usage)?;
    let ci = CIData::plane(a, b, d).map_err(usage)?;
    let inv = ci_invariants(&ci);
    let subcase = classify(a, b, d).map_err(usage)?;
    let hp_n = hp_n_ci_n2(a, b, d).map_err(usage)?;
    let smooth = smooth_series(d, 2).map_err(usage)?;
    let difference = diff_smooth_minus_n(a, b, d).map_err(usage)?;
    let conjecture = conjecture_predicate(&hp_n).map_err(|e| CliError::Invariant(e.to_string()))?;
    let question = analyze(difference.coeffs());
    let q_half = match subcase {
        SubcaseId::Degenerate => Vec::new(),
        _ => {
            q_polynomial(cfg)
                .map_err(|e| CliError::Invariant(e.to_string()))?
                .half_coeffs
        }
    };
    let errata = audit(cfg).map_err(|e| CliError::Invariant(e.to_string()))?;
    let mut violations = pred_violations(&hp_n, &conjecture);
    violations.extend(
        pred_violations(&difference, &question)
            .into_iter()
            .map(|v| format!("difference: {v}")),
    );
    let report = CiSeriesReport {
        a,
        b,
        d,
        subcase: subcase.label().to_string(),
        top_degree: inv.top_degree,
        tau: inv.tau,
        ct: inv.ct,
        log_concave: conjecture.log_concave,
        unimodal: conjecture.unimodal,
        internal_zeros: conjecture.internal_zeros,
        hp_n,
        smooth,
        difference,
        q_half,
        conjecture,
        question,
        errata,
        violations,
    };
    Ok(Outcome {
        value: report,
        failed: false,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub a: i64,
    pub b: i64,
    pub d: i64,
    pub subcase: String,
    /// Every proper subcase whose defining conditions hold.
    pub matches: Vec<String>,
}

pub fn classify_cmd(t: Triple) -> Result<Outcome<ClassifyReport>, CliError> {
    let Triple { a, b, d } = t;
    let subcase = classify(a, b, d).map_err(usage)?;
    let matches = matching_subcases(a, b, d)
        .iter()
        .map(|s| s.label().to_string())
        .collect();
    Ok(Outcome {
        value: ClassifyReport {
            a,
            b,
            d,
            subcase: subcase.label().to_string(),
            matches,
        },
        failed: false,
    })
}

pub fn scan(args: &ScanArgs) -> Result<Outcome<ScanSummary>, CliError> {
    let reg = CheckRegistry::default();
    let names: Vec<String> = if args.checks.is_empty() {
        reg.names().iter().map(|s| s.to_string()).collect()
    } else {
        args.checks.clone()
    };
    let checks = reg.select(&names).map_err(CliError::Usage)?;
    let summary = run_scan(&checks, args.d_max);
    let failed = !summary.is_clean();
    Ok(Outcome { value: summary, failed })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveOutput {
    pub poly: String,
    pub vars: Vec<String>,
    pub degree: u32,
    pub k_max: usize,
    pub hp_m_trunc: IntPoly,
    pub hp_shat_trunc: IntPoly,
    pub hp_n: IntPoly,
    pub tau: i64,
    pub ct: i64,
    pub smooth: bool,
    pub ci_detect: Option<(i64, i64)>,
    pub subcase: Option<String>,
    pub certified_ci: bool,
    pub sat_gens_count: usize,
    pub sat_gens: Vec<String>,
    pub saturation_strategy: String,
    pub saturation_certificate: String,
    pub seq_report: SeqReport,
    pub log_concave: bool,
    pub unimodal: bool,
    pub internal_zeros: bool,
    pub violations: Vec<String>,
}

impl CurveOutput {
    fn new(poly: &str, vars: Vec<String>, r: CurveReport) -> Self {
        let subcase = r
            .ci_detect
            .and_then(|(a, b)| classify(a, b, r.degree as i64).ok())
            .map(|s| s.label().to_string());
        Self {
            poly: poly.to_string(),
            vars,
            degree: r.degree,
            k_max: r.k_max,
            violations: pred_violations(&r.hp_n, &r.seq_report),
            log_concave: r.seq_report.log_concave,
            unimodal: r.seq_report.unimodal,
            internal_zeros: r.seq_report.internal_zeros,
            hp_m_trunc: r.hp_m_trunc,
            hp_shat_trunc: r.hp_shat_trunc,
            hp_n: r.hp_n,
            tau: r.tau,
            ct: r.ct,
            smooth: r.smooth,
            ci_detect: r.ci_detect,
            subcase,
            certified_ci: r.certified_ci,
            sat_gens_count: r.sat_gens_count,
            sat_gens: r.sat_gens,
            saturation_strategy: r.saturation_strategy.to_string(),
            saturation_certificate: format!("{:?}", r.saturation_certificate),
            seq_report: r.seq_report,
        }
    }
}

fn run_curve(poly: &str, vars: &[String], k_max: Option<usize>, strategy: &str) -> Result<CurveOutput, CliError> {
    let reg = SaturationRegistry::default();
    let strat = reg.get(strategy).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown strategy '{strategy}' (known: {})",
            reg.names().join(", ")
        ))
    })?;
    let f = parse_poly(poly, vars).map_err(|e| CliError::Usage(e.to_string()))?;
    let report = curve_pipeline_with(&f, k_max, strat.as_ref(), Some(vars))?;
    Ok(CurveOutput::new(poly, vars.to_vec(), report))
}

pub fn curve(args: &CurveArgs) -> Result<Outcome<CurveOutput>, CliError> {
    let vars = match &args.vars {
        Some(v) => parse_var_list(v),
        None => infer_default_vars(&args.poly),
    };
    let out = run_curve(&args.poly, &vars, args.k_max.map(|k| k as usize), &args.strategy)?;
    Ok(Outcome {
        value: out,
        failed: false,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaOutput {
    pub lemma: u8,
    pub scope: String,
    pub cases: usize,
    pub checked: usize,
    pub violations: Vec<String>,
}

pub fn lemmas(args: &LemmaArgs) -> Result<Outcome<Vec<LemmaOutput>>, CliError> {
    let which: Vec<u8> = match args.check {
        Some(n) => vec![n],
        None => vec![1, 2, 3],
    };
    if args.family.is_some() && args.check.is_some_and(|c| c != 1) {
        return Err(CliError::Usage("--family only applies to --check 1".into()));
    }
    let mut out = Vec::new();
    for n in which {
        out.push(match n {
            1 => {
                let r = lemma1_grid_for(args.param_max, args.window as usize, args.family);
                let family = args
                    .family
                    .map_or("all families".to_string(), |f| format!("family {f}"));
                LemmaOutput {
                    lemma: 1,
                    scope: format!("{family}, m, n <= {}, window {}", args.param_max, args.window),
                    cases: r.windows,
                    checked: r.windows,
                    violations: r.violations,
                }
            }
            2 | 3 => {
                let d_max = args.d_max.unwrap_or(if n == 2 { 50 } else { 40 });
                let r = if n == 2 { lemma2_grid(d_max) } else { lemma3_grid(d_max) };
                LemmaOutput {
                    lemma: n,
                    scope: format!("d <= {d_max}"),
                    cases: r.cases,
                    checked: r.checked,
                    violations: r.violations,
                }
            }
            _ => unreachable!("validated by clap"),
        });
    }
    let failed = out.iter().any(|r| !r.violations.is_empty());
    Ok(Outcome { value: out, failed })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureResult {
    pub name: String,
    pub poly: String,
    pub table_subcase: Option<String>,
    pub passed: bool,
    pub report: Option<CurveOutput>,
    pub mismatches: Vec<String>,
    pub error: Option<String>,
}

fn run_fixture(fx: &Fixture, k_max: Option<usize>) -> FixtureResult {
    let base = |passed, report, mismatches, error| FixtureResult {
        name: fx.name.clone(),
        poly: fx.poly.clone(),
        table_subcase: fx.subcase.map(str::to_string),
        passed,
        report,
        mismatches,
        error,
    };
    let f = match parse_poly(&fx.poly, &fx.vars) {
        Ok(f) => f,
        Err(e) => return base(false, None, Vec::new(), Some(e.to_string())),
    };
    let reg = SaturationRegistry::default();
    let strat = reg
        .get(milnorhp_jacobian::saturation::DEFAULT_STRATEGY)
        .expect("registered");
    match curve_pipeline_with(&f, k_max, strat.as_ref(), Some(&fx.vars)) {
        Ok(r) => {
            let mism = fixtures::mismatches(fx, &r);
            base(
                mism.is_empty(),
                Some(CurveOutput::new(&fx.poly, fx.vars.clone(), r)),
                mism,
                None,
            )
        }
        Err(e) => base(false, None, Vec::new(), Some(e.to_string())),
    }
}

pub fn fixtures_cmd(args: &FixtureArgs) -> Result<Outcome<Vec<FixtureResult>>, CliError> {
    let mut list = fixtures::all();
    if let Some(name) = &args.name {
        list.retain(|f| &f.name == name);
        if list.is_empty() {
            let known: Vec<String> = fixtures::all().into_iter().map(|f| f.name).collect();
            return Err(CliError::Usage(format!(
                "unknown fixture '{name}' (known: {})",
                known.join(", ")
            )));
        }
    }
    if args.skip_slow {
        list.retain(|f| !f.slow);
    }
    let k_max = args.k_max.map(|k| k as usize);
    let results: Vec<FixtureResult> = list.par_iter().map(|fx| run_fixture(fx, k_max)).collect();
    let failed = results.iter().any(|r| !r.passed);
    Ok(Outcome { value: results, failed })
}

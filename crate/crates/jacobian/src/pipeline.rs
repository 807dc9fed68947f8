//! From a homogeneous polynomial `f` to the Hilbert series of `N(f)`.

use milnorhp_core::concavity::{conjecture_predicate, SeqReport};
use milnorhp_core::hilbert::{infer_ab, smooth_series};
use milnorhp_core::polyring::{exact_div_one_minus_t, series_expand};
use milnorhp_core::IntPoly;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::hilbert::{degree_of_one_dimensional, monomial_numerator};
use crate::ideal::{groebner, minimal_generators, Ideal};
use crate::mpoly::MPoly;
use crate::saturation::{Certificate, CertifiedColon, SaturationStrategy};

/// `(f_0, ..., f_n)`, zero partials dropped.
pub fn jacobian_ideal(f: &MPoly) -> Result<Ideal> {
    let d = f
        .total_degree()
        .ok_or_else(|| AlgebraError::Domain("the zero polynomial has no Jacobian ideal".into()))?;
    if !f.is_homogeneous() {
        return Err(AlgebraError::Domain(format!("{f} is not homogeneous")));
    }
    if d < 2 {
        return Err(AlgebraError::Domain(format!("degree must be at least 2, got {d}")));
    }
    let partials = (0..f.nvars()).map(|i| f.derivative(i)).collect();
    Ideal::new(f.order(), partials)
}

/// Default truncation: at least `(n+1)d`, and far enough past
/// `T = (n+1)(d-2)` that the stabilization window fits after it.
pub fn default_k_max(d: u32, nvars: usize) -> usize {
    let (d, nv) = (d as usize, nvars);
    let top = nv * d.saturating_sub(2);
    (nv * d).max(top + stabilization_window(d as u32) + 1)
}

/// Number of trailing coefficients that must agree before `τ` is accepted.
pub fn stabilization_window(d: u32) -> usize {
    d.max(3) as usize
}

#[derive(Debug, Clone, Serialize)]
pub struct CurveReport {
    pub degree: u32,
    pub nvars: usize,
    pub k_max: usize,
    /// Coefficients of `HP(S/J_f)` through `k_max`.
    pub hp_m_trunc: IntPoly,
    /// Coefficients of `HP(S/Ĵ_f)` through `k_max`.
    pub hp_shat_trunc: IntPoly,
    pub hp_n: IntPoly,
    pub tau: i64,
    pub ct: i64,
    /// The singular locus is empty.
    pub smooth: bool,
    /// `(a, b)` inferred from `(τ, ct)` for plane curves.
    pub ci_detect: Option<(i64, i64)>,
    /// `Ĵ_f` has exactly `n` minimal generators of the inferred degrees.
    pub certified_ci: bool,
    pub sat_gens_count: usize,
    pub sat_gens: Vec<String>,
    pub sat_gen_degrees: Vec<u32>,
    pub jacobian_gb_size: usize,
    pub saturation_strategy: &'static str,
    pub saturation_certificate: Certificate,
    pub seq_report: SeqReport,
}

pub fn curve_pipeline(f: &MPoly, k_max: Option<usize>) -> Result<CurveReport> {
    curve_pipeline_with(f, k_max, &CertifiedColon, None)
}

/// `names` only affects how saturation generators are printed.
pub fn curve_pipeline_with(
    f: &MPoly,
    k_max: Option<usize>,
    strategy: &dyn SaturationStrategy,
    names: Option<&[String]>,
) -> Result<CurveReport> {
    let j = jacobian_ideal(f)?;
    let d = f.total_degree().expect("nonzero");
    let nvars = f.nvars();
    if nvars < 2 {
        return Err(AlgebraError::Domain("need at least two variables".into()));
    }
    let n = nvars as i64 - 1;
    let e = nvars as u32;
    let k_max = k_max.unwrap_or_else(|| default_k_max(d, nvars));

    let gb_j = groebner(&j);
    let sat = strategy.saturate(&gb_j)?;
    let num_j = monomial_numerator(&gb_j.leading_monomials());
    let num_s = monomial_numerator(&sat.ideal.leading_monomials());

    let hp_n = exact_div_one_minus_t(&(&num_j - &num_s), e)
        .map_err(|_| AlgebraError::Invariant("H^0 of the Milnor algebra is not of finite length".into()))?;
    let tau_big = degree_of_one_dimensional(&num_s, e)
        .ok_or_else(|| AlgebraError::NonIsolated("S/Ĵ_f has dimension greater than one".into()))?;
    let tau = tau_big
        .to_i64()
        .ok_or_else(|| AlgebraError::Invariant("Tjurina number overflows i64".into()))?;
    let smooth = num_s.is_zero();

    let hp_m_trunc = series_expand(&num_j, e, k_max);
    let hp_shat_trunc = series_expand(&num_s, e, k_max);
    if hp_n.degree().is_some_and(|deg| deg > k_max) {
        return Err(AlgebraError::InconclusiveTruncation { k_max });
    }
    let window = stabilization_window(d);
    if k_max + 1 < window || (k_max + 1 - window..=k_max).any(|k| hp_m_trunc.coeff(k) != tau_big) {
        return Err(AlgebraError::InconclusiveTruncation { k_max });
    }
    if &hp_m_trunc - &hp_shat_trunc != hp_n.truncate(k_max) {
        return Err(AlgebraError::Invariant(
            "hp_N differs from the truncated difference".into(),
        ));
    }

    let top = (n + 1) * (d as i64 - 2);
    let smooth_ref = smooth_series(d as i64, n)?;
    let ct = (0..=k_max)
        .find(|&k| hp_m_trunc.coeff(k) != smooth_ref.coeff(k))
        .map_or(top, |k| k as i64 - 1);

    let ci_detect = if n == 2 && !smooth {
        infer_ab(tau, ct, d as i64)
    } else {
        None
    };
    let mins = minimal_generators(&sat.ideal);
    let mut sat_gen_degrees: Vec<u32> = mins.iter().filter_map(MPoly::total_degree).collect();
    sat_gen_degrees.sort_unstable();
    let certified_ci = match ci_detect {
        Some((a, b)) => sat_gen_degrees == [a as u32, b as u32],
        None => false,
    };
    let default_names = crate::mpoly::default_var_names(nvars);
    let names = names.unwrap_or(&default_names);
    let sat_gens = mins
        .iter()
        .map(|g| MPoly::from_int_terms(g.order(), g.primitive_integer_terms()).display_with(names))
        .collect();

    let seq_report = conjecture_predicate(&hp_n)?;
    Ok(CurveReport {
        degree: d,
        nvars,
        k_max,
        hp_m_trunc,
        hp_shat_trunc,
        hp_n,
        tau,
        ct,
        smooth,
        ci_detect,
        certified_ci,
        sat_gens_count: mins.len(),
        sat_gens,
        sat_gen_degrees,
        jacobian_gb_size: gb_j.gens().len(),
        saturation_strategy: sat.strategy,
        saturation_certificate: sat.certificate,
        seq_report,
    })
}

/// Hilbert series of `S/J_f` through `k_max` (no saturation).
pub fn milnor_series(f: &MPoly, k_max: usize) -> Result<IntPoly> {
    let gb = groebner(&jacobian_ideal(f)?);
    Ok(series_expand(
        &monomial_numerator(&gb.leading_monomials()),
        f.nvars() as u32,
        k_max,
    ))
}

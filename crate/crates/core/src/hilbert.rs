//! Closed-form Hilbert–Poincaré series in the smooth and complete-intersection
//! cases.
//!
//! Notation: `S = Q[x_0, ..., x_n]`, `f` of degree `d`, `T = (n+1)(d-2)` the
//! top degree of the smooth Milnor algebra, and `(d_1, ..., d_n)` the
//! multidegree of the saturated Jacobian ideal when it is a complete
//! intersection. For plane curves (`n = 2`) the multidegree is written
//! `(a, b)` with `1 <= a <= b < d`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SeriesError};
use crate::polyring::{exact_div_one_minus_t, one_minus_t_pow, series_expand, IntPoly};

/// `C(m, 2)`, taken to be zero for every `m <= 1` (negative `m` included).
pub fn binom2(m: i64) -> i64 {
    if m >= 2 {
        m * (m - 1) / 2
    } else {
        0
    }
}

/// Degree, dimension and multidegree of a complete-intersection saturation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CIData {
    pub d: i64,
    pub n: i64,
    pub degs: Vec<i64>,
}

impl CIData {
    pub fn new(d: i64, n: i64, degs: Vec<i64>) -> Result<Self> {
        if d < 2 {
            return Err(SeriesError::Domain(format!("degree d must be >= 2, got {d}")));
        }
        if n < 1 {
            return Err(SeriesError::Domain(format!("dimension n must be >= 1, got {n}")));
        }
        if degs.len() as i64 != n {
            return Err(SeriesError::Domain(format!("expected {n} degrees, got {}", degs.len())));
        }
        if let Some(bad) = degs.iter().find(|&&di| di < 1 || di >= d) {
            return Err(SeriesError::Domain(format!(
                "each d_i must satisfy 1 <= d_i < d = {d}, got {bad}"
            )));
        }
        Ok(Self { d, n, degs })
    }

    /// The plane-curve case `(a, b, d)`.
    pub fn plane(a: i64, b: i64, d: i64) -> Result<Self> {
        check_plane(a, b, d)?;
        Self::new(d, 2, vec![a, b])
    }

    pub fn top_degree(&self) -> i64 {
        (self.n + 1) * (self.d - 2)
    }

    /// Exponent `(n+1)(d-1) - sum d_i` of the extra term in the numerator of `HP(M(f))`.
    pub fn shift_exponent(&self) -> i64 {
        (self.n + 1) * (self.d - 1) - self.degs.iter().sum::<i64>()
    }
}

pub(crate) fn check_plane(a: i64, b: i64, d: i64) -> Result<()> {
    if 1 <= a && a <= b && b < d {
        Ok(())
    } else {
        Err(SeriesError::Domain(format!(
            "(a, b, d) = ({a}, {b}, {d}) violates 1 <= a <= b < d"
        )))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CiInvariants {
    /// `T = (n+1)(d-2)`.
    pub top_degree: i64,
    /// Tjurina number `d_1 ... d_n`.
    pub tau: i64,
    /// Coincidence threshold `T - sum d_i + n`.
    pub ct: i64,
}

/// `HP(M(f_s)) = P_{d-1}^{n+1}` for a smooth hypersurface of degree `d` in `P^n`.
pub fn smooth_series(d: i64, n: i64) -> Result<IntPoly> {
    if d < 2 || n < 1 {
        return Err(SeriesError::Domain(format!(
            "smooth series needs d >= 2 and n >= 1, got d = {d}, n = {n}"
        )));
    }
    let mut p = IntPoly::one();
    for _ in 0..=n {
        p = p.mul_pm(d - 1)?;
    }
    Ok(p)
}

/// Coefficient `a_k` of `(1 + t + ... + t^(d-2))^3`, binomial form.
pub fn smooth_coeff_n2(d: i64, k: i64) -> i64 {
    let top = 3 * (d - 2);
    if k < 0 || k > top {
        return 0;
    }
    if 2 * k > top {
        return smooth_coeff_n2(d, top - k);
    }
    if k <= d - 2 {
        binom2(k + 2)
    } else {
        binom2(k + 2) - 3 * binom2(k + 3 - d)
    }
}

/// Same coefficient through the running-sum form
/// `a_k = C(d, 2) + sum_{i=1}^{k-d+2} (d - 1 - 2i)` for `k >= d - 1`.
pub fn smooth_coeff_n2_incremental(d: i64, k: i64) -> i64 {
    let top = 3 * (d - 2);
    if k < 0 || k > top {
        return 0;
    }
    if 2 * k > top {
        return smooth_coeff_n2_incremental(d, top - k);
    }
    if k <= d - 2 {
        return binom2(k + 2);
    }
    binom2(d) + (1..=k - d + 2).map(|i| d - 1 - 2 * i).sum::<i64>()
}

/// Numerator `N(t)` and exponent `e` with `HP(M(f)) = N(t) / (1-t)^e` in the
/// complete-intersection case.
pub fn hp_m_ci_numerator(ci: &CIData) -> Result<(IntPoly, u32)> {
    let shift = ci.shift_exponent();
    if shift < 0 {
        return Err(SeriesError::Domain(format!(
            "(n+1)(d-1) - sum d_i = {shift} is negative"
        )));
    }
    let smooth_part = one_minus_t_pow((ci.d - 1) as usize).pow((ci.n + 1) as u32);
    let mut extra = IntPoly::monomial(1, shift as usize);
    for &di in &ci.degs {
        extra = &extra * &one_minus_t_pow(di as usize);
    }
    Ok((smooth_part + extra, (ci.n + 1) as u32))
}

/// `HP(M(f))` through degree `k_max`; the coefficients settle at `tau`.
pub fn hp_m_ci(ci: &CIData, k_max: usize) -> Result<IntPoly> {
    let (num, e) = hp_m_ci_numerator(ci)?;
    Ok(series_expand(&num, e, k_max))
}

/// `HP(N(f)) = HP(S/J_f) - HP(S/J^sat_f)` as an exact polynomial, computed by
/// dividing the difference of numerators by `(1-t)^(n+1)`.
pub fn hp_n_ci(ci: &CIData) -> Result<IntPoly> {
    let shift = ci.shift_exponent();
    if shift < 1 {
        return Err(SeriesError::Domain(format!(
            "(n+1)(d-1) - sum d_i = {shift} must be positive"
        )));
    }
    let smooth_part = one_minus_t_pow((ci.d - 1) as usize).pow((ci.n + 1) as u32);
    let mut ci_part = one_minus_t_pow(shift as usize);
    for &di in &ci.degs {
        ci_part = &ci_part * &one_minus_t_pow(di as usize);
    }
    exact_div_one_minus_t(&(smooth_part - ci_part), (ci.n + 1) as u32)
}

/// `P_{d-1}^3 - P_a P_b P_{3d-3-a-b}` for plane curves.
pub fn hp_n_ci_n2(a: i64, b: i64, d: i64) -> Result<IntPoly> {
    check_plane(a, b, d)?;
    let smooth = smooth_series(d, 2)?;
    Ok(smooth - diff_smooth_minus_n(a, b, d)?)
}

/// `HP(M(f_s)) - HP(N(f)) = P_a P_b P_{3d-3-a-b}`.
pub fn diff_smooth_minus_n(a: i64, b: i64, d: i64) -> Result<IntPoly> {
    check_plane(a, b, d)?;
    let c = 3 * d - 3 - a - b;
    if c < 1 {
        return Err(SeriesError::Domain(format!("3d-3-a-b = {c} must be >= 1")));
    }
    IntPoly::one().mul_pm(a)?.mul_pm(b)?.mul_pm(c)
}

pub fn ci_invariants(ci: &CIData) -> CiInvariants {
    let top_degree = ci.top_degree();
    CiInvariants {
        top_degree,
        tau: ci.degs.iter().product(),
        ct: top_degree - ci.degs.iter().sum::<i64>() + ci.n,
    }
}

/// Recovers `(a, b)` from `a + b = T + 2 - ct` and `a b = tau` for a plane
/// curve of degree `d`, if an integer solution with `1 <= a <= b < d` exists.
pub fn infer_ab(tau: i64, ct: i64, d: i64) -> Option<(i64, i64)> {
    let sum = 3 * (d - 2) + 2 - ct;
    // a, b are the roots of X^2 - sum X + tau.
    let disc = sum.checked_mul(sum)?.checked_sub(4 * tau)?;
    if disc < 0 {
        return None;
    }
    let root = integer_sqrt(disc)?;
    if (sum - root) % 2 != 0 {
        return None;
    }
    let a = (sum - root) / 2;
    let b = (sum + root) / 2;
    (1 <= a && a <= b && b < d && a * b == tau).then_some((a, b))
}

fn integer_sqrt(v: i64) -> Option<i64> {
    let r = (v as f64).sqrt() as i64;
    (r.saturating_sub(1)..=r + 1).find(|&s| s >= 0 && s * s == v)
}

/// Smallest degree from which the coefficients of `HP(M(f))` all equal `tau`.
pub fn stabilization_degree(ci: &CIData) -> Result<usize> {
    let (num, e) = hp_m_ci_numerator(ci)?;
    // The series is a polynomial of degree <= deg(num) plus an eventually
    // constant tail once all partial sums have been taken.
    let horizon = num.degree().unwrap_or(0) + 1;
    let series = series_expand(&num, e, horizon);
    let tau = BigInt::from(ci_invariants(ci).tau);
    let mut k = horizon;
    while k > 0 && series.coeff(k - 1) == tau {
        k -= 1;
    }
    Ok(k)
}

//! Log-concavity, unimodality and internal-zero analysis of integer
//! sequences, plus the numeric harness for the sequence families whose strict
//! log-concavity underlies the plane-curve result.
//!
//! Everything is exact: `a_k^2` and `a_{k-1} a_{k+1}` are compared as big
//! integers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::closedform::{classify, q_polynomial, CIConfig, FormulaId, SubcaseId};
use crate::error::{Result, SeriesError};
use crate::hilbert::binom2;
use crate::polyring::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqReport {
    pub nonnegative: bool,
    pub internal_zeros: bool,
    pub log_concave: bool,
    pub strictly_log_concave: bool,
    pub unimodal: bool,
    /// Smallest `k` with `a_k^2 < a_{k-1} a_{k+1}`.
    pub first_lc_violation: Option<usize>,
    /// Smallest `k` with `a_k^2 <= a_{k-1} a_{k+1}`.
    pub first_strict_violation: Option<usize>,
    pub first_internal_zero: Option<usize>,
}

impl SeqReport {
    /// Nonnegative, log-concave and free of internal zeros.
    pub fn passes_conjecture(&self) -> bool {
        self.nonnegative && self.log_concave && !self.internal_zeros && self.unimodal
    }
}

/// `a_k^2 - a_{k-1} a_{k+1}`.
pub fn lc_defect(seq: &[BigInt], k: usize) -> BigInt {
    &seq[k] * &seq[k] - &seq[k - 1] * &seq[k + 1]
}

pub fn analyze(seq: &[BigInt]) -> SeqReport {
    let nonnegative = seq.iter().all(|c| !c.is_negative());

    let first_nz = seq.iter().position(|c| !c.is_zero());
    let last_nz = seq.iter().rposition(|c| !c.is_zero());
    let first_internal_zero = match (first_nz, last_nz) {
        (Some(lo), Some(hi)) => (lo..=hi).find(|&k| seq[k].is_zero()),
        _ => None,
    };

    let mut first_lc_violation = None;
    let mut first_strict_violation = None;
    for k in 1..seq.len().saturating_sub(1) {
        let defect = lc_defect(seq, k);
        if first_strict_violation.is_none() && !defect.is_positive() {
            first_strict_violation = Some(k);
        }
        if defect.is_negative() {
            first_lc_violation = Some(k);
            break;
        }
    }

    SeqReport {
        nonnegative,
        internal_zeros: first_internal_zero.is_some(),
        log_concave: first_lc_violation.is_none(),
        strictly_log_concave: first_strict_violation.is_none(),
        unimodal: is_unimodal(seq),
        first_lc_violation,
        first_strict_violation,
        first_internal_zero,
    }
}

/// Weakly rises to some peak, then weakly falls.
pub fn is_unimodal(seq: &[BigInt]) -> bool {
    let mut falling = false;
    for w in seq.windows(2) {
        if w[1] < w[0] {
            falling = true;
        } else if w[1] > w[0] && falling {
            return false;
        }
    }
    true
}

/// Analysis of a Hilbert series restricted to the span between its lowest
/// and highest nonzero coefficients.
pub fn conjecture_predicate(p: &IntPoly) -> Result<SeqReport> {
    if !p.has_nonnegative_coeffs() {
        return Err(SeriesError::Domain(format!(
            "Hilbert series with a negative coefficient: {p}"
        )));
    }
    let lo = p.order().unwrap_or(0);
    Ok(analyze(&p.coeffs()[lo.min(p.coeffs().len())..]))
}

/// The five sequence families asserted to be strictly log-concave.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lemma1Family {
    /// A strictly log-concave sequence times a positive scalar.
    Scaled { scale: BigInt, base: Vec<BigInt> },
    /// `C(m+k, 2)`.
    Binomial { m: i64 },
    /// `C(m+k, 2) - n`, `n > 0`.
    BinomialMinus { m: i64, n: i64 },
    /// `x C(m+k, 2) - y C(n+k, 2)`, `x, y > 0`, `x/y < 24`.
    Difference { x: i64, y: i64, m: i64, n: i64 },
    /// `C(m+k, 2) + C(n+k, 2)`, `m, n >= 2`, `k > 0`.
    Sum { m: i64, n: i64 },
}

impl Lemma1Family {
    pub fn number(&self) -> u8 {
        match self {
            Lemma1Family::Scaled { .. } => 1,
            Lemma1Family::Binomial { .. } => 2,
            Lemma1Family::BinomialMinus { .. } => 3,
            Lemma1Family::Difference { .. } => 4,
            Lemma1Family::Sum { .. } => 5,
        }
    }

    fn check_hypotheses(&self) -> Result<()> {
        let fail = |msg: String| Err(SeriesError::Domain(msg));
        match *self {
            Lemma1Family::Scaled { ref scale, ref base } => {
                if !scale.is_positive() {
                    return fail(format!("scale must be positive, got {scale}"));
                }
                if let Some(k) = analyze(base).first_strict_violation {
                    return fail(format!("base sequence is not strictly log-concave at k = {k}"));
                }
            }
            // C(m+k) for m <= 0 starts 0, 0, 1 which is not strict at k = 1.
            Lemma1Family::Binomial { m } if m < 1 => return fail(format!("need m >= 1, got {m}")),
            Lemma1Family::BinomialMinus { m, n } if n <= 0 || m < 0 => {
                return fail(format!("need n > 0 and m >= 0, got m = {m}, n = {n}"))
            }
            Lemma1Family::Difference { x, y, m, n } => {
                if x <= 0 || y <= 0 || x >= 24 * y {
                    return fail(format!("need x, y > 0 and x/y < 24, got x = {x}, y = {y}"));
                }
                // the inequality uses C(n+k-1, 2) with n + k - 1 >= 2 at the
                // first interior index
                if n < 2 || m < 0 {
                    return fail(format!("need n >= 2 and m >= 0, got m = {m}, n = {n}"));
                }
                if x == y && m == n {
                    return fail("x = y and m = n give the zero sequence".into());
                }
            }
            Lemma1Family::Sum { m, n } if m < 2 || n < 2 => {
                return fail(format!("need m, n >= 2, got m = {m}, n = {n}"))
            }
            _ => {}
        }
        Ok(())
    }
}

/// The first `length` terms of a family (`k = 0, 1, ...`; `k = 1, 2, ...`
/// for the sum family).
pub fn lemma1_seq(family: &Lemma1Family, length: usize) -> Result<Vec<BigInt>> {
    family.check_hypotheses()?;
    let c = |v: i64| BigInt::from(binom2(v));
    let seq = match *family {
        Lemma1Family::Scaled { ref scale, ref base } => base.iter().take(length).map(|v| scale * v).collect(),
        Lemma1Family::Binomial { m } => (0..length as i64).map(|k| c(m + k)).collect(),
        Lemma1Family::BinomialMinus { m, n } => (0..length as i64).map(|k| c(m + k) - n).collect(),
        Lemma1Family::Difference { x, y, m, n } => (0..length as i64).map(|k| x * c(m + k) - y * c(n + k)).collect(),
        Lemma1Family::Sum { m, n } => (1..=length as i64).map(|k| c(m + k) + c(n + k)).collect(),
    };
    Ok(seq)
}

/// First index where strict log-concavity fails, if any.
pub fn strict_lc_failure(seq: &[BigInt]) -> Option<usize> {
    (1..seq.len().saturating_sub(1)).find(|&k| !lc_defect(seq, k).is_positive())
}

/// Largest integer ratio `x` (with `y = 1`, `x <= cap`) for which
/// `x C(m+k, 2) - C(n+k, 2)` stays strictly log-concave over the window.
/// Recorded as data alongside the `x/y < 24` hypothesis.
pub fn lemma1_difference_max_ratio(m: i64, n: i64, length: usize, cap: i64) -> Option<i64> {
    (1..=cap).rev().find(|&x| {
        let seq: Vec<BigInt> = (0..length as i64)
            .map(|k| BigInt::from(x * binom2(m + k) - binom2(n + k)))
            .collect();
        seq.iter().any(|v| !v.is_zero()) && strict_lc_failure(&seq).is_none()
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Lemma1Report {
    pub windows: usize,
    pub violations: Vec<String>,
}

/// Every family over `m, n <= param_max` and windows of length up to `window`.
pub fn lemma1_grid(param_max: i64, window: usize) -> Lemma1Report {
    lemma1_grid_for(param_max, window, None)
}

/// As [`lemma1_grid`], restricted to one family number (1 to 5) if given.
pub fn lemma1_grid_for(param_max: i64, window: usize, only: Option<u8>) -> Lemma1Report {
    let mut windows = 0;
    let mut violations = Vec::new();
    let mut run = |family: Lemma1Family| {
        if only.is_some_and(|n| n != family.number()) {
            return;
        }
        let seq = lemma1_seq(&family, window).expect("grid respects the hypotheses");
        // a strictly log-concave sequence stays so under truncation, so the
        // longest window covers every shorter one
        windows += window.saturating_sub(2);
        if let Some(k) = strict_lc_failure(&seq) {
            violations.push(format!("{family:?} fails at k = {k}"));
        }
    };
    for m in 0..=param_max {
        if m >= 1 {
            run(Lemma1Family::Binomial { m });
        }
        for n in 1..=param_max {
            run(Lemma1Family::BinomialMinus { m, n });
        }
        for n in 2..=param_max {
            for (x, y) in [(1, 1), (2, 1), (23, 1), (1, 5), (47, 2), (7, 3)] {
                if x == y && m == n {
                    continue;
                }
                run(Lemma1Family::Difference { x, y, m, n });
            }
            if m >= 2 {
                run(Lemma1Family::Sum { m, n });
            }
        }
        if m >= 1 {
            let base = lemma1_seq(&Lemma1Family::Binomial { m }, window).unwrap();
            for scale in [1, 3, 1000] {
                run(Lemma1Family::Scaled {
                    scale: BigInt::from(scale),
                    base: base.clone(),
                });
            }
        }
    }
    Lemma1Report { windows, violations }
}

/// The six truncated sequences whose strict log-concavity is asserted over
/// `k <= floor(T/2) - a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lemma2Item {
    /// (1.1.1), `k >= a - 1`, `a + 2 <= d <= 2a`.
    EqualDegreeLow,
    /// (1.1.2), `k >= d - a - 1`, `d >= 2a + 1`.
    EqualDegreeHigh,
    /// (1.2.1), `k >= b - 1`, `b >= 2a - 1`.
    AdjacentDegree,
    /// (1.2.2) and (2.2.2), `k >= d - a - 1`, `b + 2 <= d`.
    GapMinusThree,
    /// (1.2.2), `k >= b - 1`, `b + 2 <= d <= a + b`.
    ShiftedMiddle,
    /// (1.2.3), `k >= d - a - 1`, `d >= a + b + 1`.
    ShiftedHigh,
}

impl Lemma2Item {
    pub const ALL: [Lemma2Item; 6] = [
        Lemma2Item::EqualDegreeLow,
        Lemma2Item::EqualDegreeHigh,
        Lemma2Item::AdjacentDegree,
        Lemma2Item::GapMinusThree,
        Lemma2Item::ShiftedMiddle,
        Lemma2Item::ShiftedHigh,
    ];

    pub fn number(self) -> u8 {
        Self::ALL.iter().position(|&i| i == self).unwrap() as u8 + 1
    }

    pub fn formula(self) -> FormulaId {
        match self {
            Lemma2Item::EqualDegreeLow | Lemma2Item::EqualDegreeHigh => FormulaId::ShiftedMinusThreeMinusSquare,
            Lemma2Item::AdjacentDegree => FormulaId::ShiftedMinusThreeGapMinusAb,
            Lemma2Item::GapMinusThree => FormulaId::TriPlusGapMinusThree,
            Lemma2Item::ShiftedMiddle | Lemma2Item::ShiftedHigh => FormulaId::ShiftedMinusThreeMinusAb,
        }
    }

    /// Whether the item speaks about `cfg` at all.
    pub fn applies(self, cfg: CIConfig) -> bool {
        let CIConfig { a, b, d } = cfg;
        let Ok(sub) = classify(a, b, d) else { return false };
        match self {
            Lemma2Item::EqualDegreeLow => sub == SubcaseId::S111 && a + 2 <= d && d <= 2 * a,
            Lemma2Item::EqualDegreeHigh => sub == SubcaseId::S112 && d > 2 * a,
            Lemma2Item::AdjacentDegree => sub == SubcaseId::S121 && b >= 2 * a - 1,
            Lemma2Item::GapMinusThree => matches!(sub, SubcaseId::S122 | SubcaseId::S222) && b + 2 <= d,
            Lemma2Item::ShiftedMiddle => sub == SubcaseId::S122 && b + 2 <= d && d <= a + b,
            Lemma2Item::ShiftedHigh => sub == SubcaseId::S123 && d > a + b,
        }
    }

    pub fn window_start(self, cfg: CIConfig) -> i64 {
        let CIConfig { a, b, d } = cfg;
        match self {
            Lemma2Item::EqualDegreeLow => a - 1,
            Lemma2Item::EqualDegreeHigh | Lemma2Item::GapMinusThree | Lemma2Item::ShiftedHigh => d - a - 1,
            Lemma2Item::AdjacentDegree | Lemma2Item::ShiftedMiddle => b - 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionCheck {
    pub item: Lemma2Item,
    pub cfg: CIConfig,
    pub window: (i64, i64),
    /// Interior indices examined.
    pub checked: usize,
    /// `(k, q_k^2 - q_{k-1} q_{k+1})` wherever the defect is not positive.
    pub failures: Vec<(i64, i64)>,
}

/// Evaluates the item's formula over `[start, floor(T/2) - a]` and checks
/// strict log-concavity at every interior index.
pub fn lemma2_region_check(item: Lemma2Item, cfg: CIConfig) -> Result<RegionCheck> {
    if !item.applies(cfg) {
        return Err(SeriesError::Domain(format!(
            "Lemma 2 item {} does not cover {cfg}",
            item.number()
        )));
    }
    let lo = item.window_start(cfg);
    let hi = cfg.half_end();
    let q = |k: i64| item.formula().eval(cfg, k) as i128;
    let mut failures = Vec::new();
    let mut checked = 0;
    for k in lo + 1..hi {
        checked += 1;
        let defect = q(k) * q(k) - q(k - 1) * q(k + 1);
        if defect <= 0 {
            failures.push((k, defect as i64));
        }
    }
    Ok(RegionCheck {
        item,
        cfg,
        window: (lo, hi),
        checked,
        failures,
    })
}

/// Outcome of a lemma harness over the `(a, b, d)` grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaGridReport {
    pub lemma: u8,
    pub d_max: i64,
    /// Triples (times items, for Lemma 2) the lemma speaks about.
    pub cases: usize,
    /// Inequalities evaluated.
    pub checked: usize,
    pub violations: Vec<String>,
}

/// Every Lemma 2 item on every triple it covers with `d <= d_max`.
pub fn lemma2_grid(d_max: i64) -> LemmaGridReport {
    let mut report = LemmaGridReport {
        lemma: 2,
        d_max,
        cases: 0,
        checked: 0,
        violations: Vec::new(),
    };
    for cfg in CIConfig::grid(d_max) {
        for item in Lemma2Item::ALL {
            if !item.applies(cfg) {
                continue;
            }
            let check = lemma2_region_check(item, cfg).expect("item applies");
            report.cases += 1;
            report.checked += check.checked;
            for (k, defect) in check.failures {
                report
                    .violations
                    .push(format!("item {} at {cfg}, k = {k}: defect {defect}", item.number()));
            }
        }
    }
    report
}

/// Node inequalities for every non-degenerate triple with `d <= d_max`.
pub fn lemma3_grid(d_max: i64) -> LemmaGridReport {
    let mut report = LemmaGridReport {
        lemma: 3,
        d_max,
        cases: 0,
        checked: 0,
        violations: Vec::new(),
    };
    for cfg in CIConfig::grid(d_max).filter(|c| !c.is_degenerate()) {
        report.cases += 1;
        match lemma3_node_check(cfg) {
            Ok(nodes) => {
                report.checked += nodes.len();
                for n in nodes.iter().filter(|n| !n.ok()) {
                    report
                        .violations
                        .push(format!("{cfg}, k = {}: defect {}", n.k, n.defect));
                }
            }
            Err(e) => report.violations.push(format!("{cfg}: {e}")),
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeValue {
    pub k: i64,
    pub defect: BigInt,
    /// `q_{k-1} = q_k = q_{k+1}`.
    pub constant: bool,
}

impl NodeValue {
    pub fn ok(&self) -> bool {
        self.defect.is_positive() || (self.constant && !self.defect.is_negative())
    }
}

/// `q_k^2 - q_{k-1} q_{k+1}` at every index where the governing formula
/// changes, evaluated on the assembled `Q`.
pub fn lemma3_node_check(cfg: CIConfig) -> Result<Vec<NodeValue>> {
    let profile = q_polynomial(cfg)?;
    let coeffs = profile.full.coeffs();
    let mut out = Vec::new();
    for k in profile.nodes() {
        if k < 1 || (k + 1) as usize >= coeffs.len() {
            continue;
        }
        let ku = k as usize;
        let constant = coeffs[ku - 1] == coeffs[ku] && coeffs[ku] == coeffs[ku + 1];
        out.push(NodeValue {
            k,
            defect: lc_defect(coeffs, ku),
            constant,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn non_log_concave_counterexample() {
        let r = analyze(&seq(&[1, 2, 3, 5, 6, 5, 3, 2, 1]));
        assert!(!r.log_concave);
        // 3^2 = 9 < 2 * 5
        assert_eq!(r.first_lc_violation, Some(2));
        assert!(r.unimodal);
        assert!(!r.internal_zeros);
    }

    #[test]
    fn internal_zero_counterexample() {
        let r = analyze(&seq(&[1, 0, 1]));
        assert!(r.internal_zeros);
        assert_eq!(r.first_internal_zero, Some(1));
        assert!(!r.unimodal);
    }

    #[test]
    fn small_and_constant_sequences() {
        let r = analyze(&seq(&[2, 3, 2]));
        assert!(r.log_concave && r.unimodal && r.strictly_log_concave);
        let r = analyze(&seq(&[4; 5]));
        assert!(r.log_concave && !r.strictly_log_concave);
        for v in [vec![], vec![7], vec![7, 0]] {
            let r = analyze(&seq(&v));
            assert!(r.log_concave && r.unimodal && r.strictly_log_concave);
        }
    }

    #[test]
    fn predicate_restricts_to_support() {
        let p = IntPoly::from_i64s(&[0, 0, 2, 3, 2]);
        assert!(conjecture_predicate(&p).unwrap().passes_conjecture());
        let p = IntPoly::from_i64s(&[0, 0, 0, 0, 0, 1, 0, 1]);
        let r = conjecture_predicate(&p).unwrap();
        assert!(!r.passes_conjecture() && r.internal_zeros);
        assert!(conjecture_predicate(&IntPoly::zero()).unwrap().passes_conjecture());
        assert!(conjecture_predicate(&IntPoly::from_i64s(&[1, -1])).is_err());
    }

    #[test]
    fn family_values() {
        let s = lemma1_seq(&Lemma1Family::Binomial { m: 2 }, 5).unwrap();
        assert_eq!(s, seq(&[1, 3, 6, 10, 15]));
        assert_eq!(strict_lc_failure(&s), None);
        assert!(lemma1_seq(
            &Lemma1Family::Difference {
                x: 200,
                y: 1,
                m: 3,
                n: 2
            },
            5
        )
        .is_err());
        assert!(lemma1_seq(&Lemma1Family::Sum { m: 1, n: 4 }, 5).is_err());
        for n in 2..=30 {
            let s = lemma1_seq(
                &Lemma1Family::Difference {
                    x: 23,
                    y: 1,
                    m: n + 1,
                    n,
                },
                50,
            )
            .unwrap();
            assert_eq!(strict_lc_failure(&s), None, "n = {n}");
        }
    }

    #[test]
    fn ratio_data_exceeds_hypothesis_bound() {
        let r = lemma1_difference_max_ratio(4, 3, 20, 200).unwrap();
        assert!(r >= 23);
    }

    #[test]
    fn lemma2_windows() {
        let c = CIConfig::new(2, 2, 4).unwrap();
        let r = lemma2_region_check(Lemma2Item::EqualDegreeLow, c).unwrap();
        assert_eq!(r.window, (1, 1));
        assert_eq!(r.checked, 0);
        let c = CIConfig::new(2, 3, 6).unwrap();
        let r = lemma2_region_check(Lemma2Item::ShiftedHigh, c).unwrap();
        assert!(r.failures.is_empty());
        assert!(lemma2_region_check(Lemma2Item::EqualDegreeLow, c).is_err());
    }

    #[test]
    fn lemma3_examples() {
        let nodes = lemma3_node_check(CIConfig::new(2, 2, 4).unwrap()).unwrap();
        assert!(!nodes.is_empty());
        assert!(nodes.iter().all(NodeValue::ok));
        let nodes = lemma3_node_check(CIConfig::new(5, 5, 7).unwrap()).unwrap();
        assert!(nodes.iter().all(NodeValue::ok));
        assert!(lemma3_node_check(CIConfig::new(4, 4, 5).unwrap()).unwrap().is_empty());
    }

    proptest::proptest! {
        #[test]
        fn lc_without_gaps_implies_unimodal(v in proptest::collection::vec(0i64..20, 0..12)) {
            let r = analyze(&seq(&v));
            if r.nonnegative && r.log_concave && !r.internal_zeros {
                proptest::prop_assert!(r.unimodal, "{:?}", v);
            }
        }
    }
}

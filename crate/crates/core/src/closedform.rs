//! Piecewise closed forms for the coefficients of `Q(t)`, where
//! `HP(N(f)) = t^a Q(t)` for a plane curve whose saturated Jacobian ideal is a
//! complete intersection of multidegree `(a, b)`.
//!
//! The triples `1 <= a <= b < d` split into eight subcases by the sign of
//! `2a + 2b + 1 - 3d`, by whether `a = b`, and by where `d - 2` sits relative
//! to `a`, `b`, `2a` and `a + b`. Inside each subcase the half
//! `q_0, ..., q_{floor(T/2) - a}` is given by a handful of binomial formulas on
//! consecutive `k`-ranges; the rest of `Q` follows by symmetry.
//!
//! The formulas here are transcribed as printed. [`audit`] compares every
//! value against the direct expansion `P_{d-1}^3 - P_a P_b P_{3d-3-a-b}` and
//! reports any disagreement as an [`ErrataEntry`].

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SeriesError};
use crate::hilbert::{binom2, check_plane, hp_n_ci_n2};
use crate::polyring::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubcaseId {
    S111,
    S112,
    S121,
    S122,
    S123,
    S211,
    S221,
    S222,
    Degenerate,
    Unclassified,
}

impl SubcaseId {
    pub const PROPER: [SubcaseId; 8] = [
        SubcaseId::S111,
        SubcaseId::S112,
        SubcaseId::S121,
        SubcaseId::S122,
        SubcaseId::S123,
        SubcaseId::S211,
        SubcaseId::S221,
        SubcaseId::S222,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SubcaseId::S111 => "1.1.1",
            SubcaseId::S112 => "1.1.2",
            SubcaseId::S121 => "1.2.1",
            SubcaseId::S122 => "1.2.2",
            SubcaseId::S123 => "1.2.3",
            SubcaseId::S211 => "2.1.1",
            SubcaseId::S221 => "2.2.1",
            SubcaseId::S222 => "2.2.2",
            SubcaseId::Degenerate => "degenerate",
            SubcaseId::Unclassified => "unclassified",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        Self::PROPER
            .into_iter()
            .chain([SubcaseId::Degenerate, SubcaseId::Unclassified])
            .find(|id| id.label() == s)
    }

    /// The inequality set defining the subcase.
    fn holds(self, a: i64, b: i64, d: i64) -> bool {
        let case1 = 2 * a + 2 * b + 1 < 3 * d;
        let m = d - 2;
        match self {
            SubcaseId::S111 => case1 && 2 <= a && a == b && a <= m && m <= 2 * a - 2,
            SubcaseId::S112 => case1 && 1 <= a && a == b && m >= 2 * a - 1,
            SubcaseId::S121 => case1 && 1 <= a && a < b && a <= m && m < b,
            SubcaseId::S122 => case1 && 2 <= a && a < b && b <= m && m <= a + b - 2,
            SubcaseId::S123 => case1 && 1 <= a && a < b && m >= a + b - 1,
            SubcaseId::S211 => !case1 && 2 <= a && a == b && a <= m,
            SubcaseId::S221 => !case1 && 2 <= a && a < b && a <= m && m < b,
            SubcaseId::S222 => !case1 && 2 <= a && a < b && b <= m,
            SubcaseId::Degenerate | SubcaseId::Unclassified => false,
        }
    }
}

impl fmt::Display for SubcaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A triple `(a, b, d)` with `1 <= a <= b < d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CIConfig {
    pub a: i64,
    pub b: i64,
    pub d: i64,
}

impl CIConfig {
    pub fn new(a: i64, b: i64, d: i64) -> Result<Self> {
        check_plane(a, b, d)?;
        Ok(Self { a, b, d })
    }

    /// `T = 3(d - 2)`.
    pub fn top_degree(&self) -> i64 {
        3 * (self.d - 2)
    }

    pub fn tau(&self) -> i64 {
        self.a * self.b
    }

    pub fn ct(&self) -> i64 {
        self.top_degree() - self.a - self.b + 2
    }

    /// Last index of the half profile, `floor(T/2) - a`.
    pub fn half_end(&self) -> i64 {
        self.top_degree() / 2 - self.a
    }

    /// Degree of `Q`, `T - 2a`.
    pub fn q_degree(&self) -> i64 {
        self.top_degree() - 2 * self.a
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b && self.b == self.d - 1
    }

    /// All valid triples with `d <= d_max`, ordered by `(d, a, b)`.
    pub fn grid(d_max: i64) -> impl Iterator<Item = CIConfig> {
        (2..=d_max).flat_map(|d| (1..d).flat_map(move |a| (a..d).map(move |b| CIConfig { a, b, d })))
    }
}

impl fmt::Display for CIConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.d)
    }
}

/// Every subcase whose inequality set holds. A well-posed classification
/// yields exactly one for non-degenerate triples.
pub fn matching_subcases(a: i64, b: i64, d: i64) -> Vec<SubcaseId> {
    SubcaseId::PROPER.into_iter().filter(|s| s.holds(a, b, d)).collect()
}

pub fn classify(a: i64, b: i64, d: i64) -> Result<SubcaseId> {
    let cfg = CIConfig::new(a, b, d)?;
    if cfg.is_degenerate() {
        return Ok(SubcaseId::Degenerate);
    }
    Ok(match matching_subcases(a, b, d).as_slice() {
        [only] => *only,
        _ => SubcaseId::Unclassified,
    })
}

/// One printed coefficient formula, with `C(m) = C(m, 2)` and `s = b - a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormulaId {
    /// `C(k+2)`
    Tri,
    /// `2 C(k+2)`
    TwoTri,
    /// `2 C(k+2) - 3 C(k+a+3-d)`
    TwoTriMinusThree,
    /// `C(k+a+2) - a^2`
    ShiftedMinusSquare,
    /// `C(k+a+2) - 3 C(k+a+3-d) - a^2`
    ShiftedMinusThreeMinusSquare,
    /// `C(k+2) - 2 C(k+2-s)`
    TriMinusTwoGap,
    /// `C(k+a+2) - 3 C(k+2-s) - ab`
    ShiftedMinusThreeGapMinusAb,
    /// `C(k+2) + C(k+2-s)`
    TriPlusGap,
    /// `C(k+2) + C(k+2-s) - 3 C(k+a+3-d)`
    TriPlusGapMinusThree,
    /// `C(k+a+2) - ab`
    ShiftedMinusAb,
    /// `C(k+a+2) - 3 C(k+a+3-d) - ab`
    ShiftedMinusThreeMinusAb,
    /// `3 (d-a-1)^2`
    TailEqual,
    /// `(b-a)^2`
    TailGapSquare,
    /// `(b-a)^2 + 3 (d-a-1)(d-b-1)`
    TailMixed,
}

impl FormulaId {
    pub fn eval(self, cfg: CIConfig, k: i64) -> i64 {
        let CIConfig { a, b, d } = cfg;
        let s = b - a;
        let c = binom2;
        match self {
            FormulaId::Tri => c(k + 2),
            FormulaId::TwoTri => 2 * c(k + 2),
            FormulaId::TwoTriMinusThree => 2 * c(k + 2) - 3 * c(k + a + 3 - d),
            FormulaId::ShiftedMinusSquare => c(k + a + 2) - a * a,
            FormulaId::ShiftedMinusThreeMinusSquare => c(k + a + 2) - 3 * c(k + a + 3 - d) - a * a,
            FormulaId::TriMinusTwoGap => c(k + 2) - 2 * c(k + 2 - s),
            FormulaId::ShiftedMinusThreeGapMinusAb => c(k + a + 2) - 3 * c(k + 2 - s) - a * b,
            FormulaId::TriPlusGap => c(k + 2) + c(k + 2 - s),
            FormulaId::TriPlusGapMinusThree => c(k + 2) + c(k + 2 - s) - 3 * c(k + a + 3 - d),
            FormulaId::ShiftedMinusAb => c(k + a + 2) - a * b,
            FormulaId::ShiftedMinusThreeMinusAb => c(k + a + 2) - 3 * c(k + a + 3 - d) - a * b,
            FormulaId::TailEqual => 3 * (d - a - 1) * (d - a - 1),
            FormulaId::TailGapSquare => s * s,
            FormulaId::TailMixed => s * s + 3 * (d - a - 1) * (d - b - 1),
        }
    }

    pub fn is_constant(self) -> bool {
        matches!(
            self,
            FormulaId::TailEqual | FormulaId::TailGapSquare | FormulaId::TailMixed
        )
    }
}

/// A printed `k`-range and its formula. `hi == None` means "up to `T/2 - a`".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub lo: i64,
    pub hi: i64,
    pub formula: FormulaId,
}

impl Region {
    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn contains(&self, k: i64) -> bool {
        self.lo <= k && k <= self.hi
    }
}

/// The printed ranges for `subcase`, with the open upper end resolved to
/// `floor(T/2) - a`. Ranges are not clipped and may be empty.
pub fn regions(cfg: CIConfig, subcase: SubcaseId) -> Vec<Region> {
    use FormulaId::*;
    let CIConfig { a, b, d } = cfg;
    let h = cfg.half_end();
    let r = |lo, hi, formula| Region { lo, hi, formula };
    match subcase {
        SubcaseId::S111 => vec![
            r(0, d - a - 2, TwoTri),
            r(d - a - 1, a - 2, TwoTriMinusThree),
            r(a - 1, h, ShiftedMinusThreeMinusSquare),
        ],
        SubcaseId::S112 => vec![
            r(0, a - 2, TwoTri),
            r(a - 1, d - a - 2, ShiftedMinusSquare),
            r(d - a - 1, h, ShiftedMinusThreeMinusSquare),
        ],
        SubcaseId::S121 => vec![
            r(0, b - a - 1, Tri),
            r(b - a, b - 2, TriMinusTwoGap),
            r(b - 1, h, ShiftedMinusThreeGapMinusAb),
        ],
        SubcaseId::S122 => vec![
            r(0, b - a - 1, Tri),
            r(b - a, d - a - 2, TriPlusGap),
            r(d - a - 1, b - 2, TriPlusGapMinusThree),
            r(b - 1, h, ShiftedMinusThreeMinusAb),
        ],
        SubcaseId::S123 => vec![
            r(0, b - a - 1, Tri),
            r(b - a, b - 2, TriPlusGap),
            r(b - 1, d - a - 2, ShiftedMinusAb),
            r(d - a - 1, h, ShiftedMinusThreeMinusAb),
        ],
        SubcaseId::S211 => vec![
            r(0, d - a - 2, TwoTri),
            r(d - a - 1, 3 * d - 3 * a - 6, TwoTriMinusThree),
            r(3 * d - 3 * a - 5, h, TailEqual),
        ],
        SubcaseId::S221 => vec![
            r(0, b - a - 1, Tri),
            r(b - a, 2 * b - 2 * a - 3, TriMinusTwoGap),
            r(2 * b - 2 * a - 2, h, TailGapSquare),
        ],
        SubcaseId::S222 => vec![
            r(0, b - a - 1, Tri),
            r(b - a, d - a - 2, TriPlusGap),
            r(d - a - 1, 3 * d - 2 * a - b - 6, TriPlusGapMinusThree),
            r(3 * d - 2 * a - b - 5, h, TailMixed),
        ],
        SubcaseId::Degenerate | SubcaseId::Unclassified => Vec::new(),
    }
}

/// How the printed ranges of one subcase cover `[0, floor(T/2) - a]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingReport {
    /// Indices covered by no range.
    pub uncovered: Vec<i64>,
    /// Indices covered by more than one range, with the formulas involved.
    pub overlaps: Vec<(i64, Vec<FormulaId>)>,
}

impl TilingReport {
    pub fn is_exact(&self) -> bool {
        self.uncovered.is_empty() && self.overlaps.is_empty()
    }
}

pub fn tiling(cfg: CIConfig, subcase: SubcaseId) -> TilingReport {
    let regs = regions(cfg, subcase);
    let mut report = TilingReport {
        uncovered: Vec::new(),
        overlaps: Vec::new(),
    };
    for k in 0..=cfg.half_end() {
        let hits: Vec<FormulaId> = regs
            .iter()
            .filter(|r| !r.is_empty() && r.contains(k))
            .map(|r| r.formula)
            .collect();
        match hits.len() {
            0 => report.uncovered.push(k),
            1 => {}
            _ => report.overlaps.push((k, hits)),
        }
    }
    report
}

/// The formula governing index `k`: the first nonempty printed range that
/// contains it.
pub fn formula_at(cfg: CIConfig, subcase: SubcaseId, k: i64) -> Result<FormulaId> {
    if k < 0 || k > cfg.half_end() {
        return Err(SeriesError::Domain(format!(
            "k = {k} outside [0, {}] for {cfg}",
            cfg.half_end()
        )));
    }
    regions(cfg, subcase)
        .into_iter()
        .find(|r| !r.is_empty() && r.contains(k))
        .map(|r| r.formula)
        .ok_or(SeriesError::ClassificationGap {
            a: cfg.a,
            b: cfg.b,
            d: cfg.d,
        })
}

/// Printed value of `q_k` for `0 <= k <= floor(T/2) - a`.
pub fn qk(cfg: CIConfig, subcase: SubcaseId, k: i64) -> Result<i64> {
    if matches!(subcase, SubcaseId::Degenerate | SubcaseId::Unclassified) {
        return Err(SeriesError::Domain(format!("no closed form for subcase {subcase}")));
    }
    Ok(formula_at(cfg, subcase, k)?.eval(cfg, k))
}

/// `Q(t)` assembled from the printed half profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QProfile {
    pub cfg: CIConfig,
    pub subcase: SubcaseId,
    pub half_coeffs: Vec<i64>,
    pub full: IntPoly,
    /// Nonempty printed ranges, clipped to the half profile.
    pub regions: Vec<Region>,
}

impl QProfile {
    /// `t^a Q(t)`, to be compared with `HP(N(f))`.
    pub fn hp_n(&self) -> IntPoly {
        self.full.shift(self.cfg.a as usize)
    }

    /// Indices where the governing formula changes: the last index of one
    /// range and the first index of the next.
    pub fn nodes(&self) -> Vec<i64> {
        let mut nodes = Vec::new();
        for pair in self.regions.windows(2) {
            if pair[0].formula != pair[1].formula {
                nodes.push(pair[0].hi);
                nodes.push(pair[1].lo);
            }
        }
        nodes.dedup();
        nodes
    }
}

pub fn q_polynomial(cfg: CIConfig) -> Result<QProfile> {
    let subcase = classify(cfg.a, cfg.b, cfg.d)?;
    match subcase {
        SubcaseId::Degenerate => {
            return Ok(QProfile {
                cfg,
                subcase,
                half_coeffs: Vec::new(),
                full: IntPoly::zero(),
                regions: Vec::new(),
            })
        }
        SubcaseId::Unclassified => {
            return Err(SeriesError::ClassificationGap {
                a: cfg.a,
                b: cfg.b,
                d: cfg.d,
            })
        }
        _ => {}
    }
    let h = cfg.half_end();
    let half_coeffs = (0..=h).map(|k| qk(cfg, subcase, k)).collect::<Result<Vec<_>>>()?;
    let deg = cfg.q_degree();
    let full = IntPoly::from_coeffs(
        (0..=deg)
            .map(|k| BigInt::from(half_coeffs[k.min(deg - k) as usize]))
            .collect(),
    );
    // Clip to the half profile, drop empties, and resolve overlaps in favour
    // of the earlier range, matching `formula_at`.
    let mut clipped: Vec<Region> = Vec::new();
    for r in regions(cfg, subcase) {
        let lo = clipped.last().map_or(r.lo.max(0), |prev| r.lo.max(prev.hi + 1));
        let hi = r.hi.min(h);
        if lo <= hi {
            clipped.push(Region {
                lo,
                hi,
                formula: r.formula,
            });
        }
    }
    Ok(QProfile {
        cfg,
        subcase,
        half_coeffs,
        full,
        regions: clipped,
    })
}

/// A printed coefficient that disagrees with the direct expansion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrataEntry {
    pub cfg: CIConfig,
    pub subcase: SubcaseId,
    pub formula: FormulaId,
    pub k: i64,
    pub expected: i64,
    pub printed: i64,
}

/// Compares the printed half profile with the expansion
/// `P_{d-1}^3 - P_a P_b P_{3d-3-a-b}` coefficient by coefficient. Overlapping
/// printed ranges are each checked.
pub fn audit(cfg: CIConfig) -> Result<Vec<ErrataEntry>> {
    let subcase = classify(cfg.a, cfg.b, cfg.d)?;
    let oracle = hp_n_ci_n2(cfg.a, cfg.b, cfg.d)?;
    let mut errata = Vec::new();
    match subcase {
        SubcaseId::Degenerate => {
            assert!(oracle.is_zero(), "degenerate triple with nonzero HP(N)");
            return Ok(errata);
        }
        SubcaseId::Unclassified => {
            return Err(SeriesError::ClassificationGap {
                a: cfg.a,
                b: cfg.b,
                d: cfg.d,
            })
        }
        _ => {}
    }
    let regs = regions(cfg, subcase);
    for k in 0..=cfg.half_end() {
        let expected = i64::try_from(oracle.coeff((k + cfg.a) as usize)).expect("coefficient fits in i64");
        for r in regs.iter().filter(|r| !r.is_empty() && r.contains(k)) {
            let printed = r.formula.eval(cfg, k);
            if printed != expected {
                errata.push(ErrataEntry {
                    cfg,
                    subcase,
                    formula: r.formula,
                    k,
                    expected,
                    printed,
                });
            }
        }
    }
    Ok(errata)
}

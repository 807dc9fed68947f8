//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Every Hilbert–Poincaré numerator, closed-form series and truncated
//! expansion in this crate is carried by [`IntPoly`]. Division by powers of
//! `(1 - t)` is exact or it is an error: a nonzero remainder always means a
//! formula or input is wrong, never something to round away.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SeriesError;

/// Univariate polynomial `sum coeffs[k] t^k`. Trailing zeros are never stored,
/// so the zero polynomial has an empty coefficient vector.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of the lowest nonzero term, `None` for zero.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficients as machine integers, when they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies by `t^a`.
    pub fn shift(&self, a: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); a];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides by `t^a`, failing if any of the dropped coefficients is nonzero.
    pub fn unshift(&self, a: usize) -> Result<Self, SeriesError> {
        if self.coeffs.iter().take(a).any(|c| !c.is_zero()) {
            return Err(SeriesError::InexactDivision);
        }
        Ok(Self::from_coeffs(self.coeffs.iter().skip(a).cloned().collect()))
    }

    /// Keeps the coefficients of degree `<= k_max`.
    pub fn truncate(&self, k_max: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(k_max + 1).cloned().collect())
    }

    /// True iff the coefficient vector is a palindrome.
    pub fn is_symmetric(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by `P_m(t) = 1 + t + ... + t^(m-1)` in linear time, as a
    /// multiplication by `1 - t^m` followed by a prefix sum.
    pub fn mul_pm(&self, m: i64) -> Result<Self, SeriesError> {
        if m <= 0 {
            return Err(SeriesError::Domain(format!("P_m needs m >= 1, got {m}")));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let m = m as usize;
        let len = self.coeffs.len() + m - 1;
        let mut out = Vec::with_capacity(len);
        let mut running = BigInt::zero();
        for k in 0..len {
            if let Some(c) = self.coeffs.get(k) {
                running += c;
            }
            if k >= m {
                if let Some(c) = self.coeffs.get(k - m) {
                    running -= c;
                }
            }
            out.push(running.clone());
        }
        Ok(Self::from_coeffs(out))
    }

    fn add_assign_ref(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }

    fn sub_assign_ref(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

/// `P_m(t) = (1 - t^m)/(1 - t) = 1 + t + ... + t^(m-1)`.
pub fn pm(m: i64) -> Result<IntPoly, SeriesError> {
    if m <= 0 {
        return Err(SeriesError::Domain(format!("P_m needs m >= 1, got {m}")));
    }
    Ok(IntPoly::from_coeffs(vec![BigInt::one(); m as usize]))
}

/// `1 - t^m` (zero when `m == 0`).
pub fn one_minus_t_pow(m: usize) -> IntPoly {
    let mut p = IntPoly::monomial(-1, m);
    p.add_assign_ref(&IntPoly::one());
    p
}

/// Divides by `1 - t` once, or reports a nonzero remainder.
fn div_one_minus_t_once(p: &IntPoly) -> Result<IntPoly, SeriesError> {
    if p.is_zero() {
        return Ok(IntPoly::zero());
    }
    if !p.eval_at_one().is_zero() {
        return Err(SeriesError::InexactDivision);
    }
    // q_k = p_0 + ... + p_k, and the last prefix (the full sum) is zero.
    let mut running = BigInt::zero();
    let n = p.coeffs.len();
    let mut out = Vec::with_capacity(n - 1);
    for c in &p.coeffs[..n - 1] {
        running += c;
        out.push(running.clone());
    }
    Ok(IntPoly::from_coeffs(out))
}

/// `p / (1 - t)^e`, which must be a polynomial.
pub fn exact_div_one_minus_t(p: &IntPoly, e: u32) -> Result<IntPoly, SeriesError> {
    let mut q = p.clone();
    for _ in 0..e {
        q = div_one_minus_t_once(&q)?;
    }
    Ok(q)
}

/// Coefficients through `t^k_max` of the power series `numerator / (1 - t)^e`.
pub fn series_expand(numerator: &IntPoly, e: u32, k_max: usize) -> IntPoly {
    let mut buf: Vec<BigInt> = (0..=k_max).map(|k| numerator.coeff(k)).collect();
    for _ in 0..e {
        let mut running = BigInt::zero();
        for c in buf.iter_mut() {
            running += &*c;
            *c = running.clone();
        }
    }
    IntPoly::from_coeffs(buf)
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(mut self, rhs: IntPoly) -> IntPoly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(mut self, rhs: IntPoly) -> IntPoly {
        self.sub_assign_ref(&rhs);
        self
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Prints in the usual notation, lowest degree first: `2t^2+3t^3+2t^4`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let abs = c.abs();
            let unit = abs.is_one();
            match k {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{abs}t")?,
                _ if unit => write!(f, "t^{k}")?,
                _ => write!(f, "{abs}t^{k}")?,
            }
        }
        Ok(())
    }
}

// Dense arrays from degree 0; a coefficient that does not fit in i64 is
// written as a decimal string.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Small(i64),
            Big(String),
        }
        let raw = Vec::<Coeff>::deserialize(deserializer)?;
        let coeffs = raw
            .into_iter()
            .map(|c| match c {
                Coeff::Small(v) => Ok(BigInt::from(v)),
                Coeff::Big(s) => s.parse::<BigInt>().map_err(serde::de::Error::custom),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn pm_values() {
        assert_eq!(pm(1).unwrap(), p(&[1]));
        assert_eq!(pm(2).unwrap(), p(&[1, 1]));
        assert_eq!(pm(5).unwrap(), p(&[1, 1, 1, 1, 1]));
        assert!(pm(0).is_err());
        assert!(pm(-3).is_err());
    }

    #[test]
    fn products() {
        let p2 = pm(2).unwrap();
        assert_eq!(&p2 * &p2, p(&[1, 2, 1]));
        assert_eq!(&(&p2 * &p2) * &pm(5).unwrap(), p(&[1, 3, 4, 4, 4, 3, 1]));
        assert!((&p2 * &IntPoly::zero()).is_zero());
    }

    #[test]
    fn mul_pm_matches_convolution() {
        let q = p(&[3, -1, 0, 7]);
        for m in 1..7 {
            assert_eq!(q.mul_pm(m).unwrap(), &q * &pm(m).unwrap());
        }
    }

    #[test]
    fn exact_division() {
        assert_eq!(exact_div_one_minus_t(&one_minus_t_pow(3), 1).unwrap(), p(&[1, 1, 1]));
        let cube = one_minus_t_pow(3).pow(3);
        assert_eq!(exact_div_one_minus_t(&cube, 3).unwrap(), pm(3).unwrap().pow(3));
        assert_eq!(exact_div_one_minus_t(&p(&[1, 1]), 1), Err(SeriesError::InexactDivision));
    }

    #[test]
    fn expansions() {
        assert_eq!(series_expand(&IntPoly::one(), 1, 4), p(&[1, 1, 1, 1, 1]));
        let num = &one_minus_t_pow(3) * &one_minus_t_pow(4);
        assert_eq!(series_expand(&num, 3, 6), p(&[1, 3, 6, 9, 11, 12, 12]));
        assert_eq!(series_expand(&p(&[4, 5, 6]), 0, 1), p(&[4, 5]));
    }

    #[test]
    fn symmetry_and_shift() {
        assert!(p(&[2, 3, 2]).is_symmetric());
        assert!(!p(&[1, 2]).is_symmetric());
        assert!(IntPoly::zero().is_symmetric());
        assert_eq!(p(&[1, 1]).shift(3), p(&[0, 0, 0, 1, 1]));
        assert_eq!(p(&[0, 0, 2, 3, 2]).unshift(2).unwrap(), p(&[2, 3, 2]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 0, 2, 3, 2]).to_string(), "2t^2+3t^3+2t^4");
        assert_eq!(p(&[1, -1]).to_string(), "1-t");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_is_a_dense_array() {
        let q = p(&[0, 0, 2, 3, 2]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, "[0,0,2,3,2]");
        assert_eq!(serde_json::from_str::<IntPoly>(&s).unwrap(), q);
        let big = IntPoly::constant(BigInt::from(i64::MAX) * 4);
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<IntPoly>(&s).unwrap(), big);
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-50i64..50, 0..8).prop_map(|v| IntPoly::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn division_round_trip(a in arb_poly(), e in 0u32..=8) {
            let multiplied = &a * &IntPoly::from_i64s(&[1, -1]).pow(e);
            prop_assert_eq!(exact_div_one_minus_t(&multiplied, e).unwrap(), a.clone());
            // the power series of an exact quotient is the quotient itself
            let k = multiplied.degree().unwrap_or(0) + 3;
            prop_assert_eq!(series_expand(&multiplied, e, k), a);
        }

        #[test]
        fn pm_at_one(m in 1i64..200) {
            prop_assert_eq!(pm(m).unwrap().eval_at_one(), BigInt::from(m));
        }
    }
}

//! Hilbert series of graded quotients `S/I`.
//!
//! The numerator comes from the leading-term ideal by recursive pivot
//! splitting: for a monomial ideal `M` and a monomial `p ∉ M`,
//! `N(M) = N(M + (p)) + t^deg(p) N(M : p)`.

use std::collections::HashMap;

use milnorhp_core::polyring::{one_minus_t_pow, series_expand};
use milnorhp_core::IntPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::ideal::{groebner, Ideal};
use crate::monomial::Monomial;
use crate::mpoly::MPoly;

/// Keeps the divisibility-minimal generators, sorted for use as a memo key.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), m.exps(crate::monomial::MAX_VARS)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn is_pure_power(m: &Monomial) -> bool {
    m.support_mask().count_ones() <= 1
}

struct Numerator {
    memo: HashMap<Vec<Monomial>, IntPoly>,
}

impl Numerator {
    fn run(&mut self, gens: Vec<Monomial>) -> IntPoly {
        if let Some(hit) = self.memo.get(&gens) {
            return hit.clone();
        }
        let out = self.compute(&gens);
        self.memo.insert(gens, out.clone());
        out
    }

    fn compute(&mut self, gens: &[Monomial]) -> IntPoly {
        if gens.iter().any(|g| g.degree() == 0) {
            return IntPoly::zero();
        }
        // base case: pairwise coprime generators form a regular sequence
        let pairwise_coprime = gens
            .iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
        if pairwise_coprime {
            return gens
                .iter()
                .fold(IntPoly::one(), |acc, g| &acc * &one_minus_t_pow(g.degree() as usize));
        }
        // pivot on the variable shared by the most non-pure generators
        let mut counts = [0usize; crate::monomial::MAX_VARS];
        for g in gens.iter().filter(|g| !is_pure_power(g)) {
            for (v, c) in counts.iter_mut().enumerate() {
                if g.exp(v) > 0 {
                    *c += 1;
                }
            }
        }
        let var = (0..counts.len())
            .max_by_key(|&v| (counts[v], std::cmp::Reverse(v)))
            .unwrap();
        // minimal generators never contain a pure power's full exponent, so
        // this pivot lies outside the ideal
        let e = gens
            .iter()
            .filter(|g| !is_pure_power(g) && g.exp(var) > 0)
            .map(|g| g.exp(var))
            .min()
            .expect("pivot variable occurs");
        let pivot = Monomial::var(var, e);

        let mut plus: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).copied().collect();
        plus.push(pivot);
        let colon: Vec<Monomial> = gens.iter().map(|g| g.colon(&pivot)).collect();

        let a = self.run(minimalize(plus));
        let b = self.run(minimalize(colon));
        &a + &b.shift(e as usize)
    }
}

/// Numerator `N(t)` with `HS(S/M) = N(t)/(1-t)^nvars` for a monomial ideal `M`.
pub fn monomial_numerator(gens: &[Monomial]) -> IntPoly {
    let mut n = Numerator { memo: HashMap::new() };
    n.run(minimalize(gens.to_vec()))
}

/// Hilbert series of `S/I`: the numerator over `(1-t)^nvars` and the
/// coefficients through `t^k_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSeries {
    pub numerator: IntPoly,
    pub nvars: u32,
    pub truncated: IntPoly,
}

pub fn hilbert_series_quotient(ideal: &Ideal, k_max: usize) -> QuotientSeries {
    let gb = groebner(ideal);
    let numerator = monomial_numerator(&gb.leading_monomials());
    let nvars = ideal.nvars() as u32;
    let truncated = series_expand(&numerator, nvars, k_max);
    QuotientSeries {
        numerator,
        nvars,
        truncated,
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim S_k` for `nvars` variables.
pub fn ring_dimension(nvars: usize, k: u32) -> u64 {
    binomial(k as u64 + nvars as u64 - 1, nvars as u64 - 1)
}

/// Rank of a rational matrix by Gaussian elimination.
fn rank(mut rows: Vec<Vec<BigRational>>, ncols: usize) -> usize {
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][col].recip();
        for v in &mut rows[r][col..] {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *v -= &f * p;
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim (S/I)_k` computed directly from the generators: `dim S_k` minus the
/// rank of `⊕_j S_{k - deg g_j} → S_k`, `(h_j) ↦ Σ h_j g_j`.
pub fn quotient_dimension_by_rank(gens: &[MPoly], nvars: usize, k: u32) -> u64 {
    let basis = Monomial::all_of_degree(nvars, k);
    let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        let Some(dg) = g.total_degree() else { continue };
        if dg > k {
            continue;
        }
        for mult in Monomial::all_of_degree(nvars, k - dg) {
            let mut row = vec![BigRational::zero(); basis.len()];
            for (m, c) in g.terms() {
                row[index[&m.mul(&mult)]] = c.clone();
            }
            rows.push(row);
        }
    }
    basis.len() as u64 - rank(rows, basis.len()) as u64
}

/// First index where the truncated series and the rank oracle disagree.
pub fn rank_oracle_mismatch(ideal: &Ideal, k_max: u32) -> Option<u32> {
    let series = hilbert_series_quotient(ideal, k_max as usize);
    (0..=k_max).find(|&k| {
        let expect = BigInt::from(quotient_dimension_by_rank(ideal.gens(), ideal.nvars(), k));
        series.truncated.coeff(k as usize) != expect
    })
}

/// Eventual value of a Hilbert function of dimension one: `h(1)` where the
/// numerator is `h(t)(1-t)^(nvars-1)`.
pub fn degree_of_one_dimensional(numerator: &IntPoly, nvars: u32) -> Option<BigInt> {
    let h = milnorhp_core::polyring::exact_div_one_minus_t(numerator, nvars - 1).ok()?;
    let v = h.eval_at_one();
    (!v.is_negative()).then_some(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::mpoly::default_var_names;
    use crate::parse::parse_poly;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn monomial_numerators() {
        assert_eq!(monomial_numerator(&[]), IntPoly::one());
        // (x^2, xy) in 2 vars: 1 - 2t^2 + t^3
        assert_eq!(
            monomial_numerator(&[m(&[2, 0]), m(&[1, 1])]),
            IntPoly::from_i64s(&[1, 0, -2, 1])
        );
        let coprime = &one_minus_t_pow(2) * &one_minus_t_pow(3);
        assert_eq!(monomial_numerator(&[m(&[2, 0, 0]), m(&[0, 3, 0])]), coprime);
        // (xy, yz, xz): three points, numerator 1 - 3t^2 + 2t^3
        assert_eq!(
            monomial_numerator(&[m(&[1, 1, 0]), m(&[0, 1, 1]), m(&[1, 0, 1])]),
            IntPoly::from_i64s(&[1, 0, -3, 2])
        );
    }

    #[test]
    fn polynomial_ring_series() {
        let order = MonomialOrder::degrevlex(3);
        let s = hilbert_series_quotient(&Ideal::zero(order), 4);
        assert_eq!(s.numerator, IntPoly::one());
        assert_eq!(s.truncated, IntPoly::from_i64s(&[1, 3, 6, 10, 15]));
    }

    #[test]
    fn rank_oracle_agrees_on_a_small_ideal() {
        let vars = default_var_names(3);
        let order = MonomialOrder::degrevlex(3);
        let gens = ["x^2 - y*z", "x*y - z^2", "y^3 + x*z^2"]
            .iter()
            .map(|s| parse_poly(s, &vars).unwrap())
            .collect();
        let i = Ideal::new(order, gens).unwrap();
        assert_eq!(rank_oracle_mismatch(&i, 8), None);
    }
}

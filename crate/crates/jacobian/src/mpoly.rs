//! Sparse multivariate polynomials over the rationals.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::monomial::{Monomial, MonomialOrder};

/// `x, y, z, w` for up to four variables, `x0, x1, ...` beyond.
pub fn default_var_names(nvars: usize) -> Vec<String> {
    if nvars <= 4 {
        ["x", "y", "z", "w"][..nvars].iter().map(|s| s.to_string()).collect()
    } else {
        (0..nvars).map(|i| format!("x{i}")).collect()
    }
}

/// Terms are kept sorted strictly descending in `order`, with no zero
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    order: MonomialOrder,
    terms: Vec<(Monomial, BigRational)>,
}

impl MPoly {
    pub fn zero(order: MonomialOrder) -> Self {
        Self {
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(order: MonomialOrder, c: BigRational) -> Self {
        Self::from_terms(order, vec![(Monomial::one(), c)])
    }

    pub fn var(order: MonomialOrder, i: usize) -> Self {
        assert!(i < order.nvars());
        Self::from_terms(order, vec![(Monomial::var(i, 1), BigRational::one())])
    }

    /// Combines like terms and sorts.
    pub fn from_terms(order: MonomialOrder, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(BigRational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Self { order, terms }
    }

    pub fn from_int_terms(order: MonomialOrder, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        Self::from_terms(order, terms.into_iter().map(|(m, c)| (m, BigRational::from_integer(c))))
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    /// Highest total degree of a term.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            Some(first) => degs.all(|d| d == first),
            None => true,
        }
    }

    /// Re-sorts the terms for another order on the same variables.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        assert_eq!(order.nvars(), self.nvars());
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Self { order, terms }
    }

    /// Renames variables: variable `i` becomes variable `map[i]` of the ring
    /// described by `order`.
    pub fn remap(&self, order: MonomialOrder, map: &[usize]) -> Self {
        Self::from_terms(order, self.terms.iter().map(|(m, c)| (m.permute(map), c.clone())))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        Self {
            order: self.order,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        // multiplying by a monomial preserves any monomial order
        Self {
            order: self.order,
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    /// Divides every term by `m`; `None` if some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| m.quotient(t).map(|q| (q, c.clone())))
            .collect::<Option<Vec<_>>>()?;
        Some(Self {
            order: self.order,
            terms,
        })
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            Some((_, lc)) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.order, BigRational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Self {
        Self::from_terms(
            self.order,
            self.terms.iter().filter(|(m, _)| m.exp(i) > 0).map(|(m, c)| {
                let e = m.exp(i);
                let q = Monomial::var(i, 1).quotient(m).expect("exponent is positive");
                (q, c * BigRational::from_integer(BigInt::from(e)))
            }),
        )
    }

    /// Integer coefficients, all divided by their gcd and with a positive
    /// leading coefficient.
    pub fn primitive_integer_terms(&self) -> Vec<(Monomial, BigInt)> {
        use num_integer::Integer;
        let lcm_den = self.terms.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut ints: Vec<(Monomial, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (*m, (c * BigRational::from_integer(lcm_den.clone())).to_integer()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        let sign_fix = ints.first().is_some_and(|(_, c)| c.is_negative());
        for (_, c) in ints.iter_mut() {
            if !g.is_zero() {
                *c /= &g;
            }
            if sign_fix {
                *c = -&*c;
            }
        }
        ints
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if idx > 0 {
                out.push('+');
            }
            let abs = c.abs();
            let mono: Vec<String> = (0..self.nvars())
                .filter(|&i| m.exp(i) > 0)
                .map(|i| match m.exp(i) {
                    1 => names[i].clone(),
                    e => format!("{}^{e}", names[i]),
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    fn merge(&self, rhs: &MPoly, negate: bool) -> MPoly {
        assert_eq!(self.order, rhs.order, "mixing polynomials of different rings");
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let rhs_coeff = |c: &BigRational| if negate { -c } else { c.clone() };
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &rhs.terms[j];
            match order.cmp(ma, mb) {
                std::cmp::Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((*mb, rhs_coeff(cb)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(rhs.terms[j..].iter().map(|(m, c)| (*m, rhs_coeff(c))));
        MPoly { order, terms: out }
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.merge(rhs, false)
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.merge(rhs, true)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.order, rhs.order, "mixing polynomials of different rings");
        MPoly::from_terms(
            self.order,
            self.terms
                .iter()
                .flat_map(|(ma, ca)| rhs.terms.iter().map(move |(mb, cb)| (ma.mul(mb), ca * cb))),
        )
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&default_var_names(self.nvars())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn arithmetic_and_derivatives() {
        let o = MonomialOrder::degrevlex(3);
        let x = MPoly::var(o, 0);
        let y = MPoly::var(o, 1);
        let f = &(&x + &y).pow(2) - &x.pow(2);
        assert_eq!(f.to_string(), "2*x*y+y^2");
        assert_eq!(f.derivative(1).to_string(), "2*x+2*y");
        assert!(f.is_homogeneous());
        assert!((&f - &f).is_zero());
        let g = &f + &MPoly::constant(o, q(1));
        assert!(!g.is_homogeneous());
        assert_eq!(g.total_degree(), Some(2));
    }

    #[test]
    fn primitive_part() {
        let o = MonomialOrder::degrevlex(2);
        let f = MPoly::from_terms(
            o,
            vec![
                (Monomial::from_exps(&[1, 0]), BigRational::new((-2).into(), 3.into())),
                (Monomial::from_exps(&[0, 1]), BigRational::new(4.into(), 9.into())),
            ],
        );
        let ints = f.primitive_integer_terms();
        assert_eq!(ints[0].1, BigInt::from(3));
        assert_eq!(ints[1].1, BigInt::from(-2));
    }
}

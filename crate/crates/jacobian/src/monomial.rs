//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest number of variables a ring may have, tag variables included.
pub const MAX_VARS: usize = 12;

/// Exponent vector with its total degree cached. Unused slots stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        let mut m = Self::one();
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent fits in u16");
            m.deg += e;
        }
        m
    }

    pub fn var(i: usize, e: u32) -> Self {
        let mut m = Self::one();
        m.exps[i] = e as u16;
        m.deg = e;
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exps(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] += other.exps[i];
        }
        out.deg += other.deg;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = *other;
        for i in 0..MAX_VARS {
            out.exps[i] -= self.exps[i];
        }
        out.deg -= self.deg;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::one();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            out.deg += out.exps[i] as u32;
        }
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::one();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].min(other.exps[i]);
            out.deg += out.exps[i] as u32;
        }
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// `self / gcd(self, other)`: the generator of `(self) : (other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::one();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].saturating_sub(other.exps[i]);
            out.deg += out.exps[i] as u32;
        }
        out
    }

    /// Moves exponents: slot `perm[i]` of the result holds slot `i` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut out = Monomial::one();
        for (i, &p) in perm.iter().enumerate() {
            out.exps[p] = self.exps[i];
        }
        out.deg = self.deg;
        out
    }

    /// Bit `i` set iff variable `i` occurs; a cheap divisibility prefilter.
    #[inline]
    pub fn support_mask(&self) -> u16 {
        let mut mask = 0u16;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Every monomial of total degree `deg` in `nvars` variables, in
    /// descending lexicographic order.
    pub fn all_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
        fn rec(i: usize, nvars: usize, left: u32, cur: &mut [u32], out: &mut Vec<Monomial>) {
            if i + 1 == nvars {
                cur[i] = left;
                out.push(Monomial::from_exps(cur));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, nvars, left - e, cur, out);
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if deg == 0 {
                out.push(Monomial::one());
            }
            return out;
        }
        rec(0, nvars, deg, &mut vec![0; nvars], &mut out);
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    /// Degree reverse lexicographic.
    Degrevlex,
    Lex,
    /// Degrevlex on the first `front` positions, ties broken by degrevlex on
    /// the rest; eliminates the front block.
    BlockElim {
        front: u8,
    },
}

/// A monomial order on `nvars` variables. Position `p` in the order is
/// variable `perm[p]`: position 0 is the largest variable and the last
/// position the smallest.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    nvars: u8,
    perm: [u8; MAX_VARS],
}

impl MonomialOrder {
    fn identity(kind: OrderKind, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        let mut perm = [0u8; MAX_VARS];
        for (i, p) in perm.iter_mut().enumerate() {
            *p = i as u8;
        }
        Self {
            kind,
            nvars: nvars as u8,
            perm,
        }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Self::identity(OrderKind::Degrevlex, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::identity(OrderKind::Lex, nvars)
    }

    /// Eliminates variables `0..front`.
    pub fn block_elim(nvars: usize, front: usize) -> Self {
        Self::identity(OrderKind::BlockElim { front: front as u8 }, nvars)
    }

    /// Same kind, with variable `var` moved to the last (smallest) position
    /// and the others kept in their relative order.
    pub fn with_last(self, var: usize) -> Self {
        let mut order = self;
        let mut p = 0;
        for &v in self.perm[..self.nvars()].iter().filter(|&&v| v as usize != var) {
            order.perm[p] = v;
            p += 1;
        }
        order.perm[p] = var as u8;
        order
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    /// Variable sitting at the last position of the order.
    pub fn last_var(&self) -> usize {
        self.perm[self.nvars() - 1] as usize
    }

    pub fn positions(&self) -> &[u8] {
        &self.perm[..self.nvars()]
    }

    #[inline]
    fn revlex_tail(&self, a: &Monomial, b: &Monomial, range: std::ops::Range<usize>) -> Ordering {
        for p in range.rev() {
            let v = self.perm[p] as usize;
            match a.exps[v].cmp(&b.exps[v]) {
                Ordering::Equal => continue,
                // a smaller exponent on a later variable makes the monomial larger
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = self.nvars();
        match self.kind {
            OrderKind::Degrevlex => a.deg.cmp(&b.deg).then_with(|| self.revlex_tail(a, b, 0..n)),
            OrderKind::Lex => {
                for p in 0..n {
                    let v = self.perm[p] as usize;
                    match a.exps[v].cmp(&b.exps[v]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderKind::BlockElim { front } => {
                let front = front as usize;
                let block_deg =
                    |m: &Monomial| -> u32 { self.perm[..front].iter().map(|&v| m.exps[v as usize] as u32).sum() };
                block_deg(a)
                    .cmp(&block_deg(b))
                    .then_with(|| self.revlex_tail(a, b, 0..front))
                    .then_with(|| {
                        (a.deg - block_deg(a))
                            .cmp(&(b.deg - block_deg(b)))
                            .then_with(|| self.revlex_tail(a, b, front..n))
                    })
            }
        }
    }
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.kind, self.positions())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::degrevlex(3);
        // x > y > z, and x*z < y^2 in degrevlex
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_and_permutation() {
        let o = MonomialOrder::lex(3);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        let moved = MonomialOrder::degrevlex(3).with_last(0);
        assert_eq!(moved.positions(), &[1, 2, 0]);
        assert_eq!(moved.last_var(), 0);
        // x is now smallest: y^2 > x*y
        assert_eq!(moved.cmp(&m(&[0, 2, 0]), &m(&[1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_block() {
        let o = MonomialOrder::block_elim(3, 1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 2]).divides(&m(&[2, 2])));
        assert!(!m(&[1, 3]).divides(&m(&[2, 2])));
        assert_eq!(m(&[1, 2]).quotient(&m(&[2, 2])), Some(m(&[1, 0])));
        assert_eq!(m(&[3, 1]).lcm(&m(&[1, 2])), m(&[3, 2]));
        assert_eq!(m(&[3, 1]).colon(&m(&[1, 2])), m(&[2, 0]));
        assert!(m(&[2, 0]).is_coprime(&m(&[0, 4])));
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
    }
}

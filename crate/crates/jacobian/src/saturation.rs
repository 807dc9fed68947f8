//! Saturation by the irrelevant maximal ideal `m = (x_0, ..., x_n)`.
//!
//! Strategies are interchangeable and registered by name:
//!
//! * `certified-colon` computes every `I : x_j^∞` and returns one of them,
//!   `K`, once its generators satisfy `x_j^N g ∈ I` for all `j`. Since
//!   `I : m^∞ ⊆ K`, such a certificate proves equality. If no variable
//!   certifies, it falls back to `intersection`.
//! * `intersection` returns `∩_i (I : x_i^∞)`.
//! * `iterated-colon` repeats `I ← ∩_i (I : x_i)` until the ideal stops
//!   growing. Slow, kept as a cross-check.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::ideal::{colon_by_variable, colon_var_bayer, contains, groebner, intersect, Ideal};
use crate::monomial::Monomial;

/// Cap on the number of rounds of the iterated colon.
pub const ITERATION_CAP: usize = 64;

#[derive(Debug, Clone)]
pub struct Saturation {
    /// Reduced Gröbner basis of `I : m^∞` in the order of the input.
    pub ideal: Ideal,
    pub strategy: &'static str,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// `x_j^power · g ∈ I` for every variable and generator, with the
    /// saturation computed as `I : x_var^∞`.
    Variable { var: usize, power: u32 },
    /// Exact intersection of the variable saturations.
    Intersection,
    /// The iterated colon stabilized after `rounds` rounds.
    Stabilized { rounds: usize },
}

pub trait SaturationStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn saturate(&self, ideal: &Ideal) -> Result<Saturation>;
}

/// `I : x_j^∞` for every variable, with the power `e_j` such that
/// `I : x_j^∞ = I : x_j^e_j`.
fn variable_saturations(ideal: &Ideal) -> Vec<(Ideal, u32)> {
    (0..ideal.nvars()).map(|v| colon_var_bayer(ideal, v, false)).collect()
}

/// Smallest `N` with `x_j^N · K ⊆ I` for every variable `x_j`, or `None`
/// when `K ⊄ I : m^∞`. The returned power is verified by explicit
/// membership tests.
pub fn certify(ideal: &Ideal, candidate: &Ideal) -> Option<u32> {
    let gb = groebner(ideal);
    certify_with(&gb, candidate, &variable_saturations(&gb))
}

fn certify_with(gb: &Ideal, candidate: &Ideal, sats: &[(Ideal, u32)]) -> Option<u32> {
    for (k, _) in sats {
        if !candidate.gens().iter().all(|g| contains(k, g)) {
            return None;
        }
    }
    let power = sats.iter().map(|(_, e)| *e).max().unwrap_or(0);
    // the bound is exact for each variable; confirm it directly
    for j in 0..gb.nvars() {
        let xj = Monomial::var(j, power);
        if !candidate.gens().iter().all(|g| contains(gb, &g.mul_monomial(&xj))) {
            return None;
        }
    }
    Some(power)
}

fn intersect_all(sats: Vec<(Ideal, u32)>) -> Result<Ideal> {
    let mut it = sats.into_iter().map(|(k, _)| k);
    let mut acc = it.next().expect("at least one variable");
    for k in it {
        acc = intersect(&acc, &k)?;
    }
    Ok(acc)
}

fn intersection_of_variable_saturations(ideal: &Ideal) -> Result<Ideal> {
    intersect_all(variable_saturations(ideal))
}

pub struct CertifiedColon;

impl SaturationStrategy for CertifiedColon {
    fn name(&self) -> &'static str {
        "certified-colon"
    }

    fn saturate(&self, ideal: &Ideal) -> Result<Saturation> {
        let gb = groebner(ideal);
        let sats = variable_saturations(&gb);
        // the last variable first: it is the one degrevlex favors
        for var in (0..gb.nvars()).rev() {
            if let Some(power) = certify_with(&gb, &sats[var].0, &sats) {
                return Ok(Saturation {
                    ideal: sats[var].0.clone(),
                    strategy: self.name(),
                    certificate: Certificate::Variable { var, power },
                });
            }
        }
        Ok(Saturation {
            ideal: intersect_all(sats)?,
            strategy: self.name(),
            certificate: Certificate::Intersection,
        })
    }
}

pub struct IntersectionStrategy;

impl SaturationStrategy for IntersectionStrategy {
    fn name(&self) -> &'static str {
        "intersection"
    }

    fn saturate(&self, ideal: &Ideal) -> Result<Saturation> {
        Ok(Saturation {
            ideal: intersection_of_variable_saturations(ideal)?,
            strategy: self.name(),
            certificate: Certificate::Intersection,
        })
    }
}

pub struct IteratedColon {
    pub max_rounds: usize,
}

impl SaturationStrategy for IteratedColon {
    fn name(&self) -> &'static str {
        "iterated-colon"
    }

    fn saturate(&self, ideal: &Ideal) -> Result<Saturation> {
        let mut cur = groebner(ideal);
        for round in 1..=self.max_rounds {
            let mut next: Option<Ideal> = None;
            for v in 0..cur.nvars() {
                let c = colon_by_variable(&cur, v)?;
                next = Some(match next {
                    None => c,
                    Some(prev) => intersect(&prev, &c)?,
                });
            }
            let next = next.expect("at least one variable");
            if next.same_basis(&cur) {
                return Ok(Saturation {
                    ideal: cur,
                    strategy: self.name(),
                    certificate: Certificate::Stabilized { rounds: round },
                });
            }
            cur = next;
        }
        Err(AlgebraError::Invariant(format!(
            "iterated colon did not stabilize after {} rounds",
            self.max_rounds
        )))
    }
}

#[derive(Clone)]
pub struct SaturationRegistry {
    strategies: BTreeMap<&'static str, Arc<dyn SaturationStrategy>>,
}

impl Default for SaturationRegistry {
    fn default() -> Self {
        let mut r = Self {
            strategies: BTreeMap::new(),
        };
        r.register(Arc::new(CertifiedColon));
        r.register(Arc::new(IntersectionStrategy));
        r.register(Arc::new(IteratedColon {
            max_rounds: ITERATION_CAP,
        }));
        r
    }
}

impl SaturationRegistry {
    pub fn register(&mut self, s: Arc<dyn SaturationStrategy>) {
        self.strategies.insert(s.name(), s);
    }

    pub fn get(&self, name: &str) -> Option<Arc<dyn SaturationStrategy>> {
        self.strategies.get(name).cloned()
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.strategies.keys().copied().collect()
    }
}

pub const DEFAULT_STRATEGY: &str = "certified-colon";

/// `I : m^∞` as a reduced Gröbner basis, with the default strategy.
pub fn saturate_irrelevant(ideal: &Ideal) -> Result<Ideal> {
    Ok(CertifiedColon.saturate(ideal)?.ideal)
}

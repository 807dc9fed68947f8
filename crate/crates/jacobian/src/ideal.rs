//! Homogeneous ideals: Gröbner bases, normal forms, colons and intersections.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{AlgebraError, Result};
use crate::groebner::{self, IPoly};
use crate::monomial::{Monomial, MonomialOrder};
use crate::mpoly::MPoly;

/// Finitely generated ideal of `k[x_0..x_n]`. When `is_groebner` is set the
/// generators form the reduced monic Gröbner basis for `order`.
#[derive(Clone, Debug)]
pub struct Ideal {
    order: MonomialOrder,
    gens: Vec<MPoly>,
    is_groebner: bool,
}

impl Ideal {
    /// Validates homogeneity; zero generators are dropped.
    pub fn new(order: MonomialOrder, gens: Vec<MPoly>) -> Result<Self> {
        for g in &gens {
            if g.order() != order {
                return Err(AlgebraError::Domain("generators live in different rings".into()));
            }
            if !g.is_homogeneous() {
                return Err(AlgebraError::Domain(format!("generator {g} is not homogeneous")));
            }
        }
        Ok(Self::unchecked(order, gens))
    }

    /// Ideal with possibly inhomogeneous generators (elimination steps).
    pub(crate) fn unchecked(order: MonomialOrder, gens: Vec<MPoly>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Self {
            order,
            gens,
            is_groebner: false,
        }
    }

    pub fn zero(order: MonomialOrder) -> Self {
        Self {
            order,
            gens: Vec::new(),
            is_groebner: true,
        }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn gens(&self) -> &[MPoly] {
        &self.gens
    }

    pub fn is_groebner(&self) -> bool {
        self.is_groebner
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.total_degree() == Some(0))
    }

    /// Same ideal, generators re-sorted for `order` (Gröbner flag cleared).
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        Self::unchecked(order, self.gens.iter().map(|g| g.with_order(order)).collect())
    }

    pub(crate) fn ipolys(&self) -> Vec<IPoly> {
        self.gens.iter().map(IPoly::from_mpoly).collect()
    }

    pub(crate) fn from_ipolys(order: MonomialOrder, basis: &[IPoly]) -> Self {
        Self {
            order,
            gens: basis.iter().map(|g| g.to_mpoly(order)).collect(),
            is_groebner: true,
        }
    }

    /// Leading monomials (of a Gröbner basis).
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().filter_map(MPoly::leading_monomial).collect()
    }

    /// `true` when both are Gröbner bases for the same order with equal
    /// generator sets, i.e. the ideals are equal.
    pub fn same_basis(&self, other: &Ideal) -> bool {
        self.is_groebner && other.is_groebner && self.order == other.order && self.gens == other.gens
    }
}

/// The reduced monic Gröbner basis of `ideal` for its own order.
pub fn groebner(ideal: &Ideal) -> Ideal {
    if ideal.is_groebner {
        return ideal.clone();
    }
    let basis = groebner::buchberger(&ideal.order, ideal.ipolys());
    Ideal::from_ipolys(ideal.order, &basis)
}

fn ensure_gb(ideal: &Ideal) -> std::borrow::Cow<'_, Ideal> {
    if ideal.is_groebner {
        std::borrow::Cow::Borrowed(ideal)
    } else {
        std::borrow::Cow::Owned(groebner(ideal))
    }
}

/// Remainder of `f` on division by the Gröbner basis of `g`.
pub fn normal_form(f: &MPoly, g: &Ideal) -> MPoly {
    let g = ensure_gb(g);
    let f = f.with_order(g.order);
    groebner::normal_form_terms(&g.order, &f, &g.ipolys())
}

pub fn contains(ideal: &Ideal, f: &MPoly) -> bool {
    let g = ensure_gb(ideal);
    let f = f.with_order(g.order);
    f.is_zero() || groebner::reduces_to_zero(&g.order, &IPoly::from_mpoly(&f), &g.ipolys())
}

/// `a ⊆ b`.
pub fn is_subideal(a: &Ideal, b: &Ideal) -> bool {
    let gb = ensure_gb(b);
    a.gens.iter().all(|f| contains(&gb, f))
}

pub fn ideals_equal(a: &Ideal, b: &Ideal) -> bool {
    is_subideal(a, b) && is_subideal(b, a)
}

/// Buchberger's criterion on the generators of `g`.
pub fn is_groebner_basis(g: &Ideal) -> bool {
    groebner::s_pairs_reduce_to_zero(&g.order, &g.ipolys())
}

/// `I : x_var^∞` (or `I : x_var` when `once`), by dividing a degrevlex
/// basis whose smallest variable is `x_var`. Returns the reduced basis in
/// `ideal`'s order together with the largest power divided out.
pub fn colon_var_bayer(ideal: &Ideal, var: usize, once: bool) -> (Ideal, u32) {
    let order = ideal.order;
    let work = MonomialOrder::degrevlex(order.nvars()).with_last(var);
    let gb = groebner(&ideal.with_order(work));
    let mut max_power = 0;
    let divided: Vec<MPoly> = gb
        .gens
        .iter()
        .map(|g| {
            let lowest = g.terms().iter().map(|(m, _)| m.exp(var)).min().unwrap_or(0);
            let e = if once { lowest.min(1) } else { lowest };
            max_power = max_power.max(e);
            g.div_monomial(&Monomial::var(var, e))
                .expect("every term divisible")
                .with_order(order)
        })
        .collect();
    (groebner(&Ideal::unchecked(order, divided)), max_power)
}

fn embed_with_tag(p: &MPoly, order: MonomialOrder) -> MPoly {
    let map: Vec<usize> = (0..p.nvars()).map(|i| i + 1).collect();
    p.remap(order, &map)
}

/// `I ∩ J` through a tag variable `t`: the `t`-free part of a Gröbner basis
/// of `t·I + (1 - t)·J` under an order eliminating `t`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    let order = a.order;
    let nv = order.nvars();
    if nv + 1 > crate::monomial::MAX_VARS {
        return Err(AlgebraError::Domain("too many variables for a tag variable".into()));
    }
    if a.gens.is_empty() || b.gens.is_empty() {
        return Ok(Ideal::zero(order));
    }
    let big = MonomialOrder::block_elim(nv + 1, 1);
    let t = MPoly::var(big, 0);
    let one_minus_t = &MPoly::constant(big, num_rational::BigRational::one()) - &t;
    let mut gens = Vec::new();
    for g in &a.gens {
        gens.push(&t * &embed_with_tag(g, big));
    }
    for g in &b.gens {
        gens.push(&one_minus_t * &embed_with_tag(g, big));
    }
    let gb = groebner(&Ideal::unchecked(big, gens));
    let kept: Vec<MPoly> = gb
        .gens
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exp(0) == 0))
        .map(|g| {
            MPoly::from_terms(
                order,
                g.terms().iter().map(|(m, c)| {
                    let exps: Vec<u32> = (1..=nv).map(|i| m.exp(i)).collect();
                    (Monomial::from_exps(&exps), c.clone())
                }),
            )
        })
        .collect();
    Ok(groebner(&Ideal::unchecked(order, kept)))
}

/// `I : x_var` via `(I ∩ (x_var)) / x_var`.
pub fn colon_by_variable(ideal: &Ideal, var: usize) -> Result<Ideal> {
    let order = ideal.order;
    let xv = MPoly::var(order, var);
    let principal = Ideal::unchecked(order, vec![xv]);
    let meet = intersect(ideal, &principal)?;
    let quot: Vec<MPoly> = meet
        .gens
        .iter()
        .map(|g| {
            g.div_monomial(&Monomial::var(var, 1))
                .ok_or_else(|| AlgebraError::Invariant("intersection with (x_i) not divisible by x_i".into()))
        })
        .collect::<Result<_>>()?;
    Ok(groebner(&Ideal::unchecked(order, quot)))
}

/// Size of a minimal homogeneous generating set, and one such set, chosen
/// greedily by increasing degree.
pub fn minimal_generators(ideal: &Ideal) -> Vec<MPoly> {
    let mut cands = ideal.gens.clone();
    cands.sort_by_key(|g| g.total_degree());
    let mut chosen: Vec<MPoly> = Vec::new();
    for g in cands {
        let sofar = Ideal::unchecked(ideal.order, chosen.clone());
        if chosen.is_empty() || !contains(&groebner(&sofar), &g) {
            chosen.push(g);
        }
    }
    chosen
}

/// Integer primitive form of a generator, for display and serialization.
pub fn integer_generator(g: &MPoly) -> Vec<(Monomial, BigInt)> {
    g.primitive_integer_terms()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::default_var_names;
    use crate::parse::parse_poly;

    fn ideal(gens: &[&str]) -> Ideal {
        let vars = default_var_names(3);
        let order = MonomialOrder::degrevlex(3);
        Ideal::new(order, gens.iter().map(|s| parse_poly(s, &vars).unwrap()).collect()).unwrap()
    }

    fn p(s: &str) -> MPoly {
        parse_poly(s, &default_var_names(3)).unwrap()
    }

    #[test]
    fn trivial_groebner() {
        let i = ideal(&["x^2", "x*y"]);
        let g = groebner(&i);
        assert_eq!(g.gens().len(), 2);
        assert!(is_groebner_basis(&g));
        assert!(groebner(&g).same_basis(&g));
    }

    #[test]
    fn normal_forms() {
        let g = groebner(&ideal(&["x^2 - y*z", "x*y - z^2"]));
        assert!(is_groebner_basis(&g));
        for gen in g.gens() {
            assert!(normal_form(gen, &g).is_zero());
        }
        let one = MPoly::constant(g.order(), num_rational::BigRational::one());
        assert_eq!(normal_form(&one, &g), one);
        // linearity: NF(2f + 3h) = 2NF(f) + 3NF(h)
        let f = p("x^3 + y^3");
        let h = p("x^2*z + 5y^2*z");
        let two = MPoly::constant(g.order(), num_rational::BigRational::from_integer(2.into()));
        let three = MPoly::constant(g.order(), num_rational::BigRational::from_integer(3.into()));
        let lhs = normal_form(&(&(&two * &f) + &(&three * &h)), &g);
        let rhs = &(&two * &normal_form(&f, &g)) + &(&three * &normal_form(&h, &g));
        assert_eq!(lhs, rhs);
        // f - NF(f) ∈ I
        let diff = &f - &normal_form(&f, &g);
        assert!(contains(&g, &diff));
    }

    #[test]
    fn colons() {
        let i = ideal(&["x^2"]);
        let (c, _) = colon_var_bayer(&i, 0, true);
        assert!(ideals_equal(&c, &ideal(&["x"])));
        assert!(ideals_equal(&colon_by_variable(&i, 0).unwrap(), &ideal(&["x"])));
        let j = ideal(&["x*y", "y^2"]);
        let expect = ideal(&["x", "y"]);
        assert!(ideals_equal(&colon_by_variable(&j, 1).unwrap(), &expect));
        assert!(ideals_equal(&colon_var_bayer(&j, 1, true).0, &expect));
    }

    #[test]
    fn intersection() {
        let a = ideal(&["x"]);
        let b = ideal(&["y"]);
        assert!(ideals_equal(&intersect(&a, &b).unwrap(), &ideal(&["x*y"])));
        let c = ideal(&["x^2", "y"]);
        let d = ideal(&["x", "y^2"]);
        assert!(ideals_equal(
            &intersect(&c, &d).unwrap(),
            &ideal(&["x^2", "x*y", "y^2"])
        ));
    }

    #[test]
    fn minimal_generator_count() {
        let i = ideal(&["x^2", "x*y", "x^2 + x*y", "x^3"]);
        assert_eq!(minimal_generators(&groebner(&i)).len(), 2);
    }
}

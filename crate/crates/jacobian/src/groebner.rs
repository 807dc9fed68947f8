//! Buchberger's algorithm over the rationals with fraction-free integer
//! arithmetic.
//!
//! Internally every polynomial is a primitive integer polynomial: reduction
//! scales by integers instead of dividing, and contents are stripped as
//! coefficients grow. Public results are converted back to monic rational
//! polynomials.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::monomial::{Monomial, MonomialOrder};
use crate::mpoly::MPoly;

pub(crate) type Terms = Vec<(Monomial, BigInt)>;

/// Primitive integer polynomial with its sugar degree.
#[derive(Clone, Debug)]
pub(crate) struct IPoly {
    pub terms: Terms,
    pub sugar: u32,
}

impl IPoly {
    pub fn from_mpoly(p: &MPoly) -> Self {
        let terms = p.primitive_integer_terms();
        let sugar = terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        Self { terms, sugar }
    }

    pub fn lm(&self) -> Monomial {
        self.terms[0].0
    }

    pub fn to_mpoly(&self, order: MonomialOrder) -> MPoly {
        MPoly::from_int_terms(order, self.terms.iter().cloned()).monic()
    }
}

fn content(terms: &[(Monomial, BigInt)]) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in terms {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn make_primitive(terms: &mut Terms) {
    let mut g = content(terms);
    if g.is_zero() {
        return;
    }
    if terms[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in terms.iter_mut() {
            *c /= &g;
        }
    }
}

/// `a*p - b*q*g`, where the leading terms are known to cancel when `skip_lead`.
fn axpy(
    order: &MonomialOrder,
    a: &BigInt,
    p: &[(Monomial, BigInt)],
    b: &BigInt,
    q: &Monomial,
    g: &[(Monomial, BigInt)],
) -> Terms {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < p.len() && j < g.len() {
        let gm = g[j].0.mul(q);
        match order.cmp(&p[i].0, &gm) {
            Ordering::Greater => {
                out.push((p[i].0, a * &p[i].1));
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, -(b * &g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = a * &p[i].1 - b * &g[j].1;
                if !c.is_zero() {
                    out.push((gm, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(p[i..].iter().map(|(m, c)| (*m, a * c)));
    out.extend(g[j..].iter().map(|(m, c)| (m.mul(q), -(b * c))));
    out
}

/// Lead monomials with support masks for fast divisor lookup.
pub(crate) struct Reducers<'a> {
    leads: Vec<(Monomial, u16)>,
    polys: Vec<&'a IPoly>,
}

impl<'a> Reducers<'a> {
    pub fn new(polys: impl IntoIterator<Item = &'a IPoly>) -> Self {
        let polys: Vec<&IPoly> = polys.into_iter().collect();
        let leads = polys.iter().map(|p| (p.lm(), p.lm().support_mask())).collect();
        Self { leads, polys }
    }

    fn find(&self, m: &Monomial) -> Option<&'a IPoly> {
        let mask = m.support_mask();
        self.leads
            .iter()
            .position(|(lm, lmask)| lmask & !mask == 0 && lm.divides(m))
            .map(|i| self.polys[i])
    }
}

/// Result of a fraction-free reduction: `scale * f - remainder` lies in the
/// ideal, with `scale` a nonzero rational.
pub(crate) struct Reduced {
    pub terms: Terms,
    pub scale: BigRational,
    pub sugar: u32,
}

/// Reduces `f` modulo `red`. With `full == false` only the leading term is
/// reduced (the tail is left as is).
pub(crate) fn reduce(order: &MonomialOrder, f: Terms, sugar: u32, red: &Reducers<'_>, full: bool) -> Reduced {
    let mut p = f;
    let mut rem: Terms = Vec::new();
    let mut scale = BigRational::one();
    let mut sugar = sugar;
    let mut steps = 0u32;
    while !p.is_empty() {
        let (m, c) = p[0].clone();
        match red.find(&m) {
            Some(g) => {
                let (gm, gc) = &g.terms[0];
                let q = gm.quotient(&m).expect("divisor found");
                sugar = sugar.max(g.sugar + q.degree());
                let h = c.gcd(gc);
                let a = gc / &h;
                let b = &c / &h;
                p = axpy(order, &a, &p[1..], &b, &q, &g.terms[1..]);
                if !a.is_one() {
                    for (_, rc) in rem.iter_mut() {
                        *rc *= &a;
                    }
                    scale *= BigRational::from_integer(a);
                }
                steps += 1;
                if steps.is_multiple_of(8) {
                    let g = content(&p).gcd(&content(&rem));
                    if !g.is_zero() && !g.is_one() {
                        for (_, x) in p.iter_mut().chain(rem.iter_mut()) {
                            *x /= &g;
                        }
                        scale /= BigRational::from_integer(g);
                    }
                }
            }
            None => {
                if !full {
                    rem.append(&mut p);
                    break;
                }
                rem.push(p.remove(0));
            }
        }
    }
    if !rem.is_empty() {
        let mut g = content(&rem);
        if rem[0].1.is_negative() {
            g = -g;
        }
        for (_, x) in rem.iter_mut() {
            *x /= &g;
        }
        scale /= BigRational::from_integer(g);
    }
    Reduced {
        terms: rem,
        scale,
        sugar,
    }
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

fn s_poly(order: &MonomialOrder, f: &IPoly, g: &IPoly, lcm: &Monomial) -> (Terms, u32) {
    let (fm, fc) = &f.terms[0];
    let (gm, gc) = &g.terms[0];
    let qf = fm.quotient(lcm).expect("lcm");
    let qg = gm.quotient(lcm).expect("lcm");
    let h = fc.gcd(gc);
    let a = gc / &h;
    let b = fc / &h;
    // a*qf*f - b*qg*g, dropping the cancelled leading terms
    let ff: Terms = f.terms[1..].iter().map(|(m, c)| (m.mul(&qf), c.clone())).collect();
    let terms = axpy(order, &a, &ff, &b, &qg, &g.terms[1..]);
    let sugar = (f.sugar + qf.degree()).max(g.sugar + qg.degree());
    (terms, sugar)
}

/// Gebauer–Möller installation of the new element `h` (an index into
/// `store`) into the active set and pair list.
fn update(store: &[IPoly], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let lh = store[h].lm();
    let sugar_of = |g: usize, lcm: &Monomial| {
        let sh = store[h].sugar + lh.quotient(lcm).unwrap().degree();
        let sg = store[g].sugar + store[g].lm().quotient(lcm).unwrap().degree();
        sh.max(sg)
    };
    let cands: Vec<(usize, Monomial, bool)> = active
        .iter()
        .map(|&g| {
            let lg = store[g].lm();
            (g, lh.lcm(&lg), lh.is_coprime(&lg))
        })
        .collect();
    // chain criterion among the new pairs
    let mut rest: Vec<(usize, Monomial, bool)> = cands;
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    while let Some(c) = rest.pop() {
        let (_, lcm, coprime) = c;
        if coprime || !rest.iter().chain(kept.iter()).any(|o| o.1.divides(&lcm)) {
            kept.push(c);
        }
    }
    // the product criterion drops pairs with coprime leading monomials
    let fresh: Vec<Pair> = kept
        .iter()
        .filter(|(_, _, coprime)| !coprime)
        .map(|(g, lcm, _)| Pair {
            i: *g,
            j: h,
            lcm: *lcm,
            sugar: sugar_of(*g, lcm),
        })
        .collect();
    // old pairs made redundant by h
    pairs.retain(|p| !(lh.divides(&p.lcm) && store[p.i].lm().lcm(&lh) != p.lcm && store[p.j].lm().lcm(&lh) != p.lcm));
    pairs.extend(fresh);
    active.retain(|&g| !lh.divides(&store[g].lm()));
    active.push(h);
}

/// Reduced Gröbner basis of the ideal generated by `gens`, as primitive
/// integer polynomials sorted by increasing leading monomial.
pub(crate) fn buchberger(order: &MonomialOrder, gens: Vec<IPoly>) -> Vec<IPoly> {
    let mut store: Vec<IPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<IPoly> = gens.into_iter().filter(|g| !g.terms.is_empty()).collect();
    input.sort_by(|a, b| a.sugar.cmp(&b.sugar).then_with(|| order.cmp(&a.lm(), &b.lm())));
    for g in input {
        let red = Reducers::new(active.iter().map(|&i| &store[i]));
        let r = reduce(order, g.terms, g.sugar, &red, false);
        if r.terms.is_empty() {
            continue;
        }
        store.push(IPoly {
            terms: r.terms,
            sugar: r.sugar,
        });
        let h = store.len() - 1;
        update(&store, &mut active, &mut pairs, h);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&x, &y| {
                let (p, q) = (&pairs[x], &pairs[y]);
                p.sugar.cmp(&q.sugar).then_with(|| order.cmp(&p.lcm, &q.lcm))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        let (sp, sugar) = s_poly(order, &store[pair.i], &store[pair.j], &pair.lcm);
        if sp.is_empty() {
            continue;
        }
        let red = Reducers::new(active.iter().map(|&i| &store[i]));
        let r = reduce(order, sp, sugar, &red, false);
        if r.terms.is_empty() {
            continue;
        }
        store.push(IPoly {
            terms: r.terms,
            sugar: r.sugar,
        });
        let h = store.len() - 1;
        update(&store, &mut active, &mut pairs, h);
    }

    interreduce(order, active.iter().map(|&i| store[i].clone()).collect())
}

/// Minimalizes and tail-reduces a Gröbner basis.
pub(crate) fn interreduce(order: &MonomialOrder, mut basis: Vec<IPoly>) -> Vec<IPoly> {
    basis.sort_by(|a, b| order.cmp(&a.lm(), &b.lm()));
    let mut minimal: Vec<IPoly> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h.lm().divides(&g.lm())) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others = Reducers::new(minimal.iter().enumerate().filter(|(j, _)| *j != idx).map(|(_, g)| g));
        let g = &minimal[idx];
        let lead = g.terms[0].clone();
        let tail = reduce(order, g.terms[1..].to_vec(), g.sugar, &others, true);
        // lead * scale_int + tail, with scale = num/den rescaling the lead
        let num = tail.scale.numer().clone();
        let den = tail.scale.denom().clone();
        // scale*tail_orig ≡ tail.terms, so g ≡ lead + tail.terms/scale
        // multiply through by num: num*lead + den*tail.terms
        let mut terms = vec![(lead.0, lead.1 * &num)];
        terms.extend(tail.terms.into_iter().map(|(m, c)| (m, c * &den)));
        make_primitive(&mut terms);
        out.push(IPoly { terms, sugar: g.sugar });
    }
    out
}

/// Exact rational normal form of `f` modulo a Gröbner basis.
pub(crate) fn normal_form_terms(order: &MonomialOrder, f: &MPoly, basis: &[IPoly]) -> MPoly {
    if f.is_zero() {
        return f.clone();
    }
    // f = lcm_den^-1 * content * prim
    let prim = f.primitive_integer_terms();
    let ratio = &f.terms()[0].1 / BigRational::from_integer(prim[0].1.clone());
    let sugar = f.total_degree().unwrap_or(0);
    let red = Reducers::new(basis.iter());
    let r = reduce(order, prim, sugar, &red, true);
    let factor = ratio / r.scale;
    MPoly::from_int_terms(*order, r.terms).scale(&factor)
}

pub(crate) fn reduces_to_zero(order: &MonomialOrder, f: &IPoly, basis: &[IPoly]) -> bool {
    let red = Reducers::new(basis.iter());
    reduce(order, f.terms.clone(), f.sugar, &red, true).terms.is_empty()
}

/// Every S-polynomial of `basis` reduces to zero modulo `basis`.
pub(crate) fn s_pairs_reduce_to_zero(order: &MonomialOrder, basis: &[IPoly]) -> bool {
    let red = Reducers::new(basis.iter());
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let lcm = basis[i].lm().lcm(&basis[j].lm());
            let (sp, sugar) = s_poly(order, &basis[i], &basis[j], &lcm);
            if !reduce(order, sp, sugar, &red, true).terms.is_empty() {
                return false;
            }
        }
    }
    true
}

use milnorhp_core::hilbert::smooth_series;
use milnorhp_core::IntPoly;
use milnorhp_jacobian::fixtures;
use milnorhp_jacobian::hilbert::{hilbert_series_quotient, rank_oracle_mismatch};
use milnorhp_jacobian::ideal::{
    colon_by_variable, colon_var_bayer, contains, ideals_equal, is_groebner_basis, is_subideal, minimal_generators,
};
use milnorhp_jacobian::mpoly::default_var_names;
use milnorhp_jacobian::pipeline::milnor_series;
use milnorhp_jacobian::saturation::{certify, SaturationRegistry};
use milnorhp_jacobian::{
    curve_pipeline, groebner, jacobian_ideal, normal_form, parse_poly, saturate_irrelevant, AlgebraError, Ideal, MPoly,
    MonomialOrder,
};
use proptest::prelude::*;

fn xyz(s: &str) -> MPoly {
    parse_poly(s, &default_var_names(3)).unwrap()
}

fn ideal3(gens: &[&str]) -> Ideal {
    Ideal::new(MonomialOrder::degrevlex(3), gens.iter().map(|s| xyz(s)).collect()).unwrap()
}

fn fixture_poly(name: &str) -> MPoly {
    let fx = fixtures::by_name(name).unwrap();
    parse_poly(&fx.poly, &fx.vars).unwrap()
}

#[test]
fn example_one_jacobian_and_saturation() {
    let f = fixture_poly("ex1");
    let j = jacobian_ideal(&f).unwrap();
    assert!(ideals_equal(
        &j,
        &ideal3(&["x^3 + x*y^2", "x^2*y + 2*y^3 + y*z^2", "y^2*z + z^3"])
    ));
    assert_eq!(
        milnor_series(&f, 6).unwrap(),
        IntPoly::from_i64s(&[1, 3, 6, 7, 6, 4, 4])
    );
    let sat = saturate_irrelevant(&j).unwrap();
    let expect = ideal3(&["y^2 + z^2", "x^2 - z^2"]);
    for g in expect.gens() {
        assert!(normal_form(g, &sat).is_zero());
    }
    for g in sat.gens() {
        assert!(normal_form(g, &groebner(&expect)).is_zero());
    }
}

#[test]
fn trivial_jacobians() {
    let f = xyz("x^5");
    let j = jacobian_ideal(&f).unwrap();
    assert_eq!(j.gens().len(), 1);
    assert_eq!(j.gens()[0], xyz("5x^4"));
    let fermat = jacobian_ideal(&xyz("x^4 + y^4 + z^4")).unwrap();
    assert!(ideals_equal(&fermat, &ideal3(&["x^3", "y^3", "z^3"])));
    assert!(matches!(jacobian_ideal(&xyz("x^2 + y")), Err(AlgebraError::Domain(_))));
    assert!(matches!(jacobian_ideal(&xyz("x")), Err(AlgebraError::Domain(_))));
}

#[test]
fn example_two_milnor_series() {
    let f = fixture_poly("ex2");
    let expect = IntPoly::from_i64s(&[1, 3, 6, 10, 15, 18, 19, 18, 16, 13, 12, 12, 12, 12]);
    assert_eq!(milnor_series(&f, 13).unwrap(), expect);
}

#[test]
fn example_three_saturation_generators() {
    let f = fixture_poly("ex3");
    let sat = saturate_irrelevant(&jacobian_ideal(&f).unwrap()).unwrap();
    let printed = ideal3(&["x^3", "x^2*y^2", "y^5 + 3x^2*z^3", "5x*y^4 - 21x^2*y*z^2"]);
    assert!(ideals_equal(&sat, &printed));
    assert_eq!(minimal_generators(&sat).len(), 4);
}

#[test]
fn smooth_curve() {
    let f = xyz("x^4 + y^4 + z^4");
    let r = curve_pipeline(&f, None).unwrap();
    assert!(r.smooth);
    assert_eq!(r.tau, 0);
    assert_eq!(r.ct, 6);
    // N(f) is the whole Milnor algebra when V(f) is smooth
    assert_eq!(r.hp_n, smooth_series(4, 2).unwrap());
    assert_eq!(r.ci_detect, None);
}

#[test]
fn small_k_max_is_inconclusive() {
    let f = fixture_poly("ex3");
    assert!(matches!(
        curve_pipeline(&f, Some(10)),
        Err(AlgebraError::InconclusiveTruncation { k_max: 10 })
    ));
}

#[test]
fn non_isolated_singularities_are_reported() {
    // a double line
    let f = xyz("x^2*z");
    assert!(matches!(curve_pipeline(&f, None), Err(AlgebraError::NonIsolated(_))));
}

#[test]
fn groebner_self_checks_on_fixtures() {
    for fx in fixtures::all() {
        let f = parse_poly(&fx.poly, &fx.vars).unwrap();
        let j = jacobian_ideal(&f).unwrap();
        let g = groebner(&j);
        assert!(is_groebner_basis(&g), "{}", fx.name);
        assert!(groebner(&g).same_basis(&g), "{}", fx.name);
        assert!(ideals_equal(&j, &g), "{}", fx.name);
        for h in g.gens() {
            assert!(normal_form(h, &g).is_zero());
        }
        let sat = saturate_irrelevant(&j).unwrap();
        assert!(is_groebner_basis(&sat), "{}", fx.name);
        assert!(is_subideal(&j, &sat), "{}", fx.name);
        assert!(certify(&j, &sat).is_some(), "{}", fx.name);
        let again = saturate_irrelevant(&sat).unwrap();
        assert!(again.same_basis(&sat), "{}: saturation is not idempotent", fx.name);
    }
}

#[test]
fn rank_oracle_on_fixtures() {
    for fx in fixtures::all() {
        let f = parse_poly(&fx.poly, &fx.vars).unwrap();
        let j = jacobian_ideal(&f).unwrap();
        assert_eq!(rank_oracle_mismatch(&j, 8), None, "{}: J_f", fx.name);
        let sat = saturate_irrelevant(&j).unwrap();
        assert_eq!(rank_oracle_mismatch(&sat, 8), None, "{}: saturation", fx.name);
    }
}

#[test]
fn saturation_strategies_agree_on_small_fixtures() {
    let reg = SaturationRegistry::default();
    for name in ["ex1", "ex2", "table-1.1.1", "table-1.1.2", "conca-i"] {
        let j = jacobian_ideal(&fixture_poly(name)).unwrap();
        let reference = reg.get("certified-colon").unwrap().saturate(&j).unwrap().ideal;
        for strategy in ["intersection", "iterated-colon"] {
            let other = reg.get(strategy).unwrap().saturate(&j).unwrap().ideal;
            assert!(other.same_basis(&reference), "{name}: {strategy}");
        }
    }
}

#[test]
fn colon_methods_agree() {
    for name in ["ex1", "table-1.1.1", "table-2.1.1"] {
        let j = jacobian_ideal(&fixture_poly(name)).unwrap();
        for v in 0..3 {
            let tag = colon_by_variable(&j, v).unwrap();
            let (bayer, _) = colon_var_bayer(&j, v, true);
            assert!(tag.same_basis(&bayer), "{name}, variable {v}");
            let xv = MPoly::var(j.order(), v);
            for g in tag.gens() {
                assert!(contains(&j, &(&xv * g)));
            }
        }
    }
}

#[test]
fn hilbert_series_is_order_independent() {
    for name in ["ex1", "table-1.1.2", "table-2.2.1"] {
        let j = jacobian_ideal(&fixture_poly(name)).unwrap();
        let dr = hilbert_series_quotient(&j, 20).truncated;
        let lex = hilbert_series_quotient(&j.with_order(MonomialOrder::lex(3)), 20).truncated;
        assert_eq!(dr, lex, "{name}");
    }
}

fn small_poly() -> impl Strategy<Value = MPoly> {
    // homogeneous of degree 2 or 3 with small coefficients
    (2u32..=3, prop::collection::vec(-3i64..=3, 10)).prop_map(|(deg, coeffs)| {
        let order = MonomialOrder::degrevlex(3);
        let monos = milnorhp_jacobian::Monomial::all_of_degree(3, deg);
        MPoly::from_int_terms(order, monos.into_iter().zip(coeffs).map(|(m, c)| (m, c.into())))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_ideals_pass_buchberger_and_rank_checks(gens in prop::collection::vec(small_poly(), 1..4)) {
        let i = Ideal::new(MonomialOrder::degrevlex(3), gens).unwrap();
        let g = groebner(&i);
        prop_assert!(is_groebner_basis(&g));
        prop_assert!(ideals_equal(&i, &g));
        prop_assert!(groebner(&g).same_basis(&g));
        prop_assert_eq!(rank_oracle_mismatch(&i, 6), None);
    }

    #[test]
    fn normal_form_is_idempotent_and_stays_in_the_coset(
        gens in prop::collection::vec(small_poly(), 1..3),
        f in small_poly(),
    ) {
        let g = groebner(&Ideal::new(MonomialOrder::degrevlex(3), gens).unwrap());
        let r = normal_form(&f, &g);
        prop_assert_eq!(normal_form(&r, &g), r.clone());
        prop_assert!(contains(&g, &(&f - &r)));
    }

    #[test]
    fn saturation_contains_the_ideal(gens in prop::collection::vec(small_poly(), 1..4)) {
        let i = Ideal::new(MonomialOrder::degrevlex(3), gens).unwrap();
        let sat = saturate_irrelevant(&i).unwrap();
        prop_assert!(is_subideal(&i, &sat));
        prop_assert!(certify(&i, &sat).is_some());
        prop_assert!(saturate_irrelevant(&sat).unwrap().same_basis(&sat));
    }
}

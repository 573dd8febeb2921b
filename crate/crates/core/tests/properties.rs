use std::collections::HashMap;
use std::sync::OnceLock;

use chnorm::algebra::{catalog, format, Element};
use chnorm::chnorm::{char_poly_of, element_degree, generic_min_poly};
use chnorm::factor::{factor_rational, RatUniPoly};
use chnorm::kernel::parse::parse_poly;
use chnorm::kernel::rational::{format_rational, parse_rational, ratio};
use chnorm::kernel::{Monomial, MultiPoly};
use chnorm::Rational;
use proptest::prelude::*;

const VARS: usize = 3;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=2, VARS), small_rational()), 0..5).prop_map(|terms| {
        MultiPoly::from_terms(VARS, terms.into_iter().map(|(e, c)| (Monomial::new(e), c)).collect())
    })
}

/// `(N₀, degree)` per catalog entry, computed once.
fn norms() -> &'static HashMap<&'static str, (MultiPoly, usize)> {
    static NORMS: OnceLock<HashMap<&'static str, (MultiPoly, usize)>> = OnceLock::new();
    NORMS.get_or_init(|| {
        catalog::NAMES
            .iter()
            .map(|&n| {
                let mp = generic_min_poly(&catalog::get(n).unwrap()).unwrap();
                (n, (mp.norm(), mp.degree()))
            })
            .collect()
    })
}

fn catalog_name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(catalog::NAMES.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_undoes_multiplication(p in poly(), d in poly()) {
        prop_assume!(!d.is_zero());
        prop_assert_eq!((&p * &d).exact_div(&d), Some(p));
    }

    #[test]
    fn rendering_parses_back(p in poly()) {
        prop_assert_eq!(parse_poly(&p.to_string(), VARS).unwrap(), p);
    }

    #[test]
    fn rationals_round_trip(n in any::<i64>(), d in 1i64..) {
        let q = ratio(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn norm_scales_with_degree(name in catalog_name(), coords in prop::collection::vec(-5i64..=5, 9), s in -4i64..=4) {
        let alg = catalog::get(name).unwrap();
        let (n0, k) = &norms()[name];
        let a: Vec<Rational> = coords.iter().take(alg.dim()).map(|&c| ratio(c, 1)).collect();
        prop_assume!(a.len() == alg.dim());
        let scaled: Vec<Rational> = a.iter().map(|c| c * ratio(s, 1)).collect();
        let lhs = n0.evaluate(&scaled).unwrap();
        let rhs = n0.evaluate(&a).unwrap() * ratio(s, 1).pow(*k as i32);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn char_poly_annihilates(name in catalog_name(), coords in prop::collection::vec(-5i64..=5, 9)) {
        let alg = catalog::get(name).unwrap();
        prop_assume!(coords.len() >= alg.dim());
        let a = Element::from_ints(&coords[..alg.dim()]);
        let chi = char_poly_of(&alg, &a).unwrap();
        prop_assert!(alg.eval_poly(&chi, &a).is_zero());
        let k = norms()[name].1;
        prop_assert_eq!(chi.degree(), Some(k));
        prop_assert!(element_degree(&alg, &a).unwrap() <= k);
    }

    #[test]
    fn norm_is_multiplicative_on_samples(name in catalog_name(), x in prop::collection::vec(-4i64..=4, 9), y in prop::collection::vec(-4i64..=4, 9)) {
        let alg = catalog::get(name).unwrap();
        let n0 = &norms()[name].0;
        let (a, b) = (Element::from_ints(&x[..alg.dim()]), Element::from_ints(&y[..alg.dim()]));
        let ab = alg.multiply(&a, &b).unwrap();
        let value = |e: &Element| n0.evaluate(e.coords()).unwrap();
        prop_assert_eq!(value(&ab), value(&a) * value(&b));
    }

    #[test]
    fn factorization_multiplies_back(coeffs in prop::collection::vec(-6i64..=6, 1..7)) {
        let u = RatUniPoly::from_ints(&coeffs);
        prop_assume!(!u.is_zero());
        let f = factor_rational(&u).unwrap();
        prop_assert_eq!(f.expand(), u);
        for (p, _) in &f.factors {
            prop_assert!(p.is_monic());
        }
    }

    #[test]
    fn algebra_parser_never_panics(text in ".{0,200}") {
        let _ = format::parse_algebra(&text);
    }

    #[test]
    fn poly_parser_never_panics(text in "[x0-9+*^ /()-]{0,40}") {
        let _ = parse_poly(&text, VARS);
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::error::Error;
use crate::extended::Extended;
use crate::geometry::MonomialIdeal;
use crate::multiplicity::{r_number, IdealTuple};
use crate::poly::{parse_polynomial, ExponentVector, Polynomial, Weights};

fn ev(v: &[u32]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

fn ideal(dim: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(dim, gens.iter().map(|g| ev(g))).unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn fq(n: i64, d: i64) -> Extended<BigRational> {
    Extended::Finite(q(n, d))
}

fn w(v: &[u64]) -> Weights {
    Weights::new(v.to_vec()).unwrap()
}

fn poly(s: &str, n: usize) -> Polynomial {
    parse_polynomial(s, Some(n)).unwrap()
}

fn tuple(entries: Vec<MonomialIdeal>) -> IdealTuple {
    IdealTuple::new(entries).unwrap()
}

fn five_variable_f() -> Polynomial {
    poly("x1^12 + x2^4*x4 + x4^3 + x3^2*x5 + x5^2", 5)
}

#[test]
fn asymptotic_order_examples() {
    let i = MonomialIdeal::pure_powers(&[4, 2]);
    let m = OrderArgument::Ideal(MonomialIdeal::maximal(2));
    assert_eq!(
        asymptotic_order(&i, &m, OrderMode::Asymptotic).unwrap(),
        fq(1, 4)
    );
    let x2y = OrderArgument::Monomial(ev(&[2, 1]));
    assert_eq!(
        asymptotic_order(&MonomialIdeal::maximal(2), &x2y, OrderMode::Asymptotic).unwrap(),
        fq(3, 1)
    );
    assert_eq!(
        asymptotic_order(&MonomialIdeal::maximal(2), &x2y, OrderMode::Plain).unwrap(),
        fq(3, 1)
    );
    let xy = OrderArgument::Monomial(ev(&[1, 1]));
    assert_eq!(
        asymptotic_order(
            &MonomialIdeal::pure_powers(&[2, 3]),
            &xy,
            OrderMode::Asymptotic
        )
        .unwrap(),
        fq(5, 6)
    );
    assert_eq!(
        asymptotic_order(&MonomialIdeal::pure_powers(&[2, 3]), &xy, OrderMode::Plain).unwrap(),
        fq(0, 1)
    );
    let h = OrderArgument::Polynomial(poly("x^2*y + y^5", 2));
    assert_eq!(
        asymptotic_order(&MonomialIdeal::maximal(2), &h, OrderMode::Asymptotic).unwrap(),
        fq(3, 1)
    );
    assert!(asymptotic_order(&MonomialIdeal::maximal(2), &h, OrderMode::Plain).is_err());
    let zero = OrderArgument::Polynomial(Polynomial::zero(2));
    assert!(matches!(
        asymptotic_order(&MonomialIdeal::maximal(2), &zero, OrderMode::Asymptotic),
        Err(Error::ZeroInput(_))
    ));
    assert!(asymptotic_order(&MonomialIdeal::zero(2), &xy, OrderMode::Asymptotic).is_err());
}

#[test]
fn monomial_ideal_exponents() {
    let r = loj_monomial_ideal(&MonomialIdeal::pure_powers(&[4, 2])).unwrap();
    assert_eq!(r.value, fq(4, 1));
    assert_eq!(r.certificate.name(), "ExactByAxis");
    assert_eq!(
        loj_monomial_ideal(&MonomialIdeal::maximal(3))
            .unwrap()
            .value,
        fq(1, 1)
    );
    // ⟨x^{w̄/w₁}, y^{w̄/w₂}⟩ for w = (1,2)
    assert_eq!(
        loj_monomial_ideal(&MonomialIdeal::pure_powers(&[2, 1]))
            .unwrap()
            .value,
        fq(2, 1)
    );
    assert!(loj_monomial_ideal(&ideal(2, &[&[1, 1], &[0, 4]])).is_err());
}

#[test]
fn relative_exponents() {
    let i = MonomialIdeal::pure_powers(&[4, 2]);
    let j = MonomialIdeal::pure_powers(&[2, 1]);
    assert_eq!(loj_relative_ideal(&i, &j).unwrap(), q(2, 1));
    assert_eq!(loj_relative_ideal(&j, &j).unwrap(), q(1, 1));
    assert_eq!(
        loj_relative_ideal(&i, &MonomialIdeal::maximal(2)).unwrap(),
        q(4, 1)
    );
    assert!(loj_relative_ideal(&i, &MonomialIdeal::unit(2)).is_err());
}

#[test]
fn five_variable_example_has_no_matching() {
    let f = five_variable_f();
    let t = gradient_ideals(&f).unwrap();
    let expected = [
        ideal(5, &[&[11, 0, 0, 0, 0]]),
        ideal(5, &[&[0, 3, 0, 1, 0]]),
        ideal(5, &[&[0, 0, 1, 0, 1]]),
        ideal(5, &[&[0, 4, 0, 0, 0], &[0, 0, 0, 2, 0]]),
        ideal(5, &[&[0, 0, 2, 0, 0], &[0, 0, 0, 0, 1]]),
    ];
    assert_eq!(t.entries(), &expected);
    assert_eq!(check_w_matching(&t, &w(&[1, 2, 3, 4, 6])).unwrap(), None);
}

#[test]
fn fermat_gradient_matches_identity() {
    let f = poly("x^12 + y^6 + z^4", 3);
    let t = gradient_ideals(&f).unwrap();
    let wit = check_w_matching(&t, &w(&[1, 2, 3])).unwrap().unwrap();
    assert_eq!(
        wit,
        MatchingWitness {
            tau: vec![0, 1, 2],
            i0: 0
        }
    );
    assert_eq!(wit.to_string(), "τ = (1 2 3), i₀ = 1");
}

#[test]
fn bound_chain_examples() {
    let t = tuple(vec![ideal(2, &[&[4, 0]]), ideal(2, &[&[0, 2]])]);
    let c = bound_chain(&t, &w(&[1, 4])).unwrap();
    assert_eq!(c.value_bound, q(8, 1));
    assert_eq!(c.witness, None);
    assert!(c.hypotheses_hold());
    assert!(!c.is_exact());
    let l = loj_set(&t, &MonomialIdeal::maximal(2), &LojSetOptions::default()).unwrap();
    assert_eq!(l.value, fq(4, 1));

    let f = poly("x^12 + y^6 + z^4", 3);
    let c = bound_chain(&gradient_ideals(&f).unwrap(), &w(&[1, 2, 3])).unwrap();
    assert_eq!(c.value_bound, q(11, 1));
    assert!(c.is_exact());

    let m = IdealTuple::diagonal(&MonomialIdeal::maximal(2)).unwrap();
    let c = bound_chain(&m, &w(&[1, 1])).unwrap();
    assert_eq!(c.value_bound, q(1, 1));
    assert!(c.is_exact());
}

#[test]
fn bound_chain_reports_failed_hypotheses() {
    // w = (3,1): degrees 4 and 5 give 𝒜₄, 𝒜₅ with infinite σ
    let t = tuple(vec![
        ideal(2, &[&[1, 1], &[0, 4]]),
        ideal(2, &[&[1, 2], &[0, 5]]),
    ]);
    let c = bound_chain(&t, &w(&[3, 1])).unwrap();
    assert!(!c.hypotheses_hold());
    assert!(!c.is_exact());
}

#[test]
fn set_exponent_of_pure_powers() {
    let t = tuple(vec![ideal(2, &[&[4, 0]]), ideal(2, &[&[0, 2]])]);
    let m = MonomialIdeal::maximal(2);
    for s in 1..=4u32 {
        assert_eq!(r_number(&t.power(s).unwrap(), &m).unwrap(), 4 * s as u64);
    }
    let full = loj_set(
        &t,
        &m,
        &LojSetOptions {
            s_max: Some(4),
            weights: None,
        },
    )
    .unwrap();
    assert_eq!(full.value, fq(4, 1));
    assert_eq!(full.search_trace.len(), 1);
}

#[test]
fn set_exponent_with_matching() {
    let f = poly("x^12 + y^6 + z^4", 3);
    let t = gradient_ideals(&f).unwrap();
    let opts = LojSetOptions {
        s_max: None,
        weights: Some(w(&[1, 2, 3])),
    };
    let r = loj_set(&t, &MonomialIdeal::maximal(3), &opts).unwrap();
    assert_eq!(r.value, fq(11, 1));
    assert_eq!(r.certificate.name(), "ExactByMatching");
    assert!(r.trace_minimum().unwrap() >= &q(11, 1));
}

#[test]
fn set_exponent_rejects_infinite_sigma() {
    let t = tuple(vec![
        ideal(2, &[&[1, 1], &[0, 4]]),
        ideal(2, &[&[1, 2], &[0, 5]]),
    ]);
    assert!(matches!(
        loj_set(&t, &MonomialIdeal::maximal(2), &LojSetOptions::default()),
        Err(Error::InfiniteColength(_))
    ));
}

#[test]
fn isolated_singularity_corpus() {
    let cases = [
        ("x^2 + y^3", 2, vec![3, 2], true),
        ("x^2*y", 2, vec![1, 1], false),
        ("x1*x3 + x2^2 + x1^2*x2", 3, vec![1, 2, 3], true),
        (
            "x1^12 + x2^4*x4 + x4^3 + x3^2*x5 + x5^2",
            5,
            vec![1, 2, 3, 4, 6],
            true,
        ),
    ];
    for (f, n, ws, want) in cases {
        assert_eq!(
            is_isolated_singularity(&poly(f, n), &w(&ws)).unwrap(),
            want,
            "{f}"
        );
    }
    assert!(matches!(
        is_isolated_singularity(&poly("x^2 + y^3", 2), &w(&[1, 1])),
        Err(Error::Hypothesis(_))
    ));
}

#[test]
fn gradient_exponent_examples() {
    let opts = GradientOptions::default();
    let r = loj_gradient(&poly("x1*x3 + x2^2 + x1^2*x2", 3), &w(&[1, 2, 3]), &opts).unwrap();
    assert_eq!(r.value, fq(1, 1));
    assert!(r.certificate.is_exact());
    assert_eq!(r.determinacy, Some(2));

    let r = loj_gradient(&poly("x^12 + y^6 + z^4", 3), &w(&[1, 2, 3]), &opts).unwrap();
    assert_eq!(r.value, fq(11, 1));
    assert_eq!(r.certificate.name(), "ExactByMatching");
    assert_eq!(r.determinacy, Some(12));

    let f = poly("x^16 + y^8 + x*z^5", 3);
    let r = loj_gradient(&f, &w(&[1, 2, 3]), &opts).unwrap();
    assert_eq!(r.value, fq(15, 1));
    assert_eq!(r.certificate.name(), "ExactByKOP");
    assert_eq!(r.determinacy, Some(16));
    assert_eq!(
        check_w_matching(&gradient_ideals(&f).unwrap(), &w(&[1, 2, 3])).unwrap(),
        None
    );

    let r = loj_gradient(&five_variable_f(), &w(&[1, 2, 3, 4, 6]), &opts).unwrap();
    assert_eq!(r.value, fq(11, 1));
    assert_eq!(r.certificate.name(), "ExactByDivisibility");
}

#[test]
fn gradient_input_errors() {
    let opts = GradientOptions::default();
    assert!(matches!(
        loj_gradient(&poly("x^2*y", 2), &w(&[1, 1]), &opts),
        Err(Error::Hypothesis(_))
    ));
    let declared = GradientOptions {
        degree: Some(5),
        ..GradientOptions::default()
    };
    assert!(matches!(
        loj_gradient(&poly("x^2 + y^2", 2), &w(&[1, 1]), &declared),
        Err(Error::InvalidArgument(_))
    ));
    assert!(loj_gradient(&poly("x^2 + y^2 + 1", 2), &w(&[1, 1]), &opts).is_err());
}

#[test]
fn kop_examples() {
    assert_eq!(
        kop_reference_formula(&w(&[1, 2, 3]), 16).unwrap(),
        Some(q(15, 1))
    );
    assert_eq!(
        kop_reference_formula(&w(&[1, 1, 1]), 3).unwrap(),
        Some(q(2, 1))
    );
    assert_eq!(kop_reference_formula(&w(&[1, 2, 3]), 4).unwrap(), None);
    assert!(kop_reference_formula(&w(&[1, 2]), 4).is_err());
}

#[test]
fn five_variable_transform() {
    let ws = w(&[1, 2, 3, 4, 6]);
    let t = matching_coordinate_change(&five_variable_f(), &ws, 3).unwrap();
    let (a, b) = (t.change.coefficients[3][1], t.change.coefficients[4][2]);
    assert!(a > 0 && b > 0);
    for (j, row) in t.change.coefficients.iter().enumerate() {
        for (i, &c) in row.iter().enumerate() {
            if (j, i) != (3, 1) && (j, i) != (4, 2) {
                assert_eq!(c, 0);
            }
        }
    }
    assert_eq!(t.change.h[3], poly(&format!("{a}*x2^2"), 5));
    assert_eq!(t.change.h[4], poly(&format!("{b}*x3^2"), 5));
    let (a, b) = (a as i64, b as i64);
    assert_eq!(t.g.coefficient(&ev(&[0, 6, 0, 0, 0])), q(a + a * a * a, 1));
    assert_eq!(t.g.coefficient(&ev(&[0, 0, 4, 0, 0])), q(b + b * b, 1));
    let class = t.g.weighted_classification(&ws).unwrap();
    assert!(class.is_weighted_homogeneous && class.is_convenient);
    assert_eq!(class.degree, 12);
    assert!(check_w_matching(&gradient_ideals(&t.g).unwrap(), &ws)
        .unwrap()
        .is_some());
}

#[test]
fn trivial_and_planar_transforms() {
    let f = poly("x^2 + y^2", 2);
    let t = matching_coordinate_change(&f, &w(&[1, 1]), 0).unwrap();
    assert_eq!(t.g, f);
    assert!(t.change.h.iter().all(|h| h.is_zero()));

    let t = matching_coordinate_change(&poly("x*y", 2), &w(&[1, 1]), 0).unwrap();
    let a = t.change.coefficients[0][1] as i64;
    let b = t.change.coefficients[1][0] as i64;
    let want = poly(&format!("{b}*x^2 + {}*x*y + {a}*y^2", 1 + a * b), 2);
    assert_eq!(t.g, want);

    assert!(matches!(
        matching_coordinate_change(&poly("x1*x3 + x2^2 + x1^2*x2", 3), &w(&[1, 2, 3]), 0),
        Err(Error::Hypothesis(_))
    ));
}

fn arb_finite_ideal(dim: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    (
        prop::collection::vec(1..=max_exp, dim),
        prop::collection::vec(prop::collection::vec(0..=max_exp, dim), 0..4),
    )
        .prop_map(move |(pure, extra)| {
            let mut gens: Vec<ExponentVector> = pure
                .iter()
                .enumerate()
                .map(|(i, &e)| ExponentVector::pure(dim, i, e))
                .collect();
            gens.extend(
                extra
                    .into_iter()
                    .filter(|g| g.iter().any(|&e| e > 0))
                    .map(ExponentVector::new),
            );
            MonomialIdeal::new(dim, gens).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn duality_with_the_asymptotic_order(i in arb_finite_ideal(3, 6)) {
        let l = loj_monomial_ideal(&i).unwrap().value.finite().unwrap();
        let m = OrderArgument::Ideal(MonomialIdeal::maximal(3));
        let nu = asymptotic_order(&i, &m, OrderMode::Asymptotic).unwrap().finite().unwrap();
        prop_assert_eq!(l.clone() * nu, q(1, 1));
        prop_assert_eq!(loj_relative_ideal(&i, &MonomialIdeal::maximal(3)).unwrap(), l);
    }

    #[test]
    fn diagonal_tuple_matches_the_ideal(i in arb_finite_ideal(2, 5)) {
        let t = IdealTuple::diagonal(&i).unwrap();
        let r = loj_set(&t, &MonomialIdeal::maximal(2), &LojSetOptions::default()).unwrap();
        prop_assert_eq!(r.value, loj_monomial_ideal(&i).unwrap().value);
        prop_assert!(r.certificate.is_exact());
    }

    #[test]
    fn plain_order_is_at_most_asymptotic(i in arb_finite_ideal(2, 4), k in prop::collection::vec(0u32..9, 2), s in 1u32..4) {
        let k = ExponentVector::new(k);
        let plain = asymptotic_order(&i, &OrderArgument::Monomial(k.clone()), OrderMode::Plain).unwrap();
        let asym = asymptotic_order(&i, &OrderArgument::Monomial(k.clone()), OrderMode::Asymptotic).unwrap();
        prop_assert!(plain <= asym);
        // ν(h^s)/s never exceeds ν̄(h)
        let ps = asymptotic_order(&i, &OrderArgument::Monomial(k.scale(s)), OrderMode::Plain).unwrap().finite().unwrap();
        prop_assert!(ps / BigRational::from_integer(s.into()) <= asym.finite().unwrap());
    }

    #[test]
    fn planar_matching_criterion(w1 in 1u64..4, dw in 1u64..4, j1 in arb_finite_ideal(2, 6), j2 in arb_finite_ideal(2, 6)) {
        let ws = w(&[w1, w1 + dw]);
        let t = tuple(vec![j1, j2]);
        let r1 = t.entries()[0].weighted_degree(&ws).unwrap().finite().unwrap();
        let r2 = t.entries()[1].weighted_degree(&ws).unwrap().finite().unwrap();
        prop_assume!(r1 > r2);
        let w2 = ws.get(1);
        let criterion = r2 % w2 == 0 && t.entries()[1].contains(&ExponentVector::pure(2, 1, (r2 / w2) as u32));
        prop_assert_eq!(check_w_matching(&t, &ws).unwrap().is_some(), criterion);
    }
}

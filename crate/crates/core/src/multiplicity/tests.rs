use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::geometry::filtration_pieces;
use crate::poly::Weights;

fn ev(v: &[u32]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

fn ideal(dim: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(dim, gens.iter().map(|g| ev(g))).unwrap()
}

fn tuple(entries: Vec<MonomialIdeal>) -> IdealTuple {
    IdealTuple::new(entries).unwrap()
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn fin(n: i64) -> Extended<BigInt> {
    Extended::Finite(big(n))
}

#[test]
fn colength_examples() {
    assert_eq!(colength(&MonomialIdeal::maximal(2)).unwrap(), fin(1));
    assert_eq!(
        colength(&MonomialIdeal::maximal_power(2, 2)).unwrap(),
        fin(3)
    );
    assert_eq!(
        colength(&MonomialIdeal::pure_powers(&[3, 2])).unwrap(),
        fin(6)
    );
    assert_eq!(
        colength(&ideal(2, &[&[1, 1], &[0, 4]])).unwrap(),
        Extended::Infinity
    );
    assert_eq!(colength(&MonomialIdeal::unit(3)).unwrap(), fin(0));
    assert_eq!(
        colength(&MonomialIdeal::maximal_power(3, 3)).unwrap(),
        fin(10)
    );
}

#[test]
fn samuel_examples() {
    let e = |i: &MonomialIdeal| samuel_multiplicity(i).unwrap().value;
    assert_eq!(e(&MonomialIdeal::maximal(2)), fin(1));
    assert_eq!(e(&MonomialIdeal::pure_powers(&[2, 3])), fin(6));
    assert_eq!(e(&MonomialIdeal::maximal_power(3, 2)), fin(8));
    assert!(matches!(
        samuel_multiplicity(&ideal(2, &[&[1, 1], &[0, 4]])),
        Err(Error::InfiniteColength(_))
    ));
}

#[test]
fn colength_limit_examples() {
    assert_eq!(
        oracle_colength_limit(&MonomialIdeal::maximal(2)).unwrap(),
        big(1)
    );
    assert_eq!(
        oracle_colength_limit(&MonomialIdeal::pure_powers(&[2, 3])).unwrap(),
        big(6)
    );
    assert_eq!(
        oracle_colength_limit(&MonomialIdeal::pure_powers(&[4, 2])).unwrap(),
        big(8)
    );
}

#[test]
fn mixed_examples() {
    let m = MonomialIdeal::maximal(2);
    let i = MonomialIdeal::pure_powers(&[2, 3]);
    let t = tuple(vec![m.clone(), i.clone()]);
    assert_eq!(mixed_multiplicity(&t).unwrap().value, fin(2));
    assert_eq!(
        samuel_multiplicity(&m.product(&i).unwrap()).unwrap().value,
        fin(11)
    );
    let t = tuple(vec![
        MonomialIdeal::pure_powers(&[2, 2]),
        MonomialIdeal::pure_powers(&[3, 3]),
    ]);
    assert_eq!(mixed_multiplicity(&t).unwrap().value, fin(6));
    let bad = tuple(vec![m, ideal(2, &[&[1, 0]])]);
    assert!(matches!(
        mixed_multiplicity(&bad),
        Err(Error::InfiniteColength(_))
    ));
}

#[test]
fn sigma_examples() {
    let w = Weights::new(vec![3, 1]).unwrap();
    let a4 = filtration_pieces(&w, 4).unwrap().a;
    let a5 = filtration_pieces(&w, 5).unwrap().a;
    let s = sigma(&tuple(vec![a4, a5])).unwrap();
    assert_eq!(s.value, Extended::Infinity);

    let s = sigma(&tuple(vec![ideal(2, &[&[1, 0]]), ideal(2, &[&[0, 1]])])).unwrap();
    assert_eq!(s.value, fin(1));
    assert_eq!(s.method, Method::Stabilized);

    let w = Weights::new(vec![1, 2]).unwrap();
    let b2 = filtration_pieces(&w, 2).unwrap().b;
    let b4 = filtration_pieces(&w, 4).unwrap().b;
    assert_eq!(sigma(&tuple(vec![b2, b4])).unwrap().value, fin(4));

    let s = sigma(&tuple(vec![ideal(2, &[&[4, 0]]), ideal(2, &[&[0, 2]])])).unwrap();
    assert_eq!(s.value, fin(8));
}

#[test]
fn sigma_detects_a_repeated_hyperplane() {
    // (x, x, m): the sum has finite colength but no selection does
    let t = tuple(vec![
        ideal(3, &[&[1, 0, 0]]),
        ideal(3, &[&[1, 0, 0]]),
        MonomialIdeal::maximal(3),
    ]);
    assert!(t.sum_ideal().unwrap().has_finite_colength());
    let s = sigma(&t).unwrap();
    assert_eq!(s.value, Extended::Infinity);
    assert_eq!(s.method, Method::Oracle);
}

#[test]
fn starved_subspaces() {
    let t = tuple(vec![
        ideal(3, &[&[1, 0, 0]]),
        ideal(3, &[&[1, 0, 0]]),
        MonomialIdeal::maximal(3),
    ]);
    // only m survives on the (x2, x3) plane
    assert_eq!(starved_subspace(&t), Some(0b110));
    let t = IdealTuple::parse("x2, x3^4, x1^4 | x1^4*x2^2*x3^4 | x2, x1, x3^4").unwrap();
    assert_eq!(starved_subspace(&t), None);
    assert!(matches!(
        oracle_generic_multiplicity(&IdealTuple::parse("x | x | x, y, z").unwrap(), 1),
        Ok(GenericOutcome::Singular { .. })
    ));
}

#[test]
fn sigma_keeps_growing_past_the_cutoff() {
    // x1, x2 reduce to multiples of x3^4 modulo the outer entries, so the
    // monomial contributes 4·4 + 2·4 + 4·1 = 28
    let t = IdealTuple::parse("x2, x3^4, x1^4 | x1^4*x2^2*x3^4 | x2, x1, x3^4").unwrap();
    let m = MonomialIdeal::maximal(3);
    let cutoff = sigma_cutoff(&t).unwrap();
    assert!(rees_sequence_value(&t, &m, cutoff).unwrap() < big(28));
    let s = sigma(&t).unwrap();
    assert_eq!(s.value, fin(28));
    assert_eq!(s.method, Method::Stabilized);
    assert_eq!(rees_sequence_value(&t, &m, 29).unwrap(), big(28));
}

#[test]
fn r_number_examples() {
    let t = tuple(vec![ideal(2, &[&[4, 0]]), ideal(2, &[&[0, 2]])]);
    let m = MonomialIdeal::maximal(2);
    let values: Vec<BigInt> = (1..=5)
        .map(|r| rees_sequence_value(&t, &m, r).unwrap())
        .collect();
    assert_eq!(values, vec![big(1), big(4), big(6), big(8), big(8)]);
    assert_eq!(r_number(&t, &m).unwrap(), 4);

    let w = Weights::new(vec![1, 2]).unwrap();
    let t = tuple(vec![
        filtration_pieces(&w, 2).unwrap().b,
        filtration_pieces(&w, 3).unwrap().b,
    ]);
    let j = MonomialIdeal::pure_powers(&[2, 1]);
    assert_eq!(r_number(&t, &j).unwrap(), 2);

    for k in 1..=4 {
        let t = IdealTuple::diagonal(&MonomialIdeal::maximal_power(2, k)).unwrap();
        assert_eq!(r_number(&t, &m).unwrap(), k as u64);
    }

    let inf = tuple(vec![
        ideal(2, &[&[1, 1], &[0, 4]]),
        ideal(2, &[&[1, 2], &[0, 5]]),
    ]);
    assert!(r_number(&inf, &m).is_err());
    assert!(r_number(&t, &ideal(2, &[&[1, 0]])).is_err());
}

#[test]
fn generic_oracle_examples() {
    let w = Weights::new(vec![3, 1]).unwrap();
    let t = tuple(vec![
        filtration_pieces(&w, 4).unwrap().a,
        filtration_pieces(&w, 5).unwrap().a,
    ]);
    assert!(matches!(
        oracle_generic_multiplicity(&t, 1).unwrap(),
        GenericOutcome::Singular { .. }
    ));
    let t = tuple(vec![ideal(2, &[&[4, 0]]), ideal(2, &[&[0, 2]])]);
    assert_eq!(
        oracle_generic_multiplicity(&t, 1).unwrap(),
        GenericOutcome::Value(big(8))
    );
    let t = IdealTuple::diagonal(&MonomialIdeal::maximal(2)).unwrap();
    assert_eq!(
        oracle_generic_multiplicity(&t, 1).unwrap(),
        GenericOutcome::Value(big(1))
    );
}

#[test]
fn tuple_validation() {
    assert!(IdealTuple::new(vec![]).is_err());
    assert!(IdealTuple::new(vec![MonomialIdeal::maximal(3)]).is_err());
    assert!(IdealTuple::new(vec![MonomialIdeal::maximal(2), MonomialIdeal::zero(2)]).is_err());
    let t = IdealTuple::parse("x^4 | y^2").unwrap();
    assert_eq!(t.entries()[1], ideal(2, &[&[0, 2]]));
}

#[test]
fn bezout_like_products() {
    // σ of homogeneous filtration pieces equals ∏rᵢ/∏wᵢ when every wᵢ divides every rⱼ
    for ws in [vec![1u64, 2], vec![2, 3], vec![1, 1, 2], vec![1, 2, 3]] {
        let w = Weights::new(ws.clone()).unwrap();
        let l: u64 = ws.iter().fold(1, |a, &b| num_integer::lcm(a, b));
        let rs: Vec<u64> = (0..ws.len()).map(|i| l * (1 + (i as u64 % 2))).collect();
        let want = rs.iter().product::<u64>() / w.product();
        let a = tuple(
            rs.iter()
                .map(|&r| filtration_pieces(&w, r).unwrap().a)
                .collect(),
        );
        let b = tuple(
            rs.iter()
                .map(|&r| filtration_pieces(&w, r).unwrap().b)
                .collect(),
        );
        assert_eq!(sigma(&a).unwrap().value, fin(want as i64), "w={w}");
        assert_eq!(sigma(&b).unwrap().value, fin(want as i64), "w={w}");
    }
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
                .map(|(i, &e)| {
                    let mut v = vec![0; dim];
                    v[i] = e;
                    ExponentVector::new(v)
                })
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

fn arb_any_ideal(dim: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, dim), 1..4).prop_map(move |gens| {
        let gens: Vec<ExponentVector> = gens
            .into_iter()
            .filter(|g| g.iter().any(|&e| e > 0))
            .map(ExponentVector::new)
            .collect();
        if gens.is_empty() {
            MonomialIdeal::maximal(dim)
        } else {
            MonomialIdeal::new(dim, gens).unwrap()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn samuel_matches_colength_limit_2d(i in arb_finite_ideal(2, 6)) {
        let e = samuel_multiplicity(&i).unwrap().value.finite().unwrap();
        prop_assert_eq!(e, oracle_colength_limit(&i).unwrap());
    }

    #[test]
    fn samuel_matches_colength_limit_3d(i in arb_finite_ideal(3, 4)) {
        let e = samuel_multiplicity(&i).unwrap().value.finite().unwrap();
        prop_assert_eq!(e, oracle_colength_limit(&i).unwrap());
    }

    #[test]
    fn mixed_is_symmetric_with_diagonal(a in arb_finite_ideal(3, 4), b in arb_finite_ideal(3, 4), c in arb_finite_ideal(3, 4)) {
        let v = |t: Vec<MonomialIdeal>| mixed_multiplicity(&tuple(t)).unwrap().value;
        let base = v(vec![a.clone(), b.clone(), c.clone()]);
        prop_assert_eq!(&base, &v(vec![b.clone(), c.clone(), a.clone()]));
        prop_assert_eq!(&base, &v(vec![c.clone(), a.clone(), b.clone()]));
        prop_assert_eq!(&base, &v(vec![b.clone(), a.clone(), c.clone()]));
        prop_assert_eq!(v(vec![a.clone(); 3]), samuel_multiplicity(&a).unwrap().value);
    }

    #[test]
    fn mixed_of_pure_powers_in_the_plane(a1 in 1u32..8, b1 in 1u32..8, a2 in 1u32..8, b2 in 1u32..8) {
        let t = tuple(vec![MonomialIdeal::pure_powers(&[a1, b1]), MonomialIdeal::pure_powers(&[a2, b2])]);
        let want = (a1 * b2).min(a2 * b1);
        prop_assert_eq!(mixed_multiplicity(&t).unwrap().value, fin(want as i64));
    }

    #[test]
    fn sigma_never_increases_when_entries_grow(a in arb_any_ideal(2, 5), b in arb_any_ideal(2, 5), extra in prop::collection::vec(0u32..4, 2)) {
        let t = tuple(vec![a.clone(), b.clone()]);
        let bigger = a.sum(&MonomialIdeal::new(2, [ExponentVector::new(extra.clone())]).unwrap_or(MonomialIdeal::maximal(2))).unwrap();
        let s = sigma(&t).unwrap().value;
        let s2 = sigma(&tuple(vec![bigger, b])).unwrap().value;
        prop_assert!(s2 <= s);
    }

    #[test]
    fn sigma_matches_generic_oracle(a in arb_any_ideal(2, 4), b in arb_any_ideal(2, 4)) {
        let t = tuple(vec![a, b]);
        let s = sigma(&t).unwrap().value;
        match oracle_generic_multiplicity(&t, 7).unwrap() {
            GenericOutcome::Value(v) => prop_assert_eq!(s, Extended::Finite(v)),
            GenericOutcome::Singular { .. } => prop_assert_eq!(s, Extended::Infinity),
        }
    }

    #[test]
    fn sigma_independent_of_the_auxiliary_ideal(a in arb_any_ideal(2, 4), b in arb_any_ideal(2, 4), pick in 0usize..2) {
        let t = tuple(vec![a, b]);
        if let Extended::Finite(s) = sigma(&t).unwrap().value {
            let j = [MonomialIdeal::maximal_power(2, 2), MonomialIdeal::pure_powers(&[2, 1])][pick].clone();
            // J^r lies between m^{2r} and m^r, so it realizes σ once m^r does
            let r = r_number(&t, &MonomialIdeal::maximal(2)).unwrap();
            prop_assert_eq!(rees_sequence_value(&t, &j, r).unwrap(), s.clone());
            prop_assert_eq!(rees_sequence_value(&t, &j, 2 * r).unwrap(), s);
        }
    }

    #[test]
    fn sequence_is_nondecreasing(a in arb_any_ideal(2, 4), b in arb_any_ideal(2, 4)) {
        let t = tuple(vec![a, b]);
        let m = MonomialIdeal::maximal(2);
        let cutoff = sigma_cutoff(&t).unwrap();
        let vals: Vec<BigInt> = (1..=cutoff + 2).map(|r| rees_sequence_value(&t, &m, r).unwrap()).collect();
        for w in vals.windows(2) {
            prop_assert!(w[0] <= w[1]);
        }
        if let Extended::Finite(s) = sigma(&t).unwrap().value {
            prop_assert!(vals.last().unwrap() <= &s);
            let r = r_number(&t, &m).unwrap();
            prop_assert_eq!(rees_sequence_value(&t, &m, r).unwrap(), s.clone());
            prop_assert_eq!(rees_sequence_value(&t, &m, 3 * r).unwrap(), s.clone());
            if r > 1 {
                prop_assert!(rees_sequence_value(&t, &m, r - 1).unwrap() < s);
            }
        }
    }

    #[test]
    fn r_numbers_scale_with_powers(a in arb_any_ideal(2, 3), b in arb_any_ideal(2, 3), s in 2u32..=3, pick in 0usize..2) {
        let t = tuple(vec![a, b]);
        let j = [MonomialIdeal::maximal(2), MonomialIdeal::pure_powers(&[2, 1])][pick].clone();
        if sigma(&t).unwrap().value.is_finite() {
            let r = r_number(&t, &j).unwrap();
            let r_pow = r_number(&t.power(s).unwrap(), &j).unwrap();
            prop_assert!(r_pow <= s as u64 * r);
            let r_js = r_number(&t, &j.power(s).unwrap()).unwrap();
            prop_assert!(r_js * s as u64 >= r);
        }
    }

    #[test]
    fn sigma_matches_generic_oracle_3d(a in arb_any_ideal(3, 2), b in arb_any_ideal(3, 2), c in arb_any_ideal(3, 2)) {
        let t = tuple(vec![a, b, c]);
        let s = sigma(&t).unwrap().value;
        match oracle_generic_multiplicity(&t, 11).unwrap() {
            GenericOutcome::Value(v) => prop_assert_eq!(s, Extended::Finite(v)),
            GenericOutcome::Singular { .. } => prop_assert_eq!(s, Extended::Infinity),
        }
    }
}

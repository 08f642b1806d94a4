use super::*;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
use proptest::prelude::*;

fn p(s: &str) -> Polynomial {
    s.parse().unwrap()
}

fn ev(v: &[u32]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

fn w(v: &[u64]) -> Weights {
    Weights::new(v.to_vec()).unwrap()
}

#[test]
fn parses_indexed_variables() {
    let f = p("x1*x3 + x2^2 + x1^2*x2");
    assert_eq!(f.dim(), 3);
    let expected: BTreeSet<_> = [ev(&[1, 0, 1]), ev(&[0, 2, 0]), ev(&[2, 1, 0])].into();
    assert_eq!(f.support(), expected);
    assert!(f.terms().all(|(_, c)| c.is_one()));
}

#[test]
fn parses_zero_and_aliases() {
    let z = parse_polynomial("0", Some(3)).unwrap();
    assert!(z.is_zero());
    let f = p("x^12 + y^6 + z^4");
    let expected: BTreeSet<_> = [ev(&[12, 0, 0]), ev(&[0, 6, 0]), ev(&[0, 0, 4])].into();
    assert_eq!(f.support(), expected);
}

#[test]
fn parses_coefficients() {
    let f = p("3/2*x1 - 2x2^3 + 5");
    assert_eq!(f.coefficient(&ev(&[1, 0])), rat_frac(3, 2));
    assert_eq!(f.coefficient(&ev(&[0, 3])), rat(-2));
    assert_eq!(f.constant_term(), rat(5));
    assert_eq!(p("x - x").len(), 0);
}

#[test]
fn parse_errors() {
    assert!(matches!(
        "x1 +".parse::<Polynomial>(),
        Err(Error::Parse { .. })
    ));
    assert!(matches!(
        "x1^-2".parse::<Polynomial>(),
        Err(Error::Parse { .. })
    ));
    assert!(matches!(
        parse_polynomial("x4", Some(3)),
        Err(Error::Parse { .. })
    ));
    assert!(matches!(
        "x1 & x2".parse::<Polynomial>(),
        Err(Error::Parse { position: 3, .. })
    ));
    assert!(matches!(
        "x0".parse::<Polynomial>(),
        Err(Error::Parse { .. })
    ));
}

#[test]
fn canonical_printing() {
    assert_eq!(
        p("x1*x3 + x2^2 + x1^2*x2").to_string(),
        "x1^2*x2 + x1*x3 + x2^2"
    );
    assert_eq!(p("-x + 1/2").to_string(), "-x1 + 1/2");
    assert_eq!(p("0").to_string(), "0");
}

#[test]
fn support_ignores_coefficient() {
    let f = parse_polynomial("3/2*x1", Some(2)).unwrap();
    assert_eq!(f.support(), [ev(&[1, 0])].into());
    assert!(Polynomial::zero(3).support().is_empty());
}

#[test]
fn derivatives() {
    let f = p("x1*x3 + x2^2 + x1^2*x2");
    assert_eq!(
        f.partial_derivative(2).unwrap(),
        parse_polynomial("x1", Some(3)).unwrap()
    );
    assert_eq!(
        f.partial_derivative(0).unwrap(),
        parse_polynomial("x3 + 2*x1*x2", Some(3)).unwrap()
    );
    assert!(Polynomial::zero(3).partial_derivative(0).unwrap().is_zero());
    assert!(matches!(
        f.partial_derivative(3),
        Err(Error::AxisOutOfRange { .. })
    ));
}

#[test]
fn weighted_degrees() {
    let f = p("x1*x3 + x2^2 + x1^2*x2");
    assert_eq!(
        f.weighted_degree(&w(&[1, 2, 3])).unwrap(),
        Extended::Finite(4)
    );
    assert_eq!(
        Polynomial::zero(2).weighted_degree(&w(&[1, 1])).unwrap(),
        Extended::Infinity
    );
    assert_eq!(
        p("x*y").weighted_degree(&w(&[3, 1])).unwrap(),
        Extended::Finite(4)
    );
    assert!(matches!(
        f.weighted_degree(&w(&[1, 1])),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn principal_parts() {
    let x = p("x^2 + x^3");
    assert_eq!(x.principal_part(&w(&[1])).unwrap(), p("x^2"));
    let f = p("x1*x3 + x2^2 + x1^2*x2");
    assert_eq!(f.principal_part(&w(&[1, 2, 3])).unwrap(), f);
    let g = p("x1*x3 + x2^2 + x1^2*x2 + x1^5");
    assert_eq!(g.principal_part(&w(&[1, 2, 3])).unwrap(), f);
    assert!(matches!(
        Polynomial::zero(2).principal_part(&w(&[1, 1])),
        Err(Error::ZeroInput(_))
    ));
}

#[test]
fn substitution_examples() {
    // x4^3 under x4 -> y4 + y2^2
    let f = parse_polynomial("x4^3", Some(5)).unwrap();
    let mut images: Vec<Polynomial> = (0..5).map(|i| Polynomial::variable(5, i)).collect();
    images[3] = parse_polynomial("x4 + x2^2", Some(5)).unwrap();
    let g = f.substitute(&images).unwrap();
    let expected = parse_polynomial("x4^3 + 3*x4^2*x2^2 + 3*x4*x2^4 + x2^6", Some(5)).unwrap();
    assert_eq!(g, expected);

    let id: Vec<Polynomial> = (0..5).map(|i| Polynomial::variable(5, i)).collect();
    assert_eq!(f.substitute(&id).unwrap(), f);

    // x*y under x -> x + a*y, y -> y + b*x, with a = 3, b = 5
    let xy = p("x*y");
    let images = vec![p("x + 3*y"), p("y + 5*x")];
    assert_eq!(xy.substitute(&images).unwrap(), p("5*x^2 + 16*x*y + 3*y^2"));
    assert!(xy.substitute(&images[..1]).is_err());
}

#[test]
fn classification_examples() {
    let f = p("x1^12 + x2^4*x4 + x4^3 + x3^2*x5 + x5^2");
    let c = f.weighted_classification(&w(&[1, 2, 3, 4, 6])).unwrap();
    assert_eq!(
        c,
        WeightedClass {
            degree: 12,
            is_weighted_homogeneous: true,
            is_convenient: false
        }
    );
    let g = p("x^16 + y^8 + x*z^5");
    let c = g.weighted_classification(&w(&[1, 2, 3])).unwrap();
    assert_eq!(
        c,
        WeightedClass {
            degree: 16,
            is_weighted_homogeneous: true,
            is_convenient: false
        }
    );
    let h = p("x^2 + y^3");
    let c = h.weighted_classification(&w(&[3, 2])).unwrap();
    assert_eq!(
        c,
        WeightedClass {
            degree: 6,
            is_weighted_homogeneous: true,
            is_convenient: true
        }
    );
    assert!(p("x^2 + 1").is_convenient().is_err());
}

#[test]
fn weights_parse() {
    let w: Weights = "1, 2,3".parse().unwrap();
    assert_eq!(w.entries(), &[1, 2, 3]);
    assert_eq!(w.product(), 6);
    assert!("1,0".parse::<Weights>().is_err());
    assert!("1,a".parse::<Weights>().is_err());
}

// Derivative at h = 0 of the Lagrange interpolant through (h_j, v_j).
fn interpolated_slope_at_zero(hs: &[BigRational], vs: &[BigRational]) -> BigRational {
    let mut total = BigRational::zero();
    for j in 0..hs.len() {
        let mut denom = BigRational::one();
        for m in 0..hs.len() {
            if m != j {
                denom *= &hs[j] - &hs[m];
            }
        }
        let mut deriv = BigRational::zero();
        for k in 0..hs.len() {
            if k == j {
                continue;
            }
            let mut prod = BigRational::one();
            for m in 0..hs.len() {
                if m != j && m != k {
                    prod *= -hs[m].clone();
                }
            }
            deriv += prod;
        }
        total += &vs[j] * deriv / denom;
    }
    total
}

fn arb_poly(dim: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..4, dim), -5i64..=5), 0..6).prop_map(
        move |terms| {
            Polynomial::from_terms(
                dim,
                terms
                    .into_iter()
                    .map(|(k, c)| (ExponentVector::new(k), rat(c))),
            )
            .unwrap()
        },
    )
}

proptest! {
    #[test]
    fn print_parse_round_trip(f in arb_poly(3)) {
        let text = f.to_string();
        let g = parse_polynomial(&text, Some(3)).unwrap();
        prop_assert_eq!(&g, &f);
        prop_assert_eq!(g.to_string(), text);
    }

    #[test]
    fn weighted_degree_is_additive(f in arb_poly(3), g in arb_poly(3), ws in prop::collection::vec(1u64..5, 3)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let w = Weights::new(ws).unwrap();
        let df = f.weighted_degree(&w).unwrap().finite().unwrap();
        let dg = g.weighted_degree(&w).unwrap().finite().unwrap();
        prop_assert_eq!((&f * &g).weighted_degree(&w).unwrap(), Extended::Finite(df + dg));
    }

    #[test]
    fn principal_part_idempotent(f in arb_poly(3), ws in prop::collection::vec(1u64..5, 3)) {
        prop_assume!(!f.is_zero());
        let w = Weights::new(ws).unwrap();
        let pf = f.principal_part(&w).unwrap();
        prop_assert_eq!(pf.principal_part(&w).unwrap(), pf.clone());
        prop_assert!(pf.is_weighted_homogeneous(&w).unwrap());
    }

    #[test]
    fn substitution_is_a_ring_map(f in arb_poly(2), g in arb_poly(2), a in arb_poly(2), b in arb_poly(2)) {
        let images = vec![a, b];
        let sf = f.substitute(&images).unwrap();
        let sg = g.substitute(&images).unwrap();
        prop_assert_eq!((&f + &g).substitute(&images).unwrap(), &sf + &sg);
        prop_assert_eq!((&f * &g).substitute(&images).unwrap(), &sf * &sg);
    }

    #[test]
    fn derivative_matches_finite_differences(
        f in arb_poly(3),
        pts in prop::collection::vec(prop::collection::vec((-7i64..7, 1i64..5), 3), 5),
        axis in 0usize..3,
    ) {
        let df = f.partial_derivative(axis).unwrap();
        let degree = f.terms().map(|(k, _)| k[axis]).max().unwrap_or(0) as i64;
        for pt in pts {
            let x: Vec<BigRational> = pt.iter().map(|&(n, d)| rat_frac(n, d)).collect();
            let hs: Vec<BigRational> = (0..=degree.max(1)).map(rat).collect();
            let vs: Vec<BigRational> = hs
                .iter()
                .map(|h| {
                    let mut y = x.clone();
                    y[axis] += h;
                    f.evaluate(&y).unwrap()
                })
                .collect();
            prop_assert_eq!(interpolated_slope_at_zero(&hs, &vs), df.evaluate(&x).unwrap());
        }
    }
}

//! Worked examples replayed as golden checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::engine::{
    bound_chain, check_w_matching, gradient_ideals, kop_reference_formula, loj_gradient, loj_set,
    matching_coordinate_change, ExponentResult, GradientOptions, LojSetOptions,
};
use crate::extended::Extended;
use crate::geometry::{filtration_pieces, MonomialIdeal};
use crate::multiplicity::{r_number, sigma, sigma_seeded, IdealTuple};
use crate::poly::{parse_polynomial, ExponentVector, Polynomial, Weights};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Check = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn e2s(e: crate::Error) -> String {
    e.to_string()
}

fn weights(v: &[u64]) -> Result<Weights, String> {
    Weights::new(v.to_vec()).map_err(e2s)
}

fn poly(s: &str, n: usize) -> Result<Polynomial, String> {
    parse_polynomial(s, Some(n)).map_err(e2s)
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn sigma_infinite(seed: u64) -> Check {
    let w = weights(&[3, 1])?;
    let a4 = filtration_pieces(&w, 4).map_err(e2s)?.a;
    let a5 = filtration_pieces(&w, 5).map_err(e2s)?.a;
    let t = IdealTuple::new(vec![a4.clone(), a5.clone()]).map_err(e2s)?;
    let s = sigma_seeded(&t, seed).map_err(e2s)?;
    ensure!(
        s.value == Extended::Infinity,
        "σ(𝒜₄,𝒜₅) = {}, expected ∞",
        s.value
    );
    Ok(format!("σ({a4}, {a5}) = ∞ ({})", s.method))
}

fn bezout_like(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..20 {
        let n = rng.gen_range(2..=3usize);
        let ws: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
        let rs: Vec<u64> = ws.iter().map(|&w| w * rng.gen_range(1..=3u64)).collect();
        let w = weights(&ws)?;
        let mut a = Vec::new();
        let mut b = Vec::new();
        for &r in &rs {
            let p = filtration_pieces(&w, r).map_err(e2s)?;
            a.push(p.a);
            b.push(p.b);
        }
        let want = BigInt::from(rs.iter().product::<u64>() / ws.iter().product::<u64>());
        let sa = sigma(&IdealTuple::new(a).map_err(e2s)?).map_err(e2s)?.value;
        let sb = sigma(&IdealTuple::new(b).map_err(e2s)?).map_err(e2s)?.value;
        ensure!(
            sa == Extended::Finite(want.clone()) && sb == Extended::Finite(want.clone()),
            "case {case}: w = {ws:?}, r = {rs:?}: σ(𝒜) = {sa}, σ(ℬ) = {sb}, expected {want}"
        );
    }
    Ok("20 random (w, r) with wᵢ | rᵢ agree with ∏rᵢ/∏wᵢ".into())
}

fn remark_pure_powers() -> Check {
    let t = IdealTuple::parse("x^4 | y^2").map_err(e2s)?;
    let w = weights(&[1, 4])?;
    let chain = bound_chain(&t, &w).map_err(e2s)?;
    ensure!(
        chain.value_bound == int(8),
        "bound {} ≠ 8",
        chain.value_bound
    );
    ensure!(chain.witness.is_none(), "unexpected w-matching");
    let opts = LojSetOptions {
        s_max: None,
        weights: Some(w),
    };
    let r = loj_set(&t, &MonomialIdeal::maximal(2), &opts).map_err(e2s)?;
    ensure!(
        r.value == Extended::Finite(int(4)),
        "𝓛₀ = {}, expected 4",
        r.value
    );
    Ok("𝓛₀ = 4, bound 8, no w-matching".into())
}

fn five_variable(seed: u64) -> Check {
    let w = weights(&[1, 2, 3, 4, 6])?;
    let f = poly("x1^12 + x2^4*x4 + x4^3 + x3^2*x5 + x5^2", 5)?;
    let t = gradient_ideals(&f).map_err(e2s)?;
    let expected =
        IdealTuple::parse("x1^11 | x2^3*x4 | x3*x5 | x2^4, x4^2 | x3^2, x5").map_err(e2s)?;
    ensure!(t == expected, "gradient ideals {t} differ from {expected}");
    ensure!(
        check_w_matching(&t, &w).map_err(e2s)?.is_none(),
        "unexpected w-matching"
    );
    let tr = matching_coordinate_change(&f, &w, seed).map_err(e2s)?;
    let square = |axis: usize| ExponentVector::pure(5, axis, 2);
    let h = &tr.change.h;
    let only = |j: usize, axis: usize| h[j].len() == 1 && h[j].support().contains(&square(axis));
    ensure!(
        only(3, 1) && only(4, 2),
        "unexpected coordinate change {:?}",
        h
    );
    ensure!(
        h.iter()
            .enumerate()
            .all(|(j, p)| j == 3 || j == 4 || p.is_zero()),
        "extra terms in the coordinate change"
    );
    let class = tr.g.weighted_classification(&w).map_err(e2s)?;
    ensure!(
        class.is_convenient && class.is_weighted_homogeneous,
        "image is not convenient"
    );
    let g_ideals = gradient_ideals(&tr.g).map_err(e2s)?;
    let wit = check_w_matching(&g_ideals, &w).map_err(e2s)?;
    ensure!(wit.is_some(), "image admits no w-matching");
    Ok(format!(
        "x4 ↦ {}, x5 ↦ {}; image matched by {}",
        tr.change.images[3],
        tr.change.images[4],
        wit.unwrap()
    ))
}

fn gradient(f: &str, ws: &[u64], seed: u64) -> Result<ExponentResult, String> {
    let opts = GradientOptions {
        seed,
        ..GradientOptions::default()
    };
    loj_gradient(&poly(f, ws.len())?, &weights(ws)?, &opts).map_err(e2s)
}

fn counterexample(seed: u64) -> Check {
    let r = gradient("x1*x3 + x2^2 + x1^2*x2", &[1, 2, 3], seed)?;
    ensure!(
        r.value == Extended::Finite(int(1)),
        "𝓛₀ = {}, expected 1",
        r.value
    );
    let kop = kop_reference_formula(&weights(&[1, 2, 3])?, 4).map_err(e2s)?;
    ensure!(kop.is_none(), "reference formula applied: {:?}", kop);
    Ok(format!(
        "𝓛₀ = 1 ({}), reference formula inapplicable",
        r.certificate.name()
    ))
}

fn fermat(seed: u64) -> Check {
    let r = gradient("x^12 + y^6 + z^4", &[1, 2, 3], seed)?;
    ensure!(
        r.value == Extended::Finite(int(11)),
        "𝓛₀ = {}, expected 11",
        r.value
    );
    ensure!(
        r.certificate.is_exact(),
        "certificate {} is not exact",
        r.certificate.name()
    );
    Ok(format!("𝓛₀ = 11 ({})", r.certificate.name()))
}

fn kop16(seed: u64) -> Check {
    let r = gradient("x^16 + y^8 + x*z^5", &[1, 2, 3], seed)?;
    ensure!(
        r.value == Extended::Finite(int(15)),
        "𝓛₀ = {}, expected 15",
        r.value
    );
    ensure!(
        r.certificate.name() == "ExactByKOP",
        "certificate {}",
        r.certificate.name()
    );
    let t = gradient_ideals(&poly("x^16 + y^8 + x*z^5", 3)?).map_err(e2s)?;
    ensure!(
        check_w_matching(&t, &weights(&[1, 2, 3])?)
            .map_err(e2s)?
            .is_none(),
        "unexpected w-matching"
    );
    Ok("𝓛₀ = 15 (ExactByKOP), no w-matching".into())
}

fn r_formula() -> Check {
    let w = weights(&[1, 2])?;
    let b2 = filtration_pieces(&w, 2).map_err(e2s)?.b;
    let b3 = filtration_pieces(&w, 3).map_err(e2s)?.b;
    let t = IdealTuple::new(vec![b2, b3]).map_err(e2s)?;
    let j = MonomialIdeal::parse("x^2, y", Some(2)).map_err(e2s)?;
    let mut got = Vec::new();
    for s in 1..=6u64 {
        let r = r_number(&t.power(s as u32).map_err(e2s)?, &j).map_err(e2s)?;
        let want = (3 * s).div_ceil(2);
        ensure!(r == want, "s = {s}: r_J = {r}, expected {want}");
        got.push(r.to_string());
    }
    Ok(format!("r_J for s = 1..6: {}", got.join(", ")))
}

fn determinacy(seed: u64) -> Check {
    let cases: [(&str, &[u64], u64); 3] = [
        ("x1*x3 + x2^2 + x1^2*x2", &[1, 2, 3], 2),
        ("x^12 + y^6 + z^4", &[1, 2, 3], 12),
        ("x^16 + y^8 + x*z^5", &[1, 2, 3], 16),
    ];
    for (f, ws, want) in cases {
        let r = gradient(f, ws, seed)?;
        let floor = r
            .value
            .as_finite()
            .map(|v| v.floor().to_integer())
            .ok_or_else(|| format!("{f}: infinite exponent"))?;
        ensure!(
            r.determinacy == Some(want),
            "{f}: s₀ = {:?}, expected {want}",
            r.determinacy
        );
        ensure!(BigInt::from(want) == floor + 1, "{f}: s₀ ≠ ⌊𝓛₀⌋ + 1");
    }
    Ok("s₀ = 2, 12, 16".into())
}

/// Runs every worked example; one entry per item, in a fixed order.
pub fn worked_examples(seed: u64) -> Vec<CorpusItem> {
    let items: Vec<(&str, Box<dyn Fn() -> Check>)> = vec![
        (
            "sigma-infinite (3,1)",
            Box::new(move || sigma_infinite(seed)),
        ),
        ("bezout-like", Box::new(move || bezout_like(seed))),
        ("remark (1,4)", Box::new(remark_pure_powers)),
        (
            "five-variable transform",
            Box::new(move || five_variable(seed)),
        ),
        (
            "counterexample (1,2,3)",
            Box::new(move || counterexample(seed)),
        ),
        ("fermat", Box::new(move || fermat(seed))),
        ("KOP-16", Box::new(move || kop16(seed))),
        ("r_J formula", Box::new(r_formula)),
        ("determinacy", Box::new(move || determinacy(seed))),
    ];
    items
        .into_iter()
        .map(|(name, check)| {
            let (passed, detail) = match check() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CorpusItem {
                name: name.into(),
                passed,
                detail,
            }
        })
        .collect()
}

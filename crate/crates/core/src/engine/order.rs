use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Certificate, ExponentResult};
use crate::error::{Error, Result};
use crate::extended::Extended;
use crate::geometry::MonomialIdeal;
use crate::poly::{ExponentVector, Polynomial};

/// What `ν̄_I` or `ν_I` is evaluated on.
#[derive(Debug, Clone)]
pub enum OrderArgument {
    Monomial(ExponentVector),
    Polynomial(Polynomial),
    Ideal(MonomialIdeal),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderMode {
    /// `ν̄_I`, the asymptotic Samuel function.
    Asymptotic,
    /// `ν_I(h) = sup{r : h ∈ I^r}`.
    Plain,
}

fn support_of(arg: &OrderArgument) -> Result<Vec<ExponentVector>> {
    Ok(match arg {
        OrderArgument::Monomial(k) => vec![k.clone()],
        OrderArgument::Polynomial(p) => {
            if p.is_zero() {
                return Err(Error::ZeroInput("order of the zero polynomial"));
            }
            p.support().into_iter().collect()
        }
        OrderArgument::Ideal(j) => {
            if j.is_zero() {
                return Err(Error::ZeroInput("order of the zero ideal"));
            }
            j.generators().to_vec()
        }
    })
}

/// `ν̄_I(h)` or `ν_I(h)`, minimized over the support or generators of `h`.
pub fn asymptotic_order(
    ideal: &MonomialIdeal,
    arg: &OrderArgument,
    mode: OrderMode,
) -> Result<Extended<BigRational>> {
    if ideal.is_zero() {
        return Err(Error::ZeroInput("order with respect to the zero ideal"));
    }
    if mode == OrderMode::Plain {
        if let OrderArgument::Polynomial(p) = arg {
            if p.len() > 1 {
                return Err(Error::InvalidArgument(
                    "plain order is only defined here for monomials".into(),
                ));
            }
        }
    }
    let support = support_of(arg)?;
    for k in &support {
        Error::check_dim(ideal.dim(), k.dim())?;
    }
    let gamma = ideal.newton_polyhedron()?;
    let mut best = Extended::Infinity;
    for k in &support {
        let v = match mode {
            OrderMode::Asymptotic => gamma.order_of(k)?,
            OrderMode::Plain => plain_order(ideal, k, &gamma.order_of(k)?),
        };
        best = best.min(v);
    }
    Ok(best)
}

/// Largest `r` with `x^k ∈ I^r`, searching down from `⌊ν̄_I(k)⌋`.
fn plain_order(
    ideal: &MonomialIdeal,
    k: &ExponentVector,
    upper: &Extended<BigRational>,
) -> Extended<BigRational> {
    let upper = match upper {
        Extended::Infinity => return Extended::Infinity,
        Extended::Finite(u) => u.floor().to_integer(),
    };
    let mut memo = HashMap::new();
    let mut r = upper;
    while r > BigInt::zero() {
        let steps: u32 = r.clone().try_into().unwrap_or(u32::MAX);
        if in_power(ideal, k, steps, &mut memo) {
            break;
        }
        r -= 1;
    }
    Extended::Finite(BigRational::from_integer(r))
}

fn in_power(
    ideal: &MonomialIdeal,
    k: &ExponentVector,
    r: u32,
    memo: &mut HashMap<(ExponentVector, u32), bool>,
) -> bool {
    if r == 0 {
        return true;
    }
    if let Some(&v) = memo.get(&(k.clone(), r)) {
        return v;
    }
    let ans = ideal
        .generators()
        .iter()
        .filter_map(|g| k.checked_sub(g))
        .any(|rest| in_power(ideal, &rest, r - 1, memo));
    memo.insert((k.clone(), r), ans);
    ans
}

/// `𝓛₀(J)`: the largest axis intersection of `Γ₊(J)`.
pub fn loj_monomial_ideal(j: &MonomialIdeal) -> Result<ExponentResult> {
    if j.is_zero() || !j.has_finite_colength() {
        return Err(Error::InfiniteColength(format!("{j}")));
    }
    let value = (0..j.dim())
        .map(|i| {
            BigRational::from_integer(j.pure_power_exponent(i).expect("finite colength").into())
        })
        .max()
        .expect("nonempty");
    let dual = asymptotic_order(
        j,
        &OrderArgument::Ideal(MonomialIdeal::maximal(j.dim())),
        OrderMode::Asymptotic,
    )?;
    let consistent = match &dual {
        Extended::Finite(d) => (&value * d).is_one(),
        Extended::Infinity => value.is_zero(),
    };
    if !consistent {
        return Err(Error::Inconsistent(format!(
            "axis value {value} is not dual to ν̄(m) = {dual}"
        )));
    }
    Ok(ExponentResult::exact(
        value.clone(),
        Certificate::ExactByAxis { bound: value },
    ))
}

/// `min{p/q : J^p ⊆ closure(I^q)} = 1/ν̄_I(J)`.
pub fn loj_relative_ideal(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<BigRational> {
    Error::check_dim(i.dim(), j.dim())?;
    for x in [i, j] {
        if x.is_zero() || !x.has_finite_colength() {
            return Err(Error::InfiniteColength(format!("{x}")));
        }
    }
    if j.is_unit() {
        return Err(Error::InvalidArgument(
            "relative exponent with respect to the unit ideal".into(),
        ));
    }
    let gi = i.newton_polyhedron()?;
    let gj = j.newton_polyhedron()?;
    let mut best = BigRational::zero();
    for v in gj.vertices() {
        for f in gi.facets() {
            let a = f.value(v.entries());
            // facets of a convenient polyhedron have positive normals, and v ≠ 0
            let ratio = BigRational::new(f.offset.into(), a.into());
            if ratio > best {
                best = ratio;
            }
        }
    }
    Ok(best)
}

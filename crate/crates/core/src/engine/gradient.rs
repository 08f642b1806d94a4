use num_rational::BigRational;
use num_traits::Zero;

use super::{
    check_w_matching, loj_set, matching_coordinate_change, Certificate, ExponentResult,
    LojSetOptions,
};
use crate::error::{Error, Result};
use crate::extended::Extended;
use crate::geometry::MonomialIdeal;
use crate::groebner::{GroebnerBasis, DEFAULT_PAIR_CAP};
use crate::multiplicity::{IdealTuple, DEFAULT_SEED};
use crate::poly::{Polynomial, Weights};

/// Does the weighted homogeneous `p` have an isolated critical point at 0?
///
/// The critical locus is stable under the weighted scaling action, so it
/// is `{0}` exactly when it is finite, which is read off the leading
/// monomials of a Gröbner basis of the partial derivatives.
pub fn is_isolated_singularity(p: &Polynomial, w: &Weights) -> Result<bool> {
    Error::check_dim(p.dim(), w.dim())?;
    if !p.constant_term().is_zero() {
        return Err(Error::InvalidArgument("p(0) must vanish".into()));
    }
    if !p.is_weighted_homogeneous(w)? {
        return Err(Error::Hypothesis(format!(
            "{p} is not weighted homogeneous for w = {w}"
        )));
    }
    let partials: Vec<Polynomial> = p.gradient().into_iter().filter(|q| !q.is_zero()).collect();
    if partials.is_empty() {
        return Ok(false);
    }
    Ok(GroebnerBasis::compute(&partials, DEFAULT_PAIR_CAP)?.has_finite_staircase())
}

/// The monomial ideals `Jᵢ` generated by the supports of `∂f/∂xᵢ`.
pub fn gradient_ideals(f: &Polynomial) -> Result<IdealTuple> {
    let entries = f
        .gradient()
        .iter()
        .map(MonomialIdeal::from_support)
        .collect();
    IdealTuple::new(entries)
}

/// `(d − min w)/min w` for three variables when `d ≥ 2wᵢ` for all `i`.
pub fn kop_reference_formula(w: &Weights, d: u64) -> Result<Option<BigRational>> {
    Error::check_dim(3, w.dim())?;
    if w.entries().iter().all(|&wi| 2 * wi <= d) {
        let m = w.min();
        Ok(Some(BigRational::new((d - m).into(), m.into())))
    } else {
        Ok(None)
    }
}

#[derive(Debug, Clone)]
pub struct GradientOptions {
    /// Skip the isolated-singularity check of the principal part.
    pub assume_isolated: bool,
    /// Expected weighted degree, checked against `d_w(f)`.
    pub degree: Option<u64>,
    pub s_max: Option<u32>,
    pub seed: u64,
}

impl Default for GradientOptions {
    fn default() -> Self {
        GradientOptions {
            assume_isolated: false,
            degree: None,
            s_max: None,
            seed: DEFAULT_SEED,
        }
    }
}

/// Łojasiewicz exponent of the gradient of a semi-weighted homogeneous `f`.
pub fn loj_gradient(f: &Polynomial, w: &Weights, opts: &GradientOptions) -> Result<ExponentResult> {
    Error::check_dim(f.dim(), w.dim())?;
    if !f.constant_term().is_zero() {
        return Err(Error::InvalidArgument("f(0) must vanish".into()));
    }
    let d = match f.weighted_degree(w)? {
        Extended::Finite(d) => d,
        Extended::Infinity => return Err(Error::ZeroInput("f = 0")),
    };
    if let Some(expected) = opts.degree {
        if expected != d {
            return Err(Error::InvalidArgument(format!(
                "declared degree {expected} but d_w(f) = {d}"
            )));
        }
    }
    let p = f.principal_part(w)?;
    if !opts.assume_isolated && !is_isolated_singularity(&p, w)? {
        return Err(Error::Hypothesis(format!(
            "principal part {p} has a non-isolated singularity"
        )));
    }
    if f.gradient().iter().any(|q| q.is_zero()) {
        return Err(Error::Hypothesis(
            "some partial derivative vanishes identically".into(),
        ));
    }
    let tuple = gradient_ideals(f)?;
    if tuple.entries().iter().any(|j| j.is_unit()) {
        return Err(Error::InvalidArgument(
            "f is nonsingular at the origin".into(),
        ));
    }
    let wmin = w.min();
    let value = BigRational::new((d - wmin).into(), wmin.into());
    let degrees: Vec<u64> = w.entries().iter().map(|&wi| d - wi).collect();

    if let Some(witness) = check_w_matching(&tuple, w)? {
        let cert = Certificate::ExactByMatching {
            weights: w.clone(),
            degrees,
            witness,
        };
        return Ok(ExponentResult::exact(value, cert).with_determinacy());
    }

    if w.entries().iter().all(|&wi| d % wi == 0) {
        let t = matching_coordinate_change(&p, w, opts.seed)?;
        let transformed = gradient_ideals(&t.g)?;
        let witness = check_w_matching(&transformed, w)?
            .ok_or_else(|| Error::Inconsistent("convenient image admits no w-matching".into()))?;
        let cert = Certificate::ExactByDivisibility {
            weights: w.clone(),
            degree: d,
            witness,
        };
        return Ok(ExponentResult::exact(value, cert).with_determinacy());
    }

    if f.dim() == 3 && f.is_weighted_homogeneous(w)? {
        if let Some(v) = kop_reference_formula(w, d)? {
            let cert = Certificate::ExactByKOP {
                weights: w.clone(),
                degree: d,
            };
            return Ok(ExponentResult::exact(v, cert).with_determinacy());
        }
    }

    let set_opts = LojSetOptions {
        s_max: opts.s_max,
        weights: None,
    };
    let mut result = loj_set(&tuple, &MonomialIdeal::maximal(f.dim()), &set_opts)?;
    if let Extended::Finite(v) = &result.value {
        if v > &value {
            return Err(Error::Inconsistent(format!(
                "search value {v} exceeds the bound {value}"
            )));
        }
    }
    result = result.with_determinacy();
    Ok(result)
}

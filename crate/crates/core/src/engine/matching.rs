use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::extended::Extended;
use crate::geometry::{filtration_pieces, MonomialIdeal};
use crate::multiplicity::{sigma, IdealTuple};
use crate::poly::{ExponentVector, Weights};

/// A permutation `τ` and index `i₀` (both 0-based) certifying a w-matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingWitness {
    pub tau: Vec<usize>,
    pub i0: usize,
}

impl fmt::Display for MatchingWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tau: Vec<String> = self.tau.iter().map(|t| (t + 1).to_string()).collect();
        write!(f, "τ = ({}), i₀ = {}", tau.join(" "), self.i0 + 1)
    }
}

fn degrees(tuple: &IdealTuple, w: &Weights) -> Result<Vec<u64>> {
    tuple
        .entries()
        .iter()
        .map(|e| match e.weighted_degree(w)? {
            Extended::Finite(d) => Ok(d),
            Extended::Infinity => Err(Error::ZeroInput("zero ideal has no weighted degree")),
        })
        .collect()
}

/// Is `x_i^{r_j/w_i}` a member of `I_j`?
fn pure_member(tuple: &IdealTuple, w: &Weights, r: &[u64], i: usize, j: usize) -> bool {
    let wi = w.get(i);
    if r[j] % wi != 0 {
        return false;
    }
    match u32::try_from(r[j] / wi) {
        Ok(e) => tuple.entries()[j].contains(&ExponentVector::pure(tuple.dim(), i, e)),
        Err(_) => false,
    }
}

/// Augmenting-path search for a perfect matching of `left` into `right`.
fn perfect_matching(
    left: &[usize],
    right: &[usize],
    edge: impl Fn(usize, usize) -> bool,
) -> Option<Vec<(usize, usize)>> {
    let mut owner: Vec<Option<usize>> = vec![None; right.len()];
    fn augment(
        l: usize,
        left: &[usize],
        right: &[usize],
        edge: &dyn Fn(usize, usize) -> bool,
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for (ri, &r) in right.iter().enumerate() {
            if seen[ri] || !edge(left[l], r) {
                continue;
            }
            seen[ri] = true;
            if owner[ri].is_none_or(|o| augment(o, left, right, edge, seen, owner)) {
                owner[ri] = Some(l);
                return true;
            }
        }
        false
    }
    for l in 0..left.len() {
        let mut seen = vec![false; right.len()];
        if !augment(l, left, right, &edge, &mut seen, &mut owner) {
            return None;
        }
    }
    Some(
        owner
            .iter()
            .enumerate()
            .map(|(ri, o)| (left[o.expect("perfect")], right[ri]))
            .collect(),
    )
}

/// Searches for a w-matching of the tuple.
///
/// Candidates for `i₀` (minimal weight) and `τ(i₀)` (maximal degree) are
/// tried in increasing index order; the first perfect matching wins.
pub fn check_w_matching(tuple: &IdealTuple, w: &Weights) -> Result<Option<MatchingWitness>> {
    Error::check_dim(tuple.dim(), w.dim())?;
    let n = tuple.dim();
    let r = degrees(tuple, w)?;
    let rmax = *r.iter().max().expect("nonempty");
    for i0 in w.min_indices() {
        for t0 in (0..n).filter(|&j| r[j] == rmax) {
            let left: Vec<usize> = (0..n).filter(|&i| i != i0).collect();
            let right: Vec<usize> = (0..n).filter(|&j| j != t0).collect();
            if let Some(pairs) =
                perfect_matching(&left, &right, |i, j| pure_member(tuple, w, &r, i, j))
            {
                let mut tau = vec![0; n];
                tau[i0] = t0;
                for (i, j) in pairs {
                    tau[i] = j;
                }
                return Ok(Some(MatchingWitness { tau, i0 }));
            }
        }
    }
    Ok(None)
}

/// The chain `𝓛₀(T) ≤ 𝓛₀(𝒜-tuple) ≤ 𝓛₀(ℬ-tuple) ≤ max rᵢ / min wⱼ` and
/// its hypotheses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundChain {
    pub weights: Weights,
    pub degrees: Vec<u64>,
    pub lower_pieces: Vec<MonomialIdeal>,
    pub upper_pieces: Vec<MonomialIdeal>,
    pub sigma_tuple: Extended<BigInt>,
    pub sigma_lower: Extended<BigInt>,
    pub value_bound: BigRational,
    pub witness: Option<MatchingWitness>,
    /// Failed hypotheses; the bound is only guaranteed when empty.
    pub warnings: Vec<String>,
}

impl BoundChain {
    pub fn hypotheses_hold(&self) -> bool {
        self.warnings.is_empty()
    }

    /// True when the bound is the common exact value of the chain.
    pub fn is_exact(&self) -> bool {
        self.hypotheses_hold() && self.witness.is_some()
    }
}

pub fn bound_chain(tuple: &IdealTuple, w: &Weights) -> Result<BoundChain> {
    Error::check_dim(tuple.dim(), w.dim())?;
    let r = degrees(tuple, w)?;
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for &ri in &r {
        if ri == 0 {
            return Err(Error::InvalidArgument("unit ideal in tuple".into()));
        }
        let p = filtration_pieces(w, ri)?;
        lower.push(p.a);
        upper.push(p.b);
    }
    let mut warnings = Vec::new();
    let sigma_lower = if lower.iter().any(|a| a.is_zero()) {
        warnings.push("some degree piece 𝒜_r is zero".to_string());
        Extended::Infinity
    } else {
        let s = sigma(&IdealTuple::new(lower.clone())?)?.value;
        if !s.is_finite() {
            warnings.push("σ of the 𝒜-tuple is infinite".to_string());
        }
        s
    };
    let sigma_tuple = sigma(tuple)?.value;
    if sigma_lower.is_finite() && sigma_tuple != sigma_lower {
        warnings.push(format!(
            "σ of the tuple ({sigma_tuple}) differs from σ of the 𝒜-tuple ({sigma_lower})"
        ));
    }
    let rmax = *r.iter().max().expect("nonempty");
    let value_bound = BigRational::new(rmax.into(), w.min().into());
    let witness = check_w_matching(tuple, w)?;
    Ok(BoundChain {
        weights: w.clone(),
        degrees: r,
        lower_pieces: lower,
        upper_pieces: upper,
        sigma_tuple,
        sigma_lower,
        value_bound,
        witness,
        warnings,
    })
}

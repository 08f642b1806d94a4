//! Colength, Samuel and mixed multiplicities, Rees' mixed multiplicity σ
//! and r-numbers of monomial ideal tuples.

mod oracle;
#[cfg(test)]
mod tests;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extended::Extended;
use crate::geometry::{MonomialIdeal, NewtonPolyhedron};
use crate::poly::ExponentVector;

pub use oracle::{
    oracle_colength_limit, oracle_generic_multiplicity, GenericOutcome, DEFAULT_SEED,
};

/// How a multiplicity value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Covolume,
    Polarization,
    Stabilized,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Covolume => "covolume",
            Method::Polarization => "polarization",
            Method::Stabilized => "stabilized",
            Method::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityValue {
    pub value: Extended<BigInt>,
    pub method: Method,
}

impl MultiplicityValue {
    fn finite(value: BigInt, method: Method) -> Self {
        MultiplicityValue {
            value: Extended::Finite(value),
            method,
        }
    }
}

/// `n` nonzero monomial ideals in `n` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealTuple {
    entries: Vec<MonomialIdeal>,
}

impl IdealTuple {
    pub fn new(entries: Vec<MonomialIdeal>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::ZeroInput("empty ideal tuple"));
        }
        for e in &entries {
            Error::check_dim(n, e.dim())?;
            if e.is_zero() {
                return Err(Error::ZeroInput("zero ideal in tuple"));
            }
        }
        Ok(IdealTuple { entries })
    }

    /// The tuple `(I, …, I)`.
    pub fn diagonal(ideal: &MonomialIdeal) -> Result<Self> {
        Self::new(vec![ideal.clone(); ideal.dim()])
    }

    /// Parses entries separated by `|`, each a comma-separated list of
    /// monomials; the dimension is the number of entries.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split('|').collect();
        let n = parts.len();
        let mut entries = Vec::with_capacity(n);
        let mut offset = 0;
        for part in parts {
            entries.push(MonomialIdeal::parse(part, Some(n)).map_err(|e| match e {
                Error::Parse { position, message } => Error::Parse {
                    position: position + offset,
                    message,
                },
                other => other,
            })?);
            offset += part.len() + 1;
        }
        Self::new(entries)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[MonomialIdeal] {
        &self.entries
    }

    pub fn power(&self, s: u32) -> Result<Self> {
        Ok(IdealTuple {
            entries: self
                .entries
                .iter()
                .map(|e| e.power(s))
                .collect::<Result<_>>()?,
        })
    }

    pub fn sum_ideal(&self) -> Result<MonomialIdeal> {
        let mut acc = self.entries[0].clone();
        for e in &self.entries[1..] {
            acc = acc.sum(e)?;
        }
        Ok(acc)
    }

    pub fn all_finite_colength(&self) -> bool {
        self.entries.iter().all(|e| e.has_finite_colength())
    }
}

impl fmt::Display for IdealTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Number of standard monomials; `Infinity` iff some axis has no pure power.
pub fn colength(ideal: &MonomialIdeal) -> Result<Extended<BigInt>> {
    colength_capped(ideal, COLENGTH_CAP)
}

const COLENGTH_CAP: u128 = 50_000_000;

pub(crate) fn colength_capped(ideal: &MonomialIdeal, cap: u128) -> Result<Extended<BigInt>> {
    if ideal.is_zero() || !ideal.has_finite_colength() {
        return Ok(Extended::Infinity);
    }
    if ideal.is_unit() {
        return Ok(Extended::Finite(BigInt::zero()));
    }
    let n = ideal.dim();
    let bounds: Vec<u32> = (0..n)
        .map(|i| ideal.pure_power_exponent(i).expect("finite colength"))
        .collect();
    let cells: u128 = bounds[..n - 1].iter().map(|&b| b as u128).product();
    if cells > cap {
        return Err(Error::ResourceCap(format!(
            "colength enumeration over {cells} columns"
        )));
    }
    // count column heights along the last axis
    let last = n - 1;
    let mut total = BigInt::zero();
    let mut k = vec![0u32; last];
    loop {
        let height = ideal
            .generators()
            .iter()
            .filter(|g| (0..last).all(|i| g[i] <= k[i]))
            .map(|g| g[last])
            .min()
            .expect("pure power of the last axis");
        total += height;
        let mut i = 0;
        loop {
            if i == last {
                return Ok(Extended::Finite(total));
            }
            k[i] += 1;
            if k[i] < bounds[i] {
                break;
            }
            k[i] = 0;
            i += 1;
        }
    }
}

/// Exact `covol(Γ)`.
pub fn covolume(gamma: &NewtonPolyhedron) -> Result<BigRational> {
    gamma.covolume()
}

pub fn samuel_multiplicity(ideal: &MonomialIdeal) -> Result<MultiplicityValue> {
    if ideal.is_zero() {
        return Err(Error::ZeroInput("zero ideal"));
    }
    match ideal.newton_polyhedron()?.normalized_covolume() {
        Extended::Finite(v) => Ok(MultiplicityValue::finite(v, Method::Covolume)),
        Extended::Infinity => Err(Error::InfiniteColength(format!("{ideal}"))),
    }
}

pub fn mixed_multiplicity(tuple: &IdealTuple) -> Result<MultiplicityValue> {
    for e in tuple.entries() {
        if !e.has_finite_colength() {
            return Err(Error::InfiniteColength(format!(
                "{e} (use sigma for such tuples)"
            )));
        }
    }
    let reps = tuple
        .entries()
        .iter()
        .map(vertex_set)
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiplicityValue::finite(
        mixed_of_reps(&reps, tuple.dim())?,
        Method::Polarization,
    ))
}

fn vertex_set(ideal: &MonomialIdeal) -> Result<Vec<ExponentVector>> {
    Ok(ideal.newton_polyhedron()?.vertices().to_vec())
}

fn minkowski_points(a: &[ExponentVector], b: &[ExponentVector]) -> Vec<ExponentVector> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x.add(y)))
        .collect()
}

/// Mixed multiplicity of the ideals whose `Γ₊` are spanned by `reps`, by
/// polarization. Each set must meet every axis.
pub(crate) fn mixed_of_reps(reps: &[Vec<ExponentVector>], dim: usize) -> Result<BigInt> {
    let n = reps.len();
    let full = 1usize << n;
    let mut sums: Vec<Option<(Vec<ExponentVector>, BigInt)>> = vec![None; full];
    for level in 1..=n {
        let masks: Vec<usize> = (1..full)
            .filter(|m| m.count_ones() as usize == level)
            .collect();
        let computed: Vec<(usize, (Vec<ExponentVector>, BigInt))> = masks
            .par_iter()
            .map(|&mask| {
                let low = mask.trailing_zeros() as usize;
                let rest = mask & (mask - 1);
                let points = if rest == 0 {
                    reps[low].clone()
                } else {
                    minkowski_points(&sums[rest].as_ref().expect("lower level").0, &reps[low])
                };
                let gamma = NewtonPolyhedron::from_points(dim, points)?;
                let e = gamma.normalized_covolume().finite().ok_or_else(|| {
                    Error::InfiniteColength("product ideal misses an axis".into())
                })?;
                Ok((mask, (gamma.vertices().to_vec(), e)))
            })
            .collect::<Result<_>>()?;
        for (mask, v) in computed {
            sums[mask] = Some(v);
        }
    }
    let mut total = BigInt::zero();
    for (mask, entry) in sums.iter().enumerate().skip(1) {
        let e = &entry.as_ref().expect("all masks").1;
        if (n - mask.count_ones() as usize) % 2 == 0 {
            total += e;
        } else {
            total -= e;
        }
    }
    let fact: BigInt = (1..=n).map(BigInt::from).product();
    if total.is_negative() || !(&total % &fact).is_zero() {
        return Err(Error::Inconsistent(format!(
            "polarization sum {total} is not a nonnegative multiple of {fact}"
        )));
    }
    Ok(total / fact)
}

/// `e(I₁ + J^r, …, Iₙ + J^r)`; `J` must have finite colength.
pub fn rees_sequence_value(tuple: &IdealTuple, j: &MonomialIdeal, r: u64) -> Result<BigInt> {
    Error::check_dim(tuple.dim(), j.dim())?;
    if !j.has_finite_colength() {
        return Err(Error::InfiniteColength(format!("{j}")));
    }
    let reps = tuple
        .entries()
        .iter()
        .map(vertex_set)
        .collect::<Result<Vec<_>>>()?;
    sequence_value_of_reps(&reps, &vertex_set(j)?, r, tuple.dim())
}

fn sequence_value_of_reps(
    reps: &[Vec<ExponentVector>],
    j: &[ExponentVector],
    r: u64,
    dim: usize,
) -> Result<BigInt> {
    let r = u32::try_from(r).map_err(|_| Error::ResourceCap(format!("power {r} too large")))?;
    let jr: Vec<ExponentVector> = j
        .iter()
        .map(|v| {
            v.entries()
                .iter()
                .map(|&e| e.checked_mul(r))
                .collect::<Option<Vec<u32>>>()
                .map(ExponentVector::new)
                .ok_or_else(|| Error::ResourceCap("exponent overflow".into()))
        })
        .collect::<Result<_>>()?;
    let extended: Vec<Vec<ExponentVector>> = reps
        .iter()
        .map(|rep| rep.iter().chain(&jr).cloned().collect())
        .collect();
    mixed_of_reps(&extended, dim)
}

/// Starting point `n·(1 + max vertex coordinate)` of the σ iteration.
pub fn sigma_cutoff(tuple: &IdealTuple) -> Result<u64> {
    let mut max = 0u32;
    for e in tuple.entries() {
        for v in e.newton_polyhedron()?.vertices() {
            max = max.max(v.entries().iter().copied().max().unwrap_or(0));
        }
    }
    Ok(tuple.dim() as u64 * (1 + max as u64))
}

/// A coordinate subspace `L` (as an axis mask) on which fewer than `dim L`
/// entries are not identically zero. Any choice of elements then vanishes
/// on a positive-dimensional subset of `L`, so `σ = ∞`.
pub(crate) fn starved_subspace(tuple: &IdealTuple) -> Option<usize> {
    let n = tuple.dim();
    let supports: Vec<Vec<usize>> = tuple
        .entries()
        .iter()
        .map(|e| {
            e.generators()
                .iter()
                .map(|g| {
                    g.entries()
                        .iter()
                        .enumerate()
                        .filter(|(_, &x)| x > 0)
                        .fold(0usize, |m, (i, _)| m | (1 << i))
                })
                .collect()
        })
        .collect();
    (1usize..1 << n).find(|&mask| {
        let alive = supports
            .iter()
            .filter(|gens| gens.iter().any(|&g| g & !mask == 0))
            .count();
        alive < mask.count_ones() as usize
    })
}

/// Iterations of `r ← v(r) + 1` before the oracle is consulted.
const SIGMA_STEPS: usize = 32;

/// Rees' mixed multiplicity `σ = max_r e(I₁+m^r, …, Iₙ+m^r)`.
pub fn sigma(tuple: &IdealTuple) -> Result<MultiplicityValue> {
    sigma_seeded(tuple, DEFAULT_SEED)
}

/// [`sigma`] with an explicit seed for the generic-element oracle.
///
/// With `v(r) = e(I₁+m^r, …)`, a value `v(r) < r` is final: generic
/// `hᵢ ∈ Iᵢ + m^r` then satisfy `m^r ⊆ m·⟨h⟩`, so dropping their `m^r`
/// parts leaves elements of the `Iᵢ` generating the same ideal, and
/// `σ ≤ v(r) ≤ σ`.
pub fn sigma_seeded(tuple: &IdealTuple, seed: u64) -> Result<MultiplicityValue> {
    if tuple.all_finite_colength() {
        return mixed_multiplicity(tuple);
    }
    let n = tuple.dim();
    if !tuple.sum_ideal()?.has_finite_colength() || starved_subspace(tuple).is_some() {
        return Ok(MultiplicityValue {
            value: Extended::Infinity,
            method: Method::Oracle,
        });
    }
    let reps = tuple
        .entries()
        .iter()
        .map(vertex_set)
        .collect::<Result<Vec<_>>>()?;
    let m = vertex_set(&MonomialIdeal::maximal(n))?;
    let mut r = sigma_cutoff(tuple)?;
    for _ in 0..SIGMA_STEPS {
        let v = sequence_value_of_reps(&reps, &m, r, n)?;
        if v < BigInt::from(r) {
            return Ok(MultiplicityValue::finite(v, Method::Stabilized));
        }
        r = u64::try_from(&v)
            .ok()
            .and_then(|v| v.checked_add(1))
            .ok_or_else(|| Error::ResourceCap(format!("sequence value {v} too large")))?;
    }
    match oracle_generic_multiplicity(tuple, seed)? {
        GenericOutcome::Singular { .. } => Ok(MultiplicityValue {
            value: Extended::Infinity,
            method: Method::Oracle,
        }),
        GenericOutcome::Value(target) => {
            let r = u64::try_from(&target)
                .map_err(|_| Error::ResourceCap("oracle value too large".into()))?
                + 1;
            let v = sequence_value_of_reps(&reps, &m, r, n)?;
            if v == target {
                Ok(MultiplicityValue::finite(v, Method::Stabilized))
            } else {
                Err(Error::Inconsistent(format!(
                    "sequence value {v} at r = {r} differs from generic colength {target}"
                )))
            }
        }
    }
}

const R_SEARCH_CAP: u64 = 1 << 24;

/// Least `r ≥ 1` with `e(I₁+J^r, …, Iₙ+J^r) = σ(T)`.
pub fn r_number(tuple: &IdealTuple, j: &MonomialIdeal) -> Result<u64> {
    let s = sigma(tuple)?;
    match s.value {
        Extended::Finite(v) => r_number_with_sigma(tuple, j, &v),
        Extended::Infinity => Err(Error::InfiniteColength(format!("σ{tuple} is infinite"))),
    }
}

/// [`r_number`] for a known finite `σ`.
///
/// The sequence is nondecreasing in `r`, so the least hit is found by
/// doubling followed by bisection.
pub fn r_number_with_sigma(tuple: &IdealTuple, j: &MonomialIdeal, sigma: &BigInt) -> Result<u64> {
    Error::check_dim(tuple.dim(), j.dim())?;
    if !j.has_finite_colength() {
        return Err(Error::InfiniteColength(format!("{j}")));
    }
    let n = tuple.dim();
    let reps = tuple
        .entries()
        .iter()
        .map(vertex_set)
        .collect::<Result<Vec<_>>>()?;
    let jv = vertex_set(j)?;
    let value = |r: u64| sequence_value_of_reps(&reps, &jv, r, n);

    let mut hi = 1u64;
    loop {
        let v = value(hi)?;
        if &v == sigma {
            break;
        }
        if &v > sigma {
            return Err(Error::Inconsistent(format!(
                "sequence value {v} exceeds σ = {sigma}"
            )));
        }
        if hi >= R_SEARCH_CAP {
            return Err(Error::ResourceCap(format!(
                "r-number search passed {R_SEARCH_CAP}"
            )));
        }
        hi *= 2;
    }
    let mut lo = hi / 2; // value(lo) < σ, or lo = 0
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if &value(mid)? == sigma {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::{bound_chain, loj_relative_ideal, Certificate, ExponentResult, TraceEntry};
use crate::error::{Error, Result};
use crate::extended::Extended;
use crate::geometry::MonomialIdeal;
use crate::multiplicity::{r_number_with_sigma, sigma, IdealTuple};
use crate::poly::Weights;

#[derive(Debug, Clone, Default)]
pub struct LojSetOptions {
    /// Sample `s = 1..=s_max` instead of the default schedule.
    pub s_max: Option<u32>,
    /// Enables the matching certificate (only for `J = m`).
    pub weights: Option<Weights>,
}

/// `{1, …, 2w̄} ∪ {k·w̄ : k ≤ 6}` where `w̄ = w₁⋯wₙ`.
pub fn default_schedule(wbar: u64) -> Vec<u32> {
    let wbar = u32::try_from(wbar.max(1)).unwrap_or(u32::MAX / 6);
    let mut s: BTreeSet<u32> = (1..=2 * wbar).collect();
    s.extend((1..=6).map(|k| k * wbar));
    s.into_iter().collect()
}

/// `𝓛_J(I₁,…,Iₙ) = min_s r_J(I₁^s,…,Iₙ^s)/s`, sampled over a schedule of `s`.
///
/// The search stops as soon as a ratio meets a proven lower bound, either
/// `𝓛_J(I₁+⋯+Iₙ)` or the matching value.
pub fn loj_set(
    tuple: &IdealTuple,
    j: &MonomialIdeal,
    opts: &LojSetOptions,
) -> Result<ExponentResult> {
    Error::check_dim(tuple.dim(), j.dim())?;
    if !j.has_finite_colength() || j.is_zero() {
        return Err(Error::InfiniteColength(format!("{j}")));
    }
    let n = tuple.dim() as u32;
    let sig = match sigma(tuple)?.value {
        Extended::Finite(v) => v,
        Extended::Infinity => return Err(Error::InfiniteColength(format!("σ{tuple} is infinite"))),
    };
    let lower = loj_relative_ideal(&tuple.sum_ideal()?, j)?;

    let mut matching = None;
    if let Some(w) = &opts.weights {
        Error::check_dim(tuple.dim(), w.dim())?;
        if *j == MonomialIdeal::maximal(tuple.dim()) {
            let chain = bound_chain(tuple, w)?;
            if chain.is_exact() {
                let witness = chain.witness.clone().expect("exact chain has a witness");
                matching = Some((
                    chain.value_bound.clone(),
                    Certificate::ExactByMatching {
                        weights: w.clone(),
                        degrees: chain.degrees.clone(),
                        witness,
                    },
                ));
            }
        }
    }
    let target = matching.as_ref().map(|(v, _)| v.clone());

    let schedule = match opts.s_max {
        Some(0) => return Err(Error::InvalidArgument("s_max must be ≥ 1".into())),
        Some(m) => (1..=m).collect(),
        None => default_schedule(opts.weights.as_ref().map_or(1, |w| w.product())),
    };

    let hits = |ratio: &BigRational| ratio == &lower || target.as_ref() == Some(ratio);
    let batch = rayon::current_num_threads().max(1);
    let mut trace: Vec<TraceEntry> = Vec::new();
    'outer: for chunk in schedule.chunks(batch) {
        let entries: Vec<TraceEntry> = chunk
            .par_iter()
            .map(|&s| {
                let ts = tuple.power(s)?;
                let sig_s = &sig * BigInt::from(s).pow(n);
                let r = r_number_with_sigma(&ts, j, &sig_s)?;
                Ok(TraceEntry {
                    s,
                    r,
                    ratio: BigRational::new(r.into(), s.into()),
                })
            })
            .collect::<Result<_>>()?;
        for e in entries {
            let stop = hits(&e.ratio);
            trace.push(e);
            if stop {
                break 'outer;
            }
        }
    }

    for e in &trace {
        if e.ratio < lower || target.as_ref().is_some_and(|t| &e.ratio < t) {
            return Err(Error::Inconsistent(format!(
                "ratio r_{}/{} = {} is below a proven lower bound",
                e.s, e.s, e.ratio
            )));
        }
    }
    for a in &trace {
        for b in &trace {
            if b.s % a.s == 0 && b.r > (b.s / a.s) as u64 * a.r {
                return Err(Error::Inconsistent(format!(
                    "r_{} = {} exceeds {}·r_{} = {}",
                    b.s,
                    b.r,
                    b.s / a.s,
                    a.s,
                    (b.s / a.s) as u64 * a.r
                )));
            }
        }
    }

    let best = trace
        .iter()
        .map(|e| e.ratio.clone())
        .min()
        .expect("nonempty schedule");
    let (value, certificate) = match matching {
        Some((v, c)) => (v, c),
        None if best == lower => (best, Certificate::ExactByAxis { bound: lower }),
        None => (best, Certificate::BestFoundUpperBound),
    };
    Ok(ExponentResult {
        value: Extended::Finite(value),
        certificate,
        search_trace: trace,
        determinacy: None,
    })
}

//! Independent brute-force oracles for multiplicities.

use std::collections::HashMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{colength, IdealTuple};
use crate::error::{Error, Result};
use crate::extended::Extended;
use crate::geometry::MonomialIdeal;
use crate::poly::ExponentVector;

pub const DEFAULT_SEED: u64 = 0x5eed;

const TRIALS: usize = 5;
const COEFF_RANGE: i64 = 1_000_000;
const MAX_POWER: u32 = 60;
/// Largest number of monomials of degree `< N` the truncated algebra may have.
const MAX_TRUNCATED_BASIS: usize = 4_000;

/// Leading coefficient of `k ↦ colength(I^k)`, read off from exact `n`-th
/// finite differences.
///
/// Differences are taken from `k = 1` on and extended until three
/// consecutive ones agree.
pub fn oracle_colength_limit(ideal: &MonomialIdeal) -> Result<BigInt> {
    if ideal.is_zero() || !ideal.has_finite_colength() {
        return Err(Error::InfiniteColength(format!("{ideal}")));
    }
    let n = ideal.dim();
    let binom: Vec<BigInt> = {
        let mut row = vec![BigInt::from(1)];
        for k in 1..=n {
            let prev = &row[k - 1];
            row.push(prev * BigInt::from(n - k + 1) / BigInt::from(k));
        }
        row
    };
    let mut values: Vec<BigInt> = Vec::new();
    let mut power = ideal.clone();
    let mut diffs: Vec<BigInt> = Vec::new();
    for k in 1..=MAX_POWER {
        if k > 1 {
            power = power.product(ideal)?;
        }
        match colength(&power)? {
            Extended::Finite(c) => values.push(c),
            Extended::Infinity => unreachable!("powers keep finite colength"),
        }
        if values.len() > n {
            let base = values.len() - n - 1;
            let mut d = BigInt::from(0);
            for (j, b) in binom.iter().enumerate() {
                let term = b * &values[base + j];
                if (n - j) % 2 == 0 {
                    d += term;
                } else {
                    d -= term;
                }
            }
            diffs.push(d);
            let m = diffs.len();
            if k as usize >= n + 3
                && m >= 3
                && diffs[m - 1] == diffs[m - 2]
                && diffs[m - 2] == diffs[m - 3]
            {
                return Ok(diffs.pop().expect("nonempty"));
            }
        }
    }
    Err(Error::ResourceCap(format!(
        "colength differences of {ideal} did not settle by power {MAX_POWER}"
    )))
}

/// Result of the generic-element oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenericOutcome {
    /// Smallest colength of `⟨g₁,…,gₙ⟩` seen over the trials.
    Value(BigInt),
    /// Every selection has infinite colength, by a dimension count on a
    /// coordinate subspace.
    Singular { evidence: String },
}

/// Colength of `n` random combinations `gᵢ` of the generators of `Iᵢ`.
///
/// The local colength is computed in the truncated algebra `K[x]/m^N`
/// for increasing `N` until two consecutive dimensions agree, at which
/// point `m^N ⊆ ⟨g⟩` by Nakayama. Arithmetic is modulo a 61-bit prime.
/// Fails with [`Error::ResourceCap`] when no trial reaches a plateau.
pub fn oracle_generic_multiplicity(tuple: &IdealTuple, seed: u64) -> Result<GenericOutcome> {
    let sum = tuple.sum_ideal()?;
    if !sum.has_finite_colength() {
        let axis = (0..tuple.dim())
            .find(|&i| sum.pure_power_exponent(i).is_none())
            .expect("some axis is missed");
        return Ok(GenericOutcome::Singular {
            evidence: format!(
                "every element of the tuple lies in {sum}, which vanishes on the x{} axis",
                axis + 1
            ),
        });
    }
    if let Some(mask) = super::starved_subspace(tuple) {
        let axes: Vec<String> = (0..tuple.dim())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| format!("x{}", i + 1))
            .collect();
        return Ok(GenericOutcome::Singular {
            evidence: format!(
                "fewer than {} entries are nonzero on the coordinate subspace of {}",
                axes.len(),
                axes.join(", ")
            ),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<u64> = None;
    for _ in 0..TRIALS {
        let polys: Vec<Vec<(ExponentVector, u64)>> = tuple
            .entries()
            .iter()
            .map(|ideal| {
                ideal
                    .generators()
                    .iter()
                    .map(|g| (g.clone(), to_field(random_coefficient(&mut rng))))
                    .collect()
            })
            .collect();
        match local_colength(&polys, tuple.dim())? {
            Some(c) => best = Some(best.map_or(c, |b| b.min(c))),
            None => {}
        }
    }
    match best {
        Some(b) => Ok(GenericOutcome::Value(BigInt::from(b))),
        None => Err(Error::ResourceCap(format!(
            "no trial reached a plateau in K[x]/m^N within {MAX_TRUNCATED_BASIS} monomials"
        ))),
    }
}

fn random_coefficient(rng: &mut ChaCha8Rng) -> i64 {
    loop {
        let c = rng.gen_range(-COEFF_RANGE..=COEFF_RANGE);
        if c != 0 {
            return c;
        }
    }
}

const P: u64 = (1 << 61) - 1;

fn to_field(c: i64) -> u64 {
    c.rem_euclid(P as i64) as u64
}

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn inv(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, P - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    acc
}

/// Monomials of total degree `< n_trunc`, sorted by degree.
fn truncated_basis(dim: usize, n_trunc: u32) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    for d in 0..n_trunc {
        let mut cur = vec![0u32; dim];
        fill(&mut out, &mut cur, 0, d);
    }
    out
}

fn fill(out: &mut Vec<ExponentVector>, cur: &mut Vec<u32>, i: usize, left: u32) {
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(ExponentVector::new(cur.clone()));
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill(out, cur, i + 1, left - e);
    }
    cur[i] = 0;
}

fn binomial_fits(dim: usize, n_trunc: u32) -> bool {
    // C(n_trunc - 1 + dim, dim) ≤ cap
    let mut c: u128 = 1;
    for k in 1..=dim as u128 {
        c = c * (n_trunc as u128 - 1 + k) / k;
        if c > MAX_TRUNCATED_BASIS as u128 {
            return false;
        }
    }
    true
}

/// `dim K[x]/(⟨g⟩ + m^N)` by row reduction of the multiples `x^a·gᵢ`.
fn truncated_colength(polys: &[Vec<(ExponentVector, u64)>], dim: usize, n_trunc: u32) -> usize {
    let basis = truncated_basis(dim, n_trunc);
    let index: HashMap<&ExponentVector, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    let mut rows: Vec<Vec<(usize, u64)>> = Vec::new();
    for p in polys {
        for a in &basis {
            let mut row: Vec<(usize, u64)> = p
                .iter()
                .filter_map(|(m, c)| index.get(&a.add(m)).map(|&i| (i, *c)))
                .filter(|&(_, c)| c != 0)
                .collect();
            if row.is_empty() {
                continue;
            }
            row.sort_unstable_by_key(|&(i, _)| i);
            rows.push(row);
        }
    }
    rows.sort_by_key(|r| r[0].0);
    for mut row in rows {
        while let Some(&(lead, c)) = row.first() {
            match pivots.get(&lead) {
                Some(piv) => row = axpy(&row, c, piv),
                None => {
                    let ci = inv(c);
                    let normalized = row.iter().map(|&(i, v)| (i, mul(v, ci))).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    basis.len() - pivots.len()
}

/// `row − c·piv`, where `piv` has leading coefficient 1.
fn axpy(row: &[(usize, u64)], c: u64, piv: &[(usize, u64)]) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < piv.len() {
        let take_row = j >= piv.len() || (i < row.len() && row[i].0 < piv[j].0);
        let take_piv = i >= row.len() || (j < piv.len() && piv[j].0 < row[i].0);
        if take_row {
            out.push(row[i]);
            i += 1;
        } else if take_piv {
            out.push((piv[j].0, sub(0, mul(c, piv[j].1))));
            j += 1;
        } else {
            let v = sub(row[i].1, mul(c, piv[j].1));
            if v != 0 {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Local colength, or `None` when no plateau appears below the size cap.
fn local_colength(polys: &[Vec<(ExponentVector, u64)>], dim: usize) -> Result<Option<u64>> {
    let mut prev: Option<usize> = None;
    let mut n_trunc = 1u32;
    while binomial_fits(dim, n_trunc) {
        let c = truncated_colength(polys, dim, n_trunc);
        if prev == Some(c) {
            return Ok(Some(c as u64));
        }
        prev = Some(c);
        n_trunc += 1;
    }
    Ok(None)
}

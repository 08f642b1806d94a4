//! Pieces of the weighted homogeneous filtration induced by a weight vector.

use serde::Serialize;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::poly::{ExponentVector, Weights};

/// `𝒜_r` (monomials of weighted degree exactly `r`) and `ℬ_r` (everything of
/// weighted degree at least `r`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationPieces {
    pub a: MonomialIdeal,
    pub b: MonomialIdeal,
}

/// All `k` with `⟨k,w⟩ = r`.
pub fn degree_piece(w: &Weights, r: u64) -> MonomialIdeal {
    let n = w.dim();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u64, w: &[u64], cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if i + 1 == w.len() {
            if left % w[i] == 0 {
                cur[i] = (left / w[i]) as u32;
                out.push(ExponentVector::new(cur.clone()));
            }
            return;
        }
        for e in 0..=left / w[i] {
            cur[i] = e as u32;
            rec(i + 1, left - e * w[i], w, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, r, w.entries(), &mut cur, &mut out);
    MonomialIdeal::new(n, out).expect("dimension matches")
}

/// Minimal generators of `{h : d_w(h) ≥ r}`, enumerated over the box
/// `∏[0, ⌈r/w_i⌉]`.
pub fn at_least_piece(w: &Weights, r: u64) -> MonomialIdeal {
    let n = w.dim();
    let bounds: Vec<u64> = w.entries().iter().map(|&wi| r.div_ceil(wi)).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(
        i: usize,
        acc: u64,
        r: u64,
        w: &[u64],
        bounds: &[u64],
        cur: &mut Vec<u32>,
        out: &mut Vec<ExponentVector>,
    ) {
        if i == w.len() {
            if acc < r {
                return;
            }
            // minimal: dropping any positive coordinate falls below r
            if (0..w.len()).all(|j| cur[j] == 0 || acc - w[j] < r) {
                out.push(ExponentVector::new(cur.clone()));
            }
            return;
        }
        for e in 0..=bounds[i] {
            cur[i] = e as u32;
            rec(i + 1, acc + e * w[i], r, w, bounds, cur, out);
            if acc + e * w[i] >= r {
                break;
            }
        }
        cur[i] = 0;
    }
    rec(0, 0, r, w.entries(), &bounds, &mut cur, &mut out);
    MonomialIdeal::new(n, out).expect("dimension matches")
}

pub fn filtration_pieces(w: &Weights, r: u64) -> Result<FiltrationPieces> {
    if r < 1 {
        return Err(Error::InvalidArgument(
            "filtration index must be ≥ 1".into(),
        ));
    }
    Ok(FiltrationPieces {
        a: degree_piece(w, r),
        b: at_least_piece(w, r),
    })
}

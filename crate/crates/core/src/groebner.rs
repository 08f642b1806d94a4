//! Buchberger's algorithm over the rationals in graded reverse
//! lexicographic order.
//!
//! Polynomials are kept primitive with integer coefficients. Pairs are
//! pruned with the Gebauer–Möller criteria and the number of S-pair
//! reductions is capped.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{ExponentVector, Polynomial};

pub const DEFAULT_PAIR_CAP: usize = 20_000;

/// Graded reverse lexicographic comparison.
pub fn grevlex(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    match a.total_degree().cmp(&b.total_degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.entries().iter().zip(b.entries()).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Integer polynomial with terms sorted by decreasing grevlex.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Row {
    terms: Vec<(ExponentVector, BigInt)>,
}

impl Row {
    fn from_polynomial(p: &Polynomial) -> Row {
        let lcm_den = p
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut terms: Vec<(ExponentVector, BigInt)> = p
            .terms()
            .map(|(k, c)| {
                (
                    k.clone(),
                    (c * BigRational::from_integer(lcm_den.clone())).to_integer(),
                )
            })
            .collect();
        terms.sort_by(|a, b| grevlex(&b.0, &a.0));
        let mut r = Row { terms };
        r.make_primitive();
        r
    }

    fn to_polynomial(&self, dim: usize) -> Polynomial {
        Polynomial::from_terms(
            dim,
            self.terms
                .iter()
                .map(|(k, c)| (k.clone(), BigRational::from_integer(c.clone()))),
        )
        .expect("consistent dimension")
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &ExponentVector {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn make_primitive(&mut self) {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms.first().is_some_and(|(_, c)| c.is_negative()) {
            g = -g;
        }
        if !g.is_zero() && !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
    }

    /// `a·self − b·x^shift·other`.
    fn combine(&self, a: &BigInt, b: &BigInt, shift: &ExponentVector, other: &Row) -> Row {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted: Vec<(ExponentVector, BigInt)> = other
            .terms
            .iter()
            .map(|(k, c)| (k.add(shift), c * b))
            .collect();
        while i < self.terms.len() || j < shifted.len() {
            let ord = match (self.terms.get(i), shifted.get(j)) {
                (Some(x), Some(y)) => grevlex(&x.0, &y.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push((self.terms[i].0.clone(), &self.terms[i].1 * a));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((shifted[j].0.clone(), -&shifted[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 * a - &shifted[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Row { terms: out }
    }
}

/// Reduces `f` by `basis`; with `full` the tail is reduced as well.
fn reduce(mut f: Row, basis: &[Row], full: bool) -> Row {
    let mut done: Vec<(ExponentVector, BigInt)> = Vec::new();
    'outer: while !f.is_zero() {
        for g in basis {
            if let Some(shift) = f.lm().checked_sub(g.lm()) {
                let l = f.lc().lcm(g.lc());
                let fa = &l / f.lc();
                let gb = &l / g.lc();
                for (_, c) in &mut done {
                    *c = &*c * &fa;
                }
                f = f.combine(&fa, &gb, &shift, g);
                if done.is_empty() {
                    f.make_primitive();
                }
                continue 'outer;
            }
        }
        if !full {
            break;
        }
        done.push(f.terms.remove(0));
    }
    if done.is_empty() {
        return f;
    }
    done.extend(f.terms);
    let mut r = Row { terms: done };
    r.make_primitive();
    r
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: ExponentVector,
}

fn coprime(a: &ExponentVector, b: &ExponentVector) -> bool {
    a.entries()
        .iter()
        .zip(b.entries())
        .all(|(&x, &y)| x == 0 || y == 0)
}

/// A Gröbner basis in grevlex order.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    dim: usize,
    rows: Vec<Row>,
}

impl GroebnerBasis {
    /// Runs Buchberger's algorithm, failing after `pair_cap` S-pair reductions.
    pub fn compute(polys: &[Polynomial], pair_cap: usize) -> Result<Self> {
        let dim = match polys.first() {
            Some(p) => p.dim(),
            None => return Err(Error::ZeroInput("empty generator list")),
        };
        for p in polys {
            Error::check_dim(dim, p.dim())?;
        }
        let mut rows: Vec<Row> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut active: Vec<bool> = Vec::new();
        let mut reductions = 0usize;

        let mut pending: Vec<Row> = polys
            .iter()
            .filter(|p| !p.is_zero())
            .map(Row::from_polynomial)
            .collect();
        pending.sort_by(|a, b| grevlex(a.lm(), b.lm()));

        loop {
            let h = if let Some(p) = pending.pop() {
                let live: Vec<Row> = rows
                    .iter()
                    .zip(&active)
                    .filter(|(_, &a)| a)
                    .map(|(r, _)| r.clone())
                    .collect();
                reduce(p, &live, false)
            } else if let Some(pos) = pairs
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| grevlex(&a.lcm, &b.lcm))
                .map(|(k, _)| k)
            {
                let pair = pairs.swap_remove(pos);
                reductions += 1;
                if reductions > pair_cap {
                    return Err(Error::ResourceCap(format!(
                        "Buchberger passed {pair_cap} S-pair reductions"
                    )));
                }
                let (f, g) = (&rows[pair.i], &rows[pair.j]);
                let sf = pair.lcm.checked_sub(f.lm()).expect("lcm");
                let sg = pair.lcm.checked_sub(g.lm()).expect("lcm");
                let l = f.lc().lcm(g.lc());
                let fa = Row {
                    terms: f
                        .terms
                        .iter()
                        .map(|(k, c)| (k.add(&sf), c * (&l / f.lc())))
                        .collect(),
                };
                let mut s = fa.combine(&BigInt::one(), &(&l / g.lc()), &sg, g);
                s.make_primitive();
                let live: Vec<Row> = rows
                    .iter()
                    .zip(&active)
                    .filter(|(_, &a)| a)
                    .map(|(r, _)| r.clone())
                    .collect();
                reduce(s, &live, false)
            } else {
                break;
            };
            if h.is_zero() {
                continue;
            }
            Self::insert(&mut rows, &mut active, &mut pairs, h);
        }
        let rows: Vec<Row> = rows
            .into_iter()
            .zip(active)
            .filter(|(_, a)| *a)
            .map(|(r, _)| r)
            .collect();
        Ok(GroebnerBasis { dim, rows })
    }

    fn insert(rows: &mut Vec<Row>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: Row) {
        let t = rows.len();
        let lm_h = h.lm().clone();

        // chain criterion on old pairs
        pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && rows[p.i].lm().lcm(&lm_h) != p.lcm
                && rows[p.j].lm().lcm(&lm_h) != p.lcm)
        });

        let mut new: Vec<(Pair, bool)> = (0..t)
            .filter(|&i| active[i])
            .map(|i| {
                let lcm = rows[i].lm().lcm(&lm_h);
                let cp = coprime(rows[i].lm(), &lm_h);
                (Pair { i, j: t, lcm }, cp)
            })
            .collect();
        // drop pairs whose lcm is a proper multiple of another new lcm
        let lcms: Vec<ExponentVector> = new.iter().map(|(p, _)| p.lcm.clone()).collect();
        new.retain(|(p, _)| !lcms.iter().any(|l| l != &p.lcm && l.divides(&p.lcm)));
        // one pair per lcm; none at all if some pair with that lcm is coprime
        let mut kept: Vec<Pair> = Vec::new();
        let mut seen: Vec<ExponentVector> = Vec::new();
        for (p, _) in &new {
            if seen.contains(&p.lcm) {
                continue;
            }
            seen.push(p.lcm.clone());
            if new.iter().any(|(q, cp)| q.lcm == p.lcm && *cp) {
                continue;
            }
            kept.push(p.clone());
        }
        pairs.extend(kept);

        // elements whose leading monomial is a multiple of the new one become redundant
        for i in 0..t {
            if active[i] && lm_h.divides(rows[i].lm()) {
                active[i] = false;
            }
        }
        rows.push(h);
        active.push(true);
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.rows
            .iter()
            .map(|r| r.to_polynomial(self.dim))
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<ExponentVector> {
        self.rows.iter().map(|r| r.lm().clone()).collect()
    }

    /// Normal form of `p` up to a nonzero scalar.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        Error::check_dim(self.dim, p.dim())?;
        if p.is_zero() {
            return Ok(p.clone());
        }
        Ok(reduce(Row::from_polynomial(p), &self.rows, true).to_polynomial(self.dim))
    }

    /// True iff every variable has a pure power among the leading monomials.
    pub fn has_finite_staircase(&self) -> bool {
        (0..self.dim).all(|i| {
            self.rows.iter().any(|r| {
                matches!(r.lm().as_pure_power(), Some((a, _)) if a == i) || r.lm().is_constant()
            })
        })
    }
}

//! Exact multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] is a finite map from [`ExponentVector`]s to nonzero
//! [`BigRational`] coefficients in a fixed number of variables. Variables
//! are indexed from 0 internally and written `x1..xn` (or the aliases
//! `x,y,z,u,v`) in text.

mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extended::Extended;

pub use parse::parse_polynomial;

/// Exponent vector `k = (k1, …, kn)` of the monomial `x^k`.
///
/// Ordered graded-lexicographically: total degree first, then lexicographic
/// with `x1` most significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    /// The pure power `x_axis^exp`.
    pub fn pure(dim: usize, axis: usize, exp: u32) -> Self {
        let mut v = vec![0; dim];
        v[axis] = exp;
        ExponentVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, w: &Weights) -> u64 {
        self.0
            .iter()
            .zip(w.entries())
            .map(|(&k, &wi)| k as u64 * wi)
            .sum()
    }

    /// Componentwise `self ≤ other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, s: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * s).collect())
    }

    /// `lcm(x^self, x^other)`.
    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// `self - other`, when `other` divides `self`.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    /// If this is a pure power `x_i^e` with `e ≥ 1`, returns `(i, e)`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Display for ExponentVector {
    /// Writes the monomial, e.g. `x1^2*x3`, or `1` for the constant.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Vector of positive integer weights `w = (w1, …, wn)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Weights(Vec<u64>);

impl Weights {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("weights must be nonempty".into()));
        }
        if entries.iter().any(|&w| w == 0) {
            return Err(Error::InvalidArgument("weights must be ≥ 1".into()));
        }
        Ok(Weights(entries))
    }

    /// All weights equal to one.
    pub fn unit(dim: usize) -> Self {
        Weights(vec![1; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0[i]
    }

    /// `w̄ = w1⋯wn`.
    pub fn product(&self) -> u64 {
        self.0.iter().product()
    }

    pub fn min(&self) -> u64 {
        *self.0.iter().min().expect("nonempty")
    }

    pub fn max(&self) -> u64 {
        *self.0.iter().max().expect("nonempty")
    }

    /// Indices attaining the minimal weight, ascending.
    pub fn min_indices(&self) -> Vec<usize> {
        let m = self.min();
        (0..self.dim()).filter(|&i| self.0[i] == m).collect()
    }
}

impl TryFrom<Vec<u64>> for Weights {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        Weights::new(v)
    }
}

impl From<Weights> for Vec<u64> {
    fn from(w: Weights) -> Self {
        w.0
    }
}

impl FromStr for Weights {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        let mut pos = 0;
        for part in s.split(',') {
            let t = part.trim();
            let w = t
                .parse::<u64>()
                .map_err(|_| Error::parse(pos, format!("invalid weight `{t}`")))?;
            out.push(w);
            pos += part.len() + 1;
        }
        Weights::new(out)
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Result of [`Polynomial::weighted_classification`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedClass {
    pub degree: u64,
    pub is_weighted_homogeneous: bool,
    pub is_convenient: bool,
}

/// Sparse polynomial with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<ExponentVector, BigRational>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: BigRational) -> Self {
        Self::monomial(ExponentVector::zero(dim), c)
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, BigRational::one())
    }

    pub fn monomial(exp: ExponentVector, c: BigRational) -> Self {
        let dim = exp.dim();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Polynomial { dim, terms }
    }

    /// The coordinate function `x_axis` (0-based).
    pub fn variable(dim: usize, axis: usize) -> Self {
        Self::monomial(ExponentVector::pure(dim, axis, 1), BigRational::one())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, BigRational)>,
    {
        let mut p = Polynomial::zero(dim);
        for (k, c) in terms {
            Error::check_dim(dim, k.dim())?;
            p.add_term(k, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, k: ExponentVector, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, k: &ExponentVector) -> BigRational {
        self.terms.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `supp(p)`: the exponents with nonzero coefficient.
    pub fn support(&self) -> BTreeSet<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&ExponentVector::zero(self.dim))
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.dim);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `x_axis` (0-based).
    pub fn partial_derivative(&self, axis: usize) -> Result<Polynomial> {
        if axis >= self.dim {
            return Err(Error::AxisOutOfRange {
                index: axis,
                dim: self.dim,
            });
        }
        let mut out = Polynomial::zero(self.dim);
        for (k, c) in &self.terms {
            let e = k[axis];
            if e == 0 {
                continue;
            }
            let mut k2 = k.clone();
            k2.0[axis] -= 1;
            out.add_term(k2, c * BigRational::from_integer(BigInt::from(e)));
        }
        Ok(out)
    }

    /// All partial derivatives `∂p/∂x1, …, ∂p/∂xn`.
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.dim)
            .map(|i| self.partial_derivative(i).expect("axis in range"))
            .collect()
    }

    /// `d_w(p) = min{⟨k,w⟩ : k ∈ supp(p)}`, `+∞` for the zero polynomial.
    pub fn weighted_degree(&self, w: &Weights) -> Result<Extended<u64>> {
        Error::check_dim(self.dim, w.dim())?;
        Ok(self.terms.keys().map(|k| k.weighted_degree(w)).min().into())
    }

    /// `p_w(p)`: the terms of minimal weighted degree.
    pub fn principal_part(&self, w: &Weights) -> Result<Polynomial> {
        let d = match self.weighted_degree(w)? {
            Extended::Finite(d) => d,
            Extended::Infinity => return Err(Error::ZeroInput("principal part of 0")),
        };
        Ok(Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.weighted_degree(w) == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        })
    }

    pub fn is_weighted_homogeneous(&self, w: &Weights) -> Result<bool> {
        Ok(match self.weighted_degree(w)? {
            Extended::Finite(d) => self.terms.keys().all(|k| k.weighted_degree(w) == d),
            Extended::Infinity => true,
        })
    }

    /// `true` iff a pure power of every variable occurs in the support.
    pub fn is_convenient(&self) -> Result<bool> {
        if !self.constant_term().is_zero() {
            return Err(Error::InvalidArgument(
                "convenience requires p(0) = 0".into(),
            ));
        }
        let mut hit = vec![false; self.dim];
        for k in self.terms.keys() {
            if let Some((i, _)) = k.as_pure_power() {
                hit[i] = true;
            }
        }
        Ok(hit.into_iter().all(|b| b))
    }

    pub fn weighted_classification(&self, w: &Weights) -> Result<WeightedClass> {
        let degree = match self.weighted_degree(w)? {
            Extended::Finite(d) => d,
            Extended::Infinity => return Err(Error::ZeroInput("classification of 0")),
        };
        Ok(WeightedClass {
            degree,
            is_weighted_homogeneous: self.is_weighted_homogeneous(w)?,
            is_convenient: self.is_convenient()?,
        })
    }

    /// Exact expansion of `p(images[0], …, images[n-1])`.
    ///
    /// The images may live in a different number of variables than `p`,
    /// but must all share one dimension.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        Error::check_dim(self.dim, images.len())?;
        let target = images.first().map(|p| p.dim).unwrap_or(self.dim);
        for img in images {
            Error::check_dim(target, img.dim)?;
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|img| vec![Polynomial::one(target), img.clone()])
            .collect();
        let mut out = Polynomial::zero(target);
        for (k, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in k.entries().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &images[i];
                    cache.push(next);
                }
                term = &term * &cache[e as usize];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        Error::check_dim(self.dim, point.len())?;
        let mut acc = BigRational::zero();
        for (k, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(k.entries()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.dim, rhs.dim, "polynomial dimension mismatch");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.dim, rhs.dim, "polynomial dimension mismatch");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.dim, rhs.dim, "polynomial dimension mismatch");
        let mut out = Polynomial::zero(self.dim);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                out.add_term(k1.add(k2), c1 * c2);
            }
        }
        out
    }
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s, None)
    }
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Canonical form: terms in descending graded-lex order, e.g.
    /// `x1^2*x2 + x1*x3 + x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if k.is_constant() {
                f.write_str(&fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "{}*{k}", fmt_rational(&a))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;

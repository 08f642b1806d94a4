use std::fmt;

use serde::Serialize;

use super::newton::{minimal_elements, NewtonPolyhedron};
use crate::error::{Error, Result};
use crate::extended::Extended;
use crate::poly::{parse_polynomial, ExponentVector, Polynomial, Weights};

/// Monomial ideal, stored as its antichain of minimal generators.
///
/// The empty generator set is the zero ideal; the generator `1` (the zero
/// exponent vector) makes it the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExponentVector>,
    finite_colength: bool,
}

/// Operations accepted by [`ideal_algebra`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Power(u32),
    MaximalIdealPower(u32),
}

impl MonomialIdeal {
    pub fn new(dim: usize, gens: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let gens: Vec<ExponentVector> = gens.into_iter().collect();
        for g in &gens {
            Error::check_dim(dim, g.dim())?;
        }
        Ok(Self::from_checked(dim, gens))
    }

    fn from_checked(dim: usize, gens: Vec<ExponentVector>) -> Self {
        let gens = minimal_elements(gens);
        let mut hit = vec![false; dim];
        let mut unit = false;
        for g in &gens {
            if g.is_constant() {
                unit = true;
            } else if let Some((i, _)) = g.as_pure_power() {
                hit[i] = true;
            }
        }
        let finite_colength = unit || (!gens.is_empty() && hit.into_iter().all(|b| b));
        MonomialIdeal {
            dim,
            gens,
            finite_colength,
        }
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_checked(dim, Vec::new())
    }

    pub fn unit(dim: usize) -> Self {
        Self::from_checked(dim, vec![ExponentVector::zero(dim)])
    }

    /// The maximal ideal `m = ⟨x1, …, xn⟩`.
    pub fn maximal(dim: usize) -> Self {
        Self::maximal_power(dim, 1)
    }

    /// `m^r`, generated by all monomials of total degree `r`.
    pub fn maximal_power(dim: usize, r: u32) -> Self {
        let mut gens = Vec::new();
        let mut cur = vec![0u32; dim];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(ExponentVector::new(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
        }
        if dim > 0 {
            rec(0, r, &mut cur, &mut gens);
        }
        Self::from_checked(dim, gens)
    }

    /// `⟨x1^a1, …, xn^an⟩`.
    pub fn pure_powers(exps: &[u32]) -> Self {
        let dim = exps.len();
        Self::from_checked(
            dim,
            exps.iter()
                .enumerate()
                .map(|(i, &e)| ExponentVector::pure(dim, i, e))
                .collect(),
        )
    }

    /// The ideal generated by the monomials of `supp(p)`.
    pub fn from_support(p: &Polynomial) -> Self {
        Self::from_checked(p.dim(), p.support().into_iter().collect())
    }

    /// The monomial ideal of all lattice points of `Γ₊`, i.e. the integral
    /// closure of the ideal generated by `Γ₊`'s vertices.
    pub fn from_polyhedron(gamma: &NewtonPolyhedron) -> Self {
        if gamma.is_empty() {
            return Self::zero(gamma.dim());
        }
        let dim = gamma.dim();
        let bounds: Vec<u32> = (0..dim)
            .map(|i| gamma.vertices().iter().map(|v| v[i]).max().unwrap_or(0))
            .collect();
        let mut out = Vec::new();
        let mut cur = vec![0u32; dim];
        fn rec(
            i: usize,
            bounds: &[u32],
            cur: &mut Vec<u32>,
            gamma: &NewtonPolyhedron,
            out: &mut Vec<ExponentVector>,
        ) {
            if i == bounds.len() {
                let k = ExponentVector::new(cur.clone());
                if gamma.contains(&k).unwrap_or(false) {
                    out.push(k);
                }
                return;
            }
            for e in 0..=bounds[i] {
                cur[i] = e;
                rec(i + 1, bounds, cur, gamma, out);
            }
        }
        rec(0, &bounds, &mut cur, gamma, &mut out);
        Self::from_checked(dim, out)
    }

    /// Parses a comma-separated list of monomials, e.g. `x^4, y^2`.
    pub fn parse(text: &str, dim: Option<usize>) -> Result<Self> {
        let mut polys = Vec::new();
        let mut offset = 0;
        for part in text.split(',') {
            let p = parse_polynomial(part, dim).map_err(|e| match e {
                Error::Parse { position, message } => Error::Parse {
                    position: position + offset,
                    message,
                },
                other => other,
            })?;
            if p.len() != 1 {
                return Err(Error::parse(
                    offset,
                    format!("`{}` is not a monomial", part.trim()),
                ));
            }
            polys.push(p);
            offset += part.len() + 1;
        }
        let dim = dim.unwrap_or_else(|| polys.iter().map(|p| p.dim()).max().unwrap_or(1));
        let gens = polys
            .into_iter()
            .map(|p| {
                let k = p.terms().next().unwrap().0.entries().to_vec();
                let mut v = vec![0; dim];
                v[..k.len()].copy_from_slice(&k);
                ExponentVector::new(v)
            })
            .collect::<Vec<_>>();
        MonomialIdeal::new(dim, gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Minimal generators, graded-lex.
    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_constant())
    }

    pub fn has_finite_colength(&self) -> bool {
        self.finite_colength
    }

    /// `x^k ∈ I`.
    pub fn contains(&self, k: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(k))
    }

    /// `I ⊆ J`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Smallest `e` with `x_axis^e ∈ I`.
    pub fn pure_power_exponent(&self, axis: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter_map(|g| {
                if g.is_constant() {
                    Some(0)
                } else {
                    g.as_pure_power()
                        .filter(|(i, _)| *i == axis)
                        .map(|(_, e)| e)
                }
            })
            .min()
    }

    /// `d_w(I) = min d_w(g)` over generators.
    pub fn weighted_degree(&self, w: &Weights) -> Result<Extended<u64>> {
        Error::check_dim(self.dim, w.dim())?;
        Ok(self.gens.iter().map(|g| g.weighted_degree(w)).min().into())
    }

    pub fn newton_polyhedron(&self) -> Result<NewtonPolyhedron> {
        NewtonPolyhedron::from_points(self.dim, self.gens.iter().cloned())
    }

    /// Whether `x^k` lies in the integral closure of `I`.
    pub fn closure_membership(&self, k: &ExponentVector) -> Result<bool> {
        Error::check_dim(self.dim, k.dim())?;
        if self.contains(k) {
            return Ok(true);
        }
        self.newton_polyhedron()?.contains(k)
    }

    pub fn integral_closure(&self) -> Result<MonomialIdeal> {
        Ok(Self::from_polyhedron(&self.newton_polyhedron()?))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        Error::check_dim(self.dim, other.dim)?;
        Ok(Self::from_checked(
            self.dim,
            self.gens.iter().chain(&other.gens).cloned().collect(),
        ))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        Error::check_dim(self.dim, other.dim)?;
        Ok(Self::from_checked(
            self.dim,
            self.gens
                .iter()
                .flat_map(|a| other.gens.iter().map(move |b| a.add(b)))
                .collect(),
        ))
    }

    pub fn power(&self, s: u32) -> Result<MonomialIdeal> {
        if s == 0 {
            return Err(Error::InvalidArgument("ideal power must be ≥ 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }
}

/// Dispatches sums, products and powers of monomial ideals.
pub fn ideal_algebra(op: IdealOp, operands: &[MonomialIdeal]) -> Result<MonomialIdeal> {
    let first = operands
        .first()
        .ok_or_else(|| Error::InvalidArgument("no operands".into()))?;
    match op {
        IdealOp::Sum => operands[1..]
            .iter()
            .try_fold(first.clone(), |acc, i| acc.sum(i)),
        IdealOp::Product => operands[1..]
            .iter()
            .try_fold(first.clone(), |acc, i| acc.product(i)),
        IdealOp::Power(s) => first.power(s),
        IdealOp::MaximalIdealPower(r) => {
            if r == 0 {
                return Err(Error::InvalidArgument("power must be ≥ 1".into()));
            }
            Ok(MonomialIdeal::maximal_power(first.dim(), r))
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

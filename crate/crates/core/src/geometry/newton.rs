use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::hull::{convex_hull_prioritized, det, dot, rank};
use crate::error::{Error, Result};
use crate::extended::Extended;
use crate::poly::ExponentVector;

/// Inequality `⟨normal, k⟩ ≥ offset` supporting a facet of `Γ₊`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Facet {
    pub normal: Vec<u64>,
    pub offset: u64,
}

impl Facet {
    pub fn value(&self, k: &[u32]) -> u64 {
        self.normal.iter().zip(k).map(|(a, &x)| a * x as u64).sum()
    }

    /// Bounded facet (strictly positive normal).
    pub fn is_compact(&self) -> bool {
        self.normal.iter().all(|&a| a > 0)
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.normal.iter().map(|v| v.to_string()).collect();
        write!(f, "⟨({}),k⟩ ≥ {}", a.join(","), self.offset)
    }
}

/// Newton polyhedron `Γ₊ = conv(points) + ℝⁿ₊` of a set of lattice points.
///
/// Stores both the vertex set and the nontrivial facet inequalities (those
/// with positive offset; the coordinate inequalities `k_i ≥ 0` are
/// implicit). The empty polyhedron is the Newton polyhedron of the zero
/// ideal or polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NewtonPolyhedron {
    dim: usize,
    vertices: Vec<ExponentVector>,
    facets: Vec<Facet>,
    /// `n!` times the covolume, when every axis is met.
    #[serde(skip)]
    normalized_covolume: Option<BigInt>,
}

/// Minimal elements under the componentwise order, sorted graded-lex.
pub(crate) fn minimal_elements(
    points: impl IntoIterator<Item = ExponentVector>,
) -> Vec<ExponentVector> {
    let mut all: Vec<ExponentVector> = points.into_iter().collect();
    all.sort();
    all.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(all.len());
    for p in all {
        if !kept.iter().any(|k| k.divides(&p)) {
            kept.push(p);
        }
    }
    kept
}

fn to_i64(points: &[ExponentVector]) -> Vec<Vec<i64>> {
    points
        .iter()
        .map(|p| p.entries().iter().map(|&e| e as i64).collect())
        .collect()
}

fn meets_every_axis(minimal: &[ExponentVector], dim: usize) -> bool {
    let mut hit = vec![false; dim];
    for p in minimal {
        if p.is_constant() {
            return true;
        }
        if let Some((i, _)) = p.as_pure_power() {
            hit[i] = true;
        }
    }
    hit.into_iter().all(|b| b)
}

/// Indices of points minimizing a fixed family of positive linear forms,
/// preceded by `extra`. Every minimizer is a vertex of `Γ₊`.
fn directional_minimizers(points: &[Vec<i64>], extra: std::ops::Range<usize>) -> Vec<usize> {
    const FORMS: usize = 128;
    let dim = points.first().map_or(0, |p| p.len());
    let mut out: Vec<usize> = extra.collect();
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    for _ in 0..FORMS {
        let a: Vec<i128> = (0..dim)
            .map(|_| {
                state = state
                    .wrapping_mul(6_364_136_223_846_793_005)
                    .wrapping_add(1_442_695_040_888_963_407);
                1 + ((state >> 33) % 1024) as i128
            })
            .collect();
        let best = points
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| p.iter().zip(&a).map(|(&x, &c)| x as i128 * c).sum::<i128>())
            .map(|(i, _)| i);
        if let Some(i) = best {
            if !out.contains(&i) {
                out.push(i);
            }
        }
    }
    out
}

/// Sum of `|det|` over the simplices of the hull lying on compact facets.
fn compact_volume(hull: &super::hull::Hull, pts: &[Vec<i64>]) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for f in &hull.facets {
        if f.offset <= 0 || !f.normal.iter().all(|&a| a > 0) {
            continue;
        }
        let rows: Vec<Vec<i128>> = f
            .verts
            .iter()
            .map(|&i| pts[i].iter().map(|&v| v as i128).collect())
            .collect();
        total += BigInt::from(det(rows)?.abs());
    }
    Ok(total)
}

impl NewtonPolyhedron {
    /// `Γ₊` of the given points; empty input gives the empty polyhedron.
    pub fn from_points(
        dim: usize,
        points: impl IntoIterator<Item = ExponentVector>,
    ) -> Result<Self> {
        let pts: Vec<ExponentVector> = points.into_iter().collect();
        for p in &pts {
            Error::check_dim(dim, p.dim())?;
        }
        let minimal = minimal_elements(pts);
        if minimal.is_empty() {
            return Ok(Self::empty(dim));
        }
        if minimal[0].is_constant() {
            return Ok(NewtonPolyhedron {
                dim,
                vertices: minimal,
                facets: Vec::new(),
                normalized_covolume: Some(BigInt::zero()),
            });
        }
        if dim == 1 {
            let e = minimal[0][0];
            return Ok(NewtonPolyhedron {
                dim,
                vertices: minimal,
                facets: vec![Facet {
                    normal: vec![1],
                    offset: e as u64,
                }],
                normalized_covolume: Some(BigInt::from(e)),
            });
        }

        let convenient = meets_every_axis(&minimal, dim);
        let mut pts = to_i64(&minimal);
        let m = pts.len();
        if convenient {
            // max + e_i lies strictly above every facet with a positive normal,
            // so these n points leave the compact facets unchanged
            let top: Vec<i64> = (0..dim)
                .map(|i| pts.iter().map(|p| p[i]).max().unwrap_or(0))
                .collect();
            for i in 0..dim {
                let mut q = top.clone();
                q[i] += 1;
                pts.push(q);
            }
        } else {
            for j in 0..m {
                for i in 0..dim {
                    let mut q = pts[j].clone();
                    q[i] += 1;
                    pts.push(q);
                }
            }
        }
        let first = if convenient {
            directional_minimizers(&pts[..m], m..pts.len())
        } else {
            Vec::new()
        };
        let hull =
            convex_hull_prioritized(&pts, &first)?.expect("padded point set is full-dimensional");

        let mut facets = BTreeSet::new();
        for f in &hull.facets {
            if f.offset > 0 && f.normal.iter().all(|&a| a >= 0) {
                facets.insert(Facet {
                    normal: f.normal.iter().map(|&a| a as u64).collect(),
                    offset: f.offset as u64,
                });
            }
        }
        let facets: Vec<Facet> = facets.into_iter().collect();

        let mut vertices = Vec::new();
        for (j, v) in minimal.iter().enumerate() {
            let mut tight: Vec<Vec<i128>> = Vec::new();
            for f in &facets {
                if f.value(v.entries()) == f.offset {
                    tight.push(f.normal.iter().map(|&a| a as i128).collect());
                }
            }
            for i in 0..dim {
                if v[i] == 0 {
                    let mut e = vec![0i128; dim];
                    e[i] = 1;
                    tight.push(e);
                }
            }
            if rank(&tight)? == dim {
                vertices.push(minimal[j].clone());
            }
        }

        let normalized_covolume = if convenient {
            Some(compact_volume(&hull, &pts)?)
        } else {
            None
        };
        debug_assert!(facets.iter().all(|f| {
            let a: Vec<i128> = f.normal.iter().map(|&x| x as i128).collect();
            to_i64(&vertices)
                .iter()
                .all(|v| dot(&a, v).unwrap() >= f.offset as i128)
        }));
        Ok(NewtonPolyhedron {
            dim,
            vertices,
            facets,
            normalized_covolume,
        })
    }

    pub fn empty(dim: usize) -> Self {
        NewtonPolyhedron {
            dim,
            vertices: Vec::new(),
            facets: Vec::new(),
            normalized_covolume: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices in graded-lex order.
    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    /// Facet inequalities with positive offset, sorted by normal.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Whether `Γ₊` meets every coordinate axis.
    pub fn is_convenient(&self) -> bool {
        !self.is_empty() && self.normalized_covolume.is_some()
    }

    /// `k ∈ Γ₊`.
    pub fn contains(&self, k: &ExponentVector) -> Result<bool> {
        Error::check_dim(self.dim, k.dim())?;
        if self.is_empty() {
            return Ok(false);
        }
        Ok(self.facets.iter().all(|f| f.value(k.entries()) >= f.offset))
    }

    /// `r_i = min{r : r·e_i ∈ Γ₊}` for each axis.
    pub fn axis_intersections(&self) -> Result<Vec<Extended<BigRational>>> {
        if self.is_empty() {
            return Err(Error::ZeroInput(
                "axis intersections of the empty polyhedron",
            ));
        }
        Ok((0..self.dim)
            .map(|i| {
                let mut best = BigRational::zero();
                for f in &self.facets {
                    if f.normal[i] == 0 {
                        return Extended::Infinity;
                    }
                    let r = BigRational::new(BigInt::from(f.offset), BigInt::from(f.normal[i]));
                    if r > best {
                        best = r;
                    }
                }
                Extended::Finite(best)
            })
            .collect())
    }

    /// `n!·covol(Γ₊)`, infinite when some axis is missed.
    pub fn normalized_covolume(&self) -> Extended<BigInt> {
        self.normalized_covolume.clone().into()
    }

    /// Exact volume of `ℝⁿ₊ \ Γ₊`.
    pub fn covolume(&self) -> Result<BigRational> {
        match &self.normalized_covolume {
            Some(v) if !self.is_empty() => {
                let fact: BigInt = (1..=self.dim as u64).map(BigInt::from).product();
                Ok(BigRational::new(v.clone(), fact))
            }
            _ => Err(Error::InfiniteColength(
                "covolume requires Γ₊ to meet every axis".into(),
            )),
        }
    }

    /// Asymptotic order `ν̄(x^k) = min_f ⟨a_f,k⟩ / c_f`.
    pub fn order_of(&self, k: &ExponentVector) -> Result<Extended<BigRational>> {
        Error::check_dim(self.dim, k.dim())?;
        if self.is_empty() {
            return Err(Error::ZeroInput("order with respect to the zero ideal"));
        }
        Ok(self
            .facets
            .iter()
            .map(|f| BigRational::new(BigInt::from(f.value(k.entries())), BigInt::from(f.offset)))
            .min()
            .into())
    }

    /// `s·Γ₊`.
    pub fn scaled(&self, s: u32) -> Result<NewtonPolyhedron> {
        if s == 0 {
            return Err(Error::InvalidArgument("scale must be ≥ 1".into()));
        }
        NewtonPolyhedron::from_points(self.dim, self.vertices.iter().map(|v| v.scale(s)))
    }

    /// Minkowski sum `Γ₊(self) + Γ₊(other)`.
    pub fn minkowski_sum(&self, other: &NewtonPolyhedron) -> Result<NewtonPolyhedron> {
        Error::check_dim(self.dim, other.dim)?;
        let pts: Vec<ExponentVector> = self
            .vertices
            .iter()
            .flat_map(|a| other.vertices.iter().map(move |b| a.add(b)))
            .collect();
        NewtonPolyhedron::from_points(self.dim, pts)
    }
}

//! Incremental beneath-beyond convex hull over the integers.
//!
//! The boundary is kept as a list of oriented simplices; coplanar pieces of
//! one facet are not merged here. All arithmetic is exact in `i128` and
//! overflow is reported as a resource error.

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub(crate) struct SimplexFacet {
    /// Indices into the input point slice, sorted.
    pub verts: Vec<usize>,
    /// Primitive inner normal: points of the hull satisfy `normal·x ≥ offset`.
    pub normal: Vec<i128>,
    pub offset: i128,
}

#[derive(Debug, Clone)]
pub(crate) struct Hull {
    pub facets: Vec<SimplexFacet>,
}

fn overflow() -> Error {
    Error::ResourceCap("integer overflow in exact hull arithmetic".into())
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or_else(overflow)
}

fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or_else(overflow)
}

pub(crate) fn dot(a: &[i128], x: &[i64]) -> Result<i128> {
    let mut s: i128 = 0;
    for (ai, &xi) in a.iter().zip(x) {
        s = s.checked_add(mul(*ai, xi as i128)?).ok_or_else(overflow)?;
    }
    Ok(s)
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Fraction-free (Bareiss) determinant.
pub(crate) fn det(mut m: Vec<Vec<i128>>) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return Ok(0);
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = sub(mul(m[i][j], m[k][k])?, mul(m[i][k], m[k][j])?)?;
                m[i][j] = v / prev;
            }
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

/// Normal of the hyperplane through `pts` (exactly `n` points in `R^n`),
/// as the generalized cross product of the edge vectors. Zero if the
/// points are affinely dependent.
fn hyperplane_normal(pts: &[&[i64]]) -> Result<Vec<i128>> {
    let n = pts[0].len();
    let rows: Vec<Vec<i128>> = pts[1..]
        .iter()
        .map(|p| (0..n).map(|j| p[j] as i128 - pts[0][j] as i128).collect())
        .collect();
    let mut normal = Vec::with_capacity(n);
    for j in 0..n {
        let minor: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let d = det(minor)?;
        normal.push(if j % 2 == 0 { d } else { -d });
    }
    let g = normal.iter().fold(0, |g, &v| gcd(g, v));
    if g > 1 {
        for v in &mut normal {
            *v /= g;
        }
    }
    Ok(normal)
}

/// Greedily selects `n + 1` affinely independent points.
fn initial_simplex(points: &[Vec<i64>], n: usize) -> Result<Option<Vec<usize>>> {
    let mut chosen = vec![0usize];
    // echelon rows with their pivot column
    let mut basis: Vec<(usize, Vec<i128>)> = Vec::new();
    for (idx, p) in points.iter().enumerate().skip(1) {
        let mut v: Vec<i128> = (0..n)
            .map(|j| p[j] as i128 - points[0][j] as i128)
            .collect();
        for (piv, row) in &basis {
            if v[*piv] != 0 {
                let (a, b) = (row[*piv], v[*piv]);
                for j in 0..n {
                    v[j] = sub(mul(v[j], a)?, mul(row[j], b)?)?;
                }
                let g = v.iter().fold(0, |g, &x| gcd(g, x));
                if g > 1 {
                    v.iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        if let Some(piv) = v.iter().position(|&x| x != 0) {
            basis.push((piv, v));
            chosen.push(idx);
            if chosen.len() == n + 1 {
                return Ok(Some(chosen));
            }
        }
    }
    Ok(None)
}

fn make_facet(
    points: &[Vec<i64>],
    mut verts: Vec<usize>,
    interior: &[i64],
    scale: i128,
) -> Result<SimplexFacet> {
    verts.sort_unstable();
    let pts: Vec<&[i64]> = verts.iter().map(|&i| points[i].as_slice()).collect();
    let mut normal = hyperplane_normal(&pts)?;
    let mut offset = dot(&normal, &points[verts[0]])?;
    // interior is `scale` times the true interior point
    if dot(&normal, interior)? < mul(offset, scale)? {
        normal.iter_mut().for_each(|v| *v = -*v);
        offset = -offset;
    }
    Ok(SimplexFacet {
        verts,
        normal,
        offset,
    })
}

/// Convex hull of full-dimensional integer point sets. Returns `None` when
/// the points do not span `R^n`.
#[cfg(test)]
pub(crate) fn convex_hull(points: &[Vec<i64>]) -> Result<Option<Hull>> {
    convex_hull_prioritized(points, &[])
}

/// [`convex_hull`] inserting `priority` before the remaining points. Points
/// known to be vertices should go there: a point inserted while the hull is
/// still small may survive as a vertex of the triangulation even when it
/// lies inside a face of the final hull.
pub(crate) fn convex_hull_prioritized(
    points: &[Vec<i64>],
    priority: &[usize],
) -> Result<Option<Hull>> {
    let Some(first) = points.first() else {
        return Ok(None);
    };
    let n = first.len();
    let Some(simplex) = initial_simplex(points, n)? else {
        return Ok(None);
    };
    let mut interior = vec![0i64; n];
    for &i in &simplex {
        for j in 0..n {
            interior[j] = interior[j].checked_add(points[i][j]).ok_or_else(overflow)?;
        }
    }
    let scale = (n + 1) as i128;

    let mut facets = Vec::new();
    for skip in 0..=n {
        let verts: Vec<usize> = simplex
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != skip)
            .map(|(_, &i)| i)
            .collect();
        facets.push(make_facet(points, verts, &interior, scale)?);
    }

    let mut in_simplex = vec![false; points.len()];
    for &i in &simplex {
        in_simplex[i] = true;
    }

    // far points first: corners of flat faces then absorb the points inside them
    let mut order: Vec<(i128, usize)> = Vec::with_capacity(points.len());
    for (idx, p) in points.iter().enumerate() {
        if in_simplex[idx] {
            continue;
        }
        let mut d: i128 = 0;
        for j in 0..n {
            let x = scale * p[j] as i128 - interior[j] as i128;
            d = x
                .checked_mul(x)
                .and_then(|x2| d.checked_add(x2))
                .ok_or_else(overflow)?;
        }
        order.push((-d, idx));
    }
    order.sort_unstable();
    let mut queued = vec![false; points.len()];
    let mut sequence = Vec::with_capacity(points.len());
    for idx in priority
        .iter()
        .copied()
        .chain(order.into_iter().map(|(_, i)| i))
    {
        if !in_simplex[idx] && !queued[idx] {
            queued[idx] = true;
            sequence.push(idx);
        }
    }
    for idx in sequence {
        let p = &points[idx];
        let mut visible = Vec::new();
        for (fi, f) in facets.iter().enumerate() {
            if dot(&f.normal, p)? < f.offset {
                visible.push(fi);
            }
        }
        if visible.is_empty() {
            continue;
        }
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for &fi in &visible {
            let v = &facets[fi].verts;
            for skip in 0..v.len() {
                let ridge: Vec<usize> = v
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &i)| i)
                    .collect();
                *ridges.entry(ridge).or_insert(0) += 1;
            }
        }
        let mut keep = vec![true; facets.len()];
        for &fi in &visible {
            keep[fi] = false;
        }
        let mut next: Vec<SimplexFacet> = facets
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(f, _)| f)
            .collect();
        let mut horizon: Vec<Vec<usize>> = ridges
            .into_iter()
            .filter(|(_, c)| *c == 1)
            .map(|(r, _)| r)
            .collect();
        horizon.sort();
        for mut ridge in horizon {
            ridge.push(idx);
            next.push(make_facet(points, ridge, &interior, scale)?);
        }
        facets = next;
    }
    Ok(Some(Hull { facets }))
}

/// Rank of a set of integer vectors.
pub(crate) fn rank(vectors: &[Vec<i128>]) -> Result<usize> {
    let mut basis: Vec<(usize, Vec<i128>)> = Vec::new();
    for v0 in vectors {
        let mut v = v0.clone();
        for (piv, row) in &basis {
            if v[*piv] != 0 {
                let (a, b) = (row[*piv], v[*piv]);
                for j in 0..v.len() {
                    v[j] = sub(mul(v[j], a)?, mul(row[j], b)?)?;
                }
                let g = v.iter().fold(0, |g, &x| gcd(g, x));
                if g > 1 {
                    v.iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        if let Some(piv) = v.iter().position(|&x| x != 0) {
            basis.push((piv, v));
        }
    }
    Ok(basis.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn volume_x_fact(h: &Hull, pts: &[Vec<i64>]) -> i128 {
        // sum of |det| of cones from the first point over every facet
        // not containing it
        let apex = &pts[0];
        let mut total = 0;
        for f in &h.facets {
            if f.verts.contains(&0) {
                continue;
            }
            let rows: Vec<Vec<i128>> = f
                .verts
                .iter()
                .map(|&i| {
                    (0..apex.len())
                        .map(|j| (pts[i][j] - apex[j]) as i128)
                        .collect()
                })
                .collect();
            total += det(rows).unwrap().abs();
        }
        total
    }

    #[test]
    fn cube_with_interior_and_coplanar_points() {
        let mut pts = Vec::new();
        for x in 0..=2 {
            for y in 0..=2 {
                for z in 0..=2 {
                    pts.push(vec![x, y, z]);
                }
            }
        }
        let h = convex_hull(&pts).unwrap().unwrap();
        // 3! * volume of [0,2]^3
        assert_eq!(volume_x_fact(&h, &pts), 48);
        for f in &h.facets {
            for p in &pts {
                assert!(dot(&f.normal, p).unwrap() >= f.offset);
            }
        }
    }

    #[test]
    fn degenerate_input() {
        let pts = vec![vec![0, 0], vec![1, 1], vec![2, 2]];
        assert!(convex_hull(&pts).unwrap().is_none());
    }

    #[test]
    fn determinant() {
        assert_eq!(det(vec![vec![2, 0], vec![0, 3]]).unwrap(), 6);
        assert_eq!(det(vec![vec![0, 1], vec![1, 0]]).unwrap(), -1);
        assert_eq!(
            det(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]).unwrap(),
            -3
        );
    }
}

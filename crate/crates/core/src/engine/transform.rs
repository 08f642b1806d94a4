use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::extended::Extended;
use crate::poly::{ExponentVector, Polynomial, Weights};

const RETRIES: usize = 16;

/// `x_j = y_j + h_j(y)` with `h_j` weighted homogeneous of degree `w_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateChange {
    pub h: Vec<Polynomial>,
    /// `a[j][i]`, zero when `y_i` does not enter `h_j`.
    pub coefficients: Vec<Vec<u32>>,
    pub images: Vec<Polynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformResult {
    pub change: CoordinateChange,
    /// `f ∘ x`, weighted homogeneous of the same degree and convenient.
    pub g: Polynomial,
}

/// Makes a weighted homogeneous `f` with isolated singularity convenient
/// when every weight divides its degree.
///
/// For each axis `i` lacking a pure power, a monomial `x_k·xᵢ^{mᵢ}` of `f`
/// is chosen and `yᵢ^{w_k/wᵢ}` is mixed into `x_k` with a random
/// coefficient in `1..=97`.
pub fn matching_coordinate_change(
    f: &Polynomial,
    w: &Weights,
    seed: u64,
) -> Result<TransformResult> {
    Error::check_dim(f.dim(), w.dim())?;
    let n = f.dim();
    let d = match f.weighted_degree(w)? {
        Extended::Finite(d) => d,
        Extended::Infinity => return Err(Error::ZeroInput("f = 0")),
    };
    if !f.is_weighted_homogeneous(w)? {
        return Err(Error::Hypothesis(format!(
            "{f} is not weighted homogeneous"
        )));
    }
    if let Some(i) = (0..n).find(|&i| d % w.get(i) != 0) {
        return Err(Error::Hypothesis(format!(
            "w{} = {} does not divide d = {d}",
            i + 1,
            w.get(i)
        )));
    }
    let support = f.support();
    let mut partner: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let wi = w.get(i);
        let pure = ExponentVector::pure(n, i, (d / wi) as u32);
        if support.contains(&pure) {
            continue;
        }
        let k = (0..n)
            .filter(|&k| k != i && (d - w.get(k)) % wi == 0)
            .find(|&k| {
                let mut e = ExponentVector::pure(n, i, ((d - w.get(k)) / wi) as u32)
                    .entries()
                    .to_vec();
                e[k] += 1;
                support.contains(&ExponentVector::new(e))
            })
            .ok_or_else(|| {
                Error::Inconsistent(format!(
                    "no monomial x_k·x{}^m in f; the singularity cannot be isolated",
                    i + 1
                ))
            })?;
        partner[i] = Some(k);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRIES {
        let mut coefficients = vec![vec![0u32; n]; n];
        let mut h: Vec<Polynomial> = vec![Polynomial::zero(n); n];
        for (i, k) in partner.iter().enumerate() {
            if let Some(j) = *k {
                let a: u32 = rng.gen_range(1..=97);
                coefficients[j][i] = a;
                let e = (w.get(j) / w.get(i)) as u32;
                let term = Polynomial::monomial(
                    ExponentVector::pure(n, i, e),
                    BigRational::from_integer(a.into()),
                );
                h[j] = &h[j] + &term;
            }
        }
        let images: Vec<Polynomial> = (0..n)
            .map(|j| &Polynomial::variable(n, j) + &h[j])
            .collect();
        let g = f.substitute(&images)?;
        let class = g.weighted_classification(w)?;
        if class.degree != d || !class.is_weighted_homogeneous {
            return Err(Error::Inconsistent(
                "substitution broke weighted homogeneity".into(),
            ));
        }
        if !class.is_convenient || !linear_part_invertible(&images)? {
            continue;
        }
        for (j, hj) in h.iter().enumerate() {
            if !hj.is_zero() {
                debug_assert!(hj.is_weighted_homogeneous(w)?);
                debug_assert_eq!(hj.weighted_degree(w)?, Extended::Finite(w.get(j)));
            }
        }
        return Ok(TransformResult {
            change: CoordinateChange {
                h,
                coefficients,
                images,
            },
            g,
        });
    }
    Err(Error::ResourceCap(format!(
        "no convenient image after {RETRIES} coefficient draws"
    )))
}

/// Nonzero Jacobian determinant at the origin.
fn linear_part_invertible(images: &[Polynomial]) -> Result<bool> {
    let n = images.len();
    let mut m: Vec<Vec<BigRational>> = images
        .iter()
        .map(|p| {
            (0..n)
                .map(|i| p.coefficient(&ExponentVector::pure(n, i, 1)))
                .collect()
        })
        .collect();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Ok(false);
        };
        m.swap(c, p);
        for r in c + 1..n {
            let factor = &m[r][c] / &m[c][c];
            for k in c..n {
                let v = &factor * &m[c][k];
                m[r][k] -= v;
            }
        }
    }
    Ok(true)
}

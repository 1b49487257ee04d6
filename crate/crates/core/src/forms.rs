//! Matrix-valued alternating forms on a fixed finite frame.
//!
//! A degree-`k` form on a frame of dimension `m` is stored as one square
//! complex matrix per strictly increasing index set `I ⊂ {0..m}`, encoded as
//! a bitmask. Missing entries are zero. The wedge follows the determinant
//! convention `(α∧β)(u,v) = α(u)β(v) − α(v)β(u)` with matrix products in
//! the stated order.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::clifford::CMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixForm {
    pub degree: usize,
    pub frame_dim: usize,
    /// Coefficient size (rows = cols).
    pub size: usize,
    pub coeffs: BTreeMap<u32, CMatrix>,
}

/// Sign of the shuffle that sorts the concatenation `I ++ J` (disjoint masks).
fn shuffle_sign(i: u32, j: u32) -> f64 {
    // count pairs (a ∈ I, b ∈ J) with a > b
    let mut inversions = 0u32;
    let mut rest = j;
    while rest != 0 {
        let b = rest.trailing_zeros();
        rest &= rest - 1;
        inversions += (i >> (b + 1)).count_ones();
    }
    if inversions % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Bitmask of a sorted index list.
pub fn mask(indices: &[usize]) -> u32 {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

/// Indices of a bitmask in increasing order.
pub fn indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask & (1 << b) != 0).collect()
}

impl MatrixForm {
    pub fn zero(degree: usize, frame_dim: usize, size: usize) -> Self {
        Self {
            degree,
            frame_dim,
            size,
            coeffs: BTreeMap::new(),
        }
    }

    /// Degree-0 form with constant coefficient `m`.
    pub fn scalar(frame_dim: usize, m: CMatrix) -> Self {
        let size = m.nrows();
        let mut f = Self::zero(0, frame_dim, size);
        f.coeffs.insert(0, m);
        f
    }

    /// Sets the coefficient on the index set `idx`, given in any order; the
    /// value is stored on the sorted set with the permutation sign applied.
    pub fn set(&mut self, idx: &[usize], m: CMatrix) -> Result<()> {
        if idx.len() != self.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                got: idx.len(),
            });
        }
        if m.nrows() != self.size || m.ncols() != self.size {
            return Err(Error::DimensionMismatch {
                expected: self.size,
                got: m.nrows(),
            });
        }
        if idx.iter().any(|&i| i >= self.frame_dim) {
            return Err(Error::DegreeOverflow {
                degree: self.degree,
                frame_dim: self.frame_dim,
            });
        }
        let mut sorted = idx.to_vec();
        let sign = permutation_sign(&mut sorted);
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Ok(());
        }
        let value = if sign < 0.0 { -m } else { m };
        self.coeffs.insert(mask(&sorted), value);
        Ok(())
    }

    /// Coefficient on an index set in any order (zero if absent or repeated).
    pub fn get(&self, idx: &[usize]) -> CMatrix {
        let mut sorted = idx.to_vec();
        let sign = permutation_sign(&mut sorted);
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return CMatrix::zeros(self.size, self.size);
        }
        match self.coeffs.get(&mask(&sorted)) {
            Some(m) if sign < 0.0 => -m,
            Some(m) => m.clone(),
            None => CMatrix::zeros(self.size, self.size),
        }
    }

    /// Applies `f` to every stored coefficient.
    pub fn map(&self, f: impl Fn(&CMatrix) -> CMatrix) -> Self {
        let coeffs: BTreeMap<u32, CMatrix> = self.coeffs.iter().map(|(k, m)| (*k, f(m))).collect();
        let size = coeffs.values().next().map_or(self.size, |m| m.nrows());
        Self {
            degree: self.degree,
            frame_dim: self.frame_dim,
            size,
            coeffs,
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map(|m| m * c)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                got: other.degree,
            });
        }
        let mut out = self.clone();
        for (k, m) in &other.coeffs {
            out.coeffs
                .entry(*k)
                .and_modify(|c| *c += m)
                .or_insert_with(|| m.clone());
        }
        Ok(out)
    }

    /// Largest coefficient-wise Frobenius distance.
    pub fn max_distance(&self, other: &Self) -> f64 {
        let keys: std::collections::BTreeSet<u32> =
            self.coeffs.keys().chain(other.coeffs.keys()).copied().collect();
        let zero = CMatrix::zeros(self.size, self.size);
        keys.iter()
            .map(|k| {
                let a = self.coeffs.get(k).unwrap_or(&zero);
                let b = other.coeffs.get(k).unwrap_or(&zero);
                crate::clifford::frobenius(&(a - b))
            })
            .fold(0.0, f64::max)
    }

    /// Largest coefficient Frobenius norm.
    pub fn max_norm(&self) -> f64 {
        self.coeffs
            .values()
            .map(crate::clifford::frobenius)
            .fold(0.0, f64::max)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.frame_dim != other.frame_dim {
            return Err(Error::DimensionMismatch {
                expected: self.frame_dim,
                got: other.frame_dim,
            });
        }
        if self.size != other.size {
            return Err(Error::DimensionMismatch {
                expected: self.size,
                got: other.size,
            });
        }
        Ok(())
    }

    /// Evaluates the form on `degree` vectors given in frame coordinates.
    pub fn evaluate(&self, vectors: &[Vec<f64>]) -> Result<CMatrix> {
        if vectors.len() != self.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                got: vectors.len(),
            });
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != self.frame_dim) {
            return Err(Error::DimensionMismatch {
                expected: self.frame_dim,
                got: v.len(),
            });
        }
        let mut out = CMatrix::zeros(self.size, self.size);
        for (k, m) in &self.coeffs {
            let idx = indices(*k);
            let minor = nalgebra::DMatrix::<f64>::from_fn(self.degree, self.degree, |r, c| {
                vectors[c][idx[r]]
            });
            out += m * Complex64::new(minor.determinant(), 0.0);
        }
        Ok(out)
    }
}

/// Sorts in place and returns the sign of the sorting permutation.
fn permutation_sign(v: &mut [usize]) -> f64 {
    let mut sign = 1.0;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    sign
}

pub fn wedge(a: &MatrixForm, b: &MatrixForm) -> Result<MatrixForm> {
    a.check_compatible(b)?;
    let degree = a.degree + b.degree;
    if degree > a.frame_dim {
        return Err(Error::DegreeOverflow {
            degree,
            frame_dim: a.frame_dim,
        });
    }
    let mut out = MatrixForm::zero(degree, a.frame_dim, a.size);
    for (i, ma) in &a.coeffs {
        for (j, mb) in &b.coeffs {
            if i & j != 0 {
                continue;
            }
            let mut prod = ma * mb;
            if shuffle_sign(*i, *j) < 0.0 {
                prod.neg_mut();
            }
            match out.coeffs.get_mut(&(i | j)) {
                Some(c) => *c += prod,
                None => {
                    out.coeffs.insert(i | j, prod);
                }
            }
        }
    }
    Ok(out)
}

/// `F ∧ F ∧ ⋯ ∧ F` with `power` factors, left-associated.
pub fn wedge_power(f: &MatrixForm, power: usize) -> Result<MatrixForm> {
    if power == 0 {
        return Err(Error::InvalidParameter("wedge power must be positive".into()));
    }
    if f.degree * power > f.frame_dim {
        return Err(Error::DegreeOverflow {
            degree: f.degree * power,
            frame_dim: f.frame_dim,
        });
    }
    let mut acc = f.clone();
    for _ in 1..power {
        acc = wedge(&acc, f)?;
    }
    Ok(acc)
}

/// Coefficient-wise matrix trace, as a form with `1×1` coefficients.
pub fn trace_form(f: &MatrixForm) -> MatrixForm {
    let coeffs = f
        .coeffs
        .iter()
        .map(|(k, m)| (*k, CMatrix::from_element(1, 1, m.trace())))
        .collect();
    MatrixForm {
        degree: f.degree,
        frame_dim: f.frame_dim,
        size: 1,
        coeffs,
    }
}

/// The coefficient on the full index set of a top-degree form.
pub fn top_coefficient(f: &MatrixForm) -> Result<CMatrix> {
    if f.degree != f.frame_dim {
        return Err(Error::NotTopDegree {
            degree: f.degree,
            frame_dim: f.frame_dim,
        });
    }
    let full = if f.frame_dim == 32 {
        u32::MAX
    } else {
        (1u32 << f.frame_dim) - 1
    };
    Ok(f.coeffs
        .get(&full)
        .cloned()
        .unwrap_or_else(|| CMatrix::zeros(f.size, f.size)))
}

//! Gamma-matrix realization of the Clifford algebra `Cl(2n+1)` with the
//! negative-definite convention `e_i e_j + e_j e_i = -2 δ_ij`.
//!
//! The generators `γ_1 … γ_2n` come from a Jordan–Wigner tensor construction
//! on `n` qubits, multiplied by `i` so that every generator is anti-Hermitian
//! and squares to `-1`. The chirality element `γ_1⋯γ_2n` is then diagonal; the
//! spinor basis is permuted so its `+iⁿ` eigenvectors come first. With that
//! ordering the half-spin representations `ρ±` are literal diagonal blocks and
//! `ρ±(e_1⋯e_2n) = ±iⁿ I`. The last generator is `γ_{2n+1} = i^{n+1} γ_1⋯γ_2n`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

/// Largest `n` accepted by [`CliffordRep::new`] (spinor dimension 32).
pub const DEFAULT_MAX_N: usize = 5;

/// Absolute tolerance for exact algebraic identities.
pub const ALGEBRAIC_TOL: f64 = 1e-12;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Which half-spin representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    Plus,
    Minus,
}

impl Chirality {
    pub const BOTH: [Chirality; 2] = [Chirality::Plus, Chirality::Minus];

    pub fn sign(self) -> f64 {
        match self {
            Chirality::Plus => 1.0,
            Chirality::Minus => -1.0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Chirality::Plus => '+',
            Chirality::Minus => '-',
        }
    }
}

impl std::fmt::Display for Chirality {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// `i^k` for integer `k ≥ 0`.
pub fn i_pow(k: usize) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => I,
        2 => Complex64::new(-1.0, 0.0),
        _ => -I,
    }
}

/// Frobenius norm of a complex matrix.
pub fn frobenius(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `Tr(X† Y)`.
pub fn trace_inner(x: &CMatrix, y: &CMatrix) -> Complex64 {
    x.iter().zip(y.iter()).map(|(a, b)| a.conj() * b).sum()
}

/// Concrete spin representation of `Cl(2n+1)` on `C^{2^n}`.
#[derive(Debug, Clone)]
pub struct CliffordRep {
    pub n: usize,
    pub dim_spinor: usize,
    /// `gammas[k]` realizes `e_{k+1}`.
    pub gammas: Vec<CMatrix>,
    /// `ρ(e_1⋯e_2n)`.
    pub chirality: CMatrix,
    pub projector_plus: CMatrix,
    pub projector_minus: CMatrix,
    /// Orthonormal columns spanning the `+` chiral subspace.
    pub chiral_basis_plus: CMatrix,
    /// Orthonormal columns spanning the `-` chiral subspace.
    pub chiral_basis_minus: CMatrix,
}

/// Builds the representation for `n` with the default range limit.
pub fn build_rep(n: usize) -> Result<CliffordRep> {
    CliffordRep::new(n)
}

impl CliffordRep {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_max(n, DEFAULT_MAX_N)
    }

    pub fn with_max(n: usize, max_n: usize) -> Result<Self> {
        if n == 0 || n > max_n {
            return Err(Error::UnsupportedRank { n, max: max_n });
        }
        let dim = 1usize << n;
        let half = dim / 2;

        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let id2 = CMatrix::identity(2, 2);
        let sx = CMatrix::from_row_slice(2, 2, &[zero, one, one, zero]);
        let sy = CMatrix::from_row_slice(2, 2, &[zero, -I, I, zero]);
        let sz = CMatrix::from_row_slice(2, 2, &[one, zero, zero, -one]);

        let chain = |k: usize, middle: &CMatrix| -> CMatrix {
            let mut m = CMatrix::identity(1, 1);
            for q in 0..n {
                let factor = if q < k {
                    &sz
                } else if q == k {
                    middle
                } else {
                    &id2
                };
                m = m.kronecker(factor);
            }
            m
        };

        let mut raw: Vec<CMatrix> = Vec::with_capacity(2 * n);
        for k in 0..n {
            raw.push(chain(k, &sx) * I);
            raw.push(chain(k, &sy) * I);
        }

        let raw_chirality = raw
            .iter()
            .fold(CMatrix::identity(dim, dim), |acc, g| acc * g);

        // Stable reorder: +iⁿ eigenvectors first.
        let target = i_pow(n);
        let mut order: Vec<usize> = (0..dim)
            .filter(|&k| (raw_chirality[(k, k)] - target).norm() < 1e-9)
            .collect();
        order.extend((0..dim).filter(|&k| (raw_chirality[(k, k)] + target).norm() < 1e-9));
        debug_assert_eq!(order.len(), dim);
        let perm = CMatrix::from_fn(dim, dim, |r, c| if order[c] == r { one } else { zero });
        let perm_t = perm.transpose();

        let mut gammas: Vec<CMatrix> = raw.iter().map(|g| &perm_t * g * &perm).collect();
        let chirality = gammas
            .iter()
            .fold(CMatrix::identity(dim, dim), |acc, g| acc * g);
        gammas.push(&chirality * i_pow(n + 1));

        let identity = CMatrix::identity(dim, dim);
        let scaled = &chirality * i_pow(3 * n); // (-i)^n = i^{3n}
        let projector_plus = (&identity + &scaled) * Complex64::new(0.5, 0.0);
        let projector_minus = (&identity - &scaled) * Complex64::new(0.5, 0.0);

        let chiral_basis_plus = CMatrix::from_fn(dim, half, |r, c| if r == c { one } else { zero });
        let chiral_basis_minus =
            CMatrix::from_fn(dim, half, |r, c| if r == c + half { one } else { zero });

        Ok(Self {
            n,
            dim_spinor: dim,
            gammas,
            chirality,
            projector_plus,
            projector_minus,
            chiral_basis_plus,
            chiral_basis_minus,
        })
    }

    /// Ambient dimension `2n + 1`.
    pub fn ambient_dim(&self) -> usize {
        2 * self.n + 1
    }

    /// Dimension of each half-spin representation, `2^{n-1}`.
    pub fn half_dim(&self) -> usize {
        self.dim_spinor / 2
    }

    pub fn identity(&self) -> CMatrix {
        CMatrix::identity(self.dim_spinor, self.dim_spinor)
    }

    /// `γ_{k+1}` (zero-based index).
    pub fn gamma(&self, k: usize) -> &CMatrix {
        &self.gammas[k]
    }

    /// Product `γ_{k_1} γ_{k_2} ⋯` of zero-based generator indices.
    pub fn monomial(&self, indices: &[usize]) -> CMatrix {
        indices
            .iter()
            .fold(self.identity(), |acc, &k| acc * &self.gammas[k])
    }

    /// `Σ_i w_i γ_i` for `w ∈ R^{2n+1}`.
    pub fn vector_embed(&self, w: &[f64]) -> Result<CMatrix> {
        if w.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                got: w.len(),
            });
        }
        Ok(self.embed_prefix(w))
    }

    /// Clifford image of a vector given by its leading coordinates; missing
    /// trailing coordinates are zero. Used for vectors of `R^{2n}`.
    pub(crate) fn embed_prefix(&self, w: &[f64]) -> CMatrix {
        debug_assert!(w.len() <= self.ambient_dim());
        let mut out = CMatrix::zeros(self.dim_spinor, self.dim_spinor);
        for (g, &c) in self.gammas.iter().zip(w) {
            if c != 0.0 {
                out.zip_apply(g, |o, x| *o += x * c);
            }
        }
        out
    }

    pub fn projector(&self, sign: Chirality) -> &CMatrix {
        match sign {
            Chirality::Plus => &self.projector_plus,
            Chirality::Minus => &self.projector_minus,
        }
    }

    /// Block of an even matrix acting on the chosen chiral subspace.
    pub fn restrict_chiral(&self, m: &CMatrix, sign: Chirality) -> Result<CMatrix> {
        if m.nrows() != self.dim_spinor || m.ncols() != self.dim_spinor {
            return Err(Error::DimensionMismatch {
                expected: self.dim_spinor,
                got: m.nrows(),
            });
        }
        let h = self.half_dim();
        let off = m.view((0, h), (h, h)).iter().map(|z| z.norm_sqr()).sum::<f64>()
            + m.view((h, 0), (h, h)).iter().map(|z| z.norm_sqr()).sum::<f64>();
        let off = off.sqrt();
        if off > 1e-9 * frobenius(m).max(1.0) {
            return Err(Error::OddElement { off_block: off });
        }
        Ok(self.chiral_block(m, sign))
    }

    /// Diagonal block without the evenness check.
    pub(crate) fn chiral_block(&self, m: &CMatrix, sign: Chirality) -> CMatrix {
        let h = self.half_dim();
        let start = match sign {
            Chirality::Plus => 0,
            Chirality::Minus => h,
        };
        m.view((start, start), (h, h)).into_owned()
    }

    /// Orthogonal projection, under `⟨X,Y⟩ = Tr(X†Y)`, onto the span of
    /// `γ_i γ_j` with `i < j ≤ 2n`: the Lie algebra of `Spin(2n)`.
    pub fn bivector_project(&self, m: &CMatrix) -> CMatrix {
        let norm = self.dim_spinor as f64;
        let mut out = CMatrix::zeros(self.dim_spinor, self.dim_spinor);
        for i in 0..2 * self.n {
            for j in (i + 1)..2 * self.n {
                let b = &self.gammas[i] * &self.gammas[j];
                let c = trace_inner(&b, m) / norm;
                if c.norm() > 0.0 {
                    out.zip_apply(&b, |o, x| *o += x * c);
                }
            }
        }
        out
    }

    /// Whether `m` commutes with the chirality matrix.
    pub fn is_even(&self, m: &CMatrix, tol: f64) -> bool {
        frobenius(&(m * &self.chirality - &self.chirality * m)) < tol
    }
}

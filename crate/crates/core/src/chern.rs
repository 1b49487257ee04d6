//! The monopole charge `∫_Σ (1/n!) Tr(−F±/2π)ⁿ` by tensor-product
//! Gauss–Legendre quadrature, Monte Carlo, and exact closed-form reduction.

use std::f64::consts::PI;
use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::clifford::{CMatrix, Chirality, CliffordRep};
use crate::error::{Error, Result};
use crate::forms::{top_coefficient, trace_form, wedge_power, MatrixForm};
use crate::gauge::{ambient_field_form, field_closed, GaugeChart};
use crate::geometry::{chart_box, orientation, polar_decompose, sphere2n_point, surface_point, ChartPoint, Surface};
use crate::quadrature::{unflatten, GaussLegendre};

/// Largest `n` for tensor-product quadrature (a `2n = 6` dimensional grid).
pub const QUADRATURE_MAX_N: usize = 3;
/// Largest `n` for Monte Carlo.
pub const MONTE_CARLO_MAX_N: usize = 4;
pub const MIN_RESOLUTION: usize = 4;
pub const MIN_SAMPLES: usize = 10_000;

const MC_CHUNK: usize = 8192;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Quadrature,
    MonteCarlo,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChargeReport {
    pub n: usize,
    pub sign: Chirality,
    pub method: Method,
    pub surface: String,
    pub value: f64,
    /// Refinement delta for quadrature, standard error for Monte Carlo.
    pub error_estimate: f64,
    pub nodes_or_samples: u64,
    pub seed: Option<u64>,
    pub wall_time: f64,
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Scalar density of `(1/n!) Tr(−F/2π)ⁿ` given the chiral block of `F` on a frame.
fn chern_density(f: &MatrixForm, n: usize) -> Complex64 {
    let top = wedge_power(f, n).and_then(|w| top_coefficient(&trace_form(&w)));
    let tr = top.expect("frame dimension is 2n")[(0, 0)];
    tr * ((-1.0 / (2.0 * PI)).powi(n as i32) / factorial(n))
}

fn chiral(rep: &CliffordRep, f: &MatrixForm, sign: Chirality) -> MatrixForm {
    f.map(|m| rep.chiral_block(m, sign))
}

fn integrand_at(rep: &CliffordRep, sign: Chirality, p: &ChartPoint, orient: f64) -> Result<f64> {
    let chart = GaugeChart::for_theta(rep, p.theta);
    let f = chiral(rep, &field_closed(&chart, p)?, sign);
    let value = chern_density(&f, rep.n);
    debug_assert!(value.im.abs() < 1e-12 * (1.0 + value.re.abs()));
    Ok(orient * value.re)
}

/// Charge density on the unit sphere at `p`, relative to `dθ da_1 ⋯` with the
/// outward orientation.
pub fn charge_integrand(rep: &CliffordRep, sign: Chirality, p: &ChartPoint) -> Result<f64> {
    if p.n != rep.n {
        return Err(Error::DimensionMismatch {
            expected: rep.n,
            got: p.n,
        });
    }
    integrand_at(rep, sign, p, orientation(rep.n))
}

/// Same density evaluated in an explicitly chosen chart.
pub fn charge_integrand_in(chart: &GaugeChart, sign: Chirality, p: &ChartPoint) -> Result<f64> {
    let f = chiral(chart.rep, &field_closed(chart, p)?, sign);
    Ok(orientation(chart.rep.n) * chern_density(&f, chart.rep.n).re)
}

/// Density over the chart coordinates of a general surface, through the
/// ambient field and the surface's coordinate frame.
pub fn surface_integrand(
    rep: &CliffordRep,
    sign: Chirality,
    surface: &Surface,
    theta: f64,
    angles: &[f64],
) -> Result<f64> {
    surface_integrand_at(rep, sign, surface, theta, angles, orientation(rep.n))
}

fn surface_integrand_at(
    rep: &CliffordRep,
    sign: Chirality,
    surface: &Surface,
    theta: f64,
    angles: &[f64],
    orient: f64,
) -> Result<f64> {
    if surface.is_sphere() {
        let p = sphere2n_point(rep.n, theta, angles)?;
        return integrand_at(rep, sign, &p, orient);
    }
    let (x, frame) = surface_point(surface, theta, angles)?;
    let (_, polar, _) = polar_decompose(&x)?;
    let chart = GaugeChart::for_theta(rep, polar);
    let f = chiral(rep, &ambient_field_form(&chart, &x, &frame)?, sign);
    Ok(orient * chern_density(&f, rep.n).re)
}

fn check_surface(rep: &CliffordRep, surface: &Surface) -> Result<()> {
    if surface.n() != rep.n {
        return Err(Error::DimensionMismatch {
            expected: rep.ambient_dim(),
            got: surface.axes.len(),
        });
    }
    Ok(())
}

fn quadrature_value(rep: &CliffordRep, sign: Chirality, surface: &Surface, resolution: usize) -> Result<f64> {
    let gl = GaussLegendre::new(resolution);
    let axes: Vec<Vec<(f64, f64)>> = chart_box(rep.n)
        .into_iter()
        .map(|(a, b)| gl.mapped(a, b))
        .collect();
    let dims = axes.len();
    let outer = resolution.pow((dims - 1) as u32);
    let orient = orientation(rep.n);
    let rows: Vec<Result<f64>> = (0..outer)
        .into_par_iter()
        .map(|row| {
            let mut idx = vec![0usize; dims - 1];
            unflatten(row, resolution, dims - 1, &mut idx);
            let mut weight = 1.0;
            let mut coords = Vec::with_capacity(dims);
            for (a, &i) in idx.iter().enumerate() {
                let (x, w) = axes[a][i];
                weight *= w;
                coords.push(x);
            }
            coords.push(0.0);
            let mut sum = 0.0;
            for &(x, w) in &axes[dims - 1] {
                coords[dims - 1] = x;
                sum += w * surface_integrand_at(rep, sign, surface, coords[0], &coords[1..], orient)?;
            }
            Ok(weight * sum)
        })
        .collect();
    let mut total = 0.0;
    for r in rows {
        total += r?;
    }
    Ok(total)
}

/// Tensor-product Gauss–Legendre quadrature over the chart box with
/// `resolution` nodes per axis; the error estimate is the change from
/// `resolution / 2`.
pub fn charge_quadrature(
    rep: &CliffordRep,
    sign: Chirality,
    surface: &Surface,
    resolution: usize,
) -> Result<ChargeReport> {
    if rep.n > QUADRATURE_MAX_N {
        return Err(Error::InvalidParameter(format!(
            "quadrature supports n <= {QUADRATURE_MAX_N}, got {}",
            rep.n
        )));
    }
    if resolution < MIN_RESOLUTION {
        return Err(Error::InvalidParameter(format!(
            "resolution must be at least {MIN_RESOLUTION} nodes per axis"
        )));
    }
    check_surface(rep, surface)?;
    let start = Instant::now();
    let value = quadrature_value(rep, sign, surface, resolution)?;
    let coarse = quadrature_value(rep, sign, surface, resolution / 2)?;
    Ok(ChargeReport {
        n: rep.n,
        sign,
        method: Method::Quadrature,
        surface: surface.describe(),
        value,
        error_estimate: (value - coarse).abs(),
        nodes_or_samples: (resolution as u64).pow(2 * rep.n as u32),
        seed: None,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

/// Uniform sampling of the chart box; each sample is weighted by the box
/// volume. Samples are drawn in fixed-size chunks, chunk `c` from ChaCha8
/// stream `c` of `seed`, and chunk sums are combined in order, so the result
/// does not depend on the thread count.
pub fn charge_montecarlo(
    rep: &CliffordRep,
    sign: Chirality,
    surface: &Surface,
    samples: usize,
    seed: u64,
) -> Result<ChargeReport> {
    if rep.n > MONTE_CARLO_MAX_N {
        return Err(Error::InvalidParameter(format!(
            "Monte Carlo supports n <= {MONTE_CARLO_MAX_N}, got {}",
            rep.n
        )));
    }
    if samples < MIN_SAMPLES {
        return Err(Error::InvalidParameter(format!(
            "at least {MIN_SAMPLES} samples are required"
        )));
    }
    check_surface(rep, surface)?;
    let start = Instant::now();
    let bounds = chart_box(rep.n);
    let volume: f64 = bounds.iter().map(|(a, b)| b - a).product();
    let orient = orientation(rep.n);
    let chunks = samples.div_ceil(MC_CHUNK);

    let partial: Vec<Result<(f64, f64)>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c as u64);
            let count = MC_CHUNK.min(samples - c * MC_CHUNK);
            let mut coords = vec![0.0; bounds.len()];
            let (mut sum, mut sum_sq) = (0.0, 0.0);
            for _ in 0..count {
                for (x, (a, b)) in coords.iter_mut().zip(&bounds) {
                    *x = rng.gen_range(*a..*b);
                }
                if coords[0] <= 0.0 {
                    continue; // pole: measure zero, integrand vanishes
                }
                let v = volume * surface_integrand_at(rep, sign, surface, coords[0], &coords[1..], orient)?;
                sum += v;
                sum_sq += v * v;
            }
            Ok((sum, sum_sq))
        })
        .collect();

    let (mut sum, mut sum_sq) = (0.0, 0.0);
    for p in partial {
        let (s, q) = p?;
        sum += s;
        sum_sq += q;
    }
    let count = samples as f64;
    let mean = sum / count;
    let variance = ((sum_sq - count * mean * mean) / (count - 1.0)).max(0.0);
    Ok(ChargeReport {
        n: rep.n,
        sign,
        method: Method::MonteCarlo,
        surface: surface.describe(),
        value: mean,
        error_estimate: (variance / count).sqrt(),
        nodes_or_samples: samples as u64,
        seed: Some(seed),
        wall_time: start.elapsed().as_secs_f64(),
    })
}

/// An exact real number of the form `q · π^k` with rational `q`.
#[derive(Debug, Clone, PartialEq)]
pub struct PiMonomial {
    pub coefficient: BigRational,
    pub pi_power: i32,
}

impl std::ops::Mul for PiMonomial {
    type Output = PiMonomial;
    fn mul(self, rhs: PiMonomial) -> PiMonomial {
        PiMonomial {
            coefficient: self.coefficient * rhs.coefficient,
            pi_power: self.pi_power + rhs.pi_power,
        }
    }
}

fn big(k: u64) -> BigInt {
    BigInt::from(k)
}

fn double_factorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut i = k;
    while i > 1 {
        acc *= big(i);
        i -= 2;
    }
    acc
}

fn big_factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * big(i))
}

/// The three factors `n(2n−1)!!/(2π)ⁿ`, `vol(B^{2n}) = πⁿ/n!` and the Wallis
/// integral `∫₀^π sin^{2n−1}θ dθ = 2(2n−2)!!/(2n−1)!!`.
pub fn closed_form_factors(n: usize) -> [PiMonomial; 3] {
    let n64 = n as u64;
    let prefactor = PiMonomial {
        coefficient: BigRational::new(big(n64) * double_factorial(2 * n64 - 1), BigInt::from(2).pow(n as u32)),
        pi_power: -(n as i32),
    };
    let ball = PiMonomial {
        coefficient: BigRational::new(BigInt::one(), big_factorial(n64)),
        pi_power: n as i32,
    };
    let wallis = PiMonomial {
        coefficient: BigRational::new(big(2) * double_factorial(2 * n64 - 2), double_factorial(2 * n64 - 1)),
        pi_power: 0,
    };
    [prefactor, ball, wallis]
}

/// Exact product of [`closed_form_factors`].
pub fn closed_form_product(n: usize) -> PiMonomial {
    let [a, b, c] = closed_form_factors(n);
    a * b * c
}

/// `±n(2n−1)!!/(2π)ⁿ · vol(B^{2n}) · ∫₀^π sin^{2n−1}θ dθ` in exact arithmetic.
pub fn charge_closed_form(n: usize, sign: Chirality) -> Result<ChargeReport> {
    if n == 0 {
        return Err(Error::UnsupportedRank { n, max: usize::MAX });
    }
    let start = Instant::now();
    let product = closed_form_product(n);
    if product.pi_power != 0 {
        return Err(Error::Report(format!(
            "powers of pi did not cancel (pi^{})",
            product.pi_power
        )));
    }
    let magnitude = product
        .coefficient
        .to_f64()
        .ok_or_else(|| Error::Report("closed-form coefficient is not representable".into()))?;
    Ok(ChargeReport {
        n,
        sign,
        method: Method::ClosedForm,
        surface: "sphere".into(),
        value: sign.sign() * magnitude,
        error_estimate: 0.0,
        nodes_or_samples: 0,
        seed: None,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceEntry {
    /// One-based generator indices.
    pub i: usize,
    pub j: usize,
    pub sign: Chirality,
    pub re: f64,
    pub im: f64,
}

impl TraceEntry {
    pub fn magnitude(&self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// `Tr_{ρ±}(e_i e_j)` for every `i < j ≤ 2n` and both chiralities.
pub fn traceless_report(rep: &CliffordRep) -> Result<Vec<TraceEntry>> {
    let mut out = Vec::new();
    for sign in Chirality::BOTH {
        for i in 0..2 * rep.n {
            for j in (i + 1)..2 * rep.n {
                let block = rep.restrict_chiral(&rep.monomial(&[i, j]), sign)?;
                let t = block.trace();
                out.push(TraceEntry {
                    i: i + 1,
                    j: j + 1,
                    sign,
                    re: t.re,
                    im: t.im,
                });
            }
        }
    }
    Ok(out)
}

/// Product of four random unit vectors of `R^{2n+1}`: an element of `Spin(2n+1)`.
pub fn random_spin_element<R: Rng + ?Sized>(rep: &CliffordRep, rng: &mut R) -> CMatrix {
    let mut h = rep.identity();
    for _ in 0..4 {
        let v: Vec<f64> = (0..rep.ambient_dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        let unit: Vec<f64> = v.iter().map(|c| c / norm).collect();
        h *= rep.embed_prefix(&unit);
    }
    h
}

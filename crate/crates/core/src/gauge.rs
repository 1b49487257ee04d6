//! Gauge sections, potentials and field strengths of the canonical
//! `Spin(2n)` connection `ω(g) = Pr(g⁻¹dg)` on the two-chart cover of
//! `R^{2n+1} \ {0}`.
//!
//! * `V₋` (negative `e_{2n+1}` half-axis removed): `g = cos(θ/2) − sin(θ/2) y e_{2n+1}`,
//!   `𝒜 = i sin²(θ/2) y dy`,
//!   `𝒻 = (i/2) sin θ dθ y dy + (i/4) sin²θ dy dy`.
//! * `V₊` (positive half-axis removed): `g̃ = g y e_{2n}`,
//!   `𝒜̃ = −i cos²(θ/2) e_{2n} y dy e_{2n}`,
//!   `𝒻̃ = e_{2n} y 𝒻 y e_{2n}`.
//!
//! Products of vector-valued forms are Clifford products; `dy dy` is the
//! wedge `(dy∧dy)(u,v) = dy(u)dy(v) − dy(v)dy(u)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::clifford::{frobenius, CMatrix, CliffordRep};
use crate::error::{Error, Result};
use crate::forms::MatrixForm;
use crate::geometry::{polar_decompose, sphere2n_point, ChartPoint};

/// Default central-difference step.
pub const DEFAULT_STEP: f64 = 1e-5;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Which open set of the cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `V₋`: regular at the north pole `θ = 0`.
    Minus,
    /// `V₊`: regular at the south pole `θ = π`.
    Plus,
}

#[derive(Debug, Clone, Copy)]
pub struct GaugeChart<'a> {
    pub side: Side,
    pub rep: &'a CliffordRep,
}

impl<'a> GaugeChart<'a> {
    pub fn minus(rep: &'a CliffordRep) -> Self {
        Self {
            side: Side::Minus,
            rep,
        }
    }

    pub fn plus(rep: &'a CliffordRep) -> Self {
        Self {
            side: Side::Plus,
            rep,
        }
    }

    /// The chart used for integrand evaluation at polar angle `theta`.
    pub fn for_theta(rep: &'a CliffordRep, theta: f64) -> Self {
        if theta < PI / 2.0 {
            Self::minus(rep)
        } else {
            Self::plus(rep)
        }
    }

    fn check(&self, theta: f64) -> Result<()> {
        let ok = match self.side {
            Side::Minus => (0.0..PI).contains(&theta),
            Side::Plus => theta > 0.0 && theta <= PI,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OutsideChart(match self.side {
                Side::Minus => "V-",
                Side::Plus => "V+",
            }))
        }
    }

    fn check_rank(&self, n: usize) -> Result<()> {
        if n != self.rep.n {
            return Err(Error::DimensionMismatch {
                expected: self.rep.n,
                got: n,
            });
        }
        Ok(())
    }

    /// `ρ(e_{2n})`.
    fn e_2n(&self) -> &CMatrix {
        self.rep.gamma(2 * self.rep.n - 1)
    }

    /// `ρ(e_{2n+1})`.
    fn e_top(&self) -> &CMatrix {
        self.rep.gamma(2 * self.rep.n)
    }
}

/// Gauge section at polar angle `theta` and `y ∈ S^{2n-1}`.
pub fn section_at(chart: &GaugeChart, theta: f64, y: &[f64]) -> Result<CMatrix> {
    chart.check(theta)?;
    let rep = chart.rep;
    if y.len() != 2 * rep.n {
        return Err(Error::DimensionMismatch {
            expected: 2 * rep.n,
            got: y.len(),
        });
    }
    let ym = rep.embed_prefix(y);
    let (s, c) = (theta / 2.0).sin_cos();
    let g = rep.identity() * re(c) - &ym * chart.e_top() * re(s);
    Ok(match chart.side {
        Side::Minus => g,
        Side::Plus => g * ym * chart.e_2n(),
    })
}

/// `ρ(g(x))` or `ρ(g̃(x))` at a chart point.
pub fn section(chart: &GaugeChart, p: &ChartPoint) -> Result<CMatrix> {
    chart.check_rank(p.n)?;
    section_at(chart, p.theta, &p.y)
}

/// Transition `t = g⁻¹ g̃ = ρ(y e_{2n})` on the chart overlap.
pub fn transition(rep: &CliffordRep, y: &[f64]) -> Result<CMatrix> {
    if y.len() != 2 * rep.n {
        return Err(Error::DimensionMismatch {
            expected: 2 * rep.n,
            got: y.len(),
        });
    }
    let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::NotUnit(norm));
    }
    Ok(rep.embed_prefix(y) * rep.gamma(2 * rep.n - 1))
}

/// Potential from the differentials of `θ` and `y` along each frame vector.
/// `dys[k]` is the Clifford image of `dy(v_k)`.
fn potential_from_differentials(
    chart: &GaugeChart,
    theta: f64,
    ym: &CMatrix,
    dys: &[CMatrix],
) -> MatrixForm {
    let rep = chart.rep;
    let mut form = MatrixForm::zero(1, dys.len(), rep.dim_spinor);
    let half = theta / 2.0;
    for (k, dy) in dys.iter().enumerate() {
        if frobenius(dy) == 0.0 {
            continue;
        }
        let coeff = match chart.side {
            Side::Minus => ym * dy * (I * half.sin().powi(2)),
            Side::Plus => chart.e_2n() * ym * dy * chart.e_2n() * (-I * half.cos().powi(2)),
        };
        form.coeffs.insert(1 << k, coeff);
    }
    form
}

fn field_from_differentials(
    chart: &GaugeChart,
    theta: f64,
    ym: &CMatrix,
    dthetas: &[f64],
    dys: &[CMatrix],
) -> MatrixForm {
    let rep = chart.rep;
    let m = dys.len();
    let mut form = MatrixForm::zero(2, m, rep.dim_spinor);
    let s = theta.sin();
    let mixed = I * (0.5 * s);
    let quad = I * (0.25 * s * s);
    for j in 0..m {
        for k in (j + 1)..m {
            let mut coeff = CMatrix::zeros(rep.dim_spinor, rep.dim_spinor);
            let (tj, tk) = (dthetas[j], dthetas[k]);
            if tj != 0.0 || tk != 0.0 {
                coeff += (ym * (&dys[k] * re(tj) - &dys[j] * re(tk))) * mixed;
            }
            coeff += (&dys[j] * &dys[k] - &dys[k] * &dys[j]) * quad;
            if let Side::Plus = chart.side {
                // e_2n y (…) y e_2n
                let t = ym * chart.e_2n();
                let t_inv = chart.e_2n() * ym;
                coeff = &t_inv * coeff * &t;
            }
            form.coeffs.insert((1 << j) | (1 << k), coeff);
        }
    }
    form
}

/// Clifford images of `y` and of `dy` along each coordinate direction.
fn chart_differentials(rep: &CliffordRep, p: &ChartPoint) -> (CMatrix, Vec<f64>, Vec<CMatrix>) {
    let ym = rep.embed_prefix(&p.y);
    let mut dthetas = vec![0.0; p.frame_dim()];
    dthetas[0] = 1.0;
    let mut dys = Vec::with_capacity(p.frame_dim());
    dys.push(CMatrix::zeros(rep.dim_spinor, rep.dim_spinor));
    dys.extend(p.jac_y.iter().map(|j| rep.embed_prefix(j)));
    (ym, dthetas, dys)
}

/// Closed-form potential as a 1-form on the coordinate frame of `p`.
pub fn potential_closed(chart: &GaugeChart, p: &ChartPoint) -> Result<MatrixForm> {
    chart.check_rank(p.n)?;
    chart.check(p.theta)?;
    let (ym, _, dys) = chart_differentials(chart.rep, p);
    Ok(potential_from_differentials(chart, p.theta, &ym, &dys))
}

/// Closed-form field strength as a 2-form on the coordinate frame of `p`.
pub fn field_closed(chart: &GaugeChart, p: &ChartPoint) -> Result<MatrixForm> {
    chart.check_rank(p.n)?;
    chart.check(p.theta)?;
    let (ym, dthetas, dys) = chart_differentials(chart.rep, p);
    Ok(field_from_differentials(chart, p.theta, &ym, &dthetas, &dys))
}

fn displaced(p: &ChartPoint, k: usize, delta: f64) -> Result<ChartPoint> {
    let mut c = p.coords();
    c[k] += delta;
    sphere2n_point(p.n, c[0], &c[1..])
}

/// `−i Pr(g⁻¹ dg)` with `dg` by central differences in chart coordinates.
pub fn potential_from_definition(chart: &GaugeChart, p: &ChartPoint, step: f64) -> Result<MatrixForm> {
    potential_from_definition_with(chart, p, step, None)
}

/// As [`potential_from_definition`], with the section replaced by `h·g`
/// for a fixed spin-group element `h` when given.
pub fn potential_from_definition_with(
    chart: &GaugeChart,
    p: &ChartPoint,
    step: f64,
    left: Option<&CMatrix>,
) -> Result<MatrixForm> {
    if !(step > 0.0) {
        return Err(Error::InvalidParameter("finite-difference step must be positive".into()));
    }
    chart.check_rank(p.n)?;
    let rep = chart.rep;
    let sec = |q: &ChartPoint| -> Result<CMatrix> {
        let g = section(chart, q)?;
        Ok(match left {
            Some(h) => h * g,
            None => g,
        })
    };
    let g = sec(p)?;
    let g_inv = g.clone().try_inverse().ok_or_else(|| {
        Error::DegeneratePoint("section is not invertible".into())
    })?;
    let mut form = MatrixForm::zero(1, p.frame_dim(), rep.dim_spinor);
    for k in 0..p.frame_dim() {
        let gp = sec(&displaced(p, k, step)?)?;
        let gm = sec(&displaced(p, k, -step)?)?;
        let dg = (gp - gm) * re(0.5 / step);
        let coeff = rep.bivector_project(&(&g_inv * dg)) * (-I);
        form.coeffs.insert(1 << k, coeff);
    }
    Ok(form)
}

/// `d𝒜 + i 𝒜∧𝒜` with `d𝒜` by central differences of the closed-form potential.
pub fn field_from_potential(chart: &GaugeChart, p: &ChartPoint, step: f64) -> Result<MatrixForm> {
    if !(step > 0.0) {
        return Err(Error::InvalidParameter("finite-difference step must be positive".into()));
    }
    let a = potential_closed(chart, p)?;
    let m = p.frame_dim();
    let size = chart.rep.dim_spinor;
    // derivative[k][j] = ∂_k 𝒜_j
    let mut derivative: Vec<Vec<CMatrix>> = Vec::with_capacity(m);
    for k in 0..m {
        let ap = potential_closed(chart, &displaced(p, k, step)?)?;
        let am = potential_closed(chart, &displaced(p, k, -step)?)?;
        derivative.push(
            (0..m)
                .map(|j| (ap.get(&[j]) - am.get(&[j])) * re(0.5 / step))
                .collect(),
        );
    }
    let mut form = MatrixForm::zero(2, m, size);
    for j in 0..m {
        for k in (j + 1)..m {
            let (aj, ak) = (a.get(&[j]), a.get(&[k]));
            let coeff = &derivative[j][k] - &derivative[k][j] + (&aj * &ak - &ak * &aj) * I;
            form.coeffs.insert((1 << j) | (1 << k), coeff);
        }
    }
    Ok(form)
}

/// Largest coefficient residual of `𝒜̃ = t⁻¹𝒜t − i t⁻¹dt` at `p`, with `dt`
/// by central differences along the chart coordinates.
pub fn transition_law_residual(rep: &CliffordRep, p: &ChartPoint, step: f64) -> Result<f64> {
    let a = potential_closed(&GaugeChart::minus(rep), p)?;
    let a_tilde = potential_closed(&GaugeChart::plus(rep), p)?;
    let t = transition(rep, &p.y)?;
    let t_inv = t.adjoint();
    let mut worst: f64 = 0.0;
    for k in 0..p.frame_dim() {
        let tp = transition(rep, &displaced(p, k, step)?.y)?;
        let tm = transition(rep, &displaced(p, k, -step)?.y)?;
        let dt = (tp - tm) * re(0.5 / step);
        let predicted = &t_inv * a.get(&[k]) * &t - &t_inv * dt * I;
        worst = worst.max(frobenius(&(predicted - a_tilde.get(&[k]))));
    }
    Ok(worst)
}

/// Largest coefficient residual of `𝒻̃ = ρ(e_{2n}y) 𝒻 ρ(y e_{2n})` at `p`.
pub fn field_transition_residual(rep: &CliffordRep, p: &ChartPoint) -> Result<f64> {
    let f = field_closed(&GaugeChart::minus(rep), p)?;
    let f_tilde = field_closed(&GaugeChart::plus(rep), p)?;
    let t = transition(rep, &p.y)?;
    let t_inv = rep.gamma(2 * rep.n - 1) * rep.embed_prefix(&p.y);
    let conj = f.map(|m| &t_inv * m * &t);
    Ok(conj.max_distance(&f_tilde))
}

/// Differentials of `θ` and `y` at the nonzero point `x` along `v`.
fn ambient_differentials(x: &[f64], r: f64, theta: f64, y: &[f64], v: &[f64]) -> (f64, Vec<f64>) {
    let u: Vec<f64> = x.iter().map(|c| c / r).collect();
    let uv: f64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
    let du: Vec<f64> = v.iter().zip(&u).map(|(vi, ui)| (vi - ui * uv) / r).collect();
    let s = theta.sin();
    let d = du.len() - 1;
    let dtheta = -du[d] / s;
    let dt = &du[..d];
    let ydt: f64 = y.iter().zip(dt).map(|(a, b)| a * b).sum();
    let dy = dt.iter().zip(y).map(|(a, b)| (a - b * ydt) / s).collect();
    (dtheta, dy)
}

/// Field strength on `R^{2n+1} \ {0}` pulled back along `x ↦ x/|x|`,
/// evaluated on every pair of the given ambient tangent vectors.
pub fn ambient_field_form(chart: &GaugeChart, x: &[f64], frame: &[Vec<f64>]) -> Result<MatrixForm> {
    let rep = chart.rep;
    if x.len() != rep.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: rep.ambient_dim(),
            got: x.len(),
        });
    }
    if let Some(v) = frame.iter().find(|v| v.len() != rep.ambient_dim()) {
        return Err(Error::DimensionMismatch {
            expected: rep.ambient_dim(),
            got: v.len(),
        });
    }
    let (r, theta, y) = polar_decompose(x)?;
    chart.check(theta)?;
    let ym = rep.embed_prefix(&y);
    let mut dthetas = Vec::with_capacity(frame.len());
    let mut dys = Vec::with_capacity(frame.len());
    for v in frame {
        let (dt, dy) = ambient_differentials(x, r, theta, &y, v);
        dthetas.push(dt);
        dys.push(rep.embed_prefix(&dy));
    }
    Ok(field_from_differentials(chart, theta, &ym, &dthetas, &dys))
}

/// `𝒻(x)[v1, v2]` for nonzero `x ∈ R^{2n+1}` off the chart's removed axis.
pub fn ambient_field(chart: &GaugeChart, x: &[f64], v1: &[f64], v2: &[f64]) -> Result<CMatrix> {
    let form = ambient_field_form(chart, x, &[v1.to_vec(), v2.to_vec()])?;
    Ok(form.get(&[0, 1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{build_rep, Chirality, ALGEBRAIC_TOL};
    use crate::geometry::random_point;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn point(n: usize, theta: f64) -> ChartPoint {
        let angles: Vec<f64> = (0..2 * n - 1).map(|l| 0.4 + 0.5 * l as f64).collect();
        sphere2n_point(n, theta, &angles).unwrap()
    }

    #[test]
    fn north_pole_section_is_identity() {
        let rep = build_rep(2).unwrap();
        let g = section_at(&GaugeChart::minus(&rep), 0.0, &[1.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(frobenius(&(g - rep.identity())) < ALGEBRAIC_TOL);
        assert!(section_at(&GaugeChart::minus(&rep), PI, &[1.0, 0.0, 0.0, 0.0]).is_err());
        assert!(section_at(&GaugeChart::plus(&rep), 0.0, &[1.0, 0.0, 0.0, 0.0]).is_err());
        assert!(section_at(&GaugeChart::plus(&rep), PI, &[1.0, 0.0, 0.0, 0.0]).is_ok());
    }

    #[test]
    fn section_conjugates_pole_to_point() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=3 {
            let rep = build_rep(n).unwrap();
            let top = rep.gamma(2 * n).clone();
            for _ in 0..200 {
                let p = random_point(n, &mut rng, 1e-3);
                let target = rep.vector_embed(&p.ambient()).unwrap();
                for chart in [GaugeChart::minus(&rep), GaugeChart::plus(&rep)] {
                    let g = section(&chart, &p).unwrap();
                    assert!(frobenius(&(&g * g.adjoint() - rep.identity())) < ALGEBRAIC_TOL);
                    let moved = &g * &top * g.adjoint();
                    assert!(frobenius(&(moved - &target)) < ALGEBRAIC_TOL);
                }
            }
        }
    }

    #[test]
    fn n1_section_at_equator() {
        // θ = π/2, y = e1: g = (1/√2)(I − γ1γ3)
        let rep = build_rep(1).unwrap();
        let g = section_at(&GaugeChart::minus(&rep), PI / 2.0, &[1.0, 0.0]).unwrap();
        let expected = (rep.identity() - rep.monomial(&[0, 2])) * re(std::f64::consts::FRAC_1_SQRT_2);
        assert!(frobenius(&(g - expected)) < ALGEBRAIC_TOL);
    }

    #[test]
    fn potential_vanishes_at_north_pole() {
        let rep = build_rep(2).unwrap();
        let a = potential_closed(&GaugeChart::minus(&rep), &point(2, 1e-9)).unwrap();
        assert!(a.max_norm() < 1e-15);
        let a = potential_from_definition(&GaugeChart::minus(&rep), &point(2, 2e-5), DEFAULT_STEP).unwrap();
        assert!(a.max_norm() < 1e-8);
    }

    #[test]
    fn n1_dirac_potential() {
        let rep = build_rep(1).unwrap();
        let e12 = rep.monomial(&[0, 1]);
        for &(theta, phi) in &[(0.3, 0.0), (1.7, 2.0), (2.9, 5.5)] {
            let p = sphere2n_point(1, theta, &[phi]).unwrap();
            let a = potential_closed(&GaugeChart::minus(&rep), &p).unwrap();
            assert!(a.get(&[0]).iter().all(|z| z.norm() == 0.0));
            let expected = &e12 * (I * (theta / 2.0).sin().powi(2));
            assert!(frobenius(&(a.get(&[1]) - expected)) < ALGEBRAIC_TOL);
            for sign in Chirality::BOTH {
                let block = rep.restrict_chiral(&a.get(&[1]), sign).unwrap();
                let dirac = -sign.sign() * (1.0 - theta.cos()) / 2.0;
                assert!((block[(0, 0)] - re(dirac)).norm() < ALGEBRAIC_TOL);
            }
        }
    }

    #[test]
    fn n1_field_and_abelian_check() {
        let rep = build_rep(1).unwrap();
        let p = sphere2n_point(1, 1.1, &[0.6]).unwrap();
        let chart = GaugeChart::minus(&rep);
        let f = field_closed(&chart, &p).unwrap();
        let expected = rep.monomial(&[0, 1]) * (I * 0.5 * 1.1f64.sin());
        assert!(frobenius(&(f.get(&[0, 1]) - expected)) < ALGEBRAIC_TOL);
        let derived = field_from_potential(&chart, &p, DEFAULT_STEP).unwrap();
        for sign in Chirality::BOTH {
            let block = rep.restrict_chiral(&f.get(&[0, 1]), sign).unwrap()[(0, 0)];
            assert!((block - re(-sign.sign() * 0.5 * 1.1f64.sin())).norm() < ALGEBRAIC_TOL);
            let d = rep.restrict_chiral(&derived.get(&[0, 1]), sign).unwrap()[(0, 0)];
            assert!((d - block).norm() < 1e-9);
        }
    }

    #[test]
    fn equator_mixed_coefficients_n2() {
        let rep = build_rep(2).unwrap();
        let p = point(2, PI / 2.0);
        let f = field_closed(&GaugeChart::minus(&rep), &p).unwrap();
        let ym = rep.embed_prefix(&p.y);
        for (l, j) in p.jac_y.iter().enumerate() {
            let expected = &ym * rep.embed_prefix(j) * (I * 0.5);
            assert!(frobenius(&(f.get(&[0, l + 1]) - expected)) < ALGEBRAIC_TOL);
        }
    }

    #[test]
    fn definitional_potential_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for n in 1..=3 {
            let rep = build_rep(n).unwrap();
            for _ in 0..10 {
                let p = random_point(n, &mut rng, 1e-2);
                for chart in [GaugeChart::minus(&rep), GaugeChart::plus(&rep)] {
                    let closed = potential_closed(&chart, &p).unwrap();
                    let fd = potential_from_definition(&chart, &p, DEFAULT_STEP).unwrap();
                    assert!(closed.max_distance(&fd) < 1e-7, "n={n} {:?}", chart.side);
                }
            }
        }
    }

    #[test]
    fn derived_field_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for n in 1..=3 {
            let rep = build_rep(n).unwrap();
            for _ in 0..10 {
                let p = random_point(n, &mut rng, 1e-2);
                for chart in [GaugeChart::minus(&rep), GaugeChart::plus(&rep)] {
                    let closed = field_closed(&chart, &p).unwrap();
                    let fd = field_from_potential(&chart, &p, DEFAULT_STEP).unwrap();
                    assert!(closed.max_distance(&fd) < 1e-5);
                }
            }
        }
    }

    #[test]
    fn left_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let rep = build_rep(2).unwrap();
        let p = random_point(2, &mut rng, 1e-2);
        let chart = GaugeChart::minus(&rep);
        let base = potential_from_definition(&chart, &p, DEFAULT_STEP).unwrap();
        for _ in 0..20 {
            let h = crate::chern::random_spin_element(&rep, &mut rng);
            let moved = potential_from_definition_with(&chart, &p, DEFAULT_STEP, Some(&h)).unwrap();
            assert!(base.max_distance(&moved) < 1e-8);
        }
    }

    #[test]
    fn coefficients_are_even_and_hermitian() {
        // 𝒜 = −iω with ω in spin(2n), so the coefficients are Hermitian and
        // −i𝒜, −i𝒻 lie in the unitary Lie algebra.
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for n in 1..=3 {
            let rep = build_rep(n).unwrap();
            let p = random_point(n, &mut rng, 1e-2);
            for chart in [GaugeChart::minus(&rep), GaugeChart::plus(&rep)] {
                let a = potential_closed(&chart, &p).unwrap();
                let f = field_closed(&chart, &p).unwrap();
                for m in a.coeffs.values().chain(f.coeffs.values()) {
                    assert!(rep.is_even(m, ALGEBRAIC_TOL));
                    assert!(frobenius(&(m - m.adjoint())) < ALGEBRAIC_TOL);
                }
            }
        }
    }

    #[test]
    fn transitions() {
        let rep = build_rep(2).unwrap();
        let t = transition(&rep, &[0.0, 0.0, 0.0, 1.0]).unwrap();
        assert!(frobenius(&(t + rep.identity())) < ALGEBRAIC_TOL);
        assert!(matches!(transition(&rep, &[0.0, 0.0, 0.0, 2.0]), Err(Error::NotUnit(_))));

        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for n in 1..=3 {
            let rep = build_rep(n).unwrap();
            for _ in 0..10 {
                let p = random_point(n, &mut rng, 1e-2);
                let t = transition(&rep, &p.y).unwrap();
                assert!(frobenius(&(&t * t.adjoint() - rep.identity())) < ALGEBRAIC_TOL);
                assert!(rep.is_even(&t, ALGEBRAIC_TOL));
                assert!(field_transition_residual(&rep, &p).unwrap() < ALGEBRAIC_TOL);
                assert!(transition_law_residual(&rep, &p, DEFAULT_STEP).unwrap() < 1e-8);
                // g̃ = g t
                let g = section(&GaugeChart::minus(&rep), &p).unwrap();
                let gt = section(&GaugeChart::plus(&rep), &p).unwrap();
                assert!(frobenius(&(g * t - gt)) < ALGEBRAIC_TOL);
            }
        }
    }

    #[test]
    fn ambient_field_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for n in 1..=3 {
            let rep = build_rep(n).unwrap();
            for _ in 0..5 {
                let p = random_point(n, &mut rng, 1e-2);
                let chart = GaugeChart::for_theta(&rep, p.theta);
                let x = p.ambient();
                // sphere-tangent frame reproduces the chart field
                let via_ambient = ambient_field_form(&chart, &x, &p.frame).unwrap();
                let via_chart = field_closed(&chart, &p).unwrap();
                assert!(via_ambient.max_distance(&via_chart) < 1e-10);
                // radial contraction vanishes
                for v in &p.frame {
                    let f = ambient_field(&chart, &x, &x, v).unwrap();
                    assert!(frobenius(&f) < 1e-10);
                }
                // x → 2x with tangent vectors doubled leaves the value unchanged
                let x2: Vec<f64> = x.iter().map(|c| 2.0 * c).collect();
                let frame2: Vec<Vec<f64>> =
                    p.frame.iter().map(|v| v.iter().map(|c| 2.0 * c).collect()).collect();
                let scaled = ambient_field_form(&chart, &x2, &frame2).unwrap();
                assert!(scaled.max_distance(&via_chart) < 1e-10);
            }
        }
        let rep = build_rep(1).unwrap();
        let chart = GaugeChart::minus(&rep);
        assert!(ambient_field(&chart, &[0.0, 0.0, -1.0], &[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0]).is_err());
    }

    #[test]
    fn chart_mismatch_is_rejected() {
        let rep = build_rep(2).unwrap();
        let p = point(1, 1.0);
        assert!(matches!(
            potential_closed(&GaugeChart::minus(&rep), &p),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}

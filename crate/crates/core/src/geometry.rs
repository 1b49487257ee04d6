//! Charts and tangent frames for `S^{2n-1}`, `S^{2n}` and star-shaped
//! hypersurfaces around the origin of `R^{2n+1}`.
//!
//! Under the cylindrical metric `dr²/r² + dΩ²` the punctured space is the
//! product `R × S^{2n}`, so every gauge object lives on the unit sphere and
//! the radius only enters through the projection `x ↦ x/|x|`.
//!
//! A point of `S^{2n}` is written `x̂ = cos θ e_{2n+1} + sin θ y` with `y` on
//! `S^{2n-1}`, and `y` in turn uses standard hyperspherical angles.

use std::f64::consts::PI;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Standard hyperspherical embedding of `S^{2n-1} ⊂ R^{2n}`.
///
/// Returns `(y, jacobian, measure)`, where `jacobian[l] = ∂y/∂angles[l]` and
/// `measure = Π sin^{2n-2-l}(angles[l])` is the round volume density.
pub fn hyperspherical_chart(n: usize, angles: &[f64]) -> Result<(Vec<f64>, Vec<Vec<f64>>, f64)> {
    let d = 2 * n;
    let m = d - 1;
    if angles.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: angles.len(),
        });
    }
    let (sin, cos): (Vec<f64>, Vec<f64>) = angles.iter().map(|a| a.sin_cos()).unzip();

    // y_k = (Π_{j<k} sin a_j) · (cos a_k if k < m else 1)
    let factor = |k: usize, j: usize, differentiate: bool| -> f64 {
        if j < k {
            if differentiate {
                cos[j]
            } else {
                sin[j]
            }
        } else if j == k && k < m {
            if differentiate {
                -sin[j]
            } else {
                cos[j]
            }
        } else {
            // a_j does not appear in y_k
            if differentiate {
                0.0
            } else {
                1.0
            }
        }
    };

    let y: Vec<f64> = (0..d)
        .map(|k| (0..m).map(|j| factor(k, j, false)).product())
        .collect();
    let jacobian: Vec<Vec<f64>> = (0..m)
        .map(|l| {
            (0..d)
                .map(|k| (0..m).map(|j| factor(k, j, j == l)).product())
                .collect()
        })
        .collect();
    let measure = sin
        .iter()
        .enumerate()
        .map(|(l, s)| s.powi((m - 1 - l) as i32))
        .product::<f64>()
        .abs();
    Ok((y, jacobian, measure))
}

/// Coordinate box of the `S^{2n}` chart: `θ` first, then the `2n-1` angles.
pub fn chart_box(n: usize) -> Vec<(f64, f64)> {
    let mut b = vec![(0.0, PI); 2 * n];
    b[2 * n - 1] = (0.0, 2.0 * PI);
    b
}

/// `+1` if the chart frame `(∂θ, ∂a_1, …)` is positively oriented for the
/// boundary orientation of `S^{2n}` (outward normal first), `-1` otherwise.
pub fn orientation(n: usize) -> f64 {
    // Any interior point works: the chart is connected and nondegenerate there.
    let angles: Vec<f64> = (0..2 * n - 1).map(|l| 0.7 + 0.1 * l as f64).collect();
    let p = sphere2n_point(n, 1.1, &angles).expect("interior point");
    let d = 2 * n + 1;
    let mut m = DMatrix::<f64>::zeros(d, d);
    for r in 0..d {
        m[(r, 0)] = p.ambient()[r];
        for (c, v) in p.frame.iter().enumerate() {
            m[(r, c + 1)] = v[r];
        }
    }
    m.determinant().signum()
}

/// A point of `S^{2n}` in the polar chart together with its coordinate frame.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartPoint {
    pub n: usize,
    pub theta: f64,
    pub angles: Vec<f64>,
    /// Point of `S^{2n-1}`, length `2n`.
    pub y: Vec<f64>,
    /// `∂y/∂a_l` for each hyperspherical angle.
    pub jac_y: Vec<Vec<f64>>,
    /// Ambient coordinate vectors `∂x̂/∂θ, ∂x̂/∂a_1, …`, each of length `2n+1`.
    pub frame: Vec<Vec<f64>>,
    /// Round-metric density relative to `dθ da_1 ⋯`.
    pub measure: f64,
}

impl ChartPoint {
    /// `x̂ = cos θ e_{2n+1} + sin θ y`.
    pub fn ambient(&self) -> Vec<f64> {
        let (s, c) = self.theta.sin_cos();
        let mut x: Vec<f64> = self.y.iter().map(|v| s * v).collect();
        x.push(c);
        x
    }

    /// Chart coordinates `(θ, a_1, …)`.
    pub fn coords(&self) -> Vec<f64> {
        let mut c = Vec::with_capacity(2 * self.n);
        c.push(self.theta);
        c.extend_from_slice(&self.angles);
        c
    }

    /// Frame dimension `2n`.
    pub fn frame_dim(&self) -> usize {
        2 * self.n
    }
}

/// Chart point of `S^{2n}` at polar angle `theta` and hyperspherical `angles`.
pub fn sphere2n_point(n: usize, theta: f64, angles: &[f64]) -> Result<ChartPoint> {
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::DegeneratePoint(format!(
            "polar angle {theta} is at or beyond a pole"
        )));
    }
    let (y, jac_y, sphere_measure) = hyperspherical_chart(n, angles)?;
    let (s, c) = theta.sin_cos();
    let mut frame = Vec::with_capacity(2 * n);
    let mut d_theta: Vec<f64> = y.iter().map(|v| c * v).collect();
    d_theta.push(-s);
    frame.push(d_theta);
    for j in &jac_y {
        let mut v: Vec<f64> = j.iter().map(|u| s * u).collect();
        v.push(0.0);
        frame.push(v);
    }
    Ok(ChartPoint {
        n,
        theta,
        angles: angles.to_vec(),
        y,
        jac_y,
        frame,
        measure: s.powi((2 * n - 1) as i32) * sphere_measure,
    })
}

/// Uniformly drawn chart point, kept `margin` away from the polar and
/// hyperspherical coordinate singularities.
pub fn random_point<R: rand::Rng + ?Sized>(n: usize, rng: &mut R, margin: f64) -> ChartPoint {
    let theta = rng.gen_range(margin..PI - margin);
    let angles: Vec<f64> = (0..2 * n - 1)
        .map(|l| {
            if l + 1 < 2 * n - 1 {
                rng.gen_range(margin..PI - margin)
            } else {
                rng.gen_range(0.0..2.0 * PI)
            }
        })
        .collect();
    sphere2n_point(n, theta, &angles).expect("interior point")
}

/// Splits a nonzero `x ∈ R^{2n+1}` into `(r, θ, y)` with
/// `x = r cos θ e_{2n+1} + r sin θ y`.
pub fn polar_decompose(x: &[f64]) -> Result<(f64, f64, Vec<f64>)> {
    let r = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if r == 0.0 {
        return Err(Error::DegeneratePoint("origin".into()));
    }
    let (tail, last) = x.split_at(x.len() - 1);
    let rho = tail.iter().map(|v| v * v).sum::<f64>().sqrt();
    if rho <= 1e-14 * r {
        return Err(Error::DegeneratePoint("point on the polar axis".into()));
    }
    let theta = rho.atan2(last[0]);
    Ok((r, theta, tail.iter().map(|v| v / rho).collect()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceKind {
    Sphere,
    Ellipsoid,
}

/// Closed star-shaped hypersurface `Σ (x_i / axes_i)² = 1`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Surface {
    pub kind: SurfaceKind,
    pub axes: Vec<f64>,
}

impl Surface {
    /// Unit sphere `S^{2n}`.
    pub fn sphere(n: usize) -> Self {
        Self {
            kind: SurfaceKind::Sphere,
            axes: vec![1.0; 2 * n + 1],
        }
    }

    pub fn ellipsoid(axes: &[f64]) -> Result<Self> {
        if axes.len() < 3 || axes.len() % 2 == 0 {
            return Err(Error::InvalidParameter(format!(
                "ellipsoid needs an odd number (>= 3) of axes, got {}",
                axes.len()
            )));
        }
        if axes.iter().any(|a| !(*a > 0.0) || !a.is_finite()) {
            return Err(Error::InvalidParameter("ellipsoid axes must be positive".into()));
        }
        let kind = if axes.iter().all(|a| *a == 1.0) {
            SurfaceKind::Sphere
        } else {
            SurfaceKind::Ellipsoid
        };
        Ok(Self {
            kind,
            axes: axes.to_vec(),
        })
    }

    /// `n` such that the surface lives in `R^{2n+1}`.
    pub fn n(&self) -> usize {
        (self.axes.len() - 1) / 2
    }

    pub fn is_sphere(&self) -> bool {
        self.kind == SurfaceKind::Sphere
    }

    pub fn describe(&self) -> String {
        match self.kind {
            SurfaceKind::Sphere => "sphere".to_string(),
            SurfaceKind::Ellipsoid => {
                let a: Vec<String> = self.axes.iter().map(|v| format!("{v}")).collect();
                format!("ellipsoid({})", a.join(","))
            }
        }
    }
}

/// Point of the surface over the sphere chart point, with its coordinate frame.
pub fn surface_point(s: &Surface, theta: f64, angles: &[f64]) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let p = sphere2n_point(s.n(), theta, angles)?;
    let scale = |v: &[f64]| -> Vec<f64> { v.iter().zip(&s.axes).map(|(x, a)| x * a).collect() };
    let point = scale(&p.ambient());
    let frame = p.frame.iter().map(|v| scale(v)).collect();
    Ok((point, frame))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::GaussLegendre;

    fn norm(v: &[f64]) -> f64 {
        v.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn dot(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn circle_chart() {
        let phi = 0.83;
        let (y, j, m) = hyperspherical_chart(1, &[phi]).unwrap();
        assert!((y[0] - phi.cos()).abs() < 1e-15 && (y[1] - phi.sin()).abs() < 1e-15);
        assert!((j[0][0] + phi.sin()).abs() < 1e-15 && (j[0][1] - phi.cos()).abs() < 1e-15);
        assert_eq!(m, 1.0);
    }

    #[test]
    fn chart_invariants() {
        for n in 1..=4 {
            let angles: Vec<f64> = (0..2 * n - 1).map(|l| 0.3 + 0.37 * l as f64).collect();
            let (y, jac, m) = hyperspherical_chart(n, &angles).unwrap();
            assert!((norm(&y) - 1.0).abs() < 1e-12);
            assert!(m > 0.0);
            for col in &jac {
                assert!(dot(&y, col).abs() < 1e-12);
            }
        }
        assert!(hyperspherical_chart(2, &[0.1]).is_err());
    }

    #[test]
    fn jacobian_matches_finite_differences() {
        let n = 3;
        let angles = [0.4, 1.1, 2.0, 0.9, 4.0];
        let (_, jac, _) = hyperspherical_chart(n, &angles).unwrap();
        let h = 1e-6;
        for l in 0..angles.len() {
            let mut a = angles;
            a[l] += h;
            let (yp, _, _) = hyperspherical_chart(n, &a).unwrap();
            a[l] -= 2.0 * h;
            let (ym, _, _) = hyperspherical_chart(n, &a).unwrap();
            for k in 0..2 * n {
                assert!(((yp[k] - ym[k]) / (2.0 * h) - jac[l][k]).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn three_sphere_area() {
        // |S³| = 2π²
        let gl = GaussLegendre::new(24);
        let b = chart_box(2);
        let mut total = 0.0;
        for (a1, w1) in gl.on(b[1].0, b[1].1) {
            for (a2, w2) in gl.on(b[2].0, b[2].1) {
                for (a3, w3) in gl.on(b[3].0, b[3].1) {
                    total += w1 * w2 * w3 * hyperspherical_chart(2, &[a1, a2, a3]).unwrap().2;
                }
            }
        }
        assert!((total - 2.0 * PI * PI).abs() < 1e-8);
    }

    #[test]
    fn two_sphere_area() {
        let gl = GaussLegendre::new(32);
        let mut total = 0.0;
        for (t, wt) in gl.on(0.0, PI) {
            for (p, wp) in gl.on(0.0, 2.0 * PI) {
                total += wt * wp * sphere2n_point(1, t, &[p]).unwrap().measure;
            }
        }
        assert!((total - 4.0 * PI).abs() < 1e-10);
    }

    #[test]
    fn sphere_point_examples() {
        let p = sphere2n_point(1, PI / 2.0, &[0.0]).unwrap();
        let x = p.ambient();
        assert!((x[0] - 1.0).abs() < 1e-15 && x[1].abs() < 1e-15 && x[2].abs() < 1e-15);

        let angles = [0.5, 1.2, 3.0];
        let p = sphere2n_point(2, PI / 2.0, &angles).unwrap();
        let (_, _, m) = hyperspherical_chart(2, &angles).unwrap();
        assert!((p.measure - m).abs() < 1e-15);
        assert!((norm(&p.ambient()) - 1.0).abs() < 1e-12);

        assert!(sphere2n_point(1, 0.0, &[0.0]).is_err());
        assert!(sphere2n_point(1, PI, &[0.0]).is_err());
    }

    #[test]
    fn frame_is_derivative_of_ambient() {
        let (theta, angles) = (1.3, [0.6, 2.2, 5.0]);
        let p = sphere2n_point(2, theta, &angles).unwrap();
        let h = 1e-6;
        let coords = p.coords();
        for (k, v) in p.frame.iter().enumerate() {
            let mut c = coords.clone();
            c[k] += h;
            let xp = sphere2n_point(2, c[0], &c[1..]).unwrap().ambient();
            c[k] -= 2.0 * h;
            let xm = sphere2n_point(2, c[0], &c[1..]).unwrap().ambient();
            for r in 0..5 {
                assert!(((xp[r] - xm[r]) / (2.0 * h) - v[r]).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn polar_round_trip() {
        let p = sphere2n_point(3, 2.1, &[0.3, 1.0, 2.5, 0.8, 3.3]).unwrap();
        let x: Vec<f64> = p.ambient().iter().map(|v| 3.5 * v).collect();
        let (r, theta, y) = polar_decompose(&x).unwrap();
        assert!((r - 3.5).abs() < 1e-12);
        assert!((theta - 2.1).abs() < 1e-10);
        for (a, b) in y.iter().zip(&p.y) {
            assert!((a - b).abs() < 1e-10);
        }
        assert!(polar_decompose(&[0.0, 0.0, 2.0]).is_err());
        assert!(polar_decompose(&[0.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn frame_orientation_is_positive() {
        for n in 1..=4 {
            assert_eq!(orientation(n), 1.0, "n = {n}");
        }
    }

    #[test]
    fn surface_examples() {
        let s = Surface::sphere(1);
        let (x, frame) = surface_point(&s, 0.9, &[1.4]).unwrap();
        let p = sphere2n_point(1, 0.9, &[1.4]).unwrap();
        assert_eq!(x, p.ambient());
        assert_eq!(frame, p.frame);

        let e = Surface::ellipsoid(&[2.0, 1.0, 1.0]).unwrap();
        let (x, _) = surface_point(&e, PI / 2.0, &[0.0]).unwrap();
        assert!((x[0] - 2.0).abs() < 1e-15 && x[1].abs() < 1e-15 && x[2].abs() < 1e-15);

        let e = Surface::ellipsoid(&[1.0, 1.5, 0.7, 2.0, 0.5]).unwrap();
        let (x, _) = surface_point(&e, 0.77, &[0.1, 2.0, 4.4]).unwrap();
        let q: f64 = x.iter().zip(&e.axes).map(|(v, a)| (v / a).powi(2)).sum();
        assert!((q - 1.0).abs() < 1e-12);

        assert!(Surface::ellipsoid(&[1.0, -1.0, 1.0]).is_err());
        assert!(Surface::ellipsoid(&[1.0, 1.0]).is_err());
        assert!(Surface::ellipsoid(&[1.0, 1.0, 1.0]).unwrap().is_sphere());
    }
}

//! The charge through ellipsoids equals the charge through the unit sphere.

use monopole::chern::charge_quadrature;
use monopole::clifford::{build_rep, Chirality};
use monopole::geometry::Surface;

fn main() -> monopole::Result<()> {
    let cases: [(&[f64], usize); 4] = [
        (&[1.0, 1.0, 1.0], 48),
        (&[1.0, 1.5, 0.7], 48),
        (&[2.0, 1.0, 1.0], 64),
        (&[2.0, 1.0, 1.5, 1.0, 1.2], 24),
    ];
    for (axes, res) in cases {
        let n = (axes.len() - 1) / 2;
        let rep = build_rep(n)?;
        let surface = Surface::ellipsoid(axes)?;
        let r = charge_quadrature(&rep, Chirality::Plus, &surface, res)?;
        println!("{:<28} {res:>3} nodes/axis: {:.12}", surface.describe(), r.value);
    }
    Ok(())
}

//! The n = 1 case: a U(1) potential on S^2 and its unit flux.

use std::f64::consts::PI;

use monopole::chern::charge_quadrature;
use monopole::clifford::{build_rep, Chirality};
use monopole::gauge::{field_closed, potential_closed, GaugeChart};
use monopole::geometry::{sphere2n_point, Surface};

fn main() -> monopole::Result<()> {
    let rep = build_rep(1)?;
    println!("{:>6} {:>12} {:>12} {:>12}", "theta", "A_phi (V-)", "A_phi (V+)", "F_theta_phi");
    for k in 1..8 {
        let theta = k as f64 * PI / 8.0;
        let p = sphere2n_point(1, theta, &[0.3])?;
        let minus = potential_closed(&GaugeChart::minus(&rep), &p)?.get(&[1]);
        let plus = potential_closed(&GaugeChart::plus(&rep), &p)?.get(&[1]);
        let f = field_closed(&GaugeChart::minus(&rep), &p)?.get(&[0, 1]);
        let s = Chirality::Plus;
        println!(
            "{theta:>6.3} {:>12.6} {:>12.6} {:>12.6}",
            rep.restrict_chiral(&minus, s)?[(0, 0)].re,
            rep.restrict_chiral(&plus, s)?[(0, 0)].re,
            rep.restrict_chiral(&f, s)?[(0, 0)].re,
        );
    }
    for s in Chirality::BOTH {
        let r = charge_quadrature(&rep, s, &Surface::sphere(1), 32)?;
        println!("flux of -F_{s}/2pi: {:+.15} (error estimate {:.1e})", r.value, r.error_estimate);
    }
    Ok(())
}

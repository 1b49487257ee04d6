//! The n = 2 case: SU(2) potentials on S^4 and second Chern number +-1.
//!
//!     cargo run --release --example yang_monopole -- 24

use monopole::chern::charge_quadrature;
use monopole::clifford::{build_rep, Chirality};
use monopole::geometry::Surface;

fn main() -> monopole::Result<()> {
    let resolution: usize = std::env::args().nth(1).map_or(16, |s| s.parse().expect("resolution"));
    let rep = build_rep(2)?;
    for s in Chirality::BOTH {
        let r = charge_quadrature(&rep, s, &Surface::sphere(2), resolution)?;
        println!(
            "(1/8pi^2) int Tr F_{s}^2 = {:+.12}  [{} nodes, delta {:.1e}, {:.2}s]",
            r.value, r.nodes_or_samples, r.error_estimate, r.wall_time
        );
    }
    Ok(())
}

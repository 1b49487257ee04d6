//! Monte Carlo charge on S^6 (n = 3) and S^8 (n = 4).
//!
//!     cargo run --release --example higher_dim_montecarlo -- 3 1000000

use monopole::chern::charge_montecarlo;
use monopole::clifford::{build_rep, Chirality};
use monopole::geometry::Surface;

fn main() -> monopole::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(3, |s| s.parse().expect("n"));
    let samples: usize = args.next().map_or(100_000, |s| s.parse().expect("samples"));
    let rep = build_rep(n)?;
    for s in Chirality::BOTH {
        let r = charge_montecarlo(&rep, s, &Surface::sphere(n), samples, 42)?;
        let z = (r.value - s.sign()) / r.error_estimate;
        println!(
            "n={n} {s}: {:+.5} +- {:.5}  ({z:+.2} sigma from {:+}, {:.1}s)",
            r.value,
            r.error_estimate,
            s.sign(),
            r.wall_time
        );
    }
    Ok(())
}

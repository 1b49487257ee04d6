//! Gamma matrices for Cl(2n+1), the chirality matrix and the two half-spin blocks.
//!
//!     cargo run --example clifford_basics -- 3

use monopole::clifford::{build_rep, frobenius, i_pow, Chirality};

fn main() -> monopole::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(2, |s| s.parse().expect("n must be an integer"));
    let rep = build_rep(n)?;
    println!("Cl({}) on C^{}, half-spin dimension {}", rep.ambient_dim(), rep.dim_spinor, rep.half_dim());

    let mut worst: f64 = 0.0;
    for i in 0..rep.ambient_dim() {
        let sq = rep.gamma(i) * rep.gamma(i) + rep.identity();
        worst = worst.max(frobenius(&sq));
        for j in 0..i {
            worst = worst.max(frobenius(&(rep.gamma(i) * rep.gamma(j) + rep.gamma(j) * rep.gamma(i))));
        }
    }
    println!("max |e_i e_j + e_j e_i + 2 delta_ij| = {worst:.1e}");

    for s in Chirality::BOTH {
        let block = rep.restrict_chiral(&rep.chirality, s)?;
        let target = i_pow(n) * s.sign();
        let z = block[(0, 0)];
        println!(
            "rho_{s}(e_1...e_{}) = ({:+} {:+}i) I, expected ({:+} {:+}i)",
            2 * n,
            z.re + 0.0,
            z.im + 0.0,
            target.re + 0.0,
            target.im + 0.0
        );
    }

    // e_{2n+1} is a multiple of the chirality matrix; e_1 swaps the two halves.
    let top = rep.restrict_chiral(rep.gamma(2 * n), Chirality::Plus)?;
    println!("rho_+(e_{}) = ({:+} {:+}i) I", 2 * n + 1, top[(0, 0)].re, top[(0, 0)].im);
    if let Err(e) = rep.restrict_chiral(rep.gamma(0), Chirality::Plus) {
        println!("restricting e_1: {e}");
    }
    Ok(())
}

//! Chiral traces of bivectors: unit modulus for n = 1, zero for n >= 2.

use monopole::chern::traceless_report;
use monopole::clifford::build_rep;

fn main() -> monopole::Result<()> {
    for n in 1..=4 {
        let entries = traceless_report(&build_rep(n)?)?;
        let max = entries.iter().map(|e| e.magnitude()).fold(0.0, f64::max);
        println!("n={n}: {} traces, max |Tr| = {max:.3e}", entries.len());
        if n == 1 {
            for e in &entries {
                println!("    Tr_{}(e{} e{}) = {:+} {:+}i", e.sign, e.i, e.j, e.re, e.im);
            }
        }
    }
    Ok(())
}

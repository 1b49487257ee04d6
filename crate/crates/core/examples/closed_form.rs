//! Exact evaluation of the sphere charge as a rational multiple of a power of pi.

use monopole::chern::{charge_closed_form, closed_form_factors};
use monopole::clifford::Chirality;

fn main() -> monopole::Result<()> {
    for n in 1..=10 {
        let [a, b, c] = closed_form_factors(n);
        let r = charge_closed_form(n, Chirality::Minus)?;
        println!(
            "n={n:>2}: ({} pi^{}) ({} pi^{}) ({} pi^{}) -> {:+}",
            a.coefficient, a.pi_power, b.coefficient, b.pi_power, c.coefficient, c.pi_power, r.value
        );
    }
    Ok(())
}

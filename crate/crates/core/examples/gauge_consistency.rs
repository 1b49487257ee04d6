//! Closed-form potentials and fields against finite differences of the
//! section, and the chart-transition identities, at random points.

use monopole::clifford::{build_rep, frobenius};
use monopole::gauge::{
    field_closed, field_from_potential, field_transition_residual, potential_closed, potential_from_definition,
    section, transition_law_residual, GaugeChart, DEFAULT_STEP,
};
use monopole::geometry::random_point;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> monopole::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 1..=3 {
        let rep = build_rep(n)?;
        let (mut sec, mut pot, mut fld, mut tr_f, mut tr_a) = (0f64, 0f64, 0f64, 0f64, 0f64);
        for _ in 0..25 {
            let p = random_point(n, &mut rng, 1e-2);
            for chart in [GaugeChart::minus(&rep), GaugeChart::plus(&rep)] {
                let g = section(&chart, &p)?;
                let x = rep.vector_embed(&p.ambient())?;
                sec = sec.max(frobenius(&(&g * rep.gamma(2 * n) * g.adjoint() - x)));
                let a = potential_closed(&chart, &p)?;
                pot = pot.max(a.max_distance(&potential_from_definition(&chart, &p, DEFAULT_STEP)?));
                let f = field_closed(&chart, &p)?;
                fld = fld.max(f.max_distance(&field_from_potential(&chart, &p, DEFAULT_STEP)?));
            }
            tr_f = tr_f.max(field_transition_residual(&rep, &p)?);
            tr_a = tr_a.max(transition_law_residual(&rep, &p, DEFAULT_STEP)?);
        }
        println!("n={n}");
        println!("  g e g^-1 = x                {sec:.1e}");
        println!("  A = -i Pr(g^-1 dg)          {pot:.1e}");
        println!("  F = dA + iA^2               {fld:.1e}");
        println!("  F~ = e y F y e              {tr_f:.1e}");
        println!("  A~ = t^-1 A t - i t^-1 dt  {tr_a:.1e}");
    }
    Ok(())
}

//! Command-line front end. Each subcommand runs a suite of checks and emits
//! one report. Exit codes: `0` every check passed, `1` some check failed or
//! the run aborted, `2` usage error.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chern::{
    charge_closed_form, charge_montecarlo, charge_quadrature, random_spin_element, traceless_report, ChargeReport,
    MIN_RESOLUTION, MIN_SAMPLES, MONTE_CARLO_MAX_N, QUADRATURE_MAX_N,
};
use crate::clifford::{build_rep, frobenius, i_pow, CMatrix, Chirality, CliffordRep, DEFAULT_MAX_N};
use crate::error::{Error, Result};
use crate::gauge::{
    field_closed, field_from_potential, field_transition_residual, potential_closed, potential_from_definition,
    potential_from_definition_with, section, transition, transition_law_residual, GaugeChart, DEFAULT_STEP,
};
use crate::geometry::{random_point, Surface};
use crate::report::{emit_report, Check, Format};

/// Claims referenced by emitted checks.
pub mod claims {
    pub const CLIFFORD: &str = "xy+yx=-2x.y";
    pub const CHIRALITY: &str = "rho_pm(e_1...e_2n) = ±i^n I_{2^(n-1)}";
    pub const HALF_SPIN: &str = "two fundamental spin representations rho_pm of dimension 2^(n-1)";
    pub const TRACELESS: &str = "Tr_rho_pm(e_i e_j) = 0 if i != j";
    pub const SECTION: &str = "x = g(x) e_{2n+1} g(x)^-1";
    pub const CONNECTION: &str = "omega(g) = Pr(g^-1 dg), A = -i omega(g)";
    pub const INVARIANCE: &str = "omega(hg) = omega(g) for any h in Spin(2n+1)";
    pub const FIELD: &str = "F = dA + iA^2";
    pub const FIELD_TRANSITION: &str = "F~(x) = e_2n y F(x) y e_2n";
    pub const POTENTIAL_TRANSITION: &str = "A~ = t^-1 A t - i t^-1 dt, t = y e_2n";
    pub const UNITARY: &str = "A_pm are U(2^(n-1))-gauge fields";
    pub const CHARGE: &str = "int_Sigma (1/n!) Tr(-F_pm/2pi)^n = ±1";
    pub const DIRAC: &str = "n=1: Dirac monopole with magnetic charge g = ±1/2";
    pub const YANG: &str = "n=2: Yang monopoles, int (1/8pi^2) Tr F^2 = ±1";
    pub const CLOSED_FORM: &str = "±n(2n-1)!!/(2pi)^n vol(B^2n) int_0^pi sin^(2n-1) = ±1";
    pub const SURFACE: &str = "any closed hypersurface around the origin (Stokes + Bianchi)";
    pub const PLUMBING: &str = "plumbing";
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SignArg {
    Plus,
    Minus,
    Both,
}

impl SignArg {
    fn signs(self) -> Vec<Chirality> {
        match self {
            SignArg::Plus => vec![Chirality::Plus],
            SignArg::Minus => vec![Chirality::Minus],
            SignArg::Both => Chirality::BOTH.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum MethodArg {
    ClosedForm,
    Quadrature,
    MonteCarlo,
}

/// Monopole charges and gauge-field identities from explicit gamma matrices.
#[derive(Debug, Clone, Parser, Serialize)]
#[command(name = "monopole", version, about)]
pub struct RunConfig {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
    /// Seed for random test points and Monte Carlo sampling.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Tolerance for exact algebraic identities.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol_algebraic: f64,
    /// Tolerance for quadrature charges [default: 1e-8; 1e-10 for `dirac`; 1e-6 on ellipsoids].
    #[arg(long, global = true)]
    pub tol_quadrature: Option<f64>,
    /// Monte Carlo acceptance width in standard errors.
    #[arg(long, global = true, default_value_t = 3.0)]
    pub sigma: f64,
    /// Record per-check wall time (makes reports run-dependent).
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case", tag = "name")]
pub enum Command {
    /// Anticommutation, chirality and projector invariants [default: n = 1..5].
    VerifyClifford {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Chiral traces of e_i e_j for i != j [default: n = 1..4].
    Traceless {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Closed-form potentials and fields against their definitions [default: n = 1..3].
    Potentials {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 100)]
        points: usize,
        #[arg(long, default_value_t = DEFAULT_STEP)]
        step: f64,
    },
    /// Chart-transition identities for fields and potentials [default: n = 1..3].
    Transition {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 100)]
        points: usize,
        #[arg(long, default_value_t = DEFAULT_STEP)]
        step: f64,
    },
    /// Integrate the charge over a sphere or ellipsoid.
    Charge {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SignArg::Both)]
        sign: SignArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Quadrature)]
        method: MethodArg,
        /// Gauss-Legendre nodes per axis [default: 32, 24, 12 for n = 1, 2, 3; 64, 32 on ellipsoids].
        #[arg(long)]
        resolution: Option<usize>,
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
        /// Ellipsoid semi-axes, comma separated (2n+1 values).
        #[arg(long, value_delimiter = ',')]
        axes: Option<Vec<f64>>,
    },
    /// The n = 1 (Dirac) suite: potential profile and unit flux.
    Dirac {
        #[arg(long, default_value_t = 50)]
        points: usize,
        #[arg(long, default_value_t = 32)]
        resolution: usize,
    },
    /// The n = 2 (Yang) suite: SU(2) potentials and second-Chern charge.
    Yang {
        #[arg(long, default_value_t = 24)]
        resolution: usize,
    },
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn check_n(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::UnsupportedRank { n, max });
    }
    Ok(())
}

impl RunConfig {
    /// Parameter-range validation; failures are usage errors.
    pub fn validate(&self) -> Result<()> {
        if !(self.tol_algebraic >= 0.0) || !(self.sigma > 0.0) {
            return Err(usage("tolerances must be non-negative and sigma positive"));
        }
        if let Some(t) = self.tol_quadrature {
            if !(t >= 0.0) {
                return Err(usage("quadrature tolerance must be non-negative"));
            }
        }
        match &self.command {
            Command::VerifyClifford { n } => n.map_or(Ok(()), |n| check_n(n, DEFAULT_MAX_N)),
            Command::Traceless { n } => n.map_or(Ok(()), |n| check_n(n, DEFAULT_MAX_N)),
            Command::Potentials { n, points, step } | Command::Transition { n, points, step } => {
                if let Some(n) = n {
                    check_n(*n, QUADRATURE_MAX_N)?;
                }
                if *points == 0 || !(*step > 0.0) {
                    return Err(usage("points must be positive and step > 0"));
                }
                Ok(())
            }
            Command::Charge {
                n,
                method,
                resolution,
                samples,
                axes,
                ..
            } => {
                match method {
                    MethodArg::ClosedForm => check_n(*n, 64)?,
                    MethodArg::Quadrature => check_n(*n, QUADRATURE_MAX_N)?,
                    MethodArg::MonteCarlo => check_n(*n, MONTE_CARLO_MAX_N)?,
                }
                if let Some(r) = resolution {
                    if *r < MIN_RESOLUTION {
                        return Err(usage(format!("resolution must be >= {MIN_RESOLUTION}")));
                    }
                }
                if *method == MethodArg::MonteCarlo && *samples < MIN_SAMPLES {
                    return Err(usage(format!("samples must be >= {MIN_SAMPLES}")));
                }
                if let Some(a) = axes {
                    if a.len() != 2 * n + 1 {
                        return Err(usage(format!("expected {} axes, got {}", 2 * n + 1, a.len())));
                    }
                    Surface::ellipsoid(a)?;
                    if *method == MethodArg::ClosedForm {
                        return Err(usage("closed-form charge is only defined on the sphere"));
                    }
                }
                Ok(())
            }
            Command::Dirac { points, resolution } => {
                if *points == 0 || *resolution < MIN_RESOLUTION {
                    return Err(usage("points must be positive and resolution >= 4"));
                }
                Ok(())
            }
            Command::Yang { resolution } => {
                if *resolution < MIN_RESOLUTION {
                    return Err(usage("resolution must be >= 4"));
                }
                Ok(())
            }
        }
    }
}

/// Times each check when enabled.
struct Recorder {
    timings: bool,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(timings: bool) -> Self {
        Self {
            timings,
            checks: Vec::new(),
        }
    }

    fn run(&mut self, f: impl FnOnce() -> Result<Check>) -> Result<()> {
        let start = Instant::now();
        let check = f()?;
        let elapsed = self.timings.then(|| start.elapsed().as_secs_f64());
        self.checks.push(check.with_runtime(elapsed));
        Ok(())
    }

    fn run_many(&mut self, f: impl FnOnce() -> Result<Vec<Check>>) -> Result<()> {
        let start = Instant::now();
        let checks = f()?;
        let share = self
            .timings
            .then(|| start.elapsed().as_secs_f64() / checks.len().max(1) as f64);
        self.checks.extend(checks.into_iter().map(|c| c.with_runtime(share)));
        Ok(())
    }
}

/// Anticommutation, anti-Hermiticity, chirality and projector checks for one `n`.
pub fn clifford_checks(rep: &CliffordRep, tol: f64) -> Vec<Check> {
    let n = rep.n;
    let id = rep.identity();
    let two = Complex64::new(2.0, 0.0);
    let mut anti: f64 = 0.0;
    for i in 0..rep.ambient_dim() {
        for j in 0..rep.ambient_dim() {
            let mut m = rep.gamma(i) * rep.gamma(j) + rep.gamma(j) * rep.gamma(i);
            if i == j {
                m += &id * two;
            }
            anti = anti.max(frobenius(&m));
        }
    }
    let herm = rep
        .gammas
        .iter()
        .map(|g| frobenius(&(g + g.adjoint())))
        .fold(0.0, f64::max);
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let square = frobenius(&(&rep.chirality * &rep.chirality - &id * Complex64::new(sign, 0.0)));
    let (p, m) = (&rep.projector_plus, &rep.projector_minus);
    let idem = frobenius(&(p * p - p)).max(frobenius(&(m * m - m)));
    let complete = frobenius(&(p + m - &id));
    let orth = frobenius(&(p * m));
    let mut checks = vec![
        Check::residual(format!("anticommutation n={n}"), claims::CLIFFORD, anti, tol),
        Check::residual(format!("anti-hermitian gammas n={n}"), claims::CLIFFORD, herm, tol),
        Check::residual(format!("chirality square (-1)^n n={n}"), claims::CHIRALITY, square, tol),
        Check::residual(format!("projector idempotence n={n}"), claims::HALF_SPIN, idem, tol),
        Check::residual(format!("projector completeness n={n}"), claims::HALF_SPIN, complete, tol),
        Check::residual(format!("projector orthogonality n={n}"), claims::HALF_SPIN, orth, tol),
    ];
    for s in Chirality::BOTH {
        let rank = rep.projector(s).trace().re;
        checks.push(Check::within(
            format!("projector rank {s} n={n}"),
            claims::HALF_SPIN,
            rank,
            rep.half_dim() as f64,
            tol,
        ));
        let block = rep.chiral_block(&rep.chirality, s);
        let expected = CMatrix::identity(rep.half_dim(), rep.half_dim()) * (i_pow(n) * s.sign());
        checks.push(Check::residual(
            format!("chiral block of e1...e2n {s} n={n}"),
            claims::CHIRALITY,
            frobenius(&(block - expected)),
            tol,
        ));
    }
    checks
}

/// Off-diagonal chiral bivector traces: zero for `n > 1`, unit modulus at `n = 1`.
pub fn traceless_checks(rep: &CliffordRep, tol: f64) -> Result<Vec<Check>> {
    let n = rep.n;
    Ok(traceless_report(rep)?
        .into_iter()
        .map(|e| {
            let name = format!("Tr_{}(e{} e{}) n={n}", e.sign, e.i, e.j);
            if n == 1 {
                Check::within(name, claims::UNITARY, e.magnitude(), 1.0, tol)
            } else {
                Check::residual(name, claims::TRACELESS, e.magnitude(), tol)
            }
        })
        .collect())
}

/// Section, definitional potential, derived field and left-invariance checks.
pub fn potential_checks(n: usize, points: usize, step: f64, seed: u64, tol: f64) -> Result<Vec<Check>> {
    let rep = build_rep(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<_> = (0..points).map(|_| random_point(n, &mut rng, 1e-2)).collect();
    let top = rep.gamma(2 * n).clone();
    let mut checks = Vec::new();
    for chart in [GaugeChart::minus(&rep), GaugeChart::plus(&rep)] {
        let side = match chart.side {
            crate::gauge::Side::Minus => "V-",
            crate::gauge::Side::Plus => "V+",
        };
        let (mut sec, mut pot, mut fld, mut inv, mut even, mut herm) = (0f64, 0f64, 0f64, 0f64, 0f64, 0f64);
        for (k, p) in pts.iter().enumerate() {
            let g = section(&chart, p)?;
            let target = rep.vector_embed(&p.ambient())?;
            sec = sec.max(frobenius(&(&g * &top * g.adjoint() - target)));

            let closed = potential_closed(&chart, p)?;
            let fd = potential_from_definition(&chart, p, step)?;
            pot = pot.max(closed.max_distance(&fd));

            let f = field_closed(&chart, p)?;
            fld = fld.max(f.max_distance(&field_from_potential(&chart, p, step)?));

            for m in closed.coeffs.values().chain(f.coeffs.values()) {
                even = even.max(frobenius(&(m * &rep.chirality - &rep.chirality * m)));
                herm = herm.max(frobenius(&(m - m.adjoint())));
            }
            if k < 20 {
                let h = random_spin_element(&rep, &mut rng);
                let moved = potential_from_definition_with(&chart, p, step, Some(&h))?;
                inv = inv.max(moved.max_distance(&fd));
            }
        }
        checks.push(Check::residual(format!("section conjugation {side} n={n}"), claims::SECTION, sec, tol));
        checks.push(Check::residual(format!("potential vs Pr(g^-1 dg) {side} n={n}"), claims::CONNECTION, pot, 1e-7));
        checks.push(Check::residual(format!("field vs dA + iA^2 {side} n={n}"), claims::FIELD, fld, 1e-5));
        checks.push(Check::residual(format!("left invariance {side} n={n}"), claims::INVARIANCE, inv, 1e-8));
        checks.push(Check::residual(format!("chirality-even coefficients {side} n={n}"), claims::HALF_SPIN, even, tol));
        checks.push(Check::residual(format!("hermitian coefficients {side} n={n}"), claims::UNITARY, herm, tol));
    }
    Ok(checks)
}

/// Field conjugation and potential transformation law on the chart overlap.
pub fn transition_checks(n: usize, points: usize, step: f64, seed: u64, tol: f64) -> Result<Vec<Check>> {
    let rep = build_rep(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut field, mut law, mut unitary) = (0f64, 0f64, 0f64);
    for _ in 0..points {
        let p = random_point(n, &mut rng, 1e-2);
        field = field.max(field_transition_residual(&rep, &p)?);
        law = law.max(transition_law_residual(&rep, &p, step)?);
        let t = transition(&rep, &p.y)?;
        unitary = unitary.max(frobenius(&(&t * t.adjoint() - rep.identity())));
    }
    Ok(vec![
        Check::residual(format!("field conjugation n={n}"), claims::FIELD_TRANSITION, field, tol),
        Check::residual(format!("potential transformation n={n}"), claims::POTENTIAL_TRANSITION, law, 1e-8),
        Check::residual(format!("transition unitary n={n}"), claims::POTENTIAL_TRANSITION, unitary, tol),
    ])
}

/// Check for a computed charge against `±1`.
pub fn charge_check(report: &ChargeReport, tol_quadrature: f64, sigma: f64, claim: &str) -> Check {
    let tol = match report.method {
        crate::chern::Method::ClosedForm => 0.0,
        crate::chern::Method::Quadrature => tol_quadrature,
        crate::chern::Method::MonteCarlo => sigma * report.error_estimate,
    };
    let method = serde_json::to_value(report.method)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default();
    Check::within(
        format!("charge n={} {} {} {}", report.n, report.sign, method, report.surface),
        claim,
        report.value,
        report.sign.sign(),
        tol,
    )
}

fn default_resolution(n: usize, sphere: bool) -> usize {
    match (n, sphere) {
        (1, true) => 32,
        (1, false) => 64,
        (2, true) => 24,
        (2, false) => 32,
        _ => 12,
    }
}

/// n = 1: chiral potentials `∓(1 − cos θ)/2` (V₋) and `±(1 + cos θ)/2` (V₊)
/// on `∂φ`, field `∓ sin θ / 2`, and unit flux.
pub fn dirac_checks(points: usize, resolution: usize, seed: u64, tol: f64, tol_flux: f64) -> Result<Vec<Check>> {
    let rep = build_rep(1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<_> = (0..points).map(|_| random_point(1, &mut rng, 1e-3)).collect();
    let mut checks = Vec::new();
    for s in Chirality::BOTH {
        let (mut minus, mut plus, mut field) = (0f64, 0f64, 0f64);
        for p in &pts {
            let c = p.theta.cos();
            let a = potential_closed(&GaugeChart::minus(&rep), p)?;
            let v = rep.restrict_chiral(&a.get(&[1]), s)?[(0, 0)];
            minus = minus.max((v - Complex64::new(-s.sign() * (1.0 - c) / 2.0, 0.0)).norm());
            let a = potential_closed(&GaugeChart::plus(&rep), p)?;
            let v = rep.restrict_chiral(&a.get(&[1]), s)?[(0, 0)];
            plus = plus.max((v - Complex64::new(s.sign() * (1.0 + c) / 2.0, 0.0)).norm());
            let f = field_closed(&GaugeChart::minus(&rep), p)?;
            let v = rep.restrict_chiral(&f.get(&[0, 1]), s)?[(0, 0)];
            field = field.max((v - Complex64::new(-s.sign() * p.theta.sin() / 2.0, 0.0)).norm());
        }
        checks.push(Check::residual(format!("Dirac potential V- {s}: -+(1-cos t)/2"), claims::DIRAC, minus, tol));
        checks.push(Check::residual(format!("Dirac potential V+ {s}: +-(1+cos t)/2"), claims::DIRAC, plus, tol));
        checks.push(Check::residual(format!("Dirac field {s}: -+sin(t)/2"), claims::DIRAC, field, tol));
        let report = charge_quadrature(&rep, s, &Surface::sphere(1), resolution)?;
        checks.push(charge_check(&report, tol_flux, 3.0, claims::DIRAC));
    }
    Ok(checks)
}

/// n = 2: tracelessness of the chiral potentials and the charge `±1`.
pub fn yang_checks(resolution: usize, seed: u64, tol: f64, tol_quadrature: f64) -> Result<Vec<Check>> {
    let rep = build_rep(2)?;
    let mut checks = traceless_checks(&rep, tol)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trace: f64 = 0.0;
    for _ in 0..50 {
        let p = random_point(2, &mut rng, 1e-2);
        for chart in [GaugeChart::minus(&rep), GaugeChart::plus(&rep)] {
            let a = potential_closed(&chart, &p)?;
            for m in a.coeffs.values() {
                for s in Chirality::BOTH {
                    trace = trace.max(rep.restrict_chiral(m, s)?.trace().norm());
                }
            }
        }
    }
    checks.push(Check::residual("Yang potentials are su(2)-valued", claims::TRACELESS, trace, tol));
    for s in Chirality::BOTH {
        let report = charge_quadrature(&rep, s, &Surface::sphere(2), resolution)?;
        checks.push(charge_check(&report, tol_quadrature, 3.0, claims::YANG));
    }
    Ok(checks)
}

/// Runs the configured command and returns its checks.
pub fn run(config: &RunConfig) -> Result<Vec<Check>> {
    config.validate()?;
    let tol = config.tol_algebraic;
    let tol_q = config.tol_quadrature.unwrap_or(1e-8);
    let mut rec = Recorder::new(config.timings);
    match &config.command {
        Command::VerifyClifford { n } => {
            let ns: Vec<usize> = n.map_or((1..=DEFAULT_MAX_N).collect(), |n| vec![n]);
            for n in ns {
                rec.run_many(|| Ok(clifford_checks(&build_rep(n)?, tol)))?;
            }
        }
        Command::Traceless { n } => {
            let ns: Vec<usize> = n.map_or((1..=4).collect(), |n| vec![n]);
            for n in ns {
                rec.run_many(|| traceless_checks(&build_rep(n)?, tol))?;
            }
        }
        Command::Potentials { n, points, step } => {
            let ns: Vec<usize> = n.map_or((1..=3).collect(), |n| vec![n]);
            for n in ns {
                rec.run_many(|| potential_checks(n, *points, *step, config.seed, tol))?;
            }
        }
        Command::Transition { n, points, step } => {
            let ns: Vec<usize> = n.map_or((1..=3).collect(), |n| vec![n]);
            for n in ns {
                rec.run_many(|| transition_checks(n, *points, *step, config.seed, tol))?;
            }
        }
        Command::Charge {
            n,
            sign,
            method,
            resolution,
            samples,
            axes,
        } => {
            let surface = match axes {
                Some(a) => Surface::ellipsoid(a)?,
                None => Surface::sphere(*n),
            };
            let claim = if surface.is_sphere() { claims::CHARGE } else { claims::SURFACE };
            let tol_q = match config.tol_quadrature {
                Some(t) => t,
                None if surface.is_sphere() => tol_q,
                None => 1e-6,
            };
            for s in sign.signs() {
                rec.run(|| {
                    let report = match method {
                        MethodArg::ClosedForm => charge_closed_form(*n, s)?,
                        MethodArg::Quadrature => {
                            let rep = build_rep(*n)?;
                            charge_quadrature(&rep, s, &surface, resolution.unwrap_or(default_resolution(*n, surface.is_sphere())))?
                        }
                        MethodArg::MonteCarlo => {
                            let rep = build_rep(*n)?;
                            charge_montecarlo(&rep, s, &surface, *samples, config.seed)?
                        }
                    };
                    let claim = if *method == MethodArg::ClosedForm { claims::CLOSED_FORM } else { claim };
                    Ok(charge_check(&report, tol_q, config.sigma, claim))
                })?;
            }
        }
        Command::Dirac { points, resolution } => {
            let flux_tol = config.tol_quadrature.unwrap_or(1e-10);
            rec.run_many(|| dirac_checks(*points, *resolution, config.seed, tol, flux_tol))?;
        }
        Command::Yang { resolution } => {
            rec.run_many(|| yang_checks(*resolution, config.seed, tol, tol_q))?;
        }
    }
    Ok(rec.checks)
}

/// Applies `MONOPOLE_THREADS` to the global worker pool.
pub fn configure_threads() -> Result<()> {
    match std::env::var("MONOPOLE_THREADS") {
        Ok(v) => {
            let k: usize = v
                .trim()
                .parse()
                .ok()
                .filter(|k| *k > 0)
                .ok_or_else(|| usage(format!("MONOPOLE_THREADS must be a positive integer, got {v:?}")))?;
            // A pool may already exist when embedded; keep it.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            Ok(())
        }
        Err(_) => Ok(()),
    }
}

/// Full command-line entry point; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Err(e) = configure_threads().and_then(|_| config.validate()) {
        eprintln!("error: {e}");
        return 2;
    }
    let checks = match run(&config) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    if let Err(e) = emit_report(&checks, &config, config.format, config.output.as_deref()) {
        eprintln!("error: {e}");
        return 1;
    }
    if checks.iter().all(|c| c.pass) {
        0
    } else {
        1
    }
}

//! Parameter sweeps, input averaging, the coherence optimizer, and the
//! entanglement-coherence bound sampler.
//!
//! This layer only aggregates: every number in a result can be re-derived
//! by calling the machine and measure operations directly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::cloners::{
    apply_cloner, copy_quality, BHMachineParams, ClonerSpec, StateDepParams,
};
use crate::error::{Error, Result};
use crate::format::fmt_g12;
use crate::matrix::C64;
use crate::measures::{concurrence, concurrence_xform, l1_coherence, XFormState};
use crate::state::InputQubit;
use crate::tol::TOL;

/// One sweep record: grid coordinates plus the measures evaluated there.
/// `None` marks a grid point with no valid machine realization.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub params: Vec<f64>,
    pub values: Vec<Option<f64>>,
}

/// Tabular sweep output in deterministic grid order.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub axis_names: Vec<String>,
    pub value_names: Vec<String>,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    /// Serializes to CSV: header row, ',' separators, '\n' terminators,
    /// 12-significant-digit numbers, and the literal `NA` for grid points
    /// without a value. Byte-identical across runs for equal inputs.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<&str> = self
            .axis_names
            .iter()
            .chain(self.value_names.iter())
            .map(String::as_str)
            .collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &self.rows {
            let mut fields: Vec<String> = row.params.iter().map(|&p| fmt_g12(p)).collect();
            for v in &row.values {
                fields.push(match v {
                    Some(x) => fmt_g12(*x),
                    None => "NA".to_string(),
                });
            }
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }
}

/// Evenly spaced grid including both endpoints; `steps = 1` yields `[start]`.
pub fn linear_grid(start: f64, stop: f64, steps: usize) -> Result<Vec<f64>> {
    if !start.is_finite() || !stop.is_finite() {
        return Err(Error::NonFinite(format!("grid {start}:{stop}:{steps}")));
    }
    if steps == 0 {
        return Err(Error::InvalidParameter("grid needs at least 1 step".into()));
    }
    if steps == 1 {
        return Ok(vec![start]);
    }
    Ok((0..steps)
        .map(|i| start + (stop - start) * i as f64 / (steps - 1) as f64)
        .collect())
}

fn check_grid_range(name: &str, grid: &[f64], lo: f64, hi: f64) -> Result<()> {
    let slack = TOL.bound_slack;
    for &v in grid {
        if !v.is_finite() {
            return Err(Error::NonFinite(format!("{name} grid value {v}")));
        }
        if v < lo - slack || v > hi + slack {
            return Err(Error::InvalidParameter(format!(
                "{name} grid value {v} outside [{lo}, {hi}]"
            )));
        }
    }
    Ok(())
}

/// Two-qubit output concurrence of the general machine over a (mu, alpha)
/// grid with nu tied to 1 - 2 mu.
///
/// The tie is only realizable when 1 - 2 mu <= 2 sqrt(mu (1 - 2 mu)), i.e.
/// mu >= 1/6; below that the Cauchy-Schwarz bound on machine-vector
/// overlaps is violated and the affected rows carry no value.
pub fn sweep_bh_concurrence(mu_grid: &[f64], alpha_grid: &[f64]) -> Result<SweepResult> {
    check_grid_range("mu", mu_grid, 0.0, 0.5)?;
    check_grid_range("alpha", alpha_grid, 0.0, 1.0)?;
    let mut rows = Vec::with_capacity(mu_grid.len() * alpha_grid.len());
    for &mu in mu_grid {
        let nu = 1.0 - 2.0 * mu;
        let valid = nu <= BHMachineParams::schwarz_bound(mu) + TOL.bound_slack;
        let spec = if valid {
            Some(ClonerSpec::BHGeneral(BHMachineParams::new(mu, nu)?))
        } else {
            None
        };
        for &alpha in alpha_grid {
            let value = match &spec {
                Some(spec) => {
                    let out = apply_cloner(spec, &InputQubit::from_alpha(alpha)?)?;
                    Some(concurrence(&out.two_qubit)?)
                }
                None => None,
            };
            rows.push(SweepRow {
                params: vec![mu, alpha],
                values: vec![value],
            });
        }
    }
    Ok(SweepResult {
        axis_names: vec!["mu".into(), "alpha".into()],
        value_names: vec!["concurrence".into()],
        rows,
    })
}

/// Two-qubit output concurrence of the state-dependent machine over an
/// alpha grid.
pub fn sweep_statedep_concurrence(
    alpha_grid: &[f64],
    params: &StateDepParams,
) -> Result<SweepResult> {
    check_grid_range("alpha", alpha_grid, 0.0, 1.0)?;
    let spec = ClonerSpec::StateDependent(*params);
    let mut rows = Vec::with_capacity(alpha_grid.len());
    for &alpha in alpha_grid {
        let out = apply_cloner(&spec, &InputQubit::from_alpha(alpha)?)?;
        rows.push(SweepRow {
            params: vec![alpha],
            values: vec![Some(concurrence(&out.two_qubit)?)],
        });
    }
    Ok(SweepResult {
        axis_names: vec!["alpha".into()],
        value_names: vec!["concurrence".into()],
        rows,
    })
}

/// Input coherence versus output entanglement for the CNOT machine:
/// rows of (c1, input l1 coherence, output concurrence).
pub fn cnot_coherence_check(alpha_grid: &[f64]) -> Result<SweepResult> {
    check_grid_range("c1", alpha_grid, 0.0, 1.0)?;
    let mut rows = Vec::with_capacity(alpha_grid.len());
    for &c1 in alpha_grid {
        let input = InputQubit::from_alpha(c1)?;
        let input_l1 = l1_coherence(&input.density());
        let out = apply_cloner(&ClonerSpec::CnotEntangler, &input)?;
        rows.push(SweepRow {
            params: vec![c1],
            values: vec![Some(input_l1), Some(concurrence(&out.two_qubit)?)],
        });
    }
    Ok(SweepResult {
        axis_names: vec!["c1".into()],
        value_names: vec!["input_l1".into(), "output_concurrence".into()],
        rows,
    })
}

/// Mean copy quality over inputs uniform in |alpha|^2 (the Haar marginal
/// for pure qubits), real nonnegative amplitudes, midpoint rule.
pub fn average_copy_quality(spec: &ClonerSpec, num_points: usize) -> Result<f64> {
    if num_points < 2 {
        return Err(Error::InvalidParameter(format!(
            "averaging needs at least 2 points, got {num_points}"
        )));
    }
    let n = num_points as f64;
    let mut total = 0.0;
    for i in 0..num_points {
        let t = (i as f64 + 0.5) / n; // |alpha|^2 at the cell midpoint
        total += copy_quality(spec, &InputQubit::from_alpha(t.sqrt())?)?;
    }
    Ok(total / n)
}

/// Single-clone coherence coefficient of the state-dependent machine:
/// 2 (a_t b2 + a b2_t). For real inputs the clone's l1 coherence is this
/// coefficient times alpha*beta.
pub fn statedep_objective(params: &StateDepParams) -> f64 {
    let [a, _b1, b2, a_t, _b1_t, b2_t] = params.as_array();
    2.0 * (a_t * b2 + a * b2_t)
}

/// Outcome of maximizing [`statedep_objective`] over symmetric parameters.
#[derive(Debug, Clone)]
pub struct OptimizerResult {
    pub best_value: f64,
    pub best_params: StateDepParams,
    pub theta: f64,
    pub phi: f64,
    /// |theta + phi - pi/2|: the optimum is the one-parameter family
    /// theta + phi = pi/2, so this measures how exactly the ridge was hit.
    pub ridge_residual: f64,
    /// (step, best value so far); nondecreasing in the second component.
    pub trace: Vec<(usize, f64)>,
}

fn angle_objective(theta: f64, phi: f64) -> f64 {
    let p = StateDepParams::from_angles(theta, phi)
        .expect("angle parametrization is exactly normalized");
    statedep_objective(&p)
}

/// Golden-section maximization of a unimodal slice.
fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, iters: usize) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    let mid = 0.5 * (lo + hi);
    (mid, f(mid))
}

/// Maximizes the single-clone coherence coefficient over symmetric
/// parameters a = cos(theta), b1 = b2 = sin(theta)/sqrt(2) (and the same
/// shape with phi for the |1> branch), theta, phi in [0, pi/2].
///
/// Grid search at the given resolution seeds cyclic golden-section
/// refinement along each angle. The maximum is sqrt(2), attained on the
/// whole line theta + phi = pi/2.
pub fn optimize_statedep(resolution: usize) -> Result<OptimizerResult> {
    if resolution < 10 {
        return Err(Error::InvalidParameter(format!(
            "optimizer resolution must be at least 10, got {resolution}"
        )));
    }
    let half_pi = std::f64::consts::FRAC_PI_2;
    let grid = linear_grid(0.0, half_pi, resolution)?;
    let (mut theta, mut phi, mut best) = (0.0, 0.0, f64::NEG_INFINITY);
    for &t in &grid {
        for &p in &grid {
            let v = angle_objective(t, p);
            if v > best {
                (theta, phi, best) = (t, p, v);
            }
        }
    }
    let mut trace = vec![(0, best)];
    for step in 1..=6 {
        let (t, v) = golden_max(|t| angle_objective(t, phi), 0.0, half_pi, 80);
        if v >= best {
            (theta, best) = (t, v);
        }
        trace.push((2 * step - 1, best));
        let (p, v) = golden_max(|p| angle_objective(theta, p), 0.0, half_pi, 80);
        if v >= best {
            (phi, best) = (p, v);
        }
        trace.push((2 * step, best));
    }
    let best_params = StateDepParams::from_angles(theta, phi)
        .expect("angle parametrization is exactly normalized");
    Ok(OptimizerResult {
        best_value: best,
        best_params,
        theta,
        phi,
        ridge_residual: (theta + phi - half_pi).abs(),
        trace,
    })
}

/// Result of random sampling of the entanglement-coherence bound on
/// cross-coupled two-qubit states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundSampleReport {
    pub samples: usize,
    /// Samples with concurrence above l1 coherence plus slack; must be 0.
    pub violations: usize,
    /// Largest observed concurrence / l1-coherence ratio.
    pub max_ratio: f64,
    /// Largest |closed-form - Wootters| concurrence disagreement.
    pub max_closed_form_deviation: f64,
}

/// Draws seeded random cross-coupled states and checks concurrence <= l1
/// coherence on each, also comparing the closed-form concurrence against
/// the Wootters computation.
///
/// Sampling (fixed draw order, 6 uniforms per sample, ChaCha12 keyed by
/// `seed`, reproducible across platforms): populations from a flat
/// Dirichlet via four unit exponentials, |c| uniform in [0, sqrt(b d)] so
/// the positivity boundary is covered, phase of c uniform.
pub fn sample_bound(num_samples: usize, seed: u64) -> Result<BoundSampleReport> {
    if num_samples == 0 {
        return Err(Error::InvalidParameter("need at least 1 sample".into()));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let exp = |rng: &mut ChaCha12Rng| -(1.0 - rng.random::<f64>()).ln();
    let mut violations = 0;
    let mut max_ratio: f64 = 0.0;
    let mut max_dev: f64 = 0.0;
    for _ in 0..num_samples {
        let g = [exp(&mut rng), exp(&mut rng), exp(&mut rng), exp(&mut rng)];
        let sum: f64 = g.iter().sum();
        let (a, b, d, e) = (g[0] / sum, g[1] / sum, g[2] / sum, g[3] / sum);
        let c_mod = rng.random::<f64>() * (b * d).sqrt();
        let phase = 2.0 * std::f64::consts::PI * rng.random::<f64>();
        let c = C64::from_polar(c_mod, phase);
        let state = XFormState::new(a, b, d, e, c)?;
        let rho = state.to_density()?;
        let wootters = concurrence(&rho)?;
        let l1 = l1_coherence(&rho);
        if wootters > l1 + TOL.bound_slack {
            violations += 1;
        }
        if l1 > 1e-15 {
            max_ratio = max_ratio.max(wootters / l1);
        }
        max_dev = max_dev.max((wootters - concurrence_xform(&state)).abs());
    }
    Ok(BoundSampleReport {
        samples: num_samples,
        violations,
        max_ratio,
        max_closed_form_deviation: max_dev,
    })
}

//! Brute-force time integration of `dρ/dt = A ρ`, an independent route to
//! the stationary populations.

use qtransistor::RateMatrix;

/// Maximum tolerated drift of `Σ ρ` along a trajectory.
pub const TRACE_DRIFT_LIMIT: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct OdeTrace {
    pub times: Vec<f64>,
    pub states: Vec<[f64; 8]>,
    /// `‖A ρ(t_end)‖₁`.
    pub final_residual: f64,
}

impl OdeTrace {
    pub fn final_state(&self) -> [f64; 8] {
        *self.states.last().unwrap()
    }
}

#[derive(Debug)]
pub enum OdeError {
    StepTooLarge { dt: f64, limit: f64 },
    Unstable { t: f64, drift: f64 },
}

pub fn residual(a: &RateMatrix, rho: &[f64; 8]) -> f64 {
    a.apply(rho).iter().map(|x| x.abs()).sum()
}

fn axpy(x: &[f64; 8], k: &[f64; 8], h: f64) -> [f64; 8] {
    let mut out = *x;
    for (o, d) in out.iter_mut().zip(k) {
        *o += h * d;
    }
    out
}

/// Classical RK4 with fixed `dt`, sampling the trajectory at roughly
/// geometric times. Integration ends at `t_end` or once the residual drops
/// to the roundoff floor `1e-15 · max|A|`.
pub fn integrate_to_stationarity(
    a: &RateMatrix,
    rho0: [f64; 8],
    t_end: f64,
    dt: f64,
) -> Result<OdeTrace, OdeError> {
    let limit = 2.0 / a.max_abs_diagonal();
    if !(dt < limit) && a.max_abs_diagonal() > 0.0 {
        return Err(OdeError::StepTooLarge { dt, limit });
    }
    let floor = 1e-15 * a.max_abs().max(f64::MIN_POSITIVE);
    let trace0: f64 = rho0.iter().sum();

    let mut rho = rho0;
    let mut t = 0.0;
    let mut times = vec![0.0];
    let mut states = vec![rho];
    let mut next_sample = dt;
    while t < t_end {
        let h = dt.min(t_end - t);
        let k1 = a.apply(&rho);
        let k2 = a.apply(&axpy(&rho, &k1, h / 2.0));
        let k3 = a.apply(&axpy(&rho, &k2, h / 2.0));
        let k4 = a.apply(&axpy(&rho, &k3, h));
        for i in 0..8 {
            rho[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        t += h;

        let drift = (rho.iter().sum::<f64>() - trace0).abs();
        if drift > TRACE_DRIFT_LIMIT || rho.iter().any(|x| !x.is_finite()) {
            return Err(OdeError::Unstable { t, drift });
        }
        let done = residual(a, &rho) <= floor;
        if t >= next_sample || done || t >= t_end {
            times.push(t);
            states.push(rho);
            next_sample = t * 1.25;
        }
        if done {
            break;
        }
    }
    Ok(OdeTrace {
        times,
        states,
        final_residual: residual(a, &rho),
    })
}

/// A stable step: `0.5 · 2/max|A_ii|`.
pub fn default_step(a: &RateMatrix) -> f64 {
    1.0 / a.max_abs_diagonal().max(1e-300)
}

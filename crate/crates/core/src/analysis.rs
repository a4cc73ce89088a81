//! Transistor characterization along the base temperature `T_M`:
//! current sweeps, amplification factors and operating points.
//!
//! The gains `α_{L,R} = ∂J_{L,R}/∂J_M` are evaluated through the common
//! parameter `T_M`, i.e. as `(dJ_{L,R}/dT_M) / (dJ_M/dT_M)`. This stays
//! well defined on both sides of the `J_M` extremum where `α` has a pole.

use rayon::prelude::*;

use crate::currents::{heat_currents_from_table, CurrentTriple};
use crate::error::{Error, Result};
use crate::model::{self, SystemParams};
use crate::rates::{BathSet, RateMatrix};
use crate::steadystate::solve_steady_state;

/// Bisection tolerance on `T_M`.
pub const ROOT_TOLERANCE: f64 = 1e-6;

/// `|dJ_M/dT_M|` below `DIVERGENCE_FRACTION · max|dJ_L/dT_M|` marks a gain as divergent.
pub const DIVERGENCE_FRACTION: f64 = 1e-3;

/// Relative `T_M` step for the finite differences used by the root finders.
const FD_RELATIVE_STEP: f64 = 1e-4;

/// Endpoint values this small relative to the other endpoint count as roots.
const ENDPOINT_ROOT_FRACTION: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gain {
    Finite(f64),
    /// `|dJ_M/dT_M|` fell below the divergence threshold; carries the sign of the pole.
    Divergent {
        positive: bool,
    },
}

impl Gain {
    pub fn value(self) -> Option<f64> {
        match self {
            Gain::Finite(v) => Some(v),
            Gain::Divergent { .. } => None,
        }
    }

    pub fn magnitude(self) -> f64 {
        match self {
            Gain::Finite(v) => v.abs(),
            Gain::Divergent { .. } => f64::INFINITY,
        }
    }

    pub fn is_divergent(self) -> bool {
        matches!(self, Gain::Divergent { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Amplification {
    pub alpha_l: Gain,
    pub alpha_r: Gain,
    /// Endpoint value from a one-sided difference.
    pub one_sided: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub t_m: f64,
    pub currents: CurrentTriple,
    pub amplification: Option<Amplification>,
}

impl SweepPoint {
    pub fn alpha_l(&self) -> Option<Gain> {
        self.amplification.map(|a| a.alpha_l)
    }

    pub fn alpha_r(&self) -> Option<Gain> {
        self.amplification.map(|a| a.alpha_r)
    }

    /// Amplification at an interior grid point, if any.
    pub fn central(&self) -> Option<Amplification> {
        self.amplification.filter(|a| !a.one_sided)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatingPoints {
    /// `None` when `dJ_M/dT_M` keeps one sign over the extremum bracket.
    pub t_jm_min: Option<f64>,
    pub t_jm_zero: f64,
    pub currents_at_zero: CurrentTriple,
    pub gains_at_zero: (f64, f64),
}

/// Evaluates steady-state currents at arbitrary `T_M` for fixed system and
/// outer baths. The transition table is built once.
#[derive(Debug, Clone)]
pub struct TransistorModel {
    table: model::TransitionTable,
    baths: BathSet,
}

impl TransistorModel {
    pub fn new(params: &SystemParams, baths: &BathSet) -> Result<Self> {
        let table = model::enumerate_transitions(params)?;
        baths.validate()?;
        Ok(TransistorModel {
            table,
            baths: *baths,
        })
    }

    pub fn baths(&self) -> &BathSet {
        &self.baths
    }

    pub fn currents_at(&self, t_m: f64) -> Result<CurrentTriple> {
        let tag = |source| Error::AtTemperature {
            t_m,
            source: Box::new(source),
        };
        let baths = self.baths.with_t_m(t_m);
        baths.validate().map_err(tag)?;
        let a = RateMatrix::from_transitions(&self.table, &baths);
        let rho = solve_steady_state(&a).map_err(tag)?;
        Ok(heat_currents_from_table(&self.table, &baths, &rho))
    }

    pub fn j_m(&self, t_m: f64) -> Result<f64> {
        Ok(self.currents_at(t_m)?.j_m)
    }

    /// Central-difference `dJ/dT_M` for all three currents.
    pub fn slopes_at(&self, t_m: f64) -> Result<CurrentTriple> {
        let h = FD_RELATIVE_STEP * t_m;
        let hi = self.currents_at(t_m + h)?;
        let lo = self.currents_at(t_m - h)?;
        let d = |a: f64, b: f64| (a - b) / (2.0 * h);
        Ok(CurrentTriple {
            j_l: d(hi.j_l, lo.j_l),
            j_m: d(hi.j_m, lo.j_m),
            j_r: d(hi.j_r, lo.j_r),
        })
    }

    /// `(α_L, α_R)` from local derivatives at `t_m`.
    pub fn gains_at(&self, t_m: f64) -> Result<(f64, f64)> {
        let s = self.slopes_at(t_m)?;
        Ok((s.j_l / s.j_m, s.j_r / s.j_m))
    }
}

/// `steps` evenly spaced points from `lo` to `hi` inclusive.
pub fn linear_grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let dt = (hi - lo) / (steps - 1) as f64;
            (0..steps)
                .map(|i| {
                    if i == steps - 1 {
                        hi
                    } else {
                        lo + dt * i as f64
                    }
                })
                .collect()
        }
    }
}

pub fn validate_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InsufficientGrid {
            required: 1,
            got: 0,
        });
    }
    if let Some(&t) = grid.iter().find(|t| !(t.is_finite() && **t > 0.0)) {
        return Err(Error::InvalidGrid(format!(
            "temperatures must be finite and > 0, found {t}"
        )));
    }
    if let Some(w) = grid.windows(2).find(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid(format!(
            "grid must be strictly increasing ({} then {})",
            w[0], w[1]
        )));
    }
    Ok(())
}

/// Steady-state currents at every `T_M` in `grid`, in grid order.
pub fn sweep_tm(params: &SystemParams, baths: &BathSet, grid: &[f64]) -> Result<Vec<SweepPoint>> {
    validate_grid(grid)?;
    let model = TransistorModel::new(params, &baths.with_t_m(grid[0]))?;
    grid.par_iter()
        .map(|&t_m| {
            Ok(SweepPoint {
                t_m,
                currents: model.currents_at(t_m)?,
                amplification: None,
            })
        })
        .collect()
}

/// Fills `amplification` on every point. Interior points use central
/// differences, the two endpoints one-sided differences (`one_sided = true`).
pub fn amplification(points: &[SweepPoint]) -> Result<Vec<SweepPoint>> {
    let n = points.len();
    if n < 3 {
        return Err(Error::InsufficientGrid {
            required: 3,
            got: n,
        });
    }
    let slope = |i: usize, get: fn(&CurrentTriple) -> f64| {
        let (a, b) = match i {
            0 => (0, 1),
            i if i == n - 1 => (n - 2, n - 1),
            i => (i - 1, i + 1),
        };
        (get(&points[b].currents) - get(&points[a].currents)) / (points[b].t_m - points[a].t_m)
    };
    let slopes: Vec<(f64, f64, f64)> = (0..n)
        .map(|i| {
            (
                slope(i, |j| j.j_l),
                slope(i, |j| j.j_m),
                slope(i, |j| j.j_r),
            )
        })
        .collect();
    let threshold = DIVERGENCE_FRACTION * slopes.iter().fold(0.0, |m: f64, s| m.max(s.0.abs()));

    let gain = |num: f64, den: f64| {
        if den.abs() < threshold || den == 0.0 {
            let sign = if den < 0.0 { -1.0 } else { 1.0 };
            Gain::Divergent {
                positive: num * sign >= 0.0,
            }
        } else {
            Gain::Finite(num / den)
        }
    };

    Ok(points
        .iter()
        .zip(&slopes)
        .enumerate()
        .map(|(i, (p, &(dl, dm, dr)))| SweepPoint {
            amplification: Some(Amplification {
                alpha_l: gain(dl, dm),
                alpha_r: gain(dr, dm),
                one_sided: i == 0 || i == n - 1,
            }),
            ..*p
        })
        .collect())
}

/// Sweep followed by [`amplification`] when the grid has at least three points.
pub fn sweep_with_gains(
    params: &SystemParams,
    baths: &BathSet,
    grid: &[f64],
) -> Result<Vec<SweepPoint>> {
    let points = sweep_tm(params, baths, grid)?;
    if points.len() < 3 {
        return Ok(points);
    }
    amplification(&points)
}

fn bisect<F>(mut f: F, lo: f64, hi: f64, quantity: &'static str) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && lo < hi) {
        return Err(Error::InvalidGrid(format!(
            "bracket must satisfy 0 < lo < hi, got ({lo}, {hi})"
        )));
    }
    let (mut lo, mut hi) = (lo, hi);
    let (f_lo, f_hi) = (f(lo)?, f(hi)?);
    let negligible = ENDPOINT_ROOT_FRACTION * f_lo.abs().max(f_hi.abs());
    if f_lo.abs() <= negligible {
        return Ok(lo);
    }
    if f_hi.abs() <= negligible {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::Bracket { quantity, lo, hi });
    }
    let lo_negative = f_lo < 0.0;
    while hi - lo > ROOT_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `T_M` of the interior extremum of `J_M`, by bisection on `dJ_M/dT_M`.
pub fn find_jm_extremum(
    params: &SystemParams,
    baths: &BathSet,
    bracket: (f64, f64),
) -> Result<f64> {
    let model = TransistorModel::new(params, &baths.with_t_m(bracket.0.max(f64::MIN_POSITIVE)))?;
    bisect(
        |t| Ok(model.slopes_at(t)?.j_m),
        bracket.0,
        bracket.1,
        "dJ_M/dT_M",
    )
}

/// `T_M` at which the base current `J_M` vanishes.
pub fn find_jm_zero(params: &SystemParams, baths: &BathSet, bracket: (f64, f64)) -> Result<f64> {
    let model = TransistorModel::new(params, &baths.with_t_m(bracket.0.max(f64::MIN_POSITIVE)))?;
    bisect(|t| model.j_m(t), bracket.0, bracket.1, "J_M")
}

pub fn operating_points(
    params: &SystemParams,
    baths: &BathSet,
    extremum_bracket: (f64, f64),
    zero_bracket: (f64, f64),
) -> Result<OperatingPoints> {
    let t_jm_min = match find_jm_extremum(params, baths, extremum_bracket) {
        Ok(t) => Some(t),
        Err(Error::Bracket { .. }) => None,
        Err(e) => return Err(e),
    };
    let t_jm_zero = find_jm_zero(params, baths, zero_bracket)?;
    let model = TransistorModel::new(params, &baths.with_t_m(t_jm_zero))?;
    Ok(OperatingPoints {
        t_jm_min,
        t_jm_zero,
        currents_at_zero: model.currents_at(t_jm_zero)?,
        gains_at_zero: model.gains_at(t_jm_zero)?,
    })
}

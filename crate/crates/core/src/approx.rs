//! Closed-form first-order estimates for the featured configuration,
//! valid when `e^{−Δ/T_L} ≪ 1` and `e^{−Δ/T_R} ≪ e^{−Δ/T_L}`, and their
//! comparison against the exact steady state.

use crate::analysis::{validate_grid, TransistorModel};
use crate::currents::{heat_currents_from_table, CurrentTriple};
use crate::error::{Error, Result};
use crate::model::{self, SystemParams};
use crate::rates::{BathSet, RateMatrix};
use crate::steadystate::{grouped_populations, solve_steady_state, GroupedPopulations};

/// Above `T_L/Δ` of this the estimates degrade.
pub const MAX_T_L_OVER_DELTA: f64 = 0.25;
pub const MAX_T_R_OVER_DELTA: f64 = 0.0625;

/// Grouped populations to first order in `e^{−Δ/T_L}` and `e^{−Δ/T_M}`.
/// The four values do not sum exactly to one.
pub fn approx_populations(t_l: f64, t_m: f64, delta: f64) -> GroupedPopulations {
    let a = (-delta / t_l).exp();
    let denom = delta + 2.0 * t_m;
    GroupedPopulations {
        i: 0.5 * (-2.0 * delta / t_m).exp()
            + t_m * (-2.0 * delta / t_l).exp() / (4.0 * delta + 8.0 * t_m),
        ii: (delta + t_m) * a / denom,
        iii: 1.0 - a,
        iv: t_m * a / denom,
    }
}

/// Estimated currents. `J_R = −J_L` and the sum is not exactly conserved.
pub fn approx_currents(t_l: f64, t_m: f64, delta: f64) -> CurrentTriple {
    let d2 = delta * delta;
    let denom = delta + 2.0 * t_m;
    let j_l = d2 * t_m * (-delta / t_l).exp() / denom;
    let j_m = d2 * (-t_m * (-2.0 * delta / t_l).exp() / denom + 2.0 * (-2.0 * delta / t_m).exp());
    CurrentTriple {
        j_l,
        j_m,
        j_r: -j_l,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApproxRow {
    pub t_m: f64,
    pub approx_populations: GroupedPopulations,
    pub exact_populations: GroupedPopulations,
    pub approx_currents: CurrentTriple,
    pub exact_currents: CurrentTriple,
}

impl ApproxRow {
    /// Relative errors `(approx − exact) / exact` for `ρ_I..ρ_IV`.
    pub fn population_errors(&self) -> [f64; 4] {
        let a = self.approx_populations.as_array();
        let e = self.exact_populations.as_array();
        [0, 1, 2, 3].map(|k| relative_error(a[k], e[k]))
    }

    /// Relative errors for `(J_L, J_M, J_R)`.
    pub fn current_errors(&self) -> [f64; 3] {
        let (a, e) = (self.approx_currents, self.exact_currents);
        [
            relative_error(a.j_l, e.j_l),
            relative_error(a.j_m, e.j_m),
            relative_error(a.j_r, e.j_r),
        ]
    }

    pub fn max_population_error(&self) -> f64 {
        self.population_errors()
            .iter()
            .fold(0.0, |m: f64, e| m.max(e.abs()))
    }

    /// Largest relative error on the terminal currents `J_L`, `J_R`.
    pub fn max_terminal_current_error(&self) -> f64 {
        let [l, _, r] = self.current_errors();
        l.abs().max(r.abs())
    }
}

/// `(approx − exact)/exact`; zero when both vanish, infinite when only `exact` does.
pub fn relative_error(approx: f64, exact: f64) -> f64 {
    if exact == 0.0 {
        if approx == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        (approx - exact) / exact
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxSummary {
    pub max_population_error: f64,
    pub t_m_at_max_population_error: f64,
    /// Over `J_L` and `J_R`.
    pub max_current_error: f64,
    pub t_m_at_max_current_error: f64,
    pub max_base_current_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApproxReport {
    pub delta: f64,
    pub rows: Vec<ApproxRow>,
    pub summary: ApproxSummary,
    /// Regime-guard messages; the report is still produced.
    pub warnings: Vec<String>,
}

pub fn compare_approx(
    params: &SystemParams,
    baths: &BathSet,
    grid: &[f64],
) -> Result<ApproxReport> {
    let delta = params.featured_delta().ok_or_else(|| {
        Error::UnsupportedConfiguration(
            "closed-form estimates need omega_l = omega_m = omega_r = omega_rl = 0 \
             and omega_lm = omega_mr > 0"
                .into(),
        )
    })?;
    validate_grid(grid)?;
    let model = TransistorModel::new(params, &baths.with_t_m(grid[0]))?;
    let table = model::enumerate_transitions(params)?;

    let mut warnings = Vec::new();
    if baths.t_l / delta > MAX_T_L_OVER_DELTA {
        warnings.push(format!(
            "T_L/Δ = {} exceeds {MAX_T_L_OVER_DELTA}; estimates may be inaccurate",
            baths.t_l / delta
        ));
    }
    if baths.t_r / delta > MAX_T_R_OVER_DELTA {
        warnings.push(format!(
            "T_R/Δ = {} exceeds {MAX_T_R_OVER_DELTA}; estimates may be inaccurate",
            baths.t_r / delta
        ));
    }

    let rows = grid
        .iter()
        .map(|&t_m| {
            let b = model.baths().with_t_m(t_m);
            let rho =
                solve_steady_state(&RateMatrix::from_transitions(&table, &b)).map_err(|e| {
                    Error::AtTemperature {
                        t_m,
                        source: Box::new(e),
                    }
                })?;
            Ok(ApproxRow {
                t_m,
                approx_populations: approx_populations(b.t_l, t_m, delta),
                exact_populations: grouped_populations(&rho),
                approx_currents: approx_currents(b.t_l, t_m, delta),
                exact_currents: heat_currents_from_table(&table, &b, &rho),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let argmax = |f: &dyn Fn(&ApproxRow) -> f64| {
        rows.iter()
            .map(|r| (f(r), r.t_m))
            .fold(
                (0.0, rows[0].t_m),
                |best, cur| if cur.0 > best.0 { cur } else { best },
            )
    };
    let (max_population_error, t_m_at_max_population_error) = argmax(&|r| r.max_population_error());
    let (max_current_error, t_m_at_max_current_error) = argmax(&|r| r.max_terminal_current_error());
    let (max_base_current_error, _) = argmax(&|r| r.current_errors()[1].abs());

    Ok(ApproxReport {
        delta,
        summary: ApproxSummary {
            max_population_error,
            t_m_at_max_population_error,
            max_current_error,
            t_m_at_max_current_error,
            max_base_current_error,
        },
        rows,
        warnings,
    })
}

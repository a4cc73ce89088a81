//! Steady-state simulator for a quantum thermal transistor built from three
//! Ising-coupled two-level systems (`L`, `M`, `R`), each attached to its own
//! Ohmic heat bath.
//!
//! The pipeline is:
//!
//! 1. [`model`]: energy spectrum and the 12 bath-allowed spin flips,
//! 2. [`rates`]: Bose-Einstein occupations and the population rate matrix,
//! 3. [`steadystate`]: stationary populations under `Tr ρ = 1`,
//! 4. [`currents`]: heat injected by each bath,
//! 5. [`analysis`]: `T_M` sweeps, amplification factors, operating points,
//! 6. [`approx`]: closed-form estimates for the three-level configuration.
//!
//! ```
//! use qtransistor::{analysis, BathSet, SystemParams};
//!
//! let params = SystemParams::featured(1.0);
//! let baths = BathSet::new(0.2, 0.1, 0.02);
//! let t_zero = analysis::find_jm_zero(&params, &baths, (0.13, 0.18)).unwrap();
//! assert!((t_zero - 0.156).abs() < 1e-3);
//! ```

pub mod analysis;
pub mod approx;
pub mod cli;
pub mod currents;
mod error;
pub mod model;
pub mod rates;
pub mod steadystate;

pub use currents::{conservation_residual, heat_currents, CurrentTriple};
pub use error::{Error, Result};
pub use model::{
    build_spectrum, enumerate_transitions, BasisState, Spectrum, SystemParams, Tls, Transition,
    TransitionTable,
};
pub use rates::{bose_einstein, build_rate_matrix, pair_rates, BathSet, PairRates, RateMatrix};
pub use steadystate::{grouped_populations, solve_steady_state, GroupedPopulations, Populations};

/// Builds the rate matrix, solves it and returns populations and currents.
pub fn solve(params: &SystemParams, baths: &BathSet) -> Result<(Populations, CurrentTriple)> {
    let table = enumerate_transitions(params)?;
    baths.validate()?;
    let a = RateMatrix::from_transitions(&table, baths);
    let rho = solve_steady_state(&a)?;
    let j = currents::heat_currents_from_table(&table, baths, &rho);
    Ok((rho, j))
}

//! Heat currents injected by each bath.

use crate::error::Result;
use crate::model::{self, SystemParams, Tls, TransitionTable};
use crate::rates::{pair_rates, BathSet};
use crate::steadystate::Populations;

/// `J_P > 0` means bath `P` injects energy into the system.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CurrentTriple {
    pub j_l: f64,
    pub j_m: f64,
    pub j_r: f64,
}

impl CurrentTriple {
    pub fn get(&self, bath: Tls) -> f64 {
        match bath {
            Tls::L => self.j_l,
            Tls::M => self.j_m,
            Tls::R => self.j_r,
        }
    }

    pub fn sum(&self) -> f64 {
        self.j_l + self.j_m + self.j_r
    }

    pub fn max_abs(&self) -> f64 {
        self.j_l.abs().max(self.j_m.abs()).max(self.j_r.abs())
    }
}

pub fn heat_currents(
    params: &SystemParams,
    baths: &BathSet,
    rho: &Populations,
) -> Result<CurrentTriple> {
    let table = model::enumerate_transitions(params)?;
    Ok(heat_currents_from_table(&table, baths, rho))
}

/// `J_P = −Σ_t ω_t (down_t ρ_upper − up_t ρ_lower)` over the transitions of bath `P`.
pub fn heat_currents_from_table(
    table: &TransitionTable,
    baths: &BathSet,
    rho: &Populations,
) -> CurrentTriple {
    let mut j = [0.0; 3];
    for t in table.iter() {
        let rates = pair_rates(t, baths);
        let net_down = rates.down * rho.get(t.upper) - rates.up * rho.get(t.lower);
        j[t.bath.index()] -= t.gap * net_down;
    }
    CurrentTriple {
        j_l: j[0],
        j_m: j[1],
        j_r: j[2],
    }
}

/// `|J_L + J_M + J_R| / max(1, max_P |J_P|)`.
pub fn conservation_residual(j: &CurrentTriple) -> f64 {
    j.sum().abs() / j.max_abs().max(1.0)
}

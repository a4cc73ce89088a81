//! Ohmic-bath transition rates and the population rate matrix.

use crate::error::{Error, Result};
use crate::model;
use crate::model::{BasisState, SystemParams, Tls, Transition, TransitionTable};

/// Bath temperatures (`k_B = 1`) and per-bath rate prefactors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathSet {
    pub t_l: f64,
    pub t_m: f64,
    pub t_r: f64,
    pub kappa_l: f64,
    pub kappa_m: f64,
    pub kappa_r: f64,
}

impl BathSet {
    /// Unit prefactors on all three baths.
    pub fn new(t_l: f64, t_m: f64, t_r: f64) -> Self {
        BathSet {
            t_l,
            t_m,
            t_r,
            kappa_l: 1.0,
            kappa_m: 1.0,
            kappa_r: 1.0,
        }
    }

    pub fn uniform(t: f64) -> Self {
        Self::new(t, t, t)
    }

    pub fn with_t_m(self, t_m: f64) -> Self {
        BathSet { t_m, ..self }
    }

    pub fn with_kappas(self, kappa_l: f64, kappa_m: f64, kappa_r: f64) -> Self {
        BathSet {
            kappa_l,
            kappa_m,
            kappa_r,
            ..self
        }
    }

    pub fn scale_kappas(self, factor: f64) -> Self {
        self.with_kappas(
            self.kappa_l * factor,
            self.kappa_m * factor,
            self.kappa_r * factor,
        )
    }

    pub fn temperature(&self, bath: Tls) -> f64 {
        match bath {
            Tls::L => self.t_l,
            Tls::M => self.t_m,
            Tls::R => self.t_r,
        }
    }

    pub fn kappa(&self, bath: Tls) -> f64 {
        match bath {
            Tls::L => self.kappa_l,
            Tls::M => self.kappa_m,
            Tls::R => self.kappa_r,
        }
    }

    pub fn named_values(&self) -> [(&'static str, f64); 6] {
        [
            ("t_l", self.t_l),
            ("t_m", self.t_m),
            ("t_r", self.t_r),
            ("kappa_l", self.kappa_l),
            ("kappa_m", self.kappa_m),
            ("kappa_r", self.kappa_r),
        ]
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in self.named_values() {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidParameter {
                    name,
                    value,
                    reason: "must be finite and > 0",
                });
            }
        }
        Ok(())
    }
}

/// Bose-Einstein occupation `1 / (e^{ω/T} − 1)`.
///
/// Results below the smallest normal `f64` are flushed to zero.
pub fn bose_einstein(omega: f64, temperature: f64) -> Result<f64> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::Domain(format!(
            "Bose-Einstein occupation needs a positive gap, got {omega}"
        )));
    }
    if !(temperature > 0.0 && temperature.is_finite()) {
        return Err(Error::Domain(format!(
            "Bose-Einstein occupation needs a positive temperature, got {temperature}"
        )));
    }
    let n = 1.0 / (omega / temperature).exp_m1();
    Ok(if n < f64::MIN_POSITIVE { 0.0 } else { n })
}

/// Downward (emission) and upward (absorption) rates for one transition,
/// per unit population of the source state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairRates {
    pub down: f64,
    pub up: f64,
}

/// `down = κ ω (1 + n)`, `up = κ ω n`. A zero gap uses the `ω → 0⁺` limit `κ T`.
pub fn pair_rates(transition: &Transition, baths: &BathSet) -> PairRates {
    let kappa = baths.kappa(transition.bath);
    let temperature = baths.temperature(transition.bath);
    let omega = transition.gap;
    if omega <= 0.0 {
        return PairRates {
            down: kappa * temperature,
            up: kappa * temperature,
        };
    }
    // A gap below the representable range of ω/T still has the κT limit.
    let n = match bose_einstein(omega, temperature) {
        Ok(n) => n,
        Err(_) => {
            return PairRates {
                down: kappa * temperature,
                up: kappa * temperature,
            }
        }
    };
    PairRates {
        down: kappa * omega * (1.0 + n),
        up: kappa * omega * n,
    }
}

/// Generator `A` of `dρ/dt = A ρ` on the eight diagonal populations.
#[derive(Debug, Clone, PartialEq)]
pub struct RateMatrix {
    a: [[f64; 8]; 8],
}

impl RateMatrix {
    pub fn zeros() -> Self {
        RateMatrix { a: [[0.0; 8]; 8] }
    }

    /// Wraps raw entries, `entries[row][col]`. No generator checks are made.
    pub fn from_entries(entries: [[f64; 8]; 8]) -> Self {
        RateMatrix { a: entries }
    }

    pub fn from_transitions(table: &TransitionTable, baths: &BathSet) -> Self {
        let mut a = [[0.0; 8]; 8];
        for t in table.iter() {
            let rates = pair_rates(t, baths);
            let (u, l) = (t.upper.slot(), t.lower.slot());
            a[l][u] += rates.down;
            a[u][u] -= rates.down;
            a[u][l] += rates.up;
            a[l][l] -= rates.up;
        }
        RateMatrix { a }
    }

    pub fn entries(&self) -> &[[f64; 8]; 8] {
        &self.a
    }

    pub fn get(&self, row: BasisState, col: BasisState) -> f64 {
        self.a[row.slot()][col.slot()]
    }

    pub fn apply(&self, rho: &[f64; 8]) -> [f64; 8] {
        let mut out = [0.0; 8];
        for (o, row) in out.iter_mut().zip(&self.a) {
            *o = row.iter().zip(rho).map(|(x, y)| x * y).sum();
        }
        out
    }

    pub fn column_sums(&self) -> [f64; 8] {
        let mut sums = [0.0; 8];
        for row in &self.a {
            for (s, x) in sums.iter_mut().zip(row) {
                *s += x;
            }
        }
        sums
    }

    pub fn max_abs(&self) -> f64 {
        self.a
            .iter()
            .flatten()
            .fold(0.0, |m: f64, x| m.max(x.abs()))
    }

    pub fn max_abs_diagonal(&self) -> f64 {
        (0..8).fold(0.0, |m: f64, i| m.max(self.a[i][i].abs()))
    }

    pub fn scaled(&self, factor: f64) -> Self {
        let mut a = self.a;
        a.iter_mut().flatten().for_each(|x| *x *= factor);
        RateMatrix { a }
    }
}

pub fn build_rate_matrix(params: &SystemParams, baths: &BathSet) -> Result<RateMatrix> {
    baths.validate()?;
    let table = model::enumerate_transitions(params)?;
    Ok(RateMatrix::from_transitions(&table, baths))
}

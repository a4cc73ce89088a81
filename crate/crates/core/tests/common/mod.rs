//! Test-only helpers: random instances and independent reference routes.
#![allow(dead_code)]

pub mod oracle;

use qtransistor::{build_spectrum, BathSet, SystemParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Ranges used for randomized instances.
#[derive(Debug, Clone, Copy)]
pub struct Ranges {
    pub omega: (f64, f64),
    pub temperature: (f64, f64),
    pub kappa: (f64, f64),
}

/// ω ∈ [−2, 2], T ∈ [0.01, 1], κ ∈ [0.1, 10].
pub const WIDE: Ranges = Ranges {
    omega: (-2.0, 2.0),
    temperature: (0.01, 1.0),
    kappa: (0.1, 10.0),
};

pub fn random_params(rng: &mut impl Rng, r: &Ranges) -> SystemParams {
    let mut w = || rng.gen_range(r.omega.0..=r.omega.1);
    SystemParams {
        omega_l: w(),
        omega_m: w(),
        omega_r: w(),
        omega_lm: w(),
        omega_mr: w(),
        omega_rl: w(),
    }
}

pub fn random_baths(rng: &mut impl Rng, r: &Ranges) -> BathSet {
    let mut t = || rng.gen_range(r.temperature.0..=r.temperature.1);
    let (t_l, t_m, t_r) = (t(), t(), t());
    let mut k = || rng.gen_range(r.kappa.0..=r.kappa.1);
    BathSet::new(t_l, t_m, t_r).with_kappas(k(), k(), k())
}

/// Normalized `e^{−E_i/T}` with the exponent shifted by the ground energy.
pub fn gibbs(params: &SystemParams, t: f64) -> [f64; 8] {
    let e = *build_spectrum(params).unwrap().energies();
    let e_min = e.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut w = e.map(|x| (-(x - e_min) / t).exp());
    let z: f64 = w.iter().sum();
    w.iter_mut().for_each(|x| *x /= z);
    w
}

pub fn bose(omega: f64, t: f64) -> f64 {
    1.0 / (omega / t).exp_m1()
}

//! Three Ising-coupled two-level systems: energy spectrum and the
//! single-spin-flip transitions each bath can drive.
//!
//! The Hamiltonian is diagonal in the product basis of `σ_z` eigenstates, so
//! every quantity here is a function of the spin triple `(s_L, s_M, s_R)`.
//! Each unordered coupling pair `{P, Q}` contributes `ω_PQ s_P s_Q / 2` once.

use std::fmt;

use crate::error::{Error, Result};

/// Terminal label of a two-level system (and of the bath attached to it).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tls {
    L,
    M,
    R,
}

impl Tls {
    pub const ALL: [Tls; 3] = [Tls::L, Tls::M, Tls::R];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Tls::L => "L",
            Tls::M => "M",
            Tls::R => "R",
        }
    }
}

impl fmt::Display for Tls {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Hamiltonian energies, in units of the reference coupling.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SystemParams {
    pub omega_l: f64,
    pub omega_m: f64,
    pub omega_r: f64,
    pub omega_lm: f64,
    pub omega_mr: f64,
    pub omega_rl: f64,
}

impl SystemParams {
    /// `ω_LM = ω_MR = delta`, everything else zero: three levels `{Δ, 0, −Δ}`.
    pub fn featured(delta: f64) -> Self {
        SystemParams {
            omega_lm: delta,
            omega_mr: delta,
            ..Default::default()
        }
    }

    /// All three couplings equal to `delta`, no local fields.
    pub fn symmetric(delta: f64) -> Self {
        SystemParams {
            omega_lm: delta,
            omega_mr: delta,
            omega_rl: delta,
            ..Default::default()
        }
    }

    pub fn local_field(&self, tls: Tls) -> f64 {
        match tls {
            Tls::L => self.omega_l,
            Tls::M => self.omega_m,
            Tls::R => self.omega_r,
        }
    }

    pub fn coupling(&self, a: Tls, b: Tls) -> f64 {
        use Tls::*;
        match (a.min(b), a.max(b)) {
            (L, M) => self.omega_lm,
            (M, R) => self.omega_mr,
            (L, R) => self.omega_rl,
            _ => 0.0,
        }
    }

    /// If this is the featured configuration, returns its coupling `Δ > 0`.
    pub fn featured_delta(&self) -> Option<f64> {
        let delta = self.omega_lm;
        let featured = self.omega_l == 0.0
            && self.omega_m == 0.0
            && self.omega_r == 0.0
            && self.omega_rl == 0.0
            && self.omega_mr == delta
            && delta > 0.0;
        featured.then_some(delta)
    }

    pub fn named_values(&self) -> [(&'static str, f64); 6] {
        [
            ("omega_l", self.omega_l),
            ("omega_m", self.omega_m),
            ("omega_r", self.omega_r),
            ("omega_lm", self.omega_lm),
            ("omega_mr", self.omega_mr),
            ("omega_rl", self.omega_rl),
        ]
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in self.named_values() {
            if !value.is_finite() {
                return Err(Error::InvalidParameter {
                    name,
                    value,
                    reason: "must be finite",
                });
            }
        }
        Ok(())
    }
}

/// Product-basis state `|1⟩ = ↑↑↑ … |8⟩ = ↓↓↓`, spins ordered `(L, M, R)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisState(u8);

impl BasisState {
    pub const COUNT: usize = 8;

    /// `index` is 1-based, as in the usual `|1⟩ … |8⟩` labelling.
    pub fn new(index: usize) -> Option<Self> {
        (1..=8).contains(&index).then_some(BasisState(index as u8))
    }

    pub fn all() -> impl Iterator<Item = BasisState> {
        (1..=8u8).map(BasisState)
    }

    pub fn from_spins(s_l: i8, s_m: i8, s_r: i8) -> Option<Self> {
        let bit = |s: i8| match s {
            1 => Some(0u8),
            -1 => Some(1u8),
            _ => None,
        };
        Some(BasisState(
            1 + (bit(s_l)? << 2 | bit(s_m)? << 1 | bit(s_r)?),
        ))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// 0-based position in population vectors.
    pub fn slot(self) -> usize {
        self.0 as usize - 1
    }

    /// `+1` for up, `−1` for down.
    pub fn spin(self, tls: Tls) -> i8 {
        let shift = 2 - tls.index();
        if (self.slot() >> shift) & 1 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn spins(self) -> [i8; 3] {
        [self.spin(Tls::L), self.spin(Tls::M), self.spin(Tls::R)]
    }

    pub fn flipped(self, tls: Tls) -> BasisState {
        BasisState(1 + (self.slot() ^ (1 << (2 - tls.index()))) as u8)
    }

    pub fn arrows(self) -> String {
        self.spins()
            .iter()
            .map(|&s| if s > 0 { '↑' } else { '↓' })
            .collect()
    }
}

impl fmt::Display for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}⟩", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum {
    energies: [f64; 8],
}

impl Spectrum {
    pub fn energy(&self, state: BasisState) -> f64 {
        self.energies[state.slot()]
    }

    pub fn energies(&self) -> &[f64; 8] {
        &self.energies
    }

    /// Distinct energy values in descending order (exact comparison).
    pub fn levels(&self) -> Vec<f64> {
        let mut levels = self.energies.to_vec();
        levels.sort_by(|a, b| b.total_cmp(a));
        levels.dedup();
        levels
    }
}

pub fn build_spectrum(params: &SystemParams) -> Result<Spectrum> {
    params.validate()?;
    let mut energies = [0.0; 8];
    for state in BasisState::all() {
        let s = |t: Tls| f64::from(state.spin(t));
        let local: f64 = Tls::ALL
            .iter()
            .map(|&t| params.local_field(t) * s(t) / 2.0)
            .sum();
        let pairs = params.omega_lm * s(Tls::L) * s(Tls::M)
            + params.omega_mr * s(Tls::M) * s(Tls::R)
            + params.omega_rl * s(Tls::R) * s(Tls::L);
        energies[state.slot()] = local + pairs / 2.0;
    }
    Ok(Spectrum { energies })
}

/// One bath-driven spin flip, oriented so that `gap = E_upper − E_lower ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transition {
    pub upper: BasisState,
    pub lower: BasisState,
    pub bath: Tls,
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TransitionTable {
    transitions: Vec<Transition>,
}

impl TransitionTable {
    pub const LEN: usize = 12;

    pub fn from_spectrum(spectrum: &Spectrum) -> Self {
        let mut transitions = Vec::with_capacity(Self::LEN);
        for bath in Tls::ALL {
            for a in BasisState::all().filter(|s| s.spin(bath) > 0) {
                let b = a.flipped(bath);
                let (ea, eb) = (spectrum.energy(a), spectrum.energy(b));
                // equal energies keep the lower-index state as `upper`
                let (upper, lower) = if eb > ea { (b, a) } else { (a, b) };
                transitions.push(Transition {
                    upper,
                    lower,
                    bath,
                    gap: (ea - eb).abs(),
                });
            }
        }
        TransitionTable { transitions }
    }

    pub fn iter(&self) -> impl Iterator<Item = &Transition> {
        self.transitions.iter()
    }

    pub fn for_bath(&self, bath: Tls) -> impl Iterator<Item = &Transition> {
        self.transitions.iter().filter(move |t| t.bath == bath)
    }

    pub fn len(&self) -> usize {
        self.transitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transitions.is_empty()
    }

    /// Transition connecting the unordered pair `{a, b}`, if one exists.
    pub fn find(&self, a: BasisState, b: BasisState) -> Option<&Transition> {
        self.transitions
            .iter()
            .find(|t| (t.upper == a && t.lower == b) || (t.upper == b && t.lower == a))
    }
}

pub fn enumerate_transitions(params: &SystemParams) -> Result<TransitionTable> {
    Ok(TransitionTable::from_spectrum(&build_spectrum(params)?))
}

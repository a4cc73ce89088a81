//! Run configuration: a flat `key = value` text format with `#` comments.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::SystemParams;
use crate::rates::BathSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Spectrum,
    Sweep,
    OperatingPoints,
    ApproxCompare,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::Sweep => "sweep",
            Command::OperatingPoints => "operating-points",
            Command::ApproxCompare => "approx-compare",
        }
    }

    /// Commands that differentiate along the grid.
    pub fn needs_gains(self) -> bool {
        matches!(self, Command::Sweep | Command::OperatingPoints)
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "spectrum" => Command::Spectrum,
            "sweep" => Command::Sweep,
            "operating-points" => Command::OperatingPoints,
            "approx-compare" => Command::ApproxCompare,
            other => return Err(format!("unknown command `{other}`")),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub t_m_min: f64,
    pub t_m_max: f64,
    pub steps: usize,
}

impl GridSpec {
    pub fn points(&self) -> Vec<f64> {
        crate::analysis::linear_grid(self.t_m_min, self.t_m_max, self.steps)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Option<Command>,
    pub params: SystemParams,
    pub baths: BathSet,
    pub grid: GridSpec,
    /// Search bracket for the operating points; the grid bounds when absent.
    pub bracket: Option<(f64, f64)>,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self::featured()
    }
}

/// Keys understood by [`RunConfig::apply_text`], in emission order.
pub const CONFIG_KEYS: &[&str] = &[
    "command",
    "omega_l",
    "omega_m",
    "omega_r",
    "omega_lm",
    "omega_mr",
    "omega_rl",
    "t_l",
    "t_m",
    "t_r",
    "kappa_l",
    "kappa_m",
    "kappa_r",
    "tm_min",
    "tm_max",
    "tm_steps",
    "bracket_lo",
    "bracket_hi",
    "out",
];

impl RunConfig {
    /// `ω_LM = ω_MR = 1`, `T_L = 0.2`, `T_R = 0.02`, unit prefactors,
    /// 91-point grid on `[0.02, 0.2]`.
    pub fn featured() -> Self {
        RunConfig {
            command: None,
            params: SystemParams::featured(1.0),
            baths: BathSet::new(0.2, 0.1, 0.02),
            grid: GridSpec {
                t_m_min: 0.02,
                t_m_max: 0.2,
                steps: 91,
            },
            bracket: None,
            out: None,
        }
    }

    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "featured" => Ok(Self::featured()),
            other => Err(Error::config(
                "preset",
                0,
                format!("unknown preset `{other}`"),
            )),
        }
    }

    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let mut config = Self::featured();
        config.apply_text(text, origin)?;
        Ok(config)
    }

    /// Applies every `key = value` line of `text` on top of `self`.
    pub fn apply_text(&mut self, text: &str, origin: &str) -> Result<()> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::config(
                    origin,
                    n + 1,
                    format!("expected `key = value`, got `{line}`"),
                )
            })?;
            self.set(key.trim(), value.trim())
                .map_err(|message| Error::config(origin, n + 1, message))?;
        }
        Ok(())
    }

    /// Sets a single key. The error is a human-readable message.
    pub fn set(&mut self, key: &str, value: &str) -> std::result::Result<(), String> {
        let num = || {
            value
                .parse::<f64>()
                .map_err(|_| format!("`{key}`: `{value}` is not a number"))
        };
        match key {
            "command" => self.command = Some(value.parse()?),
            "omega_l" => self.params.omega_l = num()?,
            "omega_m" => self.params.omega_m = num()?,
            "omega_r" => self.params.omega_r = num()?,
            "omega_lm" => self.params.omega_lm = num()?,
            "omega_mr" => self.params.omega_mr = num()?,
            "omega_rl" => self.params.omega_rl = num()?,
            "t_l" => self.baths.t_l = num()?,
            "t_m" => self.baths.t_m = num()?,
            "t_r" => self.baths.t_r = num()?,
            "kappa_l" => self.baths.kappa_l = num()?,
            "kappa_m" => self.baths.kappa_m = num()?,
            "kappa_r" => self.baths.kappa_r = num()?,
            "tm_min" => self.grid.t_m_min = num()?,
            "tm_max" => self.grid.t_m_max = num()?,
            "tm_steps" => {
                self.grid.steps = value
                    .parse()
                    .map_err(|_| format!("`tm_steps`: `{value}` is not a non-negative integer"))?
            }
            "bracket_lo" => {
                let lo = num()?;
                let hi = self.bracket.map_or(self.grid.t_m_max, |b| b.1);
                self.bracket = Some((lo, hi));
            }
            "bracket_hi" => {
                let hi = num()?;
                let lo = self.bracket.map_or(self.grid.t_m_min, |b| b.0);
                self.bracket = Some((lo, hi));
            }
            "out" => self.out = Some(PathBuf::from(value)),
            other => return Err(format!("unknown key `{other}`")),
        }
        Ok(())
    }

    /// Key-value lines in [`CONFIG_KEYS`] order. `parse(emit())` reproduces `self`.
    pub fn emit(&self) -> String {
        let mut s = String::new();
        for (key, value) in self.entries() {
            writeln!(s, "{key} = {value}").unwrap();
        }
        s
    }

    pub fn entries(&self) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        if let Some(c) = self.command {
            out.push(("command", c.name().to_string()));
        }
        for (k, v) in self.params.named_values() {
            out.push((k, v.to_string()));
        }
        for (k, v) in self.baths.named_values() {
            out.push((k, v.to_string()));
        }
        out.push(("tm_min", self.grid.t_m_min.to_string()));
        out.push(("tm_max", self.grid.t_m_max.to_string()));
        out.push(("tm_steps", self.grid.steps.to_string()));
        if let Some((lo, hi)) = self.bracket {
            out.push(("bracket_lo", lo.to_string()));
            out.push(("bracket_hi", hi.to_string()));
        }
        if let Some(p) = &self.out {
            out.push(("out", p.display().to_string()));
        }
        out
    }

    pub fn effective_bracket(&self) -> (f64, f64) {
        self.bracket
            .unwrap_or((self.grid.t_m_min, self.grid.t_m_max))
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        self.baths.validate()?;
        let g = &self.grid;
        if !(g.t_m_min.is_finite() && g.t_m_max.is_finite() && g.t_m_min > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "tm_min and tm_max must be finite and > 0, got {} and {}",
                g.t_m_min, g.t_m_max
            )));
        }
        if g.t_m_min >= g.t_m_max {
            return Err(Error::InvalidGrid(format!(
                "tm_min ({}) must be below tm_max ({})",
                g.t_m_min, g.t_m_max
            )));
        }
        let required = if self.command.is_some_and(Command::needs_gains) {
            3
        } else {
            1
        };
        if g.steps < required {
            return Err(Error::InsufficientGrid {
                required,
                got: g.steps,
            });
        }
        if let Some((lo, hi)) = self.bracket {
            if !(lo < hi) {
                return Err(Error::InvalidGrid(format!(
                    "bracket ({lo}, {hi}) is reversed or empty"
                )));
            }
            if lo < g.t_m_min || hi > g.t_m_max {
                return Err(Error::InvalidGrid(format!(
                    "bracket ({lo}, {hi}) lies outside the grid [{}, {}]",
                    g.t_m_min, g.t_m_max
                )));
            }
        }
        Ok(())
    }
}

//! Command implementations behind the `qtt` binary.
//!
//! Each `cmd_*` function validates the configuration, computes, and (when
//! `config.out` is set) writes its artifact from a single writer once all
//! results are assembled. Data files carry no timestamps, so identical
//! configurations produce byte-identical output.

mod config;
mod manifest;

use std::fmt::Write as _;
use std::path::Path;

pub use config::{Command, GridSpec, RunConfig, CONFIG_KEYS};
pub use manifest::RunManifest;

use crate::analysis::{self, Gain, SweepPoint};
use crate::approx::{self, ApproxReport};
use crate::error::{Error, Result};
use crate::model::{build_spectrum, BasisState};

pub const SWEEP_HEADER: &str = "t_m,j_l,j_m,j_r,alpha_l,alpha_r,flags";

pub const APPROX_HEADER: &str = "t_m,\
approx_rho_i,approx_rho_ii,approx_rho_iii,approx_rho_iv,approx_j_l,approx_j_m,approx_j_r,\
exact_rho_i,exact_rho_ii,exact_rho_iii,exact_rho_iv,exact_j_l,exact_j_m,exact_j_r,\
err_rho_i,err_rho_ii,err_rho_iii,err_rho_iv,err_j_l,err_j_m,err_j_r";

/// Shortest representation that parses back to the same `f64`.
pub fn format_float(x: f64) -> String {
    format!("{x:e}")
}

pub fn write_output(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumRow {
    pub state: BasisState,
    pub energy: f64,
    /// `I`..`IV` when the featured two-fold degeneracy holds.
    pub group: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTable {
    pub rows: Vec<SpectrumRow>,
    pub levels: Vec<f64>,
}

impl SpectrumTable {
    pub fn render(&self) -> String {
        let mut s = String::from("state  spins  energy  group\n");
        for r in &self.rows {
            writeln!(
                s,
                "{:<6} {:<6} {:>7} {}",
                r.state.index(),
                r.state.arrows(),
                r.energy,
                r.group.unwrap_or("-")
            )
            .unwrap();
        }
        let levels: Vec<String> = self.levels.iter().map(|e| e.to_string()).collect();
        writeln!(s, "levels: {}", levels.join(", ")).unwrap();
        s
    }
}

fn group_of(state: BasisState) -> &'static str {
    match state.index() {
        1 | 8 => "I",
        2 | 7 => "II",
        3 | 6 => "III",
        _ => "IV",
    }
}

pub fn cmd_spectrum(config: &RunConfig) -> Result<SpectrumTable> {
    config.params.validate()?;
    let spectrum = build_spectrum(&config.params)?;
    let grouped = config.params.featured_delta().is_some();
    let rows = BasisState::all()
        .map(|state| SpectrumRow {
            state,
            energy: spectrum.energy(state),
            group: grouped.then(|| group_of(state)),
        })
        .collect();
    let table = SpectrumTable {
        rows,
        levels: spectrum.levels(),
    };
    if let Some(path) = &config.out {
        write_output(path, &table.render())?;
    }
    Ok(table)
}

fn gain_field(g: Option<Gain>) -> String {
    match g {
        Some(Gain::Finite(v)) => format_float(v),
        _ => String::new(),
    }
}

pub fn sweep_csv(points: &[SweepPoint]) -> String {
    let mut s = String::from(SWEEP_HEADER);
    s.push('\n');
    for p in points {
        let mut flags = Vec::new();
        if let Some(a) = p.amplification {
            if a.one_sided {
                flags.push("edge");
            }
            if a.alpha_l.is_divergent() || a.alpha_r.is_divergent() {
                flags.push("div");
            }
        }
        let c = p.currents;
        writeln!(
            s,
            "{},{},{},{},{},{},{}",
            format_float(p.t_m),
            format_float(c.j_l),
            format_float(c.j_m),
            format_float(c.j_r),
            gain_field(p.alpha_l()),
            gain_field(p.alpha_r()),
            flags.join(";")
        )
        .unwrap();
    }
    s
}

/// Runs the sweep and returns the CSV text, also writing it to `config.out`.
pub fn cmd_sweep(config: &RunConfig) -> Result<String> {
    let mut config = config.clone();
    config.command.get_or_insert(Command::Sweep);
    config.validate()?;
    let points = analysis::sweep_with_gains(&config.params, &config.baths, &config.grid.points())?;
    let csv = sweep_csv(&points);
    if let Some(path) = &config.out {
        write_output(path, &csv)?;
    }
    Ok(csv)
}

pub fn cmd_operating_points(config: &RunConfig) -> Result<RunManifest> {
    let mut config = config.clone();
    config.command.get_or_insert(Command::OperatingPoints);
    config.validate()?;
    let bracket = config.effective_bracket();
    let op = analysis::operating_points(&config.params, &config.baths, bracket, bracket)?;
    let mut results = Vec::new();
    if let Some(t) = op.t_jm_min {
        results.push(("t_jm_min".to_string(), t));
    }
    results.extend([
        ("t_jm_zero".to_string(), op.t_jm_zero),
        ("j_l_at_zero".to_string(), op.currents_at_zero.j_l),
        ("j_m_at_zero".to_string(), op.currents_at_zero.j_m),
        ("j_r_at_zero".to_string(), op.currents_at_zero.j_r),
        ("alpha_l_at_zero".to_string(), op.gains_at_zero.0),
        ("alpha_r_at_zero".to_string(), op.gains_at_zero.1),
    ]);
    let manifest = RunManifest::new(config, results);
    if let Some(path) = &manifest.config.out {
        write_output(path, &manifest.emit())?;
    }
    Ok(manifest)
}

pub fn approx_csv(report: &ApproxReport) -> String {
    let mut s = String::from(APPROX_HEADER);
    s.push('\n');
    for row in &report.rows {
        let mut fields = vec![row.t_m];
        fields.extend(row.approx_populations.as_array());
        let a = row.approx_currents;
        fields.extend([a.j_l, a.j_m, a.j_r]);
        fields.extend(row.exact_populations.as_array());
        let e = row.exact_currents;
        fields.extend([e.j_l, e.j_m, e.j_r]);
        fields.extend(row.population_errors());
        fields.extend(row.current_errors());
        let line: Vec<String> = fields.into_iter().map(format_float).collect();
        s.push_str(&line.join(","));
        s.push('\n');
    }
    s
}

pub fn approx_summary(report: &ApproxReport) -> String {
    let m = &report.summary;
    let mut s = String::new();
    writeln!(
        s,
        "max population error: {:.4}% at T_M = {}",
        100.0 * m.max_population_error,
        m.t_m_at_max_population_error
    )
    .unwrap();
    writeln!(
        s,
        "max current error (J_L, J_R): {:.4}% at T_M = {}",
        100.0 * m.max_current_error,
        m.t_m_at_max_current_error
    )
    .unwrap();
    writeln!(
        s,
        "max base current error (J_M): {:.4}%",
        100.0 * m.max_base_current_error
    )
    .unwrap();
    for w in &report.warnings {
        writeln!(s, "warning: {w}").unwrap();
    }
    s
}

/// Returns the CSV and the report; the CSV goes to `config.out` when set.
pub fn cmd_approx_compare(config: &RunConfig) -> Result<(String, ApproxReport)> {
    let mut config = config.clone();
    config.command.get_or_insert(Command::ApproxCompare);
    config.validate()?;
    let report = approx::compare_approx(&config.params, &config.baths, &config.grid.points())?;
    let csv = approx_csv(&report);
    if let Some(path) = &config.out {
        write_output(path, &csv)?;
    }
    Ok((csv, report))
}

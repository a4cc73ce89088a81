use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qtransistor::cli::{self, RunConfig};
use qtransistor::{Error, Result};

#[derive(Parser)]
#[command(
    name = "qtt",
    version,
    about = "Three-qubit quantum thermal transistor simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the eight product-state energies
    Spectrum(Opts),
    /// Sweep T_M and write currents and gains as CSV
    Sweep(Opts),
    /// Locate the J_M minimum and zero crossing
    OperatingPoints(Opts),
    /// Compare closed-form estimates against the exact solver
    ApproxCompare(Opts),
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct Opts {
    /// key = value configuration file
    #[arg(long)]
    config: Option<PathBuf>,
    /// Named base configuration (applied before --config)
    #[arg(long)]
    preset: Option<String>,
    #[arg(long)]
    omega_l: Option<f64>,
    #[arg(long)]
    omega_m: Option<f64>,
    #[arg(long)]
    omega_r: Option<f64>,
    #[arg(long)]
    omega_lm: Option<f64>,
    #[arg(long)]
    omega_mr: Option<f64>,
    #[arg(long)]
    omega_rl: Option<f64>,
    #[arg(long)]
    t_l: Option<f64>,
    #[arg(long)]
    t_m: Option<f64>,
    #[arg(long)]
    t_r: Option<f64>,
    #[arg(long)]
    kappa_l: Option<f64>,
    #[arg(long)]
    kappa_m: Option<f64>,
    #[arg(long)]
    kappa_r: Option<f64>,
    #[arg(long)]
    tm_min: Option<f64>,
    #[arg(long)]
    tm_max: Option<f64>,
    #[arg(long)]
    tm_steps: Option<usize>,
    #[arg(long)]
    bracket_lo: Option<f64>,
    #[arg(long)]
    bracket_hi: Option<f64>,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Opts {
    fn resolve(&self) -> Result<RunConfig> {
        let mut config = match &self.preset {
            Some(name) => RunConfig::preset(name)?,
            None => RunConfig::featured(),
        };
        if let Some(path) = &self.config {
            let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            config.apply_text(&text, &path.display().to_string())?;
        }
        let numeric = [
            ("omega_l", self.omega_l),
            ("omega_m", self.omega_m),
            ("omega_r", self.omega_r),
            ("omega_lm", self.omega_lm),
            ("omega_mr", self.omega_mr),
            ("omega_rl", self.omega_rl),
            ("t_l", self.t_l),
            ("t_m", self.t_m),
            ("t_r", self.t_r),
            ("kappa_l", self.kappa_l),
            ("kappa_m", self.kappa_m),
            ("kappa_r", self.kappa_r),
            ("tm_min", self.tm_min),
            ("tm_max", self.tm_max),
            ("bracket_lo", self.bracket_lo),
            ("bracket_hi", self.bracket_hi),
        ];
        for (key, value) in numeric {
            if let Some(v) = value {
                config
                    .set(key, &v.to_string())
                    .map_err(|m| qtransistor::Error::Config {
                        origin: "command line".into(),
                        line: 0,
                        message: m,
                    })?;
            }
        }
        if let Some(steps) = self.tm_steps {
            config.grid.steps = steps;
        }
        if let Some(out) = &self.out {
            config.out = Some(out.clone());
        }
        Ok(config)
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Cmd::Spectrum(opts) => {
            let config = opts.resolve()?;
            let table = cli::cmd_spectrum(&config)?;
            if config.out.is_none() {
                print!("{}", table.render());
            }
        }
        Cmd::Sweep(opts) => {
            let config = opts.resolve()?;
            let csv = cli::cmd_sweep(&config)?;
            if config.out.is_none() {
                print!("{csv}");
            }
        }
        Cmd::OperatingPoints(opts) => {
            let config = opts.resolve()?;
            let manifest = cli::cmd_operating_points(&config)?;
            if config.out.is_none() {
                print!("{}", manifest.emit());
            }
        }
        Cmd::ApproxCompare(opts) => {
            let config = opts.resolve()?;
            let (csv, report) = cli::cmd_approx_compare(&config)?;
            if config.out.is_none() {
                print!("{csv}");
            }
            eprint!("{}", cli::approx_summary(&report));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::Bracket { .. }) {
                eprintln!(
                    "hint: widen the grid (--tm-min/--tm-max) or pass --bracket-lo/--bracket-hi"
                );
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

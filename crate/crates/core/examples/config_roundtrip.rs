//! Builds a run from config text, overrides one value, and emits the result.
use qtransistor::cli::{cmd_sweep, RunConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = "\
# narrow sweep with a warmer left bath
tm_min = 0.15
tm_max = 0.16
tm_steps = 11
";
    let mut config = RunConfig::parse(text, "inline")?;
    config.set("t_l", "0.25")?;
    print!("{}", config.emit());
    print!("{}", cmd_sweep(&config)?);
    Ok(())
}

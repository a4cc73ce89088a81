//! Closed-form populations and currents against the exact solution.
use qtransistor::analysis::linear_grid;
use qtransistor::approx::compare_approx;
use qtransistor::{BathSet, SystemParams};

fn main() -> qtransistor::Result<()> {
    let params = SystemParams::featured(1.0);
    let baths = BathSet::new(0.2, 0.1, 0.02);
    let report = compare_approx(&params, &baths, &linear_grid(0.05, 0.2, 16))?;
    for w in &report.warnings {
        println!("warning: {w}");
    }

    println!(
        "{:>6} {:>12} {:>12} {:>9}",
        "T_M", "J_L approx", "J_L exact", "err"
    );
    for row in &report.rows {
        println!(
            "{:6.3} {:12.5e} {:12.5e} {:8.3}%",
            row.t_m,
            row.approx_currents.j_l,
            row.exact_currents.j_l,
            100.0 * row.current_errors()[0]
        );
    }
    let s = report.summary;
    println!(
        "max population error {:.3}% at T_M = {}",
        100.0 * s.max_population_error,
        s.t_m_at_max_population_error
    );
    println!(
        "max terminal current error {:.3}% at T_M = {}",
        100.0 * s.max_current_error,
        s.t_m_at_max_current_error
    );
    Ok(())
}

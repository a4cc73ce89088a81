//! Equal couplings on all three pairs: currents and gains for comparison
//! with the featured configuration.
use qtransistor::analysis::{linear_grid, sweep_with_gains, Gain};
use qtransistor::{BathSet, SystemParams};

fn main() -> qtransistor::Result<()> {
    let params = SystemParams::symmetric(1.0);
    let baths = BathSet::new(0.2, 0.1, 0.02);
    for p in sweep_with_gains(&params, &baths, &linear_grid(0.02, 0.2, 19))? {
        let alpha = match p.alpha_l() {
            Some(Gain::Finite(v)) => format!("{v:.4}"),
            Some(Gain::Divergent { .. }) => "flat J_M".to_string(),
            None => "-".to_string(),
        };
        println!(
            "T_M {:.3}  J_L {:.6e}  J_M {:.6e}  alpha_L {alpha}",
            p.t_m, p.currents.j_l, p.currents.j_m
        );
    }
    Ok(())
}

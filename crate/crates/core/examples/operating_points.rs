//! Locates the `J_M` minimum and zero crossing and the gains at the zero.
use qtransistor::analysis::operating_points;
use qtransistor::{BathSet, SystemParams};

fn main() -> qtransistor::Result<()> {
    let params = SystemParams::featured(1.0);
    let baths = BathSet::new(0.2, 0.1, 0.02);
    let op = operating_points(&params, &baths, (0.05, 0.18), (0.13, 0.18))?;

    if let Some(t) = op.t_jm_min {
        println!("J_M minimum at T_M = {t:.6}");
    }
    println!("J_M = 0 at T_M = {:.6}", op.t_jm_zero);
    let j = op.currents_at_zero;
    println!("  J_L {:.5e}  J_R {:.5e}", j.j_l, j.j_r);
    let (al, ar) = op.gains_at_zero;
    println!("  alpha_L {al:.4}  alpha_R {ar:.4}");
    Ok(())
}

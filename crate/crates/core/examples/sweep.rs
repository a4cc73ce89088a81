//! Heat currents and amplification factors across a `T_M` sweep.
use qtransistor::analysis::{linear_grid, sweep_with_gains, Gain};
use qtransistor::{BathSet, SystemParams};

fn show(g: Option<Gain>) -> String {
    match g {
        Some(Gain::Finite(v)) => format!("{v:10.3}"),
        Some(Gain::Divergent { positive }) => {
            format!("{:>10}", if positive { "+inf" } else { "-inf" })
        }
        None => format!("{:>10}", "-"),
    }
}

fn main() -> qtransistor::Result<()> {
    let params = SystemParams::featured(1.0);
    let baths = BathSet::new(0.2, 0.1, 0.02);
    let points = sweep_with_gains(&params, &baths, &linear_grid(0.02, 0.2, 19))?;

    println!(
        "{:>6} {:>12} {:>12} {:>12} {:>10} {:>10}",
        "T_M", "J_L", "J_M", "J_R", "alpha_L", "alpha_R"
    );
    for p in &points {
        let c = p.currents;
        println!(
            "{:6.3} {:12.4e} {:12.4e} {:12.4e} {} {}",
            p.t_m,
            c.j_l,
            c.j_m,
            c.j_r,
            show(p.alpha_l()),
            show(p.alpha_r())
        );
    }
    Ok(())
}

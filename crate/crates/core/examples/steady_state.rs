//! Stationary populations and heat currents at a single operating point.
use qtransistor::{
    build_rate_matrix, conservation_residual, grouped_populations, heat_currents,
    solve_steady_state, BathSet, SystemParams,
};

fn main() -> qtransistor::Result<()> {
    let params = SystemParams::featured(1.0);
    let baths = BathSet::new(0.2, 0.1, 0.02);

    let a = build_rate_matrix(&params, &baths)?;
    let rho = solve_steady_state(&a)?;
    println!("rho = {:?}", rho.as_array());

    let g = grouped_populations(&rho);
    println!(
        "grouped: I {:.4e}  II {:.4e}  III {:.4e}  IV {:.4e}",
        g.i, g.ii, g.iii, g.iv
    );

    let j = heat_currents(&params, &baths, &rho)?;
    println!("J_L {:.6e}  J_M {:.6e}  J_R {:.6e}", j.j_l, j.j_m, j.j_r);
    println!("conservation residual {:.1e}", conservation_residual(&j));
    Ok(())
}

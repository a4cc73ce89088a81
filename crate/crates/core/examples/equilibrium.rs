//! With every bath at one temperature the steady state is the Gibbs state
//! and no heat flows.
use qtransistor::{build_spectrum, solve, BathSet, SystemParams};

fn main() -> qtransistor::Result<()> {
    let params = SystemParams {
        omega_l: 0.3,
        omega_m: -0.4,
        omega_r: 0.1,
        omega_lm: 0.8,
        omega_mr: -0.5,
        omega_rl: 0.2,
    };
    let t = 0.35;
    let (rho, j) = solve(&params, &BathSet::uniform(t))?;

    let energies = *build_spectrum(&params)?.energies();
    let boltzmann = energies.map(|e| (-e / t).exp());
    let z: f64 = boltzmann.iter().sum();
    for (i, (x, w)) in rho.as_array().iter().zip(&boltzmann).enumerate() {
        println!("|{}>  rho {:.10}  gibbs {:.10}", i + 1, x, w / z);
    }
    println!("currents {:.1e} {:.1e} {:.1e}", j.j_l, j.j_m, j.j_r);
    Ok(())
}

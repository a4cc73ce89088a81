//! Energy levels and bath-allowed transitions of the featured configuration.
use qtransistor::{build_spectrum, enumerate_transitions, BasisState, SystemParams};

fn main() -> qtransistor::Result<()> {
    let params = SystemParams::featured(1.0);
    let spectrum = build_spectrum(&params)?;
    for state in BasisState::all() {
        println!(
            "|{}> {}  E = {:+}",
            state.index(),
            state.arrows(),
            spectrum.energy(state)
        );
    }
    println!("distinct levels: {:?}", spectrum.levels());

    for t in enumerate_transitions(&params)?.iter() {
        println!(
            "{} <-> {}  bath {}  gap {}",
            t.upper.index(),
            t.lower.index(),
            t.bath,
            t.gap
        );
    }
    Ok(())
}

// Hilbert transform of the sampled wavelet, its envelope, and the
// lower-sideband remodulation `ψ·cos(2πt) + H[ψ]·sin(2πt)` compared with
// the scaling function.

use std::error::Error;

use meyer::closed_form::phi;
use meyer::export::DecomposeConfig;
use meyer::signal::{envelope, hilbert, scale_from_wavelet};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let wavelet = DecomposeConfig::default().wavelet()?;
    let h = hilbert(&wavelet);
    let env = envelope(&wavelet);
    let remod = scale_from_wavelet(&wavelet)?;
    let phi_s = wavelet.map(|t, _| phi(t));

    let k = remod.peak_index();
    println!(
        "remodulated peak: t = {}, value = {:.6}",
        remod.abscissa(k),
        remod.samples()[k]
    );
    let k = phi_s.peak_index();
    println!(
        "phi peak:         t = {}, value = {:.6}",
        phi_s.abscissa(k),
        phi_s.samples()[k]
    );
    let k = env.peak_index();
    println!(
        "envelope peak:    t = {}, value = {:.6}",
        env.abscissa(k),
        env.samples()[k]
    );

    let interior = wavelet.interior();
    println!(
        "max |remodulated - phi| (interior) = {:.3e}",
        remod.sub(&phi_s)?.max_abs_in(interior.clone())
    );
    // the remodulated signal is the real part of the down-converted analytic
    // signal, so the envelope always bounds it
    let excess = interior
        .clone()
        .map(|i| remod.samples()[i].abs() - env.samples()[i])
        .fold(f64::NEG_INFINITY, f64::max);
    println!("max (|remodulated| - envelope) = {excess:.3e}");
    println!(
        "Hilbert transform energy / wavelet energy = {:.6}",
        h.energy() / wavelet.energy()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

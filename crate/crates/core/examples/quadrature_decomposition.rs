// Synchronous detection of the wavelet: mix with a 2π carrier in phase and
// in quadrature, low-pass, then remodulate to recover the wavelet.

use std::error::Error;

use meyer::export::DecomposeConfig;
use meyer::signal::{decompose_quadrature, dft, reconstruct_quadrature};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = DecomposeConfig::default();
    let wavelet = cfg.wavelet()?;
    let (s_c, s_s) = decompose_quadrature(&wavelet, cfg.cutoff)?;
    let rebuilt = reconstruct_quadrature(&s_c, &s_s)?;
    let error = rebuilt.sub(&wavelet)?;
    let interior = wavelet.interior();

    println!(
        "grid: {} samples, dt = {}, cutoff = {:.4}",
        wavelet.len(),
        wavelet.dt(),
        cfg.cutoff
    );
    println!(
        "peak |s_c| = {:.6}, peak |s_s| = {:.6}",
        s_c.max_abs_in(0..s_c.len()),
        s_s.max_abs_in(0..s_s.len())
    );
    println!(
        "interior reconstruction error = {:.3e}",
        error.max_abs_in(interior)
    );

    let g = dft(&s_c);
    let peak = g.coefficients.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let leak = g
        .coefficients
        .iter()
        .zip(&g.bin_frequencies)
        .filter(|(_, w)| w.abs() > cfg.cutoff)
        .map(|(c, _)| c.norm())
        .fold(0.0, f64::max);
    println!(
        "s_c spectrum above cutoff relative to peak: {:.3e}",
        leak / peak
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

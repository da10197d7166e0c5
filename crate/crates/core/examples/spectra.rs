// Frequency-domain view of the Meyer pair: the scale spectrum, the wavelet
// spectrum with its half-frequency phase, and the partition-of-unity
// identities that make the pair orthonormal.

use std::error::Error;
use std::f64::consts::PI;

use meyer::spectral::{self, BAND_CENTER, BAND_HIGH, BAND_LOW, BAND_MID};
use meyer::{scale_spectrum, wavelet_spectrum, wavelet_spectrum_magnitude};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!(
        "{:>10}  {:>10}  {:>10}  {:>10}",
        "w/pi", "Phi", "|Psi|", "arg Psi"
    );
    for w in [
        0.0,
        BAND_LOW,
        PI,
        BAND_MID,
        BAND_CENTER,
        2.0 * PI,
        BAND_HIGH,
        3.0 * PI,
    ] {
        let z = wavelet_spectrum(w);
        println!(
            "{:>10.4}  {:>10.6}  {:>10.6}  {:>10.6}",
            w / PI,
            scale_spectrum(w),
            z.magnitude(),
            z.phase()
        );
    }

    // |Φ|² + |Ψ|² is flat across the transition band
    let worst = (0..=1000)
        .map(|i| BAND_LOW + (BAND_MID - BAND_LOW) * i as f64 / 1000.0)
        .map(|w| {
            (scale_spectrum(w).powi(2) + wavelet_spectrum_magnitude(w).powi(2) - 1.0 / (2.0 * PI))
                .abs()
        })
        .fold(0.0, f64::max);
    println!("max |Phi^2 + |Psi|^2 - 1/(2 pi)| on the transition band: {worst:.2e}");
    println!(
        "largest branch mismatch: {:.2e}",
        spectral::branch_mismatch()
    );
    if worst > 1e-12 {
        return Err("partition of unity violated".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

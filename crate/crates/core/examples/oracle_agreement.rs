// Compares the closed forms with direct quadrature of the inverse Fourier
// integrals over a dense grid that includes every singular point.

use std::error::Error;

use meyer::closed_form::{phi, psi, singular_points};
use meyer::oracle::{phi_oracle, psi_oracle, QuadratureConfig};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = QuadratureConfig::with_tolerance(1e-10)?;
    let mut ts: Vec<f64> = (0..=800).map(|i| -8.0 + 16.0 * i as f64 / 800.0).collect();
    ts.extend(singular_points().all_points());

    let mut worst_phi: f64 = 0.0;
    let mut worst_psi: f64 = 0.0;
    for &t in &ts {
        worst_phi = worst_phi.max((phi(t) - phi_oracle(t, &cfg)?).abs());
        worst_psi = worst_psi.max((psi(t) - psi_oracle(t, &cfg)?).abs());
    }
    println!("{} abscissas on [-8, 8] plus singular points", ts.len());
    println!("max |phi - phi_oracle| = {worst_phi:.3e}");
    println!("max |psi - psi_oracle| = {worst_psi:.3e}");
    if worst_phi.max(worst_psi) > 1e-8 {
        return Err("closed forms disagree with quadrature".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

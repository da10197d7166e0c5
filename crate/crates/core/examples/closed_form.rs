// Closed-form scaling function and wavelet, including evaluation right on
// the removable singularities of the rational expressions.

use std::error::Error;

use meyer::closed_form::{phi, psi, psi1, psi2, singular_points, GUARD_RADIUS};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for t in [-1.0, -0.5, 0.0, 0.25, 0.5, 1.0, 2.0] {
        println!("t={t:>5}: phi={:>12.8}  psi={:>12.8}", phi(t), psi(t));
    }

    let table = singular_points();
    println!("\nremovable singularities and their limits:");
    for (label, points, limits) in [
        ("phi ", &table.phi_singularities, &table.phi_limits),
        ("psi1", &table.psi1_singularities, &table.psi1_limits),
        ("psi2", &table.psi2_singularities, &table.psi2_limits),
    ] {
        for (t, l) in points.iter().zip(limits) {
            println!("  {label} t={t:>6}: {l:.15}");
        }
    }

    // approach t = 3/4 from both sides through the Taylor guard
    println!("\nphi near t = 3/4 (guard radius {GUARD_RADIUS:e}):");
    for h in [1e-3, 1e-5, 1e-8, 0.0, -1e-8, -1e-5, -1e-3] {
        println!("  t = 0.75 {h:+e}: {:.15}", phi(0.75 + h));
    }
    println!(
        "\npsi(1/2) = psi1 + psi2 = {} + {} = {}",
        psi1(0.5),
        psi2(0.5),
        psi(0.5)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

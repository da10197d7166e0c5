// Runs the whole property suite and prints the report table.

use std::error::Error;

use meyer::verify::{run_verification, VerifyConfig};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let report = run_verification(&VerifyConfig::default());
    println!("{}", report.grid_description);
    print!("{}", report.table());
    for c in report.failures() {
        println!(
            "failed: {} = {:e} (expected {} ± {})",
            c.name, c.value, c.expected, c.tolerance
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

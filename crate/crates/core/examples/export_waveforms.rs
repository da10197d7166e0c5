// Writes the raw data series behind the usual Meyer plots (spectra,
// closed forms against quadrature, baseband components) as CSV and JSON.
//
// Pass a directory as the first argument; defaults to the system temp dir.

use std::error::Error;
use std::f64::consts::PI;
use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use meyer::export::{self, DecomposeConfig, ExportFunction, ExportRequest, Format};
use meyer::signal::DEFAULT_CUTOFF;

pub fn export_all(dir: &Path) -> Result<Vec<PathBuf>, Box<dyn Error>> {
    std::fs::create_dir_all(dir)?;
    let jobs = [
        (
            ExportFunction::PhiSpectrum,
            -3.0 * PI,
            3.0 * PI,
            0.01,
            Format::Csv,
        ),
        (
            ExportFunction::PsiSpectrumMagnitude,
            -3.0 * PI,
            3.0 * PI,
            0.01,
            Format::Csv,
        ),
        (ExportFunction::Phi, -8.0, 8.0, 0.01, Format::Csv),
        (ExportFunction::PhiOracle, -8.0, 8.0, 0.05, Format::Csv),
        (ExportFunction::Psi, -8.0, 8.0, 0.01, Format::Csv),
        (ExportFunction::PsiOracle, -8.0, 8.0, 0.05, Format::Json),
    ];
    let mut written = Vec::new();
    for (function, t_start, t_end, step, format) in jobs {
        let req = ExportRequest {
            function,
            t_start,
            t_end,
            step,
            format,
        };
        let table = export::evaluate(&req, DEFAULT_CUTOFF)?;
        let ext = if format == Format::Csv { "csv" } else { "json" };
        let path = dir.join(format!("{}.{ext}", function.name()));
        table.write(format, BufWriter::new(File::create(&path)?))?;
        written.push(path);
    }
    let table = export::decomposition_table(&DecomposeConfig::default())?;
    let path = dir.join("decomposition.csv");
    table.write(Format::Csv, BufWriter::new(File::create(&path)?))?;
    written.push(path);
    Ok(written)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("meyer-export"));
    for path in export_all(&dir)? {
        println!("wrote {}", path.display());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

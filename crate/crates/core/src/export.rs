//! Sampled waveform and spectrum export as CSV or JSON.
//!
//! CSV: a header row, comma separators, one record per line. Values are
//! written with 17 significant digits so re-parsing reproduces every `f64`
//! bit for bit. JSON: an object with a `"grid"` metadata block and parallel
//! arrays, `"t"` for the abscissa and one array per value column.

use std::io::{Read, Write};

use serde::Serialize;
use serde_json::{Map, Value};

use crate::closed_form::{phi, psi, psi1, psi2};
use crate::error::{MeyerError, Result};
use crate::oracle::{phi_oracle, psi_oracle, QuadratureConfig};
use crate::signal::{self, SampledSignal, DEFAULT_CUTOFF};
use crate::spectral::{scale_spectrum, wavelet_spectrum_magnitude};

/// Upper bound on the number of steps in one export.
pub const MAX_EXPORT_STEPS: f64 = 1e7;

/// Extra time span sampled on each side before filtering, so DFT
/// wrap-around stays outside the requested window.
pub const FILTER_PADDING: f64 = 16.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum ExportFunction {
    Phi,
    Psi,
    Psi1,
    Psi2,
    PhiSpectrum,
    PsiSpectrumMagnitude,
    Envelope,
    #[value(name = "s_c")]
    #[serde(rename = "s_c")]
    SC,
    #[value(name = "s_s")]
    #[serde(rename = "s_s")]
    SS,
    PhiOracle,
    PsiOracle,
}

impl ExportFunction {
    pub fn name(self) -> &'static str {
        match self {
            Self::Phi => "phi",
            Self::Psi => "psi",
            Self::Psi1 => "psi1",
            Self::Psi2 => "psi2",
            Self::PhiSpectrum => "phi_spectrum",
            Self::PsiSpectrumMagnitude => "psi_spectrum_magnitude",
            Self::Envelope => "envelope",
            Self::SC => "s_c",
            Self::SS => "s_s",
            Self::PhiOracle => "phi_oracle",
            Self::PsiOracle => "psi_oracle",
        }
    }

    /// `"w"` for spectra, `"t"` otherwise.
    pub fn abscissa(self) -> &'static str {
        match self {
            Self::PhiSpectrum | Self::PsiSpectrumMagnitude => "w",
            _ => "t",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExportRequest {
    pub function: ExportFunction,
    pub t_start: f64,
    pub t_end: f64,
    pub step: f64,
    pub format: Format,
}

impl ExportRequest {
    pub fn validate(&self) -> Result<()> {
        if !(self.t_start.is_finite() && self.t_end.is_finite() && self.step.is_finite()) {
            return Err(MeyerError::InvalidRequest(
                "range and step must be finite".into(),
            ));
        }
        if self.t_start >= self.t_end {
            return Err(MeyerError::InvalidRequest(format!(
                "start {} must be below end {}",
                self.t_start, self.t_end
            )));
        }
        if self.step <= 0.0 {
            return Err(MeyerError::InvalidRequest(format!(
                "step {} must be positive",
                self.step
            )));
        }
        if (self.t_end - self.t_start) / self.step > MAX_EXPORT_STEPS {
            return Err(MeyerError::InvalidRequest(format!(
                "more than {MAX_EXPORT_STEPS:e} steps requested"
            )));
        }
        Ok(())
    }

    /// Number of abscissas `t_start + k·step` that do not pass `t_end`.
    pub fn count(&self) -> usize {
        // slack absorbs the rounding in (end - start) / step for exact multiples
        ((self.t_end - self.t_start) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn abscissas(&self) -> Vec<f64> {
        (0..self.count())
            .map(|k| self.t_start + k as f64 * self.step)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridMeta {
    pub function: String,
    pub abscissa: String,
    pub start: f64,
    pub end: f64,
    pub step: f64,
    pub count: usize,
}

/// Abscissa column plus one or more named value columns.
#[derive(Debug, Clone, PartialEq)]
pub struct ExportTable {
    pub grid: GridMeta,
    pub abscissas: Vec<f64>,
    pub columns: Vec<(String, Vec<f64>)>,
}

impl ExportTable {
    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.columns
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_slice())
    }

    pub fn write<W: Write>(&self, format: Format, out: W) -> Result<()> {
        match format {
            Format::Csv => write_csv(self, out),
            Format::Json => write_json(self, out),
        }
    }
}

/// Formats a value with 17 significant digits.
pub fn format_value(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_csv<W: Write>(table: &ExportTable, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec![table.grid.abscissa.clone()];
    header.extend(table.columns.iter().map(|(n, _)| n.clone()));
    w.write_record(&header)?;
    for (k, t) in table.abscissas.iter().enumerate() {
        let mut record = vec![format_value(*t)];
        record.extend(table.columns.iter().map(|(_, v)| format_value(v[k])));
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

/// Writes the single-column layout `{"grid", "t", "value"}`, or one array per
/// column name when there are several columns.
pub fn write_json<W: Write>(table: &ExportTable, mut out: W) -> Result<()> {
    let mut obj = Map::new();
    obj.insert("grid".into(), serde_json::to_value(&table.grid)?);
    obj.insert("t".into(), serde_json::to_value(&table.abscissas)?);
    if let [(_, values)] = table.columns.as_slice() {
        obj.insert("value".into(), serde_json::to_value(values)?);
    } else {
        for (name, values) in &table.columns {
            obj.insert(name.clone(), serde_json::to_value(values)?);
        }
    }
    serde_json::to_writer_pretty(&mut out, &Value::Object(obj))?;
    writeln!(out)?;
    Ok(())
}

/// Parses a CSV export back into its header and numeric columns.
pub fn read_csv<R: Read>(input: R) -> Result<(Vec<String>, Vec<Vec<f64>>)> {
    let mut r = csv::Reader::from_reader(input);
    let header: Vec<String> = r.headers()?.iter().map(str::to_owned).collect();
    let mut columns = vec![Vec::new(); header.len()];
    for record in r.records() {
        let record = record?;
        for (col, field) in columns.iter_mut().zip(record.iter()) {
            let v = field
                .parse::<f64>()
                .map_err(|e| MeyerError::InvalidRequest(format!("bad number {field:?}: {e}")))?;
            col.push(v);
        }
    }
    Ok((header, columns))
}

fn padded_wavelet(req: &ExportRequest) -> Result<(SampledSignal, usize)> {
    let pad = (FILTER_PADDING / req.step).ceil() as usize;
    let n = req.count() + 2 * pad;
    let t0 = req.t_start - pad as f64 * req.step;
    let s = signal::sample(psi, t0, req.step, n.max(2))?;
    Ok((s, pad))
}

/// Evaluates the requested function on the request grid.
pub fn evaluate(req: &ExportRequest, cutoff: f64) -> Result<ExportTable> {
    req.validate()?;
    let xs = req.abscissas();
    let oracle_cfg = QuadratureConfig::default();
    let values: Vec<f64> = match req.function {
        ExportFunction::Phi => xs.iter().map(|&t| phi(t)).collect(),
        ExportFunction::Psi => xs.iter().map(|&t| psi(t)).collect(),
        ExportFunction::Psi1 => xs.iter().map(|&t| psi1(t)).collect(),
        ExportFunction::Psi2 => xs.iter().map(|&t| psi2(t)).collect(),
        ExportFunction::PhiSpectrum => xs.iter().map(|&w| scale_spectrum(w)).collect(),
        ExportFunction::PsiSpectrumMagnitude => {
            xs.iter().map(|&w| wavelet_spectrum_magnitude(w)).collect()
        }
        ExportFunction::PhiOracle => xs
            .iter()
            .map(|&t| phi_oracle(t, &oracle_cfg))
            .collect::<Result<_>>()?,
        ExportFunction::PsiOracle => xs
            .iter()
            .map(|&t| psi_oracle(t, &oracle_cfg))
            .collect::<Result<_>>()?,
        ExportFunction::Envelope => {
            let (s, pad) = padded_wavelet(req)?;
            signal::envelope(&s).samples()[pad..pad + xs.len()].to_vec()
        }
        ExportFunction::SC | ExportFunction::SS => {
            let (s, pad) = padded_wavelet(req)?;
            let (sc, ss) = signal::decompose_quadrature(&s, cutoff)?;
            let chosen = if req.function == ExportFunction::SC {
                sc
            } else {
                ss
            };
            chosen.samples()[pad..pad + xs.len()].to_vec()
        }
    };
    Ok(ExportTable {
        grid: GridMeta {
            function: req.function.name().into(),
            abscissa: req.function.abscissa().into(),
            start: req.t_start,
            end: req.t_end,
            step: req.step,
            count: xs.len(),
        },
        abscissas: xs,
        columns: vec![(req.function.name().into(), values)],
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecomposeConfig {
    pub dt: f64,
    pub span: f64,
    pub cutoff: f64,
}

impl Default for DecomposeConfig {
    fn default() -> Self {
        Self {
            dt: 1.0 / 64.0,
            span: 16.0,
            cutoff: DEFAULT_CUTOFF,
        }
    }
}

impl DecomposeConfig {
    /// Sampled wavelet on `[-span, span]`.
    pub fn wavelet(&self) -> Result<SampledSignal> {
        if !(self.span > 0.0 && self.span.is_finite()) {
            return Err(MeyerError::InvalidGrid(format!(
                "span {} must be positive",
                self.span
            )));
        }
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(MeyerError::InvalidGrid(format!(
                "spacing {} must be positive",
                self.dt
            )));
        }
        let n = (2.0 * self.span / self.dt).round() as usize + 1;
        signal::sample(psi, -self.span, self.dt, n)
    }
}

/// In-phase/quadrature decomposition of the sampled wavelet with its
/// reconstruction, reconstruction error, Hilbert envelope and the sampled
/// scaling function for reference.
pub fn decomposition_table(cfg: &DecomposeConfig) -> Result<ExportTable> {
    let wavelet = cfg.wavelet()?;
    let (sc, ss) = signal::decompose_quadrature(&wavelet, cfg.cutoff)?;
    let rec = signal::reconstruct_quadrature(&sc, &ss)?;
    let err = rec.sub(&wavelet)?;
    let env = signal::envelope(&wavelet);
    let abscissas: Vec<f64> = wavelet.abscissas().collect();
    let phi_col = abscissas.iter().map(|&t| phi(t)).collect();
    Ok(ExportTable {
        grid: GridMeta {
            function: "decomposition".into(),
            abscissa: "t".into(),
            start: wavelet.t0(),
            end: wavelet.abscissa(wavelet.len() - 1),
            step: wavelet.dt(),
            count: wavelet.len(),
        },
        abscissas,
        columns: vec![
            ("psi".into(), wavelet.into_samples()),
            ("s_c".into(), sc.into_samples()),
            ("s_s".into(), ss.into_samples()),
            ("reconstruction".into(), rec.into_samples()),
            ("reconstruction_error".into(), err.into_samples()),
            ("envelope".into(), env.into_samples()),
            ("phi".into(), phi_col),
        ],
    })
}

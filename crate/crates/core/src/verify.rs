//! The full numerical property suite as a structured report.
//!
//! Every check records the measured value, the value it should have, the
//! tolerance, and whether `|value − expected| ≤ tolerance`. Failures are
//! recorded in the report rather than returned as errors. All tolerances
//! live in [`Tolerances`]; `tolerance_scale` multiplies each of them.

use std::f64::consts::PI;
use std::time::{SystemTime, UNIX_EPOCH};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::closed_form::{phi, psi, singular_points};
use crate::error::{MeyerError, Result};
use crate::export::{self, ExportFunction, ExportRequest, Format};
use crate::oracle::{
    integrate, phi_oracle, phi_oracle_refined, psi_oracle, psi_oracle_kernel, psi_oracle_refined,
    QuadratureConfig,
};
use crate::signal::{self, SampledSignal, DEFAULT_CUTOFF, MAX_WAVELET_DT};
use crate::spectral::{
    branch_mismatch, nu, scale_spectrum, wavelet_spectrum_magnitude, BAND_HIGH, BAND_LOW, BAND_MID,
};

/// Base tolerances before `tolerance_scale` is applied.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub spectral_identity: f64,
    pub spectral_energy: f64,
    pub anchor: f64,
    pub oracle_agreement: f64,
    pub singularity_slope: f64,
    pub symmetry: f64,
    pub normalization: f64,
    pub orthogonality: f64,
    pub decay_slope: f64,
    pub oracle_tail: f64,
    pub dft_round_trip: f64,
    pub parseval_relative: f64,
    pub hilbert_involution: f64,
    pub closure: f64,
    pub csv_round_trip: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            spectral_identity: 1e-12,
            spectral_energy: 1e-10,
            anchor: 1e-10,
            oracle_agreement: 1e-8,
            singularity_slope: 20.0,
            symmetry: 1e-12,
            normalization: 1e-6,
            orthogonality: 1e-5,
            decay_slope: 0.3,
            oracle_tail: 1e-3,
            dft_round_trip: 1e-12,
            parseval_relative: 1e-10,
            hilbert_involution: 1e-10,
            closure: 1e-3,
            csv_round_trip: 0.0,
        }
    }
}

/// Expected decay exponent of the wavelet envelope.
pub const DECAY_EXPONENT: f64 = -3.0;
/// Number of equispaced oracle comparison points on `[-8, 8]`.
pub const ORACLE_GRID_POINTS: usize = 4001;
/// Half-width of the oracle comparison grid.
pub const ORACLE_GRID_HALF_WIDTH: f64 = 8.0;
/// Trapezoid grid used for normalization and orthogonality.
pub const NORM_GRID: (f64, f64, f64) = (-40.0, 41.0, 1.0 / 256.0);
/// Window over which the decay exponent is fitted.
pub const DECAY_WINDOW: (f64, f64) = (5.0, 50.0);
/// Abscissa at which the oracle tails must have died out.
pub const ORACLE_TAIL_T: f64 = 30.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub grid_dt: f64,
    pub grid_span: f64,
    pub cutoff: f64,
    pub tolerance_scale: f64,
    pub oracle_tolerance: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            grid_dt: 1.0 / 64.0,
            grid_span: 16.0,
            cutoff: DEFAULT_CUTOFF,
            tolerance_scale: 1.0,
            oracle_tolerance: 1e-10,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(MeyerError::InvalidRequest(format!(
                    "{name} must be positive, got {v}"
                )))
            }
        };
        positive("grid dt", self.grid_dt)?;
        positive("grid span", self.grid_span)?;
        positive("cutoff", self.cutoff)?;
        positive("tolerance scale", self.tolerance_scale)?;
        QuadratureConfig::with_tolerance(self.oracle_tolerance).map(|_| ())
    }

    fn tolerances(&self) -> Tolerances {
        let base = Tolerances::default();
        let s = self.tolerance_scale;
        Tolerances {
            spectral_identity: base.spectral_identity * s,
            spectral_energy: base.spectral_energy * s,
            anchor: base.anchor * s,
            oracle_agreement: base.oracle_agreement * s,
            singularity_slope: base.singularity_slope * s,
            symmetry: base.symmetry * s,
            normalization: base.normalization * s,
            orthogonality: base.orthogonality * s,
            decay_slope: base.decay_slope * s,
            oracle_tail: base.oracle_tail * s,
            dft_round_trip: base.dft_round_trip * s,
            parseval_relative: base.parseval_relative * s,
            hilbert_involution: base.hilbert_involution * s,
            closure: base.closure * s,
            csv_round_trip: base.csv_round_trip * s,
        }
    }

    fn signal_grid(&self) -> Result<SampledSignal> {
        export::DecomposeConfig {
            dt: self.grid_dt,
            span: self.grid_span,
            cutoff: self.cutoff,
        }
        .wavelet()
    }

    pub fn describe(&self) -> String {
        let n = (2.0 * self.grid_span / self.grid_dt).round() as usize + 1;
        format!(
            "signal grid t in [{}, {}] dt={} (N={}), cutoff={}; normalization grid t in [{}, {}] dt={}; \
             oracle grid {} points on [-{h}, {h}] plus singular points; quadrature tolerance {:e}; tolerance scale {}",
            -self.grid_span,
            self.grid_span,
            self.grid_dt,
            n,
            self.cutoff,
            NORM_GRID.0,
            NORM_GRID.1,
            NORM_GRID.2,
            ORACLE_GRID_POINTS,
            self.oracle_tolerance,
            self.tolerance_scale,
            h = ORACLE_GRID_HALF_WIDTH,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(name: &str, value: f64, expected: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            value,
            expected,
            tolerance,
            passed: (value - expected).abs() <= tolerance,
            note: None,
        }
    }

    pub fn failed(name: &str, expected: f64, tolerance: f64, note: String) -> Self {
        Self {
            name: name.into(),
            value: f64::NAN,
            expected,
            tolerance,
            passed: false,
            note: Some(note),
        }
    }

    fn with_note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub grid_description: String,
    pub tolerances: Tolerances,
    pub overall_pass: bool,
    pub generated_unix_seconds: u64,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["name", "value", "expected", "tolerance", "passed", "note"])?;
        for c in &self.checks {
            w.write_record([
                c.name.clone(),
                export::format_value(c.value),
                export::format_value(c.expected),
                export::format_value(c.tolerance),
                c.passed.to_string(),
                c.note.clone().unwrap_or_default(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write<W: std::io::Write>(&self, format: Format, mut out: W) -> Result<()> {
        match format {
            Format::Json => Ok(out.write_all(self.to_json()?.as_bytes())?),
            Format::Csv => self.write_csv(out),
        }
    }

    /// Fixed-width human-readable table.
    pub fn table(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(4)
            .max(5);
        let mut s = format!(
            "{:<width$}  {:>14}  {:>10}  {:>10}  result\n",
            "check", "value", "expected", "tolerance"
        );
        for c in &self.checks {
            s += &format!(
                "{:<width$}  {:>14.6e}  {:>10.3e}  {:>10.3e}  {}{}\n",
                c.name,
                c.value,
                c.expected,
                c.tolerance,
                if c.passed { "PASS" } else { "FAIL" },
                c.note
                    .as_deref()
                    .map(|n| format!("  ({n})"))
                    .unwrap_or_default(),
            );
        }
        let failed = self.failures().count();
        s += &format!(
            "{} of {} checks passed; overall: {}\n",
            self.checks.len() - failed,
            self.checks.len(),
            if self.overall_pass { "PASS" } else { "FAIL" }
        );
        s
    }
}

fn linspace(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| a + (b - a) * i as f64 / (n - 1) as f64)
}

fn max_over<I: Iterator<Item = f64>>(it: I) -> f64 {
    it.fold(0.0, f64::max)
}

/// Trapezoid rule over equally spaced samples.
pub fn trapezoid(values: &[f64], dt: f64) -> f64 {
    match values {
        [] | [_] => 0.0,
        [first, .., last] => dt * (values.iter().sum::<f64>() - 0.5 * (first + last)),
    }
}

/// Least-squares slope of `y` against `x`.
pub fn least_squares_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

/// `(t, max |ψ|)` on each unit window `[k, k+1)` inside `[from, to)`.
pub fn wavelet_envelope_peaks(from: f64, to: f64, per_unit: usize) -> Vec<(f64, f64)> {
    let start = from.floor() as i64;
    let end = to.ceil() as i64;
    (start..end)
        .map(|k| {
            (0..per_unit)
                .map(|i| k as f64 + i as f64 / per_unit as f64)
                .map(|t| (t, psi(t).abs()))
                .fold(
                    (k as f64, 0.0),
                    |best, cur| if cur.1 > best.1 { cur } else { best },
                )
        })
        .collect()
}

/// Fitted log–log slope of the wavelet's local envelope over `[from, to]`.
pub fn decay_slope(from: f64, to: f64) -> f64 {
    let peaks = wavelet_envelope_peaks(from, to, 1024);
    let (x, y): (Vec<f64>, Vec<f64>) = peaks.iter().map(|(t, v)| (t.ln(), v.ln())).unzip();
    least_squares_slope(&x, &y)
}

fn spectral_checks(tol: &Tolerances, checks: &mut Vec<Check>) {
    const N: usize = 10_000;
    let inv_2pi = 1.0 / (2.0 * PI);

    let ramp = max_over(linspace(0.0, 1.0, N + 1).map(|x| (nu(x) + nu(1.0 - x) - 1.0).abs()));
    checks.push(Check::new(
        "ramp_complementarity",
        ramp,
        0.0,
        tol.spectral_identity,
    ));

    checks.push(Check::new(
        "branch_continuity",
        branch_mismatch(),
        0.0,
        tol.spectral_identity,
    ));

    let pou = max_over(linspace(BAND_LOW, BAND_MID, N).map(|w| {
        let (a, b) = (scale_spectrum(w), scale_spectrum(2.0 * PI - w));
        (a * a + b * b - inv_2pi).abs()
    }));
    checks.push(Check::new(
        "partition_of_unity_scale",
        pou,
        0.0,
        tol.spectral_identity,
    ));

    let pou_sw = max_over(linspace(BAND_LOW, BAND_MID, N).map(|w| {
        let (a, b) = (scale_spectrum(w), wavelet_spectrum_magnitude(w));
        (a * a + b * b - inv_2pi).abs()
    }));
    checks.push(Check::new(
        "partition_of_unity_scale_wavelet",
        pou_sw,
        0.0,
        tol.spectral_identity,
    ));

    let lp = max_over(linspace(BAND_LOW, BAND_MID, N).map(|w| {
        let (a, b) = (
            wavelet_spectrum_magnitude(w),
            wavelet_spectrum_magnitude(2.0 * w),
        );
        (a * a + b * b - inv_2pi).abs()
    }));
    checks.push(Check::new(
        "two_scale_littlewood_paley",
        lp,
        0.0,
        tol.spectral_identity,
    ));

    let root = (2.0 * PI).sqrt();
    let product = max_over(linspace(BAND_LOW, BAND_HIGH, N).map(|w| {
        (root * scale_spectrum(w / 2.0) * scale_spectrum(w - 2.0 * PI)
            - wavelet_spectrum_magnitude(w))
        .abs()
    }));
    checks.push(Check::new(
        "product_identity",
        product,
        0.0,
        tol.spectral_identity,
    ));

    let fine = QuadratureConfig::with_tolerance(1e-13).expect("valid tolerance");
    let energy = [-BAND_MID, -BAND_LOW, 0.0, BAND_LOW, BAND_MID]
        .windows(2)
        .map(|w| integrate(|x| scale_spectrum(x).powi(2), w[0], w[1], &fine))
        .sum::<Result<f64>>();
    checks.push(match energy {
        Ok(e) => Check::new("spectral_energy", e, 1.0, tol.spectral_energy),
        Err(e) => Check::failed("spectral_energy", 1.0, tol.spectral_energy, e.to_string()),
    });
}

fn oracle_grid() -> Vec<f64> {
    let h = ORACLE_GRID_HALF_WIDTH;
    let mut ts: Vec<f64> = linspace(-h, h, ORACLE_GRID_POINTS).collect();
    ts.extend(singular_points().all_points());
    ts
}

fn max_error_with_location(
    ts: &[f64],
    f: fn(f64) -> f64,
    oracle: &dyn Fn(f64) -> Result<f64>,
) -> Result<(f64, f64)> {
    let mut worst = (0.0, ts[0]);
    for &t in ts {
        let e = (f(t) - oracle(t)?).abs();
        if e > worst.0 {
            worst = (e, t);
        }
    }
    Ok(worst)
}

fn closed_form_checks(qcfg: &QuadratureConfig, tol: &Tolerances, checks: &mut Vec<Check>) {
    let exact_phi0 = 2.0 / 3.0 + 4.0 / (3.0 * PI);
    checks.push(Check::new(
        "anchor_phi_0_exact",
        (phi(0.0) - exact_phi0).abs(),
        0.0,
        0.0,
    ));

    for (name, f, oracle, t) in [
        (
            "anchor_phi_3_4_vs_oracle",
            phi as fn(f64) -> f64,
            phi_oracle as fn(f64, &QuadratureConfig) -> Result<f64>,
            0.75,
        ),
        ("anchor_psi_1_2_vs_oracle", psi, psi_oracle, 0.5),
    ] {
        checks.push(match oracle(t, qcfg) {
            Ok(v) => Check::new(name, (f(t) - v).abs(), 0.0, tol.anchor),
            Err(e) => Check::failed(name, 0.0, tol.anchor, e.to_string()),
        });
    }

    let ts = oracle_grid();
    let phi_err = max_error_with_location(&ts, phi, &|t| phi_oracle(t, qcfg));
    let psi_err = max_error_with_location(&ts, psi, &|t| psi_oracle(t, qcfg));
    let name = "closed_form_vs_oracle_max_abs_error";
    checks.push(match (phi_err, psi_err) {
        (Ok((ep, tp)), Ok((es, tsi))) => Check::new(name, ep.max(es), 0.0, tol.oracle_agreement)
            .with_note(format!("phi {ep:.2e} at t={tp}, psi {es:.2e} at t={tsi}")),
        (Err(e), _) | (_, Err(e)) => Check::failed(name, 0.0, tol.oracle_agreement, e.to_string()),
    });

    let table = singular_points();
    let mut slope: f64 = 0.0;
    for (f, points) in [
        (phi as fn(f64) -> f64, &table.phi_singularities),
        (crate::closed_form::psi1, &table.psi1_singularities),
        (crate::closed_form::psi2, &table.psi2_singularities),
    ] {
        for &s in points {
            for h in [1e-5, 1e-6, 1e-7] {
                slope = slope
                    .max((f(s) - f(s + h)).abs() / h)
                    .max((f(s) - f(s - h)).abs() / h);
            }
        }
    }
    checks.push(Check::new(
        "singularity_continuity_slope",
        slope,
        0.0,
        tol.singularity_slope,
    ));

    let us: Vec<f64> = (0..=40 * 64).map(|k| k as f64 / 64.0).collect();
    let phi_sym = max_over(us.iter().map(|&u| (phi(u) - phi(-u)).abs()));
    let psi_sym = max_over(us.iter().map(|&u| (psi(0.5 + u) - psi(0.5 - u)).abs()));
    checks.push(Check::new("phi_even_symmetry", phi_sym, 0.0, tol.symmetry));
    checks.push(Check::new("psi_half_symmetry", psi_sym, 0.0, tol.symmetry));

    normalization_checks(tol, checks);

    let (from, to) = DECAY_WINDOW;
    checks.push(
        Check::new(
            "psi_envelope_decay_slope",
            decay_slope(from, to),
            DECAY_EXPONENT,
            tol.decay_slope,
        )
        .with_note(format!("unit-window maxima of |psi| on [{from}, {to}]")),
    );
}

fn normalization_checks(tol: &Tolerances, checks: &mut Vec<Check>) {
    let (a, b, dt) = NORM_GRID;
    const MAX_SHIFT: i64 = 3;
    let per_unit = (1.0 / dt).round() as i64;
    let n = ((b - a) / dt).round() as usize + 1;
    let pad = (MAX_SHIFT * per_unit) as usize;
    // values on the grid extended by MAX_SHIFT on each side, so shifted
    // copies are plain index offsets
    let ext_t0 = a - MAX_SHIFT as f64;
    let ext: Vec<f64> = (0..n + 2 * pad).map(|k| ext_t0 + k as f64 * dt).collect();
    let phi_ext: Vec<f64> = ext.iter().map(|&t| phi(t)).collect();
    let psi_ext: Vec<f64> = ext.iter().map(|&t| psi(t)).collect();
    let base = |v: &[f64]| v[pad..pad + n].to_vec();
    let shifted = |v: &[f64], shift: i64| {
        let start = (pad as i64 - shift * per_unit) as usize;
        v[start..start + n].to_vec()
    };
    let phi0 = base(&phi_ext);
    let psi0 = base(&psi_ext);
    let dot = |x: &[f64], y: &[f64]| {
        let prod: Vec<f64> = x.iter().zip(y).map(|(p, q)| p * q).collect();
        trapezoid(&prod, dt)
    };

    checks.push(Check::new(
        "phi_integral",
        trapezoid(&phi0, dt),
        1.0,
        tol.normalization,
    ));
    checks.push(Check::new(
        "psi_integral",
        trapezoid(&psi0, dt),
        0.0,
        tol.normalization,
    ));
    checks.push(Check::new(
        "phi_unit_energy",
        dot(&phi0, &phi0),
        1.0,
        tol.normalization,
    ));
    checks.push(Check::new(
        "psi_unit_energy",
        dot(&psi0, &psi0),
        1.0,
        tol.normalization,
    ));

    let mut phi_orth: f64 = 0.0;
    let mut psi_orth: f64 = 0.0;
    let mut cross: f64 = 0.0;
    for shift in -MAX_SHIFT..=MAX_SHIFT {
        let delta = if shift == 0 { 1.0 } else { 0.0 };
        phi_orth = phi_orth.max((dot(&phi0, &shifted(&phi_ext, shift)) - delta).abs());
        psi_orth = psi_orth.max((dot(&psi0, &shifted(&psi_ext, shift)) - delta).abs());
        cross = cross.max(dot(&phi0, &shifted(&psi_ext, shift)).abs());
    }
    checks.push(Check::new(
        "phi_shift_orthogonality",
        phi_orth,
        0.0,
        tol.orthogonality,
    ));
    checks.push(Check::new(
        "psi_shift_orthogonality",
        psi_orth,
        0.0,
        tol.orthogonality,
    ));
    checks.push(Check::new(
        "phi_psi_cross_orthogonality",
        cross,
        0.0,
        tol.orthogonality,
    ));
}

fn oracle_checks(
    cfg: &VerifyConfig,
    qcfg: &QuadratureConfig,
    tol: &Tolerances,
    checks: &mut Vec<Check>,
) {
    let probes = [0.0, 0.75, 3.3, -5.2, 7.9, 12.25];
    let scheme = probes
        .iter()
        .map(|&t| -> Result<f64> {
            let dp = (phi_oracle(t, qcfg)? - phi_oracle_refined(t, qcfg, 2)?).abs();
            let ds = (psi_oracle(t, qcfg)? - psi_oracle_refined(t, qcfg, 2)?).abs();
            Ok(dp.max(ds))
        })
        .try_fold(0.0, |m, e| e.map(|e| f64::max(m, e)));
    let name = "oracle_scheme_independence";
    checks.push(match scheme {
        Ok(v) => Check::new(name, v, 0.0, cfg.oracle_tolerance * cfg.tolerance_scale),
        Err(e) => Check::failed(name, 0.0, cfg.oracle_tolerance, e.to_string()),
    });

    let scale = 2.0 / (2.0 * PI).sqrt();
    let consistency = max_over(
        linspace(BAND_LOW, BAND_HIGH, 10_000)
            .map(|w| (2.0 * psi_oracle_kernel(w) - scale * wavelet_spectrum_magnitude(w)).abs()),
    );
    checks.push(Check::new(
        "oracle_integrand_consistency",
        consistency,
        0.0,
        tol.spectral_identity,
    ));

    let tail = [
        phi_oracle(ORACLE_TAIL_T, qcfg),
        psi_oracle(ORACLE_TAIL_T, qcfg),
    ]
    .into_iter()
    .try_fold(0.0, |m: f64, v| v.map(|v| m.max(v.abs())));
    let name = "oracle_tail_at_30";
    checks.push(match tail {
        Ok(v) => Check::new(name, v, 0.0, tol.oracle_tail),
        Err(e) => Check::failed(name, 0.0, tol.oracle_tail, e.to_string()),
    });
}

fn signal_checks(cfg: &VerifyConfig, tol: &Tolerances, checks: &mut Vec<Check>) {
    let wavelet = match cfg.signal_grid() {
        Ok(s) => s,
        Err(e) => {
            for (name, t) in [
                ("dft_round_trip", tol.dft_round_trip),
                ("parseval_relative_error", tol.parseval_relative),
                ("hilbert_involution", tol.hilbert_involution),
                ("quadrature_reconstruction_error", tol.closure),
                ("scale_from_wavelet_error", tol.closure),
                ("envelope_dominance_violation", tol.closure),
            ] {
                checks.push(Check::failed(name, 0.0, t, e.to_string()));
            }
            return;
        }
    };

    let spectrum = signal::dft(&wavelet);
    let back = signal::idft(&spectrum);
    let rt = max_over(
        back.samples()
            .iter()
            .zip(wavelet.samples())
            .map(|(a, b)| (a - b).abs()),
    );
    checks.push(Check::new("dft_round_trip", rt, 0.0, tol.dft_round_trip));

    let energy = wavelet.energy();
    let spectral = spectrum
        .coefficients
        .iter()
        .map(|c| c.norm_sqr())
        .sum::<f64>()
        / wavelet.len() as f64;
    checks.push(Check::new(
        "parseval_relative_error",
        (spectral - energy).abs() / energy,
        0.0,
        tol.parseval_relative,
    ));

    let mut clean = spectrum.clone();
    let n = wavelet.len();
    clean.coefficients[0] = Complex64::default();
    if n % 2 == 0 {
        clean.coefficients[n / 2] = Complex64::default();
    }
    let clean = signal::idft(&clean);
    let twice = signal::hilbert(&signal::hilbert(&clean));
    let inv = max_over(
        twice
            .samples()
            .iter()
            .zip(clean.samples())
            .map(|(a, b)| (a + b).abs()),
    );
    checks.push(Check::new(
        "hilbert_involution",
        inv,
        0.0,
        tol.hilbert_involution,
    ));

    let interior = wavelet.interior();
    let phi_s = wavelet.map(|t, _| phi(t));
    let too_coarse = || MeyerError::GridTooCoarse { dt: wavelet.dt() }.to_string();

    let name = "quadrature_reconstruction_error";
    checks.push(
        match signal::decompose_quadrature(&wavelet, cfg.cutoff)
            .and_then(|(sc, ss)| signal::reconstruct_quadrature(&sc, &ss))
            .and_then(|r| r.sub(&wavelet))
        {
            Ok(err) => Check::new(name, err.max_abs_in(interior.clone()), 0.0, tol.closure),
            Err(e) => Check::failed(name, 0.0, tol.closure, e.to_string()),
        },
    );

    let name = "scale_from_wavelet_error";
    checks.push(
        match signal::scale_from_wavelet(&wavelet).and_then(|s| s.sub(&phi_s)) {
            Ok(err) => Check::new(name, err.max_abs_in(interior.clone()), 0.0, tol.closure),
            Err(e) => Check::failed(name, 0.0, tol.closure, e.to_string()),
        },
    );

    let name = "envelope_dominance_violation";
    if wavelet.dt() >= MAX_WAVELET_DT {
        checks.push(Check::failed(name, 0.0, tol.closure, too_coarse()));
    } else {
        let env = signal::envelope(&wavelet);
        let violation = interior
            .clone()
            .map(|k| phi_s.samples()[k].abs() - env.samples()[k])
            .fold(0.0, f64::max);
        checks.push(Check::new(name, violation, 0.0, tol.closure));
    }
}

fn csv_round_trip_check(tol: &Tolerances) -> Check {
    let name = "csv_round_trip";
    let run = || -> Result<f64> {
        let req = ExportRequest {
            function: ExportFunction::Psi,
            t_start: -4.0,
            t_end: 4.0,
            step: 0.01,
            format: Format::Csv,
        };
        let table = export::evaluate(&req, DEFAULT_CUTOFF)?;
        let mut buf = Vec::new();
        export::write_csv(&table, &mut buf)?;
        let (_, cols) = export::read_csv(buf.as_slice())?;
        let values = table.column("psi").expect("psi column");
        Ok(max_over(
            cols[0]
                .iter()
                .zip(&table.abscissas)
                .chain(cols[1].iter().zip(values))
                .map(|(a, b)| {
                    if a.to_bits() == b.to_bits() {
                        0.0
                    } else {
                        (a - b).abs().max(f64::MIN_POSITIVE)
                    }
                }),
        ))
    };
    match run() {
        Ok(v) => Check::new(name, v, 0.0, tol.csv_round_trip),
        Err(e) => Check::failed(name, 0.0, tol.csv_round_trip, e.to_string()),
    }
}

/// Runs every property check.
pub fn run_verification(cfg: &VerifyConfig) -> VerificationReport {
    let tol = cfg.tolerances();
    let mut checks = Vec::new();
    spectral_checks(&tol, &mut checks);
    match QuadratureConfig::with_tolerance(cfg.oracle_tolerance) {
        Ok(qcfg) => {
            closed_form_checks(&qcfg, &tol, &mut checks);
            oracle_checks(cfg, &qcfg, &tol, &mut checks);
        }
        Err(e) => checks.push(Check::failed("quadrature_config", 0.0, 0.0, e.to_string())),
    }
    signal_checks(cfg, &tol, &mut checks);
    checks.push(csv_round_trip_check(&tol));

    let overall_pass = checks.iter().all(|c| c.passed);
    VerificationReport {
        checks,
        grid_description: cfg.describe(),
        tolerances: tol,
        overall_pass,
        generated_unix_seconds: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
    }
}

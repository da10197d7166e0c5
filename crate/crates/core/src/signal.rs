//! Uniformly sampled signals and the synchronous-detection machinery.
//!
//! The wavelet is a band-pass signal on `2π/3 ≤ |w| ≤ 8π/3`. Mixing it with
//! a carrier at `2π` and low-pass filtering yields in-phase and quadrature
//! baseband components `s_c`, `s_s`, from which
//! `ψ(t) = s_c(t)·cos(2πt) + s_s(t)·sin(2πt)`. The same carrier applied to
//! `ψ` and its Hilbert transform gives [`scale_from_wavelet`].
//!
//! All filtering happens on the DFT of the whole record, so every operation
//! is a periodic convolution. Compare results only on [`SampledSignal::interior`].

use std::f64::consts::PI;
use std::ops::Range;

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::error::{MeyerError, Result};

/// Carrier used for synchronous detection of the wavelet.
pub const CARRIER: f64 = 2.0 * PI;
/// Default low-pass cutoff, between the baseband edge `4π/3` and the
/// double-frequency images starting at `8π/3`.
pub const DEFAULT_CUTOFF: f64 = 2.0 * PI;
/// Fraction of a record, centred, that is free of wrap-around artefacts.
pub const INTERIOR_FRACTION: f64 = 0.8;
/// Sample spacing must stay below this to resolve `8π/3`.
pub const MAX_WAVELET_DT: f64 = 3.0 / 8.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Phase {
    Cosine,
    Sine,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledSignal {
    t0: f64,
    dt: f64,
    samples: Vec<f64>,
}

impl SampledSignal {
    pub fn new(t0: f64, dt: f64, samples: Vec<f64>) -> Result<Self> {
        if !t0.is_finite() {
            return Err(MeyerError::InvalidGrid(format!("start {t0} is not finite")));
        }
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(MeyerError::InvalidGrid(format!(
                "spacing {dt} must be positive"
            )));
        }
        if samples.len() < 2 {
            return Err(MeyerError::InvalidGrid(format!(
                "need at least 2 samples, got {}",
                samples.len()
            )));
        }
        if let Some(k) = samples.iter().position(|v| !v.is_finite()) {
            return Err(MeyerError::InvalidGrid(format!("sample {k} is not finite")));
        }
        Ok(Self { t0, dt, samples })
    }

    pub fn zeros(t0: f64, dt: f64, n: usize) -> Result<Self> {
        Self::new(t0, dt, vec![0.0; n])
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn abscissa(&self, k: usize) -> f64 {
        self.t0 + k as f64 * self.dt
    }

    pub fn abscissas(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(|k| self.abscissa(k))
    }

    pub fn same_grid(&self, other: &Self) -> bool {
        self.t0 == other.t0 && self.dt == other.dt && self.len() == other.len()
    }

    /// Centred index range covering [`INTERIOR_FRACTION`] of the record.
    pub fn interior(&self) -> Range<usize> {
        interior_range(self.len(), INTERIOR_FRACTION)
    }

    /// Same grid, new samples.
    fn with_samples(&self, samples: Vec<f64>) -> Self {
        debug_assert_eq!(samples.len(), self.len());
        Self {
            t0: self.t0,
            dt: self.dt,
            samples,
        }
    }

    pub fn map<F: Fn(f64, f64) -> f64>(&self, f: F) -> Self {
        let samples = self
            .samples
            .iter()
            .enumerate()
            .map(|(k, &v)| f(self.abscissa(k), v))
            .collect();
        self.with_samples(samples)
    }

    pub fn scale(&self, factor: f64) -> Self {
        self.map(|_, v| factor * v)
    }

    fn zip_with<F: Fn(f64, f64) -> f64>(&self, other: &Self, f: F) -> Result<Self> {
        if !self.same_grid(other) {
            return Err(MeyerError::GridMismatch);
        }
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(self.with_samples(samples))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|v| v * v).sum()
    }

    /// Largest absolute sample over `range`.
    pub fn max_abs_in(&self, range: Range<usize>) -> f64 {
        self.samples[range].iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Index of the sample with the largest magnitude.
    pub fn peak_index(&self) -> usize {
        self.samples
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |best, (k, v)| {
                if v.abs() > best.1 {
                    (k, v.abs())
                } else {
                    best
                }
            })
            .0
    }
}

pub fn interior_range(n: usize, fraction: f64) -> Range<usize> {
    let margin = ((1.0 - fraction) * 0.5 * n as f64).round() as usize;
    margin..n.saturating_sub(margin)
}

/// Evaluates `f` at `t0 + k·dt` for `k = 0..n`.
pub fn sample<F: Fn(f64) -> f64>(f: F, t0: f64, dt: f64, n: usize) -> Result<SampledSignal> {
    if !(dt > 0.0 && dt.is_finite()) || n < 2 || !t0.is_finite() {
        return Err(MeyerError::InvalidGrid(format!("t0={t0}, dt={dt}, n={n}")));
    }
    let samples = (0..n).map(|k| f(t0 + k as f64 * dt)).collect();
    SampledSignal::new(t0, dt, samples)
}

/// DFT of a sampled signal with the signed angular frequency of every bin.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSpectrumGrid {
    pub t0: f64,
    pub dt: f64,
    pub bin_frequencies: Vec<f64>,
    pub coefficients: Vec<Complex64>,
}

/// Signed angular frequency of DFT bin `k` for `n` samples at spacing `dt`.
pub fn bin_frequency(k: usize, n: usize, dt: f64) -> f64 {
    let signed = if 2 * k < n {
        k as f64
    } else {
        k as f64 - n as f64
    };
    2.0 * PI * signed / (n as f64 * dt)
}

/// True for the Nyquist bin of an even-length transform.
fn is_nyquist(k: usize, n: usize) -> bool {
    n.is_multiple_of(2) && 2 * k == n
}

/// Unnormalised forward DFT, `X_k = Σ x_n e^{-2πikn/N}`.
pub fn dft(s: &SampledSignal) -> ComplexSpectrumGrid {
    let n = s.len();
    let mut buf: Vec<Complex64> = s.samples.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    ComplexSpectrumGrid {
        t0: s.t0,
        dt: s.dt,
        bin_frequencies: (0..n).map(|k| bin_frequency(k, n, s.dt)).collect(),
        coefficients: buf,
    }
}

/// Inverse of [`dft`]; keeps the real part.
pub fn idft(g: &ComplexSpectrumGrid) -> SampledSignal {
    let n = g.coefficients.len();
    let mut buf = g.coefficients.clone();
    FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
    let scale = 1.0 / n as f64;
    SampledSignal {
        t0: g.t0,
        dt: g.dt,
        samples: buf.iter().map(|c| c.re * scale).collect(),
    }
}

fn filter_spectrum<F: Fn(usize, f64) -> Complex64>(
    s: &SampledSignal,
    response: F,
) -> SampledSignal {
    let mut g = dft(s);
    for (k, (c, &w)) in g
        .coefficients
        .iter_mut()
        .zip(&g.bin_frequencies)
        .enumerate()
    {
        *c *= response(k, w);
    }
    idft(&g)
}

/// Multiplies by `cos(carrier·t)` or `sin(carrier·t)` at the true abscissas.
pub fn modulate(s: &SampledSignal, carrier: f64, phase: Phase) -> SampledSignal {
    match phase {
        Phase::Cosine => s.map(|t, v| v * (carrier * t).cos()),
        Phase::Sine => s.map(|t, v| v * (carrier * t).sin()),
    }
}

/// Ideal low-pass: zeroes every bin with `|w| > cutoff`.
pub fn lowpass(s: &SampledSignal, cutoff: f64) -> Result<SampledSignal> {
    if cutoff.is_nan() || cutoff <= 0.0 {
        return Err(MeyerError::InvalidCutoff(cutoff));
    }
    let one = Complex64::new(1.0, 0.0);
    Ok(filter_spectrum(s, |_, w| {
        if w.abs() > cutoff {
            Complex64::default()
        } else {
            one
        }
    }))
}

/// Discrete Hilbert transform: `−j` on positive bins, `+j` on negative bins,
/// zero on DC and Nyquist.
pub fn hilbert(s: &SampledSignal) -> SampledSignal {
    let n = s.len();
    filter_spectrum(s, |k, w| {
        if k == 0 || is_nyquist(k, n) {
            Complex64::default()
        } else if w > 0.0 {
            Complex64::new(0.0, -1.0)
        } else {
            Complex64::new(0.0, 1.0)
        }
    })
}

fn require_wavelet_grid(s: &SampledSignal) -> Result<()> {
    if s.dt >= MAX_WAVELET_DT {
        Err(MeyerError::GridTooCoarse { dt: s.dt })
    } else {
        Ok(())
    }
}

/// In-phase and quadrature baseband components `(s_c, s_s)` of a sampled
/// wavelet. The mixer output is doubled so [`reconstruct_quadrature`]
/// restores unit gain.
pub fn decompose_quadrature(
    psi_s: &SampledSignal,
    cutoff: f64,
) -> Result<(SampledSignal, SampledSignal)> {
    require_wavelet_grid(psi_s)?;
    let in_phase = lowpass(&modulate(psi_s, CARRIER, Phase::Cosine).scale(2.0), cutoff)?;
    let quadrature = lowpass(&modulate(psi_s, CARRIER, Phase::Sine).scale(2.0), cutoff)?;
    Ok((in_phase, quadrature))
}

/// `s_c·cos(2πt) + s_s·sin(2πt)`.
pub fn reconstruct_quadrature(s_c: &SampledSignal, s_s: &SampledSignal) -> Result<SampledSignal> {
    modulate(s_c, CARRIER, Phase::Cosine).add(&modulate(s_s, CARRIER, Phase::Sine))
}

/// `ψ·cos(2πt) + H[ψ]·sin(2πt)`, the lower-sideband remodulation of the
/// wavelet against the carrier.
pub fn scale_from_wavelet(psi_s: &SampledSignal) -> Result<SampledSignal> {
    require_wavelet_grid(psi_s)?;
    let h = hilbert(psi_s);
    modulate(psi_s, CARRIER, Phase::Cosine).add(&modulate(&h, CARRIER, Phase::Sine))
}

/// `√(s² + H[s]²)`.
pub fn envelope(s: &SampledSignal) -> SampledSignal {
    let h = hilbert(s);
    s.zip_with(&h, f64::hypot)
        .expect("Hilbert transform keeps the grid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn max_diff(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
    }

    /// `periods` whole periods of `f` at `per_period` samples each.
    fn periodic<F: Fn(f64) -> f64>(f: F, periods: usize, per_period: usize) -> SampledSignal {
        let dt = 1.0 / per_period as f64;
        sample(f, 0.0, dt, periods * per_period).unwrap()
    }

    #[test]
    fn sampling() {
        assert_eq!(sample(|_| 0.0, 0.0, 0.5, 4).unwrap().samples(), &[0.0; 4]);
        assert!(matches!(
            sample(|t| t, 0.0, 1.0, 1),
            Err(MeyerError::InvalidGrid(_))
        ));
        assert!(sample(|t| t, 0.0, 0.0, 4).is_err());
        assert!(sample(|t| t, 0.0, -1.0, 4).is_err());
        assert_eq!(
            sample(|t| t, -1.0, 1.0, 3).unwrap().samples(),
            &[-1.0, 0.0, 1.0]
        );
        assert!(SampledSignal::new(0.0, 1.0, vec![1.0, f64::NAN]).is_err());
    }

    #[test]
    fn bin_layout() {
        assert_eq!(bin_frequency(0, 8, 1.0), 0.0);
        assert_abs_diff_eq!(bin_frequency(1, 8, 1.0), PI / 4.0);
        assert_abs_diff_eq!(bin_frequency(4, 8, 1.0), -PI);
        assert_abs_diff_eq!(bin_frequency(7, 8, 1.0), -PI / 4.0);
        assert_abs_diff_eq!(bin_frequency(2, 5, 0.5), 2.0 * PI * 2.0 / 2.5);
        assert_abs_diff_eq!(bin_frequency(3, 5, 0.5), -2.0 * PI * 2.0 / 2.5);
    }

    #[test]
    fn constant_lands_in_dc() {
        let s = SampledSignal::new(0.0, 1.0, vec![1.0; 8]).unwrap();
        let g = dft(&s);
        assert_abs_diff_eq!(g.coefficients[0].re, 8.0, epsilon = 1e-12);
        for c in &g.coefficients[1..] {
            assert!(c.norm() < 1e-12);
        }
    }

    #[test]
    fn impulse_is_flat() {
        let mut v = vec![0.0; 16];
        v[0] = 1.0;
        let g = dft(&SampledSignal::new(0.0, 1.0, v).unwrap());
        for c in &g.coefficients {
            assert_abs_diff_eq!(c.norm(), 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn modulation() {
        let ones = SampledSignal::new(0.0, 1.0, vec![1.0; 5]).unwrap();
        assert!(
            max_diff(
                modulate(&ones, 2.0 * PI, Phase::Cosine).samples(),
                &[1.0; 5]
            ) < 1e-12
        );
        let s = sample(|t| t * t - 1.0, -2.0, 0.1, 40).unwrap();
        assert_eq!(modulate(&s, 0.0, Phase::Cosine), s);
        assert!(modulate(&s, 0.0, Phase::Sine)
            .samples()
            .iter()
            .all(|&v| v == 0.0));
    }

    #[test]
    fn brick_wall() {
        // one full period of sin(t)
        let tone = sample(f64::sin, 0.0, 2.0 * PI / 64.0, 64).unwrap();
        let kept = lowpass(&tone, 2.0 * PI).unwrap();
        assert!(max_diff(kept.samples(), tone.samples()) < 1e-10);

        let high = periodic(|t| (3.0 * PI * t).sin(), 8, 32);
        let removed = lowpass(&high, 2.0 * PI).unwrap();
        assert!(removed.max_abs_in(0..removed.len()) < 1e-10);

        let nyquist = PI / high.dt();
        assert!(max_diff(lowpass(&high, nyquist).unwrap().samples(), high.samples()) < 1e-12);
        assert!(matches!(
            lowpass(&high, 0.0),
            Err(MeyerError::InvalidCutoff(_))
        ));
    }

    #[test]
    fn hilbert_pairs() {
        let c = periodic(|t| (2.0 * PI * t).cos(), 4, 32);
        let s = periodic(|t| (2.0 * PI * t).sin(), 4, 32);
        assert!(max_diff(hilbert(&c).samples(), s.samples()) < 1e-10);

        let konst = SampledSignal::new(0.0, 1.0, vec![3.0; 9]).unwrap();
        assert!(hilbert(&konst).max_abs_in(0..9) < 1e-12);

        let env = envelope(&c);
        assert!(max_diff(env.samples(), &vec![1.0; env.len()]) < 1e-10);
        let zero = SampledSignal::zeros(0.0, 0.1, 10).unwrap();
        assert_eq!(envelope(&zero).max_abs_in(0..10), 0.0);
    }

    #[test]
    fn quadrature_round_trip_of_band_pass_tone() {
        // a tone inside the wavelet band survives decomposition exactly
        let s = periodic(
            |t| (2.0 * PI * 0.8 * t).cos() + 0.5 * (2.0 * PI * 1.25 * t).sin(),
            20,
            64,
        );
        let (sc, ss) = decompose_quadrature(&s, DEFAULT_CUTOFF).unwrap();
        let r = reconstruct_quadrature(&sc, &ss).unwrap();
        assert!(max_diff(r.samples(), s.samples()) < 1e-10);
    }

    #[test]
    fn quadrature_edge_cases() {
        let zero = SampledSignal::zeros(-2.0, 1.0 / 16.0, 64).unwrap();
        let (sc, ss) = decompose_quadrature(&zero, DEFAULT_CUTOFF).unwrap();
        assert_eq!(sc.max_abs_in(0..64), 0.0);
        assert_eq!(ss.max_abs_in(0..64), 0.0);
        assert_eq!(
            reconstruct_quadrature(&sc, &ss).unwrap().max_abs_in(0..64),
            0.0
        );
        assert_eq!(scale_from_wavelet(&zero).unwrap().max_abs_in(0..64), 0.0);

        let sc = sample(|t| t, 0.0, 0.1, 20).unwrap();
        let r = reconstruct_quadrature(&sc, &SampledSignal::zeros(0.0, 0.1, 20).unwrap()).unwrap();
        assert!(max_diff(r.samples(), modulate(&sc, CARRIER, Phase::Cosine).samples()) < 1e-15);

        let other = SampledSignal::zeros(0.05, 0.1, 20).unwrap();
        assert!(matches!(
            reconstruct_quadrature(&sc, &other),
            Err(MeyerError::GridMismatch)
        ));

        let coarse = SampledSignal::zeros(0.0, 0.5, 64).unwrap();
        assert!(matches!(
            decompose_quadrature(&coarse, DEFAULT_CUTOFF),
            Err(MeyerError::GridTooCoarse { .. })
        ));
        assert!(matches!(
            scale_from_wavelet(&coarse),
            Err(MeyerError::GridTooCoarse { .. })
        ));
    }

    #[test]
    fn interior_window() {
        assert_eq!(interior_range(100, 0.8), 10..90);
        assert_eq!(interior_range(2049, 0.8), 205..1844);
    }

    fn signal_strategy() -> impl Strategy<Value = SampledSignal> {
        (2usize..200).prop_flat_map(|n| {
            prop::collection::vec(-10.0..10.0f64, n)
                .prop_map(|v| SampledSignal::new(-1.0, 0.03, v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn dft_round_trip_and_parseval(s in signal_strategy()) {
            let g = dft(&s);
            let back = idft(&g);
            prop_assert!(max_diff(back.samples(), s.samples()) <= 1e-12);
            let spectral: f64 = g.coefficients.iter().map(|c| c.norm_sqr()).sum::<f64>() / s.len() as f64;
            let e = s.energy();
            prop_assert!((spectral - e).abs() <= 1e-10 * e.max(1e-300));
        }

        #[test]
        fn hilbert_involution(s in signal_strategy()) {
            // remove DC and Nyquist content, where H is not invertible
            let n = s.len();
            let mut g = dft(&s);
            g.coefficients[0] = Complex64::default();
            if n % 2 == 0 {
                g.coefficients[n / 2] = Complex64::default();
            }
            let clean = idft(&g);
            let twice = hilbert(&hilbert(&clean));
            let neg = clean.scale(-1.0);
            prop_assert!(max_diff(twice.samples(), neg.samples()) <= 1e-10);
        }
    }
}

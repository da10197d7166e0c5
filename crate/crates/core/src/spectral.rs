//! Frequency-domain definitions of the Meyer pair.
//!
//! The scale spectrum `Φ(w)` is flat on `|w| ≤ 2π/3`, rolls off through a
//! cosine transition on `2π/3 ≤ |w| ≤ 4π/3` and vanishes beyond. The wavelet
//! spectrum `Ψ(w)` is a band-pass on `2π/3 ≤ |w| ≤ 8π/3` carrying the phase
//! factor `e^{jw/2}`. Both transitions are shaped by the linear ramp [`nu`];
//! the closed forms in [`crate::closed_form`] are only valid for that ramp.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{MeyerError, Result};

/// Edge of the flat part of `Φ` and lower edge of the wavelet band.
pub const BAND_LOW: f64 = 2.0 * PI / 3.0;
/// Upper edge of `Φ` and the crossover between the two wavelet branches.
pub const BAND_MID: f64 = 4.0 * PI / 3.0;
/// Upper edge of the wavelet band.
pub const BAND_HIGH: f64 = 8.0 * PI / 3.0;
/// Centre of the wavelet band.
pub const BAND_CENTER: f64 = 5.0 * PI / 3.0;

/// Flat-band amplitude `1/√(2π)`.
pub fn amplitude() -> f64 {
    (2.0 * PI).sqrt().recip()
}

/// Angular frequency in radians per unit time.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct AngularFrequency(f64);

impl AngularFrequency {
    pub fn new(w: f64) -> Result<Self> {
        if w.is_finite() {
            Ok(Self(w))
        } else {
            Err(MeyerError::NonFinite {
                what: "angular frequency",
                value: w,
            })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Complex spectral amplitude.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ComplexAmp {
    pub re: f64,
    pub im: f64,
}

impl ComplexAmp {
    pub const ZERO: ComplexAmp = ComplexAmp { re: 0.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub fn magnitude(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn phase(self) -> f64 {
        self.im.atan2(self.re)
    }
}

impl From<Complex64> for ComplexAmp {
    fn from(c: Complex64) -> Self {
        Self { re: c.re, im: c.im }
    }
}

impl From<ComplexAmp> for Complex64 {
    fn from(c: ComplexAmp) -> Self {
        Complex64::new(c.re, c.im)
    }
}

/// Linear ramp: 0 below 0, identity on `[0, 1]`, 1 above 1.
pub fn nu(x: f64) -> f64 {
    if x < 0.0 {
        0.0
    } else if x <= 1.0 {
        x
    } else {
        1.0
    }
}

fn scale_transition(w: f64) -> f64 {
    amplitude() * (0.5 * PI * nu(3.0 * w / (2.0 * PI) - 1.0)).cos()
}

fn wavelet_lower(w: f64) -> f64 {
    amplitude() * (0.5 * PI * nu(3.0 * w / (2.0 * PI) - 1.0)).sin()
}

fn wavelet_upper(w: f64) -> f64 {
    amplitude() * (0.5 * PI * nu(3.0 * w / (4.0 * PI) - 1.0)).cos()
}

/// Scale-function spectrum `Φ(w)`, extended evenly to negative frequencies.
///
/// Always in `[0, 1/√(2π)]`.
pub fn scale_spectrum(w: f64) -> f64 {
    let w = w.abs();
    if w <= BAND_LOW {
        amplitude()
    } else if w <= BAND_MID {
        scale_transition(w)
    } else {
        0.0
    }
}

/// `|Ψ(w)|`, zero outside `2π/3 ≤ |w| ≤ 8π/3`.
pub fn wavelet_spectrum_magnitude(w: f64) -> f64 {
    let w = w.abs();
    if (BAND_LOW..=BAND_MID).contains(&w) {
        wavelet_lower(w)
    } else if (BAND_MID..=BAND_HIGH).contains(&w) {
        wavelet_upper(w)
    } else {
        0.0
    }
}

/// Wavelet spectrum `Ψ(w) = |Ψ(w)|·e^{jw/2}`.
pub fn wavelet_spectrum(w: f64) -> ComplexAmp {
    let m = wavelet_spectrum_magnitude(w);
    if m == 0.0 {
        return ComplexAmp::ZERO;
    }
    let (s, c) = (0.5 * w).sin_cos();
    ComplexAmp::new(m * c, m * s)
}

/// Largest disagreement between the two formulas meeting at each branch
/// point of `Φ` and `|Ψ|`, including the zero branch at the outer edges.
pub fn branch_mismatch() -> f64 {
    let a = amplitude();
    [
        (a - scale_transition(BAND_LOW)).abs(),
        scale_transition(BAND_MID).abs(),
        wavelet_lower(BAND_LOW).abs(),
        (wavelet_lower(BAND_MID) - wavelet_upper(BAND_MID)).abs(),
        wavelet_upper(BAND_HIGH).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    const INV_2PI: f64 = 1.0 / (2.0 * PI);

    #[test]
    fn ramp_values() {
        assert_eq!(nu(-1.0), 0.0);
        assert_eq!(nu(0.5), 0.5);
        assert_eq!(nu(2.0), 1.0);
        assert_eq!(nu(0.0), 0.0);
        assert_eq!(nu(1.0), 1.0);
    }

    #[test]
    fn scale_spectrum_anchors() {
        assert_abs_diff_eq!(
            scale_spectrum(0.0),
            0.398_942_280_401_432_7,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(scale_spectrum(BAND_MID), 0.0, epsilon = 1e-16);
        // ν(1/2) = 1/2, cos(π/4) = √2/2, so Φ(π) = 1/(2√π)
        assert_abs_diff_eq!(scale_spectrum(PI), 0.5 / PI.sqrt(), epsilon = 1e-15);
        assert_eq!(scale_spectrum(5.0), 0.0);
        assert_eq!(scale_spectrum(-1.0), scale_spectrum(1.0));
    }

    #[test]
    fn wavelet_spectrum_anchors() {
        assert_eq!(wavelet_spectrum(0.0), ComplexAmp::ZERO);
        assert_abs_diff_eq!(
            wavelet_spectrum(2.0 * PI).magnitude(),
            0.5 / PI.sqrt(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            wavelet_spectrum(BAND_MID).magnitude(),
            amplitude(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            wavelet_spectrum_magnitude(PI),
            amplitude() * (PI / 4.0).sin(),
            epsilon = 1e-15
        );
        assert_eq!(wavelet_spectrum_magnitude(3.0 * PI), 0.0);
    }

    #[test]
    fn wavelet_phase_is_half_frequency() {
        let w = BAND_CENTER;
        let z = wavelet_spectrum(w);
        let expected = Complex64::from_polar(wavelet_spectrum_magnitude(w), w / 2.0);
        assert_abs_diff_eq!(z.re, expected.re, epsilon = 1e-15);
        assert_abs_diff_eq!(z.im, expected.im, epsilon = 1e-15);
    }

    #[test]
    fn branches_agree() {
        assert!(branch_mismatch() < 1e-15, "{}", branch_mismatch());
    }

    #[test]
    fn rejects_non_finite_frequency() {
        assert!(AngularFrequency::new(f64::NAN).is_err());
        assert!(AngularFrequency::new(f64::INFINITY).is_err());
        assert_eq!(AngularFrequency::new(1.5).unwrap().value(), 1.5);
    }

    proptest! {
        #[test]
        fn ramp_complementarity(x in 0.0..=1.0f64) {
            prop_assert!((nu(x) + nu(1.0 - x) - 1.0).abs() <= 1e-15);
        }

        #[test]
        fn scale_spectrum_bounded(w in -20.0..20.0f64) {
            let v = scale_spectrum(w);
            prop_assert!((0.0..=amplitude()).contains(&v));
        }

        #[test]
        fn magnitude_symmetric(w in -20.0..20.0f64) {
            prop_assert_eq!(wavelet_spectrum_magnitude(w), wavelet_spectrum_magnitude(-w));
            let direct = wavelet_spectrum(w).magnitude();
            prop_assert!((direct - wavelet_spectrum_magnitude(w)).abs() <= 1e-15);
        }

        #[test]
        fn partition_of_unity(w in BAND_LOW..=BAND_MID) {
            let phi = scale_spectrum(w);
            let mirrored = scale_spectrum(2.0 * PI - w);
            let psi = wavelet_spectrum_magnitude(w);
            prop_assert!((phi * phi + mirrored * mirrored - INV_2PI).abs() <= 1e-12);
            prop_assert!((phi * phi + psi * psi - INV_2PI).abs() <= 1e-12);
            let dilated = wavelet_spectrum_magnitude(2.0 * w);
            prop_assert!((psi * psi + dilated * dilated - INV_2PI).abs() <= 1e-12);
        }

        #[test]
        fn product_identity(w in BAND_LOW..=BAND_HIGH) {
            let lhs = (2.0 * PI).sqrt() * scale_spectrum(w / 2.0) * scale_spectrum(w - 2.0 * PI);
            prop_assert!((lhs - wavelet_spectrum_magnitude(w)).abs() <= 1e-12);
        }
    }
}

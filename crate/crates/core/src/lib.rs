//! Meyer scaling function and wavelet in the time domain.
//!
//! The crate evaluates the frequency-domain definitions of the Meyer pair
//! ([`spectral`]), their closed-form time-domain expressions with exact
//! handling of every removable singularity ([`closed_form`]), an independent
//! inverse-Fourier quadrature oracle ([`oracle`]), and the synchronous
//! detection / Hilbert machinery that splits the wavelet into in-phase and
//! quadrature baseband components ([`signal`]). [`verify`] runs every
//! numerical property as a structured report and [`export`] writes sampled
//! waveforms as CSV or JSON.
//!
//! ```
//! use meyer::closed_form::{phi, psi};
//! use meyer::oracle::{phi_oracle, QuadratureConfig};
//!
//! let cfg = QuadratureConfig::with_tolerance(1e-10).unwrap();
//! assert!((phi(0.75) - phi_oracle(0.75, &cfg).unwrap()).abs() < 1e-10);
//! assert!((psi(0.5) - 4.0 / std::f64::consts::PI).abs() < 1e-12);
//! ```

pub mod closed_form;
pub mod error;
pub mod export;
pub mod oracle;
pub mod signal;
pub mod spectral;
pub mod verify;

pub use closed_form::{phi, psi, psi1, psi2, singular_points, SingularPointTable};
pub use error::{MeyerError, Result};
pub use oracle::{integrate, phi_oracle, psi_oracle, QuadratureConfig};
pub use signal::{ComplexSpectrumGrid, Phase, SampledSignal};
pub use spectral::{nu, scale_spectrum, wavelet_spectrum, wavelet_spectrum_magnitude, ComplexAmp};
pub use verify::{run_verification, Check, VerificationReport, VerifyConfig};

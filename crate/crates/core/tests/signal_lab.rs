use meyer::closed_form::{phi, psi};
use meyer::export::DecomposeConfig;
use meyer::signal::{
    decompose_quadrature, dft, envelope, hilbert, lowpass, reconstruct_quadrature, sample,
    scale_from_wavelet, DEFAULT_CUTOFF,
};
use meyer::MeyerError;

fn default_wavelet() -> meyer::SampledSignal {
    DecomposeConfig::default().wavelet().unwrap()
}

#[test]
fn quadrature_closure_on_default_grid() {
    let wavelet = default_wavelet();
    assert_eq!(wavelet.len(), 2049);
    let (s_c, s_s) = decompose_quadrature(&wavelet, DEFAULT_CUTOFF).unwrap();
    let err = reconstruct_quadrature(&s_c, &s_s)
        .unwrap()
        .sub(&wavelet)
        .unwrap();
    assert!(err.max_abs_in(wavelet.interior()) <= 1e-3);
}

#[test]
fn baseband_components_are_band_limited() {
    let (s_c, s_s) = decompose_quadrature(&default_wavelet(), DEFAULT_CUTOFF).unwrap();
    for s in [&s_c, &s_s] {
        let g = dft(s);
        let peak = g.coefficients.iter().map(|c| c.norm()).fold(0.0, f64::max);
        for (c, w) in g.coefficients.iter().zip(&g.bin_frequencies) {
            if w.abs() > DEFAULT_CUTOFF {
                assert!(c.norm() <= 1e-9 * peak, "leak {} at w={w}", c.norm());
            }
        }
    }
}

#[test]
fn in_phase_component_carries_the_scale_shape() {
    let (s_c, _) = decompose_quadrature(&default_wavelet(), DEFAULT_CUTOFF).unwrap();
    let k = s_c.peak_index();
    assert!(
        (s_c.abscissa(k) - 0.5).abs() < 0.05,
        "peak at {}",
        s_c.abscissa(k)
    );
}

#[test]
fn remodulated_wavelet_is_bounded_by_its_envelope() {
    let wavelet = default_wavelet();
    let remod = scale_from_wavelet(&wavelet).unwrap();
    let env = envelope(&wavelet);
    for (r, e) in remod.samples().iter().zip(env.samples()) {
        assert!(r.abs() <= e + 1e-12);
    }
}

#[test]
fn envelope_bounds_the_wavelet_and_its_hilbert_transform() {
    let wavelet = default_wavelet();
    let h = hilbert(&wavelet);
    let env = envelope(&wavelet);
    for k in 0..wavelet.len() {
        let e = env.samples()[k];
        assert!(wavelet.samples()[k].abs() <= e + 1e-12);
        assert!(h.samples()[k].abs() <= e + 1e-12);
    }
}

#[test]
fn lowpass_leaves_the_scale_function_alone() {
    // Φ vanishes above 4π/3, so a 2π brick wall is transparent up to aliasing
    // of the truncated tails
    let s = sample(phi, -16.0, 1.0 / 64.0, 2049).unwrap();
    let filtered = lowpass(&s, DEFAULT_CUTOFF).unwrap();
    assert!(filtered.sub(&s).unwrap().max_abs_in(s.interior()) < 1e-3);
}

#[test]
fn coarse_grid_is_rejected() {
    let coarse = sample(psi, -16.0, 0.5, 65).unwrap();
    assert!(matches!(
        decompose_quadrature(&coarse, DEFAULT_CUTOFF),
        Err(MeyerError::GridTooCoarse { .. })
    ));
    let cfg = DecomposeConfig {
        dt: 0.5,
        ..DecomposeConfig::default()
    };
    assert!(matches!(
        meyer::export::decomposition_table(&cfg),
        Err(MeyerError::GridTooCoarse { .. })
    ));
}

#[test]
fn mismatched_grids_are_rejected() {
    let a = sample(psi, -16.0, 1.0 / 64.0, 2049).unwrap();
    let b = sample(psi, -16.0, 1.0 / 32.0, 1025).unwrap();
    assert!(matches!(
        reconstruct_quadrature(&a, &b),
        Err(MeyerError::GridMismatch)
    ));
}

//! Inverse-Fourier quadrature reference for the Meyer pair.
//!
//! `phi_oracle` and `psi_oracle` integrate the spectral definitions from
//! [`crate::spectral`] directly and never touch the closed forms, so they can
//! serve as ground truth for [`crate::closed_form`].
//!
//! Integration uses composite Gauss–Legendre panels. Starting from an initial
//! panel count the number of panels is doubled until two successive levels
//! agree within the requested absolute tolerance. The integration ranges are
//! split at every branch point of the spectra so each panel sees a smooth
//! integrand.

use std::f64::consts::PI;

use crate::error::{MeyerError, Result};
use crate::spectral::{scale_spectrum, BAND_HIGH, BAND_LOW, BAND_MID};

/// Smallest accepted absolute tolerance.
pub const MIN_TOLERANCE: f64 = 1e-14;
/// Largest accepted number of panel doublings.
pub const MAX_DOUBLINGS: u32 = 30;

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tolerance: f64,
    pub max_panel_doublings: u32,
    pub panel_nodes: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tolerance: 1e-10,
            max_panel_doublings: 20,
            panel_nodes: 12,
        }
    }
}

impl QuadratureConfig {
    pub fn new(abs_tolerance: f64, max_panel_doublings: u32, panel_nodes: usize) -> Result<Self> {
        let cfg = Self {
            abs_tolerance,
            max_panel_doublings,
            panel_nodes,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_tolerance(abs_tolerance: f64) -> Result<Self> {
        Self::new(
            abs_tolerance,
            Self::default().max_panel_doublings,
            Self::default().panel_nodes,
        )
    }

    pub fn validate(&self) -> Result<()> {
        if !self.abs_tolerance.is_finite() || self.abs_tolerance < MIN_TOLERANCE {
            return Err(MeyerError::InvalidConfig(format!(
                "abs_tolerance {} must be finite and at least {MIN_TOLERANCE:e}",
                self.abs_tolerance
            )));
        }
        if self.max_panel_doublings > MAX_DOUBLINGS {
            return Err(MeyerError::InvalidConfig(format!(
                "max_panel_doublings {} exceeds {MAX_DOUBLINGS}",
                self.max_panel_doublings
            )));
        }
        if self.panel_nodes == 0 {
            return Err(MeyerError::InvalidConfig(
                "panel_nodes must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            // Chebyshev-like initial guess, then Newton on P_n.
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Composite rule with `panels` equal panels on `[a, b]`.
    pub fn composite<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64, panels: usize) -> f64 {
        let width = (b - a) / panels as f64;
        let half = 0.5 * width;
        (0..panels)
            .map(|p| {
                let mid = a + (p as f64 + 0.5) * width;
                self.nodes
                    .iter()
                    .zip(&self.weights)
                    .map(|(x, w)| w * f(mid + half * x))
                    .sum::<f64>()
                    * half
            })
            .sum()
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let p = if n == 0 { 1.0 } else { p1 };
    let dp = n as f64 * (x * p - p0) / (x * x - 1.0);
    (p, dp)
}

/// `∫_a^b f` by panel doubling from a single panel.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<f64> {
    integrate_from(f, a, b, cfg, 1)
}

/// `∫_a^b f` by panel doubling starting from `initial_panels` panels.
pub fn integrate_from<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
    initial_panels: usize,
) -> Result<f64> {
    cfg.validate()?;
    if !(a.is_finite() && b.is_finite()) || a > b {
        return Err(MeyerError::InvalidInterval { a, b });
    }
    if a == b {
        return Ok(0.0);
    }
    let rule = GaussLegendre::new(cfg.panel_nodes);
    let mut panels = initial_panels.max(1);
    let mut previous = rule.composite(&f, a, b, panels);
    if !previous.is_finite() {
        return Err(MeyerError::NonFinite {
            what: "integrand",
            value: previous,
        });
    }
    let mut error = f64::INFINITY;
    for _ in 0..cfg.max_panel_doublings {
        panels *= 2;
        let current = rule.composite(&f, a, b, panels);
        error = (current - previous).abs();
        previous = current;
        if error < cfg.abs_tolerance {
            return Ok(current);
        }
    }
    Err(MeyerError::NoConvergence {
        estimate: previous,
        error,
        panels,
    })
}

fn panels_for(t: f64) -> usize {
    (t.abs().ceil() as usize).max(1)
}

fn integrate_pieces<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    scale: f64,
    initial_panels: usize,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let pieces = breaks.len() - 1;
    let mut piece_cfg = cfg.clone();
    piece_cfg.abs_tolerance = (cfg.abs_tolerance / (scale * pieces as f64)).max(MIN_TOLERANCE);
    let mut total = 0.0;
    for w in breaks.windows(2) {
        total += integrate_from(&f, w[0], w[1], &piece_cfg, initial_panels)?;
    }
    Ok(scale * total)
}

/// `φ(t) = (2/√(2π)) ∫₀^{4π/3} Φ(w) cos(wt) dw`.
pub fn phi_oracle(t: f64, cfg: &QuadratureConfig) -> Result<f64> {
    phi_oracle_refined(t, cfg, 1)
}

/// [`phi_oracle`] starting from `refinement` times the usual panel count.
pub fn phi_oracle_refined(t: f64, cfg: &QuadratureConfig, refinement: usize) -> Result<f64> {
    if !t.is_finite() {
        return Err(MeyerError::NonFinite {
            what: "time",
            value: t,
        });
    }
    let scale = 2.0 / (2.0 * PI).sqrt();
    integrate_pieces(
        |w| scale_spectrum(w) * (w * t).cos(),
        &[0.0, BAND_LOW, BAND_MID],
        scale,
        panels_for(t) * refinement.max(1),
        cfg,
    )
}

/// Integrand of the wavelet oracle without the factor 2: `Φ(w/2)·Φ(w − 2π)`.
pub fn psi_oracle_kernel(w: f64) -> f64 {
    scale_spectrum(0.5 * w) * scale_spectrum(w - 2.0 * PI)
}

/// `ψ(t) = 2 ∫_{2π/3}^{8π/3} Φ(w/2)·Φ(w − 2π)·cos(w(t − 1/2)) dw`.
pub fn psi_oracle(t: f64, cfg: &QuadratureConfig) -> Result<f64> {
    psi_oracle_refined(t, cfg, 1)
}

/// [`psi_oracle`] starting from `refinement` times the usual panel count.
pub fn psi_oracle_refined(t: f64, cfg: &QuadratureConfig, refinement: usize) -> Result<f64> {
    if !t.is_finite() {
        return Err(MeyerError::NonFinite {
            what: "time",
            value: t,
        });
    }
    let x = t - 0.5;
    integrate_pieces(
        |w| psi_oracle_kernel(w) * (w * x).cos(),
        &[BAND_LOW, BAND_MID, 2.0 * PI, BAND_HIGH],
        2.0,
        panels_for(t) * refinement.max(1),
        cfg,
    )
}

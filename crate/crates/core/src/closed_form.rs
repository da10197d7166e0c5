//! Closed-form time-domain Meyer scaling function and wavelet.
//!
//! All three expressions share one shape,
//!
//! ```text
//!          a·x·cos(α x) + b·sin(β x)
//! f(x) = ----------------------------,    x = t − c,
//!               p·x + q·x³
//! ```
//!
//! whose denominator vanishes at `x = 0` and `x = ±√(−p/q)`. Every root is a
//! removable singularity: the numerator vanishes there too. Within
//! [`GUARD_RADIUS`] of a root the ratio is evaluated from Taylor expansions
//! of numerator and denominator about the root, which removes the 0/0
//! cancellation entirely.
//!
//! Limits at the roots, from `N'(r)/D'(r)`:
//!
//! | function | root (in t)   | limit                 |
//! |----------|---------------|-----------------------|
//! | `phi`    | 0             | 2/3 + 4/(3π)          |
//! | `phi`    | ±3/4          | 2/(3π)                |
//! | `psi1`   | 1/2           | 4/(3π) − 4/3          |
//! | `psi1`   | 1/2 ± 3/4     | −1/3                  |
//! | `psi2`   | 1/2           | 8/(3π) + 4/3          |
//! | `psi2`   | 1/2 ± 3/8     | 4/(3π)                |
//!
//! so `psi(1/2) = 4/π`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{MeyerError, Result};

/// Distance from a denominator root inside which the Taylor form is used.
pub const GUARD_RADIUS: f64 = 1e-4;

/// Order in `h` to which the ratio is expanded near a root.
pub const TAYLOR_ORDER: usize = 4;

/// Beyond this |t| the rational form is evaluated directly.
pub const DIRECT_EVAL_THRESHOLD: f64 = 1e8;

/// Dimensionless time abscissa.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Time(f64);

impl Time {
    pub fn new(t: f64) -> Result<Self> {
        if t.is_finite() {
            Ok(Self(t))
        } else {
            Err(MeyerError::NonFinite {
                what: "time",
                value: t,
            })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// `(a·x·cos(αx) + b·sin(βx)) / (p·x + q·x³)` with `x = t − center`.
#[derive(Debug, Clone, Copy)]
struct RationalTrig {
    center: f64,
    cos_coef: f64,
    cos_freq: f64,
    sin_coef: f64,
    sin_freq: f64,
    linear: f64,
    cubic: f64,
    /// Positive non-zero root of the denominator.
    outer_root: f64,
}

const PHI: RationalTrig = RationalTrig {
    center: 0.0,
    cos_coef: 4.0 / 3.0,
    cos_freq: 4.0 * PI / 3.0,
    sin_coef: 1.0,
    sin_freq: 2.0 * PI / 3.0,
    linear: PI,
    cubic: -16.0 * PI / 9.0,
    outer_root: 0.75,
};

const PSI1: RationalTrig = RationalTrig {
    center: 0.5,
    cos_coef: 4.0 / (3.0 * PI),
    cos_freq: 2.0 * PI / 3.0,
    sin_coef: -1.0 / PI,
    sin_freq: 4.0 * PI / 3.0,
    linear: 1.0,
    cubic: -16.0 / 9.0,
    outer_root: 0.75,
};

const PSI2: RationalTrig = RationalTrig {
    center: 0.5,
    cos_coef: 8.0 / (3.0 * PI),
    cos_freq: 8.0 * PI / 3.0,
    sin_coef: 1.0 / PI,
    sin_freq: 4.0 * PI / 3.0,
    linear: 1.0,
    cubic: -64.0 / 9.0,
    outer_root: 0.375,
};

/// `cos(θ + kπ/2)` from `(sin θ, cos θ)` without re-evaluating the angle.
fn cos_quarter_turns(sin: f64, cos: f64, k: usize) -> f64 {
    match k % 4 {
        0 => cos,
        1 => -sin,
        2 => -cos,
        _ => sin,
    }
}

impl RationalTrig {
    fn roots(&self) -> [f64; 3] {
        [-self.outer_root, 0.0, self.outer_root]
    }

    fn numerator(&self, x: f64) -> f64 {
        self.cos_coef * x * (self.cos_freq * x).cos() + self.sin_coef * (self.sin_freq * x).sin()
    }

    fn denominator(&self, x: f64) -> f64 {
        x * (self.linear + self.cubic * x * x)
    }

    fn direct(&self, x: f64) -> f64 {
        self.numerator(x) / self.denominator(x)
    }

    /// k-th derivative of the numerator at `x`.
    fn numerator_derivative(&self, x: f64, k: usize) -> f64 {
        let (sa, ca) = (self.cos_freq * x).sin_cos();
        let (sb, cb) = (self.sin_freq * x).sin_cos();
        let alpha = self.cos_freq;
        let beta = self.sin_freq;
        // d^k[x cos(αx)] = x α^k cos(αx + kπ/2) + k α^(k-1) cos(αx + (k-1)π/2)
        let mut xcos = x * alpha.powi(k as i32) * cos_quarter_turns(sa, ca, k);
        if k > 0 {
            xcos += k as f64 * alpha.powi(k as i32 - 1) * cos_quarter_turns(sa, ca, k - 1);
        }
        // d^k sin(βx) = β^k sin(βx + kπ/2) = β^k cos(βx + (k-1)π/2)
        let sin_term = beta.powi(k as i32) * cos_quarter_turns(sb, cb, k + 3);
        self.cos_coef * xcos + self.sin_coef * sin_term
    }

    /// Ratio near a root `r` at offset `h`, using the numerator expanded to
    /// `h^(TAYLOR_ORDER + 1)` and the exact cubic expansion of the denominator.
    fn taylor(&self, r: f64, h: f64) -> f64 {
        let mut num = 0.0;
        let mut factorial = 1.0;
        let mut hk = 1.0;
        for k in 1..=TAYLOR_ORDER + 1 {
            factorial *= k as f64;
            num += self.numerator_derivative(r, k) / factorial * hk;
            hk *= h;
        }
        let d1 = self.linear + 3.0 * self.cubic * r * r;
        let d2 = 3.0 * self.cubic * r;
        let d3 = self.cubic;
        num / (d1 + h * (d2 + h * d3))
    }

    fn limit_at(&self, r: f64) -> f64 {
        self.taylor(r, 0.0)
    }

    fn eval(&self, t: f64) -> f64 {
        let x = t - self.center;
        if x.abs() > DIRECT_EVAL_THRESHOLD {
            return self.direct(x);
        }
        for r in self.roots() {
            let h = x - r;
            if h.abs() < GUARD_RADIUS {
                return self.taylor(r, h);
            }
        }
        self.direct(x)
    }
}

/// Meyer scaling function.
pub fn phi(t: f64) -> f64 {
    if t == 0.0 {
        2.0 / 3.0 + 4.0 / (3.0 * PI)
    } else {
        PHI.eval(t)
    }
}

/// Low-band part of the Meyer wavelet.
pub fn psi1(t: f64) -> f64 {
    PSI1.eval(t)
}

/// High-band part of the Meyer wavelet.
pub fn psi2(t: f64) -> f64 {
    PSI2.eval(t)
}

/// Meyer wavelet, `psi1 + psi2`. Symmetric about `t = 1/2`.
pub fn psi(t: f64) -> f64 {
    psi1(t) + psi2(t)
}

/// Dilated and translated wavelet `2^{j/2} ψ(2^j t − k)`.
pub fn psi_jk(j: i32, k: i32, t: f64) -> f64 {
    let scale = 2f64.powi(j);
    scale.sqrt() * psi(scale * t - k as f64)
}

/// Denominator roots of the three closed forms with the limit at each.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingularPointTable {
    pub phi_singularities: Vec<f64>,
    pub psi1_singularities: Vec<f64>,
    pub psi2_singularities: Vec<f64>,
    pub phi_limits: Vec<f64>,
    pub psi1_limits: Vec<f64>,
    pub psi2_limits: Vec<f64>,
}

impl SingularPointTable {
    /// All nine points in ascending order within each function.
    pub fn all_points(&self) -> Vec<f64> {
        self.phi_singularities
            .iter()
            .chain(&self.psi1_singularities)
            .chain(&self.psi2_singularities)
            .copied()
            .collect()
    }
}

pub fn singular_points() -> SingularPointTable {
    let table = |f: &RationalTrig| -> (Vec<f64>, Vec<f64>) {
        f.roots()
            .iter()
            .map(|&r| (r + f.center, f.limit_at(r)))
            .unzip()
    };
    let (phi_singularities, mut phi_limits) = table(&PHI);
    phi_limits[1] = phi(0.0);
    let (psi1_singularities, psi1_limits) = table(&PSI1);
    let (psi2_singularities, psi2_limits) = table(&PSI2);
    SingularPointTable {
        phi_singularities,
        psi1_singularities,
        psi2_singularities,
        phi_limits,
        psi1_limits,
        psi2_limits,
    }
}

//! The sawtooth kernel P₁(x) = {x} − 1/2, its Fourier partial sums, and the
//! k-refinement step functions g_k.
//!
//! P₁ is the first periodized Bernoulli polynomial; it has the Fourier series
//! −Σ_{j≥1} sin(2πjx)/(πj). The step functions
//!
//! g_k(x) = f(x) − f(kx)/k,   f(x) = −P₁(x),   k ≥ 2,
//!
//! are piecewise constant on the k-adic subdivision of the unit period and
//! telescope back to f: Σ_{n≥0} g_k(kⁿx)/kⁿ = f(x). They turn P₁-weighted
//! integrals into the double series driving the `addison` module.

use crate::{Error, Result};

/// Fractional part {x} ∈ [0, 1). Rejects non-finite input.
pub fn frac(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("frac: non-finite input {x}")));
    }
    let r = x - x.floor();
    // x - floor(x) can round up to exactly 1.0 for tiny negative x.
    Ok(if r >= 1.0 { 0.0 } else { r })
}

/// P₁(x) = {x} − 1/2. At integers this returns −1/2 (the frac-based value).
pub fn p1(x: f64) -> Result<f64> {
    Ok(frac(x)? - 0.5)
}

/// g_k(x) = f(x) − f(kx)/k with f = −P₁.
///
/// On the subinterval [(j−1)/k, j/k) of the unit period the value is
/// (1/2)(1 − 1/k) − (j−1)/k; consecutive subintervals differ by exactly 1/k.
/// Breakpoints take the left-closed value, which the frac-based formula
/// produces automatically.
pub fn gk(k: u32, x: f64) -> Result<f64> {
    if k < 2 {
        return Err(Error::Domain(format!("gk: refinement base k = {k} < 2")));
    }
    let f = |t: f64| -> Result<f64> { Ok(0.5 - frac(t)?) };
    let kf = f64::from(k);
    Ok(f(x)? - f(kf * x)? / kf)
}

/// Partial Fourier sum −Σ_{j=1}^{J} sin(2πjx)/(πj); converges to p1(x) at
/// every non-integer x.
pub fn p1_fourier(x: f64, terms: u64) -> Result<f64> {
    if terms == 0 {
        return Err(Error::Domain("p1_fourier: need at least one term".into()));
    }
    if !x.is_finite() {
        return Err(Error::Domain(format!("p1_fourier: non-finite input {x}")));
    }
    let mut sum = 0.0;
    let mut comp = 0.0; // Kahan compensation
    let w = 2.0 * std::f64::consts::PI * x;
    for j in 1..=terms {
        let jf = j as f64;
        let t = -(w * jf).sin() / (std::f64::consts::PI * jf);
        let y = t - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    Ok(sum)
}

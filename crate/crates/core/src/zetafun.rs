//! The zeta backbone: Riemann and Hurwitz zeta, their s-derivatives,
//! Stieltjes constants, digamma, Bernoulli polynomials, and ζ′ at negative
//! integers.
//!
//! Everything here reduces to P₁-weighted tail integrals:
//!
//! ζ(s)   = 1/(s−1) + 1/2 − s ∫₁^∞ x^{−s−1} P₁(x) dx
//! ζ(s,a) = a^{−s}/2 + a^{1−s}/(s−1) − s ∫₀^∞ (x+a)^{−s−1} P₁(x) dx
//!
//! valid for s > −1, s ≠ 1, with log-power kernels appearing under
//! s-differentiation. The integrals are evaluated by the exact cell +
//! Euler–Maclaurin path in `quad::exact` (the integrand families are closed
//! under differentiation).

use crate::quad::exact::{integrate_p1_exact, ExpPolyLog};
use crate::quad::QuadSpec;
use crate::{Error, Eval, Result, EULER_GAMMA};
use std::sync::OnceLock;

fn spec() -> QuadSpec {
    QuadSpec::default().with_tol(1e-12)
}

/// ζ(n) for integer n ≥ 2, memoized (direct series plus integral tail).
pub(crate) fn zeta_int(n: usize) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let tab = TABLE.get_or_init(|| {
        let mut v = vec![0.0; 321];
        for (n, slot) in v.iter_mut().enumerate().skip(2) {
            let nf = n as f64;
            let cap = if n < 8 { 400_000 } else { 200 };
            let mut s = 0.0;
            for k in (1..=cap).rev() {
                s += (k as f64).powf(-nf);
            }
            // Euler–Maclaurin tail at K: K^{1-n}/(n-1) + K^{-n}/2 + n K^{-n-1}/12
            let kf = cap as f64 + 1.0;
            s += kf.powf(1.0 - nf) / (nf - 1.0) + kf.powf(-nf) / 2.0 + nf * kf.powf(-nf - 1.0) / 12.0;
            *slot = s;
        }
        v
    });
    tab[n]
}

/// ∫₁^∞ x^{−s−1} P₁(x) dx as the closed combination h(s) = −ζ(s)/s + (s+1)/(2s(s−1)),
/// with the removable point h(1) = 1/2 − γ.
pub fn h_moment(s: f64) -> Result<Eval> {
    if s == 0.0 {
        return Err(Error::Domain("h_moment: s = 0".into()));
    }
    if s == 1.0 {
        return Ok(Eval::new(0.5 - EULER_GAMMA, 1e-15, 0));
    }
    let z = zeta(s)?;
    Ok(Eval::new(-z.value / s + (s + 1.0) / (2.0 * s * (s - 1.0)), z.err_est / s.abs() + 1e-16, z.work))
}

/// Riemann ζ(s) for s > −1, s ≠ 1.
pub fn zeta(s: f64) -> Result<Eval> {
    if !s.is_finite() {
        return Err(Error::Domain(format!("zeta: non-finite s = {s}")));
    }
    if s == 1.0 {
        return Err(Error::Pole { s });
    }
    if s <= -1.0 {
        return Err(Error::Domain(format!("zeta: representation requires s > -1, got {s}")));
    }
    if s == 0.0 {
        return Ok(Eval::exact(-0.5));
    }
    let g = ExpPolyLog::power_log(&[(1.0, s + 1.0, 0)]);
    let i = integrate_p1_exact(&g, 1.0, 0.0, &spec())?;
    Ok(Eval::new(1.0 / (s - 1.0) + 0.5 - s * i.value, s.abs() * i.err_est + 1e-16, i.work))
}

/// Hurwitz ζ(s, a) for s > −1, s ≠ 1, a > 0.
pub fn hurwitz(s: f64, a: f64) -> Result<Eval> {
    if a <= 0.0 {
        return Err(Error::Domain(format!("hurwitz: shift a = {a} must be positive")));
    }
    if s == 1.0 {
        return Err(Error::Pole { s });
    }
    if s <= -1.0 {
        return Err(Error::Domain(format!("hurwitz: representation requires s > -1, got {s}")));
    }
    let explicit = 0.5 * a.powf(-s) + a.powf(1.0 - s) / (s - 1.0);
    if s == 0.0 {
        return Ok(Eval::new(explicit, 1e-16 * explicit.abs(), 0));
    }
    let g = ExpPolyLog::power_log(&[(1.0, s + 1.0, 0)]);
    let i = integrate_p1_exact(&g, a, a, &spec())?;
    Ok(Eval::new(explicit - s * i.value, s.abs() * i.err_est + 1e-16 * explicit.abs(), i.work))
}

/// n-th s-derivative ζ^{(n)}(s) for s > 1:
/// (−1)ⁿ [ n!/(s−1)^{n+1} + n ∫₁^∞ P₁ x^{−s−1} ln^{n−1}x dx − s ∫₁^∞ P₁ x^{−s−1} lnⁿx dx ].
pub fn zeta_nderiv(n: u32, s: f64) -> Result<Eval> {
    if n < 1 {
        return Err(Error::Domain("zeta_nderiv: order must be >= 1".into()));
    }
    if s == 1.0 {
        return Err(Error::Pole { s });
    }
    if s <= 1.0 {
        return Err(Error::Domain(format!("zeta_nderiv: representation requires s > 1, got {s}")));
    }
    let nf = f64::from(n);
    let g1 = ExpPolyLog::power_log(&[(1.0, s + 1.0, n - 1)]);
    let g2 = ExpPolyLog::power_log(&[(1.0, s + 1.0, n)]);
    let i1 = integrate_p1_exact(&g1, 1.0, 0.0, &spec())?;
    let i2 = integrate_p1_exact(&g2, 1.0, 0.0, &spec())?;
    let mut fact = 1.0;
    for k in 2..=n {
        fact *= f64::from(k);
    }
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let value = sign * (fact / (s - 1.0).powi(n as i32 + 1) + nf * i1.value - s * i2.value);
    Ok(Eval::new(value, nf * i1.err_est + s.abs() * i2.err_est + 1e-16, i1.work + i2.work))
}

/// ∂ζ(s,a)/∂s for s > 0, s ≠ 1, a > 0:
/// −ln a/(2a^s) − a^{1−s}/(s−1)² − a^{1−s}ln a/(s−1)
/// − ∫₀^∞ P₁ (x+a)^{−s−1} dx + s ∫₀^∞ P₁ ln(x+a) (x+a)^{−s−1} dx.
pub fn hurwitz_sderiv(s: f64, a: f64) -> Result<Eval> {
    if a <= 0.0 {
        return Err(Error::Domain(format!("hurwitz_sderiv: shift a = {a} must be positive")));
    }
    if s == 1.0 {
        return Err(Error::Pole { s });
    }
    if s <= 0.0 {
        return Err(Error::Domain(format!("hurwitz_sderiv: representation requires s > 0, got {s}")));
    }
    let la = a.ln();
    let explicit = -la / (2.0 * a.powf(s))
        - a.powf(1.0 - s) / ((s - 1.0) * (s - 1.0))
        - a.powf(1.0 - s) * la / (s - 1.0);
    let g1 = ExpPolyLog::power_log(&[(1.0, s + 1.0, 0)]);
    let g2 = ExpPolyLog::power_log(&[(1.0, s + 1.0, 1)]);
    let i1 = integrate_p1_exact(&g1, a, a, &spec())?;
    let i2 = integrate_p1_exact(&g2, a, a, &spec())?;
    Ok(Eval::new(
        explicit - i1.value + s * i2.value,
        i1.err_est + s.abs() * i2.err_est + 1e-15 * explicit.abs(),
        i1.work + i2.work,
    ))
}

/// Digamma ψ(a) for a > 0, through
/// ψ(w) = ln w − 1/(2w) + ∫₀^∞ P₁(x) (x+w)^{−2} dx (w ≥ 1),
/// with one backward recurrence ψ(a) = ψ(a+1) − 1/a for a ∈ (0, 1).
pub fn digamma(a: f64) -> Result<Eval> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("digamma: argument a = {a} must be positive")));
    }
    let (w, correction) = if a < 1.0 { (a + 1.0, -1.0 / a) } else { (a, 0.0) };
    let g = ExpPolyLog::power_log(&[(1.0, 2.0, 0)]);
    let i = integrate_p1_exact(&g, w, w, &spec())?;
    Ok(Eval::new(w.ln() - 0.5 / w + i.value + correction, i.err_est + 2e-16 * (1.0 + w.ln().abs()), i.work))
}

/// Stieltjes constant γ_n(a), a ∈ (0, 2].
///
/// n = 0 delegates to −ψ(a). For n ≥ 1,
/// γ_n(a) = lnⁿa/a + ∫₁^∞ P₁(x−a) ln^{n−1}x x^{−2} (n − ln x) dx.
/// Capped at n ≤ 20: beyond that the oscillatory lnⁿx cancellation exceeds
/// the double-precision budget.
pub fn stieltjes(n: u32, a: f64) -> Result<Eval> {
    if !(a > 0.0 && a <= 2.0) {
        return Err(Error::Domain(format!("stieltjes: shift a = {a} outside (0, 2]")));
    }
    if n == 0 {
        return Ok(digamma(a)?.scale(-1.0));
    }
    if n > 20 {
        return Err(Error::Precision {
            context: format!("stieltjes: order n = {n} beyond the double-precision cap of 20"),
            partial: f64::NAN,
            err_est: f64::INFINITY,
        });
    }
    let nf = f64::from(n);
    // ln^{n-1}x (n - ln x)/x^2 = n x^{-2} ln^{n-1}x - x^{-2} ln^n x
    let g = ExpPolyLog::power_log(&[(nf, 2.0, n - 1), (-1.0, 2.0, n)]);
    let i = integrate_p1_exact(&g, 1.0, a, &spec())?;
    // double-precision noise from cancellation across the integrand peak
    let peak = (nf / 2.0).exp().min(1e12);
    let noise = 1e-16 * (nf / 2.0 / std::f64::consts::E).max(1.0).powf(nf) / peak.max(1.0).sqrt().max(1.0);
    let le = a.ln();
    Ok(Eval::new(le.powi(n as i32) / a + i.value, i.err_est + noise.abs(), i.work))
}

/// γ_1(a) … γ_nmax(a) in one call (shared-shift convenience for the
/// Appendix-B sums, which consume the whole vector per q).
pub fn stieltjes_batch(nmax: u32, a: f64) -> Result<Vec<Eval>> {
    (1..=nmax).map(|n| stieltjes(n, a)).collect()
}

/// Bernoulli number B_k (B₁ = −1/2; odd orders ≥ 3 are exactly zero).
pub fn bernoulli_number(k: u32) -> f64 {
    if k >= 3 && k % 2 == 1 {
        return 0.0;
    }
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let tab = TABLE.get_or_init(|| {
        let kmax = 64usize;
        let mut b = vec![0.0f64; kmax + 1];
        b[0] = 1.0;
        for m in 1..=kmax {
            // B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j
            let mut acc = 0.0;
            let mut binom = 1.0; // C(m+1, 0)
            for (j, bj) in b.iter().enumerate().take(m) {
                acc += binom * bj;
                binom *= (m as f64 + 1.0 - j as f64) / (j as f64 + 1.0);
            }
            b[m] = -acc / (m as f64 + 1.0);
        }
        b
    });
    tab[k as usize]
}

/// Bernoulli polynomial B_k(q) by the binomial expansion over Bernoulli
/// numbers (k ≤ 40 keeps the convolution benign in doubles).
pub fn bernoulli_poly(k: u32, q: f64) -> f64 {
    let mut sum = 0.0;
    let mut binom = 1.0; // C(k, 0)
    for j in 0..=k {
        // term C(k, j) B_{k-j} q^j
        sum += binom * bernoulli_number(k - j) * q.powi(j as i32);
        binom *= (f64::from(k) - f64::from(j)) / (f64::from(j) + 1.0);
    }
    sum
}

/// ζ′(1−k) for integer k ≥ 2 via the derivative of the functional equation
/// ζ(1−s) = 2 (2π)^{−s} cos(πs/2) Γ(s) ζ(s):
///
/// ζ′(1−s) = 2(2π)^{−s} { ln(2π) c Γζ + (π/2) σ Γζ − c (Γ′ζ + Γζ′) },
/// c = cos(πs/2), σ = sin(πs/2) (exact integers at integer s).
pub fn zeta_prime_neg(k: u32) -> Result<Eval> {
    if k < 2 {
        return Err(Error::Domain("zeta_prime_neg: need k >= 2".into()));
    }
    let s = f64::from(k);
    let (c, sg) = match k % 4 {
        0 => (1.0, 0.0),
        1 => (0.0, 1.0),
        2 => (-1.0, 0.0),
        _ => (0.0, -1.0),
    };
    let zk = zeta_int(k as usize);
    let mut gamma_fact = 1.0; // Gamma(k) = (k-1)!
    let mut harmonic = 0.0; // psi(k) = -gamma + H_{k-1}
    for j in 1..k {
        gamma_fact *= f64::from(j);
        harmonic += 1.0 / f64::from(j);
    }
    let psi_k = -EULER_GAMMA + harmonic;
    let two_pi = 2.0 * std::f64::consts::PI;
    let pref = 2.0 * two_pi.powf(-s);
    let (zp, zp_err, work) = if c != 0.0 {
        let d = zeta_nderiv(1, s)?;
        (d.value, d.err_est, d.work)
    } else {
        (0.0, 0.0, 0)
    };
    let value = pref
        * (two_pi.ln() * c * gamma_fact * zk + 0.5 * std::f64::consts::PI * sg * gamma_fact * zk
            - c * (gamma_fact * psi_k * zk + gamma_fact * zp));
    Ok(Eval::new(value, pref * gamma_fact * (zp_err + 1e-14 * zk), work))
}

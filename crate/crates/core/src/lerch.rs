//! Lerch transcendent Φ(z, s, a), polylogarithm Li_s(z), their s-derivatives,
//! polylog moment integrals, and hypergeometric identity checks.
//!
//! The core representation (valid for a > 0; any real s when |z| < 1, s > 1
//! when z = 1) is
//!
//! Φ(z,s,a) = a^{−s} + z/(2(a+1)^s) + ∫₁^∞ z^x (x+a)^{−s} dx
//!          + ∫₁^∞ [z^x ln z (x+a)^{−s} − s z^x (x+a)^{−s−1}] P₁(x) dx.
//!
//! z^x for non-integer x is multivalued when z < 0, so negative z is routed
//! through the even/odd split
//! Φ(z,s,a) = 2^{−s} Φ(z²,s,a/2) + z 2^{−s} Φ(z²,s,(a+1)/2),
//! which only needs the positive-z representation.

use crate::quad::exact::{integrate_p1_exact, ExpPolyLog};
use crate::quad::{integrate_semi_inf, QuadSpec};
use crate::zetafun::{digamma, h_moment, zeta_int};
use crate::{Error, Eval, Result, EULER_GAMMA};
use num_complex::Complex64;

fn spec() -> QuadSpec {
    QuadSpec::default().with_tol(1e-12)
}

fn check_args(z: f64, s: f64, a: f64) -> Result<()> {
    if !(z.is_finite() && s.is_finite() && a.is_finite()) {
        return Err(Error::Domain("lerch: non-finite argument".into()));
    }
    if a <= 0.0 {
        return Err(Error::Domain(format!("lerch: shift a = {a} must be positive")));
    }
    if z.abs() > 1.0 {
        return Err(Error::Domain(format!("lerch: |z| = {} > 1 outside the representation region", z.abs())));
    }
    if z.abs() == 1.0 && s <= 1.0 {
        return Err(Error::Domain(format!("lerch: |z| = 1 requires s > 1, got s = {s}")));
    }
    Ok(())
}

/// Φ(z, s, a) for z ∈ (0, 1] by the integral representation.
fn lerch_phi_positive(z: f64, s: f64, a: f64) -> Result<Eval> {
    let explicit = a.powf(-s) + 0.5 * z * (a + 1.0).powf(-s);
    if z == 1.0 {
        // first integral in closed form; P1 part is a pure power
        let first = (1.0 + a).powf(1.0 - s) / (s - 1.0);
        let g = ExpPolyLog::power_log(&[(-s, s + 1.0, 0)]);
        let i = integrate_p1_exact(&g, 1.0 + a, a, &spec())?;
        return Ok(Eval::new(explicit + first + i.value, i.err_est + 1e-15 * explicit.abs(), i.work));
    }
    let mu = z.ln();
    let first = integrate_semi_inf(|x| (mu * x).exp() * (x + a).powf(-s), 1.0, &spec())?;
    // substituted u = x + a: z^{-a} e^{mu u} [ln z · u^{-s} − s u^{-s-1}]
    let za = (-a * mu).exp();
    let mut g = ExpPolyLog::new(Complex64::new(mu, 0.0));
    g.push(Complex64::new(za * mu, 0.0), s, 0);
    g.push(Complex64::new(-za * s, 0.0), s + 1.0, 0);
    let i = integrate_p1_exact(&g, 1.0 + a, a, &spec())?;
    Ok(Eval::new(
        explicit + first.value + i.value,
        first.err_est + i.err_est + 1e-15 * explicit.abs(),
        first.work + i.work,
    ))
}

/// Lerch transcendent Φ(z, s, a), a > 0, |z| ≤ 1 (s > 1 on the unit circle).
pub fn lerch_phi(z: f64, s: f64, a: f64) -> Result<Eval> {
    check_args(z, s, a)?;
    if z == 0.0 {
        return Ok(Eval::exact(a.powf(-s)));
    }
    if z > 0.0 {
        return lerch_phi_positive(z, s, a);
    }
    // even/odd split onto z^2 in (0, 1]
    let even = lerch_phi(z * z, s, 0.5 * a)?;
    let odd = lerch_phi(z * z, s, 0.5 * (a + 1.0))?;
    let w = 2f64.powf(-s);
    Ok(Eval::new(
        w * (even.value + z * odd.value),
        w * (even.err_est + odd.err_est * z.abs()),
        even.work + odd.work,
    ))
}

/// Defining-series partial sum Σ_{n=0}^{N} zⁿ (n+a)^{−s}, with a
/// geometric (|z| < 1) or integral (z = 1, s > 1) tail bound in `err_est`.
pub fn lerch_series(z: f64, s: f64, a: f64, terms: u64) -> Result<Eval> {
    check_args(z, s, a)?;
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut zn = 1.0;
    for n in 0..=terms {
        let t = zn * (n as f64 + a).powf(-s);
        let y = t - comp;
        let snew = sum + y;
        comp = (snew - sum) - y;
        sum = snew;
        zn *= z;
    }
    let nf = terms as f64 + 1.0;
    let tail = if z.abs() < 1.0 {
        let first = (z.abs().powf(nf) * (nf + a).powf(-s)).abs();
        let growth = ((nf + 1.0 + a) / (nf + a)).powf((-s).max(0.0));
        let rho = z.abs() * growth;
        if rho >= 1.0 {
            return Err(Error::Truncation {
                context: "lerch_series: tail ratio not yet contracting".into(),
                partial: sum,
                err_est: f64::INFINITY,
                work: terms,
            });
        }
        first / (1.0 - rho)
    } else {
        (nf + a).powf(1.0 - s) / (s - 1.0) + 0.5 * (nf + a).powf(-s)
    };
    Ok(Eval::new(sum, tail.abs() + f64::EPSILON * sum.abs() * nf.sqrt(), terms))
}

/// Polylogarithm Li_s(z) = z Φ(z, s, 1) by its own representation
/// Li_s(z) = z/2 + ∫₁^∞ z^x x^{−s} dx + ∫₁^∞ [z^x x^{−s} ln z − s z^x x^{−s−1}] P₁ dx
/// for z ∈ (0, 1]; negative z goes through the Lerch split.
pub fn polylog(s: f64, z: f64) -> Result<Eval> {
    check_args(z, s, 1.0)?;
    if z == 0.0 {
        return Ok(Eval::exact(0.0));
    }
    if z < 0.0 {
        return Ok(lerch_phi(z, s, 1.0)?.scale(z));
    }
    if z == 1.0 {
        let g = ExpPolyLog::power_log(&[(-s, s + 1.0, 0)]);
        let i = integrate_p1_exact(&g, 1.0, 0.0, &spec())?;
        return Ok(Eval::new(0.5 + 1.0 / (s - 1.0) + i.value, i.err_est, i.work));
    }
    let mu = z.ln();
    let first = integrate_semi_inf(|x| (mu * x).exp() * x.powf(-s), 1.0, &spec())?;
    let mut g = ExpPolyLog::new(Complex64::new(mu, 0.0));
    g.push(Complex64::new(mu, 0.0), s, 0);
    g.push(Complex64::new(-s, 0.0), s + 1.0, 0);
    let i = integrate_p1_exact(&g, 1.0, 0.0, &spec())?;
    Ok(Eval::new(0.5 * z + first.value + i.value, first.err_est + i.err_est, first.work + i.work))
}

/// ∂Φ/∂s(z, s, a) for |z| < 1:
/// −ln a·a^{−s} − (z/2) ln(a+1) (a+1)^{−s} − ∫₁^∞ z^x ln(x+a) (x+a)^{−s} dx
/// − ∫₁^∞ [z^x ln z ln(x+a)(x+a)^{−s} + z^x (x+a)^{−s−1} − s z^x ln(x+a)(x+a)^{−s−1}] P₁ dx.
pub fn lerch_phi_sderiv(z: f64, s: f64, a: f64) -> Result<Eval> {
    check_args(z, s, a)?;
    if z.abs() >= 1.0 {
        return Err(Error::Domain("lerch_phi_sderiv: requires |z| < 1".into()));
    }
    if z == 0.0 {
        return Ok(Eval::exact(-a.ln() * a.powf(-s)));
    }
    if z < 0.0 {
        // differentiate the even/odd split in s
        let w = 2f64.powf(-s);
        let ln2 = std::f64::consts::LN_2;
        let even = lerch_phi(z * z, s, 0.5 * a)?;
        let odd = lerch_phi(z * z, s, 0.5 * (a + 1.0))?;
        let deven = lerch_phi_sderiv(z * z, s, 0.5 * a)?;
        let dodd = lerch_phi_sderiv(z * z, s, 0.5 * (a + 1.0))?;
        let value = -ln2 * w * (even.value + z * odd.value) + w * (deven.value + z * dodd.value);
        let err = w * (ln2 * (even.err_est + odd.err_est) + deven.err_est + dodd.err_est);
        return Ok(Eval::new(value, err, even.work + odd.work + deven.work + dodd.work));
    }
    let la1 = (a + 1.0).ln();
    let explicit = -a.ln() * a.powf(-s) - 0.5 * z * la1 * (a + 1.0).powf(-s);
    let mu = z.ln();
    let first = integrate_semi_inf(|x| (mu * x).exp() * (x + a).ln() * (x + a).powf(-s), 1.0, &spec())?;
    let za = (-a * mu).exp();
    let mut g = ExpPolyLog::new(Complex64::new(mu, 0.0));
    g.push(Complex64::new(za * mu, 0.0), s, 1);
    g.push(Complex64::new(za, 0.0), s + 1.0, 0);
    g.push(Complex64::new(-za * s, 0.0), s + 1.0, 1);
    let i = integrate_p1_exact(&g, 1.0 + a, a, &spec())?;
    Ok(Eval::new(
        explicit - first.value - i.value,
        first.err_est + i.err_est + 1e-15 * explicit.abs(),
        first.work + i.work,
    ))
}

/// Gauss hypergeometric ₂F₁(a, b; c; x) as a truncated power series, |x| < 1.
pub fn hyp2f1(a: f64, b: f64, c: f64, x: f64) -> Result<Eval> {
    if x.abs() >= 1.0 {
        return Err(Error::Domain(format!("hyp2f1: |x| = {} >= 1", x.abs())));
    }
    if c <= 0.0 && c == c.floor() {
        return Err(Error::Domain("hyp2f1: c is a non-positive integer".into()));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for m in 0..20_000u64 {
        let mf = m as f64;
        term *= (a + mf) * (b + mf) / ((c + mf) * (mf + 1.0)) * x;
        sum += term;
        let ratio = ((a + mf + 1.0) * (b + mf + 1.0) / ((c + mf + 1.0) * (mf + 2.0)) * x).abs();
        if ratio < 1.0 {
            let tail = term.abs() * ratio / (1.0 - ratio);
            if tail < 1e-15 * sum.abs().max(1e-300) {
                return Ok(Eval::new(sum, tail + 1e-16 * sum.abs(), m + 1));
            }
        }
    }
    Err(Error::Truncation { context: "hyp2f1".into(), partial: sum, err_est: term.abs(), work: 20_000 })
}

/// (1/n) ₂F₁(1, n; n+1; −α) in the closed logarithmic form
/// (−1)^{n+1} ln(1+α)/αⁿ − Σ_{j=1}^{n−1} (−1)^j/((n−j) αʲ), valid for α > 0.
pub(crate) fn hyp2f1_log_form(n: u32, alpha: f64) -> f64 {
    let nf = f64::from(n);
    let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
    let mut v = sign * alpha.ln_1p() / alpha.powf(nf);
    for j in 1..n {
        let sj = if j % 2 == 0 { 1.0 } else { -1.0 };
        v -= sj / ((nf - f64::from(j)) * alpha.powi(j as i32));
    }
    v
}

/// ∫₀¹ t^{α−1} Li_n(t) dt by the closed forms: the digamma form at n = 1,
/// the dilogarithm form at n = 2 (with a series branch as α → 0 exposing
/// ζ(3)), and the h(s)-weighted form for n ≥ 3.
pub fn polylog_moment(alpha: f64, n: u32) -> Result<Eval> {
    if n == 0 {
        return Err(Error::Domain("polylog_moment: order n must be >= 1".into()));
    }
    if alpha <= -1.0 {
        return Err(Error::Domain(format!("polylog_moment: alpha = {alpha} must exceed -1")));
    }
    match n {
        1 => {
            if alpha <= 0.0 {
                return Err(Error::Domain("polylog_moment: n = 1 requires alpha > 0".into()));
            }
            if alpha < 1e-2 {
                // [psi(1+a)+gamma]/a = zeta(2) - zeta(3) a + zeta(4) a^2 - ...
                let v = zeta_int(2) - zeta_int(3) * alpha + zeta_int(4) * alpha * alpha
                    - zeta_int(5) * alpha.powi(3);
                return Ok(Eval::new(v, zeta_int(6) * alpha.powi(4) + 1e-15, 0));
            }
            let psi = digamma(alpha + 1.0)?;
            Ok(Eval::new((psi.value + EULER_GAMMA) / alpha, psi.err_est / alpha, psi.work))
        }
        2 => {
            if alpha.abs() < 1e-2 {
                // zeta(2)/a - [psi(1+a)+gamma]/a^2 = zeta(3) - zeta(4) a + zeta(5) a^2 - ...
                let v = zeta_int(3) - zeta_int(4) * alpha + zeta_int(5) * alpha * alpha
                    - zeta_int(6) * alpha.powi(3);
                return Ok(Eval::new(v, zeta_int(7) * alpha.powi(4).abs() + 1e-15, 0));
            }
            let psi = digamma(alpha + 1.0)?;
            let v = zeta_int(2) / alpha - (psi.value + EULER_GAMMA) / (alpha * alpha);
            Ok(Eval::new(v, psi.err_est / (alpha * alpha) + 1e-15 * v.abs(), psi.work))
        }
        _ => {
            if alpha == 0.0 {
                return Err(Error::Domain("polylog_moment: alpha = 0 only supported for n <= 2".into()));
            }
            let nf = f64::from(n);
            let t1 = 0.5 / (alpha + 1.0);
            let (t2, t2err, w2) = if alpha > 0.25 {
                (hyp2f1_log_form(n, alpha), 1e-15, 0)
            } else {
                let h = hyp2f1(1.0, nf, nf + 1.0, -alpha)?;
                (h.value / nf, h.err_est / nf, h.work)
            };
            let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
            let mut t3 = 0.0;
            let mut t3err = 0.0;
            let mut work = w2;
            for j in 1..=n {
                let h = h_moment(f64::from(j))?;
                let sj = if j % 2 == 0 { 1.0 } else { -1.0 };
                let w = sj * f64::from(j) / alpha.powi((n - j) as i32 + 1);
                t3 += w * h.value;
                t3err += w.abs() * h.err_est;
                work += h.work;
            }
            t3 *= sign;
            let psi = digamma(alpha + 1.0)?;
            work += psi.work;
            let t4 = sign / alpha.powi(n as i32)
                * (psi.value - (alpha + 1.0).ln() + 0.5 / (alpha + 1.0));
            let value = t1 + t2 + t3 + t4;
            let err = t2err + t3err + psi.err_est / alpha.powi(n as i32).abs()
                + 1e-15 * (t1.abs() + t2.abs() + t3.abs() + t4.abs());
            Ok(Eval::new(value, err, work))
        }
    }
}

/// The hypergeometric identity pair: Φ(z, k, a) computed once as
/// a^{−k} ₖ₊₁F_k(1, a, …, a; a+1, …, a+1; z) (whose series telescopes to
/// Σ_m zᵐ (a/(a+m))^k / a^k) and once by the integral representation.
pub fn lerch_hyp_pair(k: u32, a: f64, z: f64) -> Result<(Eval, Eval)> {
    if z.abs() >= 1.0 {
        return Err(Error::Domain("lerch_hyp_pair: requires |z| < 1".into()));
    }
    if a <= 0.0 {
        return Err(Error::Domain("lerch_hyp_pair: requires a > 0".into()));
    }
    let mut sum = 0.0;
    let mut zn = 1.0;
    let mut m = 0u64;
    let hyp = loop {
        let t = zn * (a / (a + m as f64)).powi(k as i32);
        sum += t;
        zn *= z;
        m += 1;
        let bound = zn.abs() / (1.0 - z.abs());
        if bound < 1e-15 * sum.abs().max(1.0) {
            break Eval::new(sum / a.powi(k as i32), bound / a.powi(k as i32) + 1e-16 * sum.abs(), m);
        }
        if m > 2_000_000 {
            return Err(Error::Truncation {
                context: "lerch_hyp_pair: hypergeometric series".into(),
                partial: sum,
                err_est: bound,
                work: m,
            });
        }
    };
    let rep = lerch_phi(z, f64::from(k), a)?;
    Ok((hyp, rep))
}

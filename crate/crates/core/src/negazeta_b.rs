//! The A_k(q) = k ∂ζ(z,q)/∂z|_{z=1−k} functions: Stieltjes-sum and integral
//! representations, the Bernoulli-polynomial bridge, and two summation
//! relations over rational arguments.
//!
//! Everything is driven by the entire-series representation
//! A_k(q) = −1/k − k Σ_{n≥0} γ_{n+1}(q) kⁿ/n!, truncated at depth 18 (the
//! double-precision quality of γ_n(q) degrades past n ≈ 20), together with
//! an integral representation valid for k < 2 and the argument-shift law
//! A_k(q+1) = A_k(q) + k q^{k−1} ln q.

use crate::quad::exact::{integrate_p1_exact, ExpPolyLog};
use crate::quad::{integrate_finite, integrate_semi_inf, QuadSpec};
use crate::zetafun::{bernoulli_number, bernoulli_poly, digamma, stieltjes, zeta_prime_neg};
use crate::{Error, Eval, Result, LN_SQRT_2PI};

/// Stieltjes-series truncation depth (precision cap inherited from γ_n).
const SERIES_DEPTH: u32 = 18;

fn spec() -> QuadSpec {
    QuadSpec::default().with_tol(1e-12)
}

/// Evaluation route for A_k(q).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AkMethod {
    /// −1/k − k Σ γ_{n+1}(q) kⁿ/n! (integer 1 ≤ k ≤ 4, q ∈ (0, 1] up to shifts).
    StieltjesSum,
    /// The P₁ integral representation (any real k < 2, q > 0).
    Integral,
    /// Climb from A₁(q) with A_{k+1}(q) = A_k(q) + k q^{k−1} ln q.
    Shift,
    /// A_k(0) = A_k(1) = k ζ′(1−k) for integer k ≥ 2.
    Boundary,
}

/// γ_k(q+1) = γ_k(q) − lnᵏq / q summed against kⁿ/n! gives the closed
/// argument-shift A_k(q) = A_k(q−1) + k (q−1)^{k−1} ln(q−1); reduce q into
/// (0, 2] before the series route.
fn reduce_argument(k: f64, mut q: f64) -> (f64, f64) {
    let mut offset = 0.0;
    while q > 2.0 {
        let w = q - 1.0;
        offset += k * w.powf(k - 1.0) * w.ln();
        q = w;
    }
    (q, offset)
}

fn ak_stieltjes(k: u32, q: f64) -> Result<Eval> {
    if !(1..=4).contains(&k) {
        return Err(Error::Domain(format!("a_k (series route): integer k = {k} outside 1..=4")));
    }
    if q <= 0.0 {
        return Err(Error::Domain("a_k (series route): need q > 0".into()));
    }
    let kf = f64::from(k);
    let (qr, offset) = reduce_argument(kf, q);
    let mut sum = 0.0;
    let mut err = 0.0;
    let mut work = 0u64;
    let mut weight = 1.0; // k^n / n!
    let mut last = 0.0;
    for n in 0..=SERIES_DEPTH {
        let g = stieltjes(n + 1, qr)?;
        last = g.value * weight;
        sum += last;
        err += g.err_est * weight;
        work += g.work;
        weight *= kf / (f64::from(n) + 1.0);
    }
    Ok(Eval::new(-1.0 / kf - kf * sum + offset, kf * (err + last.abs()), work))
}

fn ak_integral(k: f64, q: f64) -> Result<Eval> {
    if k >= 2.0 {
        return Err(Error::Domain(format!("a_k (integral route): needs k < 2, got {k}")));
    }
    if q <= 0.0 {
        return Err(Error::Domain("a_k (integral route): need q > 0".into()));
    }
    let lq = q.ln();
    let explicit = -lq / (2.0 * q.powf(1.0 - k)) - q.powf(k) / (k * k) + q.powf(k) * lq / k;
    let g1 = ExpPolyLog::power_log(&[(1.0, 2.0 - k, 0)]);
    let i1 = integrate_p1_exact(&g1, q, q, &spec())?;
    let g2 = ExpPolyLog::power_log(&[(1.0, 2.0 - k, 1)]);
    let i2 = integrate_p1_exact(&g2, q, q, &spec())?;
    Ok(Eval::new(
        k * (explicit - i1.value + (1.0 - k) * i2.value),
        k.abs() * (i1.err_est + (1.0 - k).abs() * i2.err_est) + 1e-15 * explicit.abs(),
        i1.work + i2.work,
    ))
}

/// A_k(q) by the chosen route. Integer-order routes accept q ∈ [0, 1]
/// directly and larger q through the shift law; `Integral` takes any real
/// k < 2.
pub fn a_k(k: f64, q: f64, method: AkMethod) -> Result<Eval> {
    match method {
        AkMethod::StieltjesSum => {
            if k.fract() != 0.0 {
                return Err(Error::Domain("a_k (series route): integer order required".into()));
            }
            let ki = k as u32;
            if q == 0.0 {
                if ki < 2 {
                    return Err(Error::Domain("a_k: q = 0 needs k >= 2 (A_1(0) diverges)".into()));
                }
                return ak_stieltjes(ki, 1.0); // A_k(0) = A_k(1) by periodicity
            }
            ak_stieltjes(ki, q)
        }
        AkMethod::Integral => ak_integral(k, q),
        AkMethod::Shift => {
            if k.fract() != 0.0 || k < 1.0 {
                return Err(Error::Domain("a_k (shift route): integer order >= 1 required".into()));
            }
            if q <= 0.0 {
                return Err(Error::Domain("a_k (shift route): need q > 0".into()));
            }
            let base = ak_integral(1.0, q)?;
            let mut corr = 0.0;
            for j in 1..(k as u32) {
                corr += f64::from(j) * q.powi(j as i32 - 1) * q.ln();
            }
            Ok(base.add_const(corr))
        }
        AkMethod::Boundary => {
            if k.fract() != 0.0 || k < 2.0 {
                return Err(Error::Domain("a_k (boundary route): integer k >= 2 required".into()));
            }
            if q != 0.0 && q != 1.0 {
                return Err(Error::Domain("a_k (boundary route): only q = 0 or 1".into()));
            }
            Ok(zeta_prime_neg(k as u32)?.scale(k))
        }
    }
}

/// The Bernoulli bridge pair: B_k(q) from the binomial recurrence and from
/// the Stieltjes sum B_k(q) = 1 − k Σ_{n≥0} γ_n(q) kⁿ/n! (γ₀ = −ψ).
pub fn bernoulli_stieltjes_check(k: u32, q: f64) -> Result<(Eval, Eval)> {
    if !(1..=4).contains(&k) {
        return Err(Error::Domain(format!("bernoulli_stieltjes_check: k = {k} outside 1..=4")));
    }
    let recurrence = Eval::exact(bernoulli_poly(k, q));
    let (qe, sign) = if q == 0.0 {
        (1.0, if k % 2 == 0 { 1.0 } else { -1.0 }) // B_k(0) = (−1)^k B_k(1)
    } else {
        (q, 1.0)
    };
    if qe <= 0.0 || qe > 2.0 {
        return Err(Error::Domain("bernoulli_stieltjes_check: q outside [0, 2]".into()));
    }
    let kf = f64::from(k);
    let mut sum = -digamma(qe)?.value; // γ₀(q)
    let mut weight = kf;
    let mut err = 0.0;
    let mut work = 0u64;
    for n in 1..=SERIES_DEPTH {
        let g = stieltjes(n, qe)?;
        sum += g.value * weight; // weight = k^n / n!
        err += g.err_est * weight;
        work += g.work;
        weight *= kf / (f64::from(n) + 1.0);
    }
    let series = Eval::new(sign * (1.0 - kf * sum), kf * err + weight.abs(), work);
    Ok((recurrence, series))
}

/// Both sides of the rational-argument summation relation
/// Σ_{r=1}^{q} A_k(pr/q − b) = −ln(q/p) Σ_{r=1}^{q} B_k(pr/q − b)
///                            + (q/p)^{1−k} Σ_{ℓ=0}^{p−1} A_k(1 + (ℓ−b)q/p).
pub fn ak_sum_relation_pq(k: u32, p: u32, q: u32, b: f64) -> Result<(Eval, Eval)> {
    if p < 1 || q < 1 {
        return Err(Error::Domain("ak_sum_relation_pq: need p, q >= 1".into()));
    }
    let (pf, qf) = (f64::from(p), f64::from(q));
    if !(b >= 0.0 && (pf / qf).min(qf / pf) > b) {
        return Err(Error::Domain(format!(
            "ak_sum_relation_pq: need 0 <= b < min(p/q, q/p), got b = {b}"
        )));
    }
    let eval_ak = |x: f64| -> Result<Eval> {
        if k == 1 {
            a_k(1.0, x, AkMethod::Integral)
        } else {
            a_k(f64::from(k), x, AkMethod::StieltjesSum)
        }
    };
    let mut lhs = Eval::new(0.0, 0.0, 0);
    let mut rhs_b = 0.0;
    for r in 1..=q {
        let x = pf * f64::from(r) / qf - b;
        lhs = lhs.add(eval_ak(x)?);
        rhs_b += bernoulli_poly(k, x);
    }
    let mut rhs = Eval::new(-(qf / pf).ln() * rhs_b, 1e-15 * rhs_b.abs(), 0);
    let mut tail = Eval::new(0.0, 0.0, 0);
    for l in 0..p {
        let x = 1.0 + (f64::from(l) - b) * qf / pf;
        tail = tail.add(eval_ak(x)?);
    }
    rhs = rhs.add(tail.scale((qf / pf).powf(1.0 - f64::from(k))));
    Ok((lhs, rhs))
}

/// Both sides of the prime-power summation relation
/// (1 − p^{k−1}) A_k(1) − (−1)^k p^{k−1} ln p · B_k
///   = (−1)^k (N+1) ln p (1 − p^{k−1}) B_k + p^{(N+1)(k−1)} Σ_{(j,p)=1} A_k(j/p^{N+1}).
pub fn ak_prime_relation(k: u32, p: u32, n: u32) -> Result<(Eval, Eval)> {
    if !(2..=3).contains(&k) {
        return Err(Error::Domain("ak_prime_relation: k capped to {2, 3}".into()));
    }
    if ![2u32, 3, 5].contains(&p) {
        return Err(Error::Domain("ak_prime_relation: p must be a prime <= 5".into()));
    }
    if n > 2 {
        return Err(Error::Domain("ak_prime_relation: N capped to 2".into()));
    }
    let kf = f64::from(k);
    let pf = f64::from(p);
    let bk = bernoulli_number(k);
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let ak1 = a_k(kf, 1.0, AkMethod::Boundary)?;
    let lhs = Eval::new(
        (1.0 - pf.powf(kf - 1.0)) * ak1.value - sign * pf.powf(kf - 1.0) * pf.ln() * bk,
        (1.0 - pf.powf(kf - 1.0)).abs() * ak1.err_est,
        ak1.work,
    );
    let modulus = p.pow(n + 1);
    let mut tail = Eval::new(0.0, 0.0, 0);
    for j in 1..modulus {
        if j % p != 0 {
            tail = tail.add(a_k(kf, f64::from(j) / f64::from(modulus), AkMethod::StieltjesSum)?);
        }
    }
    let rhs = tail
        .scale(pf.powf(f64::from(n + 1) * (kf - 1.0)))
        .add_const(sign * f64::from(n + 1) * pf.ln() * (1.0 - pf.powf(kf - 1.0)) * bk);
    Ok((lhs, rhs))
}

/// The three equal integral forms of −∫₀^∞ P₁(x)/(x+s) dx (s > 0):
/// the P₁ form itself, the Binet kernel ∫₀^∞ (1/2 − 1/t + 1/(e^t−1)) e^{−ts}/t dt,
/// and 2 ∫₀^∞ arctan(t/s)/(e^{2πt} − 1) dt.
pub fn binet_forms(s: f64) -> Result<(Eval, Eval, Eval)> {
    if s <= 0.0 {
        return Err(Error::Domain("binet_forms: need s > 0".into()));
    }
    let g = ExpPolyLog::power_log(&[(1.0, 1.0, 0)]);
    let f1 = integrate_p1_exact(&g, s, s, &spec())?.scale(-1.0);

    let kernel = |t: f64| {
        let core = if t < 0.1 {
            t / 12.0 - t.powi(3) / 720.0 + t.powi(5) / 30240.0
        } else {
            0.5 - 1.0 / t + 1.0 / f64::exp_m1(t)
        };
        core * (-t * s).exp() / t
    };
    let f2 = integrate_finite(kernel, 0.0, 1.0, &QuadSpec::default())?
        .add(integrate_semi_inf(kernel, 1.0, &QuadSpec::default())?);

    let atan_kernel = move |t: f64| 2.0 * (t / s).atan() / f64::exp_m1(2.0 * std::f64::consts::PI * t);
    let f3 = integrate_finite(atan_kernel, 0.0, 1.0, &QuadSpec::default())?
        .add(integrate_semi_inf(atan_kernel, 1.0, &QuadSpec::default())?);
    Ok((f1, f2, f3))
}

/// ln Γ(s+1) two ways: via A₁(s+1) from its integral representation, and via
/// the Stirling–Binet form (s + 1/2) ln s − s + ln √(2π) − ∫₀^∞ P₁(x)/(x+s) dx.
pub fn loggamma_binet_pair(s: f64) -> Result<(Eval, Eval)> {
    if s <= 0.0 {
        return Err(Error::Domain("loggamma_binet_pair: need s > 0".into()));
    }
    let via_a1 = a_k(1.0, s + 1.0, AkMethod::Integral)?.add_const(LN_SQRT_2PI);
    let (f1, _, _) = binet_forms(s)?;
    let binet = f1.add_const((s + 0.5) * s.ln() - s + LN_SQRT_2PI);
    Ok((via_a1, binet))
}

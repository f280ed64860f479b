//! The k-refinement series engine and the concrete Addison-type series built
//! on it: ζ′(s,a), ζ″(s,a), γ₁(a), ζ′(s) for refinement bases 2/3/4, ln Γ(z),
//! ln √(2π), the mod-4 L-function, and the two classical γ series.
//!
//! Telescoping −P₁(x) = Σ_n g_k(kⁿx)/kⁿ against the integral representations
//! in `zetafun` turns each P₁ integral into a double series
//!
//! Σ_{n≥0} k^{−n} Σ_{j≥0} { bracket(b, j) }_{b = k^{−n}},
//!
//! whose bracket is a second difference of the integrand's antiderivative on
//! the k-adic subdivision of [j, j+1]. Inner tails are estimated by integral
//! comparison on the fitted local power decay; the outer tail geometrically
//! from the last two levels. Both estimates go to `err_est`; the value is
//! the truncated sum, accumulated in fixed ascending order.

use crate::{Error, Eval, Result};

/// Controls for the refinement engine.
#[derive(Debug, Clone, Copy)]
pub struct RefineParams {
    /// Refinement base k ≥ 2.
    pub k: u32,
    /// Outer truncation (levels n = 0..=n_max).
    pub n_max: u32,
    /// Hard cap on inner terms per level.
    pub j_max: u64,
    /// Absolute tolerance target.
    pub tol: f64,
}

impl RefineParams {
    pub fn new(k: u32, n_max: u32, j_max: u64, tol: f64) -> Result<Self> {
        if k < 2 {
            return Err(Error::Domain(format!("RefineParams: base k = {k} < 2")));
        }
        if n_max < 1 {
            return Err(Error::Domain("RefineParams: need n_max >= 1".into()));
        }
        if j_max < 8 {
            return Err(Error::Domain("RefineParams: need j_max >= 8".into()));
        }
        if !(tol > 0.0) {
            return Err(Error::Domain("RefineParams: tolerance must be positive".into()));
        }
        Ok(RefineParams { k, n_max, j_max, tol })
    }

    pub fn with_k(self, k: u32) -> Self {
        RefineParams { k, ..self }
    }

    pub fn with_tol(self, tol: f64) -> Self {
        RefineParams { tol, ..self }
    }
}

impl Default for RefineParams {
    fn default() -> Self {
        RefineParams { k: 2, n_max: 48, j_max: 40_000_000, tol: 1e-9 }
    }
}

/// Inner sum Σ_j inner(b, j) until the integral-comparison tail estimate
/// drops below `tol`; returns (sum, tail_estimate, terms).
fn inner_sum<F: Fn(f64, u64) -> f64>(inner: &F, b: f64, tol: f64, j_max: u64) -> Result<(f64, f64, u64)> {
    const BLOCK: u64 = 64;
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut j = 0u64;
    let mut prev_block_last = f64::NAN;
    let mut tiny_blocks = 0u32;
    loop {
        let mut last = 0.0;
        for _ in 0..BLOCK {
            let t = inner(b, j);
            if !t.is_finite() {
                return Err(Error::NonFinite { x: j as f64, context: "refine_sum inner term".into() });
            }
            let y = t - comp;
            let s = sum + y;
            comp = (s - sum) - y;
            sum = s;
            last = t;
            j += 1;
        }
        let a = last.abs();
        if a < 1e-305 {
            tiny_blocks += 1;
            if tiny_blocks >= 3 {
                return Ok((sum, 0.0, j));
            }
        } else {
            tiny_blocks = 0;
            if prev_block_last.is_finite() && prev_block_last > a {
                // local power fit t_j ~ j^{-p}: tail ≈ t_J · J/(p−1)
                let p = (prev_block_last / a).ln() / (j as f64 / (j - BLOCK) as f64).ln();
                if p > 1.05 {
                    let tail = a * j as f64 / (p - 1.0);
                    if tail < tol {
                        return Ok((sum, tail, j));
                    }
                }
            }
            prev_block_last = a;
        }
        if j >= j_max {
            return Err(Error::Truncation {
                context: "refine_sum: inner tail estimate exceeds tolerance at j_max".into(),
                partial: sum,
                err_est: a * j as f64,
                work: j,
            });
        }
    }
}

/// Σ_{n=0}^{n_max} k^{−n} Σ_j inner(k^{−n}, j), stopping the outer sum when
/// the geometric bound from the last two levels is below tolerance.
pub fn refine_sum<F: Fn(f64, u64) -> f64>(k: u32, inner: F, params: &RefineParams) -> Result<Eval> {
    let base = f64::from(k);
    let mut total = 0.0;
    let mut err = 0.0;
    let mut work = 0u64;
    let mut prev_level: Option<f64> = None;
    let mut weight = 1.0;
    for n in 0..=params.n_max {
        let nf = f64::from(n);
        let level_tol = params.tol / (4.0 * (nf + 1.0) * (nf + 2.0));
        let b = base.powi(-(n as i32));
        let (s, tail, terms) = inner_sum(&inner, b, level_tol / weight, params.j_max)?;
        let level = weight * s;
        total += level;
        err += weight * tail;
        work += terms;
        if let Some(prev) = prev_level {
            let (la, pa) = (level.abs(), prev.abs());
            if la < 1e-300 && pa < 1e-300 {
                return Ok(Eval::new(total, err, work));
            }
            if pa > 0.0 {
                let rho = la / pa;
                if rho < 0.95 {
                    let outer_tail = la * rho / (1.0 - rho);
                    if outer_tail < 0.25 * params.tol && n >= 2 {
                        return Ok(Eval::new(total, err + outer_tail, work));
                    }
                }
            }
        }
        prev_level = Some(level);
        weight /= base;
    }
    // outer budget exhausted: report with the last level as the tail estimate
    let outer_tail = prev_level.map(f64::abs).unwrap_or(0.0);
    Ok(Eval::new(total, err + outer_tail, work))
}

/// Fixed-depth variant (exactly `levels` outer levels) for convergence tables.
pub fn refine_sum_fixed_depth<F: Fn(f64, u64) -> f64>(
    k: u32,
    inner: F,
    levels: u32,
    inner_tol: f64,
    j_max: u64,
) -> Result<Eval> {
    let base = f64::from(k);
    let mut total = 0.0;
    let mut err = 0.0;
    let mut work = 0u64;
    let mut weight = 1.0;
    for _ in 0..=levels {
        let b = weight; // k^{-n}
        let (s, tail, terms) = inner_sum(&inner, b, inner_tol / weight, j_max)?;
        total += weight * s;
        err += weight * tail;
        work += terms;
        weight /= base;
    }
    Ok(Eval::new(total, err, work))
}

/// The (1.15)-shaped bracket: ½(1/k − 1)[L(bj+a) + L(b(j+1)+a)] +
/// (1/k) Σ_{m<k} L(b(j+m/k)+a), with L(u) = lnʳu/u^s.
fn log_bracket(k: u32, s: f64, a: f64, logpow: i32, b: f64, j: u64) -> f64 {
    let kf = f64::from(k);
    let jf = j as f64;
    let lf = |y: f64| {
        let u = b * y + a;
        u.ln().powi(logpow) / u.powf(s)
    };
    let mut v = 0.5 * (1.0 / kf - 1.0) * (lf(jf) + lf(jf + 1.0));
    for m in 1..k {
        v += lf(jf + f64::from(m) / kf) / kf;
    }
    v
}

/// ζ′(s, a) from the k-refinement series: the double sum equals
/// ζ′(s,a) + a^{1−s}/(s−1)² + ln a/(2a^s) + a^{1−s} ln a/(s−1).
pub fn hurwitz_prime_addison(s: f64, a: f64, params: &RefineParams) -> Result<Eval> {
    if s <= 0.0 || s == 1.0 {
        return Err(Error::Domain(format!("hurwitz_prime_addison: need s > 0, s != 1, got {s}")));
    }
    if a <= 0.0 {
        return Err(Error::Domain("hurwitz_prime_addison: need a > 0".into()));
    }
    let k = params.k;
    let rhs = refine_sum(k, |b, j| log_bracket(k, s, a, 1, b, j), params)?;
    let la = a.ln();
    let explicit = a.powf(1.0 - s) / ((s - 1.0) * (s - 1.0)) + la / (2.0 * a.powf(s))
        + a.powf(1.0 - s) * la / (s - 1.0);
    Ok(rhs.add_const(-explicit))
}

/// γ₁(a) from the s → 1 limit of the ζ′(s,a) series:
/// γ₁(a) = ln a/(2a) − ln²a/2 − Σ_n k^{−n} Σ_j {bracket with L(u) = ln u/u}.
pub fn stieltjes1_addison(a: f64, params: &RefineParams) -> Result<Eval> {
    if a <= 0.0 {
        return Err(Error::Domain("stieltjes1_addison: need a > 0".into()));
    }
    let k = params.k;
    let rhs = refine_sum(k, |b, j| log_bracket(k, 1.0, a, 1, b, j), params)?;
    let la = a.ln();
    Ok(rhs.scale(-1.0).add_const(la / (2.0 * a) - 0.5 * la * la))
}

/// ζ″(s, a): the ln²-kernel double sum equals
/// −[ζ″(s,a) − 2a^{1−s}ln a/(s−1)² − 2a^{1−s}/(s−1)³ − ln²a/(2a^s) − a^{1−s}ln²a/(s−1)].
pub fn hurwitz_dprime_addison(s: f64, a: f64, params: &RefineParams) -> Result<Eval> {
    if s <= 0.0 || s == 1.0 {
        return Err(Error::Domain(format!("hurwitz_dprime_addison: need s > 0, s != 1, got {s}")));
    }
    if a <= 0.0 {
        return Err(Error::Domain("hurwitz_dprime_addison: need a > 0".into()));
    }
    let k = params.k;
    let rhs = refine_sum(k, |b, j| log_bracket(k, s, a, 2, b, j), params)?;
    let la = a.ln();
    let sm = s - 1.0;
    let explicit = 2.0 * a.powf(1.0 - s) * la / (sm * sm) + 2.0 * a.powf(1.0 - s) / (sm * sm * sm)
        + la * la / (2.0 * a.powf(s))
        + a.powf(1.0 - s) * la * la / sm;
    Ok(rhs.scale(-1.0).add_const(explicit))
}

/// ζ′(s) = −1/(s−1)² + (k-refinement series at a = 1), k ∈ {2, 3, 4}.
pub fn zeta_prime_addison(s: f64, k: u32, params: &RefineParams) -> Result<Eval> {
    if !(2..=4).contains(&k) {
        return Err(Error::Domain(format!("zeta_prime_addison: base k = {k} not in {{2,3,4}}")));
    }
    hurwitz_prime_addison(s, 1.0, &params.with_k(k))
}

/// ln Γ(z) = (z − 1/2) ln z − z + 1 − (1/4) Σ_n 2^{−n} Σ_j [six-log bracket].
pub fn loggamma_addison(z: f64, params: &RefineParams) -> Result<Eval> {
    if z <= 0.0 {
        return Err(Error::Domain(format!("loggamma_addison: need z > 0, got {z}")));
    }
    let inner = |b: f64, j: u64| {
        let jf = j as f64;
        (z + b * jf).ln() - (1.0 + b * jf).ln() + (z + b + b * jf).ln() - (1.0 + b + b * jf).ln()
            - 2.0 * (2.0 * z + b + 2.0 * b * jf).ln()
            + 2.0 * (2.0 + b + 2.0 * b * jf).ln()
    };
    let s = refine_sum(2, inner, &params.with_k(2))?;
    Ok(s.scale(-0.25).add_const((z - 0.5) * z.ln() - z + 1.0))
}

/// ln √(2π) = 3/4 − (1/4) Σ_n 4^{−n} Σ_j {…}_{b = 2^{−n}}:
/// outer weight 4^{−n} with scale b = 2^{−n} (the bracket carries an extra
/// factor b relative to the six-log bracket above, which is where the
/// squared outer weight comes from).
pub fn log_sqrt_2pi_addison(params: &RefineParams) -> Result<Eval> {
    let inner = |b4: f64, j: u64| {
        let b = b4.sqrt(); // exact: b4 is a power of 4
        let jf = j as f64;
        let main = (jf + 1.0) * (((b * jf + b + 1.0) / (b * jf + b)).ln())
            - (2.0 * jf + 1.0) * (((2.0 * b * jf + b + 2.0) / (2.0 * b * jf + b)).ln());
        if j == 0 {
            main // j·[ln(bj+1) − ln(bj)] → 0 by the limit convention
        } else {
            main + jf * ((b * jf + 1.0) / (b * jf)).ln()
        }
    };
    let s = refine_sum(4, inner, &params.with_k(4))?;
    Ok(s.scale(-0.25).add_const(0.75))
}

/// Mod-4 Dirichlet L(s) for s ≥ 0 by the base-2 refinement series:
/// L(s) = ½(1−3^{−s}) + ¼(1−3^{1−s})/(s−1) + 4^{−s−1} Σ_n 2^{−n} Σ_j [second
/// difference of (by+1/4)^{−s} − (by+3/4)^{−s}].
pub fn l4_addison(s: f64, params: &RefineParams) -> Result<Eval> {
    if s < 0.0 {
        return Err(Error::Domain(format!("l4_addison: need s >= 0, got {s}")));
    }
    if s == 0.0 {
        return Ok(Eval::exact(0.5));
    }
    let d = |y: f64, b: f64| (b * y + 0.25).powf(-s) - (b * y + 0.75).powf(-s);
    let inner = |b: f64, j: u64| {
        let jf = j as f64;
        d(jf, b) - 2.0 * d(jf + 0.5, b) + d(jf + 1.0, b)
    };
    let series = refine_sum(2, inner, &params.with_k(2))?;
    // (1 − 3^{1−s})/(s−1), stable through s = 1 where it tends to ln 3
    let pole_part = if s == 1.0 {
        3f64.ln()
    } else {
        -f64::exp_m1((1.0 - s) * 3f64.ln()) / (s - 1.0)
    };
    let explicit = 0.5 * (1.0 - 3f64.powf(-s)) + 0.25 * pole_part;
    Ok(series.scale(4f64.powf(-s - 1.0)).add_const(explicit))
}

/// γ by the dyadic-block series
/// γ = 1/2 + (1/2) Σ_{n≥1} n Σ_{m=2^{n−1}}^{2^n−1} 1/(2m(m+1)(2m+1)).
pub fn gamma_addison() -> Result<Eval> {
    gamma_addison_depth(27)
}

/// Same series truncated after `blocks` dyadic blocks.
pub fn gamma_addison_depth(blocks: u32) -> Result<Eval> {
    let mut total = 0.5;
    let mut comp = 0.0;
    let mut work = 0u64;
    let mut last_block = 0.0;
    for n in 1..=blocks {
        let mut block = 0.0;
        let lo = 1u64 << (n - 1);
        let hi = (1u64 << n) - 1;
        for m in lo..=hi {
            let mf = m as f64;
            block += 1.0 / (2.0 * mf * (mf + 1.0) * (2.0 * mf + 1.0));
        }
        last_block = 0.5 * f64::from(n) * block;
        let y = last_block - comp;
        let t = total + y;
        comp = (t - total) - y;
        total = t;
        work += hi - lo + 1;
    }
    // blocks decay like n 4^{-n}: geometric-with-drift tail estimate
    let nf = f64::from(blocks);
    let tail = last_block * ((nf + 1.0) / nf) / 4.0 / (1.0 - 0.27);
    Ok(Eval::new(total, tail, work))
}

/// The rearranged second form γ = 1 − (1/2) Σ_{n≥1} n Σ_{m=2^{n−1}+1}^{2^n} 1/(m(2m−1)).
/// Blocks beyond 2²² terms are evaluated by the exact power expansion
/// 1/(m(2m−1)) = Σ_{p≥2} 2^{1−p} m^{−p} with midpoint-rule block sums, so
/// deep truncation depths stay cheap.
pub fn gamma_addison_alt_depth(blocks: u32) -> Result<Eval> {
    let mut total = 1.0;
    let mut last_block = 0.0;
    let mut work = 0u64;
    for n in 1..=blocks {
        let lo = (1u64 << (n - 1)) + 1;
        let hi = 1u64 << n;
        let block = if n <= 22 {
            let mut b = 0.0;
            for m in lo..=hi {
                let mf = m as f64;
                b += 1.0 / (mf * (2.0 * mf - 1.0));
            }
            work += hi - lo + 1;
            b
        } else {
            // sum_{m=lo}^{hi} m^{-p} ≈ ((lo-1/2)^{1-p} − (hi+1/2)^{1-p})/(p−1)
            let mut b = 0.0;
            let (a0, b0) = (lo as f64 - 0.5, hi as f64 + 0.5);
            for p in 2..=6u32 {
                let pf = f64::from(p);
                let coef = 2f64.powi(1 - p as i32);
                b += coef * (a0.powf(1.0 - pf) - b0.powf(1.0 - pf)) / (pf - 1.0);
            }
            work += 5;
            b
        };
        last_block = 0.5 * f64::from(n) * block;
        total -= last_block;
    }
    let nf = f64::from(blocks);
    let tail = last_block * ((nf + 1.0) / nf) / 2.0 / (1.0 - 0.52);
    Ok(Eval::new(total, tail, work))
}

/// γ by the alternating floor-log series Σ_j (−1)^j ⌊log₂ j⌋ / j, summed in
/// pairs: the pair (2m−1, 2m) contributes −(E+1)/(2m(2m−1)) plus 1/(2m−1)
/// when m is a power of two (E = ⌊log₂ m⌋). Pairs beyond 2²¹ are folded into
/// exact dyadic-block asymptotics.
pub fn gamma_vacca() -> Result<Eval> {
    const PAIRS_LOG2: u32 = 21;
    let mpairs = 1u64 << PAIRS_LOG2;
    let mut sum = 0.0;
    let mut comp = 0.0;
    for m in 1..=mpairs {
        let mf = m as f64;
        let e = (63 - m.leading_zeros() as i32) as f64; // floor(log2 m)
        let mut t = -(e + 1.0) / (2.0 * mf * (2.0 * mf - 1.0));
        if m & (m - 1) == 0 {
            t += 1.0 / (2.0 * mf - 1.0);
        }
        let y = t - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    // tail over whole dyadic blocks [2^a, 2^{a+1}-1], E = a:
    // block sums via 1/(2m(2m-1)) = (1/2) sum_p 2^{1-p} m^{-p}
    let mut tail = 0.0;
    for a in PAIRS_LOG2..(PAIRS_LOG2 + 60) {
        let lo = 2f64.powi(a as i32) - 0.5;
        let hi = 2f64.powi(a as i32 + 1) - 0.5;
        let mut block = 0.0;
        for p in 2..=6u32 {
            let pf = f64::from(p);
            block += 0.5 * 2f64.powi(1 - p as i32) * (lo.powf(1.0 - pf) - hi.powf(1.0 - pf)) / (pf - 1.0);
        }
        tail -= (f64::from(a) + 1.0) * block;
        // power-of-two extra term at m = 2^{a}
        tail += 1.0 / (2f64.powi(a as i32 + 1) - 1.0);
    }
    Ok(Eval::new(sum + tail, 3.0 / (mpairs as f64).powi(2), 2 * mpairs))
}

/// Third printed rearrangement of the alternating-log series, kept for the
/// deviations ledger: 1 + Σ_j (−1)^j {log₂ j}/j with {·} the fractional
/// part. It converges to 1 − ln2/2, not to γ.
pub fn vacca_fractional_variant(terms: u64) -> f64 {
    let mut sum = 1.0;
    let mut comp = 0.0;
    for j in 1..=terms {
        let jf = j as f64;
        let l2 = jf.log2();
        let frac = l2 - l2.floor();
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let t = sign * frac / jf;
        let y = t - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{EULER_GAMMA, LN_SQRT_2PI};
    use approx::assert_abs_diff_eq;

    const ZP2: f64 = -0.937_548_254_315_843_8;
    const GAMMA1: f64 = -0.072_815_845_483_676_72;

    fn params(tol: f64) -> RefineParams {
        RefineParams::default().with_tol(tol)
    }

    #[test]
    fn engine_basics() {
        // zero inner
        let e = refine_sum(2, |_, _| 0.0, &params(1e-10)).unwrap();
        assert_eq!(e.value, 0.0);
        // indicator inner: sum k^{-n} = k/(k-1)
        for k in [2u32, 3] {
            let e = refine_sum(k, |_, j| if j == 0 { 1.0 } else { 0.0 }, &params(1e-10)).unwrap();
            assert_abs_diff_eq!(e.value, f64::from(k) / (f64::from(k) - 1.0), epsilon = 1e-9);
        }
        assert!(RefineParams::new(1, 4, 100, 1e-8).is_err());
        assert!(RefineParams::new(2, 0, 100, 1e-8).is_err());
    }

    #[test]
    fn engine_gamma1_example() {
        // the s->1 bracket at a=1, k=2 sums to -gamma_1
        let k = 2;
        let e = refine_sum(k, |b, j| log_bracket(k, 1.0, 1.0, 1, b, j), &params(1e-9)).unwrap();
        assert_abs_diff_eq!(e.value, -GAMMA1, epsilon = 1e-8);
    }

    #[test]
    fn gamma_series() {
        let e = gamma_addison().unwrap();
        assert_abs_diff_eq!(e.value, EULER_GAMMA, epsilon = 1e-8);
        // first block alone: 1/2 + (1/2)(1/12)
        let e1 = gamma_addison_depth(1).unwrap();
        assert_abs_diff_eq!(e1.value, 0.5 + 0.5 / 12.0, epsilon = 1e-15);
        // both arrangements agree at equal block depth
        let a = gamma_addison_depth(50).unwrap();
        let b = gamma_addison_alt_depth(50).unwrap();
        assert_abs_diff_eq!(a.value, b.value, epsilon = 1e-10);
    }

    #[test]
    fn vacca_series() {
        let e = gamma_vacca().unwrap();
        assert_abs_diff_eq!(e.value, EULER_GAMMA, epsilon = 1e-7);
        // finite head of the alternating floor-log sum: j = 1..4 gives 1/2 - 1/3 + 2/4
        let head: f64 = [1, 2, 3, 4]
            .iter()
            .map(|&j| {
                let jf = j as f64;
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                sign * (jf.log2().floor()) / jf
            })
            .sum();
        assert_abs_diff_eq!(head, 0.5 - 1.0 / 3.0 + 0.5, epsilon = 1e-15);
        // the printed fractional-part variant settles at 1 - ln2/2, not gamma
        let v = vacca_fractional_variant(4_000_000);
        assert_abs_diff_eq!(v, 1.0 - std::f64::consts::LN_2 / 2.0, epsilon = 1e-5);
        assert!((v - EULER_GAMMA).abs() > 0.07);
    }

    #[test]
    fn hurwitz_prime_series() {
        let e = hurwitz_prime_addison(2.0, 1.0, &params(1e-8)).unwrap();
        assert_abs_diff_eq!(e.value, ZP2, epsilon = 1e-6);
        // k-independence
        let e3 = hurwitz_prime_addison(2.0, 1.0, &params(1e-8).with_k(3)).unwrap();
        assert_abs_diff_eq!(e.value, e3.value, epsilon = 1e-6);
        // zeta'(3, 2) = zeta'(3) (the shifted series drops the n=1 term, whose log vanishes)
        let e = hurwitz_prime_addison(3.0, 2.0, &params(1e-8)).unwrap();
        let zp3 = crate::zetafun::zeta_nderiv(1, 3.0).unwrap().value;
        assert_abs_diff_eq!(e.value, zp3, epsilon = 1e-7);
        assert!(hurwitz_prime_addison(1.0, 1.0, &params(1e-8)).is_err());
    }

    #[test]
    fn stieltjes1_series() {
        let e = stieltjes1_addison(1.0, &params(1e-8)).unwrap();
        assert_abs_diff_eq!(e.value, GAMMA1, epsilon = 1e-6);
        // gamma_1(1/2) = gamma_1 - 2 gamma ln 2 - ln^2 2
        let e = stieltjes1_addison(0.5, &params(1e-8)).unwrap();
        let ln2 = std::f64::consts::LN_2;
        assert_abs_diff_eq!(e.value, GAMMA1 - 2.0 * EULER_GAMMA * ln2 - ln2 * ln2, epsilon = 1e-6);
        // consistency with the integral route
        for &a in &[0.25, 0.75] {
            let s = crate::zetafun::stieltjes(1, a).unwrap();
            let ad = stieltjes1_addison(a, &params(1e-8)).unwrap();
            assert_abs_diff_eq!(s.value, ad.value, epsilon = 1e-5);
        }
    }

    #[test]
    fn hurwitz_dprime_series() {
        let zpp2 = 1.989_280_234_298_901;
        let e = hurwitz_dprime_addison(2.0, 1.0, &params(1e-8)).unwrap();
        assert_abs_diff_eq!(e.value, zpp2, epsilon = 1e-5);
        let e3 = hurwitz_dprime_addison(2.0, 1.0, &params(1e-8).with_k(3)).unwrap();
        assert_abs_diff_eq!(e3.value, zpp2, epsilon = 1e-5);
        let zpp3 = crate::zetafun::zeta_nderiv(2, 3.0).unwrap();
        let e = hurwitz_dprime_addison(3.0, 1.0, &params(1e-8)).unwrap();
        assert_abs_diff_eq!(e.value, zpp3.value, epsilon = 1e-5);
    }

    #[test]
    fn zeta_prime_bases() {
        let mut vals = Vec::new();
        for k in 2..=4u32 {
            let e = zeta_prime_addison(2.0, k, &params(1e-8)).unwrap();
            assert_abs_diff_eq!(e.value, ZP2, epsilon = 1e-6);
            vals.push(e.value);
        }
        assert_abs_diff_eq!(vals[0], vals[1], epsilon = 1e-6);
        assert_abs_diff_eq!(vals[0], vals[2], epsilon = 1e-6);
        assert!(zeta_prime_addison(2.0, 5, &params(1e-8)).is_err());
    }

    #[test]
    fn loggamma_series() {
        let e = loggamma_addison(0.5, &params(1e-8)).unwrap();
        assert_abs_diff_eq!(e.value, 0.5 * std::f64::consts::PI.ln(), epsilon = 1e-6);
        assert_abs_diff_eq!(loggamma_addison(1.0, &params(1e-8)).unwrap().value, 0.0, epsilon = 1e-7);
        assert_abs_diff_eq!(loggamma_addison(2.0, &params(1e-8)).unwrap().value, 0.0, epsilon = 1e-7);
    }

    #[test]
    fn ln_sqrt_2pi_series() {
        let e = log_sqrt_2pi_addison(&params(1e-8)).unwrap();
        assert_abs_diff_eq!(e.value, LN_SQRT_2PI, epsilon = 1e-6);
        // integral consistency
        let q = crate::quad::integrate_finite(
            |x| statrs::function::gamma::ln_gamma(x),
            0.0,
            1.0,
            &crate::quad::QuadSpec::default(),
        )
        .unwrap();
        assert_abs_diff_eq!(e.value, q.value, epsilon = 1e-6);
    }

    #[test]
    fn l4_series_values() {
        let p = params(1e-9);
        assert_abs_diff_eq!(l4_addison(1.0, &p).unwrap().value, std::f64::consts::PI / 4.0, epsilon = 1e-7);
        assert_abs_diff_eq!(l4_addison(2.0, &p).unwrap().value, 0.915_965_594_177_219, epsilon = 1e-7);
        assert_abs_diff_eq!(
            l4_addison(3.0, &p).unwrap().value,
            std::f64::consts::PI.powi(3) / 32.0,
            epsilon = 1e-7
        );
        assert_eq!(l4_addison(0.0, &p).unwrap().value, 0.5);
        assert!(l4_addison(-0.5, &p).is_err());
    }

    #[test]
    fn monotone_refinement() {
        // doubling the depth never worsens the gamma and ln sqrt(2pi) targets
        let mut prev = f64::INFINITY;
        for blocks in [6u32, 12, 24] {
            let e = gamma_addison_depth(blocks).unwrap();
            let err = (e.value - EULER_GAMMA).abs();
            assert!(err <= prev + 1e-15);
            prev = err;
        }
    }

    #[test]
    fn engine_reports_inner_truncation() {
        // a bracket decaying like j^{-1.01} cannot meet 1e-10 within a small j budget
        let tight = RefineParams { k: 2, n_max: 4, j_max: 1_000, tol: 1e-10 };
        let r = refine_sum(2, |_, j| ((j + 1) as f64).powf(-1.01), &tight);
        assert!(matches!(r, Err(Error::Truncation { .. })));
    }
}

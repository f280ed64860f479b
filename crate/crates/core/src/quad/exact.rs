//! P₁-weighted integration for integrands with closed-form derivatives.
//!
//! An [`ExpPolyLog`] is Re[e^{μx} Σ c·x^{−p}·lnʲx] with complex μ and c —
//! a family closed under differentiation (μ = ln z gives the exponential
//! integrands, μ = iθ the trigonometric ones, μ = 0 pure power-logs). For
//! such g the tail of a P₁-weighted integral past an integer-aligned
//! breakpoint M has the convergent expansion
//!
//! ∫_M^∞ P₁(x − shift) g(x) dx = −Σ_{k≥1} B_{2k}/(2k)! · g^{(2k−2)}(M),
//!
//! obtained by repeated integration by parts against the periodized
//! Bernoulli antiderivatives (odd-index boundary terms vanish, B_{2k+1} = 0).
//! Successive terms shrink like ((|μ| + O(1/M))/2π)^{2k}, so the series
//! converges for |μ| < 2π and the truncation error is the first omitted
//! term. Cells up to M are integrated exactly as in the generic path.

use super::{gauss_rule, GaussRule, QuadSpec};
use crate::{Error, Eval, Result};
use num_complex::Complex64;
use std::collections::HashMap;
use std::sync::OnceLock;

/// One term c·x^{−power}·ln^{log_pow}x.
#[derive(Debug, Clone, Copy)]
pub struct Term {
    pub coef: Complex64,
    pub power: f64,
    pub log_pow: u32,
}

/// Re[e^{μx} Σ terms], closed under d/dx.
#[derive(Debug, Clone)]
pub struct ExpPolyLog {
    pub mu: Complex64,
    pub terms: Vec<Term>,
}

impl ExpPolyLog {
    pub fn new(mu: Complex64) -> Self {
        ExpPolyLog { mu, terms: Vec::new() }
    }

    /// Pure power-log integrand Σ c·x^{−p}·lnʲx (μ = 0).
    pub fn power_log(terms: &[(f64, f64, u32)]) -> Self {
        let mut g = ExpPolyLog::new(Complex64::new(0.0, 0.0));
        for &(c, p, j) in terms {
            g.push(Complex64::new(c, 0.0), p, j);
        }
        g
    }

    pub fn push(&mut self, coef: Complex64, power: f64, log_pow: u32) {
        self.terms.push(Term { coef, power, log_pow });
    }

    pub fn eval_complex(&self, x: f64) -> Complex64 {
        let lx = x.ln();
        let mut s = Complex64::new(0.0, 0.0);
        for t in &self.terms {
            s += t.coef * x.powf(-t.power) * lx.powi(t.log_pow as i32);
        }
        if self.mu.norm_sqr() != 0.0 {
            s *= (self.mu * x).exp();
        }
        s
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.eval_complex(x).re
    }

    /// Exact derivative, with like terms merged.
    fn derivative(&self) -> Self {
        let mut map: HashMap<(u64, u32), Complex64> = HashMap::with_capacity(2 * self.terms.len());
        let mu_nonzero = self.mu.norm_sqr() != 0.0;
        for t in &self.terms {
            if mu_nonzero {
                *map.entry((t.power.to_bits(), t.log_pow)).or_insert(Complex64::new(0.0, 0.0)) +=
                    t.coef * self.mu;
            }
            if t.power != 0.0 {
                *map.entry(((t.power + 1.0).to_bits(), t.log_pow)).or_insert(Complex64::new(0.0, 0.0)) -=
                    t.coef * t.power;
            }
            if t.log_pow > 0 {
                *map.entry(((t.power + 1.0).to_bits(), t.log_pow - 1)).or_insert(Complex64::new(0.0, 0.0)) +=
                    t.coef * t.log_pow as f64;
            }
        }
        let mut terms: Vec<Term> = map
            .into_iter()
            .map(|((pb, j), c)| Term { coef: c, power: f64::from_bits(pb), log_pow: j })
            .collect();
        terms.sort_by(|a, b| (a.power, a.log_pow).partial_cmp(&(b.power, b.log_pow)).unwrap());
        ExpPolyLog { mu: self.mu, terms }
    }

    /// Drop terms whose magnitude at `x` is below `floor` (keeps the
    /// derivative chains from growing without bound).
    fn prune(&mut self, x: f64, floor: f64) {
        let lx = x.ln().abs().max(1.0);
        self.terms.retain(|t| t.coef.norm() * x.powf(-t.power) * lx.powi(t.log_pow as i32) > floor);
    }
}

/// B_{2k}/(2k)! — exact small cases, 2ζ(2k)/(2π)^{2k} beyond.
pub(crate) fn bern2k_over_fact(k: usize) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let tab = TABLE.get_or_init(|| {
        let mut v = vec![0.0; 161];
        v[1] = 1.0 / 12.0;
        v[2] = -1.0 / 720.0;
        v[3] = 1.0 / 30240.0;
        v[4] = -1.0 / 1209600.0;
        v[5] = 1.0 / 47900160.0;
        let two_pi = 2.0 * std::f64::consts::PI;
        for (k, slot) in v.iter_mut().enumerate().skip(6) {
            // zeta(2k) by direct summation (converges in a handful of terms)
            let mut z = 0.0;
            for n in (1..=8).rev() {
                z += (n as f64).powi(-2 * k as i32);
            }
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            *slot = sign * 2.0 * z / two_pi.powi(2 * k as i32);
        }
        v
    });
    tab[k]
}

/// Closed-form variant of the tail for a single pure power c·x^{−p}:
/// g^{(2k−2)}(M) = (p)_{2k−2} M^{−p−2k+2} needs no symbolic differentiation.
/// This is the hot path for the digamma/Hurwitz kernels.
fn em_tail_power(c: f64, p: f64, m: f64, tol: f64) -> Result<(f64, f64)> {
    let mut deriv = c * m.powf(-p); // (p)_{2k-2} M^{-(p+2k-2)}, starting k = 1
    let mut tail = 0.0;
    let mut min_abs = f64::INFINITY;
    let mut below = 0u32;
    for k in 1..=80usize {
        let term = -bern2k_over_fact(k) * deriv;
        tail += term;
        let a = term.abs();
        if a < min_abs {
            min_abs = a;
        }
        if a < tol {
            below += 1;
            if below >= 2 && k >= 3 {
                return Ok((tail, a + tol * 0.5));
            }
        } else {
            below = 0;
            if a > 4.0 * min_abs && k > 4 {
                return Err(Error::Truncation {
                    context: "em_tail_power diverging".into(),
                    partial: tail,
                    err_est: a,
                    work: k as u64,
                });
            }
        }
        let kk = 2 * k as i32;
        deriv *= (p + f64::from(kk) - 2.0) * (p + f64::from(kk) - 1.0) / (m * m);
    }
    Err(Error::Truncation { context: "em_tail_power order cap".into(), partial: tail, err_est: min_abs, work: 80 })
}

/// Euler–Maclaurin tail of ∫_M^∞ P₁(x − shift) g(x) dx at a breakpoint M.
/// Fails (for the caller to retry farther out) if the expansion has not
/// settled below `tol` within the order cap.
fn em_tail(g: &ExpPolyLog, m: f64, tol: f64) -> Result<(f64, f64)> {
    if g.mu.norm_sqr() == 0.0 && g.terms.len() == 1 && g.terms[0].log_pow == 0 && g.terms[0].coef.im == 0.0 {
        return em_tail_power(g.terms[0].coef.re, g.terms[0].power, m, tol);
    }
    let mut gk = g.clone();
    let mut tail = 0.0;
    let mut min_abs = f64::INFINITY;
    let mut below = 0u32;
    let mut last_abs = f64::INFINITY;
    for k in 1..=150usize {
        let term = -bern2k_over_fact(k) * gk.eval(m);
        tail += term;
        let a = term.abs();
        if a < min_abs {
            min_abs = a;
        }
        if a < tol {
            below += 1;
            if below >= 2 && k >= 3 {
                return Ok((tail, a + tol * 0.5));
            }
        } else {
            below = 0;
            // diverging expansion: retry at a larger M
            if a > 4.0 * min_abs && k > 4 {
                return Err(Error::Truncation {
                    context: "em_tail diverging".into(),
                    partial: tail,
                    err_est: a,
                    work: k as u64,
                });
            }
        }
        if a > 1e280 || !a.is_finite() {
            return Err(Error::Truncation {
                context: "em_tail overflow".into(),
                partial: tail,
                err_est: a,
                work: k as u64,
            });
        }
        last_abs = a;
        gk = gk.derivative().derivative();
        gk.prune(m, 1e-6 * tol / (1.0 + bern2k_over_fact(k + 1).abs()));
    }
    Err(Error::Truncation { context: "em_tail order cap".into(), partial: tail, err_est: last_abs, work: 150 })
}

fn p1_cell_exact(g: &ExpPolyLog, x0: f64, x1: f64, base: f64, rule: &GaussRule) -> (f64, f64) {
    let c = 0.5 * (x0 + x1);
    let h = 0.5 * (x1 - x0);
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    for (x, w) in rule.nodes.iter().zip(rule.weights.iter()) {
        let t = c + h * x;
        let v = g.eval(t);
        sum += w * v * (t - base - 0.5);
        abs_sum += w * v.abs();
    }
    (h * sum, h * abs_sum)
}

/// ∫_lower^∞ P₁(x − shift) g(x) dx with cells plus the Euler–Maclaurin tail.
///
/// Requires Re μ ≤ 0 and x > 0 over the range (log terms). For strongly
/// damped integrands (Re μ < −5) the tail is below machine noise once the
/// amplitude has decayed, and plain cell summation with the |P₁| ≤ 1/2
/// majorant is used instead of the expansion.
pub fn integrate_p1_exact(g: &ExpPolyLog, lower: f64, shift: f64, spec: &QuadSpec) -> Result<Eval> {
    if lower <= 0.0 {
        return Err(Error::Domain("integrate_p1_exact: lower bound must be positive".into()));
    }
    if g.mu.re > 0.0 {
        return Err(Error::Domain("integrate_p1_exact: growing exponential".into()));
    }
    if g.mu.im != 0.0 && g.mu.norm() > 5.95 {
        return Err(Error::Domain(format!(
            "integrate_p1_exact: oscillation rate |mu| = {:.3} too close to 2*pi for the tail expansion",
            g.mu.norm()
        )));
    }
    let rule = gauss_rule(spec.nodes_per_interval);
    let tol_em = 0.2 * spec.tol;
    let strongly_damped = g.mu.re < -5.0;

    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut fp_noise = 0.0;
    let mut cells = 0u64;
    let mut cell_target = 6u64;
    let mut prev_abs = f64::INFINITY;

    // breakpoints are shift + (m0 + i), indexed by integer i so floating
    // drift can never produce degenerate cells
    let m0 = (lower - shift).ceil();
    let mut idx: u64 = 0;
    let mut x0 = lower;

    loop {
        let bp = shift + (m0 + idx as f64);
        let (u0, u1, base) = if x0 < bp {
            // first (possibly partial) cell below the next breakpoint
            (x0, bp, shift + (m0 - 1.0 + idx as f64))
        } else {
            idx += 1;
            (bp, shift + (m0 + idx as f64), bp)
        };
        if u1 > u0 {
            let (v, vabs) = p1_cell_exact(g, u0, u1, base, &rule);
            if !v.is_finite() {
                return Err(Error::NonFinite { x: u0, context: "integrate_p1_exact".into() });
            }
            let y = v - comp;
            let s = sum + y;
            comp = (s - sum) - y;
            sum = s;
            fp_noise += f64::EPSILON * vabs;
            cells += 1;

            if strongly_damped {
                if vabs < prev_abs && cells >= 4 {
                    let r = vabs / prev_abs;
                    let bound = 0.5 * vabs * r / (1.0 - r).max(0.1);
                    if bound < spec.tol {
                        return Ok(Eval::new(sum, bound + fp_noise, cells));
                    }
                }
                prev_abs = vabs;
            }
        }
        x0 = u1;

        if !strongly_damped && cells >= cell_target {
            // u1 is always a breakpoint here (first partial cell ends on one)
            match em_tail(g, x0, tol_em) {
                Ok((tail, terr)) => {
                    return Ok(Eval::new(sum + tail, terr + fp_noise, cells));
                }
                Err(_) => {
                    cell_target = cells * 2;
                }
            }
        }
        if cells >= spec.max_intervals {
            return Err(Error::Truncation {
                context: "integrate_p1_exact".into(),
                partial: sum,
                err_est: fp_noise.max(spec.tol),
                work: cells,
            });
        }
    }
}

/// ∫_M^∞ e^{μx} Σ c·x^{−p} dx by repeated integration by parts (asymptotic
/// in 1/(|μ|M); returns the truncated sum and the first omitted term).
/// Used for the plain (non-P₁) oscillatory leading integrals.
pub fn plain_tail_by_parts(mu: Complex64, terms: &[(Complex64, f64)], m: f64) -> (Complex64, f64) {
    let mut total = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let em = (mu * m).exp();
    for &(c, p) in terms {
        // T_p = -e^{mu M} M^{-p}/mu + (p/mu) T_{p+1}
        let mut acc = Complex64::new(0.0, 0.0);
        let mut factor = -c / mu * em * m.powf(-p);
        let mut min_abs = f64::INFINITY;
        for k in 0..60 {
            let a = factor.norm();
            if a >= min_abs {
                break;
            }
            min_abs = a;
            acc += factor;
            factor *= (p + k as f64) / (mu * m);
            if factor.norm() < 1e-320 {
                min_abs = 0.0;
                break;
            }
        }
        total += acc;
        err += min_abs;
    }
    (total, err)
}

/// ∫_lower^∞ of a (possibly oscillatory) ExpPolyLog without the P₁ weight:
/// unit cells to M, then the by-parts tail. Requires μ ≠ 0 and no log terms.
pub fn integrate_plain_osc(g: &ExpPolyLog, lower: f64, spec: &QuadSpec) -> Result<Eval> {
    if g.mu.norm_sqr() == 0.0 || g.terms.iter().any(|t| t.log_pow > 0) {
        return Err(Error::Domain("integrate_plain_osc: needs exponential factor and pure powers".into()));
    }
    let rule = gauss_rule(spec.nodes_per_interval);
    let pmax = g.terms.iter().map(|t| t.power).fold(0.0, f64::max);
    let rate = g.mu.norm();
    let m_target = lower + ((20.0 + 10.0 * pmax) / rate).clamp(24.0, 4000.0).ceil();
    let mut sum = 0.0;
    let mut x0 = lower;
    let mut cells = 0u64;
    while x0 < m_target {
        let x1 = x0.floor() + 1.0;
        let x1 = if x1 <= x0 { x0 + 1.0 } else { x1.min(m_target) };
        let c = 0.5 * (x0 + x1);
        let h = 0.5 * (x1 - x0);
        let mut cell = 0.0;
        for (x, w) in rule.nodes.iter().zip(rule.weights.iter()) {
            cell += w * g.eval(c + h * x);
        }
        sum += h * cell;
        cells += 1;
        x0 = x1;
        if cells > spec.max_intervals {
            return Err(Error::Truncation {
                context: "integrate_plain_osc".into(),
                partial: sum,
                err_est: spec.tol,
                work: cells,
            });
        }
    }
    let plain: Vec<(Complex64, f64)> = g.terms.iter().map(|t| (t.coef, t.power)).collect();
    let (tail, terr) = plain_tail_by_parts(g.mu, &plain, m_target);
    Ok(Eval::new(sum + tail.re, terr + 1e-15 * sum.abs(), cells))
}

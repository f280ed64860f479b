//! Cross-validation suites: every identity the crate implements is checked
//! against an independent route or brute-force oracle, and every source
//! formula whose printed form failed oracle validation is documented with
//! the adopted variant and both residuals (the deviations ledger).

use crate::addison::{self, RefineParams};
use crate::clausen_l::{self, L4Method};
use crate::constants::{self, SomosMethod};
use crate::kinkelin_a::{self, GammaMomentMethod, GammaSinMethod, KinkelinMethod};
use crate::lerch;
use crate::negazeta_b::{self, AkMethod};
use crate::quad::exact::{integrate_p1_exact, ExpPolyLog};
use crate::quad::{self, QuadSpec, TailMode};
use crate::zetafun;
use crate::{Eval, Result, EULER_GAMMA, LN_SQRT_2PI};
use num_complex::Complex64;

/// Which invariant family to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Core,
    AppendixA,
    AppendixB,
    All,
}

/// One verified invariant: the worst residual observed and its tolerance.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, residual: f64, tolerance: f64, detail: impl Into<String>) -> Check {
    Check {
        name: name.to_string(),
        residual,
        tolerance,
        passed: residual.is_finite() && residual.abs() <= tolerance,
        detail: detail.into(),
    }
}

/// A resolved formula ambiguity: what was adopted, what was rejected, and
/// the numeric residual of each against the independent oracle.
#[derive(Debug, Clone)]
pub struct DeviationRecord {
    pub formula: String,
    pub adopted: String,
    pub adopted_residual: f64,
    pub rejected: String,
    pub rejected_residual: f64,
}

macro_rules! try_check {
    ($name:expr, $tol:expr, $body:expr) => {
        match (|| -> Result<(f64, String)> { $body })() {
            Ok((residual, detail)) => check($name, residual, $tol, detail),
            Err(e) => check($name, f64::INFINITY, $tol, format!("error: {e}")),
        }
    };
}

fn max_abs(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// Independent Fourier oracle for Cl_n, Euler–Maclaurin corrected tail.
fn clausen_fourier_oracle(n: u32, theta: f64) -> f64 {
    let m = 100_000u64;
    let mut re = 0.0;
    let mut im = 0.0;
    for k in (1..=m).rev() {
        let kf = k as f64;
        let w = kf.powi(-(n as i32));
        re += w * (theta * kf).cos();
        im += w * (theta * kf).sin();
    }
    let mf = m as f64 + 1.0;
    let mu = Complex64::new(0.0, theta);
    let (integral, _) =
        crate::quad::exact::plain_tail_by_parts(mu, &[(Complex64::new(1.0, 0.0), f64::from(n))], mf);
    let gm = (mu * mf).exp() * mf.powi(-(n as i32));
    let gp = gm * (mu - Complex64::new(f64::from(n) / mf, 0.0));
    let tail = integral - 0.5 * gm - gp / 12.0;
    if n % 2 == 0 {
        im + tail.im
    } else {
        re + tail.re
    }
}

fn gamma1_of(a: f64) -> f64 {
    // closed values for the deviation checks
    let g1 = -0.072_815_845_483_676_72;
    let ln2 = std::f64::consts::LN_2;
    if a == 1.0 {
        g1
    } else if a == 0.5 {
        g1 - 2.0 * EULER_GAMMA * ln2 - ln2 * ln2
    } else {
        f64::NAN
    }
}

pub fn core_suite(tol_floor: f64) -> Vec<Check> {
    let t = |builtin: f64| builtin.max(tol_floor);
    let mut out = Vec::new();

    out.push(try_check!("lerch representation vs series grid", t(1e-9), {
        let mut worst = 0.0f64;
        let mut points = 0;
        for &z in &[-0.9, -0.5, 0.0, 0.5, 0.9] {
            for &s in &[0.0, 0.5, 1.0, 2.0, 3.0] {
                for &a in &[0.5, 1.0, 2.5] {
                    let rep = lerch::lerch_phi(z, s, a)?;
                    let orc = lerch::lerch_series(z, s, a, 4000)?;
                    worst = worst.max((rep.value - orc.value).abs());
                    points += 1;
                }
            }
        }
        for &s in &[2.0, 3.0] {
            for &a in &[0.5, 1.0, 2.5] {
                let rep = lerch::lerch_phi(1.0, s, a)?;
                let orc = lerch::lerch_series(1.0, s, a, 2_000_000)?;
                worst = worst.max((rep.value - orc.value).abs() - orc.err_est).max(0.0);
                points += 1;
            }
        }
        Ok((worst, format!("{points} grid points")))
    }));

    out.push(try_check!("polylog unit moment gives zeta(s+1)", t(1e-8), {
        let mut worst = 0.0f64;
        for s in [1.0, 2.0, 3.0] {
            let i = quad::integrate_finite(
                |x| lerch::polylog(s, x).map(|e| e.value / x).unwrap_or(f64::NAN),
                0.0,
                1.0,
                &QuadSpec::default().with_tol(1e-10),
            )?;
            worst = worst.max((i.value - zetafun::zeta(s + 1.0)?.value).abs());
        }
        Ok((worst, "s in {1, 2, 3}".into()))
    }));

    out.push(try_check!("gauss 2F1 argument transformation", t(1e-10), {
        let mut worst = 0.0f64;
        for &s in &[2.0f64, 3.0] {
            for &alpha in &[0.5, 1.0, 2.0] {
                let lhs = if alpha < 1.0 {
                    lerch::hyp2f1(1.0, s, s + 1.0, -alpha)?.value / s
                } else {
                    lerch::hyp2f1_log_form(s as u32, alpha)
                };
                let rhs = lerch::hyp2f1(1.0, 1.0, s + 1.0, alpha / (1.0 + alpha))?.value
                    / (s * (1.0 + alpha));
                worst = worst.max((lhs - rhs).abs());
            }
        }
        Ok((worst, "s in {2,3}, alpha in {1/2,1,2}".into()))
    }));

    out.push(try_check!("clausen duplication formula", t(1e-8), {
        let mut worst = 0.0f64;
        for &theta in &[
            std::f64::consts::FRAC_PI_6,
            std::f64::consts::FRAC_PI_4,
            std::f64::consts::FRAC_PI_3,
            2.0 * std::f64::consts::PI / 5.0,
        ] {
            let lhs = 0.5 * clausen_l::clausen(2, 2.0 * theta)?.value;
            let rhs = clausen_l::clausen(2, theta)?.value
                - clausen_l::clausen(2, std::f64::consts::PI - theta)?.value;
            worst = worst.max((lhs - rhs).abs());
        }
        Ok((worst, "four angles".into()))
    }));

    out.push(try_check!("clausen parity", t(1e-9), {
        let mut worst = 0.0f64;
        for &theta in &[std::f64::consts::FRAC_PI_6, std::f64::consts::FRAC_PI_4, 1.0] {
            let a = clausen_l::clausen(2, theta)?.value;
            let b = clausen_l::clausen(2, 2.0 * std::f64::consts::PI - theta)?.value;
            worst = worst.max((a + b).abs());
        }
        Ok((worst, String::new()))
    }));

    out.push(try_check!("mod-4 L at odd integers vs Bernoulli closed form", t(1e-9), {
        let mut worst = 0.0f64;
        for m in [0u32, 1] {
            let s = f64::from(2 * m + 1);
            let v = clausen_l::dirichlet_l4(s, L4Method::HurwitzCombo)?.value;
            worst = worst.max((v - clausen_l::l4_odd_closed_form(m)).abs());
        }
        Ok((worst, "m in {0, 1}".into()))
    }));

    out.push(try_check!("mod-4 L refinement series vs Hurwitz combination", t(1e-7), {
        let mut worst = 0.0f64;
        for &s in &[0.5, 1.0, 2.0, 3.0] {
            let a = clausen_l::dirichlet_l4(s, L4Method::Addison)?.value;
            let b = clausen_l::dirichlet_l4(s, L4Method::HurwitzCombo)?.value;
            worst = worst.max((a - b).abs());
        }
        Ok((worst, "s in {0.5, 1, 2, 3}".into()))
    }));

    out.push(try_check!("catalan four routes vs printed digits", t(5e-8), {
        let routes = [
            clausen_l::clausen(2, std::f64::consts::FRAC_PI_2)?.value,
            clausen_l::catalan()?.value,
            clausen_l::dirichlet_l4(2.0, L4Method::HurwitzCombo)?.value,
            clausen_l::dirichlet_l4(2.0, L4Method::Addison)?.value,
        ];
        let worst = max_abs(routes.iter().map(|v| v - 0.915_965_59));
        Ok((worst, format!("{routes:?}")))
    }));

    out.push(try_check!("somos three routes", t(1e-8), {
        let mut worst = 0.0f64;
        for &tt in &[1.5, 2.0, 3.0, 10.0] {
            let a = constants::somos_ln(tt, SomosMethod::P1Integral)?;
            let b = constants::somos_ln(tt, SomosMethod::ExpIntegral)?;
            let c = constants::somos_ln(tt, SomosMethod::PolylogSeries)?;
            worst = worst
                .max((a.value - c.value).abs())
                .max((b.value - c.value).abs() - (b.err_est + c.err_est)).max(0.0);
        }
        Ok((worst, "t in {1.5, 2, 3, 10}".into()))
    }));

    out.push(try_check!("somos recurrence solution", t(1e-7), {
        let mut lg = 0.0;
        let mut worst = 0.0f64;
        for n in 1..=6u32 {
            lg = f64::from(n).ln() + 2.0 * lg;
            worst = worst.max((constants::somos_recurrence(n, 2.0)?.value - lg).abs());
        }
        Ok((worst, "n <= 6, t = 2".into()))
    }));

    out.push(try_check!("euler sums at integer shifts", t(1e-7), {
        let z3 = zetafun::zeta(3.0)?.value;
        let z4 = zetafun::zeta(4.0)?.value;
        let r1 = (constants::euler_sum_h(2.0, 1.0)?.value - z3).abs();
        let r2 = (constants::euler_sum_h(3.0, 1.0)?.value - z4 / 4.0).abs();
        Ok((r1.max(r2), String::new()))
    }));

    out.push(try_check!("gamma dyadic-block and floor-log series", t(1e-6), {
        let a = (addison::gamma_addison()?.value - EULER_GAMMA).abs();
        let v = (addison::gamma_vacca()?.value - EULER_GAMMA).abs();
        Ok((a.max(v), String::new()))
    }));

    out.push(try_check!("zeta-prime refinement base independence", t(1e-6), {
        let p = RefineParams::default().with_tol(1e-8);
        let i = zetafun::zeta_nderiv(1, 2.0)?.value;
        let mut worst = 0.0f64;
        for k in 2..=4u32 {
            worst = worst.max((addison::zeta_prime_addison(2.0, k, &p)?.value - i).abs());
        }
        Ok((worst, "k in {2, 3, 4} vs integral".into()))
    }));

    out.push(try_check!("glaisher chain", t(1e-8), {
        let ln_a = constants::glaisher_ln_a()?.value;
        let r = (1.0 / 12.0 - ln_a - zetafun::zeta_prime_neg(2)?.value).abs();
        Ok((r, String::new()))
    }));

    out.push(try_check!("hurwitz-prime series vs integral route", t(1e-5), {
        let p = RefineParams::default().with_tol(1e-8);
        let mut worst = 0.0f64;
        for &s in &[2.0, 3.0] {
            for &a in &[1.0, 2.0] {
                let series = addison::hurwitz_prime_addison(s, a, &p)?.value;
                let integral = zetafun::hurwitz_sderiv(s, a)?.value;
                worst = worst.max((series - integral).abs());
            }
        }
        Ok((worst, "s in {2,3}, a in {1,2}".into()))
    }));

    out.push(try_check!("log-gamma refinement series", t(1e-6), {
        let p = RefineParams::default().with_tol(1e-8);
        let r1 = (addison::loggamma_addison(0.5, &p)?.value - 0.5 * std::f64::consts::PI.ln()).abs();
        let r2 = addison::loggamma_addison(1.0, &p)?.value.abs();
        let r3 = addison::loggamma_addison(2.0, &p)?.value.abs();
        Ok((r1.max(r2).max(r3), String::new()))
    }));

    out.push(try_check!("ln sqrt(2pi) series vs integral", t(1e-6), {
        let s = addison::log_sqrt_2pi_addison(&RefineParams::default().with_tol(1e-8))?.value;
        let q = quad::integrate_finite(
            statrs::function::gamma::ln_gamma,
            0.0,
            1.0,
            &QuadSpec::default(),
        )?
        .value;
        Ok(((s - LN_SQRT_2PI).abs().max((s - q).abs()), String::new()))
    }));

    out.push(try_check!("stieltjes laurent expansion consistency", t(1e-5), {
        let g = [EULER_GAMMA, -0.072_815_845_483_676_72, -0.009_690_363_192_872_318, 0.002_053_834_420_303_346];
        let mut worst = 0.0f64;
        for &h in &[0.1, -0.1, 0.05, -0.05] {
            let s = 1.0 + h;
            let lhs = h * (zetafun::hurwitz(s, 1.0)?.value - 1.0 / h);
            let mut rhs = 0.0;
            let mut fact = 1.0;
            for (k, gk) in g.iter().enumerate() {
                if k > 0 {
                    fact *= k as f64;
                }
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                rhs += sign * gk * h.powi(k as i32) / fact;
            }
            worst = worst.max((lhs - rhs * h).abs());
        }
        Ok((worst, String::new()))
    }));

    out.push(try_check!("stieltjes difference series", t(1e-7), {
        let mut worst = 0.0f64;
        for &(a, b) in &[(1.0, 0.5), (0.75, 0.25)] {
            let lhs = zetafun::stieltjes(1, a)?.value - zetafun::stieltjes(1, b)?.value;
            let mut s = 0.0;
            let terms = 2_000_000u64;
            for n in (0..terms).rev() {
                let nf = n as f64;
                s += (nf + a).ln() / (nf + a) - (nf + b).ln() / (nf + b);
            }
            let x = terms as f64;
            s += (b - a) * x.ln() / x;
            worst = worst.max((lhs - s).abs());
        }
        Ok((worst, String::new()))
    }));

    out.push(try_check!("quadrature anchor 1/2 - gamma", t(1e-10), {
        let s = QuadSpec::default().with_tail_mode(TailMode::Aitken);
        let v = quad::integrate_p1(|x| x.powi(-2), 1.0, &s)?.value;
        Ok(((v - (0.5 - EULER_GAMMA)).abs(), String::new()))
    }));

    out.push(try_check!("mod-4 L derivative at 1", t(1e-5), {
        let v = clausen_l::l4_prime1()?.value;
        let lg = statrs::function::gamma::ln_gamma(0.25) - statrs::function::gamma::ln_gamma(0.75);
        let diff = std::f64::consts::PI * ((8.0 * std::f64::consts::PI).ln() + EULER_GAMMA - 2.0 * lg);
        let closed = 0.25 * (-2.0 * std::f64::consts::PI * std::f64::consts::LN_2 + diff);
        let h = 1e-3;
        let fd = (clausen_l::dirichlet_l4(1.0 + h, L4Method::HurwitzCombo)?.value
            - clausen_l::dirichlet_l4(1.0 - h, L4Method::HurwitzCombo)?.value)
            / (2.0 * h);
        Ok(((v - closed).abs().max((v - fd).abs()), String::new()))
    }));

    out
}

pub fn appendix_a_suite(tol_floor: f64) -> Vec<Check> {
    let t = |builtin: f64| builtin.max(tol_floor);
    let mut out = Vec::new();

    out.push(try_check!("kinkelin four routes", t(1e-6), {
        use KinkelinMethod::*;
        let mut vals = Vec::new();
        for m in [Laplace, GammaMoment, ZetaSeries, P1Correction] {
            vals.push(kinkelin_a::kinkelin(m)?.value);
        }
        let worst = max_abs(vals.iter().map(|v| v + 0.165_421));
        let mut spread = 0.0f64;
        for i in 0..vals.len() {
            for j in i + 1..vals.len() {
                spread = spread.max((vals[i] - vals[j]).abs());
            }
        }
        Ok((worst.max(spread), format!("{vals:?}")))
    }));

    out.push(try_check!("kinkelin P1 correction near two percent", t(0.005), {
        let (explicit, corr) = kinkelin_a::kinkelin_p1_split()?;
        let frac = (corr.value / (explicit + corr.value)).abs();
        Ok(((frac - 0.02).abs(), format!("fraction {frac:.5}")))
    }));

    out.push(try_check!("gamma first moment, three routes", t(1e-5), {
        use GammaMomentMethod::*;
        let mut worst = 0.0f64;
        for m in [TaylorSeries, Laplace, Direct] {
            worst = worst.max((kinkelin_a::gamma_moment_x(m)?.value - 0.922_746).abs());
        }
        Ok((worst, "vs digit-corrected reference 0.922746".into()))
    }));

    out.push(try_check!("gamma moment taylor arrangements", t(1e-8), {
        let (f1, f2) = kinkelin_a::gamma_moment_x_taylor_forms()?;
        Ok(((f1.value - f2.value).abs(), String::new()))
    }));

    out.push(try_check!("lambda independence of the laplace moments", t(1e-6), {
        let mut worst = 0.0f64;
        let base_x = kinkelin_a::gamma_moment_x_laplace(1.0)?.value;
        let base_s = kinkelin_a::gamma_moment_sin_laplace(1.0, 1.0)?.value;
        for &lam in &[0.5, 2.0] {
            worst = worst.max((kinkelin_a::gamma_moment_x_laplace(lam)?.value - base_x).abs());
            worst = worst.max((kinkelin_a::gamma_moment_sin_laplace(1.0, lam)?.value - base_s).abs());
        }
        Ok((worst, "lambda in {1/2, 1, 2}".into()))
    }));

    out.push(try_check!("gamma sine moment, three routes", t(1e-5), {
        use GammaSinMethod::*;
        let mut worst = 0.0f64;
        for m in [Laplace, Hypergeometric, Antiderivative] {
            worst = worst.max((kinkelin_a::gamma_moment_sin(1.0, m)?.value - 0.872_427).abs());
        }
        Ok((worst, "vs printed digits 0.872427".into()))
    }));

    out.push(try_check!("hypergeometric vs antiderivative moment forms", t(1e-7), {
        let mut worst = 0.0f64;
        for &alpha in &[0.3, 1.0, std::f64::consts::FRAC_PI_2] {
            let a = kinkelin_a::gamma_moment_sin(alpha, GammaSinMethod::Antiderivative)?.value;
            let b = kinkelin_a::gamma_moment_sin(alpha, GammaSinMethod::Hypergeometric)?.value;
            worst = worst.max((a - b).abs());
        }
        Ok((worst, "alpha in {0.3, 1, pi/2}".into()))
    }));

    out.push(try_check!("double-series reordering closed value", t(1e-6), {
        let ln_a = constants::glaisher_ln_a()?.value;
        let closed = 11.0 / 6.0 + EULER_GAMMA / 6.0 - 2.0 * ln_a - 2.0 * std::f64::consts::LN_2;
        let n = 2_000_000u64;
        let mut s = 0.0;
        for j in (2..=n).rev() {
            let jf = j as f64;
            s += jf * (jf + 1.0) * (1.0 / jf).ln_1p() - (6.0 * jf * jf + 3.0 * jf - 1.0) / (6.0 * jf);
        }
        s += 1.0 / (12.0 * n as f64);
        Ok(((s - closed).abs(), String::new()))
    }));

    out.push(try_check!("glaisher product limit", t(1e-4), {
        let ln_a = constants::glaisher_ln_a()?.value;
        let n = 10_000u64;
        let nf = n as f64;
        let mut s = 0.0;
        for k in 1..=n {
            let kf = k as f64;
            s += kf * kf.ln();
        }
        s += -(nf * nf / 2.0 + nf / 2.0 + 1.0 / 12.0) * nf.ln() + nf * nf / 4.0;
        Ok(((s - ln_a).abs(), "partial products at N = 10^4".into()))
    }));

    out.push(try_check!("1F2 degenerates to the x-moment as alpha -> 0", t(1e-6), {
        let e = kinkelin_a::gamma_moment_sin(1e-4, GammaSinMethod::Hypergeometric)?;
        let x = kinkelin_a::gamma_moment_x(GammaMomentMethod::TaylorSeries)?;
        Ok(((e.value / 1e-4 - x.value).abs(), String::new()))
    }));

    out
}

pub fn appendix_b_suite(tol_floor: f64) -> Vec<Check> {
    let t = |builtin: f64| builtin.max(tol_floor);
    let mut out = Vec::new();

    out.push(try_check!("bernoulli special value sum", t(1e-6), {
        let mut direct = 0.0;
        let mut fact = 1.0;
        for n in 1..=18u32 {
            fact *= f64::from(n);
            direct += zetafun::stieltjes(n, 1.0)?.value / fact;
        }
        Ok(((direct - (0.5 - EULER_GAMMA)).abs(), String::new()))
    }));

    out.push(try_check!("bernoulli bridge on the grid", t(1e-5), {
        let mut worst = 0.0f64;
        for (k, q) in [(2u32, 0.0), (3, 0.0), (2, 0.3), (1, 1.0)] {
            let (rec, ser) = negazeta_b::bernoulli_stieltjes_check(k, q)?;
            worst = worst.max((rec.value - ser.value).abs());
        }
        Ok((worst, String::new()))
    }));

    out.push(try_check!("ak shift law", t(1e-5), {
        let mut worst = 0.0f64;
        for k in [1u32, 2, 3] {
            for &q in &[0.3, 0.5, 0.7] {
                let hi = negazeta_b::a_k(f64::from(k + 1), q, AkMethod::StieltjesSum)?.value;
                let lo = negazeta_b::a_k(f64::from(k), q, AkMethod::StieltjesSum)?.value;
                let expect = f64::from(k) * q.powi(k as i32 - 1) * q.ln();
                worst = worst.max((hi - lo - expect).abs());
            }
        }
        Ok((worst, String::new()))
    }));

    out.push(try_check!("ak derivative law", t(1e-4), {
        let h = 1e-3;
        let mut worst = 0.0f64;
        for k in [1u32, 2] {
            let kf = f64::from(k);
            for &q in &[0.3, 0.5, 0.7] {
                let up = negazeta_b::a_k(kf + 1.0, q + h, AkMethod::StieltjesSum)?.value;
                let dn = negazeta_b::a_k(kf + 1.0, q - h, AkMethod::StieltjesSum)?.value;
                let rhs = (kf + 1.0)
                    * (negazeta_b::a_k(kf, q, AkMethod::StieltjesSum)?.value
                        + zetafun::bernoulli_poly(k, q) / kf);
                worst = worst.max(((up - dn) / (2.0 * h) - rhs).abs());
            }
        }
        Ok((worst, String::new()))
    }));

    out.push(try_check!("ak mean zero", t(1e-4), {
        let rule = quad::gauss_rule(16);
        let mut worst = 0.0f64;
        for k in [1.0f64, 2.0] {
            let mut total = 0.0;
            for seg in 0..4 {
                let (a, b) = (0.25 * seg as f64, 0.25 * (seg as f64 + 1.0));
                let c = 0.5 * (a + b);
                let h = 0.5 * (b - a);
                for (x, w) in rule.nodes.iter().zip(rule.weights.iter()) {
                    total += h * w * negazeta_b::a_k(k, c + h * x, AkMethod::StieltjesSum)?.value;
                }
            }
            worst = worst.max(total.abs());
        }
        Ok((worst, String::new()))
    }));

    out.push(try_check!("a2 fourier expansion", t(1e-4), {
        let n_terms = 1_000_000u64;
        let pi = std::f64::consts::PI;
        let mut worst = 0.0f64;
        for &q in &[0.25, 1.0 / 3.0, 0.5] {
            let w = 2.0 * pi * q;
            let mut c_sum = 0.0;
            let mut s_sum = 0.0;
            for n in (1..=n_terms).rev() {
                let nf = n as f64;
                c_sum += nf.ln() * (w * nf).cos() / (nf * nf);
                s_sum += (w * nf).sin() / (nf * nf);
            }
            let closed = (1.0 - EULER_GAMMA - crate::LN_2PI) * (q * q - q + 1.0 / 6.0)
                - c_sum / (pi * pi)
                + s_sum / (2.0 * pi);
            let direct = negazeta_b::a_k(2.0, q, AkMethod::StieltjesSum)?.value;
            worst = worst.max((direct - closed).abs());
        }
        Ok((worst, "q in {1/4, 1/3, 1/2}".into()))
    }));

    out.push(try_check!("binet kernel three forms", t(1e-7), {
        let mut worst = 0.0f64;
        for &s in &[0.5, 1.0, 2.0] {
            let (f1, f2, f3) = negazeta_b::binet_forms(s)?;
            worst = worst.max((f1.value - f2.value).abs()).max((f1.value - f3.value).abs());
        }
        Ok((worst, "s in {1/2, 1, 2}".into()))
    }));

    out.push(try_check!("stirling-binet closure", t(1e-8), {
        let mut worst = 0.0f64;
        for &s in &[1.0, 2.5] {
            let (via_a1, binet) = negazeta_b::loggamma_binet_pair(s)?;
            worst = worst.max((via_a1.value - binet.value).abs());
        }
        Ok((worst, String::new()))
    }));

    out.push(try_check!("rational-argument summation relation", t(1e-5), {
        let mut worst = 0.0f64;
        for (k, p, q, b) in [(2u32, 1u32, 1u32, 0.3), (1, 2, 1, 0.0), (2, 1, 2, 0.0)] {
            let (l, r) = negazeta_b::ak_sum_relation_pq(k, p, q, b)?;
            worst = worst.max((l.value - r.value).abs());
        }
        Ok((worst, String::new()))
    }));

    out.push(try_check!("prime-power summation relation", t(1e-4), {
        let mut worst = 0.0f64;
        for (k, p) in [(2u32, 2u32), (2, 3), (3, 2)] {
            let (l, r) = negazeta_b::ak_prime_relation(k, p, 0)?;
            worst = worst.max((l.value - r.value).abs());
        }
        Ok((worst, "announced identities, numerically confirmed".into()))
    }));

    out.push(try_check!("half-argument closed value", t(1e-5), {
        let lhs = negazeta_b::a_k(2.0, 0.5, AkMethod::StieltjesSum)?.value;
        let closed = -zetafun::bernoulli_number(2) * 0.5 * std::f64::consts::LN_2
            - 2.0 * 0.5 * zetafun::zeta_prime_neg(2)?.value;
        Ok(((lhs - closed).abs(), String::new()))
    }));

    out
}

pub fn run_suite(suite: Suite, tol_floor: f64) -> Vec<Check> {
    match suite {
        Suite::Core => core_suite(tol_floor),
        Suite::AppendixA => appendix_a_suite(tol_floor),
        Suite::AppendixB => appendix_b_suite(tol_floor),
        Suite::All => {
            let mut v = core_suite(tol_floor);
            v.extend(appendix_a_suite(tol_floor));
            v.extend(appendix_b_suite(tol_floor));
            v
        }
    }
}

/// Recompute every resolved formula ambiguity with both variants.
pub fn deviation_records() -> Vec<DeviationRecord> {
    let mut out = Vec::new();
    let p8 = RefineParams::default().with_tol(1e-8);

    // zeta-prime refinement family, base 2: prefactor sign
    {
        let oracle = zetafun::zeta_nderiv(1, 2.0).map(|e| e.value).unwrap_or(f64::NAN);
        let adopted = addison::zeta_prime_addison(2.0, 2, &p8).map(|e| e.value).unwrap_or(f64::NAN);
        // the opposite sign flips the series contribution
        let series = adopted + 1.0; // series value itself (explicit part is −1/(s−1)² = −1)
        let rejected = -series - 1.0;
        out.push(DeviationRecord {
            formula: "zeta-derivative refinement series, base 2 (prefactor sign)".into(),
            adopted: "+1/4 prefactor on the second-difference bracket".into(),
            adopted_residual: (adopted - oracle).abs(),
            rejected: "printed -1/4 prefactor".into(),
            rejected_residual: (rejected - oracle).abs(),
        });
    }

    // zeta-prime refinement family, base 4: inner scale
    {
        let oracle = zetafun::zeta_nderiv(1, 2.0).map(|e| e.value).unwrap_or(f64::NAN);
        let adopted = addison::zeta_prime_addison(2.0, 4, &p8).map(|e| e.value).unwrap_or(f64::NAN);
        // rejected variant: scale 3^{-n} under the 4^{-n} outer weight
        let ln4 = 4f64.ln();
        let inner = |b4: f64, j: u64| {
            let n = (-(b4.ln()) / ln4).round();
            let b = 3f64.powi(-(n as i32));
            let lf = |y: f64| {
                let u = b * y + 1.0;
                u.ln() / (u * u)
            };
            let jf = j as f64;
            0.125
                * (2.0 * lf(jf + 0.25) + 2.0 * lf(jf + 0.5) + 2.0 * lf(jf + 0.75)
                    - 3.0 * lf(jf)
                    - 3.0 * lf(jf + 1.0))
        };
        let rejected = addison::refine_sum(4, inner, &p8)
            .map(|e| e.value - 1.0)
            .unwrap_or(f64::NAN);
        out.push(DeviationRecord {
            formula: "zeta-derivative refinement series, base 4 (inner scale)".into(),
            adopted: "scale b = 4^{-n} matching the outer weight".into(),
            adopted_residual: (adopted - oracle).abs(),
            rejected: "printed scale b = 3^{-n}".into(),
            rejected_residual: (rejected - oracle).abs(),
        });
    }

    // ln sqrt(2pi) series: outer weight
    {
        let adopted = addison::log_sqrt_2pi_addison(&p8).map(|e| e.value).unwrap_or(f64::NAN);
        // rejected: outer weight 2^{-n} with the same bracket
        let inner = |b: f64, j: u64| {
            let jf = j as f64;
            let main = (jf + 1.0) * ((b * jf + b + 1.0) / (b * jf + b)).ln()
                - (2.0 * jf + 1.0) * ((2.0 * b * jf + b + 2.0) / (2.0 * b * jf + b)).ln();
            if j == 0 {
                main
            } else {
                main + jf * ((b * jf + 1.0) / (b * jf)).ln()
            }
        };
        let rejected = addison::refine_sum(2, inner, &p8)
            .map(|e| 0.75 - 0.25 * e.value)
            .unwrap_or(f64::NAN);
        out.push(DeviationRecord {
            formula: "log-gamma integral series (outer weight vs scale)".into(),
            adopted: "printed form: outer 4^{-n} with scale b = 2^{-n}".into(),
            adopted_residual: (adopted - LN_SQRT_2PI).abs(),
            rejected: "outer 2^{-n} with scale b = 2^{-n}".into(),
            rejected_residual: (rejected - LN_SQRT_2PI).abs(),
        });
    }

    // log-gamma series explicit term
    {
        let target = 0.5 * std::f64::consts::PI.ln();
        let adopted = addison::loggamma_addison(0.5, &p8).map(|e| e.value).unwrap_or(f64::NAN);
        let z: f64 = 0.5;
        let rejected = adopted - (z - 0.5) * z.ln() + (z - 0.5);
        out.push(DeviationRecord {
            formula: "log-gamma refinement series (explicit term)".into(),
            adopted: "(z - 1/2) ln z - z + 1".into(),
            adopted_residual: (adopted - target).abs(),
            rejected: "printed (z - 1/2) - z + 1".into(),
            rejected_residual: (rejected - target).abs(),
        });
    }

    // first-Stieltjes series: the -ln^2(a)/2 term
    {
        let a: f64 = 0.5;
        let target = gamma1_of(a);
        let adopted = addison::stieltjes1_addison(a, &p8).map(|e| e.value).unwrap_or(f64::NAN);
        let rejected = adopted + 0.5 * a.ln() * a.ln();
        out.push(DeviationRecord {
            formula: "first Stieltjes refinement series (constant term)".into(),
            adopted: "gamma_1(a) = ln a/(2a) - ln^2 a/2 - series".into(),
            adopted_residual: (adopted - target).abs(),
            rejected: "printed without the -ln^2 a/2 term".into(),
            rejected_residual: (rejected - target).abs(),
        });
    }

    // odd Clausen bracket sign
    {
        let theta: f64 = 0.8;
        let oracle = clausen_fourier_oracle(3, theta);
        let adopted = clausen_l::clausen(3, theta).map(|e| e.value).unwrap_or(f64::NAN);
        // rejected kernel: -[theta sin - (n/x) cos] instead of -[theta sin + (n/x) cos]
        let mut g = ExpPolyLog::new(Complex64::new(0.0, theta));
        g.push(Complex64::new(0.0, theta), 3.0, 0);
        g.push(Complex64::new(3.0, 0.0), 4.0, 0);
        let rejected = (|| -> Result<f64> {
            let i2 = integrate_p1_exact(&g, 1.0, 0.0, &QuadSpec::default())?;
            let mut first = ExpPolyLog::new(Complex64::new(0.0, theta));
            first.push(Complex64::new(1.0, 0.0), 3.0, 0);
            let i1 = crate::quad::exact::integrate_plain_osc(&first, 1.0, &QuadSpec::default())?;
            Ok(0.5 * theta.cos() + i1.value + i2.value)
        })()
        .unwrap_or(f64::NAN);
        out.push(DeviationRecord {
            formula: "odd Clausen representation (bracket sign)".into(),
            adopted: "-[theta sin + (n/x) cos] under the sawtooth weight".into(),
            adopted_residual: (adopted - oracle).abs(),
            rejected: "printed -[theta sin - (n/x) cos]".into(),
            rejected_residual: (rejected - oracle).abs(),
        });
    }

    // Lerch s-derivative bracket sign
    {
        let (z, s, a) = (0.4, 1.5, 1.2);
        let h = 1e-4;
        let oracle = (|| -> Result<f64> {
            Ok((lerch::lerch_phi(z, s + h, a)?.value - lerch::lerch_phi(z, s - h, a)?.value) / (2.0 * h))
        })()
        .unwrap_or(f64::NAN);
        let adopted = lerch::lerch_phi_sderiv(z, s, a).map(|e| e.value).unwrap_or(f64::NAN);
        let rejected = (|| -> Result<f64> {
            // flip the sign of the s-weighted log term
            let mu = z.ln();
            let za = (-a * mu).exp();
            let mut g = ExpPolyLog::new(Complex64::new(mu, 0.0));
            g.push(Complex64::new(za * mu, 0.0), s, 1);
            g.push(Complex64::new(za, 0.0), s + 1.0, 0);
            g.push(Complex64::new(za * s, 0.0), s + 1.0, 1);
            let i = integrate_p1_exact(&g, 1.0 + a, a, &QuadSpec::default())?;
            let first = quad::integrate_semi_inf(
                |x: f64| (mu * x).exp() * (x + a).ln() * (x + a).powf(-s),
                1.0,
                &QuadSpec::default(),
            )?;
            Ok(-a.ln() * a.powf(-s) - 0.5 * z * (a + 1.0).ln() * (a + 1.0).powf(-s)
                - first.value
                - i.value)
        })()
        .unwrap_or(f64::NAN);
        out.push(DeviationRecord {
            formula: "Lerch s-derivative representation (last bracket term sign)".into(),
            adopted: "-s z^x ln(x+a) (x+a)^{-s-1} inside the bracket".into(),
            adopted_residual: (adopted - oracle).abs(),
            rejected: "printed +s term".into(),
            rejected_residual: (rejected - oracle).abs(),
        });
    }

    // fractional-part rearrangement of the floor-log series
    {
        let floor_form = addison::gamma_vacca().map(|e| e.value).unwrap_or(f64::NAN);
        let frac_form = addison::vacca_fractional_variant(4_000_000);
        out.push(DeviationRecord {
            formula: "alternating floor-log series (fractional-part rearrangement)".into(),
            adopted: "floor form, paired-term summation".into(),
            adopted_residual: (floor_form - EULER_GAMMA).abs(),
            rejected: "printed fractional-part variant (converges to 1 - ln2/2)".into(),
            rejected_residual: (frac_form - EULER_GAMMA).abs(),
        });
    }

    // Kinkelin Gamma-moment relation integrand
    {
        let target = -0.165_421_143_700_450_9;
        let adopted = kinkelin_a::kinkelin(KinkelinMethod::GammaMoment).map(|e| e.value).unwrap_or(f64::NAN);
        let gm = kinkelin_a::gamma_moment_x(GammaMomentMethod::Direct).map(|e| e.value).unwrap_or(f64::NAN);
        let rejected = 1.0 / 12.0 - 0.25 * crate::LN_2PI + gm;
        out.push(DeviationRecord {
            formula: "Kinkelin via the unit Gamma moment (integrand reading)".into(),
            adopted: "x ln Gamma(x) under the integral".into(),
            adopted_residual: (adopted - target).abs(),
            rejected: "printed x Gamma(x)".into(),
            rejected_residual: (rejected - target).abs(),
        });
    }

    // Glaisher relation coefficient
    {
        let zp2 = zetafun::zeta_nderiv(1, 2.0).map(|e| e.value).unwrap_or(f64::NAN);
        let pi = std::f64::consts::PI;
        let target = 1.0 / 12.0 - zetafun::zeta_prime_neg(2).map(|e| e.value).unwrap_or(f64::NAN);
        let adopted = (EULER_GAMMA + crate::LN_2PI) / 12.0 - zp2 / (2.0 * pi * pi);
        let rejected = (EULER_GAMMA + crate::LN_2PI) / 12.0 - zp2 / (pi * pi);
        out.push(DeviationRecord {
            formula: "ln A from the zeta derivative at 2 (denominator)".into(),
            adopted: "ln A = (gamma + ln 2pi)/12 - zeta'(2)/(2 pi^2)".into(),
            adopted_residual: (adopted - target).abs(),
            rejected: "printed -zeta'(2)/pi^2".into(),
            rejected_residual: (rejected - target).abs(),
        });
    }

    // unit Gamma-moment digits
    {
        let computed = kinkelin_a::gamma_moment_x(GammaMomentMethod::Direct).map(|e| e.value).unwrap_or(f64::NAN);
        out.push(DeviationRecord {
            formula: "unit Gamma-moment reference digits".into(),
            adopted: "0.922746 (computed 0.9227459507 by three routes)".into(),
            adopted_residual: (computed - 0.922_746).abs(),
            rejected: "printed 0.92746".into(),
            rejected_residual: (computed - 0.927_46).abs(),
        });
    }

    // double-series reordering bracket sign
    {
        let ln_a = constants::glaisher_ln_a().map(|e| e.value).unwrap_or(f64::NAN);
        let closed = 11.0 / 6.0 + EULER_GAMMA / 6.0 - 2.0 * ln_a - 2.0 * std::f64::consts::LN_2;
        let n = 200_000u64;
        let mut diff = 0.0;
        let mut sum = 0.0;
        for j in 2..=n {
            let jf = j as f64;
            let a = jf * (jf + 1.0) * (1.0 / jf).ln_1p();
            let b = (6.0 * jf * jf + 3.0 * jf - 1.0) / (6.0 * jf);
            diff += a - b;
            sum += a + b;
        }
        diff += 1.0 / (12.0 * n as f64);
        out.push(DeviationRecord {
            formula: "reordered double series for the Kinkelin relation (bracket sign)".into(),
            adopted: "difference of the two bracket parts".into(),
            adopted_residual: (diff - closed).abs(),
            rejected: "printed sum of the parts (diverges; partial shown)".into(),
            rejected_residual: (sum - closed).abs(),
        });
    }

    // Binet kernel range
    {
        let (f1, _, f3) = negazeta_b::binet_forms(1.0)
            .unwrap_or((Eval::exact(f64::NAN), Eval::exact(f64::NAN), Eval::exact(f64::NAN)));
        let unit = quad::integrate_finite(|x| -(x - 0.5) / (x + 1.0), 0.0, 1.0, &QuadSpec::default())
            .map(|e| e.value)
            .unwrap_or(f64::NAN);
        out.push(DeviationRecord {
            formula: "sawtooth Binet form (integration range)".into(),
            adopted: "-int_0^inf P1/(x+s)".into(),
            adopted_residual: (f1.value - f3.value).abs(),
            rejected: "printed -int_0^1 P1/(x+s)".into(),
            rejected_residual: (unit - f3.value).abs(),
        });
    }

    // Stieltjes shift identity log power
    {
        let q: f64 = 0.5;
        let lhs = zetafun::stieltjes(2, q + 1.0).map(|e| e.value).unwrap_or(f64::NAN);
        let g2 = zetafun::stieltjes(2, q).map(|e| e.value).unwrap_or(f64::NAN);
        let adopted = g2 - q.ln().powi(2) / q;
        let rejected = g2 - q.ln() / q;
        out.push(DeviationRecord {
            formula: "Stieltjes argument-shift identity (log power)".into(),
            adopted: "gamma_k(q+1) = gamma_k(q) - ln^k(q)/q".into(),
            adopted_residual: (lhs - adopted).abs(),
            rejected: "printed (1/q) ln q for all k".into(),
            rejected_residual: (lhs - rejected).abs(),
        });
    }

    out
}

/// Render the deviations ledger.
pub fn deviations_markdown(records: &[DeviationRecord]) -> String {
    let mut s = String::from("# Deviations ledger\n\nFormula variants adopted after oracle validation; residuals are absolute deviations from the independent oracle for each variant.\n");
    for r in records {
        s.push_str(&format!(
            "\n## {}\n\n- adopted: {} (residual {:.3e})\n- rejected: {} (residual {:.3e})\n",
            r.formula, r.adopted, r.adopted_residual, r.rejected, r.rejected_residual
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deviation_records_are_decisive() {
        let recs = deviation_records();
        assert!(recs.len() >= 10);
        for r in &recs {
            assert!(
                r.adopted_residual < 1e-5,
                "{}: adopted residual {:.3e}",
                r.formula,
                r.adopted_residual
            );
            assert!(
                r.rejected_residual > 10.0 * r.adopted_residual.max(1e-12),
                "{}: rejected residual {:.3e} not clearly worse than {:.3e}",
                r.formula,
                r.rejected_residual,
                r.adopted_residual
            );
        }
        let md = deviations_markdown(&recs);
        assert!(md.contains("base 4"));
        assert!(md.contains("outer weight"));
    }

    #[test]
    fn core_suite_names_are_unique() {
        // cheap structural test; the full suites run in the acceptance tests
        let names: Vec<_> = core_suite(1e-3).iter().map(|c| c.name.clone()).collect();
        let mut dedup = names.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(names.len(), dedup.len());
    }
}

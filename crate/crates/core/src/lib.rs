//! Special-function numerics built on the first periodized Bernoulli kernel
//! P₁(x) = {x} − 1/2.
//!
//! The crate evaluates the Lerch transcendent, polylogarithms, the zeta
//! family (Riemann/Hurwitz, s-derivatives, Stieltjes constants), Clausen and
//! Dirichlet L-functions, and a collection of classical constants (Catalan,
//! Somos, Glaisher–Kinkelin, Euler sums, Γ-function moments) — each by at
//! least two independent routes:
//!
//! * semi-infinite integral representations weighted by P₁, integrated
//!   exactly cell-by-cell (P₁ is linear on every unit cell) with certified
//!   tail handling, and
//! * Addison-type double series obtained from the k-refinement step
//!   functions g_k(x) = f(x) − f(kx)/k, f = −P₁.
//!
//! Cross-validation of the routes against each other and against brute-force
//! oracles is wired into the [`verify`] module and the CLI `verify`
//! subcommand.
//!
//! All arithmetic is plain `f64`; every numeric result is an [`Eval`]
//! carrying the value, an error estimate and a work counter.

pub mod addison;
pub mod clausen_l;
pub mod constants;
pub mod kernel;
pub mod kinkelin_a;
pub mod lerch;
pub mod negazeta_b;
pub mod quad;
pub mod verify;
pub mod zetafun;

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// ln(2π).
pub const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// ln √(2π) = ∫₀¹ ln Γ(z) dz.
pub const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_7;

/// A numeric result: value, claimed absolute error estimate, and the number
/// of intervals/terms consumed producing it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eval {
    pub value: f64,
    pub err_est: f64,
    pub work: u64,
}

impl Eval {
    pub fn new(value: f64, err_est: f64, work: u64) -> Self {
        Eval { value, err_est: err_est.abs(), work }
    }

    /// A value known to roundoff.
    pub fn exact(value: f64) -> Self {
        Eval { value, err_est: f64::EPSILON * value.abs().max(1.0), work: 0 }
    }

    /// Sum of two results; errors and work add.
    pub fn add(self, other: Eval) -> Eval {
        Eval {
            value: self.value + other.value,
            err_est: self.err_est + other.err_est,
            work: self.work + other.work,
        }
    }

    /// Add an exactly-known constant.
    pub fn add_const(self, c: f64) -> Eval {
        Eval { value: self.value + c, ..self }
    }

    /// Scale by an exactly-known factor.
    pub fn scale(self, c: f64) -> Eval {
        Eval { value: c * self.value, err_est: c.abs() * self.err_est, work: self.work }
    }
}

/// Errors from evaluation: domain violations, non-finite samples (with the
/// offending abscissa), truncation/precision failures carrying the partial
/// value, and poles.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside an operation's domain.
    Domain(String),
    /// The integrand produced a non-finite sample at `x`.
    NonFinite { x: f64, context: String },
    /// A series or quadrature failed to reach tolerance within its budget.
    Truncation { context: String, partial: f64, err_est: f64, work: u64 },
    /// Precision exhausted (double-precision cancellation floor reached).
    Precision { context: String, partial: f64, err_est: f64 },
    /// Evaluation requested at a pole.
    Pole { s: f64 },
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::NonFinite { x, context } => {
                write!(f, "non-finite sample at x = {x:e} in {context}")
            }
            Error::Truncation { context, partial, err_est, work } => write!(
                f,
                "truncation failure in {context}: partial = {partial:.15e}, err_est = {err_est:.3e}, work = {work}"
            ),
            Error::Precision { context, partial, err_est } => write!(
                f,
                "precision failure in {context}: partial = {partial:.15e}, err_est = {err_est:.3e}"
            ),
            Error::Pole { s } => write!(f, "pole at s = {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

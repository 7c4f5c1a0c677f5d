//! Stable-law parameters, parametrizations and exact conversions.
//!
//! A law of index `α ≠ 1` is handled through the constant `C₊` of its
//! characteristic exponent `ψ⁰(ξ) = C₊ ξ^α` (for `ξ > 0`; the conjugate
//! constant serves `ξ < 0`). `C₊` is stored as the pair `(|C₊|, φ₀)`,
//! `φ₀ = arg C₊ = −arctan(β tan(απ/2))`, never as re/im: every evaluator
//! downstream needs `C₊ e^{iαω}` on rays that may leave the principal branch,
//! and pure angle addition sidesteps complex-power branch cuts entirely.
//!
//! For `α = 1` the exponent is `σ|ξ|(1 + i(2β/π) sign ξ · ln|ξ|)` and the
//! pair `(σ, β)` is used directly.

use num_complex::Complex64;
use statrs::function::gamma::gamma;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Which location convention the user-facing `(x, μ)` pair follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parametrization {
    /// The parametrization behind `ψ⁰` itself: `x' = x − μ`.
    St,
    /// Nolan's S0: continuous in all parameters;
    /// `x' = x − μ + σβ tan(απ/2)` for `α ≠ 1` and
    /// `x' = x − μ + σβ(2/π) ln σ` for `α = 1`.
    S0,
}

/// Validated stable-law parameters plus derived quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StableLaw {
    pub alpha: f64,
    pub beta: f64,
    pub sigma: f64,
    pub mu: f64,
    pub parametrization: Parametrization,
    c_plus_mag: f64,
    phi0: f64,
}

/// A change of scale `ξ ↦ aξ` of the integration variable, recorded as a
/// decimal exponent. Applying it maps `(law, x')` to `(law'', x'' = a·x')`
/// with `|C₊''| = |C₊| a^α`; pdf values pick up the Jacobian `a`, cdf values
/// are unchanged.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rescaling {
    pub a: f64,
    pub n_sc: i32,
    pub jacobian: f64,
}

impl Rescaling {
    pub fn identity() -> Self {
        Self { a: 1.0, n_sc: 0, jacobian: 1.0 }
    }

    pub fn from_exponent(n_sc: i32) -> Self {
        let a = 10f64.powi(n_sc);
        Self { a, n_sc, jacobian: a }
    }
}

impl StableLaw {
    /// Validates the parameters and derives `(|C₊|, φ₀)`.
    pub fn new(
        alpha: f64,
        beta: f64,
        sigma: f64,
        mu: f64,
        parametrization: Parametrization,
    ) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 2.0) || !alpha.is_finite() {
            return Err(Error::Domain(format!("alpha must be in (0, 2], got {alpha}")));
        }
        if !(-1.0..=1.0).contains(&beta) || !beta.is_finite() {
            return Err(Error::Domain(format!("beta must be in [-1, 1], got {beta}")));
        }
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::Domain(format!("sigma must be positive, got {sigma}")));
        }
        if !mu.is_finite() {
            return Err(Error::Domain(format!("mu must be finite, got {mu}")));
        }
        let (c_plus_mag, phi0) = if alpha == 1.0 {
            (f64::NAN, f64::NAN)
        } else {
            let t = half_angle_tan(alpha);
            let bt = beta * t;
            (sigma.powf(alpha) * bt.hypot(1.0), -bt.atan())
        };
        Ok(Self { alpha, beta, sigma, mu, parametrization, c_plus_mag, phi0 })
    }

    /// Builds a law of index `α ≠ 1` from Lévy-density weights `c₊, c₋ ≥ 0`.
    pub fn from_levy_weights(
        alpha: f64,
        c_plus: f64,
        c_minus: f64,
        mu: f64,
        parametrization: Parametrization,
    ) -> Result<Self> {
        if c_plus < 0.0 || c_minus < 0.0 || c_plus + c_minus <= 0.0 {
            return Err(Error::Domain(
                "Levy weights must be nonnegative with c+ + c- > 0".into(),
            ));
        }
        if alpha == 1.0 {
            let sigma = (c_plus + c_minus) * FRAC_PI_2;
            let beta = (c_plus - c_minus) / (c_plus + c_minus);
            return Self::new(alpha, beta, sigma, mu, parametrization);
        }
        if alpha >= 2.0 {
            return Err(Error::Domain("Levy weights require alpha < 2".into()));
        }
        // σ^α = −Γ(−α) cos(απ/2) (c₊+c₋); the prefactor is positive on both
        // sides of α = 1.
        let sig_a = -gamma(-alpha) * (alpha * FRAC_PI_2).cos() * (c_plus + c_minus);
        let sigma = sig_a.powf(1.0 / alpha);
        let beta = (c_plus - c_minus) / (c_plus + c_minus);
        Self::new(alpha, beta, sigma, mu, parametrization)
    }

    /// Lévy-density weights `(c₊, c₋)` of this law (`α < 2`).
    pub fn levy_weights(&self) -> Result<(f64, f64)> {
        if self.alpha >= 2.0 {
            return Err(Error::Domain("Brownian motion carries no Levy density".into()));
        }
        let total = if self.alpha == 1.0 {
            self.sigma / FRAC_PI_2
        } else {
            self.sigma.powf(self.alpha)
                / (-gamma(-self.alpha) * (self.alpha * FRAC_PI_2).cos())
        };
        Ok((0.5 * (1.0 + self.beta) * total, 0.5 * (1.0 - self.beta) * total))
    }

    /// `|C₊|` (`α ≠ 1`).
    pub fn c_plus_mag(&self) -> Result<f64> {
        if self.alpha == 1.0 {
            return Err(Error::Domain("C+ is not defined at alpha = 1".into()));
        }
        Ok(self.c_plus_mag)
    }

    /// `φ₀ = arg C₊` (`α ≠ 1`).
    pub fn phi0(&self) -> Result<f64> {
        if self.alpha == 1.0 {
            return Err(Error::Domain("phi0 is not defined at alpha = 1".into()));
        }
        Ok(self.phi0)
    }

    /// `C₊` in rectangular form; only safe where no further powers are taken.
    pub fn c_plus(&self) -> Result<Complex64> {
        Ok(Complex64::from_polar(self.c_plus_mag()?, self.phi0()?))
    }

    /// The shifted argument `x'` at which the inversion integrals are
    /// evaluated.
    pub fn xprime(&self, x: f64) -> f64 {
        match self.parametrization {
            Parametrization::St => x - self.mu,
            Parametrization::S0 => {
                if self.alpha == 1.0 {
                    x - self.mu + self.sigma * self.beta * (2.0 / PI) * self.sigma.ln()
                } else {
                    x - self.mu + self.sigma * self.beta * half_angle_tan(self.alpha)
                }
            }
        }
    }

    /// Inverse of [`Self::xprime`].
    pub fn x_from_xprime(&self, xp: f64) -> f64 {
        xp - self.xprime(0.0)
    }

    /// The mirrored law `β ↦ −β` (same scale); downstream evaluators use
    /// `pdf(x'; β) = pdf(−x'; −β)`.
    pub fn mirrored(&self) -> Self {
        let mut law = *self;
        law.beta = -self.beta;
        if self.alpha != 1.0 {
            law.phi0 = -self.phi0;
        }
        law
    }

    /// Applies `ξ ↦ aξ`: returns the rescaled law and argument. Rejected at
    /// `α = 1`, where the exponent is not scale-covariant.
    pub fn rescale(&self, xprime: f64, a: f64) -> Result<(Self, f64, Rescaling)> {
        if self.alpha == 1.0 {
            return Err(Error::MethodInfeasible(
                "rescaling is not applicable at alpha = 1".into(),
            ));
        }
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::Domain(format!("scale factor must be positive, got {a}")));
        }
        let mut law = *self;
        law.sigma = self.sigma * a;
        law.c_plus_mag = self.c_plus_mag * a.powf(self.alpha);
        // μ is left untouched: the rescaled law is only used through x''.
        let resc = Rescaling { a, n_sc: a.log10().round() as i32, jacobian: a };
        Ok((law, a * xprime, resc))
    }

    /// Power-of-ten rescaling bringing `|x'|` and `|C₊|` to comparable size,
    /// the ratio permitting. Returns the identity when the ratio is already
    /// in `[1e-2, 1e2]`, when `x' = 0`, or at `α = 1`.
    pub fn auto_rescaling(&self, xprime: f64) -> Rescaling {
        if self.alpha == 1.0 || xprime == 0.0 {
            return Rescaling::identity();
        }
        let ratio = xprime.abs() / self.c_plus_mag;
        if (1e-2..=1e2).contains(&ratio) || !ratio.is_finite() {
            return Rescaling::identity();
        }
        // |x''| / |C₊''| = a^{1−α} |x'| / |C₊| = 1 at the balancing a
        let n = (ratio.ln() / (self.alpha - 1.0) / std::f64::consts::LN_10)
            .round()
            .clamp(-10.0, 10.0) as i32;
        Rescaling::from_exponent(n)
    }
}

/// `tan(απ/2)` with the exact Brownian limit.
fn half_angle_tan(alpha: f64) -> f64 {
    if alpha == 2.0 {
        0.0
    } else {
        (alpha * FRAC_PI_2).tan()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn law(alpha: f64, beta: f64, sigma: f64) -> StableLaw {
        StableLaw::new(alpha, beta, sigma, 0.0, Parametrization::St).unwrap()
    }

    #[test]
    fn symmetric_law_has_real_c_plus() {
        let l = law(1.0001, 0.0, 0.7);
        assert_eq!(l.phi0().unwrap(), 0.0);
        // α→1, β=0: C₊ = σ^α
        assert!((l.c_plus_mag().unwrap() - 0.7f64.powf(1.0001)).abs() < 1e-15);
    }

    #[test]
    fn fully_skewed_half_index() {
        // α = 1/2, β = 1: φ₀ = −arctan(tan(π/4)) = −π/4
        let l = law(0.5, 1.0, 2.0);
        assert!((l.phi0().unwrap() + std::f64::consts::FRAC_PI_4).abs() < 1e-15);
    }

    #[test]
    fn brownian_case() {
        let l = law(2.0, 0.3, 1.5);
        assert_eq!(l.phi0().unwrap(), 0.0);
        assert!((l.c_plus_mag().unwrap() - 2.25).abs() < 1e-14);
    }

    #[test]
    fn alpha_one_rejects_c_plus() {
        let l = law(1.0, 0.25, 0.001);
        assert!(l.c_plus_mag().is_err());
        assert!(l.phi0().is_err());
    }

    #[test]
    fn domain_errors() {
        assert!(StableLaw::new(0.0, 0.0, 1.0, 0.0, Parametrization::St).is_err());
        assert!(StableLaw::new(2.1, 0.0, 1.0, 0.0, Parametrization::St).is_err());
        assert!(StableLaw::new(1.0, 1.5, 1.0, 0.0, Parametrization::St).is_err());
        assert!(StableLaw::new(1.0, 0.0, 0.0, 0.0, Parametrization::St).is_err());
    }

    #[test]
    fn one_sided_weights_give_sigma_from_gamma() {
        // c₊ = 1, c₋ = 0 at α = 1/2: σ^{1/2} = −Γ(−1/2) cos(π/4),
        // with Γ(−1/2) = −2√π evaluated numerically.
        let l = StableLaw::from_levy_weights(0.5, 1.0, 0.0, 0.0, Parametrization::St).unwrap();
        let expect = (2.0 * std::f64::consts::PI.sqrt() * (std::f64::consts::FRAC_PI_4).cos())
            .powi(2);
        assert!((l.sigma - expect).abs() / expect < 1e-14);
        assert_eq!(l.beta, 1.0);
    }

    #[test]
    fn weights_round_trip() {
        for &alpha in &[0.15, 0.5, 0.998, 1.0, 1.3, 1.95] {
            for &beta in &[-1.0, -0.25, 0.0, 0.75, 1.0] {
                let l = law(alpha, beta, 0.37);
                let (cp, cm) = l.levy_weights().unwrap();
                let back =
                    StableLaw::from_levy_weights(alpha, cp, cm, 0.0, Parametrization::St).unwrap();
                assert!((back.sigma - l.sigma).abs() / l.sigma < 1e-14, "alpha={alpha}");
                assert!((back.beta - l.beta).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn s0_shift_matches_caption_window() {
        // x' close to 0 for x ∈ (−0.2407, −0.2367) at α=0.998, β=0.75, σ=0.001
        let l = StableLaw::new(0.998, 0.75, 0.001, 0.0, Parametrization::S0).unwrap();
        let xp = l.xprime(-0.2387);
        assert!(xp.abs() < 2e-3, "xp = {xp}");
    }

    #[test]
    fn s0_shift_direct_value() {
        let l = StableLaw::new(1.3, 0.25, 0.001, 0.0, Parametrization::S0).unwrap();
        let expect = 0.001 * 0.25 * (0.65 * std::f64::consts::PI).tan();
        assert!((l.xprime(0.0) - expect).abs() < 1e-18);
    }

    #[test]
    fn st_shift_is_plain_translation() {
        let l = StableLaw::new(0.8, 0.5, 2.0, 1.5, Parametrization::St).unwrap();
        assert_eq!(l.xprime(2.5), 1.0);
        let l0 = StableLaw::new(0.8, 0.0, 2.0, 0.0, Parametrization::S0).unwrap();
        assert_eq!(l0.xprime(0.3), 0.3); // β = 0 ⇒ no shift
    }

    #[test]
    fn rescale_power_law() {
        let l = law(0.5, 0.0, 1.0);
        let (l2, x2, r) = l.rescale(-3.0, 100.0).unwrap();
        assert!((l2.c_plus_mag().unwrap() / l.c_plus_mag().unwrap() - 10.0).abs() < 1e-13);
        assert_eq!(x2, -300.0);
        assert_eq!(r.jacobian, 100.0);
        assert!(l.rescale(1.0, 0.0).is_err());
        assert!(law(1.0, 0.5, 1.0).rescale(1.0, 2.0).is_err());
    }

    #[test]
    fn rescale_round_trip_identity() {
        let l = law(1.7, -0.4, 0.01);
        let (l2, x2, _) = l.rescale(0.35, 8.0).unwrap();
        let (l3, x3, _) = l2.rescale(x2, 1.0 / 8.0).unwrap();
        assert!((l3.c_plus_mag().unwrap() - l.c_plus_mag().unwrap()).abs() < 1e-14);
        assert!((x3 - 0.35).abs() < 1e-16);
    }

    #[test]
    fn auto_rescale_balances_table_one_center() {
        // α=0.15, β=0.75, σ=0.001 near x' ≈ 1.8e-4: the balancing power of
        // ten is 1e4, the choice the numeric tables use.
        let l = StableLaw::new(0.15, 0.75, 0.001, 0.0, Parametrization::S0).unwrap();
        let r = l.auto_rescaling(l.xprime(0.0));
        assert_eq!(r.n_sc, 4);
        // in-range ratios are left alone
        let l2 = law(0.5, 0.0, 1.0);
        assert_eq!(l2.auto_rescaling(3.0).n_sc, 0);
    }

    proptest! {
        /// φ₀ is odd in β and |φ₀| is nondecreasing in |β| for fixed α.
        #[test]
        fn phi0_odd_and_monotone(alpha in 0.05f64..1.99f64) {
            let alpha = if (alpha - 1.0).abs() < 1e-3 { 1.01 } else { alpha };
            let betas: Vec<f64> = (0..=20).map(|i| i as f64 / 20.0).collect();
            let mut prev = -1.0;
            for &b in &betas {
                let p = law(alpha, b, 1.0).phi0().unwrap();
                let m = law(alpha, -b, 1.0).phi0().unwrap();
                prop_assert!((p + m).abs() < 1e-15);
                prop_assert!(p.abs() + 1e-15 >= prev);
                prev = p.abs();
            }
            // |φ₀| ≤ min(π/2, απ/2)
            let cap = (std::f64::consts::FRAC_PI_2).min(alpha * std::f64::consts::FRAC_PI_2);
            let p1 = law(alpha, 1.0, 1.0).phi0().unwrap();
            prop_assert!(p1.abs() <= cap + 1e-12);
        }

        /// Rescaling round-trips to identity at 1e-14.
        #[test]
        fn rescale_round_trip(alpha in 0.1f64..1.99f64, a in 1e-3f64..1e3f64, x in -10.0f64..10.0) {
            let alpha = if (alpha - 1.0).abs() < 1e-6 { 1.5 } else { alpha };
            let l = law(alpha, 0.3, 0.7);
            let (l2, x2, _) = l.rescale(x, a).unwrap();
            let (l3, x3, _) = l2.rescale(x2, 1.0 / a).unwrap();
            prop_assert!((l3.c_plus_mag().unwrap() / l.c_plus_mag().unwrap() - 1.0).abs() < 1e-14);
            prop_assert!((x3 - x).abs() <= 1e-14 * x.abs().max(1.0));
        }
    }
}

//! Closed-form special cases: Gaussian (`α = 2`), Cauchy (`α = 1, β = 0`),
//! Lévy (`α = 1/2, |β| = 1`), and the value at `x' = 0` for `α ≠ 1`.

use statrs::function::erf::{erf, erfc};
use statrs::function::gamma::gamma;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::params::StableLaw;

/// `p(0) = Γ(1/α+1) cos(φ₀/α) / (π |C₊|^{1/α})` for `α ≠ 1`.
pub fn pdf_at_zero(law: &StableLaw) -> Result<f64> {
    if law.alpha == 1.0 {
        return Err(Error::MethodInfeasible(
            "p(0) closed form requires alpha != 1".into(),
        ));
    }
    let inv = 1.0 / law.alpha;
    Ok(gamma(inv + 1.0) / (PI * law.c_plus_mag()?.powf(inv)) * (law.phi0()? * inv).cos())
}

/// `F(0) = 1/2 + φ₀/(απ)` for `α ≠ 1`.
pub fn cdf_at_zero(law: &StableLaw) -> Result<f64> {
    Ok(0.5 + law.phi0()? / (law.alpha * PI))
}

/// Cauchy density (`α = 1, β = 0`).
pub fn cauchy_pdf(sigma: f64, xp: f64) -> f64 {
    sigma / (PI * (sigma * sigma + xp * xp))
}

pub fn cauchy_cdf(sigma: f64, xp: f64) -> f64 {
    0.5 + (xp / sigma).atan() / PI
}

pub fn cauchy_pdf_prime(sigma: f64, xp: f64) -> f64 {
    let d = sigma * sigma + xp * xp;
    -2.0 * sigma * xp / (PI * d * d)
}

pub fn cauchy_quantile(sigma: f64, a: f64) -> f64 {
    sigma * (PI * (a - 0.5)).tan()
}

/// Gaussian forms for `α = 2`: the exponent is `C₊ ξ² = σ² ξ²`, i.e. a
/// normal law with variance `2σ²`.
pub fn gauss_pdf(sigma: f64, xp: f64) -> f64 {
    let v = xp / (2.0 * sigma);
    (-v * v).exp() / (2.0 * sigma * PI.sqrt())
}

pub fn gauss_cdf(sigma: f64, xp: f64) -> f64 {
    0.5 * (1.0 + erf(xp / (2.0 * sigma)))
}

pub fn gauss_pdf_prime(sigma: f64, xp: f64) -> f64 {
    -xp / (2.0 * sigma * sigma) * gauss_pdf(sigma, xp)
}

/// Lévy density for `α = 1/2, β = 1` in the exponent parametrization:
/// `ψ⁰ = σ^{1/2}(1 − i sign ξ)|ξ|^{1/2}` matches the textbook Lévy law with
/// scale `c = σ`, supported on `x' > 0`. `β = −1` is the mirror image.
pub fn levy_pdf(sigma: f64, beta_sign: f64, xp: f64) -> f64 {
    let x = beta_sign * xp;
    if x <= 0.0 {
        return 0.0;
    }
    (sigma / (2.0 * PI)).sqrt() * (-sigma / (2.0 * x)).exp() / (x * x.sqrt())
}

pub fn levy_cdf(sigma: f64, beta_sign: f64, xp: f64) -> f64 {
    let x = beta_sign * xp;
    let tail = if x <= 0.0 { 0.0 } else { erfc((sigma / (2.0 * x)).sqrt()) };
    if beta_sign > 0.0 {
        tail
    } else {
        1.0 - tail
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::Parametrization;

    #[test]
    fn cauchy_peak_is_pdf_at_zero_limit() {
        // β = 0 keeps the p(0) formula valid arbitrarily close to α = 1,
        // where it must approach the Cauchy peak 1/(πσ).
        let l = StableLaw::new(1.0 + 1e-12, 0.0, 2.0, 0.0, Parametrization::St).unwrap();
        let v = pdf_at_zero(&l).unwrap();
        assert!((v - 1.0 / (PI * 2.0)).abs() < 1e-10);
    }

    #[test]
    fn gaussian_matches_pdf_at_zero() {
        let sigma = 0.7;
        let l = StableLaw::new(2.0, 0.0, sigma, 0.0, Parametrization::St).unwrap();
        assert!((pdf_at_zero(&l).unwrap() - gauss_pdf(sigma, 0.0)).abs() < 1e-16);
    }

    #[test]
    fn gaussian_cdf_basics() {
        assert!((gauss_cdf(1.0, 0.0) - 0.5).abs() < 1e-16);
        assert!(gauss_cdf(1.0, 10.0) > 0.9999997);
    }

    #[test]
    fn levy_normalization_and_support() {
        assert_eq!(levy_pdf(1.0, 1.0, -0.5), 0.0);
        assert_eq!(levy_cdf(1.0, 1.0, 0.0), 0.0);
        assert_eq!(levy_cdf(1.0, -1.0, 0.5), 1.0);
        // mirror symmetry
        assert!((levy_pdf(1.0, -1.0, -2.0) - levy_pdf(1.0, 1.0, 2.0)).abs() < 1e-18);
        // quartile identity: F(x) = erfc(sqrt(σ/2x))
        let x = 3.0;
        assert!((levy_cdf(2.0, 1.0, x) - erfc((2.0 / (2.0 * x)).sqrt())).abs() < 1e-16);
    }

    #[test]
    fn cauchy_quartile() {
        assert!((cauchy_cdf(1.0, 1.0) - 0.75).abs() < 1e-16);
        assert!((cauchy_quantile(1.0, 0.75) - 1.0).abs() < 1e-15);
    }
}

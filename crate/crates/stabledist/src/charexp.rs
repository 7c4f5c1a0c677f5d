//! The characteristic exponent continued along rays `ξ = e^{iω + y}`.
//!
//! All conic evaluators work in the log-radius coordinate `y` on a ray of
//! angle `ω`. For `α ≠ 1` the continued exponent on the ray is
//! `ψ⁰(e^{iω+y}) = |C₊| e^{i(φ₀ + αω)} e^{αy}`, computed by angle addition:
//! the cones in use may cross the negative imaginary axis (or live on a
//! Riemann surface beyond `(−π, π]`), where a generic complex power would
//! jump branches. For `α = 1` the ray representation gives `ln ξ = y + iω`
//! by construction, sidestepping the logarithm's cut the same way.

use num_complex::Complex64;

use crate::params::StableLaw;

/// A point on the ray of angle `omega`, at log-radius `y` (`ξ = e^{iω+y}`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayPoint {
    pub omega: f64,
    pub y: f64,
}

impl RayPoint {
    pub fn radius(&self) -> f64 {
        self.y.exp()
    }

    pub fn xi(&self) -> Complex64 {
        Complex64::from_polar(self.radius(), self.omega)
    }
}

/// `ψ⁰(e^{iω+y})`, analytically continued along the ray.
pub fn psi0_on_ray(law: &StableLaw, omega: f64, y: f64) -> Complex64 {
    if law.alpha == 1.0 {
        // σ e^{iω+y} (1 + i(2β/π)(y + iω))
        let xi = Complex64::from_polar(y.exp(), omega);
        let log_xi = Complex64::new(y, omega);
        law.sigma * xi * (Complex64::new(1.0, 0.0) + Complex64::i() * (2.0 * law.beta / std::f64::consts::PI) * log_xi)
    } else {
        let mag = law.c_plus_mag().expect("alpha != 1") * (law.alpha * y).exp();
        Complex64::from_polar(mag, law.phi0().expect("alpha != 1") + law.alpha * omega)
    }
}

/// `C₊ e^{iαω}`, the `y`-independent ray coefficient of `ψ⁰` (`α ≠ 1`).
pub fn psi_ray_coeff(law: &StableLaw, omega: f64) -> Complex64 {
    Complex64::from_polar(
        law.c_plus_mag().expect("alpha != 1"),
        law.phi0().expect("alpha != 1") + law.alpha * omega,
    )
}

/// `c_∞(φ) = |C₊| cos(φ₀ + αφ)`, the coefficient of `ρ^α` in the decay of
/// the integrand modulus on the ray of angle `φ`.
pub fn c_infinity(law: &StableLaw, phi: f64) -> f64 {
    law.c_plus_mag().expect("alpha != 1") * (law.phi0().expect("alpha != 1") + law.alpha * phi).cos()
}

/// `c(φ) = −x' sin φ + |C₊| cos(φ₀ + αφ)`: positivity of this linear-in-ρ
/// rate on the whole cone is the universal condition for the conic rule.
pub fn decay_rate(law: &StableLaw, xprime: f64, phi: f64) -> f64 {
    -xprime * phi.sin() + c_infinity(law, phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::Parametrization;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn law(alpha: f64, beta: f64, sigma: f64) -> StableLaw {
        StableLaw::new(alpha, beta, sigma, 0.0, Parametrization::St).unwrap()
    }

    #[test]
    fn unit_point_symmetric_half_index() {
        // ψ⁰(1) = C₊ = σ^α = 1
        let v = psi0_on_ray(&law(0.5, 0.0, 1.0), 0.0, 0.0);
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn brownian_is_real_on_the_axis() {
        let l = law(2.0, 0.6, 1.2);
        for &y in &[-2.0, 0.0, 1.5] {
            let v = psi0_on_ray(&l, 0.0, y);
            assert!(v.im.abs() < 1e-14);
            assert!((v.re - l.c_plus_mag().unwrap() * (2.0 * y).exp()).abs() < 1e-10);
        }
    }

    #[test]
    fn alpha_one_matches_rectangular_continuation() {
        // Evaluate via ξ = e^{iω+y} in rectangular form and compare.
        let l = law(1.0, 0.25, 0.001);
        let (omega, y) = (-FRAC_PI_4_CHECK, 1.0);
        let v = psi0_on_ray(&l, omega, y);
        let xi = Complex64::from_polar(y.exp(), omega);
        let direct = l.sigma * xi * (Complex64::new(1.0, 0.0) + Complex64::i() * (2.0 * l.beta / PI) * xi.ln());
        assert!((v - direct).norm() < 1e-15 * direct.norm().max(1.0));
        // Re ψ⁰ stays positive on this ray near the real axis
        assert!(v.re > 0.0);
    }

    const FRAC_PI_4_CHECK: f64 = std::f64::consts::FRAC_PI_4;

    #[test]
    fn decay_rate_at_zero_angle() {
        let l = law(1.3, 0.25, 0.001);
        let c = decay_rate(&l, 0.0, 0.0);
        assert!((c - l.c_plus_mag().unwrap() * l.phi0().unwrap().cos()).abs() < 1e-16);
        assert!(c > 0.0);
    }

    #[test]
    fn decay_rate_symmetric_at_right_angle() {
        let l = law(0.5, 0.0, 1.0);
        let x = -2.0;
        let c = decay_rate(&l, x, FRAC_PI_2);
        let expect = -x + l.c_plus_mag().unwrap() * (0.25 * PI).cos();
        assert!((c - expect).abs() < 1e-15);
    }

    #[test]
    fn bad_region_shows_negative_rate() {
        // α just below 1, β > 0, small x' > 0: the rate must go negative
        // somewhere on (−π, 0), which is what dispatch keys off.
        let l = StableLaw::new(0.998, 0.75, 0.001, 0.0, Parametrization::S0).unwrap();
        let xp = 1e-4;
        let negative = (1..512)
            .map(|i| -PI * i as f64 / 512.0)
            .any(|phi| decay_rate(&l, xp, phi) < 0.0);
        assert!(negative);
    }

    proptest! {
        /// Polar evaluation agrees with rectangular complex-power evaluation
        /// on the principal branch.
        #[test]
        fn polar_matches_rectangular(
            alpha in 0.1f64..1.99f64,
            beta in -1.0f64..1.0,
            omega in -3.0f64..3.0,
            y in -5.0f64..5.0,
        ) {
            let alpha = if (alpha - 1.0).abs() < 1e-9 { 1.2 } else { alpha };
            prop_assume!((omega * alpha + law(alpha, beta, 0.7).phi0().unwrap()).abs() < PI);
            let l = law(alpha, beta, 0.7);
            let v = psi0_on_ray(&l, omega, y);
            let xi = Complex64::from_polar(y.exp(), omega);
            let direct = l.c_plus().unwrap() * xi.powf(alpha);
            prop_assert!((v - direct).norm() <= 1e-14 * direct.norm().max(1e-300));
        }

        /// Conjugate symmetry in β.
        #[test]
        fn conjugate_symmetry(
            alpha in 0.1f64..1.99f64,
            beta in -1.0f64..1.0,
            omega in -2.0f64..2.0,
            y in -4.0f64..4.0,
        ) {
            let alpha = if (alpha - 1.0).abs() < 1e-9 { 0.8 } else { alpha };
            let a = psi0_on_ray(&law(alpha, beta, 1.3), omega, y);
            let b = psi0_on_ray(&law(alpha, -beta, 1.3), -omega, y).conj();
            prop_assert!((a - b).norm() <= 1e-13 * a.norm().max(1e-300));
        }

        /// Nonnegative real part on the real axis.
        #[test]
        fn positive_real_part_on_axis(
            alpha in 0.05f64..2.0,
            beta in -1.0f64..1.0,
            y in -6.0f64..6.0,
        ) {
            let l = law(alpha, beta, 0.9);
            prop_assert!(psi0_on_ray(&l, 0.0, y).re >= 0.0);
        }
    }
}

//! Evaluation of stable Lévy distributions to near machine precision.
//!
//! Stable laws have no closed-form densities outside a handful of special
//! cases, and the Fourier inversion integrals that define them are highly
//! oscillatory. This crate evaluates pdf, cdf, pdf derivatives, quantiles and
//! inverse-cdf samples by deforming the inversion contour and changing
//! variables so that the simplified trapezoid rule converges at machine
//! precision with dozens to a few hundred terms:
//!
//! - [`conic`]: exponential change of variables `ξ = exp(iω + y)` with a
//!   region-aware choice of the cone of analyticity (the simplified conic
//!   trapezoid rule), for any index `α`;
//! - [`sinh`]: two-sided sinh acceleration for completely asymmetric laws
//!   (`|β| = 1`), which continue to a cut plane;
//! - [`poly`]: polynomial acceleration for the "bad" sign regions where the
//!   decay cone of the conic rule collapses, with Riemann-zeta tail
//!   corrections;
//! - [`subpoly`]: sub-polynomial acceleration for `α = 1` far in the bad
//!   region, with zeta and zeta-derivative corrections;
//! - [`quantile`]: Newton/bisection quantile solving on precomputed grid
//!   arrays ("conformal principal components") that make each cdf/pdf
//!   evaluation inside a bracket a single vector pass;
//! - [`dispatch`]: automatic method selection with cross-method checking;
//! - [`oracle`]: a slow, independent reference evaluator used by the test
//!   suite.
//!
//! The library works in terms of the shifted argument `x' = x − μ` (plus the
//! parametrization-dependent shift); see [`params::StableLaw`].
//!
//! ```
//! use stabledist::params::{Parametrization, StableLaw};
//! use stabledist::dispatch;
//!
//! // standard Cauchy law
//! let law = StableLaw::new(1.0, 0.0, 1.0, 0.0, Parametrization::St).unwrap();
//! let p = dispatch::pdf(&law, 0.0, 1e-12).unwrap();
//! assert!((p.value - 1.0 / std::f64::consts::PI).abs() < 1e-14);
//! ```

pub mod charexp;
pub mod cli;
pub mod closed;
pub mod conic;
pub mod dispatch;
pub mod error;
pub mod oracle;
pub mod params;
pub mod poly;
pub mod quantile;
pub mod report;
pub mod sinh;
pub mod subpoly;
pub mod zeta;

mod util;

pub use error::{Error, Result};
pub use params::{Parametrization, StableLaw};
pub use report::{EvalReport, Method};

// Keep the mdbook guide compiling: every fenced Rust block in the chapters
// below runs under `cargo test --doc`.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(parametrizations, "../../../book/src/parametrizations.md");
    chapter!(conic_rule, "../../../book/src/conic-rule.md");
    chapter!(accelerations, "../../../book/src/accelerations.md");
    chapter!(quantiles, "../../../book/src/quantiles-and-sampling.md");
    chapter!(cli, "../../../book/src/cli.md");
}

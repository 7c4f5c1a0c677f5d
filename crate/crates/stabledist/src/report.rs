//! Evaluation reports: value, method tag, plan echo and error estimate.

use std::fmt;

/// Which evaluator produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Conic rule, cone from the universal positivity search (rules e/f).
    ConicE,
    /// Conic rule, conservative cone choice (rules c/d).
    ConicC,
    /// Conic rule on the vertical ray `ω = ±π/2` (real integrand, `α < 1`).
    ConicA,
    /// Conic rule with the Ψ-cone / x-cone shortcut (rules a/b).
    ARules,
    /// Two-sided sinh acceleration (`|β| = 1`).
    Sinh,
    /// Polynomial acceleration.
    Poly,
    /// Sub-polynomial acceleration.
    SubPoly,
    /// Explicit formula (Gaussian, Cauchy, Lévy, `x' = 0`).
    ClosedForm,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ConicE => "conic-e",
            Method::ConicC => "conic-c",
            Method::ConicA => "conic-a",
            Method::ARules => "a-rules",
            Method::Sinh => "sinh",
            Method::Poly => "poly",
            Method::SubPoly => "subpoly",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed value along with how it was computed.
#[derive(Debug, Clone, Copy)]
pub struct EvalReport {
    pub value: f64,
    pub method: Method,
    /// Mesh of the trapezoid sum; 0 for closed forms.
    pub zeta: f64,
    /// Lower summation bound is `−n_minus`.
    pub n_minus: i64,
    /// Upper summation bound; may be negative after rescaling.
    pub n_plus: i64,
    /// Decimal exponent of the rescaling that was applied.
    pub n_sc: i32,
    /// Estimated absolute error (target tolerance, or a cross-method
    /// difference when checking was requested).
    pub est_error: f64,
    /// Set when an overflow guard capped a Hardy bound, so the mesh is
    /// based on a loose estimate.
    pub loose_bound: bool,
}

impl EvalReport {
    pub fn closed_form(value: f64) -> Self {
        EvalReport {
            value,
            method: Method::ClosedForm,
            zeta: 0.0,
            n_minus: 0,
            n_plus: 0,
            n_sc: 0,
            est_error: f64::EPSILON,
            loose_bound: false,
        }
    }

    pub fn terms(&self) -> i64 {
        (self.n_plus + self.n_minus + 1).max(0)
    }
}

//! Closed-form tail sums replacing the truncated left tail of the
//! trapezoid sum.
//!
//! The integrands of the conic rule expand near `y = −∞` in powers
//! `e^{(r+sα)y}` (times `−y` for the `α = 1` log terms). Summing such a
//! power over the dropped grid points `j ≤ −N₋−1` is a geometric series,
//! so each expansion term contributes `a_{rs} S_{rs}(ζ, N₋)` with
//!
//! `S_{rs}(ζ, N₋) = Σ_{j≤−N₋−1} e^{j(r+sα)ζ} = e^{−(r+sα)(N₋+1)ζ} / (1 − e^{−(r+sα)ζ})`
//!
//! and the log-weighted sums `S¹_n(ζ, N₋) = Σ_{j≤−N₋−1} (−j) e^{njζ}` with
//! the differentiated closed form.

/// `S_{rs}` for a combined exponent rate `κ = r + sα > 0`.
pub fn s_rate(kappa: f64, zeta: f64, n_minus: i64) -> f64 {
    debug_assert!(kappa > 0.0 && zeta > 0.0);
    let e = (-kappa * (n_minus as f64 + 1.0) * zeta).exp();
    e / -(-kappa * zeta).exp_m1()
}

/// `S¹_n`, the `(−j)`-weighted geometric tail at rate `κ = n`.
pub fn s1_rate(kappa: f64, zeta: f64, n_minus: i64) -> f64 {
    debug_assert!(kappa > 0.0 && zeta > 0.0);
    let n = n_minus as f64;
    let q = (-kappa * zeta).exp();
    let qn1 = (-kappa * (n + 1.0) * zeta).exp();
    let denom = -(-kappa * zeta).exp_m1();
    qn1 * ((n + 1.0) - n * q) / (denom * denom)
}

/// Tail-sum values a quadrature plan carries, keyed by the expansion term
/// they correct.
#[derive(Debug, Clone, Default)]
pub struct TailSums {
    /// `((r, s), S_{rs}(ζ, N₋))`
    pub geometric: Vec<((i32, i32), f64)>,
    /// `(n, S¹_n(ζ, N₋))`
    pub log_weighted: Vec<(i32, f64)>,
}

impl TailSums {
    pub fn compute(
        alpha: f64,
        zeta: f64,
        n_minus: i64,
        rs: &[(i32, i32)],
        ns: &[i32],
    ) -> Self {
        TailSums {
            geometric: rs
                .iter()
                .map(|&(r, s)| {
                    ((r, s), s_rate(r as f64 + s as f64 * alpha, zeta, n_minus))
                })
                .collect(),
            log_weighted: ns
                .iter()
                .map(|&n| (n, s1_rate(n as f64, zeta, n_minus)))
                .collect(),
        }
    }

    pub fn get(&self, r: i32, s: i32) -> f64 {
        self.geometric
            .iter()
            .find(|(k, _)| *k == (r, s))
            .map(|(_, v)| *v)
            .expect("requested S_{rs} not in plan")
    }

    pub fn get_log(&self, n: i32) -> f64 {
        self.log_weighted
            .iter()
            .find(|(k, _)| *k == n)
            .map(|(_, v)| *v)
            .expect("requested S1_n not in plan")
    }
}

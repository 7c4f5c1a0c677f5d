//! Cone selection, Hardy-norm budgeting and truncation limits for the
//! simplified conic trapezoid rule.

use statrs::function::gamma::gamma;
use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use crate::charexp::{c_infinity, decay_rate};
use crate::error::{Error, Result};
use crate::params::StableLaw;
use crate::util::bisect;

/// Default fraction of the cone half-width used for the strip of
/// analyticity in the error bound.
pub const K_D: f64 = 0.9;

/// Angular resolution of the cone-boundary search.
const CONE_TOL: f64 = 1e-6;

/// Hardy norms above this are capped and flagged as loose.
const H_CAP: f64 = 1e280;

/// Which cone recipe a plan was built with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConicVariant {
    /// Maximal subinterval on which the universal positivity condition
    /// holds (rules e/f and their generalization to all α ≠ 1).
    E,
    /// Conservative choice keeping both the oscillatory factor and the
    /// characteristic exponent decaying (rules c/d).
    C,
    /// Vertical ray `ω = −sign(x') π/2` with an all-real integrand (α < 1).
    A,
    /// Shortcut cones: the Ψ-cone for α ≥ 1, the x-half-plane for α < 1
    /// (rules a/b).
    ARules,
}

/// A cone of analyticity with the integration ray and strip half-widths.
#[derive(Debug, Clone, Copy)]
pub struct ContourPlan {
    pub variant: ConicVariant,
    pub gamma_minus: f64,
    pub gamma_plus: f64,
    pub omega: f64,
    pub d0: f64,
    pub k_d: f64,
    pub d: f64,
    pub n_sc: i32,
}

impl ContourPlan {
    fn from_cone(variant: ConicVariant, gm: f64, gp: f64) -> Result<Self> {
        if !(gp > gm + CONE_TOL) {
            return Err(Error::InfeasibleCone(format!(
                "positivity interval [{gm}, {gp}] is empty to grid resolution"
            )));
        }
        let omega = 0.5 * (gm + gp);
        let d0 = 0.5 * (gp - gm);
        Ok(ContourPlan {
            variant,
            gamma_minus: gm,
            gamma_plus: gp,
            omega,
            d0,
            k_d: K_D,
            d: K_D * d0,
            n_sc: 0,
        })
    }
}

/// Mesh, truncation limits and target tolerance of a trapezoid sum.
#[derive(Debug, Clone)]
pub struct QuadraturePlan {
    pub zeta: f64,
    pub n_minus: i64,
    pub n_plus: i64,
    pub epsilon: f64,
    pub ord: u8,
    pub hardy_estimate: f64,
    pub loose_bound: bool,
    pub tail_sums: super::tails::TailSums,
}

/// The Ψ-cone `((−π/2 − φ₀)/α, (π/2 − φ₀)/α)` on which `Re ψ⁰ → +∞`.
fn psi_cone(law: &StableLaw) -> (f64, f64) {
    let phi0 = law.phi0().expect("alpha != 1");
    (
        (-FRAC_PI_2 - phi0) / law.alpha,
        (FRAC_PI_2 - phi0) / law.alpha,
    )
}

/// Largest subinterval of `[lo, hi]` on which `f > 0`, refined by bisection.
fn widest_positive_run(lo: f64, hi: f64, f: impl Fn(f64) -> f64) -> Option<(f64, f64)> {
    const N: usize = 512;
    let step = (hi - lo) / N as f64;
    let vals: Vec<f64> = (0..=N).map(|i| f(lo + i as f64 * step)).collect();
    let mut best: Option<(f64, f64)> = None;
    let mut run_start: Option<usize> = None;
    for i in 0..=N {
        if vals[i] > 0.0 {
            if run_start.is_none() {
                run_start = Some(i);
            }
        }
        if vals[i] <= 0.0 || i == N {
            if let Some(s) = run_start.take() {
                let e = if vals[i] > 0.0 { i } else { i - 1 };
                // refine both edges
                let mut a = lo + s as f64 * step;
                if s > 0 {
                    a = bisect(a - step, a, CONE_TOL, &f);
                }
                let mut b = lo + e as f64 * step;
                if e < N {
                    b = bisect(b, b + step, CONE_TOL, |x| -f(x));
                }
                if best.map_or(true, |(ba, bb)| b - a > bb - ba) {
                    best = Some((a, b));
                }
            }
        }
    }
    best.filter(|(a, b)| b - a > CONE_TOL)
}

/// Positive run of `f` adjacent to 0, going up (`dir = +1`) or down
/// (`dir = −1`) until the first sign change or `|γ| = cap`.
fn run_from_zero(cap: f64, dir: f64, f: impl Fn(f64) -> f64) -> Option<f64> {
    const N: usize = 512;
    let step = cap / N as f64;
    let mut prev = 0.0f64;
    for i in 1..=N {
        let g = dir * (i as f64) * step;
        if f(g) <= 0.0 {
            let edge = bisect(prev.min(g), prev.max(g), CONE_TOL, &f);
            return if edge.abs() > CONE_TOL { Some(edge) } else { None };
        }
        prev = g;
    }
    Some(dir * cap)
}

/// Chooses the cone of analyticity and integration ray for `(law, x')`.
///
/// For `α = 1` the four sign cases of the exponent-vs-oscillation analysis
/// are used and the variant argument is ignored.
pub fn select_cone(law: &StableLaw, xprime: f64, variant: ConicVariant) -> Result<ContourPlan> {
    if law.alpha == 1.0 {
        return select_cone_alpha1(law, xprime);
    }
    let alpha = law.alpha;
    let cond = |g: f64| decay_rate(law, xprime, g);

    if xprime == 0.0 {
        if variant == ConicVariant::A {
            return Err(Error::MethodInfeasible(
                "the vertical-ray rule needs x' != 0".into(),
            ));
        }
        // the Ψ-cone is exactly the decay region when there is no
        // oscillatory factor
        let (gm, gp) = psi_cone(law);
        return ContourPlan::from_cone(variant, gm, gp);
    }

    match variant {
        ConicVariant::ARules => {
            if alpha >= 1.0 {
                let (gm, gp) = psi_cone(law);
                ContourPlan::from_cone(variant, gm, gp)
            } else if xprime < 0.0 {
                ContourPlan::from_cone(variant, 0.0, PI)
            } else {
                ContourPlan::from_cone(variant, -PI, 0.0)
            }
        }
        ConicVariant::C => {
            let phi0 = law.phi0()?;
            if xprime > 0.0 {
                let gm = -(PI.min((FRAC_PI_2 + phi0) / alpha));
                ContourPlan::from_cone(variant, gm, 0.0)
            } else {
                let gp = PI.min((FRAC_PI_2 - phi0) / alpha);
                ContourPlan::from_cone(variant, 0.0, gp)
            }
        }
        ConicVariant::E => {
            if alpha > 1.0 {
                let (lo, hi) = psi_cone(law);
                let (gm, gp) = widest_positive_run(lo, hi, cond).ok_or_else(|| {
                    Error::InfeasibleCone("no positivity interval inside the Ψ-cone".into())
                })?;
                ContourPlan::from_cone(variant, gm, gp)
            } else if xprime < 0.0 {
                let gp = run_from_zero(PI, 1.0, cond)
                    .ok_or_else(|| Error::InfeasibleCone("empty run above 0".into()))?;
                ContourPlan::from_cone(variant, 0.0, gp)
            } else {
                let gm = run_from_zero(PI, -1.0, cond)
                    .ok_or_else(|| Error::InfeasibleCone("empty run below 0".into()))?;
                ContourPlan::from_cone(variant, gm, 0.0)
            }
        }
        ConicVariant::A => {
            if alpha >= 1.0 {
                return Err(Error::MethodInfeasible(
                    "the vertical-ray rule requires alpha < 1".into(),
                ));
            }
            let omega = -xprime.signum() * FRAC_PI_2;
            if cond(omega) <= 0.0 {
                return Err(Error::InfeasibleCone(format!(
                    "decay rate not positive on the vertical ray (x' = {xprime})"
                )));
            }
            // widest symmetric strip inside (0, π) resp. (−π, 0)
            let ok = |d: f64| {
                (1..=64).all(|i| {
                    let t = d * i as f64 / 64.0;
                    cond(omega - t) > 0.0 && cond(omega + t) > 0.0
                })
            };
            let d0 = if ok(FRAC_PI_2 - CONE_TOL) {
                FRAC_PI_2
            } else {
                bisect(0.0, FRAC_PI_2, CONE_TOL, |d| if ok(d) { 1.0 } else { -1.0 })
            };
            if d0 < 64.0 * CONE_TOL {
                return Err(Error::InfeasibleCone("vertical strip collapses".into()));
            }
            ContourPlan::from_cone(variant, omega - d0, omega + d0)
        }
    }
}

fn select_cone_alpha1(law: &StableLaw, xprime: f64) -> Result<ContourPlan> {
    let beta = law.beta;
    if beta == 0.0 {
        return Err(Error::MethodInfeasible(
            "alpha = 1, beta = 0 is the Cauchy closed form".into(),
        ));
    }
    let threshold = -law.sigma * beta / 2.0;
    let (gm, gp) = if beta > 0.0 {
        if xprime >= threshold {
            (-PI, 0.0)
        } else {
            ((law.sigma / xprime).atan(), 0.0)
        }
    } else if xprime <= threshold {
        (0.0, PI)
    } else {
        (0.0, (law.sigma / xprime).atan())
    };
    ContourPlan::from_cone(ConicVariant::E, gm, gp)
}

/// Formula family a budget is being built for; the Hardy bound and
/// truncation analysis differ per family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// pdf, `p(0)`-subtracted integrand (both-decay cones).
    PdfSubtracted,
    /// pdf, oscillation-factored integrand (α < 1 / sign-search cones).
    PdfFactored,
    /// cdf, exponent-subtracted integrand.
    CdfSubtracted,
    /// cdf, oscillation-factored integrand.
    CdfFactored,
    /// derivative of pdf in x'.
    PdfPrime,
    /// derivative of pdf in β.
    PdfDBeta,
}

impl Family {
    pub fn is_cdf(self) -> bool {
        matches!(self, Family::CdfSubtracted | Family::CdfFactored)
    }
}

/// `ζ = 2πd / ln(10H/ε)`, with a floor on the log so a tiny Hardy bound
/// cannot produce an absurdly coarse mesh.
pub fn zeta_from_hardy(h: f64, d: f64, eps: f64) -> f64 {
    2.0 * PI * d / (10.0 * h / eps).ln().max(8.0)
}

/// Hardy-norm estimate and mesh for one formula family on a given contour.
pub fn hardy_budget(
    law: &StableLaw,
    xprime: f64,
    plan: &ContourPlan,
    eps: f64,
    family: Family,
) -> (f64, f64, bool) {
    let mut loose = false;
    let mut h = 0.0;
    for side in [-1.0, 1.0] {
        let phi = plan.omega + side * plan.d;
        h += hardy_side(law, xprime, phi, family, &mut loose);
    }
    if family == Family::CdfSubtracted {
        // boundary-point terms |f(±id)| of the cdf integrand
        for side in [-1.0, 1.0] {
            let phi = plan.omega + side * plan.d;
            let c_inf = c_infinity(law, phi);
            h += (1.0 + (xprime * phi.sin()).exp()) * (-c_inf).exp().min(H_CAP);
        }
    }
    if !h.is_finite() || h > H_CAP {
        h = H_CAP;
        loose = true;
    }
    (h, zeta_from_hardy(h, plan.d, eps), loose)
}

/// One boundary line's contribution to the Hardy bound.
fn hardy_side(law: &StableLaw, xprime: f64, phi: f64, family: Family, loose: &mut bool) -> f64 {
    let alpha = law.alpha;
    let xs = xprime * phi.sin(); // must be ≤ 0 for the x-driven pieces
    let c_inf = c_infinity(law, phi);
    let cond = -xs + c_inf;

    // the plain-exponential piece used on sign-search cones
    let via_cond = |c: f64, loose: &mut bool| {
        if c > 0.0 {
            1.0 / (PI * c)
        } else {
            *loose = true;
            H_CAP
        }
    };

    match family {
        Family::PdfSubtracted | Family::PdfPrime | Family::PdfDBeta | Family::CdfSubtracted => {
            // oscillatory piece e^{x' sinφ ρ − c_∞ ρ^α}, plus the subtracted
            // exponent's own tail ∫ e^{−c_∞ ρ^α}
            let osc = if alpha > 1.0 {
                if c_inf <= 0.0 {
                    *loose = true;
                    H_CAP
                } else {
                    let b = xs * c_inf.powf(-1.0 / alpha);
                    let integral = if b <= 0.0 {
                        gamma(1.0 / alpha)
                    } else if b <= 0.5 {
                        2f64.powf(1.0 / alpha) * gamma(1.0 / alpha) + alpha * 0.5f64.exp()
                    } else {
                        10.0 * hardy_integral_above_one(alpha, b, loose)
                    };
                    integral / (PI * alpha * c_inf.powf(1.0 / alpha))
                }
            } else if xs < 0.0 {
                let b = -c_inf * (-xs).powf(-alpha);
                let integral = if b <= 0.0 {
                    1.0
                } else if b <= 0.5 {
                    2.0
                } else {
                    10.0 * hardy_integral_below_one(alpha, b, loose)
                };
                integral / (PI * -xs)
            } else {
                *loose = true;
                H_CAP
            };
            let sub = if c_inf > 0.0 {
                gamma(1.0 / alpha + 1.0) / (PI * c_inf.powf(1.0 / alpha))
            } else {
                *loose = true;
                H_CAP
            };
            (osc + sub).min(H_CAP)
        }
        Family::PdfFactored | Family::CdfFactored => {
            // e^{x' sinφ ρ}(e^{−c_∞ ρ^α} + 1): the simplified linear-rate
            // bound for the first piece, the plain exponential for the +1
            (via_cond(cond, loose) + via_cond(-xs, loose)).min(H_CAP)
        }
    }
}

/// `∫_0^∞ u^{1/α−1} e^{B u^{1/α} − u} du` for α > 1 via the precomputed
/// grid, falling back to direct quadrature outside it.
fn hardy_integral_above_one(alpha: f64, b: f64, loose: &mut bool) -> f64 {
    hardy_table().interpolate(alpha, b, loose)
}

/// `∫_0^∞ e^{B u^α − u} du` for α < 1.
fn hardy_integral_below_one(alpha: f64, b: f64, loose: &mut bool) -> f64 {
    hardy_table().interpolate(alpha, b, loose)
}

/// Direct evaluation of the Hardy-case integral for either regime; `v` is
/// the inner power (`1/α` for α > 1, `α` for α < 1).
fn hardy_integral_direct(alpha: f64, b: f64) -> f64 {
    let (v, pre_pow) = if alpha > 1.0 {
        (1.0 / alpha, 1.0 / alpha - 1.0)
    } else {
        (alpha, 0.0)
    };
    // upper limit: u − B u^v ≥ 745 ⇒ integrand below e^{−745}
    let mut hi = 745.0f64;
    for _ in 0..4 {
        hi = 745.0 + b.max(0.0) * hi.powf(v);
    }
    // log substitution handles the u^{v−1} endpoint weight
    let lo = (1e-18f64).ln();
    let n = 4000;
    let h = (hi.ln() - lo) / n as f64;
    let g = |t: f64| {
        let u: f64 = t.exp();
        let e = b * u.powf(v) - u + (pre_pow + 1.0) * t;
        if e > 700.0 {
            f64::INFINITY
        } else {
            e.exp()
        }
    };
    let mut s = 0.5 * (g(lo) + g(lo + n as f64 * h));
    for i in 1..n {
        s += g(lo + i as f64 * h);
    }
    s * h
}

struct HardyTable {
    alphas: Vec<f64>,
    bs: Vec<f64>,
    /// ln I on the grid, row-major by α
    ln_vals: Vec<f64>,
}

impl HardyTable {
    fn build() -> Self {
        let alphas: Vec<f64> = (0..15).map(|i| 0.55 + 0.1 * i as f64).collect();
        let bs: Vec<f64> = (0..16).map(|i| 0.5 + 0.5 * i as f64).collect();
        let mut ln_vals = Vec::with_capacity(alphas.len() * bs.len());
        for &a in &alphas {
            for &b in &bs {
                ln_vals.push(hardy_integral_direct(a, b).ln());
            }
        }
        HardyTable { alphas, bs, ln_vals }
    }

    fn interpolate(&self, alpha: f64, b: f64, loose: &mut bool) -> f64 {
        if b > *self.bs.last().unwrap() {
            // large-B region: evaluate directly, flag if it overflows
            let v = hardy_integral_direct(alpha, b);
            if !v.is_finite() || v > H_CAP {
                *loose = true;
                return H_CAP;
            }
            return v;
        }
        let ia = index_below(&self.alphas, alpha);
        let ib = index_below(&self.bs, b);
        let ta = ((alpha - self.alphas[ia]) / 0.1).clamp(0.0, 1.0);
        let tb = ((b - self.bs[ib]) / 0.5).clamp(0.0, 1.0);
        let at = |i: usize, j: usize| self.ln_vals[i * self.bs.len() + j];
        let v0 = at(ia, ib) * (1.0 - tb) + at(ia, ib + 1) * tb;
        let v1 = at(ia + 1, ib) * (1.0 - tb) + at(ia + 1, ib + 1) * tb;
        (v0 * (1.0 - ta) + v1 * ta).exp()
    }
}

fn index_below(grid: &[f64], x: f64) -> usize {
    let mut i = grid.partition_point(|&g| g <= x);
    i = i.saturating_sub(1);
    i.min(grid.len() - 2)
}

fn hardy_table() -> &'static HardyTable {
    static TABLE: OnceLock<HardyTable> = OnceLock::new();
    TABLE.get_or_init(HardyTable::build)
}

/// Truncation parameter `Λ₊` (in the log-radius coordinate) for one family
/// on one contour. Coarse solutions are fine; the budgets enter
/// exponentially.
pub fn lambda_plus(law: &StableLaw, xprime: f64, plan: &ContourPlan, eps: f64, family: Family) -> f64 {
    let alpha = law.alpha;
    let omega = plan.omega;
    let a_lin = -xprime * omega.sin();
    let b_psi = c_infinity(law, omega);

    let lambda1 = match plan.variant {
        ConicVariant::E | ConicVariant::A => {
            // linear combined rate
            let c = decay_rate(law, xprime, omega).max(1e-300);
            let base = (1.0 / (PI * eps * c)).ln().max(1.0) / c;
            if family == Family::CdfFactored {
                // the factored cdf integrand carries ρ^{α−1}|C₊|-type decay
                // on top of e^{−cρ}; two fixed-point sweeps sharpen Λ₁ so
                // the dropped tail stays below ε even at the bracket edge
                let cpm = law.c_plus_mag().unwrap_or(law.sigma);
                let mut u = (c * base).max(2.0);
                for _ in 0..3 {
                    let lam = u / c;
                    let w = (cpm * lam.powf(alpha - 1.0)).max(1e-300);
                    u = (w / (PI * eps * c)).ln().max(1.0);
                }
                u / c
            } else {
                base
            }
        }
        _ => {
            if a_lin > 0.0 && b_psi > 0.0 {
                // both factors decay: Λ₁ from Au + Bu^α = C
                let eps1 = eps * PI * a_lin;
                let c = (1.0 / eps1).ln().max(1.0);
                let upper = (c / a_lin).min((c / b_psi).powf(1.0 / alpha));
                newton_rate_equation(a_lin, b_psi, alpha, c).unwrap_or(upper)
            } else if b_psi <= 0.0 {
                // α < 1 with a growing exponent factor: rate halving
                let l11 = (2.0 * (-b_psi) / a_lin).powf(1.0 / (1.0 - alpha));
                let eps1 = (eps * PI * a_lin).min(1.0);
                let l12 = 2.0 * (1.0 / eps1).ln().max(1.0) / a_lin;
                l11.max(l12)
            } else {
                // α > 1 with a growing oscillatory factor: work in u = c_∞ρ^α
                let b_big = (a_lin.abs()) * b_psi.powf(-1.0 / alpha);
                let l21 = if b_big > 0.0 {
                    (2.0 * b_big).powf(alpha / (alpha - 1.0))
                } else {
                    0.0
                };
                let eps2 = (eps * PI * alpha * b_psi.powf(1.0 / alpha)).min(1.0);
                let l22 = 2.0 * (2.0 / eps2).ln();
                let l2 = l21.max(l22);
                (l2 / b_psi).powf(1.0 / alpha)
            }
        }
    };
    lambda1.max(1e-12).ln()
}

/// Newton solve of `Au + Bu^α = C` from the closed-form upper bound.
fn newton_rate_equation(a: f64, b: f64, alpha: f64, c: f64) -> Option<f64> {
    let mut u = (c / a).min((c / b).powf(1.0 / alpha));
    for _ in 0..20 {
        let f = a * u + b * u.powf(alpha) - c;
        let df = a + b * alpha * u.powf(alpha - 1.0);
        let step = f / df;
        let next = u - step;
        if !(next > 0.0) || !next.is_finite() {
            return None;
        }
        if (next - u).abs() <= 1e-3 * u {
            return Some(next);
        }
        u = next;
    }
    Some(u)
}

/// Truncation parameter `Λ₋ ≥ 0` per family and tail-expansion order.
pub fn lambda_minus(
    law: &StableLaw,
    xprime: f64,
    eps: f64,
    family: Family,
    ord: u8,
) -> f64 {
    let alpha = law.alpha;
    let cpm = law.c_plus_mag().unwrap_or(law.sigma);
    let x = xprime.abs().max(1e-300);
    let ep = eps * PI;
    let ln_clamped = |v: f64| (v / ep).max(1.0).ln();
    let lam = match family {
        Family::PdfSubtracted => match ord {
            0 => ln_clamped(1.0),
            1 => 0.5 * ln_clamped(x),
            _ => {
                let t1 = ln_clamped(x * x * x / 6.0) / 4.0;
                let t2 = ln_clamped(x * x * cpm / 2.0) / (3.0 + alpha);
                let t3 = ln_clamped(x * cpm * cpm / 2.0) / (2.0 + 2.0 * alpha);
                t1.max(t2).max(t3)
            }
        },
        Family::PdfFactored => match ord {
            0 => ln_clamped(cpm) / (1.0 + alpha),
            1 => {
                let t1 = ln_clamped(2.0 * x * cpm) / (2.0 + alpha);
                let t2 = ln_clamped(cpm * cpm) / (1.0 + 2.0 * alpha);
                t1.max(t2)
            }
            _ => {
                let t1 = ln_clamped(3.0 * x * x * cpm / 2.0) / (3.0 + alpha);
                let t2 = ln_clamped(3.0 * x * cpm * cpm / 2.0) / (2.0 + 2.0 * alpha);
                let t3 = ln_clamped(cpm * cpm * cpm / 6.0) / (1.0 + 3.0 * alpha);
                t1.max(t2).max(t3)
            }
        },
        Family::CdfSubtracted => match ord {
            0 => ln_clamped(x),
            1 => {
                let t1 = ln_clamped(2.0 * x * x) / 2.0;
                let t2 = ln_clamped(x * cpm) / (1.0 + alpha);
                t1.max(t2)
            }
            _ => {
                let t1 = ln_clamped(x * x * x / 6.0) / 3.0;
                let t2 = ln_clamped(x * x * cpm / 2.0) / (2.0 + alpha);
                let t3 = ln_clamped(x * cpm * cpm / 2.0) / (1.0 + 2.0 * alpha);
                t1.max(t2).max(t3)
            }
        },
        Family::CdfFactored => match ord {
            0 => ln_clamped(cpm) / alpha,
            1 => {
                let t1 = ln_clamped(2.0 * x * cpm) / (1.0 + alpha);
                let t2 = ln_clamped(cpm * cpm) / (2.0 * alpha);
                t1.max(t2)
            }
            _ => {
                let t1 = ln_clamped(3.0 * x * x * cpm / 2.0) / (2.0 + alpha);
                let t2 = ln_clamped(3.0 * x * cpm * cpm / 2.0) / (1.0 + 2.0 * alpha);
                let t3 = ln_clamped(cpm * cpm * cpm / 2.0) / (3.0 * alpha);
                t1.max(t2).max(t3)
            }
        },
        // tail ~ e^{2y}: no corrections used
        Family::PdfPrime => 0.5 * ln_clamped(1.0),
        // tail ~ e^{(1+α)y}
        Family::PdfDBeta => ln_clamped(1.0) / (1.0 + alpha),
    };
    lam.max(0.0)
}

/// Assembles the quadrature plan for one family on one contour. `refine`
/// divides the mesh and multiplies the truncation limits, for benchmark
/// reproduction and self-convergence checks.
pub fn build_quadrature(
    law: &StableLaw,
    xprime: f64,
    plan: &ContourPlan,
    eps: f64,
    ord: u8,
    family: Family,
    refine: Refine,
) -> QuadraturePlan {
    let (h, zeta0, loose) = hardy_budget(law, xprime, plan, eps, family);
    let zeta = zeta0 / refine.mesh_div;
    let lp = lambda_plus(law, xprime, plan, eps, family);
    let lm = lambda_minus(law, xprime, eps, family, ord);
    let mut n_plus = (lp * refine.range_mul / zeta).ceil() as i64;
    let n_minus = (lm * refine.range_mul / zeta).ceil().max(0.0) as i64;
    // degenerate windows can appear after aggressive rescaling; keep a few
    // points past the peak
    if n_plus < -n_minus {
        n_plus = -n_minus + 8;
    }
    let (rs, ns) = correction_keys(family, ord);
    let tail_sums = super::tails::TailSums::compute(law.alpha, zeta, n_minus, &rs, &ns);
    QuadraturePlan {
        zeta,
        n_minus,
        n_plus,
        epsilon: eps,
        ord,
        hardy_estimate: h,
        loose_bound: loose,
        tail_sums,
    }
}

/// Mesh/range refinement applied on top of the recommended budgets.
#[derive(Debug, Clone, Copy)]
pub struct Refine {
    pub mesh_div: f64,
    pub range_mul: f64,
}

impl Refine {
    pub fn none() -> Self {
        Refine { mesh_div: 1.0, range_mul: 1.0 }
    }

    pub fn new(mesh_div: f64, range_mul: f64) -> Self {
        Refine { mesh_div, range_mul }
    }
}

/// Which `S_{rs}` values each family/order needs.
pub fn correction_keys(family: Family, ord: u8) -> (Vec<(i32, i32)>, Vec<i32>) {
    let rs: Vec<(i32, i32)> = match (family, ord) {
        (Family::PdfSubtracted, 1) => vec![(2, 0)],
        (Family::PdfSubtracted, o) if o >= 2 => vec![(2, 0), (3, 0), (2, 1)],
        (Family::PdfFactored, 1) => vec![(1, 1)],
        (Family::PdfFactored, o) if o >= 2 => vec![(1, 1), (2, 1), (1, 2)],
        (Family::CdfSubtracted, 1) => vec![(1, 0)],
        (Family::CdfSubtracted, o) if o >= 2 => vec![(1, 0), (2, 0), (1, 1)],
        (Family::CdfFactored, 1) => vec![(0, 1)],
        (Family::CdfFactored, o) if o >= 2 => vec![(0, 1), (1, 1), (0, 2)],
        _ => vec![],
    };
    (rs, vec![])
}

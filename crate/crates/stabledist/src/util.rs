//! Small numeric helpers used across the evaluators.

use num_complex::Complex64;

/// Neumaier-compensated accumulator. The trapezoid sums mix terms spanning
/// many orders of magnitude; plain summation would cost a few digits on the
/// tightest acceptance tolerances.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanComplex {
    re: KahanSum,
    im: KahanSum,
}

impl KahanComplex {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// `exp(z) - 1` without cancellation for small `|z|`.
///
/// Re uses `expm1(a)·cos b − 2 sin²(b/2)`, Im is exact.
#[inline]
pub fn cexpm1(z: Complex64) -> Complex64 {
    let ea = z.re.exp_m1();
    let (sb, cb) = z.im.sin_cos();
    let sh = (0.5 * z.im).sin();
    Complex64::new(ea * cb - 2.0 * sh * sh, (ea + 1.0) * sb)
}

/// Bisection for a root of `f` on `[lo, hi]`; assumes `f(lo)` and `f(hi)`
/// have opposite signs. Returns the midpoint once the interval is shorter
/// than `tol`.
pub fn bisect(mut lo: f64, mut hi: f64, tol: f64, f: impl Fn(f64) -> f64) -> f64 {
    let mut flo = f(lo);
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

//! The constant `B_p`, the binomial kernel `I_p(r) = ∫ |1 - r^{1/p} e(t)|^p dt`
//! with its derivative and convexity floor, the Poisson-weighted integral, and
//! the two lower bounds for `‖α z^L + β z^M‖_p`.
//!
//! For `r < 1` the kernel is the power series `Σ C(p/2, m)² r^{2m/p}`; for
//! `r > 1` it follows from `I_p(r) = r I_p(1/r)`. Near `r = 1` the series
//! terms decay only like `m^{-p-2}`, so that window is integrated directly.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Complex;
use crate::quadrature::tanh_sinh;
use crate::special::gamma;

/// Largest exponent accepted by the kernel functions.
pub const P_MAX: f64 = 64.0;

/// Below this radius `ip_value` uses the series directly.
pub const SERIES_SWITCH: f64 = 0.75;
/// Above this radius `ip_value` uses the functional equation plus series.
pub const REFLECT_SWITCH: f64 = 4.0 / 3.0;

const SERIES_REL_TOL: f64 = 1e-15;
const SERIES_MAX_TERMS: usize = 200_000_000;
const QUAD_REL_TOL: f64 = 1e-14;

/// A validated exponent `0 < p <= 64`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct PExponent(f64);

impl PExponent {
    pub fn new(p: f64) -> Result<Self> {
        if p.is_finite() && p > 0.0 && p <= P_MAX {
            Ok(Self(p))
        } else {
            Err(Error::ExponentRange {
                p,
                window: "(0, 64]",
            })
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// `q = p / (p - 1)`; infinite at `p = 1`.
    pub fn conjugate(self) -> f64 {
        if self.0 == 1.0 {
            f64::INFINITY
        } else {
            self.0 / (self.0 - 1.0)
        }
    }
}

/// Which evaluation path produced an `I_p(r)` value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KernelMethod {
    Series,
    FunctionalEquationSeries,
    Quadrature,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    /// At `r = 1` returns `I_p(1)/2`; elsewhere the ordinary derivative.
    Auto,
}

/// `B_p = (Γ(p+1) / (2 Γ(p/2+1)²))^{1/p}`.
pub fn bp_constant(p: f64) -> Result<f64> {
    let p = PExponent::new(p)?.get();
    let ratio = gamma(p + 1.0) / (2.0 * gamma(p / 2.0 + 1.0).powi(2));
    Ok(ratio.powf(1.0 / p))
}

/// `I_p(1) = 2 B_p^p`.
pub fn ip_at_one(p: f64) -> Result<f64> {
    let p = PExponent::new(p)?.get();
    Ok(gamma(p + 1.0) / gamma(p / 2.0 + 1.0).powi(2))
}

/// `C(p/2, m)` for `m = 0, 1, 2, ...` by the ratio recurrence.
fn half_binomials(p: f64) -> impl Iterator<Item = f64> {
    let a = p / 2.0;
    let mut c = 1.0;
    let mut m = 0.0;
    std::iter::from_fn(move || {
        let out = c;
        c *= (a - m) / (m + 1.0);
        m += 1.0;
        Some(out)
    })
}

/// `Σ_m C(p/2, m)² w(m) y^m`, truncated once terms are decreasing and below
/// `1e-15` of the partial sum (or exactly zero).
fn weighted_series<W: Fn(f64) -> f64>(p: f64, y: f64, weight: W) -> f64 {
    let mut sum = 0.0;
    let mut y_pow = 1.0;
    let mut last = f64::INFINITY;
    for (m, c) in half_binomials(p).enumerate().take(SERIES_MAX_TERMS) {
        let base = c * c * y_pow;
        let term = base * weight(m as f64);
        sum += term;
        let decreasing = base <= last;
        if m > 0 && decreasing && (base == 0.0 || term.abs() < SERIES_REL_TOL * sum.abs()) {
            break;
        }
        last = base;
        y_pow *= y;
    }
    sum
}

/// Series branch, valid for `0 <= r < 1` (slow near 1).
pub fn ip_series(p: f64, r: f64) -> Result<f64> {
    let p = PExponent::new(p)?.get();
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain { name: "r", value: r });
    }
    Ok(weighted_series(p, r.powf(2.0 / p), |_| 1.0))
}

/// `|1 - x e(t)|^p` integrated over a period, `x = r^{1/p}`, by
/// double-exponential quadrature on the half period.
pub fn ip_quadrature(p: f64, r: f64) -> Result<f64> {
    let p = PExponent::new(p)?.get();
    if !(r.is_finite() && r >= 0.0) {
        return Err(Error::Domain { name: "r", value: r });
    }
    let x = r.powf(1.0 / p);
    let gap = (1.0 - x) * (1.0 - x);
    // |1 - x e(t)|² = (1-x)² + 4x sin²(πt), free of cancellation near t = 0
    let integrand = |t: f64| {
        let s = (PI * t).sin();
        (gap + 4.0 * x * s * s).powf(p / 2.0)
    };
    Ok(2.0 * tanh_sinh(integrand, 0.5, QUAD_REL_TOL).value)
}

/// `I_p(r)` and the path used to compute it.
pub fn ip_value(p: f64, r: f64) -> Result<(f64, KernelMethod)> {
    let p = PExponent::new(p)?.get();
    if !(r.is_finite() && r >= 0.0) {
        return Err(Error::Domain { name: "r", value: r });
    }
    if r <= SERIES_SWITCH {
        Ok((ip_series(p, r)?, KernelMethod::Series))
    } else if r >= REFLECT_SWITCH {
        Ok((
            r * ip_series(p, 1.0 / r)?,
            KernelMethod::FunctionalEquationSeries,
        ))
    } else {
        Ok((ip_quadrature(p, r)?, KernelMethod::Quadrature))
    }
}

/// Termwise derivative `Σ C(p/2,m)² (2m/p) r^{2m/p - 1}` for `0 < r < 1`.
pub fn ip_derivative_series(p: f64, r: f64) -> Result<f64> {
    let p = PExponent::new(p)?.get();
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain { name: "r", value: r });
    }
    Ok(weighted_series(p, r.powf(2.0 / p), |m| 2.0 * m / p) / r)
}

/// `I'_p(r)`.
///
/// Off `r = 1` the side is ignored. At `r = 1`, `Left` and `Right` evaluate
/// the one-sided limits of the termwise-differentiated series (the left
/// series `Σ C² (2m/p)` and the right series `Σ C² (1 - 2m/p)`, both summed at
/// the boundary with tail extrapolation), while `Auto` returns `I_p(1)/2`.
pub fn ip_derivative(p: f64, r: f64, side: Side) -> Result<f64> {
    let p = PExponent::new(p)?.get();
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::Domain { name: "r", value: r });
    }
    if r == 1.0 {
        return match side {
            Side::Auto => Ok(ip_at_one(p)? / 2.0),
            Side::Left => Ok(boundary_sum(p, |m| 2.0 * m / p)),
            Side::Right => Ok(boundary_sum(p, |m| 1.0 - 2.0 * m / p)),
        };
    }
    if r < 1.0 {
        return ip_derivative_series(p, r);
    }
    // Differentiating I(r) = r I(1/r): I'(r) = I(1/r) - I'(1/r) / r.
    let s = 1.0 / r;
    Ok(ip_value(p, s)?.0 - ip_derivative_series(p, s)? / r)
}

/// `Σ_m C(p/2,m)² w(m)` at `y = 1`.
///
/// The summands behave like `m^{-e}` times a power series in `1/m`, so the
/// tail of the partial sum `S_M` expands in `M^{1-e}, M^{-e}, ...`; repeated
/// Richardson elimination on `M = 512 · 2^k` removes those terms.
fn boundary_sum<W: Fn(f64) -> f64>(p: f64, weight: W) -> f64 {
    const BASE: usize = 512;
    const LEVELS: usize = 7;
    let mut partial = Vec::with_capacity(LEVELS);
    let mut sum = 0.0;
    let mut next_mark = BASE;
    for (m, c) in half_binomials(p).enumerate() {
        if m == next_mark {
            partial.push(sum);
            if partial.len() == LEVELS {
                break;
            }
            next_mark *= 2;
        }
        sum += c * c * weight(m as f64);
    }
    // Leading tail exponent: C² ~ m^{-p-2}; the weight adds at most one power.
    let lead = p;
    let mut table = partial;
    for j in 0..LEVELS - 1 {
        let factor = 2f64.powf(lead + j as f64);
        table = table
            .windows(2)
            .map(|w| (factor * w[1] - w[0]) / (factor - 1.0))
            .collect();
    }
    table[0]
}

/// `P(r, t) = (1 - r²) / |1 - r e(t)|²`.
pub fn poisson_kernel(r: f64, t: f64) -> f64 {
    let s = (PI * t).sin();
    (1.0 - r * r) / ((1.0 - r) * (1.0 - r) + 4.0 * r * s * s)
}

/// `∫_0^1 |1 - r e(t)|^p P(r, t) dt = (1 - r²) ∫ |1 - r e(t)|^{p-2} dt`.
pub fn poisson_weighted_integral(p: f64, r: f64) -> Result<f64> {
    let p = PExponent::new(p)?.get();
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain { name: "r", value: r });
    }
    if r > 1.0 - 1e-6 {
        return Err(Error::KernelTooPeaked(r));
    }
    let gap = (1.0 - r) * (1.0 - r);
    let weight = 1.0 - r * r;
    let integrand = |t: f64| {
        let s = (PI * t).sin();
        weight * (gap + 4.0 * r * s * s).powf((p - 2.0) / 2.0)
    };
    Ok(2.0 * tanh_sinh(integrand, 0.5, QUAD_REL_TOL).value)
}

/// `I_p(1)(1 + r)/2`, a lower bound for `I_p(r)` when `0 < p <= 2`.
pub fn convexity_floor(p: f64, r: f64) -> Result<f64> {
    let p = PExponent::new(p)?.get();
    if p > 2.0 {
        return Err(Error::ExponentRange {
            p,
            window: "(0, 2]",
        });
    }
    if !(r.is_finite() && r >= 0.0) {
        return Err(Error::Domain { name: "r", value: r });
    }
    Ok(ip_at_one(p)? * (1.0 + r) / 2.0)
}

/// `hi (1 + (p lo / (2 hi))²)^{1/p}` with `hi, lo` the larger and smaller of
/// `|a|, |b|`; a lower bound for `‖a z^L + b z^M‖_p`, any `p > 0`.
pub fn binomial_bound_asym(a: Complex, b: Complex, p: f64) -> Result<f64> {
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::ExponentRange {
            p,
            window: "(0, inf)",
        });
    }
    let (x, y) = (a.norm(), b.norm());
    let (hi, lo) = (x.max(y), x.min(y));
    if hi == 0.0 {
        return Err(Error::DegenerateBinomial);
    }
    let ratio = p * lo / (2.0 * hi);
    Ok(hi * (1.0 + ratio * ratio).powf(1.0 / p))
}

/// `B_p (|a|^p + |b|^p)^{1/p}`, a lower bound for `‖a z^L + b z^M‖_p` when
/// `0 < p <= 2`.
pub fn binomial_bound_sym(a: Complex, b: Complex, p: f64) -> Result<f64> {
    if !(p > 0.0 && p <= 2.0) {
        return Err(Error::ExponentRange {
            p,
            window: "(0, 2]",
        });
    }
    Ok(bp_constant(p)? * lp_pair(a.norm(), b.norm(), p))
}

/// `(x^p + y^p)^{1/p}` without overflow.
pub(crate) fn lp_pair(x: f64, y: f64, p: f64) -> f64 {
    let hi = x.max(y);
    if hi == 0.0 {
        return 0.0;
    }
    hi * (1.0 + (x.min(y) / hi).powf(p)).powf(1.0 / p)
}

//! Closed-form lower bounds for `‖F‖_p` in terms of roots and coefficients,
//! and the two constants that govern when the asymmetric bound wins.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::kernel::{bp_constant, lp_pair};
use crate::norms::mahler_roots;
use crate::poly::{Polynomial, RootDecomposition};
use crate::window::PWindow;

fn require_degree(d: &RootDecomposition) -> Result<()> {
    if d.degree() == 0 {
        Err(Error::ConstantPolynomial(0))
    } else {
        Ok(())
    }
}

/// `|a_N| Π min{1, |α_n|}`, the companion of `M(F)`; equals `|a_0 a_N| / M(F)`.
fn inner_measure(d: &RootDecomposition) -> f64 {
    d.leading.norm() * d.roots.iter().map(|r| r.norm().min(1.0)).product::<f64>()
}

/// `B_p |a_N| (Π max{1,|α|^p} + Π min{1,|α|^p})^{1/p}`, `1 <= p <= 2`.
pub fn thm1_sym(d: &RootDecomposition, p: f64) -> Result<f64> {
    require_degree(d)?;
    if !PWindow::ONE_TO_TWO.contains(p) {
        return Err(Error::ExponentRange {
            p,
            window: "[1, 2]",
        });
    }
    Ok(bp_constant(p)? * lp_pair(mahler_roots(d), inner_measure(d), p))
}

/// `M (1 + p² |a_0 a_N|² / (4 M⁴))^{1/p}`, `p >= 1`. With a root at the
/// origin the correction vanishes and the value is `M(F)`.
pub fn thm1_asym(d: &RootDecomposition, p: f64) -> Result<f64> {
    require_degree(d)?;
    if !PWindow::ONE_TO_INF.contains(p) {
        return Err(Error::ExponentRange {
            p,
            window: "[1, inf)",
        });
    }
    let m = mahler_roots(d);
    let ratio = p * inner_measure(d) / (2.0 * m);
    Ok(m * (1.0 + ratio * ratio).powf(1.0 / p))
}

/// `|a_N| (Π max{1,|α|²} + Π min{1,|α|²})^{1/2}`.
pub fn goncalves_bound(d: &RootDecomposition) -> Result<f64> {
    require_degree(d)?;
    Ok(mahler_roots(d).hypot(inner_measure(d)))
}

/// `M(F)`, as a lower bound for `‖F‖_2`.
pub fn landau_bound(d: &RootDecomposition) -> Result<f64> {
    require_degree(d)?;
    Ok(mahler_roots(d))
}

/// `(Σ |a_n|²)^{1/2}`, which is `‖F‖_2` exactly.
pub fn parseval_norm(f: &Polynomial) -> f64 {
    lq_coefficients(f, 2.0)
}

/// `max |a_n|`, a lower bound for `‖F‖_1`.
pub fn easy_l1_bound(f: &Polynomial) -> f64 {
    f.max_coeff_abs()
}

/// `(Σ |a_n|^q)^{1/q}` with `1/p + 1/q = 1`, `1 < p <= 2`.
pub fn hausdorff_young_bound(f: &Polynomial, p: f64) -> Result<f64> {
    if !PWindow::OPEN_ONE_TO_TWO.contains(p) {
        return Err(Error::ExponentRange {
            p,
            window: "(1, 2]",
        });
    }
    Ok(lq_coefficients(f, p / (p - 1.0)))
}

fn lq_coefficients(f: &Polynomial, q: f64) -> f64 {
    let scale = f.max_coeff_abs();
    let sum: f64 = f
        .coefficients()
        .iter()
        .map(|a| (a.norm() / scale).powf(q))
        .sum();
    scale * sum.powf(1.0 / q)
}

/// The value of `M(F)² / |a_0 a_N|` above which the asymmetric bound beats
/// the symmetric one at `p = 1`: `π / (2 (2 - √(4 + 2π - π²)))`.
///
/// Its reciprocal is the smaller root of `π y² / 4 - 2y + (π - 2) = 0`.
pub fn crossover_threshold() -> f64 {
    PI / (2.0 * (2.0 - (4.0 + 2.0 * PI - PI * PI).sqrt()))
}

/// Note attached wherever the crossover constant is printed.
pub const CROSSOVER_FOOTNOTE: &str = "crossover constant evaluated as pi/(2(2 - sqrt(4 + 2pi - pi^2))) \
     = 1.1576382...; a pi^2 numerator would give 3.6369... and does not solve \
     pi*y^2/4 - 2y + (pi - 2) = 0 at y = 1/threshold, so the pi numerator is used";

/// `2c² - (1 + c²) log(1 + c²)`.
fn optimal_p_defining(c: f64) -> f64 {
    let s = c * c;
    2.0 * s - (1.0 + s) * s.ln_1p()
}

/// The positive root `c` of `2c² = (1 + c²) log(1 + c²)`.
pub fn optimal_p_constant() -> f64 {
    let g = optimal_p_defining;
    let (mut lo, mut hi) = (1.9, 2.0);
    // g(1.9) > 0 > g(2.0)
    for _ in 0..30 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut c = 0.5 * (lo + hi);
    for _ in 0..4 {
        // g'(c) = 4c - 2c log(1+c²) - 2c
        let dg = 2.0 * c - 2.0 * c * (c * c).ln_1p();
        let step = g(c) / dg;
        if !step.is_finite() || step.abs() < 1e-16 {
            break;
        }
        c -= step;
    }
    c
}

/// Residual of the defining equation at `c`.
pub fn optimal_p_residual(c: f64) -> f64 {
    optimal_p_defining(c).abs()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalP {
    /// The exponent maximizing `p ↦ thm1_asym(p)`.
    pub p: f64,
    /// Comparisons are meaningful on `[1, p]`; empty when `p < 1`.
    pub window: PWindow,
}

/// `2c M² / |a_0 a_N|`.
pub fn optimal_p(d: &RootDecomposition) -> Result<OptimalP> {
    require_degree(d)?;
    if d.has_root_at_origin() {
        return Err(Error::RootAtOrigin);
    }
    let m = mahler_roots(d);
    let p = 2.0 * optimal_p_constant() * m / inner_measure(d);
    Ok(OptimalP {
        p,
        window: PWindow::new(1.0, true, p, true),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{roots, Complex};

    fn real(x: f64) -> Complex {
        Complex::new(x, 0.0)
    }

    fn worked() -> RootDecomposition {
        RootDecomposition::new(real(18.0), vec![real(4.5), real(10.0 / 9.0)]).unwrap()
    }

    fn cyc(n: usize) -> RootDecomposition {
        roots(&Polynomial::cyclotomic_binomial(n, real(1.0)).unwrap()).unwrap()
    }

    #[test]
    fn thm1_sym_examples() {
        for p in [1.0, 1.5, 2.0] {
            let want = bp_constant(p).unwrap() * 2f64.powf(1.0 / p);
            assert!((thm1_sym(&cyc(4), p).unwrap() - want).abs() < 1e-12);
        }
        assert!((thm1_sym(&worked(), 2.0).unwrap() - 18.0 * 26f64.sqrt()).abs() < 1e-11);
        let d = RootDecomposition::new(real(1.0), vec![real(2.0)]).unwrap();
        assert!((thm1_sym(&d, 1.0).unwrap() - 6.0 / PI).abs() < 1e-14);
        assert!(thm1_sym(&d, 2.5).is_err());
    }

    #[test]
    fn thm1_asym_examples() {
        assert!((thm1_asym(&worked(), 1.0).unwrap() - 90.9).abs() < 1e-12);
        assert!((thm1_asym(&worked(), 2.0).unwrap() - 8424f64.sqrt()).abs() < 1e-11);
        assert!((thm1_asym(&cyc(3), 2.0).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        assert!(thm1_asym(&worked(), 0.5).is_err());
    }

    #[test]
    fn baseline_examples() {
        assert!((goncalves_bound(&cyc(5)).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        assert!((goncalves_bound(&worked()).unwrap() - 18.0 * 26f64.sqrt()).abs() < 1e-11);
        let d = RootDecomposition::new(real(1.0), vec![real(2.0)]).unwrap();
        assert!((goncalves_bound(&d).unwrap() - 5f64.sqrt()).abs() < 1e-15);

        assert!((landau_bound(&worked()).unwrap() - 90.0).abs() < 1e-11);
        assert!((landau_bound(&cyc(3)).unwrap() - 1.0).abs() < 1e-12);
        let d = RootDecomposition::new(real(2.0), vec![real(0.5)]).unwrap();
        assert_eq!(landau_bound(&d).unwrap(), 2.0);

        let p = |c: &[f64]| Polynomial::from_real(c).unwrap();
        assert!((parseval_norm(&p(&[1.0, 1.0])) - 2f64.sqrt()).abs() < 1e-15);
        assert!((parseval_norm(&p(&[90.0, -101.0, 18.0])) - 18625f64.sqrt()).abs() < 1e-12);
        assert_eq!(parseval_norm(&p(&[0.0, 0.0, 1.0])), 1.0);

        assert_eq!(easy_l1_bound(&p(&[90.0, -101.0, 18.0])), 101.0);
        assert_eq!(easy_l1_bound(&p(&[1.0, 1.0])), 1.0);
        assert_eq!(easy_l1_bound(&p(&[-7.0])), 7.0);

        assert!((hausdorff_young_bound(&p(&[1.0, 1.0]), 2.0).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        let v = hausdorff_young_bound(&p(&[1.0, 1.0]), 1.5).unwrap();
        assert!((v - 2f64.cbrt()).abs() < 1e-15);
        let v = hausdorff_young_bound(&p(&[1.0; 4]), 1.5).unwrap();
        assert!((v - 4f64.cbrt()).abs() < 1e-15);
        assert!(hausdorff_young_bound(&p(&[1.0, 1.0]), 1.0).is_err());
    }

    #[test]
    fn crossover_constant() {
        let t = crossover_threshold();
        assert!((t - 1.157_638_2).abs() < 1e-6);
        let y = 1.0 / t;
        assert!((PI * y * y / 4.0 - 2.0 * y + (PI - 2.0)).abs() < 1e-14);

        // z - t: M = t, |a_0 a_N| = t, so M² / |a_0 a_N| = t exactly
        let d = RootDecomposition::new(real(1.0), vec![real(t)]).unwrap();
        let (s, a) = (thm1_sym(&d, 1.0).unwrap(), thm1_asym(&d, 1.0).unwrap());
        assert!((s - a).abs() < 1e-9 * a);

        let (s, a) = (thm1_sym(&worked(), 1.0).unwrap(), thm1_asym(&worked(), 1.0).unwrap());
        assert!((s - 108.0 * 2.0 / PI).abs() < 1e-11);
        assert!(a > s);
    }

    #[test]
    fn optimal_constant() {
        let c = optimal_p_constant();
        assert!((c - 1.980_291_3).abs() < 1e-6);
        assert!(optimal_p_residual(c) < 1e-10);
        assert!(optimal_p_defining(1.9) > 0.0 && optimal_p_defining(2.0) < 0.0);
    }

    #[test]
    fn optimal_p_examples() {
        let c = optimal_p_constant();
        let o = optimal_p(&worked()).unwrap();
        assert!((o.p - 10.0 * c).abs() < 1e-10);
        assert!((optimal_p(&cyc(3)).unwrap().p - 2.0 * c).abs() < 1e-9);

        let h = 1e-4;
        let f = |p: f64| thm1_asym(&worked(), p).unwrap();
        let slope = (f(o.p + h) - f(o.p - h)) / (2.0 * h);
        assert!(slope.abs() < 1e-6, "{slope}");
    }
}

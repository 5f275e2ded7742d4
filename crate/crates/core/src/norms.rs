//! Direct measurement of `‖F‖_p`, `‖F‖_∞` and Mahler's measure on the unit
//! circle. These are the ground truth every bound is checked against.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{roots, Polynomial, RootDecomposition};
use crate::quadrature::{periodic_trapezoid, periodic_trapezoid_with, QuadratureConfig};

/// A measured norm together with its refinement diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormValue {
    pub value: f64,
    /// Absolute difference between the last two refinement levels.
    pub err_estimate: f64,
    pub nodes_used: usize,
    /// False when `max_nodes` was reached before `rel_tol`.
    pub converged: bool,
}

/// Roots closer than this to the circle make the log integrand singular.
pub const LOG_SINGULARITY_GAP: f64 = 1e-6;

/// `(∫_0^1 |F(e(t))|^p dt)^{1/p}`; `p = ∞` gives the sup norm.
pub fn lp_norm(f: &Polynomial, p: f64, cfg: &QuadratureConfig) -> Result<NormValue> {
    cfg.validate()?;
    if p.is_nan() || p <= 0.0 {
        return Err(Error::ExponentRange {
            p,
            window: "(0, inf]",
        });
    }
    if p.is_infinite() {
        return Ok(NormValue {
            value: sup_norm(f),
            err_estimate: 0.0,
            nodes_used: sup_samples(f),
            converged: true,
        });
    }
    if f.is_monomial() {
        return Ok(NormValue {
            value: f.leading().norm(),
            err_estimate: 0.0,
            nodes_used: 1,
            converged: true,
        });
    }
    let g = f.stripped();
    // Scaling by the largest coefficient keeps |F|^p in range for large p.
    let scale = g.max_coeff_abs();
    let unit = g.scale((1.0 / scale).into())?;
    let integral = periodic_trapezoid(|t| unit.abs_on_circle(t).powf(p), cfg);
    let root = |x: f64| scale * x.powf(1.0 / p);
    let value = root(integral.value);
    let err_estimate = if integral.err_estimate.is_finite() {
        (root(integral.value) - root((integral.value - integral.err_estimate).max(0.0))).abs()
    } else {
        f64::NAN
    };
    Ok(NormValue {
        value,
        err_estimate,
        nodes_used: integral.nodes_used,
        converged: integral.converged,
    })
}

fn sup_samples(f: &Polynomial) -> usize {
    (4 * f.stripped_degree()).max(256)
}

/// `max |F(e(t))|`, by dense sampling followed by golden-section refinement
/// of `|F|²` inside every bracketing triple.
pub fn sup_norm(f: &Polynomial) -> f64 {
    if f.is_monomial() {
        return f.leading().norm();
    }
    let g = f.stripped();
    let n = sup_samples(f);
    let h = 1.0 / n as f64;
    let sq = |t: f64| g.abs_on_circle(t).powi(2);
    let samples: Vec<f64> = (0..n).map(|k| sq(k as f64 * h)).collect();

    let mut best = samples.iter().copied().fold(0.0, f64::max);
    for k in 0..n {
        let prev = samples[(k + n - 1) % n];
        let next = samples[(k + 1) % n];
        if samples[k] >= prev && samples[k] >= next {
            let t = k as f64 * h;
            best = best.max(golden_max(&sq, t - h, t + h));
        }
    }
    best.sqrt()
}

fn golden_max<G: Fn(f64) -> f64>(g: &G, mut lo: f64, mut hi: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - inv_phi * (hi - lo);
    let mut b = lo + inv_phi * (hi - lo);
    let (mut ga, mut gb) = (g(a), g(b));
    while hi - lo > 1e-14 {
        if ga < gb {
            lo = a;
            a = b;
            ga = gb;
            b = lo + inv_phi * (hi - lo);
            gb = g(b);
        } else {
            hi = b;
            b = a;
            gb = ga;
            a = hi - inv_phi * (hi - lo);
            ga = g(a);
        }
    }
    ga.max(gb).max(g(0.5 * (lo + hi)))
}

/// `|a_N| Π max{1, |α_n|}`.
pub fn mahler_roots(d: &RootDecomposition) -> f64 {
    d.leading.norm() * d.roots.iter().map(|r| r.norm().max(1.0)).product::<f64>()
}

/// `exp(∫ log|F(e(t))| dt)` by quadrature. A cross-check for
/// [`mahler_roots`]; refused when a root sits on or near the circle.
pub fn mahler_integral(f: &Polynomial, cfg: &QuadratureConfig) -> Result<NormValue> {
    cfg.validate()?;
    let g = f.stripped();
    if g.is_monomial() {
        return Ok(NormValue {
            value: g.leading().norm(),
            err_estimate: 0.0,
            nodes_used: 1,
            converged: true,
        });
    }
    let d = roots(&g)?;
    if let Some(r) = d
        .roots
        .iter()
        .find(|r| (r.norm() - 1.0).abs() < LOG_SINGULARITY_GAP)
    {
        return Err(Error::SingularIntegrand { modulus: r.norm() });
    }
    let tol = cfg.rel_tol;
    let integral = periodic_trapezoid_with(
        |t| g.abs_on_circle(t).ln(),
        cfg,
        |prev, cur| (cur - prev).abs() <= tol * cur.abs().max(1.0),
    );
    let value = integral.value.exp();
    let err_estimate = if integral.err_estimate.is_finite() {
        value * integral.err_estimate.exp_m1().abs()
    } else {
        f64::NAN
    };
    Ok(NormValue {
        value,
        err_estimate,
        nodes_used: integral.nodes_used,
        converged: integral.converged,
    })
}

/// The measured quantities in `M(F) ≤ ‖F‖_p ≤ ‖F‖_q ≤ ‖F‖_∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormChain {
    pub mahler: f64,
    pub lp: f64,
    pub lq: f64,
    pub sup: f64,
}

/// Relative slack allowed between consecutive links of the chain.
pub const CHAIN_SLACK: f64 = 1e-9;

impl NormChain {
    pub fn holds(&self) -> bool {
        let le = |a: f64, b: f64| a <= b * (1.0 + CHAIN_SLACK);
        le(self.mahler, self.lp) && le(self.lp, self.lq) && le(self.lq, self.sup)
    }

    /// True when every link is an equality within the slack.
    pub fn is_flat(&self) -> bool {
        let eq = |a: f64, b: f64| (a - b).abs() <= CHAIN_SLACK * b.abs();
        eq(self.mahler, self.lp) && eq(self.lp, self.lq) && eq(self.lq, self.sup)
    }

    /// True when every link is strict by more than the slack.
    pub fn is_strict(&self) -> bool {
        let lt = |a: f64, b: f64| a < b * (1.0 - CHAIN_SLACK);
        lt(self.mahler, self.lp) && lt(self.lp, self.lq) && lt(self.lq, self.sup)
    }
}

pub fn norm_chain(f: &Polynomial, p: f64, q: f64, cfg: &QuadratureConfig) -> Result<NormChain> {
    if !(p > 0.0 && q > p) {
        return Err(Error::Domain {
            name: "q - p",
            value: q - p,
        });
    }
    let mahler = if f.is_monomial() {
        f.leading().norm()
    } else {
        mahler_roots(&roots(&f.stripped())?)
    };
    Ok(NormChain {
        mahler,
        lp: lp_norm(f, p, cfg)?.value,
        lq: lp_norm(f, q, cfg)?.value,
        sup: sup_norm(f),
    })
}

pub fn norm_chain_check(f: &Polynomial, p: f64, q: f64, cfg: &QuadratureConfig) -> Result<bool> {
    Ok(norm_chain(f, p, q, cfg)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Complex;
    use std::f64::consts::{PI, SQRT_2};

    fn poly(c: &[f64]) -> Polynomial {
        Polynomial::from_real(c).unwrap()
    }

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn lp_examples() {
        let f = poly(&[1.0, 1.0]);
        assert!((lp_norm(&f, 2.0, &cfg()).unwrap().value - SQRT_2).abs() < 1e-13);
        let l1 = lp_norm(&f, 1.0, &cfg()).unwrap();
        assert!(l1.converged);
        assert!((l1.value - 4.0 / PI).abs() < 1e-9);
    }

    #[test]
    fn lp_of_z_n_minus_one_is_degree_free() {
        for n in [1, 2, 5] {
            let f = Polynomial::cyclotomic_binomial(n, Complex::new(1.0, 0.0)).unwrap();
            let v = lp_norm(&f, 1.0, &cfg()).unwrap().value;
            assert!((v - 4.0 / PI).abs() < 1e-9, "n = {n}: {v}");
        }
    }

    #[test]
    fn lp_rejects_bad_exponent() {
        let f = poly(&[1.0, 1.0]);
        assert!(lp_norm(&f, 0.0, &cfg()).is_err());
        assert!(lp_norm(&f, f64::NAN, &cfg()).is_err());
    }

    #[test]
    fn lp_infinity_is_sup() {
        let f = poly(&[1.0, 1.0, 1.0]);
        assert!((lp_norm(&f, f64::INFINITY, &cfg()).unwrap().value - 3.0).abs() < 1e-12);
    }

    #[test]
    fn sup_examples() {
        let f = poly(&[1.0, 0.0, 0.0, 1.0]);
        assert!((sup_norm(&f) - 2.0).abs() < 1e-12);
        assert!((sup_norm(&poly(&[1.0, 1.0, 1.0])) - 3.0).abs() < 1e-12);
        assert!((sup_norm(&poly(&[90.0, -101.0, 18.0])) - 209.0).abs() < 1e-9);
    }

    #[test]
    fn sup_beats_dense_sampling() {
        let f: Polynomial = "0.3-1i,2,0.1+0.7i,-1.2,0.4i".parse().unwrap();
        let dense = (0..200_000)
            .map(|k| f.abs_on_circle(k as f64 / 200_000.0))
            .fold(0.0, f64::max);
        let s = sup_norm(&f);
        assert!(s >= dense);
        assert!(s - dense < 1e-8);
    }

    #[test]
    fn mahler_examples() {
        let f = poly(&[90.0, -101.0, 18.0]);
        let d = roots(&f).unwrap();
        assert!((mahler_roots(&d) - 90.0).abs() < 1e-11);
        let m = mahler_integral(&f, &cfg()).unwrap();
        assert!((m.value - 90.0).abs() < 1e-4);

        let cyc = Polynomial::cyclotomic_binomial(4, Complex::new(1.0, 0.0)).unwrap();
        assert!((mahler_roots(&roots(&cyc).unwrap()) - 1.0).abs() < 1e-12);
        assert!((mahler_roots(&roots(&poly(&[-2.0, 1.0])).unwrap()) - 2.0).abs() < 1e-15);

        assert_eq!(mahler_integral(&poly(&[5.0]), &cfg()).unwrap().value, 5.0);
        let v = mahler_integral(&poly(&[-1.0, 2.0]), &cfg()).unwrap().value;
        assert!((v - 2.0).abs() < 1e-10);
    }

    #[test]
    fn mahler_integral_refuses_circle_roots() {
        let f = poly(&[-1.0, 0.0, 1.0]);
        assert!(matches!(
            mahler_integral(&f, &cfg()),
            Err(Error::SingularIntegrand { .. })
        ));
    }

    #[test]
    fn chain_examples() {
        assert!(norm_chain_check(&poly(&[1.0, 1.0]), 1.0, 2.0, &cfg()).unwrap());
        let flat = norm_chain(&poly(&[3.0]), 1.0, 2.0, &cfg()).unwrap();
        assert!(flat.holds() && flat.is_flat());
        let strict = norm_chain(&poly(&[90.0, -101.0, 18.0]), 1.0, 2.0, &cfg()).unwrap();
        assert!(strict.holds() && strict.is_strict());
    }

    #[test]
    fn monomial_factor_is_invisible() {
        let f = poly(&[2.0, -1.0, 0.5]);
        let g = f.shift(3).unwrap();
        for p in [1.0, 1.5, 3.0] {
            assert_eq!(
                lp_norm(&f, p, &cfg()).unwrap().value,
                lp_norm(&g, p, &cfg()).unwrap().value
            );
        }
    }
}

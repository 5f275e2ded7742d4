//! Quadrature rules shared by the norm and kernel modules.

use serde::Serialize;

use crate::error::{Error, Result};

/// Node counts and tolerance for periodic trapezoid integration on `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureConfig {
    pub initial_nodes: usize,
    pub max_nodes: usize,
    pub rel_tol: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            initial_nodes: 512,
            max_nodes: 1 << 20,
            rel_tol: 1e-10,
        }
    }
}

impl QuadratureConfig {
    pub fn new(initial_nodes: usize, max_nodes: usize, rel_tol: f64) -> Result<Self> {
        let cfg = Self {
            initial_nodes,
            max_nodes,
            rel_tol,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.initial_nodes.is_power_of_two() {
            return Err(Error::InvalidConfig(format!(
                "initial_nodes = {} is not a power of two",
                self.initial_nodes
            )));
        }
        if self.initial_nodes > self.max_nodes {
            return Err(Error::InvalidConfig(format!(
                "initial_nodes = {} exceeds max_nodes = {}",
                self.initial_nodes, self.max_nodes
            )));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "rel_tol = {} not in (0, 1)",
                self.rel_tol
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    /// Absolute difference between the last two refinement levels.
    pub err_estimate: f64,
    pub nodes_used: usize,
    pub converged: bool,
}

/// Pairwise summation; the result does not depend on thread scheduling.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    const BLOCK: usize = 32;
    if xs.len() <= BLOCK {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

/// Composite trapezoid rule for a 1-periodic integrand over `[0, 1)`, with
/// node doubling until the relative change drops below `rel_tol`.
///
/// `accept` decides convergence from `(previous, current)`; the default used
/// by [`periodic_trapezoid`] is a relative test.
pub fn periodic_trapezoid_with<G, A>(g: G, cfg: &QuadratureConfig, accept: A) -> Integral
where
    G: Fn(f64) -> f64,
    A: Fn(f64, f64) -> bool,
{
    let mut n = cfg.initial_nodes.max(1);
    let values: Vec<f64> = (0..n).map(|k| g(k as f64 / n as f64)).collect();
    let mut sum = pairwise_sum(&values);
    let mut current = sum / n as f64;

    loop {
        if 2 * n > cfg.max_nodes {
            return Integral {
                value: current,
                err_estimate: f64::NAN,
                nodes_used: n,
                converged: false,
            };
        }
        let fresh: Vec<f64> = (0..n)
            .map(|k| g((2 * k + 1) as f64 / (2 * n) as f64))
            .collect();
        sum += pairwise_sum(&fresh);
        n *= 2;
        let previous = current;
        current = sum / n as f64;
        let err = (current - previous).abs();
        if accept(previous, current) {
            return Integral {
                value: current,
                err_estimate: err,
                nodes_used: n,
                converged: true,
            };
        }
        if n >= cfg.max_nodes {
            return Integral {
                value: current,
                err_estimate: err,
                nodes_used: n,
                converged: false,
            };
        }
    }
}

pub fn periodic_trapezoid<G: Fn(f64) -> f64>(g: G, cfg: &QuadratureConfig) -> Integral {
    let tol = cfg.rel_tol;
    periodic_trapezoid_with(g, cfg, |prev, cur| {
        (cur - prev).abs() <= tol * cur.abs() || (cur == 0.0 && prev == 0.0)
    })
}

/// Double-exponential (tanh-sinh) quadrature of `f` over `[0, len]`.
///
/// `f` receives the abscissa measured from the left endpoint, computed without
/// cancellation, so integrands with a near-singularity at `0` keep full
/// relative accuracy.
pub fn tanh_sinh<F: Fn(f64) -> f64>(f: F, len: f64, rel_tol: f64) -> Integral {
    const U_MAX: f64 = 4.0;
    const MAX_LEVEL: u32 = 12;
    let half_pi = std::f64::consts::FRAC_PI_2;

    let node = |u: f64| -> f64 {
        let s = half_pi * u.sinh();
        let x = len / (1.0 + (-2.0 * s).exp());
        let cosh_s = s.cosh();
        let w = len * 0.5 * half_pi * u.cosh() / (cosh_s * cosh_s);
        if w == 0.0 || !w.is_finite() {
            0.0
        } else {
            w * f(x)
        }
    };

    let mut h = 0.5;
    let mut samples = vec![node(0.0)];
    let mut k = 1;
    while k as f64 * h <= U_MAX {
        let u = k as f64 * h;
        samples.push(node(u));
        samples.push(node(-u));
        k += 1;
    }
    let mut sum = pairwise_sum(&samples);
    let mut current = sum * h;
    let mut nodes = samples.len();

    for _ in 0..MAX_LEVEL {
        h *= 0.5;
        let mut fresh = Vec::new();
        let mut k = 1;
        while k as f64 * h <= U_MAX {
            let u = k as f64 * h;
            fresh.push(node(u));
            fresh.push(node(-u));
            k += 2;
        }
        nodes += fresh.len();
        sum += pairwise_sum(&fresh);
        let previous = current;
        current = sum * h;
        let err = (current - previous).abs();
        if err <= rel_tol * current.abs() {
            return Integral {
                value: current,
                err_estimate: err,
                nodes_used: nodes,
                converged: true,
            };
        }
    }
    Integral {
        value: current,
        err_estimate: f64::NAN,
        nodes_used: nodes,
        converged: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, TAU};

    #[test]
    fn config_validation() {
        assert!(QuadratureConfig::new(512, 1 << 20, 1e-10).is_ok());
        assert!(QuadratureConfig::new(500, 1 << 20, 1e-10).is_err());
        assert!(QuadratureConfig::new(1024, 512, 1e-10).is_err());
        assert!(QuadratureConfig::new(512, 1024, 0.0).is_err());
        assert!(QuadratureConfig::new(512, 1024, 1.0).is_err());
    }

    #[test]
    fn trapezoid_is_spectral_for_smooth_periodic() {
        // ∫ exp(cos 2πt) dt = I_0(1)
        let i0_1 = 1.266_065_877_752_008_4;
        let r = periodic_trapezoid(|t| (TAU * t).cos().exp(), &QuadratureConfig::default());
        assert!(r.converged);
        assert!((r.value - i0_1).abs() < 1e-14);
        assert_eq!(r.nodes_used, 1024);
    }

    #[test]
    fn trapezoid_flags_nonconvergence() {
        let cfg = QuadratureConfig::new(4, 16, 1e-15).unwrap();
        let r = periodic_trapezoid(|t| (TAU * t).sin().abs().sqrt(), &cfg);
        assert!(!r.converged);
        assert_eq!(r.nodes_used, 16);
    }

    #[test]
    fn tanh_sinh_endpoint_singularity() {
        // ∫_0^1 x^{-1/2} dx = 2
        let r = tanh_sinh(|x| x.powf(-0.5), 1.0, 1e-13);
        assert!(r.converged);
        assert!((r.value - 2.0).abs() < 1e-12);
        // ∫_0^{1/2} 2 sin(πt) dt = 2/π
        let r = tanh_sinh(|t| 2.0 * (PI * t).sin(), 0.5, 1e-14);
        assert!((r.value - 2.0 / PI).abs() < 1e-14);
    }

    #[test]
    fn pairwise_matches_naive_on_small_input() {
        let xs: Vec<f64> = (0..100).map(|k| k as f64).collect();
        assert_eq!(pairwise_sum(&xs), 4950.0);
    }
}

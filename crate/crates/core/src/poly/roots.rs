//! Simultaneous root finding (Aberth–Ehrlich) with a Newton polish pass.

use std::cmp::Ordering;
use std::f64::consts::TAU;

use super::{normalize, Complex, Polynomial};
use crate::error::{Error, Result};

const CLUSTER_GAP: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootFinderConfig {
    pub max_iterations: usize,
    /// Converged when every correction is below `tolerance * (1 + |root|)`.
    pub tolerance: f64,
    /// Largest acceptable relative coefficient residual of the reconstruction.
    pub residual_cap: f64,
    pub polish_steps: usize,
}

impl Default for RootFinderConfig {
    fn default() -> Self {
        Self {
            max_iterations: 200,
            tolerance: 1e-13,
            residual_cap: 1e-6,
            polish_steps: 3,
        }
    }
}

/// `F = leading * Π (z - root)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootDecomposition {
    pub leading: Complex,
    /// With multiplicity, ordered by descending modulus then ascending
    /// argument in `[0, 2π)`.
    pub roots: Vec<Complex>,
    /// Max coefficient error of the reconstruction relative to the largest
    /// source coefficient.
    pub residual: f64,
}

impl RootDecomposition {
    /// Builds a decomposition from known roots; `residual` is zero.
    pub fn new(leading: Complex, mut roots: Vec<Complex>) -> Result<Self> {
        if leading == Complex::new(0.0, 0.0) {
            return Err(Error::ZeroPolynomial);
        }
        let finite = |c: &Complex| c.re.is_finite() && c.im.is_finite();
        if !finite(&leading) || !roots.iter().all(finite) {
            return Err(Error::NonFinite("root decomposition"));
        }
        sort_roots(&mut roots);
        Ok(Self {
            leading,
            roots,
            residual: 0.0,
        })
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn has_root_at_origin(&self) -> bool {
        self.roots.iter().any(|r| *r == Complex::new(0.0, 0.0))
    }

    /// `|a_0| = |a_N| Π |α_n|`.
    pub fn constant_abs(&self) -> f64 {
        self.leading.norm() * self.roots.iter().map(|r| r.norm()).product::<f64>()
    }
}

/// All `N` roots of `F` with multiplicity; the `z^k` factor contributes `k`
/// exact zeros.
pub fn roots(f: &Polynomial) -> Result<RootDecomposition> {
    roots_with(f, &RootFinderConfig::default())
}

pub fn roots_with(f: &Polynomial, cfg: &RootFinderConfig) -> Result<RootDecomposition> {
    if f.degree() == 0 {
        return Err(Error::ConstantPolynomial(0));
    }
    let coeffs = f.coefficients();
    // Clustered roots stall the correction criterion near sqrt(eps) but still
    // reconstruct the polynomial, so acceptance is decided by the residual.
    let (mut found, iterations, _converged) = aberth(coeffs, cfg);
    // A k-fold cluster is refined as a whole: its centroid is a simple root
    // of the (k-1)-th derivative, and the members move with it.
    for cluster in clusters(&found) {
        let k = cluster.len();
        let centroid = cluster.iter().map(|&i| found[i]).sum::<Complex>() / k as f64;
        let target = derivative(coeffs, k - 1);
        let moved = polish(&target, centroid, cfg.polish_steps) - centroid;
        for i in cluster {
            found[i] += moved;
        }
    }
    for z in found.iter_mut() {
        if z.im.abs() <= 4.0 * f64::EPSILON * z.norm() {
            z.im = 0.0;
        }
    }
    found.extend(std::iter::repeat_n(Complex::new(0.0, 0.0), f.zero_factor()));
    sort_roots(&mut found);

    let mut d = RootDecomposition {
        leading: f.leading(),
        roots: found,
        residual: 0.0,
    };
    d.residual = relative_residual(&d, f);
    if !d.residual.is_finite() || d.residual > cfg.residual_cap {
        return Err(Error::RootFindingFailed {
            iterations,
            residual: d.residual,
        });
    }
    Ok(d)
}

/// Expands `leading * Π (z - α)`.
pub fn reconstruct(d: &RootDecomposition) -> Result<Polynomial> {
    normalize(&expand(d.leading, &d.roots))
}

pub(crate) fn expand(leading: Complex, roots: &[Complex]) -> Vec<Complex> {
    let mut out = vec![leading];
    for &r in roots {
        out.push(Complex::new(0.0, 0.0));
        for k in (1..out.len()).rev() {
            let prev = out[k - 1];
            out[k] = out[k] * -r + prev;
        }
        out[0] *= -r;
    }
    out
}

fn relative_residual(d: &RootDecomposition, f: &Polynomial) -> f64 {
    let rebuilt = expand(d.leading, &d.roots);
    let source = f.full_coefficients();
    let scale = f.max_coeff_abs();
    rebuilt
        .iter()
        .zip(source.iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
        / scale
}

fn sort_roots(roots: &mut [Complex]) {
    // Quantized modulus keeps the order total when moduli agree to rounding.
    let key = |z: &Complex| {
        let m = (z.norm() * 1e9).round() as i64;
        let arg = z.im.atan2(z.re).rem_euclid(TAU);
        (m, arg)
    };
    roots.sort_by(|a, b| {
        let (ma, aa) = key(a);
        let (mb, ab) = key(b);
        mb.cmp(&ma)
            .then(aa.partial_cmp(&ab).unwrap_or(Ordering::Equal))
    });
}

/// `p(z) / p'(z)`, evaluated through the reversed polynomial when `|z| > 1`
/// so large iterates cannot overflow.
fn newton_ratio(coeffs: &[Complex], z: Complex) -> Complex {
    let n = coeffs.len() - 1;
    if z.norm() <= 1.0 {
        let mut p = Complex::new(0.0, 0.0);
        let mut dp = Complex::new(0.0, 0.0);
        for &a in coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        p / dp
    } else {
        // p(z) = z^n q(w), q(w) = Σ a_k w^{n-k}, w = 1/z
        // p'(z) = z^{n-1} (n q(w) - w q'(w))
        let w = z.inv();
        let mut q = Complex::new(0.0, 0.0);
        let mut dq = Complex::new(0.0, 0.0);
        for &a in coeffs.iter() {
            dq = dq * w + q;
            q = q * w + a;
        }
        z * q / (q * n as f64 - w * dq)
    }
}

fn aberth(coeffs: &[Complex], cfg: &RootFinderConfig) -> (Vec<Complex>, usize, bool) {
    let n = coeffs.len() - 1;
    if n == 0 {
        return (Vec::new(), 0, true);
    }
    let lead = coeffs[n];
    if n == 1 {
        return (vec![-coeffs[0] / lead], 0, true);
    }
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .map(|a| (a / lead).norm())
            .fold(0.0, f64::max);
    // Offset angle breaks the symmetry with roots of unity.
    let mut z: Vec<Complex> = (0..n)
        .map(|k| Complex::from_polar(radius, TAU * k as f64 / n as f64 + 0.4))
        .collect();

    for iter in 1..=cfg.max_iterations {
        let mut worst = 0.0f64;
        for i in 0..n {
            let ratio = newton_ratio(coeffs, z[i]);
            if ratio == Complex::new(0.0, 0.0) {
                continue;
            }
            let repulsion: Complex = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let mut step = ratio / (Complex::new(1.0, 0.0) - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                step = if ratio.re.is_finite() && ratio.im.is_finite() {
                    ratio
                } else {
                    Complex::from_polar(1e-3 * (1.0 + z[i].norm()), i as f64)
                };
            }
            z[i] -= step;
            worst = worst.max(step.norm() / (1.0 + z[i].norm()));
        }
        if worst < cfg.tolerance {
            return (z, iter, true);
        }
    }
    (z, cfg.max_iterations, false)
}

/// Groups indices whose roots lie within `CLUSTER_GAP` of each other
/// (transitively).
fn clusters(z: &[Complex]) -> Vec<Vec<usize>> {
    let mut label: Vec<usize> = (0..z.len()).collect();
    for i in 0..z.len() {
        for j in 0..i {
            if (z[i] - z[j]).norm() <= CLUSTER_GAP * (1.0 + z[i].norm()) {
                let (from, to) = (label[i], label[j]);
                for l in label.iter_mut().filter(|l| **l == from) {
                    *l = to;
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, &l) in label.iter().enumerate() {
        match groups.iter_mut().find(|g| label[g[0]] == l) {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }
    groups
}

fn derivative(coeffs: &[Complex], order: usize) -> Vec<Complex> {
    let mut d = coeffs.to_vec();
    for _ in 0..order {
        d = d
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, a)| a * n as f64)
            .collect();
    }
    d
}

/// Newton steps accepted only while they shrink.
fn polish(coeffs: &[Complex], mut z: Complex, steps: usize) -> Complex {
    let mut last = f64::INFINITY;
    for _ in 0..steps {
        let step = newton_ratio(coeffs, z);
        let size = step.norm();
        if !size.is_finite() || size >= last || size == 0.0 {
            break;
        }
        z -= step;
        last = size;
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(x: f64) -> Complex {
        Complex::new(x, 0.0)
    }

    #[test]
    fn worked_example_roots() {
        let f = Polynomial::from_real(&[90.0, -101.0, 18.0]).unwrap();
        let d = roots(&f).unwrap();
        assert_eq!(d.leading, real(18.0));
        assert!((d.roots[0] - real(4.5)).norm() < 1e-13);
        assert!((d.roots[1] - real(10.0 / 9.0)).norm() < 1e-13);
    }

    #[test]
    fn roots_of_unity() {
        for n in 1..=9 {
            let f = Polynomial::cyclotomic_binomial(n, real(1.0)).unwrap();
            let d = roots(&f).unwrap();
            assert_eq!(d.roots.len(), n);
            for r in &d.roots {
                assert!((r.norm() - 1.0).abs() < 1e-13);
                assert!((r.powu(n as u32) - real(1.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn quadratic_against_formula() {
        // (z-2)(z-3)
        let f = Polynomial::from_real(&[6.0, -5.0, 1.0]).unwrap();
        let d = roots(&f).unwrap();
        let disc = (25.0f64 - 24.0).sqrt();
        let expected = [(5.0 + disc) / 2.0, (5.0 - disc) / 2.0];
        for (r, e) in d.roots.iter().zip(expected) {
            assert!((r - real(e)).norm() < 1e-13);
        }
    }

    #[test]
    fn double_root_reconstructs() {
        let f = Polynomial::from_real(&[1.0, -2.0, 1.0]).unwrap();
        let d = roots(&f).unwrap();
        assert!(d.residual < 1e-12);
        for r in &d.roots {
            assert!((r - real(1.0)).norm() < 1e-6);
        }
    }

    #[test]
    fn zero_factor_gives_zero_roots() {
        let f = Polynomial::from_real(&[0.0, -2.0, 1.0]).unwrap();
        let d = roots(&f).unwrap();
        assert_eq!(d.roots.len(), 2);
        assert!(d.has_root_at_origin());
        assert_eq!(d.roots[1], real(0.0));
    }

    #[test]
    fn reconstruct_examples() {
        let d = RootDecomposition::new(real(18.0), vec![real(4.5), real(10.0 / 9.0)]).unwrap();
        let f = reconstruct(&d).unwrap();
        let want = [90.0, -101.0, 18.0];
        for (a, w) in f.coefficients().iter().zip(want) {
            assert!((a - real(w)).norm() < 1e-12);
        }
        let one = reconstruct(&RootDecomposition::new(real(1.0), vec![]).unwrap()).unwrap();
        assert_eq!(one.coefficients(), &[real(1.0)]);
        let sq = reconstruct(&RootDecomposition::new(real(1.0), vec![real(1.0); 2]).unwrap())
            .unwrap();
        assert_eq!(sq.coefficients(), &[real(1.0), real(-2.0), real(1.0)]);
    }

    #[test]
    fn constant_has_no_roots() {
        let f = Polynomial::from_real(&[3.0]).unwrap();
        assert_eq!(roots(&f), Err(Error::ConstantPolynomial(0)));
    }
}

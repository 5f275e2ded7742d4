//! Root-of-unity averaging. For `K = M - L`,
//! `(1/K) Σ_k ζ^{-kL} F(ζ^k z)` keeps exactly the coefficients with
//! `n ≡ L (mod K)`; when `M - L > max(L, N - M)` those are `a_L` and `a_M`
//! alone, and the average has `L_p` norm at most `‖F‖_p`.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{binomial_bound_asym, binomial_bound_sym};
use crate::poly::{normalize, Complex, Polynomial};
use crate::window::PWindow;

/// Coefficients whose modulus falls below this fraction of the largest are
/// rounding residue of the average and are snapped to zero.
const SNAP: f64 = 1e-13;
/// Required agreement between the average and congruence selection.
const FILTER_AGREEMENT: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoefficientPair {
    pub l: usize,
    pub m: usize,
    #[serde(skip)]
    pub a_l: Complex,
    #[serde(skip)]
    pub a_m: Complex,
}

impl CoefficientPair {
    /// The pair `(L, M)` of `f`, checked for admissibility.
    pub fn of(f: &Polynomial, l: usize, m: usize) -> Result<Self> {
        let n = f.degree();
        if !(l < m && m <= n) || !is_admissible(n, l, m) {
            return Err(Error::InadmissiblePair {
                l,
                m,
                surviving: surviving_indices(n, l, m),
            });
        }
        Ok(Self {
            l,
            m,
            a_l: f.coeff(l),
            a_m: f.coeff(m),
        })
    }

    /// `K = M - L`.
    pub fn k(&self) -> usize {
        self.m - self.l
    }

    pub fn label(&self) -> String {
        format!("({},{})", self.l, self.m)
    }
}

/// `M - L > max(L, N - M)`.
pub fn is_admissible(n: usize, l: usize, m: usize) -> bool {
    l < m && m <= n && m - l > l.max(n - m)
}

/// Indices `0..=N` congruent to `L` modulo `M - L`.
fn surviving_indices(n: usize, l: usize, m: usize) -> Vec<usize> {
    if m <= l {
        return Vec::new();
    }
    let k = m - l;
    (0..=n).filter(|i| i % k == l % k).collect()
}

/// Every admissible pair of `f` in lexicographic `(L, M)` order.
pub fn admissible_pairs(f: &Polynomial) -> Vec<CoefficientPair> {
    let n = f.degree();
    let mut out = Vec::new();
    for l in 0..n {
        for m in l + 1..=n {
            if is_admissible(n, l, m) {
                out.push(CoefficientPair {
                    l,
                    m,
                    a_l: f.coeff(l),
                    a_m: f.coeff(m),
                });
            }
        }
    }
    out
}

/// `Σ_{n ≡ L (mod K)} a_n z^n`, the selection the average should produce.
pub fn congruence_select(f: &Polynomial, l: usize, m: usize) -> Result<Vec<Complex>> {
    if m <= l {
        return Err(Error::Domain {
            name: "M - L",
            value: m as f64 - l as f64,
        });
    }
    let k = m - l;
    Ok(f
        .full_coefficients()
        .iter()
        .enumerate()
        .map(|(n, &a)| {
            if n % k == l % k {
                a
            } else {
                Complex::new(0.0, 0.0)
            }
        })
        .collect())
}

/// The explicit average `(1/K) Σ_k ζ^{-kL} F(ζ^k z)`, coefficientwise.
fn root_of_unity_average(f: &Polynomial, l: usize, k: usize) -> Vec<Complex> {
    let coeffs = f.full_coefficients();
    let mut out = vec![Complex::new(0.0, 0.0); coeffs.len()];
    for j in 0..k {
        // F(ζ^j z) has coefficients a_n ζ^{jn}; the twist contributes ζ^{-jL}.
        for (n, (acc, &a)) in out.iter_mut().zip(coeffs.iter()).enumerate() {
            let turns = ((j * n) % k) as f64 - ((j * l) % k) as f64;
            *acc += a * Complex::from_polar(1.0, TAU * turns / k as f64);
        }
    }
    let scale = coeffs.iter().map(|a| a.norm()).fold(0.0, f64::max);
    for c in out.iter_mut() {
        *c /= k as f64;
        if c.norm() < SNAP * scale {
            *c = Complex::new(0.0, 0.0);
        }
    }
    out
}

/// `a_L z^L + a_M z^M`, computed by averaging and checked against
/// congruence selection.
pub fn filter(f: &Polynomial, pair: &CoefficientPair) -> Result<Polynomial> {
    let (n, l, m) = (f.degree(), pair.l, pair.m);
    if !is_admissible(n, l, m) {
        return Err(Error::InadmissiblePair {
            l,
            m,
            surviving: surviving_indices(n, l, m),
        });
    }
    let averaged = root_of_unity_average(f, l, m - l);
    let selected = congruence_select(f, l, m)?;
    let scale = f.max_coeff_abs();
    let gap = averaged
        .iter()
        .zip(selected.iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
        / scale;
    if gap > FILTER_AGREEMENT {
        return Err(Error::FilterMismatch(gap));
    }
    normalize(&averaged)
}

/// One bound derived from a coefficient pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairBound {
    /// `None` when `p` lies outside `window` or the hypotheses fail.
    pub value: Option<f64>,
    pub window: PWindow,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairBounds {
    /// `|a_L| + |a_M|` against `‖F‖_∞`.
    pub sup: PairBound,
    /// `B_p (|a_L|^p + |a_M|^p)^{1/p}`, `1 <= p <= 2`.
    pub sym: PairBound,
    /// The max/min binomial form, `p >= 1`, `(a_L, a_M) != (0, 0)`.
    pub asym: PairBound,
}

pub fn pair_bounds(pair: &CoefficientPair, p: f64) -> Result<PairBounds> {
    if p.is_nan() || p <= 0.0 {
        return Err(Error::ExponentRange {
            p,
            window: "(0, inf]",
        });
    }
    let (a, b) = (pair.a_l, pair.a_m);
    let sup_value = PWindow::INFINITY_ONLY
        .contains(p)
        .then(|| a.norm() + b.norm());
    let sym_value = if PWindow::ONE_TO_TWO.contains(p) {
        Some(binomial_bound_sym(a, b, p)?)
    } else {
        None
    };
    let both_zero = a.norm() == 0.0 && b.norm() == 0.0;
    let asym_value = if PWindow::ONE_TO_INF.contains(p) && p.is_finite() && !both_zero {
        Some(binomial_bound_asym(a, b, p)?)
    } else {
        None
    };
    Ok(PairBounds {
        sup: PairBound {
            value: sup_value,
            window: PWindow::INFINITY_ONLY,
        },
        sym: PairBound {
            value: sym_value,
            window: PWindow::ONE_TO_TWO,
        },
        asym: PairBound {
            value: asym_value,
            window: PWindow::ONE_TO_INF,
        },
    })
}

//! Dense complex polynomials in ascending-degree form.
//!
//! A [`Polynomial`] is always stored normalized: trailing zero coefficients
//! are stripped and any leading run of zeros `a_0 = ... = a_{k-1} = 0` is
//! recorded as a `z^k` factor. On the unit circle `|z^k| = 1`, so every norm
//! in this crate is blind to that factor.

mod parse;
mod roots;

use std::fmt;

pub use num_complex::Complex64 as Complex;
pub use roots::{reconstruct, roots, RootDecomposition, RootFinderConfig};

use crate::error::{Error, Result};

/// Largest total degree accepted anywhere in the crate.
pub const MAX_DEGREE: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex>,
    zero_factor: usize,
}

/// Strips trailing zeros and factors out leading zeros.
pub fn normalize(raw: &[Complex]) -> Result<Polynomial> {
    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }
    if raw.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(Error::NonFinite("polynomial coefficients"));
    }
    let first = raw
        .iter()
        .position(|c| *c != Complex::new(0.0, 0.0))
        .ok_or(Error::ZeroPolynomial)?;
    let last = raw
        .iter()
        .rposition(|c| *c != Complex::new(0.0, 0.0))
        .expect("a nonzero coefficient exists");
    if last > MAX_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: last,
            max: MAX_DEGREE,
        });
    }
    Ok(Polynomial {
        coeffs: raw[first..=last].to_vec(),
        zero_factor: first,
    })
}

impl Polynomial {
    pub fn new(raw: &[Complex]) -> Result<Self> {
        normalize(raw)
    }

    pub fn from_real(raw: &[f64]) -> Result<Self> {
        let raw: Vec<Complex> = raw.iter().map(|&x| Complex::new(x, 0.0)).collect();
        normalize(&raw)
    }

    pub fn constant(c: Complex) -> Result<Self> {
        normalize(&[c])
    }

    /// `c * (z^n - 1)`, the family on which the symmetric bounds are sharp.
    pub fn cyclotomic_binomial(n: usize, c: Complex) -> Result<Self> {
        let mut raw = vec![Complex::new(0.0, 0.0); n + 1];
        raw[0] = -c;
        raw[n] += c;
        normalize(&raw)
    }

    /// Stored coefficients, starting at the first nonzero one.
    pub fn coefficients(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn zero_factor(&self) -> usize {
        self.zero_factor
    }

    /// Full ascending coefficient sequence `a_0..=a_N`, zeros included.
    pub fn full_coefficients(&self) -> Vec<Complex> {
        let mut out = vec![Complex::new(0.0, 0.0); self.zero_factor];
        out.extend_from_slice(&self.coeffs);
        out
    }

    /// Total degree `N`, counting the `z^k` factor.
    pub fn degree(&self) -> usize {
        self.zero_factor + self.coeffs.len() - 1
    }

    /// Degree of the polynomial with the `z^k` factor removed.
    pub fn stripped_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// True when `|F|` is constant on the unit circle.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading(&self) -> Complex {
        *self.coeffs.last().expect("normalized polynomial is nonempty")
    }

    /// Coefficient `a_n` of the full polynomial (zero outside `0..=N`).
    pub fn coeff(&self, n: usize) -> Complex {
        if n < self.zero_factor {
            return Complex::new(0.0, 0.0);
        }
        self.coeffs
            .get(n - self.zero_factor)
            .copied()
            .unwrap_or_else(|| Complex::new(0.0, 0.0))
    }

    /// `F / z^k`: identical values in modulus on the circle, nonzero constant term.
    pub fn stripped(&self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.clone(),
            zero_factor: 0,
        }
    }

    pub fn max_coeff_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn evaluate(&self, z: Complex) -> Complex {
        let inner = horner(&self.coeffs, z);
        if self.zero_factor == 0 {
            inner
        } else {
            inner * z.powu(self.zero_factor as u32)
        }
    }

    /// Value of the stripped polynomial on the circle at `e(t) = exp(2 pi i t)`.
    /// Same modulus as `F(e(t))`.
    pub(crate) fn abs_on_circle(&self, t: f64) -> f64 {
        let (s, c) = (std::f64::consts::TAU * t).sin_cos();
        horner(&self.coeffs, Complex::new(c, s)).norm()
    }

    pub fn scale(&self, c: Complex) -> Result<Polynomial> {
        let raw: Vec<Complex> = self.full_coefficients().iter().map(|a| a * c).collect();
        normalize(&raw)
    }

    /// `F(w z)`.
    pub fn compose_scalar(&self, w: Complex) -> Result<Polynomial> {
        let mut pow = Complex::new(1.0, 0.0);
        let mut raw = Vec::with_capacity(self.degree() + 1);
        for a in self.full_coefficients() {
            raw.push(a * pow);
            pow *= w;
        }
        normalize(&raw)
    }

    /// `z^k F(z)`.
    pub fn shift(&self, k: usize) -> Result<Polynomial> {
        if self.degree() + k > MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree: self.degree() + k,
                max: MAX_DEGREE,
            });
        }
        Ok(Polynomial {
            coeffs: self.coeffs.clone(),
            zero_factor: self.zero_factor + k,
        })
    }
}

pub(crate) fn horner(coeffs: &[Complex], z: Complex) -> Complex {
    coeffs
        .iter()
        .rev()
        .fold(Complex::new(0.0, 0.0), |acc, &a| acc * z + a)
}

/// `Σ a_n z^n` for a raw coefficient slice.
pub fn evaluate(f: &Polynomial, z: Complex) -> Complex {
    f.evaluate(z)
}

pub(crate) fn fmt_complex(c: Complex, f: &mut impl fmt::Write) -> fmt::Result {
    let re = if c.re == 0.0 { 0.0 } else { c.re };
    if c.im == 0.0 {
        write!(f, "{re}")
    } else if c.im > 0.0 {
        write!(f, "{re}+{}i", c.im)
    } else {
        write!(f, "{re}-{}i", -c.im)
    }
}

impl fmt::Display for Polynomial {
    /// Comma-separated ascending coefficients, the same format `FromStr` reads.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.zero_factor {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("0")?;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 || self.zero_factor > 0 {
                f.write_str(",")?;
            }
            fmt_complex(*c, f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    #[test]
    fn normalize_factors_leading_zeros() {
        let p = normalize(&[c(0.0), c(0.0), c(1.0)]).unwrap();
        assert_eq!(p.coefficients(), &[c(1.0)]);
        assert_eq!(p.zero_factor(), 2);
        assert_eq!(p.degree(), 2);
    }

    #[test]
    fn normalize_keeps_worked_example() {
        let p = Polynomial::from_real(&[90.0, -101.0, 18.0]).unwrap();
        assert_eq!(p.coefficients(), &[c(90.0), c(-101.0), c(18.0)]);
        assert_eq!(p.zero_factor(), 0);
    }

    #[test]
    fn normalize_strips_trailing_zero() {
        let p = Polynomial::from_real(&[1.0, 1.0, 0.0]).unwrap();
        assert_eq!(p.coefficients(), &[c(1.0), c(1.0)]);
        assert_eq!(p.zero_factor(), 0);
    }

    #[test]
    fn normalize_rejects_zero_and_nonfinite() {
        assert_eq!(Polynomial::from_real(&[0.0, 0.0]), Err(Error::ZeroPolynomial));
        assert_eq!(normalize(&[]), Err(Error::EmptyInput));
        assert!(matches!(
            Polynomial::from_real(&[1.0, f64::NAN]),
            Err(Error::NonFinite(_))
        ));
    }

    #[test]
    fn normalize_is_idempotent() {
        let p = Polynomial::from_real(&[0.0, 3.0, -1.0, 0.0, 0.0]).unwrap();
        let q = normalize(&p.full_coefficients()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn evaluate_examples() {
        let f = Polynomial::from_real(&[-1.0, 0.0, 1.0]).unwrap();
        assert_eq!(f.evaluate(c(1.0)), c(0.0));
        let g = Polynomial::from_real(&[90.0, -101.0, 18.0]).unwrap();
        assert_eq!(g.evaluate(c(1.0)), c(7.0));
        assert_eq!(g.evaluate(c(-1.0)), c(209.0));
    }

    #[test]
    fn evaluate_includes_monomial_factor() {
        let f = Polynomial::from_real(&[0.0, 0.0, 1.0, 1.0]).unwrap();
        assert_eq!(f.evaluate(c(2.0)), c(12.0));
    }

    #[test]
    fn display_round_trips_format() {
        let f = normalize(&[c(0.0), Complex::new(1.5, -2.0), c(-3.0)]).unwrap();
        assert_eq!(f.to_string(), "0,1.5-2i,-3");
        let g: Polynomial = f.to_string().parse().unwrap();
        assert_eq!(f, g);
    }
}

//! Reflecting a subset `E` of the roots through the unit circle.
//!
//! `G_E = a_N Π_{n∈E} (1 - ᾱ_n z) Π_{m∉E} (z - α_m)` has the same modulus as
//! `F` on the circle, so every norm of `G_E` equals that of `F`, while its
//! edge coefficients
//!
//! ```text
//! b_0(E) = a_N Π_{m∉E} (-α_m),    b_N(E) = a_N Π_{n∈E} (-ᾱ_n)
//! ```
//!
//! move with `E`. Applying the binomial bounds to `b_0 + b_N z^N` gives one
//! lower bound per subset.

use std::fmt;
use std::io;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{binomial_bound_asym, bp_constant, lp_pair};
use crate::norms::mahler_roots;
use crate::poly::{normalize, roots, Complex, Polynomial, RootDecomposition};
use crate::window::PWindow;

/// Largest degree for which [`scan_subsets`] enumerates all `2^N` subsets.
pub const SCAN_CAP: usize = 24;

/// Roots this close to the circle (from outside) still count as `|α| <= 1`.
pub const CANONICAL_SLACK: f64 = 1e-10;

/// Relative window within which two subset values count as tied.
const TIE_REL: f64 = 1e-12;

/// A subset of root indices, stored as a bit mask over `0..N`.
/// Displayed 1-based, e.g. `{1,3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SubsetChoice(u64);

impl SubsetChoice {
    pub const EMPTY: Self = Self(0);

    pub fn from_mask(mask: u64) -> Self {
        Self(mask)
    }

    /// From 1-based indices.
    pub fn from_indices(indices: &[usize], degree: usize) -> Result<Self> {
        let mut mask = 0u64;
        for &i in indices {
            if i == 0 || i > degree {
                return Err(Error::SubsetIndex { index: i, degree });
            }
            mask |= 1 << (i - 1);
        }
        Ok(Self(mask))
    }

    pub fn full(degree: usize) -> Self {
        if degree >= 64 {
            Self(u64::MAX)
        } else {
            Self((1u64 << degree) - 1)
        }
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    /// Whether the 0-based root index `i` is in the subset.
    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1 << i) != 0
    }

    /// 1-based indices in ascending order.
    pub fn indices(self) -> Vec<usize> {
        (0..64).filter(|&i| self.contains(i)).map(|i| i + 1).collect()
    }

    fn check(self, degree: usize) -> Result<()> {
        match self.indices().into_iter().find(|&i| i > degree) {
            Some(index) => Err(Error::SubsetIndex { index, degree }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for SubsetChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for SubsetChoice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeCoefficients {
    pub b0: Complex,
    pub bn: Complex,
    /// `M(F) / |b_0|`, at least 1.
    pub r: f64,
}

fn require_nonzero_roots(d: &RootDecomposition) -> Result<()> {
    if d.degree() == 0 {
        return Err(Error::ConstantPolynomial(0));
    }
    if d.has_root_at_origin() {
        return Err(Error::RootAtOrigin);
    }
    Ok(())
}

pub fn edge_coeffs(d: &RootDecomposition, e: SubsetChoice) -> Result<EdgeCoefficients> {
    require_nonzero_roots(d)?;
    e.check(d.degree())?;
    let mut b0 = d.leading;
    let mut bn = d.leading;
    for (i, &alpha) in d.roots.iter().enumerate() {
        if e.contains(i) {
            bn *= -alpha.conj();
        } else {
            b0 *= -alpha;
        }
    }
    Ok(EdgeCoefficients {
        b0,
        bn,
        r: mahler_roots(d) / b0.norm(),
    })
}

/// `G_E` expanded from a root decomposition.
pub fn blaschke_poly_from_roots(d: &RootDecomposition, e: SubsetChoice) -> Result<Polynomial> {
    require_nonzero_roots(d)?;
    e.check(d.degree())?;
    let mut coeffs = vec![d.leading];
    for (i, &alpha) in d.roots.iter().enumerate() {
        // multiply by (c0 + c1 z)
        let (c0, c1) = if e.contains(i) {
            (Complex::new(1.0, 0.0), -alpha.conj())
        } else {
            (-alpha, Complex::new(1.0, 0.0))
        };
        coeffs.push(Complex::new(0.0, 0.0));
        for k in (1..coeffs.len()).rev() {
            coeffs[k] = coeffs[k] * c0 + coeffs[k - 1] * c1;
        }
        coeffs[0] *= c0;
    }
    normalize(&coeffs)
}

pub fn blaschke_poly(f: &Polynomial, e: SubsetChoice) -> Result<Polynomial> {
    if f.zero_factor() > 0 {
        return Err(Error::RootAtOrigin);
    }
    blaschke_poly_from_roots(&roots(f)?, e)
}

/// `B_p (|b_0|^p + |b_N|^p)^{1/p}`, `1 <= p <= 2`.
pub fn gen_bound_sym(d: &RootDecomposition, e: SubsetChoice, p: f64) -> Result<f64> {
    if !PWindow::ONE_TO_TWO.contains(p) {
        return Err(Error::ExponentRange {
            p,
            window: "[1, 2]",
        });
    }
    let edges = edge_coeffs(d, e)?;
    Ok(bp_constant(p)? * lp_pair(edges.b0.norm(), edges.bn.norm(), p))
}

/// Which shape of the asymmetric subset bound to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AsymForm {
    /// The binomial bound applied to the edges with the larger one outside:
    /// `hi (1 + (p lo / (2 hi))²)^{1/p}`.
    Proven,
    /// `|b_0| (1 + p² |a_0 a_N|² / (4 |b_0|⁴))^{1/p}` with `b_0` taken as is,
    /// even when it is the smaller edge. Not established as a bound in that
    /// case; kept for comparison and stress testing only.
    Remark,
}

pub fn gen_bound_asym(d: &RootDecomposition, e: SubsetChoice, p: f64, form: AsymForm) -> Result<f64> {
    if !PWindow::ONE_TO_INF.contains(p) {
        return Err(Error::ExponentRange {
            p,
            window: "[1, inf)",
        });
    }
    let edges = edge_coeffs(d, e)?;
    match form {
        AsymForm::Proven => binomial_bound_asym(edges.b0, edges.bn, p),
        AsymForm::Remark => {
            let outer = edges.b0.norm();
            let product = d.constant_abs() * d.leading.norm();
            let ratio = p * product / (2.0 * outer * outer);
            Ok(outer * (1.0 + ratio * ratio).powf(1.0 / p))
        }
    }
}

/// `{n : |α_n| <= 1}`, with a `1e-10` allowance for roots computed on the
/// circle that land just outside it.
pub fn canonical_subset(d: &RootDecomposition) -> SubsetChoice {
    let mut mask = 0u64;
    for (i, alpha) in d.roots.iter().enumerate() {
        if alpha.norm() <= 1.0 + CANONICAL_SLACK {
            mask |= 1 << i;
        }
    }
    SubsetChoice(mask)
}

/// One row of the exhaustive subset table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SubsetRow {
    pub mask: SubsetChoice,
    pub b0_abs: f64,
    pub bn_abs: f64,
    pub r: f64,
    pub sym: Option<f64>,
    pub asym_proven: Option<f64>,
    pub asym_remark: Option<f64>,
}

/// All `2^N` subset rows, produced lazily in mask order.
#[derive(Debug, Clone)]
pub struct SubsetTable<'a> {
    d: &'a RootDecomposition,
    p: f64,
    bp: Option<f64>,
    mahler: f64,
    a0an: f64,
    next: u64,
    end: u64,
}

impl<'a> SubsetTable<'a> {
    pub fn new(d: &'a RootDecomposition, p: f64) -> Result<Self> {
        require_nonzero_roots(d)?;
        if d.degree() > SCAN_CAP {
            return Err(Error::ScanCap {
                degree: d.degree(),
                cap: SCAN_CAP,
            });
        }
        if p.is_nan() || p <= 0.0 {
            return Err(Error::ExponentRange {
                p,
                window: "(0, inf]",
            });
        }
        let bp = if PWindow::ONE_TO_TWO.contains(p) {
            Some(bp_constant(p)?)
        } else {
            None
        };
        Ok(Self {
            d,
            p,
            bp,
            mahler: mahler_roots(d),
            a0an: d.constant_abs() * d.leading.norm(),
            next: 0,
            end: 1u64 << d.degree(),
        })
    }

    fn row(&self, mask: u64) -> SubsetRow {
        let mut b0 = self.d.leading.norm();
        let mut bn = b0;
        for (i, alpha) in self.d.roots.iter().enumerate() {
            if mask & (1 << i) != 0 {
                bn *= alpha.norm();
            } else {
                b0 *= alpha.norm();
            }
        }
        let p = self.p;
        let asym_ok = PWindow::ONE_TO_INF.contains(p);
        let asym_proven = asym_ok.then(|| {
            let (hi, lo) = (b0.max(bn), b0.min(bn));
            let ratio = p * lo / (2.0 * hi);
            hi * (1.0 + ratio * ratio).powf(1.0 / p)
        });
        let asym_remark = asym_ok.then(|| {
            let ratio = p * self.a0an / (2.0 * b0 * b0);
            b0 * (1.0 + ratio * ratio).powf(1.0 / p)
        });
        SubsetRow {
            mask: SubsetChoice(mask),
            b0_abs: b0,
            bn_abs: bn,
            r: self.mahler / b0,
            sym: self.bp.map(|bp| bp * lp_pair(b0, bn, p)),
            asym_proven,
            asym_remark,
        }
    }
}

impl Iterator for SubsetTable<'_> {
    type Item = SubsetRow;

    fn next(&mut self) -> Option<SubsetRow> {
        if self.next >= self.end {
            return None;
        }
        let row = self.row(self.next);
        self.next += 1;
        Some(row)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for SubsetTable<'_> {}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SubsetScan {
    pub canonical: SubsetChoice,
    /// `None` when `p` is outside `[1, 2]`.
    pub best_sym: Option<(SubsetChoice, f64)>,
    /// `None` when `p < 1` or `p = ∞`.
    pub best_asym_proven: Option<(SubsetChoice, f64)>,
}

/// Exhaustive maximization of both subset families. Among values within
/// `1e-12` (relative) of the maximum the canonical subset wins, then the
/// smallest mask.
pub fn scan_subsets(d: &RootDecomposition, p: f64) -> Result<SubsetScan> {
    let canonical = canonical_subset(d);
    let rows = SubsetTable::new(d, p)?;
    let mut sym = Best::new(canonical);
    let mut asym = Best::new(canonical);
    for row in rows {
        if let Some(v) = row.sym {
            sym.offer(row.mask, v);
        }
        if let Some(v) = row.asym_proven {
            asym.offer(row.mask, v);
        }
    }
    Ok(SubsetScan {
        canonical,
        best_sym: sym.finish(),
        best_asym_proven: asym.finish(),
    })
}

struct Best {
    canonical: SubsetChoice,
    top: Option<(SubsetChoice, f64)>,
    canonical_value: Option<f64>,
}

impl Best {
    fn new(canonical: SubsetChoice) -> Self {
        Self {
            canonical,
            top: None,
            canonical_value: None,
        }
    }

    /// Rows arrive in increasing mask order, so keeping the first strict
    /// maximum already breaks ties toward the smallest mask.
    fn offer(&mut self, e: SubsetChoice, v: f64) {
        if e == self.canonical {
            self.canonical_value = Some(v);
        }
        match self.top {
            Some((_, best)) if v <= best * (1.0 + TIE_REL) => {}
            _ => self.top = Some((e, v)),
        }
    }

    fn finish(self) -> Option<(SubsetChoice, f64)> {
        let (e, v) = self.top?;
        match self.canonical_value {
            Some(c) if c >= v * (1.0 - TIE_REL) => Some((self.canonical, c)),
            _ => Some((e, v)),
        }
    }
}

/// Writes the subset table as CSV with a header row.
pub fn write_subset_csv<W: io::Write>(rows: SubsetTable<'_>, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "mask",
        "b0_abs",
        "bn_abs",
        "r",
        "sym",
        "asym_proven",
        "asym_remark",
    ])?;
    let opt = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
    for row in rows {
        w.write_record([
            row.mask.to_string(),
            row.b0_abs.to_string(),
            row.bn_abs.to_string(),
            row.r.to_string(),
            opt(row.sym),
            opt(row.asym_proven),
            opt(row.asym_remark),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Whether reflecting roots to reach `|b_0| = M / r` beats `r = 1` in the
/// remark form: `(4M⁴ + p²A²) r^p < 4M⁴ + p²A² r⁴` with `A = |a_0 a_N|`.
pub fn improvement_condition(mahler: f64, a0an: f64, p: f64, r: f64) -> Result<bool> {
    for (name, value, ok) in [
        ("M", mahler, mahler > 0.0),
        ("|a0 aN|", a0an, a0an > 0.0),
        ("p", p, p >= 1.0 && p.is_finite()),
        ("r", r, r >= 1.0 && r.is_finite()),
    ] {
        if !ok {
            return Err(Error::Domain { name, value });
        }
    }
    let m4 = 4.0 * mahler.powi(4);
    let pa2 = (p * a0an).powi(2);
    Ok((m4 + pa2) * r.powf(p) < m4 + pa2 * r.powi(4))
}

//! Random ensembles, soundness verification, tightness statistics and the
//! search for instances separating the pair bounds from Hausdorff–Young.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::io;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::averaging::{admissible_pairs, filter, pair_bounds, CoefficientPair};
use crate::blaschke::SubsetTable;
use crate::bounds::hausdorff_young_bound;
use crate::error::{Error, Result};
use crate::kernel::{binomial_bound_asym, binomial_bound_sym};
use crate::norms::{lp_norm, sup_norm};
use crate::poly::{
    normalize, reconstruct, roots, Complex, Polynomial, RootDecomposition, MAX_DEGREE,
};
use crate::quadrature::QuadratureConfig;
use crate::report::{bound_report, fmt_p, serialize_p};

/// Environment variable capping the worker threads used by ensemble runs.
pub const THREADS_ENV: &str = "POLYBOUND_THREADS";

/// Largest stripped degree for which every Blaschke subset is checked.
pub const SUBSET_CHECK_MAX_DEGREE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SamplingMode {
    /// Roots with log-uniform modulus in `[lo, hi]` and uniform argument.
    Roots { lo: f64, hi: f64 },
    /// Coefficients uniform in the square `[-w, w] + i[-w, w]`.
    Coefficients { half_width: f64 },
    /// `c (z^N - 1)` with random `c`.
    EqualityFamily,
}

impl SamplingMode {
    pub const DEFAULT_ROOTS: Self = Self::Roots { lo: 0.2, hi: 5.0 };
    pub const DEFAULT_COEFFICIENTS: Self = Self::Coefficients { half_width: 1.0 };
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnsembleSpec {
    pub count: usize,
    pub degree_range: (usize, usize),
    pub mode: SamplingMode,
    pub seed: u64,
    pub p_grid: Vec<f64>,
}

impl Default for EnsembleSpec {
    fn default() -> Self {
        Self {
            count: 1000,
            degree_range: (1, 10),
            mode: SamplingMode::DEFAULT_ROOTS,
            seed: 0,
            p_grid: vec![1.0, 1.5, 2.0],
        }
    }
}

impl EnsembleSpec {
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.degree_range;
        if lo == 0 || lo > hi || hi > MAX_DEGREE {
            return Err(Error::InvalidConfig(format!(
                "degree range [{lo}, {hi}] must satisfy 1 <= min <= max <= {MAX_DEGREE}"
            )));
        }
        match self.mode {
            SamplingMode::Roots { lo, hi } if !(lo > 0.0 && lo <= hi && hi.is_finite()) => {
                return Err(Error::InvalidConfig(format!(
                    "root modulus range [{lo}, {hi}] must satisfy 0 < lo <= hi < inf"
                )));
            }
            SamplingMode::Coefficients { half_width } if !(half_width > 0.0 && half_width.is_finite()) => {
                return Err(Error::InvalidConfig(format!(
                    "coefficient box half-width {half_width} must be positive and finite"
                )));
            }
            _ => {}
        }
        if let Some(&p) = self.p_grid.iter().find(|p| p.is_nan() || **p <= 0.0) {
            return Err(Error::InvalidConfig(format!("p-grid value {p} is not in (0, inf]")));
        }
        Ok(())
    }
}

/// A generated polynomial plus the roots it was built from, when known.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub poly: Polynomial,
    pub roots: Option<Vec<Complex>>,
}

fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn unit_complex(rng: &mut ChaCha8Rng) -> Complex {
    Complex::from_polar(1.0, TAU * rng.random::<f64>())
}

/// Instance `index` of the ensemble; depends only on `(spec, index)`.
pub fn random_instance(spec: &EnsembleSpec, index: u64) -> Result<Sample> {
    spec.validate()?;
    let mut rng = instance_rng(spec.seed, index);
    let (lo, hi) = spec.degree_range;
    let degree = rng.random_range(lo..=hi);
    match spec.mode {
        SamplingMode::Roots { lo, hi } => {
            let (a, b) = (lo.ln(), hi.ln());
            let lead_mod = (rng.random_range(-1.0..=1.0) * std::f64::consts::LN_2).exp();
            let leading = unit_complex(&mut rng) * lead_mod;
            let found: Vec<Complex> = (0..degree)
                .map(|_| {
                    let m = (a + (b - a) * rng.random::<f64>()).exp();
                    unit_complex(&mut rng) * m
                })
                .collect();
            let poly = reconstruct(&RootDecomposition::new(leading, found.clone())?)?;
            Ok(Sample {
                poly,
                roots: Some(found),
            })
        }
        SamplingMode::Coefficients { half_width } => {
            let w = half_width;
            let mut coeffs: Vec<Complex> = (0..=degree)
                .map(|_| Complex::new(rng.random_range(-w..=w), rng.random_range(-w..=w)))
                .collect();
            while coeffs[degree].norm() < 1e-3 * w {
                coeffs[degree] = Complex::new(rng.random_range(-w..=w), rng.random_range(-w..=w));
            }
            Ok(Sample {
                poly: normalize(&coeffs)?,
                roots: None,
            })
        }
        SamplingMode::EqualityFamily => {
            let c = unit_complex(&mut rng) * (rng.random_range(-1.0..=1.0f64)).exp();
            Ok(Sample {
                poly: Polynomial::cyclotomic_binomial(degree, c)?,
                roots: None,
            })
        }
    }
}

pub fn random_polynomial(spec: &EnsembleSpec, index: u64) -> Result<Polynomial> {
    Ok(random_instance(spec, index)?.poly)
}

/// A bound exceeding the measured norm by more than the tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ViolationRecord {
    pub index: u64,
    pub poly: String,
    #[serde(serialize_with = "serialize_p")]
    pub p: f64,
    pub bound: String,
    pub value: f64,
    pub measured: f64,
    /// `measured - value`; negative means the bound was exceeded.
    pub slack: f64,
}

/// An instance that could not be checked (root finding or quadrature).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FailureRecord {
    pub index: u64,
    pub poly: String,
    #[serde(serialize_with = "serialize_p")]
    pub p: f64,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct VerifyOutcome {
    pub violations: Vec<ViolationRecord>,
    /// Remark-form subset values above the measured norm. Reported apart
    /// from violations: that form is not an established bound.
    pub unproven_findings: Vec<ViolationRecord>,
    /// Comparisons where bound and measurement agree within the tolerance.
    pub equalities: Vec<ViolationRecord>,
    pub failures: Vec<FailureRecord>,
    pub checks: usize,
}

impl VerifyOutcome {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn absorb(&mut self, other: VerifyOutcome) {
        self.violations.extend(other.violations);
        self.unproven_findings.extend(other.unproven_findings);
        self.equalities.extend(other.equalities);
        self.failures.extend(other.failures);
        self.checks += other.checks;
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Relative tolerance; quadrature error estimates are added on top.
    pub tol: f64,
    pub include_unproven: bool,
    pub quadrature: QuadratureConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            tol: 1e-7,
            include_unproven: false,
            quadrature: QuadratureConfig::default(),
        }
    }
}

/// Runs `f` on a pool capped by `POLYBOUND_THREADS` when it is set.
pub fn with_thread_cap<T: Send, F: FnOnce() -> T + Send>(f: F) -> T {
    let cap = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0);
    match cap.and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

pub fn verify_ensemble(spec: &EnsembleSpec, tol: f64) -> Result<VerifyOutcome> {
    verify_ensemble_with(
        spec,
        &VerifyOptions {
            tol,
            ..VerifyOptions::default()
        },
    )
}

/// Checks every bound on every instance and exponent of the ensemble.
/// Records come back ordered by instance index.
pub fn verify_ensemble_with(spec: &EnsembleSpec, opts: &VerifyOptions) -> Result<VerifyOutcome> {
    spec.validate()?;
    opts.quadrature.validate()?;
    if !(opts.tol >= 0.0) {
        return Err(Error::InvalidConfig(format!("tolerance {} must be >= 0", opts.tol)));
    }
    let per_instance: Vec<VerifyOutcome> = with_thread_cap(|| {
        (0..spec.count as u64)
            .into_par_iter()
            .map(|index| verify_instance(spec, index, opts))
            .collect()
    });
    let mut out = VerifyOutcome::default();
    for o in per_instance {
        out.absorb(o);
    }
    Ok(out)
}

struct Checker<'a> {
    index: u64,
    poly: String,
    opts: &'a VerifyOptions,
    out: VerifyOutcome,
}

enum Channel {
    Proven,
    Unproven,
}

impl Checker<'_> {
    fn compare(&mut self, channel: Channel, p: f64, bound: String, value: f64, measured: f64, err: f64) {
        self.out.checks += 1;
        let slack = measured - value;
        let allowance = self.opts.tol * measured.abs() + if err.is_finite() { err } else { 0.0 };
        let record = ViolationRecord {
            index: self.index,
            poly: self.poly.clone(),
            p,
            bound,
            value,
            measured,
            slack,
        };
        if slack < -allowance {
            match channel {
                Channel::Proven => self.out.violations.push(record),
                Channel::Unproven => self.out.unproven_findings.push(record),
            }
        } else if slack.abs() <= allowance {
            if let Channel::Proven = channel {
                self.out.equalities.push(record);
            }
        }
    }

    fn fail(&mut self, p: f64, e: &Error) {
        self.out.failures.push(FailureRecord {
            index: self.index,
            poly: self.poly.clone(),
            p,
            message: e.to_string(),
        });
    }
}

fn verify_instance(spec: &EnsembleSpec, index: u64, opts: &VerifyOptions) -> VerifyOutcome {
    let f = match random_polynomial(spec, index) {
        Ok(f) => f,
        Err(e) => {
            let mut c = Checker {
                index,
                poly: String::new(),
                opts,
                out: VerifyOutcome::default(),
            };
            c.fail(f64::NAN, &e);
            return c.out;
        }
    };
    let mut c = Checker {
        index,
        poly: f.to_string(),
        opts,
        out: VerifyOutcome::default(),
    };
    let g = f.stripped();

    // Pair sup bounds hold for any instance; the sup norm is cheap.
    let sup = sup_norm(&g);
    let pairs = admissible_pairs(&g);
    for pair in &pairs {
        if let Ok(b) = pair_bounds(pair, f64::INFINITY) {
            if let Some(v) = b.sup.value {
                c.compare(Channel::Proven, f64::INFINITY, format!("pair_sup{}", pair.label()), v, sup, 0.0);
            }
        }
    }

    let decomposition = if g.is_monomial() { None } else { roots(&g).ok() };
    for &p in &spec.p_grid {
        if let Err(e) = check_exponent(&mut c, &g, p, &pairs, decomposition.as_ref()) {
            c.fail(p, &e);
        }
    }
    c.out
}

fn check_exponent(
    c: &mut Checker<'_>,
    g: &Polynomial,
    p: f64,
    pairs: &[CoefficientPair],
    decomposition: Option<&RootDecomposition>,
) -> Result<()> {
    let cfg = &c.opts.quadrature;
    let report = bound_report(g, p, cfg)?;
    let lp = report.measured.lp;
    // Kinks at circle zeros can stall the refinement test above the
    // requested rel_tol while the error estimate is still far below `tol`.
    if !lp.converged && !(lp.err_estimate <= c.opts.tol * lp.value) {
        return Err(Error::QuadratureNotConverged {
            nodes: lp.nodes_used,
            err_estimate: lp.err_estimate,
        });
    }
    for e in &report.entries {
        if let Some(v) = e.value {
            c.compare(Channel::Proven, p, e.name.clone(), v, lp.value, lp.err_estimate);
        }
    }

    // Every reflection subset, not just the canonical one.
    if let Some(d) = decomposition {
        if d.degree() <= SUBSET_CHECK_MAX_DEGREE {
            for row in SubsetTable::new(d, p)? {
                if let Some(v) = row.sym {
                    c.compare(Channel::Proven, p, format!("subset_sym{}", row.mask), v, lp.value, lp.err_estimate);
                }
                if let Some(v) = row.asym_proven {
                    c.compare(
                        Channel::Proven,
                        p,
                        format!("subset_asym_proven{}", row.mask),
                        v,
                        lp.value,
                        lp.err_estimate,
                    );
                }
                if c.opts.include_unproven {
                    if let Some(v) = row.asym_remark {
                        c.compare(
                            Channel::Unproven,
                            p,
                            format!("subset_asym_remark{}", row.mask),
                            v,
                            lp.value,
                            lp.err_estimate,
                        );
                    }
                }
            }
        }
    }

    // The binomial bounds against the averaged binomial itself, and the
    // averaging step's norm contraction.
    for pair in pairs {
        if pair.a_l.norm() == 0.0 && pair.a_m.norm() == 0.0 {
            continue;
        }
        let label = pair.label();
        let binomial = filter(g, pair)?;
        let measured = lp_norm(&binomial, p, cfg)?;
        if p.is_finite() {
            let v = binomial_bound_asym(pair.a_l, pair.a_m, p)?;
            c.compare(Channel::Proven, p, format!("binomial_asym{label}"), v, measured.value, measured.err_estimate);
        }
        if p <= 2.0 {
            let v = binomial_bound_sym(pair.a_l, pair.a_m, p)?;
            c.compare(Channel::Proven, p, format!("binomial_sym{label}"), v, measured.value, measured.err_estimate);
        }
        c.compare(
            Channel::Proven,
            p,
            format!("contraction{label}"),
            measured.value,
            lp.value,
            lp.err_estimate + measured.err_estimate,
        );
    }
    Ok(())
}

/// Ratio statistics of one bound at one exponent.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpnessRow {
    pub bound: String,
    #[serde(serialize_with = "serialize_p")]
    pub p: f64,
    pub count: usize,
    pub min: f64,
    pub median: f64,
    pub max: f64,
}

/// `bound / measured` over the ensemble, grouped by bound family (pair
/// indices dropped) and exponent, in report order.
pub fn sharpness_stats(spec: &EnsembleSpec, cfg: &QuadratureConfig) -> Result<Vec<SharpnessRow>> {
    spec.validate()?;
    let per_instance: Vec<Result<Vec<(String, usize, f64)>>> = with_thread_cap(|| {
        (0..spec.count as u64)
            .into_par_iter()
            .map(|index| {
                let f = random_polynomial(spec, index)?;
                let mut ratios = Vec::new();
                for (pi, &p) in spec.p_grid.iter().enumerate() {
                    let r = bound_report(&f, p, cfg)?;
                    for e in &r.entries {
                        if let Some(v) = e.value {
                            let base = e.name.split('(').next().unwrap_or(&e.name).to_string();
                            ratios.push((base, pi, v / r.measured.lp.value));
                        }
                    }
                }
                Ok(ratios)
            })
            .collect()
    });

    let mut order: Vec<String> = Vec::new();
    let mut groups: BTreeMap<(usize, usize), Vec<f64>> = BTreeMap::new();
    for ratios in per_instance {
        for (base, pi, ratio) in ratios? {
            let pos = match order.iter().position(|b| *b == base) {
                Some(i) => i,
                None => {
                    order.push(base);
                    order.len() - 1
                }
            };
            groups.entry((pos, pi)).or_default().push(ratio);
        }
    }
    Ok(groups
        .into_iter()
        .map(|((pos, pi), mut xs)| {
            xs.sort_by(f64::total_cmp);
            let n = xs.len();
            let median = if n % 2 == 1 {
                xs[n / 2]
            } else {
                0.5 * (xs[n / 2 - 1] + xs[n / 2])
            };
            SharpnessRow {
                bound: order[pos].clone(),
                p: spec.p_grid[pi],
                count: n,
                min: xs[0],
                median,
                max: xs[n - 1],
            }
        })
        .collect())
}

pub fn write_sharpness_csv<W: io::Write>(rows: &[SharpnessRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["bound", "p", "count", "min", "median", "max"])?;
    for r in rows {
        w.write_record([
            r.bound.clone(),
            fmt_p(r.p),
            r.count.to_string(),
            r.min.to_string(),
            r.median.to_string(),
            r.max.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// A polynomial with its strongest symmetric pair bound and its
/// Hausdorff–Young bound at some `p`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    #[serde(serialize_with = "serialize_display")]
    pub poly: Polynomial,
    /// `(L, M)` of the first pair attaining the largest symmetric bound.
    pub pair: (usize, usize),
    pub pair_sym: f64,
    pub hausdorff_young: f64,
}

fn serialize_display<S: serde::Serializer>(
    v: &Polynomial,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witnesses {
    pub p: f64,
    /// Pair bound strictly above Hausdorff–Young.
    pub pair_wins: Witness,
    /// Hausdorff–Young strictly above every pair bound.
    pub hausdorff_young_wins: Witness,
}

/// Polynomials tried, in order, before falling back to random search.
pub fn witness_catalog() -> Vec<Polynomial> {
    [
        &[1.0, 1.0][..],
        &[1.0, 1.0, 1.0, 1.0],
        &[1.0, 1.0, 1.0],
        &[1.0, 0.0, 1.0],
        &[1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0],
    ]
    .iter()
    .map(|c| Polynomial::from_real(c).expect("catalog entries are valid"))
    .collect()
}

fn evaluate_witness(f: &Polynomial, p: f64) -> Result<Option<Witness>> {
    let mut best: Option<((usize, usize), f64)> = None;
    for pair in admissible_pairs(f) {
        if let Some(v) = pair_bounds(&pair, p)?.sym.value {
            if best.is_none_or(|(_, b)| v > b) {
                best = Some(((pair.l, pair.m), v));
            }
        }
    }
    let Some((pair, pair_sym)) = best else {
        return Ok(None);
    };
    Ok(Some(Witness {
        poly: f.clone(),
        pair,
        pair_sym,
        hausdorff_young: hausdorff_young_bound(f, p)?,
    }))
}

const WITNESS_RANDOM_TRIES: u64 = 20_000;

fn find_witness<P: Fn(&Witness) -> bool>(p: f64, wanted: P) -> Result<Witness> {
    for f in witness_catalog() {
        if let Some(w) = evaluate_witness(&f, p)? {
            if wanted(&w) {
                return Ok(w);
            }
        }
    }
    let spec = EnsembleSpec {
        count: 1,
        degree_range: (1, 8),
        mode: SamplingMode::DEFAULT_COEFFICIENTS,
        seed: 0x5eed,
        p_grid: vec![p],
    };
    for index in 0..WITNESS_RANDOM_TRIES {
        let f = random_polynomial(&spec, index)?;
        if let Some(w) = evaluate_witness(&f, p)? {
            if wanted(&w) {
                return Ok(w);
            }
        }
    }
    Err(Error::WitnessSearchExhausted(p))
}

/// One instance where a pair bound beats Hausdorff–Young and one where the
/// reverse holds, for `1 < p < 2`.
pub fn noncomparability_witnesses(p: f64) -> Result<Witnesses> {
    if !(p > 1.0 && p < 2.0) {
        return Err(Error::ExponentRange {
            p,
            window: "(1, 2)",
        });
    }
    Ok(Witnesses {
        p,
        pair_wins: find_witness(p, |w| w.pair_sym > w.hausdorff_young)?,
        hausdorff_young_wins: find_witness(p, |w| w.hausdorff_young > w.pair_sym)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_are_deterministic() {
        let spec = EnsembleSpec::default();
        for i in [0, 7, 999] {
            assert_eq!(random_instance(&spec, i).unwrap(), random_instance(&spec, i).unwrap());
        }
        assert_ne!(random_polynomial(&spec, 1).unwrap(), random_polynomial(&spec, 2).unwrap());
    }

    #[test]
    fn degree_stays_in_range() {
        for mode in [
            SamplingMode::DEFAULT_ROOTS,
            SamplingMode::DEFAULT_COEFFICIENTS,
            SamplingMode::EqualityFamily,
        ] {
            let spec = EnsembleSpec {
                degree_range: (2, 5),
                mode,
                ..EnsembleSpec::default()
            };
            for i in 0..50 {
                let d = random_polynomial(&spec, i).unwrap().degree();
                assert!((2..=5).contains(&d));
            }
        }
    }

    #[test]
    fn root_mode_roots_are_recovered() {
        let spec = EnsembleSpec::default();
        for i in 0..20 {
            let s = random_instance(&spec, i).unwrap();
            let found = roots(&s.poly).unwrap().roots;
            for want in s.roots.unwrap() {
                let nearest = found.iter().map(|r| (r - want).norm()).fold(f64::INFINITY, f64::min);
                assert!(nearest < 1e-8, "index {i}: {nearest}");
            }
        }
    }

    #[test]
    fn spec_validation() {
        let mut spec = EnsembleSpec::default();
        spec.degree_range = (0, 3);
        assert!(spec.validate().is_err());
        spec.degree_range = (1, 3);
        spec.p_grid = vec![1.0, -1.0];
        assert!(spec.validate().is_err());
        spec.p_grid = vec![1.0];
        spec.mode = SamplingMode::Roots { lo: 0.0, hi: 1.0 };
        assert!(spec.validate().is_err());
    }

    #[test]
    fn small_ensemble_is_clean() {
        let spec = EnsembleSpec {
            count: 30,
            ..EnsembleSpec::default()
        };
        let out = verify_ensemble(&spec, 1e-7).unwrap();
        assert!(out.is_clean(), "{:?}", out.violations);
        assert!(out.checks > 1000);
    }

    #[test]
    fn equality_family_records_equalities() {
        let spec = EnsembleSpec {
            count: 10,
            mode: SamplingMode::EqualityFamily,
            p_grid: vec![1.0, 1.5],
            ..EnsembleSpec::default()
        };
        let out = verify_ensemble(&spec, 1e-7).unwrap();
        assert!(out.is_clean());
        let sym_eq = out.equalities.iter().filter(|r| r.bound == "thm1_sym").count();
        assert_eq!(sym_eq, 20, "{:?}", out.failures);
        assert!(out.failures.is_empty());
    }

    #[test]
    fn witnesses_at_three_halves() {
        let w = noncomparability_witnesses(1.5).unwrap();
        assert_eq!(w.pair_wins.poly.to_string(), "1,1");
        assert!((w.pair_wins.pair_sym - 1.352_998_7).abs() < 1e-6);
        assert!((w.pair_wins.hausdorff_young - 2f64.cbrt()).abs() < 1e-12);
        assert_eq!(w.hausdorff_young_wins.poly.to_string(), "1,1,1,1");
        assert_eq!(w.hausdorff_young_wins.pair, (0, 2));
        assert!(noncomparability_witnesses(2.0).is_err());
    }

    #[test]
    fn sharpness_of_equality_family() {
        let spec = EnsembleSpec {
            count: 5,
            mode: SamplingMode::EqualityFamily,
            p_grid: vec![1.5],
            ..EnsembleSpec::default()
        };
        let rows = sharpness_stats(&spec, &QuadratureConfig::default()).unwrap();
        let sym = rows.iter().find(|r| r.bound == "thm1_sym").unwrap();
        assert!((sym.min - 1.0).abs() < 1e-6 && (sym.max - 1.0).abs() < 1e-6);
        let mut buf = Vec::new();
        write_sharpness_csv(&rows, &mut buf).unwrap();
        assert!(String::from_utf8(buf).unwrap().starts_with("bound,p,count,min,median,max\n"));
    }
}

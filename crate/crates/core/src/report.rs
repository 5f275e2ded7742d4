//! Every lower bound for one `(F, p)`, side by side with the measured norms.

use std::fmt::{self, Write as _};

use serde::{Serialize, Serializer};

use crate::averaging::{admissible_pairs, pair_bounds};
use crate::blaschke::{canonical_subset, gen_bound_asym, gen_bound_sym, AsymForm};
use crate::bounds::{
    easy_l1_bound, goncalves_bound, hausdorff_young_bound, landau_bound, parseval_norm, thm1_asym,
    thm1_sym,
};
use crate::error::{Error, Result};
use crate::norms::{lp_norm, mahler_roots, sup_norm, NormValue};
use crate::poly::{roots, Polynomial};
use crate::quadrature::QuadratureConfig;
use crate::window::PWindow;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub name: String,
    /// Present exactly when `applicable`.
    pub value: Option<f64>,
    pub applicable: bool,
    pub p_window: PWindow,
    #[serde(rename = "ref")]
    pub reference: &'static str,
}

impl BoundEntry {
    fn new(name: impl Into<String>, window: PWindow, reference: &'static str, value: Option<f64>) -> Self {
        Self {
            name: name.into(),
            applicable: value.is_some(),
            value,
            p_window: window,
            reference,
        }
    }

    /// Evaluates `compute` only when `p` lies in `window`.
    fn gated<F>(name: &str, window: PWindow, p: f64, reference: &'static str, compute: F) -> Result<Self>
    where
        F: FnOnce() -> Result<f64>,
    {
        let value = if window.contains(p) {
            Some(compute()?)
        } else {
            None
        };
        Ok(Self::new(name, window, reference, value))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Measured {
    pub lp: NormValue,
    pub sup: f64,
    pub mahler: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub poly: String,
    #[serde(serialize_with = "serialize_p")]
    pub p: f64,
    pub measured: Measured,
    pub entries: Vec<BoundEntry>,
    pub best: String,
    pub footnotes: Vec<String>,
}

/// Exponents serialize as numbers, except `∞`, which becomes `"inf"`.
pub fn serialize_p<S: Serializer>(p: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if p.is_infinite() {
        s.serialize_str("inf")
    } else {
        s.serialize_f64(*p)
    }
}

pub(crate) fn fmt_p(p: f64) -> String {
    if p.is_infinite() {
        "inf".to_string()
    } else {
        p.to_string()
    }
}

mod refs {
    pub const NORM_CHAIN: &str = "Jensen: M(F) <= ||F||_p for every p > 0";
    pub const THM1_SYM: &str = "symmetric root-product bound via the canonical Blaschke reflection";
    pub const THM1_ASYM: &str = "asymmetric Mahler-measure bound via the canonical Blaschke reflection";
    pub const GONCALVES: &str = "root-product inequality for the L_2 norm";
    pub const LANDAU: &str = "Landau: ||F||_2 >= M(F)";
    pub const PARSEVAL: &str = "Parseval: ||F||_2 equals the l_2 norm of the coefficients";
    pub const EASY_L1: &str = "each coefficient is a Fourier coefficient: ||F||_1 >= max |a_n|";
    pub const HAUSDORFF_YOUNG: &str = "Hausdorff-Young: ||F||_p >= l_q norm of the coefficients";
    pub const PAIR_SUP: &str = "root-of-unity averaging onto a_L z^L + a_M z^M, sup norm";
    pub const PAIR_SYM: &str = "root-of-unity averaging onto a_L z^L + a_M z^M, symmetric binomial bound";
    pub const PAIR_ASYM: &str = "root-of-unity averaging onto a_L z^L + a_M z^M, asymmetric binomial bound";
    pub const BLASCHKE_SYM: &str = "symmetric binomial bound on the edge coefficients of G_E, E = {|alpha| <= 1}";
    pub const BLASCHKE_ASYM: &str =
        "asymmetric binomial bound (larger edge outside) on the edge coefficients of G_E, E = {|alpha| <= 1}";
}

/// Builds the report. `p` may be any value in `(0, ∞]`; entries outside
/// their windows are listed as inapplicable.
pub fn bound_report(f: &Polynomial, p: f64, cfg: &QuadratureConfig) -> Result<BoundReport> {
    if p.is_nan() || p <= 0.0 {
        return Err(Error::ExponentRange {
            p,
            window: "(0, inf]",
        });
    }
    let g = f.stripped();
    let lp = lp_norm(&g, p, cfg)?;
    let sup = sup_norm(&g);
    let mut footnotes = Vec::new();
    if f.zero_factor() > 0 {
        footnotes.push(format!(
            "a z^{} factor was removed before evaluating bounds; it does not change any norm",
            f.zero_factor()
        ));
    }
    if !lp.converged {
        footnotes.push(format!(
            "L_p quadrature stopped at {} nodes before reaching rel_tol = {:e}",
            lp.nodes_used, cfg.rel_tol
        ));
    }

    let mut entries = Vec::new();
    let mahler;
    if g.is_monomial() {
        mahler = g.leading().norm();
        entries.push(BoundEntry::new("norm_chain", PWindow::ALL, refs::NORM_CHAIN, Some(mahler)));
        footnotes.push("constant modulus on the circle: every norm equals |a_N|".to_string());
    } else {
        let d = roots(&g)?;
        mahler = mahler_roots(&d);
        entries.push(BoundEntry::new("norm_chain", PWindow::ALL, refs::NORM_CHAIN, Some(mahler)));
        entries.push(BoundEntry::gated("thm1_sym", PWindow::ONE_TO_TWO, p, refs::THM1_SYM, || {
            thm1_sym(&d, p)
        })?);
        entries.push(BoundEntry::gated("thm1_asym", PWindow::ONE_TO_INF, p, refs::THM1_ASYM, || {
            thm1_asym(&d, p)
        })?);
        entries.push(BoundEntry::gated("goncalves", PWindow::TWO_ONLY, p, refs::GONCALVES, || {
            goncalves_bound(&d)
        })?);
        entries.push(BoundEntry::gated("landau", PWindow::TWO_ONLY, p, refs::LANDAU, || {
            landau_bound(&d)
        })?);
        entries.push(BoundEntry::gated("parseval", PWindow::TWO_ONLY, p, refs::PARSEVAL, || {
            Ok(parseval_norm(&g))
        })?);
        entries.push(BoundEntry::gated("easy_l1", PWindow::ONE_ONLY, p, refs::EASY_L1, || {
            Ok(easy_l1_bound(&g))
        })?);
        entries.push(BoundEntry::gated(
            "hausdorff_young",
            PWindow::OPEN_ONE_TO_TWO,
            p,
            refs::HAUSDORFF_YOUNG,
            || hausdorff_young_bound(&g, p),
        )?);
        for pair in admissible_pairs(&g) {
            let b = pair_bounds(&pair, p)?;
            let label = pair.label();
            entries.push(BoundEntry::new(format!("pair_sup{label}"), b.sup.window, refs::PAIR_SUP, b.sup.value));
            entries.push(BoundEntry::new(format!("pair_sym{label}"), b.sym.window, refs::PAIR_SYM, b.sym.value));
            entries.push(BoundEntry::new(
                format!("pair_asym{label}"),
                b.asym.window,
                refs::PAIR_ASYM,
                b.asym.value,
            ));
        }
        let e = canonical_subset(&d);
        entries.push(BoundEntry::gated(
            "blaschke_canonical_sym",
            PWindow::ONE_TO_TWO,
            p,
            refs::BLASCHKE_SYM,
            || gen_bound_sym(&d, e, p),
        )?);
        entries.push(BoundEntry::gated(
            "blaschke_canonical_asym",
            PWindow::ONE_TO_INF,
            p,
            refs::BLASCHKE_ASYM,
            || gen_bound_asym(&d, e, p, AsymForm::Proven),
        )?);
    }

    let best = best_entry(&entries).to_string();
    Ok(BoundReport {
        poly: f.to_string(),
        p,
        measured: Measured { lp, sup, mahler },
        entries,
        best,
        footnotes,
    })
}

/// Largest applicable value; earlier entries win ties.
fn best_entry(entries: &[BoundEntry]) -> &str {
    let mut best: Option<(&str, f64)> = None;
    for e in entries {
        if let Some(v) = e.value {
            if best.is_none_or(|(_, b)| v > b) {
                best = Some((&e.name, v));
            }
        }
    }
    best.map(|(n, _)| n).unwrap_or("norm_chain")
}

impl BoundReport {
    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn best_value(&self) -> Option<f64> {
        self.entry(&self.best).and_then(|e| e.value)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for BoundReport {
    /// Aligned plain-text rendering.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        writeln!(out, "poly      {}", self.poly)?;
        writeln!(out, "p         {}", fmt_p(self.p))?;
        writeln!(
            out,
            "measured  lp = {:.10}  sup = {:.10}  mahler = {:.10}",
            self.measured.lp.value, self.measured.sup, self.measured.mahler
        )?;
        writeln!(out)?;
        let width = self.entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
        for e in &self.entries {
            let value = match e.value {
                Some(v) => format!("{v:>18.10}"),
                None => format!("{:>18}", "-"),
            };
            let mark = if e.name == self.best { '*' } else { ' ' };
            writeln!(
                out,
                "{mark} {:<width$}  {value}  {:<9}  {}",
                e.name,
                e.p_window.to_string(),
                e.reference
            )?;
        }
        for note in &self.footnotes {
            writeln!(out, "note: {note}")?;
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn worked_example_report() {
        let f = Polynomial::from_real(&[90.0, -101.0, 18.0]).unwrap();
        let r = bound_report(&f, 1.0, &cfg()).unwrap();
        let asym = r.entry("thm1_asym").unwrap().value.unwrap();
        assert!((asym - 90.9).abs() < 1e-9);
        assert!(r.measured.lp.value > asym);
        // the coefficient bound 101 outranks 90.9 at p = 1
        assert_eq!(r.best, "easy_l1");
        for e in &r.entries {
            if let Some(v) = e.value {
                assert!(v <= r.measured.lp.value, "{} = {v}", e.name);
            }
            assert_eq!(e.applicable, e.value.is_some());
        }
        let names: Vec<&str> = r.entries.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "norm_chain",
                "thm1_sym",
                "thm1_asym",
                "goncalves",
                "landau",
                "parseval",
                "easy_l1",
                "hausdorff_young",
                "pair_sup(0,2)",
                "pair_sym(0,2)",
                "pair_asym(0,2)",
                "blaschke_canonical_sym",
                "blaschke_canonical_asym"
            ]
        );
    }

    #[test]
    fn equality_family_report() {
        let f = Polynomial::cyclotomic_binomial(5, 1.0.into()).unwrap();
        let r = bound_report(&f, 1.5, &cfg()).unwrap();
        let sym = r.entry("thm1_sym").unwrap().value.unwrap();
        assert!((sym - r.measured.lp.value).abs() < 1e-8);
    }

    #[test]
    fn constant_report() {
        let f = Polynomial::from_real(&[7.0]).unwrap();
        let r = bound_report(&f, 1.3, &cfg()).unwrap();
        assert_eq!(r.entries.len(), 1);
        assert_eq!(r.best, "norm_chain");
        assert_eq!(r.best_value(), Some(7.0));
        assert_eq!(r.measured.lp.value, 7.0);
    }

    #[test]
    fn zero_factor_is_stripped() {
        let f = Polynomial::from_real(&[0.0, 0.0, 90.0, -101.0, 18.0]).unwrap();
        let r = bound_report(&f, 1.0, &cfg()).unwrap();
        assert!((r.entry("thm1_asym").unwrap().value.unwrap() - 90.9).abs() < 1e-9);
        assert_eq!(r.poly, "0,0,90,-101,18");
        assert!(!r.footnotes.is_empty());
    }

    #[test]
    fn json_shape() {
        let f = Polynomial::from_real(&[1.0, 1.0]).unwrap();
        let r = bound_report(&f, f64::INFINITY, &cfg()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["p"], "inf");
        assert_eq!(v["poly"], "1,1");
        assert!(v["measured"]["lp"]["value"].is_number());
        let first = &v["entries"][0];
        assert_eq!(first["name"], "norm_chain");
        assert_eq!(first["p_window"], "(0,inf]");
        assert!(first["ref"].is_string());
        assert_eq!(v["best"], "pair_sup(0,1)");
        let sym = v["entries"]
            .as_array()
            .unwrap()
            .iter()
            .find(|e| e["name"] == "thm1_sym")
            .unwrap();
        assert!(sym["value"].is_null());
        assert_eq!(sym["applicable"], false);
    }

    #[test]
    fn rejects_bad_exponent() {
        let f = Polynomial::from_real(&[1.0, 1.0]).unwrap();
        assert!(bound_report(&f, 0.0, &cfg()).is_err());
    }
}

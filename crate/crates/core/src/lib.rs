//! Lower bounds for the `L_p` norms of complex polynomials on the unit circle,
//! and the numerics to check them.
//!
//! A polynomial `F(z) = Σ a_n z^n = a_N Π (z - α_n)` is measured directly
//! ([`norms`]) and bounded from below in several ways:
//!
//! - through its roots, by reflecting a subset of them through the circle
//!   without changing `|F|` there ([`blaschke`], [`bounds`]);
//! - through a pair of its coefficients, isolated by averaging over roots of
//!   unity ([`averaging`]);
//! - by the classical coefficient and root-product inequalities ([`bounds`]).
//!
//! The special functions behind the binomial case live in [`kernel`];
//! [`report`] collects every bound for one `(F, p)`, and [`harness`] checks
//! them over random ensembles.
//!
//! ```
//! use polybound::{bound_report, Polynomial, QuadratureConfig};
//!
//! let f: Polynomial = "90,-101,18".parse()?;
//! let report = bound_report(&f, 1.0, &QuadratureConfig::default())?;
//! let asym = report.entry("thm1_asym").and_then(|e| e.value).unwrap();
//! assert!((asym - 90.9).abs() < 1e-9);
//! assert!(report.measured.lp.value > asym);
//! # Ok::<(), polybound::Error>(())
//! ```

pub mod averaging;
pub mod blaschke;
pub mod bounds;
pub mod error;
pub mod harness;
pub mod kernel;
pub mod norms;
pub mod poly;
pub mod quadrature;
pub mod report;
pub mod special;
pub mod window;

pub use error::{Error, Result};
pub use norms::{lp_norm, mahler_roots, sup_norm, NormValue};
pub use poly::{roots, Complex, Polynomial, RootDecomposition};
pub use quadrature::QuadratureConfig;
pub use report::{bound_report, BoundEntry, BoundReport};
pub use window::PWindow;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty coefficient sequence")]
    EmptyInput,

    #[error("zero polynomial: no bound applies")]
    ZeroPolynomial,

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("polynomial of degree {0} has no bound here; degree >= 1 required")]
    ConstantPolynomial(usize),

    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("root-finding failed after {iterations} iterations (relative residual {residual:e})")]
    RootFindingFailed { iterations: usize, residual: f64 },

    #[error("singular integrand: root of modulus {modulus} lies within 1e-6 of the unit circle; use the root formula")]
    SingularIntegrand { modulus: f64 },

    #[error("kernel too peaked at r = {0}; need r <= 1 - 1e-6")]
    KernelTooPeaked(f64),

    #[error("exponent p = {p} outside the range {window}")]
    ExponentRange { p: f64, window: &'static str },

    #[error("argument {name} = {value} outside its domain")]
    Domain { name: &'static str, value: f64 },

    #[error("degenerate binomial: both coefficients are zero")]
    DegenerateBinomial,

    #[error("averaging would retain extra terms for (L, M) = ({l}, {m}); surviving indices {surviving:?}")]
    InadmissiblePair {
        l: usize,
        m: usize,
        surviving: Vec<usize>,
    },

    #[error("root-of-unity average disagrees with congruence selection by {0:e}")]
    FilterMismatch(f64),

    #[error("polynomial vanishes at the origin; factor z^k first")]
    RootAtOrigin,

    #[error("subset index {index} outside 1..={degree}")]
    SubsetIndex { index: usize, degree: usize },

    #[error("exhaustive scan cap: degree {degree} > {cap}; use the canonical subset instead")]
    ScanCap { degree: usize, cap: usize },

    #[error("no non-comparability witness found for p = {0}")]
    WitnessSearchExhausted(f64),

    #[error("quadrature stopped at {nodes} nodes with error estimate {err_estimate:e}")]
    QuadratureNotConverged { nodes: usize, err_estimate: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("output error: {0}")]
    Output(String),
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Output(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Output(e.to_string())
    }
}

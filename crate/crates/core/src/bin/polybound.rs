use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use polybound::blaschke::{canonical_subset, write_subset_csv, SubsetTable};
use polybound::bounds::{crossover_threshold, optimal_p_constant, optimal_p_residual, CROSSOVER_FOOTNOTE};
use polybound::harness::{
    noncomparability_witnesses, sharpness_stats, verify_ensemble_with, write_sharpness_csv, EnsembleSpec,
    SamplingMode, VerifyOptions,
};
use polybound::kernel::bp_constant;
use polybound::{bound_report, roots, Error, Polynomial, QuadratureConfig};

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "polybound", version, about = "Lower bounds for L_p norms of polynomials on the unit circle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Every bound for one polynomial and exponent, with measured norms.
    Report {
        /// Ascending coefficients, e.g. "90,-101,18" or "1,2-3i,i".
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_parser = parse_p)]
        p: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check all bounds over a random ensemble; exits 1 on any violation.
    Verify {
        #[command(flatten)]
        ensemble: EnsembleArgs,
        /// Relative tolerance.
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
        /// Also stress-test the remark form of the asymmetric subset bound.
        #[arg(long)]
        include_unproven: bool,
        /// Print the full outcome as JSON.
        #[arg(long)]
        json: bool,
    },
    /// B_p table and the two comparison constants.
    Constants,
    /// Exhaustive subset table as CSV.
    Subsets {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_parser = parse_p)]
        p: f64,
    },
    /// Polynomials on which the pair bound and Hausdorff-Young order differently.
    Witness {
        #[arg(long)]
        p: f64,
    },
    /// Ratio bound / measured per bound and exponent, as CSV.
    Sharpness {
        #[command(flatten)]
        ensemble: EnsembleArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Roots,
    Coefficients,
    Equality,
}

#[derive(Args)]
struct EnsembleArgs {
    #[arg(long, default_value_t = 1000)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated exponents; "inf" allowed.
    #[arg(long, value_delimiter = ',', value_parser = parse_p, default_value = "1,1.5,2")]
    p_grid: Vec<f64>,
    #[arg(long, value_enum, default_value_t = Mode::Roots)]
    mode: Mode,
    #[arg(long, default_value_t = 1)]
    degree_min: usize,
    #[arg(long, default_value_t = 10)]
    degree_max: usize,
}

impl EnsembleArgs {
    fn spec(&self) -> EnsembleSpec {
        EnsembleSpec {
            count: self.count,
            degree_range: (self.degree_min, self.degree_max),
            mode: match self.mode {
                Mode::Roots => SamplingMode::DEFAULT_ROOTS,
                Mode::Coefficients => SamplingMode::DEFAULT_COEFFICIENTS,
                Mode::Equality => SamplingMode::EqualityFamily,
            },
            seed: self.seed,
            p_grid: self.p_grid.clone(),
        }
    }
}

fn parse_p(s: &str) -> Result<f64, String> {
    let p = match s.trim() {
        "inf" | "infinity" | "Inf" => f64::INFINITY,
        t => t.parse::<f64>().map_err(|e| format!("{t:?}: {e}"))?,
    };
    if p.is_nan() || p <= 0.0 {
        return Err(format!("exponent must lie in (0, inf], got {s}"));
    }
    Ok(p)
}

fn parse_poly(s: &str) -> Result<Polynomial, Error> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    let cfg = QuadratureConfig::default();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Report { poly, p, format } => {
            let f = parse_poly(&poly)?;
            let report = bound_report(&f, p, &cfg)?;
            match format {
                Format::Json => writeln!(out, "{}", report.to_json())?,
                Format::Text => write!(out, "{report}")?,
            }
        }
        Command::Verify {
            ensemble,
            tol,
            include_unproven,
            json,
        } => {
            let opts = VerifyOptions {
                tol,
                include_unproven,
                quadrature: cfg,
            };
            let outcome = verify_ensemble_with(&ensemble.spec(), &opts)?;
            if json {
                let text = serde_json::to_string_pretty(&outcome).map_err(|e| Error::Output(e.to_string()))?;
                writeln!(out, "{text}")?;
            } else {
                writeln!(out, "checks             {}", outcome.checks)?;
                writeln!(out, "violations         {}", outcome.violations.len())?;
                writeln!(out, "unproven findings  {}", outcome.unproven_findings.len())?;
                writeln!(out, "equalities         {}", outcome.equalities.len())?;
                writeln!(out, "failures           {}", outcome.failures.len())?;
                for v in &outcome.violations {
                    writeln!(
                        out,
                        "violation  #{} p={} {} = {} > measured {} (slack {:e})  poly {}",
                        v.index, v.p, v.bound, v.value, v.measured, v.slack, v.poly
                    )?;
                }
                for v in &outcome.unproven_findings {
                    writeln!(
                        out,
                        "unproven-form finding  #{} p={} {} = {} > measured {} (slack {:e})  poly {}",
                        v.index, v.p, v.bound, v.value, v.measured, v.slack, v.poly
                    )?;
                }
                for f in &outcome.failures {
                    writeln!(out, "failure  #{} p={} {}  poly {}", f.index, f.p, f.message, f.poly)?;
                }
            }
            if !outcome.is_clean() {
                return Ok(ExitCode::from(EXIT_VIOLATION));
            }
        }
        Command::Constants => write_constants(&mut out)?,
        Command::Subsets { poly, p } => {
            let f = parse_poly(&poly)?;
            if f.zero_factor() > 0 {
                eprintln!("note: removed a z^{} factor before reflecting roots", f.zero_factor());
            }
            let d = roots(&f.stripped())?;
            eprintln!("canonical subset {}", canonical_subset(&d));
            write_subset_csv(SubsetTable::new(&d, p)?, &mut out)?;
        }
        Command::Witness { p } => {
            let w = noncomparability_witnesses(p)?;
            let text = serde_json::to_string_pretty(&w).map_err(|e| Error::Output(e.to_string()))?;
            writeln!(out, "{text}")?;
        }
        Command::Sharpness { ensemble } => {
            let rows = sharpness_stats(&ensemble.spec(), &cfg)?;
            write_sharpness_csv(&rows, &mut out)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn write_constants<W: Write>(out: &mut W) -> Result<(), Error> {
    writeln!(out, "B_p = (Gamma(p+1) / (2 Gamma(p/2+1)^2))^(1/p)")?;
    writeln!(out, "{:>6}  {:>14}", "p", "B_p")?;
    for p in [0.5, 1.0, 1.25, 1.5, 1.75, 2.0, 3.0, 4.0] {
        writeln!(out, "{p:>6}  {:>14.12}", bp_constant(p)?)?;
    }
    let c = optimal_p_constant();
    writeln!(out)?;
    writeln!(out, "crossover threshold   {:.12}  [1]", crossover_threshold())?;
    writeln!(out, "optimal-p constant c  {c:.12}  [2]")?;
    writeln!(out)?;
    writeln!(out, "[1] {CROSSOVER_FOOTNOTE}")?;
    writeln!(
        out,
        "[2] positive root of 2c^2 = (1 + c^2) log(1 + c^2), residual {:.1e}; \
         the asymmetric root bound peaks at p = 2c M(F)^2 / |a_0 a_N|",
        optimal_p_residual(c)
    )?;
    Ok(())
}

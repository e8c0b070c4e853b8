//! `frobgb`: Gröbner bases, ideal operations and the verification harnesses
//! from the command line.

mod input;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use frobgb::cohomology::{h0_length, rjj_estimate};
use frobgb::io::AnyRing;
use frobgb::verify::{
    check_spoly_certificates, verify_construction, verify_example_with, ExampleOptions,
};
use frobgb::{ConstructionParams, ExampleParams, Field, Ideal, RingRef, VerificationReport};

use input::{load_ideal, load_ring, parse_by, parse_list, parse_pairs, parse_poly, By};
use output::Format;

const BUDGET_VAR: &str = "FROBGB_TIME_BUDGET_SECS";

#[derive(Parser)]
#[command(
    name = "frobgb",
    version,
    about = "Exact ideal computations over F_p and F_p(t)"
)]
struct Cli {
    /// Output mode.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the reduced Gröbner basis of an ideal.
    Gb { ring: PathBuf, ideal: PathBuf },
    /// Print the remainder of a polynomial against the reduced basis.
    Nf {
        ring: PathBuf,
        ideal: PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Decide ideal membership.
    Member {
        ring: PathBuf,
        ideal: PathBuf,
        #[arg(long)]
        poly: String,
        /// Also print cofactors over the listed generators.
        #[arg(long)]
        certificate: bool,
    },
    /// Ideal quotient by a polynomial or by an ideal file.
    Colon {
        ring: PathBuf,
        ideal: PathBuf,
        #[arg(long)]
        by: String,
    },
    /// Saturation by a polynomial or by an ideal file.
    Sat {
        ring: PathBuf,
        ideal: PathBuf,
        #[arg(long)]
        by: String,
    },
    /// Intersection of two ideals.
    Intersect {
        ring: PathBuf,
        a: PathBuf,
        b: PathBuf,
    },
    /// Frobenius bracket power `I^[q]`.
    Frob {
        ring: PathBuf,
        ideal: PathBuf,
        #[arg(long)]
        q: u64,
    },
    /// Length of the m-torsion of `U/J`.
    H0len {
        ring: PathBuf,
        u: PathBuf,
        j: PathBuf,
        #[arg(long)]
        max: PathBuf,
    },
    /// Table of `(q, len H0_m(I^[q]/J^[q]), len/q^d)`.
    Rjj {
        ring: PathBuf,
        #[arg(long = "J")]
        j: PathBuf,
        #[arg(long = "I")]
        i: PathBuf,
        #[arg(long)]
        d: u32,
        /// Comma-separated powers of the characteristic.
        #[arg(long)]
        q: String,
        /// Maximal ideal; all variables when omitted.
        #[arg(long)]
        max: Option<PathBuf>,
        /// Work modulo this polynomial.
        #[arg(long)]
        relation: Option<String>,
    },
    /// Check the ideals `e ⊊ h` and the bases `G`, `F` at `(p, m)`.
    VerifyConstruction {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
    },
    /// Check the characteristic-p example at `(p, q = p^e)`.
    VerifyExample {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        e: u32,
    },
    /// Check S-polynomial certificates for `F` and `G`.
    Certs {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
        /// Subset of curated pairs, e.g. `0:1,0:6`.
        #[arg(long)]
        pairs: Option<String>,
    },
}

/// Printed output and whether every requested check passed.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn query(text: String) -> Self {
        Outcome { text, passed: true }
    }

    fn report(format: Format, report: &VerificationReport) -> Self {
        let text = match format {
            Format::Text => report.render_text(),
            Format::Machine => report.render_machine(),
        };
        Outcome {
            text,
            passed: report.passed(),
        }
    }
}

macro_rules! on_ring {
    ($path:expr, $r:ident => $body:expr) => {
        match load_ring($path)? {
            AnyRing::Prime($r) => $body,
            AnyRing::Rational($r) => $body,
        }
    };
}

fn time_budget() -> Result<Option<Duration>> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => {
            let secs: f64 = v
                .trim()
                .parse()
                .with_context(|| format!("{BUDGET_VAR}=`{v}` is not a number"))?;
            if !secs.is_finite() || secs < 0.0 {
                bail!("{BUDGET_VAR} must be a nonnegative number of seconds");
            }
            Ok(Some(Duration::from_secs_f64(secs)))
        }
        Err(_) => Ok(None),
    }
}

fn gb<F: Field>(format: Format, ring: &RingRef<F>, ideal: &Path) -> Result<String> {
    Ok(output::ideal(format, "gb", &load_ideal(ring, ideal)?))
}

fn nf<F: Field>(format: Format, ring: &RingRef<F>, ideal: &Path, poly: &str) -> Result<String> {
    let ideal = load_ideal(ring, ideal)?;
    let f = parse_poly(ring, poly)?;
    Ok(output::value(
        format,
        "nf",
        "normal_form",
        ideal.groebner_basis().normal_form(&f),
    ))
}

fn member<F: Field>(
    format: Format,
    ring: &RingRef<F>,
    ideal: &Path,
    poly: &str,
    certificate: bool,
) -> Result<String> {
    let ideal = load_ideal(ring, ideal)?;
    let f = parse_poly(ring, poly)?;
    if !certificate {
        return Ok(output::value(
            format,
            "member",
            "member",
            ideal.membership(&f)?,
        ));
    }
    let cert = ideal.membership_certificate(&f)?;
    let mut out = output::value(format, "member", "member", cert.is_some());
    if let Some(cofactors) = cert {
        for (i, (c, g)) in cofactors.iter().zip(ideal.generators()).enumerate() {
            out += &match format {
                Format::Text => format!("({c}) * ({g})\n"),
                Format::Machine => format!("cofactor.{i}={c}\n"),
            };
        }
    }
    Ok(out)
}

fn colon<F: Field>(
    format: Format,
    ring: &RingRef<F>,
    ideal: &Path,
    by: &str,
    saturate: bool,
) -> Result<String> {
    let ideal = load_ideal(ring, ideal)?;
    let by = parse_by(ring, by)?;
    if !saturate {
        let result = match by {
            By::Element(u) => ideal.colon_element(&u)?,
            By::Ideal(k) => ideal.colon_ideal(&k)?,
        };
        return Ok(output::ideal(format, "colon", &result));
    }
    let sat = match by {
        By::Element(u) => ideal.saturate(&u)?,
        By::Ideal(k) => ideal.saturate_ideal(&k)?,
    };
    let mut out = output::ideal(format, "sat", &sat.ideal);
    if format == Format::Machine {
        out += &format!("iterations={}\n", sat.iterations);
    }
    Ok(out)
}

fn intersect<F: Field>(format: Format, ring: &RingRef<F>, a: &Path, b: &Path) -> Result<String> {
    let meet = load_ideal(ring, a)?.intersect(&load_ideal(ring, b)?)?;
    Ok(output::ideal(format, "intersect", &meet))
}

fn frob<F: Field>(format: Format, ring: &RingRef<F>, ideal: &Path, q: u64) -> Result<String> {
    let power = load_ideal(ring, ideal)?.frobenius_power(q)?;
    Ok(output::polys(format, "frob", power.generators()))
}

fn h0len<F: Field>(
    format: Format,
    ring: &RingRef<F>,
    u: &Path,
    j: &Path,
    max: &Path,
) -> Result<String> {
    let len = h0_length(
        &load_ideal(ring, u)?,
        &load_ideal(ring, j)?,
        &load_ideal(ring, max)?,
    )?;
    Ok(output::value(format, "h0len", "length", len))
}

#[allow(clippy::too_many_arguments)]
fn rjj<F: Field>(
    format: Format,
    ring: &RingRef<F>,
    j: &Path,
    i: &Path,
    d: u32,
    qs: &str,
    max: Option<&Path>,
    relation: Option<&str>,
) -> Result<String> {
    let (j, i) = (load_ideal(ring, j)?, load_ideal(ring, i)?);
    let max = match max {
        Some(path) => load_ideal(ring, path)?,
        None => {
            let names: Vec<&str> = ring.variables().iter().map(String::as_str).collect();
            Ideal::variables(ring, &names)?
        }
    };
    let relation = relation.map(|r| parse_poly(ring, r)).transpose()?;
    let qs = parse_list(qs)?;
    if qs.is_empty() {
        bail!("--q needs at least one value");
    }
    let budget = time_budget()?;
    let rows = match budget {
        None => rjj_estimate(&j, &i, &max, d, &qs, relation.as_ref())?,
        Some(budget) => {
            let start = Instant::now();
            let mut rows = Vec::new();
            for (k, &q) in qs.iter().enumerate() {
                if k > 0 && start.elapsed() >= budget {
                    break;
                }
                rows.extend(rjj_estimate(&j, &i, &max, d, &[q], relation.as_ref())?);
            }
            rows
        }
    };
    Ok(output::rows(format, &rows, rows.len() < qs.len()))
}

fn run(cli: Cli) -> Result<Outcome> {
    let format = cli.format;
    Ok(match cli.command {
        Command::Gb { ring, ideal } => {
            Outcome::query(on_ring!(&ring, r => gb(format, &r, &ideal)?))
        }
        Command::Nf { ring, ideal, poly } => {
            Outcome::query(on_ring!(&ring, r => nf(format, &r, &ideal, &poly)?))
        }
        Command::Member {
            ring,
            ideal,
            poly,
            certificate,
        } => Outcome::query(on_ring!(&ring, r => member(format, &r, &ideal, &poly, certificate)?)),
        Command::Colon { ring, ideal, by } => {
            Outcome::query(on_ring!(&ring, r => colon(format, &r, &ideal, &by, false)?))
        }
        Command::Sat { ring, ideal, by } => {
            Outcome::query(on_ring!(&ring, r => colon(format, &r, &ideal, &by, true)?))
        }
        Command::Intersect { ring, a, b } => {
            Outcome::query(on_ring!(&ring, r => intersect(format, &r, &a, &b)?))
        }
        Command::Frob { ring, ideal, q } => {
            Outcome::query(on_ring!(&ring, r => frob(format, &r, &ideal, q)?))
        }
        Command::H0len { ring, u, j, max } => {
            Outcome::query(on_ring!(&ring, r => h0len(format, &r, &u, &j, &max)?))
        }
        Command::Rjj {
            ring,
            j,
            i,
            d,
            q,
            max,
            relation,
        } => Outcome::query(on_ring!(
            &ring,
            r => rjj(format, &r, &j, &i, d, &q, max.as_deref(), relation.as_deref())?
        )),
        Command::VerifyConstruction { p, m } => Outcome::report(
            format,
            &verify_construction(ConstructionParams::new(p, m)?)?,
        ),
        Command::VerifyExample { p, e } => {
            let opts = ExampleOptions {
                time_budget: time_budget()?,
            };
            Outcome::report(
                format,
                &verify_example_with(ExampleParams::new(p, e)?, opts)?,
            )
        }
        Command::Certs { p, m, pairs } => {
            let pairs = pairs.as_deref().map(parse_pairs).transpose()?;
            Outcome::report(
                format,
                &check_spoly_certificates(ConstructionParams::new(p, m)?, pairs.as_deref())?,
            )
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

use std::ffi::OsString;
use std::fmt::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use affcell_core::cellalg::{layer_idempotent, verify_cell_axioms_bounded, CheckStatus, LayerIdempotency};
use affcell_core::pairing::PairingContext;
use affcell_core::sample;
use affcell_core::simples::{classify_point, point_to_polynomial, polynomial_to_point};
use affcell_core::symfunc::{schur, schur_expand};
use affcell_core::{BlockShape, CellDatum, DrinfeldPoint, DrinfeldPolynomial, GLWeight, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use crate::datum::{parse_cell_datum, parse_datum_unchecked};
use crate::element::parse_element;
use crate::error::{Error, Result};
use crate::expr::parse_poly;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    /// `key=value` lines; records separated by a blank line.
    Records,
}

#[derive(Debug, Parser)]
#[command(name = "affcell", version, about = "Exact computations with cell layers and Schur characters")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest |part| of randomly sampled Schur weights.
    #[arg(long, global = true, default_value_t = 4)]
    pub bound: i32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ShapeArgs {
    /// Single block of this size.
    #[arg(long, conflicts_with = "shape")]
    pub m: Option<usize>,
    /// Comma-separated block sizes, e.g. `2,1`.
    #[arg(long)]
    pub shape: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Schur polynomial of a weight.
    Schur {
        #[arg(long)]
        m: usize,
        /// Weakly decreasing parts, e.g. `2,0` or `0,-1`.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Expand a block-symmetric polynomial in Schur products.
    Expand {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Constant-term inner product of two symmetric polynomials.
    Pair {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Multiply two cell elements `[b; S; c] + ...`.
    Mult {
        #[arg(long)]
        datum: PathBuf,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Verify the algebra axioms of a datum and report.
    Check {
        #[arg(long)]
        datum: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        samples: usize,
    },
    /// Classify points of the maximal spectrum.
    Simples {
        #[arg(long)]
        datum: PathBuf,
        /// Values per block, blocks separated by `/` (or `;`), e.g. `2,3/5`.
        #[arg(long = "point", allow_hyphen_values = true)]
        points: Vec<String>,
        /// Monic polynomials in `u`, blocks separated by `;`.
        #[arg(long = "poly", allow_hyphen_values = true)]
        polys: Vec<String>,
        /// Number of seeded random points to add.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_command(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Output { status: 2, stdout: String::new(), stderr: text }
            } else {
                Output { status: 0, stdout: text, stderr: String::new() }
            }
        }
    }
}

pub fn run_command(cli: &Cli) -> Output {
    match dispatch(cli) {
        Ok(stdout) => Output { status: 0, stdout, stderr: String::new() },
        Err(e) => Output { status: 1, stdout: String::new(), stderr: format!("error: {}\n", e) },
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

fn with_path(path: &Path, e: Error) -> Error {
    match e {
        Error::Io { .. } => e,
        other => Error::Usage(format!("{}: {}", path.display(), other)),
    }
}

fn load(path: &Path, strict: bool) -> Result<Arc<CellDatum>> {
    let text = read_file(path)?;
    let d = if strict { parse_cell_datum(&text) } else { parse_datum_unchecked(&text) };
    d.map(Arc::new).map_err(|e| with_path(path, e))
}

fn parse_ints(s: &str, what: &str) -> Result<Vec<i32>> {
    s.split(',')
        .map(|p| p.trim().parse().map_err(|_| Error::Usage(format!("invalid {} entry '{}'", what, p))))
        .collect()
}

fn resolve_shape(a: &ShapeArgs) -> Result<BlockShape> {
    match (&a.m, &a.shape) {
        (Some(m), None) => Ok(BlockShape::single(*m)),
        (None, Some(s)) => {
            let sizes = s
                .split(',')
                .map(|p| p.trim().parse().map_err(|_| Error::Usage(format!("invalid block size '{}'", p))))
                .collect::<Result<Vec<usize>>>()?;
            Ok(BlockShape::from_sizes(&sizes))
        }
        _ => Err(Error::Usage("give exactly one of --m or --shape".into())),
    }
}

fn emit(format: Format, key: &str, value: &str) -> String {
    match format {
        Format::Text => format!("{}\n", value),
        Format::Records => format!("{}={}\n", key, value),
    }
}

fn dispatch(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Schur { m, weight } => {
            let w = GLWeight::new(parse_ints(weight, "weight")?)?;
            Ok(emit(cli.format, "schur", &schur(*m, &w)?.to_string()))
        }
        Command::Expand { shape, expr } => {
            let shape = resolve_shape(shape)?;
            let f = parse_poly(expr, &shape)?;
            Ok(emit(cli.format, "expansion", &schur_expand(&f)?.to_string()))
        }
        Command::Pair { shape, f, g } => {
            let shape = resolve_shape(shape)?;
            let ctx = PairingContext::new(&shape);
            let v = ctx.inner(&parse_poly(f, &shape)?, &parse_poly(g, &shape)?)?;
            Ok(emit(cli.format, "inner", &v.to_string()))
        }
        Command::Mult { datum, x, y } => {
            let d = load(datum, true)?;
            let x = parse_element(x, &d)?;
            let y = parse_element(y, &d)?;
            Ok(emit(cli.format, "product", &x.mul(&y)?.to_string()))
        }
        Command::Check { datum, seed, samples } => {
            let d = load(datum, false)?;
            Ok(check_report(&d, *samples, *seed, cli.bound, cli.format))
        }
        Command::Simples { datum, points, polys, random, seed } => {
            let d = load(datum, true)?;
            let mut pts = Vec::new();
            for p in points {
                pts.push(parse_point(p, d.shape())?);
            }
            for p in polys {
                pts.push(polynomial_to_point(&parse_drinfeld(p, d.shape())?)?);
            }
            if let Some(n) = random {
                let mut rng = sample::rng(*seed);
                pts.extend((0..*n).map(|_| sample::random_point(&mut rng, d.shape())));
            }
            if pts.is_empty() {
                return Err(Error::Usage("no points given; use --point, --poly or --random".into()));
            }
            simples_report(&d, &pts, cli.format)
        }
    }
}

fn status_word(s: &CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail(_) => "FAIL",
        CheckStatus::NotApplicable => "N/A",
    }
}

fn check_report(d: &Arc<CellDatum>, samples: usize, seed: u64, bound: i32, format: Format) -> String {
    let report = verify_cell_axioms_bounded(d, samples, seed, bound);
    let idem = layer_idempotent(d);
    let mut out = String::new();
    let failed = report.checks.iter().filter(|c| matches!(c.status, CheckStatus::Fail(_))).count();
    match format {
        Format::Text => {
            writeln!(out, "labels: {}", d.labels().join(" ")).unwrap();
            for c in &report.checks {
                write!(out, "{:<4} {:<22} {}", status_word(&c.status), c.key, c.description).unwrap();
                if let CheckStatus::Fail(msg) = &c.status {
                    write!(out, "\n     {}", msg).unwrap();
                }
                out.push('\n');
            }
            match &idem {
                LayerIdempotency::Yes { witness: (b, c) } => {
                    writeln!(out, "layer idempotent: yes, unit gram at ({}, {})", b, c).unwrap()
                }
                LayerIdempotency::Inconclusive => writeln!(out, "layer idempotent: inconclusive").unwrap(),
            }
            if failed == 0 {
                out.push_str("all checks passed\n");
            } else {
                writeln!(out, "{} check(s) failed", failed).unwrap();
            }
        }
        Format::Records => {
            for c in &report.checks {
                let v = match &c.status {
                    CheckStatus::Pass => "pass".to_string(),
                    CheckStatus::Fail(msg) => format!("fail: {}", msg),
                    CheckStatus::NotApplicable => "n/a".to_string(),
                };
                writeln!(out, "check.{}={}", c.key, v).unwrap();
            }
            match &idem {
                LayerIdempotency::Yes { witness: (b, c) } => {
                    writeln!(out, "layer_idempotent=yes\nlayer_idempotent.witness={},{}", b, c).unwrap()
                }
                LayerIdempotency::Inconclusive => out.push_str("layer_idempotent=inconclusive\n"),
            }
            writeln!(out, "failed={}", failed).unwrap();
        }
    }
    out
}

fn simples_report(d: &CellDatum, pts: &[DrinfeldPoint], format: Format) -> Result<String> {
    let mut out = String::new();
    for (k, p) in pts.iter().enumerate() {
        let c = classify_point(d, p)?;
        let poly = point_to_polynomial(p);
        match format {
            Format::Text => writeln!(
                out,
                "{}  [{}]  has_simple={} rank={}",
                p, poly, c.has_simple, c.rank
            )
            .unwrap(),
            Format::Records => {
                if k > 0 {
                    out.push('\n');
                }
                writeln!(out, "point={}\ndrinfeld={}\nhas_simple={}\nrank={}", p, poly, c.has_simple, c.rank).unwrap();
            }
        }
    }
    Ok(out)
}

fn parse_value(s: &str) -> Result<Rational> {
    let bad = || Error::Usage(format!("invalid value '{}'", s));
    let (n, d) = s.trim().split_once('/').unwrap_or((s.trim(), "1"));
    let n: num_bigint::BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Reads `a1,a2/b1/...`. A `/` is either a block separator or a fraction bar;
/// the reading whose block sizes match the shape is used. `;` always
/// separates blocks.
pub fn parse_point(s: &str, shape: &BlockShape) -> Result<DrinfeldPoint> {
    let sizes: Vec<usize> = shape.blocks().iter().map(|&(_, m)| m).collect();
    let blocks: Vec<Vec<Rational>> = if s.contains(';') {
        s.split(';')
            .map(|b| b.split(',').map(parse_value).collect())
            .collect::<Result<_>>()?
    } else {
        // tokens alternate number, separator
        let mut nums = Vec::new();
        let mut seps = Vec::new();
        let mut cur = String::new();
        for c in s.chars() {
            if c == ',' || c == '/' {
                nums.push(std::mem::take(&mut cur));
                seps.push(c);
            } else {
                cur.push(c);
            }
        }
        nums.push(cur);
        let slashes: Vec<usize> = (0..seps.len()).filter(|&i| seps[i] == '/').collect();
        let mut found: Option<Vec<Vec<Rational>>> = None;
        for mask in 0u64..(1u64 << slashes.len().min(20)) {
            // bit set: the slash separates blocks
            let mut is_block = vec![false; seps.len()];
            for (j, &i) in slashes.iter().enumerate() {
                is_block[i] = mask & (1 << j) != 0;
            }
            let Some(reading) = group(&nums, &seps, &is_block) else {
                continue;
            };
            if reading.iter().map(Vec::len).eq(sizes.iter().copied()) {
                if found.is_some() {
                    return Err(Error::Usage(format!("point '{}' is ambiguous; separate blocks with ';'", s)));
                }
                found = Some(reading);
            }
        }
        found.ok_or_else(|| Error::Usage(format!("point '{}' does not match block sizes {:?}", s, sizes)))?
    };
    Ok(DrinfeldPoint::new(shape, blocks)?)
}

fn group(nums: &[String], seps: &[char], is_block: &[bool]) -> Option<Vec<Vec<Rational>>> {
    let mut blocks = vec![Vec::new()];
    let mut cur = nums[0].clone();
    for (i, &sep) in seps.iter().enumerate() {
        if sep == '/' && !is_block[i] {
            cur.push('/');
            cur.push_str(&nums[i + 1]);
            continue;
        }
        blocks.last_mut()?.push(parse_value(&cur).ok()?);
        if sep == '/' {
            blocks.push(Vec::new());
        }
        cur = nums[i + 1].clone();
    }
    blocks.last_mut()?.push(parse_value(&cur).ok()?);
    Some(blocks)
}

/// Reads `;`-separated monic polynomials in `u`, one per block.
pub fn parse_drinfeld(s: &str, shape: &BlockShape) -> Result<DrinfeldPolynomial> {
    let one = BlockShape::single(1);
    let mut polys = Vec::new();
    for part in s.split(';') {
        let p = parse_poly(&part.replace('u', "z1"), &one)?;
        let mut coeffs: Vec<Rational> = Vec::new();
        for (m, c) in p.terms() {
            let e = m.z_part().first().map_or(0, |&(_, e)| e);
            if e < 0 || m.q_half() != 0 {
                return Err(Error::Usage(format!("'{}' is not a polynomial in u", part.trim())));
            }
            let e = e as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            coeffs[e] = c.clone();
        }
        polys.push(coeffs);
    }
    Ok(DrinfeldPolynomial::new(shape, polys)?)
}

use std::fmt;
use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use twistree::bijection::{tau, tau_express, tau_inverse};
use twistree::counting::build_count_table;
use twistree::doc::TreeDocument;
use twistree::enumeration::{
    enumerate_cayley, enumerate_inc12, EnumerationError, Family, DEFAULT_CAP,
};
use twistree::par::Execution;
use twistree::sampling::{
    sample_batch, sample_cayley, sample_inc12, SampleStats, ScriptedRng, UniformSource,
};
use twistree::series::{
    check_pde, closed_form_check, egf_from_counts, lambert_residual, lambert_w_series,
};

use crate::{Command, Direction, Format};

pub const CAP_VAR: &str = "TWISTREE_CAP";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Cap(String),
    Validation(String),
    Verification(String),
    Io(io::Error),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Validation(_) => 4,
            CliError::Verification(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m)
            | CliError::Cap(m)
            | CliError::Validation(m)
            | CliError::Verification(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(command: Command) -> Result<()> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = dispatch(command, &mut out).and_then(|()| Ok(out.flush()?));
    match result {
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}

fn usize_arg(v: u64) -> Result<usize> {
    usize::try_from(v).map_err(|_| CliError::Usage(format!("{v} is too large")))
}

fn dispatch(command: Command, out: &mut impl Write) -> Result<()> {
    match command {
        Command::Count { n, full } => count(usize_arg(n)?, full, out),
        Command::Enumerate {
            family,
            n,
            format,
            cap,
        } => enumerate(family, usize_arg(n)?, format, cap, out),
        Command::Map {
            direction,
            input,
            out: path,
            express,
        } => map(direction, &input, &path, express, out),
        Command::Sample {
            family,
            n,
            count,
            seed,
            format,
            stats,
            workers,
            script,
        } => {
            let (n, count, workers) = (usize_arg(n)?, usize_arg(count)?, usize_arg(workers)?);
            let samples = match script {
                Some(path) => sample_scripted(family, n, count, &path)?,
                None => sample_batch(count, seed, workers, Execution::Parallel, |r| {
                    draw(family, n, r)
                }),
            };
            for (doc, s) in samples {
                emit(&doc, format, out)?;
                if stats {
                    eprintln!("{}", serde_json::to_string(&s).expect("plain struct"));
                }
            }
            Ok(())
        }
        Command::Verify {
            pde,
            closed_form,
            lambert: _,
            order,
        } => {
            let order = usize_arg(order)?;
            if pde {
                verify_pde(order, out)
            } else if closed_form {
                verify_closed_form(order, out)
            } else {
                verify_lambert(order, out)
            }
        }
        Command::Stats {
            family,
            n,
            count,
            seed,
            workers,
        } => stats(
            family,
            usize_arg(n)?,
            usize_arg(count)?,
            seed,
            usize_arg(workers)?,
            out,
        ),
    }
}

fn count(n: usize, full: bool, out: &mut impl Write) -> Result<()> {
    let table = build_count_table(n);
    let first = if full { 1 } else { n };
    for k in first..=n {
        for (m, c) in table.row_entries(k) {
            writeln!(out, "{k}\t{m}\t{c}")?;
        }
        writeln!(out, "sum\t{}", table.row_sum(k))?;
    }
    Ok(())
}

fn cap_from_env() -> Result<usize> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{CAP_VAR}={v:?} is not a size"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn emit(doc: &TreeDocument, format: Format, out: &mut impl Write) -> Result<()> {
    match format {
        Format::Jsonl => writeln!(out, "{}", doc.to_json())?,
        Format::Dot => out.write_all(doc.to_dot().as_bytes())?,
    }
    Ok(())
}

fn enumerate(
    family: Family,
    n: usize,
    format: Format,
    cap: Option<usize>,
    out: &mut impl Write,
) -> Result<()> {
    let cap = match cap {
        Some(c) => c,
        None => cap_from_env()?,
    };
    let bound = |e: EnumerationError| match e {
        EnumerationError::ResourceBound { .. } => {
            CliError::Cap(format!("{e}; raise it with --cap or {CAP_VAR}"))
        }
        other => CliError::Usage(other.to_string()),
    };
    match family {
        Family::Inc12 => {
            for s in enumerate_inc12(n, cap).map_err(bound)? {
                emit(&s.into(), format, out)?;
            }
        }
        Family::Cayley => {
            for t in enumerate_cayley(n, cap).map_err(bound)? {
                emit(&t.into(), format, out)?;
            }
        }
    }
    Ok(())
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn map(
    direction: Direction,
    input: &Path,
    path: &Path,
    express: bool,
    out: &mut impl Write,
) -> Result<()> {
    let doc = TreeDocument::parse(&read_input(input)?)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    let invalid = |e: twistree::bijection::BijectionError| CliError::Validation(e.to_string());
    let (mapped, stat): (TreeDocument, String) = match (direction, doc) {
        (Direction::Forward, TreeDocument::Inc12(s)) => {
            let t = if express { tau_express(&s) } else { tau(&s) }.map_err(invalid)?;
            let line = format!("twists\t{}", t.count_twists());
            (t.into(), line)
        }
        (Direction::Inverse, TreeDocument::Cayley(t)) => {
            if express {
                return Err(CliError::Usage(
                    "--express applies to the forward direction".into(),
                ));
            }
            let s = tau_inverse(&t).map_err(invalid)?;
            let line = format!("triangles\t{}", s.triangle_count());
            (s.into(), line)
        }
        (direction, doc) => {
            return Err(CliError::Validation(format!(
                "{direction:?} mapping does not accept a {} document",
                doc.family()
            )))
        }
    };
    let json = mapped.to_json();
    if path.as_os_str() == "-" {
        writeln!(out, "{json}")?;
        eprintln!("{stat}");
    } else {
        fs::write(path, format!("{json}\n"))?;
        writeln!(out, "{stat}")?;
    }
    Ok(())
}

fn draw<R: UniformSource>(family: Family, n: usize, rng: &mut R) -> (TreeDocument, SampleStats) {
    match family {
        Family::Cayley => {
            let (t, s) = sample_cayley(n, rng);
            (t.into(), s)
        }
        Family::Inc12 => {
            let (t, s) = sample_inc12(n, rng);
            (t.into(), s)
        }
    }
}

fn sample_scripted(
    family: Family,
    n: usize,
    count: usize,
    path: &Path,
) -> Result<Vec<(TreeDocument, SampleStats)>> {
    let text = read_input(path)?;
    let values = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|w| !w.is_empty())
        .map(|w| w.parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| CliError::Validation(format!("script: {e}")))?;
    let mut rng = ScriptedRng::new(values);
    let mut samples = Vec::with_capacity(count);
    for _ in 0..count {
        samples.push(draw(family, n, &mut rng));
        if let Some(e) = rng.error() {
            return Err(CliError::Validation(format!("script: {e}")));
        }
    }
    Ok(samples)
}

fn fail(out: &mut impl Write, what: &str, detail: impl fmt::Display) -> Result<()> {
    writeln!(out, "FAIL {what}: {detail}")?;
    Err(CliError::Verification(format!("{what} check failed")))
}

fn verify_pde(order: usize, out: &mut impl Write) -> Result<()> {
    let c = egf_from_counts(&build_count_table(order), order);
    match check_pde(&c) {
        Ok(()) => Ok(writeln!(
            out,
            "PASS pde: residual vanishes for the series through z^{order}"
        )?),
        Err(m) => fail(out, "pde", m),
    }
}

fn verify_closed_form(order: usize, out: &mut impl Write) -> Result<()> {
    let report = closed_form_check(order).map_err(|e| CliError::Usage(e.to_string()))?;
    if report.passed() {
        Ok(writeln!(out, "PASS closed-form: {report}")?)
    } else {
        fail(out, "closed-form", report)
    }
}

fn verify_lambert(order: usize, out: &mut impl Write) -> Result<()> {
    let w = lambert_w_series(order);
    let r = lambert_residual(&w);
    if let Some(k) = (0..=order).find(|&k| !r.coeff(k).is_zero()) {
        return fail(
            out,
            "lambert",
            format_args!("W e^W - x has {} at x^{k}", r.coeff(k)),
        );
    }
    writeln!(out, "PASS lambert: W e^W = x through x^{order}")?;
    for k in 1..=order {
        writeln!(out, "x^{k}\t{}", w.coeff(k))?;
    }
    Ok(())
}

fn stats(
    family: Family,
    n: usize,
    count: usize,
    seed: u64,
    workers: usize,
    out: &mut impl Write,
) -> Result<()> {
    let observed: Vec<usize> =
        sample_batch(
            count,
            seed,
            workers,
            Execution::Parallel,
            |r| match family {
                Family::Cayley => sample_cayley(n, r).0.count_twists(),
                Family::Inc12 => sample_inc12(n, r).0.triangle_count(),
            },
        );
    let table = build_count_table(n);
    let row = table.row(n);
    let total = BigInt::from(table.row_sum(n));
    let mut hist = vec![0usize; row.len()];
    for k in observed {
        hist[k] += 1;
    }
    let label = match family {
        Family::Cayley => "twists",
        Family::Inc12 => "triangles",
    };
    writeln!(out, "{label}\tobserved\texpected")?;
    let (mut chi2, mut classes) = (0.0, 0);
    for (k, (&o, c)) in hist.iter().zip(row).enumerate() {
        let p = BigRational::new(BigInt::from(c.clone()), total.clone())
            .to_f64()
            .unwrap_or(0.0);
        writeln!(out, "{k}\t{:.6}\t{p:.6}", o as f64 / count as f64)?;
        let e = p * count as f64;
        if e > 0.0 {
            chi2 += (o as f64 - e).powi(2) / e;
            classes += 1;
        } else if o > 0 {
            chi2 = f64::INFINITY;
        }
    }
    writeln!(out, "chi2\t{chi2:.4}\tdf\t{}", classes.max(1) - 1)?;
    Ok(())
}

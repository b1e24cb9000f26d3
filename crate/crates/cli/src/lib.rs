//! Command implementations behind the `irr` binary.
//!
//! Every command writes its report to a caller-supplied writer and returns a
//! [`Verdict`]; the binary maps verdicts and errors onto exit codes.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use irregularity::bounds::{self, BoundsError, DegreeInterval};
use irregularity::io::{parse_graph, to_edge_list, to_graph6, Format, ParseError};
use irregularity::lp::{self, LpError, Status, Variant};
use irregularity::oracle::{self, OracleError, SearchConstraints};
use irregularity::rational::{to_decimal, Rational};
use irregularity::{degree_profile, GraphError};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    File { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Clean,
    /// A bound or certificate failed its check.
    Violation,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Clean => 0,
            Verdict::Violation => 1,
        }
    }

    fn from_ok(ok: bool) -> Self {
        if ok {
            Verdict::Clean
        } else {
            Verdict::Violation
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

fn show(r: &Rational) -> String {
    format!("{r} ({})", to_decimal(r, 6))
}

/// Irregularity, order, size, degree range and degree profile of one graph.
pub fn cmd_irr(text: &str, source: &str, format: Format, out: &mut impl Write) -> Result<Verdict> {
    let g = parse_graph(text, format).map_err(|e| CliError::Parse {
        path: source.into(),
        source: e,
    })?;
    let profile = degree_profile(&g, g.max_degree().max(1))?;
    writeln!(out, "irr = {}", g.irregularity())?;
    writeln!(out, "n = {}", g.order())?;
    writeln!(out, "m = {}", g.size())?;
    writeln!(out, "Δ = {}", g.max_degree())?;
    writeln!(out, "δ = {}", g.min_degree())?;
    write!(out, "{profile}")?;
    Ok(Verdict::Clean)
}

fn interval_note(i: &DegreeInterval) -> String {
    if i.average < i.low {
        format!("2m/n = {} < {}", i.average, i.low)
    } else {
        format!("2m/n = {} > {}", i.average, i.high)
    }
}

/// Every bound that applies to `(n, m, Δ, δ)`, exact and in decimal.
pub fn cmd_bound(
    n: u64,
    m: u64,
    delta_cap: usize,
    delta_min: Option<usize>,
    out: &mut impl Write,
) -> Result<Verdict> {
    bounds::check_feasible(n, m, delta_cap)?;
    if let Some(dm) = delta_min {
        if dm >= delta_cap {
            return Err(BoundsError::DeltaMin {
                delta_min: dm,
                delta_cap,
            }
            .into());
        }
    }
    let dm = delta_min.unwrap_or(0);
    writeln!(out, "n = {n}, m = {m}, Δ = {delta_cap}, δ = {dm}")?;

    let thm1 = bounds::theorem1_bound(n, m, delta_cap)?;
    let admissible = bounds::theorem1_admissible_d(n, m, delta_cap);
    let d = bounds::d_index(n, m, delta_cap)?;
    write!(out, "thm1 = {}  d = {d}", show(&thm1))?;
    if admissible.len() > 1 {
        write!(
            out,
            "  (breakpoint, d = {} gives the same value)",
            admissible[0]
        )?;
    }
    writeln!(out)?;
    let cor1 = bounds::corollary1_bound(n, m, delta_cap)?;
    writeln!(out, "cor1 = {}", show(&cor1))?;
    let cap = bounds::corollary1_cap_holds(n, m, delta_cap)?;
    writeln!(
        out,
        "cap  (3-2√2)Δ²n ≈ {:.6}  cor1 below cap: {}",
        cap.cap,
        if cap.holds { "yes" } else { "NO" }
    )?;

    if dm * n as usize > 2 * m as usize {
        let avg = Rational::new((2 * m).into(), n.into());
        writeln!(out, "prop1 inapplicable: 2m/n = {avg} < {dm}")?;
    } else {
        let star = bounds::delta_star(delta_cap, dm)?;
        writeln!(
            out,
            "prop1 = {}  δ* = {star}",
            show(&bounds::prop1_bound(n, delta_cap, dm)?)
        )?;
    }
    match delta_min {
        None | Some(0) => writeln!(out, "prop2 inapplicable: requires δ >= 1")?,
        Some(dm) => match bounds::prop2_bound(n, m, delta_cap, dm) {
            Ok(v) => writeln!(out, "prop2 = {}  applicable", show(&v))?,
            Err(BoundsError::OutOfRange(i)) => {
                writeln!(out, "prop2 inapplicable: {}", interval_note(&i))?
            }
            Err(e) => return Err(e.into()),
        },
    }

    writeln!(
        out,
        "albertson 4n³/27 = {}",
        show(&bounds::albertson_cap(n))
    )?;
    for (name, value) in [
        ("eb2", bounds::zhou_luo_1(n, m, delta_cap, dm)),
        ("eb3", bounds::zhou_luo_2(n, m, delta_cap, dm)),
    ] {
        match value {
            Ok(v) => writeln!(out, "{name} ≈ {v:.6}")?,
            Err(e) => writeln!(out, "{name} undefined: {e}")?,
        }
    }
    Ok(Verdict::from_ok(cap.holds && thm1 <= cor1))
}

/// Which closed-form bound a certificate or LP refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantArg {
    Thm1,
    Prop1,
    Prop2,
}

impl VariantArg {
    pub fn with_delta_min(self, delta_min: Option<usize>) -> Result<Variant> {
        Ok(match (self, delta_min) {
            (VariantArg::Thm1, _) => Variant::Thm1,
            (VariantArg::Prop1, dm) => Variant::Prop1 {
                delta_min: dm.unwrap_or(0),
            },
            (VariantArg::Prop2, Some(dm)) => Variant::Prop2 { delta_min: dm },
            (VariantArg::Prop2, None) => {
                return Err(CliError::Usage("prop2 requires --delta-min".into()))
            }
        })
    }
}

/// Builds the dual certificate for a variant and prints its feasibility report.
pub fn cmd_certify(
    delta_cap: usize,
    variant: VariantArg,
    d: Option<usize>,
    delta_min: Option<usize>,
    out: &mut impl Write,
) -> Result<Verdict> {
    let cert = match variant {
        VariantArg::Thm1 => {
            let d = d.ok_or_else(|| CliError::Usage("thm1 requires --d".into()))?;
            lp::certificate_thm1(delta_cap, d)?
        }
        VariantArg::Prop1 => lp::certificate_prop1(delta_cap, delta_min.unwrap_or(0))?,
        VariantArg::Prop2 => {
            let dm =
                delta_min.ok_or_else(|| CliError::Usage("prop2 requires --delta-min".into()))?;
            lp::certificate_prop2(delta_cap, dm)?
        }
    };
    writeln!(out, "certificate {} for Δ = {delta_cap}", cert.kind)?;
    writeln!(out, "x = {}", cert.x)?;
    writeln!(out, "y = {}", cert.y)?;
    for (i, z) in &cert.z {
        writeln!(out, "z_{i} = {z}")?;
    }
    writeln!(out, "bound: {}", cert.bound_expression())?;
    let report = lp::check_feasible(&cert);
    writeln!(out, "{report}")?;
    Ok(Verdict::from_ok(report.is_feasible()))
}

/// Solves the primal program exactly and compares it with the closed form
/// and the matching certificate.
pub fn cmd_lp(
    n: u64,
    m: u64,
    delta_cap: usize,
    variant: Variant,
    export: Option<&Path>,
    out: &mut impl Write,
) -> Result<Verdict> {
    let program = lp::build_primal(n, m, delta_cap, variant)?;
    if let Some(path) = export {
        std::fs::write(path, program.to_string()).map_err(|source| CliError::File {
            path: path.into(),
            source,
        })?;
    }
    let sol = lp::solve(&program)?;
    writeln!(out, "program {variant}: n = {n}, m = {m}, Δ = {delta_cap}")?;
    let opt = match (sol.status, &sol.value) {
        (Status::Optimal, Some(v)) => v.clone(),
        (status, _) => {
            writeln!(out, "status {status:?}")?;
            return Ok(Verdict::Violation);
        }
    };
    writeln!(out, "OPT = {}", show(&opt))?;
    writeln!(out, "optimal profile:")?;
    for (name, v) in sol.assignment.iter().filter(|(_, v)| !v.is_zero()) {
        writeln!(out, "  {name} = {v}")?;
    }

    let (closed, cert) = match variant {
        Variant::Thm1 => (
            Some(bounds::theorem1_bound(n, m, delta_cap)?),
            lp::certificate_thm1(delta_cap, bounds::d_index(n, m, delta_cap)?)?,
        ),
        Variant::Prop1 { delta_min } => (
            Some(bounds::prop1_bound(n, delta_cap, delta_min)?),
            lp::certificate_prop1(delta_cap, delta_min)?,
        ),
        Variant::Prop2 { delta_min } => (
            bounds::prop2_bound(n, m, delta_cap, delta_min).ok(),
            lp::certificate_prop2(delta_cap, delta_min)?,
        ),
    };
    let mut ok = true;
    match &closed {
        Some(c) => {
            let relation = match opt.cmp(c) {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            writeln!(out, "closed form = {}  OPT {relation} closed form", show(c))?;
            ok &= opt <= *c;
        }
        None => writeln!(
            out,
            "closed form not applicable: average degree outside the interval"
        )?,
    }

    let cert_value = cert.value(n, m);
    writeln!(
        out,
        "certificate {} value = {}",
        cert.kind,
        show(&cert_value)
    )?;
    ok &= opt <= cert_value;
    if cert_value == opt {
        let report = lp::complementary_slackness(&sol, &cert)?;
        writeln!(out, "complementary slackness:")?;
        writeln!(out, "{report}")?;
        ok &= report.is_consistent();
    } else {
        writeln!(out, "certificate not optimal here; slackness not checked")?;
    }
    Ok(Verdict::from_ok(ok))
}

/// Exhaustive search for the most irregular graph under `c`.
pub fn cmd_search(c: &SearchConstraints, out: &mut impl Write) -> Result<Verdict> {
    let Some(best) = oracle::max_irr(c)? else {
        writeln!(out, "no graph satisfies the constraints")?;
        return Ok(Verdict::Clean);
    };
    writeln!(
        out,
        "max irr = {}  ({} graphs examined)",
        best.value, best.examined
    )?;
    writeln!(
        out,
        "witness graph6: {}",
        to_graph6(&best.witness).expect("oracle orders fit graph6")
    )?;
    writeln!(out, "witness edges:")?;
    for line in to_edge_list(&best.witness).lines() {
        writeln!(out, "  {line}")?;
    }

    let irr = Rational::from_integer(best.value.into());
    let n = c.n as u64;
    let mut ok = true;
    let mut compare = |name: &str, bound: Rational, out: &mut dyn Write| -> io::Result<()> {
        let holds = irr <= bound;
        ok &= holds;
        writeln!(
            out,
            "{name} = {}  {}",
            show(&bound),
            if holds { "holds" } else { "VIOLATED" }
        )
    };
    compare("albertson 4n³/27", bounds::albertson_cap(n), out)?;
    let delta_cap = c.delta_cap.unwrap_or(c.n.saturating_sub(1));
    if let (Some(m), true) = (c.m, delta_cap >= 1) {
        let m = m as u64;
        compare("thm1", bounds::theorem1_bound(n, m, delta_cap)?, out)?;
        compare("cor1", bounds::corollary1_bound(n, m, delta_cap)?, out)?;
        if let Some(dm) = c.delta_min.filter(|&dm| dm >= 1 && dm < delta_cap) {
            compare("prop1", bounds::prop1_bound(n, delta_cap, dm)?, out)?;
            if let Ok(v) = bounds::prop2_bound(n, m, delta_cap, dm) {
                compare("prop2", v, out)?;
            }
        }
    }
    Ok(Verdict::from_ok(ok))
}

/// One row of the bound curves over `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvePoint {
    pub m: u64,
    pub thm1: Rational,
    pub cor1: Rational,
    /// `None` where the radicand is negative.
    pub eb2: Option<f64>,
    pub eb3: Option<f64>,
}

pub const CURVE_HEADER: [&str; 5] = ["m", "thm1", "cor1", "eb2", "eb3"];

/// Rows for every integer `m` in `0..=⌊Δn/2⌋`.
pub fn curve_points(n: u64, delta_cap: usize, delta_min: Option<usize>) -> Result<Vec<CurvePoint>> {
    bounds::check_feasible(n, 0, delta_cap)?;
    let dm = delta_min.unwrap_or(0);
    if dm >= delta_cap {
        return Err(BoundsError::DeltaMin {
            delta_min: dm,
            delta_cap,
        }
        .into());
    }
    (0..=delta_cap as u64 * n / 2)
        .map(|m| {
            Ok(CurvePoint {
                m,
                thm1: bounds::theorem1_bound(n, m, delta_cap)?,
                cor1: bounds::corollary1_bound(n, m, delta_cap)?,
                eb2: bounds::zhou_luo_1(n, m, delta_cap, dm).ok(),
                eb3: bounds::zhou_luo_2(n, m, delta_cap, dm).ok(),
            })
        })
        .collect()
}

pub fn write_curves_csv(points: &[CurvePoint], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CURVE_HEADER)?;
    let float = |v: Option<f64>| v.map(|v| format!("{v:.6}")).unwrap_or_default();
    for p in points {
        w.write_record([
            p.m.to_string(),
            p.thm1.to_string(),
            p.cor1.to_string(),
            float(p.eb2),
            float(p.eb3),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Writes the curve CSV to `output`, or to `out` when no path is given.
pub fn cmd_curves(
    n: u64,
    delta_cap: usize,
    delta_min: Option<usize>,
    output: Option<&Path>,
    out: &mut impl Write,
) -> Result<Verdict> {
    let points = curve_points(n, delta_cap, delta_min)?;
    match output {
        Some(path) => {
            let file = File::create(path).map_err(|source| CliError::File {
                path: path.into(),
                source,
            })?;
            write_curves_csv(&points, BufWriter::new(file))?;
            writeln!(out, "wrote {} rows to {}", points.len(), path.display())?;
        }
        None => write_curves_csv(&points, &mut *out)?,
    }
    let ordered = points.iter().all(|p| p.thm1 <= p.cor1);
    Ok(Verdict::from_ok(ordered))
}

/// Exhaustive bound check over all small graphs with maximum degree `Δ`.
pub fn cmd_sweep(
    n_max: usize,
    delta_cap: usize,
    output: Option<&Path>,
    out: &mut impl Write,
) -> Result<Verdict> {
    let report = oracle::verify_exhaustive(n_max, delta_cap)?;
    writeln!(out, "{report}")?;
    if let Some(path) = output {
        std::fs::write(path, report.to_csv()).map_err(|source| CliError::File {
            path: path.into(),
            source,
        })?;
    }
    Ok(Verdict::from_ok(report.is_sound()))
}

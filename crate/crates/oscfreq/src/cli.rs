//! Command-line front end: parses oscillator specs, runs the frequency and
//! period methods, and emits comparison tables as aligned text or CSV.
//!
//! The heavy lifting stays in the library; the `oscfreq` binary is a thin
//! wrapper around [`main`]. Every command renders its full output in
//! memory first, so a failing computation never leaves a partial file
//! behind (file output is written to a temporary sibling and renamed).

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::model::{preset, OscillatorSpec, Parity};
use crate::numerics::ToleranceProfile;
use crate::{exact, iaff, reference};

/// Deserialize and validate a JSON spec document.
///
/// The document is an object `{"label": "...", "terms": [...]}` where each
/// term is `{"kind": "odd_power"|"even_power", "coeff": c, "exponent": p}`
/// or `{"kind": "stretched_wire", "lambda": l}`.
pub fn parse_spec(document: &str) -> Result<OscillatorSpec> {
    let spec: OscillatorSpec =
        serde_json::from_str(document).map_err(|e| Error::Malformed(e.to_string()))?;
    spec.validate()?;
    Ok(spec)
}

/// Serialize a spec to the JSON document format accepted by [`parse_spec`].
pub fn serialize_spec(spec: &OscillatorSpec) -> String {
    serde_json::to_string_pretty(spec).expect("spec serialization cannot fail")
}

/// Frequency/period methods selectable on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Iaff,
    FixedK,
    Hb1,
    Belendez,
    ExactQuad,
    ExactOde,
}

impl Method {
    pub fn parse_list(list: &str) -> Result<Vec<Method>> {
        let mut methods = Vec::new();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            methods.push(match name {
                "iaff" => Method::Iaff,
                "fixed-k" => Method::FixedK,
                "hb1" => Method::Hb1,
                "belendez" => Method::Belendez,
                "exact-quad" => Method::ExactQuad,
                "exact-ode" => Method::ExactOde,
                other => {
                    return Err(Error::Domain(format!(
                        "unknown method `{other}`; expected iaff, fixed-k, hb1, \
                         belendez, exact-quad or exact-ode"
                    )))
                }
            });
        }
        if methods.is_empty() {
            return Err(Error::Domain("method list must be non-empty".into()));
        }
        Ok(methods)
    }

    fn label(self, fixed_k: f64) -> String {
        match self {
            Method::Iaff => "iaff".into(),
            Method::FixedK => format!("fixed-k({fixed_k})"),
            Method::Hb1 => "hb1".into(),
            Method::Belendez => "belendez".into(),
            Method::ExactQuad => "exact-quad".into(),
            Method::ExactOde => "exact-ode".into(),
        }
    }

    fn is_exact(self) -> bool {
        matches!(self, Method::ExactQuad | Method::ExactOde)
    }
}

/// Where the oscillator spec comes from.
#[derive(Debug, Clone)]
pub enum SpecSource {
    Preset {
        name: String,
        params: Vec<(String, f64)>,
    },
    File(PathBuf),
    Inline(OscillatorSpec),
}

/// Amplitude selection: a single value or a sweep grid.
#[derive(Debug, Clone, Copy)]
pub enum AmplitudeRange {
    Single(f64),
    Grid {
        start: f64,
        end: f64,
        points: usize,
        log: bool,
    },
    /// Table presets carry their own amplitudes.
    BuiltIn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommandKind {
    Freq,
    Period,
    Sweep,
    Table { preset: String },
    Compare,
}

/// Fully resolved invocation, independent of argument parsing.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub source: SpecSource,
    pub amplitudes: AmplitudeRange,
    pub methods: Vec<Method>,
    pub fixed_k: f64,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
    pub tol: ToleranceProfile,
}

struct Context {
    spec: OscillatorSpec,
    /// λ of the wire family, when known (enables the belendez method).
    lambda: Option<f64>,
    fixed_k: f64,
    tol: ToleranceProfile,
}

impl Context {
    fn resolve(config: &RunConfig) -> Result<Self> {
        let (spec, lambda) = match &config.source {
            SpecSource::Preset { name, params } => {
                let params_ref: Vec<(&str, f64)> =
                    params.iter().map(|(k, v)| (k.as_str(), *v)).collect();
                let spec = preset(name, &params_ref)?;
                let lambda = if name.starts_with("stretched-wire") {
                    params_ref
                        .iter()
                        .find(|(k, _)| *k == "lambda")
                        .map(|(_, v)| *v)
                } else {
                    None
                };
                (spec, lambda)
            }
            SpecSource::File(path) => {
                let document = std::fs::read_to_string(path)?;
                (parse_spec(&document)?, None)
            }
            SpecSource::Inline(spec) => {
                spec.validate()?;
                (spec.clone(), None)
            }
        };
        Ok(Self {
            spec,
            lambda,
            fixed_k: config.fixed_k,
            tol: config.tol,
        })
    }

    /// Period by the given method; frequencies are reported as 2π/T so the
    /// two views stay consistent for mixed-parity systems.
    fn period(&self, method: Method, amplitude: f64) -> Result<f64> {
        use std::f64::consts::PI;
        let two_pi = 2.0 * PI;
        match method {
            Method::Iaff => match self.spec.parity() {
                Parity::Odd => {
                    Ok(two_pi / iaff::frequency(&self.spec, amplitude, &self.tol)?.omega)
                }
                Parity::Mixed => Ok(iaff::period_mixed(&self.spec, amplitude, &self.tol)?.period),
            },
            Method::FixedK => match self.spec.parity() {
                Parity::Odd => Ok(
                    two_pi / iaff::frequency_fixed_k(&self.spec, amplitude, self.fixed_k)?.omega
                ),
                Parity::Mixed => {
                    let (plus, minus) = self.spec.branches();
                    let t1 =
                        two_pi / iaff::frequency_fixed_k(&plus, amplitude, self.fixed_k)?.omega;
                    let t2 =
                        two_pi / iaff::frequency_fixed_k(&minus, amplitude, self.fixed_k)?.omega;
                    Ok(0.5 * (t1 + t2))
                }
            },
            Method::Hb1 => match self.spec.parity() {
                Parity::Odd => {
                    Ok(two_pi / reference::hb1_frequency(&self.spec, amplitude, &self.tol)?.omega)
                }
                Parity::Mixed => {
                    let (plus, minus) = self.spec.branches();
                    let t1 = two_pi / reference::hb1_frequency(&plus, amplitude, &self.tol)?.omega;
                    let t2 = two_pi / reference::hb1_frequency(&minus, amplitude, &self.tol)?.omega;
                    Ok(0.5 * (t1 + t2))
                }
            },
            Method::Belendez => {
                let lambda = self.lambda.ok_or_else(|| {
                    Error::Domain(
                        "the belendez method needs the wire parameter; select a \
                         stretched-wire preset with --lambda"
                            .into(),
                    )
                })?;
                Ok(two_pi / reference::belendez_wire_frequency(lambda, amplitude)?)
            }
            Method::ExactQuad => exact::exact_period(&self.spec, amplitude, &self.tol),
            Method::ExactOde => exact::period_ode(&self.spec, amplitude, &self.tol),
        }
    }

    fn omega(&self, method: Method, amplitude: f64) -> Result<f64> {
        Ok(2.0 * std::f64::consts::PI / self.period(method, amplitude)?)
    }
}

fn single_amplitude(range: &AmplitudeRange) -> Result<f64> {
    match *range {
        AmplitudeRange::Single(a) if a > 0.0 => Ok(a),
        AmplitudeRange::Single(a) => {
            Err(Error::Domain(format!("amplitude must be > 0, got {a}")))
        }
        _ => Err(Error::Domain(
            "this command takes a single --amplitude, not a sweep grid".into(),
        )),
    }
}

fn amplitude_grid(range: &AmplitudeRange) -> Result<Vec<f64>> {
    match *range {
        AmplitudeRange::Single(a) => {
            if !(a > 0.0) {
                return Err(Error::Domain(format!("amplitude must be > 0, got {a}")));
            }
            Ok(vec![a])
        }
        AmplitudeRange::Grid {
            start,
            end,
            points,
            log,
        } => {
            if !(start > 0.0) || !(end > start) {
                return Err(Error::Domain(format!(
                    "sweep range must satisfy 0 < start < end, got [{start}, {end}]"
                )));
            }
            if points < 2 {
                return Err(Error::Domain(format!(
                    "sweep needs at least 2 points, got {points}"
                )));
            }
            let n = points as f64 - 1.0;
            Ok((0..points)
                .map(|i| {
                    let t = i as f64 / n;
                    if log {
                        (start.ln() + t * (end.ln() - start.ln())).exp()
                    } else {
                        start + t * (end - start)
                    }
                })
                .collect())
        }
        AmplitudeRange::BuiltIn => Err(Error::Domain(
            "this command requires an explicit amplitude".into(),
        )),
    }
}

#[derive(Clone)]
enum Cell {
    Text(String),
    Num(f64),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            // 17 significant digits: parses back to the identical f64.
            Cell::Num(v) => format!("{v:.16e}"),
        }
    }

    fn text(&self, width: usize) -> String {
        match self {
            Cell::Text(s) => format!("{s:>width$}"),
            Cell::Num(v) => format!("{v:>width$.7}"),
        }
    }
}

/// A rendered table: header plus rows, formatted per output mode.
struct TableData {
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl TableData {
    fn numeric(columns: Vec<String>, rows: Vec<Vec<f64>>) -> Self {
        Self {
            columns,
            rows: rows
                .into_iter()
                .map(|r| r.into_iter().map(Cell::Num).collect())
                .collect(),
        }
    }

    fn render(&self, format: OutputFormat) -> String {
        let mut out = String::new();
        match format {
            OutputFormat::Csv => {
                out.push_str(&self.columns.join(","));
                out.push('\n');
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Cell::csv).collect();
                    out.push_str(&cells.join(","));
                    out.push('\n');
                }
            }
            OutputFormat::Text => {
                let widths: Vec<usize> = self.columns.iter().map(|c| c.len().max(14)).collect();
                for (c, w) in self.columns.iter().zip(&widths) {
                    let _ = write!(out, "{c:>w$}  ");
                }
                out.push('\n');
                for row in &self.rows {
                    for (cell, w) in row.iter().zip(&widths) {
                        let _ = write!(out, "{}  ", cell.text(*w));
                    }
                    out.push('\n');
                }
            }
        }
        out
    }
}

/// One row per method at a single amplitude, optionally with the relative
/// error against a reference method.
fn per_method_table(
    ctx: &Context,
    methods: &[Method],
    amplitude: f64,
    periods: bool,
    reference: Option<Method>,
) -> Result<TableData> {
    let value_name = if periods { "period" } else { "omega" };
    let mut columns = vec!["method".to_string(), value_name.to_string()];
    if let Some(r) = reference {
        columns.push(format!("err_pct_vs_{}", r.label(ctx.fixed_k)));
    }
    let eval = |m: Method| {
        if periods {
            ctx.period(m, amplitude)
        } else {
            ctx.omega(m, amplitude)
        }
    };
    let ref_value = reference.map(eval).transpose()?;
    let mut rows = Vec::new();
    for &m in methods {
        let value = eval(m)?;
        let mut row = vec![Cell::Text(m.label(ctx.fixed_k)), Cell::Num(value)];
        if let Some(r) = ref_value {
            row.push(Cell::Num(100.0 * (value - r) / r));
        }
        rows.push(row);
    }
    Ok(TableData { columns, rows })
}

/// Frequencies across an amplitude grid, one column per method, plus
/// error columns against the first exact method when one is requested.
fn sweep_table(ctx: &Context, methods: &[Method], amplitudes: &[f64]) -> Result<TableData> {
    let mut columns = vec!["A".to_string()];
    for m in methods {
        columns.push(format!("omega_{}", m.label(ctx.fixed_k)));
    }
    let reference = methods.iter().copied().find(|m| m.is_exact());
    if let Some(reference) = reference {
        for m in methods {
            if *m != reference && !m.is_exact() {
                columns.push(format!("err_pct_{}", m.label(ctx.fixed_k)));
            }
        }
    }

    let mut rows = Vec::with_capacity(amplitudes.len());
    for &a in amplitudes {
        let values: Vec<f64> = methods
            .iter()
            .map(|&m| ctx.omega(m, a))
            .collect::<Result<_>>()?;
        let mut row = vec![a];
        row.extend(&values);
        if let Some(reference) = reference {
            let ref_idx = methods.iter().position(|m| *m == reference).unwrap();
            let ref_value = values[ref_idx];
            for (m, v) in methods.iter().zip(&values) {
                if *m != reference && !m.is_exact() {
                    row.push(100.0 * (v - ref_value) / ref_value);
                }
            }
        }
        rows.push(row);
    }
    Ok(TableData::numeric(columns, rows))
}

const TABLE1_AMPLITUDES: [f64; 11] = [0.02, 0.04, 0.1, 0.16, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8];
const TABLE2_AMPLITUDES: [f64; 7] = [0.1, 0.2, 0.4, 0.5, 5.0, 10.0, 100.0];

/// Stretched-wire frequency comparison at λ = 0.5: the collocation result
/// for the cubic approximation, the closed-form harmonic balance of the
/// full wire, and the exact frequency of the full wire.
fn table1(tol: &ToleranceProfile) -> Result<TableData> {
    let lambda = 0.5;
    let cubic = preset("stretched-wire-cubic", &[("lambda", lambda)])?;
    let wire = preset("stretched-wire", &[("lambda", lambda)])?;
    let columns = vec![
        "A".into(),
        "omega_iaff".into(),
        "omega_belendez".into(),
        "omega_exact".into(),
    ];
    let mut rows = Vec::new();
    for &a in &TABLE1_AMPLITUDES {
        rows.push(vec![
            a,
            iaff::frequency(&cubic, a, tol)?.omega,
            reference::belendez_wire_frequency(lambda, a)?,
            exact::exact_frequency(&wire, a, tol)?,
        ]);
    }
    Ok(TableData::numeric(columns, rows))
}

/// Mixed-parity period comparison at ε = 1: half-cycle-averaged
/// collocation periods against the exact piecewise period.
fn table2(tol: &ToleranceProfile) -> Result<TableData> {
    let spec = preset("mixed-parity", &[("epsilon", 1.0)])?;
    let columns = vec![
        "A".into(),
        "period_iaff".into(),
        "period_exact".into(),
        "err_pct".into(),
    ];
    let mut rows = Vec::new();
    for &a in &TABLE2_AMPLITUDES {
        let t_iaff = iaff::period_mixed(&spec, a, tol)?.period;
        let t_exact = exact::exact_period_mixed(&spec, a, tol)?;
        rows.push(vec![
            a,
            t_iaff,
            t_exact,
            100.0 * (t_iaff - t_exact) / t_exact,
        ]);
    }
    Ok(TableData::numeric(columns, rows))
}

/// Execute a resolved configuration, streaming to `out` unless the config
/// names an output file.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<()> {
    config.tol.validate()?;
    let rendered = match &config.command {
        CommandKind::Freq | CommandKind::Period => {
            let ctx = Context::resolve(config)?;
            let amplitude = single_amplitude(&config.amplitudes)?;
            let periods = config.command == CommandKind::Period;
            per_method_table(&ctx, &config.methods, amplitude, periods, None)?
                .render(config.format)
        }
        CommandKind::Sweep => {
            let ctx = Context::resolve(config)?;
            let amplitudes = amplitude_grid(&config.amplitudes)?;
            sweep_table(&ctx, &config.methods, &amplitudes)?.render(config.format)
        }
        CommandKind::Compare => {
            let ctx = Context::resolve(config)?;
            let amplitude = single_amplitude(&config.amplitudes)?;
            // Side-by-side errors, always measured against the quadrature
            // oracle.
            per_method_table(
                &ctx,
                &config.methods,
                amplitude,
                false,
                Some(Method::ExactQuad),
            )?
            .render(config.format)
        }
        CommandKind::Table { preset } => match preset.as_str() {
            "table1" => table1(&config.tol)?.render(config.format),
            "table2" => table2(&config.tol)?.render(config.format),
            other => {
                return Err(Error::Domain(format!(
                    "unknown table preset `{other}`; expected table1 or table2"
                )))
            }
        },
    };

    match &config.output {
        Some(path) => write_atomically(path, &rendered),
        None => {
            out.write_all(rendered.as_bytes())?;
            Ok(())
        }
    }
}

/// Write via a temporary sibling and rename, so interrupted or failing
/// runs never leave a partial file at the destination.
fn write_atomically(path: &Path, contents: &str) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

// ---- argument parsing ----

#[derive(Parser)]
#[command(
    name = "oscfreq",
    about = "Approximate and exact frequencies/periods of conservative \
             nonlinear oscillators u'' + f(u) = 0"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Args)]
struct SpecArgs {
    /// Built-in oscillator: stretched-wire, stretched-wire-cubic,
    /// power-3-4 or mixed-parity
    #[arg(long, conflicts_with = "spec")]
    preset: Option<String>,
    /// JSON spec file (see README for the schema)
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Wire parameter λ = a/d for the stretched-wire presets
    #[arg(long)]
    lambda: Option<f64>,
    /// Even-term coefficient ε for the mixed-parity preset
    #[arg(long)]
    epsilon: Option<f64>,
}

impl SpecArgs {
    fn into_source(self) -> Result<SpecSource> {
        if let Some(path) = self.spec {
            return Ok(SpecSource::File(path));
        }
        let name = self
            .preset
            .ok_or_else(|| Error::Domain("either --preset or --spec is required".into()))?;
        let mut params = Vec::new();
        if let Some(lambda) = self.lambda {
            params.push(("lambda".to_string(), lambda));
        }
        if let Some(epsilon) = self.epsilon {
            params.push(("epsilon".to_string(), epsilon));
        }
        Ok(SpecSource::Preset { name, params })
    }
}

#[derive(Args)]
struct MethodArgs {
    /// Comma-separated methods: iaff, fixed-k, hb1, belendez, exact-quad,
    /// exact-ode
    #[arg(long, default_value = "iaff")]
    method: String,
    /// Collocation factor used by the fixed-k method
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    /// Relative tolerance for quadrature and ODE integration
    #[arg(long)]
    rel_tol: Option<f64>,
}

#[derive(Args)]
struct OutputArgs {
    /// Write to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Args)]
struct GridArgs {
    /// Sweep start amplitude
    #[arg(long)]
    a_start: f64,
    /// Sweep end amplitude
    #[arg(long)]
    a_end: f64,
    /// Number of sweep points
    #[arg(long)]
    points: usize,
    /// Space the sweep points logarithmically
    #[arg(long)]
    log: bool,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Angular frequency at one amplitude, one row per method
    Freq {
        #[command(flatten)]
        spec: SpecArgs,
        /// Oscillation amplitude A
        #[arg(long)]
        amplitude: f64,
        #[command(flatten)]
        methods: MethodArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Period at one amplitude, one row per method
    Period {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        amplitude: f64,
        #[command(flatten)]
        methods: MethodArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Frequency across an amplitude grid (CSV-friendly)
    Sweep {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        methods: MethodArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Reproduce a built-in comparison table (table1 or table2)
    Table {
        /// table1: stretched-wire frequencies at λ = 0.5;
        /// table2: mixed-parity periods at ε = 1
        #[arg(long)]
        preset: String,
        /// Relative tolerance for quadrature and ODE integration
        #[arg(long)]
        rel_tol: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Method-by-method error against the exact oracle
    Compare {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        amplitude: f64,
        #[command(flatten)]
        methods: MethodArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn profile_with(rel_tol: Option<f64>) -> Result<ToleranceProfile> {
    match rel_tol {
        Some(t) => ToleranceProfile::with_rel_tol(t),
        None => Ok(ToleranceProfile::default()),
    }
}

fn single_amplitude_config(
    command: CommandKind,
    spec: SpecArgs,
    amplitude: f64,
    methods: MethodArgs,
    output: OutputArgs,
) -> Result<RunConfig> {
    Ok(RunConfig {
        command,
        source: spec.into_source()?,
        amplitudes: AmplitudeRange::Single(amplitude),
        methods: Method::parse_list(&methods.method)?,
        fixed_k: methods.k,
        output: output.output,
        format: output.format,
        tol: profile_with(methods.rel_tol)?,
    })
}

fn lower(cli: Cli) -> Result<RunConfig> {
    let config = match cli.command {
        CliCommand::Freq {
            spec,
            amplitude,
            methods,
            output,
        } => single_amplitude_config(CommandKind::Freq, spec, amplitude, methods, output)?,
        CliCommand::Period {
            spec,
            amplitude,
            methods,
            output,
        } => single_amplitude_config(CommandKind::Period, spec, amplitude, methods, output)?,
        CliCommand::Sweep {
            spec,
            grid,
            methods,
            output,
        } => RunConfig {
            command: CommandKind::Sweep,
            source: spec.into_source()?,
            amplitudes: AmplitudeRange::Grid {
                start: grid.a_start,
                end: grid.a_end,
                points: grid.points,
                log: grid.log,
            },
            methods: Method::parse_list(&methods.method)?,
            fixed_k: methods.k,
            output: output.output,
            format: output.format,
            tol: profile_with(methods.rel_tol)?,
        },
        CliCommand::Table {
            preset,
            rel_tol,
            output,
        } => RunConfig {
            command: CommandKind::Table { preset },
            source: SpecSource::Preset {
                name: String::new(),
                params: Vec::new(),
            },
            amplitudes: AmplitudeRange::BuiltIn,
            methods: vec![Method::Iaff],
            fixed_k: 1.0,
            output: output.output,
            format: output.format,
            tol: profile_with(rel_tol)?,
        },
        CliCommand::Compare {
            spec,
            amplitude,
            methods,
            output,
        } => single_amplitude_config(CommandKind::Compare, spec, amplitude, methods, output)?,
    };
    Ok(config)
}

/// Parse arguments, run, and map errors to a nonzero exit status.
pub fn main() -> i32 {
    let config = match lower(Cli::parse()) {
        Ok(config) => config,
        Err(err) => {
            eprintln!("error: {err}");
            return 1;
        }
    };
    let stdout = std::io::stdout();
    match run(&config, &mut stdout.lock()) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ForceTerm;

    #[test]
    fn parse_spec_examples() {
        let spec =
            parse_spec(r#"{"terms":[{"kind":"odd_power","coeff":1,"exponent":0.75}]}"#).unwrap();
        assert_eq!(spec.terms(), &[ForceTerm::odd_power(1.0, 0.75)]);

        let spec = parse_spec(
            r#"{"terms":[
                {"kind":"odd_power","coeff":0.5,"exponent":1},
                {"kind":"odd_power","coeff":0.25,"exponent":3}
            ]}"#,
        )
        .unwrap();
        assert_eq!(spec.terms().len(), 2);

        let err = parse_spec(r#"{"terms":[]}"#).unwrap_err();
        assert!(err.to_string().contains("terms"));
    }

    #[test]
    fn parse_spec_reports_positions() {
        let err = parse_spec(
            r#"{"terms":[
                {"kind":"odd_power","coeff":1,"exponent":1},
                {"kind":"stretched_wire","lambda":2.0}
            ]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("terms[1].lambda"), "{err}");

        let err = parse_spec(r#"{"terms":[{"kind":"cubic"}]}"#).unwrap_err();
        assert!(matches!(err, Error::Malformed(_)));
    }

    #[test]
    fn spec_round_trip() {
        let spec = preset("mixed-parity", &[("epsilon", 0.5)]).unwrap();
        let parsed = parse_spec(&serialize_spec(&spec)).unwrap();
        assert_eq!(parsed, spec);
    }

    #[test]
    fn method_list_parsing() {
        let list = Method::parse_list("iaff, hb1,exact-quad").unwrap();
        assert_eq!(list, vec![Method::Iaff, Method::Hb1, Method::ExactQuad]);
        assert!(Method::parse_list("iaff,nope").is_err());
        assert!(Method::parse_list("").is_err());
    }

    #[test]
    fn grid_generation() {
        let lin = amplitude_grid(&AmplitudeRange::Grid {
            start: 1.0,
            end: 3.0,
            points: 3,
            log: false,
        })
        .unwrap();
        assert_eq!(lin, vec![1.0, 2.0, 3.0]);

        let log = amplitude_grid(&AmplitudeRange::Grid {
            start: 0.1,
            end: 10.0,
            points: 3,
            log: true,
        })
        .unwrap();
        assert!((log[1] - 1.0).abs() < 1e-12);

        assert!(amplitude_grid(&AmplitudeRange::Grid {
            start: 1.0,
            end: 3.0,
            points: 1,
            log: false,
        })
        .is_err());
        assert!(amplitude_grid(&AmplitudeRange::Single(-1.0)).is_err());
    }
}

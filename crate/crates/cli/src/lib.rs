//! Command-line front end for `gkgrowth`: reads a JSON spec, runs one of the
//! analysis pipelines and reports the result as JSON or text.

pub mod input;
pub mod report;
pub mod warnings;

use std::fmt;
use std::path::PathBuf;

use gkgrowth::analysis::{analyze, AnalysisConfig};
use gkgrowth::axioms::{chain_bound_check, check_multiplicity_axioms, dimension_balance, HolonomyCatalog, SESSpec};
use gkgrowth::catalog::CatalogEntry;
use gkgrowth::hilbert::{filtration_layer_dim, module_dim_sequence, module_hilbert_series, DimensionSequence};
use gkgrowth::poincare::{denominator_analysis, minimal_recurrence, quasi_polynomial, series_from_recurrence};
use gkgrowth::presentations::{refilter, AlgebraSpec, ModuleSpec};
use gkgrowth::samuel::{classify_growth, Classification};
use gkgrowth::Error as CoreError;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::input::{from_core, parse_input, Input};
use crate::report::Report;
use crate::warnings::{Warning, Warnings};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Analyze,
    Hilbert,
    Poincare,
    CheckSes,
    Chain,
    Refilter,
    Classify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Hilbert => "hilbert",
            Command::Poincare => "poincare",
            Command::CheckSes => "check-ses",
            Command::Chain => "chain",
            Command::Refilter => "refilter",
            Command::Classify => "classify",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub max_degree: usize,
    pub window: usize,
    pub confirm: usize,
    pub h_override: Option<usize>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_degree: 30,
            window: 6,
            confirm: 8,
            h_override: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub input_path: PathBuf,
    pub options: Options,
    pub output: Option<PathBuf>,
    pub format: Format,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    /// Unreadable or syntactically invalid input, or a bad option value.
    Malformed(String),
    Io(String),
    Schema { path: String, message: String },
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema { .. } => 3,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Malformed(_) => "malformed_input",
            CliError::Io(_) => "io",
            CliError::Schema { .. } => "schema_violation",
            CliError::Internal(_) => "internal",
        }
    }

    pub fn to_json(&self) -> Value {
        let (path, message) = match self {
            CliError::Schema { path, message } => (Value::from(path.clone()), message.clone()),
            CliError::Malformed(m) | CliError::Io(m) | CliError::Internal(m) => (Value::Null, m.clone()),
        };
        json!({
            "spec_version": report::SPEC_VERSION,
            "tool_version": env!("CARGO_PKG_VERSION"),
            "error": {"kind": self.kind(), "path": path, "message": message},
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Malformed(m) => write!(f, "malformed input: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Schema { path, message } => write!(f, "schema violation at {path}: {message}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

fn check_options(command: Command, o: &Options) -> Result<(), CliError> {
    if o.window < 2 {
        return Err(CliError::Malformed("--window must be at least 2".into()));
    }
    if o.confirm == 0 {
        return Err(CliError::Malformed("--confirm must be at least 1".into()));
    }
    let detects = !matches!(command, Command::Hilbert | Command::Refilter | Command::Poincare);
    if detects && o.max_degree < 2 * o.window + 4 {
        return Err(CliError::Malformed(format!(
            "--max-degree must be at least 2 * window + 4 = {}",
            2 * o.window + 4
        )));
    }
    Ok(())
}

fn need_algebra(input: &Input) -> Result<&AlgebraSpec, CliError> {
    input.algebra.as_ref().ok_or_else(|| CliError::Schema {
        path: "algebra".into(),
        message: "missing field".into(),
    })
}

fn module_or_regular(input: &Input) -> ModuleSpec {
    input.module.clone().unwrap_or_else(ModuleSpec::regular)
}

/// Errors from counted pipelines whose cause is the sample length.
fn short_or_schema(e: CoreError, path: &str) -> CliError {
    match e {
        CoreError::SequenceTooShort { needed, got } => CliError::Malformed(format!(
            "{got} samples are too few, need {needed}; raise --max-degree"
        )),
        CoreError::Internal(m) => CliError::Internal(m),
        other => from_core(other, path),
    }
}

/// Cumulative sequence from the raw `sequence` field or by counting.
fn sampled(input: &Input, o: &Options, w: &mut Warnings) -> Result<(DimensionSequence, &'static str), CliError> {
    if let Some(s) = &input.sequence {
        let c = s.to_cumulative();
        if !c.is_nondecreasing() {
            w.push(Warning::DecreasingSequence);
        }
        return Ok((c, "sequence"));
    }
    let a = need_algebra(input)?;
    let m = module_or_regular(input);
    let s = module_dim_sequence(a, &m, o.max_degree).map_err(|e| short_or_schema(e, "module"))?;
    Ok((s, "counted"))
}

fn catalog_note(a: Option<&AlgebraSpec>, w: &mut Warnings) {
    if a.and_then(AlgebraSpec::is_catalog) == Some(CatalogEntry::SmithLie) {
        w.push(Warning::ExpectedInconclusive);
    }
}

fn holonomic(a: &AlgebraSpec, gk: Option<usize>, o: &Options, w: &mut Warnings) -> Value {
    let catalog = match o.h_override {
        Some(h) => {
            w.push(Warning::HolonomyOverride);
            HolonomyCatalog::with_override(h)
        }
        None => HolonomyCatalog::standard(),
    };
    let Ok(h) = catalog.lookup(a) else {
        w.push(Warning::HolonomyUnknown);
        return Value::Null;
    };
    let Some(gk) = gk else {
        return json!({"h": h, "defect": null, "min_holonomic": null});
    };
    let defect = gk as i64 - h as i64;
    json!({"h": h, "defect": defect, "min_holonomic": defect == 0})
}

fn run_analyze(input: &Input, o: &Options, w: &mut Warnings) -> Result<(Value, Vec<String>, bool), CliError> {
    let a = need_algebra(input)?;
    let m = module_or_regular(input);
    catalog_note(Some(a), w);
    let config = AnalysisConfig {
        max_degree: o.max_degree,
        window: o.window,
        confirm: o.confirm,
    };
    let result = analyze(a, &m, &config).map_err(|e| short_or_schema(e, "module"))?;
    let g = &result.growth;
    let series = match &result.series {
        None => {
            w.push(Warning::CatalogNoSeries);
            Value::Null
        }
        Some(s) => {
            if s.denominator.s.is_some() && s.quasi.is_none() {
                w.push(Warning::QuasiTooFewSamples);
            }
            json!({
                "series": report::series(&s.series),
                "reduced": report::series(&s.reduced),
                "denominator": report::denominator(&s.denominator, w),
                "graded_quasi_polynomial": report::opt(s.quasi.as_ref(), report::quasi),
            })
        }
    };
    let hol = if a.is_catalog().is_some() {
        Value::Null
    } else {
        holonomic(a, g.gk, o, w)
    };
    let payload = json!({
        "algebra": a.to_string(),
        "dimensions": {
            "cumulative": report::dims(&result.cumulative),
            "graded": report::dims(&result.graded),
        },
        "growth": report::growth(g, w),
        "hilbert_series": series,
        "holonomic": hol,
    });
    let mut summary = vec![format!("algebra: {a}")];
    summary.extend(growth_lines(g));
    if let Some(s) = &result.series {
        summary.push(format!("hilbert series: {}", s.reduced));
    }
    Ok((payload, summary, g.classification == Classification::Inconclusive))
}

fn growth_lines(g: &gkgrowth::samuel::GrowthReport) -> Vec<String> {
    let mut out = vec![format!("classification: {} ({})", g.classification, g.evidence.name())];
    if let Some(d) = g.gk {
        out.push(format!("gk dimension: {d}"));
    }
    if let Some(e) = &g.multiplicity {
        out.push(format!("multiplicity: {e}"));
    }
    if let Some(h) = &g.hilbert_samuel {
        out.push(format!("hilbert-samuel polynomial: {} for n >= {}", h.form, h.stabilization_index));
    }
    if let Some(r) = &g.recurrence {
        let c: Vec<String> = r.coefficients.iter().map(ToString::to_string).collect();
        out.push(format!("recurrence: order {} coefficients ({}) onset {}", r.order, c.join(", "), r.onset));
    }
    if let Some(s) = &g.series {
        out.push(format!("series: {s}"));
    }
    if let Some(d) = &g.denominator {
        out.push(format!("radius class: {}", d.radius_class.name()));
    }
    if let Some(e) = &g.gamma_estimate {
        out.push(format!("gamma estimate (float): {:.4} {}", e.value, e.trend.name()));
    }
    out
}

fn run_classify(input: &Input, o: &Options, w: &mut Warnings) -> Result<(Value, Vec<String>, bool), CliError> {
    catalog_note(input.algebra.as_ref(), w);
    let (s, source) = sampled(input, o, w)?;
    let g = classify_growth(&s, o.window, o.confirm).map_err(|e| match (source, e) {
        ("sequence", CoreError::SequenceTooShort { needed, got }) => CliError::Schema {
            path: "sequence".into(),
            message: format!("need at least {needed} entries, got {got}"),
        },
        (_, e) => short_or_schema(e, "sequence"),
    })?;
    let payload = json!({
        "source": source,
        "cumulative": report::dims(&s),
        "growth": report::growth(&g, w),
    });
    Ok((payload, growth_lines(&g), g.classification == Classification::Inconclusive))
}

fn run_hilbert(input: &Input, o: &Options, w: &mut Warnings) -> Result<(Value, Vec<String>, bool), CliError> {
    let a = need_algebra(input)?;
    let m = module_or_regular(input);
    let cumulative = module_dim_sequence(a, &m, o.max_degree).map_err(|e| short_or_schema(e, "module"))?;
    let graded = cumulative
        .to_graded()
        .ok_or_else(|| CliError::Internal("cumulative dimensions decrease".into()))?;
    let mut summary = vec![format!("algebra: {a}")];
    let series = if a.is_catalog().is_some() {
        w.push(Warning::CatalogNoSeries);
        Value::Null
    } else {
        let s = module_hilbert_series(a, &m).map_err(|e| short_or_schema(e, "module"))?;
        let r = s.reduced();
        summary.push(format!("hilbert series: {r}"));
        json!({"series": report::series(&s), "reduced": report::series(&r)})
    };
    let shown: Vec<String> = graded.values.iter().map(ToString::to_string).collect();
    summary.push(format!("graded dimensions: {}", shown.join(" ")));
    let payload = json!({
        "algebra": a.to_string(),
        "dimensions": {"cumulative": report::dims(&cumulative), "graded": report::dims(&graded)},
        "hilbert_series": series,
    });
    Ok((payload, summary, false))
}

fn run_poincare(input: &Input, o: &Options, w: &mut Warnings) -> Result<(Value, Vec<String>, bool), CliError> {
    w.push(Warning::SampledAgreement);
    let (s, source) = match &input.sequence {
        Some(s) => (s.clone(), "sequence"),
        None => {
            let a = need_algebra(input)?;
            let m = module_or_regular(input);
            let c = module_dim_sequence(a, &m, o.max_degree).map_err(|e| short_or_schema(e, "module"))?;
            let g = c
                .to_graded()
                .ok_or_else(|| CliError::Internal("cumulative dimensions decrease".into()))?;
            (g, "counted")
        }
    };
    let too_short = |e: CoreError| match e {
        CoreError::SequenceTooShort { needed, got } if source == "sequence" => CliError::Schema {
            path: "sequence".into(),
            message: format!("need at least {needed} entries, got {got}"),
        },
        e => short_or_schema(e, "sequence"),
    };
    let kind = match s.kind {
        gkgrowth::hilbert::SequenceKind::Cumulative => "cumulative",
        gkgrowth::hilbert::SequenceKind::GradedPiece => "graded",
    };
    let Some(rec) = minimal_recurrence(&s, o.confirm).map_err(too_short)? else {
        w.push(Warning::NoRecurrence);
        let payload = json!({
            "source": source,
            "sequence_kind": kind,
            "samples": report::dims(&s),
            "recurrence": null,
            "series": null,
            "denominator": null,
            "quasi_polynomial": null,
        });
        return Ok((payload, vec!["no recurrence found".into()], true));
    };
    let series = series_from_recurrence(&s, &rec).map_err(too_short)?;
    let den = denominator_analysis(series.denominator()).map_err(|e| short_or_schema(e, "sequence"))?;
    let quasi = match (den.s, den.d) {
        (Some(_), Some(_)) => match quasi_polynomial(&series, &s) {
            Ok(q) => Some(q),
            Err(CoreError::TooFewSamples { .. }) => {
                w.push(Warning::QuasiTooFewSamples);
                None
            }
            Err(e) => return Err(short_or_schema(e, "sequence")),
        },
        _ => None,
    };
    let mut summary = vec![
        format!("recurrence order: {} onset {}", rec.order, rec.onset),
        format!("series: {series}"),
        format!("radius class: {}", den.radius_class.name()),
    ];
    if let (Some(p), Some(d)) = (den.s, den.d) {
        summary.push(format!("denominator shape: (1 - t^{p})^{d}"));
    }
    if let Some(q) = &quasi {
        for (r, b) in q.branches.iter().enumerate() {
            summary.push(format!("branch {r} mod {}: {}", q.period, b.display_with("n")));
        }
    }
    let payload = json!({
        "source": source,
        "sequence_kind": kind,
        "samples": report::dims(&s),
        "recurrence": report::recurrence(&rec),
        "series": report::series(&series),
        "denominator": report::denominator(&den, w),
        "quasi_polynomial": report::opt(quasi.as_ref(), report::quasi),
    });
    Ok((payload, summary, false))
}

fn run_check_ses(input: &Input, o: &Options, w: &mut Warnings) -> Result<(Value, Vec<String>, bool), CliError> {
    let a = need_algebra(input)?;
    let m = module_or_regular(input);
    let sub = input.sub_ideal.clone().ok_or_else(|| CliError::Schema {
        path: "ses".into(),
        message: "missing field".into(),
    })?;
    let s = SESSpec::new(a.clone(), m, sub).map_err(|e| from_core(e, "ses"))?;
    let balance = dimension_balance(&s, o.max_degree).map_err(|e| short_or_schema(e, "ses"))?;
    match check_multiplicity_axioms(&s, o.max_degree, o.window) {
        Ok(r) => {
            let payload = report::axioms(&r, balance, w);
            let fmt_gk = |g: Option<usize>| g.map_or("zero".to_string(), |d| d.to_string());
            let mut summary = vec![
                format!("case: {}", r.case),
                format!(
                    "gk (sub, module, quotient): ({}, {}, {})",
                    fmt_gk(r.gk_triple[0]),
                    fmt_gk(r.gk_triple[1]),
                    fmt_gk(r.gk_triple[2])
                ),
                format!("exactness: {}", r.exactness_ok),
                format!("dimension balance: {balance}"),
            ];
            if let Some(e) = &r.e_values {
                summary.push(format!("multiplicities: ({}, {}, {})", e[0], e[1], e[2]));
            }
            if let Some(ok) = r.additivity_ok {
                summary.push(format!("additivity: {ok}"));
            }
            Ok((payload, summary, false))
        }
        Err(CoreError::Inconclusive { which }) => {
            w.push(Warning::SampledAgreement);
            let payload = json!({"case": null, "dimension_balance_ok": balance, "undetected": which});
            Ok((payload, vec![format!("no polynomial fit for {which}")], true))
        }
        Err(e) => Err(short_or_schema(e, "ses")),
    }
}

fn run_chain(input: &Input, o: &Options, w: &mut Warnings) -> Result<(Value, Vec<String>, bool), CliError> {
    let a = need_algebra(input)?;
    let m = module_or_regular(input);
    let chain = input.chain.clone().ok_or_else(|| CliError::Schema {
        path: "chain".into(),
        message: "missing field".into(),
    })?;
    match chain_bound_check(a, &m, &chain, o.max_degree, o.window) {
        Ok(r) => {
            let payload = report::chain(&r, w);
            let summary = vec![
                format!("chain length: {}", r.n),
                format!("multiplicity: {}", r.e_m),
                format!("bound n <= e(M): {}", r.bound_ok),
            ];
            Ok((payload, summary, false))
        }
        Err(CoreError::Inconclusive { which }) => {
            w.push(Warning::SampledAgreement);
            let payload = json!({"n": chain.len(), "bound_ok": null, "undetected": which});
            Ok((payload, vec![format!("no polynomial fit for {which}")], true))
        }
        Err(CoreError::Precondition(m)) => Err(CliError::Schema {
            path: "chain".into(),
            message: m,
        }),
        Err(e) => Err(short_or_schema(e, "chain")),
    }
}

fn run_refilter(input: &Input, o: &Options, _w: &mut Warnings) -> Result<(Value, Vec<String>, bool), CliError> {
    let a = need_algebra(input)?;
    let weights = input.refilter_weights.clone().ok_or_else(|| CliError::Schema {
        path: "refilter_weights".into(),
        message: "missing field".into(),
    })?;
    let r = refilter(a, &weights).map_err(|e| match e {
        CoreError::UnsupportedKind { kind } => CliError::Schema {
            path: "algebra.kind".into(),
            message: format!("cannot refilter kind {kind}"),
        },
        e => from_core(e, "refilter_weights"),
    })?;
    let layers: Vec<Value> = (0..=o.max_degree)
        .map(|i| report::nat(&filtration_layer_dim(&r, i)))
        .collect();
    let gens: Vec<Value> = r
        .generators
        .iter()
        .map(|g| json!({"name": g.name, "degree": g.degree.total()}))
        .collect();
    let payload = json!({
        "weights": weights,
        "algebra": r.to_string(),
        "generators": gens,
        "layer_dimensions": layers,
    });
    Ok((payload, vec![format!("refiltered: {r}")], false))
}

/// Run one command on the raw bytes of a spec file.
pub fn execute(command: Command, bytes: &[u8], options: &Options) -> Result<Report, CliError> {
    check_options(command, options)?;
    let input = parse_input(bytes)?;
    let mut warnings = Warnings::default();
    let (payload, summary, inconclusive) = match command {
        Command::Analyze => run_analyze(&input, options, &mut warnings),
        Command::Classify => run_classify(&input, options, &mut warnings),
        Command::Hilbert => run_hilbert(&input, options, &mut warnings),
        Command::Poincare => run_poincare(&input, options, &mut warnings),
        Command::CheckSes => run_check_ses(&input, options, &mut warnings),
        Command::Chain => run_chain(&input, options, &mut warnings),
        Command::Refilter => run_refilter(&input, options, &mut warnings),
    }?;
    Ok(Report {
        command: command.name(),
        input_digest: digest(bytes),
        inconclusive,
        payload,
        summary,
        warnings,
    })
}

/// What the process should print and return.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(config: &RunConfig) -> Outcome {
    let result = std::fs::read(&config.input_path)
        .map_err(|e| CliError::Io(format!("{}: {e}", config.input_path.display())))
        .and_then(|bytes| execute(config.command, &bytes, &config.options));
    match result {
        Ok(report) => {
            let body = match config.format {
                Format::Json => report.render_json(),
                Format::Text => report.render_text(),
            };
            let code = if report.inconclusive { 1 } else { 0 };
            match &config.output {
                Some(path) => match std::fs::write(path, &body) {
                    Ok(()) => Outcome {
                        exit_code: code,
                        stdout: String::new(),
                        stderr: String::new(),
                    },
                    Err(e) => failure(&CliError::Io(format!("{}: {e}", path.display())), config.format),
                },
                None => Outcome {
                    exit_code: code,
                    stdout: body,
                    stderr: String::new(),
                },
            }
        }
        Err(e) => failure(&e, config.format),
    }
}

pub fn failure(e: &CliError, format: Format) -> Outcome {
    let stderr = match format {
        Format::Json => format!("{}\n", e.to_json()),
        Format::Text => format!("error: {e}\n"),
    };
    Outcome {
        exit_code: e.exit_code(),
        stdout: String::new(),
        stderr,
    }
}

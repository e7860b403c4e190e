//! Command implementations behind the `torsion` binary.

pub mod record;

use std::fmt::Write as _;
use std::io::{self, BufRead, Write};

use rayon::prelude::*;
use thiserror::Error;
use torsion_core::classify::ClassifyError;
use torsion_core::family::{sample_case, FamilySample};
use torsion_core::{
    full_report, torsion_group, CaseTag, ClassificationReport, CurveError, CurveMnd, Int, Point,
    PointOrder, TorsionGroup,
};

pub use record::{CorpusRecord, DecInt, WitnessRecord};

/// Curves classified per parallel batch in `sweep`.
const SWEEP_CHUNK: usize = 4096;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("inconsistency: {0}")]
    Inconsistency(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Inconsistency(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl From<CurveError> for CliError {
    fn from(e: CurveError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Curve(c) => c.into(),
            ClassifyError::Math(m) => CliError::Invalid(m.to_string()),
            other => CliError::Inconsistency(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Records,
}

fn report_text(input: (&Int, &Int, &Int), r: &ClassificationReport) -> String {
    let mut s = String::new();
    let c = &r.curve;
    let _ = write!(s, "curve: {c}");
    if (c.m(), c.n(), c.d()) != input {
        let _ = write!(
            s,
            " (normalized from ({}, {}, {}))",
            input.0, input.1, input.2
        );
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "class: Z/{}", r.cls.order());
    match &r.cls.witness {
        Some(w) => {
            let _ = writeln!(s, "witness: {w}");
        }
        None => {
            let _ = writeln!(s, "witness: none");
        }
    }
    let _ = writeln!(
        s,
        "generator: {} of order {}",
        r.generator, r.generator_order
    );
    if let (Some(g), Some(agree)) = (&r.oracle_group, r.agree) {
        let verdict = if agree { "agree" } else { "DISAGREE" };
        let _ = writeln!(
            s,
            "oracle: {} with {} points, {verdict}",
            g.structure,
            g.order()
        );
    }
    s
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())?;
    Ok(())
}

/// `classify m n D`. A disagreement with the oracle is an inconsistency.
pub fn cmd_classify(
    m: Int,
    n: Int,
    d: Int,
    with_oracle: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let curve = CurveMnd::normalize(m.clone(), n.clone(), d.clone())?;
    let report = full_report(&curve, with_oracle)?;
    let text = match format {
        Format::Text => report_text((&m, &n, &d), &report),
        Format::Records => CorpusRecord::from_report(&report).to_line(),
    };
    emit(out, &text)?;
    if report.agree == Some(false) {
        return Err(CliError::Inconsistency(format!(
            "classifier and oracle disagree on {curve}"
        )));
    }
    Ok(())
}

fn group_text(curve: &CurveMnd, g: &TorsionGroup) -> String {
    let mut s = format!(
        "curve: {curve}\ngroup: {} of order {}\n",
        g.structure,
        g.order()
    );
    for (p, k) in g.elements.iter().zip(&g.orders) {
        let _ = writeln!(s, "  {p}  order {k}");
    }
    s
}

/// `oracle m n D`: the brute-force group alone.
pub fn cmd_oracle(
    m: Int,
    n: Int,
    d: Int,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let curve = CurveMnd::normalize(m, n, d)?;
    let g = torsion_group(&curve).map_err(ClassifyError::from)?;
    let text = match format {
        Format::Text => group_text(&curve, &g),
        Format::Records => {
            let points: Vec<serde_json::Value> = g
                .elements
                .iter()
                .zip(&g.orders)
                .map(|(p, k)| {
                    let (x, y) = match p {
                        Point::Infinity => (None, None),
                        Point::Affine { x, y } => (Some(x.to_string()), Some(y.to_string())),
                    };
                    serde_json::json!({ "x": x, "y": y, "order": k })
                })
                .collect();
            let v = serde_json::json!({
                "m": curve.m().to_string(),
                "n": curve.n().to_string(),
                "D": curve.d().to_string(),
                "structure": g.structure.to_string(),
                "order": g.order(),
                "points": points,
            });
            format!("{v}\n")
        }
    };
    emit(out, &text)
}

/// Per-class record counts and disagreements of a sweep or sample run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Summary {
    pub counts: Vec<(String, u64)>,
    pub records: u64,
    pub disagreements: u64,
}

impl Summary {
    fn add(&mut self, r: &CorpusRecord) {
        self.records += 1;
        if !r.agree {
            self.disagreements += 1;
        }
        match self.counts.iter_mut().find(|(c, _)| *c == r.class) {
            Some(slot) => slot.1 += 1,
            None => self.counts.push((r.class.clone(), 1)),
        }
    }

    pub fn line(&self) -> String {
        let mut counts = self.counts.clone();
        counts.sort_by_key(|(c, _)| class_sort_key(c));
        let parts: Vec<String> = counts.iter().map(|(c, k)| format!("{c}={k}")).collect();
        format!(
            "{} records; {}; disagreements={}",
            self.records,
            parts.join(" "),
            self.disagreements
        )
    }
}

fn class_sort_key(c: &str) -> (u32, String) {
    match c.strip_prefix('Z').and_then(|k| k.parse().ok()) {
        Some(k) => (k, String::new()),
        None => (u32::MAX, c.to_string()),
    }
}

fn record_line(r: &CorpusRecord, format: Format) -> String {
    match format {
        Format::Records => r.to_line(),
        Format::Text => format!("{}\n", r.to_text()),
    }
}

/// Classifies one sweep curve against the oracle. Classifier errors become
/// a disagreeing record so the sweep carries on.
pub fn sweep_record(curve: &CurveMnd) -> CorpusRecord {
    match full_report(curve, true) {
        Ok(r) => CorpusRecord::from_report(&r),
        Err(e) => {
            eprintln!("{curve}: {e}");
            CorpusRecord::failed(curve, torsion_group(curve).ok().as_ref())
        }
    }
}

/// `sweep m_max n_max D_max`. Records are written in `(m, n, D)` order; a
/// nonzero disagreement count is reported as an inconsistency after the
/// whole range has been written.
pub fn cmd_sweep(
    m_max: u64,
    n_max: u64,
    d_max: u64,
    format: Format,
    out: &mut dyn Write,
) -> Result<Summary, CliError> {
    if n_max == 0 || d_max < 2 {
        return Err(CliError::Invalid(
            "bounds must satisfy n_max >= 1 and D_max >= 2".into(),
        ));
    }
    let mut summary = Summary::default();
    let mut curves = CurveMnd::enumerate(m_max, n_max, d_max).peekable();
    while curves.peek().is_some() {
        let chunk: Vec<CurveMnd> = curves.by_ref().take(SWEEP_CHUNK).collect();
        let records: Vec<CorpusRecord> = chunk.par_iter().map(sweep_record).collect();
        let mut buf = String::new();
        for r in &records {
            summary.add(r);
            buf.push_str(&record_line(r, format));
        }
        emit(out, &buf)?;
    }
    Ok(summary)
}

/// Record for a family sample. Without the oracle, `agree` says whether the
/// classifier confirms the prediction and the predicted generator has the
/// predicted order; with it, the oracle must agree as well.
pub fn sample_record(s: &FamilySample, with_oracle: bool) -> CorpusRecord {
    let report = match full_report(&s.curve, with_oracle) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{}: {e}", s.curve);
            let g = if with_oracle {
                torsion_group(&s.curve).ok()
            } else {
                None
            };
            return CorpusRecord::failed(&s.curve, g.as_ref());
        }
    };
    let mut rec = CorpusRecord::from_report(&report);
    let x = &s.predicted_generator_x;
    let predicted_ok = torsion_core::exactmath::int_sqrt(&s.curve.rhs_int(x)).is_some_and(|y| {
        let p = Point::from_ints(x.clone(), y);
        s.curve.order(&p).ok() == Some(PointOrder::Finite(s.predicted.order()))
    });
    rec.agree = rec.agree && predicted_ok && s.prediction_holds(report.cls.tag);
    rec
}

/// `sample CASE bound`, in the sampler's enumeration order.
pub fn cmd_sample(
    case: CaseTag,
    bound: u32,
    with_oracle: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<Summary, CliError> {
    if bound == 0 {
        return Err(CliError::Invalid("bound must be at least 1".into()));
    }
    let samples = sample_case(case, bound)?;
    let records: Vec<CorpusRecord> = samples
        .par_iter()
        .map(|s| sample_record(s, with_oracle))
        .collect();
    let mut summary = Summary::default();
    let mut buf = String::new();
    for r in &records {
        summary.add(r);
        buf.push_str(&record_line(r, format));
    }
    emit(out, &buf)?;
    Ok(summary)
}

/// Outcome of re-checking a corpus.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checked: u64,
    /// `(line number, explanation)`
    pub mismatches: Vec<(usize, String)>,
}

/// Recomputes every record of a corpus with the oracle and compares it field
/// by field. Blank lines and lines starting with `#` are skipped.
pub fn cmd_verify(input: &mut dyn BufRead) -> Result<VerifyReport, CliError> {
    let mut lines: Vec<(usize, CorpusRecord)> = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let rec = CorpusRecord::parse(t)
            .map_err(|e| CliError::Invalid(format!("line {}: {e}", i + 1)))?;
        lines.push((i + 1, rec));
    }
    let results: Vec<Option<(usize, String)>> = lines
        .par_iter()
        .map(|(lineno, rec)| verify_one(rec).err().map(|e| (*lineno, e)))
        .collect();
    Ok(VerifyReport {
        checked: lines.len() as u64,
        mismatches: results.into_iter().flatten().collect(),
    })
}

fn verify_one(rec: &CorpusRecord) -> Result<(), String> {
    let curve = CurveMnd::new(rec.m.0.clone(), rec.n.0.clone(), rec.d.0.clone())
        .map_err(|e| format!("not a normalized curve: {e}"))?;
    let mut fresh = sweep_record(&curve);
    if !fresh.agree {
        return Err(format!("{curve}: classifier and oracle disagree"));
    }
    // records written without the oracle carry no order to compare
    if rec.oracle_order.is_none() {
        fresh.oracle_order = None;
    }
    if &fresh != rec {
        return Err(format!(
            "{curve}: recorded {} but recomputed {}",
            rec.to_line().trim_end(),
            fresh.to_line().trim_end()
        ));
    }
    Ok(())
}

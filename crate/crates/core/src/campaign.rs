//! Campaign file formats: configuration, contribution and gold CSV files,
//! and result serialization.
//!
//! The on-disk formats are the toolkit's own:
//!
//! - config: a TOML file; only `answer_labels` is required, everything else
//!   has defaults (see [`CampaignConfig`]);
//! - contributions: CSV with header
//!   `contributor_id,hit_id,question_id,answer,confidence,response_time_s`,
//!   where `answer` joins one or more answer options with `;` and
//!   `confidence` is either a scale label or a literal real in (0, 1);
//! - gold: CSV with header `question_id,true_answer,t0_seconds`.
//!
//! Answer options may be given by label or by 1-based position. Ingestion
//! collects every bad row before failing so a hand-edited file can be fixed
//! in one pass.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::aggregate::{ErrorCurve, GoldRecord, QuestionAggregate};
use crate::belief::{FocalSet, Frame, MassFunction, DEFAULT_ARGMAX_TOL};
use crate::error::{Error, IngestError, Result, RowIssue};
use crate::profile::{Contribution, ContributorProfile, Profile};

/// One step of the confidence scale: a label and its numeric weight.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfidenceLevel {
    pub label: String,
    pub w: f64,
}

/// Campaign parameters. In the TOML file only `answer_labels` is required.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignConfig {
    /// Ordered answer options; they form the answer frame.
    pub answer_labels: Vec<String>,
    /// Confidence labels with strictly decreasing weights in (0, 1).
    /// Weights of exactly 0 or 1 are rejected so no answer ever becomes a
    /// categorical mass.
    #[serde(default = "default_confidence_scale")]
    pub confidence_scale: Vec<ConfidenceLevel>,
    /// Discount on the qualification channel.
    #[serde(default = "default_rate")]
    pub beta: f64,
    /// Discount on the reflection channel.
    #[serde(default = "default_rate")]
    pub eta: f64,
    /// Lambda values swept by the evaluation, strictly increasing in [0, 1].
    #[serde(default = "default_lambda_grid")]
    pub lambda_grid: Vec<f64>,
    /// Tie tolerance for argmax decisions.
    #[serde(default = "default_argmax_tol")]
    pub argmax_tol: f64,
}

fn default_rate() -> f64 {
    0.8
}

fn default_argmax_tol() -> f64 {
    DEFAULT_ARGMAX_TOL
}

fn default_lambda_grid() -> Vec<f64> {
    (0..=10).map(|i| f64::from(i) / 10.0).collect()
}

fn default_confidence_scale() -> Vec<ConfidenceLevel> {
    [
        ("très sûr", 0.99),
        ("plutôt sûr", 0.75),
        ("moyennement sûr", 0.5),
        ("peu sûr", 0.25),
        ("pas sûr", 0.01),
    ]
    .into_iter()
    .map(|(label, w)| ConfidenceLevel {
        label: label.to_string(),
        w,
    })
    .collect()
}

impl CampaignConfig {
    /// Config with the given answer labels and all defaults.
    pub fn with_labels<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let config = CampaignConfig {
            answer_labels: labels.into_iter().map(Into::into).collect(),
            confidence_scale: default_confidence_scale(),
            beta: default_rate(),
            eta: default_rate(),
            lambda_grid: default_lambda_grid(),
            argmax_tol: default_argmax_tol(),
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.answer_labels.len() < 2 {
            return Err(Error::InvalidConfig(
                "need at least two answer labels".to_string(),
            ));
        }
        Frame::new(self.answer_labels.clone()).map_err(|e| Error::InvalidConfig(e.to_string()))?;
        if self.confidence_scale.is_empty() {
            return Err(Error::InvalidConfig(
                "confidence scale is empty".to_string(),
            ));
        }
        let mut seen = BTreeSet::new();
        for level in &self.confidence_scale {
            if level.label.is_empty() || !seen.insert(level.label.clone()) {
                return Err(Error::InvalidConfig(format!(
                    "confidence label \"{}\" is empty or repeated",
                    level.label
                )));
            }
            if !(level.w > 0.0 && level.w < 1.0) {
                return Err(Error::InvalidConfig(format!(
                    "confidence value {} for \"{}\" must lie strictly between 0 and 1",
                    level.w, level.label
                )));
            }
        }
        if !self.confidence_scale.windows(2).all(|w| w[0].w > w[1].w) {
            return Err(Error::InvalidConfig(
                "confidence values must be strictly decreasing".to_string(),
            ));
        }
        for (name, value) in [("beta", self.beta), ("eta", self.eta)] {
            if !(0.0..=1.0).contains(&value) || value.is_nan() {
                return Err(Error::InvalidConfig(format!(
                    "{name} = {value} is outside [0, 1]"
                )));
            }
        }
        if self.lambda_grid.is_empty()
            || !self.lambda_grid.windows(2).all(|w| w[0] < w[1])
            || self.lambda_grid.iter().any(|l| !(0.0..=1.0).contains(l))
        {
            return Err(Error::InvalidConfig(
                "lambda grid must be non-empty, strictly increasing and within [0, 1]".to_string(),
            ));
        }
        if self.argmax_tol.is_nan() || self.argmax_tol < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "argmax tolerance {} must be non-negative",
                self.argmax_tol
            )));
        }
        Ok(())
    }

    /// The answer frame of this campaign.
    pub fn frame(&self) -> Frame {
        Frame::new(self.answer_labels.clone()).expect("validated labels")
    }

    /// Resolves one answer token, either a label or a 1-based position.
    pub fn answer_index(&self, token: &str) -> Option<usize> {
        if let Some(index) = self.answer_labels.iter().position(|l| l == token) {
            return Some(index);
        }
        token
            .parse::<usize>()
            .ok()
            .filter(|i| (1..=self.answer_labels.len()).contains(i))
            .map(|i| i - 1)
    }

    /// Resolves a confidence cell: a scale label, or a literal real that
    /// must lie strictly between 0 and 1.
    pub fn confidence_value(&self, token: &str) -> std::result::Result<f64, String> {
        if let Some(level) = self.confidence_scale.iter().find(|l| l.label == token) {
            return Ok(level.w);
        }
        match token.parse::<f64>() {
            Ok(w) if w > 0.0 && w < 1.0 => Ok(w),
            Ok(w) => Err(format!(
                "confidence {w} is outside the open interval (0, 1)"
            )),
            Err(_) => Err(format!("unknown confidence label \"{token}\"")),
        }
    }
}

/// Everything loaded for one campaign.
#[derive(Clone, Debug, PartialEq)]
pub struct CampaignData {
    pub config: CampaignConfig,
    pub contributions: Vec<Contribution>,
    pub gold: Vec<GoldRecord>,
}

const CONTRIBUTION_HEADER: [&str; 6] = [
    "contributor_id",
    "hit_id",
    "question_id",
    "answer",
    "confidence",
    "response_time_s",
];

const GOLD_HEADER: [&str; 3] = ["question_id", "true_answer", "t0_seconds"];

/// Loads and validates a TOML campaign config.
pub fn load_config(path: impl AsRef<Path>) -> Result<CampaignConfig> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let config: CampaignConfig = toml::from_str(&text).map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    config.validate()?;
    Ok(config)
}

struct RowReader {
    records: Vec<(u64, csv::StringRecord)>,
    issues: Vec<RowIssue>,
}

/// Reads a CSV file, checks the header and pairs each record with its
/// physical line number. Malformed records become issues, not aborts.
fn read_rows(path: &Path, expected_header: &[&str]) -> Result<RowReader> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new().flexible(true).from_reader(file);
    let mut issues = Vec::new();

    let header = reader.headers().map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let header: Vec<&str> = header.iter().map(str::trim).collect();
    if header != expected_header {
        issues.push(RowIssue {
            row: 1,
            message: format!(
                "expected header \"{}\", found \"{}\"",
                expected_header.join(","),
                header.join(",")
            ),
        });
        return Ok(RowReader {
            records: Vec::new(),
            issues,
        });
    }

    let mut records = Vec::new();
    for record in reader.records() {
        match record {
            Ok(record) => {
                let line = record.position().map_or(0, |p| p.line());
                if record.len() != expected_header.len() {
                    issues.push(RowIssue {
                        row: line,
                        message: format!(
                            "expected {} fields, found {}",
                            expected_header.len(),
                            record.len()
                        ),
                    });
                } else {
                    records.push((line, record));
                }
            }
            Err(e) => {
                let line = e.position().map_or(0, |p| p.line());
                issues.push(RowIssue {
                    row: line,
                    message: e.to_string(),
                });
            }
        }
    }
    Ok(RowReader { records, issues })
}

/// Loads contributions, validating every row against the config. All bad
/// rows are collected before the whole load is rejected.
pub fn load_contributions(
    path: impl AsRef<Path>,
    config: &CampaignConfig,
) -> Result<Vec<Contribution>> {
    let path = path.as_ref();
    let RowReader {
        records,
        mut issues,
    } = read_rows(path, &CONTRIBUTION_HEADER)?;
    let n = config.answer_labels.len();
    let mut contributions = Vec::with_capacity(records.len());
    let mut seen_pairs: BTreeSet<(String, String)> = BTreeSet::new();

    for (row, record) in records {
        let mut bad = |message: String| issues.push(RowIssue { row, message });

        let contributor_id = record[0].trim().to_string();
        let hit_id = record[1].trim().to_string();
        let question_id = record[2].trim().to_string();
        if contributor_id.is_empty() || question_id.is_empty() {
            bad("contributor_id and question_id must not be empty".to_string());
            continue;
        }

        let mut indices = BTreeSet::new();
        let mut answer_ok = true;
        for token in record[3]
            .split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
        {
            match config.answer_index(token) {
                Some(index) => {
                    indices.insert(index);
                }
                None => {
                    bad(format!("unknown answer label \"{token}\""));
                    answer_ok = false;
                    break;
                }
            }
        }
        if !answer_ok {
            continue;
        }
        if indices.is_empty() {
            bad("answer is empty".to_string());
            continue;
        }
        if indices.len() == n {
            bad("answer names every option; at least one must be excluded".to_string());
            continue;
        }
        let answer = FocalSet::from_indices(n, indices.iter().copied()).expect("indices checked");

        let confidence_w = match config.confidence_value(record[4].trim()) {
            Ok(w) => w,
            Err(message) => {
                bad(message);
                continue;
            }
        };

        let time_cell = record[5].trim();
        let response_time_s = match time_cell.parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => t,
            Ok(t) => {
                bad(format!("response time {t} must be positive"));
                continue;
            }
            Err(_) => {
                bad(format!("response time \"{time_cell}\" is not a number"));
                continue;
            }
        };

        if !seen_pairs.insert((contributor_id.clone(), question_id.clone())) {
            bad(format!(
                "duplicate contribution of \"{contributor_id}\" to \"{question_id}\""
            ));
            continue;
        }

        contributions.push(Contribution {
            contributor_id,
            hit_id,
            question_id,
            answer,
            confidence_w,
            response_time_s,
        });
    }

    if issues.is_empty() {
        Ok(contributions)
    } else {
        Err(IngestError {
            path: path.to_path_buf(),
            issues,
        }
        .into())
    }
}

/// Loads gold records. Gold answers are used only for evaluation; the
/// expected times feed the reflection channel.
pub fn load_gold(path: impl AsRef<Path>, config: &CampaignConfig) -> Result<Vec<GoldRecord>> {
    let path = path.as_ref();
    let RowReader {
        records,
        mut issues,
    } = read_rows(path, &GOLD_HEADER)?;
    let mut gold = Vec::with_capacity(records.len());
    let mut seen: BTreeSet<String> = BTreeSet::new();

    for (row, record) in records {
        let mut bad = |message: String| issues.push(RowIssue { row, message });

        let question_id = record[0].trim().to_string();
        if question_id.is_empty() {
            bad("question_id must not be empty".to_string());
            continue;
        }
        let answer_cell = record[1].trim();
        let true_answer = match config.answer_index(answer_cell) {
            Some(index) => index,
            None => {
                bad(format!("unknown answer label \"{answer_cell}\""));
                continue;
            }
        };
        let t0_cell = record[2].trim();
        let t0_seconds = match t0_cell.parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => t,
            Ok(t) => {
                bad(format!("expected time {t} must be positive"));
                continue;
            }
            Err(_) => {
                bad(format!("expected time \"{t0_cell}\" is not a number"));
                continue;
            }
        };
        if !seen.insert(question_id.clone()) {
            bad(format!("duplicate gold question \"{question_id}\""));
            continue;
        }
        gold.push(GoldRecord {
            question_id,
            true_answer,
            t0_seconds,
        });
    }

    if issues.is_empty() {
        Ok(gold)
    } else {
        Err(IngestError {
            path: path.to_path_buf(),
            issues,
        }
        .into())
    }
}

/// Expected times per question id, for the reflection channel.
pub fn expected_times(gold: &[GoldRecord]) -> BTreeMap<String, f64> {
    gold.iter()
        .map(|g| (g.question_id.clone(), g.t0_seconds))
        .collect()
}

/// Output format for result files.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format \"{other}\", expected csv or json")),
        }
    }
}

fn mass_map(mass: &MassFunction) -> BTreeMap<String, f64> {
    mass.iter()
        .map(|(set, m)| (mass.frame().set_label(&set), m))
        .collect()
}

/// Flat, serializable view of one contributor's profiling result.
#[derive(Clone, Debug, Serialize)]
pub struct ProfileRecord {
    pub contributor_id: String,
    pub ip_c: f64,
    pub m_omega2: BTreeMap<String, f64>,
    pub m_omega3: BTreeMap<String, f64>,
    /// Pignistic probability of each of the four profiles.
    pub betp: BTreeMap<String, f64>,
    pub decision: Vec<String>,
}

/// Builds sorted-for-output records from profiling results.
pub fn profile_records(profiles: &[ContributorProfile]) -> Vec<ProfileRecord> {
    let mut records: Vec<ProfileRecord> = profiles
        .iter()
        .map(|profile| ProfileRecord {
            contributor_id: profile.contributor_id.clone(),
            ip_c: profile.qualification.ip_c,
            m_omega2: mass_map(&profile.qualification.mass_omega2),
            m_omega3: mass_map(&profile.reflection.mass_omega3),
            betp: Profile::ALL
                .iter()
                .map(|p| {
                    (
                        p.label().to_string(),
                        profile.pignistic4.prob(p.frame_index()),
                    )
                })
                .collect(),
            decision: profile
                .decision
                .iter()
                .map(|p| p.label().to_string())
                .collect(),
        })
        .collect();
    records.sort_by(|a, b| a.contributor_id.cmp(&b.contributor_id));
    records
}

/// Serializable view of one evaluation curve. `error_rates` and `mv_error`
/// are `None` for groups that selected no contributors.
#[derive(Clone, Debug, Serialize)]
pub struct CurveRecord {
    pub group: String,
    pub lambda_grid: Vec<f64>,
    pub error_rates: Option<Vec<f64>>,
    pub mv_error: Option<f64>,
}

impl CurveRecord {
    pub fn from_curve(curve: &ErrorCurve) -> Self {
        CurveRecord {
            group: curve.group_label.clone(),
            lambda_grid: curve.lambda_grid.clone(),
            error_rates: Some(curve.error_rates.clone()),
            mv_error: Some(curve.mv_error),
        }
    }

    /// Placeholder for a group with no members.
    pub fn empty_group(label: &str) -> Self {
        CurveRecord {
            group: label.to_string(),
            lambda_grid: Vec::new(),
            error_rates: None,
            mv_error: None,
        }
    }
}

/// Serializable view of one aggregated question.
#[derive(Clone, Debug, Serialize)]
pub struct QuestionRecord {
    pub question_id: String,
    pub n_precise: usize,
    pub n_imprecise: usize,
    pub mass: BTreeMap<String, f64>,
    pub betp: BTreeMap<String, f64>,
    pub decision: Vec<String>,
}

impl QuestionRecord {
    pub fn new(
        aggregate: &QuestionAggregate,
        mass: &MassFunction,
        decision: &FocalSet,
    ) -> Result<Self> {
        let frame = mass.frame();
        let pignistic = mass.pignistic()?;
        Ok(QuestionRecord {
            question_id: aggregate.question_id.clone(),
            n_precise: aggregate.n_precise,
            n_imprecise: aggregate.n_imprecise,
            mass: mass_map(mass),
            betp: frame
                .labels()
                .iter()
                .enumerate()
                .map(|(i, l)| (l.clone(), pignistic.prob(i)))
                .collect(),
            decision: decision
                .indices()
                .map(|i| frame.label(i).to_string())
                .collect(),
        })
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

fn packed(map: &BTreeMap<String, f64>) -> String {
    map.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join("|")
}

/// Writes profiling records. CSV columns:
/// `contributor_id,ip_c,m2_p,m2_np,m2_omega2,m3_r,m3_nr,m3_omega3,`
/// `betp_expert,betp_fuzzy,betp_categorical,betp_spammer,decision`.
pub fn write_profiles(
    path: impl AsRef<Path>,
    records: &[ProfileRecord],
    config: &CampaignConfig,
    format: OutputFormat,
) -> Result<()> {
    let path = path.as_ref();
    match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Document<'a> {
                config: &'a CampaignConfig,
                profiles: &'a [ProfileRecord],
            }
            let text = serde_json::to_string_pretty(&Document {
                config,
                profiles: records,
            })
            .expect("serializable document");
            write_file(path, &(text + "\n"))
        }
        OutputFormat::Csv => {
            let mut out = String::from(
                "contributor_id,ip_c,m2_p,m2_np,m2_omega2,m3_r,m3_nr,m3_omega3,\
                 betp_expert,betp_fuzzy,betp_categorical,betp_spammer,decision\n",
            );
            for r in records {
                let get = |map: &BTreeMap<String, f64>, key: &str| -> f64 {
                    map.get(key).copied().unwrap_or(0.0)
                };
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                    r.contributor_id,
                    r.ip_c,
                    get(&r.m_omega2, "P"),
                    get(&r.m_omega2, "NP"),
                    get(&r.m_omega2, "P;NP"),
                    get(&r.m_omega3, "R"),
                    get(&r.m_omega3, "NR"),
                    get(&r.m_omega3, "R;NR"),
                    get(&r.betp, "expert"),
                    get(&r.betp, "fuzzy"),
                    get(&r.betp, "categorical"),
                    get(&r.betp, "spammer"),
                    r.decision.join("|"),
                ));
            }
            write_file(path, &out)
        }
    }
}

/// Writes evaluation curves as CSV rows `group,lambda,error_rate,mv_error`.
/// A group with no members yields a single row with empty value cells.
pub fn write_curves(path: impl AsRef<Path>, records: &[CurveRecord]) -> Result<()> {
    let mut out = String::from("group,lambda,error_rate,mv_error\n");
    for record in records {
        match (&record.error_rates, record.mv_error) {
            (Some(rates), Some(mv)) => {
                for (lambda, rate) in record.lambda_grid.iter().zip(rates) {
                    out.push_str(&format!("{},{lambda},{rate},{mv}\n", record.group));
                }
            }
            _ => out.push_str(&format!("{},,,\n", record.group)),
        }
    }
    write_file(path.as_ref(), &out)
}

/// Writes per-question aggregation records. CSV packs the mass and betP
/// maps as `key=value` pairs joined by `|`.
pub fn write_aggregates(
    path: impl AsRef<Path>,
    records: &[QuestionRecord],
    config: &CampaignConfig,
    lambda: f64,
    format: OutputFormat,
) -> Result<()> {
    let path = path.as_ref();
    match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Document<'a> {
                config: &'a CampaignConfig,
                lambda: f64,
                questions: &'a [QuestionRecord],
            }
            let text = serde_json::to_string_pretty(&Document {
                config,
                lambda,
                questions: records,
            })
            .expect("serializable document");
            write_file(path, &(text + "\n"))
        }
        OutputFormat::Csv => {
            let mut out = String::from("question_id,n_precise,n_imprecise,mass,betp,decision\n");
            for r in records {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.question_id,
                    r.n_precise,
                    r.n_imprecise,
                    packed(&r.mass),
                    packed(&r.betp),
                    r.decision.join(";"),
                ));
            }
            write_file(path, &out)
        }
    }
}

/// Combined result writer. JSON carries the config echo, the profiles and
/// the curves in one document. CSV holds one result kind per file, so both
/// kinds at once are rejected.
pub fn write_results(
    profiles: &[ProfileRecord],
    curves: &[CurveRecord],
    config: &CampaignConfig,
    path: impl AsRef<Path>,
    format: OutputFormat,
) -> Result<()> {
    let path = path.as_ref();
    match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Document<'a> {
                config: &'a CampaignConfig,
                profiles: &'a [ProfileRecord],
                curves: &'a [CurveRecord],
            }
            let text = serde_json::to_string_pretty(&Document {
                config,
                profiles,
                curves,
            })
            .expect("serializable document");
            write_file(path, &(text + "\n"))
        }
        OutputFormat::Csv => {
            if !profiles.is_empty() && !curves.is_empty() {
                return Err(Error::UnsupportedOutput(
                    "CSV holds one result kind per file; write profiles and curves separately \
                     or use JSON"
                        .to_string(),
                ));
            }
            if curves.is_empty() {
                write_profiles(path, profiles, config, OutputFormat::Csv)
            } else {
                write_curves(path, curves)
            }
        }
    }
}

/// Serializes contributions back to the standard CSV layout. Confidence
/// weights that match a scale value exactly are written as their label.
pub fn write_contributions(
    path: impl AsRef<Path>,
    contributions: &[Contribution],
    config: &CampaignConfig,
) -> Result<()> {
    let path = path.as_ref();
    let frame = config.frame();
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(CONTRIBUTION_HEADER)
        .expect("in-memory write");
    for c in contributions {
        let answer = frame.set_label(&c.answer);
        let confidence = config
            .confidence_scale
            .iter()
            .find(|l| l.w == c.confidence_w)
            .map_or_else(|| c.confidence_w.to_string(), |l| l.label.clone());
        writer
            .write_record([
                c.contributor_id.as_str(),
                c.hit_id.as_str(),
                c.question_id.as_str(),
                answer.as_str(),
                confidence.as_str(),
                &c.response_time_s.to_string(),
            ])
            .expect("in-memory write");
    }
    let bytes = writer.into_inner().expect("in-memory write");
    fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

/// Serializes gold records to the standard CSV layout.
pub fn write_gold(
    path: impl AsRef<Path>,
    gold: &[GoldRecord],
    config: &CampaignConfig,
) -> Result<()> {
    let path = path.as_ref();
    let mut out = String::from("question_id,true_answer,t0_seconds\n");
    for g in gold {
        out.push_str(&format!(
            "{},{},{}\n",
            g.question_id, config.answer_labels[g.true_answer], g.t0_seconds
        ));
    }
    write_file(path, &out)
}

/// Serializes a campaign config to TOML.
pub fn write_config(path: impl AsRef<Path>, config: &CampaignConfig) -> Result<()> {
    let path = path.as_ref();
    let text = toml::to_string_pretty(config).map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    write_file(path, &text)
}

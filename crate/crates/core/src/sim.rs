//! Seeded synthetic-campaign generation.
//!
//! Real campaign data with known contributor behaviour is rarely available,
//! so this module fabricates one: contributors of the four archetypes answer
//! every question of every HIT, with accuracy, imprecision, confidence and
//! response-time behaviour taken from their [`ArchetypeSpec`]. Given equal
//! specs and seed the output is byte-identical.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::aggregate::GoldRecord;
use crate::belief::FocalSet;
use crate::campaign::{CampaignConfig, CampaignData};
use crate::error::{Error, Result};
use crate::profile::{Contribution, Profile};

/// How an archetype picks its confidence label on the configured scale.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConfidenceBehavior {
    /// Always the scale entry at this index (0 is the most confident).
    Fixed(usize),
    /// Uniform over the whole scale.
    Uniform,
    /// Weighted draw over the scale entries; weights need not sum to one.
    Weighted(Vec<f64>),
}

/// Behavioural parameters of one contributor archetype.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArchetypeSpec {
    pub profile: Profile,
    pub count: usize,
    /// Probability that the true answer is contained in the answer set.
    pub accuracy: f64,
    /// Probability of a two-option answer (ignored on two-option frames,
    /// where a pair would name every option).
    pub imprecision_rate: f64,
    /// Range for the ratio of response time to expected time.
    pub time_ratio_range: (f64, f64),
    pub confidence_behavior: ConfidenceBehavior,
}

impl ArchetypeSpec {
    fn validate(&self, scale_len: usize) -> Result<()> {
        for (what, value) in [
            ("accuracy", self.accuracy),
            ("imprecision_rate", self.imprecision_rate),
        ] {
            if !(0.0..=1.0).contains(&value) || value.is_nan() {
                return Err(Error::InvalidArchetype(format!(
                    "{what} = {value} for {} is outside [0, 1]",
                    self.profile
                )));
            }
        }
        let (lo, hi) = self.time_ratio_range;
        if !(lo > 0.0 && lo < hi && hi.is_finite()) {
            return Err(Error::InvalidArchetype(format!(
                "time ratio range ({lo}, {hi}) for {} must satisfy 0 < lo < hi",
                self.profile
            )));
        }
        match &self.confidence_behavior {
            ConfidenceBehavior::Fixed(index) if *index >= scale_len => {
                Err(Error::InvalidArchetype(format!(
                    "confidence index {index} for {} is outside the {scale_len}-level scale",
                    self.profile
                )))
            }
            ConfidenceBehavior::Weighted(weights)
                if weights.len() != scale_len
                    || weights.iter().any(|w| *w < 0.0 || !w.is_finite())
                    || weights.iter().sum::<f64>() <= 0.0 =>
            {
                Err(Error::InvalidArchetype(format!(
                    "confidence weights for {} must be {scale_len} non-negative values with a \
                     positive sum",
                    self.profile
                )))
            }
            _ => Ok(()),
        }
    }
}

/// Full description of a synthetic campaign. Deserializable from TOML.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimSpec {
    #[serde(default = "default_answer_labels")]
    pub answer_labels: Vec<String>,
    #[serde(default = "default_n_hits")]
    pub n_hits: usize,
    #[serde(default = "default_questions_per_hit")]
    pub questions_per_hit: usize,
    /// Expected response times are drawn uniformly from this range.
    #[serde(default = "default_t0_range")]
    pub t0_range: (f64, f64),
    #[serde(default = "spec_default_archetypes")]
    pub archetypes: Vec<ArchetypeSpec>,
}

fn default_answer_labels() -> Vec<String> {
    ["mauvais", "pauvre", "correct", "bon", "excellent"]
        .into_iter()
        .map(String::from)
        .collect()
}

fn default_n_hits() -> usize {
    4
}

fn default_questions_per_hit() -> usize {
    12
}

fn default_t0_range() -> (f64, f64) {
    (10.0, 60.0)
}

fn spec_default_archetypes() -> Vec<ArchetypeSpec> {
    default_archetypes(default_answer_labels().len())
}

impl Default for SimSpec {
    fn default() -> Self {
        SimSpec {
            answer_labels: default_answer_labels(),
            n_hits: default_n_hits(),
            questions_per_hit: default_questions_per_hit(),
            t0_range: default_t0_range(),
            archetypes: spec_default_archetypes(),
        }
    }
}

/// Well-separated archetype defaults, ten contributors each.
///
/// The separation targets the profile frame: spammers and experts answer
/// fast (low time ratios), categorical and fuzzy contributors slowly. On
/// the precision axis the split comes from the belief-weighted specificity:
/// spammers claim top confidence on precise answers and categorical
/// contributors answer precisely, while fuzzy and expert contributors mix
/// two-option answers with a mid-scale confidence, which keeps their
/// specificity below one half. Spammer accuracy is chance on the given
/// frame.
pub fn default_archetypes(n_answers: usize) -> Vec<ArchetypeSpec> {
    let mid_confidence = 2; // "moyennement sûr" on the default scale
    vec![
        ArchetypeSpec {
            profile: Profile::Spammer,
            count: 10,
            accuracy: 1.0 / n_answers.max(1) as f64,
            imprecision_rate: 0.0,
            time_ratio_range: (0.05, 0.3),
            confidence_behavior: ConfidenceBehavior::Fixed(0),
        },
        ArchetypeSpec {
            profile: Profile::Categorical,
            count: 10,
            accuracy: 0.85,
            imprecision_rate: 0.0,
            time_ratio_range: (1.0, 3.0),
            confidence_behavior: ConfidenceBehavior::Fixed(1),
        },
        ArchetypeSpec {
            profile: Profile::Fuzzy,
            count: 10,
            accuracy: 0.9,
            imprecision_rate: 0.6,
            time_ratio_range: (1.0, 3.0),
            confidence_behavior: ConfidenceBehavior::Fixed(mid_confidence),
        },
        ArchetypeSpec {
            profile: Profile::Expert,
            count: 10,
            accuracy: 0.95,
            imprecision_rate: 0.3,
            time_ratio_range: (0.1, 0.5),
            confidence_behavior: ConfidenceBehavior::Fixed(mid_confidence),
        },
    ]
}

/// Parses a [`SimSpec`] from TOML text. Every field is optional.
pub fn parse_spec(text: &str) -> std::result::Result<SimSpec, String> {
    toml::from_str(text).map_err(|e| e.to_string())
}

/// A generated campaign together with its ground truth.
#[derive(Clone, Debug, PartialEq)]
pub struct SyntheticCampaign {
    pub data: CampaignData,
    /// True answer index per question.
    pub truth: BTreeMap<String, usize>,
    /// Archetype each contributor was generated from.
    pub intended: BTreeMap<String, Profile>,
}

/// Generates a campaign from a spec. Every contributor answers every
/// question; the gold records cover all questions so the reflection channel
/// has an expected time everywhere.
pub fn generate(spec: &SimSpec, seed: u64) -> Result<SyntheticCampaign> {
    let config = CampaignConfig::with_labels(spec.answer_labels.clone())?;
    let scale_len = config.confidence_scale.len();
    for archetype in &spec.archetypes {
        archetype.validate(scale_len)?;
    }
    if spec.archetypes.iter().map(|a| a.count).sum::<usize>() == 0 {
        return Err(Error::EmptyCrowd);
    }
    if spec.n_hits == 0 || spec.questions_per_hit == 0 {
        return Err(Error::InvalidArchetype(
            "campaign needs at least one HIT with at least one question".to_string(),
        ));
    }
    let (t0_lo, t0_hi) = spec.t0_range;
    if !(t0_lo > 0.0 && t0_lo < t0_hi && t0_hi.is_finite()) {
        return Err(Error::InvalidArchetype(format!(
            "expected-time range ({t0_lo}, {t0_hi}) must satisfy 0 < lo < hi"
        )));
    }

    let n = spec.answer_labels.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut questions: Vec<(String, String)> = Vec::new();
    for hit in 0..spec.n_hits {
        for q in 0..spec.questions_per_hit {
            questions.push((format!("h{hit:02}"), format!("h{hit:02}q{q:02}")));
        }
    }

    let mut truth = BTreeMap::new();
    let mut gold = Vec::with_capacity(questions.len());
    for (_, question_id) in &questions {
        let answer = rng.gen_range(0..n);
        let t0 = rng.gen_range(t0_lo..t0_hi);
        truth.insert(question_id.clone(), answer);
        gold.push(GoldRecord {
            question_id: question_id.clone(),
            true_answer: answer,
            t0_seconds: t0,
        });
    }

    let mut contributions = Vec::new();
    let mut intended = BTreeMap::new();
    for archetype in &spec.archetypes {
        for index in 0..archetype.count {
            let contributor_id = format!("{}_{index:02}", archetype.profile);
            intended.insert(contributor_id.clone(), archetype.profile);
            for (gold_record, (hit_id, question_id)) in gold.iter().zip(&questions) {
                let true_answer = gold_record.true_answer;
                let answer = draw_answer(&mut rng, archetype, n, true_answer);
                let confidence_w = draw_confidence(&mut rng, archetype, &config);
                let (lo, hi) = archetype.time_ratio_range;
                let response_time_s = rng.gen_range(lo..hi) * gold_record.t0_seconds;
                contributions.push(Contribution {
                    contributor_id: contributor_id.clone(),
                    hit_id: hit_id.clone(),
                    question_id: question_id.clone(),
                    answer,
                    confidence_w,
                    response_time_s,
                });
            }
        }
    }

    Ok(SyntheticCampaign {
        data: CampaignData {
            config,
            contributions,
            gold,
        },
        truth,
        intended,
    })
}

fn draw_answer(
    rng: &mut ChaCha8Rng,
    archetype: &ArchetypeSpec,
    n: usize,
    true_answer: usize,
) -> FocalSet {
    // a two-option answer on a two-option frame would name every option
    let imprecise = n > 2 && rng.gen_bool(archetype.imprecision_rate);
    let correct = rng.gen_bool(archetype.accuracy);
    let mut indices = Vec::with_capacity(2);
    if correct {
        indices.push(true_answer);
        if imprecise {
            indices.push(draw_other(rng, n, &[true_answer]));
        }
    } else {
        let first = draw_other(rng, n, &[true_answer]);
        indices.push(first);
        if imprecise {
            indices.push(draw_other(rng, n, &[true_answer, first]));
        }
    }
    FocalSet::from_indices(n, indices).expect("indices below frame size")
}

fn draw_other(rng: &mut ChaCha8Rng, n: usize, excluded: &[usize]) -> usize {
    loop {
        let candidate = rng.gen_range(0..n);
        if !excluded.contains(&candidate) {
            return candidate;
        }
    }
}

fn draw_confidence(
    rng: &mut ChaCha8Rng,
    archetype: &ArchetypeSpec,
    config: &CampaignConfig,
) -> f64 {
    let scale = &config.confidence_scale;
    let index = match &archetype.confidence_behavior {
        ConfidenceBehavior::Fixed(index) => *index,
        ConfidenceBehavior::Uniform => rng.gen_range(0..scale.len()),
        ConfidenceBehavior::Weighted(weights) => {
            let total: f64 = weights.iter().sum();
            let mut draw = rng.gen_range(0.0..total);
            let mut chosen = weights.len() - 1;
            for (i, w) in weights.iter().enumerate() {
                if draw < *w {
                    chosen = i;
                    break;
                }
                draw -= w;
            }
            chosen
        }
    };
    scale[index].w
}

//! Contributor evidence channels and profile estimation.
//!
//! Three channels of evidence are extracted from a contributor's behaviour:
//!
//! - confidence: each answer becomes a simple support function on the answer
//!   frame, weighted by the contributor's self-reported confidence;
//! - qualification: the belief-weighted specificity of the answers yields a
//!   precision degree, turned into a mass function on {P, NP};
//! - reflection: response time against the expected time per question yields
//!   a mass function on {R, NR}, averaged over questions.
//!
//! Qualification and reflection are extended onto the joint frame
//! {P, NP} x {R, NR} and fused with Yager's rule; the pignistic argmax over
//! the four joint elements names the profile.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::belief::{
    combine_yager, mean_mass, FocalSet, Frame, MassFunction, PignisticDistribution, Position,
};
use crate::error::{Error, Result};

/// One contributor's answer to one question.
///
/// `answer` is a non-empty, non-full subset of the answer frame; imprecise
/// answers name more than one option. `confidence_w` is the numeric weight
/// behind the answer and `response_time_s` the time taken, in seconds.
#[derive(Clone, Debug, PartialEq)]
pub struct Contribution {
    pub contributor_id: String,
    pub hit_id: String,
    pub question_id: String,
    pub answer: FocalSet,
    pub confidence_w: f64,
    pub response_time_s: f64,
}

impl Contribution {
    /// Checks this contribution against an answer frame.
    pub fn validate(&self, frame: &Frame) -> Result<()> {
        if self.answer.width() != frame.len() {
            return Err(Error::WidthMismatch {
                width: self.answer.width(),
                frame: frame.len(),
            });
        }
        if self.answer.is_empty() || self.answer.is_full() {
            return Err(Error::InvalidSimpleSupport);
        }
        if !(0.0..=1.0).contains(&self.confidence_w) {
            return Err(Error::OutOfRange {
                what: "confidence",
                lo: 0.0,
                hi: 1.0,
                value: self.confidence_w,
            });
        }
        if self.response_time_s <= 0.0 || !self.response_time_s.is_finite() {
            return Err(Error::OutOfRange {
                what: "response time",
                lo: 0.0,
                hi: f64::INFINITY,
                value: self.response_time_s,
            });
        }
        Ok(())
    }
}

/// Precision evidence: the precision degree and its mass function on {P, NP}.
#[derive(Clone, Debug, PartialEq)]
pub struct QualificationEvidence {
    pub ip_c: f64,
    pub mass_omega2: MassFunction,
}

/// Reflection evidence: the per-question masses on {R, NR} and their mean.
#[derive(Clone, Debug, PartialEq)]
pub struct ReflectionEvidence {
    pub per_question: Vec<MassFunction>,
    pub mass_omega3: MassFunction,
}

/// The four behavioural profiles, named by their (precision, reflection)
/// pair: expert (NP, NR), fuzzy (NP, R), categorical (P, R), spammer (P, NR).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Expert,
    Fuzzy,
    Categorical,
    Spammer,
}

impl Profile {
    pub const ALL: [Profile; 4] = [
        Profile::Expert,
        Profile::Fuzzy,
        Profile::Categorical,
        Profile::Spammer,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Profile::Expert => "expert",
            Profile::Fuzzy => "fuzzy",
            Profile::Categorical => "categorical",
            Profile::Spammer => "spammer",
        }
    }

    pub fn from_label(label: &str) -> Option<Profile> {
        Profile::ALL.into_iter().find(|p| p.label() == label)
    }

    /// Index of the matching element in [`profile_frame`], whose order is
    /// (P,R), (P,NR), (NP,R), (NP,NR).
    pub fn frame_index(self) -> usize {
        match self {
            Profile::Categorical => 0,
            Profile::Spammer => 1,
            Profile::Fuzzy => 2,
            Profile::Expert => 3,
        }
    }

    pub fn from_frame_index(index: usize) -> Option<Profile> {
        match index {
            0 => Some(Profile::Categorical),
            1 => Some(Profile::Spammer),
            2 => Some(Profile::Fuzzy),
            3 => Some(Profile::Expert),
            _ => None,
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Full profiling result for one contributor.
#[derive(Clone, Debug)]
pub struct ContributorProfile {
    pub contributor_id: String,
    pub qualification: QualificationEvidence,
    pub reflection: ReflectionEvidence,
    pub mass_omega4: MassFunction,
    pub pignistic4: PignisticDistribution,
    /// Argmax set over the four profiles; more than one entry on a tie.
    pub decision: BTreeSet<Profile>,
}

/// The precision frame {P, NP}.
pub fn qualification_frame() -> Frame {
    static FRAME: OnceLock<Frame> = OnceLock::new();
    FRAME
        .get_or_init(|| Frame::new(["P", "NP"]).expect("static labels"))
        .clone()
}

/// The reflection frame {R, NR}.
pub fn reflection_frame() -> Frame {
    static FRAME: OnceLock<Frame> = OnceLock::new();
    FRAME
        .get_or_init(|| Frame::new(["R", "NR"]).expect("static labels"))
        .clone()
}

/// The joint profile frame {P, NP} x {R, NR}.
pub fn profile_frame() -> Frame {
    static FRAME: OnceLock<Frame> = OnceLock::new();
    FRAME
        .get_or_init(|| {
            qualification_frame()
                .product(&reflection_frame())
                .expect("4-element product")
        })
        .clone()
}

/// Confidence channel: the answer as a simple support function with the
/// contributor's confidence as weight.
pub fn confidence_mass(contribution: &Contribution, frame: &Frame) -> Result<MassFunction> {
    contribution.validate(frame)?;
    MassFunction::simple_support(frame, contribution.answer, contribution.confidence_w)
}

/// Precision degree of one contributor over their contributions: the mean,
/// over questions, of the belief-weighted specificity of the confidence
/// mass. A fully confident singleton answer scores 1, total ignorance 0.
pub fn imprecision_degree(contributions: &[Contribution], frame: &Frame) -> Result<f64> {
    if contributions.is_empty() {
        return Err(Error::NoContributions);
    }
    let n = frame.len() as f64;
    let mut total = 0.0;
    for contribution in contributions {
        let mass = confidence_mass(contribution, frame)?;
        let specificity: f64 = mass
            .iter()
            .map(|(set, m)| m * (n - set.len() as f64) / (n - 1.0))
            .sum();
        total += specificity;
    }
    Ok(total / contributions.len() as f64)
}

/// Qualification channel on {P, NP}: `m(P) = beta * ip_c`,
/// `m(NP) = beta * (1 - ip_c)`, the rest on Ω.
pub fn qualification_mass(ip_c: f64, beta: f64) -> Result<MassFunction> {
    for (what, value) in [("precision degree", ip_c), ("beta", beta)] {
        if !(0.0..=1.0).contains(&value) || value.is_nan() {
            return Err(Error::OutOfRange {
                what,
                lo: 0.0,
                hi: 1.0,
                value,
            });
        }
    }
    let frame = qualification_frame();
    let p = frame.singleton(0)?;
    let np = frame.singleton(1)?;
    MassFunction::new(
        frame.clone(),
        [
            (p, beta * ip_c),
            (np, beta * (1.0 - ip_c)),
            (frame.full_set(), 1.0 - beta),
        ],
    )
}

/// Reflection channel on {R, NR} for one question. With `r` the ratio of the
/// observed response time to the expected time and `s = r / (r + 1)`:
/// `m(R) = eta * s`, `m(NR) = eta * (1 - s)`, the rest on Ω. Slow answers
/// push mass towards R, fast answers towards NR, with the neutral point at
/// `t_cq = t_0q`.
pub fn reflection_mass(t_cq: f64, t_0q: f64, eta: f64) -> Result<MassFunction> {
    for (what, value) in [("response time", t_cq), ("expected time", t_0q)] {
        if value <= 0.0 || !value.is_finite() {
            return Err(Error::OutOfRange {
                what,
                lo: 0.0,
                hi: f64::INFINITY,
                value,
            });
        }
    }
    if !(0.0..=1.0).contains(&eta) || eta.is_nan() {
        return Err(Error::OutOfRange {
            what: "eta",
            lo: 0.0,
            hi: 1.0,
            value: eta,
        });
    }
    let ratio = t_cq / t_0q;
    let s = ratio / (ratio + 1.0);
    let frame = reflection_frame();
    let r = frame.singleton(0)?;
    let nr = frame.singleton(1)?;
    MassFunction::new(
        frame.clone(),
        [
            (r, eta * s),
            (nr, eta * (1.0 - s)),
            (frame.full_set(), 1.0 - eta),
        ],
    )
}

/// Reflection evidence over all of a contributor's questions: one mass per
/// question, then the pointwise mean. Every question needs an expected time
/// in `expected_times`.
pub fn contributor_reflection(
    contributions: &[Contribution],
    expected_times: &BTreeMap<String, f64>,
    eta: f64,
) -> Result<ReflectionEvidence> {
    if contributions.is_empty() {
        return Err(Error::NoContributions);
    }
    let mut per_question = Vec::with_capacity(contributions.len());
    for contribution in contributions {
        let t_0q = expected_times
            .get(&contribution.question_id)
            .copied()
            .ok_or_else(|| Error::MissingReferenceTime(contribution.question_id.clone()))?;
        per_question.push(reflection_mass(contribution.response_time_s, t_0q, eta)?);
    }
    let mass_omega3 = mean_mass(&per_question)?;
    Ok(ReflectionEvidence {
        per_question,
        mass_omega3,
    })
}

/// Fuses the two channels on the joint frame: both masses are vacuously
/// extended onto {P, NP} x {R, NR} and combined with Yager's rule. Cylinder
/// sets always intersect, so no conflict can appear here.
pub fn profile_mass(
    qualification: &QualificationEvidence,
    reflection: &ReflectionEvidence,
) -> Result<MassFunction> {
    let up2 = qualification
        .mass_omega2
        .vacuous_extend(&reflection_frame(), Position::Left)?;
    let up3 = reflection
        .mass_omega3
        .vacuous_extend(&qualification_frame(), Position::Right)?;
    combine_yager(&[up2, up3])
}

/// Decides the profile: pignistic transform of the joint mass, then the
/// argmax set. Ties yield a multi-profile decision.
pub fn classify_profile(mass_omega4: &MassFunction, tol: f64) -> Result<BTreeSet<Profile>> {
    if mass_omega4.frame() != &profile_frame() {
        return Err(Error::FrameMismatch);
    }
    let pignistic = mass_omega4.pignistic()?;
    Ok(decision_from_argmax(&pignistic.argmax(tol)))
}

fn decision_from_argmax(argmax: &FocalSet) -> BTreeSet<Profile> {
    argmax
        .indices()
        .filter_map(Profile::from_frame_index)
        .collect()
}

/// Runs the whole pipeline for one contributor's contributions.
pub fn profile_contributor(
    contributor_id: &str,
    contributions: &[Contribution],
    frame: &Frame,
    expected_times: &BTreeMap<String, f64>,
    beta: f64,
    eta: f64,
    tol: f64,
) -> Result<ContributorProfile> {
    let ip_c = imprecision_degree(contributions, frame)?;
    let qualification = QualificationEvidence {
        ip_c,
        mass_omega2: qualification_mass(ip_c, beta)?,
    };
    let reflection = contributor_reflection(contributions, expected_times, eta)?;
    let mass_omega4 = profile_mass(&qualification, &reflection)?;
    let pignistic4 = mass_omega4.pignistic()?;
    let decision = decision_from_argmax(&pignistic4.argmax(tol));
    Ok(ContributorProfile {
        contributor_id: contributor_id.to_string(),
        qualification,
        reflection,
        mass_omega4,
        pignistic4,
        decision,
    })
}

/// Renders a decision set as profile labels joined by `|`.
pub fn decision_label(decision: &BTreeSet<Profile>) -> String {
    decision
        .iter()
        .map(|p| p.label())
        .collect::<Vec<_>>()
        .join("|")
}

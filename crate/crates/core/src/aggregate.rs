//! Per-question answer aggregation and gold-data evaluation.
//!
//! For one question, the confidence masses of precise (singleton) and
//! imprecise (multi-option) answers are averaged separately; the two means
//! are then mixed with a weight `lambda` and the pignistic argmax names the
//! aggregated answer. A fractional-split majority vote serves as baseline.
//! Error rates against gold answers are swept over a lambda grid, optionally
//! restricted to a contributor group taken from the profiling decisions.

use std::collections::{BTreeMap, BTreeSet};

use crate::belief::{mean_mass, FocalSet, Frame, MassFunction};
use crate::error::{Error, Result};
use crate::profile::{confidence_mass, Contribution, ContributorProfile, Profile};

/// Averaged precise and imprecise confidence masses for one question.
/// A side with no answers is the vacuous mass with count zero.
#[derive(Clone, Debug, PartialEq)]
pub struct QuestionAggregate {
    pub question_id: String,
    pub m_precise: MassFunction,
    pub m_imprecise: MassFunction,
    pub n_precise: usize,
    pub n_imprecise: usize,
}

/// A question with a known answer and an expected response time in seconds.
#[derive(Clone, Debug, PartialEq)]
pub struct GoldRecord {
    pub question_id: String,
    /// Element index of the true answer in the answer frame.
    pub true_answer: usize,
    pub t0_seconds: f64,
}

/// Error rate over a lambda grid for one contributor group, with the
/// majority-vote error on the same group as reference.
#[derive(Clone, Debug, PartialEq)]
pub struct ErrorCurve {
    pub group_label: String,
    pub lambda_grid: Vec<f64>,
    pub error_rates: Vec<f64>,
    pub mv_error: f64,
}

/// Contributor groupings derived from profiling decisions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grouping {
    /// The whole crowd as one group.
    All,
    /// Precise vs imprecise contributors (pignistic argmax on {P, NP}).
    Precision,
    /// Reflected vs unreflected contributors (pignistic argmax on {R, NR}).
    Reflection,
    /// One group per singleton profile decision.
    Profile,
}

/// A named set of contributor ids.
#[derive(Clone, Debug, PartialEq)]
pub struct ContributorGroup {
    pub label: String,
    pub members: BTreeSet<String>,
}

/// Splits one question's contributions into precise and imprecise answers
/// and averages the confidence masses of each side.
pub fn split_and_average<'a, I>(
    question_id: &str,
    contributions: I,
    frame: &Frame,
) -> Result<QuestionAggregate>
where
    I: IntoIterator<Item = &'a Contribution>,
{
    let mut precise = Vec::new();
    let mut imprecise = Vec::new();
    for contribution in contributions {
        debug_assert_eq!(contribution.question_id, question_id);
        let mass = confidence_mass(contribution, frame)?;
        if contribution.answer.len() == 1 {
            precise.push(mass);
        } else {
            imprecise.push(mass);
        }
    }
    let average = |masses: &[MassFunction]| -> Result<MassFunction> {
        if masses.is_empty() {
            Ok(MassFunction::vacuous(frame))
        } else {
            mean_mass(masses)
        }
    };
    Ok(QuestionAggregate {
        question_id: question_id.to_string(),
        n_precise: precise.len(),
        n_imprecise: imprecise.len(),
        m_precise: average(&precise)?,
        m_imprecise: average(&imprecise)?,
    })
}

/// Convex mix of the two averaged sides:
/// `m = lambda * m_precise + (1 - lambda) * m_imprecise`.
pub fn lambda_aggregate(aggregate: &QuestionAggregate, lambda: f64) -> Result<MassFunction> {
    if !(0.0..=1.0).contains(&lambda) || lambda.is_nan() {
        return Err(Error::OutOfRange {
            what: "lambda",
            lo: 0.0,
            hi: 1.0,
            value: lambda,
        });
    }
    let mut entries: BTreeMap<FocalSet, f64> = BTreeMap::new();
    for (set, mass) in aggregate.m_precise.iter() {
        *entries.entry(set).or_insert(0.0) += lambda * mass;
    }
    for (set, mass) in aggregate.m_imprecise.iter() {
        *entries.entry(set).or_insert(0.0) += (1.0 - lambda) * mass;
    }
    MassFunction::new(aggregate.m_precise.frame().clone(), entries)
}

/// Pignistic argmax decision for an aggregated mass.
pub fn decide_answer(mass: &MassFunction, tol: f64) -> Result<FocalSet> {
    Ok(mass.pignistic()?.argmax(tol))
}

/// Majority vote with fractional splitting: an answer naming `k` options
/// adds `1/k` to each of them, so every contributor casts one vote in total.
/// Returns the argmax set; with no contributions every option ties.
pub fn majority_vote<'a, I>(contributions: I, frame: &Frame, tol: f64) -> Result<FocalSet>
where
    I: IntoIterator<Item = &'a Contribution>,
{
    let mut votes = vec![0.0_f64; frame.len()];
    for contribution in contributions {
        contribution.validate(frame)?;
        let share = 1.0 / contribution.answer.len() as f64;
        for index in contribution.answer.indices() {
            votes[index] += share;
        }
    }
    let tol = tol.max(0.0);
    let max = votes.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let indices = (0..votes.len()).filter(|&i| votes[i] >= max - tol);
    FocalSet::from_indices(frame.len(), indices)
}

/// Fraction of gold questions whose decision is not exactly the singleton
/// true answer. A tie that still contains the truth counts as an error.
pub fn error_rate(decisions: &BTreeMap<String, FocalSet>, gold: &[GoldRecord]) -> Result<f64> {
    if gold.is_empty() {
        return Err(Error::EmptyGold);
    }
    let mut wrong = 0usize;
    for record in gold {
        let decision = decisions
            .get(&record.question_id)
            .ok_or_else(|| Error::MissingDecision(record.question_id.clone()))?;
        let expected = FocalSet::from_indices(decision.width(), [record.true_answer])?;
        if *decision != expected {
            wrong += 1;
        }
    }
    Ok(wrong as f64 / gold.len() as f64)
}

/// Sweeps the lambda grid on the gold questions for one contributor group
/// (or the whole crowd when `group` is `None`), and computes the
/// majority-vote error on the same population.
///
/// Gold questions that nobody in the group answered aggregate to ignorance
/// on both sides, so they decide as a full tie and count as errors.
pub fn lambda_sweep(
    contributions: &[Contribution],
    frame: &Frame,
    gold: &[GoldRecord],
    grid: &[f64],
    group: Option<&ContributorGroup>,
    tol: f64,
) -> Result<ErrorCurve> {
    if grid.is_empty()
        || !grid.windows(2).all(|w| w[0] < w[1])
        || grid.iter().any(|l| !(0.0..=1.0).contains(l))
    {
        return Err(Error::BadLambdaGrid);
    }
    if gold.is_empty() {
        return Err(Error::EmptyGold);
    }
    let label = group.map_or("All", |g| g.label.as_str()).to_string();
    let selected: Vec<&Contribution> = contributions
        .iter()
        .filter(|c| group.is_none_or(|g| g.members.contains(&c.contributor_id)))
        .collect();
    if selected.is_empty() {
        return Err(Error::EmptyGroup(label));
    }

    let mut per_question: BTreeMap<&str, Vec<&Contribution>> = BTreeMap::new();
    for contribution in &selected {
        per_question
            .entry(contribution.question_id.as_str())
            .or_default()
            .push(contribution);
    }
    let empty: Vec<&Contribution> = Vec::new();

    let mut aggregates = Vec::with_capacity(gold.len());
    let mut mv_decisions: BTreeMap<String, FocalSet> = BTreeMap::new();
    for record in gold {
        let subset = per_question
            .get(record.question_id.as_str())
            .unwrap_or(&empty);
        aggregates.push(split_and_average(
            &record.question_id,
            subset.iter().copied(),
            frame,
        )?);
        mv_decisions.insert(
            record.question_id.clone(),
            majority_vote(subset.iter().copied(), frame, tol)?,
        );
    }

    let mut error_rates = Vec::with_capacity(grid.len());
    for &lambda in grid {
        let mut decisions: BTreeMap<String, FocalSet> = BTreeMap::new();
        for aggregate in &aggregates {
            let mass = lambda_aggregate(aggregate, lambda)?;
            decisions.insert(aggregate.question_id.clone(), decide_answer(&mass, tol)?);
        }
        error_rates.push(error_rate(&decisions, gold)?);
    }

    Ok(ErrorCurve {
        group_label: label,
        lambda_grid: grid.to_vec(),
        error_rates,
        mv_error: error_rate(&mv_decisions, gold)?,
    })
}

/// Builds contributor groups from profiling results. Membership is by
/// strict argmax: a contributor tied between the two sides of a binary
/// axis, or between profiles, belongs to no group of that grouping.
pub fn profile_groups(
    profiles: &[ContributorProfile],
    grouping: Grouping,
    tol: f64,
) -> Vec<ContributorGroup> {
    match grouping {
        Grouping::All => vec![ContributorGroup {
            label: "All".to_string(),
            members: profiles.iter().map(|p| p.contributor_id.clone()).collect(),
        }],
        Grouping::Precision | Grouping::Reflection => {
            let labels: [&str; 2] = if grouping == Grouping::Precision {
                ["P", "NP"]
            } else {
                ["R", "NR"]
            };
            let mut groups: Vec<ContributorGroup> = labels
                .iter()
                .map(|l| ContributorGroup {
                    label: l.to_string(),
                    members: BTreeSet::new(),
                })
                .collect();
            for profile in profiles {
                let mass = if grouping == Grouping::Precision {
                    &profile.qualification.mass_omega2
                } else {
                    &profile.reflection.mass_omega3
                };
                let argmax = mass
                    .pignistic()
                    .expect("channel masses are normalized")
                    .argmax(tol);
                if argmax.len() == 1 {
                    let index = argmax.indices().next().expect("non-empty argmax");
                    groups[index].members.insert(profile.contributor_id.clone());
                }
            }
            groups
        }
        Grouping::Profile => {
            let mut groups: Vec<ContributorGroup> = Profile::ALL
                .iter()
                .map(|p| ContributorGroup {
                    label: p.label().to_string(),
                    members: BTreeSet::new(),
                })
                .collect();
            for profile in profiles {
                if profile.decision.len() == 1 {
                    let decided = *profile.decision.iter().next().expect("singleton");
                    let position = Profile::ALL.iter().position(|p| *p == decided);
                    groups[position.expect("known profile")]
                        .members
                        .insert(profile.contributor_id.clone());
                }
            }
            groups
        }
    }
}

//! Belief-function toolkit for crowdsourcing campaigns.
//!
//! Answers are modelled as mass functions over a frame of answer options.
//! From the imprecision of a contributor's answers and from their response
//! times, the toolkit estimates a behavioural profile (expert, fuzzy,
//! categorical or spammer) and aggregates answers per question with a
//! lambda-weighted evidential scheme that can be benchmarked against
//! majority vote on gold questions.
//!
//! Modules:
//! - [`belief`]: frames, focal sets, mass functions, combination rules,
//!   discounting, vacuous extension and the pignistic transform.
//! - [`profile`]: the three evidence channels (confidence, imprecision,
//!   reflection) and the profile decision on the joint frame.
//! - [`aggregate`]: per-question aggregation, majority vote and gold-data
//!   error-rate sweeps over the lambda grid.
//! - [`campaign`]: campaign file formats (config, contributions, gold) and
//!   result serialization.
//! - [`sim`]: seeded synthetic-campaign generation for the four contributor
//!   archetypes.
//!
//! ```
//! use crowdbelief::belief::{combine_yager, Frame, MassFunction};
//!
//! let frame = Frame::new(["a", "b", "c"])?;
//! let one = MassFunction::simple_support(&frame, frame.singleton(0)?, 0.7)?;
//! let two = MassFunction::simple_support(&frame, frame.singleton(1)?, 0.6)?;
//! let fused = combine_yager(&[one, two])?;
//! let best = fused.pignistic()?.argmax(1e-9);
//! assert_eq!(frame.set_label(&best), "a");
//! # Ok::<(), crowdbelief::Error>(())
//! ```

pub mod aggregate;
pub mod belief;
pub mod campaign;
pub mod error;
pub mod profile;
pub mod sim;

pub use aggregate::{ContributorGroup, ErrorCurve, GoldRecord, Grouping, QuestionAggregate};
pub use belief::{
    combine_conjunctive, combine_yager, mean_mass, FocalSet, Frame, MassFunction,
    PignisticDistribution, Position,
};
pub use campaign::{CampaignConfig, CampaignData, ConfidenceLevel, OutputFormat};
pub use error::{Error, Result};
pub use profile::{
    Contribution, ContributorProfile, Profile, QualificationEvidence, ReflectionEvidence,
};
pub use sim::{ArchetypeSpec, ConfidenceBehavior, SimSpec, SyntheticCampaign};

//! Command-line front end: ingestion, profiling, aggregation and evaluation.
//!
//! Exit codes: 0 success, 1 validation error, 2 I/O error, 64 usage error.
//! The human-readable table on standard output is informational only; the
//! files written through `--out` are the stable interface.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crowdbelief::aggregate::{
    decide_answer, lambda_aggregate, lambda_sweep, profile_groups, split_and_average, Grouping,
};
use crowdbelief::campaign::{
    self, expected_times, load_config, load_contributions, load_gold, profile_records, CurveRecord,
    OutputFormat, QuestionRecord,
};
use crowdbelief::profile::{profile_contributor, Contribution};
use crowdbelief::sim::{generate, SimSpec};
use crowdbelief::{CampaignConfig, ContributorProfile, Error};

const EXIT_VALIDATION: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_USAGE: u8 = 64;

// stdout may be a pipe that closes early (e.g. `| head`); that must not
// bring the command down after its output files are already written
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(
    name = "crowdbelief",
    version,
    about = "Belief-function profiling and evidential aggregation for crowdsourcing campaigns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(value: FormatArg) -> Self {
        match value {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GroupsArg {
    All,
    Precision,
    Reflection,
    Profile,
}

impl From<GroupsArg> for Grouping {
    fn from(value: GroupsArg) -> Self {
        match value {
            GroupsArg::All => Grouping::All,
            GroupsArg::Precision => Grouping::Precision,
            GroupsArg::Reflection => Grouping::Reflection,
            GroupsArg::Profile => Grouping::Profile,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Estimate each contributor's profile from imprecision and timing
    Profile {
        /// Contributions CSV
        #[arg(long)]
        contributions: PathBuf,
        /// Gold CSV; supplies the expected time per question
        #[arg(long)]
        gold: PathBuf,
        /// Campaign config TOML
        #[arg(long)]
        config: PathBuf,
        /// Output file
        #[arg(long)]
        out: PathBuf,
        /// Output format
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Aggregate answers per question at one lambda
    Aggregate {
        #[arg(long)]
        contributions: PathBuf,
        #[arg(long)]
        config: PathBuf,
        /// Weight of the precise side, in [0, 1]
        #[arg(long, value_parser = parse_lambda)]
        lambda: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sweep lambda on gold questions and compare against majority vote
    Evaluate {
        #[arg(long)]
        contributions: PathBuf,
        #[arg(long)]
        gold: PathBuf,
        #[arg(long)]
        config: PathBuf,
        /// Contributor grouping for the curves
        #[arg(long, value_enum, default_value_t = GroupsArg::All)]
        groups: GroupsArg,
        /// Output CSV
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a synthetic campaign
    Simulate {
        /// Simulation spec TOML; defaults cover the four archetypes
        #[arg(long)]
        spec: Option<PathBuf>,
        /// RNG seed; drawn and printed when omitted
        #[arg(long)]
        seed: Option<u64>,
        /// Directory for the generated files
        #[arg(long)]
        out_dir: PathBuf,
    },
}

fn parse_lambda(value: &str) -> Result<f64, String> {
    let lambda: f64 = value
        .parse()
        .map_err(|_| format!("\"{value}\" is not a number"))?;
    if (0.0..=1.0).contains(&lambda) && !lambda.is_nan() {
        Ok(lambda)
    } else {
        Err(format!("lambda must lie in [0, 1], got {lambda}"))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_io() { EXIT_IO } else { EXIT_VALIDATION })
        }
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Profile {
            contributions,
            gold,
            config,
            out,
            format,
        } => cmd_profile(&contributions, &gold, &config, &out, format.into()),
        Command::Aggregate {
            contributions,
            config,
            lambda,
            out,
        } => cmd_aggregate(&contributions, &config, lambda, &out),
        Command::Evaluate {
            contributions,
            gold,
            config,
            groups,
            out,
        } => cmd_evaluate(&contributions, &gold, &config, groups.into(), &out),
        Command::Simulate {
            spec,
            seed,
            out_dir,
        } => cmd_simulate(spec.as_deref(), seed, &out_dir),
    }
}

fn group_by_contributor(contributions: &[Contribution]) -> BTreeMap<&str, Vec<Contribution>> {
    let mut by_id: BTreeMap<&str, Vec<Contribution>> = BTreeMap::new();
    for contribution in contributions {
        by_id
            .entry(contribution.contributor_id.as_str())
            .or_default()
            .push(contribution.clone());
    }
    by_id
}

fn profile_all(
    config: &CampaignConfig,
    contributions: &[Contribution],
    gold_times: &BTreeMap<String, f64>,
) -> Result<Vec<ContributorProfile>, Error> {
    let frame = config.frame();
    group_by_contributor(contributions)
        .iter()
        .map(|(id, contribs)| {
            profile_contributor(
                id,
                contribs,
                &frame,
                gold_times,
                config.beta,
                config.eta,
                config.argmax_tol,
            )
        })
        .collect()
}

fn cmd_profile(
    contributions: &Path,
    gold: &Path,
    config: &Path,
    out: &Path,
    format: OutputFormat,
) -> Result<(), Error> {
    let config = load_config(config)?;
    let contributions = load_contributions(contributions, &config)?;
    let gold = load_gold(gold, &config)?;
    let times = expected_times(&gold);
    let profiles = profile_all(&config, &contributions, &times)?;
    let records = profile_records(&profiles);
    campaign::write_profiles(out, &records, &config, format)?;

    say!("{:<16} {:>8}  {}", "contributor", "ip_c", "decision");
    for record in &records {
        say!(
            "{:<16} {:>8.4}  {}",
            record.contributor_id,
            record.ip_c,
            record.decision.join("|")
        );
    }
    say!(
        "profiled {} contributor(s) -> {}",
        records.len(),
        out.display()
    );
    Ok(())
}

fn cmd_aggregate(
    contributions: &Path,
    config: &Path,
    lambda: f64,
    out: &Path,
) -> Result<(), Error> {
    let config = load_config(config)?;
    let frame = config.frame();
    let contributions = load_contributions(contributions, &config)?;

    let mut per_question: BTreeMap<&str, Vec<&Contribution>> = BTreeMap::new();
    for contribution in &contributions {
        per_question
            .entry(contribution.question_id.as_str())
            .or_default()
            .push(contribution);
    }
    let mut records = Vec::with_capacity(per_question.len());
    for (question_id, contribs) in &per_question {
        let aggregate = split_and_average(question_id, contribs.iter().copied(), &frame)?;
        let mass = lambda_aggregate(&aggregate, lambda)?;
        let decision = decide_answer(&mass, config.argmax_tol)?;
        records.push(QuestionRecord::new(&aggregate, &mass, &decision)?);
    }
    campaign::write_aggregates(out, &records, &config, lambda, OutputFormat::Csv)?;

    say!(
        "{:<12} {:>9} {:>11}  {}",
        "question",
        "n_precise",
        "n_imprecise",
        "decision"
    );
    for record in &records {
        say!(
            "{:<12} {:>9} {:>11}  {}",
            record.question_id,
            record.n_precise,
            record.n_imprecise,
            record.decision.join(";")
        );
    }
    say!(
        "aggregated {} question(s) at lambda = {lambda} -> {}",
        records.len(),
        out.display()
    );
    Ok(())
}

fn cmd_evaluate(
    contributions: &Path,
    gold: &Path,
    config: &Path,
    grouping: Grouping,
    out: &Path,
) -> Result<(), Error> {
    let config = load_config(config)?;
    let frame = config.frame();
    let contributions = load_contributions(contributions, &config)?;
    let gold = load_gold(gold, &config)?;
    if gold.is_empty() {
        return Err(Error::EmptyGold);
    }

    let groups = match grouping {
        Grouping::All => vec![None],
        _ => {
            let times = expected_times(&gold);
            let profiles = profile_all(&config, &contributions, &times)?;
            profile_groups(&profiles, grouping, config.argmax_tol)
                .into_iter()
                .map(Some)
                .collect()
        }
    };

    let mut records = Vec::with_capacity(groups.len());
    for group in &groups {
        let label = group.as_ref().map_or("All", |g| g.label.as_str());
        // a group nobody belongs to is reported, not fatal
        if group.as_ref().is_some_and(|g| g.members.is_empty()) {
            eprintln!("warning: group \"{label}\" selects no contributors");
            records.push(CurveRecord::empty_group(label));
            continue;
        }
        let curve = lambda_sweep(
            &contributions,
            &frame,
            &gold,
            &config.lambda_grid,
            group.as_ref(),
            config.argmax_tol,
        )?;
        records.push(CurveRecord::from_curve(&curve));
    }
    campaign::write_curves(out, &records)?;

    say!(
        "{:<14} {:>7} {:>11} {:>9}",
        "group",
        "lambda",
        "error_rate",
        "mv_error"
    );
    for record in &records {
        match (&record.error_rates, record.mv_error) {
            (Some(rates), Some(mv)) => {
                for (lambda, rate) in record.lambda_grid.iter().zip(rates) {
                    say!(
                        "{:<14} {:>7.2} {:>11.4} {:>9.4}",
                        record.group,
                        lambda,
                        rate,
                        mv
                    );
                }
            }
            _ => say!("{:<14} {:>7} {:>11} {:>9}", record.group, "-", "-", "-"),
        }
    }
    say!(
        "evaluated {} group(s) on {} gold question(s) -> {}",
        records.len(),
        gold.len(),
        out.display()
    );
    Ok(())
}

fn cmd_simulate(spec: Option<&Path>, seed: Option<u64>, out_dir: &Path) -> Result<(), Error> {
    let spec = match spec {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
                path: path.to_path_buf(),
                source: e,
            })?;
            crowdbelief::sim::parse_spec(&text).map_err(|message| Error::Parse {
                path: path.to_path_buf(),
                message,
            })?
        }
        None => SimSpec::default(),
    };
    let seed = seed.unwrap_or_else(rand::random);
    say!("seed: {seed}");

    let campaign_data = generate(&spec, seed)?;
    std::fs::create_dir_all(out_dir).map_err(|e| Error::Io {
        path: out_dir.to_path_buf(),
        source: e,
    })?;

    let config = &campaign_data.data.config;
    let contributions_path = out_dir.join("contributions.csv");
    campaign::write_contributions(
        &contributions_path,
        &campaign_data.data.contributions,
        config,
    )?;
    let gold_path = out_dir.join("gold.csv");
    campaign::write_gold(&gold_path, &campaign_data.data.gold, config)?;

    let truth_path = out_dir.join("truth.csv");
    let mut truth = String::from("question_id,true_answer\n");
    for (question_id, answer) in &campaign_data.truth {
        truth.push_str(&format!(
            "{question_id},{}\n",
            config.answer_labels[*answer]
        ));
    }
    std::fs::write(&truth_path, truth).map_err(|e| Error::Io {
        path: truth_path.clone(),
        source: e,
    })?;

    let intended_path = out_dir.join("intended_profiles.csv");
    let mut intended = String::from("contributor_id,profile\n");
    for (contributor_id, profile) in &campaign_data.intended {
        intended.push_str(&format!("{contributor_id},{profile}\n"));
    }
    std::fs::write(&intended_path, intended).map_err(|e| Error::Io {
        path: intended_path.clone(),
        source: e,
    })?;

    // config echo so the generated campaign can be fed straight back in
    let config_path = out_dir.join("campaign.toml");
    campaign::write_config(&config_path, config)?;

    for path in [
        &contributions_path,
        &gold_path,
        &truth_path,
        &intended_path,
        &config_path,
    ] {
        say!("wrote {}", path.display());
    }
    Ok(())
}

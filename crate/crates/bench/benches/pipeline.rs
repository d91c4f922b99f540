//! Benchmarks for the hot paths: combination on the answer frame,
//! per-contributor profiling and the full lambda sweep.

use std::collections::BTreeMap;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crowdbelief::aggregate::lambda_sweep;
use crowdbelief::belief::{combine_yager, FocalSet, Frame, MassFunction};
use crowdbelief::campaign::expected_times;
use crowdbelief::profile::{profile_contributor, Contribution};
use crowdbelief::sim::{generate, SimSpec};

fn random_masses(rng: &mut ChaCha8Rng, frame: &Frame, count: usize) -> Vec<MassFunction> {
    let n = frame.len();
    let full = (1u32 << n) - 1;
    (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=4usize.min(full as usize));
            let mut entries = Vec::with_capacity(k);
            let mut total = 0.0;
            let weights: Vec<f64> = (0..k).map(|_| rng.gen_range(0.05..1.0)).collect();
            for w in &weights {
                total += w;
            }
            let mut used = Vec::new();
            for w in weights {
                let mut mask = rng.gen_range(1..=full);
                while used.contains(&mask) {
                    mask = rng.gen_range(1..=full);
                }
                used.push(mask);
                entries.push((FocalSet::from_bits(n, mask).unwrap(), w / total));
            }
            MassFunction::new(frame.clone(), entries).unwrap()
        })
        .collect()
}

fn bench_combination(c: &mut Criterion) {
    let frame = Frame::new(["a", "b", "c", "d", "e"]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    c.bench_function("yager_combine_3_sources_5_options", |b| {
        b.iter_batched(
            || random_masses(&mut rng, &frame, 3),
            |sources| combine_yager(&sources).unwrap(),
            BatchSize::SmallInput,
        )
    });
}

fn campaign_inputs() -> (
    crowdbelief::CampaignConfig,
    Vec<Contribution>,
    Vec<crowdbelief::GoldRecord>,
    BTreeMap<String, f64>,
) {
    let campaign = generate(&SimSpec::default(), 7).unwrap();
    let times = expected_times(&campaign.data.gold);
    (
        campaign.data.config,
        campaign.data.contributions,
        campaign.data.gold,
        times,
    )
}

fn bench_profiling(c: &mut Criterion) {
    let (config, contributions, _, times) = campaign_inputs();
    let frame = config.frame();
    let one_contributor: Vec<Contribution> = contributions
        .iter()
        .filter(|x| x.contributor_id == "fuzzy_00")
        .cloned()
        .collect();
    c.bench_function("profile_one_contributor_48_answers", |b| {
        b.iter(|| {
            profile_contributor(
                "fuzzy_00",
                &one_contributor,
                &frame,
                &times,
                config.beta,
                config.eta,
                config.argmax_tol,
            )
            .unwrap()
        })
    });
}

fn bench_sweep(c: &mut Criterion) {
    let (config, contributions, gold, _) = campaign_inputs();
    let frame = config.frame();
    c.bench_function("lambda_sweep_default_grid_40_contributors", |b| {
        b.iter(|| {
            lambda_sweep(
                &contributions,
                &frame,
                &gold,
                &config.lambda_grid,
                None,
                config.argmax_tol,
            )
            .unwrap()
        })
    });
}

criterion_group!(benches, bench_combination, bench_profiling, bench_sweep);
criterion_main!(benches);

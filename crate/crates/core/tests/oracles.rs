//! Statistical and exact cross-checks against independent reference
//! computations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use scp_cro::bench::brute_force_optimum;
use scp_cro::engine::{self, Params, Variant};
use scp_cro::ga::{run_hga, GaParams};
use scp_cro::instance::{is_feasible_cover, Incidence};
use scp_cro::operators::{greedy_solve, random_pick_init, synthesize_with_costs};
use scp_cro::orlib::{generate_with_report, GeneratorConfig};
use scp_cro::{Instance, Solution};

/// Straight transcription of the random pick walk: rows in random order, an
/// uncovered row picks a uniform covering column, a covered row takes the
/// smallest-index picked column covering it.
fn reference_random_pick(inst: &Instance, rng: &mut impl Rng) -> Vec<usize> {
    let mut order: Vec<usize> = (0..inst.rows()).collect();
    order.shuffle(rng);
    let mut picked: Vec<usize> = Vec::new();
    let mut out = vec![usize::MAX; inst.rows()];
    for i in order {
        let covering: Vec<usize> = picked
            .iter()
            .copied()
            .filter(|&j| inst.rows_covered_by(j).contains(&i))
            .collect();
        out[i] = match covering.iter().min() {
            Some(&j) => j,
            None => {
                let cols = inst.cols_covering(i);
                let j = cols[rng.gen_range(0..cols.len())];
                picked.push(j);
                j
            }
        };
    }
    out
}

#[test]
fn random_pick_marginals_match_reference() {
    let inst = scp_cro::orlib::generate_random(6, 8, 0.4, 1, 10, 21).unwrap();
    let draws = 40_000;
    let mut ours = vec![vec![0u32; inst.columns()]; inst.rows()];
    let mut theirs = ours.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut rng_ref = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..draws {
        for (i, &j) in random_pick_init(&inst, &mut rng)
            .assignment()
            .iter()
            .enumerate()
        {
            ours[i][j] += 1;
        }
        for (i, j) in reference_random_pick(&inst, &mut rng_ref)
            .into_iter()
            .enumerate()
        {
            theirs[i][j] += 1;
        }
    }
    for i in 0..inst.rows() {
        for j in 0..inst.columns() {
            let a = f64::from(ours[i][j]) / draws as f64;
            let b = f64::from(theirs[i][j]) / draws as f64;
            assert!((a - b).abs() < 0.02, "row {i} column {j}: {a} vs {b}");
        }
    }
}

#[test]
fn synthesis_donor_frequency_chi_square() {
    let n = 10_000;
    let inst = Instance::new(n, 2, vec![1, 1], Incidence::Rows(vec![vec![0, 1]; n])).unwrap();
    let s1 = Solution::new(&inst, vec![0; n]).unwrap();
    let s2 = Solution::new(&inst, vec![1; n]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let child = synthesize_with_costs(&s1, 10, &s2, 30, &mut rng);
    let from_first = child.assignment().iter().filter(|&&j| j == 0).count() as f64;
    let expected = [0.75 * n as f64, 0.25 * n as f64];
    let observed = [from_first, n as f64 - from_first];
    let stat: f64 = observed
        .iter()
        .zip(expected)
        .map(|(o, e)| (o - e) * (o - e) / e)
        .sum();
    let p = 1.0 - ChiSquared::new(1.0).unwrap().cdf(stat);
    assert!(p > 0.01, "chi2 {stat}, p {p}");
}

#[test]
fn generator_density() {
    let (inst, report) = generate_with_report(&GeneratorConfig {
        m: 200,
        n: 300,
        density: 0.3,
        cost_lo: 1,
        cost_hi: 100,
        seed: 5,
    })
    .unwrap();
    assert!((inst.density() - 0.3).abs() < 0.05, "{}", inst.density());
    assert_eq!(report.patched_rows, 0);
    assert!(inst.costs().iter().all(|&c| (1..=100).contains(&c)));
}

#[test]
fn oracle_dominates_everything_on_tiny_instances() {
    for seed in 0..50 {
        let inst = scp_cro::orlib::generate_random(8, 12, 0.3, 1, 100, 1000 + seed).unwrap();
        let (opt, cover) = brute_force_optimum(&inst).unwrap();
        assert!(is_feasible_cover(&inst, cover.columns()));
        assert!(greedy_solve(&inst).cost(&inst) >= opt);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            let s = random_pick_init(&inst, &mut rng);
            assert!(s.cost(&inst) >= opt);
        }
        let params = Params {
            fe_limit: Some(600),
            ..Params::default()
        };
        for v in [Variant::Hcro, Variant::HcroIr, Variant::HcroNr] {
            assert!(engine::run(&inst, &params, seed, v).unwrap().best_cost >= opt);
        }
        let ga = GaParams {
            fe_limit: Some(600),
            ..GaParams::default()
        };
        assert!(run_hga(&inst, &ga, seed).unwrap().best_cost >= opt);
    }
}

#[test]
fn tiny_instance_generous_budget_reaches_optimum() {
    let inst = scp_cro::orlib::generate_random(8, 12, 0.3, 1, 100, 4242).unwrap();
    let (opt, _) = brute_force_optimum(&inst).unwrap();
    for v in [Variant::Hcro, Variant::HcroIr, Variant::HcroNr] {
        let best = (0..5)
            .map(|s| {
                engine::run(&inst, &Params::default(), s, v)
                    .unwrap()
                    .best_cost
            })
            .min()
            .unwrap();
        assert_eq!(best, opt, "{v:?}");
    }
    let best = (0..5)
        .map(|s| run_hga(&inst, &GaParams::default(), s).unwrap().best_cost)
        .min()
        .unwrap();
    assert_eq!(best, opt);
}

#[test]
fn conservation_on_large_sparse_instance() {
    let inst = scp_cro::orlib::generate_random(200, 1000, 0.05, 1, 100, 61).unwrap();
    let params = Params {
        fe_limit: Some(100_000),
        ..Params::default()
    };
    let mut engine = engine::Engine::new(&inst, params, Variant::Hcro, 1).unwrap();
    let total = engine.total_energy();
    let mut steps = 0;
    engine.run_observed(|e, _| {
        assert_eq!(e.total_energy(), total);
        steps += 1;
    });
    assert!(steps > 1000);
}

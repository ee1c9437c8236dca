use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{self, Params, ReactionCounts, RunResult, Variant};
use crate::error::{Error, Result};
use crate::ga::{run_hga, GaParams};
use crate::instance::{is_feasible_cover, remove_redundancy, Cost, Instance, Solution};
use crate::operators::greedy_solve;

use super::gap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Hcro,
    HcroIr,
    HcroNr,
    Hga,
    Greedy,
}

impl Algorithm {
    pub fn variant(self) -> Option<Variant> {
        match self {
            Algorithm::Hcro => Some(Variant::Hcro),
            Algorithm::HcroIr => Some(Variant::HcroIr),
            Algorithm::HcroNr => Some(Variant::HcroNr),
            Algorithm::Hga | Algorithm::Greedy => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Hcro => "hcro",
            Algorithm::HcroIr => "hcro-ir",
            Algorithm::HcroNr => "hcro-nr",
            Algorithm::Hga => "hga",
            Algorithm::Greedy => "greedy",
        }
    }

    pub fn is_deterministic(self) -> bool {
        self == Algorithm::Greedy
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hcro" => Ok(Algorithm::Hcro),
            "hcro-ir" => Ok(Algorithm::HcroIr),
            "hcro-nr" => Ok(Algorithm::HcroNr),
            "hga" => Ok(Algorithm::Hga),
            "greedy" => Ok(Algorithm::Greedy),
            other => Err(Error::InvalidParam(format!("unknown algorithm {other:?}"))),
        }
    }
}

/// Everything needed to run one trial apart from the instance and seed.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgoConfig {
    pub algorithm: Algorithm,
    pub params: Params,
    pub ga: GaParams,
    pub redundancy_removal: bool,
}

impl AlgoConfig {
    pub fn new(algorithm: Algorithm) -> Self {
        AlgoConfig {
            algorithm,
            params: Params::default(),
            ga: GaParams::default(),
            redundancy_removal: false,
        }
    }

    /// Sets the budget for both the engine and the GA.
    pub fn with_fe_limit(mut self, fe_limit: Option<u64>) -> Self {
        self.params.fe_limit = fe_limit;
        self.ga.fe_limit = fe_limit;
        self
    }
}

/// One trial. The returned cover is checked for feasibility.
pub fn run_once(instance: &Instance, cfg: &AlgoConfig, seed: u64) -> Result<RunResult> {
    let mut result = match cfg.algorithm {
        Algorithm::Greedy => {
            let start = std::time::Instant::now();
            let cover = greedy_solve(instance);
            let solution = solution_from_cover(instance, cover.columns());
            RunResult {
                best_cost: cover.cost(instance),
                best_cover: cover,
                best_solution: solution,
                fe_used: 0,
                reaction_counts: ReactionCounts::default(),
                wall_time: start.elapsed(),
            }
        }
        Algorithm::Hga => run_hga(instance, &cfg.ga, seed)?,
        algo => engine::run(
            instance,
            &cfg.params,
            seed,
            algo.variant().expect("engine variant"),
        )?,
    };
    if cfg.redundancy_removal {
        // Separate stream so toggling the flag never changes the search.
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0fc0_ffee);
        let pruned = remove_redundancy(instance, &result.best_solution, &mut rng);
        result.best_cover = pruned.to_cover();
        result.best_cost = result.best_cover.cost(instance);
        result.best_solution = pruned;
    }
    if !is_feasible_cover(instance, result.best_cover.columns()) {
        return Err(Error::NotACover);
    }
    Ok(result)
}

/// Each row takes the lowest-index cover column covering it.
pub fn solution_from_cover(instance: &Instance, columns: &[usize]) -> Solution {
    let assignment = (0..instance.rows())
        .map(|i| {
            *instance
                .cols_covering(i)
                .iter()
                .find(|j| columns.binary_search(j).is_ok())
                .expect("cover is feasible")
        })
        .collect();
    Solution::from_raw(assignment)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialStats {
    pub instance_name: String,
    pub algorithm: Algorithm,
    pub bks: Option<Cost>,
    /// Trials reaching the BKS.
    pub opt_count: Option<usize>,
    pub best: Cost,
    pub mean: f64,
    pub worst: Cost,
    pub pct_best: Option<f64>,
    pub pct_mean: Option<f64>,
    pub pct_worst: Option<f64>,
    pub trials: usize,
    pub seeds: Vec<u64>,
    pub costs: Vec<Cost>,
    pub fe_used: Vec<u64>,
    /// One-based columns of the best cover.
    pub best_cover: Vec<usize>,
}

/// Runs seeds `base_seed .. base_seed + trials` in parallel. Results are
/// collected in seed order, so the statistics do not depend on scheduling.
/// A deterministic algorithm runs once.
pub fn run_trials(
    instance: &Instance,
    instance_name: &str,
    cfg: &AlgoConfig,
    trials: usize,
    base_seed: u64,
    bks: Option<Cost>,
) -> Result<TrialStats> {
    if trials == 0 {
        return Err(Error::InvalidParam("trials must be at least 1".into()));
    }
    let trials = if cfg.algorithm.is_deterministic() {
        1
    } else {
        trials
    };
    let seeds: Vec<u64> = (0..trials as u64)
        .map(|k| base_seed.wrapping_add(k))
        .collect();
    let results: Vec<RunResult> = seeds
        .par_iter()
        .map(|&s| run_once(instance, cfg, s))
        .collect::<Result<_>>()?;
    Ok(aggregate(
        instance_name,
        cfg.algorithm,
        bks,
        seeds,
        &results,
    ))
}

pub fn aggregate(
    instance_name: &str,
    algorithm: Algorithm,
    bks: Option<Cost>,
    seeds: Vec<u64>,
    results: &[RunResult],
) -> TrialStats {
    let costs: Vec<Cost> = results.iter().map(|r| r.best_cost).collect();
    let best_idx = (0..costs.len())
        .min_by_key(|&k| costs[k])
        .expect("at least one trial");
    let best = costs[best_idx];
    let worst = *costs.iter().max().expect("at least one trial");
    let mean = costs.iter().sum::<Cost>() as f64 / costs.len() as f64;
    TrialStats {
        instance_name: instance_name.to_string(),
        algorithm,
        bks,
        opt_count: bks.map(|b| costs.iter().filter(|&&c| c <= b).count()),
        best,
        mean,
        worst,
        pct_best: bks.map(|b| gap(best as f64, b)),
        pct_mean: bks.map(|b| gap(mean, b)),
        pct_worst: bks.map(|b| gap(worst as f64, b)),
        trials: costs.len(),
        fe_used: results.iter().map(|r| r.fe_used).collect(),
        best_cover: results[best_idx].best_cover.one_based(),
        seeds,
        costs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orlib::generate_random;

    #[test]
    fn single_trial_collapses_statistics() {
        let inst = generate_random(10, 20, 0.3, 1, 100, 1).unwrap();
        let cfg = AlgoConfig::new(Algorithm::Hcro).with_fe_limit(Some(500));
        let s = run_trials(&inst, "rand", &cfg, 1, 7, None).unwrap();
        assert_eq!(s.best as f64, s.mean);
        assert_eq!(s.best, s.worst);
        assert_eq!(s.opt_count, None);
    }

    #[test]
    fn greedy_runs_once() {
        let inst = generate_random(10, 20, 0.3, 1, 100, 1).unwrap();
        let cfg = AlgoConfig::new(Algorithm::Greedy);
        let s = run_trials(&inst, "rand", &cfg, 25, 0, Some(1)).unwrap();
        assert_eq!(s.trials, 1);
        assert_eq!(s.opt_count, Some(0));
    }

    #[test]
    fn parallel_runs_match_sequential() {
        let inst = generate_random(15, 25, 0.2, 1, 100, 2).unwrap();
        let cfg = AlgoConfig::new(Algorithm::HcroIr).with_fe_limit(Some(800));
        let s = run_trials(&inst, "rand", &cfg, 6, 100, None).unwrap();
        for (k, seed) in s.seeds.iter().enumerate() {
            assert_eq!(run_once(&inst, &cfg, *seed).unwrap().best_cost, s.costs[k]);
        }
        assert!(s.best as f64 <= s.mean && s.mean <= s.worst as f64);
    }

    #[test]
    fn redundancy_removal_never_costs_more() {
        let inst = generate_random(15, 25, 0.3, 1, 100, 5).unwrap();
        let off = AlgoConfig::new(Algorithm::Hcro).with_fe_limit(Some(300));
        let on = AlgoConfig {
            redundancy_removal: true,
            ..off.clone()
        };
        for seed in 0..5 {
            let a = run_once(&inst, &off, seed).unwrap();
            let b = run_once(&inst, &on, seed).unwrap();
            assert!(b.best_cost <= a.best_cost);
        }
    }
}

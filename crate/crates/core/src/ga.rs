//! Heuristic genetic algorithm sharing the CRO operators.
//!
//! Crossover applies the perturbation heuristic to both parents of a pair
//! (the inter-molecular collision structure step). Mutation decomposes an
//! individual and keeps the cheaper product. Survivors are the `pop_size`
//! cheapest of parents and offspring.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::engine::{ReactionCounts, RunResult, FE_PER_COLUMN};
use crate::error::{Error, Result};
use crate::instance::{evaluate_cost, Cost, Instance, Solution};
use crate::operators::{decompose, perturbation_search, reverse_cumulative_init};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaParams {
    pub pop_size: usize,
    pub crossover_rate: f64,
    pub mutation_rate: f64,
    /// `None` means `n * 1000`.
    pub fe_limit: Option<u64>,
}

impl Default for GaParams {
    fn default() -> Self {
        GaParams {
            pop_size: 10,
            crossover_rate: 0.8,
            mutation_rate: 0.2,
            fe_limit: None,
        }
    }
}

impl GaParams {
    pub fn validate(&self) -> Result<()> {
        if self.pop_size == 0 {
            return Err(Error::InvalidParam("pop_size must be at least 1".into()));
        }
        for (name, v) in [
            ("crossover_rate", self.crossover_rate),
            ("mutation_rate", self.mutation_rate),
        ] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidParam(format!(
                    "{name} must lie in [0, 1], got {v}"
                )));
            }
        }
        Ok(())
    }
}

struct Ga<'a> {
    instance: &'a Instance,
    fe: u64,
    limit: u64,
    best: (Cost, Solution),
}

impl Ga<'_> {
    fn evaluate(&mut self, s: Solution) -> (Cost, Solution) {
        self.fe += 1;
        let c = evaluate_cost(self.instance, &s);
        if c < self.best.0 {
            self.best = (c, s.clone());
        }
        (c, s)
    }

    fn exhausted(&self) -> bool {
        self.fe >= self.limit
    }
}

pub fn run_hga(instance: &Instance, params: &GaParams, seed: u64) -> Result<RunResult> {
    params.validate()?;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let limit = params
        .fe_limit
        .unwrap_or(instance.columns() as u64 * FE_PER_COLUMN);

    let first = reverse_cumulative_init(instance, &mut rng);
    let first_cost = evaluate_cost(instance, &first);
    let mut ga = Ga {
        instance,
        fe: 1,
        limit,
        best: (first_cost, first.clone()),
    };
    let mut population = vec![(first_cost, first)];
    for _ in 1..params.pop_size {
        let s = reverse_cumulative_init(instance, &mut rng);
        let ind = ga.evaluate(s);
        population.push(ind);
    }

    let static_population = params.crossover_rate == 0.0 && params.mutation_rate == 0.0;
    'generations: while !static_population && !ga.exhausted() {
        let mut order: Vec<usize> = (0..population.len()).collect();
        order.shuffle(&mut rng);

        let mut offspring: Vec<(Cost, Solution)> = Vec::new();
        for pair in order.chunks(2) {
            let [a, b] = pair else { continue };
            if rng.gen::<f64>() < params.crossover_rate {
                if ga.exhausted() {
                    break 'generations;
                }
                let c1 = perturbation_search(instance, &population[*a].1, &mut rng);
                let c2 = perturbation_search(instance, &population[*b].1, &mut rng);
                offspring.push(ga.evaluate(c1));
                offspring.push(ga.evaluate(c2));
            }
        }

        // Individuals that did not cross over are mutation candidates too,
        // as clones of their parent.
        let crossed = offspring.len();
        let mut candidates: Vec<(Cost, Solution)> = offspring.clone();
        candidates.extend(population.iter().cloned());
        let mut mutated = Vec::new();
        for (idx, ind) in candidates.iter().enumerate() {
            if rng.gen::<f64>() < params.mutation_rate {
                if ga.exhausted() {
                    break;
                }
                let (m1, m2) = decompose(instance, &ind.1, &mut rng);
                let e1 = ga.evaluate(m1);
                let e2 = ga.evaluate(m2);
                let better = if e2.0 < e1.0 { e2 } else { e1 };
                if idx < crossed {
                    offspring[idx] = better;
                } else {
                    mutated.push(better);
                }
            }
        }
        offspring.extend(mutated);

        population.extend(offspring);
        population.sort_by_key(|(c, _)| *c);
        population.truncate(params.pop_size);
    }

    let (best_cost, best_solution) = ga.best;
    Ok(RunResult {
        best_cost,
        best_cover: best_solution.to_cover(),
        best_solution,
        fe_used: ga.fe,
        reaction_counts: ReactionCounts::default(),
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orlib::generate_random;

    #[test]
    fn static_population_returns_initial_best() {
        let inst = generate_random(10, 20, 0.3, 1, 100, 6).unwrap();
        let params = GaParams {
            crossover_rate: 0.0,
            mutation_rate: 0.0,
            ..GaParams::default()
        };
        let result = run_hga(&inst, &params, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let initial_best = (0..10)
            .map(|_| evaluate_cost(&inst, &reverse_cumulative_init(&inst, &mut rng)))
            .min()
            .unwrap();
        assert_eq!(result.best_cost, initial_best);
        assert_eq!(result.fe_used, 10);
    }

    #[test]
    fn budget_is_respected() {
        let inst = generate_random(10, 20, 0.3, 1, 100, 6).unwrap();
        let params = GaParams {
            fe_limit: Some(500),
            ..GaParams::default()
        };
        let result = run_hga(&inst, &params, 1).unwrap();
        assert!(result.fe_used >= 500 && result.fe_used <= 502);
        assert_eq!(result.best_cost, result.best_cover.cost(&inst));
    }

    #[test]
    fn rejects_bad_rates() {
        let inst = generate_random(3, 3, 1.0, 1, 1, 0).unwrap();
        let params = GaParams {
            mutation_rate: 1.5,
            ..GaParams::default()
        };
        assert!(matches!(
            run_hga(&inst, &params, 0),
            Err(Error::InvalidParam(_))
        ));
    }
}

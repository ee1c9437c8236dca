//! Exact forms of the selection weights used by the operators.
//!
//! The operators sample from these distributions directly (integer weights
//! for the initializer, `f64` weights for repair). The exact rational forms
//! here are the reference they are checked against.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::Zero;

use crate::instance::{Cost, Instance, Solution};
use crate::operators::PartialSolution;

/// Reverse cumulative values `v_j = c_max + c_min - c_j` over one candidate
/// set. Cheaper columns get larger values.
pub fn reverse_values(costs: &[Cost]) -> Vec<Cost> {
    let (Some(&max), Some(&min)) = (costs.iter().max(), costs.iter().min()) else {
        return Vec::new();
    };
    costs.iter().map(|&c| max + min - c).collect()
}

/// `p_j = v_j / sum(v)`, exact.
pub fn reverse_probabilities(costs: &[Cost]) -> Vec<Ratio<u64>> {
    let values = reverse_values(costs);
    let total: u64 = values.iter().sum();
    values.into_iter().map(|v| Ratio::new(v, total)).collect()
}

/// Candidate columns of `row` with their reverse values and selection
/// probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct ReverseCumulative {
    pub columns: Vec<usize>,
    pub c_max: Cost,
    pub c_min: Cost,
    pub values: Vec<Cost>,
    pub probabilities: Vec<Ratio<u64>>,
}

impl ReverseCumulative {
    pub fn for_row(instance: &Instance, row: usize) -> Self {
        let columns = instance.cols_covering(row).to_vec();
        let costs: Vec<Cost> = columns.iter().map(|&j| instance.cost(j)).collect();
        ReverseCumulative {
            c_max: *costs.iter().max().expect("rows are never empty"),
            c_min: *costs.iter().min().expect("rows are never empty"),
            values: reverse_values(&costs),
            probabilities: reverse_probabilities(&costs),
            columns,
        }
    }
}

/// `p_k = e_k / sum(e)` over the given efficiencies, exact.
pub fn selection_probabilities(efficiencies: &[Ratio<u64>]) -> Vec<BigRational> {
    let big: Vec<BigRational> = efficiencies
        .iter()
        .map(|r| BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom())))
        .collect();
    let total = big.iter().fold(BigRational::zero(), |acc, r| acc + r);
    big.into_iter().map(|r| r / &total).collect()
}

/// Per-column quantities of the perturbation heuristic at one decision
/// point.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EfficiencyTable {
    /// `n_j`: positions assigned to column `j`.
    pub occurrences: BTreeMap<usize, u64>,
    /// `e^c_j = n_j / c_j`.
    pub cost_efficiency: BTreeMap<usize, Ratio<u64>>,
    /// `s_k`: blank positions whose row column `k` covers. Only `s_k > 0`.
    pub blanks_coverable: BTreeMap<usize, u64>,
    /// `e^r_k = s_k / c_k`.
    pub repair_efficiency: BTreeMap<usize, Ratio<u64>>,
    /// `p_k`, normalized over the repair candidates.
    pub selection_prob: BTreeMap<usize, BigRational>,
}

impl EfficiencyTable {
    pub fn for_solution(instance: &Instance, solution: &Solution) -> Self {
        let partial: PartialSolution = solution.assignment().iter().map(|&j| Some(j)).collect();
        Self::for_partial(instance, &partial)
    }

    pub fn for_partial(instance: &Instance, partial: &[Option<usize>]) -> Self {
        let mut table = EfficiencyTable::default();
        for (i, slot) in partial.iter().enumerate() {
            match *slot {
                Some(j) => *table.occurrences.entry(j).or_default() += 1,
                None => {
                    for &k in instance.cols_covering(i) {
                        *table.blanks_coverable.entry(k).or_default() += 1;
                    }
                }
            }
        }
        for (&j, &n_j) in &table.occurrences {
            table
                .cost_efficiency
                .insert(j, Ratio::new(n_j, instance.cost(j)));
        }
        for (&k, &s_k) in &table.blanks_coverable {
            table
                .repair_efficiency
                .insert(k, Ratio::new(s_k, instance.cost(k)));
        }
        let effs: Vec<Ratio<u64>> = table.repair_efficiency.values().copied().collect();
        let probs = selection_probabilities(&effs);
        table.selection_prob = table.repair_efficiency.keys().copied().zip(probs).collect();
        table
    }

    /// Columns attaining the lowest cost efficiency.
    pub fn least_efficient(&self) -> Vec<usize> {
        let Some(min) = self.cost_efficiency.values().min() else {
            return Vec::new();
        };
        self.cost_efficiency
            .iter()
            .filter(|(_, e)| *e == min)
            .map(|(&j, _)| j)
            .collect()
    }
}

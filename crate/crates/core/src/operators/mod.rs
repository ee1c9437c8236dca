//! Solution operators: initializers, neighborhood searches, decomposition,
//! synthesis and the greedy baseline.

pub mod efficiency;
mod greedy;
mod init;
mod reaction;
mod search;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::instance::{Instance, Solution};

pub use efficiency::{EfficiencyTable, ReverseCumulative};
pub use greedy::greedy_solve;
pub use init::{random_pick_init, reverse_cumulative_init};
pub use reaction::{
    decompose, decompose_with, synthesize, synthesize_with_costs, DECOMPOSE_ROUNDS,
};
pub use search::{
    perturbation_search, remove_least_efficient, remove_repair_search, repair_by_efficiency,
};

/// Element-indexed assignment with blanks (`None`).
pub type PartialSolution = Vec<Option<usize>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Initializer {
    ReverseCumulative,
    RandomPick,
}

impl Initializer {
    pub fn apply<R: Rng + ?Sized>(self, instance: &Instance, rng: &mut R) -> Solution {
        match self {
            Initializer::ReverseCumulative => reverse_cumulative_init(instance, rng),
            Initializer::RandomPick => random_pick_init(instance, rng),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NeighborhoodOp {
    Perturbation,
    RemoveRepair,
}

impl NeighborhoodOp {
    pub fn apply<R: Rng + ?Sized>(
        self,
        instance: &Instance,
        solution: &Solution,
        rng: &mut R,
    ) -> Solution {
        match self {
            NeighborhoodOp::Perturbation => perturbation_search(instance, solution, rng),
            NeighborhoodOp::RemoveRepair => remove_repair_search(instance, solution, rng),
        }
    }
}

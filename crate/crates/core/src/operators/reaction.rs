//! Structure operators for decomposition and synthesis.

use rand::Rng;

use crate::instance::{evaluate_cost, Cost, Instance, Solution};
use crate::operators::NeighborhoodOp;

/// Applications of the neighborhood search per decomposition product.
pub const DECOMPOSE_ROUNDS: usize = 10;

/// Copies `solution` twice and applies the perturbation heuristic ten times
/// to each copy, first copy first.
pub fn decompose<R: Rng + ?Sized>(
    instance: &Instance,
    solution: &Solution,
    rng: &mut R,
) -> (Solution, Solution) {
    decompose_with(instance, solution, NeighborhoodOp::Perturbation, rng)
}

/// [`decompose`] with a chosen neighborhood search.
pub fn decompose_with<R: Rng + ?Sized>(
    instance: &Instance,
    solution: &Solution,
    op: NeighborhoodOp,
    rng: &mut R,
) -> (Solution, Solution) {
    let run = |rng: &mut R| {
        let mut s = solution.clone();
        for _ in 0..DECOMPOSE_ROUNDS {
            s = op.apply(instance, &s, rng);
        }
        s
    };
    let first = run(rng);
    let second = run(rng);
    (first, second)
}

/// Probabilistic combination: position `i` comes from `s1` with probability
/// `c2 / (c1 + c2)` and from `s2` otherwise, so the cheaper parent donates
/// more.
pub fn synthesize<R: Rng + ?Sized>(
    instance: &Instance,
    s1: &Solution,
    s2: &Solution,
    rng: &mut R,
) -> Solution {
    let c1 = evaluate_cost(instance, s1);
    let c2 = evaluate_cost(instance, s2);
    synthesize_with_costs(s1, c1, s2, c2, rng)
}

/// [`synthesize`] with parent costs already known.
pub fn synthesize_with_costs<R: Rng + ?Sized>(
    s1: &Solution,
    c1: Cost,
    s2: &Solution,
    c2: Cost,
    rng: &mut R,
) -> Solution {
    debug_assert_eq!(s1.len(), s2.len());
    let total = c1 + c2;
    let assignment = s1
        .assignment()
        .iter()
        .zip(s2.assignment())
        .map(|(&a, &b)| if rng.gen_range(0..total) < c2 { a } else { b })
        .collect();
    Solution::from_raw(assignment)
}

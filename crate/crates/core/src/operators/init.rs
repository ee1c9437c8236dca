use rand::seq::SliceRandom;
use rand::Rng;

use crate::instance::{Instance, Solution};

/// Cost-biased initializer: each row independently picks a covering column
/// with probability proportional to `c_max + c_min - c_j` over its
/// candidates.
pub fn reverse_cumulative_init<R: Rng + ?Sized>(instance: &Instance, rng: &mut R) -> Solution {
    let assignment = (0..instance.rows())
        .map(|i| {
            let cols = instance.cols_covering(i);
            if cols.len() == 1 {
                return cols[0];
            }
            let (mut max, mut min) = (0, u64::MAX);
            for &j in cols {
                let c = instance.cost(j);
                max = max.max(c);
                min = min.min(c);
            }
            let total: u64 = cols.iter().map(|&j| max + min - instance.cost(j)).sum();
            let mut r = rng.gen_range(0..total);
            for &j in cols {
                let v = max + min - instance.cost(j);
                if r < v {
                    return j;
                }
                r -= v;
            }
            unreachable!("draw below total weight")
        })
        .collect();
    Solution::from_raw(assignment)
}

/// Tracks, per row, the lowest-index column picked so far that covers it.
pub(crate) struct PickWalk {
    covered_by: Vec<usize>,
}

impl PickWalk {
    const NONE: usize = usize::MAX;

    pub(crate) fn new(rows: usize) -> Self {
        PickWalk {
            covered_by: vec![Self::NONE; rows],
        }
    }

    pub(crate) fn pick(&mut self, instance: &Instance, column: usize) {
        for &r in instance.rows_covered_by(column) {
            if column < self.covered_by[r] {
                self.covered_by[r] = column;
            }
        }
    }

    /// Visits `order`; blank rows already covered by a picked column take
    /// that column, otherwise a uniformly random covering column is picked.
    pub(crate) fn walk<R: Rng + ?Sized>(
        &mut self,
        instance: &Instance,
        assignment: &mut [Option<usize>],
        order: &[usize],
        rng: &mut R,
    ) {
        for &i in order {
            if assignment[i].is_some() {
                continue;
            }
            if self.covered_by[i] != Self::NONE {
                assignment[i] = Some(self.covered_by[i]);
            } else {
                let j = *instance
                    .cols_covering(i)
                    .choose(rng)
                    .expect("rows are never empty");
                self.pick(instance, j);
                assignment[i] = Some(j);
            }
        }
    }
}

/// Random pick scheme: walk a random permutation of the rows; an uncovered
/// row picks a uniformly random covering column, a row already covered by an
/// earlier pick is assigned that pick.
pub fn random_pick_init<R: Rng + ?Sized>(instance: &Instance, rng: &mut R) -> Solution {
    let mut order: Vec<usize> = (0..instance.rows()).collect();
    order.shuffle(rng);
    let mut assignment = vec![None; instance.rows()];
    PickWalk::new(instance.rows()).walk(instance, &mut assignment, &order, rng);
    Solution::from_raw(
        assignment
            .into_iter()
            .map(|j| j.expect("walk fills every row"))
            .collect(),
    )
}

//! Exact optimum by depth-first search over covering choices.

use crate::error::{Error, Result};
use crate::instance::{Cost, Cover, Instance};

/// Largest column count the oracle accepts.
pub const ORACLE_MAX_COLUMNS: usize = 25;

/// Minimum-cost cover. Branches on the lowest uncovered row, trying each of
/// its columns cheapest first, and prunes when the partial cost reaches the
/// incumbent. Exhaustive, so the result is optimal; ties go to the first
/// cover found.
pub fn brute_force_optimum(instance: &Instance) -> Result<(Cost, Cover)> {
    if instance.columns() > ORACLE_MAX_COLUMNS {
        return Err(Error::TooLarge {
            n: instance.columns(),
            limit: ORACLE_MAX_COLUMNS,
        });
    }
    let orders: Vec<Vec<usize>> = (0..instance.rows())
        .map(|i| {
            let mut cols = instance.cols_covering(i).to_vec();
            cols.sort_by_key(|&j| (instance.cost(j), j));
            cols
        })
        .collect();
    let mut search = Search {
        instance,
        orders,
        coverage: vec![0; instance.rows()],
        chosen: Vec::new(),
        best_cost: Cost::MAX,
        best: Vec::new(),
    };
    search.descend(0, 0);
    Ok((search.best_cost, Cover::from_columns(search.best)))
}

struct Search<'a> {
    instance: &'a Instance,
    orders: Vec<Vec<usize>>,
    coverage: Vec<u32>,
    chosen: Vec<usize>,
    best_cost: Cost,
    best: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, from_row: usize, cost: Cost) {
        let Some(row) = (from_row..self.coverage.len()).find(|&i| self.coverage[i] == 0) else {
            if cost < self.best_cost {
                self.best_cost = cost;
                self.best = self.chosen.clone();
            }
            return;
        };
        for k in 0..self.orders[row].len() {
            let j = self.orders[row][k];
            let next = cost + self.instance.cost(j);
            if next >= self.best_cost {
                // Columns are sorted by cost, so the rest are no better.
                break;
            }
            self.set(j, true);
            self.descend(row + 1, next);
            self.set(j, false);
        }
    }

    fn set(&mut self, column: usize, on: bool) {
        for &i in self.instance.rows_covered_by(column) {
            if on {
                self.coverage[i] += 1;
            } else {
                self.coverage[i] -= 1;
            }
        }
        if on {
            self.chosen.push(column);
        } else {
            self.chosen.pop();
        }
    }
}

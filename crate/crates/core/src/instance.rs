//! Set covering instances, element-indexed solutions and covers.
//!
//! An instance is an `m x n` zero-one matrix `A` with a positive cost per
//! column. Row `i` is covered by column `j` when `a_ij = 1`. Internally all
//! row and column indices are 0-based; files and reports use 1-based numbers.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// Column cost. OR-Library costs are small integers, and keeping them
/// integral makes every cost comparison exact.
pub type Cost = u64;

/// Incidence data handed to [`Instance::new`], 0-based.
#[derive(Debug, Clone)]
pub enum Incidence {
    /// For each row, the columns covering it.
    Rows(Vec<Vec<usize>>),
    /// For each column, the rows it covers.
    Columns(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    m: usize,
    n: usize,
    costs: Vec<Cost>,
    cols_covering: Vec<Vec<usize>>,
    rows_covered_by: Vec<Vec<usize>>,
}

impl Instance {
    /// Builds an instance and materializes both incidence directions.
    ///
    /// Duplicate indices in the incidence lists are merged. Fails when a row
    /// has no covering column, a cost is zero, or dimensions disagree.
    pub fn new(m: usize, n: usize, costs: Vec<Cost>, incidence: Incidence) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::BadDimension(format!(
                "m={m}, n={n}; both must be positive"
            )));
        }
        if costs.len() != n {
            return Err(Error::BadDimension(format!(
                "{} costs for {n} columns",
                costs.len()
            )));
        }
        if let Some(j) = costs.iter().position(|&c| c == 0) {
            return Err(Error::NonPositiveCost(j + 1));
        }

        let mut cols_covering = vec![Vec::new(); m];
        let mut rows_covered_by = vec![Vec::new(); n];
        match incidence {
            Incidence::Rows(rows) => {
                if rows.len() != m {
                    return Err(Error::BadDimension(format!(
                        "{} row lists for m={m}",
                        rows.len()
                    )));
                }
                for (i, cols) in rows.into_iter().enumerate() {
                    for j in cols {
                        if j >= n {
                            return Err(Error::IndexOutOfRange {
                                what: "column index",
                                index: j as u64 + 1,
                                bound: n,
                            });
                        }
                        cols_covering[i].push(j);
                        rows_covered_by[j].push(i);
                    }
                }
            }
            Incidence::Columns(cols) => {
                if cols.len() != n {
                    return Err(Error::BadDimension(format!(
                        "{} column lists for n={n}",
                        cols.len()
                    )));
                }
                for (j, rows) in cols.into_iter().enumerate() {
                    for i in rows {
                        if i >= m {
                            return Err(Error::IndexOutOfRange {
                                what: "row index",
                                index: i as u64 + 1,
                                bound: m,
                            });
                        }
                        cols_covering[i].push(j);
                        rows_covered_by[j].push(i);
                    }
                }
            }
        }
        for list in cols_covering.iter_mut().chain(rows_covered_by.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        if let Some(i) = cols_covering.iter().position(Vec::is_empty) {
            return Err(Error::UncoverableRow(i + 1));
        }

        Ok(Instance {
            m,
            n,
            costs,
            cols_covering,
            rows_covered_by,
        })
    }

    /// Number of rows (elements).
    pub fn rows(&self) -> usize {
        self.m
    }

    /// Number of columns (subsets).
    pub fn columns(&self) -> usize {
        self.n
    }

    pub fn costs(&self) -> &[Cost] {
        &self.costs
    }

    pub fn cost(&self, column: usize) -> Cost {
        self.costs[column]
    }

    /// Sorted columns covering `row`. Never empty.
    pub fn cols_covering(&self, row: usize) -> &[usize] {
        &self.cols_covering[row]
    }

    /// Sorted rows covered by `column`.
    pub fn rows_covered_by(&self, column: usize) -> &[usize] {
        &self.rows_covered_by[column]
    }

    pub fn covers(&self, column: usize, row: usize) -> bool {
        self.cols_covering[row].binary_search(&column).is_ok()
    }

    pub fn is_unicost(&self) -> bool {
        self.costs.iter().all(|&c| c == self.costs[0])
    }

    /// Count of nonzero entries of `A`.
    pub fn nonzeros(&self) -> usize {
        self.cols_covering.iter().map(Vec::len).sum()
    }

    /// Fraction of nonzero entries of `A`.
    pub fn density(&self) -> f64 {
        self.nonzeros() as f64 / (self.m as f64 * self.n as f64)
    }

    pub fn max_cost(&self) -> Cost {
        self.costs.iter().copied().max().unwrap_or(0)
    }

    pub fn min_cost(&self) -> Cost {
        self.costs.iter().copied().min().unwrap_or(0)
    }
}

/// Element-indexed encoding: position `i` holds the column covering row `i`.
///
/// Every value satisfies `assignment[i] ∈ cols_covering(i)`, so a `Solution`
/// is always a feasible cover.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Solution {
    assignment: Vec<usize>,
}

impl Solution {
    /// Validates a 0-based assignment against `instance`.
    pub fn new(instance: &Instance, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != instance.rows() {
            return Err(Error::BadDimension(format!(
                "assignment has {} entries for {} rows",
                assignment.len(),
                instance.rows()
            )));
        }
        for (i, &j) in assignment.iter().enumerate() {
            if j >= instance.columns() {
                return Err(Error::IndexOutOfRange {
                    what: "assigned column",
                    index: j as u64 + 1,
                    bound: instance.columns(),
                });
            }
            if !instance.covers(j, i) {
                return Err(Error::BadDimension(format!(
                    "column {} does not cover row {}",
                    j + 1,
                    i + 1
                )));
            }
        }
        Ok(Solution { assignment })
    }

    /// Same as [`Solution::new`] but takes 1-based column numbers.
    pub fn from_one_based(instance: &Instance, assignment: &[usize]) -> Result<Self> {
        let zero = assignment
            .iter()
            .map(|&j| {
                j.checked_sub(1).ok_or(Error::IndexOutOfRange {
                    what: "assigned column",
                    index: 0,
                    bound: instance.columns(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Solution::new(instance, zero)
    }

    /// Caller guarantees the position invariant.
    pub(crate) fn from_raw(assignment: Vec<usize>) -> Self {
        Solution { assignment }
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Distinct columns used by this solution.
    pub fn to_cover(&self) -> Cover {
        Cover::from_columns(self.assignment.iter().copied())
    }

    pub fn cost(&self, instance: &Instance) -> Cost {
        evaluate_cost(instance, self)
    }
}

/// A set of distinct columns, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Cover {
    columns: Vec<usize>,
}

impl Cover {
    pub fn from_columns<I: IntoIterator<Item = usize>>(columns: I) -> Self {
        let mut columns: Vec<usize> = columns.into_iter().collect();
        columns.sort_unstable();
        columns.dedup();
        Cover { columns }
    }

    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.columns.iter().map(|j| j + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn contains(&self, column: usize) -> bool {
        self.columns.binary_search(&column).is_ok()
    }

    pub fn cost(&self, instance: &Instance) -> Cost {
        self.columns.iter().map(|&j| instance.cost(j)).sum()
    }
}

/// Sum of costs over the distinct columns of `solution`. A column used at
/// several positions is paid once.
pub fn evaluate_cost(instance: &Instance, solution: &Solution) -> Cost {
    let mut seen = vec![false; instance.columns()];
    let mut total = 0;
    for &j in solution.assignment() {
        if !seen[j] {
            seen[j] = true;
            total += instance.cost(j);
        }
    }
    total
}

/// True when every row is covered by at least one of `columns`.
pub fn is_feasible_cover(instance: &Instance, columns: &[usize]) -> bool {
    let mut covered = vec![false; instance.rows()];
    for &j in columns {
        for &i in instance.rows_covered_by(j) {
            covered[i] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

/// True when `columns` is a cover from which no single column can be dropped.
pub fn is_prime_cover(instance: &Instance, columns: &[usize]) -> Result<bool> {
    let cover = Cover::from_columns(columns.iter().copied());
    if !is_feasible_cover(instance, cover.columns()) {
        return Err(Error::NotACover);
    }
    let coverage = coverage_counts(instance, cover.columns());
    Ok(!cover
        .columns()
        .iter()
        .any(|&j| is_removable(instance, &coverage, j)))
}

fn coverage_counts(instance: &Instance, columns: &[usize]) -> Vec<u32> {
    let mut coverage = vec![0u32; instance.rows()];
    for &j in columns {
        for &i in instance.rows_covered_by(j) {
            coverage[i] += 1;
        }
    }
    coverage
}

fn is_removable(instance: &Instance, coverage: &[u32], column: usize) -> bool {
    instance
        .rows_covered_by(column)
        .iter()
        .all(|&i| coverage[i] >= 2)
}

/// Drops redundant columns until the cover is prime.
///
/// The most expensive redundant column goes first (ties at random). Each of
/// its positions moves to the cheapest other column already in the cover
/// that covers it (ties at random). Cost never increases.
pub fn remove_redundancy<R: Rng + ?Sized>(
    instance: &Instance,
    solution: &Solution,
    rng: &mut R,
) -> Solution {
    let mut assignment = solution.assignment().to_vec();
    loop {
        let cover = Cover::from_columns(assignment.iter().copied());
        let coverage = coverage_counts(instance, cover.columns());
        let redundant: Vec<usize> = cover
            .columns()
            .iter()
            .copied()
            .filter(|&j| is_removable(instance, &coverage, j))
            .collect();
        let Some(top) = redundant.iter().map(|&j| instance.cost(j)).max() else {
            break;
        };
        let tied: Vec<usize> = redundant
            .into_iter()
            .filter(|&j| instance.cost(j) == top)
            .collect();
        let drop = *tied.choose(rng).expect("non-empty");

        for (i, slot) in assignment.iter_mut().enumerate() {
            if *slot != drop {
                continue;
            }
            let alternatives: Vec<usize> = instance
                .cols_covering(i)
                .iter()
                .copied()
                .filter(|&k| k != drop && cover.contains(k))
                .collect();
            let cheapest = alternatives
                .iter()
                .map(|&k| instance.cost(k))
                .min()
                .expect("redundant column has alternatives at every position");
            let tied: Vec<usize> = alternatives
                .into_iter()
                .filter(|&k| instance.cost(k) == cheapest)
                .collect();
            *slot = *tied.choose(rng).expect("non-empty");
        }
    }
    Solution::from_raw(assignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rows(m: usize, n: usize, costs: Vec<Cost>, rows: Vec<Vec<usize>>) -> Instance {
        Instance::new(m, n, costs, Incidence::Rows(rows)).unwrap()
    }

    #[test]
    fn smallest_instance() {
        let inst = rows(1, 1, vec![3], vec![vec![0]]);
        assert_eq!(inst.rows(), 1);
        assert_eq!(inst.columns(), 1);
        assert_eq!(inst.rows_covered_by(0), &[0]);
    }

    #[test]
    fn uncoverable_row_is_rejected() {
        let err = Instance::new(2, 1, vec![1], Incidence::Columns(vec![vec![0]])).unwrap_err();
        assert_eq!(err, Error::UncoverableRow(2));
    }

    #[test]
    fn bad_dimensions_and_costs() {
        assert!(matches!(
            Instance::new(1, 2, vec![1], Incidence::Rows(vec![vec![0]])),
            Err(Error::BadDimension(_))
        ));
        assert_eq!(
            Instance::new(1, 2, vec![1, 0], Incidence::Rows(vec![vec![0, 1]])).unwrap_err(),
            Error::NonPositiveCost(2)
        );
        assert!(matches!(
            Instance::new(1, 1, vec![1], Incidence::Rows(vec![vec![4]])),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn both_incidence_directions_agree() {
        let a = rows(3, 3, vec![1, 1, 1], vec![vec![0, 2], vec![1], vec![2, 0]]);
        let b = Instance::new(
            3,
            3,
            vec![1, 1, 1],
            Incidence::Columns(vec![vec![0, 2], vec![1], vec![0, 2]]),
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn worked_vector_cover_and_cost() {
        // Rows 1..4 covered by columns 2,6,7,2 (1-based); c2=7, c6=1, c7=2.
        let mut costs = vec![5; 7];
        costs[1] = 7;
        costs[5] = 1;
        costs[6] = 2;
        let inst = rows(4, 7, costs, vec![vec![1], vec![5], vec![6], vec![1]]);
        let sol = Solution::from_one_based(&inst, &[2, 6, 7, 2]).unwrap();
        assert_eq!(sol.to_cover().one_based(), vec![2, 6, 7]);
        // 7 + 1 + 2, column 2 paid once.
        assert_eq!(evaluate_cost(&inst, &sol), 10);
    }

    #[test]
    fn single_subset_cover() {
        let inst = rows(3, 3, vec![2, 4, 5], vec![vec![0, 1], vec![0, 2], vec![0]]);
        let sol = Solution::from_one_based(&inst, &[1, 1, 1]).unwrap();
        assert_eq!(sol.to_cover().one_based(), vec![1]);
        assert_eq!(sol.cost(&inst), 2);
    }

    #[test]
    fn solution_rejects_non_covering_column() {
        let inst = rows(2, 2, vec![1, 1], vec![vec![0], vec![1]]);
        assert!(Solution::new(&inst, vec![0, 0]).is_err());
        assert!(Solution::new(&inst, vec![0]).is_err());
        assert!(Solution::from_one_based(&inst, &[0, 2]).is_err());
    }

    #[test]
    fn feasibility_edges() {
        let inst = rows(2, 3, vec![1, 1, 1], vec![vec![0, 2], vec![1, 2]]);
        assert!(is_feasible_cover(&inst, &[0, 1, 2]));
        assert!(!is_feasible_cover(&inst, &[]));
        assert!(is_feasible_cover(&inst, &[2]));
        assert!(!is_feasible_cover(&inst, &[0]));
    }

    #[test]
    fn prime_cover_checks() {
        let inst = rows(2, 3, vec![1, 1, 1], vec![vec![0, 2], vec![1, 2]]);
        assert!(is_prime_cover(&inst, &[2]).unwrap());
        assert!(!is_prime_cover(&inst, &[2, 0]).unwrap());
        assert!(is_prime_cover(&inst, &[0, 1]).unwrap());
        assert_eq!(is_prime_cover(&inst, &[0]), Err(Error::NotACover));
    }

    #[test]
    fn redundancy_removal_drops_dominated_column() {
        // 4x4: column 4 covers every row; columns 1..3 cover pieces.
        let inst = rows(
            4,
            4,
            vec![3, 3, 3, 5],
            vec![vec![0, 3], vec![0, 1, 3], vec![1, 2, 3], vec![2, 3]],
        );
        // Uses columns 1, 2, 3 and 4 -> only column 4 is needed, but the
        // most expensive redundant column goes first.
        let sol = Solution::new(&inst, vec![0, 1, 2, 3]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let out = remove_redundancy(&inst, &sol, &mut rng);
        assert!(is_prime_cover(&inst, out.to_cover().columns()).unwrap());
        assert!(out.cost(&inst) <= sol.cost(&inst));

        // Prime input stays put.
        let prime = Solution::new(&inst, vec![3, 3, 3, 3]).unwrap();
        assert_eq!(remove_redundancy(&inst, &prime, &mut rng), prime);
    }

    #[test]
    fn redundancy_removal_single_redundant_column() {
        // Rows 1,2 by column 1; rows 3,4 by column 2; column 3 covers rows
        // 2 and 3 only and is redundant in {1,2,3}.
        let inst = rows(
            4,
            3,
            vec![4, 4, 6],
            vec![vec![0], vec![0, 2], vec![1, 2], vec![1]],
        );
        let sol = Solution::new(&inst, vec![0, 2, 2, 1]).unwrap();
        assert_eq!(sol.cost(&inst), 14);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let out = remove_redundancy(&inst, &sol, &mut rng);
        assert_eq!(out.assignment(), &[0, 0, 1, 1]);
        assert_eq!(out.cost(&inst), 8);
    }
}

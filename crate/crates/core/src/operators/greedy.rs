use crate::instance::{Cover, Instance};

/// Classic greedy: repeatedly take the column minimizing cost per newly
/// covered row, lowest index on ties, until every row is covered. The
/// result is not reduced to a prime cover.
pub fn greedy_solve(instance: &Instance) -> Cover {
    let mut uncovered_by: Vec<u64> = (0..instance.columns())
        .map(|j| instance.rows_covered_by(j).len() as u64)
        .collect();
    let mut covered = vec![false; instance.rows()];
    let mut remaining = instance.rows();
    let mut chosen = Vec::new();

    while remaining > 0 {
        // c_a / u_a < c_b / u_b  <=>  c_a * u_b < c_b * u_a
        let mut best: Option<usize> = None;
        for (j, &u) in uncovered_by.iter().enumerate() {
            if u == 0 {
                continue;
            }
            match best {
                None => best = Some(j),
                Some(b) => {
                    let lhs = u128::from(instance.cost(j)) * u128::from(uncovered_by[b]);
                    let rhs = u128::from(instance.cost(b)) * u128::from(u);
                    if lhs < rhs {
                        best = Some(j);
                    }
                }
            }
        }
        let j = best.expect("an uncovered row always has a covering column");
        chosen.push(j);
        for &i in instance.rows_covered_by(j) {
            if !covered[i] {
                covered[i] = true;
                remaining -= 1;
                for &k in instance.cols_covering(i) {
                    uncovered_by[k] -= 1;
                }
            }
        }
    }
    Cover::from_columns(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{is_feasible_cover, Incidence};

    #[test]
    fn universal_cheap_column() {
        let inst = Instance::new(
            3,
            3,
            vec![2, 1, 1],
            Incidence::Rows(vec![vec![0, 1], vec![0, 2], vec![0]]),
        )
        .unwrap();
        // Column 1: 2/3; columns 2 and 3: 1/1.
        assert_eq!(greedy_solve(&inst).one_based(), vec![1]);
    }

    #[test]
    fn hand_traced_three_by_three() {
        // Costs 3, 2, 2.  Column 1 covers rows {1,2,3}, column 2 {1,2},
        // column 3 {3}.
        // Step 1 ratios: 3/3 = 1, 2/2 = 1, 2/1 = 2 -> tie, column 1 wins.
        let inst = Instance::new(
            3,
            3,
            vec![3, 2, 2],
            Incidence::Columns(vec![vec![0, 1, 2], vec![0, 1], vec![2]]),
        )
        .unwrap();
        assert_eq!(greedy_solve(&inst).one_based(), vec![1]);

        // Costs 4, 2, 1: ratios 4/3, 1, 1 -> column 2 (lowest index tie);
        // then row 3 remains: column 1 at 4/1, column 3 at 1/1 -> column 3.
        let inst = Instance::new(
            3,
            3,
            vec![4, 2, 1],
            Incidence::Columns(vec![vec![0, 1, 2], vec![0, 1], vec![2]]),
        )
        .unwrap();
        let cover = greedy_solve(&inst);
        assert_eq!(cover.one_based(), vec![2, 3]);
        assert_eq!(cover.cost(&inst), 3);
        assert!(is_feasible_cover(&inst, cover.columns()));
    }
}

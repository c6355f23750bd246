//! Exact minimum-cost rectangular assignment (Hungarian algorithm).
//!
//! Potentials-based O(rows^2 * cols) implementation for dense cost
//! matrices with rows <= cols. Deterministic: ties resolve by column index
//! through the fixed scan order.

/// Assigns each row a distinct column minimizing total cost.
///
/// `cost(i, j)` is evaluated on demand; `rows <= cols` is required. Returns
/// the chosen column per row.
pub(crate) fn min_cost_assignment<F>(rows: usize, cols: usize, cost: F) -> Vec<usize>
where
    F: Fn(usize, usize) -> f64,
{
    assert!(rows <= cols, "assignment needs at least as many columns as rows");
    const INF: f64 = f64::INFINITY;

    // 1-based arrays; row_of[j] is the row matched to column j (0 = none).
    let mut pot_row = vec![0.0f64; rows + 1];
    let mut pot_col = vec![0.0f64; cols + 1];
    let mut row_of = vec![0usize; cols + 1];
    let mut prev_col = vec![0usize; cols + 1];

    for i in 1..=rows {
        row_of[0] = i;
        let mut j0 = 0usize;
        let mut min_to = vec![INF; cols + 1];
        let mut used = vec![false; cols + 1];
        // Grow an alternating tree from row i until a free column is found.
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta = INF;
            let mut j1 = 0usize;
            for j in 1..=cols {
                if used[j] {
                    continue;
                }
                let cur = cost(i0 - 1, j - 1) - pot_row[i0] - pot_col[j];
                if cur < min_to[j] {
                    min_to[j] = cur;
                    prev_col[j] = j0;
                }
                if min_to[j] < delta {
                    delta = min_to[j];
                    j1 = j;
                }
            }
            for j in 0..=cols {
                if used[j] {
                    pot_row[row_of[j]] += delta;
                    pot_col[j] -= delta;
                } else {
                    min_to[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        // Augment along the found path.
        loop {
            let j1 = prev_col[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut result = vec![usize::MAX; rows];
    for j in 1..=cols {
        if row_of[j] != 0 {
            result[row_of[j] - 1] = j - 1;
        }
    }
    debug_assert!(result.iter().all(|&c| c != usize::MAX));
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn total(cost: &[Vec<f64>], assignment: &[usize]) -> f64 {
        assignment.iter().enumerate().map(|(i, &j)| cost[i][j]).sum()
    }

    /// Brute force over all injective row -> column maps.
    fn brute_force_min(cost: &[Vec<f64>]) -> f64 {
        fn rec(cost: &[Vec<f64>], row: usize, used: &mut [bool], acc: f64, best: &mut f64) {
            if row == cost.len() {
                *best = best.min(acc);
                return;
            }
            for j in 0..used.len() {
                if !used[j] {
                    used[j] = true;
                    rec(cost, row + 1, used, acc + cost[row][j], best);
                    used[j] = false;
                }
            }
        }
        let mut best = f64::INFINITY;
        rec(cost, 0, &mut vec![false; cost[0].len()], 0.0, &mut best);
        best
    }

    #[test]
    fn diagonal_preference() {
        let cost = vec![
            vec![0.0, 5.0, 5.0],
            vec![5.0, 0.0, 5.0],
            vec![5.0, 5.0, 0.0],
        ];
        let a = min_cost_assignment(3, 3, |i, j| cost[i][j]);
        assert_eq!(a, vec![0, 1, 2]);
    }

    #[test]
    fn known_square_instance() {
        let cost = vec![
            vec![4.0, 1.0, 3.0],
            vec![2.0, 0.0, 5.0],
            vec![3.0, 2.0, 2.0],
        ];
        let a = min_cost_assignment(3, 3, |i, j| cost[i][j]);
        assert_eq!(total(&cost, &a), 5.0, "optimal cost is 1 + 2 + 2 = 5");
    }

    #[test]
    fn rectangular_picks_cheapest_columns() {
        let cost = vec![vec![9.0, 1.0, 9.0, 9.0], vec![9.0, 9.0, 9.0, 2.0]];
        let a = min_cost_assignment(2, 4, |i, j| cost[i][j]);
        assert_eq!(a, vec![1, 3]);
    }

    #[test]
    fn matches_brute_force_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..200 {
            let rows = rng.gen_range(1..=6);
            let cols = rng.gen_range(rows..=7);
            let cost: Vec<Vec<f64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen::<f64>() * 10.0).collect())
                .collect();
            let a = min_cost_assignment(rows, cols, |i, j| cost[i][j]);
            let mut seen = vec![false; cols];
            for &j in &a {
                assert!(!seen[j], "trial {trial}: column used twice");
                seen[j] = true;
            }
            let expected = brute_force_min(&cost);
            assert!(
                (total(&cost, &a) - expected).abs() < 1e-9,
                "trial {trial}: got {}, optimum {expected}",
                total(&cost, &a)
            );
        }
    }
}

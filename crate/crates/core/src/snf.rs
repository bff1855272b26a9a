//! Smith normal form over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Nonzero invariant factors `d_1 | d_2 | ...` (all positive) of an integer matrix.
///
/// The number of returned factors is the rank of the matrix.
pub fn invariant_factors(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_nonzero(&m, t) else {
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            if !clear_column(&mut m, t) || !clear_row(&mut m, t) {
                continue;
            }
            // Pivot is alone in its row and column; enforce divisibility of the rest.
            let pivot = m[t][t].clone();
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !m[i][j].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let (head, tail) = m.split_at_mut(i);
                    for (a, b) in head[t].iter_mut().zip(&tail[0]) {
                        *a += b;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

fn min_nonzero(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < m[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Reduces column `t` below the pivot. Returns false if a smaller remainder
/// was swapped into the pivot position (the caller must repeat).
fn clear_column(m: &mut [Vec<BigInt>], t: usize) -> bool {
    for i in t + 1..m.len() {
        if m[i][t].is_zero() {
            continue;
        }
        let q = m[i][t].div_floor(&m[t][t]);
        let (head, tail) = m.split_at_mut(i);
        for (x, p) in tail[0].iter_mut().zip(&head[t]).skip(t) {
            *x -= &q * p;
        }
        if !m[i][t].is_zero() {
            m.swap(t, i);
            return false;
        }
    }
    true
}

fn clear_row(m: &mut [Vec<BigInt>], t: usize) -> bool {
    let cols = m[t].len();
    for j in t + 1..cols {
        if m[t][j].is_zero() {
            continue;
        }
        let q = m[t][j].div_floor(&m[t][t]);
        for row in m.iter_mut().skip(t) {
            let delta = &q * &row[t];
            row[j] -= delta;
        }
        if !m[t][j].is_zero() {
            for row in m.iter_mut() {
                row.swap(t, j);
            }
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn factors(rows: &[&[i64]]) -> Vec<i64> {
        invariant_factors(mat(rows))
            .into_iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    #[test]
    fn diagonal_gets_divisibility_chain() {
        assert_eq!(factors(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[&[4, 0], &[0, 6]]), vec![2, 12]);
    }

    #[test]
    fn classic_example() {
        assert_eq!(factors(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), vec![2, 6, 12]);
    }

    #[test]
    fn rank_deficient_and_empty() {
        assert_eq!(factors(&[&[1, 2], &[2, 4]]), vec![1]);
        assert!(factors(&[&[0, 0]]).is_empty());
        assert!(invariant_factors(Vec::new()).is_empty());
    }

    #[test]
    fn large_entries_do_not_overflow() {
        let big = i64::MAX / 3;
        assert_eq!(factors(&[&[big, big - 1], &[big - 1, big - 2]]), vec![1, 1]);
    }
}

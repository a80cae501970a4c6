//! Invariant factors of integer matrices via Smith normal form.

/// Nonzero diagonal entries of the Smith normal form of `rows`, each dividing
/// the next.
pub fn invariant_factors(rows: &[Vec<i64>]) -> Vec<u64> {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut factors = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // Smallest nonzero entry of the remaining block becomes the pivot.
        let pivot = (t..nrows)
            .flat_map(|i| (t..ncols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| (m[i][j].abs(), i, j));
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let p = m[t][t];
        let mut clean = true;
        for i in t + 1..nrows {
            let q = m[i][t] / p;
            if q != 0 {
                let (top, rest) = m.split_at_mut(i);
                for (x, y) in rest[0][t..].iter_mut().zip(&top[t][t..]) {
                    *x -= q * y;
                }
            }
            clean &= m[i][t] == 0;
        }
        for j in t + 1..ncols {
            let q = m[t][j] / p;
            if q != 0 {
                for row in m.iter_mut().skip(t) {
                    row[j] -= q * row[t];
                }
            }
            clean &= m[t][j] == 0;
        }
        if !clean {
            // Remainders are smaller than the pivot; pick again.
            continue;
        }
        let offender = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| m[i][j] % p != 0));
        if let Some(i) = offender {
            let (top, rest) = m.split_at_mut(i);
            for (x, y) in top[t][t..].iter_mut().zip(&rest[0][t..]) {
                *x += y;
            }
            continue;
        }
        factors.push(p.unsigned_abs() as u64);
        t += 1;
    }
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_and_zero() {
        assert_eq!(invariant_factors(&[]), Vec::<u64>::new());
        assert_eq!(invariant_factors(&[vec![0, 0]]), Vec::<u64>::new());
        assert_eq!(invariant_factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }

    #[test]
    fn unimodular() {
        let m = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 0]];
        assert_eq!(invariant_factors(&m), vec![1, 1, 1]);
    }

    #[test]
    fn torsion() {
        // Z^2 / <(2,4),(6,8)> has invariant factors 2 and 4.
        assert_eq!(invariant_factors(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(invariant_factors(&[vec![4, 6]]), vec![2]);
    }
}
